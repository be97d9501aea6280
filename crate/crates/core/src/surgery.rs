//! Surgeries along an admissible cut: closing one side's tangle by the
//! planar arc system of a non-crossing partition, gluing the two tangles
//! back together, the boundary-connectivity maps into the non-crossing
//! family, inner/outer circle classification, and the circle order
//! compatible with the cut.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::diagram::{
    Circle, Crossing, CutPresentation, DiagramError, EdgeId, EdgeRec, Endpoint, OrientedDiagram,
    State,
};
use crate::khovanov::CirclePolicy;
use crate::ncpart::SetPartition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("partition is crossing and admits no planar closure: {0}")]
    CrossingPartition(String),
    #[error("partition ground set {0} does not match the cut size {1}")]
    WrongGroundSet(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Which side of the cut a diagram fragment came from.
pub const SIDE1: u8 = 1;
pub const SIDE2: u8 = 2;

/// The planar perfect matching induced by a non-crossing partition: each arc
/// runs from a b-point to an a-point. For a block {i1 < ... < ik} the arcs
/// are b_{i_j} -> a_{i_{j+1}}, cyclically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryMatching {
    pub n: usize,
    /// pairs (j, i): the arc from b_j to a_i, 1-based indices
    pub pairs: Vec<(usize, usize)>,
}

pub fn matching_of(p: &SetPartition) -> Result<BoundaryMatching, SurgeryError> {
    if !p.is_noncrossing() {
        return Err(SurgeryError::CrossingPartition(p.to_string()));
    }
    let mut pairs = Vec::new();
    for block in p.blocks() {
        let k = block.len();
        for j in 0..k {
            pairs.push((block[j], block[(j + 1) % k]));
        }
    }
    pairs.sort_unstable();
    Ok(BoundaryMatching {
        n: p.ground_size(),
        pairs,
    })
}

/// Provenance of a fused edge or free loop: which original tangle edges it
/// contains on each side, which cut points it passes through, and whether it
/// is a free loop carried over from a tangle.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PieceMeta {
    pub pieces1: BTreeSet<u32>,
    pub pieces2: BTreeSet<u32>,
    pub positions: BTreeSet<usize>,
    pub origin_loop: Option<(u8, usize)>,
}

/// A closed diagram produced by `glue` or `surgery`, remembering where each
/// edge came from. The metadata drives circle classification and the
/// compatible order.
#[derive(Clone, Debug)]
pub struct CutDiagram {
    pub diagram: OrientedDiagram,
    pub edge_meta: BTreeMap<EdgeId, PieceMeta>,
    pub loop_meta: Vec<PieceMeta>,
}

/// The aggregate provenance of one circle of a smoothing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct CircleInfo {
    pub pieces1: BTreeSet<u32>,
    pub pieces2: BTreeSet<u32>,
    pub positions: BTreeSet<usize>,
    pub tangle_loops: BTreeSet<(u8, usize)>,
}

/// Inner circles avoid the cut, outer circles meet it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CircleClass {
    Inner1,
    Outer,
    Inner2,
}

impl CircleInfo {
    pub fn class(&self) -> CircleClass {
        if !self.positions.is_empty() {
            CircleClass::Outer
        } else if !self.pieces2.is_empty() || self.tangle_loops.iter().any(|&(s, _)| s == SIDE2) {
            CircleClass::Inner2
        } else {
            CircleClass::Inner1
        }
    }

    /// Indices of the a-points lying on this circle (1-based).
    pub fn a_points(&self) -> BTreeSet<usize> {
        self.positions
            .iter()
            .filter(|&&p| p % 2 == 1)
            .map(|&p| (p + 1) / 2)
            .collect()
    }

    /// Identity of the circle seen from one side of the cut: the tangle
    /// pieces it contains there. Outer circles of the glued diagram and of a
    /// surgery match exactly when these sets agree.
    pub fn side_pieces(&self, side: u8) -> &BTreeSet<u32> {
        if side == SIDE1 {
            &self.pieces1
        } else {
            &self.pieces2
        }
    }
}

impl CutDiagram {
    pub fn circle_info(&self, c: &Circle) -> CircleInfo {
        let mut info = CircleInfo::default();
        if let Some(loop_idx) = c.free_loop {
            let m = &self.loop_meta[loop_idx];
            info.pieces1.extend(m.pieces1.iter().copied());
            info.pieces2.extend(m.pieces2.iter().copied());
            info.positions.extend(m.positions.iter().copied());
            if let Some(origin) = m.origin_loop {
                info.tangle_loops.insert(origin);
            }
            return info;
        }
        for e in &c.edges {
            let m = &self.edge_meta[e];
            info.pieces1.extend(m.pieces1.iter().copied());
            info.pieces2.extend(m.pieces2.iter().copied());
            info.positions.extend(m.positions.iter().copied());
        }
        info
    }

    pub fn smooth_info(&self, s: &State) -> Vec<(Circle, CircleInfo)> {
        self.diagram
            .smooth(s)
            .circles
            .into_iter()
            .map(|c| {
                let info = self.circle_info(&c);
                (c, info)
            })
            .collect()
    }
}

/// Which of the three compatible-order variants to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderView {
    /// Inner side-1 circles < outer circles < inner side-2 circles.
    Glued,
    /// Side-1 surgeries: inner circles below the outer ones.
    Side1,
    /// Side-2 surgeries: outer circles below the inner ones.
    Side2,
}

/// The circle order compatible with the cut: outer circles sort by their
/// smallest a-point; inner circles sort by smallest contained tangle edge,
/// with carried-over free loops after them. `inner_reversed` flips the order
/// inside the inner groups only, giving a second legal compatible order.
pub struct CompatibleOrder<'a> {
    pub cut: &'a CutDiagram,
    pub view: OrderView,
    pub inner_reversed: bool,
}

impl<'a> CompatibleOrder<'a> {
    pub fn new(cut: &'a CutDiagram, view: OrderView) -> Self {
        CompatibleOrder {
            cut,
            view,
            inner_reversed: false,
        }
    }
}

impl CirclePolicy for CompatibleOrder<'_> {
    fn key(&self, circle: &Circle) -> (u8, u64, u64) {
        let info = self.cut.circle_info(circle);
        let class = info.class();
        let rank = match (self.view, class) {
            (OrderView::Glued, CircleClass::Inner1) => 0,
            (OrderView::Glued, CircleClass::Outer) => 1,
            (OrderView::Glued, CircleClass::Inner2) => 2,
            (OrderView::Side1, CircleClass::Inner1) => 0,
            (OrderView::Side1, CircleClass::Outer) => 1,
            (OrderView::Side2, CircleClass::Outer) => 0,
            (OrderView::Side2, CircleClass::Inner2) => 1,
            (view, class) => panic!("circle class {:?} impossible in view {:?}", class, view),
        };
        match class {
            CircleClass::Outer => {
                let a_min = *info
                    .a_points()
                    .iter()
                    .next()
                    .expect("outer circle meets an a-point");
                (rank, a_min as u64, 0)
            }
            CircleClass::Inner1 | CircleClass::Inner2 => {
                let side = if class == CircleClass::Inner1 {
                    SIDE1
                } else {
                    SIDE2
                };
                let (k1, k2) = match info.side_pieces(side).iter().next() {
                    Some(&min_piece) => (0, min_piece as u64),
                    None => {
                        let (_, j) = info
                            .tangle_loops
                            .iter()
                            .next()
                            .expect("inner circle is a tangle loop");
                        (1, *j as u64)
                    }
                };
                if self.inner_reversed {
                    (rank, u64::MAX - k1, u64::MAX - k2)
                } else {
                    (rank, k1, k2)
                }
            }
        }
    }
}

/// One strand piece feeding the fusion: a tangle edge tagged by side.
type PieceRef = (u8, EdgeId);

struct Connection {
    from: PieceRef,
    to: PieceRef,
    positions: Vec<usize>,
}

struct FuseSide<'a> {
    side: u8,
    tangle: &'a OrientedDiagram,
    crossing_offset: usize,
}

/// Splice tangle edges along the boundary connections into a closed diagram.
fn fuse(sides: &[FuseSide], connections: Vec<Connection>) -> CutDiagram {
    let mut tail_of: BTreeMap<PieceRef, Endpoint> = BTreeMap::new();
    let mut head_of: BTreeMap<PieceRef, Endpoint> = BTreeMap::new();
    for s in sides {
        for (&id, rec) in &s.tangle.edges {
            tail_of.insert((s.side, id), rec.tail);
            head_of.insert((s.side, id), rec.head);
        }
    }
    let mut successor: BTreeMap<PieceRef, (PieceRef, Vec<usize>)> = BTreeMap::new();
    for c in connections {
        assert!(
            matches!(head_of[&c.from], Endpoint::Boundary { .. }),
            "connection source must end on the boundary"
        );
        assert!(
            matches!(tail_of[&c.to], Endpoint::Boundary { .. }),
            "connection target must start on the boundary"
        );
        let prev = successor.insert(c.from, (c.to, c.positions));
        assert!(prev.is_none(), "boundary point used twice");
    }

    let global_crossing = |side: u8, ci: usize| -> usize {
        let s = sides.iter().find(|s| s.side == side).unwrap();
        s.crossing_offset + ci
    };
    let remap = |side: u8, p: Endpoint| -> Endpoint {
        match p {
            Endpoint::Crossing { crossing, slot } => Endpoint::Crossing {
                crossing: global_crossing(side, crossing),
                slot,
            },
            b => b,
        }
    };

    // walk chains that start at a crossing
    let mut visited: BTreeSet<PieceRef> = BTreeSet::new();
    let mut chains: Vec<(Vec<PieceRef>, Vec<usize>)> = Vec::new();
    let mut starts: Vec<PieceRef> = tail_of
        .iter()
        .filter(|(_, t)| matches!(t, Endpoint::Crossing { .. }))
        .map(|(&p, _)| p)
        .collect();
    starts.sort_unstable_by_key(|&(s, e)| (s, e.0));
    for start in starts {
        let mut chain = vec![start];
        let mut positions = Vec::new();
        visited.insert(start);
        let mut cur = start;
        while let Endpoint::Boundary { .. } = head_of[&cur] {
            let (next, pos) = successor
                .get(&cur)
                .expect("boundary endpoint must be connected")
                .clone();
            positions.extend(pos);
            visited.insert(next);
            chain.push(next);
            cur = next;
        }
        chains.push((chain, positions));
    }
    // remaining pieces close up into crossingless cycles
    let mut cycles: Vec<(Vec<PieceRef>, Vec<usize>)> = Vec::new();
    let mut remaining: Vec<PieceRef> = tail_of
        .keys()
        .filter(|p| !visited.contains(p))
        .copied()
        .collect();
    remaining.sort_unstable_by_key(|&(s, e)| (s, e.0));
    for start in remaining {
        if visited.contains(&start) {
            continue;
        }
        let mut cycle = vec![start];
        visited.insert(start);
        let (mut cur, mut positions) = {
            let (next, pos) = successor[&start].clone();
            (next, pos)
        };
        while cur != start {
            visited.insert(cur);
            cycle.push(cur);
            let (next, pos) = successor[&cur].clone();
            positions.extend(pos);
            cur = next;
        }
        cycles.push((cycle, positions));
    }

    let meta_of = |pieces: &[PieceRef], positions: &[usize]| -> PieceMeta {
        let mut m = PieceMeta::default();
        for &(side, id) in pieces {
            if side == SIDE1 {
                m.pieces1.insert(id.0);
            } else {
                m.pieces2.insert(id.0);
            }
        }
        m.positions.extend(positions.iter().copied());
        m
    };

    // assemble the closed diagram
    let total_crossings: usize = sides.iter().map(|s| s.tangle.crossing_count()).sum();
    let mut crossings: Vec<Crossing> = vec![
        Crossing {
            slots: [EdgeId(0); 4]
        };
        total_crossings
    ];
    for s in sides {
        for (ci, c) in s.tangle.crossings.iter().enumerate() {
            // slot contents are rewritten below; reserve the crossing now
            let _ = (ci, c);
        }
    }
    let mut edges: BTreeMap<EdgeId, EdgeRec> = BTreeMap::new();
    let mut edge_meta: BTreeMap<EdgeId, PieceMeta> = BTreeMap::new();
    for (i, (chain, positions)) in chains.iter().enumerate() {
        let id = EdgeId(i as u32 + 1);
        let first = chain[0];
        let last = *chain.last().unwrap();
        let tail = remap(first.0, tail_of[&first]);
        let head = remap(last.0, head_of[&last]);
        edges.insert(id, EdgeRec { tail, head });
        edge_meta.insert(id, meta_of(chain, positions));
        if let Endpoint::Crossing { crossing, slot } = tail {
            crossings[crossing].slots[slot as usize] = id;
        }
        if let Endpoint::Crossing { crossing, slot } = head {
            crossings[crossing].slots[slot as usize] = id;
        }
    }

    let mut loop_meta: Vec<PieceMeta> = Vec::new();
    for s in sides {
        for j in 0..s.tangle.free_loops {
            loop_meta.push(PieceMeta {
                origin_loop: Some((s.side, j)),
                ..PieceMeta::default()
            });
        }
    }
    for (cycle, positions) in &cycles {
        loop_meta.push(meta_of(cycle, positions));
    }

    let diagram = OrientedDiagram {
        crossings,
        edges,
        free_loops: loop_meta.len(),
    };
    CutDiagram {
        diagram,
        edge_meta,
        loop_meta,
    }
}

/// Reassemble the full diagram from a cut presentation. Side-1 crossings
/// come first in the crossing order, then side-2 crossings.
pub fn glue(cp: &CutPresentation) -> Result<CutDiagram, DiagramError> {
    cp.ensure_valid()?;
    let connections = cp
        .boundary
        .iter()
        .map(|rec| {
            if rec.into_tangle1 {
                Connection {
                    from: (SIDE2, rec.tangle2_edge),
                    to: (SIDE1, rec.tangle1_edge),
                    positions: vec![rec.pos],
                }
            } else {
                Connection {
                    from: (SIDE1, rec.tangle1_edge),
                    to: (SIDE2, rec.tangle2_edge),
                    positions: vec![rec.pos],
                }
            }
        })
        .collect();
    let sides = [
        FuseSide {
            side: SIDE1,
            tangle: &cp.tangle1,
            crossing_offset: 0,
        },
        FuseSide {
            side: SIDE2,
            tangle: &cp.tangle2,
            crossing_offset: cp.tangle1.crossing_count(),
        },
    ];
    let out = fuse(&sides, connections);
    out.diagram
        .validate()
        .expect("gluing a valid cut yields a valid diagram");
    Ok(out)
}

/// Close one side of the cut by the arc system of a non-crossing partition.
pub fn surgery(
    cp: &CutPresentation,
    side: u8,
    p: &SetPartition,
) -> Result<CutDiagram, SurgeryError> {
    cp.ensure_valid()?;
    if p.ground_size() != cp.n {
        return Err(SurgeryError::WrongGroundSet(p.ground_size(), cp.n));
    }
    let matching = matching_of(p)?;
    let tangle = if side == SIDE1 {
        &cp.tangle1
    } else {
        &cp.tangle2
    };
    let edge_at = |pos: usize| -> EdgeId {
        let rec = &cp.boundary[pos - 1];
        if side == SIDE1 {
            rec.tangle1_edge
        } else {
            rec.tangle2_edge
        }
    };
    let connections = matching
        .pairs
        .iter()
        .map(|&(bj, ai)| {
            let b_pos = 2 * bj;
            let a_pos = 2 * ai - 1;
            if side == SIDE1 {
                // arc from b_j to a_i, closing off tangle 1
                Connection {
                    from: (SIDE1, edge_at(b_pos)),
                    to: (SIDE1, edge_at(a_pos)),
                    positions: vec![b_pos, a_pos],
                }
            } else {
                // the reversed arc system: from a_i back to b_j
                Connection {
                    from: (SIDE2, edge_at(a_pos)),
                    to: (SIDE2, edge_at(b_pos)),
                    positions: vec![a_pos, b_pos],
                }
            }
        })
        .collect();
    let sides = [FuseSide {
        side,
        tangle,
        crossing_offset: 0,
    }];
    let out = fuse(&sides, connections);
    out.diagram
        .validate()
        .expect("surgery on a valid cut yields a valid diagram");
    Ok(out)
}

/// The full surgery (singleton-blocks closure) of one side.
pub fn full_surgery(cp: &CutPresentation, side: u8) -> Result<CutDiagram, SurgeryError> {
    surgery(cp, side, &SetPartition::finest(cp.n))
}

/// The boundary-connectivity map into the non-crossing family: a-points are
/// identified when they lie on the same circle of the smoothed full surgery.
pub fn boundary_partition(
    cp: &CutPresentation,
    side: u8,
    state: &State,
) -> Result<SetPartition, SurgeryError> {
    let full = full_surgery(cp, side)?;
    boundary_partition_of(&full, cp.n, state)
}

/// Same, given a prebuilt full surgery (avoids rebuilding in inner loops).
pub fn boundary_partition_of(
    full: &CutDiagram,
    n: usize,
    state: &State,
) -> Result<SetPartition, SurgeryError> {
    if n == 0 {
        return Ok(SetPartition::empty());
    }
    let infos = full.smooth_info(state);
    let mut assign = vec![usize::MAX; n];
    for (ci, (_, info)) in infos.iter().enumerate() {
        for a in info.a_points() {
            assign[a - 1] = ci;
        }
    }
    assert!(
        assign.iter().all(|&x| x != usize::MAX),
        "every a-point lies on some circle"
    );
    let p = SetPartition::from_assignment(&assign);
    if !p.is_noncrossing() {
        return Err(SurgeryError::CrossingPartition(p.to_string()));
    }
    Ok(p)
}

/// Classify the circles of a smoothing of the glued diagram.
pub fn classify_circles(glued: &CutDiagram, state: &State) -> Vec<(Circle, CircleClass)> {
    glued
        .smooth_info(state)
        .into_iter()
        .map(|(c, info)| {
            let class = info.class();
            (c, class)
        })
        .collect()
}

/// The number of circles formed by closing the 2n boundary points with the
/// arcs of `a` on one side and `b` on the other: n + 2|a v b| - |a| - |b|.
///
/// On modular pairs (in particular whenever n <= 3) this equals
/// n + |a v b| - |a ^ b|; on non-modular pairs only the form used here
/// matches the actual circle count of the glued arc systems.
pub fn closure_circle_count(a: &SetPartition, b: &SetPartition) -> usize {
    assert_eq!(a.ground_size(), b.ground_size());
    let n = a.ground_size();
    let join = a.join(b).unwrap().block_count();
    (n + 2 * join) - a.block_count() - b.block_count()
}

/// The circles of a smoothing of a glued or surgery diagram, listed in the
/// order compatible with the cut.
pub fn compatible_order(cd: &CutDiagram, view: OrderView, state: &State) -> Vec<Circle> {
    let policy = CompatibleOrder::new(cd, view);
    let mut circles = cd.diagram.smooth(state).circles;
    circles.sort_by_key(|c| crate::khovanov::CirclePolicy::key(&policy, c));
    circles
}

/// Direct count of the circles formed by the two arc systems: compose them
/// as a permutation of the a-points and count cycles. Independent route to
/// `closure_circle_count`, kept separate so each can check the other.
pub fn matching_composition_cycles(a: &SetPartition, b: &SetPartition) -> usize {
    let n = a.ground_size();
    assert_eq!(n, b.ground_size());
    let ma = matching_of(a).expect("non-crossing");
    let mb = matching_of(b).expect("non-crossing");
    let mut sigma_a = vec![0usize; n + 1];
    for &(j, i) in &ma.pairs {
        sigma_a[j] = i;
    }
    let mut sigma_b_inv = vec![0usize; n + 1];
    for &(j, i) in &mb.pairs {
        sigma_b_inv[i] = j;
    }
    let mut seen = vec![false; n + 1];
    let mut cycles = 0;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = sigma_a[sigma_b_inv[cur]];
        }
    }
    cycles
}

/// Relabel the cut's boundary positions by a dihedral re-marking: an optional
/// reflection through the first a-point, then a rotation by `rotation`
/// a-to-a steps. Tangle contents are untouched.
pub fn remark(cp: &CutPresentation, rotation: usize, reflect: bool) -> CutPresentation {
    let two_n = 2 * cp.n;
    if two_n == 0 {
        return cp.clone();
    }
    let map = |pos: usize| -> usize {
        let p = if reflect {
            ((2 + two_n as i64 - pos as i64 - 1).rem_euclid(two_n as i64)) as usize + 1
        } else {
            pos
        };
        (p - 1 + 2 * rotation) % two_n + 1
    };
    let remap_tangle = |t: &OrientedDiagram| -> OrientedDiagram {
        let edges = t
            .edges
            .iter()
            .map(|(&id, rec)| {
                let fix = |e: Endpoint| match e {
                    Endpoint::Boundary { pos } => Endpoint::Boundary { pos: map(pos) },
                    c => c,
                };
                (
                    id,
                    EdgeRec {
                        tail: fix(rec.tail),
                        head: fix(rec.head),
                    },
                )
            })
            .collect();
        OrientedDiagram {
            crossings: t.crossings.clone(),
            edges,
            free_loops: t.free_loops,
        }
    };
    let mut boundary: Vec<_> = cp
        .boundary
        .iter()
        .map(|rec| {
            let mut r = rec.clone();
            r.pos = map(rec.pos);
            r
        })
        .collect();
    boundary.sort_by_key(|r| r.pos);
    CutPresentation {
        n: cp.n,
        tangle1: remap_tangle(&cp.tangle1),
        tangle2: remap_tangle(&cp.tangle2),
        boundary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::khovanov::{jones, khovanov_complex, BigradedDims, MinEdgeOrder};
    use crate::ncpart::{enumerate_nc, SetPartition};

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect())
    }

    #[test]
    fn matching_examples() {
        let m = matching_of(&SetPartition::finest(1)).unwrap();
        assert_eq!(m.pairs, vec![(1, 1)]);
        let m = matching_of(&SetPartition::coarsest(2)).unwrap();
        assert_eq!(m.pairs, vec![(1, 2), (2, 1)]);
        let m = matching_of(&SetPartition::finest(2)).unwrap();
        assert_eq!(m.pairs, vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn crossing_partition_rejected() {
        let p = sp(4, &[&[1, 3], &[2, 4]]);
        assert!(matches!(
            matching_of(&p),
            Err(SurgeryError::CrossingPartition(_))
        ));
    }

    #[test]
    fn glue_solomon() {
        let cut = catalog::solomon_cut();
        let glued = glue(&cut).unwrap();
        assert_eq!(glued.diagram.crossing_count(), 4);
        assert_eq!(glued.diagram.signed_crossing_counts().unwrap(), (4, 0));
        assert_eq!(glued.diagram.free_loops, 0);
    }

    #[test]
    fn writhe_additive_across_every_cut() {
        for name in catalog::cut_names() {
            let cut = catalog::cut(name).unwrap();
            let glued = glue(&cut).unwrap();
            let (p1, n1) = cut.tangle1.signed_crossing_counts().unwrap();
            let (p2, n2) = cut.tangle2.signed_crossing_counts().unwrap();
            assert_eq!(
                glued.diagram.signed_crossing_counts().unwrap(),
                (p1 + p2, n1 + n2),
                "cut {}",
                name
            );
        }
    }

    #[test]
    fn glue_unknot_cut_gives_free_loop() {
        let glued = glue(&catalog::unknot_cut()).unwrap();
        assert_eq!(glued.diagram.crossing_count(), 0);
        assert_eq!(glued.diagram.free_loops, 1);
        // the fused loop passes through both cut points
        assert_eq!(glued.loop_meta[0].positions, BTreeSet::from([1, 2]));
    }

    #[test]
    fn solomon_full_surgery_is_a_two_crossing_unknot() {
        let cut = catalog::solomon_cut();
        for side in [SIDE1, SIDE2] {
            let s = full_surgery(&cut, side).unwrap();
            assert_eq!(s.diagram.crossing_count(), 2);
            assert_eq!(s.diagram.signed_crossing_counts().unwrap(), (2, 0));
            let kh = khovanov_complex(&s.diagram, &MinEdgeOrder)
                .homology()
                .unwrap();
            assert_eq!(
                kh,
                BigradedDims::from_pairs(&[(0, -1, 1), (0, 1, 1)]),
                "side {} full surgery must be an unknot",
                side
            );
        }
    }

    #[test]
    fn solomon_trivial_surgery_is_hopf() {
        let cut = catalog::solomon_cut();
        for side in [SIDE1, SIDE2] {
            let s = surgery(&cut, side, &SetPartition::coarsest(2)).unwrap();
            assert_eq!(s.diagram.signed_crossing_counts().unwrap(), (2, 0));
            assert_eq!(
                jones(&s.diagram).unwrap(),
                jones(&catalog::hopf()).unwrap(),
                "side {} trivial surgery must be the Hopf link",
                side
            );
        }
    }

    #[test]
    fn solomon_full_surgery_circle_counts() {
        let cut = catalog::solomon_cut();
        let full = full_surgery(&cut, SIDE1).unwrap();
        let counts: Vec<usize> = State::enumerate(2, None)
            .iter()
            .map(|s| full.diagram.smooth(s).circle_count())
            .collect();
        assert_eq!(counts, vec![3, 2, 2, 1]);
    }

    #[test]
    fn solomon_boundary_partition_boxes() {
        let cut = catalog::solomon_cut();
        let full = sp(2, &[&[1], &[2]]);
        let trivial = sp(2, &[&[1, 2]]);
        assert_eq!(
            boundary_partition(&cut, SIDE1, &State(vec![false, false])).unwrap(),
            full
        );
        assert_eq!(
            boundary_partition(&cut, SIDE1, &State(vec![true, false])).unwrap(),
            full
        );
        assert_eq!(
            boundary_partition(&cut, SIDE1, &State(vec![false, true])).unwrap(),
            full
        );
        assert_eq!(
            boundary_partition(&cut, SIDE1, &State(vec![true, true])).unwrap(),
            trivial
        );
    }

    #[test]
    fn zero_crossing_side_partition() {
        let cut = catalog::unknot_cut();
        assert_eq!(
            boundary_partition(&cut, SIDE1, &State(vec![])).unwrap(),
            SetPartition::finest(1)
        );
        let hs = catalog::half_solomon();
        assert_eq!(
            boundary_partition(&hs, SIDE1, &State(vec![])).unwrap(),
            SetPartition::coarsest(2)
        );
    }

    #[test]
    fn boundary_partition_always_noncrossing() {
        for name in catalog::cut_names() {
            let cut = catalog::cut(name).unwrap();
            for side in [SIDE1, SIDE2] {
                let tangle = if side == SIDE1 {
                    &cut.tangle1
                } else {
                    &cut.tangle2
                };
                let full = full_surgery(&cut, side).unwrap();
                for s in State::enumerate(tangle.crossing_count(), None) {
                    boundary_partition_of(&full, cut.n, &s).unwrap();
                }
            }
        }
    }

    #[test]
    fn inner_circles_agree_across_surgeries() {
        // same state, different closure: the circles avoiding the cut are
        // identical as sets of tangle edges
        for name in catalog::cut_names() {
            let cut = catalog::cut(name).unwrap();
            for side in [SIDE1, SIDE2] {
                let tangle = if side == SIDE1 {
                    &cut.tangle1
                } else {
                    &cut.tangle2
                };
                let nx = tangle.crossing_count();
                let per_partition: Vec<Vec<BTreeSet<BTreeSet<u32>>>> = enumerate_nc(cut.n)
                    .iter()
                    .map(|p| {
                        let s = surgery(&cut, side, p).unwrap();
                        State::enumerate(nx, None)
                            .iter()
                            .map(|st| {
                                s.smooth_info(st)
                                    .into_iter()
                                    .filter(|(_, i)| i.positions.is_empty())
                                    .map(|(_, i)| i.side_pieces(side).clone())
                                    .collect()
                            })
                            .collect()
                    })
                    .collect();
                for w in per_partition.windows(2) {
                    assert_eq!(
                        w[0], w[1],
                        "inner circles differ between surgeries of {} side {}",
                        name, side
                    );
                }
            }
        }
    }

    #[test]
    fn circle_count_identity_on_solomon_states() {
        let cut = catalog::solomon_cut();
        let glued = glue(&cut).unwrap();
        let full1 = full_surgery(&cut, SIDE1).unwrap();
        let full2 = full_surgery(&cut, SIDE2).unwrap();
        for s in State::enumerate(4, None) {
            let s1 = State(s.0[..2].to_vec());
            let s2 = State(s.0[2..].to_vec());
            let k = glued.diagram.smooth(&s).circle_count();
            let k1 = full1.diagram.smooth(&s1).circle_count();
            let k2 = full2.diagram.smooth(&s2).circle_count();
            let a = boundary_partition_of(&full1, 2, &s1).unwrap();
            let b = boundary_partition_of(&full2, 2, &s2).unwrap();
            let expected =
                (k1 - a.block_count()) + (k2 - b.block_count()) + closure_circle_count(&a, &b);
            assert_eq!(k, expected, "state {}", s);
            // and the classification agrees with the three-way split
            let classes = classify_circles(&glued, &s);
            let inner1 = classes
                .iter()
                .filter(|(_, c)| *c == CircleClass::Inner1)
                .count();
            let outer = classes
                .iter()
                .filter(|(_, c)| *c == CircleClass::Outer)
                .count();
            let inner2 = classes
                .iter()
                .filter(|(_, c)| *c == CircleClass::Inner2)
                .count();
            assert_eq!(inner1, k1 - a.block_count());
            assert_eq!(inner2, k2 - b.block_count());
            assert_eq!(outer, closure_circle_count(&a, &b));
        }
    }

    #[test]
    fn split_cut_has_no_outer_circles() {
        let cut = catalog::split_unknot_hopf();
        let glued = glue(&cut).unwrap();
        for s in State::enumerate(2, None) {
            let classes = classify_circles(&glued, &s);
            assert!(classes.iter().all(|(_, c)| *c != CircleClass::Outer));
        }
    }

    #[test]
    fn closure_circle_count_examples_and_oracle() {
        // a = b = full: n circles
        for n in 1..=4 {
            let f = SetPartition::finest(n);
            assert_eq!(closure_circle_count(&f, &f), n);
        }
        // n = 2: full against trivial gives a single circle
        assert_eq!(
            closure_circle_count(&SetPartition::finest(2), &SetPartition::coarsest(2)),
            1
        );
        // permutation-cycle oracle over all non-crossing pairs
        for n in 1..=5 {
            for a in enumerate_nc(n) {
                for b in enumerate_nc(n) {
                    assert_eq!(
                        closure_circle_count(&a, &b),
                        matching_composition_cycles(&a, &b),
                        "n={} a={} b={}",
                        n,
                        a,
                        b
                    );
                }
            }
        }
    }

    #[test]
    fn closure_count_agrees_with_meet_join_form_on_modular_pairs() {
        // for n <= 3 every pair is modular and the two lattice expressions
        // coincide
        for n in 1..=3 {
            for a in enumerate_nc(n) {
                for b in enumerate_nc(n) {
                    let alt =
                        (n + a.join(&b).unwrap().block_count()) - a.meet(&b).unwrap().block_count();
                    assert_eq!(closure_circle_count(&a, &b), alt);
                }
            }
        }
    }

    #[test]
    fn closure_count_on_nonmodular_pair() {
        // the first pair where the two lattice expressions part ways; the
        // glued arc systems visibly form two circles
        let a = sp(4, &[&[1, 2], &[3, 4]]);
        let b = sp(4, &[&[1, 4], &[2, 3]]);
        assert_eq!(closure_circle_count(&a, &b), 2);
        assert_eq!(matching_composition_cycles(&a, &b), 2);
        let meet_join_form =
            (4 + a.join(&b).unwrap().block_count()) - a.meet(&b).unwrap().block_count();
        assert_eq!(meet_join_form, 1);
    }

    #[test]
    fn crossing_signs_identical_across_each_family() {
        // every surgery of a side keeps the tangle's crossings untouched
        for name in catalog::cut_names() {
            let cut = catalog::cut(name).unwrap();
            for side in [SIDE1, SIDE2] {
                let tangle = if side == SIDE1 {
                    &cut.tangle1
                } else {
                    &cut.tangle2
                };
                let expected = tangle.signed_crossing_counts().unwrap();
                for p in enumerate_nc(cut.n) {
                    let s = surgery(&cut, side, &p).unwrap();
                    assert_eq!(s.diagram.crossing_count(), tangle.crossing_count());
                    assert_eq!(
                        s.diagram.signed_crossing_counts().unwrap(),
                        expected,
                        "cut {} side {} partition {}",
                        name,
                        side,
                        p
                    );
                }
            }
        }
    }

    #[test]
    fn surgery_family_invariant_under_remarking() {
        let cut = catalog::solomon_cut();
        let homology_multiset = |cp: &CutPresentation| -> Vec<String> {
            let mut v: Vec<String> = enumerate_nc(cp.n)
                .iter()
                .flat_map(|p| {
                    [SIDE1, SIDE2].into_iter().map(|side| {
                        khovanov_complex(&surgery(cp, side, p).unwrap().diagram, &MinEdgeOrder)
                            .homology()
                            .unwrap()
                            .to_string()
                    })
                })
                .collect();
            v.sort();
            v
        };
        let base = homology_multiset(&cut);
        for rotation in 0..2 {
            for reflect in [false, true] {
                let re = remark(&cut, rotation, reflect);
                assert!(re.validate().valid);
                assert_eq!(
                    homology_multiset(&re),
                    base,
                    "rot {} refl {}",
                    rotation,
                    reflect
                );
            }
        }
    }

    #[test]
    fn n1_surgery_of_connected_sum_restores_factors() {
        let cut = catalog::hopf_connected_sum();
        for side in [SIDE1, SIDE2] {
            let s = full_surgery(&cut, side).unwrap();
            assert_eq!(jones(&s.diagram).unwrap(), jones(&catalog::hopf()).unwrap());
        }
    }

    #[test]
    fn compatible_order_places_inner1_below_outer_below_inner2() {
        let cut = catalog::solomon_cut();
        let glued = glue(&cut).unwrap();
        for s in State::enumerate(4, None) {
            let circles = compatible_order(&glued, OrderView::Glued, &s);
            let classes: Vec<CircleClass> = circles
                .iter()
                .map(|c| glued.circle_info(c).class())
                .collect();
            // classes must appear in non-decreasing order Inner1, Outer, Inner2
            let ranks: Vec<u8> = classes
                .iter()
                .map(|c| match c {
                    CircleClass::Inner1 => 0,
                    CircleClass::Outer => 1,
                    CircleClass::Inner2 => 2,
                })
                .collect();
            let mut sorted = ranks.clone();
            sorted.sort_unstable();
            assert_eq!(ranks, sorted, "state {}", s);
        }
    }
}
