//! Combinatorial model of oriented link diagrams and of cut presentations.
//!
//! A diagram is a list of crossings, each holding four edge references in
//! counterclockwise order starting at the incoming under-strand, together
//! with directed edge records and a count of crossingless circles. Tangles
//! (diagram fragments inside a cut) use the same type, with edges allowed to
//! end on numbered boundary points.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge {0} has inconsistent orientation at crossing {1} slot {2}")]
    InconsistentOrientation(String, usize, u8),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("diagram is not closed: edge {0} ends on a boundary point")]
    NotClosed(String),
}

/// Identifier of an edge within one diagram or tangle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One end of an edge: a crossing slot, or a boundary point of a tangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Endpoint {
    Crossing { crossing: usize, slot: u8 },
    Boundary { pos: usize },
}

/// A crossing: slots 0..3 counterclockwise, slot 0 = incoming under-strand,
/// slot 2 = outgoing under-strand; the over-strand occupies slots 1 and 3.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Crossing {
    pub slots: [EdgeId; 4],
}

/// A directed edge: `tail` is where the strand leaves from, `head` where it
/// arrives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeRec {
    pub tail: Endpoint,
    pub head: Endpoint,
}

/// An oriented link diagram, or a tangle when some edges end on the boundary.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OrientedDiagram {
    pub crossings: Vec<Crossing>,
    pub edges: BTreeMap<EdgeId, EdgeRec>,
    pub free_loops: usize,
}

/// A choice of 0/1 resolution at every crossing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct State(pub Vec<bool>);

impl State {
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn zeros(n: usize) -> State {
        State(vec![false; n])
    }

    /// All states on n crossings in lexicographic order (crossing 0 most
    /// significant), restricted to a given weight when `weight` is Some.
    pub fn enumerate(n: usize, weight: Option<usize>) -> Vec<State> {
        let mut out = Vec::new();
        for mask in 0..(1u64 << n) {
            let bits: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
            let s = State(bits);
            if weight.is_none_or(|w| s.weight() == w) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    pub fn flipped(&self, i: usize) -> State {
        let mut s = self.clone();
        s.0[i] = true;
        s
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", if b { 1 } else { 0 })?;
        }
        Ok(())
    }
}

/// One circle of a smoothing: the set of edges it passes through, or a
/// crossingless free loop identified by index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Circle {
    pub edges: BTreeSet<EdgeId>,
    pub free_loop: Option<usize>,
}

impl Circle {
    pub fn sort_key(&self) -> (u8, u64) {
        match self.free_loop {
            None => (0, self.edges.iter().next().map_or(u64::MAX, |e| e.0 as u64)),
            Some(i) => (1, i as u64),
        }
    }
}

/// The disjoint circles obtained by resolving every crossing of a state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Smoothing {
    pub circles: Vec<Circle>,
}

impl Smoothing {
    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    pub fn circle_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.circles.iter().position(|c| c.edges.contains(&e))
    }
}

impl OrientedDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_closed(&self) -> bool {
        self.edges.values().all(|e| {
            !matches!(e.tail, Endpoint::Boundary { .. })
                && !matches!(e.head, Endpoint::Boundary { .. })
        })
    }

    /// The edge incident to a boundary position, if any.
    pub fn edge_at_boundary(&self, pos: usize) -> Option<(EdgeId, bool)> {
        for (&id, rec) in &self.edges {
            if rec.tail == (Endpoint::Boundary { pos }) {
                // strand leaves the boundary into the tangle: inbound
                return Some((id, true));
            }
            if rec.head == (Endpoint::Boundary { pos }) {
                return Some((id, false));
            }
        }
        None
    }

    /// Checks the slot structure: each occupied crossing slot must carry the
    /// right orientation (slot 0 head, slot 2 tail, one head and one tail in
    /// slots 1/3), and every edge endpoint must match the slot it names.
    pub fn validate(&self) -> Result<(), DiagramError> {
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &e) in c.slots.iter().enumerate() {
                let rec = self.edges.get(&e).ok_or_else(|| {
                    DiagramError::InconsistentOrientation(e.to_string(), ci, si as u8)
                })?;
                let here = Endpoint::Crossing {
                    crossing: ci,
                    slot: si as u8,
                };
                let is_head = rec.head == here;
                let is_tail = rec.tail == here;
                if !is_head && !is_tail {
                    return Err(DiagramError::InconsistentOrientation(
                        e.to_string(),
                        ci,
                        si as u8,
                    ));
                }
                let ok = match si {
                    0 => is_head,
                    2 => is_tail,
                    _ => true,
                };
                if !ok {
                    return Err(DiagramError::InconsistentOrientation(
                        e.to_string(),
                        ci,
                        si as u8,
                    ));
                }
            }
            // exactly one of slots 1, 3 is incoming
            let over_in_3 = self.slot_is_head(ci, 3);
            let over_in_1 = self.slot_is_head(ci, 1);
            if over_in_1 == over_in_3 {
                return Err(DiagramError::InconsistentOrientation(
                    c.slots[1].to_string(),
                    ci,
                    1,
                ));
            }
        }
        Ok(())
    }

    fn slot_is_head(&self, crossing: usize, slot: u8) -> bool {
        let e = self.crossings[crossing].slots[slot as usize];
        self.edges[&e].head == Endpoint::Crossing { crossing, slot }
    }

    /// Sign of a crossing: +1 when the incoming over-strand sits in slot 3
    /// (right-hand rule), -1 when it sits in slot 1.
    pub fn crossing_sign(&self, crossing: usize) -> Result<i8, DiagramError> {
        let in3 = self.slot_is_head(crossing, 3);
        let in1 = self.slot_is_head(crossing, 1);
        match (in3, in1) {
            (true, false) => Ok(1),
            (false, true) => Ok(-1),
            _ => Err(DiagramError::InconsistentOrientation(
                self.crossings[crossing].slots[1].to_string(),
                crossing,
                1,
            )),
        }
    }

    /// Counts of positive and negative crossings (l+, l-).
    pub fn signed_crossing_counts(&self) -> Result<(usize, usize), DiagramError> {
        let mut pos = 0;
        let mut neg = 0;
        for c in 0..self.crossings.len() {
            match self.crossing_sign(c)? {
                1 => pos += 1,
                _ => neg += 1,
            }
        }
        Ok((pos, neg))
    }

    pub fn writhe(&self) -> Result<i64, DiagramError> {
        let (p, n) = self.signed_crossing_counts()?;
        Ok(p as i64 - n as i64)
    }

    /// Resolve every crossing by its state bit and collect the circles.
    ///
    /// The 0-resolution joins slots 0-1 and 2-3; the 1-resolution joins
    /// slots 0-3 and 1-2. Closed components fall out of a union-find over
    /// edge identifiers; free loops each contribute one extra circle.
    pub fn smooth(&self, state: &State) -> Smoothing {
        assert_eq!(
            state.0.len(),
            self.crossings.len(),
            "state must be total on the crossing set"
        );
        let ids: Vec<EdgeId> = self.edges.keys().copied().collect();
        let index: BTreeMap<EdgeId, usize> = ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut parent: Vec<usize> = (0..ids.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let union = |parent: &mut Vec<usize>, a: EdgeId, b: EdgeId| {
            let (ra, rb) = (find(parent, index[&a]), find(parent, index[&b]));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        for (ci, c) in self.crossings.iter().enumerate() {
            let [a, b, cc, d] = c.slots;
            if state.0[ci] {
                union(&mut parent, a, d);
                union(&mut parent, b, cc);
            } else {
                union(&mut parent, a, b);
                union(&mut parent, cc, d);
            }
        }
        let mut classes: BTreeMap<usize, BTreeSet<EdgeId>> = BTreeMap::new();
        for (i, &e) in ids.iter().enumerate() {
            classes.entry(find(&mut parent, i)).or_default().insert(e);
        }
        let mut circles: Vec<Circle> = classes
            .into_values()
            .map(|edges| Circle {
                edges,
                free_loop: None,
            })
            .collect();
        for i in 0..self.free_loops {
            circles.push(Circle {
                edges: BTreeSet::new(),
                free_loop: Some(i),
            });
        }
        circles.sort_by_key(|c| c.sort_key());
        Smoothing { circles }
    }

    /// Flip every crossing (over-strand becomes under-strand). Slot indices
    /// rotate so the new slot 0 is again the incoming under-strand.
    pub fn mirror(&self) -> OrientedDiagram {
        let mut rotation: Vec<u8> = Vec::with_capacity(self.crossings.len());
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let s = c.slots;
                if self.slot_is_head(ci, 3) {
                    // positive: new order [e3, e0, e1, e2], old slot s -> s+1
                    rotation.push(1);
                    Crossing {
                        slots: [s[3], s[0], s[1], s[2]],
                    }
                } else {
                    // negative: new order [e1, e2, e3, e0], old slot s -> s+3
                    rotation.push(3);
                    Crossing {
                        slots: [s[1], s[2], s[3], s[0]],
                    }
                }
            })
            .collect();
        let remap = |p: Endpoint| -> Endpoint {
            match p {
                Endpoint::Crossing { crossing, slot } => Endpoint::Crossing {
                    crossing,
                    slot: (slot + rotation[crossing]) % 4,
                },
                b => b,
            }
        };
        let edges = self
            .edges
            .iter()
            .map(|(&id, rec)| {
                (
                    id,
                    EdgeRec {
                        tail: remap(rec.tail),
                        head: remap(rec.head),
                    },
                )
            })
            .collect();
        OrientedDiagram {
            crossings,
            edges,
            free_loops: self.free_loops,
        }
    }
}

/// A boundary record of a cut presentation: the edge of each tangle meeting
/// the cut circle at this position, and the strand direction there.
/// Odd positions 2i-1 are the a_i points, even positions 2i the b_i points;
/// at an a point the strand passes into tangle 1 (and out of tangle 2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryRecord {
    pub pos: usize,
    pub into_tangle1: bool,
    pub tangle1_edge: EdgeId,
    pub tangle2_edge: EdgeId,
}

/// An admissible cut of a diagram: two tangles plus 2n alternating boundary
/// points on the cut circle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutPresentation {
    pub n: usize,
    pub tangle1: OrientedDiagram,
    pub tangle2: OrientedDiagram,
    pub boundary: Vec<BoundaryRecord>,
}

/// Outcome of cut validation: either valid, or the first violated condition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutDiagnostics {
    pub valid: bool,
    pub failures: Vec<String>,
}

impl CutPresentation {
    /// Checks alternation and boundary pairing; collects diagnostics instead
    /// of failing on the first problem.
    pub fn validate(&self) -> CutDiagnostics {
        let mut failures = Vec::new();
        if self.boundary.len() != 2 * self.n {
            failures.push(format!(
                "boundary has {} records, expected 2n = {}",
                self.boundary.len(),
                2 * self.n
            ));
        }
        if let Err(e) = self.tangle1.validate() {
            failures.push(format!("tangle1: {}", e));
        }
        if let Err(e) = self.tangle2.validate() {
            failures.push(format!("tangle2: {}", e));
        }
        for (i, rec) in self.boundary.iter().enumerate() {
            if rec.pos != i + 1 {
                failures.push(format!(
                    "boundary record {} has position {}, expected {}",
                    i,
                    rec.pos,
                    i + 1
                ));
                continue;
            }
            let expect_in1 = rec.pos % 2 == 1;
            if rec.into_tangle1 != expect_in1 {
                failures.push(format!(
                    "alternation broken at position {}: direction flag is {}",
                    rec.pos,
                    if rec.into_tangle1 { "in" } else { "out" }
                ));
            }
            // tangle-1 edge: strand enters tangle 1 exactly at a-points
            match self.tangle1.edge_at_boundary(rec.pos) {
                Some((e, inbound)) => {
                    if e != rec.tangle1_edge {
                        failures.push(format!(
                            "position {}: tangle1 edge mismatch ({} vs {})",
                            rec.pos, e, rec.tangle1_edge
                        ));
                    }
                    if inbound != rec.into_tangle1 {
                        failures.push(format!(
                            "alternation broken at position {}: tangle1 strand direction",
                            rec.pos
                        ));
                    }
                }
                None => failures.push(format!(
                    "position {}: no tangle1 edge on the boundary",
                    rec.pos
                )),
            }
            match self.tangle2.edge_at_boundary(rec.pos) {
                Some((e, inbound)) => {
                    if e != rec.tangle2_edge {
                        failures.push(format!(
                            "position {}: tangle2 edge mismatch ({} vs {})",
                            rec.pos, e, rec.tangle2_edge
                        ));
                    }
                    if inbound == rec.into_tangle1 {
                        failures.push(format!(
                            "boundary pairing inconsistent at position {}: both strands point {}",
                            rec.pos,
                            if inbound { "in" } else { "out" }
                        ));
                    }
                }
                None => failures.push(format!(
                    "position {}: no tangle2 edge on the boundary",
                    rec.pos
                )),
            }
        }
        CutDiagnostics {
            valid: failures.is_empty(),
            failures,
        }
    }

    pub fn ensure_valid(&self) -> Result<(), DiagramError> {
        let d = self.validate();
        if d.valid {
            Ok(())
        } else {
            Err(DiagramError::InvalidCut(d.failures.join("; ")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hopf_signs() {
        let hopf = catalog::hopf();
        hopf.validate().unwrap();
        assert_eq!(hopf.signed_crossing_counts().unwrap(), (2, 0));
        let mirror = hopf.mirror();
        mirror.validate().unwrap();
        assert_eq!(mirror.signed_crossing_counts().unwrap(), (0, 2));
    }

    #[test]
    fn solomon_signs() {
        let cut = catalog::solomon_cut();
        let solomon = crate::surgery::glue(&cut).unwrap();
        assert_eq!(solomon.diagram.signed_crossing_counts().unwrap(), (4, 0));
    }

    #[test]
    fn unknot_smoothing() {
        let unknot = catalog::unknot();
        let s = unknot.smooth(&State(vec![]));
        assert_eq!(s.circle_count(), 1);
    }

    #[test]
    fn hopf_smoothing_circle_counts() {
        // hand-traced union-find on the catalog code
        let hopf = catalog::hopf();
        let counts: Vec<usize> = State::enumerate(2, None)
            .iter()
            .map(|s| hopf.smooth(s).circle_count())
            .collect();
        // states 00, 01, 10, 11
        assert_eq!(counts, vec![2, 1, 1, 2]);
    }

    #[test]
    fn trefoil_smoothings() {
        let t = catalog::trefoil();
        t.validate().unwrap();
        assert_eq!(t.signed_crossing_counts().unwrap(), (3, 0));
        assert_eq!(t.smooth(&State::zeros(3)).circle_count(), 2);
        assert_eq!(t.smooth(&State(vec![true, true, true])).circle_count(), 3);
    }

    #[test]
    fn every_edge_appears_twice() {
        for d in [catalog::hopf(), catalog::trefoil(), catalog::unknot_kink()] {
            let mut count: BTreeMap<EdgeId, usize> = BTreeMap::new();
            for c in &d.crossings {
                for &e in &c.slots {
                    *count.entry(e).or_default() += 1;
                }
            }
            assert!(count.values().all(|&c| c == 2), "{:?}", count);
        }
    }

    #[test]
    fn smoothing_covers_all_edges() {
        let t = catalog::trefoil();
        for s in State::enumerate(3, None) {
            let sm = t.smooth(&s);
            let total: usize = sm.circles.iter().map(|c| c.edges.len()).sum();
            assert_eq!(total, t.edges.len());
            assert!(sm.circle_count() >= 1);
        }
    }

    #[test]
    fn solomon_cut_is_valid() {
        let cut = catalog::solomon_cut();
        let d = cut.validate();
        assert!(d.valid, "{:?}", d.failures);
        assert_eq!(cut.n, 2);
    }

    #[test]
    fn flipped_direction_breaks_alternation() {
        let mut cut = catalog::solomon_cut();
        cut.boundary[1].into_tangle1 = true;
        let d = cut.validate();
        assert!(!d.valid);
        assert!(d.failures.iter().any(|f| f.contains("alternation")));
    }

    #[test]
    fn split_cut_is_valid() {
        let cut = catalog::split_unknot_hopf();
        assert!(cut.validate().valid);
        assert_eq!(cut.n, 0);
    }

    #[test]
    fn mirror_of_kink_flips_sign() {
        let k = catalog::unknot_kink();
        assert_eq!(k.signed_crossing_counts().unwrap(), (1, 0));
        let m = k.mirror();
        m.validate().unwrap();
        assert_eq!(m.signed_crossing_counts().unwrap(), (0, 1));
        // double mirror restores the sign pattern
        assert_eq!(m.mirror().signed_crossing_counts().unwrap(), (1, 0));
    }
}
