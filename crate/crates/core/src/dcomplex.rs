//! The double complex attached to a cut: cells indexed by the two side
//! degrees, horizontal differentials from the side-1 surgery complexes and
//! vertical ones from side 2, the total complex and its generator-level
//! comparison with the glued Khovanov complex, the spectral sequence of the
//! column filtration, and an independent construction of its second page.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::diagram::{CutPresentation, State};
use crate::exact::{Matrix, QMatrix, Rat};
use crate::khovanov::{khovanov_complex, BigradedDims, ChainComplex, ComplexError, KhComplex};
use crate::ncpart::{enumerate_nc, nc_index, SetPartition};
use crate::surgery::{
    boundary_partition_of, full_surgery, glue, surgery, CircleClass, CircleInfo, CompatibleOrder,
    CutDiagram, OrderView, SurgeryError, SIDE1, SIDE2,
};

/// A basis element of one cell: the two side states and the labels on the
/// circles of the glued smoothing, in the order inherited from the
/// compatible order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellGen {
    pub a_idx: usize,
    pub b_idx: usize,
    pub s1: State,
    pub s2: State,
    pub labels: Vec<bool>,
    pub q: i64,
}

#[derive(Default)]
pub struct Cell {
    pub gens: Vec<CellGen>,
    index: BTreeMap<(Vec<bool>, Vec<bool>, Vec<bool>), usize>,
}

impl Cell {
    fn push(&mut self, g: CellGen) {
        self.index.insert(
            (g.s1.0.clone(), g.s2.0.clone(), g.labels.clone()),
            self.gens.len(),
        );
        self.gens.push(g);
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn index_of(&self, s1: &State, s2: &State, labels: &[bool]) -> usize {
        *self
            .index
            .get(&(s1.0.clone(), s2.0.clone(), labels.to_vec()))
            .expect("generator present in cell")
    }
}

/// One side's bigraded piece: for each homological degree, the generators
/// (side state, labels on that side's inner circles) with their q-degrees.
#[derive(Default, Clone)]
pub struct PieceBasis {
    pub by_degree: BTreeMap<i64, Vec<(State, Vec<bool>, i64)>>,
}

pub struct DoubleComplex {
    pub n: usize,
    pub nc: Vec<SetPartition>,
    pub cells: BTreeMap<(i64, i64), Cell>,
    /// (s,t) -> (s+1,t)
    pub d_hor: BTreeMap<(i64, i64), QMatrix>,
    /// (s,t) -> (s,t+1), stored without the total-complex sign
    pub d_vert: BTreeMap<(i64, i64), QMatrix>,
    pub glued: CutDiagram,
    pub glued_complex: KhComplex,
    /// side-1 pieces per partition index
    pub pieces1: Vec<PieceBasis>,
    /// Khovanov complexes of the side-2 surgeries, per partition index
    pub complexes2: Vec<KhComplex>,
    /// Khovanov complexes of the side-1 surgeries, per partition index
    pub complexes1: Vec<KhComplex>,
}

impl DoubleComplex {
    pub fn s_range(&self) -> (i64, i64) {
        let min = self.cells.keys().map(|&(s, _)| s).min().unwrap_or(0);
        let max = self.cells.keys().map(|&(s, _)| s).max().unwrap_or(0);
        (min, max)
    }

    pub fn t_range(&self) -> (i64, i64) {
        let min = self.cells.keys().map(|&(_, t)| t).min().unwrap_or(0);
        let max = self.cells.keys().map(|&(_, t)| t).max().unwrap_or(0);
        (min, max)
    }

    pub fn cell_dim(&self, s: i64, t: i64) -> usize {
        self.cells.get(&(s, t)).map_or(0, Cell::dim)
    }

    /// q-graded dimensions of one cell.
    pub fn cell_qdims(&self, s: i64, t: i64) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        if let Some(c) = self.cells.get(&(s, t)) {
            for g in &c.gens {
                *out.entry(g.q).or_default() += 1;
            }
        }
        out
    }

    fn hor(&self, s: i64, t: i64) -> QMatrix {
        self.d_hor
            .get(&(s, t))
            .cloned()
            .unwrap_or_else(|| Matrix::zero(self.cell_dim(s + 1, t), self.cell_dim(s, t)))
    }

    fn vert(&self, s: i64, t: i64) -> QMatrix {
        self.d_vert
            .get(&(s, t))
            .cloned()
            .unwrap_or_else(|| Matrix::zero(self.cell_dim(s, t + 1), self.cell_dim(s, t)))
    }

    /// Squares vanish, squares commute, differentials preserve q and the
    /// vertical/horizontal maps preserve the side tags they must preserve.
    pub fn verify(&self) -> Result<(), ComplexError> {
        for (&(s, t), cell) in &self.cells {
            let h = self.hor(s, t);
            let v = self.vert(s, t);
            // q-degree zero and tag preservation, entry by entry
            for (m, vertical) in [(&h, false), (&v, true)] {
                let target = if vertical { (s, t + 1) } else { (s + 1, t) };
                let tgens = self.cells.get(&target).map(|c| &c.gens[..]).unwrap_or(&[]);
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if num_traits::Zero::is_zero(m.get(r, c)) {
                            continue;
                        }
                        let src = &cell.gens[c];
                        let dst = &tgens[r];
                        if src.q != dst.q {
                            return Err(ComplexError::QDegreeViolation(s + t));
                        }
                        let tags_ok = if vertical {
                            src.a_idx == dst.a_idx
                        } else {
                            src.b_idx == dst.b_idx
                        };
                        if !tags_ok {
                            return Err(ComplexError::NotAComplex(s + t));
                        }
                    }
                }
            }
            if !self.hor(s + 1, t).mul(&h).is_zero() {
                return Err(ComplexError::NotAComplex(s + t));
            }
            if !self.vert(s, t + 1).mul(&v).is_zero() {
                return Err(ComplexError::NotAComplex(s + t));
            }
            // commuting squares
            let hv = self.hor(s, t + 1).mul(&v);
            let vh = self.vert(s + 1, t).mul(&h);
            if hv != vh {
                return Err(ComplexError::NotAComplex(s + t));
            }
        }
        Ok(())
    }
}

fn side_signature(info: &CircleInfo, side: u8) -> (BTreeSet<u32>, BTreeSet<usize>) {
    let loops = info
        .tangle_loops
        .iter()
        .filter(|&&(s, _)| s == side)
        .map(|&(_, j)| j)
        .collect();
    (info.side_pieces(side).clone(), loops)
}

/// Build the double complex of a valid cut.
pub fn build_double_complex(cp: &CutPresentation) -> Result<DoubleComplex, SurgeryError> {
    build_double_complex_with(cp, false)
}

/// Same, with the within-inner circle order reversed (a different compatible
/// order; all homological output must be unchanged).
pub fn build_double_complex_with(
    cp: &CutPresentation,
    inner_reversed: bool,
) -> Result<DoubleComplex, SurgeryError> {
    cp.ensure_valid()?;
    let n1 = cp.tangle1.crossing_count();
    let n2 = cp.tangle2.crossing_count();
    let (l1p, l1m) = cp
        .tangle1
        .signed_crossing_counts()
        .map_err(SurgeryError::from)?;
    let (l2p, l2m) = cp
        .tangle2
        .signed_crossing_counts()
        .map_err(SurgeryError::from)?;
    let (l1p, l1m, l2p, l2m) = (l1p as i64, l1m as i64, l2p as i64, l2m as i64);
    let nc = enumerate_nc(cp.n);

    let full1 = full_surgery(cp, SIDE1)?;
    let full2 = full_surgery(cp, SIDE2)?;
    let mut c1_of: BTreeMap<State, usize> = BTreeMap::new();
    for s in State::enumerate(n1, None) {
        let p = boundary_partition_of(&full1, cp.n, &s)?;
        c1_of.insert(s, nc_index(&nc, &p));
    }
    let mut c2_of: BTreeMap<State, usize> = BTreeMap::new();
    for s in State::enumerate(n2, None) {
        let p = boundary_partition_of(&full2, cp.n, &s)?;
        c2_of.insert(s, nc_index(&nc, &p));
    }

    let surg1: Vec<CutDiagram> = nc
        .iter()
        .map(|p| surgery(cp, SIDE1, p))
        .collect::<Result<_, _>>()?;
    let surg2: Vec<CutDiagram> = nc
        .iter()
        .map(|p| surgery(cp, SIDE2, p))
        .collect::<Result<_, _>>()?;
    let complexes1: Vec<KhComplex> = surg1
        .iter()
        .map(|cd| {
            let policy = CompatibleOrder {
                cut: cd,
                view: OrderView::Side1,
                inner_reversed,
            };
            khovanov_complex(&cd.diagram, &policy)
        })
        .collect();
    let complexes2: Vec<KhComplex> = surg2
        .iter()
        .map(|cd| {
            let policy = CompatibleOrder {
                cut: cd,
                view: OrderView::Side2,
                inner_reversed,
            };
            khovanov_complex(&cd.diagram, &policy)
        })
        .collect();

    let glued = glue(cp)?;
    let glued_complex = {
        let policy = CompatibleOrder {
            cut: &glued,
            view: OrderView::Glued,
            inner_reversed,
        };
        khovanov_complex(&glued.diagram, &policy)
    };

    // side-1 piece bases: inner-circle labelings per state, grouped by the
    // boundary partition
    let full1_policy = CompatibleOrder {
        cut: &full1,
        view: OrderView::Side1,
        inner_reversed,
    };
    let full1_complex = khovanov_complex(&full1.diagram, &full1_policy);
    let mut pieces1: Vec<PieceBasis> = vec![PieceBasis::default(); nc.len()];
    for s1 in State::enumerate(n1, None) {
        let a_idx = c1_of[&s1];
        let r1 = s1.weight() as i64;
        let level = full1_complex.level(r1 - l1m).expect("level exists");
        let pos = level.states.binary_search(&s1).expect("state listed");
        let circles = &level.circles[pos];
        let inner: Vec<usize> = circles
            .iter()
            .enumerate()
            .filter(|(_, c)| full1.circle_info(c).class() != CircleClass::Outer)
            .map(|(i, _)| i)
            .collect();
        // inner circles come first under the side-1 compatible order
        assert!(inner.iter().copied().eq(0..inner.len()));
        let k = inner.len();
        let entry = pieces1[a_idx].by_degree.entry(r1 - l1m).or_default();
        for mask in 0..(1usize << k) {
            let labels: Vec<bool> = (0..k).map(|i| mask >> (k - 1 - i) & 1 == 1).collect();
            let label_sum: i64 = labels.iter().map(|&b| if b { 1 } else { -1 }).sum();
            let q = label_sum + r1 + l1p - 2 * l1m;
            entry.push((s1.clone(), labels, q));
        }
    }

    // cells, grouped by the side-1 tag, then by states, then labels
    let mut cells: BTreeMap<(i64, i64), Cell> = BTreeMap::new();
    let q_shift = (l1p + l2p) - 2 * (l1m + l2m);
    for a_idx in 0..nc.len() {
        for s1 in State::enumerate(n1, None) {
            if c1_of[&s1] != a_idx {
                continue;
            }
            let r1 = s1.weight() as i64;
            for s2 in State::enumerate(n2, None) {
                let r2 = s2.weight() as i64;
                let b_idx = c2_of[&s2];
                let (s, t) = (r1 - l1m, r2 - l2m);
                let glued_state = State(s1.0.iter().chain(s2.0.iter()).copied().collect());
                let level = glued_complex.level(s + t).expect("glued level exists");
                let pos = level
                    .states
                    .binary_search(&glued_state)
                    .expect("glued state listed");
                let circles = &level.circles[pos];

                // natural bijection checks: the glued circle list splits as
                // the side-1 surgery circles followed by the side-2 inner
                // circles, and its suffix matches the side-2 surgery circles
                let infos: Vec<CircleInfo> = circles.iter().map(|c| glued.circle_info(c)).collect();
                let lvl1 = complexes1[b_idx].level(s).expect("side1 level");
                let pos1 = lvl1.states.binary_search(&s1).expect("side1 state");
                let c1_circles = &lvl1.circles[pos1];
                let lvl2 = complexes2[a_idx].level(t).expect("side2 level");
                let pos2 = lvl2.states.binary_search(&s2).expect("side2 state");
                let c2_circles = &lvl2.circles[pos2];
                let k1 = c1_circles.len();
                let k2 = c2_circles.len();
                assert_eq!(
                    k1 + k2,
                    circles.len() + /* outer counted twice */ infos
                    .iter()
                    .filter(|i| i.class() == CircleClass::Outer)
                    .count()
                );
                for (j, c) in c1_circles.iter().enumerate() {
                    let sig_surg = side_signature(&surg1[b_idx].circle_info(c), SIDE1);
                    let sig_glued = side_signature(&infos[j], SIDE1);
                    assert_eq!(sig_surg, sig_glued, "side-1 circle bijection");
                }
                for (j, c) in c2_circles.iter().enumerate() {
                    let g = circles.len() - k2 + j;
                    let sig_surg = side_signature(&surg2[a_idx].circle_info(c), SIDE2);
                    let sig_glued = side_signature(&infos[g], SIDE2);
                    assert_eq!(sig_surg, sig_glued, "side-2 circle bijection");
                }

                let k = circles.len();
                let cell = cells.entry((s, t)).or_default();
                for mask in 0..(1usize << k) {
                    let labels: Vec<bool> = (0..k).map(|i| mask >> (k - 1 - i) & 1 == 1).collect();
                    let label_sum: i64 = labels.iter().map(|&b| if b { 1 } else { -1 }).sum();
                    cell.push(CellGen {
                        a_idx,
                        b_idx,
                        s1: s1.clone(),
                        s2: s2.clone(),
                        labels,
                        q: label_sum + r1 + r2 + q_shift,
                    });
                }
            }
        }
    }

    // vertical differentials: the side-2 surgery differential acting on the
    // label suffix, with the side-1 factor untouched
    let mut d_vert: BTreeMap<(i64, i64), QMatrix> = BTreeMap::new();
    let mut d_hor: BTreeMap<(i64, i64), QMatrix> = BTreeMap::new();
    let keys: Vec<(i64, i64)> = cells.keys().copied().collect();
    for &(s, t) in &keys {
        let cell = &cells[&(s, t)];
        if let Some(target) = cells.get(&(s, t + 1)) {
            let mut m: QMatrix = Matrix::zero(target.dim(), cell.dim());
            for (col, g) in cell.gens.iter().enumerate() {
                let cx = &complexes2[g.a_idx];
                let lvl = cx.level(t).unwrap();
                let pos = lvl.states.binary_search(&g.s2).unwrap();
                let k2 = lvl.circles[pos].len();
                let split = g.labels.len() - k2;
                let src_idx = lvl.gen_index(pos, &g.labels[split..]);
                let dmat = cx.diff(t);
                let next = cx.level(t + 1).unwrap();
                for row in 0..dmat.rows() {
                    let coeff = dmat.get(row, src_idx);
                    if num_traits::Zero::is_zero(coeff) {
                        continue;
                    }
                    let tg = &next.gens[row];
                    let s2_new = next.states[tg.state_idx].clone();
                    let mut labels = g.labels[..split].to_vec();
                    labels.extend_from_slice(&tg.labels);
                    let dst = target.index_of(&g.s1, &s2_new, &labels);
                    let v = m.get(dst, col) + coeff;
                    m.set(dst, col, v);
                }
            }
            d_vert.insert((s, t), m);
        }
        if let Some(target) = cells.get(&(s + 1, t)) {
            let mut m: QMatrix = Matrix::zero(target.dim(), cell.dim());
            for (col, g) in cell.gens.iter().enumerate() {
                let cx = &complexes1[g.b_idx];
                let lvl = cx.level(s).unwrap();
                let pos = lvl.states.binary_search(&g.s1).unwrap();
                let k1 = lvl.circles[pos].len();
                let src_idx = lvl.gen_index(pos, &g.labels[..k1]);
                let dmat = cx.diff(s);
                let next = cx.level(s + 1).unwrap();
                for row in 0..dmat.rows() {
                    let coeff = dmat.get(row, src_idx);
                    if num_traits::Zero::is_zero(coeff) {
                        continue;
                    }
                    let tg = &next.gens[row];
                    let s1_new = next.states[tg.state_idx].clone();
                    let mut labels = tg.labels.clone();
                    labels.extend_from_slice(&g.labels[k1..]);
                    let dst = target.index_of(&s1_new, &g.s2, &labels);
                    let v = m.get(dst, col) + coeff;
                    m.set(dst, col, v);
                }
            }
            d_hor.insert((s, t), m);
        }
    }

    let dc = DoubleComplex {
        n: cp.n,
        nc,
        cells,
        d_hor,
        d_vert,
        glued,
        glued_complex,
        pieces1,
        complexes2,
        complexes1,
    };
    dc.verify()
        .expect("double complex laws hold by construction");
    Ok(dc)
}

/// The total complex, with the sign (-1)^s on the vertical part, together
/// with the (s, t, in-cell index) coordinates of every generator.
pub struct TotalComplex {
    pub chain: ChainComplex,
    pub coords: Vec<Vec<(i64, i64, usize)>>,
}

pub fn total_complex(dc: &DoubleComplex) -> TotalComplex {
    if dc.cells.is_empty() {
        return TotalComplex {
            chain: ChainComplex {
                min_deg: 0,
                gen_q: vec![],
                diffs: vec![],
            },
            coords: vec![],
        };
    }
    let k_min = dc.cells.keys().map(|&(s, t)| s + t).min().unwrap();
    let k_max = dc.cells.keys().map(|&(s, t)| s + t).max().unwrap();
    let mut coords: Vec<Vec<(i64, i64, usize)>> = Vec::new();
    let mut gen_q: Vec<Vec<i64>> = Vec::new();
    let mut offsets: Vec<BTreeMap<(i64, i64), usize>> = Vec::new();
    for k in k_min..=k_max {
        let mut level_coords = Vec::new();
        let mut level_q = Vec::new();
        let mut level_off = BTreeMap::new();
        for (&(s, t), cell) in &dc.cells {
            if s + t != k {
                continue;
            }
            level_off.insert((s, t), level_coords.len());
            for (i, g) in cell.gens.iter().enumerate() {
                level_coords.push((s, t, i));
                level_q.push(g.q);
            }
        }
        coords.push(level_coords);
        gen_q.push(level_q);
        offsets.push(level_off);
    }
    let mut diffs = Vec::new();
    for k in k_min..k_max {
        let ki = (k - k_min) as usize;
        let rows = gen_q[ki + 1].len();
        let cols = gen_q[ki].len();
        let mut m: QMatrix = Matrix::zero(rows, cols);
        for (&(s, t), &off) in &offsets[ki] {
            let cell_dim = dc.cell_dim(s, t);
            // horizontal part
            if let Some(&toff) = offsets[ki + 1].get(&(s + 1, t)) {
                let h = dc.hor(s, t);
                for r in 0..h.rows() {
                    for c in 0..cell_dim {
                        let v = h.get(r, c);
                        if !num_traits::Zero::is_zero(v) {
                            m.set(toff + r, off + c, v.clone());
                        }
                    }
                }
            }
            // vertical part with the sign (-1)^s
            if let Some(&toff) = offsets[ki + 1].get(&(s, t + 1)) {
                let v = dc.vert(s, t);
                let sign: Rat = if s.rem_euclid(2) == 0 {
                    crate::exact::rat(1)
                } else {
                    crate::exact::rat(-1)
                };
                for r in 0..v.rows() {
                    for c in 0..cell_dim {
                        let x = v.get(r, c);
                        if !num_traits::Zero::is_zero(x) {
                            m.set(toff + r, off + c, x * &sign);
                        }
                    }
                }
            }
        }
        diffs.push(m);
    }
    let chain = ChainComplex {
        min_deg: k_min,
        gen_q,
        diffs,
    };
    chain.verify().expect("total complex squares to zero");
    TotalComplex { chain, coords }
}

/// Result of comparing the total complex against the Khovanov complex of the
/// glued diagram built with the inherited order.
pub struct TotComparison {
    pub generator_level: bool,
    pub note: Option<String>,
    pub homology_level: bool,
    pub tot_homology: BigradedDims,
    pub kh_homology: BigradedDims,
}

impl fmt::Display for TotComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "  generator-level comparison: {}",
            if self.generator_level {
                "EQUAL"
            } else {
                "mismatch"
            }
        )?;
        if let Some(n) = &self.note {
            writeln!(f, "  note: {}", n)?;
        }
        writeln!(
            f,
            "  homology-level comparison:  {}",
            if self.homology_level {
                "EQUAL"
            } else {
                "MISMATCH"
            }
        )?;
        write!(f, "{}", self.tot_homology)
    }
}

/// Compare Tot with the glued Khovanov complex: basis bijection plus
/// entrywise matrix equality, then homology equality.
pub fn compare_with_khovanov(dc: &DoubleComplex) -> Result<TotComparison, ComplexError> {
    let tot = total_complex(dc);
    let kh = &dc.glued_complex;

    let mut generator_level = true;
    let mut note = None;
    // the bijection: cell generator -> glued cube generator with the
    // concatenated state and identical labels
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for (ki, level_coords) in tot.coords.iter().enumerate() {
        let deg = tot.chain.min_deg + ki as i64;
        let Some(level) = kh.level(deg) else {
            generator_level = false;
            note = Some(format!("no glued level at degree {}", deg));
            break;
        };
        if level.dim() != level_coords.len() {
            generator_level = false;
            note = Some(format!("dimension mismatch at degree {}", deg));
            break;
        }
        let mut map = Vec::with_capacity(level_coords.len());
        let mut seen = vec![false; level.dim()];
        for &(s, t, i) in level_coords {
            let g = &dc.cells[&(s, t)].gens[i];
            let glued_state = State(g.s1.0.iter().chain(g.s2.0.iter()).copied().collect());
            let pos = level
                .states
                .binary_search(&glued_state)
                .expect("glued state listed");
            let idx = level.gen_index(pos, &g.labels);
            seen[idx] = true;
            map.push(idx);
        }
        if !seen.iter().all(|&b| b) {
            generator_level = false;
            note = Some(format!("basis map not bijective at degree {}", deg));
            break;
        }
        maps.push(map);
    }
    if generator_level {
        'outer: for (ki, m_tot) in tot.chain.diffs.iter().enumerate() {
            let deg = tot.chain.min_deg + ki as i64;
            let m_kh = kh.diff(deg);
            for r in 0..m_tot.rows() {
                for c in 0..m_tot.cols() {
                    if m_tot.get(r, c) != m_kh.get(maps[ki + 1][r], maps[ki][c]) {
                        generator_level = false;
                        note = Some(format!(
                            "entry mismatch at degree {}: demoted to homology-level check",
                            deg
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }

    let tot_homology = tot.chain.homology()?;
    let kh_homology = kh.homology()?;
    let homology_level = tot_homology == kh_homology;
    Ok(TotComparison {
        generator_level,
        note,
        homology_level,
        tot_homology,
        kh_homology,
    })
}

/// Dimensions of one page: (column p, row q, quantum degree) -> dimension.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PageDims(pub BTreeMap<(i64, i64, i64), usize>);

impl PageDims {
    pub fn insert(&mut self, p: i64, q: i64, jq: i64, d: usize) {
        if d > 0 {
            self.0.insert((p, q, jq), d);
        }
    }

    pub fn get(&self, p: i64, q: i64, jq: i64) -> usize {
        self.0.get(&(p, q, jq)).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.0.values().sum()
    }

    /// The set of rows (q values) carrying nonzero entries.
    pub fn rows(&self) -> BTreeSet<i64> {
        self.0.keys().map(|&(_, q, _)| q).collect()
    }

    /// q-graded dimensions at one (p, q) spot.
    pub fn spot(&self, p: i64, q: i64) -> BTreeMap<i64, usize> {
        self.0
            .iter()
            .filter(|(&(pp, qq, _), _)| pp == p && qq == q)
            .map(|(&(_, _, j), &d)| (j, d))
            .collect()
    }
}

impl fmt::Display for PageDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spots: BTreeSet<(i64, i64)> = self.0.keys().map(|&(p, q, _)| (p, q)).collect();
        for (p, q) in spots {
            let row: Vec<String> = self
                .spot(p, q)
                .into_iter()
                .map(|(j, d)| format!("{}:{}", j, d))
                .collect();
            writeln!(f, "  ({:>2},{:>2})  {{{}}}", p, q, row.join(", "))?;
        }
        Ok(())
    }
}

/// The spectral sequence of the column filtration: pages from r = 1 on,
/// the ranks of each page differential, the first page from which nothing
/// changes, and the limit.
pub struct SpectralSequence {
    pub pages: Vec<PageDims>,
    pub ranks: Vec<BTreeMap<(i64, i64, i64), usize>>,
    pub collapse_page: usize,
    pub e_inf: PageDims,
}

impl SpectralSequence {
    /// Page by its index r >= 1 (clamped to the stable range).
    pub fn page(&self, r: usize) -> &PageDims {
        assert!(r >= 1, "pages are indexed from 1");
        if r - 1 < self.pages.len() {
            &self.pages[r - 1]
        } else {
            &self.e_inf
        }
    }
}

/// Per total degree and quantum degree, a block of the total complex with
/// its filtration levels.
struct Block {
    /// indices into the Tot level
    idx: Vec<usize>,
    /// column degree s per generator
    s: Vec<i64>,
}

pub fn spectral_sequence(dc: &DoubleComplex) -> SpectralSequence {
    let tot = total_complex(dc);
    let chain = &tot.chain;
    let (s_min, s_max) = dc.s_range();
    let k_min = chain.min_deg;
    let k_max = chain.max_deg();
    let qs: Vec<i64> = chain.all_q_degrees();

    // blocks and block-restricted differentials
    let mut blocks: BTreeMap<(i64, i64), Block> = BTreeMap::new();
    for k in k_min..=k_max {
        let ki = (k - k_min) as usize;
        for &jq in &qs {
            let mut idx = Vec::new();
            let mut s = Vec::new();
            for (i, &q) in chain.gen_q[ki].iter().enumerate() {
                if q == jq {
                    idx.push(i);
                    s.push(tot.coords[ki][i].0);
                }
            }
            if !idx.is_empty() {
                blocks.insert((k, jq), Block { idx, s });
            }
        }
    }
    let block_diff = |k: i64, jq: i64| -> QMatrix {
        let src = blocks.get(&(k, jq));
        let dst = blocks.get(&(k + 1, jq));
        let (rows, cols) = (
            dst.map_or(0, |b| b.idx.len()),
            src.map_or(0, |b| b.idx.len()),
        );
        match (src, dst) {
            (Some(sb), Some(db)) => chain.diff(k).select(&db.idx, &sb.idx),
            _ => Matrix::zero(rows, cols),
        }
    };

    // spanning columns of the r-th cycle space at filtration level p, in
    // block coordinates of (k, jq)
    let z_space = |p: i64, r: i64, k: i64, jq: i64| -> Vec<Vec<Rat>> {
        let Some(b) = blocks.get(&(k, jq)) else {
            return Vec::new();
        };
        let sub: Vec<usize> = (0..b.idx.len()).filter(|&i| b.s[i] >= p).collect();
        if sub.is_empty() {
            return Vec::new();
        }
        let dim = b.idx.len();
        if r <= 0 {
            return sub
                .iter()
                .map(|&i| {
                    let mut v = vec![crate::exact::rat(0); dim];
                    v[i] = crate::exact::rat(1);
                    v
                })
                .collect();
        }
        let d = block_diff(k, jq);
        let target_rows: Vec<usize> = match blocks.get(&(k + 1, jq)) {
            Some(db) => (0..db.idx.len()).filter(|&i| db.s[i] < p + r).collect(),
            None => Vec::new(),
        };
        let m = d.select(&target_rows, &sub);
        let (_, kernel) = m.rank_and_kernel();
        kernel
            .into_iter()
            .map(|kv| {
                let mut v = vec![crate::exact::rat(0); dim];
                for (si, &bi) in sub.iter().enumerate() {
                    v[bi] = kv[si].clone();
                }
                v
            })
            .collect()
    };

    let cols_to_matrix = |cols: &[Vec<Rat>], rows: usize| -> QMatrix {
        let mut m: QMatrix = Matrix::zero(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    };

    let s_extent = (s_max - s_min).max(0);
    let r_stop = (s_extent + 1).max(2) as usize;
    let mut pages: Vec<PageDims> = Vec::new();
    for r in 1..=r_stop as i64 {
        let mut page = PageDims::default();
        for (&(k, jq), block) in &blocks {
            let p_values: BTreeSet<i64> = block.s.iter().copied().collect();
            for &p in &p_values {
                let z = z_space(p, r, k, jq);
                if z.is_empty() {
                    continue;
                }
                let dim = blocks[&(k, jq)].idx.len();
                // boundary part: Z_{r-1} at (p+1, k) plus D of Z_{r-1} at
                // (p-r+1, k-1)
                let a = z_space(p + 1, r - 1, k, jq);
                let below = z_space(p - r + 1, r - 1, k - 1, jq);
                let d_prev = block_diff(k - 1, jq);
                let b: Vec<Vec<Rat>> = below.iter().map(|v| d_prev.apply(v)).collect();
                let mut all = a;
                all.extend(b);
                let denom_rank = cols_to_matrix(&all, dim).rank();
                let dim_e = z.len() - denom_rank;
                page.insert(p, k - p, jq, dim_e);
            }
        }
        pages.push(page);
    }
    let e_inf = pages.last().cloned().unwrap_or_default();
    let collapse_page = (0..pages.len())
        .find(|&i| pages[i] == e_inf)
        .map(|i| i + 1)
        .unwrap_or(pages.len());

    // page differential ranks, recovered from consecutive dimension tables
    let mut ranks = Vec::new();
    for r in 1..pages.len() as i64 {
        let cur = &pages[(r - 1) as usize];
        let next = &pages[r as usize];
        let mut rank_out: BTreeMap<(i64, i64, i64), usize> = BTreeMap::new();
        let mut keys: Vec<(i64, i64, i64)> = cur.0.keys().copied().collect();
        // walk each d_r ray in increasing p so incoming ranks are known
        keys.sort_by_key(|&(p, _, _)| p);
        for (p, q, jq) in keys {
            let rank_in = rank_out.get(&(p - r, q + r - 1, jq)).copied().unwrap_or(0);
            let out = cur.get(p, q, jq) - next.get(p, q, jq) - rank_in;
            if out > 0 {
                rank_out.insert((p, q, jq), out);
            }
        }
        ranks.push(rank_out);
    }

    SpectralSequence {
        pages,
        ranks,
        collapse_page,
        e_inf,
    }
}

/// Convergence check: the limit totals against the Khovanov homology of the
/// glued diagram, per total degree and quantum degree.
pub struct ConvergenceReport {
    pub lines: Vec<(i64, i64, usize, usize)>,
    pub pass: bool,
}

impl fmt::Display for ConvergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(k, jq, einf, kh) in &self.lines {
            writeln!(
                f,
                "  degree ({}, q={}): limit {} vs homology {}{}",
                k,
                jq,
                einf,
                kh,
                if einf == kh { "" } else { "  <-- MISMATCH" }
            )?;
        }
        writeln!(
            f,
            "  convergence: {}",
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

pub fn check_convergence(ss: &SpectralSequence, kh: &BigradedDims) -> ConvergenceReport {
    let mut totals: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for (&(p, q, jq), &d) in &ss.e_inf.0 {
        *totals.entry((p + q, jq)).or_default() += d;
    }
    let mut keys: BTreeSet<(i64, i64)> = totals.keys().copied().collect();
    keys.extend(kh.dims.keys().copied());
    let mut lines = Vec::new();
    let mut pass = true;
    for (k, jq) in keys {
        let e = totals.get(&(k, jq)).copied().unwrap_or(0);
        let h = kh.get(k, jq);
        if e != h {
            pass = false;
        }
        lines.push((k, jq, e, h));
    }
    ConvergenceReport { lines, pass }
}

/// The second page built exactly from its defining formula: for each
/// partition, tensor the side-1 piece with homology representatives of the
/// side-2 surgery, act by the horizontal differential on representatives,
/// and take homology in the piece direction.
pub fn e2_direct(dc: &DoubleComplex) -> PageDims {
    // representatives of the side-2 surgery homology per (partition, t, jq)
    let mut reps: Vec<BTreeMap<(i64, i64), Vec<Vec<Rat>>>> = Vec::new();
    for cx in &dc.complexes2 {
        let chain = cx.as_chain();
        let mut m = BTreeMap::new();
        for t in chain.min_deg..=chain.max_deg() {
            for jq in chain.q_degrees(t) {
                let r = chain.homology_representatives(t, jq);
                if !r.is_empty() {
                    m.insert((t, jq), r);
                }
            }
        }
        reps.push(m);
    }

    // basis of the first page at (p, t): (a_idx, piece gen, class index),
    // stored per (p, t, jq)
    type E1Key = (i64, i64, i64);
    let mut basis: BTreeMap<E1Key, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for (a_idx, piece) in dc.pieces1.iter().enumerate() {
        for (&p, gens) in &piece.by_degree {
            for (gi, (_, _, qu)) in gens.iter().enumerate() {
                for (&(t, jz), zs) in &reps[a_idx] {
                    for zi in 0..zs.len() {
                        basis
                            .entry((p, t, qu + jz))
                            .or_default()
                            .push((a_idx, gi, zi));
                    }
                }
            }
        }
    }

    // embed a basis element as a vector in the cell (p, t)
    let embed = |p: i64, t: i64, a_idx: usize, gi: usize, zi: usize, jz: i64| -> Vec<Rat> {
        let cell = &dc.cells[&(p, t)];
        let (s1, inner_labels, _) = &dc.pieces1[a_idx].by_degree[&p][gi];
        let z = &reps[a_idx][&(t, jz)][zi];
        let cx = &dc.complexes2[a_idx];
        let lvl = cx.level(t).unwrap();
        let mut v = vec![crate::exact::rat(0); cell.dim()];
        for (g2, coeff) in z.iter().enumerate() {
            if num_traits::Zero::is_zero(coeff) {
                continue;
            }
            let tg = &lvl.gens[g2];
            let s2 = lvl.states[tg.state_idx].clone();
            let mut labels = inner_labels.clone();
            labels.extend_from_slice(&tg.labels);
            v[cell.index_of(s1, &s2, &labels)] = coeff.clone();
        }
        v
    };

    // the induced differential on the first page, then homology in p
    let mut page = PageDims::default();
    let keys: BTreeSet<E1Key> = basis.keys().copied().collect();
    let e1_matrix = |src: &E1Key| -> QMatrix {
        let (p, t, jq) = *src;
        let src_basis = &basis[src];
        let dst_basis: &[(usize, usize, usize)] =
            basis.get(&(p + 1, t, jq)).map(|v| &v[..]).unwrap_or(&[]);
        let mut m: QMatrix = Matrix::zero(dst_basis.len(), src_basis.len());
        if !dc.cells.contains_key(&(p, t)) {
            return m;
        }
        let hor = dc.hor(p, t);
        for (col, &(a_idx, gi, zi)) in src_basis.iter().enumerate() {
            let qu = dc.pieces1[a_idx].by_degree[&p][gi].2;
            let jz = jq - qu;
            let v = embed(p, t, a_idx, gi, zi, jz);
            let w = hor.apply(&v);
            // project w onto the representative classes of each target block
            for (a2, piece) in dc.pieces1.iter().enumerate() {
                let Some(gens2) = piece.by_degree.get(&(p + 1)) else {
                    continue;
                };
                for (gi2, (s1b, inner2, qu2)) in gens2.iter().enumerate() {
                    let jz2 = jq - qu2;
                    let Some(zs2) = reps[a2].get(&(t, jz2)) else {
                        continue;
                    };
                    // the component of w over this piece generator, as a
                    // vector in the side-2 surgery complex of a2
                    let cx = &dc.complexes2[a2];
                    let lvl = cx.level(t).unwrap();
                    let target_cell = &dc.cells[&(p + 1, t)];
                    let mut comp = vec![crate::exact::rat(0); lvl.dim()];
                    let mut nonzero = false;
                    for (g2, slot) in lvl.gens.iter().enumerate() {
                        let s2 = lvl.states[slot.state_idx].clone();
                        let mut labels = inner2.clone();
                        labels.extend_from_slice(&slot.labels);
                        let idx = target_cell.index_of(s1b, &s2, &labels);
                        comp[g2] = w[idx].clone();
                        if !num_traits::Zero::is_zero(&comp[g2]) {
                            nonzero = true;
                        }
                    }
                    if !nonzero {
                        continue;
                    }
                    // solve comp = Z c + d(prev) w2 inside the (t, jz2) block
                    let block = cx.as_chain().q_block(t, jz2);
                    let comp_block: Vec<Rat> = block.iter().map(|&i| comp[i].clone()).collect();
                    let z_cols: Vec<Vec<Rat>> = zs2
                        .iter()
                        .map(|z| block.iter().map(|&i| z[i].clone()).collect())
                        .collect();
                    let d_in = cx.as_chain().diff_block(t - 1, jz2);
                    let mut sys: QMatrix = Matrix::zero(block.len(), z_cols.len() + d_in.cols());
                    for (j, zc) in z_cols.iter().enumerate() {
                        for (i, v) in zc.iter().enumerate() {
                            sys.set(i, j, v.clone());
                        }
                    }
                    for j in 0..d_in.cols() {
                        for i in 0..d_in.rows() {
                            sys.set(i, z_cols.len() + j, d_in.get(i, j).clone());
                        }
                    }
                    let sol = sys
                        .solve_any(&comp_block)
                        .expect("horizontal image of a class is a class");
                    for (zi2, c) in sol.iter().take(zs2.len()).enumerate() {
                        if num_traits::Zero::is_zero(c) {
                            continue;
                        }
                        let row = basis[&(p + 1, t, jq)]
                            .iter()
                            .position(|&(a, g, z)| (a, g, z) == (a2, gi2, zi2))
                            .expect("target basis element present");
                        let v = m.get(row, col) + c;
                        m.set(row, col, v);
                    }
                }
            }
        }
        m
    };

    for &(p, t, jq) in &keys {
        let n = basis[&(p, t, jq)].len();
        let rank_out = e1_matrix(&(p, t, jq)).rank();
        let rank_in = if basis.contains_key(&(p - 1, t, jq)) {
            e1_matrix(&(p - 1, t, jq)).rank()
        } else {
            0
        };
        page.insert(p, t, jq, n - rank_out - rank_in);
    }
    page
}
