//! The cube of resolutions, the rank-2 Frobenius algebra on circles, the
//! Khovanov complex with its degree shifts, homology over Q, and the Jones
//! polynomial as the normalized graded Euler characteristic.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagram::{Circle, OrientedDiagram, State};
use crate::exact::{rat, Laurent, Matrix, QMatrix, QVector, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("differential does not square to zero at degree {0}")]
    NotAComplex(i64),
    #[error("differential entry changes q-degree at degree {0}")]
    QDegreeViolation(i64),
    #[error("graded Euler characteristic is not divisible by q + q^-1")]
    InexactDivision,
    #[error("diagram is empty")]
    EmptyDiagram,
}

/// Total order on the circles of each smoothing. The cube construction is
/// deterministic once a policy is fixed; any two policies give complexes
/// with the same homology.
pub trait CirclePolicy {
    fn key(&self, circle: &Circle) -> (u8, u64, u64);
}

/// Circles ordered by smallest edge identifier, free loops last.
pub struct MinEdgeOrder;

impl CirclePolicy for MinEdgeOrder {
    fn key(&self, circle: &Circle) -> (u8, u64, u64) {
        let (flag, id) = circle.sort_key();
        (flag, id, 0)
    }
}

/// The reverse of `MinEdgeOrder`; exists to exercise order invariance.
pub struct ReverseMinEdgeOrder;

impl CirclePolicy for ReverseMinEdgeOrder {
    fn key(&self, circle: &Circle) -> (u8, u64, u64) {
        let (flag, id) = circle.sort_key();
        (u8::MAX - flag, u64::MAX - id, 0)
    }
}

/// Multiplication of the Frobenius algebra on labels (false = low generator,
/// true = high generator): the high label is the unit, low times low is zero.
pub fn frobenius_merge(a: bool, b: bool) -> Option<bool> {
    match (a, b) {
        (true, true) => Some(true),
        (true, false) | (false, true) => Some(false),
        (false, false) => None,
    }
}

/// Comultiplication: the high label splits into high x low + low x high, the
/// low label into low x low.
pub fn frobenius_split(a: bool) -> Vec<(bool, bool)> {
    if a {
        vec![(true, false), (false, true)]
    } else {
        vec![(false, false)]
    }
}

/// A basis element of one cube level: a state together with one label per
/// circle of its smoothing (in policy order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeGen {
    pub state_idx: usize,
    pub labels: Vec<bool>,
}

/// One homological level of the cube, with its ordered basis.
pub struct CubeLevel {
    pub states: Vec<State>,
    pub circles: Vec<Vec<Circle>>,
    pub gens: Vec<CubeGen>,
    pub gen_q: Vec<i64>,
    pub state_offset: Vec<usize>,
}

impl CubeLevel {
    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    /// Index of the generator with the given state index and labels; labels
    /// enumerate in binary order within each state block.
    pub fn gen_index(&self, state_idx: usize, labels: &[bool]) -> usize {
        let k = labels.len();
        let mut off = 0usize;
        for (i, &b) in labels.iter().enumerate() {
            if b {
                off += 1 << (k - 1 - i);
            }
        }
        self.state_offset[state_idx] + off
    }
}

/// A q-graded chain complex with explicit labeled bases, the Khovanov
/// homological and q shifts already applied.
pub struct KhComplex {
    pub min_deg: i64,
    pub q_shift: i64,
    pub levels: Vec<CubeLevel>,
    pub diffs: Vec<QMatrix>,
    pub pos_crossings: usize,
    pub neg_crossings: usize,
}

/// Dimensions of a q-graded vector space, per q-degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedVectorSpace {
    pub dims: BTreeMap<i64, usize>,
}

impl GradedVectorSpace {
    pub fn qdim(&self) -> Laurent {
        Laurent::from_terms(self.dims.iter().map(|(&q, &d)| (q, rat(d as i64))))
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }
}

impl fmt::Display for GradedVectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .dims
            .iter()
            .map(|(q, d)| format!("{}:{}", q, d))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Dimensions per (homological degree, q-degree); zero entries omitted.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BigradedDims {
    pub dims: BTreeMap<(i64, i64), usize>,
}

impl BigradedDims {
    pub fn from_pairs(pairs: &[(i64, i64, usize)]) -> Self {
        BigradedDims {
            dims: pairs.iter().map(|&(h, q, d)| ((h, q), d)).collect(),
        }
    }

    pub fn insert(&mut self, h: i64, q: i64, d: usize) {
        if d > 0 {
            *self.dims.entry((h, q)).or_default() += d;
        }
    }

    pub fn get(&self, h: i64, q: i64) -> usize {
        self.dims.get(&(h, q)).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Graded Euler characteristic: alternating sum of q-dimensions.
    pub fn euler(&self) -> Laurent {
        let mut p = Laurent::zero();
        for (&(h, q), &d) in &self.dims {
            let sign = if h.rem_euclid(2) == 0 { 1 } else { -1 };
            p.add_term(q, rat(sign * d as i64));
        }
        p
    }
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        let degs: std::collections::BTreeSet<i64> = self.dims.keys().map(|&(h, _)| h).collect();
        for h in degs {
            let row: Vec<String> = self
                .dims
                .iter()
                .filter(|(&(hh, _), _)| hh == h)
                .map(|(&(_, q), &d)| format!("q={}: {}", q, d))
                .collect();
            writeln!(f, "  h={:>3}   {}", h, row.join("   "))?;
        }
        Ok(())
    }
}

/// A bare q-graded chain complex: q-degrees per generator and differential
/// matrices, without the labeled cube bases. Shared by the Khovanov complex
/// and the total complex of the double complex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub min_deg: i64,
    pub gen_q: Vec<Vec<i64>>,
    pub diffs: Vec<QMatrix>,
}

impl ChainComplex {
    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.gen_q.len() as i64 - 1
    }

    fn idx(&self, deg: i64) -> Option<usize> {
        let i = deg - self.min_deg;
        if i < 0 || i as usize >= self.gen_q.len() {
            None
        } else {
            Some(i as usize)
        }
    }

    pub fn dim(&self, deg: i64) -> usize {
        self.idx(deg).map_or(0, |i| self.gen_q[i].len())
    }

    /// The outgoing differential at a homological degree (zero matrix when
    /// out of range).
    pub fn diff(&self, deg: i64) -> QMatrix {
        match self.idx(deg) {
            Some(i) if i < self.diffs.len() => self.diffs[i].clone(),
            _ => Matrix::zero(self.dim(deg + 1), self.dim(deg)),
        }
    }

    pub fn space(&self, deg: i64) -> GradedVectorSpace {
        let mut dims = BTreeMap::new();
        if let Some(i) = self.idx(deg) {
            for &q in &self.gen_q[i] {
                *dims.entry(q).or_default() += 1;
            }
        }
        GradedVectorSpace { dims }
    }

    pub fn chain_dims(&self) -> BigradedDims {
        let mut out = BigradedDims::default();
        for deg in self.min_deg..=self.max_deg() {
            for (&q, &d) in &self.space(deg).dims {
                out.insert(deg, q, d);
            }
        }
        out
    }

    /// d∘d = 0 and every entry connects generators of equal q-degree.
    pub fn verify(&self) -> Result<(), ComplexError> {
        for i in 0..self.diffs.len() {
            let m = &self.diffs[i];
            let src = &self.gen_q[i];
            let dst = &self.gen_q[i + 1];
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if !num_traits::Zero::is_zero(m.get(r, c)) && dst[r] != src[c] {
                        return Err(ComplexError::QDegreeViolation(self.min_deg + i as i64));
                    }
                }
            }
            if i + 1 < self.diffs.len() {
                let sq = self.diffs[i + 1].mul(m);
                if !sq.is_zero() {
                    return Err(ComplexError::NotAComplex(self.min_deg + i as i64));
                }
            }
        }
        Ok(())
    }

    /// Indices of a level's generators at a given q-degree.
    pub fn q_block(&self, deg: i64, q: i64) -> Vec<usize> {
        self.idx(deg).map_or_else(Vec::new, |i| {
            self.gen_q[i]
                .iter()
                .enumerate()
                .filter(|(_, &gq)| gq == q)
                .map(|(j, _)| j)
                .collect()
        })
    }

    /// All q-degrees present at a level.
    pub fn q_degrees(&self, deg: i64) -> Vec<i64> {
        let mut qs: Vec<i64> = self
            .idx(deg)
            .map_or_else(Vec::new, |i| self.gen_q[i].clone());
        qs.sort_unstable();
        qs.dedup();
        qs
    }

    /// All q-degrees present anywhere in the complex.
    pub fn all_q_degrees(&self) -> Vec<i64> {
        let mut qs: Vec<i64> = self.gen_q.iter().flatten().copied().collect();
        qs.sort_unstable();
        qs.dedup();
        qs
    }

    /// The outgoing differential restricted to a q-block.
    pub fn diff_block(&self, deg: i64, q: i64) -> QMatrix {
        let cols = self.q_block(deg, q);
        let rows = self.q_block(deg + 1, q);
        self.diff(deg).select(&rows, &cols)
    }

    /// Homology dimensions per (homological degree, q-degree), computed
    /// blockwise by exact rank.
    pub fn homology(&self) -> Result<BigradedDims, ComplexError> {
        self.verify()?;
        let mut out = BigradedDims::default();
        for deg in self.min_deg..=self.max_deg() {
            for q in self.q_degrees(deg) {
                let n = self.q_block(deg, q).len();
                let rank_out = self.diff_block(deg, q).rank();
                let rank_in = if deg > self.min_deg {
                    self.diff_block(deg - 1, q).rank()
                } else {
                    0
                };
                let dim = n - rank_out - rank_in;
                out.insert(deg, q, dim);
            }
        }
        Ok(out)
    }

    /// Cycle representatives of the homology at (deg, q), as vectors in the
    /// level's full coordinate system.
    pub fn homology_representatives(&self, deg: i64, q: i64) -> Vec<QVector> {
        let block = self.q_block(deg, q);
        if block.is_empty() {
            return Vec::new();
        }
        let d_out = self.diff_block(deg, q);
        let (_, kernel) = d_out.rank_and_kernel();
        // image of the incoming differential, in block coordinates
        let d_in = if deg > self.min_deg {
            self.diff_block(deg - 1, q)
        } else {
            Matrix::zero(block.len(), 0)
        };
        let im_basis = d_in.column_space_basis();
        // pick kernel vectors independent modulo the image
        let mut stacked: Vec<Vec<Rat>> = Vec::new();
        for v in &im_basis {
            stacked.push(v.clone());
        }
        let im_count = stacked.len();
        for v in &kernel {
            stacked.push(v.clone());
        }
        let mut red = columns_to_matrix(&stacked, block.len());
        let pivots = red.rref();
        let mut reps = Vec::new();
        for &p in &pivots {
            if p >= im_count {
                let v_block = &kernel[p - im_count];
                let mut full = vec![rat(0); self.dim(deg)];
                for (bi, &gi) in block.iter().enumerate() {
                    full[gi] = v_block[bi].clone();
                }
                reps.push(full);
            }
        }
        reps
    }

    /// Graded Euler characteristic of the chain groups.
    pub fn euler_characteristic(&self) -> Laurent {
        self.chain_dims().euler()
    }
}

impl KhComplex {
    pub fn max_deg(&self) -> i64 {
        self.min_deg + self.levels.len() as i64 - 1
    }

    pub fn level(&self, deg: i64) -> Option<&CubeLevel> {
        let idx = deg.checked_sub(self.min_deg)?;
        if idx < 0 {
            return None;
        }
        self.levels.get(idx as usize)
    }

    pub fn dim(&self, deg: i64) -> usize {
        self.level(deg).map_or(0, |l| l.dim())
    }

    /// View as a bare chain complex (q-degrees and matrices only).
    pub fn as_chain(&self) -> ChainComplex {
        ChainComplex {
            min_deg: self.min_deg,
            gen_q: self.levels.iter().map(|l| l.gen_q.clone()).collect(),
            diffs: self.diffs.clone(),
        }
    }

    pub fn diff(&self, deg: i64) -> QMatrix {
        self.as_chain().diff(deg)
    }

    pub fn space(&self, deg: i64) -> GradedVectorSpace {
        self.as_chain().space(deg)
    }

    pub fn chain_dims(&self) -> BigradedDims {
        self.as_chain().chain_dims()
    }

    pub fn verify(&self) -> Result<(), ComplexError> {
        self.as_chain().verify()
    }

    pub fn q_degrees(&self, deg: i64) -> Vec<i64> {
        self.as_chain().q_degrees(deg)
    }

    pub fn homology(&self) -> Result<BigradedDims, ComplexError> {
        self.as_chain().homology()
    }

    pub fn homology_representatives(&self, deg: i64, q: i64) -> Vec<QVector> {
        self.as_chain().homology_representatives(deg, q)
    }

    pub fn euler_characteristic(&self) -> Laurent {
        self.as_chain().euler_characteristic()
    }
}

fn columns_to_matrix(cols: &[QVector], rows: usize) -> QMatrix {
    let mut m = Matrix::zero(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m.set(i, j, v.clone());
        }
    }
    m
}

/// Build the unshifted cube of resolutions of a diagram.
pub fn build_cube(d: &OrientedDiagram, policy: &dyn CirclePolicy) -> KhComplex {
    build_shifted(d, policy, 0, 0, 0, 0)
}

/// The Khovanov complex: the cube shifted by [-l-]{l+ - 2l-}.
pub fn khovanov_complex(d: &OrientedDiagram, policy: &dyn CirclePolicy) -> KhComplex {
    let (pos, neg) = d
        .signed_crossing_counts()
        .expect("diagram orientations must be consistent");
    let (p, n) = (pos as i64, neg as i64);
    build_shifted(d, policy, -n, p - 2 * n, pos, neg)
}

fn build_shifted(
    d: &OrientedDiagram,
    policy: &dyn CirclePolicy,
    h_shift: i64,
    q_shift: i64,
    pos: usize,
    neg: usize,
) -> KhComplex {
    let nx = d.crossing_count();
    let mut levels: Vec<CubeLevel> = Vec::with_capacity(nx + 1);
    for r in 0..=nx {
        let states = State::enumerate(nx, Some(r));
        let mut circles = Vec::with_capacity(states.len());
        let mut gens = Vec::new();
        let mut gen_q = Vec::new();
        let mut state_offset = Vec::with_capacity(states.len());
        for (si, s) in states.iter().enumerate() {
            let mut cs = d.smooth(s).circles;
            cs.sort_by_key(|c| policy.key(c));
            state_offset.push(gens.len());
            let k = cs.len();
            for mask in 0..(1usize << k) {
                let labels: Vec<bool> = (0..k).map(|i| mask >> (k - 1 - i) & 1 == 1).collect();
                let label_sum: i64 = labels.iter().map(|&b| if b { 1 } else { -1 }).sum();
                gen_q.push(label_sum + r as i64 + q_shift);
                gens.push(CubeGen {
                    state_idx: si,
                    labels,
                });
            }
            circles.push(cs);
        }
        levels.push(CubeLevel {
            states,
            circles,
            gens,
            gen_q,
            state_offset,
        });
    }

    let mut diffs = Vec::with_capacity(nx);
    for r in 0..nx {
        let (src, dst) = (&levels[r], &levels[r + 1]);
        let mut m: QMatrix = Matrix::zero(dst.dim(), src.dim());
        for (si, s) in src.states.iter().enumerate() {
            for j in 0..nx {
                if s.0[j] {
                    continue;
                }
                let t = s.flipped(j);
                let ti = dst
                    .states
                    .iter()
                    .position(|x| *x == t)
                    .expect("target state present at next level");
                let sg: usize = s.0[..j].iter().filter(|&&b| b).count();
                let sign = if sg % 2 == 0 { rat(1) } else { rat(-1) };
                add_edge_map(&mut m, src, si, dst, ti, &sign);
            }
        }
        diffs.push(m);
    }

    KhComplex {
        min_deg: h_shift,
        q_shift,
        levels,
        diffs,
        pos_crossings: pos,
        neg_crossings: neg,
    }
}

/// Add the signed Frobenius map of one cube edge into the differential.
fn add_edge_map(
    m: &mut QMatrix,
    src: &CubeLevel,
    si: usize,
    dst: &CubeLevel,
    ti: usize,
    sign: &Rat,
) {
    let from = &src.circles[si];
    let to = &dst.circles[ti];
    // circles unchanged by this resolution keep their labels
    let removed: Vec<usize> = (0..from.len())
        .filter(|&i| !to.contains(&from[i]))
        .collect();
    let added: Vec<usize> = (0..to.len()).filter(|&i| !from.contains(&to[i])).collect();
    let common_map: Vec<Option<usize>> = from
        .iter()
        .map(|c| to.iter().position(|c2| c2 == c))
        .collect();

    let k_from = from.len();
    for mask in 0..(1usize << k_from) {
        let labels: Vec<bool> = (0..k_from)
            .map(|i| mask >> (k_from - 1 - i) & 1 == 1)
            .collect();
        let src_idx = src.gen_index(si, &labels);
        let mut targets: Vec<(Vec<bool>, Rat)> = Vec::new();
        match (removed.len(), added.len()) {
            (2, 1) => {
                let merged = frobenius_merge(labels[removed[0]], labels[removed[1]]);
                if let Some(new_label) = merged {
                    let mut out = vec![false; to.len()];
                    for (i, &l) in labels.iter().enumerate() {
                        if let Some(tpos) = common_map[i] {
                            out[tpos] = l;
                        }
                    }
                    out[added[0]] = new_label;
                    targets.push((out, sign.clone()));
                }
            }
            (1, 2) => {
                for (la, lb) in frobenius_split(labels[removed[0]]) {
                    let mut out = vec![false; to.len()];
                    for (i, &l) in labels.iter().enumerate() {
                        if let Some(tpos) = common_map[i] {
                            out[tpos] = l;
                        }
                    }
                    out[added[0]] = la;
                    out[added[1]] = lb;
                    targets.push((out, sign.clone()));
                }
            }
            other => panic!(
                "resolution change must merge or split exactly one pair of circles, got {:?}",
                other
            ),
        }
        for (out_labels, coeff) in targets {
            let dst_idx = dst.gen_index(ti, &out_labels);
            let v = m.get(dst_idx, src_idx) + &coeff;
            m.set(dst_idx, src_idx, v);
        }
    }
}

/// The Jones polynomial in the quantum variable: the graded Euler
/// characteristic of the Khovanov complex, divided exactly by q + q^-1.
pub fn jones(d: &OrientedDiagram) -> Result<Laurent, ComplexError> {
    if d.crossing_count() == 0 && d.free_loops == 0 {
        return Err(ComplexError::EmptyDiagram);
    }
    let complex = khovanov_complex(d, &MinEdgeOrder);
    let chi = complex.euler_characteristic();
    chi.div_exact(&Laurent::qdim_v())
        .ok_or(ComplexError::InexactDivision)
}

/// The Jones polynomial rewritten in the classical parameter, via
/// q = -t^(1/2). Exponents of the stored polynomial are half-integers: the
/// coefficient of t^(k/2) sits at key k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JonesT {
    pub half_powers: Laurent,
}

impl JonesT {
    pub fn from_q(p: &Laurent) -> JonesT {
        JonesT {
            half_powers: p.negate_variable(),
        }
    }
}

impl fmt::Display for JonesT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_powers.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.half_powers.terms().enumerate() {
            let neg = c < &rat(0);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let c_abs = if neg { -c.clone() } else { c.clone() };
            let unit = c_abs == rat(1);
            if e == 0 {
                write!(f, "{}", c_abs)?;
            } else {
                if !unit {
                    write!(f, "{}*", c_abs)?;
                }
                if e == 2 {
                    write!(f, "t")?;
                } else if e % 2 == 0 {
                    write!(f, "t^{}", e / 2)?;
                } else {
                    write!(f, "t^{}/2", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn kh(d: &OrientedDiagram) -> BigradedDims {
        khovanov_complex(d, &MinEdgeOrder).homology().unwrap()
    }

    #[test]
    fn frobenius_tables() {
        assert_eq!(frobenius_merge(true, true), Some(true));
        assert_eq!(frobenius_merge(true, false), Some(false));
        assert_eq!(frobenius_merge(false, true), Some(false));
        assert_eq!(frobenius_merge(false, false), None);
        assert_eq!(frobenius_split(true), vec![(true, false), (false, true)]);
        assert_eq!(frobenius_split(false), vec![(false, false)]);
    }

    #[test]
    fn split_then_merge_doubles() {
        // m after Delta multiplies by 2 on the high generator: both summands
        // of Delta(v+) merge back to v-... the composite sends v+ to 2 v-.
        let terms: Vec<bool> = frobenius_split(true)
            .into_iter()
            .filter_map(|(a, b)| frobenius_merge(a, b))
            .collect();
        assert_eq!(terms, vec![false, false]);
    }

    #[test]
    fn unknot_homology_is_v() {
        assert_eq!(
            kh(&catalog::unknot()),
            BigradedDims::from_pairs(&[(0, -1, 1), (0, 1, 1)])
        );
    }

    #[test]
    fn unknot_complex_shape() {
        let c = khovanov_complex(&catalog::unknot(), &MinEdgeOrder);
        assert_eq!(c.min_deg, 0);
        assert_eq!(c.dim(0), 2);
        assert!(c.verify().is_ok());
    }

    #[test]
    fn hopf_homology_matches_collapse_values() {
        assert_eq!(
            kh(&catalog::hopf()),
            BigradedDims::from_pairs(&[(0, 0, 1), (0, 2, 1), (2, 4, 1), (2, 6, 1)])
        );
    }

    #[test]
    fn hopf_complex_degree_ranges() {
        let c = khovanov_complex(&catalog::hopf(), &MinEdgeOrder);
        assert_eq!((c.min_deg, c.max_deg()), (0, 2));
        let all_q: Vec<i64> = (0..=2).flat_map(|d| c.q_degrees(d)).collect();
        assert_eq!(all_q.iter().min(), Some(&0));
        assert_eq!(all_q.iter().max(), Some(&6));
    }

    #[test]
    fn mirror_trefoil_occupies_negative_degrees() {
        let c = khovanov_complex(&catalog::mirror_trefoil(), &MinEdgeOrder);
        assert_eq!((c.min_deg, c.max_deg()), (-3, 0));
    }

    #[test]
    fn trefoil_homology() {
        // frozen from this crate's exact computation; agrees with the
        // standard tables for the right-handed trefoil
        assert_eq!(
            kh(&catalog::trefoil()),
            BigradedDims::from_pairs(&[(0, 1, 1), (0, 3, 1), (2, 5, 1), (3, 9, 1)])
        );
    }

    #[test]
    fn mirror_homology_is_reflected() {
        let t = kh(&catalog::trefoil());
        let m = kh(&catalog::mirror_trefoil());
        let reflected: BigradedDims = BigradedDims {
            dims: t.dims.iter().map(|(&(h, q), &d)| ((-h, -q), d)).collect(),
        };
        assert_eq!(m, reflected);
    }

    #[test]
    fn figure_eight_homology() {
        // frozen from this crate's exact computation; agrees with the
        // standard tables
        let expected = BigradedDims::from_pairs(&[
            (-2, -5, 1),
            (-1, -1, 1),
            (0, -1, 1),
            (0, 1, 1),
            (1, 1, 1),
            (2, 5, 1),
        ]);
        let d = catalog::figure_eight();
        assert_eq!(d.signed_crossing_counts().unwrap(), (2, 2));
        assert_eq!(kh(&d), expected);
        // amphichiral: the mirror diagram has the same table
        assert_eq!(kh(&d.mirror()), expected);
    }

    #[test]
    fn jones_figure_eight() {
        let j = jones(&catalog::figure_eight()).unwrap();
        assert_eq!(
            j,
            Laurent::from_int_terms(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)])
        );
        assert_eq!(JonesT::from_q(&j).to_string(), "t^-2 - t^-1 + 1 - t + t^2");
    }

    #[test]
    fn d_squared_zero_and_q_degree_zero_everywhere() {
        for d in [
            catalog::unknot_kink(),
            catalog::hopf(),
            catalog::trefoil(),
            catalog::mirror_trefoil(),
            catalog::solomon(),
        ] {
            let c = khovanov_complex(&d, &MinEdgeOrder);
            c.verify().unwrap();
        }
    }

    #[test]
    fn homology_is_order_invariant() {
        for d in [catalog::hopf(), catalog::trefoil(), catalog::solomon()] {
            let a = khovanov_complex(&d, &MinEdgeOrder).homology().unwrap();
            let b = khovanov_complex(&d, &ReverseMinEdgeOrder)
                .homology()
                .unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn homology_is_crossing_order_invariant() {
        assert_eq!(kh(&catalog::hopf()), kh(&catalog::hopf_reordered()));
    }

    #[test]
    fn same_link_same_homology() {
        assert_eq!(kh(&catalog::unknot()), kh(&catalog::unknot_kink()));
    }

    #[test]
    fn euler_characteristic_of_chains_equals_homology() {
        for d in [catalog::hopf(), catalog::trefoil(), catalog::solomon()] {
            let c = khovanov_complex(&d, &MinEdgeOrder);
            let chain_chi = c.euler_characteristic();
            let hom_chi = c.homology().unwrap().euler();
            assert_eq!(chain_chi, hom_chi);
        }
    }

    #[test]
    fn jones_unknot_is_one() {
        assert_eq!(jones(&catalog::unknot()).unwrap(), Laurent::one());
    }

    #[test]
    fn jones_hopf() {
        assert_eq!(
            jones(&catalog::hopf()).unwrap(),
            Laurent::from_int_terms(&[(1, 1), (5, 1)])
        );
    }

    #[test]
    fn jones_trefoil_in_t() {
        let j = jones(&catalog::trefoil()).unwrap();
        assert_eq!(j, Laurent::from_int_terms(&[(2, 1), (6, 1), (8, -1)]));
        let t = JonesT::from_q(&j);
        assert_eq!(t.to_string(), "t + t^3 - t^4");
    }

    #[test]
    fn jones_hopf_in_t_has_half_powers() {
        let j = jones(&catalog::hopf()).unwrap();
        assert_eq!(JonesT::from_q(&j).to_string(), "-t^1/2 - t^5/2");
    }

    #[test]
    fn jones_rejects_empty_diagram() {
        let empty = OrientedDiagram::default();
        assert_eq!(jones(&empty), Err(ComplexError::EmptyDiagram));
    }

    #[test]
    fn solomon_homology() {
        assert_eq!(
            kh(&catalog::solomon()),
            BigradedDims::from_pairs(&[
                (0, 0, 1),
                (0, 2, 1),
                (1, 2, 1),
                (2, 6, 1),
                (4, 8, 1),
                (4, 10, 1)
            ])
        );
    }

    #[test]
    fn jones_solomon() {
        assert_eq!(
            jones(&catalog::solomon()).unwrap(),
            Laurent::from_int_terms(&[(1, 1), (3, -1), (5, 1), (9, 1)])
        );
    }

    #[test]
    fn representatives_are_cycles_and_independent() {
        let c = khovanov_complex(&catalog::hopf(), &MinEdgeOrder);
        for deg in 0..=2 {
            for q in c.q_degrees(deg) {
                let reps = c.homology_representatives(deg, q);
                assert_eq!(reps.len(), c.homology().unwrap().get(deg, q));
                let d = c.diff(deg);
                for r in &reps {
                    assert!(d.apply(r).iter().all(num_traits::Zero::is_zero));
                }
            }
        }
    }

    #[test]
    fn rank_transpose_on_cube_differential() {
        // the first differential of the trefoil cube: rank via two
        // independent elimination orderings (rows vs columns)
        let c = khovanov_complex(&catalog::trefoil(), &MinEdgeOrder);
        let d0 = c.diff(0);
        assert_eq!(d0.rank(), d0.transpose().rank());
    }
}
