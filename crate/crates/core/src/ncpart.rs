//! Set partitions of {1..n}, the non-crossing predicate, the lattice
//! operations meet and join, enumeration of the non-crossing family, and the
//! dihedral action on labels.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("ground sets differ: {0} vs {1}")]
    MismatchedGroundSet(usize, usize),
    #[error("partition is not non-crossing: {0}")]
    CrossingPartition(String),
}

/// A partition of {1..n} into disjoint nonempty blocks.
///
/// Canonical form: blocks sorted by their minimum element, elements sorted
/// within each block. Constructors re-canonicalize, so equality and ordering
/// are structural.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Build from blocks; panics if the blocks do not partition {1..n}.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for b in &blocks {
            assert!(!b.is_empty(), "empty block");
            for &x in b {
                assert!(x >= 1 && x <= n, "element {} out of range 1..{}", x, n);
                assert!(!seen[x], "element {} repeated", x);
                seen[x] = true;
                count += 1;
            }
        }
        assert_eq!(count, n, "blocks do not cover the ground set");
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    /// Build from a block-index array: `assign[i]` identifies the block of
    /// element i+1 (indices need not be contiguous).
    pub fn from_assignment(assign: &[usize]) -> Self {
        let n = assign.len();
        let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (i, &b) in assign.iter().enumerate() {
            blocks.entry(b).or_default().push(i + 1);
        }
        SetPartition::new(n, blocks.into_values().collect())
    }

    /// The partition into singletons {{1},...,{n}}.
    pub fn finest(n: usize) -> Self {
        SetPartition::new(n, (1..=n).map(|i| vec![i]).collect())
    }

    /// The one-block partition {{1,...,n}}.
    pub fn coarsest(n: usize) -> Self {
        if n == 0 {
            return SetPartition::empty();
        }
        SetPartition::new(n, vec![(1..=n).collect()])
    }

    /// The unique partition of the empty set.
    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Number of blocks, written |A| throughout.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block index of each element, as a restricted-growth string (block ids
    /// numbered by first appearance). This is the canonical encoding used for
    /// the enumeration order.
    pub fn rgs(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                out[x - 1] = bi;
            }
        }
        out
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.blocks.iter().any(|b| b.contains(&i) && b.contains(&j))
    }

    /// The chord-crossing test: a partition is non-crossing when no indices
    /// a < b < c < d have a,c in one block and b,d in a different one.
    pub fn is_noncrossing(&self) -> bool {
        let assign = self.rgs();
        let n = self.n;
        for a in 0..n {
            for b in (a + 1)..n {
                if assign[b] == assign[a] {
                    continue;
                }
                for c in (b + 1)..n {
                    if assign[c] != assign[a] {
                        continue;
                    }
                    for d in (c + 1)..n {
                        if assign[d] == assign[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Common refinement (the lattice meet): blocks are the nonempty pairwise
    /// intersections.
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition, PartitionError> {
        if self.n != other.n {
            return Err(PartitionError::MismatchedGroundSet(self.n, other.n));
        }
        let a = self.rgs();
        let b = other.rgs();
        let mut ids: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        let mut assign = vec![0; self.n];
        for i in 0..self.n {
            let next = ids.len();
            let id = *ids.entry((a[i], b[i])).or_insert(next);
            assign[i] = id;
        }
        Ok(if self.n == 0 {
            SetPartition::empty()
        } else {
            SetPartition::from_assignment(&assign)
        })
    }

    /// Coarsest common coarsening (the lattice join), via union-find over the
    /// combined blocks.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition, PartitionError> {
        if self.n != other.n {
            return Err(PartitionError::MismatchedGroundSet(self.n, other.n));
        }
        let mut uf = UnionFind::new(self.n);
        for p in [self, other] {
            for b in &p.blocks {
                for w in b.windows(2) {
                    uf.union(w[0] - 1, w[1] - 1);
                }
            }
        }
        Ok(if self.n == 0 {
            SetPartition::empty()
        } else {
            SetPartition::from_assignment(&uf.assignment())
        })
    }

    /// True when `self` refines `other` (every block sits inside a block of
    /// `other`).
    pub fn refines(&self, other: &SetPartition) -> bool {
        assert_eq!(self.n, other.n);
        let o = other.rgs();
        self.blocks
            .iter()
            .all(|b| b.windows(2).all(|w| o[w[0] - 1] == o[w[1] - 1]))
    }

    /// Relabel by a rotation (i -> i + r mod n) and optional reflection
    /// (i -> n + 1 - i, applied first).
    pub fn dihedral_act(&self, rotation: usize, reflect: bool) -> SetPartition {
        if self.n == 0 {
            return SetPartition::empty();
        }
        let n = self.n;
        let map = |x: usize| -> usize {
            let x = if reflect { n + 1 - x } else { x };
            (x - 1 + rotation) % n + 1
        };
        SetPartition::new(
            n,
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&x| map(x)).collect())
                .collect(),
        )
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 0 {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
        }
        write!(f, "}}")
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb.max(ra)] = ra.min(rb);
        }
    }

    fn assignment(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|i| self.find(i)).collect()
    }
}

/// All partitions of {1..n}, in lexicographic order of their
/// restricted-growth strings. n = 0 yields the single empty partition.
pub fn enumerate_all(n: usize) -> Vec<SetPartition> {
    if n == 0 {
        return vec![SetPartition::empty()];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        out.push(SetPartition::from_assignment(&rgs));
        // next restricted-growth string in lexicographic order
        let mut i = n;
        loop {
            if i == 1 {
                return out;
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for x in rgs.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// All non-crossing partitions of {1..n}, in the canonical enumeration order.
/// The count is the n-th Catalan number.
pub fn enumerate_nc(n: usize) -> Vec<SetPartition> {
    enumerate_all(n)
        .into_iter()
        .filter(SetPartition::is_noncrossing)
        .collect()
}

/// Position of a non-crossing partition in the canonical order.
pub fn nc_index(list: &[SetPartition], p: &SetPartition) -> usize {
    list.iter()
        .position(|q| q == p)
        .expect("partition not in the non-crossing family")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect())
    }

    /// Independent count oracle: Catalan numbers by the convolution
    /// recurrence C(0)=1, C(n+1) = sum C(i) C(n-i).
    fn catalan(n: usize) -> u64 {
        let mut c = vec![0u64; n + 1];
        c[0] = 1;
        for m in 1..=n {
            c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
        }
        c[n]
    }

    /// Independent count oracle for all partitions: Bell numbers via the
    /// Bell triangle.
    fn bell(n: usize) -> u64 {
        let mut row = vec![1u64];
        for _ in 0..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                let last = *next.last().unwrap();
                next.push(last + x);
            }
            row = next;
        }
        row[0]
    }

    #[test]
    fn crossing_detection() {
        assert!(!sp(4, &[&[1, 3], &[2, 4]]).is_noncrossing());
        assert!(sp(4, &[&[1, 4], &[2, 3]]).is_noncrossing());
        assert!(sp(4, &[&[1, 2], &[3, 4]]).is_noncrossing());
    }

    #[test]
    fn meet_units() {
        for p in enumerate_all(4) {
            assert_eq!(p.meet(&SetPartition::coarsest(4)).unwrap(), p);
            assert_eq!(
                p.meet(&SetPartition::finest(4)).unwrap(),
                SetPartition::finest(4)
            );
        }
    }

    #[test]
    fn join_units() {
        for p in enumerate_all(4) {
            assert_eq!(p.join(&SetPartition::finest(4)).unwrap(), p);
            assert_eq!(
                p.join(&SetPartition::coarsest(4)).unwrap(),
                SetPartition::coarsest(4)
            );
        }
    }

    #[test]
    fn meet_is_common_refinement() {
        let a = sp(3, &[&[1, 2], &[3]]);
        let b = sp(3, &[&[1], &[2, 3]]);
        let m = a.meet(&b).unwrap();
        assert_eq!(m, SetPartition::finest(3));
        // brute force: the meet is the maximum over all partitions refining both
        let best = enumerate_all(3)
            .into_iter()
            .filter(|c| c.refines(&a) && c.refines(&b))
            .max_by_key(|c| c.block_count() as i64 * -1_i64)
            .unwrap();
        // maximum in refinement order = fewest blocks among common refinements
        assert_eq!(m, best);
    }

    #[test]
    fn join_of_crossing_chords_leaves_nc() {
        // union-find oracle: {1,3} and {2,4} stay separate blocks, and the
        // resulting partition is crossing, so NC_4 is not closed under join
        let a = sp(4, &[&[1, 3], &[2], &[4]]);
        let b = sp(4, &[&[2, 4], &[1], &[3]]);
        assert!(a.is_noncrossing() && b.is_noncrossing());
        let j = a.join(&b).unwrap();
        assert_eq!(j, sp(4, &[&[1, 3], &[2, 4]]));
        assert!(!j.is_noncrossing());
    }

    #[test]
    fn join_matches_union_find_oracle() {
        // independent oracle: repeated pairwise merging until stable
        for a in enumerate_all(4) {
            for b in enumerate_all(4) {
                let j = a.join(&b).unwrap();
                // oracle: smallest-block-count partition coarsening both
                assert!(a.refines(&j) && b.refines(&j));
                for c in enumerate_all(4) {
                    if a.refines(&c) && b.refines(&c) {
                        assert!(j.refines(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn nc_counts_match_catalan() {
        for n in 0..=6 {
            let expected = if n == 0 { 1 } else { catalan(n) };
            assert_eq!(enumerate_nc(n).len() as u64, expected, "n = {}", n);
        }
        assert_eq!(
            (1..=6).map(|n| catalan(n)).collect::<Vec<_>>(),
            vec![1, 2, 5, 14, 42, 132]
        );
    }

    #[test]
    fn all_partition_counts_match_bell() {
        for n in 1..=6 {
            assert_eq!(enumerate_all(n).len() as u64, bell(n), "n = {}", n);
        }
    }

    #[test]
    fn nc_two_is_full_and_trivial() {
        let nc = enumerate_nc(2);
        assert_eq!(nc.len(), 2);
        assert!(nc.contains(&SetPartition::finest(2)));
        assert!(nc.contains(&SetPartition::coarsest(2)));
    }

    #[test]
    fn nc_four_has_fourteen() {
        let all = enumerate_all(4);
        assert_eq!(all.len(), 15);
        assert_eq!(enumerate_nc(4).len(), 14);
    }

    #[test]
    fn dihedral_identity_and_shift() {
        let p = sp(3, &[&[1, 2], &[3]]);
        assert_eq!(p.dihedral_act(0, false), p);
        assert_eq!(p.dihedral_act(1, false), sp(3, &[&[2, 3], &[1]]));
    }

    #[test]
    fn nc_closed_under_dihedral_action() {
        for n in 1..=5 {
            let nc = enumerate_nc(n);
            for p in &nc {
                for r in 0..n {
                    for refl in [false, true] {
                        let q = p.dihedral_act(r, refl);
                        assert!(nc.contains(&q), "n={} p={} r={} refl={}", n, p, r, refl);
                    }
                }
            }
        }
    }

    #[test]
    fn nc_closed_under_meet() {
        for n in 1..=5 {
            let nc = enumerate_nc(n);
            for a in &nc {
                for b in &nc {
                    assert!(a.meet(b).unwrap().is_noncrossing());
                }
            }
        }
    }

    #[test]
    fn lattice_laws_on_small_ground_sets() {
        for n in [4, 5] {
            let all = enumerate_all(n);
            // idempotence and commutativity, exhaustively on pairs
            for a in &all {
                assert_eq!(a.meet(a).unwrap(), *a);
                assert_eq!(a.join(a).unwrap(), *a);
                for b in &all {
                    assert_eq!(a.meet(b).unwrap(), b.meet(a).unwrap());
                    assert_eq!(a.join(b).unwrap(), b.join(a).unwrap());
                    // absorption
                    assert_eq!(a.meet(&a.join(b).unwrap()).unwrap(), *a);
                    assert_eq!(a.join(&a.meet(b).unwrap()).unwrap(), *a);
                }
            }
        }
    }

    #[test]
    fn associativity_on_sampled_triples() {
        let all = enumerate_all(4);
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                for (k, c) in all.iter().enumerate() {
                    if (i + j + k) % 3 != 0 {
                        continue; // deterministic thinning, still hundreds of triples
                    }
                    assert_eq!(
                        a.meet(&b.meet(c).unwrap()).unwrap(),
                        a.meet(b).unwrap().meet(c).unwrap()
                    );
                    assert_eq!(
                        a.join(&b.join(c).unwrap()).unwrap(),
                        a.join(b).unwrap().join(c).unwrap()
                    );
                }
            }
        }
    }

    /// The distributive laws do not hold in the full partition lattice; the
    /// checker must find the classical counterexample on a 3-set, and nothing
    /// in this crate may rely on distributivity.
    #[test]
    fn distributivity_fails_on_three_elements() {
        let a = sp(3, &[&[1, 2], &[3]]);
        let b = sp(3, &[&[1, 3], &[2]]);
        let c = sp(3, &[&[2, 3], &[1]]);
        let lhs = a.join(&b.meet(&c).unwrap()).unwrap();
        let rhs = a.join(&b).unwrap().meet(&a.join(&c).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
        assert_eq!(lhs, a);
        assert_eq!(rhs, SetPartition::coarsest(3));
        assert!(!distributivity_counterexamples(3).is_empty());
    }

    #[test]
    fn join_block_gap_is_negative_off_diagonal() {
        // |A v B| - |A ^ B| <= 0, with equality iff A = B; this is what makes
        // the splitting matrix diagonally dominant in degree.
        for n in 1..=5 {
            let all = enumerate_all(n);
            for a in &all {
                for b in &all {
                    let gap = a.join(b).unwrap().block_count() as i64
                        - a.meet(b).unwrap().block_count() as i64;
                    assert!(gap <= 0);
                    assert_eq!(gap == 0, a == b);
                }
            }
        }
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let nc = enumerate_nc(3);
        let shown: Vec<String> = nc.iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            vec!["{1,2,3}", "{1,2|3}", "{1,3|2}", "{1|2,3}", "{1|2|3}"]
        );
    }

    #[test]
    fn display_format() {
        assert_eq!(sp(4, &[&[1, 3], &[2], &[4]]).to_string(), "{1,3|2|4}");
    }
}

/// Triples violating either distributive law on the full partition lattice
/// of {1..n}. Reported by the CLI; the library itself never assumes the laws.
pub fn distributivity_counterexamples(n: usize) -> Vec<(SetPartition, SetPartition, SetPartition)> {
    let all = enumerate_all(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            for c in &all {
                let meet_join = a.meet(&b.join(c).unwrap()).unwrap();
                let join_of_meets = a.meet(b).unwrap().join(&a.meet(c).unwrap()).unwrap();
                let join_meet = a.join(&b.meet(c).unwrap()).unwrap();
                let meet_of_joins = a.join(b).unwrap().meet(&a.join(c).unwrap()).unwrap();
                if meet_join != join_of_meets || join_meet != meet_of_joins {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    out
}
