//! List assignments and their canonical patterns.
//!
//! A q-assignment gives every vertex a set of exactly q colors. Packing
//! counts are invariant under relabeling the colors, so an assignment is
//! characterized by how many colors have each possible membership set of
//! vertices. That multiplicity map is a [`PatternAssignment`]; enumerating
//! all patterns exhausts the assignment space up to color relabeling.

use crate::graph::Graph;
use itertools::Itertools;
use std::collections::BTreeMap;
use thiserror::Error;

/// Hard cap on enumerated patterns when the caller does not pick one.
pub const DEFAULT_PATTERN_BUDGET: usize = 10_000_000;

/// Pattern enumeration builds the list of nonempty vertex subsets up front,
/// so it is only offered for graphs this small.
pub const MAX_PATTERN_VERTICES: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssignError {
    #[error("lists must be nonempty")]
    ZeroListSize,
    #[error("vertex {vertex} has {got} colors, expected {expected}")]
    NonUniform {
        vertex: usize,
        expected: usize,
        got: usize,
    },
    #[error("vertex {vertex} repeats a color in its list")]
    DuplicateColor { vertex: usize },
    #[error("a packing of size {k} needs k distinct colors per vertex, but lists have only {q}")]
    TooManyLayers { k: usize, q: usize },
    #[error("packing size must be at least 1")]
    ZeroLayers,
    #[error("pattern is over {expected} vertices but the graph has {got}")]
    GraphMismatch { expected: usize, got: usize },
    #[error("pattern multiplicities around vertex {vertex} sum to {got}, expected {expected}")]
    InvariantViolated {
        vertex: usize,
        expected: usize,
        got: usize,
    },
    #[error("pattern operations support at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("pattern budget of {budget} exhausted before the space was covered")]
    BudgetExceeded { budget: usize },
}

/// A q-assignment: one sorted set of exactly `q` colors per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    q: usize,
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    /// Validates uniform list size and absence of repeated colors; lists are
    /// stored sorted.
    pub fn new(lists: Vec<Vec<u32>>) -> Result<ListAssignment, AssignError> {
        let q = lists.first().map_or(0, |l| l.len());
        if q == 0 {
            return Err(AssignError::ZeroListSize);
        }
        let mut sorted = Vec::with_capacity(lists.len());
        for (v, list) in lists.into_iter().enumerate() {
            if list.len() != q {
                return Err(AssignError::NonUniform {
                    vertex: v,
                    expected: q,
                    got: list.len(),
                });
            }
            let mut list = list;
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(AssignError::DuplicateColor { vertex: v });
            }
            sorted.push(list);
        }
        Ok(ListAssignment { q, lists: sorted })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n_vertices(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<u32>] {
        &self.lists
    }
}

/// The assignment giving `{0, …, q-1}` to every vertex.
pub fn constant_assignment(g: &Graph, q: usize) -> ListAssignment {
    assert!(q >= 1, "constant assignment needs q >= 1");
    let list: Vec<u32> = (0..q as u32).collect();
    ListAssignment {
        q,
        lists: vec![list; g.n()],
    }
}

/// Copies each vertex's list onto all `k` layers of the product with `K_k`,
/// using the row-major product indexing. Rejected when `k` exceeds the list
/// size, since no packing of that size can exist.
pub fn lift_assignment(l: &ListAssignment, k: usize) -> Result<ListAssignment, AssignError> {
    if k == 0 {
        return Err(AssignError::ZeroLayers);
    }
    if k > l.q() {
        return Err(AssignError::TooManyLayers { k, q: l.q() });
    }
    let mut lists = Vec::with_capacity(l.n_vertices() * k);
    for v in 0..l.n_vertices() {
        for _ in 0..k {
            lists.push(l.list(v).to_vec());
        }
    }
    Ok(ListAssignment { q: l.q(), lists })
}

/// The color-relabeling class of a q-assignment: for each nonempty vertex
/// subset (as a bitmask), how many colors have exactly that membership set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternAssignment {
    n: usize,
    q: usize,
    multiplicity: BTreeMap<u64, usize>,
}

impl PatternAssignment {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Nonzero multiplicities keyed by membership bitmask.
    pub fn multiplicities(&self) -> &BTreeMap<u64, usize> {
        &self.multiplicity
    }

    /// The pattern with all `q` colors shared by every vertex.
    pub fn constant(n: usize, q: usize) -> PatternAssignment {
        assert!(n >= 1 && n <= 64 && q >= 1);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        PatternAssignment {
            n,
            q,
            multiplicity: BTreeMap::from([(full, q)]),
        }
    }

    /// Entries as (sorted vertex list, multiplicity) in the fixed subset
    /// order — by size, then lexicographically — for serialization.
    pub fn ordered_entries(&self) -> Vec<(Vec<usize>, usize)> {
        let mut entries: Vec<(Vec<usize>, usize)> = self
            .multiplicity
            .iter()
            .map(|(&mask, &m)| {
                let vertices: Vec<usize> = (0..self.n).filter(|&v| mask & (1 << v) != 0).collect();
                (vertices, m)
            })
            .collect();
        entries.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        entries
    }

    fn check_invariant(&self) -> Result<(), AssignError> {
        for v in 0..self.n {
            let got: usize = self
                .multiplicity
                .iter()
                .filter(|(mask, _)| *mask & (1 << v) != 0)
                .map(|(_, m)| m)
                .sum();
            if got != self.q {
                return Err(AssignError::InvariantViolated {
                    vertex: v,
                    expected: self.q,
                    got,
                });
            }
        }
        Ok(())
    }
}

/// Nonempty subsets of `0..n` in the fixed enumeration order: by size, then
/// lexicographically on the sorted vertex list.
pub(crate) fn subsets_in_order(n: usize) -> Vec<u64> {
    let mut subsets = Vec::with_capacity((1usize << n) - 1);
    for size in 1..=n {
        for combo in (0..n).combinations(size) {
            let mask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            subsets.push(mask);
        }
    }
    subsets
}

/// Collapses an assignment to its pattern: colors become anonymous, only
/// their membership sets count. Color-relabeled assignments map to equal
/// patterns.
pub fn canonical_pattern(l: &ListAssignment) -> Result<PatternAssignment, AssignError> {
    let n = l.n_vertices();
    if n > 64 {
        return Err(AssignError::TooManyVertices { n, max: 64 });
    }
    let mut membership: BTreeMap<u32, u64> = BTreeMap::new();
    for v in 0..n {
        for &c in l.list(v) {
            *membership.entry(c).or_insert(0) |= 1 << v;
        }
    }
    let mut multiplicity: BTreeMap<u64, usize> = BTreeMap::new();
    for mask in membership.into_values() {
        *multiplicity.entry(mask).or_insert(0) += 1;
    }
    Ok(PatternAssignment {
        n,
        q: l.q(),
        multiplicity,
    })
}

/// Produces a concrete assignment in the pattern's class, using fresh colors
/// `0, 1, 2, …` allocated subset-by-subset in the fixed enumeration order.
/// Round-trips: `canonical_pattern(realize_pattern(p, g)) == p`.
pub fn realize_pattern(p: &PatternAssignment, g: &Graph) -> Result<ListAssignment, AssignError> {
    if p.n != g.n() {
        return Err(AssignError::GraphMismatch {
            expected: p.n,
            got: g.n(),
        });
    }
    p.check_invariant()?;
    let mut lists = vec![Vec::with_capacity(p.q); p.n];
    let mut next_color = 0u32;
    for mask in subsets_in_order(p.n) {
        let Some(&m) = p.multiplicity.get(&mask) else {
            continue;
        };
        for _ in 0..m {
            for (v, list) in lists.iter_mut().enumerate() {
                if mask & (1 << v) != 0 {
                    list.push(next_color);
                }
            }
            next_color += 1;
        }
    }
    // colors were handed out in increasing order, so lists are already
    // sorted and duplicate-free
    Ok(ListAssignment { q: p.q, lists })
}

/// Streams every pattern for `(G, q)` exactly once, in lexicographic order
/// of the multiplicity vector over the fixed subset order. Exhausting the
/// budget yields one final `Err` rather than stopping silently.
pub fn enumerate_patterns(g: &Graph, q: usize, budget: usize) -> Result<PatternIter, AssignError> {
    let n = g.n();
    if n > MAX_PATTERN_VERTICES {
        return Err(AssignError::TooManyVertices {
            n,
            max: MAX_PATTERN_VERTICES,
        });
    }
    if q == 0 {
        return Err(AssignError::ZeroListSize);
    }
    let subsets = subsets_in_order(n);
    let members: Vec<Vec<usize>> = subsets
        .iter()
        .map(|&mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
        .collect();
    Ok(PatternIter {
        n,
        q,
        budget,
        yielded: 0,
        subsets,
        members,
        choice: Vec::new(),
        remaining: vec![q; n],
        exhausted: false,
    })
}

/// Depth-first enumeration over multiplicity vectors; `choice` holds the
/// values fixed so far, one per subset prefix.
pub struct PatternIter {
    n: usize,
    q: usize,
    budget: usize,
    yielded: usize,
    subsets: Vec<u64>,
    members: Vec<Vec<usize>>,
    choice: Vec<usize>,
    remaining: Vec<usize>,
    exhausted: bool,
}

impl PatternIter {
    /// Patterns yielded so far.
    pub fn yielded(&self) -> usize {
        self.yielded
    }

    fn cap_at(&self, depth: usize) -> usize {
        self.members[depth]
            .iter()
            .map(|&v| self.remaining[v])
            .min()
            .expect("subsets are nonempty")
    }

    /// Pushes zeros (or the forced value on the last subset) until a full
    /// vector is reached. Returns false when the current branch is dead.
    fn descend(&mut self) -> bool {
        while self.choice.len() < self.subsets.len() {
            let depth = self.choice.len();
            if depth == self.subsets.len() - 1 {
                // the final subset is all of V, so it must absorb the same
                // remainder from every vertex
                let need = self.remaining[0];
                if self.remaining.iter().any(|&r| r != need) {
                    return false;
                }
                self.apply(depth, need);
            } else {
                self.apply(depth, 0);
            }
        }
        true
    }

    fn apply(&mut self, depth: usize, m: usize) {
        debug_assert_eq!(depth, self.choice.len());
        for &v in &self.members[depth] {
            self.remaining[v] -= m;
        }
        self.choice.push(m);
    }

    fn unapply(&mut self) -> usize {
        let m = self.choice.pop().expect("unapply with empty choice");
        let depth = self.choice.len();
        for &v in &self.members[depth] {
            self.remaining[v] += m;
        }
        m
    }

    /// Backtracks to the deepest position whose value can be bumped, bumps
    /// it, and returns true; false when the space is exhausted.
    fn advance(&mut self) -> bool {
        while !self.choice.is_empty() {
            let m = self.unapply();
            let depth = self.choice.len();
            if depth == self.subsets.len() - 1 {
                continue; // the last subset's value is forced, never bumped
            }
            if m < self.cap_at(depth) {
                self.apply(depth, m + 1);
                return true;
            }
        }
        false
    }

    fn current_pattern(&self) -> PatternAssignment {
        let multiplicity: BTreeMap<u64, usize> = self
            .subsets
            .iter()
            .zip(&self.choice)
            .filter(|(_, &m)| m > 0)
            .map(|(&mask, &m)| (mask, m))
            .collect();
        PatternAssignment {
            n: self.n,
            q: self.q,
            multiplicity,
        }
    }
}

impl Iterator for PatternIter {
    type Item = Result<PatternAssignment, AssignError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        // resume: if a solution was already emitted, move past it first
        let mut live = if self.choice.is_empty() {
            true
        } else {
            self.advance()
        };
        while live {
            if self.descend() {
                if self.yielded == self.budget {
                    self.exhausted = true;
                    return Some(Err(AssignError::BudgetExceeded {
                        budget: self.budget,
                    }));
                }
                self.yielded += 1;
                return Some(Ok(self.current_pattern()));
            }
            live = self.advance();
        }
        self.exhausted = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, generate_named, Family};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k2() -> Graph {
        build_graph(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn list_assignment_validation() {
        assert_eq!(ListAssignment::new(vec![]), Err(AssignError::ZeroListSize));
        assert_eq!(
            ListAssignment::new(vec![vec![0, 1], vec![2]]),
            Err(AssignError::NonUniform {
                vertex: 1,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            ListAssignment::new(vec![vec![1, 1]]),
            Err(AssignError::DuplicateColor { vertex: 0 })
        );
        let l = ListAssignment::new(vec![vec![2, 0], vec![1, 3]]).unwrap();
        assert_eq!(l.list(0), &[0, 2]);
        assert_eq!(l.q(), 2);
    }

    #[test]
    fn constant_assignment_examples() {
        let l = constant_assignment(&k2(), 3);
        assert_eq!(l.list(0), &[0, 1, 2]);
        assert_eq!(l.list(1), &[0, 1, 2]);
        let k1 = build_graph(1, &[]).unwrap();
        assert_eq!(constant_assignment(&k1, 1).list(0), &[0]);
        let c4 = generate_named(Family::Cycle { n: 4 }).unwrap();
        let l = constant_assignment(&c4, 2);
        assert!((0..4).all(|v| l.list(v) == [0, 1]));
    }

    #[test]
    fn lift_examples() {
        let l = constant_assignment(&k2(), 3);
        let lifted = lift_assignment(&l, 2).unwrap();
        assert_eq!(lifted.n_vertices(), 4);
        assert!((0..4).all(|v| lifted.list(v) == [0, 1, 2]));

        let l = ListAssignment::new(vec![vec![0, 1], vec![1, 2]]).unwrap();
        let lifted = lift_assignment(&l, 2).unwrap();
        assert_eq!(lifted.list(0), &[0, 1]);
        assert_eq!(lifted.list(1), &[0, 1]);
        assert_eq!(lifted.list(2), &[1, 2]);
        assert_eq!(lifted.list(3), &[1, 2]);

        assert_eq!(lift_assignment(&l, 1).unwrap(), l);
        assert_eq!(
            lift_assignment(&l, 3),
            Err(AssignError::TooManyLayers { k: 3, q: 2 })
        );
    }

    #[test]
    fn canonical_pattern_examples() {
        let l = ListAssignment::new(vec![vec![0, 1], vec![1, 2]]).unwrap();
        let p = canonical_pattern(&l).unwrap();
        // color 0 lives only at x, color 2 only at y, color 1 at both
        let expect: BTreeMap<u64, usize> = BTreeMap::from([(0b01, 1), (0b10, 1), (0b11, 1)]);
        assert_eq!(p.multiplicities(), &expect);

        let constant = canonical_pattern(&constant_assignment(&k2(), 3)).unwrap();
        assert_eq!(constant, PatternAssignment::constant(2, 3));
    }

    #[test]
    fn pattern_invariant_checked_on_realize() {
        let bad = PatternAssignment {
            n: 2,
            q: 2,
            multiplicity: BTreeMap::from([(0b01, 2), (0b10, 1)]),
        };
        assert_eq!(
            realize_pattern(&bad, &k2()),
            Err(AssignError::InvariantViolated {
                vertex: 1,
                expected: 2,
                got: 1
            })
        );
        let p = PatternAssignment::constant(3, 2);
        assert!(matches!(
            realize_pattern(&p, &k2()),
            Err(AssignError::GraphMismatch { .. })
        ));
    }

    #[test]
    fn realize_disjoint_lists() {
        let p = PatternAssignment {
            n: 2,
            q: 3,
            multiplicity: BTreeMap::from([(0b01, 3), (0b10, 3)]),
        };
        let l = realize_pattern(&p, &k2()).unwrap();
        assert_eq!(l.list(0), &[0, 1, 2]);
        assert_eq!(l.list(1), &[3, 4, 5]);
    }

    #[test]
    fn enumeration_counts() {
        let k1 = build_graph(1, &[]).unwrap();
        for q in 1..=4 {
            let pats: Vec<_> = enumerate_patterns(&k1, q, 100)
                .unwrap()
                .map(Result::unwrap)
                .collect();
            assert_eq!(pats.len(), 1);
            assert_eq!(pats[0], PatternAssignment::constant(1, q));
        }
        // K2 with q lists: patterns are indexed by the shared multiplicity
        for q in 1..=3 {
            let pats: Vec<_> = enumerate_patterns(&k2(), q, 100)
                .unwrap()
                .map(Result::unwrap)
                .collect();
            assert_eq!(pats.len(), q + 1);
        }
    }

    #[test]
    fn enumeration_is_lexicographic_and_starts_constant() {
        let pats: Vec<_> = enumerate_patterns(&k2(), 3, 100)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        // first pattern: all mass on the full subset (vector 0,0,3)
        assert_eq!(pats[0], PatternAssignment::constant(2, 3));
        // multiplicity vectors over ({x},{y},{xy}) ascend lexicographically
        let vectors: Vec<[usize; 3]> = pats
            .iter()
            .map(|p| {
                let m = |mask: u64| p.multiplicities().get(&mask).copied().unwrap_or(0);
                [m(0b01), m(0b10), m(0b11)]
            })
            .collect();
        let mut sorted = vectors.clone();
        sorted.sort();
        assert_eq!(vectors, sorted);
        assert_eq!(vectors[0], [0, 0, 3]);
        assert_eq!(vectors.last(), Some(&[3, 3, 0]));
    }

    #[test]
    fn enumeration_budget_is_explicit() {
        let mut it = enumerate_patterns(&k2(), 3, 2).unwrap();
        assert!(it.next().unwrap().is_ok());
        assert!(it.next().unwrap().is_ok());
        assert_eq!(
            it.next().unwrap(),
            Err(AssignError::BudgetExceeded { budget: 2 })
        );
        assert!(it.next().is_none());
    }

    #[test]
    fn enumeration_matches_brute_force_solutions() {
        // count solutions of the vertex-sum system independently
        fn brute(n: usize, q: usize) -> usize {
            let subsets = subsets_in_order(n);
            let mut count = 0;
            let mut m = vec![0usize; subsets.len()];
            fn rec(
                i: usize,
                subsets: &[u64],
                m: &mut Vec<usize>,
                n: usize,
                q: usize,
                count: &mut usize,
            ) {
                if i == subsets.len() {
                    let ok = (0..n).all(|v| {
                        subsets
                            .iter()
                            .zip(m.iter())
                            .filter(|(s, _)| *s & (1 << v) != 0)
                            .map(|(_, &mv)| mv)
                            .sum::<usize>()
                            == q
                    });
                    if ok {
                        *count += 1;
                    }
                    return;
                }
                for val in 0..=q {
                    m[i] = val;
                    rec(i + 1, subsets, m, n, q, count);
                }
                m[i] = 0;
            }
            rec(0, &subsets, &mut m, n, q, &mut count);
            count
        }

        let p3 = generate_named(Family::Path { n: 3 }).unwrap();
        let enumerated = enumerate_patterns(&p3, 2, 100_000)
            .unwrap()
            .map(Result::unwrap)
            .count();
        assert_eq!(enumerated, brute(3, 2));

        let enumerated = enumerate_patterns(&p3, 3, 100_000)
            .unwrap()
            .map(Result::unwrap)
            .count();
        assert_eq!(enumerated, brute(3, 3));
        assert_eq!(enumerated, 39);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let p3 = generate_named(Family::Path { n: 3 }).unwrap();
        let pats: Vec<_> = enumerate_patterns(&p3, 3, 100_000)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        for (i, a) in pats.iter().enumerate() {
            for b in &pats[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    fn arbitrary_assignment(n: usize, q: usize, universe: u32, seed: u64) -> ListAssignment {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists = (0..n)
            .map(|_| {
                let mut all: Vec<u32> = (0..universe).collect();
                all.shuffle(&mut rng);
                all.truncate(q);
                all
            })
            .collect();
        ListAssignment::new(lists).unwrap()
    }

    proptest! {
        #[test]
        fn pattern_round_trip(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=4usize);
            let q = rng.gen_range(1..=3usize);
            let g = generate_named(Family::RandomGraph { n, seed }).unwrap();
            for (i, p) in enumerate_patterns(&g, q, 100_000).unwrap().enumerate() {
                let p = p.unwrap();
                let l = realize_pattern(&p, &g).unwrap();
                prop_assert_eq!(canonical_pattern(&l).unwrap(), p);
                if i > 2000 { break; }
            }
        }

        #[test]
        fn relabeling_colors_preserves_pattern(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcdef);
            let n = rng.gen_range(1..=5usize);
            let q = rng.gen_range(1..=3usize);
            let universe = 8u32;
            let l = arbitrary_assignment(n, q, universe, seed);
            // random bijection on the color universe
            let mut relabel: Vec<u32> = (0..universe).collect();
            relabel.shuffle(&mut rng);
            let relabeled = ListAssignment::new(
                l.lists()
                    .iter()
                    .map(|list| list.iter().map(|&c| relabel[c as usize]).collect())
                    .collect(),
            )
            .unwrap();
            prop_assert_eq!(
                canonical_pattern(&l).unwrap(),
                canonical_pattern(&relabeled).unwrap()
            );
        }
    }
}
