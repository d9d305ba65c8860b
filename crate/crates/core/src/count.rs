//! Exact counting engines: chromatic polynomials by memoized
//! deletion-contraction, proper list-colorings and list-packings by
//! backtracking, and the closed-form combinatorial counters (derangements,
//! fixed-point-free bijections, Latin arrays).
//!
//! Packings are counted internally as ordered tuples of pairwise-disjoint
//! colorings and converted to sets by an exact division by k!; the
//! divisibility assertion doubles as a continuous correctness check.

use crate::assign::{constant_assignment, lift_assignment, AssignError, ListAssignment};
use crate::canon::{canonical_key, CanonKey};
use crate::graph::{cartesian_with_complete, generate_named, Family, Graph, GraphError};
use crate::poly::Polynomial;
use dashmap::DashMap;
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

/// Arbitrary-precision non-negative count. No counting path uses floating
/// point or fixed-width arithmetic that could overflow.
pub type Count = BigUint;

/// Products at most this large go through the chromatic polynomial; larger
/// ones are counted by direct backtracking, which is faster than
/// deletion-contraction there and provably equal.
const POLY_ROUTE_MAX_VERTICES: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("assignment covers {got} vertices but the graph has {expected}")]
    AssignmentMismatch { expected: usize, got: usize },
    #[error("packing size must be at least 1")]
    ZeroPackingSize,
    #[error("packing size {k} exceeds list size {q}")]
    PackingExceedsListSize { k: usize, q: usize },
    #[error("internal invariant failed: {divisor} should divide ordered count {dividend} exactly")]
    InexactDivision { dividend: Count, divisor: Count },
    #[error("color sets must have equal size, got {a} and {b}")]
    SetSizeMismatch { a: usize, b: usize },
    #[error("color set has a repeated element")]
    RepeatedColor,
    #[error("invalid packing: {0}")]
    InvalidPacking(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Assign(#[from] AssignError),
}

fn ensure_assignment_matches(g: &Graph, l: &ListAssignment) -> Result<(), CountError> {
    if l.n_vertices() != g.n() {
        return Err(CountError::AssignmentMismatch {
            expected: g.n(),
            got: l.n_vertices(),
        });
    }
    Ok(())
}

/// Chromatic polynomials by deletion-contraction, memoized across calls on
/// the canonical form of each connected subproblem. Safe to share between
/// threads; concurrent duplicate computation of the same key is harmless.
#[derive(Debug, Default)]
pub struct ChromaticSolver {
    memo: DashMap<CanonKey, Polynomial>,
}

impl ChromaticSolver {
    pub fn new() -> ChromaticSolver {
        ChromaticSolver::default()
    }

    /// Number of distinct canonical subproblems solved so far.
    pub fn memo_entries(&self) -> usize {
        self.memo.len()
    }

    pub fn chromatic_polynomial(&self, g: &Graph) -> Polynomial {
        let comps = g.connected_components();
        if comps.len() == 1 {
            return self.connected(g);
        }
        let mut p = Polynomial::one();
        for comp in comps {
            p = p.mul(&self.connected(&g.induced_subgraph(&comp)));
        }
        p
    }

    fn connected(&self, g: &Graph) -> Polynomial {
        if g.is_edgeless() {
            return Polynomial::power(g.n());
        }
        if g.is_complete() {
            return Polynomial::falling_factorial(g.n());
        }
        let key = canonical_key(g);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (u, v) = select_edge(g);
        let deleted = self.chromatic_polynomial(&g.deleted(u, v));
        let contracted = self.chromatic_polynomial(&g.contracted(u, v));
        let p = deleted.sub(&contracted);
        self.memo.insert(key, p.clone());
        p
    }
}

/// Picks the edge with the largest endpoint degree sum (ties: smallest
/// pair). Dense endpoints drive subproblems toward the complete-graph base
/// case; any deterministic rule would be correct.
fn select_edge(g: &Graph) -> (usize, usize) {
    let mut best = g.edges()[0];
    let mut best_sum = g.degree(best.0) + g.degree(best.1);
    for &(u, v) in &g.edges()[1..] {
        let sum = g.degree(u) + g.degree(v);
        if sum > best_sum || (sum == best_sum && (u, v) < best) {
            best = (u, v);
            best_sum = sum;
        }
    }
    best
}

/// One-off chromatic polynomial with a private memo table. Use a shared
/// [`ChromaticSolver`] when computing many related graphs.
pub fn chromatic_polynomial(g: &Graph) -> Polynomial {
    ChromaticSolver::new().chromatic_polynomial(g)
}

/// Static vertex order for backtracking: repeatedly take the unplaced vertex
/// with the most already-placed neighbors (ties: higher degree, then lower
/// id). Keeps constraints tight early and the counts at the final level
/// computable arithmetically.
fn counting_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut placed_nb = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            if best == usize::MAX
                || (placed_nb[v], g.degree(v)) > (placed_nb[best], g.degree(best))
            {
                best = v;
            }
        }
        order.push(best);
        placed[best] = true;
        for &w in g.neighbors(best) {
            placed_nb[w] += 1;
        }
    }
    order
}

/// Positions (into `order`) of each vertex's already-placed neighbors.
fn earlier_neighbors(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let mut pos_of = vec![0usize; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        pos_of[v] = pos;
    }
    order
        .iter()
        .enumerate()
        .map(|(pos, &v)| {
            g.neighbors(v)
                .iter()
                .map(|&w| pos_of[w])
                .filter(|&p| p < pos)
                .collect()
        })
        .collect()
}

/// Exact number of proper colorings where every vertex's color comes from
/// its list. For constant `[q]` lists this equals the chromatic polynomial
/// at `q`.
pub fn count_list_colorings(g: &Graph, l: &ListAssignment) -> Result<Count, CountError> {
    ensure_assignment_matches(g, l)?;
    let n = g.n();
    let order = counting_order(g);
    let earlier = earlier_neighbors(g, &order);
    let lists: Vec<&[u32]> = order.iter().map(|&v| l.list(v)).collect();

    struct Ctx<'a> {
        lists: Vec<&'a [u32]>,
        earlier: Vec<Vec<usize>>,
        last: usize,
    }
    fn dfs(ctx: &Ctx, pos: usize, colors: &mut [u32], acc: &mut Count) {
        if pos == ctx.last {
            let mut free: u64 = 0;
            'c: for &c in ctx.lists[pos] {
                for &e in &ctx.earlier[pos] {
                    if colors[e] == c {
                        continue 'c;
                    }
                }
                free += 1;
            }
            *acc += free;
            return;
        }
        'c: for &c in ctx.lists[pos] {
            for &e in &ctx.earlier[pos] {
                if colors[e] == c {
                    continue 'c;
                }
            }
            colors[pos] = c;
            dfs(ctx, pos + 1, colors, acc);
        }
    }

    let ctx = Ctx {
        lists,
        earlier,
        last: n - 1,
    };
    let mut colors = vec![0u32; n];
    let mut acc = Count::zero();
    dfs(&ctx, 0, &mut colors, &mut acc);
    Ok(acc)
}

/// Exact number of sets of `k` pairwise-disjoint proper L-colorings, by
/// backtracking over ordered k-tuples of distinct list colors per vertex and
/// dividing the ordered total by k! (checked exact).
pub fn count_packings_direct(g: &Graph, l: &ListAssignment, k: usize) -> Result<Count, CountError> {
    ensure_assignment_matches(g, l)?;
    if k == 0 {
        return Err(CountError::ZeroPackingSize);
    }
    if k > l.q() {
        return Err(CountError::PackingExceedsListSize { k, q: l.q() });
    }
    let n = g.n();
    let order = counting_order(g);
    let earlier = earlier_neighbors(g, &order);
    // every ordered k-tuple of distinct colors from each vertex's list
    let tuples: Vec<Vec<Vec<u32>>> = order
        .iter()
        .map(|&v| {
            l.list(v)
                .iter()
                .permutations(k)
                .map(|t| t.into_iter().copied().collect())
                .collect()
        })
        .collect();

    struct Ctx {
        tuples: Vec<Vec<Vec<u32>>>,
        earlier: Vec<Vec<usize>>,
        last: usize,
    }
    fn disjoint_everywhere(a: &[u32], b: &[u32]) -> bool {
        a.iter().zip(b).all(|(x, y)| x != y)
    }
    fn dfs(ctx: &Ctx, pos: usize, chosen: &mut [usize], acc: &mut Count) {
        if pos == ctx.last {
            let mut free: u64 = 0;
            'c: for tuple in &ctx.tuples[pos] {
                for &e in &ctx.earlier[pos] {
                    if !disjoint_everywhere(tuple, &ctx.tuples[e][chosen[e]]) {
                        continue 'c;
                    }
                }
                free += 1;
            }
            *acc += free;
            return;
        }
        'c: for (i, tuple) in ctx.tuples[pos].iter().enumerate() {
            for &e in &ctx.earlier[pos] {
                if !disjoint_everywhere(tuple, &ctx.tuples[e][chosen[e]]) {
                    continue 'c;
                }
            }
            chosen[pos] = i;
            dfs(ctx, pos + 1, chosen, acc);
        }
    }

    let ctx = Ctx {
        tuples,
        earlier,
        last: n - 1,
    };
    let mut chosen = vec![0usize; n];
    let mut ordered = Count::zero();
    dfs(&ctx, 0, &mut chosen, &mut ordered);
    exact_div(ordered, &factorial(k))
}

fn exact_div(dividend: Count, divisor: &Count) -> Result<Count, CountError> {
    let (quot, rem) = dividend.div_rem(divisor);
    if !rem.is_zero() {
        return Err(CountError::InexactDivision {
            dividend,
            divisor: divisor.clone(),
        });
    }
    Ok(quot)
}

/// Counts packings through the product reduction: proper colorings of
/// `G □ K_k` under the lifted assignment, divided (exactly) by k!. Agrees
/// with [`count_packings_direct`] on every input; disagreement or an inexact
/// division signals an implementation bug.
pub fn count_packings_via_product(
    g: &Graph,
    l: &ListAssignment,
    k: usize,
) -> Result<Count, CountError> {
    ensure_assignment_matches(g, l)?;
    let lifted = lift_assignment(l, k)?;
    let h = cartesian_with_complete(g, k)?;
    let total = count_list_colorings(&h, &lifted)?;
    exact_div(total, &factorial(k))
}

/// Packing count under the constant `[q]` assignment, i.e. the number of
/// proper q-colorings of `G □ K_k` divided by k!. Small products evaluate
/// the chromatic polynomial; larger ones are counted directly (the two
/// routes agree — tested, and cheaper per instance).
pub fn classical_packing_count_with(
    solver: &ChromaticSolver,
    g: &Graph,
    q: usize,
    k: usize,
) -> Result<Count, CountError> {
    if k == 0 {
        return Err(CountError::ZeroPackingSize);
    }
    if k > q {
        return Err(CountError::PackingExceedsListSize { k, q });
    }
    let h = cartesian_with_complete(g, k)?;
    let total = if h.n() <= POLY_ROUTE_MAX_VERTICES {
        solver.chromatic_polynomial(&h).eval_unsigned(q as u64)
    } else {
        count_list_colorings(&h, &constant_assignment(&h, q))?
    };
    exact_div(total, &factorial(k))
}

/// [`classical_packing_count_with`] with a one-off memo table.
pub fn classical_packing_count(g: &Graph, q: usize, k: usize) -> Result<Count, CountError> {
    classical_packing_count_with(&ChromaticSolver::new(), g, q, k)
}

/// Number of derangements `!q`, via the recurrence
/// `!q = (q-1)(!(q-1) + !(q-2))` with `!0 = 1`, `!1 = 0`.
pub fn derangements(q: usize) -> Count {
    let mut prev2 = Count::one(); // !0
    if q == 0 {
        return prev2;
    }
    let mut prev1 = Count::zero(); // !1
    for i in 2..=q {
        let cur = (&prev1 + &prev2) * Count::from(i - 1);
        prev2 = std::mem::replace(&mut prev1, cur);
    }
    prev1
}

pub fn factorial(k: usize) -> Count {
    (1..=k).fold(Count::one(), |acc, i| acc * Count::from(i))
}

/// Bijections `A → B` with no fixed point, by inclusion-exclusion over the
/// shared colors: `Σ_j (-1)^j C(s, j) (q-j)!` where `s = |A ∩ B|`. Equals
/// `!q` when `A = B`, and never falls below it.
pub fn count_fpf_bijections(a: &[u32], b: &[u32]) -> Result<Count, CountError> {
    let sa: BTreeSet<u32> = a.iter().copied().collect();
    let sb: BTreeSet<u32> = b.iter().copied().collect();
    if sa.len() != a.len() || sb.len() != b.len() {
        return Err(CountError::RepeatedColor);
    }
    if sa.len() != sb.len() {
        return Err(CountError::SetSizeMismatch {
            a: sa.len(),
            b: sb.len(),
        });
    }
    let q = sa.len();
    let s = sa.intersection(&sb).count();
    let mut total = BigInt::zero();
    for j in 0..=s {
        let term = num_integer::binomial(BigInt::from(s), BigInt::from(j))
            * BigInt::from(factorial(q - j));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative(), "inclusion-exclusion went negative");
    Ok(total.to_biguint().expect("fpf count is non-negative"))
}

/// Number of n×k arrays over symbols `0..q` with all entries distinct within
/// each row and each column — equivalently, proper q-colorings of the rook's
/// graph `K_n □ K_k`. Zero when k > q (rows cannot be filled).
pub fn latin_array_count(n: usize, k: usize, q: usize) -> Result<Count, CountError> {
    let kn = generate_named(Family::Complete { n })?;
    let h = cartesian_with_complete(&kn, k)?;
    if q == 0 {
        return Ok(Count::zero());
    }
    count_list_colorings(&h, &constant_assignment(&h, q))
}

/// A set of `k` pairwise-disjoint proper L-colorings, validated on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    colorings: Vec<Vec<u32>>,
}

impl Packing {
    pub fn new(
        g: &Graph,
        l: &ListAssignment,
        colorings: Vec<Vec<u32>>,
    ) -> Result<Packing, CountError> {
        ensure_assignment_matches(g, l)?;
        if colorings.is_empty() {
            return Err(CountError::InvalidPacking(
                "a packing contains at least one coloring".into(),
            ));
        }
        for (i, f) in colorings.iter().enumerate() {
            if f.len() != g.n() {
                return Err(CountError::InvalidPacking(format!(
                    "coloring {i} covers {} vertices, expected {}",
                    f.len(),
                    g.n()
                )));
            }
            for (v, &c) in f.iter().enumerate() {
                if l.list(v).binary_search(&c).is_err() {
                    return Err(CountError::InvalidPacking(format!(
                        "coloring {i} gives vertex {v} color {c}, which is not in its list"
                    )));
                }
            }
            for &(u, v) in g.edges() {
                if f[u] == f[v] {
                    return Err(CountError::InvalidPacking(format!(
                        "coloring {i} is not proper on edge ({u}, {v})"
                    )));
                }
            }
        }
        for i in 0..colorings.len() {
            for j in i + 1..colorings.len() {
                for v in 0..g.n() {
                    if colorings[i][v] == colorings[j][v] {
                        return Err(CountError::InvalidPacking(format!(
                            "colorings {i} and {j} agree at vertex {v}"
                        )));
                    }
                }
            }
        }
        Ok(Packing { colorings })
    }

    pub fn size(&self) -> usize {
        self.colorings.len()
    }

    pub fn colorings(&self) -> &[Vec<u32>] {
        &self.colorings
    }
}
