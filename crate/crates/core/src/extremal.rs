//! Minimization of packing counts over list assignments.
//!
//! The packing count of an assignment depends only on its pattern (which
//! lists share which colors), so the exact minimizer sweeps pattern
//! assignments rather than raw assignments. The sampled variant trades
//! completeness for speed on instances whose pattern space is out of reach.

use crate::assign::{
    canonical_pattern, constant_assignment, enumerate_patterns, realize_pattern, AssignError,
    ListAssignment, PatternAssignment,
};
use crate::bounds::dz_threshold;
use crate::count::{
    classical_packing_count_with, count_packings_direct, ChromaticSolver, Count, CountError,
};
use crate::graph::Graph;
use num_traits::{CheckedSub, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt::Write as _;
use thiserror::Error;

/// Patterns per parallel batch during an exact sweep.
const SWEEP_CHUNK: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("pattern budget {budget} exhausted before the sweep finished")]
    BudgetExceeded {
        budget: usize,
        /// Largest `q` whose sweep completed before the budget ran out, for
        /// multi-`q` searches; `None` for a single sweep or when the first
        /// `q` was already truncated.
        completed_q: Option<usize>,
    },
    #[error(transparent)]
    Count(#[from] CountError),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl From<AssignError> for SearchError {
    fn from(e: AssignError) -> SearchError {
        SearchError::Count(CountError::from(e))
    }
}

/// Outcome of minimizing the packing count over an assignment space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimizationResult {
    pub value: Count,
    /// Pattern attaining `value`; for exact sweeps, the first such pattern
    /// in enumeration order.
    pub witness: PatternAssignment,
    /// True when every pattern assignment was evaluated.
    pub exhaustive: bool,
    pub patterns_evaluated: usize,
}

/// Minimum packing count (sets of `k` pairwise-disjoint proper colorings)
/// over *all* `q`-assignments, by exhaustive pattern sweep. Fails with
/// [`SearchError::BudgetExceeded`] if the pattern space is larger than
/// `pattern_budget`; use [`list_packing_function_sampled`] there.
pub fn list_packing_function_exact(
    g: &Graph,
    q: usize,
    k: usize,
    pattern_budget: usize,
) -> Result<MinimizationResult, SearchError> {
    if k == 0 {
        return Err(CountError::ZeroPackingSize.into());
    }
    if k > q {
        return Err(CountError::PackingExceedsListSize { k, q }.into());
    }
    let mut iter = enumerate_patterns(g, q, pattern_budget)?;
    let mut best: Option<(Count, PatternAssignment)> = None;
    let mut evaluated = 0usize;
    loop {
        let mut chunk = Vec::with_capacity(SWEEP_CHUNK);
        let mut done = false;
        while chunk.len() < SWEEP_CHUNK {
            match iter.next() {
                Some(Ok(p)) => chunk.push(p),
                Some(Err(AssignError::BudgetExceeded { budget })) => {
                    return Err(SearchError::BudgetExceeded {
                        budget,
                        completed_q: None,
                    });
                }
                Some(Err(e)) => return Err(e.into()),
                None => {
                    done = true;
                    break;
                }
            }
        }
        let counts: Vec<Count> = chunk
            .par_iter()
            .map(|p| {
                let l = realize_pattern(p, g)?;
                count_packings_direct(g, &l, k)
            })
            .collect::<Result<_, CountError>>()?;
        for (p, c) in chunk.into_iter().zip(counts) {
            evaluated += 1;
            // strictly-less keeps the earliest witness in enumeration order
            match &best {
                Some((bc, _)) if c >= *bc => {}
                _ => best = Some((c, p)),
            }
        }
        if done {
            break;
        }
    }
    let (value, witness) = best.ok_or_else(|| {
        SearchError::Invariant("pattern enumeration yielded no assignments".into())
    })?;
    Ok(MinimizationResult {
        value,
        witness,
        exhaustive: true,
        patterns_evaluated: evaluated,
    })
}

/// Heuristic minimizer: evaluates the constant assignment plus `budget`
/// seeded random `q`-assignments (lists drawn from a shared universe of
/// `n*q` colors) and reports the best seen. The result is an upper bound on
/// the true minimum; identical inputs give identical output regardless of
/// thread count.
pub fn list_packing_function_sampled(
    g: &Graph,
    q: usize,
    k: usize,
    budget: usize,
    seed: u64,
) -> Result<MinimizationResult, SearchError> {
    if k == 0 {
        return Err(CountError::ZeroPackingSize.into());
    }
    if k > q {
        return Err(CountError::PackingExceedsListSize { k, q }.into());
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignments = Vec::with_capacity(budget + 1);
    assignments.push(constant_assignment(g, q));
    for _ in 0..budget {
        let lists: Vec<Vec<u32>> = (0..n)
            .map(|_| {
                rand::seq::index::sample(&mut rng, n * q, q)
                    .into_iter()
                    .map(|c| c as u32)
                    .collect()
            })
            .collect();
        assignments.push(ListAssignment::new(lists)?);
    }
    let mut value: Option<Count> = None;
    let mut best_idx = 0usize;
    for start in (0..assignments.len()).step_by(SWEEP_CHUNK) {
        let end = (start + SWEEP_CHUNK).min(assignments.len());
        let counts: Vec<Count> = assignments[start..end]
            .par_iter()
            .map(|l| count_packings_direct(g, l, k))
            .collect::<Result<_, CountError>>()?;
        for (offset, c) in counts.into_iter().enumerate() {
            if value.as_ref().map_or(true, |v| c < *v) {
                value = Some(c);
                best_idx = start + offset;
            }
        }
    }
    let value = value.expect("at least the constant assignment was evaluated");
    let witness = canonical_pattern(&assignments[best_idx])?;
    Ok(MinimizationResult {
        value,
        witness,
        exhaustive: false,
        patterns_evaluated: assignments.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PackingNumberOutcome {
    /// Least `q` such that every `q`-assignment admits a packing of `q`
    /// pairwise-disjoint colorings.
    Found { q: usize },
    /// No such `q` up to the cap.
    CapExceeded { q_max: usize },
}

/// Searches `q = 1, 2, ..., q_max` for the least list size guaranteeing a
/// full-size packing under every assignment.
pub fn list_packing_number(
    g: &Graph,
    q_max: usize,
    pattern_budget: usize,
) -> Result<PackingNumberOutcome, SearchError> {
    let mut completed = None;
    for q in 1..=q_max {
        match list_packing_function_exact(g, q, q, pattern_budget) {
            Ok(r) => {
                if !r.value.is_zero() {
                    return Ok(PackingNumberOutcome::Found { q });
                }
                completed = Some(q);
            }
            Err(SearchError::BudgetExceeded { budget, .. }) => {
                return Err(SearchError::BudgetExceeded {
                    budget,
                    completed_q: completed,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Ok(PackingNumberOutcome::CapExceeded { q_max })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRow {
    pub q: usize,
    /// Packing count under the constant assignment.
    pub classical_count: Count,
    /// Minimum packing count over all `q`-assignments.
    pub min_count: Count,
    /// `classical_count - min_count`; never negative, since the constant
    /// assignment is itself in the sweep.
    pub gap: Count,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub k: usize,
    pub rows: Vec<ProbeRow>,
    /// Least probed `q` from which the gap stays zero through `q_max`.
    pub least_equality_q: Option<usize>,
    /// List size from which equality is guaranteed (may be negative for
    /// trivial graphs).
    pub dz_threshold: i64,
    /// True when the pattern budget cut the probe short; `rows` then covers
    /// only the completed prefix of the `q` range.
    pub truncated: bool,
}

/// Compares the minimum packing count against the constant-assignment count
/// for each `q` in `[k, q_max]`, and cross-checks the observed onset of
/// equality against the guaranteed threshold.
pub fn equality_probe(
    g: &Graph,
    k: usize,
    q_max: usize,
    pattern_budget: usize,
) -> Result<ProbeReport, SearchError> {
    if k == 0 {
        return Err(CountError::ZeroPackingSize.into());
    }
    let threshold = dz_threshold(g.n(), g.m(), k);
    let solver = ChromaticSolver::new();
    let mut rows = Vec::new();
    let mut truncated = false;
    for q in k..=q_max {
        let classical = classical_packing_count_with(&solver, g, q, k)?;
        match list_packing_function_exact(g, q, k, pattern_budget) {
            Ok(r) => {
                let gap = classical.checked_sub(&r.value).ok_or_else(|| {
                    SearchError::Invariant(format!(
                        "minimum {} exceeds the constant-assignment count {classical} at q = {q}",
                        r.value
                    ))
                })?;
                rows.push(ProbeRow {
                    q,
                    classical_count: classical,
                    min_count: r.value,
                    gap,
                    exhaustive: r.exhaustive,
                });
            }
            Err(SearchError::BudgetExceeded { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let mut least_equality_q = None;
    for row in rows.iter().rev() {
        if row.gap.is_zero() {
            least_equality_q = Some(row.q);
        } else {
            break;
        }
    }
    if !truncated && !rows.is_empty() && threshold <= q_max as i64 {
        // the probed range includes the guarantee region, so equality must
        // be observed from max(k, threshold) on
        let limit = (k as i64).max(threshold);
        match least_equality_q {
            Some(q0) if (q0 as i64) <= limit => {}
            _ => {
                return Err(SearchError::Invariant(format!(
                    "equality is guaranteed from q = {limit}, but the probe observed least \
                     equality at {least_equality_q:?}"
                )))
            }
        }
    }
    Ok(ProbeReport {
        k,
        rows,
        least_equality_q,
        dz_threshold: threshold,
        truncated,
    })
}

/// Renders a probe report as CSV, one row per probed `q`.
pub fn probe_csv(report: &ProbeReport) -> String {
    let mut out = String::from("q,classical_count,min_count,gap,exhaustive\n");
    for row in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            row.q, row.classical_count, row.min_count, row.gap, row.exhaustive
        )
        .expect("writing to a String cannot fail");
    }
    out
}
