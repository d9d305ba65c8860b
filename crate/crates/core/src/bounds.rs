//! Closed-form thresholds and exponential lower bounds, carried as exact
//! certificates. A bound of the form `base^(a/b) / divisor` is stored as the
//! integer triple and every verdict about it — the least integer ceiling, a
//! pass/fail against a measured count — is decided by cross-multiplied
//! big-integer powering. No floating point is involved anywhere.

use crate::count::{derangements, factorial, Count};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("the bound's preconditions do not hold, so there is nothing to check")]
    NotApplicable,
    #[error("the bound presumes a positive count, but the measured value is 0")]
    ZeroMeasured,
}

/// An exact description of a lower bound `base^exponent / divisor`, with the
/// least integer at or above it and (optionally) a verdict against a
/// measured count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Whether the bound's hypotheses hold for the given parameters. When
    /// false the remaining fields describe the formula anyway, but the
    /// ceiling degrades to the trivial 1 and the report cannot be checked.
    pub applicable: bool,
    pub base: BigUint,
    pub exponent: BigRational,
    pub divisor: Count,
    /// Least integer `c` with `(c * divisor)^den >= base^num`.
    pub ceiling: Count,
    /// Set by [`check_bound_against_count`]; `None` until then.
    pub passed: Option<bool>,
}

impl BoundReport {
    fn new(applicable: bool, base: BigUint, exponent: BigRational, divisor: Count) -> BoundReport {
        let ceiling = if applicable {
            exact_ceiling(&base, &exponent, &divisor)
        } else {
            Count::one()
        };
        BoundReport {
            applicable,
            base,
            exponent,
            divisor,
            ceiling,
            passed: None,
        }
    }

    /// JSON form with every big value as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("applicable".into(), self.applicable.into());
        map.insert("base".into(), self.base.to_string().into());
        map.insert(
            "exponent_num".into(),
            self.exponent.numer().to_string().into(),
        );
        map.insert(
            "exponent_den".into(),
            self.exponent.denom().to_string().into(),
        );
        map.insert("divisor".into(), self.divisor.to_string().into());
        map.insert("ceiling".into(), self.ceiling.to_string().into());
        if let Some(p) = self.passed {
            map.insert("passed".into(), p.into());
        }
        serde_json::Value::Object(map)
    }
}

fn exponent_parts(exponent: &BigRational) -> (u32, u32) {
    let num = exponent
        .numer()
        .to_u32()
        .expect("bound exponents stay small at the scales this library targets");
    let den = exponent
        .denom()
        .to_u32()
        .expect("bound exponents stay small at the scales this library targets");
    (num, den)
}

/// Least `c >= 1` with `(c * divisor)^den >= base^num`, i.e. the integer
/// ceiling of `base^(num/den) / divisor`. Starts from an nth-root estimate
/// and settles the boundary with exact comparisons in both directions.
fn exact_ceiling(base: &BigUint, exponent: &BigRational, divisor: &Count) -> Count {
    assert!(
        !exponent.is_negative(),
        "applicable bounds have non-negative exponents"
    );
    let (num, den) = exponent_parts(exponent);
    let target = base.pow(num);
    let root = target.nth_root(den);
    let mut c = (&root / divisor).max(Count::one());
    while (&c * divisor).pow(den) < target {
        c += 1u32;
    }
    while c > Count::one() && ((&c - 1u32) * divisor).pow(den) >= target {
        c -= 1u32;
    }
    c
}

/// List size from which the minimum packing count over `q`-assignments is
/// guaranteed to equal the constant-assignment count:
/// `nk(k-1)/2 + mk - 1`. May be below every meaningful `q` for trivial
/// graphs, hence the signed return.
pub fn dz_threshold(n: usize, m: usize, k: usize) -> i64 {
    let n = n as i64;
    let m = m as i64;
    let k = k as i64;
    n * k * (k - 1) / 2 + m * k - 1
}

/// Lower bound `t^((S - n_vars - d)/(t - 1))` on the number of nonzero
/// points of a polynomial of degree `d` in `n_vars` variables over grids of
/// size `t` with total grid size `S`, given at least one nonzero point.
/// Hypotheses `S >= n_vars + d` and `t >= 2` are reported, not enforced.
pub fn alon_furedi_nonzero_bound(s: usize, n_vars: usize, d: usize, t: usize) -> BoundReport {
    let applicable = s >= n_vars + d && t >= 2;
    // denominator clamped so the rational stays well-formed when t = 1;
    // such a report is inapplicable and its exponent is only descriptive
    let den = BigInt::from(t.max(2) - 1);
    let num = BigInt::from(s as i64 - n_vars as i64 - d as i64);
    BoundReport::new(
        applicable,
        BigUint::from(t),
        BigRational::new(num, den),
        Count::one(),
    )
}

/// Lower bound `q^(kn - (nk(k-1)/2 + km)/(q-1)) / k!` on a positive packing
/// count for a graph with `n` vertices and `m` edges. Applicable when the
/// graph is sparse enough (`2m <= n(2q - k - 1)`), at least two colors are
/// in play, and `k <= q`; the exponent is then provably non-negative.
pub fn packing_lower_bound(n: usize, m: usize, q: usize, k: usize) -> BoundReport {
    let sparse_enough = 2 * m <= n * (2 * q).saturating_sub(k + 1);
    let applicable = k >= 1 && k <= q && q >= 2 && sparse_enough;
    let exponent = if q >= 2 {
        let whole = BigRational::from(BigInt::from((k * n) as i64));
        let num = BigInt::from((n * k * (k - 1) / 2 + k * m) as i64);
        whole - BigRational::new(num, BigInt::from((q - 1) as i64))
    } else {
        BigRational::zero()
    };
    BoundReport::new(applicable, BigUint::from(q), exponent, factorial(k))
}

/// Compares a measured count against an applicable bound:
/// `passed = (measured * divisor)^den >= base^num`, in exact integers.
pub fn check_bound_against_count(
    report: &BoundReport,
    measured: &Count,
) -> Result<BoundReport, BoundError> {
    if !report.applicable {
        return Err(BoundError::NotApplicable);
    }
    if measured.is_zero() {
        return Err(BoundError::ZeroMeasured);
    }
    let (num, den) = exponent_parts(&report.exponent);
    let passed = (measured * &report.divisor).pow(den) >= report.base.pow(num);
    let mut checked = report.clone();
    checked.passed = Some(passed);
    Ok(checked)
}

/// Exact minimum packing count for trees on `n` vertices with `q`-lists and
/// full-size packings: `(!q)^(n-1)`.
pub fn tree_packing_value(n: usize, q: usize) -> Count {
    assert!(n >= 1, "a tree has at least one vertex");
    derangements(q).pow((n - 1) as u32)
}

/// Lower bound `3^(n/6) / 2` on the number of 2-packings from 3-lists for
/// planar graphs of girth at least 8. Planarity and girth are the caller's
/// assertion; positivity is an external fact this report presumes.
pub fn girth8_bound(n: usize) -> BoundReport {
    assert!(n >= 1, "the bound concerns nonempty graphs");
    BoundReport::new(
        true,
        BigUint::from(3u32),
        BigRational::new(BigInt::from(n as i64), BigInt::from(6)),
        Count::from(2u32),
    )
}
