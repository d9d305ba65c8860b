//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored constant-term first, so `coeffs[d]` is the
//! coefficient of `x^d`. The zero polynomial is the empty coefficient
//! vector; every other polynomial keeps a nonzero leading coefficient.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Polynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// Builds a polynomial from constant-first coefficients, trimming any
    /// leading zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^d` (zero when `d` exceeds the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All coefficients, constant term first, including interior zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            out.push(self.coeff(d) + other.coeff(d));
        }
        Polynomial::from_coeffs(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            out.push(self.coeff(d) - other.coeff(d));
        }
        Polynomial::from_coeffs(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates at a nonnegative point, which must yield a nonnegative
    /// value. Panics otherwise; callers use this for counting polynomials
    /// where negativity would indicate a bug.
    pub fn eval_unsigned(&self, x: u64) -> BigUint {
        let v = self.eval(&BigInt::from(x));
        assert!(
            !v.is_negative(),
            "counting polynomial evaluated negative at {x}"
        );
        v.to_biguint().expect("nonnegative BigInt converts")
    }

    /// The falling factorial `x (x-1) (x-2) ... (x-n+1)` as a polynomial;
    /// `n = 0` gives the constant 1.
    pub fn falling_factorial(n: usize) -> Polynomial {
        let mut p = Polynomial::one();
        for i in 0..n {
            let factor = Polynomial::from_coeffs(vec![BigInt::from(-(i as i64)), BigInt::one()]);
            p = p.mul(&factor);
        }
        p
    }

    /// `x^n` as a polynomial.
    pub fn power(n: usize) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        Polynomial::from_coeffs(coeffs)
    }

    /// Coefficients as decimal strings, constant term first. Interior zeros
    /// are included so the index in the list is the degree.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}", term(c, d, true))?;
                first = false;
            } else {
                write!(f, " {}", term(c, d, false))?;
            }
        }
        Ok(())
    }
}

fn term(c: &BigInt, d: usize, leading: bool) -> String {
    let sign = if c.is_negative() {
        if leading {
            "-"
        } else {
            "- "
        }
    } else if leading {
        ""
    } else {
        "+ "
    };
    let mag = c.magnitude();
    let coeff = if mag.is_one() && d > 0 {
        String::new()
    } else {
        mag.to_string()
    };
    match d {
        0 => format!("{sign}{}", mag),
        1 => format!("{sign}{coeff}x"),
        _ => format!("{sign}{coeff}x^{d}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn zero_and_trim() {
        assert!(Polynomial::zero().is_zero());
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 2]); // 2x + 1
        let b = p(&[3, -2]); // -2x + 3
        assert_eq!(a.add(&b), p(&[4]));
        assert_eq!(a.sub(&a), Polynomial::zero());
        // (2x+1)(-2x+3) = -4x^2 + 4x + 3
        assert_eq!(a.mul(&b), p(&[3, 4, -4]));
    }

    #[test]
    fn eval_horner() {
        let q = p(&[1, -3, 0, 2]); // 2x^3 - 3x + 1
        assert_eq!(q.eval(&BigInt::from(0)), BigInt::from(1));
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(11));
        assert_eq!(q.eval(&BigInt::from(-1)), BigInt::from(2));
    }

    #[test]
    fn falling_factorial_values() {
        let ff = Polynomial::falling_factorial(3); // x(x-1)(x-2)
        assert_eq!(ff.eval(&BigInt::from(5)), BigInt::from(60));
        assert_eq!(ff.eval(&BigInt::from(2)), BigInt::from(0));
        assert_eq!(Polynomial::falling_factorial(0), Polynomial::one());
    }

    #[test]
    fn power_basis() {
        assert_eq!(Polynomial::power(0), Polynomial::one());
        assert_eq!(Polynomial::power(2).eval(&BigInt::from(7)), BigInt::from(49));
    }

    #[test]
    fn eval_unsigned_roundtrip() {
        let ff = Polynomial::falling_factorial(4);
        assert_eq!(ff.eval_unsigned(6), BigUint::from(360u32));
    }

    #[test]
    #[should_panic(expected = "negative")]
    fn eval_unsigned_rejects_negative() {
        p(&[-1]).eval_unsigned(3);
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[3, 4, -4]).to_string(), "-4x^2 + 4x + 3");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn coeff_strings_constant_first() {
        assert_eq!(p(&[1, 0, -2]).coeff_strings(), vec!["1", "0", "-2"]);
    }
}
