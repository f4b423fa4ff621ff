//! Dense univariate polynomials over arbitrary-precision rationals, plus
//! factorials, binomials, rook polynomials, Laguerre polynomials, and the
//! identity linking the last two.
//!
//! All arithmetic is exact; rationals are kept reduced with positive
//! denominator (the `num` crate normalizes on construction) so equality
//! is structural.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// `n!` as an exact big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient with the usual out-of-range convention:
/// `binomial(n, j) = 0` for `j > n` (and callers pass `j >= 0` by type).
pub fn binomial(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

/// Generalized binomial coefficient `C(q, j)` for rational `q`:
/// `q (q-1) ... (q-j+1) / j!`.
pub fn generalized_binomial(q: &BigRational, j: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..j {
        acc *= q - BigRational::from(BigInt::from(i));
    }
    acc / BigRational::from(factorial(j))
}

/// Dense univariate polynomial with exact rational coefficients.
/// Trailing zeros are trimmed, so the zero polynomial has an empty
/// coefficient vector (`degree()` returns `None` as the `-∞` sentinel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c x^d`.
    pub fn monomial(c: BigRational, d: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^d`.
    pub fn shift_up(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        Self::new(coeffs)
    }

    /// Euclidean remainder of `self` by `divisor` (nonzero).
    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let q = r.last().unwrap() / &lead;
            let shift = r.len() - 1 - dd;
            for i in 0..=dd {
                let t = &divisor.coeffs[i] * &q;
                r[shift + i] -= t;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            if r.len() <= dd {
                break;
            }
        }
        Self::new(r)
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Rook polynomial of the rectangular `s × t` board:
/// `R_{s,t}(x) = Σ_{j=0}^{min(s,t)} j! C(t,j) C(s,j) x^j`.
pub fn rook_poly(s: usize, t: usize) -> ExactPoly {
    let d = s.min(t);
    let coeffs = (0..=d)
        .map(|j| BigRational::from(factorial(j) * binomial(t, j) * binomial(s, j)))
        .collect();
    ExactPoly::new(coeffs)
}

/// Laguerre polynomial `L_n^α(x)` via the explicit sum
/// `Σ_{i=0}^n (-1)^i C(n+α, n-i) x^i / i!`, equivalent to the Rodrigues
/// form; requires `α ≥ -n` so the binomial top stays non-negative.
///
/// Hand check of the Rodrigues form for small `n` (with `D = d/dx`):
/// `n = 0`: `e^x x^{-α} (e^{-x} x^{α}) = 1`;
/// `n = 1`: `e^x x^{-α} D(e^{-x} x^{1+α}) = (1+α) - x`;
/// `n = 2`: `(1/2) e^x x^{-α} D²(e^{-x} x^{2+α})
///         = (1+α)(2+α)/2 - (2+α)x + x²/2`;
/// all of which the explicit sum reproduces.
pub fn laguerre_poly(n: usize, alpha: i64) -> Result<ExactPoly> {
    if alpha < -(n as i64) {
        return Err(Error::OutOfRange(format!(
            "laguerre_poly requires alpha >= -n, got n={n}, alpha={alpha}"
        )));
    }
    let top = (n as i64 + alpha) as usize;
    let coeffs = (0..=n)
        .map(|i| {
            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            BigRational::new(sign * binomial(top, n - i), factorial(i))
        })
        .collect();
    Ok(ExactPoly::new(coeffs))
}

/// Checks the identity `R_{s,t}(x) = s! x^s L_s^{t-s}(-1/x)` by exact
/// coefficient comparison, for `0 ≤ s ≤ t`.
pub fn check_rook_laguerre(s: usize, t: usize) -> Result<bool> {
    if s > t {
        return Err(Error::OutOfRange(format!(
            "check_rook_laguerre requires s <= t, got s={s}, t={t}"
        )));
    }
    let rook = rook_poly(s, t);
    let lag = laguerre_poly(s, (t - s) as i64)?;
    // s! x^s L(-1/x): the x^i Laguerre term contributes
    // s! (-1)^i lag_i x^{s-i}.
    let sf = BigRational::from(factorial(s));
    let mut coeffs = vec![BigRational::zero(); s + 1];
    for i in 0..=s {
        let sign = if i % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        coeffs[s - i] = &sf * sign * lag.coeff(i);
    }
    Ok(ExactPoly::new(coeffs) == rook)
}
