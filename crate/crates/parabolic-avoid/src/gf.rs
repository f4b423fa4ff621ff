//! The rational generating function for coset avoidance counts, the
//! algebraic (square-root) generating function for the simplest
//! nonmaximal parabolic case, and exact coefficient-stream extraction.

use num::{BigInt, BigRational, One, Zero};

use crate::perm::{self, EnumerateOptions};
use crate::poly::{binomial, factorial, laguerre_poly, rook_poly, ExactPoly};
use crate::{Error, Result};

/// A rational function `numerator / denominator` whose denominator has a
/// nonzero constant term, so a power-series expansion at 0 exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    pub numerator: ExactPoly,
    pub denominator: ExactPoly,
}

impl RationalGf {
    pub fn new(numerator: ExactPoly, denominator: ExactPoly) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }
}

/// Exact series coefficients `c_0 .. c_N`; the truncation order is
/// `len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    coeffs: Vec<BigRational>,
}

impl SeriesPrefix {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    /// All coefficients as integers, or `None` if any is fractional.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Substitutes `-x`: the degree-`j` coefficient picks up `(-1)^j`.
pub fn poly_at_neg_x(p: &ExactPoly) -> ExactPoly {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 0 { c.clone() } else { -c.clone() })
        .collect();
    ExactPoly::new(coeffs)
}

/// The generating function `F_{l,m}^a(x)` of the avoidance counts, built
/// from the purely polynomial form: the numerator is
///
/// `Σ_{r=0}^{λ-1} x^r r! Σ_{j=0}^{r} (-1)^j C(l,j)C(m,j)/C(r,j)
///  + (-1)^λ x^λ λ! Σ_{r=0}^{μ-λ-1} x^r r! C(μ-r-1, λ)`
///
/// and the denominator is `R_{λ,μ}(-x)`. The result is independent of
/// `a`, which is why no `a` parameter appears here.
pub fn main_theorem_gf(l: usize, m: usize) -> Result<RationalGf> {
    if l < 1 || m < 1 {
        return Err(Error::InvalidClass { l, m, a: 0 });
    }
    let lambda = l.min(m);
    let mu = l.max(m);
    let mut numerator = ExactPoly::zero();
    for r in 0..lambda {
        let mut inner = BigRational::zero();
        for j in 0..=r {
            let term = BigRational::new(binomial(l, j) * binomial(m, j), binomial(r, j));
            if j % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        let c = BigRational::from(factorial(r)) * inner;
        numerator = numerator.add(&ExactPoly::monomial(c, r));
    }
    let lam_sign = if lambda % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    for r in 0..mu.saturating_sub(lambda) {
        let c = &lam_sign
            * BigRational::from(factorial(lambda) * factorial(r) * binomial(mu - r - 1, lambda));
        numerator = numerator.add(&ExactPoly::monomial(c, lambda + r));
    }
    RationalGf::new(numerator, poly_at_neg_x(&rook_poly(lambda, mu)))
}

/// The second published form of the same generating function:
///
/// `F(x) = Σ_{r=0}^{k-1} x^r r!
///  - (-1)^λ x^μ / (λ! L_λ^{μ-λ}(x^{-1}))
///    · Σ_{r=0}^{λ-1} (k+r)! x^r Σ_{j=r+1}^{λ} (-1)^j C(l,j)C(m,j)/C(k+r,j)`.
///
/// The `x^{-1}` substitution is normalized explicitly:
/// `λ! x^λ L_λ^{μ-λ}(1/x)` is the coefficient-reversed Laguerre
/// polynomial, equal to `(-1)^λ R_{λ,μ}(-x)`, and serves as the
/// denominator here. Used to cross-check [`main_theorem_gf`].
pub fn main_theorem_gf_alt(l: usize, m: usize) -> Result<RationalGf> {
    if l < 1 || m < 1 {
        return Err(Error::InvalidClass { l, m, a: 0 });
    }
    let lambda = l.min(m);
    let mu = l.max(m);
    let k = l + m;

    // G(x) = λ! x^λ L_λ^{μ-λ}(1/x): reverse the Laguerre coefficients.
    let lag = laguerre_poly(lambda, (mu - lambda) as i64)?;
    let lf = BigRational::from(factorial(lambda));
    let g = ExactPoly::new((0..=lambda).map(|i| &lf * lag.coeff(lambda - i)).collect());

    let head = ExactPoly::new((0..k).map(|r| BigRational::from(factorial(r))).collect());

    let mut q = ExactPoly::zero();
    for r in 0..lambda {
        let mut inner = BigRational::zero();
        for j in (r + 1)..=lambda {
            let term = BigRational::new(binomial(l, j) * binomial(m, j), binomial(k + r, j));
            if j % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        q = q.add(&ExactPoly::monomial(
            BigRational::from(factorial(k + r)) * inner,
            r,
        ));
    }

    // F = head - (-1)^λ x^μ Q / (G / x^λ) = (head·G - (-1)^λ x^k Q) / G.
    let mut correction = q.shift_up(k);
    if lambda % 2 != 0 {
        correction = correction.scale(&-BigRational::one());
    }
    RationalGf::new(head.mul(&g).sub(&correction), g)
}

/// Expands a rational function into its exact series prefix `c_0 .. c_N`
/// via the linear recurrence induced by the denominator:
/// `c_n = (num_n - Σ_{i≥1} d_i c_{n-i}) / d_0`.
pub fn gf_coefficients(gf: &RationalGf, n_max: usize) -> Result<SeriesPrefix> {
    let d0 = gf.denominator.coeff(0);
    if d0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let deg_d = gf.denominator.degree().unwrap();
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = gf.numerator.coeff(n);
        for i in 1..=deg_d.min(n) {
            acc -= gf.denominator.coeff(i) * &coeffs[n - i];
        }
        coeffs.push(acc / &d0);
    }
    Ok(SeriesPrefix::new(coeffs))
}

fn truncated_mul(a: &[BigRational], b: &[BigRational], n_max: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n_max + 1];
    for (i, ai) in a.iter().enumerate().take(n_max + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n_max + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Formal square root of a polynomial with constant term 1: returns the
/// series `s` with `s² ≡ p (mod x^{N+1})` and `s(0) = 1`, via the
/// binomial series `(1+u)^{1/2}` with `u = p - 1`.
pub fn sqrt_series(p: &ExactPoly, n_max: usize) -> Result<SeriesPrefix> {
    if !p.coeff(0).is_one() {
        return Err(Error::BadSqrtConstantTerm(p.coeff(0).to_string()));
    }
    let mut u: Vec<BigRational> = p.coeffs().to_vec();
    u[0] = BigRational::zero();
    u.truncate(n_max + 1);

    let mut out = vec![BigRational::zero(); n_max + 1];
    out[0] = BigRational::one();
    // Running generalized binomial C(1/2, j) and running power u^j.
    let mut coef = BigRational::one();
    let mut upow = vec![BigRational::one()];
    for j in 1..=n_max {
        // C(1/2, j) = C(1/2, j-1) · (1/2 - (j-1)) / j
        coef *= BigRational::new(BigInt::from(3 - 2 * j as i64), BigInt::from(2 * j));
        upow = truncated_mul(&upow, &u, n_max);
        if upow.iter().all(Zero::is_zero) {
            break;
        }
        for (i, c) in upow.iter().enumerate() {
            if !c.is_zero() {
                out[i] += &coef * c;
            }
        }
    }
    Ok(SeriesPrefix::new(out))
}

/// Exact series coefficients of the algebraic generating function
/// `F_{1,1,k-2}(x)` for permutations avoiding the nonmaximal parabolic
/// subgroup `P_{1,1,k-2}`:
///
/// `Σ_{r=1}^{k-2} x^r r! + ((k-3)! x^{k-4} / 2)
///  (1 - (k-1)x - sqrt(1 - 2(k-1)x + (k-3)² x²))`.
///
/// For `k = 3` the `x^{k-4}` prefactor is a formal division by `x`,
/// which is well defined because the parenthesized series has no
/// constant term; the published low-order coefficients do not all match
/// the avoidance counts, so consumers should compare against
/// [`bdpp_first_agreement`].
pub fn bdpp_coefficients(k: usize, n_max: usize) -> Result<SeriesPrefix> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("bdpp requires k >= 3, got {k}")));
    }
    let shift = k as isize - 4;
    let inner_order = if shift < 0 {
        n_max + shift.unsigned_abs()
    } else {
        n_max
    };

    let km1 = (k - 1) as i64;
    let km3 = (k - 3) as i64;
    let radicand = ExactPoly::from_integers(&[1, -2 * km1, km3 * km3]);
    let root = sqrt_series(&radicand, inner_order)?;

    // inner = 1 - (k-1)x - sqrt(...)
    let mut inner: Vec<BigRational> = (0..=inner_order).map(|n| -root.coeff(n)).collect();
    inner[0] += BigRational::one();
    if inner_order >= 1 {
        inner[1] -= BigRational::from(BigInt::from(km1));
    }
    debug_assert!(inner[0].is_zero());
    if shift < 0 {
        debug_assert!(inner.iter().take(shift.unsigned_abs()).all(Zero::is_zero));
    }

    let scale = BigRational::new(factorial(k - 3), BigInt::from(2));
    let mut coeffs = vec![BigRational::zero(); n_max + 1];
    for r in 1..=(k - 2).min(n_max) {
        coeffs[r] = BigRational::from(factorial(r));
    }
    for n in 0..=n_max {
        let src = n as isize - shift;
        if src >= 0 && (src as usize) < inner.len() {
            coeffs[n] += &scale * &inner[src as usize];
        }
    }
    Ok(SeriesPrefix::new(coeffs))
}

/// Exact `|S_n(P_{1,1,k-2})|` by brute force, for comparison with
/// [`bdpp_coefficients`].
pub fn bdpp_brute_force(k: usize, n: usize) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("bdpp requires k >= 3, got {k}")));
    }
    let subgroup = perm::nonmaximal_parabolic_subgroup(1, 1, k - 2)?;
    Ok(perm::enumerate_avoiders(n, &subgroup, EnumerateOptions::default()))
}

/// Smallest index `i` such that the formula's coefficients equal the
/// brute-force counts for every `n` in `i..=n_max`, together with both
/// sequences. Returns `None` for the index if even the last coefficient
/// disagrees.
pub struct BdppComparison {
    pub k: usize,
    pub formula: Vec<BigRational>,
    pub brute_force: Vec<BigInt>,
    pub first_agreement: Option<usize>,
}

pub fn bdpp_first_agreement(k: usize, n_max: usize) -> Result<BdppComparison> {
    let formula = bdpp_coefficients(k, n_max)?;
    let brute: Vec<BigInt> = (0..=n_max)
        .map(|n| bdpp_brute_force(k, n))
        .collect::<Result<_>>()?;
    let mut first = None;
    for i in (0..=n_max).rev() {
        if formula.coeff(i) == BigRational::from(brute[i].clone()) {
            first = Some(i);
        } else {
            break;
        }
    }
    Ok(BdppComparison {
        k,
        formula: formula.coeffs().to_vec(),
        brute_force: brute,
        first_agreement: first,
    })
}
