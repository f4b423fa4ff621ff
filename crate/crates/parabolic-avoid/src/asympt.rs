//! Growth-rate analysis: certified isolation of the maximal Laguerre
//! root, the dominant-pole constant, and the Ismail–Li upper bound.
//!
//! Root isolation runs entirely in exact rational arithmetic (Sturm
//! counts plus bisection); floating point appears only in the reported
//! midpoints.

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::gf::{gf_coefficients, main_theorem_gf, poly_at_neg_x};
use crate::poly::{laguerre_poly, rook_poly, ExactPoly};
use crate::{Error, Result};

/// Growth-rate report for one `(l, m)` class: `f(n) ~ c γ^n`.
#[derive(Debug, Clone)]
pub struct AsymptoticEstimate {
    /// Midpoint of the certified interval around the growth rate.
    pub gamma: f64,
    /// Dominant-pole constant, float precision.
    pub c: f64,
    /// Exact rational interval bracketing a sign change of the Laguerre
    /// polynomial at its maximal root.
    pub gamma_interval: (BigRational, BigRational),
    /// Ismail–Li bound `k - 2 + sqrt(1 + 4(l-1)(m-1)) ≥ γ`.
    pub il_bound: f64,
}

/// Sturm chain of `p`: `p, p', -rem(...)` until constant.
fn sturm_chain(p: &ExactPoly) -> Vec<ExactPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() || chain[n - 1].degree() == Some(0) {
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&-BigRational::one()));
    }
    chain
}

fn sign_variations(chain: &[ExactPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None; // sign as is_positive
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(ps) = prev {
            if ps != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}

/// Number of distinct real roots of the chain's polynomial in `(lo, hi]`.
fn roots_in(chain: &[ExactPoly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(chain, lo).saturating_sub(sign_variations(chain, hi))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Smallest integer `r ≥ 0` with `r² ≥ d`.
fn isqrt_ceil(d: u64) -> u64 {
    let mut r = 0u64;
    while r * r < d {
        r += 1;
    }
    r
}

/// Ismail–Li upper bound on the largest Laguerre root:
/// `k - 2 + sqrt(1 + 4(l-1)(m-1))` with `k = l + m`.
pub fn il_bound(l: usize, m: usize) -> f64 {
    let k = l + m;
    (k as f64) - 2.0 + (1.0 + 4.0 * ((l - 1) as f64) * ((m - 1) as f64)).sqrt()
}

/// Rational upper bound strictly above every root of `L_λ^{μ-λ}`,
/// derived from the Ismail–Li bound rounded up plus one.
fn search_upper_bound(lambda: usize, mu: usize) -> BigRational {
    let k = lambda + mu;
    let d = 1 + 4 * (lambda as u64 - 1) * (mu as u64 - 1);
    BigRational::from(BigInt::from(k as u64 - 2 + isqrt_ceil(d) + 2))
}

/// Isolates the largest real root of `L_λ^α` in an exact rational
/// interval of width at most `tol`, with a sign change of the polynomial
/// at the endpoints as certificate. All roots are real, positive, and
/// simple, which makes the Sturm-guided bisection conclusive.
pub fn max_laguerre_root(
    lambda: usize,
    alpha: usize,
    tol: &BigRational,
) -> Result<(BigRational, BigRational)> {
    if lambda < 1 {
        return Err(Error::OutOfRange(
            "constant Laguerre polynomial has no root".into(),
        ));
    }
    if !tol.is_positive() {
        return Err(Error::OutOfRange("tolerance must be positive".into()));
    }
    let p = laguerre_poly(lambda, alpha as i64)?;
    let chain = sturm_chain(&p);
    let mu = lambda + alpha;

    let mut lo = BigRational::zero();
    let mut hi = search_upper_bound(lambda, mu);
    debug_assert_eq!(roots_in(&chain, &lo, &hi), lambda);

    let half = ratio(1, 2);
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) * &half;
        if roots_in(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            // The largest root is in (lo, mid] (possibly mid itself).
            hi = mid;
        }
    }

    // Certificate: endpoints must straddle the root with a strict sign
    // change; nudge off an exact hit.
    let quarter_tol = tol * ratio(1, 4);
    if p.eval(&hi).is_zero() {
        lo = &hi - &quarter_tol;
        hi = &hi + &quarter_tol;
    }
    if p.eval(&lo).is_zero() {
        lo -= &quarter_tol;
    }
    let s_lo = p.eval(&lo);
    let s_hi = p.eval(&hi);
    if s_lo.is_zero() || s_hi.is_zero() || s_lo.is_positive() == s_hi.is_positive() {
        return Err(Error::OutOfRange(format!(
            "failed to certify a sign change for the largest root of L_{lambda}^{alpha}; \
             tolerance {tol} may be too coarse"
        )));
    }
    Ok((lo, hi))
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().expect("rational representable as f64")
}

/// Full growth-rate report for `f_{l,m}(n) ~ c γ^n`: `γ` is certified by
/// [`max_laguerre_root`], `c` comes from the simple-pole residue of the
/// generating function at `r = 1/γ` (`c = -N(r) / (r D'(r))`).
pub fn growth_estimate(l: usize, m: usize, tol: &BigRational) -> Result<AsymptoticEstimate> {
    if l < 1 || m < 1 {
        return Err(Error::InvalidClass { l, m, a: 0 });
    }
    let lambda = l.min(m);
    let mu = l.max(m);
    let (glo, ghi) = max_laguerre_root(lambda, mu - lambda, tol)?;

    // 1/γ is the smallest positive root of the denominator R_{λ,μ}(-x):
    // certify the correspondence by a sign change of the denominator on
    // the inverted interval.
    let denom = poly_at_neg_x(&rook_poly(lambda, mu));
    if glo.is_positive() {
        let d_at = |g: &BigRational| denom.eval(&g.recip());
        let (dl, dh) = (d_at(&glo), d_at(&ghi));
        if dl.is_positive() == dh.is_positive() && !dl.is_zero() && !dh.is_zero() {
            return Err(Error::OutOfRange(
                "denominator sign-change certificate failed on the inverted interval".into(),
            ));
        }
    }

    let gamma_mid = (&glo + &ghi) * ratio(1, 2);
    let gf = main_theorem_gf(l, m)?;
    let r = gamma_mid.recip();
    let dprime = gf.denominator.derivative().eval(&r);
    assert!(
        to_f64(&dprime).abs() > 1e-12,
        "dominant pole must be simple"
    );
    let c = -gf.numerator.eval(&r) / (&r * dprime);

    Ok(AsymptoticEstimate {
        gamma: to_f64(&gamma_mid),
        c: to_f64(&c),
        gamma_interval: (glo, ghi),
        il_bound: il_bound(l, m),
    })
}

/// Series-side sanity value: `f(n) / f(n-1)` as f64, which converges to
/// the growth rate.
pub fn tail_ratio(l: usize, m: usize, n: usize) -> Result<f64> {
    let gf = main_theorem_gf(l, m)?;
    let s = gf_coefficients(&gf, n)?;
    let num = s.coeff(n);
    let den = s.coeff(n - 1);
    Ok(to_f64(&(num / den)))
}
