//! Fast exact avoidance counts via the denominator-induced linear
//! recurrence, brute-force prefix-count oracles, and exact verifiers for
//! the supporting identities (the `A`/`B`/`C` box-sum recurrences, the
//! alternating-sum formula, and the hypergeometric reduction identity).

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::perm::{self, AvoidanceClass, PatternSet};
use crate::poly::{binomial, factorial};
use crate::{brute_force_ceiling, Error, Result};

/// Signed coefficient `(-1)^j j! C(m,j) C(l,j)` of the recurrence
/// `Σ_j w_j f(n-j) = 0` valid for `n ≥ k`.
fn recurrence_weight(l: usize, m: usize, j: usize) -> BigInt {
    let w = factorial(j) * binomial(m, j) * binomial(l, j);
    if j % 2 == 0 {
        w
    } else {
        -w
    }
}

/// The counts `f_{l,m}(0), ..., f_{l,m}(n_max)` computed from the linear
/// recurrence, seeded with `f(r) = r!` for `r < k` and
/// `f(k) = k! - l!·m!`. Independent of the coset shift `a`.
pub fn f_sequence(l: usize, m: usize, n_max: usize) -> Result<Vec<BigInt>> {
    if l < 1 || m < 1 {
        return Err(Error::InvalidClass { l, m, a: 0 });
    }
    let k = l + m;
    let weights: Vec<BigInt> = (0..=l).map(|j| recurrence_weight(l, m, j)).collect();
    let mut f: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let value = if n < k {
            factorial(n)
        } else if n == k {
            factorial(k) - factorial(l) * factorial(m)
        } else {
            let mut acc = BigInt::zero();
            for j in 1..=l {
                acc -= &weights[j] * &f[n - j];
            }
            acc
        };
        f.push(value);
    }
    Ok(f)
}

/// Exact `f_{l,m}(n)` via the recurrence.
pub fn f_fast(l: usize, m: usize, n: usize) -> Result<BigInt> {
    Ok(f_sequence(l, m, n)?.pop().unwrap())
}

/// Closed form for the `l = 1` case: `(k-2)!(k-1)^{n+2-k}` for `n ≥ k`,
/// `n!` below.
pub fn corollary11(k: usize, n: usize) -> Result<BigInt> {
    if k < 2 {
        return Err(Error::OutOfRange(format!(
            "corollary11 requires k >= 2, got {k}"
        )));
    }
    if n < k {
        Ok(factorial(n))
    } else {
        Ok(factorial(k - 2) * BigInt::from(k - 1).pow((n + 2 - k) as u32))
    }
}

/// A prescribed-prefix counting query: the number of avoiders in
/// `S_n(σ^a P_{l,m})` whose first `d` entries equal `prefix`.
#[derive(Debug, Clone)]
pub struct PrefixSpec {
    pub cls: AvoidanceClass,
    pub n: usize,
    pub prefix: Vec<usize>,
}

fn check_ceiling(n: usize) -> Result<()> {
    let ceiling = brute_force_ceiling();
    if n > ceiling {
        return Err(Error::CeilingExceeded { n, ceiling });
    }
    Ok(())
}

/// Brute-force `g_n(i_1, ..., i_d)`: avoiders with the given prefix. A
/// repeated prefix entry yields 0; entries outside `1..=n` are an error.
pub fn g_oracle(spec: &PrefixSpec) -> Result<BigInt> {
    check_ceiling(spec.n)?;
    let coset = perm::parabolic_coset(&spec.cls)?;
    perm::count_avoiders_with_prefix(spec.n, &coset, &spec.prefix)
}

/// Which box of prefix values a [`sum_oracle`] call ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SumKind {
    /// `[a+1, b]^d`
    A,
    /// `[a+1, b+1]^d`
    B,
    /// `[a, b]^d`
    C,
}

/// Sum of `g_n` over the kind's index box, with `b = n - m + a`. Box
/// entries falling outside `1..=n` contribute zero.
pub fn sum_oracle(kind: SumKind, cls: &AvoidanceClass, n: usize, d: usize) -> Result<BigInt> {
    if d > cls.l() {
        return Err(Error::OutOfRange(format!("d={d} exceeds l={}", cls.l())));
    }
    check_ceiling(n)?;
    let coset = perm::parabolic_coset(cls)?;
    if d == 0 {
        return perm::count_avoiders_with_prefix(n, &coset, &[]);
    }
    let a = cls.a() as isize;
    let b = cls.b(n);
    let (lo, hi) = match kind {
        SumKind::A => (a + 1, b),
        SumKind::B => (a + 1, b + 1),
        SumKind::C => (a, b),
    };
    let lo = lo.max(1);
    let hi = hi.min(n as isize);
    if lo > hi {
        return Ok(BigInt::zero());
    }
    let lo = lo as usize;
    let hi = hi as usize;
    // Tuples with repeated entries contribute g = 0, so the box sum is a
    // single pass over the avoiders, checking the first d entries.
    let mut total: u64 = 0;
    perm::for_each_avoider(n, &coset, perm::EnumerateOptions::default(), |w| {
        if w[..d].iter().all(|&v| lo <= v && v <= hi) {
            total += 1;
        }
    });
    Ok(BigInt::from(total))
}

/// The alternating-sum side of the `A(n, d)` formula:
/// `Σ_{j=0}^{d} (-1)^j j! C(m,j) C(d,j) f(n-j)`, where `f_values[i]`
/// holds `f(n - d + i)`.
pub fn theorem25_formula(
    cls: &AvoidanceClass,
    d: usize,
    f_values: &[BigInt],
) -> Result<BigInt> {
    if f_values.len() < d + 1 {
        return Err(Error::OutOfRange(format!(
            "need {} trailing f values, got {}",
            d + 1,
            f_values.len()
        )));
    }
    let m = cls.m();
    let last = f_values.len() - 1;
    let mut acc = BigInt::zero();
    for j in 0..=d {
        let w = factorial(j) * binomial(m, j) * binomial(d, j);
        let term = w * &f_values[last - j];
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// One verified identity instance: both sides as decimal strings so a
/// failing sweep is diagnosable from the report alone.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub case: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckReport {
    pub fn compare<T: PartialEq + ToString>(case: String, lhs: T, rhs: T) -> Self {
        let pass = lhs == rhs;
        Self {
            case,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        }
    }
}

fn oracle_a(cls: &AvoidanceClass, n: usize, d: usize) -> Result<BigInt> {
    sum_oracle(SumKind::A, cls, n, d)
}

/// Checks the box-sum recurrence
/// `A(n, d+1) = A(n, d) - (m-d) A(n-1, d) - d A(n-1, d-1)`
/// on oracle values. Requires `n ≥ k + 1` and `1 ≤ d ≤ l - 1`.
pub fn verify_theorem23(cls: &AvoidanceClass, n: usize, d: usize) -> Result<CheckReport> {
    if n < cls.k() + 1 || d < 1 || d + 1 > cls.l() {
        return Err(Error::OutOfRange(format!(
            "theorem23 needs n >= k+1 and 1 <= d <= l-1, got n={n}, d={d}"
        )));
    }
    let lhs = oracle_a(cls, n, d + 1)?;
    let m_minus_d = BigInt::from(cls.m() as i64 - d as i64);
    let rhs = oracle_a(cls, n, d)?
        - m_minus_d * oracle_a(cls, n - 1, d)?
        - BigInt::from(d) * oracle_a(cls, n - 1, d - 1)?;
    Ok(CheckReport::compare(
        format!(
            "theorem23 l={} m={} a={} n={n} d={d}",
            cls.l(),
            cls.m(),
            cls.a()
        ),
        lhs,
        rhs,
    ))
}

/// Checks the three identities relating the `A`, `B`, `C` box sums on
/// oracle values, for `n ≥ k` and `1 ≤ d ≤ l`:
///
/// * `A(n,d) = A(n,d-1) - (m-a) B(n-1,d-1) - a C(n-1,d-1)`
/// * `(m-a) A(n,d) = (m-a) B(n,d) - (m-a) d B(n-1,d-1)`
/// * `a A(n,d) = a C(n,d) - a d C(n-1,d-1)`
///
/// The second is trivial for `a = m` and the third for `a = 0`.
pub fn verify_lemma24(cls: &AvoidanceClass, n: usize, d: usize) -> Result<Vec<CheckReport>> {
    if n < cls.k() || d < 1 || d > cls.l() {
        return Err(Error::OutOfRange(format!(
            "lemma24 needs n >= k and 1 <= d <= l, got n={n}, d={d}"
        )));
    }
    let a = BigInt::from(cls.a());
    let m_minus_a = BigInt::from(cls.m() as i64 - cls.a() as i64);
    let dd = BigInt::from(d);
    let tag = |which: &str| {
        format!(
            "lemma24.{which} l={} m={} a={} n={n} d={d}",
            cls.l(),
            cls.m(),
            cls.a()
        )
    };

    let a_nd = oracle_a(cls, n, d)?;
    let first_rhs = oracle_a(cls, n, d - 1)?
        - &m_minus_a * sum_oracle(SumKind::B, cls, n - 1, d - 1)?
        - &a * sum_oracle(SumKind::C, cls, n - 1, d - 1)?;
    let second_lhs = &m_minus_a * &a_nd;
    let second_rhs = &m_minus_a * sum_oracle(SumKind::B, cls, n, d)?
        - &m_minus_a * &dd * sum_oracle(SumKind::B, cls, n - 1, d - 1)?;
    let third_lhs = &a * &a_nd;
    let third_rhs =
        &a * sum_oracle(SumKind::C, cls, n, d)? - &a * &dd * sum_oracle(SumKind::C, cls, n - 1, d - 1)?;

    Ok(vec![
        CheckReport::compare(tag("first"), a_nd, first_rhs),
        CheckReport::compare(tag("second"), second_lhs, second_rhs),
        CheckReport::compare(tag("third"), third_lhs, third_rhs),
    ])
}

/// The alternating hypergeometric sum
/// `M(s, t; n) = Σ_{i=0}^{s} (-1)^i C(s,i) C(t,i) / C(n,i)`, exactly.
/// Requires `1 ≤ s ≤ t` and `n ≥ s` so no denominator binomial vanishes.
pub fn m_direct(s: usize, t: usize, n: usize) -> Result<BigRational> {
    if s < 1 || s > t {
        return Err(Error::OutOfRange(format!(
            "m_direct requires 1 <= s <= t, got s={s}, t={t}"
        )));
    }
    if n < s {
        return Err(Error::OutOfRange(format!(
            "m_direct requires n >= s, got n={n}, s={s}"
        )));
    }
    let mut acc = BigRational::zero();
    for i in 0..=s {
        let term = BigRational::new(binomial(s, i) * binomial(t, i), binomial(n, i));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The three-case closed form of the same sum:
/// `C(n-t, s)/C(n, s)` for `n ≥ s + t`, `0` for `t ≤ n ≤ s+t-1`, and
/// `(-1)^s C(s+t-n-1, s)/C(n, s)` for `s ≤ n ≤ t-1`.
pub fn m_closed(s: usize, t: usize, n: usize) -> Result<BigRational> {
    if s < 1 || s > t {
        return Err(Error::OutOfRange(format!(
            "m_closed requires 1 <= s <= t, got s={s}, t={t}"
        )));
    }
    if n < s {
        return Err(Error::OutOfRange(format!(
            "m_closed requires n >= s, got n={n}, s={s}"
        )));
    }
    if n >= s + t {
        Ok(BigRational::new(binomial(n - t, s), binomial(n, s)))
    } else if n >= t {
        Ok(BigRational::zero())
    } else {
        let sign = if s % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        Ok(BigRational::new(
            sign * binomial(s + t - n - 1, s),
            binomial(n, s),
        ))
    }
}

/// The reduction identity
/// `Σ_{j=0}^{d} (-1)^j j! C(m,j) C(d,j) (k-j)! = d! C(l,d) (k-d)!`
/// with `k = l + m`, checked exactly.
pub fn reduction_identity_holds(l: usize, m: usize, d: usize) -> bool {
    let k = l + m;
    let mut lhs = BigInt::zero();
    for j in 0..=d {
        let term = factorial(j) * binomial(m, j) * binomial(d, j) * factorial(k - j);
        if j % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    lhs == factorial(d) * binomial(l, d) * factorial(k - d)
}

/// Convenience: the coset for a class, for callers mixing fast and
/// brute-force routes.
pub fn coset(cls: &AvoidanceClass) -> Result<PatternSet> {
    perm::parabolic_coset(cls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::EnumerateOptions;

    fn cls(l: usize, m: usize, a: usize) -> AvoidanceClass {
        AvoidanceClass::new(l, m, a).unwrap()
    }

    #[test]
    fn f_fast_examples() {
        assert_eq!(f_fast(1, 2, 5).unwrap(), BigInt::from(16));
        assert_eq!(f_fast(2, 2, 4).unwrap(), BigInt::from(20));
        assert_eq!(f_fast(2, 2, 6).unwrap(), BigInt::from(232));
        assert_eq!(f_fast(1, 1, 7).unwrap(), BigInt::from(1));
    }

    #[test]
    fn f_fast_matches_brute_force() {
        for l in 1..=3usize {
            for m in 1..=3usize {
                if l + m > 5 {
                    continue;
                }
                let seq = f_sequence(l, m, 8).unwrap();
                let coset = perm::parabolic_coset(&cls(l, m, 0)).unwrap();
                for (n, expect) in seq.iter().enumerate() {
                    let bf = perm::enumerate_avoiders(n, &coset, EnumerateOptions::default());
                    assert_eq!(&bf, expect, "l={l} m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn corollary11_examples() {
        assert_eq!(corollary11(3, 5).unwrap(), BigInt::from(16));
        assert_eq!(corollary11(4, 4).unwrap(), BigInt::from(18));
        assert_eq!(corollary11(5, 3).unwrap(), BigInt::from(6));
    }

    #[test]
    fn corollary11_matches_recurrence() {
        for k in 2..=6usize {
            for n in 0..=20usize {
                assert_eq!(
                    corollary11(k, n).unwrap(),
                    f_fast(1, k - 1, n).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn g_oracle_basics() {
        let c = cls(2, 2, 0);
        // Repeated entry.
        let g = g_oracle(&PrefixSpec {
            cls: c,
            n: 5,
            prefix: vec![2, 2],
        })
        .unwrap();
        assert_eq!(g, BigInt::zero());
        // Full-length prefix inside the A box vanishes (n=4, b=2).
        let g = g_oracle(&PrefixSpec {
            cls: c,
            n: 4,
            prefix: vec![1, 2],
        })
        .unwrap();
        assert_eq!(g, BigInt::zero());
        // Empty prefix recovers f(n).
        let g = g_oracle(&PrefixSpec {
            cls: c,
            n: 5,
            prefix: vec![],
        })
        .unwrap();
        assert_eq!(g, f_fast(2, 2, 5).unwrap());
        // Out-of-range entry is an argument error.
        assert!(g_oracle(&PrefixSpec {
            cls: c,
            n: 4,
            prefix: vec![7],
        })
        .is_err());
    }

    #[test]
    fn g_oracle_ceiling() {
        let c = cls(1, 2, 0);
        assert!(matches!(
            g_oracle(&PrefixSpec {
                cls: c,
                n: 13,
                prefix: vec![]
            }),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn lemma22_vanishing_box() {
        // A(n, l) = 0 for n >= k.
        for (l, m, a) in [(2, 2, 0), (2, 2, 1), (2, 3, 2), (3, 2, 0)] {
            let c = cls(l, m, a);
            for n in c.k()..=7 {
                assert_eq!(
                    sum_oracle(SumKind::A, &c, n, l).unwrap(),
                    BigInt::zero(),
                    "l={l} m={m} a={a} n={n}"
                );
            }
        }
    }

    #[test]
    fn lemma22_prefix_reduction() {
        // g_n with one out-of-box entry reduces to g_{n-1} of the
        // shifted prefix, for entries on either side of the box.
        for (l, m, a) in [(2, 2, 1), (2, 2, 2), (3, 1, 1)] {
            let c = cls(l, m, a);
            for n in c.k()..=7usize {
                let b = c.b(n);
                for d in 1..=c.l() {
                    // Box entries fill positions != r; place the free
                    // entry at position r = d for simplicity.
                    let lo = (c.a() + 1) as isize;
                    if lo > b || d < 1 {
                        continue;
                    }
                    let box_vals: Vec<usize> = (lo..=b).map(|v| v as usize).collect();
                    if box_vals.len() < d - 1 {
                        continue;
                    }
                    let fixed: Vec<usize> = box_vals[..d - 1].to_vec();
                    // Below the box.
                    for i_r in 1..=c.a() {
                        if fixed.contains(&i_r) {
                            continue;
                        }
                        let mut prefix = fixed.clone();
                        prefix.push(i_r);
                        let lhs = g_oracle(&PrefixSpec {
                            cls: c,
                            n,
                            prefix,
                        })
                        .unwrap();
                        let shifted: Vec<usize> = fixed.iter().map(|&v| v - 1).collect();
                        let rhs = g_oracle(&PrefixSpec {
                            cls: c,
                            n: n - 1,
                            prefix: shifted,
                        })
                        .unwrap();
                        assert_eq!(lhs, rhs, "below-box l={l} m={m} a={a} n={n} d={d} i_r={i_r}");
                    }
                    // Above the box.
                    for i_r in (b.max(0) as usize + 1)..=n {
                        if fixed.contains(&i_r) {
                            continue;
                        }
                        let mut prefix = fixed.clone();
                        prefix.push(i_r);
                        let lhs = g_oracle(&PrefixSpec {
                            cls: c,
                            n,
                            prefix,
                        })
                        .unwrap();
                        let rhs = g_oracle(&PrefixSpec {
                            cls: c,
                            n: n - 1,
                            prefix: fixed.clone(),
                        })
                        .unwrap();
                        assert_eq!(lhs, rhs, "above-box l={l} m={m} a={a} n={n} d={d} i_r={i_r}");
                    }
                }
            }
        }
    }

    #[test]
    fn sum_oracle_d0_is_f() {
        for kind in [SumKind::A, SumKind::B, SumKind::C] {
            let c = cls(2, 2, 1);
            assert_eq!(
                sum_oracle(kind, &c, 5, 0).unwrap(),
                f_fast(2, 2, 5).unwrap()
            );
        }
    }

    #[test]
    fn boundary_values_a_k_d() {
        // A(k, d) = d! C(l,d) (k-d)! - l!m! for 1 <= d <= l, a <= m.
        for l in 1..=3usize {
            for m in 1..=3usize {
                if l + m > 5 {
                    continue;
                }
                let k = l + m;
                for a in 0..=m {
                    let c = cls(l, m, a);
                    for d in 1..=l {
                        let expect = factorial(d) * binomial(l, d) * factorial(k - d)
                            - factorial(l) * factorial(m);
                        assert_eq!(
                            sum_oracle(SumKind::A, &c, k, d).unwrap(),
                            expect,
                            "l={l} m={m} a={a} d={d}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn theorem25_examples() {
        let c = cls(2, 2, 0);
        let f = f_sequence(2, 2, 5).unwrap();
        // d=0: just f(n).
        assert_eq!(
            theorem25_formula(&c, 0, &f[5..=5]).unwrap(),
            f[5].clone()
        );
        // d=1: f(n) - m f(n-1).
        assert_eq!(
            theorem25_formula(&c, 1, &f[4..=5]).unwrap(),
            &f[5] - BigInt::from(2) * &f[4]
        );
        // (l=2,m=2,n=5,d=2): 68 - 80 + 12 = 0.
        assert_eq!(theorem25_formula(&c, 2, &f[3..=5]).unwrap(), BigInt::zero());
        assert!(theorem25_formula(&c, 2, &f[..2]).is_err());
    }

    #[test]
    fn theorem25_matches_oracle() {
        for (l, m) in [(1, 2), (2, 2), (2, 3)] {
            let f = f_sequence(l, m, 7).unwrap();
            for a in 0..=m {
                let c = cls(l, m, a);
                for n in c.k()..=7usize {
                    for d in 0..=l {
                        let lhs = sum_oracle(SumKind::A, &c, n, d).unwrap();
                        let rhs = theorem25_formula(&c, d, &f[n - d..=n]).unwrap();
                        assert_eq!(lhs, rhs, "l={l} m={m} a={a} n={n} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn theorem23_spot_checks() {
        for (l, m, a, n, d) in [(2, 2, 0, 5, 1), (3, 2, 1, 6, 1), (3, 2, 0, 6, 2)] {
            let report = verify_theorem23(&cls(l, m, a), n, d).unwrap();
            assert!(report.pass, "{report:?}");
        }
    }

    #[test]
    fn lemma24_spot_checks() {
        for (l, m, a, n, d) in [(2, 2, 0, 4, 1), (2, 2, 2, 5, 2), (2, 3, 1, 5, 1)] {
            let reports = verify_lemma24(&cls(l, m, a), n, d).unwrap();
            for r in reports {
                assert!(r.pass, "{r:?}");
            }
        }
    }

    #[test]
    fn m_examples() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(m_direct(1, 1, 2).unwrap(), half);
        assert_eq!(m_closed(1, 1, 2).unwrap(), half);
        assert_eq!(m_direct(1, 2, 2).unwrap(), BigRational::zero());
        assert_eq!(m_closed(1, 2, 2).unwrap(), BigRational::zero());
        assert_eq!(m_direct(2, 3, 2).unwrap(), BigRational::one());
        assert_eq!(m_closed(2, 3, 2).unwrap(), BigRational::one());
        assert!(m_direct(2, 3, 1).is_err());
        assert!(m_direct(3, 2, 5).is_err());
    }

    #[test]
    fn m_direct_equals_closed() {
        for s in 1..=8usize {
            for t in s..=8usize {
                for n in s..=2 * (s + t) {
                    assert_eq!(
                        m_direct(s, t, n).unwrap(),
                        m_closed(s, t, n).unwrap(),
                        "s={s} t={t} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn reduction_identity() {
        for l in 1..=5usize {
            for m in 1..=5usize {
                for d in 1..=l {
                    assert!(reduction_identity_holds(l, m, d), "l={l} m={m} d={d}");
                }
            }
        }
    }
}
