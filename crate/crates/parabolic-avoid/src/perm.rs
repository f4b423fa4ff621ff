//! Permutations, patterns, occurrence testing, parabolic cosets, and the
//! brute-force avoidance enumeration oracle.
//!
//! Permutations use one-line, 1-based notation throughout. Composition is
//! fixed as `(p ∘ q)(i) = p(q(i))`.

use std::collections::BTreeSet;
use std::fmt;

use num::BigInt;

use crate::{Error, Result};

/// A permutation of `{1, ..., n}` in one-line notation. `n = 0` (the empty
/// permutation) is legal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from a one-line word, validating that it is a
    /// bijection of `{1..=n}`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(word));
            }
            seen[v - 1] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    /// The k-cycle `σ = (2, 3, ..., k, 1)`, i.e. `σ(i) = i + 1 mod k`.
    pub fn sigma(k: usize) -> Self {
        let mut word: Vec<usize> = (2..=k).collect();
        if k > 0 {
            word.push(1);
        }
        Self { word }
    }

    /// The simple transposition `s_i` in `S_k`, swapping `i` and `i + 1`.
    pub fn simple_transposition(k: usize, i: usize) -> Result<Self> {
        if i < 1 || i + 1 > k {
            return Err(Error::OutOfRange(format!("s_{i} does not exist in S_{k}")));
        }
        let mut word: Vec<usize> = (1..=k).collect();
        word.swap(i - 1, i);
        Ok(Self { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self {
            word: other.word.iter().map(|&i| self.word[i - 1]).collect(),
        }
    }

    /// `self` composed with itself `e` times.
    pub fn power(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.len());
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Reverses the word: `(i_1, ..., i_k) -> (i_k, ..., i_1)`.
    pub fn reversal(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Self { word }
    }

    /// Maps each entry `i` to `n + 1 - i`.
    pub fn complement(&self) -> Self {
        let n = self.len();
        Self {
            word: self.word.iter().map(|&i| n + 1 - i).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A finite set of forbidden patterns, all of the same length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSet {
    k: usize,
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let patterns: BTreeSet<Permutation> = patterns.into_iter().collect();
        let mut lengths = patterns.iter().map(Permutation::len);
        let k = lengths.next().unwrap_or(0);
        if lengths.any(|l| l != k) {
            return Err(Error::MixedPatternLengths);
        }
        Ok(Self { k, patterns })
    }

    /// Common length of the member patterns.
    pub fn pattern_len(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.patterns.contains(p)
    }

    /// Image of the set under an entrywise map (reversal, complement, ...).
    pub fn map(&self, f: impl Fn(&Permutation) -> Permutation) -> Self {
        Self {
            k: self.k,
            patterns: self.patterns.iter().map(f).collect(),
        }
    }
}

/// Parameters `(l, m, a)` identifying the coset `σ^a P_{l,m}` of
/// `S_{l+m}`, together with the derived quantities used by the counting
/// identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AvoidanceClass {
    l: usize,
    m: usize,
    a: usize,
}

impl AvoidanceClass {
    pub fn new(l: usize, m: usize, a: usize) -> Result<Self> {
        if l < 1 || m < 1 || a > l + m - 1 {
            return Err(Error::InvalidClass { l, m, a });
        }
        Ok(Self { l, m, a })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn k(&self) -> usize {
        self.l + self.m
    }

    pub fn lambda(&self) -> usize {
        self.l.min(self.m)
    }

    pub fn mu(&self) -> usize {
        self.l.max(self.m)
    }

    /// `b = n - m + a`. Can be negative for small `n`.
    pub fn b(&self, n: usize) -> isize {
        n as isize - self.m as isize + self.a as isize
    }
}

/// True iff the two words have the same relative order at every index
/// pair. Entries within each word must be pairwise distinct.
pub fn is_order_isomorphic(alpha: &[usize], beta: &[usize]) -> Result<bool> {
    if alpha.len() != beta.len() {
        return Err(Error::LengthMismatch(alpha.len(), beta.len()));
    }
    for i in 0..alpha.len() {
        for j in (i + 1)..alpha.len() {
            if (alpha[i] < alpha[j]) != (beta[i] < beta[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn word_has_occurrence_from(word: &[usize], tau: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == tau.len() {
        return is_order_isomorphic(chosen, tau).unwrap();
    }
    let need = tau.len() - chosen.len();
    for i in start..word.len() {
        if word.len() - i < need {
            break;
        }
        chosen.push(word[i]);
        // Partial order-isomorphism check prunes dead prefixes early.
        let d = chosen.len();
        let consistent = (0..d - 1)
            .all(|j| (chosen[j] < chosen[d - 1]) == (tau[j] < tau[d - 1]));
        let found = consistent && word_has_occurrence_from(word, tau, i + 1, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// True iff `word` (any sequence of distinct integers) contains a
/// subsequence order-isomorphic to `tau`.
pub fn word_contains(word: &[usize], tau: &Permutation) -> bool {
    if tau.len() > word.len() {
        return false;
    }
    if tau.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(tau.len());
    word_has_occurrence_from(word, tau.word(), 0, &mut chosen)
}

/// True iff the pattern `tau` occurs in `pi`.
pub fn occurs(tau: &Permutation, pi: &Permutation) -> bool {
    word_contains(pi.word(), tau)
}

/// True iff `pi` avoids every pattern in `set`.
pub fn avoids_all(pi: &Permutation, set: &PatternSet) -> bool {
    set.iter().all(|tau| !occurs(tau, pi))
}

/// Breadth-first closure of a generator set under composition. Always
/// contains the identity; an empty generator set yields the trivial
/// subgroup.
pub fn subgroup_closure(k: usize, generators: &[Permutation]) -> Result<PatternSet> {
    for g in generators {
        if g.len() != k {
            return Err(Error::LengthMismatch(g.len(), k));
        }
    }
    let mut closure = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(k)];
    closure.insert(Permutation::identity(k));
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q = g.compose(&p);
            if closure.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    PatternSet::new(closure)
}

/// The maximal parabolic subgroup `P_{l,m}` of `S_{l+m}`, generated by
/// every simple transposition except `s_l`.
pub fn parabolic_subgroup(l: usize, m: usize) -> Result<PatternSet> {
    if l < 1 || m < 1 {
        return Err(Error::InvalidClass { l, m, a: 0 });
    }
    let k = l + m;
    let mut gens = Vec::new();
    for i in 1..k {
        if i != l {
            gens.push(Permutation::simple_transposition(k, i)?);
        }
    }
    subgroup_closure(k, &gens)
}

/// The left coset `σ^a P_{l,m}` as an explicit pattern set of size
/// `l!·m!`, computed by group composition so every `0 ≤ a ≤ k-1` is
/// supported.
pub fn parabolic_coset(cls: &AvoidanceClass) -> Result<PatternSet> {
    let subgroup = parabolic_subgroup(cls.l(), cls.m())?;
    let shift = Permutation::sigma(cls.k()).power(cls.a());
    PatternSet::new(subgroup.iter().map(|p| shift.compose(p)))
}

/// The nonmaximal parabolic subgroup `P_{l1,l2,l3}` of `S_{l1+l2+l3}`,
/// generated by all simple transpositions except `s_{l1}` and
/// `s_{l1+l2}`.
pub fn nonmaximal_parabolic_subgroup(l1: usize, l2: usize, l3: usize) -> Result<PatternSet> {
    if l1 < 1 || l2 < 1 || l3 < 1 {
        return Err(Error::OutOfRange(format!(
            "P_{{{l1},{l2},{l3}}} requires positive parts"
        )));
    }
    let k = l1 + l2 + l3;
    let mut gens = Vec::new();
    for i in 1..k {
        if i != l1 && i != l1 + l2 {
            gens.push(Permutation::simple_transposition(k, i)?);
        }
    }
    subgroup_closure(k, &gens)
}

/// True iff appending the final entry of `word` created an occurrence of
/// `tau`, given that `word[..len-1]` already contained none.
fn new_occurrence_at_end(word: &[usize], tau: &Permutation) -> bool {
    let k = tau.len();
    if k == 0 || word.len() < k {
        return k == 0 && !word.is_empty();
    }
    let last = word.len() - 1;
    // Any new occurrence must use the appended entry, which sits at the
    // final position, so it matches the last letter of tau.
    let tau_word = tau.word();
    let prefix_tau = &tau_word[..k - 1];
    let mut chosen = Vec::with_capacity(k - 1);
    fn rec(
        word: &[usize],
        last_val: usize,
        tau: &[usize],
        tau_last: usize,
        start: usize,
        upto: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == tau.len() {
            return true;
        }
        let need = tau.len() - chosen.len();
        for i in start..upto {
            if upto - i < need {
                break;
            }
            let v = word[i];
            let d = chosen.len();
            let consistent = (v < last_val) == (tau[d] < tau_last)
                && (0..d).all(|j| (chosen[j] < v) == (tau[j] < tau[d]));
            if consistent {
                chosen.push(v);
                if rec(word, last_val, tau, tau_last, i + 1, upto, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(
        word,
        word[last],
        prefix_tau,
        tau_word[k - 1],
        0,
        last,
        &mut chosen,
    )
}

/// Options for the brute-force enumeration.
#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    /// Abandon prefixes that already contain a forbidden pattern. The
    /// `false` setting exists to guard the optimization itself in tests.
    pub prune: bool,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { prune: true }
    }
}

/// Visits every permutation in `S_n(T)` in lexicographic order.
pub fn for_each_avoider(
    n: usize,
    set: &PatternSet,
    opts: EnumerateOptions,
    mut visit: impl FnMut(&[usize]),
) {
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn dfs(
        n: usize,
        set: &PatternSet,
        opts: EnumerateOptions,
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut impl FnMut(&[usize]),
    ) {
        if prefix.len() == n {
            if !opts.prune {
                let pi = Permutation::new(prefix.clone()).unwrap();
                if !avoids_all(&pi, set) {
                    return;
                }
            }
            visit(prefix);
            return;
        }
        for v in 1..=n {
            if used[v - 1] {
                continue;
            }
            prefix.push(v);
            used[v - 1] = true;
            let dead = opts.prune && set.iter().any(|tau| new_occurrence_at_end(prefix, tau));
            if !dead {
                dfs(n, set, opts, prefix, used, visit);
            }
            prefix.pop();
            used[v - 1] = false;
        }
    }
    dfs(n, set, opts, &mut prefix, &mut used, &mut visit);
}

/// Counts the permutations in `S_n(T)` whose first `prefix.len()` entries
/// equal `prefix`. Entries must lie in `1..=n`; a prefix with a repeated
/// entry (or one already containing a forbidden pattern) yields 0.
pub fn count_avoiders_with_prefix(n: usize, set: &PatternSet, prefix: &[usize]) -> Result<BigInt> {
    if prefix.len() > n {
        return Err(Error::OutOfRange(format!(
            "prefix of length {} in S_{n}",
            prefix.len()
        )));
    }
    let mut used = vec![false; n];
    let mut word = Vec::with_capacity(n);
    for &v in prefix {
        if v < 1 || v > n {
            return Err(Error::OutOfRange(format!("prefix entry {v} not in 1..={n}")));
        }
        if used[v - 1] {
            return Ok(BigInt::from(0u32)); // repeated entry, no completions
        }
        used[v - 1] = true;
        word.push(v);
        if set.iter().any(|tau| new_occurrence_at_end(&word, tau)) {
            return Ok(BigInt::from(0u32));
        }
    }
    fn dfs(n: usize, set: &PatternSet, word: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        if word.len() == n {
            return 1;
        }
        let mut total = 0;
        for v in 1..=n {
            if used[v - 1] {
                continue;
            }
            word.push(v);
            used[v - 1] = true;
            if !set.iter().any(|tau| new_occurrence_at_end(word, tau)) {
                total += dfs(n, set, word, used);
            }
            word.pop();
            used[v - 1] = false;
        }
        total
    }
    Ok(BigInt::from(dfs(n, set, &mut word, &mut used)))
}

/// Exact `|S_n(T)|`. `n = 0` counts the empty permutation once.
pub fn enumerate_avoiders(n: usize, set: &PatternSet, opts: EnumerateOptions) -> BigInt {
    let mut count: u64 = 0;
    let mut big = BigInt::from(0u32);
    for_each_avoider(n, set, opts, |_| {
        count += 1;
        if count == u64::MAX {
            big += count;
            count = 0;
        }
    });
    big + count
}

/// Collects the avoiders in lexicographic order.
pub fn avoiders(n: usize, set: &PatternSet) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_avoider(n, set, EnumerateOptions::default(), |w| {
        out.push(Permutation::new(w.to_vec()).unwrap());
    });
    out
}
