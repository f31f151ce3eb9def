//! Closed-form monomial bases of `W(m) = DF_m / J_m` and the counting
//! identities behind the revlex basis. No linear algebra happens here.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dpalgebra::DividedMonomial;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Lex,
    Revlex,
    Cv,
    Truncated(u32),
    /// A user-supplied monomial set.
    Custom,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::Lex => write!(f, "lex"),
            BasisKind::Revlex => write!(f, "revlex"),
            BasisKind::Cv => write!(f, "cv"),
            BasisKind::Truncated(n) => write!(f, "truncated-{n}"),
            BasisKind::Custom => write!(f, "custom"),
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(BasisKind::Lex),
            "revlex" => Ok(BasisKind::Revlex),
            "cv" => Ok(BasisKind::Cv),
            "custom" => Ok(BasisKind::Custom),
            _ => match s.strip_prefix("truncated-").map(str::parse::<u32>) {
                Some(Ok(n)) if n >= 1 => Ok(BasisKind::Truncated(n)),
                _ => invalid(format!("unknown basis kind {s:?}")),
            },
        }
    }
}

/// A set of monomials in `m` variables together with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSet {
    pub m: u32,
    pub kind: BasisKind,
    monomials: BTreeSet<DividedMonomial>,
}

impl BasisSet {
    pub fn new(m: u32, kind: BasisKind, monomials: impl IntoIterator<Item = DividedMonomial>) -> Self {
        BasisSet { m, kind, monomials: monomials.into_iter().collect() }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, a: &DividedMonomial) -> bool {
        self.monomials.contains(a)
    }

    pub fn set(&self) -> &BTreeSet<DividedMonomial> {
        &self.monomials
    }

    /// Monomials by increasing degree, then weight, then decreasing exponents.
    pub fn canonical(&self) -> Vec<DividedMonomial> {
        let mut v: Vec<_> = self.monomials.iter().cloned().collect();
        v.sort_by(|a, b| {
            (a.degree(), a.weight())
                .cmp(&(b.degree(), b.weight()))
                .then_with(|| b.cmp(a))
        });
        v
    }

    pub fn max_degree(&self) -> u32 {
        self.monomials.iter().map(DividedMonomial::degree).max().unwrap_or(0)
    }

    /// Copy without the given monomial.
    pub fn without(&self, a: &DividedMonomial) -> BasisSet {
        let mut out = self.clone();
        out.monomials.remove(a);
        out
    }
}

/// `{x_0^{(a_0)} ... x_s^{(a_s)} : a_0 + ... + a_s <= m - s}`, top index `s`.
pub fn lex_basis(m: u32) -> BasisSet {
    let n = m as usize;
    let mut out = vec![DividedMonomial::one(n)];
    for s in 0..n {
        let cap = m - s as u32;
        for d in 1..=cap {
            // a_s >= 1, the rest of the degree spread over x_0..x_{s-1}
            let mut e = vec![0u32; n];
            compositions(&mut e, 0, s, d - 1, &mut |e| {
                let mut e = e.to_vec();
                e[s] += 1;
                out.push(DividedMonomial::new(e));
            });
        }
    }
    BasisSet::new(m, BasisKind::Lex, out)
}

/// Calls `f` with every way to put `left` units into `e[i..end]` (plus `e[end]`).
fn compositions(e: &mut Vec<u32>, i: usize, end: usize, left: u32, f: &mut impl FnMut(&[u32])) {
    if i == end {
        e[i] = left;
        f(e);
        e[i] = 0;
        return;
    }
    for a in 0..=left {
        e[i] = a;
        compositions(e, i + 1, end, left - a, f);
    }
    e[i] = 0;
}

/// For every `s` with `a_s ≠ 0`: `a_0 + ... + a_s <= m - s`.
///
/// No leading monomial `x_0^{(b_0)} ... x_s^{(b_s)}` (`b_s ≠ 0`,
/// `Σ b > m - s`) divides `a` exactly when this holds: the largest candidate
/// divisor with top index `s` is `b_i = a_i` for `i <= s`.
pub fn is_reduced_lex(a: &DividedMonomial, m: u32) -> bool {
    let mut prefix = 0i64;
    for (s, &x) in a.exps().iter().enumerate() {
        prefix += x as i64;
        if x != 0 && prefix > m as i64 - s as i64 {
            return false;
        }
    }
    true
}

/// Whether `f` lies in `R_1`: `Σ f_i <= m/2` and, for `1 <= i <= m-1`,
/// `(i-1) f_i + i f_{i+1} <= m - 2 Σ_{j>=i} f_j` with `f_m = 0`.
pub fn in_r1(f: &[u32], m: u32) -> bool {
    let m = m as i64;
    let n = f.len();
    let total: i64 = f.iter().map(|&x| x as i64).sum();
    if 2 * total > m {
        return false;
    }
    let mut suffix = 0i64;
    for i in (1..n).rev() {
        suffix += f[i] as i64;
        let next = f.get(i + 1).copied().unwrap_or(0) as i64;
        if (i as i64 - 1) * f[i] as i64 + i as i64 * next > m - 2 * suffix {
            return false;
        }
    }
    true
}

/// `R_1` enumerated from the top variable down, pruning with the inequalities.
fn r1(m: u32) -> Vec<Vec<u32>> {
    let n = m as usize;
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut f = vec![0u32; n];
    r1_rec(m as i64, n - 1, 0, &mut f, &mut out);
    out
}

fn r1_rec(m: i64, i: usize, suffix_above: i64, f: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i == 0 {
        // only Σ f <= m/2 constrains f_0
        let cap = m / 2 - suffix_above;
        for a in 0..=cap.max(-1) {
            f[0] = a as u32;
            out.push(f.clone());
        }
        f[0] = 0;
        return;
    }
    let next = f.get(i + 1).copied().unwrap_or(0) as i64;
    let ii = i as i64;
    // (i-1) f_i + i f_{i+1} <= m - 2 f_i - 2 suffix_above
    let room = m - 2 * suffix_above - ii * next;
    if room < 0 {
        return;
    }
    let cap = room / (ii + 1);
    for a in 0..=cap {
        if 2 * (suffix_above + a) > m {
            break;
        }
        f[i] = a as u32;
        r1_rec(m, i - 1, suffix_above + a, f, out);
    }
    f[i] = 0;
}

/// `R_m = R_1 ∪ R_2` where `R_2 = {g + (m - 2 deg g) e_0 : g ∈ R_1, deg g < m/2}`.
pub fn revlex_basis(m: u32) -> BasisSet {
    let mut out = Vec::new();
    for g in r1(m) {
        let d: u32 = g.iter().sum();
        if 2 * d < m {
            let mut h = g.clone();
            h[0] += m - 2 * d;
            out.push(DividedMonomial::new(h));
        }
        out.push(DividedMonomial::new(g));
    }
    BasisSet::new(m, BasisKind::Revlex, out)
}

/// Membership in the revlex basis by direct evaluation of both conditions.
pub fn in_revlex(f: &DividedMonomial, m: u32) -> bool {
    let e = f.exps();
    if in_r1(e, m) {
        return true;
    }
    let k = f.degree() as i64;
    if 2 * k <= m as i64 || e.is_empty() {
        return false;
    }
    let shifted = m as i64 - 2 * k + e[0] as i64;
    if shifted < 0 {
        return false;
    }
    let mut g = e.to_vec();
    g[0] = shifted as u32;
    in_r1(&g, m)
}

/// Whether `i` satisfies every Chari-Venkatesh inequality
/// `j i_k + (j+1) i_{k+1} + 2 Σ_{p>=k+2} i_p <= m - k + j - 1`
/// for `0 <= k <= m-1`, `1 <= j <= k+1`.
pub fn in_cv(i: &[u32], m: u32) -> bool {
    let n = i.len();
    let mut suffix = 0i64; // Σ_{p >= k+2}
    for k in (0..n).rev() {
        let ik = i[k] as i64;
        let ik1 = i.get(k + 1).copied().unwrap_or(0) as i64;
        if !cv_ok(m as i64, k as i64, ik, ik1, suffix) {
            return false;
        }
        suffix += ik1;
    }
    true
}

fn cv_ok(m: i64, k: i64, ik: i64, ik1: i64, suffix: i64) -> bool {
    (1..=k + 1).all(|j| j * ik + (j + 1) * ik1 + 2 * suffix <= m - k + j - 1)
}

/// Tuples satisfying the Chari-Venkatesh inequalities, enumerated from the
/// top index down.
pub fn cv_basis(m: u32) -> BasisSet {
    let n = m as usize;
    let mut out = Vec::new();
    if n == 0 {
        out.push(DividedMonomial::one(0));
    } else {
        let mut e = vec![0u32; n];
        cv_rec(m as i64, n - 1, 0, &mut e, &mut out);
    }
    BasisSet::new(m, BasisKind::Cv, out)
}

fn cv_rec(m: i64, k: usize, suffix: i64, e: &mut Vec<u32>, out: &mut Vec<DividedMonomial>) {
    let ik1 = e.get(k + 1).copied().unwrap_or(0) as i64;
    let kk = k as i64;
    // j = 1 gives i_k <= m - k - 2 i_{k+1} - 2 Σ_{p>=k+2} i_p
    let cap = m - kk - 2 * ik1 - 2 * suffix;
    for a in 0..=cap.max(-1) {
        if !cv_ok(m, kk, a, ik1, suffix) {
            continue;
        }
        e[k] = a as u32;
        if k == 0 {
            out.push(DividedMonomial::new(e.clone()));
        } else {
            cv_rec(m, k - 1, suffix + ik1, e, out);
        }
    }
    e[k] = 0;
}

/// Revlex basis monomials not involving `x_N, ..., x_{m-1}`.
pub fn truncated_basis(m: u32, n: u32) -> Result<BasisSet> {
    if n < 1 {
        return invalid("truncation index N must be >= 1");
    }
    let full = revlex_basis(m);
    let keep = full.monomials.into_iter().filter(|a| a.exps().iter().skip(n as usize).all(|&x| x == 0));
    Ok(BasisSet::new(m, BasisKind::Truncated(n), keep))
}

/// `g(t, ℓ, s, m)`: the number of degree-`ℓ` monomials of `R_1` supported on
/// `x_t, ..., x_{m-1}` with `f_t = s`, computed by the recursion
///
/// ```text
/// g(t, ℓ, s, m) = Σ_{j=0}^{ℓ-s} H(m - 2ℓ - tj - (t-1)s) g(t+1, ℓ-s, j, m)
/// ```
///
/// with `g(m, 0, 0, m) = 1`, `g(t, ℓ, -1, m) = g(t, ℓ+1, 0, m)` and `H` the
/// unit step (`H(0) = 1`).
pub fn count_g(t: i64, l: i64, s: i64, m: i64) -> Result<u64> {
    if m < 1 || t < 1 || t > m || s < -1 {
        return invalid(format!("count_g index out of range: t = {t}, l = {l}, s = {s}, m = {m}"));
    }
    let mut memo = HashMap::new();
    Ok(g_rec(t, l, s, m, &mut memo))
}

fn g_rec(t: i64, l: i64, s: i64, m: i64, memo: &mut HashMap<(i64, i64, i64), u64>) -> u64 {
    if s == -1 {
        return g_rec(t, l + 1, 0, m, memo);
    }
    if t == m {
        return u64::from(l == 0 && s == 0);
    }
    if l < 0 || s > l || m - 2 * l < (t - 1) * s {
        return 0;
    }
    if let Some(&v) = memo.get(&(t, l, s)) {
        return v;
    }
    let mut total = 0;
    for j in 0..=l - s {
        if m - 2 * l - t * j - (t - 1) * s >= 0 {
            total += g_rec(t + 1, l - s, j, m, memo);
        }
    }
    memo.insert((t, l, s), total);
    total
}

/// `B_{m,ℓ} = binom(m, ℓ) - binom(m, ℓ-1)`, the number of degree-`ℓ`
/// monomials of the revlex basis without `x_0`, for `0 <= ℓ <= m/2`.
pub fn count_b(m: u32, l: u32) -> Result<u64> {
    if 2 * l > m {
        return invalid(format!("count_B needs l <= m/2, got l = {l}, m = {m}"));
    }
    if m > 62 {
        return invalid("count_B supports m <= 62");
    }
    let c = |k: u32| num_integer::binomial(m as u64, k as u64);
    Ok(if l == 0 { 1 } else { c(l) - c(l - 1) })
}
