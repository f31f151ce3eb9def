//! Symmetric functions in finitely many variables: Kostka numbers, the
//! coefficients `D_{λμ}` of forgotten polynomials, and reduction in the
//! coinvariant algebra `Q[t_1, ..., t_m] / (symmetric, positive degree)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};
use crate::partitions::{dominates, enumerate_partitions, Partition};

type KostkaKey = (Vec<u32>, Vec<u32>);

fn kostka_memo() -> &'static RwLock<HashMap<KostkaKey, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<KostkaKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `K_{λμ}`: the number of semistandard tableaux of shape `λ` and content `μ`.
///
/// Zero parts of `μ` are ignored; the order of the content does not matter.
pub fn kostka(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let mut content: Vec<u32> = mu.parts().to_vec();
    content.sort_unstable();
    kostka_rec(lambda.parts().to_vec(), content)
}

/// Peels the largest entry off as a horizontal strip of size `content.last()`.
fn kostka_rec(shape: Vec<u32>, mut content: Vec<u32>) -> BigInt {
    let Some(&r) = content.last() else {
        return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    if content.len() < shape.len() {
        // entries in column 1 are strictly increasing
        return BigInt::zero();
    }
    let key = (shape.clone(), content.clone());
    if let Some(v) = kostka_memo().read().unwrap().get(&key) {
        return v.clone();
    }
    content.pop();
    let mut total = BigInt::zero();
    let mut inner = shape.clone();
    strips(&shape, 0, r, &mut inner, &mut |nu| {
        let nu: Vec<u32> = nu.iter().copied().filter(|&x| x > 0).collect();
        total += kostka_rec(nu, content.clone());
    });
    kostka_memo().write().unwrap().insert(key, total.clone());
    total
}

/// Calls `f` for each `ν ⊆ λ` with `λ/ν` a horizontal strip of size `left`.
fn strips(lambda: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if i == lambda.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let lower = lambda.get(i + 1).copied().unwrap_or(0);
    let room = lambda[i] - lower;
    for take in 0..=room.min(left) {
        nu[i] = lambda[i] - take;
        strips(lambda, i + 1, left - take, nu, f);
    }
    nu[i] = lambda[i];
}

/// `D_{λμ} = (-1)^{|μ|-ℓ(λ)} Σ ∏_i ℓ(η^i)! / ∏_j m_j(η^i)!`, summed over
/// sequences `(η^1, η^2, ...)` with `η^i ⊢ μ_i` and `⊎ η^i = λ`.
pub fn forgotten_coeff(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let top = lambda.first() as usize;
    let mut mult = vec![0u32; top + 1];
    for &p in lambda.parts() {
        mult[p as usize] += 1;
    }
    let targets: Vec<u32> = mu.parts().to_vec();
    let total = split_sum(&mut mult, &targets);
    if (mu.size() as usize + lambda.len()) % 2 == 1 {
        -total
    } else {
        total
    }
}

/// Sum over ways to carve `targets` (in order) out of the multiset `mult`,
/// weighting each piece `η` by `ℓ(η)!/∏ m_j(η)!`.
fn split_sum(mult: &mut Vec<u32>, targets: &[u32]) -> BigInt {
    let Some((&t, rest)) = targets.split_first() else {
        return if mult.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
    };
    let mut total = BigInt::zero();
    let mut piece = vec![0u32; mult.len()];
    pieces(mult, &mut piece, mult.len() - 1, t, &mut |mult, piece| {
        total += multinomial(piece) * split_sum(mult, rest);
    });
    total
}

/// Enumerates sub-multisets `piece <= mult` of total size `left` using part
/// sizes `<= j`, removing them from `mult` while `f` runs.
fn pieces(
    mult: &mut Vec<u32>,
    piece: &mut Vec<u32>,
    j: usize,
    left: u32,
    f: &mut impl FnMut(&mut Vec<u32>, &[u32]),
) {
    if left == 0 {
        let snapshot = piece.clone();
        f(mult, &snapshot);
        return;
    }
    if j == 0 {
        return;
    }
    let max = mult[j].min(left / j as u32);
    for c in (0..=max).rev() {
        mult[j] -= c;
        piece[j] = c;
        pieces(mult, piece, j - 1, left - c * j as u32, f);
        mult[j] += c;
    }
    piece[j] = 0;
}

/// `(Σ c_j)! / ∏ c_j!`.
pub(crate) fn multinomial(counts: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut n = 0u64;
    for &c in counts {
        for i in 1..=c as u64 {
            n += 1;
            acc = acc * BigInt::from(n) / BigInt::from(i);
        }
    }
    acc
}

/// Polynomial in `t_1, ..., t_r` with rational coefficients; exponent vectors
/// are indexed from `t_1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl OPoly {
    pub fn zero(nvars: usize) -> Self {
        OPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = OPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = OPoly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &OPoly) -> OPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> OPoly {
        let mut out = OPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    pub fn sub(&self, other: &OPoly) -> OPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn mul(&self, other: &OPoly) -> OPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = OPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// The same polynomial in `n >= nvars` variables.
    pub fn extend_vars(&self, n: usize) -> OPoly {
        assert!(n >= self.nvars);
        let mut out = OPoly::zero(n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.resize(n, 0);
            out.add_term(e, c.clone());
        }
        out
    }

    /// Leading term under lex with `t_1 < t_2 < ... < t_r`.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().max_by(|a, b| cmp_lex_desc_vars(a.0, b.0))
    }
}

/// Lex order with `t_1 < ... < t_r`: compare exponents from the last variable.
pub fn cmp_lex_desc_vars(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The monomial symmetric polynomial `M_λ(t_1, ..., t_r)`; zero if `ℓ(λ) > r`.
pub fn mono_sym(lambda: &Partition, r: usize) -> OPoly {
    let mut out = OPoly::zero(r);
    if lambda.len() > r {
        return out;
    }
    let mut exps = lambda.parts().to_vec();
    exps.resize(r, 0);
    exps.sort_unstable();
    // iterate distinct permutations in increasing order
    loop {
        out.add_term(exps.clone(), BigRational::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The complete homogeneous polynomial `h_k(t_1, ..., t_r)`.
pub fn complete_h(k: u32, r: usize) -> OPoly {
    let mut out = OPoly::zero(r);
    for lambda in enumerate_partitions(k, k, r) {
        out = out.add(&mono_sym(&lambda, r));
    }
    out
}

/// The Schur polynomial `s_λ(t_1, ..., t_r) = Σ_{μ ⪯ λ} K_{λμ} M_μ`.
pub fn schur_poly(lambda: &Partition, r: usize) -> Result<OPoly> {
    if lambda.len() > r {
        return invalid(format!("schur polynomial of {lambda} needs at least {} variables", lambda.len()));
    }
    let mut out = OPoly::zero(r);
    for mu in enumerate_partitions(lambda.size(), lambda.first(), r) {
        if dominates(lambda, &mu) {
            out = out.add(&mono_sym(&mu, r).scale(&int(kostka(lambda, &mu))));
        }
    }
    Ok(out)
}

/// The Gröbner basis `{h_{m-r+1}(t_1, ..., t_r) : 1 <= r <= m}` of the
/// coinvariant ideal, as polynomials in `m` variables.
pub fn coinvariant_basis(m: usize) -> Vec<OPoly> {
    (1..=m).map(|r| complete_h((m - r + 1) as u32, r).extend_vars(m)).collect()
}

/// Normal form of `f` modulo the coinvariant ideal in `m` variables, under
/// lex with `t_1 < ... < t_m`. The leading monomial of `h_{m-r+1}(t_1..t_r)`
/// is `t_r^{m-r+1}`, so a term is reducible iff some `e_r >= m - r + 1`.
pub fn coinvariant_reduce(f: &OPoly, m: usize) -> Result<OPoly> {
    if f.nvars() > m {
        return invalid(format!("polynomial in {} variables, expected at most {m}", f.nvars()));
    }
    let basis = coinvariant_basis(m);
    let mut p = f.extend_vars(m);
    let mut rem = OPoly::zero(m);
    while let Some((e, c)) = p.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
        // r is 1-based: variable t_r sits at index r-1
        match (1..=m).find(|&r| e[r - 1] as usize >= m - r + 1) {
            Some(r) => {
                let g = &basis[r - 1];
                let mut shift = e.clone();
                shift[r - 1] -= (m - r + 1) as u32;
                p = p.sub(&g.mul(&OPoly::monomial(shift, c)));
            }
            None => {
                p.terms.remove(&e);
                rem.add_term(e, c);
            }
        }
    }
    Ok(rem)
}

/// Whether `s_λ(t_1, ..., t_k)` survives in the coinvariant algebra of `m`
/// variables, for `λ_1 <= m - k` and `ℓ(λ) <= k <= m`.
pub fn schur_nonvanishing(lambda: &Partition, k: usize, m: usize) -> Result<bool> {
    if lambda.len() > k || k > m || lambda.first() as usize + k > m {
        return invalid(format!("need l(lambda) <= k <= m and lambda_1 <= m - k, got lambda = {lambda}, k = {k}, m = {m}"));
    }
    Ok(!coinvariant_reduce(&schur_poly(lambda, k)?, m)?.is_zero())
}
