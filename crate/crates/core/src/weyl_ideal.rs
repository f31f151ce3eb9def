//! The ideal `J_m ⊂ DF_m` and the two explicit generating families `G_m`
//! (Schur polynomials) and `S_revlex` (forgotten polynomials).
//!
//! `J_m` is generated by the coefficients of `u_1^{a_1} ... u_s^{a_s}` in the
//! divided powers `Y[s]^{(k')}` with `k' + (a_1 + ... + a_s) >= m + 1`, where
//!
//! ```text
//! Y[s] = Σ_η (-1)^{ℓ(η)} ℓ(η)!/∏ m_i(η)! · x_{|η|} · u_1^{m_1(η)} ... u_s^{m_s(η)}
//! ```
//!
//! runs over partitions `η` with parts `<= s` and `|η| <= m - 1`. Such a
//! coefficient has degree `k'` and weight `Σ i·a_i`. The family is infinite,
//! so it is materialized per `(degree, weight)` box.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dpalgebra::{DPoly, DividedMonomial, MonomialOrder};
use crate::error::{invalid, Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::ring::{binomial_int, Coeff, CoeffRing};
use crate::symfunc::{forgotten_coeff, kostka, multinomial};

/// Parameters of `Y[s]^{(k)}` truncated to `|η| <= m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct YSeriesSpec {
    pub s: u32,
    pub m: u32,
    pub k: u32,
}

impl YSeriesSpec {
    pub fn new(s: u32, m: u32, k: u32) -> Result<Self> {
        if m == 0 {
            return invalid("Y-series needs m >= 1");
        }
        Ok(YSeriesSpec { s, m, k })
    }
}

/// One term `coeff · x_var · u^{u_exps}` of `Y[s]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YTerm {
    pub coeff: BigInt,
    pub var: usize,
    pub u_exps: Vec<u32>,
}

fn y_term(eta: &Partition, s: u32) -> YTerm {
    let mults = eta.multiplicities(s as usize);
    let mut coeff = multinomial(&mults);
    if eta.len() % 2 == 1 {
        coeff = -coeff;
    }
    YTerm { coeff, var: eta.size() as usize, u_exps: mults }
}

/// The terms of `Y[s]`, by increasing `|η|` and then decreasing lex `η`.
/// `k` plays no role here.
pub fn y_series(spec: YSeriesSpec) -> Vec<YTerm> {
    let mut out = Vec::new();
    for n in 0..spec.m {
        for eta in enumerate_partitions(n, spec.s, n as usize) {
            out.push(y_term(&eta, spec.s));
        }
    }
    out
}

/// Expansion of `Y^{(k)}` at a fixed `u`-exponent: entry `n` of the result
/// collects the products that use exactly `n` factors with `η ≠ ∅`, with the
/// `x_0` factor from `η = ∅` still missing. Keys are exponent vectors.
struct YExpansion {
    by_count: Vec<BTreeMap<Vec<u32>, BigInt>>,
}

impl YExpansion {
    /// `a` is indexed from `u_1`; `max_count` bounds the number of factors.
    fn new(m: u32, a: &[u32], max_count: u32) -> Self {
        let s = a.len() as u32;
        let m_us = m as usize;
        let mut terms = Vec::new();
        for n in (1..m).rev() {
            for eta in enumerate_partitions(n, s, n as usize) {
                let t = y_term(&eta, s);
                if t.u_exps.iter().zip(a).all(|(x, y)| x <= y) {
                    terms.push(t);
                }
            }
        }
        let mut by_count = vec![BTreeMap::new(); max_count as usize + 1];
        let weight: u32 = a.iter().enumerate().map(|(i, &x)| (i as u32 + 1) * x).sum();
        if m > 1 || weight == 0 {
            let mut reach = vec![vec![false; a.len()]; terms.len() + 1];
            for idx in (0..terms.len()).rev() {
                let (head, tail) = reach.split_at_mut(idx + 1);
                for (j, r) in head[idx].iter_mut().enumerate() {
                    *r = tail[0][j] || terms[idx].u_exps[j] > 0;
                }
            }
            let mut ctx = ExpandCtx { terms: &terms, reach: &reach, max_count, max_var: m - 1, out: &mut by_count };
            let mut rem = a.to_vec();
            let mut x = vec![0u32; m_us];
            ctx.expand(0, &mut rem, weight, 0, &BigInt::one(), &mut x);
        }
        YExpansion { by_count }
    }

    /// Coefficient polynomial of `Y^{(k)}` (integral) as `(monomial, coeff)` pairs.
    fn at(&self, k: u32) -> BTreeMap<DividedMonomial, BigInt> {
        let mut out = BTreeMap::new();
        for (n, part) in self.by_count.iter().enumerate().take(k as usize + 1) {
            for (e, c) in part {
                let mut e = e.clone();
                e[0] = k - n as u32;
                out.insert(DividedMonomial::new(e), c.clone());
            }
        }
        out
    }
}

struct ExpandCtx<'a> {
    terms: &'a [YTerm],
    /// `reach[idx][j]`: some term at or after `idx` involves `u_{j+1}`.
    reach: &'a [Vec<bool>],
    max_count: u32,
    max_var: u32,
    out: &'a mut Vec<BTreeMap<Vec<u32>, BigInt>>,
}

impl ExpandCtx<'_> {
    /// Chooses the multiplicity `i` of `terms[idx]`, multiplying in
    /// `(c·x_j·u^τ)^{(i)} = c^i x_j^{(i)} u^{iτ}` with the structure constant
    /// `binom(x_j + i, i)`.
    fn expand(&mut self, idx: usize, rem: &mut Vec<u32>, rem_weight: u32, used: u32, coef: &BigInt, x: &mut Vec<u32>) {
        if rem_weight == 0 {
            *self.out[used as usize].entry(x.clone()).or_insert_with(BigInt::zero) += coef;
            return;
        }
        if idx == self.terms.len()
            || used + rem_weight.div_ceil(self.max_var) > self.max_count
            || rem.iter().zip(&self.reach[idx]).any(|(&r, &ok)| r > 0 && !ok)
        {
            return;
        }
        let t = &self.terms[idx];
        let tw = t.var as u32;
        let old = x[t.var];
        let mut cpow = BigInt::one();
        let mut i = 0u32;
        loop {
            let c = coef * &cpow * binomial_int((old + i) as u64, i as u64);
            self.expand(idx + 1, rem, rem_weight - i * tw, used + i, &c, x);
            let fits = used + i < self.max_count && t.u_exps.iter().zip(rem.iter()).all(|(e, r)| e <= r);
            if !fits {
                break;
            }
            for (r, e) in rem.iter_mut().zip(&t.u_exps) {
                *r -= e;
            }
            i += 1;
            x[t.var] = old + i;
            cpow *= &t.coeff;
        }
        for (r, e) in rem.iter_mut().zip(&t.u_exps) {
            *r += e * i;
        }
        x[t.var] = old;
    }
}

/// Coefficient of `u_1^{a_1} ... u_s^{a_s}` in `Y[s]^{(k)}`, mapped into `ring`.
/// Entries of `a` beyond `s` must vanish.
pub fn y_power_coeff(spec: YSeriesSpec, a: &[u32], ring: CoeffRing) -> Result<DPoly> {
    Ok(DPoly::from_integer_terms(ring, spec.m as usize, y_power_coeff_int(spec, a)?.iter().map(|(m, c)| (m.clone(), c))))
}

/// Integral version of [`y_power_coeff`].
pub fn y_power_coeff_int(spec: YSeriesSpec, a: &[u32]) -> Result<BTreeMap<DividedMonomial, BigInt>> {
    if spec.m == 0 {
        return invalid("Y-series needs m >= 1");
    }
    let s = spec.s as usize;
    if a.iter().skip(s).any(|&x| x != 0) {
        return Ok(BTreeMap::new());
    }
    let mut a = a.to_vec();
    a.resize(s, 0);
    Ok(YExpansion::new(spec.m, &a, spec.k).at(spec.k))
}

/// Which family a [`GeneratorSet`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Coefficients of powers of the `Y`-series: the defining family of `J_m`.
    Y,
    Gm,
    Srevlex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Provenance {
    /// Coefficient of `u^a` in `Y[s]^{(k - Σa)}`.
    Y { s: u32, k: u32, a: Vec<u32> },
    /// `s_{λ,k}` or `f_{λ,k}`.
    Partition { lambda: Partition, k: u32 },
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub poly: DPoly,
    pub provenance: Provenance,
    pub degree: u32,
    pub weight: u32,
}

/// A family of generators of `J_m`, homogeneous in degree and weight.
///
/// `degree_bound`/`weight_bound` say up to where the family is known to
/// contain every generator of its kind; `None` means it is complete.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub m: u32,
    pub ring: CoeffRing,
    pub family: Family,
    pub degree_bound: Option<u32>,
    pub weight_bound: Option<u32>,
    pub entries: Vec<Generator>,
}

impl GeneratorSet {
    /// Generators grouped by `(degree, weight)`.
    pub fn by_slice(&self) -> HashMap<(u32, u32), Vec<&DPoly>> {
        let mut map: HashMap<(u32, u32), Vec<&DPoly>> = HashMap::new();
        for g in &self.entries {
            map.entry((g.degree, g.weight)).or_default().push(&g.poly);
        }
        map
    }

    /// Whether every generator of degree `<= d` and weight `<= w` is present.
    pub fn covers(&self, d: u32, w: u32) -> bool {
        self.degree_bound.is_none_or(|b| d <= b) && self.weight_bound.is_none_or(|b| w <= b)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn polys(&self) -> Vec<DPoly> {
        self.entries.iter().map(|g| g.poly.clone()).collect()
    }
}

fn make_generator(poly: DPoly, provenance: Provenance) -> Option<Generator> {
    let (degree, weight) = poly.bidegree()?;
    Some(Generator { poly, provenance, degree, weight })
}

/// Fingerprint of a polynomial up to nonzero scalars.
fn scalar_class(p: &DPoly) -> Vec<(DividedMonomial, Coeff)> {
    p.monic(MonomialOrder::DpLex).terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

fn dedup(entries: Vec<Generator>) -> Vec<Generator> {
    let mut seen = HashSet::new();
    entries.into_iter().filter(|g| seen.insert(scalar_class(&g.poly))).collect()
}

/// The `J_m` generators of degree `d` and weight `w`, deduplicated up to scalar.
///
/// With `a = (m_1(λ), ..., m_{m-1}(λ))` for `λ ⊢ w` with parts `<= m-1`, these
/// are the coefficients of `u^a` in `Y[λ_1]^{(d)}` with `d + ℓ(λ) >= m + 1`.
/// Taking `s = λ_1` loses nothing: larger `s` only adds terms that cannot
/// contribute to `u^a`.
pub fn jm_slice_generators(m: u32, ring: CoeffRing, d: u32, w: u32) -> Vec<Generator> {
    let out = jm_slice_terms(m, d, w)
        .filter_map(|(lambda, terms)| {
            let poly = DPoly::from_integer_terms(ring, m as usize, terms.iter().map(|(x, c)| (x.clone(), c)));
            let s = lambda.first();
            let prov = Provenance::Y { s, k: d + lambda.len() as u32, a: lambda.multiplicities(s as usize) };
            make_generator(poly, prov)
        })
        .collect();
    dedup(out)
}

/// Lazily yields `(λ, integral coefficient polynomial)` for the slice `(d, w)`.
pub(crate) fn jm_slice_terms(
    m: u32,
    d: u32,
    w: u32,
) -> impl Iterator<Item = (Partition, BTreeMap<DividedMonomial, BigInt>)> {
    let lambdas = if m == 0 { Vec::new() } else { enumerate_partitions(w, m - 1, w as usize) };
    lambdas.into_iter().filter(move |l| d as usize + l.len() >= m as usize + 1).map(move |lambda| {
        let a = lambda.multiplicities(lambda.first() as usize);
        let terms = YExpansion::new(m, &a, d).at(d);
        (lambda, terms)
    })
}

/// All `J_m` generators with degree `<= degree_bound` and weight `<= weight_bound`.
pub fn jm_generators(m: u32, ring: CoeffRing, degree_bound: u32, weight_bound: u32) -> Result<GeneratorSet> {
    if m == 0 {
        return invalid("J_m needs m >= 1");
    }
    if degree_bound < m + 1 {
        return Err(Error::Configuration(format!("degree bound {degree_bound} is below m + 1 = {}", m + 1)));
    }
    let slices: Vec<(u32, u32)> = (0..=degree_bound)
        .flat_map(|d| (0..=weight_bound.min(d * (m - 1))).map(move |w| (d, w)))
        .collect();
    let entries = slices
        .par_iter()
        .map(|&(d, w)| jm_slice_generators(m, ring, d, w))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(GeneratorSet {
        m,
        ring,
        family: Family::Y,
        degree_bound: Some(degree_bound),
        weight_bound: Some(weight_bound),
        entries,
    })
}

/// The whole `Y`-coefficient family in the box, without deduplication:
/// one entry per `(s, k', a)` with `1 <= s <= m-1` (or `s = 0` when `m = 1`)
/// and `a_s ≠ 0` unless `a = 0`.
pub fn jm_generators_raw(m: u32, ring: CoeffRing, degree_bound: u32, weight_bound: u32) -> Result<Vec<Generator>> {
    if m == 0 {
        return invalid("J_m needs m >= 1");
    }
    let mut out = Vec::new();
    for s in 0..m.max(1) {
        if s == 0 && m > 1 {
            continue;
        }
        for w in 0..=weight_bound {
            for lambda in enumerate_partitions(w, s, w as usize) {
                let a = lambda.multiplicities(s as usize);
                let exp = YExpansion::new(m, &a, degree_bound);
                for d in 0..=degree_bound {
                    if (d as usize + lambda.len()) < m as usize + 1 {
                        continue;
                    }
                    let terms = exp.at(d);
                    let poly = DPoly::from_integer_terms(ring, m as usize, terms.iter().map(|(x, c)| (x.clone(), c)));
                    let prov = Provenance::Y { s, k: d + lambda.len() as u32, a: a.clone() };
                    out.extend(make_generator(poly, prov));
                }
            }
        }
    }
    Ok(out)
}

/// `s_{λ,k} = Σ_{μ ⪯ λ} K_{λμ} x^{(μ)}`, with `μ` zero padded to `k` parts.
pub fn schur_dp(lambda: &Partition, k: u32, m: u32, ring: CoeffRing) -> Result<DPoly> {
    let lambda = lambda.without_zeros();
    if lambda.len() > k as usize || lambda.first() + 1 > m {
        return invalid(format!("schur_dp needs l(lambda) <= k and lambda_1 <= m-1 (lambda = {lambda}, k = {k}, m = {m})"));
    }
    let mut out = DPoly::zero(ring, m as usize);
    for mu in enumerate_partitions(lambda.size(), lambda.first(), k as usize) {
        let c = kostka(&lambda, &mu);
        if c.is_zero() {
            continue;
        }
        let mono = DividedMonomial::from_partition(&mu.padded_to(k as usize).unwrap(), m as usize).unwrap();
        out.add_term(mono, ring.from_bigint(&c));
    }
    Ok(out)
}

/// `f_{λ,k} = Σ_{μ ⪰ λ} D_{λμ} x^{(μ)}` over `μ` with `k` parts (zeros
/// included) and parts `<= m-1`. Zero when no such `μ` carries a nonzero
/// coefficient, in particular when `λ_1 > m-1`.
pub fn forgotten_dp(lambda: &Partition, k: u32, m: u32, ring: CoeffRing) -> Result<DPoly> {
    if m == 0 {
        return invalid("forgotten_dp needs m >= 1");
    }
    Ok(DPoly::from_integer_terms(ring, m as usize, forgotten_int(lambda, k, m).iter().map(|(x, c)| (x.clone(), c))))
}

fn forgotten_int(lambda: &Partition, k: u32, m: u32) -> Vec<(DividedMonomial, BigInt)> {
    let lambda = lambda.without_zeros();
    let mut out = Vec::new();
    if lambda.first() + 1 > m {
        return out;
    }
    for mu in enumerate_partitions(lambda.size(), m - 1, k as usize) {
        let c = forgotten_coeff(&lambda, &mu);
        if !c.is_zero() {
            let mono = DividedMonomial::from_partition(&mu.padded_to(k as usize).unwrap(), m as usize).unwrap();
            out.push((mono, c));
        }
    }
    out
}

/// `G_m = {s_{λ,k} : λ_1 + k > m, ℓ(λ) <= k <= m+1, λ_1 <= m-1}`.
pub fn gm_set(m: u32, ring: CoeffRing) -> Result<GeneratorSet> {
    if m == 0 {
        return invalid("G_m needs m >= 1");
    }
    let mut entries = Vec::new();
    for k in 0..=m + 1 {
        for l1 in (m + 1).saturating_sub(k)..m {
            // partitions with first part exactly l1 and at most k parts
            for rest in enumerate_partitions_first(l1, k) {
                let poly = schur_dp(&rest, k, m, ring)?;
                entries.extend(make_generator(poly, Provenance::Partition { lambda: rest, k }));
            }
        }
    }
    Ok(GeneratorSet { m, ring, family: Family::Gm, degree_bound: None, weight_bound: None, entries })
}

/// Partitions with first part exactly `l1` (empty when `l1 = 0`) and at most `k` parts.
fn enumerate_partitions_first(l1: u32, k: u32) -> Vec<Partition> {
    if l1 == 0 {
        return vec![Partition::empty()];
    }
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for size in l1..=l1 * k {
        for p in enumerate_partitions(size, l1, k as usize) {
            if p.first() == l1 {
                out.push(p);
            }
        }
    }
    out
}

/// `S_revlex = {f_{λ,k} : 2 <= k <= m+1, ℓ(λ) >= m-k+1, λ_1 <= m-1}`, nonzero
/// members only. Characteristic 0 only.
pub fn srevlex_set(m: u32, ring: CoeffRing) -> Result<GeneratorSet> {
    if m == 0 {
        return invalid("S_revlex needs m >= 1");
    }
    if let CoeffRing::Prime(p) = ring {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    let mut entries = Vec::new();
    for k in 2..=m + 1 {
        let min_len = (m + 1).saturating_sub(k) as usize;
        // f_{λ,k} vanishes once |λ| > k(m-1)
        for size in 0..=k * (m - 1) {
            for lambda in enumerate_partitions(size, m - 1, size as usize) {
                if lambda.len() < min_len {
                    continue;
                }
                let poly = forgotten_dp(&lambda, k, m, ring)?;
                entries.extend(make_generator(poly, Provenance::Partition { lambda, k }));
            }
        }
    }
    Ok(GeneratorSet { m, ring, family: Family::Srevlex, degree_bound: None, weight_bound: None, entries })
}

/// Expected leading monomials of `G_m`: `x_0^{(a_0)} ... x_s^{(a_s)}`
/// with `a_s ≠ 0` and `a_0 + ... + a_s > m - s`, up to degree `max_degree`.
pub fn leader_set(m: u32, max_degree: u32) -> Vec<DividedMonomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        for mono in monomials_of_degree(m as usize, d) {
            if let Some(s) = mono.top_index() {
                if d as i64 > m as i64 - s as i64 {
                    out.push(mono);
                }
            }
        }
    }
    out.sort();
    out
}

/// All monomials of degree `d` in `m` variables, in decreasing DPLex order.
pub fn monomials_of_degree(m: usize, d: u32) -> Vec<DividedMonomial> {
    let mut out = Vec::new();
    if m == 0 {
        if d == 0 {
            out.push(DividedMonomial::one(0));
        }
        return out;
    }
    let mut e = vec![0u32; m];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<DividedMonomial>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(DividedMonomial::new(e.clone()));
            return;
        }
        for a in (0..=left).rev() {
            e[i] = a;
            rec(i + 1, left - a, e, out);
        }
        e[i] = 0;
    }
    rec(0, d, &mut e, &mut out);
    out
}

/// Whether `s_{λ,k} = Σ_{μ ⪯ λ'} K_{λ'μ} f_{μ,k}` in `DF_m` over `Q`.
/// Needs `ℓ(λ) <= k` and `λ_1 <= m-1`.
pub fn verify_transition(lambda: &Partition, k: u32, m: u32) -> Result<bool> {
    let q = CoeffRing::Rational;
    let lhs = schur_dp(lambda, k, m, q)?;
    let lambda = lambda.without_zeros();
    let conj = lambda.transpose();
    let mut rhs = DPoly::zero(q, m as usize);
    for mu in enumerate_partitions(conj.size(), conj.first(), conj.size() as usize) {
        let c = kostka(&conj, &mu);
        if c.is_zero() {
            continue;
        }
        rhs = rhs.add(&forgotten_dp(&mu, k, m, q)?.scalar_mul(&q.from_bigint(&c)))?;
    }
    Ok(lhs == rhs)
}

/// Whether the coefficient of `u^{(m_1(λ), ..., m_{λ_1}(λ))}` in `Y[λ_1]^{(k)}`
/// equals `(-1)^{|λ|} f_{λ,k}` over `Q`.
pub fn verify_fy(lambda: &Partition, k: u32, m: u32) -> Result<bool> {
    let lambda = lambda.without_zeros();
    let s = lambda.first();
    let a = lambda.multiplicities(s as usize);
    let lhs = y_power_coeff_int(YSeriesSpec::new(s, m, k)?, &a)?;
    let mut rhs: BTreeMap<DividedMonomial, BigInt> = BTreeMap::new();
    for (mono, c) in forgotten_int(&lambda, k, m) {
        rhs.insert(mono, if lambda.size() % 2 == 1 { -c } else { c });
    }
    Ok(lhs.into_iter().filter(|(_, c)| !c.is_zero()).collect::<BTreeMap<_, _>>() == rhs)
}
