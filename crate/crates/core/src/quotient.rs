//! Graded slices of `DF_m / J_m` by exact linear algebra.
//!
//! `DF_m` is bigraded by degree `d = Σ a_i` and weight `w = Σ i·a_i`, and
//! `J_m` is generated by bihomogeneous elements, so the quotient splits into
//! finite-dimensional slices `(d, w)`. Inside a slice the ideal is spanned by
//!
//! ```text
//! I_{d,w} = gens_{d,w} + Σ_{i, j>=1} x_i^{(j)} · I_{d-j, w-ij}
//! ```
//!
//! which holds in every characteristic because any monomial `x^{(b)}` factors
//! as `x_i^{(b_i)}` times a monomial in the other variables with structure
//! constant 1. Slices are therefore built degree by degree, in parallel over
//! weights, each from echelon forms of lower slices.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis_enum::{BasisKind, BasisSet};
use crate::dpalgebra::{DPoly, DividedMonomial};
use crate::error::{invalid, Error, Result};
use crate::linalg::{Echelon, FieldEchelon};
use crate::partitions::enumerate_partitions;
use crate::ring::{binomial_int, Coeff, CoeffRing};
use crate::weyl_ideal::{jm_slice_terms, GeneratorSet};

/// Monomials of degree `d` and weight `w` in `m` variables, in decreasing
/// DPLex order.
pub fn slice_monomials(m: u32, d: u32, w: u32) -> Vec<DividedMonomial> {
    if m == 0 {
        return if d == 0 && w == 0 { vec![DividedMonomial::one(0)] } else { Vec::new() };
    }
    let mut out: Vec<DividedMonomial> = enumerate_partitions(w, m - 1, d as usize)
        .into_iter()
        .map(|p| DividedMonomial::from_partition(&p.padded_to(d as usize).unwrap(), m as usize).unwrap())
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn max_weight(m: u32, d: u32) -> u32 {
    d * m.saturating_sub(1)
}

/// Integer coordinates of a bihomogeneous polynomial in a slice, with
/// denominators cleared (harmless for row spaces).
fn int_row(p: &DPoly, index: &HashMap<DividedMonomial, usize>, ncols: usize) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        if let Coeff::Rat(q) = c {
            den = den.lcm(q.denom());
        }
    }
    let mut row = vec![BigInt::zero(); ncols];
    for (m, c) in p.terms() {
        row[index[m]] = match c {
            Coeff::Rat(q) => q.numer() * (&den / q.denom()),
            Coeff::Mod(v) => BigInt::from(*v),
        };
    }
    row
}

/// One graded piece `(d, w)`: its monomials and an echelon basis of the
/// ideal inside it.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    pub m: u32,
    pub ring: CoeffRing,
    pub degree: u32,
    pub weight: u32,
    pub monomials: Vec<DividedMonomial>,
    index: HashMap<DividedMonomial, usize>,
    echelon: Echelon,
}

impl GradedSlice {
    fn empty(m: u32, ring: CoeffRing, d: u32, w: u32) -> Self {
        let monomials = slice_monomials(m, d, w);
        let index = monomials.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let echelon = Echelon::new(ring, monomials.len());
        GradedSlice { m, ring, degree: d, weight: w, monomials, index, echelon }
    }

    pub fn size(&self) -> usize {
        self.monomials.len()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.size() - self.rank()
    }

    pub fn index_of(&self, a: &DividedMonomial) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Echelon basis of the ideal in this slice (integer rows over `Q`,
    /// residues over `F_p`).
    pub fn ideal_rows(&self) -> Vec<Vec<BigInt>> {
        self.echelon.int_rows()
    }

    /// Monomials that are not leading monomials (under DPLex) of any ideal
    /// element in this slice.
    pub fn standard_monomials(&self) -> Vec<DividedMonomial> {
        let piv: HashSet<usize> = self.echelon.pivots().iter().copied().collect();
        (0..self.size()).filter(|i| !piv.contains(i)).map(|i| self.monomials[i].clone()).collect()
    }

    fn add_poly(&mut self, p: &DPoly) {
        if self.echelon.is_full() || p.is_zero() {
            return;
        }
        let row = int_row(p, &self.index, self.size());
        self.echelon.insert_int(row);
    }

    /// Adds `x_i^{(j)} · r` for every echelon row `r` of `lower`.
    fn absorb(&mut self, lower: &GradedSlice, i: usize, j: u32) {
        for row in lower.echelon.int_rows() {
            if self.echelon.is_full() {
                return;
            }
            let mut v = vec![BigInt::zero(); self.size()];
            for (col, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut e = lower.monomials[col].exps().to_vec();
                let old = e[i];
                e[i] += j;
                let target = self.index[&DividedMonomial::new(e)];
                v[target] = c * binomial_int((old + j) as u64, j as u64);
            }
            self.echelon.insert_int(v);
        }
    }
}

/// Where slice generators come from.
enum Source<'a> {
    /// The defining `Y`-coefficients of `J_m`, plus `x_N, ..., x_{m-1}` when truncating.
    Jm { truncate: Option<u32> },
    Set(HashMap<(u32, u32), Vec<&'a DPoly>>),
}

/// Dimensions of one slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceDim {
    pub degree: u32,
    pub weight: u32,
    pub size: usize,
    pub quotient_dim: usize,
}

/// All slices of `DF_m / J` with degree `<= degree_bound`.
#[derive(Clone, Debug)]
pub struct QuotientOracle {
    pub m: u32,
    pub ring: CoeffRing,
    pub degree_bound: u32,
    pub truncate: Option<u32>,
    slices: Vec<Vec<GradedSlice>>,
    verified: Vec<BasisSet>,
}

impl QuotientOracle {
    /// The quotient by `J_m` (and by `x_N, ..., x_{m-1}` when `truncate = Some(N)`).
    pub fn new(m: u32, ring: CoeffRing, degree_bound: u32, truncate: Option<u32>) -> Result<Self> {
        if degree_bound < m {
            return Err(Error::Configuration(format!("degree bound {degree_bound} is below m = {m}")));
        }
        if truncate == Some(0) {
            return invalid("truncation index N must be >= 1");
        }
        Ok(Self::build(m, ring, degree_bound, truncate, Source::Jm { truncate }))
    }

    /// The quotient by the ideal generated by `gens`, which must cover the box.
    pub fn from_generators(gens: &GeneratorSet, degree_bound: u32) -> Result<Self> {
        let top = max_weight(gens.m, degree_bound);
        if !gens.covers(degree_bound, top) {
            return Err(Error::Configuration(format!(
                "generator set covers degree {:?} and weight {:?}, need degree {degree_bound} and weight {top}",
                gens.degree_bound, gens.weight_bound
            )));
        }
        Ok(Self::build(gens.m, gens.ring, degree_bound, None, Source::Set(gens.by_slice())))
    }

    fn build(m: u32, ring: CoeffRing, degree_bound: u32, truncate: Option<u32>, source: Source<'_>) -> Self {
        let mut slices: Vec<Vec<GradedSlice>> = Vec::with_capacity(degree_bound as usize + 1);
        for d in 0..=degree_bound {
            let level: Vec<GradedSlice> = (0..=max_weight(m, d))
                .into_par_iter()
                .map(|w| {
                    let mut slice = GradedSlice::empty(m, ring, d, w);
                    if slice.size() == 0 {
                        return slice;
                    }
                    for i in 0..m as usize {
                        for j in 1..=d {
                            let dw = i as u32 * j;
                            if dw > w || w - dw > max_weight(m, d - j) {
                                continue;
                            }
                            slice.absorb(&slices[(d - j) as usize][(w - dw) as usize], i, j);
                        }
                    }
                    match &source {
                        Source::Jm { truncate } => {
                            if let Some(n) = truncate {
                                if d == 1 && w >= *n && w < m {
                                    let x = DPoly::var_power(ring, m as usize, w as usize, 1);
                                    slice.add_poly(&x);
                                }
                            }
                            for (_, terms) in jm_slice_terms(m, d, w) {
                                if slice.echelon.is_full() {
                                    break;
                                }
                                let poly =
                                    DPoly::from_integer_terms(ring, m as usize, terms.iter().map(|(x, c)| (x.clone(), c)));
                                slice.add_poly(&poly);
                            }
                        }
                        Source::Set(map) => {
                            for g in map.get(&(d, w)).into_iter().flatten() {
                                slice.add_poly(g);
                            }
                        }
                    }
                    slice
                })
                .collect();
            slices.push(level);
        }
        QuotientOracle { m, ring, degree_bound, truncate, slices, verified: Vec::new() }
    }

    pub fn slice(&self, d: u32, w: u32) -> Option<&GradedSlice> {
        self.slices.get(d as usize)?.get(w as usize)
    }

    pub fn slices(&self) -> impl Iterator<Item = &GradedSlice> {
        self.slices.iter().flatten()
    }

    /// Nonempty slices with their dimensions, sorted by `(d, w)`.
    pub fn dims(&self) -> Vec<SliceDim> {
        self.slices()
            .filter(|s| s.size() > 0)
            .map(|s| SliceDim { degree: s.degree, weight: s.weight, size: s.size(), quotient_dim: s.quotient_dim() })
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.slices().map(GradedSlice::quotient_dim).sum()
    }

    /// Checks `candidate` slice by slice; a passing candidate is remembered
    /// so that [`QuotientOracle::reduce_element`] accepts it.
    pub fn verify(&mut self, candidate: &BasisSet) -> Result<VerificationReport> {
        let start = Instant::now();
        if candidate.m != self.m {
            return invalid(format!("candidate for m = {} checked against m = {}", candidate.m, self.m));
        }
        let mut by_slice: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
        for a in candidate.set() {
            if a.nvars() != self.m as usize {
                return invalid(format!("candidate monomial {a} has {} variables", a.nvars()));
            }
            let (d, w) = (a.degree(), a.weight());
            if d > self.degree_bound {
                return invalid(format!("candidate monomial {a} exceeds degree bound {}", self.degree_bound));
            }
            let s = self.slice(d, w).expect("slice in range");
            by_slice.entry((d, w)).or_default().push(s.index_of(a).expect("monomial in its slice"));
        }
        let reports: Vec<SliceReport> = self
            .slices()
            .filter(|s| s.size() > 0)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|s| {
                let cols = by_slice.get(&(s.degree, s.weight)).cloned().unwrap_or_default();
                let mut ech = s.echelon.clone();
                let before = ech.rank();
                for &c in &cols {
                    let mut v = vec![BigInt::zero(); s.size()];
                    v[c] = BigInt::one();
                    ech.insert_int(v);
                }
                SliceReport {
                    degree: s.degree,
                    weight: s.weight,
                    slice_dim: s.size(),
                    quotient_dim: s.quotient_dim(),
                    candidate_count: cols.len(),
                    independent: ech.rank() - before == cols.len(),
                    spanning: s.quotient_dim() == cols.len(),
                }
            })
            .collect();
        let passed = reports.iter().all(|r| r.independent && r.spanning);
        if passed && !self.verified.contains(candidate) {
            self.verified.push(candidate.clone());
        }
        Ok(VerificationReport {
            m: self.m,
            characteristic: self.ring.characteristic(),
            basis: candidate.kind.to_string(),
            degree_bound: self.degree_bound,
            truncate: self.truncate,
            total_quotient_dim: reports.iter().map(|r| r.quotient_dim).sum(),
            total_candidates: candidate.len(),
            failed_slices: reports.iter().filter(|r| !(r.independent && r.spanning)).count(),
            passed,
            slices: reports,
            wall_time_ms: start.elapsed().as_millis() as u64,
        })
    }

    /// Coordinates of the residue of `f` in a previously verified basis:
    /// the unique `c` with `f - Σ c_b b ∈ J` in every slice of the box.
    pub fn reduce_element(&self, f: &DPoly, candidate: &BasisSet) -> Result<BTreeMap<DividedMonomial, Coeff>> {
        if !self.verified.contains(candidate) {
            return Err(Error::MustVerifyFirst);
        }
        if f.ring() != self.ring || f.nvars() != self.m as usize {
            return invalid(format!("polynomial over {} in {} variables, expected {} in {}", f.ring(), f.nvars(), self.ring, self.m));
        }
        let ring = self.ring;
        let mut parts: BTreeMap<(u32, u32), Vec<(&DividedMonomial, &Coeff)>> = BTreeMap::new();
        for (a, c) in f.terms() {
            if a.degree() > self.degree_bound {
                return Err(Error::Configuration(format!("term {a} lies beyond the checked degree {}", self.degree_bound)));
            }
            parts.entry((a.degree(), a.weight())).or_default().push((a, c));
        }
        let mut out = BTreeMap::new();
        for ((d, w), terms) in parts {
            let s = self.slice(d, w).expect("slice in range");
            let is_basis: Vec<bool> = s.monomials.iter().map(|a| candidate.contains(a)).collect();
            // non-basis columns first, so every pivot avoids the basis
            let mut priority: Vec<usize> = (0..s.size()).filter(|&i| !is_basis[i]).collect();
            priority.extend((0..s.size()).filter(|&i| is_basis[i]));
            let mut ech = FieldEchelon::new(ring, priority);
            for row in s.ideal_rows() {
                ech.insert(row.iter().map(|x| ring.from_bigint(x)).collect());
            }
            let mut v = vec![ring.zero(); s.size()];
            for (a, c) in terms {
                v[s.index_of(a).unwrap()] = c.clone();
            }
            for (i, c) in ech.reduce(v).into_iter().enumerate() {
                if !ring.is_zero(&c) {
                    debug_assert!(is_basis[i]);
                    out.insert(s.monomials[i].clone(), c);
                }
            }
        }
        Ok(out)
    }
}

/// Per-slice verification outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub degree: u32,
    pub weight: u32,
    pub slice_dim: usize,
    pub quotient_dim: usize,
    pub candidate_count: usize,
    pub independent: bool,
    pub spanning: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub m: u32,
    /// 0 for `Q`.
    pub characteristic: u64,
    pub basis: String,
    pub degree_bound: u32,
    pub truncate: Option<u32>,
    pub total_quotient_dim: usize,
    pub total_candidates: usize,
    pub failed_slices: usize,
    pub passed: bool,
    pub slices: Vec<SliceReport>,
    /// Not part of the data: excluded from golden comparisons.
    pub wall_time_ms: u64,
}

/// Slice dimensions of `DF_m / J_m` up to `degree_bound`.
pub fn quotient_dim(m: u32, ring: CoeffRing, degree_bound: u32) -> Result<(Vec<SliceDim>, usize)> {
    let o = QuotientOracle::new(m, ring, degree_bound, None)?;
    Ok((o.dims(), o.total_dim()))
}

/// Slice dimensions of the truncated quotient `DF_m / (J_m + (x_N, ..., x_{m-1}))`.
pub fn truncated_quotient(m: u32, n: u32, ring: CoeffRing, degree_bound: u32) -> Result<(Vec<SliceDim>, usize)> {
    let o = QuotientOracle::new(m, ring, degree_bound, Some(n))?;
    Ok((o.dims(), o.total_dim()))
}

/// Builds the matching oracle and checks `candidate`. Truncated candidates
/// are checked against the truncated quotient.
pub fn verify_basis(m: u32, ring: CoeffRing, candidate: &BasisSet, degree_bound: u32) -> Result<VerificationReport> {
    let truncate = match candidate.kind {
        BasisKind::Truncated(n) => Some(n),
        _ => None,
    };
    QuotientOracle::new(m, ring, degree_bound, truncate)?.verify(candidate)
}

/// Slice `(d, w)` built literally: one row `u · g` per generator `g` and
/// monomial `u` with the complementary bidegree. Used to cross-check the
/// recursive construction.
pub fn build_slice(m: u32, ring: CoeffRing, d: u32, w: u32, gens: &GeneratorSet) -> Result<GradedSlice> {
    if gens.m != m || gens.ring != ring {
        return invalid("generator set does not match m and ring");
    }
    if !gens.covers(d, w) {
        return Err(Error::Configuration(format!(
            "generator set covers degree {:?} and weight {:?}, slice needs ({d}, {w})",
            gens.degree_bound, gens.weight_bound
        )));
    }
    let mut slice = GradedSlice::empty(m, ring, d, w);
    for g in &gens.entries {
        if g.degree > d || g.weight > w {
            continue;
        }
        for u in slice_monomials(m, d - g.degree, w - g.weight) {
            slice.add_poly(&g.poly.mul_term(&u, &ring.one()));
        }
    }
    Ok(slice)
}
