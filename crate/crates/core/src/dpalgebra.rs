//! The divided-power polynomial algebra `DF_m` in `x_0, ..., x_{m-1}`.
//!
//! Elements are stored in reduced form: a monomial `x_0^(a_0) ... x_{m-1}^(a_{m-1})`
//! is just its exponent vector, and products use the structure constants
//! `x_i^(j) x_i^(k) = binom(j+k, j) x_i^(j+k)` directly, so the defining
//! relations of the algebra never have to be rewritten.
//!
//! Text format: `x0^(2)*x2` for divided powers, `x0^2` for an ordinary power
//! (which equals `2 x0^(2)`), coefficients as integers or `a/b`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::Partition;
use crate::ring::{Coeff, CoeffRing};

/// Exponent vector `(a_0, ..., a_{m-1})` of `x_0^(a_0) ... x_{m-1}^(a_{m-1})`.
///
/// The derived `Ord` is plain lexicographic order on exponent vectors, which
/// coincides with [`MonomialOrder::DpLex`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DividedMonomial(Vec<u32>);

impl DividedMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        DividedMonomial(exps)
    }

    pub fn one(m: usize) -> Self {
        DividedMonomial(vec![0; m])
    }

    /// `x_i^(k)` in `m` variables.
    pub fn var_power(m: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; m];
        e[i] = k;
        DividedMonomial(e)
    }

    /// `x^(λ)`: exponent `a_i = m_i(λ)`, with the explicit zeros of `λ`
    /// counted in `a_0`. `None` if a part is `>= m`.
    pub fn from_partition(lambda: &Partition, m: usize) -> Option<Self> {
        let mut e = vec![0u32; m];
        if m == 0 {
            return (lambda.total_len() == 0).then_some(DividedMonomial(e));
        }
        e[0] = lambda.zeros();
        for &p in lambda.parts() {
            *e.get_mut(p as usize)? += 1;
        }
        Some(DividedMonomial(e))
    }

    /// Inverse of [`DividedMonomial::from_partition`]: the partition with
    /// `a_i` parts equal to `i` (zeros included).
    pub fn to_partition(&self) -> Partition {
        let mut v = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            v.extend(std::iter::repeat(i as u32).take(a as usize));
        }
        Partition::new(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `Σ i·a_i`, the `t`-degree.
    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &a)| i as u32 * a).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Index of the highest variable present.
    pub fn top_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&a| a != 0)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &DividedMonomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn add_exps(&self, other: &DividedMonomial) -> DividedMonomial {
        DividedMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Writes the monomial with classic powers (`x0^2*x2`): a character-0
    /// display convention only, since `x^(a) = x^a / a!`.
    pub fn format_classic(&self) -> String {
        self.format_with(|i, a| if a == 1 { format!("x{i}") } else { format!("x{i}^{a}") })
    }

    fn format_with(&self, factor: impl Fn(usize, u32) -> String) -> String {
        let f: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| factor(i, a))
            .collect();
        if f.is_empty() {
            "1".to_string()
        } else {
            f.join("*")
        }
    }
}

impl fmt::Display for DividedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.format_with(|i, a| if a == 1 { format!("x{i}") } else { format!("x{i}^({a})") });
        f.write_str(&s)
    }
}

/// Product of two divided monomials: `(∏ binom(a_i + b_i, a_i), a + b)`,
/// the constant mapped into `ring` (it may vanish in `F_p`).
pub fn mono_mul(a: &DividedMonomial, b: &DividedMonomial, ring: CoeffRing) -> Result<(Coeff, DividedMonomial)> {
    if a.nvars() != b.nvars() {
        return invalid(format!("monomials in {} and {} variables", a.nvars(), b.nvars()));
    }
    let mut c = ring.one();
    for (&x, &y) in a.0.iter().zip(&b.0) {
        if x > 0 && y > 0 {
            c = ring.mul(&c, &ring.binomial((x + y) as u64, x as u64));
        }
    }
    Ok((c, a.add_exps(b)))
}

/// Integer structure constant `∏ binom(a_i + b_i, a_i)`.
pub fn structure_constant(a: &DividedMonomial, b: &DividedMonomial) -> BigInt {
    let mut c = BigInt::one();
    for (&x, &y) in a.0.iter().zip(&b.0) {
        if x > 0 && y > 0 {
            c *= crate::ring::binomial_int((x + y) as u64, x as u64);
        }
    }
    c
}

/// If `divisor <= target` componentwise and the structure constant
/// `c = ∏ binom(target_i, divisor_i)` is nonzero in `ring`, returns the
/// quotient `q` and `c`, so that `mono_mul(q, divisor) = (c, target)`.
pub fn try_divide(target: &DividedMonomial, divisor: &DividedMonomial, ring: CoeffRing) -> Option<(DividedMonomial, Coeff)> {
    if !divisor.divides(target) {
        return None;
    }
    let q = DividedMonomial(target.0.iter().zip(&divisor.0).map(|(t, d)| t - d).collect());
    let mut c = ring.one();
    for (&t, &d) in target.0.iter().zip(&divisor.0) {
        if d > 0 && t > d {
            c = ring.mul(&c, &ring.binomial(t as u64, d as u64));
        }
    }
    if ring.is_zero(&c) {
        return None;
    }
    Some((q, c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Lexicographic with `x_0 > x_1 > ... > x_{m-1}`.
    DpLex,
    /// Graded by total degree; ties broken at the largest differing index,
    /// where the smaller exponent wins.
    DpDegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &DividedMonomial, b: &DividedMonomial) -> Ordering {
        match self {
            MonomialOrder::DpLex => a.0.cmp(&b.0),
            MonomialOrder::DpDegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

pub fn compare(order: MonomialOrder, a: &DividedMonomial, b: &DividedMonomial) -> Ordering {
    order.compare(a, b)
}

/// A finitely supported element of `DF_m` over an exact ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPoly {
    ring: CoeffRing,
    nvars: usize,
    terms: BTreeMap<DividedMonomial, Coeff>,
}

impl DPoly {
    pub fn zero(ring: CoeffRing, nvars: usize) -> Self {
        DPoly { ring, nvars, terms: BTreeMap::new() }
    }

    pub fn one(ring: CoeffRing, nvars: usize) -> Self {
        Self::monomial(ring, DividedMonomial::one(nvars), ring.one())
    }

    pub fn monomial(ring: CoeffRing, mono: DividedMonomial, c: Coeff) -> Self {
        let nvars = mono.nvars();
        let mut p = DPoly::zero(ring, nvars);
        p.add_term(mono, c);
        p
    }

    /// `x_i^(k)`.
    pub fn var_power(ring: CoeffRing, nvars: usize, i: usize, k: u32) -> Self {
        Self::monomial(ring, DividedMonomial::var_power(nvars, i, k), ring.one())
    }

    /// Builds a polynomial from integer coefficients reduced into `ring`.
    pub fn from_integer_terms<'a>(
        ring: CoeffRing,
        nvars: usize,
        terms: impl IntoIterator<Item = (DividedMonomial, &'a BigInt)>,
    ) -> Self {
        let mut p = DPoly::zero(ring, nvars);
        for (m, c) in terms {
            p.add_term(m, ring.from_bigint(c));
        }
        p
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing DPLex order.
    pub fn terms(&self) -> impl Iterator<Item = (&DividedMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &DividedMonomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Adds `c·m` in place, pruning zeros.
    pub fn add_term(&mut self, m: DividedMonomial, c: Coeff) {
        assert_eq!(m.nvars(), self.nvars, "monomial length mismatch");
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if self.ring.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &DPoly) -> Result<()> {
        if self.ring != other.ring {
            return invalid(format!("ring mismatch: {} vs {}", self.ring, other.ring));
        }
        if self.nvars != other.nvars {
            return invalid(format!("variable count mismatch: {} vs {}", self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &DPoly) -> Result<DPoly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DPoly) -> Result<DPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DPoly {
        self.scalar_mul(&self.ring.from_i64(-1))
    }

    pub fn scalar_mul(&self, c: &Coeff) -> DPoly {
        let mut out = DPoly::zero(self.ring, self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), self.ring.mul(a, c));
        }
        out
    }

    /// `c · u · self` for a monomial `u`.
    pub fn mul_term(&self, u: &DividedMonomial, c: &Coeff) -> DPoly {
        let mut out = DPoly::zero(self.ring, self.nvars);
        for (m, a) in &self.terms {
            let (s, prod) = mono_mul(u, m, self.ring).expect("same variable count");
            out.add_term(prod, self.ring.mul(&self.ring.mul(a, c), &s));
        }
        out
    }

    pub fn mul(&self, other: &DPoly) -> Result<DPoly> {
        self.check_compatible(other)?;
        let mut out = DPoly::zero(self.ring, self.nvars);
        for (u, c) in &other.terms {
            for (m, a) in &self.terms {
                let (s, prod) = mono_mul(u, m, self.ring)?;
                out.add_term(prod, self.ring.mul(&self.ring.mul(a, c), &s));
            }
        }
        Ok(out)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&DividedMonomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&DividedMonomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// `(degree, weight)` if every term shares them.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let dw = (first.degree(), first.weight());
        it.all(|m| (m.degree(), m.weight()) == dw).then_some(dw)
    }

    /// Scales so that the leading coefficient under `order` is 1.
    pub fn monic(&self, order: MonomialOrder) -> DPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => self.scalar_mul(&self.ring.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Same integral polynomial over another ring. Only valid for polynomials
    /// with integer coefficients when leaving the rationals.
    pub fn change_ring(&self, ring: CoeffRing) -> Result<DPoly> {
        let mut out = DPoly::zero(ring, self.nvars);
        for (m, c) in &self.terms {
            let c = match c {
                Coeff::Rat(q) => ring.from_rational(q)?,
                Coeff::Mod(v) => match ring {
                    CoeffRing::Prime(p) if Some(p) == self.prime() => Coeff::Mod(*v),
                    _ => return invalid("cannot lift a prime-field polynomial to another ring"),
                },
            };
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    fn prime(&self) -> Option<u64> {
        match self.ring {
            CoeffRing::Prime(p) => Some(p),
            CoeffRing::Rational => None,
        }
    }

    /// Parses the text format. Factors may repeat and are multiplied out.
    pub fn parse(text: &str, ring: CoeffRing, nvars: usize) -> Result<DPoly> {
        parse_poly(text, ring, nvars)
    }

    /// Formats terms in descending `order`.
    pub fn to_string_ordered(&self, order: MonomialOrder) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        format_terms(terms.into_iter(), |m| m.to_string())
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a DividedMonomial, &'a Coeff)>, fmt_mono: impl Fn(&DividedMonomial) -> String) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = matches!(&abs, Coeff::Rat(q) if q.is_one()) || matches!(abs, Coeff::Mod(1));
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if unit {
            out.push_str(&fmt_mono(m));
        } else {
            out.push_str(&format!("{abs}*{}", fmt_mono(m)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for DPoly {
    /// Terms in descending DPLex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().rev(), |m| m.to_string()))
    }
}

fn parse_poly(text: &str, ring: CoeffRing, nvars: usize) -> Result<DPoly> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return invalid("empty polynomial");
    }
    let mut result = DPoly::zero(ring, nvars);
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if first => (1, rest),
            _ => return invalid(format!("expected '+' or '-' at {rest:?}")),
        };
        first = false;
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        if term.is_empty() {
            return invalid("empty term");
        }
        let mut t = DPoly::one(ring, nvars).scalar_mul(&ring.from_i64(sign));
        for factor in term.split('*') {
            t = t.mul(&parse_factor(factor, ring, nvars)?)?;
        }
        result = result.add(&t)?;
    }
    Ok(result)
}

fn parse_factor(f: &str, ring: CoeffRing, nvars: usize) -> Result<DPoly> {
    if let Some(v) = f.strip_prefix('x') {
        let (idx, pow) = match v.split_once('^') {
            Some((i, p)) => (i, Some(p)),
            None => (v, None),
        };
        let i: usize = idx.parse().map_err(|_| Error::InvalidInput(format!("bad variable {f:?}")))?;
        if i >= nvars {
            return invalid(format!("variable x{i} out of range for m = {nvars}"));
        }
        let bad = || Error::InvalidInput(format!("bad exponent in {f:?}"));
        return match pow {
            None => Ok(DPoly::var_power(ring, nvars, i, 1)),
            Some(p) if p.starts_with('(') => {
                let k: u32 = p.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?.parse().map_err(|_| bad())?;
                Ok(DPoly::var_power(ring, nvars, i, k))
            }
            Some(p) => {
                // x^k = k! x^(k)
                let k: u32 = p.parse().map_err(|_| bad())?;
                let fact: BigInt = (1..=k).map(BigInt::from).product();
                Ok(DPoly::var_power(ring, nvars, i, k).scalar_mul(&ring.from_bigint(&fact)))
            }
        };
    }
    let q = match f.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| Error::InvalidInput(format!("bad coefficient {f:?}")))?;
            let d: BigInt = d.parse().map_err(|_| Error::InvalidInput(format!("bad coefficient {f:?}")))?;
            if d == BigInt::from(0) {
                return invalid("zero denominator");
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(f.parse().map_err(|_| Error::InvalidInput(format!("bad factor {f:?}")))?),
    };
    Ok(DPoly::one(ring, nvars).scalar_mul(&ring.from_rational(&q)?))
}

/// Division of `f` by `gens` under `order`; see [`normal_form_with_cofactors`].
pub fn normal_form(f: &DPoly, gens: &[DPoly], order: MonomialOrder) -> Result<DPoly> {
    Ok(normal_form_with_cofactors(f, gens, order)?.0)
}

/// Returns `(r, q)` with `f = Σ q_i·gens[i] + r` and no term of `r`
/// reducible by any generator.
///
/// Generators are scanned in order of decreasing leading monomial (ties keep
/// the input order); the greatest reducible term is always treated first.
/// A term is reducible by `g` when `LM(g)` divides it with a structure
/// constant that is nonzero in the ring.
pub fn normal_form_with_cofactors(f: &DPoly, gens: &[DPoly], order: MonomialOrder) -> Result<(DPoly, Vec<DPoly>)> {
    for g in gens {
        f.check_compatible(g)?;
        if g.is_zero() {
            return invalid("zero generator in normal form");
        }
    }
    let ring = f.ring;
    let mut scan: Vec<usize> = (0..gens.len()).collect();
    scan.sort_by(|&i, &j| {
        order
            .compare(gens[j].leading_monomial(order).unwrap(), gens[i].leading_monomial(order).unwrap())
            .then(i.cmp(&j))
    });
    let mut cofactors = vec![DPoly::zero(ring, f.nvars); gens.len()];
    let mut rem = DPoly::zero(ring, f.nvars);
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for &gi in &scan {
            let g = &gens[gi];
            let (glm, glc) = g.leading_term(order).unwrap();
            if let Some((q, c)) = try_divide(&lm, glm, ring) {
                // x^(q) * g has leading term c * glc * x^(lm)
                let factor = ring.div(&lc, &ring.mul(&c, glc)).expect("nonzero");
                p = p.sub(&g.mul_term(&q, &factor))?;
                cofactors[gi].add_term(q, factor);
                reduced = true;
                break;
            }
        }
        if !reduced {
            p.terms.remove(&lm);
            rem.add_term(lm, lc);
        }
    }
    Ok((rem, cofactors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(v: &[u32]) -> DividedMonomial {
        DividedMonomial::new(v.to_vec())
    }

    const Q: CoeffRing = CoeffRing::Rational;

    #[test]
    fn mono_mul_examples() {
        let (c, m) = mono_mul(&mono(&[1]), &mono(&[1]), Q).unwrap();
        assert_eq!((c, m), (Q.from_i64(2), mono(&[2])));
        let f2 = CoeffRing::Prime(2);
        let (c, m) = mono_mul(&mono(&[1]), &mono(&[1]), f2).unwrap();
        assert_eq!((c, m), (f2.zero(), mono(&[2])));
        let a = mono(&[2, 0, 1]);
        let (c, m) = mono_mul(&a, &DividedMonomial::one(3), Q).unwrap();
        assert_eq!((c, m), (Q.one(), a));
        assert!(mono_mul(&mono(&[1]), &mono(&[1, 0]), Q).is_err());
    }

    #[test]
    fn order_examples() {
        let x0 = mono(&[1, 0]);
        let x1_5 = mono(&[0, 5]);
        assert_eq!(MonomialOrder::DpLex.compare(&x0, &x1_5), Ordering::Greater);
        let a = mono(&[0, 2, 0]);
        let b = mono(&[1, 0, 1]);
        assert_eq!(MonomialOrder::DpDegRevLex.compare(&a, &b), Ordering::Greater);
        for o in [MonomialOrder::DpLex, MonomialOrder::DpDegRevLex] {
            assert_eq!(o.compare(&a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn poly_arithmetic() {
        let x0 = DPoly::var_power(Q, 2, 0, 1);
        let x1 = DPoly::var_power(Q, 2, 1, 1);
        assert_eq!(x0.mul(&x0).unwrap(), DPoly::var_power(Q, 2, 0, 2).scalar_mul(&Q.from_i64(2)));
        assert!(x0.mul(&DPoly::zero(Q, 2)).unwrap().is_zero());
        let lhs = x0.add(&x1).unwrap().mul(&x1).unwrap();
        assert_eq!(lhs, DPoly::parse("x0*x1 + 2*x1^(2)", Q, 2).unwrap());
        let other = DPoly::var_power(CoeffRing::Prime(3), 2, 0, 1);
        assert!(x0.mul(&other).is_err());
        assert!(x0.add(&other).is_err());
    }

    #[test]
    fn try_divide_examples() {
        assert_eq!(try_divide(&mono(&[3]), &mono(&[2]), Q), Some((mono(&[1]), Q.from_i64(3))));
        assert_eq!(try_divide(&mono(&[2]), &mono(&[1]), CoeffRing::Prime(2)), None);
        assert_eq!(try_divide(&mono(&[1, 0]), &mono(&[0, 1]), Q), None);
    }

    #[test]
    fn normal_form_examples() {
        let g = DPoly::parse("x0*x2 + x1^(2)", Q, 3).unwrap();
        let f = DPoly::parse("x0*x2", Q, 3).unwrap();
        // x0*x2 leads under DPLex
        let r = normal_form(&f, std::slice::from_ref(&g), MonomialOrder::DpLex).unwrap();
        assert_eq!(r, DPoly::parse("-x1^(2)", Q, 3).unwrap());
        // x1^(2) leads under DPDegRevLex, so x0*x2 is already reduced there
        let r = normal_form(&f, std::slice::from_ref(&g), MonomialOrder::DpDegRevLex).unwrap();
        assert_eq!(r, f);
        let h = DPoly::parse("x1^(2)", Q, 3).unwrap();
        let r = normal_form(&h, std::slice::from_ref(&g), MonomialOrder::DpDegRevLex).unwrap();
        assert_eq!(r, DPoly::parse("-x0*x2", Q, 3).unwrap());
        for o in [MonomialOrder::DpLex, MonomialOrder::DpDegRevLex] {
            assert!(normal_form(&g, std::slice::from_ref(&g), o).unwrap().is_zero());
        }
        let reduced = DPoly::parse("x1 + x0", Q, 3).unwrap();
        assert_eq!(normal_form(&reduced, &[g], MonomialOrder::DpLex).unwrap(), reduced);
    }

    #[test]
    fn parse_and_format() {
        let p = DPoly::parse("x0^(2)*x2 - 3/2*x1 + 1", Q, 3).unwrap();
        assert_eq!(p.to_string(), "x0^(2)*x2 - 3/2*x1 + 1");
        // classic power x0^2 = 2 x0^(2)
        assert_eq!(DPoly::parse("x0^2", Q, 1).unwrap(), DPoly::parse("2*x0^(2)", Q, 1).unwrap());
        assert_eq!(DPoly::parse("x0*x0", Q, 1).unwrap(), DPoly::parse("2*x0^(2)", Q, 1).unwrap());
        assert!(DPoly::parse("x3", Q, 3).is_err());
        assert!(DPoly::parse("x0 +", Q, 3).is_err());
        assert!(DPoly::parse("1/0", Q, 3).is_err());
        assert_eq!(DPoly::zero(Q, 2).to_string(), "0");
        assert_eq!(mono(&[2, 0, 1]).format_classic(), "x0^2*x2");
    }

    #[test]
    fn partition_monomials() {
        let lam = Partition::new(vec![2, 0]);
        assert_eq!(DividedMonomial::from_partition(&lam, 3), Some(mono(&[1, 0, 1])));
        assert_eq!(DividedMonomial::from_partition(&lam, 2), None);
        assert_eq!(mono(&[1, 0, 1]).to_partition(), lam);
    }
}
