//! Integer partitions, their orders, and the `eta`/`nu` constructions used to
//! describe the leading monomials of the revlex generating family.
//!
//! A [`Partition`] keeps its positive parts in weakly decreasing order and
//! counts explicit zero parts separately, so `(2,0,0)` and `(2)` share the same
//! positive parts but differ in padding.
//!
//! Three orders are provided:
//!
//! * dominance ([`dominates`]), a partial order on partitions of equal size;
//! * lexicographic ([`cmp_lex`]);
//! * reverse lexicographic ([`cmp_revlex`]): at the first index where the
//!   zero-padded part sequences differ, the partition with the *smaller* part
//!   is the greater one. With this convention `mu ⪰ lambda` implies
//!   `mu <=_revlex lambda`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
    zeros: u32,
}

impl Partition {
    /// Builds a partition from arbitrary nonnegative values. Values are sorted
    /// decreasingly and zeros are moved into the padding counter.
    pub fn new(mut values: Vec<u32>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        let zeros = values.iter().filter(|&&v| v == 0).count() as u32;
        values.retain(|&v| v != 0);
        Partition { parts: values, zeros }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        Partition::new(vec![k])
    }

    /// Positive parts, weakly decreasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn zeros(&self) -> u32 {
        self.zeros
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`: the number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Positive parts plus explicit zeros.
    pub fn total_len(&self) -> usize {
        self.parts.len() + self.zeros as usize
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ_i` with 1-based indexing; 0 beyond the positive parts.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `m_i(λ)`: the number of parts equal to `i`. For `i = 0` this is the
    /// padding count.
    pub fn multiplicity(&self, i: u32) -> u32 {
        if i == 0 {
            self.zeros
        } else {
            self.parts.iter().filter(|&&p| p == i).count() as u32
        }
    }

    /// Multiplicity vector `(m_1, ..., m_len)`.
    pub fn multiplicities(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0u32; len];
        for &p in &self.parts {
            if (p as usize) <= len {
                out[p as usize - 1] += 1;
            }
        }
        out
    }

    /// Builds a partition from its multiplicity vector `(m_1, m_2, ...)`.
    pub fn from_multiplicities(mults: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (i, &c) in mults.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i as u32 + 1).take(c as usize));
        }
        Partition { parts, zeros: 0 }
    }

    /// Same positive parts, padded with zeros to total length `len`. Returns
    /// `None` when `ℓ(λ) > len`.
    pub fn padded_to(&self, len: usize) -> Option<Self> {
        if self.parts.len() > len {
            return None;
        }
        Some(Partition {
            parts: self.parts.clone(),
            zeros: (len - self.parts.len()) as u32,
        })
    }

    /// Drops all explicit zeros.
    pub fn without_zeros(&self) -> Self {
        Partition {
            parts: self.parts.clone(),
            zeros: 0,
        }
    }

    /// Part sequence including the explicit zeros.
    pub fn padded_parts(&self) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.extend(std::iter::repeat(0).take(self.zeros as usize));
        v
    }

    /// The conjugate partition `λ'`. Padding is ignored.
    pub fn transpose(&self) -> Self {
        let first = self.first() as usize;
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts, zeros: 0 }
    }
}

/// Validating constructor from signed input.
pub fn make_partition(values: &[i64]) -> Result<Partition> {
    let mut parts = Vec::with_capacity(values.len());
    for &v in values {
        if v < 0 {
            return invalid(format!("negative part {v}"));
        }
        parts.push(u32::try_from(v).map_err(|_| Error::InvalidInput(format!("part {v} too large")))?);
    }
    Ok(Partition::new(parts))
}

pub fn transpose(lambda: &Partition) -> Partition {
    lambda.transpose()
}

/// `μ ⪰ λ` in dominance order. Partitions of different sizes are never
/// comparable and yield `false`.
pub fn dominates(mu: &Partition, lambda: &Partition) -> bool {
    if mu.size() != lambda.size() {
        return false;
    }
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u32, 0u32);
    for i in 1..=len {
        a += mu.part(i);
        b += lambda.part(i);
        if a < b {
            return false;
        }
    }
    true
}

/// Reverse lexicographic comparison of two partitions of the same size.
///
/// Both sides are zero padded to a common length; at the first index where
/// they differ, the side with the smaller part is greater.
pub fn cmp_revlex(lambda: &Partition, mu: &Partition) -> Result<Ordering> {
    if lambda.size() != mu.size() {
        return invalid(format!(
            "revlex comparison of partitions of different sizes ({} vs {})",
            lambda.size(),
            mu.size()
        ));
    }
    Ok(revlex_unchecked(lambda, mu))
}

fn revlex_unchecked(lambda: &Partition, mu: &Partition) -> Ordering {
    let len = lambda.total_len().max(mu.total_len());
    for i in 1..=len {
        let (a, b) = (lambda.part(i), mu.part(i));
        if a != b {
            return b.cmp(&a);
        }
    }
    Ordering::Equal
}

/// Ordinary lexicographic comparison of the padded part sequences.
pub fn cmp_lex(lambda: &Partition, mu: &Partition) -> Ordering {
    let len = lambda.total_len().max(mu.total_len());
    for i in 1..=len {
        let (a, b) = (lambda.part(i), mu.part(i));
        if a != b {
            return a.cmp(&b);
        }
    }
    Ordering::Equal
}

/// `λ ⊎ μ`: multiset union of parts (zeros included).
pub fn uplus(lambda: &Partition, mu: &Partition) -> Partition {
    let mut parts: Vec<u32> = lambda.parts.iter().chain(&mu.parts).copied().collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition {
        parts,
        zeros: lambda.zeros + mu.zeros,
    }
}

/// All partitions of `size` with parts `<= max_part` and at most `max_len`
/// parts, in decreasing lexicographic order: `(2,2), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(size: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(size, max_part, max_len, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: cur.clone(),
            zeros: 0,
        });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    let slots = (max_len - cur.len()) as u64;
    for p in (1..=max_part.min(rest)).rev() {
        // remaining slots cannot hold the rest even at part size p
        if slots * (p as u64) < rest as u64 {
            break;
        }
        cur.push(p);
        fill(rest - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// Partitions of `size` with exactly `len` positive parts, each `<= max_part`.
pub fn partitions_of_length(size: u32, len: usize, max_part: u32) -> Vec<Partition> {
    enumerate_partitions(size, max_part, len)
        .into_iter()
        .filter(|p| p.len() == len)
        .collect()
}

fn check_stretch_input(mu: &Partition, m: u32) -> Result<()> {
    let l = mu.len() as u32;
    if l < 2 || 2 * l > m {
        return invalid(format!("need 2 <= l(mu) <= m/2, got l(mu) = {l}, m = {m}"));
    }
    if mu.first() + 1 > m {
        return invalid(format!("parts of mu must be <= m-1 = {}", m - 1));
    }
    Ok(())
}

/// The least partition `η` of `|μ|` (revlex) with `η >=_revlex μ` and
/// `ℓ(η) = m - ℓ(μ) + 1`, or `None` if `|μ|` is too small.
///
/// Walks the parts of `μ` from the smallest, turning them into runs of ones
/// until `r = m - 2ℓ(μ) + 1` extra parts have been produced.
pub fn eta_stretch(mu: &Partition, m: u32) -> Result<Option<Partition>> {
    check_stretch_input(mu, m)?;
    let mut need = m as i64 - 2 * mu.len() as i64 + 1;
    let mut eta: Vec<u32> = mu.parts.clone();
    let mut tail_ones = 0u32;
    let mut i = mu.len();
    while i >= 1 {
        let part = mu.parts[i - 1] as i64;
        if part <= need {
            need = need - part + 1;
            tail_ones += part as u32 - 1;
            eta[i - 1] = 1;
            i -= 1;
        } else {
            eta[i - 1] = (part - need) as u32;
            tail_ones += need as u32;
            need = 0;
            break;
        }
    }
    if need > 0 {
        return Ok(None);
    }
    eta.extend(std::iter::repeat(1).take(tail_ones as usize));
    Ok(Some(Partition::new(eta)))
}

/// The greatest partition of `|η|` (revlex) with exactly `len` parts that is
/// `<=_revlex η`.
pub fn nu_greatest(eta: &Partition, len: usize) -> Option<Partition> {
    partitions_of_length(eta.size(), len, eta.size())
        .into_iter()
        .filter(|nu| revlex_unchecked(nu, eta) != Ordering::Greater)
        .max_by(revlex_unchecked)
}

/// Whether `μ = ν` where `η = eta_stretch(μ, m)` and `ν = nu_greatest(η, ℓ(μ))`.
pub fn check_mu_equals_nu(mu: &Partition, m: u32) -> Result<bool> {
    let eta = eta_stretch(mu, m)?
        .ok_or_else(|| Error::InvalidInput(format!("eta_stretch({mu}, {m}) does not exist")))?;
    Ok(nu_greatest(&eta, mu.len()).as_ref() == Some(&mu.without_zeros()))
}

/// Closed-form criterion for `μ = ν`: `μ_{i*} - μ_{ℓ(μ)} <= 1`, where `i*` is
/// the least index with `η_{i*} < μ_{i*}`.
pub fn index_criterion(mu: &Partition, m: u32) -> Result<bool> {
    let eta = eta_stretch(mu, m)?
        .ok_or_else(|| Error::InvalidInput(format!("eta_stretch({mu}, {m}) does not exist")))?;
    let istar = (1..=mu.len())
        .find(|&i| eta.part(i) < mu.part(i))
        .expect("eta differs from mu below its length");
    Ok(mu.part(istar) - mu.part(mu.len()) <= 1)
}

impl fmt::Display for Partition {
    /// `3,1,1`, `3,1,1|+2z` with two explicit zero pads, `()` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "()")?;
        } else {
            let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
            write!(f, "{}", s.join(","))?;
        }
        if self.zeros > 0 {
            write!(f, "|+{}z", self.zeros)?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, pad) = match s.split_once('|') {
            Some((b, p)) => (b.trim(), Some(p.trim())),
            None => (s, None),
        };
        let mut values = Vec::new();
        if !(body.is_empty() || body == "()") {
            for tok in body.split(',') {
                let v: i64 = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad partition part {tok:?}")))?;
                values.push(v);
            }
        }
        let mut p = make_partition(&values)?;
        if let Some(pad) = pad {
            let n = pad
                .strip_prefix('+')
                .and_then(|r| r.strip_suffix('z'))
                .and_then(|n| n.parse::<u32>().ok())
                .ok_or_else(|| Error::InvalidInput(format!("bad padding suffix {pad:?}")))?;
            p.zeros += n;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn make_partition_sorts_and_splits_zeros() {
        let a = make_partition(&[1, 3, 1]).unwrap();
        assert_eq!(a.parts(), &[3, 1, 1]);
        assert_eq!(a.zeros(), 0);
        let e = make_partition(&[]).unwrap();
        assert_eq!(e.size(), 0);
        assert!(e.is_empty());
        let z = make_partition(&[2, 0, 0]).unwrap();
        assert_eq!(z.parts(), &[2]);
        assert_eq!(z.zeros(), 2);
        assert_eq!(z.total_len(), 3);
        assert!(matches!(make_partition(&[1, -1]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[2, 1]).transpose(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[5]).transpose(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[2]), &p(&[1, 1])));
        assert!(!dominates(&p(&[1, 1]), &p(&[2])));
        assert!(dominates(&p(&[3, 1]), &p(&[3, 1])));
        assert!(!dominates(&p(&[3]), &p(&[1, 1])));
    }

    #[test]
    fn revlex_examples() {
        let z = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(cmp_revlex(&p(&[1, 1]), &z(&[2, 0])).unwrap(), Ordering::Greater);
        assert_eq!(cmp_revlex(&p(&[2, 1, 1]), &z(&[2, 2, 0])).unwrap(), Ordering::Greater);
        assert_eq!(cmp_revlex(&p(&[3, 2]), &p(&[3, 2])).unwrap(), Ordering::Equal);
        assert!(cmp_revlex(&p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn uplus_examples() {
        assert_eq!(uplus(&p(&[2, 1]), &p(&[3])), p(&[3, 2, 1]));
        assert_eq!(uplus(&p(&[2, 1]), &Partition::empty()), p(&[2, 1]));
        assert_eq!(uplus(&p(&[1, 1]), &p(&[1])), p(&[1, 1, 1]));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_partitions(4, 2, 4),
            vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(0, 3, 3), vec![Partition::empty()]);
        assert!(enumerate_partitions(3, 1, 2).is_empty());
        // p(10) = 42
        assert_eq!(enumerate_partitions(10, 10, 10).len(), 42);
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_stretch(&p(&[2, 2]), 4).unwrap(), Some(p(&[2, 1, 1])));
        assert_eq!(eta_stretch(&p(&[2, 2]), 6).unwrap(), None);
        assert_eq!(eta_stretch(&p(&[3, 1]), 4).unwrap(), Some(p(&[2, 1, 1])));
        assert!(eta_stretch(&p(&[2]), 4).is_err());
        assert!(eta_stretch(&p(&[4, 1]), 4).is_err());
        assert!(eta_stretch(&p(&[1, 1, 1]), 5).is_err());
    }

    #[test]
    fn nu_examples() {
        assert!(check_mu_equals_nu(&p(&[2, 2]), 4).unwrap());
        assert!(index_criterion(&p(&[2, 2]), 4).unwrap());
        assert!(!check_mu_equals_nu(&p(&[3, 1]), 4).unwrap());
        assert!(!index_criterion(&p(&[3, 1]), 4).unwrap());
        assert!(check_mu_equals_nu(&p(&[3, 3, 3]), 8).unwrap());
        assert!(index_criterion(&p(&[3, 3, 3]), 8).unwrap());
    }

    #[test]
    fn text_form() {
        let a: Partition = "3,1,1".parse().unwrap();
        assert_eq!(a, p(&[3, 1, 1]));
        let b: Partition = "3,1,1|+2z".parse().unwrap();
        assert_eq!(b.zeros(), 2);
        assert_eq!(b.to_string(), "3,1,1|+2z");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap().to_string(), "()");
        assert!("3,-1".parse::<Partition>().is_err());
        assert!("3|2".parse::<Partition>().is_err());
    }

    #[test]
    fn multiplicities_roundtrip() {
        let a = p(&[3, 3, 1]);
        assert_eq!(a.multiplicities(3), vec![1, 0, 2]);
        assert_eq!(Partition::from_multiplicities(&[1, 0, 2]), a);
    }
}
