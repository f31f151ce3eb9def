use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weyl_core::basis_enum::lex_basis;
use weyl_core::dpalgebra::{normal_form, DPoly, DividedMonomial, MonomialOrder};
use weyl_core::error::Error;
use weyl_core::partitions::{dominates, enumerate_partitions, Partition};
use weyl_core::quotient::QuotientOracle;
use weyl_core::ring::{Coeff, CoeffRing};
use weyl_core::symfunc::forgotten_coeff;
use weyl_core::weyl_ideal::*;

const Q: CoeffRing = CoeffRing::Rational;

fn poly(text: &str, m: usize) -> DPoly {
    DPoly::parse(text, Q, m).unwrap()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `Y[s]` truncated at `u^a`, as a map from `u`-exponents to coefficients in `DF_m`.
fn y_truncated(s: u32, m: u32, a: &[u32]) -> BTreeMap<Vec<u32>, DPoly> {
    let mut out = BTreeMap::new();
    for n in 0..m {
        for eta in enumerate_partitions(n, s, n as usize) {
            let mults: Vec<u32> = (1..=s).map(|i| eta.parts().iter().filter(|&&x| x == i).count() as u32).collect();
            if mults.iter().zip(a).any(|(x, y)| x > y) {
                continue;
            }
            let denom: BigInt = mults.iter().map(|&x| factorial(x as usize)).product();
            let mut c = factorial(eta.len()) / denom;
            if eta.len() % 2 == 1 {
                c = -c;
            }
            let term = DPoly::var_power(Q, m as usize, n as usize, 1).scalar_mul(&Q.from_bigint(&c));
            out.insert(mults, term);
        }
    }
    out
}

/// Coefficient of `u^a` in `Y[s]^k / k!`, by repeated multiplication.
fn y_power_by_multiplication(s: u32, m: u32, k: u32, a: &[u32]) -> DPoly {
    let y = y_truncated(s, m, a);
    let mut acc: BTreeMap<Vec<u32>, DPoly> = BTreeMap::new();
    acc.insert(vec![0; s as usize], DPoly::one(Q, m as usize));
    for _ in 0..k {
        let mut next: BTreeMap<Vec<u32>, DPoly> = BTreeMap::new();
        for (e1, p1) in &acc {
            for (e2, p2) in &y {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                if e.iter().zip(a).any(|(x, y)| x > y) {
                    continue;
                }
                let prod = p1.mul(p2).unwrap();
                let slot = next.entry(e).or_insert_with(|| DPoly::zero(Q, m as usize));
                *slot = slot.add(&prod).unwrap();
            }
        }
        acc = next;
    }
    let inv = Coeff::Rat(BigRational::new(BigInt::one(), factorial(k as usize)));
    acc.get(a).map(|p| p.scalar_mul(&inv)).unwrap_or_else(|| DPoly::zero(Q, m as usize))
}

#[test]
fn y_power_matches_repeated_multiplication() {
    for m in 1..=4u32 {
        for s in 1..=3u32 {
            for k in 0..=4u32 {
                for size in 0..=4 {
                    for lam in enumerate_partitions(size, s, size as usize) {
                        let a = lam.multiplicities(s as usize);
                        let spec = YSeriesSpec::new(s, m, k).unwrap();
                        let ours = y_power_coeff(spec, &a, Q).unwrap();
                        assert_eq!(ours, y_power_by_multiplication(s, m, k, &a), "s={s} m={m} k={k} a={a:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn y_series_examples() {
    let terms = y_series(YSeriesSpec::new(1, 4, 0).unwrap());
    let got: Vec<(i64, usize, Vec<u32>)> =
        terms.iter().map(|t| (i64::try_from(&t.coeff).unwrap(), t.var, t.u_exps.clone())).collect();
    assert_eq!(got, vec![(1, 0, vec![0]), (-1, 1, vec![1]), (1, 2, vec![2]), (-1, 3, vec![3])]);
    let terms = y_series(YSeriesSpec::new(0, 5, 0).unwrap());
    assert_eq!(terms.len(), 1);
    assert_eq!((terms[0].var, terms[0].coeff.clone()), (0, BigInt::one()));
    assert_eq!(y_series(YSeriesSpec::new(3, 1, 0).unwrap()).len(), 1);
    // the (1,1) term of Y[2]: (-1)^2 2!/2! = 1
    let t = y_series(YSeriesSpec::new(2, 3, 0).unwrap());
    let uu = t.iter().find(|t| t.u_exps == vec![2, 0]).unwrap();
    assert_eq!((uu.coeff.clone(), uu.var), (BigInt::one(), 2));
    assert!(YSeriesSpec::new(1, 0, 1).is_err());
}

#[test]
fn y_power_examples() {
    let c = |s, m, k, a: &[u32]| y_power_coeff(YSeriesSpec::new(s, m, k).unwrap(), a, Q).unwrap();
    assert_eq!(c(1, 3, 2, &[0]), poly("x0^(2)", 3));
    assert_eq!(c(1, 2, 1, &[1]), poly("-x1", 2));
    assert_eq!(c(2, 3, 2, &[1, 0]), poly("-x0*x1", 3));
    assert!(c(1, 3, 1, &[0, 1]).is_zero());
}

#[test]
fn jm_examples() {
    let g = jm_generators(1, Q, 3, 3).unwrap();
    let polys: BTreeSet<String> = g.polys().iter().map(|p| p.to_string()).collect();
    assert_eq!(polys, ["x0^(2)", "x0^(3)"].iter().map(|s| s.to_string()).collect());

    let g = jm_generators(3, Q, 4, 8).unwrap();
    let target = poly("x0*x2 + x1^(2)", 3).monic(MonomialOrder::DpLex);
    assert!(g.polys().iter().any(|p| p.monic(MonomialOrder::DpLex) == target));
    assert!(matches!(jm_generators(3, Q, 3, 8), Err(Error::Configuration(_))));
}

#[test]
fn generators_are_homogeneous_and_integral() {
    for m in 1..=5 {
        let raw = jm_generators_raw(m, Q, m + 1, m * (m + 1)).unwrap();
        assert!(!raw.is_empty());
        for g in &raw {
            assert!(!g.poly.is_zero());
            for (u, c) in g.poly.terms() {
                assert_eq!((u.degree(), u.weight()), (g.degree, g.weight));
                let Coeff::Rat(c) = c else { unreachable!() };
                assert!(c.is_integer());
            }
        }
        for g in jm_generators(m, CoeffRing::Prime(3), m + 1, m * (m + 1)).unwrap().entries {
            assert_eq!(g.poly.bidegree(), Some((g.degree, g.weight)));
        }
    }
}

/// `s_{λ,k}` with `λ_1 + k > m` for every `k <= max_k`.
fn schur_family(m: u32, max_k: u32, ring: CoeffRing) -> Vec<DPoly> {
    let mut out = Vec::new();
    for k in 0..=max_k {
        for size in 0..=k * (m - 1) {
            for lam in enumerate_partitions(size, m - 1, k as usize) {
                if lam.first() + k > m {
                    out.push(schur_dp(&lam, k, m, ring).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn gm_is_a_lex_groebner_basis() {
    // every J_m generator reduces to zero modulo G_m under DPLex
    for m in 1..=4 {
        let gm = gm_set(m, Q).unwrap().polys();
        for g in jm_generators(m, Q, m + 2, m * (m + 2)).unwrap().entries {
            let r = normal_form(&g.poly, &gm, MonomialOrder::DpLex).unwrap();
            assert!(r.is_zero(), "m={m}: {} leaves {r}", g.poly);
        }
    }
}

#[test]
fn schur_family_reduces_in_every_characteristic() {
    // x_0 x_0^{(2)} = 3 x_0^{(3)} vanishes over F_3, so in positive
    // characteristic s_{λ,k} is needed for every degree k, not just k <= m+1
    for m in 1..=4 {
        for ring in [CoeffRing::Prime(2), CoeffRing::Prime(3)] {
            let family = schur_family(m, m + 2, ring);
            for g in jm_generators(m, ring, m + 2, m * (m + 2)).unwrap().entries {
                let r = normal_form(&g.poly, &family, MonomialOrder::DpLex).unwrap();
                assert!(r.is_zero(), "m={m} over {ring}: {} leaves {r}", g.poly);
            }
        }
    }
}

#[test]
fn srevlex_is_a_revlex_groebner_basis() {
    for m in 1..=4 {
        let sr = srevlex_set(m, Q).unwrap().polys();
        for g in jm_generators(m, Q, m + 2, m * (m + 2)).unwrap().entries {
            let r = normal_form(&g.poly, &sr, MonomialOrder::DpDegRevLex).unwrap();
            assert!(r.is_zero(), "m={m}: {} leaves {r}", g.poly);
        }
    }
}

#[test]
fn families_lie_in_the_ideal() {
    for m in 1..=5 {
        let mut oracle = QuotientOracle::new(m, Q, m + 2, None).unwrap();
        let lex = lex_basis(m);
        assert!(oracle.verify(&lex).unwrap().passed);
        let members = gm_set(m, Q).unwrap().entries.into_iter().chain(srevlex_set(m, Q).unwrap().entries);
        for g in members {
            if g.degree > m + 2 {
                continue;
            }
            let r = oracle.reduce_element(&g.poly, &lex).unwrap();
            assert!(r.is_empty(), "m={m}: {} is not in J_m", g.poly);
        }
    }
}

#[test]
fn srevlex_refuses_prime_fields() {
    assert!(matches!(srevlex_set(3, CoeffRing::Prime(5)), Err(Error::UnsupportedCharacteristic(5))));
}

fn partition_monomial(lam: &Partition, k: u32, m: u32) -> DividedMonomial {
    DividedMonomial::from_partition(&lam.padded_to(k as usize).unwrap(), m as usize).unwrap()
}

#[test]
fn schur_leading_monomials_under_lex() {
    for m in 1..=5 {
        for k in 0..=m + 1 {
            for size in 0..=k * (m - 1) {
                for lam in enumerate_partitions(size, m - 1, k as usize) {
                    if lam.first() + k <= m {
                        continue;
                    }
                    let s = schur_dp(&lam, k, m, Q).unwrap();
                    let (lm, c) = s.leading_term(MonomialOrder::DpLex).unwrap();
                    assert_eq!(lm, &partition_monomial(&lam, k, m), "{lam} k={k} m={m}");
                    assert!(Q.is_one(c));
                }
            }
        }
    }
}

#[test]
fn forgotten_leading_monomials_under_revlex() {
    for m in 1..=5 {
        for k in 1..=m + 1 {
            for size in 0..=k * (m - 1) {
                for lam in enumerate_partitions(size, m - 1, size as usize) {
                    let f = forgotten_dp(&lam, k, m, Q).unwrap();
                    let Some((lm, c)) = f.leading_term(MonomialOrder::DpDegRevLex) else { continue };
                    if lam.len() <= k as usize {
                        assert_eq!(lm, &partition_monomial(&lam, k, m));
                        assert!(Q.is_one(c) || Q.is_one(&Q.neg(c)));
                        continue;
                    }
                    // explicit support: μ ⪰ λ with k parts, parts <= m-1, D ≠ 0
                    let support: Vec<Partition> = enumerate_partitions(size, m - 1, k as usize)
                        .into_iter()
                        .filter(|mu| !forgotten_coeff(&lam, mu).is_zero())
                        .collect();
                    let least: Vec<&Partition> =
                        support.iter().filter(|mu| support.iter().all(|nu| dominates(nu, mu))).collect();
                    assert_eq!(least.len(), 1, "{lam} k={k} m={m}");
                    assert!(dominates(least[0], &lam));
                    assert_eq!(lm, &partition_monomial(least[0], k, m), "{lam} k={k} m={m}");
                }
            }
        }
    }
}

#[test]
fn family_examples() {
    assert_eq!(schur_dp(&Partition::new(vec![2]), 2, 3, Q).unwrap(), poly("x0*x2 + x1^(2)", 3));
    assert_eq!(schur_dp(&Partition::empty(), 4, 3, Q).unwrap(), poly("x0^(4)", 3));
    assert!(schur_dp(&Partition::new(vec![1, 1, 1]), 2, 3, Q).is_err());
    assert!(schur_dp(&Partition::new(vec![3]), 2, 3, Q).is_err());

    assert_eq!(forgotten_dp(&Partition::new(vec![1, 1]), 2, 3, Q).unwrap(), poly("x1^(2) + x0*x2", 3));
    let f = forgotten_dp(&Partition::new(vec![2, 1, 1]), 2, 4, Q).unwrap();
    assert_eq!(f.coeff(&DividedMonomial::new(vec![0, 0, 2, 0])), Q.from_i64(-2));
    assert!(forgotten_dp(&Partition::new(vec![3]), 1, 3, Q).unwrap().is_zero());

    let gm = gm_set(2, Q).unwrap();
    assert!(gm.entries.iter().any(|g| g.provenance == Provenance::Partition { lambda: Partition::new(vec![1]), k: 2 }));
    let sr = srevlex_set(3, Q).unwrap();
    assert!(sr.entries.iter().any(|g| g.provenance == Provenance::Partition { lambda: Partition::new(vec![1, 1]), k: 2 }));
}

#[test]
fn identity_examples() {
    let p11 = Partition::new(vec![1, 1]);
    assert!(verify_transition(&p11, 2, 3).unwrap());
    assert!(verify_fy(&p11, 2, 3).unwrap());
    assert!(verify_transition(&Partition::empty(), 3, 2).unwrap());
    assert!(verify_fy(&Partition::empty(), 3, 2).unwrap());
}

#[test]
fn leader_set_shape() {
    // m = 1: x0^(k) for k >= 2
    let got = leader_set(1, 3);
    assert_eq!(got, vec![DividedMonomial::new(vec![2]), DividedMonomial::new(vec![3])]);
    for m in 1..=5 {
        for u in leader_set(m, m + 1) {
            let s = u.top_index().unwrap() as u32;
            assert!(u.degree() + s > m);
        }
    }
}
