//! A fast end-to-end run of the main checks for `m <= 4`.

use serde::{Deserialize, Serialize};

use crate::basis_enum::{count_b, cv_basis, is_reduced_lex, lex_basis, revlex_basis, truncated_basis};
use crate::error::Result;
use crate::partitions::{check_mu_equals_nu, enumerate_partitions, eta_stretch, index_criterion};
use crate::quotient::{verify_basis, QuotientOracle};
use crate::ring::CoeffRing;
use crate::symfunc::schur_nonvanishing;
use crate::weyl_ideal::{gm_set, leader_set, monomials_of_degree, verify_fy, verify_transition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

const MAX_M: u32 = 4;

fn rings() -> [CoeffRing; 4] {
    [CoeffRing::Rational, CoeffRing::Prime(2), CoeffRing::Prime(3), CoeffRing::Prime(5)]
}

/// Runs every check and reports one line per check.
pub fn run() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut push = |name: String, passed: bool| out.push(Check { name, passed });

    for m in 1..=MAX_M {
        for ring in rings() {
            let mut o = QuotientOracle::new(m, ring, m + 2, None)?;
            let high_zero = o.dims().iter().all(|s| s.degree <= m || s.quotient_dim == 0);
            push(format!("dimension m={m} over {ring}"), o.total_dim() == 1 << m && high_zero);
            push(format!("lex basis m={m} over {ring}"), o.verify(&lex_basis(m))?.passed);
        }
        let q = CoeffRing::Rational;
        push(format!("revlex basis m={m}"), verify_basis(m, q, &revlex_basis(m), m + 2)?.passed);
        for n in 1..m {
            let t = truncated_basis(m, n)?;
            let r = verify_basis(m, q, &t, m + 2)?;
            let ok = r.passed && r.total_quotient_dim == t.len() && (n != 1 || t.len() == m as usize + 1);
            push(format!("truncation m={m} N={n}"), ok);
        }
        push(format!("cv = revlex m={m}"), cv_basis(m).set() == revlex_basis(m).set());

        let gm = gm_set(m, q)?;
        let mut lms: Vec<_> = gm
            .entries
            .iter()
            .filter_map(|g| g.poly.leading_monomial(crate::dpalgebra::MonomialOrder::DpLex).cloned())
            .collect();
        lms.sort();
        lms.dedup();
        let reduced: Vec<_> = (0..=m + 2)
            .flat_map(|d| monomials_of_degree(m as usize, d))
            .filter(|a| is_reduced_lex(a, m))
            .collect();
        let lex = lex_basis(m);
        let ok = lms == leader_set(m, m + 1) && reduced.len() == lex.len() && reduced.iter().all(|a| lex.contains(a));
        push(format!("leading monomials m={m}"), ok);

        let mut ids = true;
        for size in 0..=MAX_M {
            for lam in enumerate_partitions(size, size, size as usize) {
                for k in 0..=MAX_M {
                    ids &= verify_fy(&lam, k, m)?;
                    if lam.len() <= k as usize && lam.first() < m {
                        ids &= verify_transition(&lam, k, m)?;
                    }
                }
            }
        }
        push(format!("identities m={m}"), ids);

        let mut counts = true;
        for l in 0..=m / 2 {
            let direct = revlex_basis(m).set().iter().filter(|a| a.exps()[0] == 0 && a.degree() == l).count() as u64;
            counts &= count_b(m, l)? == direct;
        }
        push(format!("counting m={m}"), counts);

        let mut coinv = true;
        for k in 0..=m {
            for size in 0..=(m - k) * k {
                for lam in enumerate_partitions(size, m - k, k as usize) {
                    coinv &= schur_nonvanishing(&lam, k as usize, m as usize)?;
                }
            }
        }
        push(format!("coinvariant m={m}"), coinv);
    }

    let mut alg = true;
    for m in 4..=8u32 {
        for len in 2..=m / 2 {
            for size in len..=len * (m - 1) {
                for mu in enumerate_partitions(size, m - 1, len as usize) {
                    if mu.len() != len as usize {
                        continue;
                    }
                    if eta_stretch(&mu, m)?.is_some() {
                        alg &= check_mu_equals_nu(&mu, m)? == index_criterion(&mu, m)?;
                    }
                }
            }
        }
    }
    push("eta/nu criterion m<=8".to_string(), alg);
    Ok(out)
}
