use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use weyl_core::partitions::{dominates, enumerate_partitions, transpose, Partition};
use weyl_core::symfunc::*;

fn all_partitions(n: u32) -> Vec<Partition> {
    enumerate_partitions(n, n, n as usize)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Counts semistandard fillings of `shape` with content `content` directly.
fn count_ssyt(shape: &[u32], content: &[u32]) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut left = content.to_vec();
    fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, left: &mut Vec<u32>) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut n = 0;
        for v in 1..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v as usize - 1] -= 1;
            n += go(i + 1, cells, grid, left);
            left[v as usize - 1] += 1;
        }
        grid[r][c] = 0;
        n
    }
    go(0, &cells, &mut grid, &mut left)
}

#[test]
fn kostka_matches_tableau_count() {
    for n in 0..=7 {
        for lam in all_partitions(n) {
            for mu in all_partitions(n) {
                let k = kostka(&lam, &mu);
                assert_eq!(k, BigInt::from(count_ssyt(lam.parts(), mu.parts())), "{lam} {mu}");
                assert_eq!(k > BigInt::zero(), dominates(&lam, &mu), "{lam} {mu}");
            }
        }
    }
}

#[test]
fn kostka_ignores_content_order() {
    let lam = Partition::new(vec![3, 2]);
    assert_eq!(count_ssyt(&[3, 2], &[1, 2, 2]), count_ssyt(&[3, 2], &[2, 2, 1]));
    assert_eq!(kostka(&lam, &Partition::new(vec![2, 2, 1])), BigInt::from(2));
}

/// Expands `f_λ` in `r` variables as `Σ D_{λμ} M_μ`.
fn forgotten_poly(lam: &Partition, r: usize) -> OPoly {
    let mut out = OPoly::zero(r);
    for mu in all_partitions(lam.size()) {
        let d = forgotten_coeff(lam, &mu);
        if !d.is_zero() {
            out = out.add(&mono_sym(&mu, r).scale(&BigRational::from_integer(d)));
        }
    }
    out
}

#[test]
fn forgotten_support_is_above_lambda() {
    for n in 0..=6 {
        for lam in all_partitions(n) {
            for mu in all_partitions(n) {
                if !forgotten_coeff(&lam, &mu).is_zero() {
                    assert!(dominates(&mu, &lam), "D_{{{lam},{mu}}} nonzero");
                }
            }
            let diag = forgotten_coeff(&lam, &lam);
            assert!(diag == BigInt::one() || diag == -BigInt::one());
        }
    }
}

#[test]
fn transition_in_variables() {
    // s_λ(t_1..t_k) = Σ_{μ ⪯ λ'} K_{λ'μ} f_μ(t_1..t_k)
    for n in 0..=6 {
        for lam in all_partitions(n) {
            for k in lam.len()..=6 {
                let conj = transpose(&lam);
                let mut rhs = OPoly::zero(k);
                for mu in all_partitions(n) {
                    let c = kostka(&conj, &mu);
                    if !c.is_zero() {
                        rhs = rhs.add(&forgotten_poly(&mu, k).scale(&BigRational::from_integer(c)));
                    }
                }
                assert_eq!(schur_poly(&lam, k).unwrap(), rhs, "lambda = {lam}, k = {k}");
            }
        }
    }
}

/// `det(h_{λ_i - i + j})` in `r` variables.
fn jacobi_trudi(lam: &Partition, r: usize) -> OPoly {
    let n = lam.len();
    let h = |k: i64| if k < 0 { OPoly::zero(r) } else { complete_h(k as u32, r) };
    let entry = |i: usize, j: usize| h(lam.parts()[i] as i64 - i as i64 + j as i64);
    fn det(rows: Vec<Vec<OPoly>>, r: usize) -> OPoly {
        if rows.is_empty() {
            return OPoly::constant(r, rat(1));
        }
        let mut out = OPoly::zero(r);
        for j in 0..rows.len() {
            let minor: Vec<Vec<OPoly>> = rows[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = rows[0][j].mul(&det(minor, r));
            out = if j % 2 == 0 { out.add(&term) } else { out.sub(&term) };
        }
        out
    }
    det((0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect(), r)
}

#[test]
fn schur_matches_jacobi_trudi() {
    for n in 0..=5 {
        for lam in all_partitions(n) {
            for r in lam.len().max(1)..=4 {
                assert_eq!(schur_poly(&lam, r).unwrap(), jacobi_trudi(&lam, r), "{lam}, r = {r}");
            }
        }
    }
    assert!(schur_poly(&Partition::new(vec![1, 1, 1]), 2).is_err());
}

#[test]
fn schur_examples() {
    // s_{(1,1)}(t_1, t_2) = t_1 t_2
    let s = schur_poly(&Partition::new(vec![1, 1]), 2).unwrap();
    assert_eq!(s, OPoly::monomial(vec![1, 1], rat(1)));
    // s_{(2)}(t_1, t_2) = t_1^2 + t_1 t_2 + t_2^2
    let s = schur_poly(&Partition::new(vec![2]), 2).unwrap();
    assert_eq!(s.terms().count(), 3);
}

fn arb_opoly(m: usize) -> impl Strategy<Value = OPoly> {
    proptest::collection::vec((proptest::collection::vec(0u32..4, m), -5i64..=5), 0..6).prop_map(move |terms| {
        let mut p = OPoly::zero(m);
        for (e, c) in terms {
            p.add_term(e, rat(c));
        }
        p
    })
}

proptest! {
    #[test]
    fn coinvariant_reduce_is_idempotent_and_linear(f in arb_opoly(3), g in arb_opoly(3), c in -4i64..=4) {
        let m = 3;
        let rf = coinvariant_reduce(&f, m).unwrap();
        prop_assert_eq!(coinvariant_reduce(&rf, m).unwrap(), rf.clone());
        let rg = coinvariant_reduce(&g, m).unwrap();
        let lhs = coinvariant_reduce(&f.scale(&rat(c)).add(&g), m).unwrap();
        prop_assert_eq!(lhs, rf.scale(&rat(c)).add(&rg));
    }

    #[test]
    fn symmetric_multiples_vanish(f in arb_opoly(3), k in 1u32..4) {
        let m = 3;
        let sym = complete_h(k, m);
        prop_assert!(coinvariant_reduce(&sym.mul(&f), m).unwrap().is_zero());
    }
}

#[test]
fn coinvariant_has_factorial_dimension() {
    // reduced monomials e_r < m - r + 1 give m! standard monomials
    for m in 1..=4usize {
        let mut standard = 0;
        let mut e = vec![0u32; m];
        loop {
            let f = OPoly::monomial(e.clone(), rat(1));
            if coinvariant_reduce(&f, m).unwrap() == f {
                standard += 1;
            }
            let mut i = 0;
            while i < m {
                e[i] += 1;
                if e[i] <= m as u32 {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
        }
        assert_eq!(standard, (1..=m).product::<usize>());
    }
}

#[test]
fn coinvariant_leading_monomials() {
    for m in 1..=6 {
        for (r, h) in (1..=m).zip(coinvariant_basis(m)) {
            let mut want = vec![0u32; m];
            want[r - 1] = (m - r + 1) as u32;
            assert_eq!(h.leading_term().map(|(e, _)| e.clone()), Some(want));
        }
    }
}

#[test]
fn nonvanishing_on_hypotheses() {
    for m in 1..=5usize {
        for k in 0..=m {
            for size in 0..=((m - k) * k) as u32 {
                for lam in enumerate_partitions(size, (m - k) as u32, k) {
                    assert!(schur_nonvanishing(&lam, k, m).unwrap(), "{lam} k={k} m={m}");
                }
            }
        }
    }
    assert!(schur_nonvanishing(&Partition::new(vec![3]), 1, 3).is_err());
}

#[test]
fn mono_sym_counts_permutations() {
    let p = Partition::new(vec![2, 1]);
    let m = mono_sym(&p, 3);
    let coeffs: BTreeMap<_, _> = m.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    assert_eq!(coeffs.len(), 6);
    assert!(mono_sym(&Partition::new(vec![1, 1, 1, 1]), 3).is_zero());
}
