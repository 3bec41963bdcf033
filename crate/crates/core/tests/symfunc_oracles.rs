use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parheis::symfunc::{hopf_pairing, kronecker_coproduct, mn_character, Basis, Partition, SymFuncElem};

type Poly = BTreeMap<Vec<u32>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `χ^λ(ρ)` as the coefficient of `x^{λ+δ}` in `a_δ p_ρ`, in `len(λ)` variables.
fn frobenius_character(lambda: &Partition, rho: &Partition) -> i64 {
    let l = lambda.len().max(1);
    let mut vandermonde = Poly::new();
    let delta: Vec<u32> = (0..l as u32).rev().collect();
    for perm in itertools::Itertools::permutations(0..l, l) {
        let inversions = (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let e: Vec<u32> = perm.iter().map(|&p| delta[p]).collect();
        *vandermonde.entry(e).or_insert(0) += if inversions % 2 == 0 { 1 } else { -1 };
    }
    let mut acc = vandermonde;
    for &r in rho.parts() {
        let p: Poly = (0..l).map(|i| ((0..l).map(|j| if j == i { r as u32 } else { 0 }).collect(), 1)).collect();
        acc = poly_mul(&acc, &p);
    }
    let mut target: Vec<u32> = delta.clone();
    for (i, &p) in lambda.parts().iter().enumerate() {
        target[i] += p as u32;
    }
    acc.get(&target).copied().unwrap_or(0)
}

#[test]
fn characters_match_the_frobenius_formula() {
    for n in 1..=6 {
        for lambda in Partition::all(n) {
            for rho in Partition::all(n) {
                assert_eq!(mn_character(&lambda, &rho).unwrap(), frobenius_character(&lambda, &rho), "{lambda} at {rho}");
            }
        }
    }
}

#[test]
fn power_and_schur_round_trip() {
    for n in 0..=8 {
        for lambda in Partition::all(n) {
            let s = SymFuncElem::schur(lambda.clone());
            assert_eq!(s.to_basis(Basis::Power).to_basis(Basis::Schur), s, "{lambda}");
            let p = SymFuncElem::power(lambda.clone());
            assert_eq!(p.to_basis(Basis::Schur).to_basis(Basis::Power), p, "{lambda}");
            assert!(SymFuncElem::complete(lambda.clone()).to_basis(Basis::Schur).is_integral(), "{lambda}");
        }
    }
}

/// Nonnegative integer matrices with the given row and column sums.
fn contingency_tables(rows: &[usize], cols: &[usize]) -> usize {
    let Some((&first, rest)) = rows.split_first() else { return usize::from(cols.iter().all(|&c| c == 0)) };
    let mut count = 0;
    let mut row = vec![0; cols.len()];
    fn fill(j: usize, left: usize, row: &mut Vec<usize>, cols: &[usize], rest: &[usize], count: &mut usize) {
        if j == cols.len() {
            if left == 0 {
                let remaining: Vec<usize> = cols.iter().zip(row.iter()).map(|(c, r)| c - r).collect();
                *count += contingency_tables(rest, &remaining);
            }
            return;
        }
        for v in 0..=left.min(cols[j]) {
            row[j] = v;
            fill(j + 1, left - v, row, cols, rest, count);
        }
        row[j] = 0;
    }
    fill(0, first, &mut row, cols, rest, &mut count);
    count
}

#[test]
fn complete_pairing_counts_tables() {
    for n in 0..=6 {
        for a in Partition::all(n) {
            for b in Partition::all(n) {
                let got = hopf_pairing(&SymFuncElem::complete(a.clone()), &SymFuncElem::complete(b.clone())).unwrap();
                let want = BigRational::from_integer(BigInt::from(contingency_tables(a.parts(), b.parts())));
                assert_eq!(got, want, "<h_{a}, h_{b}>");
            }
        }
    }
}

#[test]
fn schur_functions_are_orthonormal() {
    for n in 0..=5 {
        for a in Partition::all(n) {
            for b in Partition::all(n) {
                let got = hopf_pairing(&SymFuncElem::schur(a.clone()), &SymFuncElem::schur(b.clone())).unwrap();
                assert_eq!(got, if a == b { BigRational::one() } else { BigRational::zero() });
            }
        }
    }
}

#[test]
fn kronecker_coefficients_are_symmetric() {
    for n in 1..=5 {
        let all = Partition::all(n);
        let images: Vec<_> = all.iter().map(|l| kronecker_coproduct(&SymFuncElem::schur(l.clone())).unwrap()).collect();
        let g = |i: usize, j: usize, k: usize| images[i].get(&(all[j].clone(), all[k].clone())).cloned().unwrap_or_default();
        for i in 0..all.len() {
            for j in 0..all.len() {
                for k in 0..all.len() {
                    assert_eq!(g(i, j, k), g(j, i, k));
                    assert_eq!(g(i, j, k), g(k, j, i));
                }
            }
        }
        // the trivial module tensors each irreducible to itself
        let trivial: BTreeMap<_, _> = all.iter().map(|m| ((m.clone(), m.clone()), BigInt::one())).collect();
        assert_eq!(images[0], trivial);
    }
}
