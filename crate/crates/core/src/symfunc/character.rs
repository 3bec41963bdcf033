//! Irreducible characters of symmetric groups by the Murnaghan–Nakayama rule.

use num_bigint::BigInt;

use super::partition::Partition;
use crate::error::{Error, Result};

/// `z_ρ = Π i^{m_i} m_i!`, the centralizer order of a permutation of cycle type `ρ`.
pub fn z(rho: &Partition) -> BigInt {
    let mut out = BigInt::from(1);
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for j in 1..=m {
            out *= BigInt::from(i) * BigInt::from(j);
        }
    }
    out
}

/// Cycle type of a permutation of `0..k`.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted")
}

/// `χ^λ(ρ)`, removing rim hooks of length `ρ_1, ρ_2, …` via beta-sets.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::Domain(format!("|{lambda}| != |{rho}|")));
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    Ok(chi_beta(beta, rho.parts()))
}

fn chi_beta(beta: Vec<usize>, rho: &[usize]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else { return 1 };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * chi_beta(next, rest);
    }
    total
}

/// Rows indexed by `λ`, columns by `ρ`, both in the order of [`Partition::all`].
pub fn character_table(n: usize) -> Vec<Vec<i64>> {
    let ps = Partition::all(n);
    ps.iter().map(|l| ps.iter().map(|r| mn_character(l, r).expect("same size")).collect()).collect()
}
