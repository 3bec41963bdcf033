//! Young symmetrizers and their two images in `End((↑↓)^k)`.

use itertools::Itertools;

use super::functor::psi;
use crate::error::Result;
use crate::heis::{block_number, compose, sym_action, End, HeisMorphism, HeisObject, NormalHeisDiagram, Orientation};
use crate::par::ParMorphism;
use crate::poly::TPolynomial;
use crate::symfunc::Partition;

/// Group algebra element `Σ c_σ σ`, with `σ` sending `p` to `σ[p]`.
pub type GroupAlgebraElement = Vec<(Vec<usize>, i64)>;

pub fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len()).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Row-reading tableau: the row of each entry `0..k`.
fn rows_and_columns(lambda: &Partition) -> (Vec<usize>, Vec<usize>) {
    let mut row = Vec::new();
    let mut col = Vec::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            row.push(r);
            col.push(c);
        }
    }
    (row, col)
}

/// `Σ_{r ∈ R, c ∈ C} sign(c) r c` over the row and column groups of the row-reading tableau.
/// Its square is `k!/dim(S^λ)` times itself.
pub fn young_symmetrizer(lambda: &Partition) -> GroupAlgebraElement {
    let k = lambda.size();
    let (row, col) = rows_and_columns(lambda);
    let all: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let rows: Vec<&Vec<usize>> = all.iter().filter(|p| (0..k).all(|x| row[p[x]] == row[x])).collect();
    let cols: Vec<&Vec<usize>> = all.iter().filter(|p| (0..k).all(|x| col[p[x]] == col[x])).collect();
    let mut acc = std::collections::BTreeMap::new();
    for r in &rows {
        for c in &cols {
            let rc: Vec<usize> = c.iter().map(|&x| r[x]).collect();
            *acc.entry(rc).or_insert(0) += sign(c);
        }
    }
    acc.into_iter().filter(|(_, v)| *v != 0).collect()
}

pub fn as_par_morphism(k: usize, e: &GroupAlgebraElement) -> ParMorphism {
    let mut f = ParMorphism::zero(k, k);
    for (sigma, c) in e {
        f = f.add(&ParMorphism::permutation(sigma).scale(&TPolynomial::constant(*c))).expect("same arity");
    }
    f
}

fn up_down(k: usize) -> HeisObject {
    HeisObject::repeat(Orientation::Up, k).concat(&HeisObject::repeat(Orientation::Down, k))
}

/// `↑^k↓^k → (↑↓)^k`, interleaving the two groups of strands.
pub fn interleave_inclusion(k: usize) -> Result<HeisMorphism> {
    let pairs = (0..k).flat_map(|i| [(End::B(i), End::T(2 * i)), (End::B(k + i), End::T(2 * i + 1))]).collect();
    Ok(HeisMorphism::from_diagram(&NormalHeisDiagram::new(up_down(k), HeisObject::alternating(k), pairs, 0)?))
}

/// `(↑↓)^k → ↑^k↓^k`, the mirror image of the inclusion.
pub fn interleave_projection(k: usize) -> Result<HeisMorphism> {
    let pairs = (0..k).flat_map(|i| [(End::B(2 * i), End::T(i)), (End::B(2 * i + 1), End::T(k + i))]).collect();
    Ok(HeisMorphism::from_diagram(&NormalHeisDiagram::new(HeisObject::alternating(k), up_down(k), pairs, 0)?))
}

/// The diagonal image `Σ c_σ σ ⊗ σ` acting on `↑^k↓^k`.
pub fn diagonal_image(k: usize, e: &GroupAlgebraElement) -> Result<HeisMorphism> {
    let obj = up_down(k);
    let mut out = HeisMorphism::zero(obj.clone(), obj);
    for (sigma, c) in e {
        let term = sym_action(sigma, Orientation::Up)?.tensor(&sym_action(sigma, Orientation::Down)?);
        out = out.add(&term.scale(*c))?;
    }
    Ok(out)
}

/// `d(e_λ)` moved to `(↑↓)^k` through the interleaving maps.
pub fn d_idempotent(lambda: &Partition) -> Result<HeisMorphism> {
    let k = lambda.size();
    let mid = diagonal_image(k, &young_symmetrizer(lambda))?;
    compose(&interleave_inclusion(k)?, &compose(&mid, &interleave_projection(k)?)?)
}

pub fn psi_young(lambda: &Partition) -> Result<HeisMorphism> {
    psi(&as_par_morphism(lambda.size(), &young_symmetrizer(lambda)))
}

/// Whether `Ψ(e_λ) − d(e_λ)` lies in block numbers below `|λ|`.
pub fn filtration_congruence(lambda: &Partition) -> Result<bool> {
    let diff = psi_young(lambda)?.sub(&d_idempotent(lambda)?)?;
    let k = lambda.size();
    for (d, _) in diff.terms() {
        if block_number(&d)? >= k.max(1) {
            return Ok(false);
        }
    }
    Ok(true)
}
