//! Comparison of the two routes from the partition category to matrices over `S_n`-modules.

use super::eval::eval_heis;
use super::matrix::RepMatrix;
use super::perm_tensor::{beta, beta_inv, phi};
use crate::error::Result;
use crate::par::ParMorphism;
use crate::psi::psi;

/// `β_ℓ^{-1} · Ω_n(Ψ(f)) · β_k` with bubbles evaluated at `n`.
pub fn heis_route(n: usize, f: &ParMorphism) -> Result<RepMatrix> {
    let image = psi(f)?.at_t(n as i64);
    let m = eval_heis(n, &image)?;
    beta_inv(n, f.target()).mul(&m)?.mul(&beta(n, f.source()))
}

pub fn check_actcom(n: usize, f: &ParMorphism) -> Result<bool> {
    Ok(heis_route(n, f)? == phi(n, f))
}
