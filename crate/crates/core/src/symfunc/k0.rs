//! Classes of Heisenberg objects and idempotents in `Sym # Sym`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::character::{cycle_type, mn_character};
use super::double::{kronecker_coproduct, RHeisElem};
use super::elem::SymFuncElem;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::psi::{filtration_congruence, young_symmetrizer};

fn ones(l: usize) -> Partition {
    Partition::new(vec![1; l]).expect("ones")
}

/// `[(↑↓)^k] = (p₁⁺ p₁⁻)^k`.
pub fn alternating_class(k: usize) -> Result<RHeisElem> {
    let p1 = RHeisElem::from_pair(&SymFuncElem::power(ones(1)), &SymFuncElem::power(ones(1)))?;
    (0..k).try_fold(RHeisElem::one(), |acc, _| acc.mul(&p1))
}

/// `[↑^ℓ↓^ℓ] = (p₁^ℓ)⁺ (p₁^ℓ)⁻`.
pub fn up_down_class(l: usize) -> Result<RHeisElem> {
    RHeisElem::from_pair(&SymFuncElem::power(ones(l)), &SymFuncElem::power(ones(l)))
}

/// Multiplicity of `S^μ ⊠ S^ν` in the image of the normalized `d(e_λ)`: its trace there.
pub fn diagonal_class(lambda: &Partition) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    let e = young_symmetrizer(lambda);
    let k = lambda.size();
    // e² = h e with h = k!/dim S^λ
    let h = (1..=k as i64).product::<i64>() / mn_character(lambda, &ones(k))?;
    let types: Vec<(Partition, i64)> = e.iter().map(|(s, c)| (cycle_type(s), *c)).collect();
    let mut out = BTreeMap::new();
    for mu in Partition::all(k) {
        for nu in Partition::all(k) {
            let mut tr = 0i64;
            for (rho, c) in &types {
                tr += c * mn_character(&mu, rho)? * mn_character(&nu, rho)?;
            }
            if tr % h != 0 {
                return Err(Error::IntegralityViolation(format!("trace {tr}/{h} on {mu} ⊠ {nu}")));
            }
            if tr != 0 {
                out.insert((mu.clone(), nu), BigInt::from(tr / h));
            }
        }
    }
    Ok(out)
}

/// Outcome of the leading-order comparison for one `λ`.
#[derive(Clone, Debug)]
pub struct LeadingClassCheck {
    pub lambda: Partition,
    pub congruent: bool,
    pub class: BTreeMap<(Partition, Partition), BigInt>,
    pub kronecker: BTreeMap<(Partition, Partition), BigInt>,
    /// Coefficient of `s_λ⁺ s_λ⁻` in the class.
    pub diagonal_coefficient: BigInt,
}

impl LeadingClassCheck {
    pub fn new(lambda: &Partition) -> Result<Self> {
        let class = diagonal_class(lambda)?;
        let kronecker = kronecker_coproduct(&SymFuncElem::schur(lambda.clone()))?;
        let diagonal_coefficient = class.get(&(lambda.clone(), lambda.clone())).cloned().unwrap_or_else(BigInt::zero);
        Ok(Self { lambda: lambda.clone(), congruent: filtration_congruence(lambda)?, class, kronecker, diagonal_coefficient })
    }

    /// The top part of `Ψ(e_λ)` agrees with `d(e_λ)`, whose class is `Δ^K(s_λ)`.
    pub fn passes(&self) -> bool {
        self.congruent && self.class == self.kronecker
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_classes_match_kronecker() {
        for n in 1..4 {
            for lambda in Partition::all(n) {
                let c = LeadingClassCheck::new(&lambda).unwrap();
                assert!(c.passes(), "{lambda}");
            }
        }
        let c = LeadingClassCheck::new(&Partition::parse("1,1").unwrap()).unwrap();
        assert!(c.diagonal_coefficient.is_zero());
    }

    #[test]
    fn jungle_at_k0() {
        for k in 0..5 {
            let mut rhs = RHeisElem::zero();
            for l in 0..=k {
                rhs = rhs.add(&up_down_class(l).unwrap().scale(&super::super::double::stirling(k, l)));
            }
            assert_eq!(alternating_class(k).unwrap(), rhs);
        }
    }
}
