//! Symmetric functions in the power-sum, Schur and complete bases.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::character::{mn_character, z};
use super::partition::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Power,
    Schur,
    Complete,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Schur => "schur",
            Basis::Complete => "complete",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [Basis::Power, Basis::Schur, Basis::Complete].into_iter().find(|b| b.name() == s)
    }
}

pub type Coeffs = BTreeMap<Partition, BigRational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFuncElem {
    pub basis: Basis,
    pub coeffs: Coeffs,
}

pub(crate) fn add_coeff(map: &mut Coeffs, key: Partition, c: BigRational) {
    let e = map.entry(key.clone()).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&key);
    }
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p_ρ p_σ = p_{ρ ∪ σ}`.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::new(parts).expect("sorted")
}

fn p_product(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut out = Coeffs::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            add_coeff(&mut out, union(ka, kb), ca * cb);
        }
    }
    out
}

/// `s_λ` in power sums: `Σ_ρ χ^λ(ρ)/z_ρ p_ρ`.
fn schur_in_p(lambda: &Partition) -> Coeffs {
    let mut out = Coeffs::new();
    for rho in Partition::all(lambda.size()) {
        let c = mn_character(lambda, &rho).expect("same size");
        add_coeff(&mut out, rho.clone(), BigRational::new(BigInt::from(c), z(&rho)));
    }
    out
}

/// `h_λ = Π h_{λ_i}` with `h_n = Σ_{ρ ⊢ n} p_ρ / z_ρ`.
fn complete_in_p(lambda: &Partition) -> Coeffs {
    let mut out: Coeffs = [(Partition::empty(), BigRational::one())].into_iter().collect();
    for &n in lambda.parts() {
        let hn: Coeffs = Partition::all(n)
            .into_iter()
            .map(|r| {
                let zr = z(&r);
                (r, BigRational::new(BigInt::one(), zr))
            })
            .collect();
        out = p_product(&out, &hn);
    }
    out
}

fn basis_in_p(basis: Basis, lambda: &Partition) -> Coeffs {
    match basis {
        Basis::Power => [(lambda.clone(), BigRational::one())].into_iter().collect(),
        Basis::Schur => schur_in_p(lambda),
        Basis::Complete => complete_in_p(lambda),
    }
}

/// Solves `Σ_λ x_λ b_λ = v` within one degree by Gaussian elimination over the rationals.
fn solve_in_degree(basis: Basis, n: usize, v: &Coeffs) -> Coeffs {
    let ps = Partition::all(n);
    let idx: BTreeMap<&Partition, usize> = ps.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let m = ps.len();
    // augmented system: column j is b_{ps[j]} in p-coordinates
    let mut a: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m + 1]; m];
    for (j, lam) in ps.iter().enumerate() {
        for (rho, c) in basis_in_p(basis, lam) {
            a[idx[&rho]][j] = c;
        }
    }
    for (rho, c) in v {
        a[idx[rho]][m] = c.clone();
    }
    for col in 0..m {
        let piv = (col..m).find(|&r| !a[r][col].is_zero()).expect("basis matrices are invertible");
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * p;
                }
            }
        }
    }
    ps.into_iter().zip(a).filter(|(_, row)| !row[m].is_zero()).map(|(p, row)| (p, row[m].clone())).collect()
}

impl SymFuncElem {
    pub fn zero(basis: Basis) -> Self {
        Self { basis, coeffs: Coeffs::new() }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self { basis, coeffs: [(lambda, BigRational::one())].into_iter().collect() }
    }

    pub fn power(lambda: Partition) -> Self {
        Self::basis_element(Basis::Power, lambda)
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    pub fn complete(lambda: Partition) -> Self {
        Self::basis_element(Basis::Complete, lambda)
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (k, c) in other.coeffs {
            add_coeff(&mut out.coeffs, k, c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.basis);
        for (k, v) in &self.coeffs {
            add_coeff(&mut out.coeffs, k.clone(), v * c);
        }
        out
    }

    pub fn to_power(&self) -> Coeffs {
        let mut out = Coeffs::new();
        for (lam, c) in &self.coeffs {
            for (rho, d) in basis_in_p(self.basis, lam) {
                add_coeff(&mut out, rho, c * d);
            }
        }
        out
    }

    pub fn to_basis(&self, basis: Basis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let p = self.to_power();
        let coeffs = match basis {
            Basis::Power => p,
            Basis::Schur => {
                // p_ρ = Σ_λ χ^λ(ρ) s_λ
                let mut out = Coeffs::new();
                for (rho, c) in &p {
                    for lam in Partition::all(rho.size()) {
                        let x = mn_character(&lam, rho).expect("same size");
                        if x != 0 {
                            add_coeff(&mut out, lam, c * rational(x));
                        }
                    }
                }
                out
            }
            Basis::Complete => {
                let mut by_degree: BTreeMap<usize, Coeffs> = BTreeMap::new();
                for (rho, c) in p {
                    by_degree.entry(rho.size()).or_default().insert(rho, c);
                }
                by_degree.into_iter().flat_map(|(n, v)| solve_in_degree(Basis::Complete, n, &v)).collect()
            }
        };
        Self { basis, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self { basis: Basis::Power, coeffs: p_product(&self.to_power(), &other.to_power()) }.to_basis(self.basis)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// `basis:{(λ): c, …}`.
    pub fn parse(s: &str) -> Result<Self> {
        let (tag, body) = s.trim().split_once(':').ok_or_else(|| Error::Parse("expected `basis:{...}`".into()))?;
        let basis = Basis::from_name(tag.trim()).ok_or_else(|| Error::Parse(format!("unknown basis `{tag}`")))?;
        let body = body.trim();
        let inner =
            body.strip_prefix('{').and_then(|b| b.strip_suffix('}')).ok_or_else(|| Error::Parse("expected braces".into()))?;
        let mut out = Self::zero(basis);
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let close = rest.find(')').ok_or_else(|| Error::Parse("unclosed partition".into()))?;
            let lam = Partition::parse(&rest[..=close])?;
            let after = rest[close + 1..].trim_start();
            let after = after.strip_prefix(':').ok_or_else(|| Error::Parse("expected `:`".into()))?;
            let end = after.find(',').unwrap_or(after.len());
            let coeff: BigRational =
                after[..end].trim().parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", after[..end].trim())))?;
            add_coeff(&mut out.coeffs, lam, coeff);
            rest = after[end..].trim_start_matches(',').trim();
        }
        Ok(out)
    }
}

impl fmt::Display for SymFuncElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|(l, c)| format!("{l}: {c}")).collect();
        write!(f, "{}:{{{}}}", self.basis.name(), terms.join(", "))
    }
}

/// `⟨f, g⟩` with `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`; integral when both sides are Schur or complete expansions
/// of integral data.
pub fn hopf_pairing(f: &SymFuncElem, g: &SymFuncElem) -> Result<BigRational> {
    let (a, b) = (f.to_power(), g.to_power());
    let mut total = BigRational::zero();
    for (lam, c) in &a {
        if let Some(d) = b.get(lam) {
            total += c * d * BigRational::from_integer(z(lam));
        }
    }
    let integral_inputs = f.basis != Basis::Power && g.basis != Basis::Power && f.is_integral() && g.is_integral();
    if integral_inputs && !total.is_integer() {
        return Err(Error::IntegralityViolation(format!("⟨{f}, {g}⟩ = {total}")));
    }
    Ok(total)
}
