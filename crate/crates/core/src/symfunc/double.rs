//! The Heisenberg double `Sym # Sym` with basis `s_λ⁺ s_μ⁻`, and the Kronecker coproduct.
//!
//! `f⁺` is `f ⊗ 1` and `f⁻` is `1 ⊗ f`; a pure tensor `f ⊗ g` is the normally ordered product `f⁺ g⁻`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::character::{mn_character, z};
use super::elem::{rational, union, Basis, SymFuncElem};
use super::partition::Partition;
use crate::error::{Error, Result};

/// Rational combination of `p_λ⁺ p_μ⁻`.
pub type PowerPairs = BTreeMap<(Partition, Partition), BigRational>;

fn add_pair(map: &mut PowerPairs, key: (Partition, Partition), c: BigRational) {
    let e = map.entry(key.clone()).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// All splittings `p_λ = p_A p_B` from the primitive coproduct, one per subset of part positions.
fn coproduct(lambda: &Partition) -> Vec<(Partition, Partition)> {
    let parts = lambda.parts();
    (0..1usize << parts.len())
        .map(|mask| {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (i, &x) in parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a.push(x);
                } else {
                    b.push(x);
                }
            }
            (Partition::new(a).expect("sorted"), Partition::new(b).expect("sorted"))
        })
        .collect()
}

/// `(e ⊗ f)(g ⊗ h) = Σ ⟨f₁, g₂⟩ e g₁ ⊗ f₂ h` on power sums.
pub fn power_pairs_mul(a: &PowerPairs, b: &PowerPairs) -> PowerPairs {
    let mut out = PowerPairs::new();
    for ((e, f), ca) in a {
        let f_split = coproduct(f);
        for ((g, h), cb) in b {
            let g_split = coproduct(g);
            for (f1, f2) in &f_split {
                for (g1, g2) in &g_split {
                    if f1 != g2 {
                        continue;
                    }
                    let c = ca * cb * BigRational::from_integer(z(f1));
                    add_pair(&mut out, (union(e, g1), union(f2, h)), c);
                }
            }
        }
    }
    out
}

/// Integer combination of `s_λ⁺ s_μ⁻`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct RHeisElem {
    pub terms: BTreeMap<(Partition, Partition), BigInt>,
}

impl RHeisElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty(), Partition::empty())
    }

    pub fn basis(plus: Partition, minus: Partition) -> Self {
        Self { terms: [((plus, minus), BigInt::one())].into_iter().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                out.terms.remove(k);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).filter(|(_, v)| !v.is_zero()).collect() }
    }

    pub fn to_power_pairs(&self) -> PowerPairs {
        let mut out = PowerPairs::new();
        for ((l, m), c) in &self.terms {
            let (pl, pm) = (SymFuncElem::schur(l.clone()).to_power(), SymFuncElem::schur(m.clone()).to_power());
            for (a, ca) in &pl {
                for (b, cb) in &pm {
                    add_pair(&mut out, (a.clone(), b.clone()), ca * cb * BigRational::from_integer(c.clone()));
                }
            }
        }
        out
    }

    /// Converts to the Schur basis, failing if a coefficient is not an integer.
    pub fn from_power_pairs(p: &PowerPairs) -> Result<Self> {
        let mut rat: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
        for ((a, b), c) in p {
            for l in Partition::all(a.size()) {
                let xa = mn_character(&l, a).expect("same size");
                if xa == 0 {
                    continue;
                }
                for m in Partition::all(b.size()) {
                    let xb = mn_character(&m, b).expect("same size");
                    if xb != 0 {
                        add_pair(&mut rat, (l.clone(), m), c * rational(xa * xb));
                    }
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (k, c) in rat {
            if !c.is_integer() {
                return Err(Error::IntegralityViolation(format!("coefficient {c} on s_{}⁺ s_{}⁻", k.0, k.1)));
            }
            terms.insert(k, c.to_integer());
        }
        Ok(Self { terms })
    }

    /// `f⁺ g⁻` for symmetric functions with an integral result.
    pub fn from_pair(plus: &SymFuncElem, minus: &SymFuncElem) -> Result<Self> {
        let mut p = PowerPairs::new();
        for (a, ca) in plus.to_power() {
            for (b, cb) in minus.to_power() {
                add_pair(&mut p, (a.clone(), b), &ca * cb);
            }
        }
        Self::from_power_pairs(&p)
    }

    /// `f⁺ = f ⊗ 1`.
    pub fn plus(f: &SymFuncElem) -> Result<Self> {
        Self::from_pair(f, &SymFuncElem::power(Partition::empty()))
    }

    /// `f⁻ = 1 ⊗ f`.
    pub fn minus(f: &SymFuncElem) -> Result<Self> {
        Self::from_pair(&SymFuncElem::power(Partition::empty()), f)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        heis_double_mul(self, other)
    }

    /// Lines `(λ, μ, c)`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let inner = line
                .strip_prefix('(')
                .and_then(|l| l.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad term `{line}`")))?;
            let first = inner.find(')').ok_or_else(|| Error::Parse(format!("bad term `{line}`")))?;
            let lam = Partition::parse(&inner[..=first])?;
            let rest = inner[first + 1..].trim_start().trim_start_matches(',').trim_start();
            let second = rest.find(')').ok_or_else(|| Error::Parse(format!("bad term `{line}`")))?;
            let mu = Partition::parse(&rest[..=second])?;
            let c: BigInt = rest[second + 1..]
                .trim_start()
                .trim_start_matches(',')
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in `{line}`")))?;
            out = out.add(&Self::basis(lam, mu).scale(&c));
        }
        Ok(out)
    }
}

impl fmt::Display for RHeisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.terms.iter().map(|((l, m), c)| format!("({l}, {m}, {c})")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl fmt::Debug for RHeisElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Straightened product in `Sym # Sym`, computed on power sums.
pub fn heis_double_mul(a: &RHeisElem, b: &RHeisElem) -> Result<RHeisElem> {
    RHeisElem::from_power_pairs(&power_pairs_mul(&a.to_power_pairs(), &b.to_power_pairs()))
}

/// `Δ^K(f) = Σ g_{μν} s_μ ⊗ s_ν` from `Δ^K(p_ρ) = p_ρ ⊗ p_ρ`.
pub fn kronecker_coproduct(f: &SymFuncElem) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    let p: PowerPairs = f.to_power().into_iter().map(|(rho, c)| ((rho.clone(), rho), c)).collect();
    Ok(RHeisElem::from_power_pairs(&p)?.terms)
}

/// `Σ g_{μν} s_μ⁺ s_ν⁻`, the normally ordered placement of the Kronecker coproduct.
pub fn kdelta_embed(f: &SymFuncElem) -> Result<RHeisElem> {
    Ok(RHeisElem { terms: kronecker_coproduct(f)? })
}

/// The ring map determined by `p_n ↦ p_n⁺ p_n⁻`, extended to products of power sums.
pub fn kdelta_multiplicative(f: &SymFuncElem) -> Result<RHeisElem> {
    let mut out = PowerPairs::new();
    for (rho, c) in f.to_power() {
        let mut acc: PowerPairs = [((Partition::empty(), Partition::empty()), c)].into_iter().collect();
        for &n in rho.parts() {
            let pn = Partition::new(vec![n]).expect("single part");
            let gen: PowerPairs = [((pn.clone(), pn), BigRational::one())].into_iter().collect();
            acc = power_pairs_mul(&acc, &gen);
        }
        for (k, v) in acc {
            add_pair(&mut out, k, v);
        }
    }
    RHeisElem::from_power_pairs(&out)
}

/// Stirling numbers of the second kind by the recursion `S(k+1, ℓ) = ℓ S(k, ℓ) + S(k, ℓ−1)`.
pub fn stirling(k: usize, l: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j] += v * BigInt::from(j);
            next[j + 1] += v;
        }
        row = next;
    }
    row.get(l).cloned().unwrap_or_else(BigInt::zero)
}

/// `(p₁⁺ p₁⁻)^k = Σ_ℓ S(k, ℓ) (p₁^ℓ)⁺ (p₁^ℓ)⁻`.
pub fn stirling_normal_order_check(k: usize) -> Result<bool> {
    let one_l = |l: usize| Partition::new(vec![1; l]).expect("ones");
    let p1 = RHeisElem::from_pair(&SymFuncElem::power(one_l(1)), &SymFuncElem::power(one_l(1)))?;
    let mut lhs = RHeisElem::one();
    for _ in 0..k {
        lhs = lhs.mul(&p1)?;
    }
    let mut rhs = RHeisElem::zero();
    for l in 0..=k {
        let term = RHeisElem::from_pair(&SymFuncElem::power(one_l(l)), &SymFuncElem::power(one_l(l)))?;
        rhs = rhs.add(&term.scale(&stirling(k, l)));
    }
    Ok(lhs == rhs)
}

/// Whether the coefficient vectors are linearly independent over the rationals.
pub fn independent(elems: &[RHeisElem]) -> bool {
    let keys: Vec<&(Partition, Partition)> = {
        let mut k: Vec<_> = elems.iter().flat_map(|e| e.terms.keys()).collect();
        k.sort();
        k.dedup();
        k
    };
    let rows: Vec<Vec<i64>> = elems
        .iter()
        .map(|e| keys.iter().map(|k| e.terms.get(*k).map_or(0, |c| i64::try_from(c).expect("small coefficient"))).collect())
        .collect();
    crate::rep::rank(&rows) == elems.len()
}

/// Convenience: `Basis::Schur` element from a partition string.
pub fn schur(s: &str) -> Result<SymFuncElem> {
    Ok(SymFuncElem::basis_element(Basis::Schur, Partition::parse(s)?))
}
