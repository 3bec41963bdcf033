use std::collections::BTreeMap;

use super::diagram::{PartitionDiagram, Vertex};
use crate::error::{Error, Result};
use crate::poly::TPolynomial;

/// A linear combination of partition diagrams with coefficients in `Z[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParMorphism {
    source: usize,
    target: usize,
    terms: BTreeMap<PartitionDiagram, TPolynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Mu,
    Delta,
    Swap,
    Eta,
    Eps,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::Mu, Generator::Delta, Generator::Swap, Generator::Eta, Generator::Eps];

    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Mu => (2, 1),
            Generator::Delta => (1, 2),
            Generator::Swap => (2, 2),
            Generator::Eta => (0, 1),
            Generator::Eps => (1, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Mu => "mu",
            Generator::Delta => "delta",
            Generator::Swap => "s",
            Generator::Eta => "eta",
            Generator::Eps => "eps",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }

    pub fn diagram(self) -> PartitionDiagram {
        use Vertex::{Bottom as B, Top as T};
        let blocks = match self {
            Generator::Mu => vec![vec![B(0), B(1), T(0)]],
            Generator::Delta => vec![vec![B(0), T(0), T(1)]],
            Generator::Swap => return PartitionDiagram::permutation(&[1, 0]),
            Generator::Eta => vec![vec![T(0)]],
            Generator::Eps => vec![vec![B(0)]],
        };
        let (b, t) = self.arity();
        PartitionDiagram::new(b, t, blocks).unwrap()
    }
}

impl ParMorphism {
    pub fn zero(source: usize, target: usize) -> Self {
        Self { source, target, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: PartitionDiagram) -> Self {
        Self::term(TPolynomial::one(), d)
    }

    pub fn term(c: TPolynomial, d: PartitionDiagram) -> Self {
        let mut f = Self::zero(d.bottom(), d.top());
        f.add_term(d, &c);
        f
    }

    pub fn identity(k: usize) -> Self {
        Self::from_diagram(PartitionDiagram::identity(k))
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_diagram(g.diagram())
    }

    pub fn permutation(perm: &[usize]) -> Self {
        Self::from_diagram(PartitionDiagram::permutation(perm))
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionDiagram, &TPolynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &PartitionDiagram) -> TPolynomial {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: PartitionDiagram, c: &TPolynomial) {
        assert_eq!((d.bottom(), d.top()), (self.source, self.target), "diagram arity");
        let e = self.terms.entry(d).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.source, self.target) != (other.source, other.target) {
            return Err(Error::Arity("cannot add morphisms with different arities".into()));
        }
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &TPolynomial) -> Self {
        let mut out = Self::zero(self.source, self.target);
        for (d, a) in self.terms() {
            out.add_term(d.clone(), &(a * c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&TPolynomial::constant(-1)))
    }

    /// `self ∘ lower`.
    pub fn compose(&self, lower: &Self) -> Result<Self> {
        if self.source != lower.target {
            return Err(Error::Arity(format!(
                "compose {}->{} after {}->{}",
                self.source, self.target, lower.source, lower.target
            )));
        }
        let mut out = Self::zero(lower.source, self.target);
        for (d1, c1) in self.terms() {
            for (d2, c2) in lower.terms() {
                let (alpha, d) = d1.stack(d2)?;
                out.add_term(d, &(c1 * c2).shift(alpha));
            }
        }
        Ok(out)
    }

    /// Juxtaposition with `self` on the left.
    pub fn tensor(&self, right: &Self) -> Self {
        let mut out = Self::zero(self.source + right.source, self.target + right.target);
        for (d1, c1) in self.terms() {
            for (d2, c2) in right.terms() {
                out.add_term(d1.juxtapose(d2), &(c1 * c2));
            }
        }
        out
    }

    /// Coefficients evaluated at `t = n`.
    pub fn specialize(&self, n: i64) -> Vec<(PartitionDiagram, i64)> {
        self.terms().map(|(d, c)| (d.clone(), c.eval(n))).filter(|(_, c)| *c != 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eps_after_eta_is_t() {
        let f = ParMorphism::generator(Generator::Eps).compose(&ParMorphism::generator(Generator::Eta)).unwrap();
        assert_eq!(f, ParMorphism::term(TPolynomial::t(), PartitionDiagram::identity(0)));
    }

    #[test]
    fn eta_tensor_eps() {
        let f = ParMorphism::generator(Generator::Eta).tensor(&ParMorphism::generator(Generator::Eps));
        let d = PartitionDiagram::new(1, 1, vec![vec![Vertex::Bottom(0)], vec![Vertex::Top(0)]]).unwrap();
        assert_eq!(f, ParMorphism::from_diagram(d));
    }

    #[test]
    fn arity_error() {
        let mu = ParMorphism::generator(Generator::Mu);
        assert!(matches!(mu.compose(&mu), Err(Error::Arity(_))));
    }

    #[test]
    fn identity_is_unit() {
        for d in PartitionDiagram::all(2, 3) {
            let f = ParMorphism::from_diagram(d);
            assert_eq!(ParMorphism::identity(3).compose(&f).unwrap(), f);
            assert_eq!(f.compose(&ParMorphism::identity(2)).unwrap(), f);
        }
    }
}
