use std::collections::BTreeMap;

use super::line::{add_into, LineComb, LineDiagram};
use super::object::{HeisObject, Orientation};
use crate::error::{Error, Result};
use crate::poly::TPolynomial;

/// An endpoint of a diagram `source -> target`, indexed from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    B(usize),
    T(usize),
}

/// A basis diagram: an orientation-compatible matching plus a power of the clockwise bubble.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalHeisDiagram {
    pub source: HeisObject,
    pub target: HeisObject,
    pub pairs: Vec<(End, End)>,
    pub bubbles: u32,
}

/// Integer combination of basis diagrams sharing source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisMorphism {
    source: HeisObject,
    target: HeisObject,
    terms: LineComb,
}

fn line_pos(source: &HeisObject, target: &HeisObject, e: End) -> usize {
    match e {
        End::T(p) => p,
        End::B(q) => target.len() + source.len() - 1 - q,
    }
}

fn line_end(source: &HeisObject, target: &HeisObject, p: usize) -> End {
    if p < target.len() {
        End::T(p)
    } else {
        End::B(target.len() + source.len() - 1 - p)
    }
}

fn line_orientations(source: &HeisObject, target: &HeisObject) -> Vec<Orientation> {
    target.0.iter().copied().chain(source.0.iter().rev().map(|o| o.flip())).collect()
}

impl NormalHeisDiagram {
    pub fn new(source: HeisObject, target: HeisObject, pairs: Vec<(End, End)>, bubbles: u32) -> Result<Self> {
        let d = Self { source, target, pairs, bubbles };
        let line = d.to_line()?;
        Ok(Self::from_line(&d.source, &d.target, &line))
    }

    pub(crate) fn to_line(&self) -> Result<LineDiagram> {
        let n = self.source.len() + self.target.len();
        let orient = line_orientations(&self.source, &self.target);
        let mut partner = vec![usize::MAX; n];
        for &(x, y) in &self.pairs {
            let in_range = |e: End| match e {
                End::B(q) => q < self.source.len(),
                End::T(p) => p < self.target.len(),
            };
            if !in_range(x) || !in_range(y) {
                return Err(Error::Arity(format!("endpoint out of range in {x:?}-{y:?}")));
            }
            let (a, b) = (line_pos(&self.source, &self.target, x), line_pos(&self.source, &self.target, y));
            if a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::Arity("pairs are not a perfect matching".into()));
            }
            if orient[a] == orient[b] {
                return Err(Error::Arity(format!("pair {x:?}-{y:?} is not orientation compatible")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::Arity("pairs do not cover every endpoint".into()));
        }
        Ok(LineDiagram { orient, partner, bubbles: self.bubbles })
    }

    pub(crate) fn from_line(source: &HeisObject, target: &HeisObject, d: &LineDiagram) -> Self {
        let mut pairs: Vec<(End, End)> = (0..d.len())
            .filter(|&p| p < d.partner[p])
            .map(|p| {
                let (x, y) = (line_end(source, target, p), line_end(source, target, d.partner[p]));
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        pairs.sort();
        Self { source: source.clone(), target: target.clone(), pairs, bubbles: d.bubbles }
    }

    pub fn identity(obj: &HeisObject) -> Self {
        let pairs = (0..obj.len()).map(|i| (End::B(i), End::T(i))).collect();
        Self { source: obj.clone(), target: obj.clone(), pairs, bubbles: 0 }
    }

    pub fn partner(&self, e: End) -> End {
        self.pairs
            .iter()
            .find_map(|&(x, y)| {
                if x == e {
                    Some(y)
                } else if y == e {
                    Some(x)
                } else {
                    None
                }
            })
            .unwrap()
    }

    pub fn crossings(&self) -> usize {
        self.to_line().map(|l| l.crossing_count()).unwrap_or(0)
    }
}

impl HeisMorphism {
    pub fn zero(source: HeisObject, target: HeisObject) -> Self {
        Self { source, target, terms: LineComb::new() }
    }

    pub fn identity(obj: &HeisObject) -> Self {
        Self::from_diagram(&NormalHeisDiagram::identity(obj))
    }

    pub fn from_diagram(d: &NormalHeisDiagram) -> Self {
        Self::from_terms(d.source.clone(), d.target.clone(), [(d.clone(), 1)]).unwrap()
    }

    pub fn from_terms(
        source: HeisObject,
        target: HeisObject,
        terms: impl IntoIterator<Item = (NormalHeisDiagram, i64)>,
    ) -> Result<Self> {
        let mut out = Self::zero(source, target);
        for (d, c) in terms {
            if d.source != out.source || d.target != out.target {
                return Err(Error::Arity("term boundary differs from morphism boundary".into()));
            }
            add_into(&mut out.terms, d.to_line()?, c);
        }
        Ok(out)
    }

    pub fn source(&self) -> &HeisObject {
        &self.source
    }

    pub fn target(&self) -> &HeisObject {
        &self.target
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> Vec<(NormalHeisDiagram, i64)> {
        let mut v: Vec<_> =
            self.terms.iter().map(|(d, &c)| (NormalHeisDiagram::from_line(&self.source, &self.target, d), c)).collect();
        v.sort();
        v
    }

    pub fn coeff(&self, d: &NormalHeisDiagram) -> i64 {
        d.to_line().ok().and_then(|l| self.terms.get(&l).copied()).unwrap_or(0)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Arity(format!(
                "boundaries differ: {}->{} vs {}->{}",
                self.source, self.target, other.source, other.target
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, &c) in &other.terms {
            add_into(&mut out.terms, d.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.source.clone(), self.target.clone());
        for (d, &a) in &self.terms {
            add_into(&mut out.terms, d.clone(), a * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1))
    }

    /// Juxtaposition with `self` on the left. Bubbles of `other` slide left across `self`.
    pub fn tensor(&self, other: &Self) -> Self {
        let source = self.source.concat(&other.source);
        let target = self.target.concat(&other.target);
        let shift: i64 = self.target.0.iter().map(|o| o.weight()).sum();
        let mut out = Self::zero(source.clone(), target.clone());
        for (d1, &c1) in &self.terms {
            let n1 = NormalHeisDiagram::from_line(&self.source, &self.target, d1);
            for (d2, &c2) in &other.terms {
                let n2 = NormalHeisDiagram::from_line(&other.source, &other.target, d2);
                let move_end = |e: End| match e {
                    End::B(q) => End::B(q + self.source.len()),
                    End::T(p) => End::T(p + self.target.len()),
                };
                let mut pairs = n1.pairs.clone();
                pairs.extend(n2.pairs.iter().map(|&(x, y)| (move_end(x), move_end(y))));
                pairs.sort();
                // (B + shift)^b2 expanded by the binomial theorem
                let b2 = n2.bubbles;
                let mut binom: i64 = 1;
                for j in 0..=b2 {
                    let c = c1 * c2 * binom * shift.pow(b2 - j);
                    let nd = NormalHeisDiagram {
                        source: source.clone(),
                        target: target.clone(),
                        pairs: pairs.clone(),
                        bubbles: n1.bubbles + j,
                    };
                    add_into(&mut out.terms, nd.to_line().expect("tensor of valid diagrams"), c);
                    binom = binom * (b2 - j) as i64 / (j + 1) as i64;
                }
            }
        }
        out
    }

    /// Replaces each bubble power `b` by `t^b`.
    pub fn specialize_t(&self) -> BTreeMap<NormalHeisDiagram, TPolynomial> {
        let mut out: BTreeMap<NormalHeisDiagram, TPolynomial> = BTreeMap::new();
        for (mut d, c) in self.terms() {
            let b = d.bubbles;
            d.bubbles = 0;
            let e = out.entry(d).or_default();
            *e += &TPolynomial::monomial(c, b);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Evaluates bubbles at `t = n`, leaving bubble-free terms.
    pub fn at_t(&self, n: i64) -> Self {
        let mut out = Self::zero(self.source.clone(), self.target.clone());
        for (d, &c) in &self.terms {
            let mut d = d.clone();
            let b = d.bubbles;
            d.bubbles = 0;
            add_into(&mut out.terms, d, c * n.pow(b));
        }
        out
    }

    /// Multiplies by the `j`-th power of the clockwise bubble in the leftmost region.
    pub fn times_bubbles(&self, j: u32) -> Self {
        let mut out = Self::zero(self.source.clone(), self.target.clone());
        for (d, &c) in &self.terms {
            let mut d = d.clone();
            d.bubbles += j;
            add_into(&mut out.terms, d, c);
        }
        out
    }

    pub(crate) fn map_terms(&self, target: HeisObject, f: impl Fn(&LineDiagram) -> Result<LineComb>) -> Result<Self> {
        let mut out = Self::zero(self.source.clone(), target);
        for (d, &c) in &self.terms {
            for (e, c2) in f(d)? {
                add_into(&mut out.terms, e, c * c2);
            }
        }
        Ok(out)
    }

    pub(crate) fn map_terms_below(&self, source: HeisObject, f: impl Fn(&LineDiagram) -> Result<LineComb>) -> Result<Self> {
        let mut out = Self::zero(source, self.target.clone());
        for (d, &c) in &self.terms {
            for (e, c2) in f(d)? {
                add_into(&mut out.terms, e, c * c2);
            }
        }
        Ok(out)
    }
}
