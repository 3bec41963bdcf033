use super::morphism::{Generator, ParMorphism};
use crate::poly::TPolynomial;

/// A defining relation, both sides as morphisms.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: ParMorphism,
    pub rhs: ParMorphism,
}

fn g(x: Generator) -> ParMorphism {
    ParMorphism::generator(x)
}

fn id(k: usize) -> ParMorphism {
    ParMorphism::identity(k)
}

/// Composes bottom to top.
fn seq(parts: &[ParMorphism]) -> ParMorphism {
    let mut it = parts.iter();
    let mut acc = it.next().expect("empty sequence").clone();
    for p in it {
        acc = p.compose(&acc).expect("relation arity");
    }
    acc
}

pub fn relations() -> Vec<Relation> {
    use Generator::*;
    let r = |name, lhs, rhs| Relation { name, lhs, rhs };
    vec![
        r("P1 unit left", seq(&[g(Eta).tensor(&id(1)), g(Mu)]), id(1)),
        r("P1 unit right", seq(&[id(1).tensor(&g(Eta)), g(Mu)]), id(1)),
        r("P1 counit left", seq(&[g(Delta), g(Eps).tensor(&id(1))]), id(1)),
        r("P1 counit right", seq(&[g(Delta), id(1).tensor(&g(Eps))]), id(1)),
        r("P1 frobenius left", seq(&[id(1).tensor(&g(Delta)), g(Mu).tensor(&id(1))]), seq(&[g(Mu), g(Delta)])),
        r("P1 frobenius right", seq(&[g(Delta).tensor(&id(1)), id(1).tensor(&g(Mu))]), seq(&[g(Mu), g(Delta)])),
        r("P2 involution", seq(&[g(Swap), g(Swap)]), id(2)),
        r(
            "P2 braid",
            seq(&[g(Swap).tensor(&id(1)), id(1).tensor(&g(Swap)), g(Swap).tensor(&id(1))]),
            seq(&[id(1).tensor(&g(Swap)), g(Swap).tensor(&id(1)), id(1).tensor(&g(Swap))]),
        ),
        r("P3 unit natural", seq(&[g(Eta).tensor(&id(1)), g(Swap)]), id(1).tensor(&g(Eta))),
        r(
            "P3 product natural",
            seq(&[g(Mu).tensor(&id(1)), g(Swap)]),
            seq(&[id(1).tensor(&g(Swap)), g(Swap).tensor(&id(1)), id(1).tensor(&g(Mu))]),
        ),
        r("P3 counit natural", seq(&[g(Swap), id(1).tensor(&g(Eps))]), g(Eps).tensor(&id(1))),
        r(
            "P3 coproduct natural",
            seq(&[id(1).tensor(&g(Delta)), g(Swap).tensor(&id(1)), id(1).tensor(&g(Swap))]),
            seq(&[g(Swap), g(Delta).tensor(&id(1))]),
        ),
        r("P4 commutative", seq(&[g(Swap), g(Mu)]), g(Mu)),
        r("P4 special", seq(&[g(Delta), g(Mu)]), id(1)),
        r("P4 dimension", seq(&[g(Eta), g(Eps)]), ParMorphism::identity(0).scale(&TPolynomial::t())),
    ]
}

/// Each relation with whether its two sides agree.
pub fn verify_presentation() -> Vec<(&'static str, bool)> {
    relations().into_iter().map(|r| (r.name, r.lhs == r.rhs)).collect()
}
