//! The defining relations of the Heisenberg category and the standard consequences, as word pairs.

use super::morphism::HeisMorphism;
use super::object::{HeisObject, Orientation};
use super::word::{DiagramWord, HeisLayer, LayerKind, Strategy};
use crate::error::Result;

use LayerKind::*;

/// A relation `lhs = Σ c · rhs_i`.
#[derive(Clone, Debug)]
pub struct HeisRelation {
    pub name: String,
    pub lhs: DiagramWord,
    pub rhs: Vec<(i64, DiagramWord)>,
}

fn obj(s: &str) -> HeisObject {
    HeisObject::parse(s).unwrap()
}

fn w(source: &str, layers: &[(LayerKind, usize)]) -> DiagramWord {
    DiagramWord::new(obj(source), layers.iter().map(|&(k, p)| HeisLayer::new(k, p)).collect()).expect("relation word")
}

fn rel(name: impl Into<String>, lhs: DiagramWord, rhs: Vec<(i64, DiagramWord)>) -> HeisRelation {
    HeisRelation { name: name.into(), lhs, rhs }
}

/// Crossings at the given positions, oriented to fit whatever object they meet.
fn crossings(source: &HeisObject, positions: &[usize]) -> DiagramWord {
    let mut cur = source.clone();
    let mut layers = Vec::new();
    for &p in positions {
        let l = HeisLayer::new(LayerKind::crossing(cur.0[p], cur.0[p + 1]), p);
        cur = l.apply_to_object(&cur).unwrap();
        layers.push(l);
    }
    DiagramWord::new(source.clone(), layers).unwrap()
}

pub fn relations() -> Vec<HeisRelation> {
    let mut v = vec![
        rel("H1 involution", w("^^", &[(X, 0), (X, 0)]), vec![(1, w("^^", &[]))]),
        rel("H1 braid", w("^^^", &[(X, 0), (X, 1), (X, 0)]), vec![(1, w("^^^", &[(X, 1), (X, 0), (X, 1)]))]),
        rel("H2 zigzag up", w("^", &[(CupDU, 1), (CapUD, 0)]), vec![(1, w("^", &[]))]),
        rel("H2 zigzag down", w("v", &[(CupDU, 0), (CapUD, 1)]), vec![(1, w("v", &[]))]),
        rel("H3 double crossing up-down", w("^v", &[(XRight, 0), (XLeft, 0)]), vec![(1, w("^v", &[]))]),
        rel(
            "H3 double crossing down-up",
            w("v^", &[(XLeft, 0), (XRight, 0)]),
            vec![(1, w("v^", &[])), (-1, w("v^", &[(CapDU, 0), (CupDU, 0)]))],
        ),
        rel("H3 left curl", w("^", &[(CupDU, 0), (X, 1), (CapDU, 0)]), vec![]),
        rel("H3 counterclockwise bubble", w("", &[(CupDU, 0), (CapDU, 0)]), vec![(1, w("", &[]))]),
        rel("bubble slide up", w("^", &[(CupUD, 0), (CapUD, 0)]), vec![(1, w("^", &[(CupUD, 1), (CapUD, 1)])), (1, w("^", &[]))]),
        rel(
            "bubble slide down",
            w("v", &[(CupUD, 0), (CapUD, 0)]),
            vec![(1, w("v", &[(CupUD, 1), (CapUD, 1)])), (-1, w("v", &[]))],
        ),
    ];
    for (kind, src) in [(XLeft, "v^"), (XRight, "^v"), (XDown, "vv")] {
        let direct = w(src, &[(kind, 0)]);
        v.push(rel(format!("crossing definition {}", kind.name()), direct.expanded(), vec![(1, direct)]));
    }
    for bits in 0..8u8 {
        let o: Vec<Orientation> =
            (0..3).map(|i| if bits >> (2 - i) & 1 == 0 { Orientation::Up } else { Orientation::Down }).collect();
        let src = HeisObject(o);
        v.push(rel(format!("braid {src}"), crossings(&src, &[0, 1, 0]), vec![(1, crossings(&src, &[1, 0, 1]))]));
    }
    v
}

impl HeisRelation {
    pub fn sides(&self, strategy: Strategy) -> Result<(HeisMorphism, HeisMorphism)> {
        let lhs = self.lhs.normalize_with(strategy)?;
        let mut rhs = HeisMorphism::zero(lhs.source().clone(), lhs.target().clone());
        for (c, word) in &self.rhs {
            rhs = rhs.add(&word.normalize_with(strategy)?.scale(*c))?;
        }
        Ok((lhs, rhs))
    }

    pub fn holds(&self) -> bool {
        [Strategy::BottomUp, Strategy::BottomUpExpanded, Strategy::TopDown]
            .into_iter()
            .all(|s| matches!(self.sides(s), Ok((l, r)) if l == r))
    }
}

/// Each relation with whether both sides normalize to the same morphism.
pub fn verify_relations() -> Vec<(String, bool)> {
    relations().into_iter().map(|r| (r.name.clone(), r.holds())).collect()
}
