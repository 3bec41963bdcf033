use std::fmt;

use super::line::LineComb;
use super::morphism::{End, HeisMorphism, NormalHeisDiagram};
use super::object::{HeisObject, Orientation};
use crate::error::{Error, Result};

use Orientation::{Down, Up};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LayerKind {
    /// Upward crossing `↑↑ -> ↑↑`.
    X,
    /// `↓↑ -> ↑↓`.
    XLeft,
    /// `↑↓ -> ↓↑`.
    XRight,
    /// `↓↓ -> ↓↓`.
    XDown,
    CupUD,
    CapUD,
    CupDU,
    CapDU,
}

impl LayerKind {
    pub const ALL: [LayerKind; 8] = [
        LayerKind::X,
        LayerKind::XLeft,
        LayerKind::XRight,
        LayerKind::XDown,
        LayerKind::CupUD,
        LayerKind::CapUD,
        LayerKind::CupDU,
        LayerKind::CapDU,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LayerKind::X => "X",
            LayerKind::XLeft => "XL",
            LayerKind::XRight => "XR",
            LayerKind::XDown => "XD",
            LayerKind::CupUD => "cupUD",
            LayerKind::CapUD => "capUD",
            LayerKind::CupDU => "cupDU",
            LayerKind::CapDU => "capDU",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// The crossing whose source has orientations `(a, b)`.
    pub fn crossing(a: Orientation, b: Orientation) -> Self {
        match (a, b) {
            (Up, Up) => LayerKind::X,
            (Down, Up) => LayerKind::XLeft,
            (Up, Down) => LayerKind::XRight,
            (Down, Down) => LayerKind::XDown,
        }
    }

    pub fn is_crossing(self) -> bool {
        matches!(self, LayerKind::X | LayerKind::XLeft | LayerKind::XRight | LayerKind::XDown)
    }

    /// Orientations consumed at the layer position (empty for cups).
    pub fn input(self) -> Vec<Orientation> {
        match self {
            LayerKind::X => vec![Up, Up],
            LayerKind::XLeft => vec![Down, Up],
            LayerKind::XRight => vec![Up, Down],
            LayerKind::XDown => vec![Down, Down],
            LayerKind::CapUD => vec![Up, Down],
            LayerKind::CapDU => vec![Down, Up],
            LayerKind::CupUD | LayerKind::CupDU => vec![],
        }
    }

    pub fn output(self) -> Vec<Orientation> {
        match self {
            LayerKind::X => vec![Up, Up],
            LayerKind::XLeft => vec![Up, Down],
            LayerKind::XRight => vec![Down, Up],
            LayerKind::XDown => vec![Down, Down],
            LayerKind::CupUD => vec![Up, Down],
            LayerKind::CupDU => vec![Down, Up],
            LayerKind::CapUD | LayerKind::CapDU => vec![],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisLayer {
    pub kind: LayerKind,
    pub pos: usize,
}

impl HeisLayer {
    pub fn new(kind: LayerKind, pos: usize) -> Self {
        Self { kind, pos }
    }

    pub fn apply_to_object(&self, obj: &HeisObject) -> Result<HeisObject> {
        let input = self.kind.input();
        let end = self.pos + input.len();
        if end > obj.len() || obj.0[self.pos..end] != input[..] {
            return Err(Error::Arity(format!("layer {self} does not match object {obj}")));
        }
        let mut v = obj.0.clone();
        v.splice(self.pos..end, self.kind.output());
        Ok(HeisObject(v))
    }

    /// Generators-only expansion, bottom to top.
    pub fn expand(&self) -> Vec<HeisLayer> {
        let p = self.pos;
        let l = HeisLayer::new;
        match self.kind {
            LayerKind::XLeft => vec![l(LayerKind::CupUD, p + 2), l(LayerKind::X, p + 1), l(LayerKind::CapDU, p)],
            LayerKind::XRight => vec![l(LayerKind::CupDU, p), l(LayerKind::X, p + 1), l(LayerKind::CapUD, p + 2)],
            LayerKind::XDown => {
                let mut v = vec![l(LayerKind::CupUD, p + 2)];
                v.extend(l(LayerKind::XLeft, p + 1).expand());
                v.push(l(LayerKind::CapDU, p));
                v
            }
            _ => vec![*self],
        }
    }
}

impl fmt::Display for HeisLayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind.name(), self.pos)
    }
}

/// A stack of layers over a source object, listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramWord {
    pub source: HeisObject,
    pub layers: Vec<HeisLayer>,
}

/// Rule-application orders for normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Bottom to top, mixed crossings rewritten directly.
    BottomUp,
    /// Bottom to top, mixed crossings expanded into generators first.
    BottomUpExpanded,
    /// Top to bottom on the expanded word.
    TopDown,
}

impl DiagramWord {
    pub fn new(source: HeisObject, layers: Vec<HeisLayer>) -> Result<Self> {
        let w = Self { source, layers };
        w.target()?;
        Ok(w)
    }

    pub fn objects(&self) -> Result<Vec<HeisObject>> {
        let mut objs = vec![self.source.clone()];
        for l in &self.layers {
            let next = l.apply_to_object(objs.last().unwrap())?;
            objs.push(next);
        }
        Ok(objs)
    }

    pub fn target(&self) -> Result<HeisObject> {
        Ok(self.objects()?.pop().unwrap())
    }

    pub fn expanded(&self) -> Self {
        Self { source: self.source.clone(), layers: self.layers.iter().flat_map(|l| l.expand()).collect() }
    }

    /// `self` followed by `upper`.
    pub fn then(&self, upper: &DiagramWord) -> Result<Self> {
        if self.target()? != upper.source {
            return Err(Error::Arity("words do not stack".into()));
        }
        let mut layers = self.layers.clone();
        layers.extend(upper.layers.iter().copied());
        Ok(Self { source: self.source.clone(), layers })
    }

    pub fn normalize(&self) -> Result<HeisMorphism> {
        self.normalize_with(Strategy::BottomUp)
    }

    pub fn normalize_with(&self, strategy: Strategy) -> Result<HeisMorphism> {
        match strategy {
            Strategy::BottomUp => apply_word(HeisMorphism::identity(&self.source), &self.layers),
            Strategy::BottomUpExpanded => self.expanded().normalize_with(Strategy::BottomUp),
            Strategy::TopDown => {
                let w = self.expanded();
                let mut acc = HeisMorphism::identity(&w.target()?);
                for l in w.layers.iter().rev() {
                    acc = apply_layer_below(&acc, l)?;
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.source)?;
        for l in &self.layers {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Stacks `layer` on top of `f`.
pub fn apply_layer(f: &HeisMorphism, layer: &HeisLayer) -> Result<HeisMorphism> {
    let target = layer.apply_to_object(f.target())?;
    let p = layer.pos;
    let one = |d| {
        let mut c = LineComb::new();
        c.insert(d, 1);
        c
    };
    match layer.kind {
        LayerKind::CupUD => f.map_terms(target, |d| Ok(one(d.with_cup(p, Up)))),
        LayerKind::CupDU => f.map_terms(target, |d| Ok(one(d.with_cup(p, Down)))),
        LayerKind::CapUD | LayerKind::CapDU => f.map_terms(target, |d| d.cap(p)),
        _ => f.map_terms(target, |d| d.cross(p)),
    }
}

pub fn apply_word(mut f: HeisMorphism, layers: &[HeisLayer]) -> Result<HeisMorphism> {
    for l in layers {
        f = apply_layer(&f, l)?;
    }
    Ok(f)
}

/// Precomposes `f` with `layer`, whose target must be `f`'s source.
fn apply_layer_below(f: &HeisMorphism, layer: &HeisLayer) -> Result<HeisMorphism> {
    let x = f.source().clone();
    let input_len = layer.kind.input().len();
    let output = layer.kind.output();
    if layer.pos + output.len() > x.len() || x.0[layer.pos..layer.pos + output.len()] != output[..] {
        return Err(Error::Arity(format!("layer {layer} does not end at {x}")));
    }
    let mut src = x.0.clone();
    src.splice(layer.pos..layer.pos + output.len(), layer.kind.input());
    let src = HeisObject(src);
    debug_assert_eq!(input_len, layer.kind.input().len());
    let off = f.target().len();
    let one = |d| {
        let mut c = LineComb::new();
        c.insert(d, 1);
        c
    };
    match layer.kind {
        LayerKind::CupUD | LayerKind::CupDU => {
            let q = off + x.len() - 2 - layer.pos;
            f.map_terms_below(src, |d| d.cap(q))
        }
        LayerKind::CapUD | LayerKind::CapDU => {
            let q = off + src.len() - 2 - layer.pos;
            let left = src.0[layer.pos + 1].flip();
            f.map_terms_below(src.clone(), |d| Ok(one(d.with_cup(q, left))))
        }
        _ => {
            let q = off + x.len() - 2 - layer.pos;
            f.map_terms_below(src, |d| d.cross(q))
        }
    }
}

/// `upper ∘ lower`.
pub fn compose(upper: &HeisMorphism, lower: &HeisMorphism) -> Result<HeisMorphism> {
    if upper.source() != lower.target() {
        return Err(Error::Arity(format!(
            "compose {}->{} after {}->{}",
            upper.source(),
            upper.target(),
            lower.source(),
            lower.target()
        )));
    }
    let mut out = HeisMorphism::zero(lower.source().clone(), upper.target().clone());
    for (d, c) in upper.terms() {
        let w = word_from_normal(&d);
        out = out.add(&apply_word(lower.scale(c), &w.layers)?)?;
    }
    Ok(out)
}

/// A layered realization: bubbles, then caps, then a permutation of through strands, then cups.
pub fn word_from_normal(d: &NormalHeisDiagram) -> DiagramWord {
    let mut layers = Vec::new();
    for _ in 0..d.bubbles {
        layers.push(HeisLayer::new(LayerKind::CupUD, 0));
        layers.push(HeisLayer::new(LayerKind::CapUD, 0));
    }
    // phase 1: close bottom arcs, innermost first, by walking the right leg left
    let mut cur: Vec<(usize, Orientation)> = d.source.0.iter().copied().enumerate().collect();
    let mut bb: Vec<(usize, usize)> = d
        .pairs
        .iter()
        .filter_map(|&(x, y)| match (x, y) {
            (End::B(p), End::B(q)) => Some((p.min(q), p.max(q))),
            _ => None,
        })
        .collect();
    bb.sort_by_key(|&(p, q)| (q - p, p));
    for (p, q) in bb {
        let pp = cur.iter().position(|s| s.0 == p).unwrap();
        let mut qq = cur.iter().position(|s| s.0 == q).unwrap();
        while qq > pp + 1 {
            layers.push(HeisLayer::new(LayerKind::crossing(cur[qq - 1].1, cur[qq].1), qq - 1));
            cur.swap(qq - 1, qq);
            qq -= 1;
        }
        let kind = if cur[pp].1 == Up { LayerKind::CapUD } else { LayerKind::CapDU };
        layers.push(HeisLayer::new(kind, pp));
        cur.drain(pp..pp + 2);
    }
    // phase 3 computed upside down: close top arcs the same way, then reverse
    let mut top: Vec<(usize, Orientation)> = d.target.0.iter().copied().enumerate().collect();
    let mut tt: Vec<(usize, usize)> = d
        .pairs
        .iter()
        .filter_map(|&(x, y)| match (x, y) {
            (End::T(p), End::T(q)) => Some((p.min(q), p.max(q))),
            _ => None,
        })
        .collect();
    tt.sort_by_key(|&(p, q)| (q - p, p));
    let mut upper = Vec::new();
    for (p, q) in tt {
        let pp = top.iter().position(|s| s.0 == p).unwrap();
        let mut qq = top.iter().position(|s| s.0 == q).unwrap();
        while qq > pp + 1 {
            // forward direction: crossing from the swapped object to this one
            upper.push(HeisLayer::new(LayerKind::crossing(top[qq].1, top[qq - 1].1), qq - 1));
            top.swap(qq - 1, qq);
            qq -= 1;
        }
        let kind = if top[pp].1 == Up { LayerKind::CupUD } else { LayerKind::CupDU };
        upper.push(HeisLayer::new(kind, pp));
        top.drain(pp..pp + 2);
    }
    upper.reverse();
    // phase 2: sort through strands from bottom order into top order
    let rank: Vec<usize> = cur
        .iter()
        .map(|s| {
            let t = match d.partner(End::B(s.0)) {
                End::T(t) => t,
                End::B(_) => unreachable!(),
            };
            top.iter().position(|x| x.0 == t).unwrap()
        })
        .collect();
    let mut order: Vec<(usize, Orientation)> = rank.iter().zip(&cur).map(|(&r, s)| (r, s.1)).collect();
    while let Some(j) = (0..order.len().saturating_sub(1)).find(|&j| order[j].0 > order[j + 1].0) {
        layers.push(HeisLayer::new(LayerKind::crossing(order[j].1, order[j + 1].1), j));
        order.swap(j, j + 1);
    }
    layers.extend(upper);
    DiagramWord { source: d.source.clone(), layers }
}
