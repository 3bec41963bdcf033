//! Text forms: `{pairs: [[B1,T1],...], bubbles: b}` with 1-based endpoints counted from the left,
//! morphisms as a `source->target` header followed by `coeff * diagram` lines, and words as
//! `source: layer layer ...` with layers listed bottom to top.

use std::fmt;

use super::morphism::{End, HeisMorphism, NormalHeisDiagram};
use super::object::HeisObject;
use super::word::{DiagramWord, HeisLayer, LayerKind};
use crate::error::{Error, Result};

fn end_text(e: End) -> String {
    match e {
        End::B(q) => format!("B{}", q + 1),
        End::T(p) => format!("T{}", p + 1),
    }
}

fn parse_end(s: &str) -> Result<End> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad endpoint `{s}`"));
    let (tag, num) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
    let i: usize = num.parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(bad());
    }
    match tag {
        "B" => Ok(End::B(i - 1)),
        "T" => Ok(End::T(i - 1)),
        _ => Err(bad()),
    }
}

impl fmt::Display for NormalHeisDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs.iter().map(|&(x, y)| format!("[{},{}]", end_text(x), end_text(y))).collect();
        write!(f, "{{pairs: [{}], bubbles: {}}}", pairs.join(","), self.bubbles)
    }
}

pub fn parse_normal_diagram(source: &HeisObject, target: &HeisObject, s: &str) -> Result<NormalHeisDiagram> {
    let s = s.trim();
    let inner =
        s.strip_prefix('{').and_then(|x| x.strip_suffix('}')).ok_or_else(|| Error::Parse(format!("expected braces in `{s}`")))?;
    let after_pairs = inner.trim().strip_prefix("pairs:").ok_or_else(|| Error::Parse("expected `pairs:`".into()))?.trim_start();
    let close = after_pairs.find("]]").map(|i| i + 2).or_else(|| after_pairs.find("[]").map(|i| i + 2));
    let close = close.ok_or_else(|| Error::Parse("unterminated pair list".into()))?;
    let list = &after_pairs[..close];
    let rest = after_pairs[close..].trim_start().trim_start_matches(',').trim();
    let bubbles: u32 = rest
        .strip_prefix("bubbles:")
        .ok_or_else(|| Error::Parse("expected `bubbles:`".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse("bad bubble count".into()))?;
    let body =
        list.trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(|| Error::Parse("bad pair list".into()))?;
    let mut pairs = Vec::new();
    for chunk in body.split(']').map(str::trim).filter(|c| !c.is_empty()) {
        let chunk = chunk.trim_start_matches(',').trim().trim_start_matches('[');
        let (a, b) = chunk.split_once(',').ok_or_else(|| Error::Parse(format!("bad pair `{chunk}`")))?;
        pairs.push((parse_end(a)?, parse_end(b)?));
    }
    NormalHeisDiagram::new(source.clone(), target.clone(), pairs, bubbles)
}

impl fmt::Display for HeisMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source(), self.target())?;
        for (d, c) in self.terms() {
            write!(f, "\n{c} * {d}")?;
        }
        Ok(())
    }
}

pub fn parse_heis_morphism(s: &str) -> Result<HeisMorphism> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty morphism".into()))?;
    let (a, b) = header.split_once("->").ok_or_else(|| Error::Parse(format!("bad header `{header}`")))?;
    let (source, target) = (HeisObject::parse(a)?, HeisObject::parse(b)?);
    let mut terms = Vec::new();
    for line in lines {
        let (c, d) = match line.split_once('*') {
            Some((c, d)) => (c.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad coefficient in `{line}`")))?, d),
            None => (1, line),
        };
        terms.push((parse_normal_diagram(&source, &target, d)?, c));
    }
    HeisMorphism::from_terms(source, target, terms)
}

/// `source: layer@pos ...`; a bare `X` takes the crossing that fits the current object.
pub fn parse_word(s: &str) -> Result<DiagramWord> {
    let (src, rest) = s.split_once(':').ok_or_else(|| Error::Parse("expected `source: layers`".into()))?;
    let source = HeisObject::parse(src)?;
    let mut cur = source.clone();
    let mut layers = Vec::new();
    for tok in rest.split_whitespace() {
        let (name, pos) = tok.split_once('@').ok_or_else(|| Error::Parse(format!("bad layer `{tok}`")))?;
        let pos: usize = pos.parse().map_err(|_| Error::Parse(format!("bad position in `{tok}`")))?;
        let mut kind = LayerKind::from_name(name).ok_or_else(|| Error::Parse(format!("unknown layer `{name}`")))?;
        if kind == LayerKind::X && pos + 1 < cur.len() {
            kind = LayerKind::crossing(cur.0[pos], cur.0[pos + 1]);
        }
        let layer = HeisLayer::new(kind, pos);
        cur = layer.apply_to_object(&cur)?;
        layers.push(layer);
    }
    DiagramWord::new(source, layers)
}
