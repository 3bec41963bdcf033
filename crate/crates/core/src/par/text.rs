//! Text format. Vertices are labelled right to left as in the usual drawings:
//! bottom vertex `j` is `j`, top vertex `j` is `-j`, with `1` the rightmost.

use std::fmt;

use super::diagram::{PartitionDiagram, Vertex};
use super::morphism::ParMorphism;
use crate::error::{Error, Result};
use crate::poly::TPolynomial;

fn label(d: &PartitionDiagram, v: Vertex) -> i64 {
    match v {
        Vertex::Bottom(i) => (d.bottom() - i) as i64,
        Vertex::Top(i) => -((d.top() - i) as i64),
    }
}

fn sort_key(l: i64) -> (u8, i64) {
    if l > 0 {
        (0, l)
    } else {
        (1, -l)
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut blocks: Vec<Vec<i64>> = self
            .blocks()
            .iter()
            .map(|b| {
                let mut ls: Vec<i64> = b.iter().map(|&v| label(self, v)).collect();
                ls.sort_by_key(|&l| sort_key(l));
                ls
            })
            .collect();
        blocks.sort_by_key(|b| b.iter().map(|&l| sort_key(l)).collect::<Vec<_>>());
        let body: Vec<String> =
            blocks.iter().map(|b| format!("[{}]", b.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(","))).collect();
        write!(f, "[{}]", body.join(","))
    }
}

pub fn parse_arity(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.trim().split_once("->").ok_or_else(|| Error::Parse(format!("expected `m->l`, got `{s}`")))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad arity `{x}`")));
    Ok((p(a)?, p(b)?))
}

pub fn parse_diagram(bottom: usize, top: usize, s: &str) -> Result<PartitionDiagram> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("diagram must be a bracketed list: `{s}`")))?;
    let mut blocks = Vec::new();
    if !inner.is_empty() {
        let inner = inner
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad block list `{inner}`")))?;
        for part in inner.split("],[") {
            let mut block = Vec::new();
            for tok in part.split(',').filter(|t| !t.is_empty()) {
                let l: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad vertex `{tok}`")))?;
                let v = match l {
                    l if l > 0 && (l as usize) <= bottom => Vertex::Bottom(bottom - l as usize),
                    l if l < 0 && ((-l) as usize) <= top => Vertex::Top(top - (-l) as usize),
                    _ => return Err(Error::Parse(format!("vertex {l} out of range for {bottom}->{top}"))),
                };
                block.push(v);
            }
            blocks.push(block);
        }
    }
    PartitionDiagram::new(bottom, top, blocks).map_err(|e| Error::Parse(e.to_string()))
}

impl fmt::Display for ParMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source(), self.target())?;
        for (d, c) in self.terms() {
            write!(f, "\n{c} * {d}")?;
        }
        Ok(())
    }
}

/// Parses the output of `Display for ParMorphism`. A bare diagram line means coefficient 1.
pub fn parse_morphism(s: &str) -> Result<ParMorphism> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty morphism".into()))?;
    let (head, inline) = match header.find('[') {
        Some(i) => (&header[..i], Some(&header[i..])),
        None => (header, None),
    };
    let (m, l) = parse_arity(head)?;
    let mut f = ParMorphism::zero(m, l);
    for line in inline.into_iter().chain(lines) {
        let (c, d) = match line.split_once('*') {
            Some((c, d)) => (TPolynomial::parse(c)?, d),
            None => (TPolynomial::one(), line),
        };
        f.add_term(parse_diagram(m, l, d)?, &c);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn worked_example_text() {
        let d = parse_diagram(5, 7, "[[1,5],[2],[3,-1],[4,-4,-7],[-2,-3],[-5],[-6]]").unwrap();
        assert_eq!(d.block_count(), 7);
        assert_eq!(d.to_string(), "[[1,5],[2],[3,-1],[4,-4,-7],[-2,-3],[-5],[-6]]");
        assert_eq!(d.blocks()[0], vec![Vertex::Bottom(0), Vertex::Bottom(4)]);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_diagram(1, 1, "[[1]]").is_err());
        assert!(parse_diagram(1, 1, "[[2,-1]]").is_err());
        assert!(parse_morphism("").is_err());
    }

    proptest! {
        #[test]
        fn morphism_round_trip(k in 0usize..3, l in 0usize..3, picks in prop::collection::vec((0usize..1000, -3i64..4, 0u32..3), 0..4)) {
            let all = PartitionDiagram::all(k, l);
            let mut f = ParMorphism::zero(k, l);
            for (i, c, e) in picks {
                f.add_term(all[i % all.len()].clone(), &TPolynomial::monomial(c, e));
            }
            prop_assert_eq!(parse_morphism(&f.to_string()).unwrap(), f);
        }
    }
}
