use std::fmt;

use crate::error::{Error, Result};

/// A vertex of a partition diagram. Indices count from the left, starting at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Bottom(usize),
    Top(usize),
}

/// A set partition of `bottom` lower vertices and `top` upper vertices, stored canonically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    bottom: usize,
    top: usize,
    blocks: Vec<Vec<Vertex>>,
}

impl PartitionDiagram {
    pub fn new(bottom: usize, top: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut seen_b = vec![false; bottom];
        let mut seen_t = vec![false; top];
        for v in blocks.iter().flatten() {
            let slot = match *v {
                Vertex::Bottom(i) if i < bottom => &mut seen_b[i],
                Vertex::Top(i) if i < top => &mut seen_t[i],
                _ => return Err(Error::Arity(format!("vertex {v:?} out of range"))),
            };
            if *slot {
                return Err(Error::Arity(format!("vertex {v:?} repeated")));
            }
            *slot = true;
        }
        if blocks.iter().any(|b| b.is_empty()) || seen_b.contains(&false) || seen_t.contains(&false) {
            return Err(Error::Arity("blocks do not cover every vertex exactly once".into()));
        }
        Ok(Self::canonical(bottom, top, blocks))
    }

    fn canonical(bottom: usize, top: usize, mut blocks: Vec<Vec<Vertex>>) -> Self {
        for b in &mut blocks {
            b.sort();
        }
        blocks.sort();
        Self { bottom, top, blocks }
    }

    /// Builds a diagram from a block label per vertex: bottom labels first, then top labels.
    pub fn from_labels(bottom: usize, top: usize, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), bottom + top);
        let n = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); n];
        for (i, &l) in labels.iter().enumerate() {
            let v = if i < bottom { Vertex::Bottom(i) } else { Vertex::Top(i - bottom) };
            blocks[l].push(v);
        }
        blocks.retain(|b| !b.is_empty());
        Self::canonical(bottom, top, blocks)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of every vertex, bottom vertices first.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.bottom + self.top];
        for (b, block) in self.blocks.iter().enumerate() {
            for v in block {
                match *v {
                    Vertex::Bottom(i) => out[i] = b,
                    Vertex::Top(i) => out[self.bottom + i] = b,
                }
            }
        }
        out
    }

    pub fn identity(k: usize) -> Self {
        Self::permutation(&(0..k).collect::<Vec<_>>())
    }

    /// Blocks `{p, perm[p]'}`: the strand at bottom position `p` ends at top position `perm[p]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let k = perm.len();
        let blocks = perm.iter().enumerate().map(|(p, &q)| vec![Vertex::Bottom(p), Vertex::Top(q)]).collect();
        Self::new(k, k, blocks).expect("not a permutation")
    }

    /// The permutation of a diagram all of whose blocks are bottom-top pairs.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.bottom != self.top {
            return None;
        }
        let mut perm = vec![0; self.bottom];
        for b in &self.blocks {
            match b.as_slice() {
                [Vertex::Bottom(p), Vertex::Top(q)] => perm[*p] = *q,
                _ => return None,
            }
        }
        Some(perm)
    }

    /// Stacks `self` on top of `lower`. Returns the number of closed middle components and the result.
    pub fn stack(&self, lower: &Self) -> Result<(u32, Self)> {
        if self.bottom != lower.top {
            return Err(Error::Arity(format!("cannot stack {}->{} on {}->{}", self.bottom, self.top, lower.bottom, lower.top)));
        }
        // rows: lower bottom, middle, upper top
        let (m, mid, l) = (lower.bottom, self.bottom, self.top);
        let mut uf = UnionFind::new(m + mid + l);
        let idx_lower = |v: &Vertex| match *v {
            Vertex::Bottom(i) => i,
            Vertex::Top(i) => m + i,
        };
        let idx_upper = |v: &Vertex| match *v {
            Vertex::Bottom(i) => m + i,
            Vertex::Top(i) => m + mid + i,
        };
        for b in &lower.blocks {
            for w in b.windows(2) {
                uf.union(idx_lower(&w[0]), idx_lower(&w[1]));
            }
        }
        for b in &self.blocks {
            for w in b.windows(2) {
                uf.union(idx_upper(&w[0]), idx_upper(&w[1]));
            }
        }
        let mut outer = vec![false; m + mid + l];
        for i in (0..m).chain(m + mid..m + mid + l) {
            outer[uf.find(i)] = true;
        }
        let alpha = (m..m + mid).filter(|&i| uf.find(i) == i && !outer[i]).count() as u32;
        let mut labels: Vec<usize> = (0..m).chain(m + mid..m + mid + l).map(|i| uf.find(i)).collect();
        compress(&mut labels);
        Ok((alpha, Self::from_labels(m, l, &labels)))
    }

    /// Juxtaposition with `self` on the left.
    pub fn juxtapose(&self, right: &Self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.extend(right.blocks.iter().map(|b| {
            b.iter()
                .map(|v| match *v {
                    Vertex::Bottom(i) => Vertex::Bottom(i + self.bottom),
                    Vertex::Top(i) => Vertex::Top(i + self.top),
                })
                .collect()
        }));
        Self::canonical(self.bottom + right.bottom, self.top + right.top, blocks)
    }

    /// Every diagram `bottom -> top`, one per set partition.
    pub fn all(bottom: usize, top: usize) -> Vec<Self> {
        set_partitions(bottom + top).into_iter().map(|l| Self::from_labels(bottom, top, &l)).collect()
    }
}

/// Restricted growth strings of length `n`.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = if cur.is_empty() { 0 } else { max + 1 };
        for l in 0..=next {
            cur.push(l);
            go(cur, max.max(l), n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

fn compress(labels: &mut [usize]) {
    let mut map = std::collections::HashMap::new();
    for l in labels.iter_mut() {
        let next = map.len();
        *l = *map.entry(*l).or_insert(next);
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, i: usize) -> usize {
        let p = self.0[i];
        if p == i {
            return i;
        }
        let r = self.find(p);
        self.0[i] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl fmt::Debug for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::Vertex::{Bottom as B, Top as T};
    use super::*;

    pub(crate) fn worked_pair() -> (PartitionDiagram, PartitionDiagram) {
        let lower = PartitionDiagram::new(
            5,
            7,
            vec![
                vec![B(1), T(0), T(3)],
                vec![B(0), B(4)],
                vec![B(2), T(6)],
                vec![T(4), T(5)],
                vec![B(3)],
                vec![T(1)],
                vec![T(2)],
            ],
        )
        .unwrap();
        let upper = PartitionDiagram::new(
            7,
            5,
            vec![
                vec![B(0), T(0)],
                vec![T(1), T(3)],
                vec![B(1), B(3)],
                vec![B(6), T(2), T(4)],
                vec![B(2)],
                vec![B(4)],
                vec![B(5)],
            ],
        )
        .unwrap();
        (upper, lower)
    }

    #[test]
    fn worked_example_composition() {
        let (upper, lower) = worked_pair();
        assert_eq!(lower.block_count(), 7);
        let (alpha, d) = upper.stack(&lower).unwrap();
        let expected = PartitionDiagram::new(
            5,
            5,
            vec![vec![B(0), B(4)], vec![B(1), T(0)], vec![T(1), T(3)], vec![B(2), T(2), T(4)], vec![B(3)]],
        )
        .unwrap();
        assert_eq!(alpha, 2);
        assert_eq!(d, expected);
    }

    #[test]
    fn bell_counts() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let all = PartitionDiagram::all(n / 2, n - n / 2);
            assert_eq!(all.len(), b);
            let set: std::collections::HashSet<_> = all.into_iter().collect();
            assert_eq!(set.len(), b);
        }
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(PartitionDiagram::new(1, 1, vec![vec![B(0)]]).is_err());
        assert!(PartitionDiagram::new(1, 0, vec![vec![B(0)], vec![B(0)]]).is_err());
    }
}
