//! Induction and restriction chains of symmetric group modules.
//!
//! The module attached to an object is read right to left from the trivial module
//! of `S_n`: an upward point induces one step up, a downward point restricts one
//! step down. An element is a tensor of group elements, one per point; a basis
//! vector keeps a coset representative `g_i` at each upward point and the identity
//! at each downward point.

use std::collections::BTreeMap;

use crate::heis::{HeisLayer, HeisObject, LayerKind, Orientation};

/// A permutation of `0..len`, acting on points; `p[x]` is the image of `x`.
pub type Perm = Vec<usize>;

pub fn identity(len: usize) -> Perm {
    (0..len).collect()
}

/// `(a ∘ b)(x) = a(b(x))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// The simple transposition of the points `j - 1` and `j`, that is `s_j` with 1-based labels.
pub fn simple(len: usize, j: usize) -> Perm {
    let mut p = identity(len);
    p.swap(j - 1, j);
    p
}

/// `g_i = s_i s_{i+1} ⋯ s_{m-1}` in `S_m`, with `i` 1-based; it sends `m` to `i`.
pub fn coset_rep(len: usize, m: usize, i: usize) -> Perm {
    (i..m).fold(identity(len), |p, j| compose(&p, &simple(len, j)))
}

/// Group sizes around each point of an object over `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSpace {
    pub n: usize,
    pub object: HeisObject,
    /// `sizes[j]` is the group size at the gap left of point `j`; `sizes[len]` is `n`.
    pub sizes: Vec<usize>,
    /// Whether some restriction falls below `S_0`, making the space zero.
    pub vanishes: bool,
}

/// Coset indices, 1-based, one per upward point (0 at downward points).
pub type ChainBasis = Vec<usize>;

impl ChainSpace {
    pub fn new(n: usize, object: &HeisObject) -> Self {
        let r = object.len();
        let mut sizes = vec![0; r + 1];
        sizes[r] = n;
        let mut vanishes = false;
        for j in (0..r).rev() {
            let s = sizes[j + 1];
            sizes[j] = match object.0[j] {
                Orientation::Up => s + 1,
                Orientation::Down if s == 0 => {
                    vanishes = true;
                    0
                }
                Orientation::Down => s - 1,
            };
        }
        Self { n, object: object.clone(), sizes, vanishes }
    }

    /// Largest group size met along the chain.
    pub fn width(&self) -> usize {
        self.sizes.iter().copied().max().unwrap_or(0).max(1)
    }

    pub fn radices(&self) -> Vec<usize> {
        self.object.0.iter().enumerate().map(|(j, o)| if *o == Orientation::Up { self.sizes[j] } else { 1 }).collect()
    }

    pub fn dim(&self) -> usize {
        if self.vanishes {
            0
        } else {
            self.radices().iter().product()
        }
    }

    pub fn basis(&self) -> Vec<ChainBasis> {
        if self.vanishes {
            return Vec::new();
        }
        let radices = self.radices();
        let ups: Vec<bool> = self.object.0.iter().map(|o| *o == Orientation::Up).collect();
        let mut out = vec![Vec::new()];
        for (j, &r) in radices.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|v: Vec<usize>| {
                    let range: Vec<usize> = if ups[j] { (1..=r).collect() } else { vec![0] };
                    range.into_iter().map(move |i| {
                        let mut w = v.clone();
                        w.push(i);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn index(&self, b: &ChainBasis) -> usize {
        let mut idx = 0;
        for (j, &r) in self.radices().iter().enumerate() {
            idx = idx * r + if r > 1 || self.object.0[j] == Orientation::Up { b[j] - 1 } else { 0 };
        }
        idx
    }

    /// The group elements of a basis vector.
    pub fn factors(&self, b: &ChainBasis, len: usize) -> Vec<Perm> {
        self.object
            .0
            .iter()
            .enumerate()
            .map(|(j, o)| match o {
                Orientation::Up => coset_rep(len, self.sizes[j], b[j]),
                Orientation::Down => identity(len),
            })
            .collect()
    }

    /// Rewrites a tensor of group elements in the basis by pushing stabilizer parts rightwards.
    pub fn reduce(&self, factors: &[Perm]) -> ChainBasis {
        let len = factors.first().map_or(0, |f| f.len());
        let mut carry = identity(len);
        let mut out = Vec::with_capacity(factors.len());
        for (j, f) in factors.iter().enumerate() {
            let g = compose(&carry, f);
            match self.object.0[j] {
                Orientation::Up => {
                    let m = self.sizes[j];
                    let i = g[m - 1] + 1;
                    carry = compose(&inverse(&coset_rep(len, m, i)), &g);
                    debug_assert_eq!(carry[m - 1], m - 1);
                    out.push(i);
                }
                Orientation::Down => {
                    carry = g;
                    out.push(0);
                }
            }
        }
        out
    }
}

/// Image of one basis vector under a generator layer, as a combination in the target space.
pub fn apply_layer(src: &ChainSpace, tgt: &ChainSpace, layer: &HeisLayer, b: &ChainBasis) -> BTreeMap<ChainBasis, i64> {
    let mut out = BTreeMap::new();
    if tgt.vanishes {
        return out;
    }
    let len = src.width().max(tgt.width()) + 1;
    let f = src.factors(b, len);
    let p = layer.pos;
    let mut results: Vec<Vec<Perm>> = Vec::new();
    match layer.kind {
        LayerKind::X => {
            let n = src.sizes[p];
            let g = compose(&compose(&f[p], &f[p + 1]), &simple(len, n - 1));
            let mut v = f.clone();
            v[p] = g;
            v[p + 1] = identity(len);
            results.push(v);
        }
        LayerKind::CupDU => {
            let mut v = f.clone();
            v.splice(p..p, [identity(len), identity(len)]);
            results.push(v);
        }
        LayerKind::CupUD => {
            let n = src.sizes[p];
            for i in 1..=n {
                let gi = coset_rep(len, n, i);
                let mut v = f.clone();
                v.splice(p..p, [gi.clone(), inverse(&gi)]);
                results.push(v);
            }
        }
        LayerKind::CapUD | LayerKind::CapDU => {
            let g = compose(&f[p], &f[p + 1]);
            let outer = src.sizes[p];
            if layer.kind == LayerKind::CapDU && g[outer] != outer {
                return out;
            }
            let mut v = f.clone();
            v.drain(p..p + 2);
            if p < v.len() {
                v[p] = compose(&g, &v[p]);
            }
            results.push(v);
        }
        _ => panic!("mixed crossings must be expanded before evaluation"),
    }
    for v in results {
        *out.entry(tgt.reduce(&v)).or_insert(0) += 1;
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_reps_send_top_point() {
        for m in 1..6 {
            for i in 1..=m {
                let g = coset_rep(8, m, i);
                assert_eq!(g[m - 1], i - 1);
                assert!((m..8).all(|x| g[x] == x));
            }
        }
    }

    #[test]
    fn dimensions() {
        let alt = |k| HeisObject::alternating(k);
        assert_eq!(ChainSpace::new(3, &alt(2)).dim(), 9);
        assert_eq!(ChainSpace::new(0, &HeisObject::parse("v").unwrap()).dim(), 0);
        assert_eq!(ChainSpace::new(2, &HeisObject::parse("^^").unwrap()).dim(), 12);
        let s = ChainSpace::new(3, &HeisObject::parse("^v^v").unwrap());
        for b in s.basis() {
            assert_eq!(s.reduce(&s.factors(&b, 5)), b);
        }
    }
}
