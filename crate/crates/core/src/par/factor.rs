//! Factorization into permutation, tensor-planar diagram, permutation, and generator words.

use super::diagram::{PartitionDiagram, Vertex};
use super::morphism::{Generator, ParMorphism};
use crate::error::Result;

/// `1_left ⊗ gen ⊗ 1_rest`, where the padding on the right is implied by the current object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layer {
    pub left: usize,
    pub gen: Generator,
}

/// `D = top ∘ planar ∘ bottom`, the permutations given as reduced words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub perm_top: Vec<usize>,
    pub planar: PartitionDiagram,
    pub perm_bottom: Vec<usize>,
    /// Single-block factors of `planar`, left to right, as (bottom legs, top legs).
    pub shape: Vec<(usize, usize)>,
}

/// Lexicographically smallest word `[i1, ..., ir]` with `perm = s_i1 ∘ ... ∘ s_ir`.
/// `s_i` swaps positions `i` and `i + 1`.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (p, &q) in perm.iter().enumerate() {
        inv[q] = p;
    }
    let mut word = Vec::new();
    // inv[q] is the bottom position of the strand ending at top q
    while let Some(i) = (0..inv.len().saturating_sub(1)).find(|&i| inv[i] > inv[i + 1]) {
        word.push(i);
        inv.swap(i, i + 1);
    }
    word
}

pub fn word_to_perm(k: usize, word: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..k).collect();
    for &i in word.iter().rev() {
        for q in perm.iter_mut() {
            if *q == i {
                *q = i + 1;
            } else if *q == i + 1 {
                *q = i;
            }
        }
    }
    perm
}

pub fn factorize(d: &PartitionDiagram) -> Factorization {
    // canonical block order is by minimal vertex, which is what `blocks()` already gives
    let mut bottom_to = vec![0; d.bottom()];
    let mut top_from = vec![0; d.top()];
    let (mut nb, mut nt) = (0, 0);
    let mut shape = Vec::new();
    let mut planar_blocks = Vec::new();
    for block in d.blocks() {
        let mut pb = Vec::new();
        let (mut a, mut b) = (0, 0);
        for v in block {
            match *v {
                Vertex::Bottom(i) => {
                    bottom_to[i] = nb + a;
                    pb.push(Vertex::Bottom(nb + a));
                    a += 1;
                }
                Vertex::Top(i) => {
                    top_from[nt + b] = i;
                    pb.push(Vertex::Top(nt + b));
                    b += 1;
                }
            }
        }
        nb += a;
        nt += b;
        shape.push((a, b));
        planar_blocks.push(pb);
    }
    let planar = PartitionDiagram::new(d.bottom(), d.top(), planar_blocks).unwrap();
    Factorization { perm_top: reduced_word(&top_from), planar, perm_bottom: reduced_word(&bottom_to), shape }
}

impl Factorization {
    pub fn recompose(&self) -> Result<ParMorphism> {
        let (k, l) = (self.planar.bottom(), self.planar.top());
        let top = ParMorphism::permutation(&word_to_perm(l, &self.perm_top));
        let bottom = ParMorphism::permutation(&word_to_perm(k, &self.perm_bottom));
        top.compose(&ParMorphism::from_diagram(self.planar.clone()))?.compose(&bottom)
    }
}

fn block_word(a: usize, b: usize, offset: usize, out: &mut Vec<Layer>) {
    let at = |gen| Layer { left: offset, gen };
    if a == 0 {
        out.push(at(Generator::Eta));
    }
    for _ in 1..a {
        out.push(at(Generator::Mu));
    }
    if b == 0 {
        out.push(at(Generator::Eps));
    }
    for _ in 1..b {
        out.push(at(Generator::Delta));
    }
}

/// Layers listed bottom to top.
pub fn generator_word(d: &PartitionDiagram) -> Vec<Layer> {
    let f = factorize(d);
    let swap = |i| Layer { left: i, gen: Generator::Swap };
    let mut out: Vec<Layer> = f.perm_bottom.iter().rev().map(|&i| swap(i)).collect();
    let mut done_top = 0;
    for &(a, b) in &f.shape {
        block_word(a, b, done_top, &mut out);
        done_top += b;
    }
    out.extend(f.perm_top.iter().rev().map(|&i| swap(i)));
    out
}

/// The morphism of a single layer on an object of size `width`.
pub fn layer_morphism(layer: &Layer, width: usize) -> Result<ParMorphism> {
    let (a, _) = layer.gen.arity();
    if layer.left + a > width {
        return Err(crate::error::Error::Arity(format!("layer {layer:?} does not fit on {width} strands")));
    }
    let right = width - layer.left - a;
    Ok(ParMorphism::identity(layer.left).tensor(&ParMorphism::generator(layer.gen)).tensor(&ParMorphism::identity(right)))
}

pub fn compose_word(source: usize, word: &[Layer]) -> Result<ParMorphism> {
    let mut acc = ParMorphism::identity(source);
    for layer in word {
        acc = layer_morphism(layer, acc.target())?.compose(&acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::Vertex::{Bottom as B, Top as T};
    use super::*;

    fn appendix_example() -> PartitionDiagram {
        PartitionDiagram::new(4, 5, vec![vec![T(0), T(2)], vec![T(1), T(3), B(3)], vec![B(0), B(1), T(4)], vec![B(2)]]).unwrap()
    }

    #[test]
    fn appendix_factorization() {
        let d = appendix_example();
        assert_eq!(d.block_count(), 4);
        let f = factorize(&d);
        assert_eq!(f.recompose().unwrap(), ParMorphism::from_diagram(d.clone()));
        let mut shape = f.shape.clone();
        shape.sort();
        assert_eq!(shape, vec![(0, 2), (1, 0), (1, 2), (2, 1)]);
        assert_eq!(f.planar.block_count(), 4);
    }

    #[test]
    fn xi_word_is_mu_then_delta() {
        let xi = PartitionDiagram::new(2, 2, vec![vec![B(0), B(1), T(0), T(1)]]).unwrap();
        let w = generator_word(&xi);
        let gens: Vec<_> = w.iter().map(|l| l.gen).collect();
        assert_eq!(gens, vec![Generator::Mu, Generator::Delta]);
        let s = generator_word(&Generator::Swap.diagram());
        assert_eq!(s, vec![Layer { left: 0, gen: Generator::Swap }]);
    }

    #[test]
    fn identity_factorization() {
        let f = factorize(&PartitionDiagram::identity(3));
        assert!(f.perm_top.is_empty() && f.perm_bottom.is_empty());
        assert_eq!(f.planar, PartitionDiagram::identity(3));
    }

    #[test]
    fn reduced_words_are_reduced_and_smallest() {
        use itertools::Itertools;
        for perm in (0..4).permutations(4) {
            let w = reduced_word(&perm);
            let inversions = (0..4).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
            assert_eq!(w.len(), inversions);
            assert_eq!(word_to_perm(4, &w), perm);
        }
        // longest element of S3: s0 s1 s0 is smaller than s1 s0 s1
        assert_eq!(reduced_word(&[2, 1, 0]), vec![0, 1, 0]);
    }

    #[test]
    fn words_round_trip_exhaustively() {
        for n in 0..=6 {
            for k in 0..=n {
                for d in PartitionDiagram::all(k, n - k) {
                    assert_eq!(compose_word(k, &generator_word(&d)).unwrap(), ParMorphism::from_diagram(d.clone()));
                    if n <= 5 {
                        assert_eq!(factorize(&d).recompose().unwrap(), ParMorphism::from_diagram(d));
                    }
                }
            }
        }
    }
}
