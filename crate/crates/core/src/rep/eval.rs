//! Matrices of Heisenberg diagrams acting on the chain spaces of `S_n`.

use super::chain::{apply_layer, ChainSpace};
use super::matrix::RepMatrix;
use crate::error::Result;
use crate::heis::{word_from_normal, DiagramWord, HeisLayer, HeisMorphism, HeisObject};

/// Matrix of one layer; columns index the source basis, rows the target basis.
pub fn layer_matrix(n: usize, source: &HeisObject, layer: &HeisLayer) -> Result<RepMatrix> {
    let target = layer.apply_to_object(source)?;
    let layers = layer.expand();
    if layers.len() > 1 {
        return word_matrix(n, &DiagramWord::new(source.clone(), layers)?);
    }
    let src = ChainSpace::new(n, source);
    let tgt = ChainSpace::new(n, &target);
    let mut m = RepMatrix::zeros(tgt.dim(), src.dim());
    for b in src.basis() {
        let col = src.index(&b);
        for (img, c) in apply_layer(&src, &tgt, layer, &b) {
            m.add_at(tgt.index(&img), col, c);
        }
    }
    Ok(m)
}

/// Product of the layer matrices, bottom layer applied first.
pub fn word_matrix(n: usize, word: &DiagramWord) -> Result<RepMatrix> {
    let objs = word.objects()?;
    let dim = ChainSpace::new(n, &word.source).dim();
    let mut acc = RepMatrix::identity(dim);
    for (l, obj) in word.layers.iter().zip(&objs) {
        acc = layer_matrix(n, obj, l)?.mul(&acc)?;
    }
    Ok(acc)
}

/// Matrix of a morphism in the normal basis, each basis diagram evaluated through a word realizing it.
pub fn eval_heis(n: usize, f: &HeisMorphism) -> Result<RepMatrix> {
    let rows = ChainSpace::new(n, f.target()).dim();
    let cols = ChainSpace::new(n, f.source()).dim();
    let mut acc = RepMatrix::zeros(rows, cols);
    for (d, c) in f.terms() {
        let m = word_matrix(n, &word_from_normal(&d))?;
        acc = acc.add(&m.scale(c))?;
    }
    Ok(acc)
}

/// Dimension of the space attached to an object over `S_n`.
pub fn chain_dim(n: usize, object: &HeisObject) -> usize {
    ChainSpace::new(n, object).dim()
}
