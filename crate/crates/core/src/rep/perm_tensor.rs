//! The permutation module `V = k^n` and its tensor powers, with the comparison maps `β_k`.

use super::chain::{compose, coset_rep, identity, inverse, ChainSpace, Perm};
use super::matrix::{rank, RepMatrix};
use crate::heis::HeisObject;
use crate::par::{ParMorphism, PartitionDiagram, Vertex};

/// Tuples `(i_k, …, i_1)` written left to right, values `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PermTensorSpace {
    pub n: usize,
    pub k: usize,
}

impl PermTensorSpace {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.n + 1;
            idx /= self.n;
        }
        t
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.n + i - 1)
    }

    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.dim()).map(|i| self.tuple(i))
    }
}

/// Whether every block of `d` is constant on the values assigned to its vertices.
fn compatible(d: &PartitionDiagram, src: &[usize], tgt: &[usize]) -> bool {
    d.blocks().iter().all(|b| {
        let val = |v: &Vertex| match *v {
            Vertex::Bottom(q) => src[q],
            Vertex::Top(p) => tgt[p],
        };
        b.iter().all(|v| val(v) == val(&b[0]))
    })
}

pub fn phi_diagram(n: usize, d: &PartitionDiagram) -> RepMatrix {
    let src = PermTensorSpace::new(n, d.bottom());
    let tgt = PermTensorSpace::new(n, d.top());
    let mut m = RepMatrix::zeros(tgt.dim(), src.dim());
    for (c, s) in src.tuples().enumerate() {
        for (r, t) in tgt.tuples().enumerate() {
            if compatible(d, &s, &t) {
                m.set(r, c, 1);
            }
        }
    }
    m
}

/// The action on `V^{⊗k} → V^{⊗ℓ}` with `t = n`.
pub fn phi(n: usize, f: &ParMorphism) -> RepMatrix {
    let src = PermTensorSpace::new(n, f.source());
    let tgt = PermTensorSpace::new(n, f.target());
    let mut m = RepMatrix::zeros(tgt.dim(), src.dim());
    for (d, c) in f.specialize(n as i64) {
        m = m.add(&phi_diagram(n, &d).scale(c)).expect("shapes agree");
    }
    m
}

/// `β_k: V^{⊗k} → ` the chain space of `(↑↓)^k`, sending `v_{i_k} ⊗ ⋯ ⊗ v_{i_1}` to `g_{i_k} ⊗ g_{i_k}^{-1} g_{i_{k-1}} ⊗ ⋯`.
pub fn beta(n: usize, k: usize) -> RepMatrix {
    let v = PermTensorSpace::new(n, k);
    let chain = ChainSpace::new(n, &HeisObject::alternating(k));
    let len = n + 1;
    let mut m = RepMatrix::zeros(chain.dim(), v.dim());
    for (c, t) in v.tuples().enumerate() {
        let factors: Vec<Perm> = t
            .iter()
            .flat_map(|&i| {
                let g = coset_rep(len, n, i);
                [g.clone(), inverse(&g)]
            })
            .collect();
        m.set(chain.index(&chain.reduce(&factors)), c, 1);
    }
    m
}

/// The inverse map: the ↑ factors `π_k, π_{k-1}, …` of a basis vector give the tuple entries `(π_k ⋯ π_{k-j})(n)`.
pub fn beta_inv(n: usize, k: usize) -> RepMatrix {
    let v = PermTensorSpace::new(n, k);
    let chain = ChainSpace::new(n, &HeisObject::alternating(k));
    let len = n + 1;
    let mut m = RepMatrix::zeros(v.dim(), chain.dim());
    for b in chain.basis() {
        let factors = chain.factors(&b, len);
        let mut prod = identity(len);
        let mut tuple = Vec::with_capacity(k);
        for pair in factors.chunks(2) {
            prod = compose(&prod, &pair[0]);
            prod = compose(&prod, &pair[1]);
            tuple.push(prod[n - 1] + 1);
        }
        m.set(v.index(&tuple), chain.index(&b), 1);
    }
    m
}

/// Rank of the span of `{Φ_n(D)}` over all diagrams `k → ℓ`, and the number of diagrams.
pub fn bee_rank(n: usize, k: usize, l: usize) -> (usize, usize) {
    let diagrams = PartitionDiagram::all(k, l);
    let rows: Vec<Vec<i64>> = diagrams.iter().map(|d| phi_diagram(n, d).data).collect();
    (rank(&rows), diagrams.len())
}

fn permutation_action(n: usize, k: usize, sigma: &[usize]) -> Vec<usize> {
    let v = PermTensorSpace::new(n, k);
    v.tuples().map(|t| v.index(&t.iter().map(|&i| sigma[i - 1] + 1).collect::<Vec<_>>())).collect()
}

/// `dim Hom_{S_n}(V^{⊗k}, V^{⊗ℓ})` from the nullspace of the commutation equations with `s_1` and the `n`-cycle.
pub fn equivariant_dim(n: usize, k: usize, l: usize) -> usize {
    let (rows, cols) = (PermTensorSpace::new(n, l).dim(), PermTensorSpace::new(n, k).dim());
    let unknowns = rows * cols;
    if n < 2 {
        return unknowns;
    }
    let mut generators = vec![(1..n).chain([0]).collect::<Vec<_>>()];
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    generators.push(swap);
    let mut equations = Vec::new();
    for g in &generators {
        let (on_src, on_tgt) = (permutation_action(n, k, g), permutation_action(n, l, g));
        // M ρ_k(g) = ρ_ℓ(g) M, entrywise M[r, σ^{-1}c] = M[σ^{-1}r, c]
        let (src_inv, tgt_inv) = (inverse(&on_src), inverse(&on_tgt));
        for r in 0..rows {
            for c in 0..cols {
                let mut eq = vec![0i64; unknowns];
                eq[r * cols + src_inv[c]] += 1;
                eq[tgt_inv[r] * cols + c] -= 1;
                equations.push(eq);
            }
        }
    }
    unknowns - rank(&equations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::par::Generator;

    #[test]
    fn phi_of_product() {
        let m = phi(2, &ParMorphism::generator(Generator::Mu));
        assert_eq!((m.rows, m.cols), (2, 4));
        assert_eq!(m.data, vec![1, 0, 0, 0, 0, 0, 0, 1]);
        let bubble = ParMorphism::generator(Generator::Eps).compose(&ParMorphism::generator(Generator::Eta)).unwrap();
        assert_eq!(phi(3, &bubble).data, vec![3]);
    }

    #[test]
    fn beta_is_invertible() {
        for n in 1..5 {
            for k in 0..4 {
                let d = PermTensorSpace::new(n, k).dim();
                assert_eq!(&beta(n, k) * &beta_inv(n, k), RepMatrix::identity(d), "n={n} k={k}");
                assert_eq!(&beta_inv(n, k) * &beta(n, k), RepMatrix::identity(d));
            }
        }
        assert_eq!(beta(2, 1), RepMatrix::identity(2));
    }

    #[test]
    fn small_ranks_and_intertwiners() {
        assert_eq!(bee_rank(2, 1, 1), (2, 2));
        assert_eq!(bee_rank(3, 0, 0), (1, 1));
        let (r, b) = bee_rank(3, 2, 2);
        assert!(r < b && b == 15);
        assert_eq!(equivariant_dim(2, 1, 1), 2);
        assert_eq!(equivariant_dim(3, 0, 0), 1);
        assert_eq!(equivariant_dim(4, 1, 1), 2);
        assert_eq!(bee_rank(4, 1, 1).0, 2);
    }
}
