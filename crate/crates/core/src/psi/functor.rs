//! The functor `Par(t) → Heis` sending `k` to `(↑↓)^k`, and its leading terms.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::heis::{
    apply_word, block_number, degree_part, filtration_degree, End, HeisLayer, HeisMorphism, HeisObject, LayerKind,
    NormalHeisDiagram,
};
use crate::par::{factorize, generator_word, Generator, Layer, ParMorphism, PartitionDiagram, Vertex};

/// Generic crossings that carry the first ↑↓ pair at `2a` past the second one.
pub fn x_layers(a: usize) -> Vec<HeisLayer> {
    let mut obj = HeisObject::alternating(a + 2);
    let mut out = Vec::new();
    for p in [2 * a + 1, 2 * a, 2 * a + 2, 2 * a + 1] {
        let l = HeisLayer::new(LayerKind::crossing(obj.0[p], obj.0[p + 1]), p);
        obj = l.apply_to_object(&obj).expect("crossing fits");
        out.push(l);
    }
    out
}

/// Cap then cup on the inner `↓↑` of the pairs at `2a` and `2a + 2`.
pub fn y_layers(a: usize) -> Vec<HeisLayer> {
    vec![HeisLayer::new(LayerKind::CapDU, 2 * a + 1), HeisLayer::new(LayerKind::CupDU, 2 * a + 1)]
}

/// Images of the five generators, each as a sum of words placed at the pair offset `a`.
pub fn generator_image(gen: Generator, a: usize) -> Vec<Vec<HeisLayer>> {
    let one = |k, p| vec![vec![HeisLayer::new(k, p)]];
    match gen {
        Generator::Eta => one(LayerKind::CupUD, 2 * a),
        Generator::Eps => one(LayerKind::CapUD, 2 * a),
        Generator::Mu => one(LayerKind::CapDU, 2 * a + 1),
        Generator::Delta => one(LayerKind::CupDU, 2 * a + 1),
        Generator::Swap => vec![x_layers(a), y_layers(a)],
    }
}

/// The five generator images on their own `(↑↓)`-objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorImageTable {
    pub mu: HeisMorphism,
    pub delta: HeisMorphism,
    pub swap: HeisMorphism,
    pub eta: HeisMorphism,
    pub eps: HeisMorphism,
}

impl GeneratorImageTable {
    pub fn new() -> Result<Self> {
        let img = |g: Generator| psi(&ParMorphism::generator(g));
        Ok(Self {
            mu: img(Generator::Mu)?,
            delta: img(Generator::Delta)?,
            swap: img(Generator::Swap)?,
            eta: img(Generator::Eta)?,
            eps: img(Generator::Eps)?,
        })
    }

    pub fn get(&self, gen: Generator) -> &HeisMorphism {
        match gen {
            Generator::Mu => &self.mu,
            Generator::Delta => &self.delta,
            Generator::Swap => &self.swap,
            Generator::Eta => &self.eta,
            Generator::Eps => &self.eps,
        }
    }
}

fn apply_par_layer(f: &HeisMorphism, layer: &Layer) -> Result<HeisMorphism> {
    let mut out: Option<HeisMorphism> = None;
    for word in generator_image(layer.gen, layer.left) {
        let g = apply_word(f.clone(), &word)?;
        out = Some(match out {
            None => g,
            Some(acc) => acc.add(&g)?,
        });
    }
    Ok(out.expect("every generator has an image"))
}

fn apply_par_word(mut f: HeisMorphism, word: &[Layer]) -> Result<HeisMorphism> {
    for layer in word {
        f = apply_par_layer(&f, layer)?;
    }
    Ok(f)
}

pub fn psi_diagram(d: &PartitionDiagram) -> Result<HeisMorphism> {
    apply_par_word(HeisMorphism::identity(&HeisObject::alternating(d.bottom())), &generator_word(d))
}

/// Powers of `t` become clockwise bubbles.
pub fn psi(f: &ParMorphism) -> Result<HeisMorphism> {
    let mut out = HeisMorphism::zero(HeisObject::alternating(f.source()), HeisObject::alternating(f.target()));
    for (d, poly) in f.terms() {
        let img = psi_diagram(d)?;
        for (j, c) in poly.terms() {
            out = out.add(&img.times_bubbles(j).scale(c))?;
        }
    }
    Ok(out)
}

/// `x_{i_1} ∘ ⋯ ∘ x_{i_r}` applied on top of `f`.
fn apply_t_word(mut f: HeisMorphism, word: &[usize]) -> Result<HeisMorphism> {
    for &i in word.iter().rev() {
        f = apply_word(f, &x_layers(i))?;
    }
    Ok(f)
}

/// `T(s_{i_1} ⋯ s_{i_r})` on `(↑↓)^k` for the word `[i_1, …, i_r]`.
pub fn t_of_word(k: usize, word: &[usize]) -> Result<HeisMorphism> {
    if let Some(&i) = word.iter().find(|&&i| i + 1 >= k) {
        return Err(Error::Arity(format!("s_{i} does not act on {k} points")));
    }
    apply_t_word(HeisMorphism::identity(&HeisObject::alternating(k)), word)
}

/// `T(τ)` for the permutation sending bottom `p` to top `perm[p]`, along the canonical reduced word.
pub fn t_of_perm(perm: &[usize]) -> Result<HeisMorphism> {
    t_of_word(perm.len(), &crate::par::reduced_word(perm))
}

/// `T(D₁) ∘ Ψ(D₂) ∘ T(D₃)` for the factorization `D = D₁ ∘ D₂ ∘ D₃`.
pub fn leading_term(d: &PartitionDiagram) -> Result<HeisMorphism> {
    let f = factorize(d);
    let lower = t_of_word(d.bottom(), &f.perm_bottom)?;
    let middle = apply_par_word(lower, &generator_word(&f.planar))?;
    apply_t_word(middle, &f.perm_top)
}

/// The partition diagram read off from the loops of a bubble-free diagram's closure.
pub fn reconstruct(d: &NormalHeisDiagram) -> Result<PartitionDiagram> {
    let k = d.source.alternating_pairs().ok_or_else(|| Error::Domain("source is not alternating".into()))?;
    let l = d.target.alternating_pairs().ok_or_else(|| Error::Domain("target is not alternating".into()))?;
    if d.bubbles > 0 {
        return Err(Error::Domain("closed bubbles have no vertices".into()));
    }
    let id = |e: End| match e {
        End::B(q) => q,
        End::T(p) => 2 * k + p,
    };
    let vertex = |v: usize| if v < 2 * k { Vertex::Bottom(v / 2) } else { Vertex::Top((v - 2 * k) / 2) };
    let total = 2 * (k + l);
    let mut partner = vec![0; total];
    for &(x, y) in &d.pairs {
        partner[id(x)] = id(y);
        partner[id(y)] = id(x);
    }
    let mut seen = vec![false; total];
    let mut blocks = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut block = BTreeSet::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            seen[partner[v]] = true;
            block.insert(vertex(v));
            block.insert(vertex(partner[v]));
            v = partner[v] ^ 1;
        }
        blocks.push(block.into_iter().collect());
    }
    PartitionDiagram::new(k, l, blocks)
}

/// Per-diagram outcome of the triangularity check.
#[derive(Clone, Debug)]
pub struct LeadingTermCheck {
    pub diagram: PartitionDiagram,
    pub block_count: usize,
    pub degree: usize,
    /// The unique top-degree term when it has coefficient 1.
    pub top: Option<NormalHeisDiagram>,
    pub agrees_with_leading_term: bool,
    pub reconstructs: bool,
}

impl LeadingTermCheck {
    pub fn new(d: &PartitionDiagram) -> Result<Self> {
        let image = psi_diagram(d)?;
        let degree = filtration_degree(&image)?;
        let top_part = degree_part(&image, degree)?;
        let top = match top_part.terms().as_slice() {
            [(t, 1)] => Some(t.clone()),
            _ => None,
        };
        let lt_top = degree_part(&leading_term(d)?, degree)?;
        let reconstructs = top.as_ref().is_some_and(|t| reconstruct(t).is_ok_and(|r| &r == d));
        Ok(Self {
            diagram: d.clone(),
            block_count: d.block_count(),
            degree,
            top,
            agrees_with_leading_term: lt_top == top_part,
            reconstructs,
        })
    }

    pub fn passes(&self) -> bool {
        self.degree == self.block_count && self.top.is_some() && self.agrees_with_leading_term && self.reconstructs
    }
}

/// Whether the images of all diagrams `k → ℓ` are triangular with distinct leading terms, hence independent.
pub fn check_faithful(k: usize, l: usize) -> Result<bool> {
    let mut tops = BTreeSet::new();
    for d in PartitionDiagram::all(k, l) {
        let c = LeadingTermCheck::new(&d)?;
        if !c.passes() || !tops.insert(c.top.expect("checked")) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Block numbers of all terms, for reporting.
pub fn term_block_numbers(f: &HeisMorphism) -> Result<Vec<usize>> {
    f.terms().iter().map(|(d, _)| block_number(d)).collect()
}
