//! Symmetric group actions, block numbers and the splitting of `↓↑`.

use super::morphism::{End, HeisMorphism, NormalHeisDiagram};
use super::object::{HeisObject, Orientation};
use super::word::{DiagramWord, HeisLayer, LayerKind};
use crate::error::{Error, Result};
use crate::par::reduced_word;

/// The image of a permutation (bottom `p` to top `perm[p]`) on `k` like-oriented strands.
pub fn sym_action(perm: &[usize], orientation: Orientation) -> Result<HeisMorphism> {
    let kind = LayerKind::crossing(orientation, orientation);
    let layers = reduced_word(perm).into_iter().rev().map(|i| HeisLayer::new(kind, i)).collect();
    DiagramWord::new(HeisObject::repeat(orientation, perm.len()), layers)?.normalize()
}

fn pairs_of(obj: &HeisObject) -> Result<usize> {
    obj.alternating_pairs().ok_or_else(|| Error::Domain(format!("object {obj} is not of the form (↑↓)^k")))
}

/// Loops of the closure by adjacent caps below and cups above, plus the bubbles.
pub fn block_number(d: &NormalHeisDiagram) -> Result<usize> {
    let k = pairs_of(&d.source)?;
    let l = pairs_of(&d.target)?;
    let id = |e: End| match e {
        End::B(q) => q,
        End::T(p) => 2 * k + p,
    };
    let total = 2 * (k + l);
    let mut partner = vec![0; total];
    for &(x, y) in &d.pairs {
        partner[id(x)] = id(y);
        partner[id(y)] = id(x);
    }
    let closure = |v: usize| v ^ 1;
    let mut seen = vec![false; total];
    let mut loops = 0;
    for start in 0..total {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            let w = partner[v];
            seen[w] = true;
            v = closure(w);
        }
    }
    Ok(loops + d.bubbles as usize)
}

/// Largest block number among the terms; 0 for the zero morphism.
pub fn filtration_degree(f: &HeisMorphism) -> Result<usize> {
    pairs_of(f.source())?;
    pairs_of(f.target())?;
    f.terms().iter().map(|(d, _)| block_number(d)).try_fold(0, |m, b| Ok(m.max(b?)))
}

/// The part of `f` of block number exactly `degree`.
pub fn degree_part(f: &HeisMorphism, degree: usize) -> Result<HeisMorphism> {
    let mut terms = Vec::new();
    for (d, c) in f.terms() {
        if block_number(&d)? == degree {
            terms.push((d, c));
        }
    }
    HeisMorphism::from_terms(f.source().clone(), f.target().clone(), terms)
}

/// All orientation-compatible matchings `source → target` without bubbles.
pub fn matchings(source: &HeisObject, target: &HeisObject) -> Vec<NormalHeisDiagram> {
    let ends: Vec<(End, Orientation)> = target
        .0
        .iter()
        .enumerate()
        .map(|(p, &o)| (End::T(p), o))
        .chain(source.0.iter().enumerate().map(|(q, &o)| (End::B(q), o.flip())))
        .collect();
    let ups: Vec<End> = ends.iter().filter(|e| e.1 == Orientation::Up).map(|e| e.0).collect();
    let downs: Vec<End> = ends.iter().filter(|e| e.1 == Orientation::Down).map(|e| e.0).collect();
    if ups.len() != downs.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut used = vec![false; downs.len()];
    let mut pairs = Vec::new();
    fn rec(i: usize, ups: &[End], downs: &[End], used: &mut [bool], pairs: &mut Vec<(End, End)>, out: &mut Vec<Vec<(End, End)>>) {
        if i == ups.len() {
            out.push(pairs.clone());
            return;
        }
        for j in 0..downs.len() {
            if !used[j] {
                used[j] = true;
                pairs.push((ups[i], downs[j]));
                rec(i + 1, ups, downs, used, pairs, out);
                pairs.pop();
                used[j] = false;
            }
        }
    }
    let mut raw = Vec::new();
    rec(0, &ups, &downs, &mut used, &mut pairs, &mut raw);
    for p in raw {
        out.push(NormalHeisDiagram::new(source.clone(), target.clone(), p, 0).expect("compatible by construction"));
    }
    out
}

/// Morphisms exhibiting `↓↑ ≅ ↑↓ ⊕ 1`.
#[derive(Clone, Debug)]
pub struct BiproductWitness {
    pub iota_1: HeisMorphism,
    pub pi_1: HeisMorphism,
    pub iota_2: HeisMorphism,
    pub pi_2: HeisMorphism,
}

impl BiproductWitness {
    pub fn new() -> Result<Self> {
        let one = |src: &str, kind| -> Result<HeisMorphism> {
            DiagramWord::new(HeisObject::parse(src)?, vec![HeisLayer::new(kind, 0)])?.normalize()
        };
        Ok(Self {
            iota_1: one("^v", LayerKind::XRight)?,
            pi_1: one("v^", LayerKind::XLeft)?,
            iota_2: one("1", LayerKind::CupDU)?,
            pi_2: one("v^", LayerKind::CapDU)?,
        })
    }

    /// Each biproduct identity with whether it holds.
    pub fn check(&self) -> Result<Vec<(&'static str, bool)>> {
        use super::word::compose;
        let id = |s: &str| HeisMorphism::identity(&HeisObject::parse(s).unwrap());
        let zero = |a: &str, b: &str| HeisMorphism::zero(HeisObject::parse(a).unwrap(), HeisObject::parse(b).unwrap());
        let sum = compose(&self.iota_1, &self.pi_1)?.add(&compose(&self.iota_2, &self.pi_2)?)?;
        Ok(vec![
            ("pi1 iota1 = 1", compose(&self.pi_1, &self.iota_1)? == id("^v")),
            ("pi2 iota2 = 1", compose(&self.pi_2, &self.iota_2)? == id("1")),
            ("pi1 iota2 = 0", compose(&self.pi_1, &self.iota_2)? == zero("1", "^v")),
            ("pi2 iota1 = 0", compose(&self.pi_2, &self.iota_1)? == zero("^v", "1")),
            ("iota1 pi1 + iota2 pi2 = 1", sum == id("v^")),
        ])
    }
}

fn word_morphism(source: &HeisObject, layers: Vec<HeisLayer>) -> Result<HeisMorphism> {
    DiagramWord::new(source.clone(), layers)?.normalize()
}

/// Inclusion and projection pairs `(ι, π)` splitting `↑↓↑^k↓^k` into `↑^{k+1}↓^{k+1}` followed by `k` copies of `↑^k↓^k`.
pub fn mail_summands(k: usize) -> Result<Vec<(HeisMorphism, HeisMorphism)>> {
    let up_down = |m: usize| HeisObject::repeat(Orientation::Up, m).concat(&HeisObject::repeat(Orientation::Down, m));
    let whole = HeisObject::alternating(1).concat(&up_down(k));
    let xl = |j| HeisLayer::new(LayerKind::XLeft, j);
    let xr = |j| HeisLayer::new(LayerKind::XRight, j);
    let mut out = Vec::new();
    let pi: Vec<HeisLayer> = (1..=k).map(xl).collect();
    let iota: Vec<HeisLayer> = (1..=k).rev().map(xr).collect();
    out.push((word_morphism(&up_down(k + 1), iota)?, word_morphism(&whole, pi)?));
    for j in 0..k {
        let mut pi: Vec<HeisLayer> = (1..=j).map(xl).collect();
        pi.push(HeisLayer::new(LayerKind::CapDU, j + 1));
        let mut iota = vec![HeisLayer::new(LayerKind::CupDU, j + 1)];
        iota.extend((1..=j).rev().map(xr));
        out.push((word_morphism(&up_down(k), iota)?, word_morphism(&whole, pi)?));
    }
    Ok(out)
}

/// Whether `π_a ι_b = δ_{ab}` and `Σ ι_a π_a = 1`.
pub fn is_direct_sum(summands: &[(HeisMorphism, HeisMorphism)]) -> Result<bool> {
    use super::word::compose;
    let Some((first, _)) = summands.first() else { return Ok(true) };
    let whole = first.target().clone();
    let mut total = HeisMorphism::zero(whole.clone(), whole.clone());
    for (a, (iota_a, pi_a)) in summands.iter().enumerate() {
        total = total.add(&compose(iota_a, pi_a)?)?;
        for (b, (iota_b, _)) in summands.iter().enumerate() {
            let p = compose(pi_a, iota_b)?;
            let expect = if a == b {
                HeisMorphism::identity(p.source())
            } else {
                HeisMorphism::zero(p.source().clone(), p.target().clone())
            };
            if p != expect {
                return Ok(false);
            }
        }
    }
    Ok(total == HeisMorphism::identity(&whole))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alt(k: usize) -> HeisObject {
        HeisObject::alternating(k)
    }

    #[test]
    fn symmetric_group_acts() {
        let up3 = HeisObject::repeat(Orientation::Up, 3);
        let s1s2 = sym_action(&[1, 2, 0], Orientation::Up).unwrap();
        let mut acc = HeisMorphism::identity(&up3);
        for _ in 0..3 {
            acc = super::super::word::compose(&s1s2, &acc).unwrap();
        }
        assert_eq!(acc, HeisMorphism::identity(&up3));
        assert_eq!(sym_action(&[0, 1], Orientation::Down).unwrap(), HeisMorphism::identity(&HeisObject::parse("vv").unwrap()));
        let x = sym_action(&[1, 0], Orientation::Up).unwrap();
        assert_eq!(x.terms().len(), 1);
        assert_eq!(x.terms()[0].0.crossings(), 1);
    }

    #[test]
    fn block_numbers() {
        for k in 0..4 {
            assert_eq!(block_number(&NormalHeisDiagram::identity(&alt(k))).unwrap(), k);
        }
        let bubbles = NormalHeisDiagram::new(alt(0), alt(0), vec![], 3).unwrap();
        assert_eq!(block_number(&bubbles).unwrap(), 3);
        let y = NormalHeisDiagram::new(
            alt(2),
            alt(2),
            vec![(End::B(0), End::T(0)), (End::B(1), End::B(2)), (End::T(1), End::T(2)), (End::B(3), End::T(3))],
            0,
        )
        .unwrap();
        assert_eq!(block_number(&y).unwrap(), 1);
        assert!(matches!(block_number(&NormalHeisDiagram::identity(&HeisObject::parse("v^").unwrap())), Err(Error::Domain(_))));
    }

    /// Brute force over all perfect matchings of the endpoints.
    fn count_matchings(source: &HeisObject, target: &HeisObject) -> usize {
        let orient: Vec<Orientation> = target.0.iter().copied().chain(source.0.iter().map(|o| o.flip())).collect();
        fn rec(free: Vec<usize>, orient: &[Orientation]) -> usize {
            let Some((&a, rest)) = free.split_first() else { return 1 };
            rest.iter()
                .filter(|&&b| orient[a] != orient[b])
                .map(|&b| rec(rest.iter().copied().filter(|&c| c != b).collect(), orient))
                .sum()
        }
        rec((0..orient.len()).collect(), &orient)
    }

    #[test]
    fn matching_counts() {
        for k in 0..4 {
            let o = HeisObject::repeat(Orientation::Up, k).concat(&HeisObject::repeat(Orientation::Down, k));
            let m = matchings(&o, &o);
            assert_eq!(m.len(), count_matchings(&o, &o));
            assert_eq!(m.len(), (1..=2 * k).product::<usize>());
        }
        assert_eq!(matchings(&alt(1), &alt(2)).len(), count_matchings(&alt(1), &alt(2)));
    }

    #[test]
    fn mail_splittings() {
        for k in 0..4 {
            let s = mail_summands(k).unwrap();
            assert_eq!(s.len(), k + 1);
            assert!(is_direct_sum(&s).unwrap(), "k={k}");
        }
        let mut s = mail_summands(1).unwrap();
        s.pop();
        assert!(!is_direct_sum(&s).unwrap());
    }

    #[test]
    fn down_up_splits() {
        for (name, ok) in BiproductWitness::new().unwrap().check().unwrap() {
            assert!(ok, "{name}");
        }
    }
}
