use super::*;
use crate::heis::{compose, filtration_degree, End, HeisMorphism, HeisObject, NormalHeisDiagram};
use crate::par::{relations, Generator, ParMorphism, PartitionDiagram, Vertex};
use crate::symfunc::Partition;

fn xi() -> PartitionDiagram {
    PartitionDiagram::new(2, 2, vec![vec![Vertex::Bottom(0), Vertex::Bottom(1), Vertex::Top(0), Vertex::Top(1)]]).unwrap()
}

fn alt(k: usize) -> HeisObject {
    HeisObject::alternating(k)
}

fn single(f: &HeisMorphism) -> NormalHeisDiagram {
    let t = f.terms();
    assert_eq!(t.len(), 1, "{f:?}");
    assert_eq!(t[0].1, 1);
    t[0].0.clone()
}

#[test]
fn generator_images() {
    let eta = single(&psi(&ParMorphism::generator(Generator::Eta)).unwrap());
    assert_eq!(eta.pairs, vec![(End::T(0), End::T(1))]);
    let y = single(&psi_diagram(&xi()).unwrap());
    assert_eq!(y.pairs, vec![(End::B(0), End::T(0)), (End::B(1), End::B(2)), (End::B(3), End::T(3)), (End::T(1), End::T(2))]);
    let bubble = ParMorphism::generator(Generator::Eps).compose(&ParMorphism::generator(Generator::Eta)).unwrap();
    let b = single(&psi(&bubble).unwrap());
    assert!(b.pairs.is_empty() && b.bubbles == 1);
    let s = psi(&ParMorphism::generator(Generator::Swap)).unwrap();
    assert_eq!(s.terms().len(), 2);
    let x = single(&t_of_perm(&[1, 0]).unwrap());
    assert_eq!(x.pairs, vec![(End::B(0), End::T(2)), (End::B(1), End::T(3)), (End::B(2), End::T(0)), (End::B(3), End::T(1))]);
    assert_eq!(s, t_of_perm(&[1, 0]).unwrap().add(&psi_diagram(&xi()).unwrap()).unwrap());
}

#[test]
fn presentation_is_preserved() {
    for r in relations() {
        assert_eq!(psi(&r.lhs).unwrap(), psi(&r.rhs).unwrap(), "{}", r.name);
    }
}

#[test]
fn reduced_words_agree() {
    assert_eq!(t_of_word(3, &[0, 1, 0]).unwrap(), t_of_word(3, &[1, 0, 1]).unwrap());
    assert_eq!(t_of_perm(&[0, 1, 2]).unwrap(), HeisMorphism::identity(&alt(3)));
}

#[test]
fn functor_respects_composition_and_tensor() {
    let ds: Vec<PartitionDiagram> = PartitionDiagram::all(1, 2).into_iter().chain(PartitionDiagram::all(2, 1)).collect();
    for a in PartitionDiagram::all(2, 1) {
        for b in PartitionDiagram::all(1, 2) {
            let (fa, fb) = (ParMorphism::from_diagram(a.clone()), ParMorphism::from_diagram(b.clone()));
            let lhs = psi(&fa.compose(&fb).unwrap()).unwrap();
            assert_eq!(lhs, compose(&psi(&fa).unwrap(), &psi(&fb).unwrap()).unwrap(), "{a} after {b}");
            let lhs = psi(&fb.compose(&fa).unwrap()).unwrap();
            assert_eq!(lhs, compose(&psi(&fb).unwrap(), &psi(&fa).unwrap()).unwrap(), "{b} after {a}");
        }
    }
    for a in &ds {
        for b in &ds {
            let (fa, fb) = (ParMorphism::from_diagram(a.clone()), ParMorphism::from_diagram(b.clone()));
            assert_eq!(psi(&fa.tensor(&fb)).unwrap(), psi(&fa).unwrap().tensor(&psi(&fb).unwrap()));
        }
    }
}

#[test]
fn leading_terms() {
    for (k, l) in [(0, 0), (1, 1), (2, 1), (2, 2), (1, 3)] {
        assert!(check_faithful(k, l).unwrap(), "({k},{l})");
    }
    let d = xi();
    let diff = psi_diagram(&d).unwrap().sub(&leading_term(&d).unwrap()).unwrap();
    assert!(diff.is_zero() || filtration_degree(&diff).unwrap() < d.block_count());
}

/// `k! / dim S^λ` is the product of the hook lengths.
fn hook_product(lambda: &Partition) -> i64 {
    let conj = lambda.conjugate();
    let mut prod = 1;
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            prod *= ((len - c - 1) + (conj.parts()[c] - r - 1) + 1) as i64;
        }
    }
    prod
}

#[test]
fn young_symmetrizers_are_quasi_idempotent() {
    for n in 1..5 {
        for lambda in Partition::all(n) {
            let e = as_par_morphism(n, &young_symmetrizer(&lambda));
            let sq = e.compose(&e).unwrap();
            assert_eq!(sq, e.scale(&crate::poly::TPolynomial::constant(hook_product(&lambda))), "{lambda}");
        }
    }
}

#[test]
fn interleaving_splits() {
    for k in 0..4 {
        let p = compose(&interleave_projection(k).unwrap(), &interleave_inclusion(k).unwrap()).unwrap();
        assert_eq!(p, HeisMorphism::identity(p.source()));
    }
}

#[test]
fn diagonal_idempotents() {
    assert_eq!(d_idempotent(&Partition::parse("1").unwrap()).unwrap(), HeisMorphism::identity(&alt(1)));
    for s in ["2", "1,1"] {
        let d = d_idempotent(&Partition::parse(s).unwrap()).unwrap();
        assert_eq!(compose(&d, &d).unwrap(), d.scale(2), "{s}");
    }
    for n in 1..4 {
        for lambda in Partition::all(n) {
            assert!(filtration_congruence(&lambda).unwrap(), "{lambda}");
        }
    }
}

/// The top part of `e_λ ⊗ e_λ` carries `c_σ²` where the diagonal image carries `c_σ`, so the
/// congruence fails as soon as some `c_σ` is negative.
fn tensor_square_breaks_congruence(lambda: &Partition) -> bool {
    use crate::heis::{block_number, sym_action, Orientation};
    let k = lambda.size();
    let e = young_symmetrizer(lambda);
    let obj = HeisObject::repeat(Orientation::Up, k).concat(&HeisObject::repeat(Orientation::Down, k));
    let mut mid = HeisMorphism::zero(obj.clone(), obj);
    for (s, a) in &e {
        for (t, b) in &e {
            let term = sym_action(s, Orientation::Up).unwrap().tensor(&sym_action(t, Orientation::Down).unwrap());
            mid = mid.add(&term.scale(a * b)).unwrap();
        }
    }
    let square = compose(&interleave_inclusion(k).unwrap(), &compose(&mid, &interleave_projection(k).unwrap()).unwrap()).unwrap();
    let diff = psi_young(lambda).unwrap().sub(&square).unwrap();
    diff.terms().iter().any(|(d, _)| block_number(d).unwrap() >= k)
}

#[test]
fn tensor_square_is_not_the_diagonal() {
    assert!(!tensor_square_breaks_congruence(&Partition::parse("2").unwrap()));
    assert!(tensor_square_breaks_congruence(&Partition::parse("1,1").unwrap()));
    assert!(tensor_square_breaks_congruence(&Partition::parse("2,1").unwrap()));
}
