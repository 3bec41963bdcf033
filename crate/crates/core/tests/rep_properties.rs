use parheis::heis::compose;
use parheis::par::{ParMorphism, PartitionDiagram};
use parheis::psi::psi;
use parheis::rep::{bee_rank, beta, beta_inv, check_actcom, equivariant_dim, phi, RepMatrix};
use proptest::prelude::*;

fn diagram(k: usize, l: usize, pick: usize) -> PartitionDiagram {
    let all = PartitionDiagram::all(k, l);
    all[pick % all.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_a_functor(n in 1usize..4, k in 0usize..3, l in 0usize..3, m in 0usize..3, a in 0usize..1000, b in 0usize..1000) {
        let upper = ParMorphism::from_diagram(diagram(l, m, a));
        let lower = ParMorphism::from_diagram(diagram(k, l, b));
        let composite = phi(n, &upper.compose(&lower).unwrap());
        prop_assert_eq!(composite, phi(n, &upper).mul(&phi(n, &lower)).unwrap());
    }

    #[test]
    fn psi_is_a_functor(k in 0usize..3, l in 0usize..3, m in 0usize..3, a in 0usize..1000, b in 0usize..1000) {
        let upper = ParMorphism::from_diagram(diagram(l, m, a));
        let lower = ParMorphism::from_diagram(diagram(k, l, b));
        let lhs = psi(&upper.compose(&lower).unwrap()).unwrap();
        prop_assert_eq!(lhs, compose(&psi(&upper).unwrap(), &psi(&lower).unwrap()).unwrap());
    }

    #[test]
    fn routes_agree_on_random_diagrams(n in 2usize..5, k in 0usize..3, l in 0usize..3, a in 0usize..1000) {
        prop_assert!(check_actcom(n, &ParMorphism::from_diagram(diagram(k, l, a))).unwrap());
    }
}

#[test]
fn beta_is_invertible() {
    for n in 1..5 {
        for k in 0..4 {
            let b = beta(n, k);
            assert_eq!(beta_inv(n, k).mul(&b).unwrap(), RepMatrix::identity(b.cols), "n={n} k={k}");
        }
    }
}

#[test]
fn diagrams_span_the_invariants() {
    for n in 1..5 {
        for total in 0..=n.min(4) {
            for k in 0..=total {
                let (rank, count) = bee_rank(n, k, total - k);
                assert_eq!(rank, count);
                assert_eq!(rank, equivariant_dim(n, k, total - k));
            }
        }
    }
}
