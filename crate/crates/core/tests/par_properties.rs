use parheis::par::{factorize, ParMorphism, PartitionDiagram};
use parheis::TPolynomial;
use proptest::prelude::*;

fn diagram(k: usize, l: usize, pick: usize) -> PartitionDiagram {
    let all = PartitionDiagram::all(k, l);
    all[pick % all.len()].clone()
}

fn morphism(k: usize, l: usize, picks: &[(usize, i64, u32)]) -> ParMorphism {
    let mut f = ParMorphism::zero(k, l);
    for &(p, c, e) in picks {
        f = f.add(&ParMorphism::term(TPolynomial::monomial(c, e), diagram(k, l, p))).unwrap();
    }
    f
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, u32)>> {
    prop::collection::vec((0usize..10_000, -3i64..4, 0u32..3), 1..4)
}

fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

#[test]
fn hom_spaces_have_bell_dimension() {
    for k in 0..4 {
        for l in 0..4 {
            let all = PartitionDiagram::all(k, l);
            assert_eq!(all.len(), bell(k + l));
            let distinct: std::collections::BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative_and_unital(
        a in 0usize..3, b in 0usize..3, c in 0usize..3, d in 0usize..2,
        f in picks(), g in picks(), h in picks(),
    ) {
        let (f, g, h) = (morphism(c, d, &f), morphism(b, c, &g), morphism(a, b, &h));
        prop_assert_eq!(f.compose(&g).unwrap().compose(&h).unwrap(), f.compose(&g.compose(&h).unwrap()).unwrap());
        prop_assert_eq!(f.compose(&ParMorphism::identity(c)).unwrap(), f.clone());
        prop_assert_eq!(ParMorphism::identity(d).compose(&f).unwrap(), f);
    }

    #[test]
    fn tensor_is_a_bifunctor(
        a in 0usize..2, b in 0usize..3, c in 0usize..2, x in 0usize..2, y in 0usize..2, z in 0usize..2,
        f in picks(), f2 in picks(), g in picks(), g2 in picks(),
    ) {
        let (f, f2) = (morphism(b, c, &f), morphism(a, b, &f2));
        let (g, g2) = (morphism(y, z, &g), morphism(x, y, &g2));
        let lhs = f.compose(&f2).unwrap().tensor(&g.compose(&g2).unwrap());
        let rhs = f.tensor(&g).compose(&f2.tensor(&g2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn factorization_recomposes(k in 0usize..5, l in 0usize..5, pick in 0usize..100_000) {
        prop_assume!(k + l <= 8);
        let d = diagram(k, l, pick);
        prop_assert_eq!(factorize(&d).recompose().unwrap(), ParMorphism::from_diagram(d));
    }

    #[test]
    fn composition_adds_at_most_the_blocks_of_both(k in 0usize..4, m in 0usize..4, l in 0usize..4, p in 0usize..10_000, q in 0usize..10_000) {
        let (upper, lower) = (diagram(m, l, p), diagram(k, m, q));
        let (_, d) = upper.stack(&lower).unwrap();
        prop_assert!(d.block_count() <= upper.block_count() + lower.block_count());
    }
}
