use parheis::heis::{
    matchings, word_from_normal, DiagramWord, HeisLayer, HeisMorphism, HeisObject, LayerKind, NormalHeisDiagram, Orientation,
    Strategy as Order,
};
use parheis::rep::{eval_heis, word_matrix};
use parheis::Error;
use proptest::prelude::*;

fn object(bits: u8, len: usize) -> HeisObject {
    HeisObject((0..len).map(|i| if bits >> i & 1 == 0 { Orientation::Up } else { Orientation::Down }).collect())
}

/// A word built by choosing, at each step, one of the layers that fit, capped at `max_strands`.
fn random_word(source: HeisObject, choices: &[(usize, usize)], max_strands: usize) -> DiagramWord {
    let mut cur = source.clone();
    let mut layers = Vec::new();
    for &(kind_pick, pos_pick) in choices {
        let mut fitting = Vec::new();
        for kind in LayerKind::ALL {
            let grows = kind.output().len() > kind.input().len();
            if grows && cur.len() + 2 > max_strands {
                continue;
            }
            for pos in 0..=cur.len() {
                let l = HeisLayer::new(kind, pos);
                if l.apply_to_object(&cur).is_ok() {
                    fitting.push(l);
                }
            }
        }
        if fitting.is_empty() {
            break;
        }
        let l = fitting[(kind_pick * 7 + pos_pick) % fitting.len()];
        cur = l.apply_to_object(&cur).unwrap();
        layers.push(l);
    }
    DiagramWord::new(source, layers).unwrap()
}

fn word_strategy(max_layers: usize, max_strands: usize) -> impl Strategy<Value = DiagramWord> {
    (any::<u8>(), 0usize..5, prop::collection::vec((0usize..64, 0usize..64), 0..=max_layers))
        .prop_map(move |(bits, len, choices)| random_word(object(bits, len.min(max_strands)), &choices, max_strands))
}

fn outcome(w: &DiagramWord, s: Order) -> Option<HeisMorphism> {
    match w.normalize_with(s) {
        Ok(f) => Some(f),
        Err(Error::UnsupportedConfiguration(_)) => None,
        Err(e) => panic!("unexpected error {e} on {w}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Orders that both succeed agree. An order may stop at a right curl that another order never
    /// reaches because a left curl elsewhere already annihilated the term; every successful result is
    /// then checked against the representations.
    #[test]
    fn strategies_agree(w in word_strategy(10, 6)) {
        let results: Vec<Option<HeisMorphism>> =
            [Order::BottomUp, Order::BottomUpExpanded, Order::TopDown].into_iter().map(|s| outcome(&w, s)).collect();
        let ok: Vec<&HeisMorphism> = results.iter().flatten().collect();
        for f in &ok {
            prop_assert_eq!(*f, ok[0], "{}", w);
        }
        if ok.len() < results.len() && w.source.len() + w.layers.len() <= 12 {
            if let Some(f) = ok.first() {
                for n in 2..4 {
                    prop_assert_eq!(eval_heis(n, f).unwrap(), word_matrix(n, &w).unwrap(), "{}", w);
                }
            }
        }
    }

    #[test]
    fn normal_forms_are_fixed(w in word_strategy(8, 6)) {
        if let Some(f) = outcome(&w, Order::BottomUp) {
            for (d, _) in f.terms() {
                prop_assert_eq!(word_from_normal(&d).normalize().unwrap(), HeisMorphism::from_diagram(&d));
            }
        }
    }

    #[test]
    fn normal_forms_evaluate_like_words(w in word_strategy(6, 4), n in 2usize..5) {
        if let Some(f) = outcome(&w, Order::BottomUp) {
            prop_assert_eq!(eval_heis(n, &f).unwrap(), word_matrix(n, &w).unwrap(), "{}", w);
        }
    }

    #[test]
    fn random_matchings_round_trip(sb in any::<u8>(), tb in any::<u8>(), k in 0usize..5, l in 0usize..5, pick in 0usize..10_000, bubbles in 0u32..3) {
        prop_assume!(k + l <= 8);
        let (s, t) = (object(sb, k), object(tb, l));
        let all = matchings(&s, &t);
        prop_assume!(!all.is_empty());
        let mut d = all[pick % all.len()].clone();
        d.bubbles = bubbles;
        prop_assert_eq!(word_from_normal(&d).normalize().unwrap(), HeisMorphism::from_diagram(&d));
    }
}

#[test]
fn larger_representations_agree_on_relations() {
    for r in parheis::heis::relations() {
        let f = r.lhs.normalize().unwrap();
        for n in 5..7 {
            assert_eq!(eval_heis(n, &f).unwrap(), word_matrix(n, &r.lhs).unwrap(), "{} at n={n}", r.name);
        }
    }
}

#[test]
fn ccw_and_cw_circles() {
    let ccw =
        DiagramWord::new(HeisObject::unit(), vec![HeisLayer::new(LayerKind::CupDU, 0), HeisLayer::new(LayerKind::CapDU, 0)])
            .unwrap();
    assert_eq!(ccw.normalize().unwrap(), HeisMorphism::identity(&HeisObject::unit()));
    let cw = DiagramWord::new(HeisObject::unit(), vec![HeisLayer::new(LayerKind::CupUD, 0), HeisLayer::new(LayerKind::CapUD, 0)])
        .unwrap();
    let d = NormalHeisDiagram::new(HeisObject::unit(), HeisObject::unit(), vec![], 1).unwrap();
    assert_eq!(cw.normalize().unwrap(), HeisMorphism::from_diagram(&d));
}
