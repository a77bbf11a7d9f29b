mod common;

use delpezzo::conditions::{
    class_guards, detect_class, detect_types, is_solid, is_valid, quasismooth_divisibility,
    quasismooth_monomial,
};
use delpezzo::Quintuple;
use proptest::prelude::*;

use common::q;

fn ordered(bound: u64) -> impl Strategy<Value = Quintuple> {
    (prop::array::uniform4(1..=bound), 1u64..=12).prop_filter_map("degenerate", |(mut w, index)| {
        w.sort_unstable();
        let sum: u64 = w.iter().sum();
        Quintuple::new(w, sum.checked_sub(index)?).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4000))]

    #[test]
    fn forms_agree(q in ordered(60)) {
        prop_assert_eq!(quasismooth_divisibility(&q).accepted(), quasismooth_monomial(&q));
    }

    #[test]
    fn solid_is_valid_and_colourful(q in ordered(40)) {
        if is_solid(&q) {
            prop_assert!(is_valid(&q));
            prop_assert!(detect_class(&q).is_some());
        }
    }

    #[test]
    fn at_most_one_class_guard(q in ordered(80)) {
        prop_assert!(class_guards(&q).iter().filter(|&&g| g).count() <= 1);
    }

    #[test]
    fn report_matches_predicates(q in ordered(40)) {
        let r = quasismooth_divisibility(&q);
        prop_assert_eq!(r.solid(), is_solid(&q));
        prop_assert_eq!(r.valid(), is_valid(&q));
        prop_assert_eq!(r.accepted(), r.failures().is_empty());
        prop_assert_eq!(r.class, detect_class(&q));
        prop_assert_eq!(r.types, detect_types(&q));
    }
}

#[test]
fn shapes_with_repeated_index_weights() {
    let mut hits = Vec::new();
    for index in 1..=20 {
        for a in index..=200 {
            let q = q([index, index, a, a], 2 * a + index);
            if quasismooth_monomial(&q) {
                hits.push(q);
            }
        }
    }
    assert_eq!(hits, vec![q([1, 1, 1, 1], 3)]);
}

#[test]
fn failure_labels() {
    let r = quasismooth_divisibility(&q([1, 3, 5, 6], 13));
    assert_eq!(r.failures(), ["i", "v", "vi"]);
    assert!(!r.solid());
    assert_eq!(r.class, Some(6));

    let r = quasismooth_divisibility(&q([2, 4, 5, 7], 14));
    assert!(r.valid());
    assert_eq!(r.class, Some(4));
    assert_eq!(r.types.to_string(), "{II}");
}
