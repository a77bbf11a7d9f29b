mod common;

use delpezzo::conditions::quasismooth_monomial;
use delpezzo::tables::{covers, instantiate, SERIES_ROWS, SPORADIC_ROWS};
use delpezzo::Quintuple;

use common::q;

#[test]
fn row_counts() {
    assert_eq!(SERIES_ROWS.len(), 35);
    assert_eq!(SPORADIC_ROWS.len(), 63);
}

// Column sums over the printed tables, computed from the source text.
const PINNED: (i64, i64, u64, u64, u64) = (2053, -397, 5561, 5715, 154);

#[test]
fn transcription_is_pinned() {
    let slopes: i64 = SERIES_ROWS
        .iter()
        .flat_map(|r| r.weights.iter().map(|w| w.slope))
        .sum();
    let intercepts: i64 = SERIES_ROWS
        .iter()
        .flat_map(|r| r.weights.iter().map(|w| w.intercept))
        .sum();
    let degrees: u64 = SPORADIC_ROWS.iter().map(|r| r.degree).sum();
    let weights: u64 = SPORADIC_ROWS.iter().flat_map(|r| r.weights).sum();
    let indices: u64 = SPORADIC_ROWS.iter().map(|r| r.index).sum();
    assert_eq!((slopes, intercepts, degrees, weights, indices), PINNED);
}

#[test]
fn rows_are_consistent_for_small_n() {
    for r in SERIES_ROWS.iter() {
        for n in 1..=5 {
            let Some((w, d)) = r.at(n) else { continue };
            let sum: u64 = w.iter().sum();
            assert_eq!(sum as i64 - d as i64, r.index.eval(n), "{r:?} at n={n}");
        }
    }
    for r in SPORADIC_ROWS.iter() {
        assert_eq!(r.weights.iter().sum::<u64>() - r.degree, r.index);
    }
}

#[test]
fn instantiations_pass_monomial_form() {
    for index in 1..=12 {
        let (series, sporadic) = instantiate(index).unwrap();
        for s in &series {
            for m in s.expand(150) {
                assert!(quasismooth_monomial(&m), "I={index} {m}");
            }
        }
        for m in &sporadic {
            assert!(quasismooth_monomial(m), "I={index} {m}");
            assert_eq!(m.index(), index);
        }
    }
}

#[test]
fn raw_row_yields_ill_formed_tuple() {
    let (_, five) = instantiate(5).unwrap();
    let bad: Quintuple = q([6, 7, 9, 10], 27);
    assert!(!quasismooth_monomial(&bad));
    assert!(!five.contains(&bad));
    assert!(!covers(&bad).unwrap());
}

#[test]
fn index_one_type_four() {
    let (series, sporadic) = instantiate(1).unwrap();
    assert_eq!(series.len(), 1);
    assert_eq!(series[0].base(), q([2, 3, 3, 5], 12));
    let mut expected = common::johnson_kollar_sporadic();
    expected.sort();
    let mut got = sporadic.clone();
    got.sort();
    assert_eq!(got, expected);
    assert!(covers(&q([13, 35, 81, 128], 256)).unwrap());
}

#[test]
fn constant_index_series_appear_in_golden_tables() {
    let mut seen = std::collections::BTreeSet::new();
    for r in SERIES_ROWS.iter().filter(|r| r.has_constant_index()) {
        let index = r.index.intercept as u64;
        seen.insert(index);
        if index > 6 {
            continue;
        }
        let golden = common::golden_members(index, 150);
        let (series, sporadic) = instantiate(index).unwrap();
        for s in &series {
            for m in s.expand(150) {
                assert!(golden.contains(&m), "I={index} {m}");
            }
        }
        for m in sporadic.iter().filter(|m| m.weight(3) <= 150) {
            assert!(golden.contains(m), "I={index} {m}");
        }
    }
    assert_eq!(seen, [1, 2, 4, 6].into());
}

#[test]
fn wrong_parity_instances_are_dropped() {
    for (w, d) in [([7, 38, 57, 82], 171), ([7, 22, 33, 46], 99)] {
        let bad = q(w, d);
        let (series, sporadic) = instantiate(bad.index()).unwrap();
        assert!(!sporadic.contains(&bad), "{bad}");
        assert!(!series.iter().any(|s| s.contains(&bad)), "{bad}");
        assert!(!quasismooth_monomial(&bad));
    }
    // the other parity survives
    let (_, sporadic) = instantiate(12).unwrap();
    assert!(sporadic.contains(&q([7, 34, 51, 73], 153)));
}
