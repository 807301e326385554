mod common;

use std::collections::BTreeSet;

use common::*;
use rand::Rng;

use transversal::catalog;
use transversal::oracle::{partial_trace_projector, render_projector_terms};
use transversal::pauli::pauli;
use transversal::subcode::{
    check_uncovered_coordinate_lemma, classify_minimal_subcode, coverage, minimal_supports, subcode_projector_terms,
    subcode_report, MinimalClass,
};
use transversal::{Letter, PauliOperator, StabilizerGroup, Support};

fn sup(n: usize, one_based: &[usize]) -> Support {
    Support::from_one_based(n, one_based).unwrap()
}

#[test]
fn five_qubit_example() {
    let s = catalog::five_qubit();
    let got = minimal_supports(&s).unwrap();
    let want: BTreeSet<Support> = [[1, 2, 3, 4], [2, 3, 4, 5], [1, 3, 4, 5], [1, 2, 4, 5], [1, 2, 3, 5]]
        .iter()
        .map(|c| sup(5, c))
        .collect();
    assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), want);
    assert_eq!(got.len(), 5);

    let rep = classify_minimal_subcode(&s, &sup(5, &[1, 2, 3, 4])).unwrap();
    assert_eq!(rep.a_omega, 3);
    assert_eq!(rep.class, MinimalClass::QuantumType);
    let w: BTreeSet<PauliOperator> = rep.witnesses.iter().map(|p| p.unsigned()).collect();
    let want: BTreeSet<PauliOperator> = ["XZZXI", "YXXYI", "ZYYZI"].iter().map(|p| pauli(p)).collect();
    assert_eq!(w, want);
    assert!(rep.letters_distinct);

    let terms = subcode_projector_terms(&s, &sup(5, &[1, 2, 3, 4])).unwrap();
    assert_eq!(terms.b_omega, 4);
    let t: BTreeSet<PauliOperator> = terms.terms.iter().cloned().collect();
    let want: BTreeSet<PauliOperator> = ["IIII", "XZZX", "YXXY", "ZYYZ"].iter().map(|p| pauli(p)).collect();
    assert_eq!(t, want);

    let cov = coverage(&s).unwrap();
    assert!(cov.uncovered.is_empty());
    assert_eq!(cov.covered, Support::full(5));
}

#[test]
fn five_qubit_rho_matches_hand_built_sum() {
    let s = catalog::five_qubit();
    let omega = sup(5, &[1, 2, 3, 4]);
    let quarter = ONE * 0.25;
    let want = ["IIII", "XZZX", "YXXY", "ZYYZ"]
        .iter()
        .map(|p| scale(&render(&pauli(p)), quarter))
        .reduce(|a, b| add(&a, &b))
        .unwrap();
    let dense = partial_trace_projector(&s, &omega).unwrap();
    let formula = render_projector_terms(&subcode_projector_terms(&s, &omega).unwrap());
    for op in [dense, formula] {
        let m: Mat = (0..16).map(|r| (0..16).map(|c| op.get(r, c)).collect()).collect();
        assert!(max_diff(&m, &want) <= 1e-12);
    }
}

#[test]
fn steane_minimal_supports() {
    let s = catalog::steane();
    let counts = brute_support_counts(&s);
    let minimal = brute_minimal(&counts);
    let got = minimal_supports(&s).unwrap();
    assert_eq!(got.len(), minimal.len());
    assert_eq!(got.len(), 7);
    for omega in &got {
        assert_eq!(omega.len(), 4);
        let rep = classify_minimal_subcode(&s, omega).unwrap();
        assert_eq!(rep.a_omega, 3);
        let kinds: BTreeSet<bool> = rep.witnesses.iter().map(|w| w.is_x_type()).collect();
        assert_eq!(kinds.len(), 2, "X-type and non-X-type witnesses share the support");
    }
}

#[test]
fn non_minimal_support_is_rejected() {
    let s = catalog::five_qubit();
    assert!(classify_minimal_subcode(&s, &Support::full(5)).is_err());
    assert!(classify_minimal_subcode(&s, &sup(5, &[1, 2])).is_err());
}

#[test]
fn six_qubit_example_coverage() {
    let s = catalog::six_two_two();
    let cov = coverage(&s).unwrap();
    assert_eq!(cov.uncovered.one_based(), vec![3, 4]);
    // {1,2} carries ±YYIIII = g1·g2·g4
    assert!(s.contains_up_to_phase(&pauli("YYIIII")));
    for j in [2, 3] {
        assert!(check_uncovered_coordinate_lemma(&s, j).unwrap());
    }
    assert!(check_uncovered_coordinate_lemma(&s, 0).is_err());
}

/// `A_ω ∈ {1, 3}`, evenness and the letter-triple property against an
/// independent brute force, over random codes with `n ≤ 8`.
#[test]
fn minimal_subcode_classification_on_random_codes() {
    let mut r = rng(1);
    let mut supports_seen = 0;
    for _ in 0..500 {
        let n = r.gen_range(1..=8);
        let s = random_code(n, &mut r);
        let counts = brute_support_counts(&s);
        let minimal = brute_minimal(&counts);
        let report = subcode_report(&s).unwrap();
        let got: Vec<BTreeSet<usize>> = report
            .minimal_supports
            .iter()
            .map(|o| o.coords().into_iter().collect())
            .collect();
        assert_eq!(got, minimal, "{s:?}");
        // antichain
        for a in &report.minimal_supports {
            for b in &report.minimal_supports {
                assert!(a == b || !a.is_subset_of(b));
            }
        }
        for class in &report.classes {
            let key: BTreeSet<usize> = class.omega.coords().into_iter().collect();
            assert_eq!(class.a_omega, counts[&key].len());
            assert!(class.a_omega == 1 || class.a_omega == 3, "{s:?}");
            if class.a_omega == 3 {
                assert_eq!(class.omega.len() % 2, 0, "{s:?}");
                for j in class.omega.coords() {
                    let letters: BTreeSet<Letter> = counts[&key].iter().map(|w| w.letter(j)).collect();
                    assert_eq!(letters.len(), 3);
                }
                assert!(class.letters_distinct);
            }
            supports_seen += 1;
        }
    }
    assert!(supports_seen > 500);
}

/// The lemma on random codes that have an uncovered coordinate inside the
/// support of some element.
#[test]
fn uncovered_coordinate_lemma_on_random_codes() {
    let mut r = rng(2);
    let mut found = 0;
    let mut tried = 0;
    while found < 500 {
        tried += 1;
        assert!(tried < 200_000, "too few codes with uncovered coordinates");
        let n = r.gen_range(4..=8);
        let m = r.gen_range(2..n);
        let s = StabilizerGroup::random(n, m, &mut r);
        let cov = coverage(&s).unwrap();
        let live: Vec<usize> = cov
            .per_coordinate
            .iter()
            .filter(|c| !c.minimal_elements.is_empty())
            .map(|c| c.coordinate - 1)
            .collect();
        if live.is_empty() {
            continue;
        }
        for j in live {
            assert!(check_uncovered_coordinate_lemma(&s, j).unwrap(), "{s:?} at {}", j + 1);
        }
        found += 1;
    }
}

/// `ρ_ω` by formula and by dense partial trace, for every nonempty `ω`.
#[test]
fn rho_formula_matches_partial_trace() {
    let mut codes = vec![
        catalog::four_two_two(),
        catalog::five_qubit(),
        catalog::six_two_two(),
        catalog::bell_pair(),
        catalog::steane(),
    ];
    let mut r = rng(4);
    codes.extend((0..20).map(|_| {
        let n = r.gen_range(1..=6);
        random_code(n, &mut r)
    }));
    for s in &codes {
        let n = s.n();
        for mask in 1u64..1 << n {
            let omega = Support::from_coords(n, (0..n).filter(|j| mask >> j & 1 == 1)).unwrap();
            let dense = partial_trace_projector(s, &omega).unwrap();
            let formula = render_projector_terms(&subcode_projector_terms(s, &omega).unwrap());
            assert!(dense.max_abs_diff(&formula) <= 1e-12, "{s:?} {omega}");
        }
    }
}
