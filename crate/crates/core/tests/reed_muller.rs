mod common;

use common::*;
use transversal::angle::RationalAngle;
use transversal::catalog;
use transversal::classical::{punctured_reed_muller, reed_muller, rm_css_family, BinaryLinearCode, CssCode};
use transversal::transversal::allowed_uniform_angles;
use transversal::Error;

#[test]
fn small_examples() {
    let rm13 = reed_muller(1, 3).unwrap();
    assert_eq!((rm13.n(), rm13.k(), rm13.min_weight().unwrap()), (8, 4, Some(4)));
    assert!(rm13.dual().same_rowspace(&rm13));

    for m in 1..=5 {
        let full = reed_muller(m, m).unwrap();
        assert_eq!(full.k(), 1 << m);
        assert_eq!(full.dual().k(), 0);
    }
    assert!(reed_muller(1, 4)
        .unwrap()
        .dual()
        .same_rowspace(&reed_muller(2, 4).unwrap()));
    assert!(reed_muller(3, 2).is_err());

    let p14 = reed_muller(1, 4).unwrap().puncture(0).unwrap();
    assert_eq!((p14.n(), p14.k()), (15, 5));
    let spec = p14.weight_spectrum().unwrap();
    assert!(spec
        .iter()
        .enumerate()
        .all(|(w, &a)| a == 0 || [0, 7, 8, 15].contains(&w)));
    assert!(p14.same_rowspace(&punctured_reed_muller(1, 4).unwrap()));

    let hamming = punctured_reed_muller(1, 3).unwrap();
    let ws: Vec<usize> = (0..=7).filter(|&w| hamming.weight_spectrum().unwrap()[w] > 0).collect();
    assert_eq!(ws, vec![0, 3, 4, 7]);

    let even = p14.even_subcode();
    assert_eq!(even.k(), 4);
    let ws: Vec<usize> = (0..=15).filter(|&w| even.weight_spectrum().unwrap()[w] > 0).collect();
    assert_eq!(ws, vec![0, 8]);
    let even_h = hamming.even_subcode();
    assert_eq!((even_h.n(), even_h.k()), (7, 3));
    let ws: Vec<usize> = (0..=7).filter(|&w| even_h.weight_spectrum().unwrap()[w] > 0).collect();
    assert_eq!(ws, vec![0, 4]);

    assert_eq!(reed_muller(1, 4).unwrap().divisor().unwrap(), 8);
    assert_eq!(reed_muller(2, 4).unwrap().divisor().unwrap() % 2, 0);
}

/// Nesting, dimension, minimum weight, duality and divisibility for every
/// `RM(r, m)` with `m ≤ 6`.
#[test]
fn reed_muller_suite() {
    for m in 1..=6usize {
        let n = 1usize << m;
        for r in 0..=m {
            let code = reed_muller(r, m).unwrap();
            let oracle = plotkin(r, m);
            assert!(
                code.same_rowspace(&BinaryLinearCode::span(n, &oracle)),
                "RM({r},{m}) rowspace"
            );
            assert_eq!(code.k(), dim_formula(r, m));
            assert_eq!(gf2_rank(&oracle), dim_formula(r, m));

            for j in r..=m {
                assert!(
                    code.is_subcode_of(&reed_muller(j, m).unwrap()),
                    "RM({r},{m}) in RM({j},{m})"
                );
            }

            if r < m {
                let dual = plotkin(m - r - 1, m);
                assert!(oracle.iter().all(|a| dual.iter().all(|b| !a.dot(b))));
                assert_eq!(gf2_rank(&oracle) + gf2_rank(&dual), n);
                assert!(code.dual().same_rowspace(&reed_muller(m - r - 1, m).unwrap()));
            }

            // minimum weight by enumeration
            let d = 1usize << (m - r);
            if code.k() <= 22 {
                let ws = weights(&oracle);
                assert_eq!(ws.iter().copied().filter(|&w| w > 0).min(), Some(d), "RM({r},{m})");
                let g = ws.iter().fold(0u64, |g, &w| gcd(g, w as u64));
                if r >= 1 {
                    assert_eq!(g % (1u64 << (m / r - 1)), 0, "RM({r},{m}) divisor {g}");
                    assert_eq!(code.divisor().unwrap(), g);
                }
                assert_eq!(code.min_weight().unwrap(), Some(d));
            } else {
                // every vector of weight < d has a nonzero syndrome
                let checks = if r == m { Vec::new() } else { plotkin(m - r - 1, m) };
                assert!(checks.len() <= 64);
                assert!(!has_word_below(n, &checks, d), "RM({r},{m}) has a word below {d}");
                assert!(oracle.iter().any(|row| row.count_ones() == d));
                // the required divisor here is at most 2, which even rows settle
                let need = 1u64 << (m / r - 1);
                assert!(need <= 2);
                if need == 2 {
                    assert!(oracle.iter().all(|row| row.count_ones() % 2 == 0));
                }
            }
        }
    }
}

#[test]
fn css_examples() {
    let hamming = punctured_reed_muller(1, 3).unwrap();
    let steane = CssCode::from_c2_perp(hamming.clone(), hamming.even_subcode()).unwrap();
    assert_eq!(steane.k(), hamming.k() - hamming.even_subcode().k());
    assert_eq!(steane.stabilizer(), catalog::steane());
    assert!(CssCode::from_stabilizer(&catalog::steane()).is_some());
    assert!(CssCode::from_stabilizer(&catalog::five_qubit()).is_none());

    let p14 = punctured_reed_muller(1, 4).unwrap();
    let fifteen = CssCode::from_c2_perp(p14.clone(), p14.even_subcode()).unwrap();
    let s = fifteen.stabilizer();
    assert_eq!((s.n(), s.k()), (15, 1));
    assert_eq!(s.minimum_distance().unwrap().params.d, 3);

    // containment is enforced
    assert_eq!(
        CssCode::from_c2_perp(hamming.even_subcode(), hamming.clone()).unwrap_err(),
        Error::ContainmentViolated
    );
}

#[test]
fn rm_css_family_examples() {
    // (r, m, n, Δ, d, exact weight gcd)
    let cases = [
        (1, 3, 7, 4, 3, Some(4)),
        (1, 4, 15, 8, 3, Some(8)),
        (1, 5, 31, 16, 3, Some(16)),
        (2, 5, 31, 2, 7, Some(4)),
        (2, 8, 255, 8, 7, None),
    ];
    for (r, m, n, delta, d, exact) in cases {
        let q = rm_css_family(r, m).unwrap();
        assert_eq!((q.n, q.k, q.delta, q.claimed_d), (n, 1, delta, d), "({r},{m})");
        assert_eq!(q.gate_angle, RationalAngle::turn_fraction(delta));
        assert_eq!(q.code.k(), q.css.c1().k() - q.css.c2_perp().k());
        if let Some(g) = exact {
            let u = allowed_uniform_angles(&q.css).unwrap();
            assert_eq!(u.weight_gcd, g, "({r},{m})");
            assert_eq!(g % delta, 0);
        }
    }
    // Δ is only a guaranteed divisor: RM(2,5) itself is divisible by 4
    let ws = weights(&plotkin(2, 5));
    assert_eq!(ws.iter().fold(0u64, |g, &w| gcd(g, w as u64)), 4);
    assert!(rm_css_family(3, 5).is_err());
    assert!(rm_css_family(0, 3).is_err());
}
