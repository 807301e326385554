mod common;

use common::*;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use transversal::angle::RationalAngle;
use transversal::bits::BitVec;
use transversal::catalog;
use transversal::classical::{rm_css_family, BinaryLinearCode, CssCode};
use transversal::clifford::{conjugate_by_local_cliffords, CliffordLabel, CliffordTableau, Matrix2};
use transversal::gate::{CoordinateGate, TransversalGateSpec};
use transversal::oracle::{DenseCaps, LogicalMatrix};
use transversal::pauli::pauli;
use transversal::transversal::{
    allowed_uniform_angles, check_clifford_transversal, check_diagonal_gate_css, classify_local_unitary,
    standardize_logical_triple, verify_dense, verify_gate, LocalUnitaryClass, LogicalAction, VerificationMethod,
    VerifyOptions, Witness,
};
use transversal::{Letter, StabilizerGroup};

const TOL: f64 = 1e-9;

fn angle(p: i64, q: u64) -> RationalAngle {
    RationalAngle::new(p, q).unwrap()
}

fn single_block_codes() -> Vec<StabilizerGroup> {
    vec![
        catalog::four_two_two(),
        catalog::five_qubit(),
        catalog::six_two_two(),
        catalog::steane(),
        catalog::shor(),
    ]
}

fn random_css<R: Rng>(n: usize, rng: &mut R) -> CssCode {
    loop {
        let rows: Vec<BitVec> = (0..rng.gen_range(1..=n))
            .map(|_| BitVec::from_bools(&(0..n).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>()))
            .collect();
        let c1 = BinaryLinearCode::span(n, &rows);
        if c1.k() == 0 {
            continue;
        }
        let sub: Vec<BitVec> = (0..rng.gen_range(0..c1.k()))
            .map(|_| {
                c1.rows()
                    .iter()
                    .filter(|_| rng.gen_bool(0.5))
                    .fold(BitVec::zeros(n), |acc, r| acc.xor(r))
            })
            .collect();
        let c2p = BinaryLinearCode::span(n, &sub);
        if c2p.k() < c1.k() {
            return CssCode::from_c2_perp(c1, c2p).unwrap();
        }
    }
}

fn random_angles<R: Rng>(n: usize, rng: &mut R) -> Vec<RationalAngle> {
    (0..n)
        .map(|_| {
            let q = [1u64, 2, 4, 8, 16][rng.gen_range(0..5)];
            angle(rng.gen_range(0..q as i64), q)
        })
        .collect()
}

fn span_words(rows: &[BitVec], n: usize) -> Vec<BitVec> {
    let mut out = vec![BitVec::zeros(n)];
    for r in rows {
        let more: Vec<BitVec> = out.iter().map(|v| v.xor(r)).collect();
        out.extend(more);
    }
    out
}

/// The diagonal verdict without coset representatives: every `v ∈ C1`
/// and `c ∈ C2⊥` must give `φ(v + c) = φ(v)`.
fn diagonal_oracle(c1: &[BitVec], c2p: &[BitVec], angles: &[RationalAngle]) -> bool {
    let n = angles.len();
    let q = angles
        .iter()
        .map(|a| a.denominator())
        .fold(1u64, |l, d| l / gcd(l, d) * d);
    let units: Vec<u64> = angles.iter().map(|a| a.numerator() * (q / a.denominator())).collect();
    let phase = |v: &BitVec| v.iter_ones().map(|l| units[l]).sum::<u64>() % q;
    let c2 = span_words(c2p, n);
    span_words(c1, n)
        .iter()
        .all(|v| c2.iter().all(|c| phase(&v.xor(c)) == phase(v)))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lm_mul(a: &LogicalMatrix, b: &LogicalMatrix) -> LogicalMatrix {
    let d = a.dim;
    let entries = (0..d * d)
        .map(|i| {
            let v: Complex64 = (0..d).map(|k| a.get(i / d, k) * b.get(k, i % d)).sum();
            (v.re, v.im)
        })
        .collect();
    LogicalMatrix { dim: d, entries }
}

fn mul2(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

#[test]
fn clifford_examples() {
    let steane = catalog::steane();
    let v = check_clifford_transversal(
        &steane,
        &TransversalGateSpec::uniform_clifford(7, CliffordLabel::hadamard()),
    )
    .unwrap();
    assert!(v.is_logical);
    match v.logical_action.unwrap() {
        LogicalAction::Clifford { name, .. } => assert_eq!(name.as_deref(), Some("H")),
        other => panic!("{other:?}"),
    }

    let v = check_clifford_transversal(&steane, &TransversalGateSpec::transversal_cnot(7)).unwrap();
    assert!(v.is_logical);
    match v.logical_action.unwrap() {
        LogicalAction::Clifford { name, .. } => assert_eq!(name.as_deref(), Some("CNOT")),
        other => panic!("{other:?}"),
    }

    let fifteen = rm_css_family(1, 4).unwrap().code;
    let v = check_clifford_transversal(
        &fifteen,
        &TransversalGateSpec::uniform_clifford(15, CliffordLabel::hadamard()),
    )
    .unwrap();
    assert!(!v.is_logical);
    match v.witness.unwrap() {
        Witness::Generator { generator, image, .. } => {
            assert!(generator.is_z_type());
            assert!(image.is_x_type() && !fifteen.contains_up_to_phase(&image));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn diagonal_examples() {
    let q15 = rm_css_family(1, 4).unwrap();
    let v = check_diagonal_gate_css(&q15.css, &[angle(1, 8); 15]).unwrap();
    assert!(v.is_logical);
    assert_eq!(v.method, VerificationMethod::CosetWeight);
    // diag(1, e^{-iπ/4}) up to global phase
    assert_eq!(
        v.logical_action,
        Some(LogicalAction::DiagonalPhases {
            phases: vec![angle(0, 1), angle(-1, 8)]
        })
    );

    let steane = CssCode::from_stabilizer(&catalog::steane()).unwrap();
    let v = check_diagonal_gate_css(&steane, &[angle(1, 8); 7]).unwrap();
    assert!(!v.is_logical);
    match v.witness.unwrap() {
        Witness::CosetPair {
            weight_difference,
            phase_difference,
            ..
        } => {
            assert_eq!(weight_difference.rem_euclid(8), 4);
            assert_eq!(phase_difference, angle(1, 2));
        }
        other => panic!("{other:?}"),
    }

    assert_eq!(allowed_uniform_angles(&q15.css).unwrap().fundamental, Some(angle(1, 8)));
    assert_eq!(allowed_uniform_angles(&steane).unwrap().fundamental, Some(angle(1, 4)));
    let q31 = rm_css_family(1, 5).unwrap();
    assert_eq!(
        allowed_uniform_angles(&q31.css).unwrap().fundamental,
        Some(angle(1, 16))
    );
}

#[test]
fn triple_examples() {
    let (a, b) = (pauli("XZZXI"), pauli("ZXXZI"));
    let c = a.multiply(&b).unwrap().times_i(1);
    let labels = standardize_logical_triple(&a, &b, &c).unwrap();
    assert_eq!(labels[4], CliffordLabel::IDENTITY);
    assert_eq!(labels[0], CliffordLabel::IDENTITY);
    assert_eq!(labels[1].x_image().letter, Letter::Z);
    assert_eq!(conjugate_by_local_cliffords(&a, &labels), pauli("XXXXI"));
    assert_eq!(conjugate_by_local_cliffords(&b, &labels), pauli("ZZZZI"));
    let gi = conjugate_by_local_cliffords(&c, &labels);
    assert_eq!(gi.unsigned(), pauli("YYYYI").unsigned());

    let (a, b) = (pauli("YYYY"), pauli("XXXX"));
    let labels = standardize_logical_triple(&a, &b, &pauli("ZZZZ")).unwrap();
    assert_eq!(conjugate_by_local_cliffords(&a, &labels), pauli("XXXX"));
    assert_eq!(conjugate_by_local_cliffords(&b, &labels), pauli("ZZZZ"));

    assert!(standardize_logical_triple(&pauli("XX"), &pauli("XZ"), &pauli("XY")).is_err());
    assert!(standardize_logical_triple(&pauli("XI"), &pauli("ZZ"), &pauli("YY")).is_err());
}

#[test]
fn local_unitary_examples() {
    let h = matrix2_of(&word_matrix("H"));
    assert_eq!(
        classify_local_unitary(&h).unwrap(),
        LocalUnitaryClass::Clifford {
            label: CliffordLabel::hadamard()
        }
    );

    // exp(i·0.3·(X+Y+Z)/√3)
    let t = 0.3f64;
    let s = t.sin() / 3f64.sqrt();
    let u: Matrix2 = [
        [Complex64::new(t.cos(), s), Complex64::new(s, s)],
        [Complex64::new(-s, s), Complex64::new(t.cos(), -s)],
    ];
    assert_eq!(classify_local_unitary(&u).unwrap(), LocalUnitaryClass::Generic);

    let tgate: Matrix2 = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [
            Complex64::new(0.0, 0.0),
            Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
        ],
    ];
    match classify_local_unitary(&tgate).unwrap() {
        LocalUnitaryClass::CliffordTimesAxisRotation { axis, angle } => {
            assert_eq!(axis, Letter::Z);
            assert!((angle - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
        }
        other => panic!("{other:?}"),
    }
    let not_unitary: Matrix2 = [[Complex64::new(1.0, 0.0); 2]; 2];
    assert!(classify_local_unitary(&not_unitary).is_err());
}

fn matrix2_of(m: &Mat) -> Matrix2 {
    [[m[0][0], m[0][1]], [m[1][0], m[1][1]]]
}

/// Symplectic vs dense on uniform, per-coordinate, permuted and multi-block
/// Clifford specs.
#[test]
fn symplectic_agrees_with_dense() {
    let mut r = rng(31);
    let mut pairs = 0;
    let mut logical = 0;
    for s in single_block_codes() {
        let n = s.n();
        for l in CliffordLabel::all() {
            assert_eq!(
                assert_agree(&s, &TransversalGateSpec::uniform_clifford(n, l)),
                VerificationMethod::Symplectic
            );
            pairs += 1;
        }
        for _ in 0..12 {
            let coords: Vec<CoordinateGate> = (0..n).map(|_| CoordinateGate::Clifford(random_label(&mut r))).collect();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut r);
            let spec = TransversalGateSpec::new(coords, r.gen_bool(0.5).then_some(perm)).unwrap();
            assert_agree(&s, &spec);
            pairs += 1;
        }
        // automorphisms make for logical permuted specs
        let mut cyc: Vec<usize> = (1..n).collect();
        cyc.push(0);
        let spec =
            TransversalGateSpec::new(vec![CoordinateGate::Clifford(CliffordLabel::IDENTITY); n], Some(cyc)).unwrap();
        assert_agree(&s, &spec);
        pairs += 1;
    }
    for s in [catalog::four_two_two(), catalog::five_qubit(), catalog::six_two_two()] {
        let n = s.n();
        for t in [
            CliffordTableau::cnot(2, 0, 1),
            CliffordTableau::cz(2, 0, 1),
            CliffordTableau::swap(2, 0, 1),
        ] {
            let spec = TransversalGateSpec::uniform(n, CoordinateGate::MultiBlock(t));
            let exact = verify_gate(&s, &spec, &VerifyOptions::default()).unwrap();
            logical += exact.is_logical as usize;
            assert_agree(&s, &spec);
            pairs += 1;
        }
    }
    for _ in 0..60 {
        let n = r.gen_range(2..=6);
        let s = StabilizerGroup::random(n, r.gen_range(0..n), &mut r);
        let spec = if r.gen_bool(0.3) {
            TransversalGateSpec::uniform_clifford(n, random_label(&mut r))
        } else {
            TransversalGateSpec::new(
                (0..n).map(|_| CoordinateGate::Clifford(random_label(&mut r))).collect(),
                None,
            )
            .unwrap()
        };
        logical += verify_gate(&s, &spec, &VerifyOptions::default()).unwrap().is_logical as usize;
        assert_agree(&s, &spec);
        pairs += 1;
    }
    assert!(pairs >= 200, "{pairs}");
    assert!(logical > 0);
}

/// Coset-weight vs dense (sparse path beyond 12 qubits).
#[test]
fn coset_weight_agrees_with_dense() {
    let mut r = rng(32);
    let mut codes: Vec<StabilizerGroup> = vec![
        catalog::four_two_two(),
        catalog::steane(),
        catalog::shor(),
        rm_css_family(1, 4).unwrap().code,
    ];
    for _ in 0..10 {
        let n = r.gen_range(2..=8);
        codes.push(random_css(n, &mut r).stabilizer());
    }
    let mut pairs = 0;
    let mut logical = 0;
    for s in &codes {
        let n = s.n();
        for q in 1..=16u64 {
            let spec = TransversalGateSpec::uniform_diagonal(n, RationalAngle::turn_fraction(q));
            assert_eq!(assert_agree(s, &spec), VerificationMethod::CosetWeight, "{s:?}");
            logical += verify_gate(s, &spec, &VerifyOptions::default()).unwrap().is_logical as usize;
            pairs += 1;
        }
        for _ in 0..4 {
            let coords = random_angles(n, &mut r)
                .into_iter()
                .map(CoordinateGate::Diagonal)
                .collect();
            assert_agree(s, &TransversalGateSpec::new(coords, None).unwrap());
            pairs += 1;
        }
    }
    assert!(pairs >= 200, "{pairs}");
    assert!(logical > 20);
}

/// Uniform `θ = 2πp/q` is logical exactly when it is a multiple of the
/// fundamental angle, i.e. when `p·g/q` is an integer.
#[test]
fn uniform_angles_are_multiples_of_the_fundamental() {
    let mut r = rng(33);
    let mut codes: Vec<CssCode> = [catalog::four_two_two(), catalog::steane(), catalog::shor()]
        .iter()
        .map(|s| CssCode::from_stabilizer(s).unwrap())
        .collect();
    for (rr, m) in [(1, 4), (1, 5), (2, 5)] {
        codes.push(rm_css_family(rr, m).unwrap().css);
    }
    codes.extend((0..10).map(|_| {
        let n = r.gen_range(2..=8);
        random_css(n, &mut r)
    }));
    for css in &codes {
        let g = allowed_uniform_angles(css).unwrap().weight_gcd;
        for q in 1..=32u64 {
            for p in (0..q).filter(|&p| gcd(p, q) == 1) {
                let theta = angle(p as i64, q);
                let v = check_diagonal_gate_css(css, &vec![theta; css.n()]).unwrap();
                let multiple = g == 0 || (p * g).is_multiple_of(q);
                assert_eq!(v.is_logical, multiple, "θ=2π·{theta}, g={g}");
            }
        }
    }
}

/// The diagonal verdict does not depend on the chosen coset representatives
/// or on the basis of `C2⊥`.
#[test]
fn diagonal_verdict_is_basis_independent() {
    let mut r = rng(34);
    let mut codes: Vec<CssCode> = [catalog::four_two_two(), catalog::steane(), catalog::shor()]
        .iter()
        .map(|s| CssCode::from_stabilizer(s).unwrap())
        .collect();
    codes.extend((0..30).map(|_| {
        let n = r.gen_range(2..=8);
        random_css(n, &mut r)
    }));
    for css in &codes {
        let n = css.n();
        // a different basis of C2⊥ from random invertible recombination
        let rows = css.c2_perp().rows();
        let mut alt: Vec<BitVec> = rows.to_vec();
        for i in 0..alt.len() {
            for j in 0..rows.len() {
                if i != j && r.gen_bool(0.5) {
                    let add = alt[j].clone();
                    alt[i].xor_assign(&add);
                }
            }
        }
        alt.shuffle(&mut r);
        let alt_css = CssCode::from_c2_perp(css.c1().clone(), BinaryLinearCode::new(n, alt.clone()).unwrap()).unwrap();
        for _ in 0..6 {
            let angles = if r.gen_bool(0.5) {
                vec![RationalAngle::turn_fraction([1u64, 2, 4, 8, 16][r.gen_range(0..5)]); n]
            } else {
                random_angles(n, &mut r)
            };
            let want = diagonal_oracle(css.c1().rows(), &alt, &angles);
            assert_eq!(check_diagonal_gate_css(css, &angles).unwrap().is_logical, want);
            assert_eq!(check_diagonal_gate_css(&alt_css, &angles).unwrap().is_logical, want);
        }
    }
}

/// If `U` and `V` are logical, the dense oracle sees `UV` as logical with
/// the product action.
#[test]
fn composition_of_logical_gates() {
    let mut checked = 0;
    for s in [
        catalog::four_two_two(),
        catalog::five_qubit(),
        catalog::steane(),
        catalog::six_two_two(),
    ] {
        let n = s.n();
        let mut gates: Vec<(Matrix2, LogicalMatrix)> = Vec::new();
        for l in CliffordLabel::all() {
            let v = verify_gate(
                &s,
                &TransversalGateSpec::uniform_clifford(n, l),
                &VerifyOptions::default(),
            )
            .unwrap();
            if v.is_logical {
                gates.push((l.matrix(), v.logical_action.unwrap().to_matrix().unwrap()));
            }
        }
        if CssCode::from_stabilizer(&s).is_some() {
            for q in [1u64, 2, 4, 8] {
                let a = RationalAngle::turn_fraction(q);
                let spec = TransversalGateSpec::uniform_diagonal(n, a);
                let v = verify_gate(&s, &spec, &VerifyOptions::default()).unwrap();
                if v.is_logical {
                    gates.push((
                        spec.coords()[0].matrix().unwrap(),
                        v.logical_action.unwrap().to_matrix().unwrap(),
                    ));
                }
            }
        }
        assert!(gates.len() >= 2);
        for (mu, au) in &gates {
            for (mv, av) in gates.iter().take(8) {
                let spec = TransversalGateSpec::uniform(n, CoordinateGate::Dense(mul2(mu, mv)));
                let d = verify_dense(&s, &spec, &DenseCaps::default()).unwrap();
                assert!(d.is_logical, "{s:?}");
                let got = d.logical_action.unwrap().to_matrix().unwrap();
                assert!(got.distance_up_to_phase(&lm_mul(au, av)) <= TOL);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn routing_and_errors() {
    let steane = catalog::steane();
    let spec = TransversalGateSpec::uniform(7, CoordinateGate::Dense(CliffordLabel::hadamard().matrix()));
    assert_eq!(
        verify_gate(&steane, &spec, &VerifyOptions::default()).unwrap().method,
        VerificationMethod::DenseOracle
    );
    let forced = VerifyOptions {
        force_dense: true,
        ..VerifyOptions::default()
    };
    let spec = TransversalGateSpec::uniform_clifford(7, CliffordLabel::hadamard());
    assert_eq!(
        verify_gate(&steane, &spec, &forced).unwrap().method,
        VerificationMethod::DenseOracle
    );
    assert!(verify_gate(
        &steane,
        &TransversalGateSpec::uniform_clifford(5, CliffordLabel::hadamard()),
        &forced
    )
    .is_err());
    // dense cap
    let q15 = rm_css_family(1, 4).unwrap().code;
    let dense_h = TransversalGateSpec::uniform(15, CoordinateGate::Dense(CliffordLabel::hadamard().matrix()));
    assert!(verify_gate(&q15, &dense_h, &VerifyOptions::default()).is_err());
}

fn arb_label() -> impl Strategy<Value = CliffordLabel> {
    (0usize..24).prop_map(|i| CliffordLabel::all().nth(i).unwrap())
}

fn rotation(axis: usize, psi: f64) -> Matrix2 {
    let (c, s) = (Complex64::new(psi.cos(), 0.0), Complex64::new(0.0, psi.sin()));
    let z = Complex64::new(0.0, 0.0);
    match axis {
        0 => [[c, s], [s, c]],
        1 => [
            [c, Complex64::new(psi.sin(), 0.0)],
            [Complex64::new(-psi.sin(), 0.0), c],
        ],
        _ => [[c + s, z], [z, c - s]],
    }
}

fn same_class(a: &LocalUnitaryClass, b: &LocalUnitaryClass) -> bool {
    match (a, b) {
        (LocalUnitaryClass::Clifford { .. }, LocalUnitaryClass::Clifford { .. }) => true,
        (LocalUnitaryClass::Generic, LocalUnitaryClass::Generic) => true,
        (
            LocalUnitaryClass::CliffordTimesAxisRotation { angle: x, .. },
            LocalUnitaryClass::CliffordTimesAxisRotation { angle: y, .. },
        ) => (x - y).abs() < 1e-9,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_is_clifford_invariant(
        l in arb_label(),
        lp in arb_label(),
        k in arb_label(),
        axis in 0usize..3,
        psi in 0.05f64..0.7,
        kind in 0usize..3,
        seed in any::<u64>(),
    ) {
        let u = match kind {
            0 => k.matrix(),
            1 => mul2(&k.matrix(), &rotation(axis, psi)),
            _ => random_unitary(&mut rng(seed)),
        };
        let before = classify_local_unitary(&u).unwrap();
        let after = classify_local_unitary(&mul2(&l.matrix(), &mul2(&u, &lp.matrix()))).unwrap();
        prop_assert!(same_class(&before, &after), "{before:?} vs {after:?}");
        if kind == 0 {
            prop_assert!(before.is_clifford());
        }
    }
}
