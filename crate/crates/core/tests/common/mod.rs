//! Independent oracles shared by the integration tests: small dense
//! matrices built by Kronecker products of hand-written 2x2 blocks.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use transversal::bits::BitVec;
use transversal::clifford::{CliffordLabel, Matrix2};
use transversal::gate::TransversalGateSpec;
use transversal::oracle::DenseCaps;
use transversal::transversal::{verify_dense, verify_gate, VerificationMethod, VerifyOptions};
use transversal::{Letter, PauliOperator, StabilizerGroup};

pub type Mat = Vec<Vec<Complex64>>;

pub const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
pub const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
pub const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub const VERDICT_TOL: f64 = 1e-9;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn letter_matrix(l: Letter) -> Mat {
    match l {
        Letter::I => vec![vec![ONE, ZERO], vec![ZERO, ONE]],
        Letter::X => vec![vec![ZERO, ONE], vec![ONE, ZERO]],
        Letter::Y => vec![vec![ZERO, -I], vec![I, ZERO]],
        Letter::Z => vec![vec![ONE, ZERO], vec![ZERO, -ONE]],
    }
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![ZERO; ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![ZERO; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == ZERO {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn adjoint(a: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn scale(a: &Mat, s: Complex64) -> Mat {
    a.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn max_diff(a: &Mat, b: &Mat) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x - y).norm()))
        .fold(0.0, f64::max)
}

pub fn is_zero(a: &Mat, tol: f64) -> bool {
    a.iter().flatten().all(|x| x.norm() <= tol)
}

/// Renders a Pauli from its signed string form only.
pub fn render(p: &PauliOperator) -> Mat {
    let s = p.to_string();
    let (sign, letters) = if let Some(r) = s.strip_prefix("+i") {
        (I, r)
    } else if let Some(r) = s.strip_prefix("-i") {
        (-I, r)
    } else if let Some(r) = s.strip_prefix('+') {
        (ONE, r)
    } else {
        (-ONE, s.strip_prefix('-').unwrap())
    };
    let m = letters
        .chars()
        .map(|c| letter_matrix(Letter::from_char(c).unwrap()))
        .reduce(|a, b| kron(&a, &b))
        .unwrap();
    scale(&m, sign)
}

pub fn matrix2(m: &Matrix2) -> Mat {
    m.iter().map(|r| r.to_vec()).collect()
}

/// `H` and `P = diag(1, i)` products for a label word, read left to right.
pub fn word_matrix(word: &str) -> Mat {
    let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let hm = vec![vec![h, h], vec![h, -h]];
    let pm = vec![vec![ONE, ZERO], vec![ZERO, I]];
    word.chars().fold(letter_matrix(Letter::I), |acc, c| match c {
        'H' => matmul(&acc, &hm),
        'P' => matmul(&acc, &pm),
        'I' => acc,
        _ => panic!("unexpected letter {c}"),
    })
}

pub fn random_pauli<R: Rng>(n: usize, rng: &mut R) -> PauliOperator {
    let letters: Vec<Letter> = (0..n)
        .map(|_| [Letter::I, Letter::X, Letter::Y, Letter::Z][rng.gen_range(0..4)])
        .collect();
    let p = PauliOperator::from_letters(&letters, 0);
    p.times_i(rng.gen_range(0..4))
}

pub fn random_label<R: Rng>(rng: &mut R) -> CliffordLabel {
    CliffordLabel::all().nth(rng.gen_range(0..24)).unwrap()
}

pub fn random_code<R: Rng>(n: usize, rng: &mut R) -> StabilizerGroup {
    let m = rng.gen_range(1..=n);
    StabilizerGroup::random(n, m, rng)
}

/// A random 2x2 unitary from Euler angles and a global phase.
pub fn random_unitary<R: Rng>(rng: &mut R) -> Matrix2 {
    let (a, b, c, g): (f64, f64, f64, f64) = (
        rng.gen_range(0.0..6.3),
        rng.gen_range(0.0..6.3),
        rng.gen_range(0.0..6.3),
        rng.gen_range(0.0..6.3),
    );
    let e = |t: f64| Complex64::from_polar(1.0, t);
    let (cs, sn) = ((b / 2.0).cos(), (b / 2.0).sin());
    [
        [e(g - (a + c) / 2.0) * cs, -e(g - (a - c) / 2.0) * sn],
        [e(g + (a - c) / 2.0) * sn, e(g + (a + c) / 2.0) * cs],
    ]
}

/// `R|v⟩` from the letter string; qubit 0 is the most significant bit.
pub fn apply(p: &PauliOperator, v: &[Complex64]) -> Vec<Complex64> {
    let s = p.to_string();
    let (sign, letters) = if let Some(r) = s.strip_prefix("+i") {
        (I, r)
    } else if let Some(r) = s.strip_prefix("-i") {
        (-I, r)
    } else if let Some(r) = s.strip_prefix('+') {
        (ONE, r)
    } else {
        (-ONE, s.strip_prefix('-').unwrap())
    };
    let n = letters.len();
    let mut out = vec![ZERO; v.len()];
    for (b, amp) in v.iter().enumerate() {
        let mut target = b;
        let mut phase = sign;
        for (j, c) in letters.chars().enumerate() {
            let bit = (b >> (n - 1 - j)) & 1;
            match c {
                'X' => target ^= 1 << (n - 1 - j),
                'Z' if bit == 1 => phase = -phase,
                'Y' => {
                    target ^= 1 << (n - 1 - j);
                    phase *= if bit == 0 { I } else { -I };
                }
                _ => {}
            }
        }
        out[target] += phase * amp;
    }
    out
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Supports of all nonidentity elements, as coordinate sets, with counts.
pub fn brute_support_counts(s: &StabilizerGroup) -> BTreeMap<BTreeSet<usize>, Vec<PauliOperator>> {
    let g = s.generators();
    let mut out: BTreeMap<BTreeSet<usize>, Vec<PauliOperator>> = BTreeMap::new();
    for mask in 1..1usize << g.len() {
        let e = (0..g.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(PauliOperator::identity(s.n()), |acc, i| acc.multiply(&g[i]).unwrap());
        let supp: BTreeSet<usize> = (0..s.n()).filter(|&j| e.letter(j) != Letter::I).collect();
        out.entry(supp).or_default().push(e);
    }
    out
}

pub fn brute_minimal(counts: &BTreeMap<BTreeSet<usize>, Vec<PauliOperator>>) -> Vec<BTreeSet<usize>> {
    counts
        .keys()
        .filter(|a| !counts.keys().any(|b| b != *a && b.is_subset(a)))
        .cloned()
        .collect()
}

/// `RM(r, m)` by the `(u | u+v)` recursion, independent of the monomial
/// construction. Coordinates follow the same point order (`v_1` leading).
pub fn plotkin(r: usize, m: usize) -> Vec<BitVec> {
    let n = 1usize << m;
    if r == 0 {
        return vec![BitVec::ones(n)];
    }
    if r == m {
        return (0..n).map(|j| BitVec::from_indices(n, [j])).collect();
    }
    let mut rows: Vec<BitVec> = plotkin(r, m - 1).iter().map(|u| u.concat(u)).collect();
    rows.extend(plotkin(r - 1, m - 1).iter().map(|v| BitVec::zeros(n / 2).concat(v)));
    rows
}

pub fn dim_formula(r: usize, m: usize) -> usize {
    (0..=r).map(|i| binom(m, i)).sum()
}

pub fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn gf2_rank(rows: &[BitVec]) -> usize {
    let mut basis: Vec<BitVec> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for b in &basis {
            if v.get(b.first_one().unwrap()) {
                v.xor_assign(b);
            }
        }
        if let Some(p) = v.first_one() {
            for b in basis.iter_mut() {
                if b.get(p) {
                    b.xor_assign(&v);
                }
            }
            basis.push(v);
        }
    }
    basis.len()
}

/// Weights of all codewords by Gray-code enumeration.
pub fn weights(rows: &[BitVec]) -> Vec<usize> {
    let n = rows[0].len();
    let mut cur = BitVec::zeros(n);
    let mut out = vec![0];
    for step in 1u64..1 << rows.len() {
        cur.xor_assign(&rows[step.trailing_zeros() as usize]);
        out.push(cur.count_ones());
    }
    out
}

/// Whether some nonzero vector of weight below `limit` has zero syndrome
/// under the parity checks `h` (at most 64 of them).
pub fn has_word_below(n: usize, h: &[BitVec], limit: usize) -> bool {
    let cols: Vec<u64> = (0..n)
        .map(|j| {
            h.iter()
                .enumerate()
                .fold(0u64, |acc, (i, row)| acc | (row.get(j) as u64) << i)
        })
        .collect();
    fn go(cols: &[u64], start: usize, syn: u64, depth: usize, left: usize) -> bool {
        if depth > 0 && syn == 0 {
            return true;
        }
        left > 0 && (start..cols.len()).any(|j| go(cols, j + 1, syn ^ cols[j], depth + 1, left - 1))
    }
    go(&cols, 0, 0, 0, limit - 1)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact route against the dense oracle; returns the exact route's method.
pub fn assert_agree(s: &StabilizerGroup, spec: &TransversalGateSpec) -> VerificationMethod {
    let exact = verify_gate(s, spec, &VerifyOptions::default()).unwrap();
    let dense = verify_dense(s, spec, &DenseCaps::default()).unwrap();
    assert_eq!(exact.is_logical, dense.is_logical, "{spec} on {s:?}");
    if exact.is_logical {
        let a = exact.logical_action.unwrap().to_matrix().unwrap();
        let b = dense.logical_action.unwrap().to_matrix().unwrap();
        let dist = a.distance_up_to_phase(&b);
        assert!(dist <= VERDICT_TOL, "{spec} on {s:?}: actions differ by {dist}");
    }
    exact.method
}
