//! Dense state-vector ground truth for small codes.
//!
//! Basis index bit `n−1−j` holds qubit `j`, so qubit 0 is the most
//! significant bit and `|q_0 q_1 … q_{n−1}⟩` reads left to right.

use std::collections::HashMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::angle::RationalAngle;
use crate::bits::BitVec;
use crate::clifford::CliffordTableau;
use crate::error::{Error, Result};
use crate::gate::{CoordinateGate, TransversalGateSpec};
use crate::pauli::{Letter, PauliOperator, Support};
use crate::stabilizer::{LogicalFrame, StabilizerGroup};
use crate::subcode::ProjectorTerms;

/// Entries below this magnitude count as zero.
pub const ZERO_TOL: f64 = 1e-10;
/// Verdict threshold for dense logical-gate checks.
pub const VERDICT_TOL: f64 = 1e-9;
/// Codeword orthonormality tolerance.
pub const ORTHO_TOL: f64 = 1e-10;
/// Projection norm a seed state must exceed.
pub const SEED_TOL: f64 = 1e-6;

pub const DEFAULT_MAX_DENSE_QUBITS: usize = 12;
pub const DEFAULT_MAX_SPARSE_QUBITS: usize = 20;
/// Cap for operator-level work (full matrices, Pauli expansion).
pub const MAX_EXPANSION_QUBITS: usize = 8;

type State = Vec<Complex64>;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

fn i_pow(k: u8) -> Complex64 {
    match k & 3 {
        0 => ONE,
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

fn cap(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::CapExceeded {
            what,
            needed_bits: n as u32,
            cap_bits: max as u32,
        });
    }
    Ok(())
}

/// Basis-index mask of a coordinate bit vector.
fn index_mask(bits: &BitVec) -> usize {
    let n = bits.len();
    bits.iter_ones().map(|j| 1usize << (n - 1 - j)).sum()
}

/// `P|ψ⟩` for `P = i^phase X^x Z^z`.
pub fn apply_pauli(p: &PauliOperator, psi: &[Complex64]) -> State {
    let x = index_mask(p.x());
    let z = index_mask(p.z());
    let ph = i_pow(p.phase());
    let mut out = vec![ZERO; psi.len()];
    for (u, &a) in psi.iter().enumerate() {
        if a == ZERO {
            continue;
        }
        let s = if (u & z).count_ones() % 2 == 1 { -ph } else { ph };
        out[u ^ x] = s * a;
    }
    out
}

fn norm(psi: &[Complex64]) -> f64 {
    psi.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// `∏ (I + g)/2 |ψ⟩`.
fn project(gens: &[PauliOperator], psi: &[Complex64]) -> State {
    let mut v = psi.to_vec();
    for g in gens {
        let gv = apply_pauli(g, &v);
        for (a, b) in v.iter_mut().zip(gv) {
            *a = (*a + b) * 0.5;
        }
    }
    v
}

/// A `2^n × 2^n` complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseOperator {
    pub fn zeros(n: usize) -> Self {
        DenseOperator {
            n,
            data: vec![ZERO; 1 << (2 * n)],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseOperator::zeros(n);
        let d = m.dim();
        for i in 0..d {
            m.data[i * d + i] = ONE;
        }
        m
    }

    /// Columns `op |e_u⟩`.
    pub fn from_columns(n: usize, mut column: impl FnMut(&[Complex64]) -> State) -> Self {
        let d = 1usize << n;
        let mut m = DenseOperator::zeros(n);
        let mut e = vec![ZERO; d];
        for u in 0..d {
            e[u] = ONE;
            let col = column(&e);
            e[u] = ZERO;
            for (v, a) in col.into_iter().enumerate() {
                m.data[v * d + u] = a;
            }
        }
        m
    }

    pub fn from_pauli(p: &PauliOperator) -> Self {
        DenseOperator::from_columns(p.n(), |e| apply_pauli(p, e))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    pub fn matmul(&self, other: &DenseOperator) -> DenseOperator {
        let d = self.dim();
        let mut out = DenseOperator::zeros(self.n);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * d..(k + 1) * d];
                for (o, b) in out.data[i * d..(i + 1) * d].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &DenseOperator, s: Complex64) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += s * b;
        }
    }

    pub fn scale(&self, s: Complex64) -> DenseOperator {
        DenseOperator {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn adjoint(&self) -> DenseOperator {
        let d = self.dim();
        let mut out = DenseOperator::zeros(self.n);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn apply(&self, psi: &[Complex64]) -> State {
        let d = self.dim();
        (0..d)
            .map(|i| self.data[i * d..(i + 1) * d].iter().zip(psi).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Traces out every qubit outside `keep`.
    pub fn partial_trace(&self, keep: &Support) -> DenseOperator {
        let n = self.n;
        let kept = keep.coords();
        let traced = keep.complement().coords();
        let kn = kept.len();
        let spread = |bits: usize, coords: &[usize]| -> usize {
            let w = coords.len();
            coords
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> (w - 1 - i) & 1 == 1)
                .map(|(_, &q)| 1usize << (n - 1 - q))
                .sum()
        };
        let mut out = DenseOperator::zeros(kn);
        let kd = 1usize << kn;
        for a in 0..kd {
            for b in 0..kd {
                let (ra, rb) = (spread(a, &kept), spread(b, &kept));
                let mut s = ZERO;
                for t in 0..1usize << traced.len() {
                    let rt = spread(t, &traced);
                    s += self.get(ra | rt, rb | rt);
                }
                out.data[a * kd + b] = s;
            }
        }
        out
    }
}

/// `P_Q = ∏ (I + g)/2` as a dense matrix.
pub fn projector_dense(s: &StabilizerGroup) -> Result<DenseOperator> {
    cap("dense projector", s.n(), DEFAULT_MAX_DENSE_QUBITS)?;
    Ok(DenseOperator::from_columns(s.n(), |e| project(s.generators(), e)))
}

/// `tr_ω̄ P_Q`, rescaled to the projector `ρ_ω`.
pub fn partial_trace_projector(s: &StabilizerGroup, omega: &Support) -> Result<DenseOperator> {
    let t = projector_dense(s)?.partial_trace(omega);
    let tr = t.trace().re;
    let tr2 = t.matmul(&t).trace().re;
    Ok(t.scale(Complex64::new(tr / tr2, 0.0)))
}

/// `(1/B_ω) Σ terms` rendered densely.
pub fn render_projector_terms(terms: &ProjectorTerms) -> DenseOperator {
    let n = terms.omega.len();
    let mut out = DenseOperator::zeros(n);
    for t in &terms.terms {
        out.add_scaled(
            &DenseOperator::from_pauli(t),
            Complex64::new(1.0 / terms.b_omega as f64, 0.0),
        );
    }
    out
}

/// Orthonormal codewords `|x̄⟩` labelled by `Z̄` eigenvalues.
#[derive(Clone, Debug)]
pub struct CodewordBasis {
    pub n: usize,
    pub k: usize,
    /// `vectors[x]` is `|x̄⟩`; logical qubit 0 is the most significant bit of `x`.
    pub vectors: Vec<State>,
}

impl CodewordBasis {
    /// Largest deviation from orthonormality.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate() {
                let want = if i == j { ONE } else { ZERO };
                worst = worst.max((inner(a, b) - want).norm());
            }
        }
        worst
    }

    /// `Σ_x |x̄⟩⟨x̄|`.
    pub fn projector(&self) -> DenseOperator {
        DenseOperator::from_columns(self.n, |e| {
            let mut out = vec![ZERO; e.len()];
            for v in &self.vectors {
                let c = inner(v, e);
                for (o, a) in out.iter_mut().zip(v) {
                    *o += c * a;
                }
            }
            out
        })
    }
}

/// Codewords via seed projection: the first computational basis state
/// (lexicographic) with nonzero projection `P_Q ∏(I+Z̄_i)/2 |s⟩` becomes
/// `|0̄⟩`, and `|x̄⟩ = X̄^x |0̄⟩`.
pub fn codewords(s: &StabilizerGroup, frame: &LogicalFrame) -> Result<CodewordBasis> {
    codewords_capped(s, frame, DEFAULT_MAX_DENSE_QUBITS)
}

pub fn codewords_capped(s: &StabilizerGroup, frame: &LogicalFrame, max_qubits: usize) -> Result<CodewordBasis> {
    let n = s.n();
    if css_unsigned(s) && n <= DEFAULT_MAX_SPARSE_QUBITS.max(max_qubits) {
        let sparse = sparse_css_codewords(s, frame)?;
        return Ok(CodewordBasis {
            n,
            k: frame.k(),
            vectors: sparse.iter().map(|v| densify(n, v)).collect(),
        });
    }
    cap("dense codewords", n, max_qubits)?;
    let d = 1usize << n;
    let mut gens: Vec<PauliOperator> = frame.z.clone();
    gens.extend_from_slice(s.generators());
    let mut zero = None;
    let mut e = vec![ZERO; d];
    for seed in 0..d {
        e[seed] = ONE;
        let v = project(&gens, &e);
        e[seed] = ZERO;
        let nv = norm(&v);
        if nv > SEED_TOL {
            zero = Some(v.into_iter().map(|a| a / nv).collect::<State>());
            break;
        }
    }
    let zero = zero.ok_or(Error::ZeroProjection)?;
    let k = frame.k();
    let vectors = (0..1usize << k)
        .map(|x| {
            let mut v = zero.clone();
            for i in (0..k).filter(|i| x >> (k - 1 - i) & 1 == 1) {
                v = apply_pauli(&frame.x[i], &v);
            }
            v
        })
        .collect();
    Ok(CodewordBasis { n, k, vectors })
}

fn densify(n: usize, sparse: &[(usize, Complex64)]) -> State {
    let mut v = vec![ZERO; 1 << n];
    for &(u, a) in sparse {
        v[u] = a;
    }
    v
}

/// CSS-form with every generator carrying a `+` sign.
pub(crate) fn css_unsigned(s: &StabilizerGroup) -> bool {
    s.is_css() && s.generators().iter().all(|g| g.sign_exp() == 0)
}

type SparseState = Vec<(usize, Complex64)>;

/// `|x̄⟩ ∝ X̄^x Σ_{c ∈ C2⊥} |c⟩` for unsigned CSS groups.
fn sparse_css_codewords(s: &StabilizerGroup, frame: &LogicalFrame) -> Result<Vec<SparseState>> {
    cap("sparse codewords", s.n(), DEFAULT_MAX_SPARSE_QUBITS)?;
    let xs: Vec<usize> = s
        .generators()
        .iter()
        .filter(|g| g.is_x_type() && !g.is_identity_up_to_phase())
        .map(|g| index_mask(g.x()))
        .collect();
    cap("sparse codeword terms", xs.len(), 26)?;
    let mut zero = Vec::with_capacity(1 << xs.len());
    let mut cur = 0usize;
    for step in 0u64..1 << xs.len() {
        if step > 0 {
            cur ^= xs[step.trailing_zeros() as usize];
        }
        zero.push(cur);
    }
    zero.sort_unstable();
    let amp = Complex64::new(1.0 / (zero.len() as f64).sqrt(), 0.0);
    let k = frame.k();
    Ok((0..1usize << k)
        .map(|x| {
            let shift: usize = (0..k)
                .filter(|i| x >> (k - 1 - i) & 1 == 1)
                .fold(0, |acc, i| acc ^ index_mask(frame.x[i].x()));
            let mut v: SparseState = zero.iter().map(|&c| (c ^ shift, amp)).collect();
            v.sort_unstable_by_key(|e| e.0);
            v
        })
        .collect())
}

fn single_qubit_operator(m: &crate::clifford::Matrix2) -> DenseOperator {
    DenseOperator {
        n: 1,
        data: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
    }
}

/// Dense `U` with `U† R U` given by the tableau images.
pub fn clifford_dense(t: &CliffordTableau) -> Result<DenseOperator> {
    let r = t.n();
    cap("dense Clifford", r, DEFAULT_MAX_DENSE_QUBITS)?;
    let d = 1usize << r;
    let mut e = vec![ZERO; d];
    let mut zero = None;
    for seed in 0..d {
        e[seed] = ONE;
        let v = project(t.z_images(), &e);
        e[seed] = ZERO;
        let nv = norm(&v);
        if nv > SEED_TOL {
            zero = Some(v.into_iter().map(|a| a / nv).collect::<State>());
            break;
        }
    }
    let zero = zero.ok_or(Error::ZeroProjection)?;
    // V|x⟩ = img(X)^x V|0⟩ conjugates X_i, Z_i to their images; U = V†.
    let mut v = DenseOperator::zeros(r);
    for x in 0..d {
        let mut col = zero.clone();
        for i in (0..r).filter(|i| x >> (r - 1 - i) & 1 == 1) {
            col = apply_pauli(&t.x_images()[i], &col);
        }
        for (row, a) in col.into_iter().enumerate() {
            v.data[row * d + x] = a;
        }
    }
    Ok(v.adjoint())
}

/// Applies an operator on `qubits` (in order) of an `n`-qubit state.
fn apply_local(psi: &mut [Complex64], n: usize, qubits: &[usize], op: &DenseOperator) {
    let r = qubits.len();
    let d = 1usize << r;
    let masks: Vec<usize> = qubits.iter().map(|&q| 1usize << (n - 1 - q)).collect();
    let all: usize = masks.iter().sum();
    let offsets: Vec<usize> = (0..d)
        .map(|l| (0..r).filter(|i| l >> (r - 1 - i) & 1 == 1).map(|i| masks[i]).sum())
        .collect();
    let mut buf = vec![ZERO; d];
    for base in 0..psi.len() {
        if base & all != 0 {
            continue;
        }
        for (b, off) in buf.iter_mut().zip(&offsets) {
            *b = psi[base | off];
        }
        for (row, off) in offsets.iter().enumerate() {
            psi[base | off] = (0..d).map(|c| op.data[row * d + c] * buf[c]).sum();
        }
    }
}

/// Per-coordinate dense operators of a spec.
fn local_operators(spec: &TransversalGateSpec) -> Result<Vec<DenseOperator>> {
    let mut cache: HashMap<String, DenseOperator> = HashMap::new();
    spec.coords()
        .iter()
        .map(|g| match g {
            CoordinateGate::MultiBlock(t) => {
                let key = t.to_string();
                if let Some(op) = cache.get(&key) {
                    return Ok(op.clone());
                }
                let op = clifford_dense(t)?;
                cache.insert(key, op.clone());
                Ok(op)
            }
            other => {
                let m = other.matrix().expect("single-block descriptor");
                check_unitary(&m)?;
                Ok(single_qubit_operator(&m))
            }
        })
        .collect()
}

/// `‖u†u − I‖_max`, rejected above `1e−9`.
pub fn check_unitary(m: &crate::clifford::Matrix2) -> Result<()> {
    let mut dev: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let s: Complex64 = (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
            let want = if i == j { ONE } else { ZERO };
            dev = dev.max((s - want).norm());
        }
    }
    if dev > VERDICT_TOL {
        return Err(Error::NotUnitary(dev));
    }
    Ok(())
}

/// `U|ψ⟩ = (⊗ U_j) P_π |ψ⟩`.
pub fn apply_spec(spec: &TransversalGateSpec, psi: &[Complex64]) -> Result<State> {
    let ops = local_operators(spec)?;
    Ok(apply_with(spec, &ops, psi))
}

fn apply_with(spec: &TransversalGateSpec, ops: &[DenseOperator], psi: &[Complex64]) -> State {
    let total = spec.total_qubits();
    let mut v: State = if spec.permutation().is_some() {
        // new qubit q carries old qubit π(q)
        let src: Vec<usize> = (0..total).map(|q| spec.permuted_qubit(q)).collect();
        let mut out = vec![ZERO; psi.len()];
        for (u, &a) in psi.iter().enumerate() {
            let mut w = 0usize;
            for (q, &s) in src.iter().enumerate() {
                if u >> (total - 1 - s) & 1 == 1 {
                    w |= 1 << (total - 1 - q);
                }
            }
            out[w] = a;
        }
        out
    } else {
        psi.to_vec()
    };
    let r = spec.blocks();
    for (j, op) in ops.iter().enumerate() {
        let qubits: Vec<usize> = (0..r).map(|b| r * j + b).collect();
        apply_local(&mut v, total, &qubits, op);
    }
    v
}

/// The full `2^N × 2^N` matrix of a spec.
pub fn spec_dense(spec: &TransversalGateSpec) -> Result<DenseOperator> {
    cap("dense gate matrix", spec.total_qubits(), MAX_EXPANSION_QUBITS)?;
    let ops = local_operators(spec)?;
    Ok(DenseOperator::from_columns(spec.total_qubits(), |e| {
        apply_with(spec, &ops, e)
    }))
}

/// A `d × d` matrix reported up to global phase.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LogicalMatrix {
    pub dim: usize,
    /// Row-major `(re, im)` pairs, rotated so the first entry with
    /// magnitude above `1e−6` is real positive.
    pub entries: Vec<(f64, f64)>,
}

impl LogicalMatrix {
    /// The matrix of `op` up to global phase.
    pub fn from_operator(op: &DenseOperator) -> Self {
        let d = op.dim();
        LogicalMatrix::from_complex(d, (0..d * d).map(|i| op.get(i / d, i % d)).collect())
    }

    pub(crate) fn from_complex(dim: usize, mut m: Vec<Complex64>) -> Self {
        if let Some(first) = m.iter().find(|a| a.norm() > SEED_TOL).copied() {
            let rot = first.conj() / first.norm();
            for a in m.iter_mut() {
                *a *= rot;
                // 12 decimals keeps reports byte-stable across platforms
                a.re = if a.re.abs() < ZERO_TOL {
                    0.0
                } else {
                    (a.re * 1e12).round() / 1e12 + 0.0
                };
                a.im = if a.im.abs() < ZERO_TOL {
                    0.0
                } else {
                    (a.im * 1e12).round() / 1e12 + 0.0
                };
            }
        }
        LogicalMatrix {
            dim,
            entries: m.into_iter().map(|a| (a.re, a.im)).collect(),
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        let (re, im) = self.entries[row * self.dim + col];
        Complex64::new(re, im)
    }

    /// `max |a − e^{iφ} b|` minimised over the phase aligning the largest entry.
    pub fn distance_up_to_phase(&self, other: &LogicalMatrix) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        let (i, _) = self
            .entries
            .iter()
            .enumerate()
            .max_by(|a, b| {
                Complex64::new(a.1 .0, a.1 .1)
                    .norm()
                    .total_cmp(&Complex64::new(b.1 .0, b.1 .1).norm())
            })
            .unwrap();
        let a = Complex64::new(self.entries[i].0, self.entries[i].1);
        let b = Complex64::new(other.entries[i].0, other.entries[i].1);
        if b.norm() < SEED_TOL {
            return f64::INFINITY;
        }
        let rot = a / b * (b.norm() / a.norm());
        (0..self.dim * self.dim)
            .map(|k| {
                let x = Complex64::new(self.entries[k].0, self.entries[k].1);
                let y = Complex64::new(other.entries[k].0, other.entries[k].1);
                (x - y * rot).norm()
            })
            .fold(0.0, f64::max)
    }

    pub fn to_2x2(&self) -> Option<crate::clifford::Matrix2> {
        (self.dim == 2).then(|| [[self.get(0, 0), self.get(0, 1)], [self.get(1, 0), self.get(1, 1)]])
    }
}

/// Outcome of a dense logical-gate check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseCheck {
    pub is_logical: bool,
    /// `‖(I − P_Q) U P_Q‖_F`.
    pub deviation: f64,
    /// `⟨x̄|U|ȳ⟩`, up to global phase.
    pub action: LogicalMatrix,
}

fn summarise(codewords: &[State], images: &[State]) -> DenseCheck {
    let d = codewords.len();
    let mut m = vec![ZERO; d * d];
    let mut dev2 = 0.0;
    for (y, img) in images.iter().enumerate() {
        let mut resid = img.clone();
        for (x, cw) in codewords.iter().enumerate() {
            let c = inner(cw, img);
            m[x * d + y] = c;
            for (r, a) in resid.iter_mut().zip(cw) {
                *r -= c * a;
            }
        }
        dev2 += norm(&resid).powi(2);
    }
    let deviation = dev2.sqrt();
    DenseCheck {
        is_logical: deviation <= VERDICT_TOL,
        deviation,
        action: LogicalMatrix::from_complex(d, m),
    }
}

/// Sparse variant for unsigned CSS groups under diagonal gates.
fn summarise_sparse(codewords: &[SparseState], images: &[SparseState]) -> DenseCheck {
    let d = codewords.len();
    let index: Vec<HashMap<usize, Complex64>> = codewords.iter().map(|v| v.iter().copied().collect()).collect();
    let mut m = vec![ZERO; d * d];
    let mut dev2 = 0.0;
    for (y, img) in images.iter().enumerate() {
        let coeffs: Vec<Complex64> = index
            .iter()
            .map(|cw| img.iter().filter_map(|(u, a)| cw.get(u).map(|b| b.conj() * a)).sum())
            .collect();
        for (x, c) in coeffs.iter().enumerate() {
            m[x * d + y] = *c;
        }
        let mut resid: HashMap<usize, Complex64> = img.iter().copied().collect();
        for (cw, c) in codewords.iter().zip(&coeffs) {
            for (u, a) in cw {
                *resid.entry(*u).or_insert(ZERO) -= c * a;
            }
        }
        dev2 += resid.values().map(|a| a.norm_sqr()).sum::<f64>();
    }
    let deviation = dev2.sqrt();
    DenseCheck {
        is_logical: deviation <= VERDICT_TOL,
        deviation,
        action: LogicalMatrix::from_complex(d, m),
    }
}

/// Caps for [`verify_logical_dense`].
#[derive(Clone, Copy, Debug)]
pub struct DenseCaps {
    pub max_dense_qubits: usize,
    pub max_sparse_qubits: usize,
}

impl Default for DenseCaps {
    fn default() -> Self {
        DenseCaps {
            max_dense_qubits: DEFAULT_MAX_DENSE_QUBITS,
            max_sparse_qubits: DEFAULT_MAX_SPARSE_QUBITS,
        }
    }
}

/// Checks `U P_Q = P_Q U P_Q` on the codeword basis of `S^{⊗r}` in the
/// block-major frame, returning the logical action up to global phase.
pub fn verify_logical_dense(s: &StabilizerGroup, spec: &TransversalGateSpec, caps: &DenseCaps) -> Result<DenseCheck> {
    if spec.n() != s.n() {
        return Err(Error::LengthMismatch(s.n(), spec.n()));
    }
    let r = spec.blocks();
    let total = spec.total_qubits();
    let group = s.tensor_power(r)?;
    let frame = s.logical_frame().tensor_power(s.n(), r);
    if let Some(angles) = spec.diagonal_angles() {
        if css_unsigned(s) && r == 1 && total <= caps.max_sparse_qubits {
            let cws = sparse_css_codewords(s, &frame)?;
            let phase = |u: usize| -> Complex64 {
                let a = angles
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| u >> (total - 1 - j) & 1 == 1)
                    .fold(RationalAngle::ZERO, |acc, (_, a)| acc + *a);
                Complex64::from_polar(1.0, a.radians())
            };
            let images: Vec<SparseState> = cws
                .iter()
                .map(|v| v.iter().map(|&(u, a)| (u, phase(u) * a)).collect())
                .collect();
            return Ok(summarise_sparse(&cws, &images));
        }
    }
    cap("dense verification", total, caps.max_dense_qubits)?;
    let cws = codewords_capped(&group, &frame, caps.max_dense_qubits)?;
    let ops = local_operators(spec)?;
    let images: Vec<State> = cws.vectors.iter().map(|v| apply_with(spec, &ops, v)).collect();
    Ok(summarise(&cws.vectors, &images))
}

/// `c_R = 2^{−n} tr(R† op)` for every Pauli with `|c_R| ≥ 1e−10`, in
/// lexicographic letter order (`I < X < Y < Z`).
pub fn pauli_expand(op: &DenseOperator) -> Result<Vec<(PauliOperator, Complex64)>> {
    let n = op.n();
    cap("Pauli expansion", n, MAX_EXPANSION_QUBITS)?;
    let d = op.dim();
    let norm = 1.0 / d as f64;
    let mut out = Vec::new();
    let mut letters = vec![Letter::I; n];
    for code in 0..1usize << (2 * n) {
        for (j, l) in letters.iter_mut().enumerate() {
            *l = match code >> (2 * (n - 1 - j)) & 3 {
                0 => Letter::I,
                1 => Letter::X,
                2 => Letter::Y,
                _ => Letter::Z,
            };
        }
        let p = PauliOperator::from_letters(&letters, 0);
        let x = index_mask(p.x());
        let z = index_mask(p.z());
        let ph = i_pow(p.phase());
        // R|u⟩ = ph (−1)^{z·u} |u ⊕ x⟩
        let tr: Complex64 = (0..d)
            .map(|u| {
                let s = if (u & z).count_ones() % 2 == 1 { -ph } else { ph };
                s.conj() * op.get(u ^ x, u)
            })
            .sum();
        let c = tr * norm;
        if c.norm() >= ZERO_TOL {
            out.push((p, c));
        }
    }
    Ok(out)
}

/// One output term of the extraction procedure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtractedTerm {
    pub pauli: PauliOperator,
    pub coefficient: (f64, f64),
    /// The logical Pauli it represents, from the frame (exact phase).
    pub logical: PauliOperator,
}

/// Expands `P_Q (U α U†) P_Q` and keeps the terms in `C(S) \ S` whose
/// support lies inside `supp(α)`.
pub fn extract_logical_representatives(
    s: &StabilizerGroup,
    frame: &LogicalFrame,
    spec: &TransversalGateSpec,
    alpha: &PauliOperator,
) -> Result<Vec<ExtractedTerm>> {
    if spec.blocks() != 1 {
        return Err(Error::UnsupportedGate("extraction works on a single block".into()));
    }
    if alpha.n() != s.n() || spec.n() != s.n() {
        return Err(Error::LengthMismatch(s.n(), alpha.n()));
    }
    cap("extraction", s.n(), MAX_EXPANSION_QUBITS)?;
    let pq = projector_dense(s)?;
    let u = spec_dense(spec)?;
    let beta = u.matmul(&DenseOperator::from_pauli(alpha)).matmul(&u.adjoint());
    let op = pq.matmul(&beta).matmul(&pq);
    let supp = alpha.support();
    Ok(pauli_expand(&op)?
        .into_iter()
        .filter(|(p, _)| p.support().is_subset_of(&supp) && !p.is_identity_up_to_phase())
        .filter(|(p, _)| s.in_centralizer(p) && !s.contains_up_to_phase(p))
        .map(|(p, c)| ExtractedTerm {
            logical: frame.decompose(s, &p).expect("centralizer element"),
            pauli: p,
            coefficient: (c.re, c.im),
        })
        .collect())
}
