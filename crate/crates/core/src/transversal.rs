//! Deciding whether a transversal gate is logical, by the cheapest exact
//! route, and describing what it does to the encoded qubits.
//!
//! Routes: all-Clifford specs are checked symplectically, diagonal specs on
//! unsigned CSS groups by coset weights, everything else by the dense oracle.

use num_complex::Complex64;
use serde::Serialize;

use crate::angle::RationalAngle;
use crate::classical::{gcd, CssCode};
use crate::clifford::{CliffordLabel, CliffordTableau, Matrix2, SignedLetter};
use crate::error::{Error, Result};
use crate::gate::TransversalGateSpec;
use crate::oracle::{self, DenseCaps, DenseOperator, LogicalMatrix, VERDICT_TOL};
use crate::pauli::{Letter, PauliOperator};
use crate::stabilizer::StabilizerGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerificationMethod {
    Symplectic,
    CosetWeight,
    DenseOracle,
}

/// Classes of single-qubit unitaries up to global phase.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum LocalUnitaryClass {
    Clifford {
        label: CliffordLabel,
    },
    /// `L·exp(iψR)` with `R` the Pauli axis fixed up to sign; `angle` is the
    /// rotation folded into `[0, π/4]` radians.
    CliffordTimesAxisRotation {
        axis: Letter,
        #[serde(serialize_with = "rounded")]
        angle: f64,
    },
    Generic,
}

impl LocalUnitaryClass {
    pub fn is_clifford(&self) -> bool {
        matches!(self, LocalUnitaryClass::Clifford { .. })
    }
}

/// What a logical gate does to the encoded qubits, up to global phase.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LogicalAction {
    /// Heisenberg images of the logical `X_i` and `Z_i`.
    Clifford {
        x_images: Vec<PauliOperator>,
        z_images: Vec<PauliOperator>,
        name: Option<String>,
    },
    /// `U|b̄⟩ = e^{iφ_b}|b̄⟩` with `φ_0 = 0`; `b_0` is the most significant bit.
    DiagonalPhases { phases: Vec<RationalAngle> },
    Matrix {
        matrix: LogicalMatrix,
        #[serde(serialize_with = "rounded")]
        deviation: f64,
        class: Option<LocalUnitaryClass>,
    },
}

impl LogicalAction {
    pub fn tableau(&self) -> Option<CliffordTableau> {
        match self {
            LogicalAction::Clifford { x_images, z_images, .. } => {
                CliffordTableau::from_images(x_images.clone(), z_images.clone()).ok()
            }
            _ => None,
        }
    }

    /// The logical matrix up to global phase.
    pub fn to_matrix(&self) -> Result<LogicalMatrix> {
        match self {
            LogicalAction::Clifford { .. } => {
                let t = self
                    .tableau()
                    .ok_or(Error::UnsupportedGate("logical images are not a Clifford".into()))?;
                Ok(LogicalMatrix::from_operator(&oracle::clifford_dense(&t)?))
            }
            LogicalAction::DiagonalPhases { phases } => {
                let d = phases.len();
                let mut m = vec![Complex64::new(0.0, 0.0); d * d];
                for (i, a) in phases.iter().enumerate() {
                    m[i * d + i] = Complex64::from_polar(1.0, a.radians());
                }
                Ok(LogicalMatrix::from_complex(d, m))
            }
            LogicalAction::Matrix { matrix, .. } => Ok(matrix.clone()),
        }
    }

    /// Whether the action lies in the logical Clifford group.
    pub fn is_clifford(&self) -> bool {
        match self {
            LogicalAction::Clifford { .. } => true,
            LogicalAction::DiagonalPhases { phases } => diagonal_is_clifford(phases),
            LogicalAction::Matrix { matrix, class, .. } => match class {
                Some(c) => c.is_clifford(),
                None => matrix_is_clifford(matrix),
            },
        }
    }

    /// Short human-readable description.
    pub fn describe(&self) -> String {
        match self {
            LogicalAction::Clifford { name: Some(n), .. } => n.clone(),
            LogicalAction::Clifford { x_images, z_images, .. } => {
                let xs: Vec<String> = x_images.iter().map(|p| p.to_string()).collect();
                let zs: Vec<String> = z_images.iter().map(|p| p.to_string()).collect();
                format!("X -> [{}], Z -> [{}]", xs.join(", "), zs.join(", "))
            }
            LogicalAction::DiagonalPhases { phases } => {
                let ps: Vec<String> = phases.iter().map(|p| format!("2π·{p}")).collect();
                format!("diag phases [{}]", ps.join(", "))
            }
            LogicalAction::Matrix {
                class: Some(LocalUnitaryClass::Clifford { label }),
                ..
            } => label.common_name().unwrap_or(label.word()).to_string(),
            LogicalAction::Matrix { matrix, .. } => format!("{}x{} matrix", matrix.dim, matrix.dim),
        }
    }
}

/// Evidence that a candidate is not logical.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A stabilizer generator (1-based) whose image leaves the group.
    Generator {
        index: usize,
        generator: PauliOperator,
        image: PauliOperator,
    },
    /// `a + c` picks up a different phase from `a` within one coset.
    CosetPair {
        coset: String,
        a: String,
        c: String,
        weight_difference: i64,
        phase_difference: RationalAngle,
    },
    Dense {
        #[serde(serialize_with = "rounded")]
        deviation: f64,
    },
}

/// Reports keep 12 decimals so floating-point noise does not leak into them.
fn rounded<S: serde::Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(if x.abs() < oracle::ZERO_TOL {
        0.0
    } else {
        (x * 1e12).round() / 1e12
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationVerdict {
    /// The gate that was tested.
    pub candidate: String,
    pub is_logical: bool,
    pub method: VerificationMethod,
    pub logical_action: Option<LogicalAction>,
    pub witness: Option<Witness>,
}

impl VerificationVerdict {
    fn pass(candidate: String, method: VerificationMethod, action: LogicalAction) -> Self {
        VerificationVerdict {
            candidate,
            is_logical: true,
            method,
            logical_action: Some(action),
            witness: None,
        }
    }

    fn fail(candidate: String, method: VerificationMethod, witness: Witness) -> Self {
        VerificationVerdict {
            candidate,
            is_logical: false,
            method,
            logical_action: None,
            witness: Some(witness),
        }
    }
}

/// Symplectic check of an all-Clifford spec on `S^{⊗r}`: every generator's
/// image must be in the group with its exact sign.
pub fn check_clifford_transversal(s: &StabilizerGroup, spec: &TransversalGateSpec) -> Result<VerificationVerdict> {
    if spec.n() != s.n() {
        return Err(Error::LengthMismatch(s.n(), spec.n()));
    }
    if !spec.is_all_clifford() {
        return Err(Error::UnsupportedGate(
            "non-Clifford descriptors need the dense oracle".into(),
        ));
    }
    let method = VerificationMethod::Symplectic;
    let r = spec.blocks();
    let group = s.tensor_power(r)?;
    for (i, g) in group.generators().iter().enumerate() {
        let image = spec.conjugate(g)?;
        if !group.contains(&image) {
            let w = Witness::Generator {
                index: i + 1,
                generator: g.clone(),
                image,
            };
            return Ok(VerificationVerdict::fail(spec.to_string(), method, w));
        }
    }
    let frame = s.logical_frame().tensor_power(s.n(), r);
    let reduce = |p: &PauliOperator| -> Result<PauliOperator> {
        let img = spec.conjugate(p)?;
        Ok(frame
            .decompose(&group, &img)
            .expect("a logical gate preserves the centralizer"))
    };
    let x_images = frame.x.iter().map(reduce).collect::<Result<Vec<_>>>()?;
    let z_images = frame.z.iter().map(reduce).collect::<Result<Vec<_>>>()?;
    let name = CliffordTableau::from_images(x_images.clone(), z_images.clone())
        .ok()
        .and_then(|t| t.common_name());
    Ok(VerificationVerdict::pass(
        spec.to_string(),
        method,
        LogicalAction::Clifford {
            x_images,
            z_images,
            name,
        },
    ))
}

fn coset_label(b: usize, k: usize) -> String {
    (0..k)
        .map(|i| if b >> (k - 1 - i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Exact check of `diag(1, e^{iθ_ℓ})` on every coordinate of `CSS(C1, C2)`:
/// within each coset `a + C2⊥`, every `a + c` must pick up the phase of `a`.
pub fn check_diagonal_gate_css(css: &CssCode, angles: &[RationalAngle]) -> Result<VerificationVerdict> {
    let n = css.n();
    if angles.len() != n {
        return Err(Error::LengthMismatch(n, angles.len()));
    }
    let candidate = {
        let first = angles.first().copied().unwrap_or(RationalAngle::ZERO);
        if angles.iter().all(|a| *a == first) {
            format!("(D {first})^⊗{n}")
        } else {
            let parts: Vec<String> = angles.iter().map(|a| format!("D {a}")).collect();
            parts.join(" ⊗ ")
        }
    };
    let q = angles
        .iter()
        .try_fold(1u64, |acc, a| {
            (acc / gcd(acc, a.denominator())).checked_mul(a.denominator())
        })
        .ok_or_else(|| Error::InvalidParameters("common angle denominator overflows".into()))?;
    let units: Vec<u128> = angles
        .iter()
        .map(|a| (a.numerator() * (q / a.denominator())) as u128)
        .collect();
    let phase = |v: &crate::bits::BitVec| -> u64 { (v.iter_ones().map(|l| units[l]).sum::<u128>() % q as u128) as u64 };

    let k = css.k();
    let reps = css.coset_representatives()?;
    let mut raw = Vec::with_capacity(reps.len());
    for (b, a) in reps.iter().enumerate() {
        let pa = phase(a);
        for c in css.c2_perp().codewords()? {
            let v = a.xor(&c);
            let pv = phase(&v);
            if pv != pa {
                let w = Witness::CosetPair {
                    coset: coset_label(b, k),
                    a: a.to_string(),
                    c: c.to_string(),
                    weight_difference: v.count_ones() as i64 - a.count_ones() as i64,
                    phase_difference: RationalAngle::new(pv as i64 - pa as i64, q)?,
                };
                return Ok(VerificationVerdict::fail(candidate, VerificationMethod::CosetWeight, w));
            }
        }
        raw.push(pa);
    }
    let base = raw.first().copied().unwrap_or(0);
    let phases = raw
        .iter()
        .map(|&p| RationalAngle::new(p as i64 - base as i64, q))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationVerdict::pass(
        candidate,
        VerificationMethod::CosetWeight,
        LogicalAction::DiagonalPhases { phases },
    ))
}

/// The uniform diagonal angles that act logically on a CSS code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UniformAngles {
    /// gcd of all in-coset weight differences `wt(a+c) − wt(a)`.
    pub weight_gcd: u64,
    /// `2π/g`; `None` when `g = 0` and every angle is allowed.
    pub fundamental: Option<RationalAngle>,
}

impl UniformAngles {
    /// `θ = 2πp/q` is allowed iff `q | g`.
    pub fn allows(&self, theta: RationalAngle) -> bool {
        self.weight_gcd == 0 || self.weight_gcd.is_multiple_of(theta.denominator())
    }
}

pub fn allowed_uniform_angles(css: &CssCode) -> Result<UniformAngles> {
    let mut g = 0u64;
    'outer: for a in css.coset_representatives()? {
        let wa = a.count_ones() as i64;
        for c in css.c2_perp().codewords()? {
            g = gcd(g, (a.xor(&c).count_ones() as i64 - wa).unsigned_abs());
            if g == 1 {
                break 'outer;
            }
        }
    }
    Ok(UniformAngles {
        weight_gcd: g,
        fundamental: (g > 0).then(|| RationalAngle::turn_fraction(g)),
    })
}

/// Per-coordinate labels taking `α → X` and `β → Z` on the common support
/// (identity elsewhere). `γ` then goes to `±Y` wherever the three letters differ.
pub fn standardize_logical_triple(
    alpha: &PauliOperator,
    beta: &PauliOperator,
    gamma: &PauliOperator,
) -> Result<Vec<CliffordLabel>> {
    let n = alpha.n();
    for p in [beta, gamma] {
        if p.n() != n {
            return Err(Error::LengthMismatch(n, p.n()));
        }
    }
    let xi = alpha.support();
    if beta.support() != xi || gamma.support() != xi {
        return Err(Error::SupportMismatch);
    }
    (0..n)
        .map(|j| {
            if !xi.contains(j) {
                return Ok(CliffordLabel::IDENTITY);
            }
            let (a, b, c) = (alpha.letter(j), beta.letter(j), gamma.letter(j));
            if a == b || b == c || a == c {
                return Err(Error::CoincidentLetters(j + 1));
            }
            let plus = |letter| SignedLetter {
                letter,
                negative: false,
            };
            let k = CliffordLabel::from_images(plus(a), plus(b)).expect("distinct letters anticommute");
            Ok(k.inverse())
        })
        .collect()
}

const PAULI_MATRICES: [Matrix2; 3] = {
    let z = Complex64::new(0.0, 0.0);
    let o = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let mi = Complex64::new(0.0, -1.0);
    let mo = Complex64::new(-1.0, 0.0);
    [[[z, o], [o, z]], [[z, mi], [i, z]], [[o, z], [z, mo]]]
};

fn mul2(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn adjoint2(a: &Matrix2) -> Matrix2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

/// `O[a][b]` with `U† σ_a U = Σ_b O[a][b] σ_b`.
fn bloch(u: &Matrix2) -> [[f64; 3]; 3] {
    let ud = adjoint2(u);
    let mut o = [[0.0; 3]; 3];
    for (a, row) in o.iter_mut().enumerate() {
        let img = mul2(&ud, &mul2(&PAULI_MATRICES[a], u));
        for (b, entry) in row.iter_mut().enumerate() {
            let prod = mul2(&PAULI_MATRICES[b], &img);
            *entry = 0.5 * (prod[0][0] + prod[1][1]).re;
        }
    }
    o
}

fn signed_unit(row: &[f64; 3]) -> Option<(usize, bool)> {
    let big = row.iter().position(|v| v.abs() > 1.0 - VERDICT_TOL)?;
    let rest_small = row.iter().enumerate().all(|(b, v)| b == big || v.abs() < VERDICT_TOL);
    rest_small.then_some((big, row[big] < 0.0))
}

const AXES: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

/// Sorts a single-qubit unitary into Clifford, Clifford times a rotation
/// about a Pauli axis, or neither, from its Bloch rotation.
pub fn classify_local_unitary(u: &Matrix2) -> Result<LocalUnitaryClass> {
    oracle::check_unitary(u)?;
    let o = bloch(u);
    let rows: Vec<Option<(usize, bool)>> = o.iter().map(signed_unit).collect();
    if let (Some((bx, nx)), Some((bz, nz))) = (rows[0], rows[2]) {
        if rows[1].is_some() {
            let label = CliffordLabel::from_images(
                SignedLetter {
                    letter: AXES[bx],
                    negative: nx,
                },
                SignedLetter {
                    letter: AXES[bz],
                    negative: nz,
                },
            )
            .expect("a signed permutation Bloch matrix is a Clifford");
            return Ok(LocalUnitaryClass::Clifford { label });
        }
    }
    let Some((a, (b, neg))) = rows.iter().enumerate().find_map(|(a, r)| r.map(|x| (a, x))) else {
        return Ok(LocalUnitaryClass::Generic);
    };
    // K with K† (±σ_b) K = σ_a, so W = U·K fixes σ_a.
    let from = PauliOperator::from_letters(&[AXES[b]], if neg { 2 } else { 0 });
    let to = PauliOperator::from_letters(&[AXES[a]], 0);
    let k = CliffordLabel::all()
        .find(|k| k.conjugate_single(&from) == to)
        .expect("some Clifford maps any signed axis to any axis");
    let ow = bloch(&mul2(u, &k.matrix()));
    let (b1, b2) = ((a + 1) % 3, (a + 2) % 3);
    let psi = ow[b1][b2].atan2(ow[b1][b1]).rem_euclid(std::f64::consts::FRAC_PI_2);
    let angle = psi.min(std::f64::consts::FRAC_PI_2 - psi);
    Ok(LocalUnitaryClass::CliffordTimesAxisRotation { axis: AXES[a], angle })
}

/// `diag(e^{iφ_b})` is Clifford iff every `φ(b ⊕ e_i) − φ(b)` is a constant
/// plus a linear form with values in `{0, 1/2}` turns.
pub fn diagonal_is_clifford(phases: &[RationalAngle]) -> bool {
    let d = phases.len();
    if !d.is_power_of_two() {
        return false;
    }
    let k = d.trailing_zeros() as usize;
    let half = RationalAngle::new(1, 2).unwrap();
    let bit = |i: usize| 1usize << (k - 1 - i);
    (0..k).all(|i| {
        let f = |b: usize| phases[b ^ bit(i)] + -phases[b];
        let f0 = f(0);
        let g = |b: usize| f(b) + -f0;
        (0..d).all(|b| {
            let gb = g(b);
            let lin = (0..k)
                .filter(|&j| b & bit(j) != 0)
                .fold(RationalAngle::ZERO, |acc, j| acc + g(bit(j)));
            (gb.is_zero() || gb == half) && gb == lin
        })
    })
}

/// Conjugates each logical `X_i`, `Z_i` by the matrix and checks that the
/// result is a single Pauli term.
fn matrix_is_clifford(m: &LogicalMatrix) -> bool {
    let d = m.dim;
    if !d.is_power_of_two() {
        return false;
    }
    let k = d.trailing_zeros() as usize;
    let u = DenseOperator::from_columns(k, |e| {
        (0..d).map(|row| (0..d).map(|c| m.get(row, c) * e[c]).sum()).collect()
    });
    let ud = u.adjoint();
    (0..k).all(|i| {
        [Letter::X, Letter::Z].iter().all(|&l| {
            let p = DenseOperator::from_pauli(&PauliOperator::single(k, i, l));
            let img = ud.matmul(&p).matmul(&u);
            match oracle::pauli_expand(&img) {
                Ok(terms) => terms.len() == 1 && (terms[0].1.norm() - 1.0).abs() < VERDICT_TOL,
                Err(_) => false,
            }
        })
    })
}

/// Dense-oracle verdict.
pub fn verify_dense(s: &StabilizerGroup, spec: &TransversalGateSpec, caps: &DenseCaps) -> Result<VerificationVerdict> {
    let mut caps = *caps;
    if spec.is_all_diagonal() {
        caps.max_dense_qubits = caps.max_dense_qubits.max(caps.max_sparse_qubits);
    }
    let check = oracle::verify_logical_dense(s, spec, &caps)?;
    let method = VerificationMethod::DenseOracle;
    if !check.is_logical {
        return Ok(VerificationVerdict::fail(
            spec.to_string(),
            method,
            Witness::Dense {
                deviation: check.deviation,
            },
        ));
    }
    let class = check.action.to_2x2().and_then(|m| classify_local_unitary(&m).ok());
    Ok(VerificationVerdict::pass(
        spec.to_string(),
        method,
        LogicalAction::Matrix {
            matrix: check.action,
            deviation: check.deviation,
            class,
        },
    ))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub dense: DenseCaps,
    /// Skip the exact routes and use the dense oracle.
    pub force_dense: bool,
}

/// Routes a spec to the symplectic, coset-weight or dense check.
pub fn verify_gate(
    s: &StabilizerGroup,
    spec: &TransversalGateSpec,
    opts: &VerifyOptions,
) -> Result<VerificationVerdict> {
    if spec.n() != s.n() {
        return Err(Error::LengthMismatch(s.n(), spec.n()));
    }
    if !opts.force_dense {
        if spec.is_all_clifford() {
            return check_clifford_transversal(s, spec);
        }
        if let Some(angles) = spec.diagonal_angles() {
            if let Some(css) = CssCode::from_stabilizer(s) {
                let mut v = check_diagonal_gate_css(&css, &angles)?;
                v.candidate = spec.to_string();
                return Ok(v);
            }
        }
    }
    verify_dense(s, spec, &opts.dense)
}
