//! Clifford operations acting on Pauli operators by conjugation.
//!
//! Throughout the crate a Clifford `U` acts on a Pauli `R` in the Heisenberg
//! picture, `R ↦ U† R U`. With the standard matrices `H` and `P = diag(1, i)`
//! this gives `H: (X, Z) ↦ (Z, X)` and `P: (X, Z) ↦ (−Y, Z)`.
//!
//! The 24 single-qubit Cliffords (modulo global phase) are enumerated once by
//! breadth-first search over words in `{H, P}`; the first word to reach an
//! action becomes its canonical name.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliOperator};

/// 2×2 complex matrix, row-major.
pub type Matrix2 = [[Complex64; 2]; 2];

/// A signed Hermitian single-qubit Pauli, `±letter`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedLetter {
    pub letter: Letter,
    pub negative: bool,
}

impl SignedLetter {
    fn as_pauli(self) -> PauliOperator {
        PauliOperator::from_letters(&[self.letter], if self.negative { 2 } else { 0 })
    }

    fn from_pauli(p: &PauliOperator) -> SignedLetter {
        SignedLetter {
            letter: p.letter(0),
            negative: p.sign_exp() == 2,
        }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.negative { "-" } else { "+" }, self.letter.as_char())
    }
}

#[derive(Debug)]
struct LabelData {
    word: String,
    x_image: SignedLetter,
    z_image: SignedLetter,
    matrix: Matrix2,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn matmul2(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub(crate) fn hadamard_matrix() -> Matrix2 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]
}

pub(crate) fn phase_matrix() -> Matrix2 {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 1.0)]]
}

/// Heisenberg image of a single-qubit Pauli under a generator word.
fn apply_generator(g: char, p: &PauliOperator) -> PauliOperator {
    let (x_img, z_img) = match g {
        'H' => (
            PauliOperator::from_letters(&[Letter::Z], 0),
            PauliOperator::from_letters(&[Letter::X], 0),
        ),
        'P' => (
            PauliOperator::from_letters(&[Letter::Y], 2),
            PauliOperator::from_letters(&[Letter::Z], 0),
        ),
        _ => unreachable!(),
    };
    local_image(p, &x_img, &z_img)
}

/// Image of the 1-qubit `i^p X^a Z^b` given the images of X and Z.
fn local_image(p: &PauliOperator, x_img: &PauliOperator, z_img: &PauliOperator) -> PauliOperator {
    let mut out = PauliOperator::identity(1).times_i(p.phase());
    if p.x().get(0) {
        out = out.mul_unchecked(x_img);
    }
    if p.z().get(0) {
        out = out.mul_unchecked(z_img);
    }
    out
}

fn table() -> &'static [LabelData] {
    static TABLE: OnceLock<Vec<LabelData>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let x = PauliOperator::from_letters(&[Letter::X], 0);
        let z = PauliOperator::from_letters(&[Letter::Z], 0);
        let mut found: Vec<LabelData> = Vec::new();
        let mut queue: std::collections::VecDeque<(String, PauliOperator, PauliOperator, Matrix2)> =
            std::collections::VecDeque::new();
        let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
        queue.push_back((String::new(), x.clone(), z.clone(), id));
        while let Some((word, xi, zi, m)) = queue.pop_front() {
            let xs = SignedLetter::from_pauli(&xi);
            let zs = SignedLetter::from_pauli(&zi);
            if found.iter().any(|d| d.x_image == xs && d.z_image == zs) {
                continue;
            }
            found.push(LabelData {
                word: if word.is_empty() { "I".into() } else { word.clone() },
                x_image: xs,
                z_image: zs,
                matrix: m,
            });
            for g in ['H', 'P'] {
                // Appending g to the word means g acts after the existing
                // word in the Heisenberg picture, and the matrix is U·G.
                let gm = if g == 'H' { hadamard_matrix() } else { phase_matrix() };
                queue.push_back((
                    format!("{word}{g}"),
                    apply_generator(g, &xi),
                    apply_generator(g, &zi),
                    matmul2(&m, &gm),
                ));
            }
        }
        assert_eq!(found.len(), 24);
        found
    })
}

/// One of the 24 single-qubit Clifford operations, modulo global phase.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordLabel(u8);

impl CliffordLabel {
    pub const IDENTITY: CliffordLabel = CliffordLabel(0);

    pub fn all() -> impl Iterator<Item = CliffordLabel> {
        (0..24u8).map(CliffordLabel)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    fn data(self) -> &'static LabelData {
        &table()[self.0 as usize]
    }

    /// Canonical shortest word over `{H, P}`; `I` for the identity.
    pub fn word(self) -> &'static str {
        &self.data().word
    }

    pub fn x_image(self) -> SignedLetter {
        self.data().x_image
    }

    pub fn z_image(self) -> SignedLetter {
        self.data().z_image
    }

    /// A unitary representative.
    pub fn matrix(self) -> Matrix2 {
        self.data().matrix
    }

    /// The label with the given Heisenberg images of X and Z.
    pub fn from_images(x: SignedLetter, z: SignedLetter) -> Option<CliffordLabel> {
        table()
            .iter()
            .position(|d| d.x_image == x && d.z_image == z)
            .map(|i| CliffordLabel(i as u8))
    }

    /// Composes a word over `{H, P}`, read as a matrix product.
    pub fn from_word(word: &str) -> Result<CliffordLabel> {
        let mut xi = PauliOperator::from_letters(&[Letter::X], 0);
        let mut zi = PauliOperator::from_letters(&[Letter::Z], 0);
        for g in word.chars() {
            if g != 'H' && g != 'P' {
                return Err(Error::UnknownClifford(word.to_string()));
            }
            xi = apply_generator(g, &xi);
            zi = apply_generator(g, &zi);
        }
        Ok(
            CliffordLabel::from_images(SignedLetter::from_pauli(&xi), SignedLetter::from_pauli(&zi))
                .expect("closed under composition"),
        )
    }

    pub fn hadamard() -> CliffordLabel {
        CliffordLabel::from_word("H").unwrap()
    }

    pub fn phase() -> CliffordLabel {
        CliffordLabel::from_word("P").unwrap()
    }

    /// The cycle `X → Y → Z → X`.
    pub fn cycle() -> CliffordLabel {
        CliffordLabel::from_images(
            SignedLetter {
                letter: Letter::Y,
                negative: false,
            },
            SignedLetter {
                letter: Letter::X,
                negative: false,
            },
        )
        .unwrap()
    }

    /// Heisenberg image of a 1-qubit Pauli.
    pub fn conjugate_single(self, p: &PauliOperator) -> PauliOperator {
        local_image(p, &self.x_image().as_pauli(), &self.z_image().as_pauli())
    }

    /// `self` applied first, then `other` (matrix product `self · other`).
    pub fn then(self, other: CliffordLabel) -> CliffordLabel {
        let xi = other.conjugate_single(&self.x_image().as_pauli());
        let zi = other.conjugate_single(&self.z_image().as_pauli());
        CliffordLabel::from_images(SignedLetter::from_pauli(&xi), SignedLetter::from_pauli(&zi)).unwrap()
    }

    pub fn inverse(self) -> CliffordLabel {
        CliffordLabel::all()
            .find(|&l| self.then(l) == CliffordLabel::IDENTITY)
            .unwrap()
    }

    /// Conventional name when there is one (`H`, `P`, `P†`, `C`, ...).
    pub fn common_name(self) -> Option<&'static str> {
        let named = [
            ("I", CliffordLabel::IDENTITY),
            ("H", CliffordLabel::hadamard()),
            ("P", CliffordLabel::phase()),
            ("P†", CliffordLabel::phase().inverse()),
            ("C", CliffordLabel::cycle()),
            ("C†", CliffordLabel::cycle().inverse()),
            ("X", "X".parse().unwrap()),
            ("Y", "Y".parse().unwrap()),
            ("Z", "Z".parse().unwrap()),
        ];
        named.iter().find(|(_, l)| *l == self).map(|(s, _)| *s)
    }

    /// Smallest `t ≥ 1` with `self^t` the identity.
    pub fn order(self) -> usize {
        let mut cur = self;
        let mut t = 1;
        while cur != CliffordLabel::IDENTITY {
            cur = cur.then(self);
            t += 1;
        }
        t
    }

    pub fn is_pauli(self) -> bool {
        self.x_image().letter == Letter::X && self.z_image().letter == Letter::Z
    }
}

impl FromStr for CliffordLabel {
    type Err = Error;

    /// Accepts canonical words, any word over `{H, P}`, and the aliases
    /// `I`, `C`, `S`, `X`, `Y`, `Z`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let pauli_label = |l: Letter| {
            let p = PauliOperator::from_letters(&[l], 0);
            let xi = SignedLetter::from_pauli(
                &p.mul_unchecked(&PauliOperator::from_letters(&[Letter::X], 0))
                    .mul_unchecked(&p),
            );
            let zi = SignedLetter::from_pauli(
                &p.mul_unchecked(&PauliOperator::from_letters(&[Letter::Z], 0))
                    .mul_unchecked(&p),
            );
            CliffordLabel::from_images(xi, zi).unwrap()
        };
        match s {
            "I" | "" => Ok(CliffordLabel::IDENTITY),
            "C" => Ok(CliffordLabel::cycle()),
            "S" => Ok(CliffordLabel::phase()),
            "X" => Ok(pauli_label(Letter::X)),
            "Y" => Ok(pauli_label(Letter::Y)),
            "Z" => Ok(pauli_label(Letter::Z)),
            w => CliffordLabel::from_word(w),
        }
    }
}

impl fmt::Display for CliffordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.word())
    }
}

impl Serialize for CliffordLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for CliffordLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Clifford({}: X→{}, Z→{})",
            self.word(),
            self.x_image(),
            self.z_image()
        )
    }
}

/// Conjugates coordinate `j` of `a` by a single-qubit Clifford.
pub fn conjugate_by_single_qubit_clifford(a: &PauliOperator, j: usize, label: CliffordLabel) -> Result<PauliOperator> {
    let n = a.n();
    if j >= n {
        return Err(Error::InvalidCoordinate(j + 1, n));
    }
    let local = PauliOperator::from_letters(&[a.letter(j)], 0);
    let img = label.conjugate_single(&local);
    // a = sign · (letters elsewhere) ⊗ letter_j; replace letter_j by its image.
    let mut letters = a.letters();
    letters[j] = img.letter(0);
    let sign = (a.sign_exp() + img.sign_exp()) & 3;
    Ok(PauliOperator::from_letters(&letters, sign))
}

/// Applies one label per coordinate.
pub fn conjugate_by_local_cliffords(a: &PauliOperator, labels: &[CliffordLabel]) -> PauliOperator {
    let mut letters = a.letters();
    let mut sign = a.sign_exp();
    for (j, l) in labels.iter().enumerate() {
        let img = l.conjugate_single(&PauliOperator::from_letters(&[letters[j]], 0));
        letters[j] = img.letter(0);
        sign = (sign + img.sign_exp()) & 3;
    }
    PauliOperator::from_letters(&letters, sign)
}

/// An n-qubit Clifford given by the Heisenberg images of `X_j` and `Z_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordTableau {
    x_images: Vec<PauliOperator>,
    z_images: Vec<PauliOperator>,
}

impl CliffordTableau {
    pub fn identity(n: usize) -> Self {
        CliffordTableau {
            x_images: (0..n).map(|j| PauliOperator::single(n, j, Letter::X)).collect(),
            z_images: (0..n).map(|j| PauliOperator::single(n, j, Letter::Z)).collect(),
        }
    }

    /// Validates Hermiticity and the canonical commutation relations.
    pub fn from_images(x_images: Vec<PauliOperator>, z_images: Vec<PauliOperator>) -> Result<Self> {
        let n = x_images.len();
        if z_images.len() != n {
            return Err(Error::LengthMismatch(n, z_images.len()));
        }
        for p in x_images.iter().chain(&z_images) {
            if p.n() != n {
                return Err(Error::LengthMismatch(n, p.n()));
            }
            if !p.is_hermitian() || p.is_identity_up_to_phase() {
                return Err(Error::InvalidParameters(format!(
                    "image {p} is not a Hermitian non-identity Pauli"
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let xx = x_images[i].commutes_unchecked(&x_images[j]);
                let zz = z_images[i].commutes_unchecked(&z_images[j]);
                let xz = x_images[i].commutes_unchecked(&z_images[j]);
                if !xx || !zz || xz != (i != j) {
                    return Err(Error::InvalidParameters(
                        "images violate the Pauli commutation relations".into(),
                    ));
                }
            }
        }
        Ok(CliffordTableau { x_images, z_images })
    }

    pub fn n(&self) -> usize {
        self.x_images.len()
    }

    pub fn x_images(&self) -> &[PauliOperator] {
        &self.x_images
    }

    pub fn z_images(&self) -> &[PauliOperator] {
        &self.z_images
    }

    pub fn from_labels(labels: &[CliffordLabel]) -> Self {
        let n = labels.len();
        let mut t = CliffordTableau::identity(n);
        for (j, &l) in labels.iter().enumerate() {
            t.x_images[j] = conjugate_by_single_qubit_clifford(&t.x_images[j], j, l).unwrap();
            t.z_images[j] = conjugate_by_single_qubit_clifford(&t.z_images[j], j, l).unwrap();
        }
        t
    }

    /// CNOT with control `c` and target `t`.
    pub fn cnot(n: usize, c: usize, t: usize) -> Self {
        let mut tab = CliffordTableau::identity(n);
        tab.x_images[c] = tab.x_images[c].mul_unchecked(&PauliOperator::single(n, t, Letter::X));
        tab.z_images[t] = tab.z_images[t].mul_unchecked(&PauliOperator::single(n, c, Letter::Z));
        tab
    }

    pub fn cz(n: usize, a: usize, b: usize) -> Self {
        let mut tab = CliffordTableau::identity(n);
        tab.x_images[a] = tab.x_images[a].mul_unchecked(&PauliOperator::single(n, b, Letter::Z));
        tab.x_images[b] = tab.x_images[b].mul_unchecked(&PauliOperator::single(n, a, Letter::Z));
        tab
    }

    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut tab = CliffordTableau::identity(n);
        tab.x_images.swap(a, b);
        tab.z_images.swap(a, b);
        tab
    }

    /// Heisenberg image `U† R U`, exact including phase.
    pub fn conjugate(&self, r: &PauliOperator) -> PauliOperator {
        let n = self.n();
        debug_assert_eq!(r.n(), n);
        let mut out = PauliOperator::identity(n).times_i(r.phase());
        for j in r.x().iter_ones() {
            out = out.mul_unchecked(&self.x_images[j]);
        }
        for j in r.z().iter_ones() {
            out = out.mul_unchecked(&self.z_images[j]);
        }
        out
    }

    /// `self` applied first, then `other`; the matrix product `self · other`.
    pub fn then(&self, other: &CliffordTableau) -> CliffordTableau {
        CliffordTableau {
            x_images: self.x_images.iter().map(|p| other.conjugate(p)).collect(),
            z_images: self.z_images.iter().map(|p| other.conjugate(p)).collect(),
        }
    }

    /// `CNOT`, `CZ`, `SWAP` and the named single-qubit labels.
    pub fn common_name(&self) -> Option<String> {
        if let Some(l) = self.as_label() {
            return Some(
                l.common_name()
                    .map(str::to_string)
                    .unwrap_or_else(|| l.word().to_string()),
            );
        }
        if self.n() == 2 {
            let named = [
                ("CNOT", CliffordTableau::cnot(2, 0, 1)),
                ("CNOT(1->0)", CliffordTableau::cnot(2, 1, 0)),
                ("CZ", CliffordTableau::cz(2, 0, 1)),
                ("SWAP", CliffordTableau::swap(2, 0, 1)),
            ];
            if let Some((s, _)) = named.iter().find(|(_, t)| t == self) {
                return Some(s.to_string());
            }
        }
        (*self == CliffordTableau::identity(self.n())).then(|| "I".to_string())
    }

    /// The single-qubit label when `n == 1`.
    pub fn as_label(&self) -> Option<CliffordLabel> {
        if self.n() != 1 {
            return None;
        }
        CliffordLabel::from_images(
            SignedLetter::from_pauli(&self.x_images[0]),
            SignedLetter::from_pauli(&self.z_images[0]),
        )
    }
}

impl fmt::Display for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .x_images
            .iter()
            .map(|p| p.to_string())
            .chain(self.z_images.iter().map(|p| p.to_string()))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for CliffordTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}
