//! Exact n-qubit Pauli arithmetic in the symplectic representation.
//!
//! An operator is stored as `i^phase · X^x · Z^z` with `Y := iXZ`, so each
//! coordinate where both bits are set contributes one factor of `i` relative
//! to the printed letter form. With that convention the product rule is a
//! single popcount:
//!
//! `(i^a X^x Z^z)(i^b X^x' Z^z') = i^(a + b + 2·|z ∧ x'|) X^(x⊕x') Z^(z⊕z')`.
//!
//! Coordinates are 0-based in the API and 1-based in every printed support.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// A single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const NONTRIVIAL: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_char(self.as_char())
    }
}

/// A set of qubit coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Support {
    mask: BitVec,
}

impl Support {
    pub fn from_mask(mask: BitVec) -> Self {
        Support { mask }
    }

    /// From 0-based coordinates.
    pub fn from_coords(n: usize, coords: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = BitVec::zeros(n);
        for c in coords {
            if c >= n {
                return Err(Error::InvalidCoordinate(c + 1, n));
            }
            mask.set(c, true);
        }
        Ok(Support { mask })
    }

    /// From 1-based coordinates, as written in reports and files.
    pub fn from_one_based(n: usize, coords: &[usize]) -> Result<Self> {
        let mut mask = BitVec::zeros(n);
        for &c in coords {
            if c == 0 || c > n {
                return Err(Error::InvalidCoordinate(c, n));
            }
            mask.set(c - 1, true);
        }
        Ok(Support { mask })
    }

    pub fn full(n: usize) -> Self {
        Support { mask: BitVec::ones(n) }
    }

    pub fn empty(n: usize) -> Self {
        Support { mask: BitVec::zeros(n) }
    }

    pub fn mask(&self) -> &BitVec {
        &self.mask
    }

    pub fn n(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_zero()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.mask.get(j)
    }

    pub fn coords(&self) -> Vec<usize> {
        self.mask.iter_ones().collect()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.mask.iter_ones().map(|c| c + 1).collect()
    }

    pub fn is_subset_of(&self, other: &Support) -> bool {
        self.mask.is_subset_of(&other.mask)
    }

    pub fn union(&self, other: &Support) -> Support {
        Support {
            mask: self.mask.or(&other.mask),
        }
    }

    pub fn complement(&self) -> Support {
        Support { mask: self.mask.not() }
    }
}

impl Ord for Support {
    /// Lexicographic on the sorted coordinate lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords().cmp(&other.coords()).then(self.n().cmp(&other.n()))
    }
}

impl PartialOrd for Support {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Support {
    /// 1-based coordinate list.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Support{self}")
    }
}

/// An element of the n-qubit Pauli group, `i^phase · X^x Z^z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
            phase: 0,
        }
    }

    /// Raw constructor; `phase` is the exponent of `i` in front of `X^x Z^z`.
    pub fn from_parts(x: BitVec, z: BitVec, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch(x.len(), z.len()));
        }
        Ok(PauliOperator { x, z, phase: phase & 3 })
    }

    /// Hermitian operator `sign · ⊗ letters`, with `sign_exp` the power of `i`.
    pub fn from_letters(letters: &[Letter], sign_exp: u8) -> Self {
        let n = letters.len();
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        let mut ys = 0u8;
        for (j, l) in letters.iter().enumerate() {
            let (bx, bz) = l.bits();
            x.set(j, bx);
            z.set(j, bz);
            if bx && bz {
                ys = ys.wrapping_add(1);
            }
        }
        PauliOperator {
            x,
            z,
            phase: (sign_exp.wrapping_add(ys)) & 3,
        }
    }

    /// A single letter at coordinate `j`, identity elsewhere.
    pub fn single(n: usize, j: usize, letter: Letter) -> Self {
        let mut letters = vec![Letter::I; n];
        letters[j] = letter;
        PauliOperator::from_letters(&letters, 0)
    }

    /// Pure X-type (or Z-type) operator from a bit pattern.
    pub fn x_type(bits: &BitVec) -> Self {
        PauliOperator {
            x: bits.clone(),
            z: BitVec::zeros(bits.len()),
            phase: 0,
        }
    }

    pub fn z_type(bits: &BitVec) -> Self {
        PauliOperator {
            x: BitVec::zeros(bits.len()),
            z: bits.clone(),
            phase: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn x(&self) -> &BitVec {
        &self.x
    }

    #[inline]
    pub fn z(&self) -> &BitVec {
        &self.z
    }

    /// Exponent of `i` in the `i^phase X^x Z^z` form.
    #[inline]
    pub fn phase(&self) -> u8 {
        self.phase
    }

    fn y_count(&self) -> usize {
        self.x.and_count(&self.z)
    }

    /// Exponent of `i` in front of the letter form `⊗ letters`.
    pub fn sign_exp(&self) -> u8 {
        ((self.phase as usize + 4 - (self.y_count() & 3)) & 3) as u8
    }

    pub fn is_hermitian(&self) -> bool {
        (self.phase as usize + self.y_count()).is_multiple_of(2)
    }

    pub fn letter(&self, j: usize) -> Letter {
        Letter::from_bits(self.x.get(j), self.z.get(j))
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n()).map(|j| self.letter(j)).collect()
    }

    pub fn support(&self) -> Support {
        Support::from_mask(self.x.or(&self.z))
    }

    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn is_x_type(&self) -> bool {
        self.z.is_zero()
    }

    pub fn is_z_type(&self) -> bool {
        self.x.is_zero()
    }

    /// Group product `self · other`, exact including phase.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch(self.n(), other.n()));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliOperator) -> PauliOperator {
        let swaps = self.z.and_count(&other.x);
        let phase = (self.phase as usize + other.phase as usize + 2 * swaps) & 3;
        PauliOperator {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: phase as u8,
        }
    }

    pub fn inverse(&self) -> PauliOperator {
        let phase = (4 - self.phase as usize + 2 * self.y_count()) & 3;
        PauliOperator {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: phase as u8,
        }
    }

    /// Multiplies by `i^k`.
    pub fn times_i(&self, k: u8) -> PauliOperator {
        PauliOperator {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: (self.phase + k) & 3,
        }
    }

    /// Same letters with the sign reset to `+`.
    pub fn unsigned(&self) -> PauliOperator {
        let ys = (self.y_count() & 3) as u8;
        PauliOperator {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: ys,
        }
    }

    /// Symplectic commutation test.
    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch(self.n(), other.n()));
        }
        Ok(self.commutes_unchecked(other))
    }

    #[inline]
    pub(crate) fn commutes_unchecked(&self, other: &PauliOperator) -> bool {
        (self.x.and_count(&other.z) + self.z.and_count(&other.x)).is_multiple_of(2)
    }

    /// The symplectic vector laid out as `(x_0, z_0, x_1, z_1, ...)`.
    ///
    /// Gaussian elimination on this layout pivots on the lowest coordinate
    /// first and on the X bit before the Z bit.
    pub fn interleaved(&self) -> BitVec {
        let n = self.n();
        let mut v = BitVec::zeros(2 * n);
        for j in self.x.iter_ones() {
            v.set(2 * j, true);
        }
        for j in self.z.iter_ones() {
            v.set(2 * j + 1, true);
        }
        v
    }

    /// Inverse of [`interleaved`](Self::interleaved), Hermitian with `+` sign.
    pub fn from_interleaved(v: &BitVec) -> PauliOperator {
        let n = v.len() / 2;
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        for i in v.iter_ones() {
            if i % 2 == 0 {
                x.set(i / 2, true);
            } else {
                z.set(i / 2, true);
            }
        }
        let ys = (x.and_count(&z) & 3) as u8;
        PauliOperator { x, z, phase: ys }
    }

    /// Restriction to the listed coordinates, keeping the sign of the
    /// letter form. Letters outside `coords` are dropped.
    pub fn restrict(&self, coords: &[usize]) -> PauliOperator {
        let letters: Vec<Letter> = coords.iter().map(|&c| self.letter(c)).collect();
        PauliOperator::from_letters(&letters, self.sign_exp())
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &PauliOperator) -> PauliOperator {
        PauliOperator {
            x: self.x.concat(&other.x),
            z: self.z.concat(&other.z),
            phase: (self.phase + other.phase) & 3,
        }
    }

    /// Places the letters of `self` at coordinates `map[j]` of an `n`-qubit
    /// operator, identity elsewhere. The phase is unchanged.
    pub fn embed(&self, n: usize, map: &[usize]) -> PauliOperator {
        let mut x = BitVec::zeros(n);
        let mut z = BitVec::zeros(n);
        for j in self.x.iter_ones() {
            x.set(map[j], true);
        }
        for j in self.z.iter_ones() {
            z.set(map[j], true);
        }
        PauliOperator {
            x,
            z,
            phase: self.phase,
        }
    }

    /// Sign of the letter form, when it is real.
    pub fn real_sign(&self) -> Option<i8> {
        match self.sign_exp() {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Grammar `[+-]?i?[IXYZ]+`; the letters are the Hermitian Pauli matrices.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPauli(s.to_string());
        let mut rest = s.trim();
        let mut sign_exp = 0u8;
        if let Some(r) = rest.strip_prefix('-') {
            sign_exp = 2;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        if let Some(r) = rest.strip_prefix('i') {
            sign_exp += 1;
            rest = r;
        }
        if rest.is_empty() {
            return Err(bad());
        }
        let letters: Option<Vec<Letter>> = rest.chars().map(Letter::from_char).collect();
        let letters = letters.ok_or_else(bad)?;
        Ok(PauliOperator::from_letters(&letters, sign_exp))
    }
}

/// Parses a Pauli string, panicking on malformed input. For literals.
pub fn pauli(s: &str) -> PauliOperator {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

impl fmt::Display for PauliOperator {
    /// Always an explicit sign; `i` only for anti-Hermitian operators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign_exp() {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(sign)?;
        for j in 0..self.n() {
            write!(f, "{}", self.letter(j).as_char())?;
        }
        Ok(())
    }
}

impl Serialize for PauliOperator {
    /// Signed string form, e.g. `"+XZZXI"`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}
