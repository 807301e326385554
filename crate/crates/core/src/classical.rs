//! Binary linear codes, Reed-Muller codes and the CSS construction.

use std::fmt;

use serde::Serialize;

use crate::angle::RationalAngle;
use crate::bits::{nullspace, row_basis, span_contains, span_equal, BitVec, Echelon};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::stabilizer::{StabilizerGroup, DEFAULT_MAX_ENUM_BITS};

/// A binary linear `[n, k]` code given by an independent row basis.
#[derive(Clone)]
pub struct BinaryLinearCode {
    n: usize,
    rows: Vec<BitVec>,
}

impl BinaryLinearCode {
    /// Rejects dependent or wrongly sized rows.
    pub fn new(n: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch(n, r.len()));
        }
        let e = Echelon::new(&rows, n);
        if let Some(&i) = e.dependent_inputs().first() {
            return Err(Error::InvalidParameters(format!(
                "generator row {} is dependent",
                i + 1
            )));
        }
        Ok(BinaryLinearCode { n, rows })
    }

    /// The code spanned by arbitrary rows.
    pub fn span(n: usize, rows: &[BitVec]) -> Self {
        BinaryLinearCode {
            n,
            rows: row_basis(rows, n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        Echelon::new(&self.rows, self.n).contains(v)
    }

    /// `self ⊆ other` as rowspaces.
    pub fn is_subcode_of(&self, other: &BinaryLinearCode) -> bool {
        self.n == other.n && span_contains(&other.rows, &self.rows, self.n)
    }

    pub fn same_rowspace(&self, other: &BinaryLinearCode) -> bool {
        self.n == other.n && span_equal(&self.rows, &other.rows, self.n)
    }

    pub fn dual(&self) -> BinaryLinearCode {
        BinaryLinearCode {
            n: self.n,
            rows: nullspace(&self.rows, self.n),
        }
    }

    /// Deletes coordinate `j` (0-based) and re-extracts a basis.
    pub fn puncture(&self, j: usize) -> Result<BinaryLinearCode> {
        if j >= self.n {
            return Err(Error::InvalidCoordinate(j + 1, self.n));
        }
        let rows: Vec<BitVec> = self.rows.iter().map(|r| r.remove(j)).collect();
        Ok(BinaryLinearCode::span(self.n - 1, &rows))
    }

    /// The subcode of even-weight codewords.
    pub fn even_subcode(&self) -> BinaryLinearCode {
        let odd = self.rows.iter().position(|r| r.count_ones() % 2 == 1);
        let Some(o) = odd else {
            return self.clone();
        };
        let pivot = self.rows[o].clone();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != o)
            .map(|(_, r)| {
                if r.count_ones() % 2 == 1 {
                    r.xor(&pivot)
                } else {
                    r.clone()
                }
            })
            .collect();
        BinaryLinearCode { n: self.n, rows }
    }

    /// All `2^k` codewords in Gray-code order.
    pub fn codewords(&self) -> Result<impl Iterator<Item = BitVec> + '_> {
        if self.k() > DEFAULT_MAX_ENUM_BITS as usize {
            return Err(Error::CapExceeded {
                what: "codeword enumeration",
                needed_bits: self.k() as u32,
                cap_bits: DEFAULT_MAX_ENUM_BITS,
            });
        }
        let mut cur = BitVec::zeros(self.n);
        Ok((0u64..1 << self.k()).map(move |step| {
            if step > 0 {
                cur.xor_assign(&self.rows[step.trailing_zeros() as usize]);
            }
            cur.clone()
        }))
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_spectrum(&self) -> Result<Vec<u64>> {
        let mut spec = vec![0u64; self.n + 1];
        for c in self.codewords()? {
            spec[c.count_ones()] += 1;
        }
        Ok(spec)
    }

    /// gcd of all nonzero codeword weights; 0 for the zero code.
    pub fn divisor(&self) -> Result<u64> {
        Ok(self
            .weight_spectrum()?
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &a)| a > 0)
            .fold(0, |g, (w, _)| gcd(g, w as u64)))
    }

    pub fn min_weight(&self) -> Result<Option<usize>> {
        Ok(self
            .weight_spectrum()?
            .iter()
            .skip(1)
            .position(|&a| a > 0)
            .map(|w| w + 1))
    }
}

impl fmt::Debug for BinaryLinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.n, self.k())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `RM(r, m)`: evaluations of monomials of degree ≤ r at all `2^m` points.
/// Point `p` assigns `v_i = bit (m−1−i)` of `p`, so the all-zero point is
/// coordinate 0 and points are in lexicographic order with `v_1` leading.
pub fn reed_muller(r: usize, m: usize) -> Result<BinaryLinearCode> {
    if r > m || m > 12 {
        return Err(Error::InvalidParameters(format!("RM({r},{m}) needs 0 <= r <= m <= 12")));
    }
    let n = 1usize << m;
    let mut rows = Vec::new();
    for deg in 0..=r {
        for vars in combinations(m, deg) {
            let mask: usize = vars.iter().map(|&i| 1 << (m - 1 - i)).sum();
            rows.push(BitVec::from_indices(n, (0..n).filter(|p| p & mask == mask)));
        }
    }
    debug_assert_eq!(rows.len(), (0..=r).map(|i| binomial(m, i)).sum::<usize>());
    BinaryLinearCode::new(n, rows)
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// `RM*(r, m)`: `RM(r, m)` punctured at the all-zero point.
pub fn punctured_reed_muller(r: usize, m: usize) -> Result<BinaryLinearCode> {
    reed_muller(r, m)?.puncture(0)
}

/// `CSS(C1, C2)` with `C2⊥ ⊆ C1`.
#[derive(Clone, Debug)]
pub struct CssCode {
    c1: BinaryLinearCode,
    c2_perp: BinaryLinearCode,
}

impl CssCode {
    pub fn new(c1: BinaryLinearCode, c2: BinaryLinearCode) -> Result<Self> {
        CssCode::from_c2_perp(c1, c2.dual())
    }

    pub fn from_c2_perp(c1: BinaryLinearCode, c2_perp: BinaryLinearCode) -> Result<Self> {
        if c1.n() != c2_perp.n() {
            return Err(Error::LengthMismatch(c1.n(), c2_perp.n()));
        }
        if !c2_perp.is_subcode_of(&c1) {
            return Err(Error::ContainmentViolated);
        }
        Ok(CssCode { c1, c2_perp })
    }

    /// Reads `C2⊥` and `C1⊥` off a CSS-form group whose generators all carry
    /// a `+` sign; `None` otherwise.
    pub fn from_stabilizer(s: &StabilizerGroup) -> Option<CssCode> {
        if !s.is_css() || s.generators().iter().any(|g| g.sign_exp() != 0) {
            return None;
        }
        let n = s.n();
        let real = s.generators().iter().filter(|g| !g.is_identity_up_to_phase());
        let xs: Vec<BitVec> = real.clone().filter(|g| g.is_x_type()).map(|g| g.x().clone()).collect();
        let zs: Vec<BitVec> = real.filter(|g| g.is_z_type()).map(|g| g.z().clone()).collect();
        let c1 = BinaryLinearCode::span(n, &zs).dual();
        CssCode::from_c2_perp(c1, BinaryLinearCode::span(n, &xs)).ok()
    }

    pub fn n(&self) -> usize {
        self.c1.n()
    }

    pub fn k(&self) -> usize {
        self.c1.k() - self.c2_perp.k()
    }

    pub fn c1(&self) -> &BinaryLinearCode {
        &self.c1
    }

    pub fn c2(&self) -> BinaryLinearCode {
        self.c2_perp.dual()
    }

    pub fn c2_perp(&self) -> &BinaryLinearCode {
        &self.c2_perp
    }

    /// X-type generators from `C2⊥`, then Z-type generators from `C1⊥`.
    pub fn stabilizer(&self) -> StabilizerGroup {
        let xs = self.c2_perp.rows().iter().map(PauliOperator::x_type);
        let zs = self
            .c1
            .dual()
            .rows
            .iter()
            .map(PauliOperator::z_type)
            .collect::<Vec<_>>();
        StabilizerGroup::with_n(self.n(), xs.chain(zs).collect()).expect("C2⊥ ⊆ C1 makes the checks commute")
    }

    /// Representatives `a(b)` of `C1/C2⊥`, indexed by logical basis label
    /// `b ∈ GF(2)^k` (`b_0` is the most significant bit of the index). They are the X parts of
    /// the stabilizer's canonical frame, so `|b̄⟩ ∝ Σ_c |a(b) + c⟩` matches
    /// the frame's computational basis.
    pub fn coset_representatives(&self) -> Result<Vec<BitVec>> {
        let k = self.k();
        if k > DEFAULT_MAX_ENUM_BITS as usize {
            return Err(Error::CapExceeded {
                what: "coset representatives",
                needed_bits: k as u32,
                cap_bits: DEFAULT_MAX_ENUM_BITS,
            });
        }
        let frame = self.stabilizer().logical_frame();
        Ok((0u64..1 << k)
            .map(|b| {
                let mut a = BitVec::zeros(self.n());
                for i in 0..k {
                    if b >> (k - 1 - i) & 1 == 1 {
                        a.xor_assign(frame.x[i].x());
                    }
                }
                a
            })
            .collect())
    }
}

/// A member of the punctured Reed-Muller CSS family.
#[derive(Clone, Debug, Serialize)]
pub struct RmCssInstance {
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    /// `Δ = 2^(⌊m/r⌋−1)`.
    pub delta: u64,
    /// `2π/Δ`.
    pub gate_angle: RationalAngle,
    /// `min(2^(m−r) − 1, 2^(r+1) − 1)`.
    pub claimed_d: usize,
    #[serde(skip)]
    pub css: CssCode,
    #[serde(skip)]
    pub code: StabilizerGroup,
}

/// `CSS(C1, C2)` with `C1 = RM*(r, m)` and `C2⊥ = even(C1)`.
pub fn rm_css_family(r: usize, m: usize) -> Result<RmCssInstance> {
    if r == 0 || 2 * r > m || m > 12 {
        return Err(Error::InvalidParameters(format!(
            "rm-css needs 0 < r <= m/2 and m <= 12, got r={r}, m={m}"
        )));
    }
    let c1 = punctured_reed_muller(r, m)?;
    let c2_perp = c1.even_subcode();
    let css = CssCode::from_c2_perp(c1, c2_perp)?;
    let code = css.stabilizer();
    let delta = 1u64 << (m / r - 1);
    Ok(RmCssInstance {
        r,
        m,
        n: css.n(),
        k: css.k(),
        delta,
        gate_angle: RationalAngle::turn_fraction(delta),
        claimed_d: ((1usize << (m - r)) - 1).min((1usize << (r + 1)) - 1),
        css,
        code,
    })
}
