//! Transversal gate descriptions and their exact action on Pauli operators.
//!
//! A spec describes `U = (⊗_j U_j) · P_π`, where `P_π` permutes coordinates
//! by `P_π |ψ_1 … ψ_n⟩ = |ψ_π(1) … ψ_π(n)⟩`. With `r` blocks, `U_j` acts on
//! coordinate `j` of every block, i.e. on the flat qubits `r·j + b`.

use std::fmt;

use num_complex::Complex64;

use crate::angle::RationalAngle;
use crate::clifford::{CliffordLabel, CliffordTableau, Matrix2};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

/// What acts on one coordinate.
#[derive(Clone, Debug, PartialEq)]
pub enum CoordinateGate {
    Clifford(CliffordLabel),
    /// `diag(1, e^{iθ})`.
    Diagonal(RationalAngle),
    Dense(Matrix2),
    /// An `r`-qubit Clifford across the blocks.
    MultiBlock(CliffordTableau),
}

impl CoordinateGate {
    /// The 2×2 unitary for single-block descriptors.
    pub fn matrix(&self) -> Option<Matrix2> {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        match self {
            CoordinateGate::Clifford(l) => Some(l.matrix()),
            CoordinateGate::Diagonal(a) => Some([[o, z], [z, Complex64::from_polar(1.0, a.radians())]]),
            CoordinateGate::Dense(m) => Some(*m),
            CoordinateGate::MultiBlock(_) => None,
        }
    }
}

impl fmt::Display for CoordinateGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateGate::Clifford(l) => write!(f, "{l}"),
            CoordinateGate::Diagonal(a) => write!(f, "D {a}"),
            CoordinateGate::Dense(_) => write!(f, "M"),
            CoordinateGate::MultiBlock(t) => match t.common_name() {
                Some(name) => f.write_str(&name),
                None => write!(f, "[{t}]"),
            },
        }
    }
}

impl fmt::Display for TransversalGateSpec {
    /// `H^⊗7`, `CNOT^⊗7 (2 blocks)`, or the per-coordinate list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(first) = self.coords.first() else {
            return f.write_str("()");
        };
        if self.coords.iter().all(|g| g == first) {
            write!(f, "({first})^⊗{}", self.n())?;
        } else {
            let parts: Vec<String> = self.coords.iter().map(|g| g.to_string()).collect();
            write!(f, "{}", parts.join(" ⊗ "))?;
        }
        if self.blocks > 1 {
            write!(f, " on {} blocks", self.blocks)?;
        }
        if let Some(p) = &self.permutation {
            let one: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, " with PERM {}", one.join(" "))?;
        }
        Ok(())
    }
}

/// A validated transversal gate.
#[derive(Clone, Debug, PartialEq)]
pub struct TransversalGateSpec {
    coords: Vec<CoordinateGate>,
    blocks: usize,
    /// `π` as 0-based images; `None` is the identity.
    permutation: Option<Vec<usize>>,
}

impl TransversalGateSpec {
    pub fn new(coords: Vec<CoordinateGate>, permutation: Option<Vec<usize>>) -> Result<Self> {
        let n = coords.len();
        let multi: Vec<usize> = coords
            .iter()
            .filter_map(|g| match g {
                CoordinateGate::MultiBlock(t) => Some(t.n()),
                _ => None,
            })
            .collect();
        let blocks = match multi.first() {
            None => 1,
            Some(&r) => {
                if multi.len() != n || multi.iter().any(|&x| x != r) {
                    return Err(Error::UnsupportedGate(
                        "multi-block descriptors must cover every coordinate with one block count".into(),
                    ));
                }
                r
            }
        };
        if let Some(p) = &permutation {
            let mut seen = vec![false; n];
            if p.len() != n {
                return Err(Error::LengthMismatch(n, p.len()));
            }
            for &i in p {
                if i >= n || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidParameters("permutation is not a bijection".into()));
                }
            }
        }
        let permutation = permutation.filter(|p| p.iter().enumerate().any(|(i, &j)| i != j));
        Ok(TransversalGateSpec {
            coords,
            blocks,
            permutation,
        })
    }

    /// The same gate at every coordinate.
    pub fn uniform(n: usize, gate: CoordinateGate) -> Self {
        TransversalGateSpec::new(vec![gate; n], None).expect("uniform specs are valid")
    }

    pub fn uniform_clifford(n: usize, label: CliffordLabel) -> Self {
        TransversalGateSpec::uniform(n, CoordinateGate::Clifford(label))
    }

    pub fn uniform_diagonal(n: usize, angle: RationalAngle) -> Self {
        TransversalGateSpec::uniform(n, CoordinateGate::Diagonal(angle))
    }

    /// Transversal CNOT from block 0 to block 1.
    pub fn transversal_cnot(n: usize) -> Self {
        TransversalGateSpec::uniform(n, CoordinateGate::MultiBlock(CliffordTableau::cnot(2, 0, 1)))
    }

    pub fn identity(n: usize) -> Self {
        TransversalGateSpec::uniform_clifford(n, CliffordLabel::IDENTITY)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    /// Physical qubits acted on: `n · blocks`.
    pub fn total_qubits(&self) -> usize {
        self.n() * self.blocks
    }

    pub fn coords(&self) -> &[CoordinateGate] {
        &self.coords
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        self.permutation.as_deref()
    }

    pub fn is_all_clifford(&self) -> bool {
        self.coords
            .iter()
            .all(|g| matches!(g, CoordinateGate::Clifford(_) | CoordinateGate::MultiBlock(_)))
    }

    pub fn is_all_diagonal(&self) -> bool {
        self.permutation.is_none()
            && self.coords.iter().all(|g| match g {
                CoordinateGate::Diagonal(_) => true,
                CoordinateGate::Clifford(l) => {
                    l.x_image().letter == crate::pauli::Letter::X
                        && !l.x_image().negative
                        && l.z_image().letter == crate::pauli::Letter::Z
                        && !l.z_image().negative
                }
                _ => false,
            })
    }

    /// Per-coordinate angles when every coordinate is diagonal.
    pub fn diagonal_angles(&self) -> Option<Vec<RationalAngle>> {
        if !self.is_all_diagonal() {
            return None;
        }
        Some(
            self.coords
                .iter()
                .map(|g| match g {
                    CoordinateGate::Diagonal(a) => *a,
                    _ => RationalAngle::ZERO,
                })
                .collect(),
        )
    }

    /// Flat image of qubit `q` under the permutation.
    pub fn permuted_qubit(&self, q: usize) -> usize {
        match &self.permutation {
            None => q,
            Some(p) => {
                let r = self.blocks;
                r * p[q / r] + q % r
            }
        }
    }

    /// Heisenberg image `U† R U` for all-Clifford specs; exact.
    pub fn conjugate(&self, r: &PauliOperator) -> Result<PauliOperator> {
        if !self.is_all_clifford() {
            return Err(Error::UnsupportedGate(
                "symplectic conjugation needs Clifford descriptors".into(),
            ));
        }
        let total = self.total_qubits();
        if r.n() != total {
            return Err(Error::LengthMismatch(total, r.n()));
        }
        let rb = self.blocks;
        let mut out = PauliOperator::identity(total).times_i(r.sign_exp());
        for (j, g) in self.coords.iter().enumerate() {
            let flat: Vec<usize> = (0..rb).map(|b| rb * j + b).collect();
            let local = PauliOperator::from_letters(&r.restrict(&flat).letters(), 0);
            if local.is_identity_up_to_phase() {
                continue;
            }
            let img = match g {
                CoordinateGate::Clifford(l) => l.conjugate_single(&local),
                CoordinateGate::MultiBlock(t) => t.conjugate(&local),
                _ => unreachable!(),
            };
            out = out.mul_unchecked(&img.embed(total, &flat));
        }
        // P_π† R' P_π puts R'_q at position π(q)
        if self.permutation.is_some() {
            let map: Vec<usize> = (0..total).map(|q| self.permuted_qubit(q)).collect();
            out = out.embed(total, &map);
        }
        Ok(out)
    }
}
