//! Sanity scan: logical actions of a fixed gate battery on the corpus codes.
//!
//! For codes whose allowed uniform diagonal gates all act as logical
//! Cliffords (and for non-CSS codes), every logical action found should be
//! Clifford. This is an observation over a finite battery, not a proof.

use serde::Serialize;

use crate::angle::RationalAngle;
use crate::catalog;
use crate::classical::{rm_css_family, CssCode};
use crate::clifford::{CliffordLabel, CliffordTableau};
use crate::error::Result;
use crate::gate::{CoordinateGate, TransversalGateSpec};
use crate::stabilizer::StabilizerGroup;
use crate::transversal::{
    allowed_uniform_angles, check_diagonal_gate_css, verify_gate, UniformAngles, VerificationMethod, VerifyOptions,
};

#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub gate: String,
    pub is_logical: bool,
    pub method: VerificationMethod,
    /// Set for logical gates.
    pub action_is_clifford: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeScan {
    pub code: String,
    pub uniform_angles: Option<UniformAngles>,
    /// The fundamental uniform diagonal acts as a logical Clifford, or the
    /// code is not CSS; the Clifford containment is expected.
    pub applies: bool,
    pub entries: Vec<ScanEntry>,
}

impl CodeScan {
    pub fn logical_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_logical).count()
    }

    pub fn non_clifford(&self) -> Vec<&ScanEntry> {
        self.entries
            .iter()
            .filter(|e| e.action_is_clifford == Some(false))
            .collect()
    }

    /// `false` only when the containment applies and fails.
    pub fn consistent(&self) -> bool {
        !self.applies || self.non_clifford().is_empty()
    }
}

/// Codes with at least one logical qubit from the catalog and the RM family.
pub fn corpus() -> Result<Vec<(String, StabilizerGroup)>> {
    let mut out = vec![
        ("[[4,2,2]]".to_string(), catalog::four_two_two()),
        ("[[5,1,3]]".to_string(), catalog::five_qubit()),
        ("[[6,2,2]] example".to_string(), catalog::six_two_two()),
        ("[[7,1,3]]".to_string(), catalog::steane()),
        ("[[9,1,3]]".to_string(), catalog::shor()),
    ];
    for m in [4, 5] {
        let q = rm_css_family(1, m)?;
        out.push((format!("[[{},1,3]]", q.n), q.code));
    }
    Ok(out)
}

/// Uniform single-qubit Cliffords, the two-block CNOT/CZ, and uniform
/// diagonal angles `2π/4`, `2π/8`, `2π/16`.
pub fn battery(n: usize) -> Vec<TransversalGateSpec> {
    let mut specs: Vec<TransversalGateSpec> = CliffordLabel::all()
        .map(|l| TransversalGateSpec::uniform_clifford(n, l))
        .collect();
    specs.push(TransversalGateSpec::transversal_cnot(n));
    specs.push(TransversalGateSpec::uniform(
        n,
        CoordinateGate::MultiBlock(CliffordTableau::cz(2, 0, 1)),
    ));
    for q in [4, 8, 16] {
        specs.push(TransversalGateSpec::uniform_diagonal(
            n,
            RationalAngle::turn_fraction(q),
        ));
    }
    specs
}

pub fn scan_code(name: &str, s: &StabilizerGroup) -> Result<CodeScan> {
    let css = CssCode::from_stabilizer(s);
    let uniform_angles = match &css {
        Some(css) => Some(allowed_uniform_angles(css)?),
        None => None,
    };
    // multiples of the fundamental angle act as powers of its action
    let applies = match (&css, uniform_angles.and_then(|u| u.fundamental)) {
        (None, _) => true,
        (Some(css), Some(f)) => check_diagonal_gate_css(css, &vec![f; s.n()])?
            .logical_action
            .is_some_and(|a| a.is_clifford()),
        (Some(_), None) => false,
    };
    let opts = VerifyOptions::default();
    let entries = battery(s.n())
        .iter()
        .map(|spec| {
            let v = verify_gate(s, spec, &opts)?;
            Ok(ScanEntry {
                gate: v.candidate.clone(),
                is_logical: v.is_logical,
                method: v.method,
                action_is_clifford: v.logical_action.as_ref().map(|a| a.is_clifford()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CodeScan {
        code: name.to_string(),
        uniform_angles,
        applies,
        entries,
    })
}

pub fn consistency_scan() -> Result<Vec<CodeScan>> {
    corpus()?.iter().map(|(name, s)| scan_code(name, s)).collect()
}
