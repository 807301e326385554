//! Transversal-gate survey of five distance-3 single-logical-qubit codes.
//!
//! Each row runs the exact checks on a list of candidate bitwise gates. A
//! "not logical" verdict only speaks about the candidate named in it; for
//! uniform diagonal gates on CSS rows `uniform_angles` is the complete answer.

use std::fmt::Write as _;

use serde::Serialize;

use crate::angle::RationalAngle;
use crate::catalog;
use crate::classical::{rm_css_family, CssCode};
use crate::clifford::CliffordLabel;
use crate::error::Result;
use crate::gate::TransversalGateSpec;
use crate::stabilizer::{CodeParameters, DistanceStrategy, StabilizerGroup};
use crate::transversal::{
    allowed_uniform_angles, check_clifford_transversal, verify_dense, verify_gate, LocalUnitaryClass, LogicalAction,
    UniformAngles, VerificationVerdict, VerifyOptions,
};

pub const SCOPE_NOTE: &str = "A 'not logical' verdict means the named bitwise candidate is not a logical gate. \
Only the uniform diagonal angles of CSS rows are characterized completely.";

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub gate: String,
    /// `Some(true)` / `Some(false)` when the table lists the gate as
    /// transversal / not transversal; `None` for exploratory trials.
    pub listed_as_transversal: Option<bool>,
    pub verdict: VerificationVerdict,
}

impl Candidate {
    pub fn agrees(&self) -> bool {
        self.listed_as_transversal.is_none_or(|b| b == self.verdict.is_logical)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Row {
    pub code: String,
    pub name: String,
    pub parameters: CodeParameters,
    pub distance_strategy: DistanceStrategy,
    pub uniform_angles: Option<UniformAngles>,
    /// Labels `L` with `L^⊗n` logical.
    pub uniform_clifford_labels: Vec<CliffordLabel>,
    pub candidates: Vec<Candidate>,
}

impl Table1Row {
    pub fn candidate(&self, gate: &str) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.gate == gate)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Report {
    pub scope: &'static str,
    pub rows: Vec<Table1Row>,
}

impl Table1Report {
    pub fn row(&self, code: &str) -> Option<&Table1Row> {
        self.rows.iter().find(|r| r.code == code)
    }

    /// Candidates whose verdict disagrees with the listing.
    pub fn mismatches(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| {
                r.candidates
                    .iter()
                    .filter(|c| !c.agrees())
                    .map(move |c| format!("{} {}", r.code, c.gate))
            })
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let _ = write!(
                out,
                "{} {}  d={} via {:?}",
                row.code, row.name, row.parameters.d, row.distance_strategy
            );
            if let Some(ua) = &row.uniform_angles {
                match ua.fundamental {
                    Some(f) => {
                        let _ = write!(out, "  uniform diagonal angles: multiples of 2π·{f}");
                    }
                    None => out.push_str("  uniform diagonal angles: all"),
                }
            }
            out.push('\n');
            let labels: Vec<&str> = row.uniform_clifford_labels.iter().map(|l| l.word()).collect();
            let _ = writeln!(out, "  uniform Clifford labels that are logical: {}", labels.join(" "));
            for c in &row.candidates {
                let listed = match c.listed_as_transversal {
                    Some(true) => "listed transversal",
                    Some(false) => "listed not transversal",
                    None => "trial",
                };
                let verdict = if c.verdict.is_logical { "logical" } else { "not logical" };
                let action = c
                    .verdict
                    .logical_action
                    .as_ref()
                    .map(describe_action)
                    .unwrap_or_default();
                let flag = if c.agrees() { "" } else { "  MISMATCH" };
                let _ = writeln!(
                    out,
                    "  {:<6} {:<12} {:<13} {:<24} {}{}",
                    c.gate,
                    verdict,
                    format!("{:?}", c.verdict.method),
                    action,
                    listed,
                    flag
                );
            }
        }
        let _ = writeln!(out, "note: {}", self.scope);
        out
    }
}

/// Names T-type and order-3 actions explicitly.
pub fn describe_action(a: &LogicalAction) -> String {
    match a {
        LogicalAction::DiagonalPhases { phases } if phases.len() == 2 => {
            format!("diag(1, exp(2πi·{}))", phases[1])
        }
        LogicalAction::Matrix {
            class: Some(LocalUnitaryClass::Clifford { label }),
            ..
        } => {
            format!(
                "{} (order {})",
                label.common_name().unwrap_or(label.word()),
                label.order()
            )
        }
        other => other.describe(),
    }
}

fn uniform_labels(s: &StabilizerGroup) -> Result<Vec<CliffordLabel>> {
    let mut out = Vec::new();
    for l in CliffordLabel::all() {
        if check_clifford_transversal(s, &TransversalGateSpec::uniform_clifford(s.n(), l))?.is_logical {
            out.push(l);
        }
    }
    Ok(out)
}

struct RowBuilder {
    code: String,
    name: String,
    s: StabilizerGroup,
    candidates: Vec<Candidate>,
}

impl RowBuilder {
    fn new(code: &str, name: &str, s: StabilizerGroup) -> Self {
        RowBuilder {
            code: code.to_string(),
            name: name.to_string(),
            s,
            candidates: Vec::new(),
        }
    }

    fn push(&mut self, gate: &str, listed: Option<bool>, spec: TransversalGateSpec, dense: bool) -> Result<()> {
        let verdict = if dense {
            verify_dense(&self.s, &spec, &Default::default())?
        } else {
            verify_gate(&self.s, &spec, &VerifyOptions::default())?
        };
        self.candidates.push(Candidate {
            gate: gate.to_string(),
            listed_as_transversal: listed,
            verdict,
        });
        Ok(())
    }

    fn clifford(&mut self, gate: &str, word: &str, listed: Option<bool>) -> Result<()> {
        let spec = TransversalGateSpec::uniform_clifford(self.s.n(), CliffordLabel::from_word(word)?);
        self.push(gate, listed, spec, false)
    }

    fn cnot(&mut self, listed: bool) -> Result<()> {
        self.push(
            "CNOT",
            Some(listed),
            TransversalGateSpec::transversal_cnot(self.s.n()),
            false,
        )
    }

    fn diagonal(&mut self, gate: &str, q: u64, listed: Option<bool>) -> Result<()> {
        let spec = TransversalGateSpec::uniform_diagonal(self.s.n(), RationalAngle::turn_fraction(q));
        self.push(gate, listed, spec, false)
    }

    fn finish(self) -> Result<Table1Row> {
        let report = self.s.minimum_distance()?;
        let uniform_angles = match CssCode::from_stabilizer(&self.s) {
            Some(css) => Some(allowed_uniform_angles(&css)?),
            None => None,
        };
        Ok(Table1Row {
            code: self.code,
            name: self.name,
            parameters: report.params,
            distance_strategy: report.strategy,
            uniform_angles,
            uniform_clifford_labels: uniform_labels(&self.s)?,
            candidates: self.candidates,
        })
    }
}

pub fn table1_report() -> Result<Table1Report> {
    let mut rows = Vec::new();

    let mut five = RowBuilder::new("[[5,1,3]]", "five-qubit", catalog::five_qubit());
    for word in ["PH", "HP"] {
        let spec = TransversalGateSpec::uniform_clifford(5, CliffordLabel::from_word(word)?);
        let listed = (word == "PH").then_some(true);
        five.push(word, listed, spec, true)?;
    }
    five.clifford("H", "H", Some(false))?;
    five.clifford("P", "P", Some(false))?;
    five.cnot(false)?;
    five.diagonal("T", 8, Some(false))?;
    rows.push(five.finish()?);

    let mut steane = RowBuilder::new("[[7,1,3]]", "Steane", catalog::steane());
    steane.clifford("H", "H", Some(true))?;
    steane.clifford("P", "P", Some(true))?;
    steane.cnot(true)?;
    steane.diagonal("T", 8, Some(false))?;
    rows.push(steane.finish()?);

    let mut shor = RowBuilder::new("[[9,1,3]]", "Shor", catalog::shor());
    shor.cnot(true)?;
    shor.clifford("H", "H", Some(false))?;
    shor.clifford("P", "P", Some(false))?;
    shor.diagonal("T", 8, Some(false))?;
    rows.push(shor.finish()?);

    for (m, gate) in [(4usize, "T"), (5, "T_5")] {
        let q = rm_css_family(1, m)?;
        let mut row = RowBuilder::new(&format!("[[{},1,3]]", q.n), &format!("RM*(1,{m}) CSS"), q.code);
        row.diagonal(gate, 1 << (m - 1), Some(true))?;
        row.cnot(true)?;
        row.clifford("H", "H", Some(false))?;
        rows.push(row.finish()?);
    }

    Ok(Table1Report {
        scope: SCOPE_NOTE,
        rows,
    })
}
