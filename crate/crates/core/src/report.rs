//! Command payloads shared by the binary and the tests.
//!
//! Each command returns a serializable result. [`ReportEnvelope`] wraps it
//! with the command name, the inputs and timing; everything except `timing`
//! is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::classical::{rm_css_family, RmCssInstance};
use crate::error::{Error, Result};
use crate::io::GateFile;
use crate::oracle::DenseCaps;
use crate::stabilizer::{DistanceOptions, DistanceStrategy, StabilizerGroup, StrategyChoice, StructuralReport};
use crate::subcode::{subcode_report, SubcodeReport};
use crate::table1::{describe_action, table1_report, Table1Report};
use crate::transversal::{allowed_uniform_angles, verify_gate, UniformAngles, VerificationVerdict, VerifyOptions};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Enumeration and dense-oracle caps.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub max_enum_bits: u32,
    pub max_dense_qubits: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_enum_bits: DistanceOptions::default().max_enum_bits,
            max_dense_qubits: DenseCaps::default().max_dense_qubits,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope<T: Serialize> {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub version: &'static str,
    pub results: T,
    pub timing: Timing,
}

impl<T: Serialize> ReportEnvelope<T> {
    /// Runs `f` and wraps its result.
    pub fn run(command: &str, inputs: BTreeMap<String, String>, f: impl FnOnce() -> Result<T>) -> Result<Self> {
        let start = Instant::now();
        let results = f()?;
        Ok(ReportEnvelope {
            command: command.to_string(),
            inputs,
            version: VERSION,
            results,
            timing: Timing {
                elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
            },
        })
    }
}

/// Distance outcome with cap exceedances downgraded to notes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DistanceResult {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub distance_strategy: Option<DistanceStrategy>,
    /// Set when the search stopped early.
    pub d_lower_bound: Option<usize>,
    pub note: Option<String>,
}

pub fn distance(s: &StabilizerGroup, caps: &Caps) -> Result<DistanceResult> {
    distance_with(s, StrategyChoice::Auto, caps)
}

pub fn distance_with(s: &StabilizerGroup, strategy: StrategyChoice, caps: &Caps) -> Result<DistanceResult> {
    let opts = DistanceOptions {
        strategy,
        max_enum_bits: caps.max_enum_bits,
    };
    let mut out = DistanceResult {
        n: s.n(),
        k: s.k(),
        d: None,
        distance_strategy: None,
        d_lower_bound: None,
        note: None,
    };
    match s.minimum_distance_with(&opts) {
        Ok(r) => {
            out.d = Some(r.params.d);
            out.distance_strategy = Some(r.strategy);
        }
        Err(Error::DistanceCapExceeded { lower_bound }) => {
            out.d_lower_bound = Some(lower_bound);
            out.note = Some(format!("weight-ordered search hit its cap; d >= {lower_bound}"));
        }
        Err(e @ (Error::CapExceeded { .. } | Error::NoLogicalQubits)) => out.note = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeResult {
    #[serde(flatten)]
    pub distance: DistanceResult,
    #[serde(flatten)]
    pub structure: StructuralReport,
    #[serde(flatten)]
    pub subcodes: Option<SubcodeReport>,
    /// Parts of the analysis skipped because of caps.
    pub omissions: Vec<String>,
}

pub fn analyze(s: &StabilizerGroup, caps: &Caps) -> Result<AnalyzeResult> {
    let distance = distance(s, caps)?;
    let mut omissions: Vec<String> = distance.note.iter().cloned().collect();
    let subcodes = match subcode_report(s) {
        Ok(r) => Some(r),
        Err(e @ Error::CapExceeded { .. }) => {
            omissions.push(format!("minimal supports: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    Ok(AnalyzeResult {
        distance,
        structure: s.structural_report(),
        subcodes,
        omissions,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckGateResult {
    pub n: usize,
    pub blocks: usize,
    #[serde(flatten)]
    pub verdict: VerificationVerdict,
}

pub fn check_gate(s: &StabilizerGroup, gate: &GateFile, caps: &Caps) -> Result<CheckGateResult> {
    let spec = gate.to_spec(s.n())?;
    let opts = VerifyOptions {
        dense: DenseCaps {
            max_dense_qubits: caps.max_dense_qubits,
            ..DenseCaps::default()
        },
        force_dense: false,
    };
    Ok(CheckGateResult {
        n: s.n(),
        blocks: spec.blocks(),
        verdict: verify_gate(s, &spec, &opts)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RmCssResult {
    #[serde(flatten)]
    pub instance: RmCssInstance,
    /// From the exact coset-weight gcd; `None` when it was not enumerable.
    pub uniform_angles: Option<UniformAngles>,
    pub distance: DistanceResult,
    /// `true` only when an exhaustive search confirmed `claimed_d`.
    pub distance_verified: bool,
    pub omissions: Vec<String>,
    /// The code in the stabilizer file format.
    #[serde(skip)]
    pub code_file: String,
}

pub fn rm_css(r: usize, m: usize, caps: &Caps) -> Result<RmCssResult> {
    let inst = rm_css_family(r, m)?;
    let mut omissions = Vec::new();
    let uniform_angles = match allowed_uniform_angles(&inst.css) {
        Ok(u) => Some(u),
        Err(e @ Error::CapExceeded { .. }) => {
            omissions.push(format!("uniform angles: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let distance = distance(&inst.code, caps)?;
    let distance_verified = distance.d == Some(inst.claimed_d);
    if !distance_verified {
        omissions.push(format!("distance {} claimed, not verified", inst.claimed_d));
    }
    let code_file = crate::io::write_code(&inst.code);
    Ok(RmCssResult {
        instance: inst,
        uniform_angles,
        distance,
        distance_verified,
        omissions,
        code_file,
    })
}

pub fn table1() -> Result<Table1Report> {
    table1_report()
}

pub fn render_distance(d: &DistanceResult) -> String {
    match (d.d, d.d_lower_bound) {
        (Some(v), _) => format!(
            "[[{},{},{}]] (via {:?})",
            d.n,
            d.k,
            v,
            d.distance_strategy.expect("set with d")
        ),
        (None, Some(lb)) => format!("[[{},{},>={lb}]] (search capped)", d.n, d.k),
        _ => format!(
            "[[{},{},?]] ({})",
            d.n,
            d.k,
            d.note.as_deref().unwrap_or("not computed")
        ),
    }
}

pub fn render_analyze(a: &AnalyzeResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "code: {}", render_distance(&a.distance));
    let _ = writeln!(
        out,
        "Bell-pair free: {}  trivial-qubit free: {}",
        a.structure.bell_pair_free, a.structure.trivial_qubit_free
    );
    for (i, j) in &a.structure.bell_pairs {
        let _ = writeln!(out, "  Bell pair on {{{i},{j}}}");
    }
    for j in &a.structure.trivial_qubits {
        let _ = writeln!(out, "  trivially encoded qubit at {j}");
    }
    if let Some(sc) = &a.subcodes {
        let _ = writeln!(out, "minimal supports: {}", sc.minimal_supports.len());
        for c in &sc.classes {
            let ws: Vec<String> = c.witnesses.iter().map(|w| w.to_string()).collect();
            let _ = writeln!(
                out,
                "  {:?} A={} {:?} {}",
                c.omega.one_based(),
                c.a_omega,
                c.class,
                ws.join(" ")
            );
        }
        let _ = writeln!(out, "covered: {:?}", sc.covered.one_based());
        let _ = writeln!(out, "uncovered: {:?}", sc.uncovered.one_based());
    }
    for o in &a.omissions {
        let _ = writeln!(out, "omitted: {o}");
    }
    out
}

pub fn render_check_gate(c: &CheckGateResult) -> String {
    let v = &c.verdict;
    let mut out = format!(
        "{}: {} ({:?})\n",
        v.candidate,
        if v.is_logical { "logical" } else { "not logical" },
        v.method
    );
    if let Some(a) = &v.logical_action {
        let _ = writeln!(out, "logical action: {}", describe_action(a));
    }
    if let Some(w) = &v.witness {
        let _ = writeln!(
            out,
            "witness: {}",
            serde_json::to_string(w).expect("witness serializes")
        );
        out.push_str("scope: only this candidate gate was tested\n");
    }
    out
}

pub fn render_rm_css(r: &RmCssResult) -> String {
    let i = &r.instance;
    let mut out = format!(
        "RM-CSS(r={}, m={}): n={} k={} Δ={} gate angle 2π·{} claimed d={}\n",
        i.r, i.m, i.n, i.k, i.delta, i.gate_angle, i.claimed_d
    );
    if let Some(u) = &r.uniform_angles {
        let f = u.fundamental.map(|f| format!("2π·{f}")).unwrap_or_else(|| "any".into());
        let _ = writeln!(out, "fundamental uniform angle: {f} (weight gcd {})", u.weight_gcd);
    }
    let _ = writeln!(
        out,
        "distance: {}{}",
        render_distance(&r.distance),
        if r.distance_verified {
            ", verified"
        } else {
            ", UNVERIFIED"
        }
    );
    for o in &r.omissions {
        let _ = writeln!(out, "omitted: {o}");
    }
    out
}
