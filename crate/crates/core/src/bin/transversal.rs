use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use transversal::report::{self, Caps, ReportEnvelope};
use transversal::{io, Error, Result};

#[derive(Parser)]
#[command(
    name = "transversal",
    version,
    about = "Stabilizer code analysis and transversal gate checks"
)]
struct Cli {
    /// Emit the JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Enumeration cap (log2) for distance and subcode searches.
    #[arg(long, global = true, default_value_t = Caps::default().max_enum_bits)]
    max_enum_bits: u32,
    /// Largest qubit count for the dense oracle.
    #[arg(long, global = true, default_value_t = Caps::default().max_dense_qubits)]
    max_dense_qubits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, structure, minimal supports and coverage of a code file.
    Analyze { file: PathBuf },
    /// Decide whether a transversal gate is logical on a code.
    CheckGate {
        code: PathBuf,
        gate: PathBuf,
        /// Exit with status 2 when the gate is not logical.
        #[arg(long)]
        expect_logical: bool,
    },
    /// Build a punctured Reed-Muller CSS code.
    RmCss {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        /// Write the code file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum distance of a code file.
    Distance { file: PathBuf },
    /// Transversal-gate survey of five distance-3 codes.
    Table1,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidParameters(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<transversal::StabilizerGroup> {
    io::parse_code(&read(path)?).map_err(|e| Error::InvalidParameters(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(json: bool, env: &ReportEnvelope<T>, text: impl FnOnce(&T) -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(env).expect("reports serialize"));
    } else {
        print!("{}", text(&env.results));
    }
}

fn inputs(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let caps = Caps {
        max_enum_bits: cli.max_enum_bits,
        max_dense_qubits: cli.max_dense_qubits,
    };
    let bits = ("max_enum_bits", caps.max_enum_bits.to_string());
    match cli.command {
        Command::Analyze { file } => {
            let s = read_code(&file)?;
            let env = ReportEnvelope::run("analyze", inputs(&[("file", file.display().to_string()), bits]), || {
                report::analyze(&s, &caps)
            })?;
            emit(cli.json, &env, report::render_analyze);
        }
        Command::CheckGate {
            code,
            gate,
            expect_logical,
        } => {
            let s = read_code(&code)?;
            let g = io::parse_gate(&read(&gate)?)
                .map_err(|e| Error::InvalidParameters(format!("{}: {e}", gate.display())))?;
            let ins = inputs(&[
                ("code", code.display().to_string()),
                ("gate", gate.display().to_string()),
                ("max_dense_qubits", caps.max_dense_qubits.to_string()),
            ]);
            let env = ReportEnvelope::run("check-gate", ins, || report::check_gate(&s, &g, &caps))?;
            emit(cli.json, &env, report::render_check_gate);
            if expect_logical && !env.results.verdict.is_logical {
                return Ok(ExitCode::from(2));
            }
        }
        Command::RmCss { r, m, out } => {
            let ins = inputs(&[("r", r.to_string()), ("m", m.to_string()), bits]);
            let env = ReportEnvelope::run("rm-css", ins, || report::rm_css(r, m, &caps))?;
            if let Some(path) = out {
                std::fs::write(&path, &env.results.code_file)
                    .map_err(|e| Error::InvalidParameters(format!("{}: {e}", path.display())))?;
            }
            emit(cli.json, &env, report::render_rm_css);
        }
        Command::Distance { file } => {
            let s = read_code(&file)?;
            let env = ReportEnvelope::run(
                "distance",
                inputs(&[("file", file.display().to_string()), bits]),
                || report::distance(&s, &caps),
            )?;
            emit(cli.json, &env, |d| format!("{}\n", report::render_distance(d)));
        }
        Command::Table1 => {
            let env = ReportEnvelope::run("table1", BTreeMap::new(), report::table1)?;
            emit(cli.json, &env, |t| t.render());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
