//! Text formats for codes, classical codes and gate specs.
//!
//! All three share the same lexical rules: `#` starts a comment, blank lines
//! are skipped, and errors carry the 1-based line number.
//!
//! Gate files hold one descriptor per coordinate, or a single `ALL <descriptor>`:
//!
//! ```text
//! BLOCKS 2            # optional, must precede descriptors
//! PERM 2 3 1          # optional, π(1) π(2) ... (1-based)
//! H                   # Clifford word over {H, P} or alias I C S X Y Z
//! D 1/8               # diag(1, e^{2πi·1/8})
//! M 1 0 0 0 0 0 1 0   # row-major (re, im) of u00 u01 u10 u11
//! CNOT 1 2            # multi-block: CNOT, CZ, SWAP on 1-based blocks
//! IMG XI XX ZZ IZ     # multi-block: images of X_1..X_r then Z_1..Z_r
//! ```

use num_complex::Complex64;

use crate::angle::RationalAngle;
use crate::bits::BitVec;
use crate::classical::BinaryLinearCode;
use crate::clifford::{CliffordLabel, CliffordTableau};
use crate::error::{Error, Result};
use crate::gate::{CoordinateGate, TransversalGateSpec};
use crate::pauli::PauliOperator;
use crate::stabilizer::StabilizerGroup;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// `n=<int> k=<int>` in either order; `None` when the line is not a header.
fn parse_header(line: usize, l: &str) -> Result<Option<(Option<usize>, Option<usize>)>> {
    if !l.contains('=') {
        return Ok(None);
    }
    let (mut n, mut k) = (None, None);
    for tok in l.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("bad header token {tok:?}")))?;
        let v: usize = val
            .parse()
            .map_err(|_| parse_err(line, format!("bad integer {val:?}")))?;
        match key {
            "n" => n = Some(v),
            "k" => k = Some(v),
            _ => return Err(parse_err(line, format!("unknown header key {key:?}"))),
        }
    }
    Ok(Some((n, k)))
}

/// Reads a stabilizer code file: optional `n= k=` header, then one signed
/// Pauli string per line.
pub fn parse_code(text: &str) -> Result<StabilizerGroup> {
    let mut header: Option<(usize, Option<usize>, Option<usize>)> = None;
    let mut gens: Vec<(usize, PauliOperator)> = Vec::new();
    for (line, l) in content_lines(text) {
        if let Some((n, k)) = parse_header(line, l)? {
            if header.is_some() || !gens.is_empty() {
                return Err(parse_err(line, "header must be the first line"));
            }
            header = Some((line, n, k));
            continue;
        }
        let p: PauliOperator = l.parse().map_err(|e: Error| parse_err(line, e.to_string()))?;
        if let Some((_, g0)) = gens.first() {
            if p.n() != g0.n() {
                return Err(parse_err(line, format!("expected {} qubits, found {}", g0.n(), p.n())));
            }
        }
        gens.push((line, p));
    }
    let n = match (header.and_then(|h| h.1), gens.first()) {
        (Some(n), Some((line, g))) if g.n() != n => {
            return Err(parse_err(
                *line,
                format!("header says n={n}, generator has {} qubits", g.n()),
            ))
        }
        (Some(n), _) => n,
        (None, Some((_, g))) => g.n(),
        (None, None) => return Err(parse_err(1, "empty code file needs an n= header")),
    };
    let lines: Vec<usize> = gens.iter().map(|(l, _)| *l).collect();
    let s = StabilizerGroup::with_n(n, gens.into_iter().map(|(_, g)| g).collect()).map_err(|e| {
        // validation errors name 1-based generators; point at their lines
        let at = match &e {
            Error::NonHermitian(i) | Error::Dependent(i) => lines.get(i - 1).copied(),
            Error::NonCommuting(_, j) => lines.get(j - 1).copied(),
            _ => None,
        };
        parse_err(at.unwrap_or(0), e.to_string())
    })?;
    if let Some((line, _, Some(k))) = header {
        if s.k() != k {
            return Err(parse_err(
                line,
                format!("header says k={k}, generators give k={}", s.k()),
            ));
        }
    }
    Ok(s)
}

pub fn write_code(s: &StabilizerGroup) -> String {
    let mut out = format!("n={} k={}\n", s.n(), s.k());
    for g in s.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Reads a classical code file: `n= k=` header, then `k` rows of 0/1.
pub fn parse_classical(text: &str) -> Result<BinaryLinearCode> {
    let mut lines = content_lines(text);
    let (hline, h) = lines.next().ok_or_else(|| parse_err(1, "missing n= k= header"))?;
    let (n, k) = match parse_header(hline, h)? {
        Some((Some(n), Some(k))) => (n, k),
        _ => return Err(parse_err(hline, "expected header n=<int> k=<int>")),
    };
    let mut rows = Vec::new();
    let mut last = hline;
    for (line, l) in lines {
        let row = BitVec::parse01(l).ok_or_else(|| parse_err(line, format!("bad row {l:?}")))?;
        if row.len() != n {
            return Err(parse_err(line, format!("row has {} bits, expected {n}", row.len())));
        }
        rows.push(row);
        last = line;
    }
    if rows.len() != k {
        return Err(parse_err(last, format!("expected {k} rows, found {}", rows.len())));
    }
    BinaryLinearCode::new(n, rows).map_err(|e| parse_err(last, e.to_string()))
}

pub fn write_classical(c: &BinaryLinearCode) -> String {
    let mut out = format!("n={} k={}\n", c.n(), c.k());
    for r in c.rows() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// A parsed gate file; the qubit count is fixed when it meets a code.
#[derive(Clone, Debug, PartialEq)]
pub struct GateFile {
    pub blocks: usize,
    pub permutation: Option<Vec<usize>>,
    pub coords: GateCoords,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GateCoords {
    All(CoordinateGate),
    PerCoordinate(Vec<CoordinateGate>),
}

impl GateFile {
    pub fn to_spec(&self, n: usize) -> Result<TransversalGateSpec> {
        let coords = match &self.coords {
            GateCoords::All(g) => vec![g.clone(); n],
            GateCoords::PerCoordinate(v) => {
                if v.len() != n {
                    return Err(Error::LengthMismatch(n, v.len()));
                }
                v.clone()
            }
        };
        TransversalGateSpec::new(coords, self.permutation.clone())
    }
}

fn parse_block_index(line: usize, tok: Option<&str>, r: usize, default: usize) -> Result<usize> {
    let Some(tok) = tok else { return Ok(default) };
    let b: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("bad block index {tok:?}")))?;
    if b == 0 || b > r {
        return Err(parse_err(line, format!("block {b} out of range 1..={r}")));
    }
    Ok(b - 1)
}

fn parse_descriptor(line: usize, l: &str, blocks: usize) -> Result<CoordinateGate> {
    let mut toks = l.split_whitespace();
    let head = toks.next().expect("content lines are non-empty");
    let rest: Vec<&str> = toks.collect();
    match head {
        "D" => {
            if blocks > 1 {
                return Err(parse_err(line, "diagonal descriptors need BLOCKS 1"));
            }
            let [a] = rest[..] else {
                return Err(parse_err(line, "expected D p/q"));
            };
            let angle: RationalAngle = a.parse().map_err(|e: Error| parse_err(line, e.to_string()))?;
            Ok(CoordinateGate::Diagonal(angle))
        }
        "M" => {
            if blocks > 1 {
                return Err(parse_err(line, "dense descriptors need BLOCKS 1"));
            }
            if rest.len() != 8 {
                return Err(parse_err(
                    line,
                    format!("M takes 8 floats (re, im of u00 u01 u10 u11), found {}", rest.len()),
                ));
            }
            let v = rest
                .iter()
                .map(|t| {
                    t.parse::<f64>()
                        .map_err(|_| parse_err(line, format!("bad float {t:?}")))
                })
                .collect::<Result<Vec<f64>>>()?;
            let c = |i: usize| Complex64::new(v[2 * i], v[2 * i + 1]);
            let m = [[c(0), c(1)], [c(2), c(3)]];
            crate::oracle::check_unitary(&m).map_err(|e| parse_err(line, e.to_string()))?;
            Ok(CoordinateGate::Dense(m))
        }
        "CNOT" | "CZ" | "SWAP" => {
            if blocks < 2 {
                return Err(parse_err(line, format!("{head} needs BLOCKS >= 2")));
            }
            if rest.len() > 2 {
                return Err(parse_err(line, format!("{head} takes at most two block indices")));
            }
            let a = parse_block_index(line, rest.first().copied(), blocks, 0)?;
            let b = parse_block_index(line, rest.get(1).copied(), blocks, 1)?;
            if a == b {
                return Err(parse_err(line, "blocks must differ"));
            }
            Ok(CoordinateGate::MultiBlock(match head {
                "CNOT" => CliffordTableau::cnot(blocks, a, b),
                "CZ" => CliffordTableau::cz(blocks, a, b),
                _ => CliffordTableau::swap(blocks, a, b),
            }))
        }
        "IMG" => {
            if rest.len() != 2 * blocks {
                return Err(parse_err(line, format!("IMG takes {} Pauli strings", 2 * blocks)));
            }
            let ps = rest
                .iter()
                .map(|t| {
                    t.parse::<PauliOperator>()
                        .map_err(|e: Error| parse_err(line, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(p) = ps.iter().find(|p| p.n() != blocks) {
                return Err(parse_err(line, format!("image {p} should act on {blocks} qubits")));
            }
            let (x, z) = ps.split_at(blocks);
            let t = CliffordTableau::from_images(x.to_vec(), z.to_vec()).map_err(|e| parse_err(line, e.to_string()))?;
            Ok(CoordinateGate::MultiBlock(t))
        }
        _ => {
            let words: Vec<&str> = std::iter::once(head).chain(rest.iter().copied()).collect();
            let labels = words
                .iter()
                .map(|w| {
                    w.parse::<CliffordLabel>()
                        .map_err(|e: Error| parse_err(line, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            match (blocks, labels.len()) {
                (1, 1) => Ok(CoordinateGate::Clifford(labels[0])),
                (r, l) if r == l => Ok(CoordinateGate::MultiBlock(CliffordTableau::from_labels(&labels))),
                (r, l) => Err(parse_err(line, format!("expected {r} Clifford words, found {l}"))),
            }
        }
    }
}

pub fn parse_gate(text: &str) -> Result<GateFile> {
    let mut blocks: Option<usize> = None;
    let mut permutation = None;
    let mut all: Option<CoordinateGate> = None;
    let mut coords = Vec::new();
    for (line, l) in content_lines(text) {
        if let Some(r) = l.strip_prefix("BLOCKS") {
            if blocks.is_some() || all.is_some() || !coords.is_empty() {
                return Err(parse_err(line, "BLOCKS must come before any descriptor and only once"));
            }
            let r: usize = r.trim().parse().map_err(|_| parse_err(line, "expected BLOCKS <int>"))?;
            if r == 0 {
                return Err(parse_err(line, "BLOCKS must be positive"));
            }
            blocks = Some(r);
        } else if let Some(p) = l.strip_prefix("PERM") {
            if permutation.is_some() {
                return Err(parse_err(line, "duplicate PERM line"));
            }
            let images = p
                .split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(parse_err(line, format!("bad permutation entry {t:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            permutation = Some((line, images));
        } else if let Some(d) = l.strip_prefix("ALL ") {
            if all.is_some() || !coords.is_empty() {
                return Err(parse_err(line, "ALL replaces per-coordinate descriptors"));
            }
            all = Some(parse_descriptor(line, d.trim(), blocks.unwrap_or(1))?);
        } else {
            if all.is_some() {
                return Err(parse_err(line, "ALL replaces per-coordinate descriptors"));
            }
            coords.push(parse_descriptor(line, l, blocks.unwrap_or(1))?);
        }
    }
    let blocks = blocks.unwrap_or(1);
    let coords = match all {
        Some(g) => GateCoords::All(g),
        None if coords.is_empty() => return Err(parse_err(1, "gate file has no descriptors")),
        None => GateCoords::PerCoordinate(coords),
    };
    if let (Some((line, p)), GateCoords::PerCoordinate(v)) = (&permutation, &coords) {
        TransversalGateSpec::new(v.clone(), Some(p.clone())).map_err(|e| parse_err(*line, e.to_string()))?;
    }
    Ok(GateFile {
        blocks,
        permutation: permutation.map(|(_, p)| p),
        coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn code_round_trip() {
        let s = catalog::five_qubit();
        let back = parse_code(&write_code(&s)).unwrap();
        assert_eq!(back.generators(), s.generators());
        let text = "# five\nn=5 k=1\nXZZXI\n+IXZZX # second\n\nXIXZZ\nZXIXZ\n";
        assert_eq!(parse_code(text).unwrap(), s);
    }

    #[test]
    fn code_errors_name_lines() {
        assert_eq!(
            parse_code("XX\nZQ\n").unwrap_err(),
            Error::Parse {
                line: 2,
                msg: "malformed Pauli string \"ZQ\"".into()
            }
        );
        assert!(matches!(
            parse_code("n=2 k=1\nXX\nZZ\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_code("XX\n\nXI\nZZ"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(parse_code("XX\nZZZ\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_code("n=3 k=3\n").unwrap().k(), 3);
    }

    #[test]
    fn classical_files() {
        let c = parse_classical("n=4 k=2\n1100\n0011\n").unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(parse_classical(&write_classical(&c)).unwrap().rows(), c.rows());
        assert!(matches!(
            parse_classical("n=4 k=2\n1100\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_classical("n=4 k=2\n1100\n1100\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_classical("n=4 k=1\n11x0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn gate_files() {
        let g = parse_gate("ALL D 1/8\n").unwrap();
        assert_eq!(
            g.to_spec(3).unwrap(),
            TransversalGateSpec::uniform_diagonal(3, RationalAngle::turn_fraction(8))
        );
        let g = parse_gate("BLOCKS 2\nALL CNOT\n").unwrap();
        assert_eq!(g.to_spec(7).unwrap(), TransversalGateSpec::transversal_cnot(7));
        let g = parse_gate("BLOCKS 2\nIMG XX IX ZI ZZ\nCNOT 1 2\n").unwrap();
        assert_eq!(g.to_spec(2).unwrap(), TransversalGateSpec::transversal_cnot(2));
        let g = parse_gate("H\nPH\nM 1 0 0 0 0 0 0 1\nPERM 3 1 2\n").unwrap();
        let spec = g.to_spec(3).unwrap();
        assert_eq!(spec.permutation(), Some(&[2, 0, 1][..]));
        assert!(g.to_spec(4).is_err());
        let sixteen = format!("M {}\n", vec!["0"; 16].join(" "));
        assert!(matches!(parse_gate(&sixteen), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_gate("H\nPERM 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_gate("H\nBLOCKS 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_gate("M 1 0 1 0 0 0 1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
