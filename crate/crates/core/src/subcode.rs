//! Minimal supports, minimal subcodes and coordinate coverage.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliOperator, Support};
use crate::stabilizer::{StabilizerGroup, DEFAULT_MAX_ENUM_BITS};

/// The two shapes a minimal subcode can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MinimalClass {
    /// `[[|ω|, |ω|−1, 1]]`: a single element with support `ω`.
    ParityType,
    /// `[[|ω|, |ω|−2, 2]]`: three elements, letterwise `{X, Y, Z}`.
    QuantumType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalSubcodeReport {
    pub omega: Support,
    pub a_omega: usize,
    pub class: MinimalClass,
    /// Elements with support exactly `ω`, sorted by string form.
    pub witnesses: Vec<PauliOperator>,
    /// For three witnesses: whether they carry distinct letters at every
    /// coordinate of `ω`. Always `true` for one witness.
    pub letters_distinct: bool,
}

/// Inclusion-minimal elements of `S_j` for one uncovered coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UncoveredCoordinate {
    /// 1-based.
    pub coordinate: usize,
    pub minimal_elements: Vec<PauliOperator>,
    /// Distinct letters at the coordinate among the minimal elements.
    pub axes: Vec<char>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub covered: Support,
    pub uncovered: Support,
    pub per_coordinate: Vec<UncoveredCoordinate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectorTerms {
    pub omega: Support,
    pub b_omega: usize,
    /// Elements with support inside `ω`, restricted to `ω`, sorted.
    pub terms: Vec<PauliOperator>,
}

/// Full subcode report for one group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubcodeReport {
    pub minimal_supports: Vec<Support>,
    pub classes: Vec<MinimalSubcodeReport>,
    pub covered: Support,
    pub uncovered: Support,
    pub per_coordinate: Vec<UncoveredCoordinate>,
}

/// Keeps the inclusion-minimal members of a set of supports, returned in
/// lexicographic order.
fn antichain(supports: impl IntoIterator<Item = Support>) -> Vec<Support> {
    let mut all: Vec<Support> = supports.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    all.sort_by_key(|s| s.len());
    let mut kept: Vec<Support> = Vec::new();
    for s in all {
        if !kept.iter().any(|k| k.is_subset_of(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

fn nonidentity_elements(s: &StabilizerGroup, cap_bits: u32) -> Result<Vec<PauliOperator>> {
    Ok(s.elements_capped(cap_bits)?
        .filter(|e| !e.is_identity_up_to_phase())
        .collect())
}

/// All inclusion-minimal supports of nonidentity elements, sorted.
pub fn minimal_supports(s: &StabilizerGroup) -> Result<Vec<Support>> {
    minimal_supports_capped(s, DEFAULT_MAX_ENUM_BITS)
}

pub fn minimal_supports_capped(s: &StabilizerGroup, cap_bits: u32) -> Result<Vec<Support>> {
    Ok(antichain(
        nonidentity_elements(s, cap_bits)?.iter().map(|e| e.support()),
    ))
}

/// Every element of the subgroup supported inside `omega`.
fn elements_within(s: &StabilizerGroup, omega: &Support) -> Result<Vec<PauliOperator>> {
    let basis = s.restricted_subgroup(omega);
    let sub = StabilizerGroup::with_n(s.n(), basis).expect("subgroup of a valid group");
    Ok(sub.elements()?.collect())
}

/// Classifies the minimal subcode on `omega`.
pub fn classify_minimal_subcode(s: &StabilizerGroup, omega: &Support) -> Result<MinimalSubcodeReport> {
    if omega.n() != s.n() {
        return Err(Error::LengthMismatch(s.n(), omega.n()));
    }
    let inside = elements_within(s, omega)?;
    let not_minimal = || Error::NotAMinimalSupport(omega.one_based());
    let mut witnesses = Vec::new();
    for e in inside.iter().filter(|e| !e.is_identity_up_to_phase()) {
        if e.support() == *omega {
            witnesses.push(e.clone());
        } else {
            return Err(not_minimal());
        }
    }
    if witnesses.is_empty() {
        return Err(not_minimal());
    }
    witnesses.sort_by_key(|w| w.to_string());
    let letters_distinct = witnesses.len() == 1
        || omega.coords().into_iter().all(|j| {
            let letters: BTreeSet<Letter> = witnesses.iter().map(|w| w.letter(j)).collect();
            letters.len() == witnesses.len()
        });
    let class = if witnesses.len() == 1 {
        MinimalClass::ParityType
    } else {
        MinimalClass::QuantumType
    };
    Ok(MinimalSubcodeReport {
        omega: omega.clone(),
        a_omega: witnesses.len(),
        class,
        witnesses,
        letters_distinct,
    })
}

/// The stabilizer elements with support inside `omega`, restricted to
/// `omega`; `ρ_ω = (1/B_ω) Σ terms`.
pub fn subcode_projector_terms(s: &StabilizerGroup, omega: &Support) -> Result<ProjectorTerms> {
    if omega.n() != s.n() {
        return Err(Error::LengthMismatch(s.n(), omega.n()));
    }
    let coords = omega.coords();
    let mut terms: Vec<PauliOperator> = elements_within(s, omega)?.iter().map(|e| e.restrict(&coords)).collect();
    terms.sort_by_key(|t| t.to_string());
    Ok(ProjectorTerms {
        omega: omega.clone(),
        b_omega: terms.len(),
        terms,
    })
}

fn coverage_from(s: &StabilizerGroup, elements: &[PauliOperator], minimal: &[Support]) -> CoverageReport {
    let n = s.n();
    let covered = minimal.iter().fold(Support::empty(n), |acc, m| acc.union(m));
    let uncovered = covered.complement();
    let per_coordinate = uncovered
        .coords()
        .into_iter()
        .map(|j| {
            let s_j: Vec<&PauliOperator> = elements.iter().filter(|e| e.letter(j) != Letter::I).collect();
            let minimal_j = antichain(s_j.iter().map(|e| e.support()));
            let mut minimal_elements: Vec<PauliOperator> = s_j
                .into_iter()
                .filter(|e| minimal_j.contains(&e.support()))
                .cloned()
                .collect();
            minimal_elements.sort_by_key(|e| e.to_string());
            let axes: BTreeSet<char> = minimal_elements.iter().map(|e| e.letter(j).as_char()).collect();
            UncoveredCoordinate {
                coordinate: j + 1,
                minimal_elements,
                axes: axes.into_iter().collect(),
            }
        })
        .collect();
    CoverageReport {
        covered,
        uncovered,
        per_coordinate,
    }
}

/// The union of minimal supports, and `M(S_j)` for each coordinate outside it.
pub fn coverage(s: &StabilizerGroup) -> Result<CoverageReport> {
    let elements = nonidentity_elements(s, DEFAULT_MAX_ENUM_BITS)?;
    let minimal = antichain(elements.iter().map(|e| e.support()));
    Ok(coverage_from(s, &elements, &minimal))
}

/// For an uncovered coordinate `j` (0-based): every two elements of
/// `M(S_j)` with different letters at `j` have different supports.
pub fn check_uncovered_coordinate_lemma(s: &StabilizerGroup, j: usize) -> Result<bool> {
    if j >= s.n() {
        return Err(Error::InvalidCoordinate(j + 1, s.n()));
    }
    let report = coverage(s)?;
    let entry = report
        .per_coordinate
        .iter()
        .find(|c| c.coordinate == j + 1)
        .ok_or(Error::CoordinateIsCovered(j + 1))?;
    let ms = &entry.minimal_elements;
    Ok(ms.iter().enumerate().all(|(a, r)| {
        ms[a + 1..]
            .iter()
            .all(|q| r.letter(j) == q.letter(j) || r.support() != q.support())
    }))
}

/// Minimal supports, their classes and coverage in one pass.
pub fn subcode_report(s: &StabilizerGroup) -> Result<SubcodeReport> {
    let elements = nonidentity_elements(s, DEFAULT_MAX_ENUM_BITS)?;
    let minimal = antichain(elements.iter().map(|e| e.support()));
    let classes = minimal
        .iter()
        .map(|omega| classify_minimal_subcode(s, omega))
        .collect::<Result<Vec<_>>>()?;
    let cov = coverage_from(s, &elements, &minimal);
    Ok(SubcodeReport {
        minimal_supports: minimal,
        classes,
        covered: cov.covered,
        uncovered: cov.uncovered,
        per_coordinate: cov.per_coordinate,
    })
}
