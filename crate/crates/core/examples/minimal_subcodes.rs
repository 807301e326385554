//! Minimal supports, their classification, reduced projectors and coverage.

use transversal::catalog;
use transversal::oracle::{partial_trace_projector, render_projector_terms};
use transversal::subcode::{check_uncovered_coordinate_lemma, coverage, subcode_projector_terms, subcode_report};

fn main() -> transversal::Result<()> {
    for (name, s) in [
        ("five-qubit", catalog::five_qubit()),
        ("six-qubit example", catalog::six_two_two()),
    ] {
        println!("{name}:");
        let rep = subcode_report(&s)?;
        for c in &rep.classes {
            let w: Vec<String> = c.witnesses.iter().map(|p| p.to_string()).collect();
            println!("  ω = {}  A_ω = {}  {:?}  {}", c.omega, c.a_omega, c.class, w.join(" "));
        }
        let cov = coverage(&s)?;
        println!("  uncovered: {:?}", cov.uncovered.one_based());
        for j in cov.uncovered.coords() {
            println!(
                "  uncovered-coordinate lemma at {}: {}",
                j + 1,
                check_uncovered_coordinate_lemma(&s, j)?
            );
        }

        let omega = &rep.minimal_supports[0];
        let terms = subcode_projector_terms(&s, omega)?;
        let dense = partial_trace_projector(&s, omega)?;
        let diff = dense.max_abs_diff(&render_projector_terms(&terms));
        let t: Vec<String> = terms.terms.iter().map(|p| p.to_string()).collect();
        println!(
            "  ρ on {omega} = (1/{}) Σ {}  (vs partial trace: {diff:.1e})",
            terms.b_omega,
            t.join(" + ")
        );
    }
    Ok(())
}
