//! Dense ground truth: codewords, projectors, Pauli expansion and the
//! extraction of same-support logical representatives.

use transversal::catalog;
use transversal::clifford::CliffordLabel;
use transversal::distance::minimum_weight_logicals;
use transversal::gate::TransversalGateSpec;
use transversal::oracle::{codewords, extract_logical_representatives, pauli_expand, projector_dense};

fn main() -> transversal::Result<()> {
    let s = catalog::four_two_two();
    let pq = projector_dense(&s)?;
    let terms: Vec<String> = pauli_expand(&pq)?
        .iter()
        .map(|(p, c)| format!("{:.2}·{p}", c.re))
        .collect();
    println!("P_Q of ⟨XXXX, ZZZZ⟩ = {}", terms.join(" + "));
    let cw = codewords(&s, &s.logical_frame())?;
    println!(
        "{} codewords, orthonormality error {:.1e}",
        cw.vectors.len(),
        cw.orthonormality_error()
    );

    let five = catalog::five_qubit();
    let frame = five.logical_frame();
    let alphas = minimum_weight_logicals(&five, 26)?;
    println!("{} minimum-weight logicals on the five-qubit code", alphas.len());
    let spec = TransversalGateSpec::uniform_clifford(5, CliffordLabel::from_word("PH")?);
    for alpha in alphas.iter().take(4) {
        for t in extract_logical_representatives(&five, &frame, &spec, alpha)? {
            println!("  α = {alpha}  ->  {} (logical {})", t.pauli, t.logical);
        }
    }
    Ok(())
}
