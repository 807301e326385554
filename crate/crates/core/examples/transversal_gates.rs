//! Exact verification of transversal gates: symplectic for Cliffords,
//! coset weights for diagonal gates on CSS codes, dense otherwise.

use transversal::angle::RationalAngle;
use transversal::catalog;
use transversal::classical::rm_css_family;
use transversal::clifford::CliffordLabel;
use transversal::gate::{CoordinateGate, TransversalGateSpec};
use transversal::transversal::{classify_local_unitary, verify_gate, VerificationVerdict, VerifyOptions};

fn show(code: &str, v: &VerificationVerdict) {
    let action = v.logical_action.as_ref().map(|a| a.describe()).unwrap_or_default();
    println!(
        "{code:<10} {:<16} logical={:<5} {:?}  {action}",
        v.candidate, v.is_logical, v.method
    );
    if let Some(w) = &v.witness {
        println!("           witness: {w:?}");
    }
}

fn main() -> transversal::Result<()> {
    let opts = VerifyOptions::default();
    let steane = catalog::steane();
    let q15 = rm_css_family(1, 4)?.code;
    let t = RationalAngle::turn_fraction(8);

    show(
        "Steane",
        &verify_gate(
            &steane,
            &TransversalGateSpec::uniform_clifford(7, CliffordLabel::hadamard()),
            &opts,
        )?,
    );
    show(
        "Steane",
        &verify_gate(&steane, &TransversalGateSpec::transversal_cnot(7), &opts)?,
    );
    show(
        "Steane",
        &verify_gate(&steane, &TransversalGateSpec::uniform_diagonal(7, t), &opts)?,
    );
    show(
        "[[15,1,3]]",
        &verify_gate(&q15, &TransversalGateSpec::uniform_diagonal(15, t), &opts)?,
    );
    show(
        "[[15,1,3]]",
        &verify_gate(
            &q15,
            &TransversalGateSpec::uniform_clifford(15, CliffordLabel::hadamard()),
            &opts,
        )?,
    );

    let five = catalog::five_qubit();
    let ph = CliffordLabel::from_word("PH")?;
    show(
        "five-qubit",
        &verify_gate(
            &five,
            &TransversalGateSpec::uniform(5, CoordinateGate::Dense(ph.matrix())),
            &opts,
        )?,
    );

    if let Some(m) = CoordinateGate::Diagonal(t).matrix() {
        println!("T classifies as {:?}", classify_local_unitary(&m)?);
    }
    Ok(())
}
