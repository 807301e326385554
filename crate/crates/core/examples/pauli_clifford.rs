//! Pauli products, commutation and Heisenberg-picture Clifford conjugation.

use transversal::clifford::{conjugate_by_single_qubit_clifford, CliffordLabel, CliffordTableau};
use transversal::pauli::pauli;

fn main() -> transversal::Result<()> {
    let a = pauli("XZZXI");
    let b = pauli("IXZZX");
    println!("{a} · {b} = {}", a.multiply(&b)?);
    println!("commute: {}", a.commutes(&b)?);
    println!("X·Z = {}", pauli("X").multiply(&pauli("Z"))?);

    let h = CliffordLabel::hadamard();
    println!("H† X H = {}", conjugate_by_single_qubit_clifford(&pauli("X"), 0, h)?);
    let cycle = CliffordLabel::from_word("PH")?;
    println!("PH has order {}", cycle.order());
    for p in ["X", "Y", "Z"] {
        println!(
            "  (PH)† {p} (PH) = {}",
            conjugate_by_single_qubit_clifford(&pauli(p), 0, cycle)?
        );
    }

    let cnot = CliffordTableau::cnot(2, 0, 1);
    for p in ["XI", "IX", "ZI", "IZ"] {
        println!("CNOT: {p} -> {}", cnot.conjugate(&pauli(p)));
    }
    println!("{} single-qubit Clifford labels", CliffordLabel::all().count());
    Ok(())
}
