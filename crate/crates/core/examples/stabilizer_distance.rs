//! Code parameters, logical frames, structure and tensor powers.

use transversal::catalog;
use transversal::stabilizer::{DistanceOptions, DistanceStrategy, StrategyChoice};
use transversal::StabilizerGroup;

fn main() -> transversal::Result<()> {
    let codes = [
        ("four-qubit", catalog::four_two_two()),
        ("five-qubit", catalog::five_qubit()),
        ("Steane", catalog::steane()),
        ("Shor", catalog::shor()),
    ];
    for (name, s) in &codes {
        let rep = s.minimum_distance()?;
        let p = rep.params;
        println!("{name:<10} [[{},{},{}]] via {:?}", p.n, p.k, p.d, rep.strategy);
        let frame = s.logical_frame();
        for i in 0..frame.k() {
            println!("  X̄{i} = {}  Z̄{i} = {}", frame.x[i], frame.z[i]);
        }
    }

    // both exact strategies agree
    let s = catalog::five_qubit().tensor_power(2)?;
    for strategy in [DistanceStrategy::CosetEnumeration, DistanceStrategy::WeightOrdered] {
        let opts = DistanceOptions {
            strategy: StrategyChoice::Force(strategy),
            ..DistanceOptions::default()
        };
        let p = s.minimum_distance_with(&opts)?.params;
        println!("[[5,1,3]]^⊗2 by {strategy:?}: [[{},{},{}]]", p.n, p.k, p.d);
    }

    let s = StabilizerGroup::from_strings(&["XXII", "ZZII", "IIZI"])?;
    let rep = s.structural_report();
    println!(
        "⟨XXII, ZZII, IIZI⟩: Bell pairs {:?}, trivial qubits {:?}",
        rep.bell_pairs, rep.trivial_qubits
    );

    match StabilizerGroup::from_strings(&["XX", "YY", "ZZ"]) {
        Err(e) => println!("⟨XX, YY, ZZ⟩ rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
