//! Checks that a fixed gate battery only finds Clifford logical actions
//! where the uniform diagonal angles allow nothing more.

fn main() -> transversal::Result<()> {
    for scan in transversal::consistency::consistency_scan()? {
        let fundamental = scan
            .uniform_angles
            .and_then(|u| u.fundamental)
            .map_or("-".to_string(), |a| format!("2π·{a}"));
        let odd: Vec<&str> = scan.non_clifford().iter().map(|e| e.gate.as_str()).collect();
        println!(
            "{:<18} fundamental {:<8} logical {:>2}/{:<2} applies={:<5} consistent={}  non-Clifford: {odd:?}",
            scan.code,
            fundamental,
            scan.logical_count(),
            scan.entries.len(),
            scan.applies,
            scan.consistent()
        );
    }
    Ok(())
}
