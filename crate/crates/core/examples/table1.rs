//! The transversal-gate survey of five distance-3 codes.

fn main() -> transversal::Result<()> {
    let report = transversal::table1::table1_report()?;
    print!("{}", report.render());
    let bad = report.mismatches();
    if !bad.is_empty() {
        println!("mismatches: {bad:?}");
    }
    Ok(())
}
