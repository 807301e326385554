//! Reed-Muller codes and the CSS family with transversal diagonal gates.

use transversal::classical::{reed_muller, rm_css_family};
use transversal::transversal::allowed_uniform_angles;

fn main() -> transversal::Result<()> {
    for m in 1..=5 {
        for r in 0..=m {
            let c = reed_muller(r, m)?;
            // enumeration is capped; large codes report no weight
            let d = match c.min_weight() {
                Ok(Some(d)) => d.to_string(),
                _ => "-".to_string(),
            };
            println!(
                "RM({r},{m}): n={} k={} d={d} divisor={}",
                c.n(),
                c.k(),
                c.divisor().map_or("-".to_string(), |g| g.to_string())
            );
        }
    }
    for (r, m) in [(1, 3), (1, 4), (1, 5), (2, 5)] {
        let q = rm_css_family(r, m)?;
        let ua = allowed_uniform_angles(&q.css)?;
        let d = match q.code.minimum_distance() {
            Ok(rep) => rep.params.d.to_string(),
            Err(transversal::Error::DistanceCapExceeded { lower_bound }) => format!("≥{lower_bound}"),
            Err(e) => return Err(e),
        };
        println!(
            "RM-CSS({r},{m}): [[{},{},{d}]]  Δ={}  exact weight gcd {}  fundamental angle 2π·{}",
            q.n,
            q.k,
            q.delta,
            ua.weight_gcd,
            ua.fundamental.map_or("-".into(), |a| a.to_string())
        );
    }
    Ok(())
}
