//! Exact rational angles `θ = 2π·p/q`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `θ = 2π·p/q`, kept reduced with `0 ≤ p < q`; equality is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    p: u64,
    q: u64,
}

impl RationalAngle {
    pub const ZERO: RationalAngle = RationalAngle { p: 0, q: 1 };

    /// `2π·p/q` reduced modulo `2π`.
    pub fn new(p: i64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidParameters("angle denominator must be positive".into()));
        }
        let p = p.rem_euclid(q as i64) as u64;
        let g = gcd(p, q);
        Ok(RationalAngle { p: p / g, q: q / g })
    }

    /// `2π/q`.
    pub fn turn_fraction(q: u64) -> Self {
        RationalAngle::new(1, q).expect("q > 0")
    }

    pub fn numerator(self) -> u64 {
        self.p
    }

    pub fn denominator(self) -> u64 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.p == 0
    }

    pub fn radians(self) -> f64 {
        std::f64::consts::TAU * self.p as f64 / self.q as f64
    }

    pub fn scale(self, k: i64) -> RationalAngle {
        let p = (self.p as i128 * k as i128).rem_euclid(self.q as i128);
        RationalAngle::new(p as i64, self.q).unwrap()
    }
}

impl fmt::Display for RationalAngle {
    /// `p/q` as a fraction of a full turn.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    /// Parses `p/q` (a fraction of `2π`) or an integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameters(format!("bad angle {s:?}, expected p/q"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        RationalAngle::new(p, q)
    }
}

impl Serialize for RationalAngle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::ops::Add for RationalAngle {
    type Output = RationalAngle;

    fn add(self, other: RationalAngle) -> RationalAngle {
        let q = self.q / gcd(self.q, other.q) * other.q;
        let p = self.p * (q / self.q) + other.p * (q / other.q);
        RationalAngle::new((p % q) as i64, q).unwrap()
    }
}

impl std::ops::Neg for RationalAngle {
    type Output = RationalAngle;

    fn neg(self) -> RationalAngle {
        RationalAngle::new(-(self.p as i64), self.q).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_wraps() {
        assert_eq!(RationalAngle::new(2, 16).unwrap(), RationalAngle::turn_fraction(8));
        assert_eq!(RationalAngle::new(-1, 4).unwrap(), RationalAngle::new(3, 4).unwrap());
        assert!(RationalAngle::new(5, 5).unwrap().is_zero());
        assert!(RationalAngle::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic() {
        let t = RationalAngle::turn_fraction(8);
        assert_eq!(t.scale(4), RationalAngle::new(1, 2).unwrap());
        assert_eq!(t + -t, RationalAngle::ZERO);
        assert_eq!("3/12".parse::<RationalAngle>().unwrap().to_string(), "1/4");
    }
}
