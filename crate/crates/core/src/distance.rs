//! Exhaustive minimum-distance searches.

use rayon::prelude::*;

use crate::bits::words_for;
use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliOperator};
use crate::stabilizer::{
    CodeParameters, DistanceOptions, DistanceReport, DistanceStrategy, StabilizerGroup, StrategyChoice,
};

/// `log2((4^k − 1) · 2^m)`, rounded up.
pub fn coset_enumeration_bits(k: usize, m: usize) -> u32 {
    // 4^k − 1 < 4^k, and equals 2^(2k) − 1 which needs 2k bits for k ≥ 1
    (2 * k + m) as u32
}

/// `true` when coset enumeration fits under `2^cap_bits` steps.
pub fn coset_enumeration_fits(k: usize, m: usize, cap_bits: u32) -> bool {
    if 2 * k + m > 126 {
        return false;
    }
    (((1u128 << (2 * k)) - 1) << m) <= 1u128 << cap_bits.min(127)
}

pub(crate) fn minimum_distance(s: &StabilizerGroup, opts: &DistanceOptions) -> Result<DistanceReport> {
    if s.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    let strategy = match opts.strategy {
        StrategyChoice::Force(st) => st,
        StrategyChoice::Auto if coset_enumeration_fits(s.k(), s.m(), opts.max_enum_bits) => {
            DistanceStrategy::CosetEnumeration
        }
        StrategyChoice::Auto => DistanceStrategy::WeightOrdered,
    };
    let d = match strategy {
        DistanceStrategy::CosetEnumeration => {
            if !coset_enumeration_fits(s.k(), s.m(), opts.max_enum_bits) {
                return Err(Error::CapExceeded {
                    what: "coset enumeration",
                    needed_bits: coset_enumeration_bits(s.k(), s.m()),
                    cap_bits: opts.max_enum_bits,
                });
            }
            coset_distance(s)
        }
        DistanceStrategy::WeightOrdered => weight_ordered_distance(s, opts.max_enum_bits)?,
    };
    Ok(DistanceReport {
        params: CodeParameters { n: s.n(), k: s.k(), d },
        strategy,
    })
}

/// Every nontrivial logical class representative `X̄^a Z̄^b`, `(a, b) ≠ 0`.
fn logical_class_reps(s: &StabilizerGroup) -> Vec<PauliOperator> {
    let frame = s.logical_frame();
    let k = frame.k();
    let mut reps = Vec::with_capacity((1 << (2 * k)) - 1);
    for mask in 1u64..(1u64 << (2 * k)) {
        let mut p = PauliOperator::identity(s.n());
        for i in 0..k {
            if mask >> i & 1 == 1 {
                p = p.mul_unchecked(&frame.x[i]);
            }
            if mask >> (k + i) & 1 == 1 {
                p = p.mul_unchecked(&frame.z[i]);
            }
        }
        reps.push(p);
    }
    reps
}

type Packed<const W: usize> = ([u64; W], [u64; W]);

fn pack<const W: usize>(p: &PauliOperator) -> Packed<W> {
    let mut x = [0u64; W];
    let mut z = [0u64; W];
    x[..p.x().words().len()].copy_from_slice(p.x().words());
    z[..p.z().words().len()].copy_from_slice(p.z().words());
    (x, z)
}

#[inline(always)]
fn packed_weight<const W: usize>(a: &Packed<W>, b: &Packed<W>) -> u32 {
    let mut w = 0;
    for i in 0..W {
        w += ((a.0[i] ^ b.0[i]) | (a.1[i] ^ b.1[i])).count_ones();
    }
    w
}

fn coset_distance(s: &StabilizerGroup) -> usize {
    match words_for(s.n()) {
        1 => coset_kernel::<1>(s),
        2 => coset_kernel::<2>(s),
        3 => coset_kernel::<3>(s),
        4 => coset_kernel::<4>(s),
        _ => coset_kernel_wide(s),
    }
}

/// Number of top generators fixed per parallel chunk.
const SPLIT_BITS: usize = 6;

fn coset_kernel<const W: usize>(s: &StabilizerGroup) -> usize {
    let gens: Vec<Packed<W>> = s.generators().iter().map(pack::<W>).collect();
    let reps: Vec<Packed<W>> = logical_class_reps(s).iter().map(pack::<W>).collect();
    let m = gens.len();
    let split = m.min(SPLIT_BITS);
    let (low, high) = gens.split_at(m - split);
    (0u64..1 << split)
        .into_par_iter()
        .map(|chunk| {
            let mut cur: Packed<W> = ([0; W], [0; W]);
            for (i, g) in high.iter().enumerate() {
                if chunk >> i & 1 == 1 {
                    for w in 0..W {
                        cur.0[w] ^= g.0[w];
                        cur.1[w] ^= g.1[w];
                    }
                }
            }
            let mut best = u32::MAX;
            let steps = 1u64 << low.len();
            for step in 0..steps {
                if step > 0 {
                    let g = &low[step.trailing_zeros() as usize];
                    for w in 0..W {
                        cur.0[w] ^= g.0[w];
                        cur.1[w] ^= g.1[w];
                    }
                }
                for r in &reps {
                    best = best.min(packed_weight(&cur, r));
                }
            }
            best
        })
        .min()
        .unwrap() as usize
}

fn coset_kernel_wide(s: &StabilizerGroup) -> usize {
    let reps = logical_class_reps(s);
    s.elements_capped(64)
        .expect("cap checked by caller")
        .map(|e| reps.iter().map(|r| r.mul_unchecked(&e).weight()).min().unwrap())
        .min()
        .unwrap()
}

/// Searches Paulis by increasing weight for a centralizer element outside
/// the stabilizer. Gives up after `2^cap_bits` candidates, reporting the
/// largest weight below which the search was complete.
fn weight_ordered_distance(s: &StabilizerGroup, cap_bits: u32) -> Result<usize> {
    let n = s.n();
    let m = s.m();
    let sw = words_for(m.max(1));
    // syndrome[j][letter] records which generators anticommute with it
    let mut syndromes = vec![[vec![0u64; sw], vec![0u64; sw], vec![0u64; sw]]; n];
    for (gi, g) in s.generators().iter().enumerate() {
        for (j, syn) in syndromes.iter_mut().enumerate() {
            for (li, l) in Letter::NONTRIVIAL.iter().enumerate() {
                let single = PauliOperator::single(n, j, *l);
                if !g.commutes_unchecked(&single) {
                    syn[li][gi / 64] |= 1 << (gi % 64);
                }
            }
        }
    }
    let mut search = WeightSearch {
        s,
        syndromes: &syndromes,
        budget: if cap_bits >= 63 { u64::MAX } else { 1u64 << cap_bits },
        letters: vec![Letter::I; n],
    };
    for w in 1..=n {
        let zero = vec![0u64; sw];
        match search.dfs(0, w, &zero) {
            Some(true) => return Ok(w),
            Some(false) => {}
            None => return Err(Error::DistanceCapExceeded { lower_bound: w }),
        }
    }
    unreachable!("k ≥ 1 guarantees a nontrivial logical operator")
}

struct WeightSearch<'a> {
    s: &'a StabilizerGroup,
    syndromes: &'a [[Vec<u64>; 3]],
    budget: u64,
    letters: Vec<Letter>,
}

impl WeightSearch<'_> {
    /// `Some(found)` on completion, `None` once the budget runs out.
    fn dfs(&mut self, start: usize, left: usize, syn: &[u64]) -> Option<bool> {
        if left == 0 {
            if self.budget == 0 {
                return None;
            }
            self.budget -= 1;
            if syn.iter().all(|&w| w == 0) {
                let p = PauliOperator::from_letters(&self.letters, 0);
                return Some(!self.s.contains_up_to_phase(&p));
            }
            return Some(false);
        }
        let n = self.letters.len();
        let mut next = vec![0u64; syn.len()];
        for j in start..=n - left {
            for (li, l) in Letter::NONTRIVIAL.iter().enumerate() {
                for (o, (a, b)) in next.iter_mut().zip(syn.iter().zip(&self.syndromes[j][li])) {
                    *o = a ^ b;
                }
                self.letters[j] = *l;
                let r = self.dfs(j + 1, left - 1, &next);
                self.letters[j] = Letter::I;
                match r {
                    Some(false) => {}
                    other => return other,
                }
            }
        }
        Some(false)
    }
}

/// All minimum-weight elements of `C(S) \ S`, with `+` sign, sorted.
/// Enumerates every nontrivial logical coset; intended for small codes.
pub fn minimum_weight_logicals(s: &StabilizerGroup, cap_bits: u32) -> Result<Vec<PauliOperator>> {
    if s.k() == 0 {
        return Err(Error::NoLogicalQubits);
    }
    if !coset_enumeration_fits(s.k(), s.m(), cap_bits) {
        return Err(Error::CapExceeded {
            what: "coset enumeration",
            needed_bits: coset_enumeration_bits(s.k(), s.m()),
            cap_bits,
        });
    }
    let reps = logical_class_reps(s);
    let mut best = usize::MAX;
    let mut found = Vec::new();
    for e in s.elements_capped(64)? {
        for r in &reps {
            let p = r.mul_unchecked(&e).unsigned();
            let w = p.weight();
            if w < best {
                best = w;
                found.clear();
            }
            if w == best {
                found.push(p);
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn both(s: &StabilizerGroup) -> (usize, usize) {
        let a = s
            .minimum_distance_with(&DistanceOptions {
                strategy: StrategyChoice::Force(DistanceStrategy::CosetEnumeration),
                max_enum_bits: 40,
            })
            .unwrap();
        let b = s
            .minimum_distance_with(&DistanceOptions {
                strategy: StrategyChoice::Force(DistanceStrategy::WeightOrdered),
                max_enum_bits: 40,
            })
            .unwrap();
        (a.params.d, b.params.d)
    }

    #[test]
    fn catalog_distances() {
        assert_eq!(both(&catalog::four_two_two()), (2, 2));
        assert_eq!(both(&catalog::five_qubit()), (3, 3));
        assert_eq!(both(&catalog::steane()), (3, 3));
        assert_eq!(both(&catalog::shor()), (3, 3));
    }

    #[test]
    fn zero_logical_qubits_is_an_error() {
        let s = StabilizerGroup::from_strings(&["XX", "ZZ"]).unwrap();
        assert_eq!(s.minimum_distance().unwrap_err(), Error::NoLogicalQubits);
    }

    #[test]
    fn weight_ordered_cap_reports_lower_bound() {
        let s = catalog::five_qubit();
        let err = s
            .minimum_distance_with(&DistanceOptions {
                strategy: StrategyChoice::Force(DistanceStrategy::WeightOrdered),
                max_enum_bits: 6,
            })
            .unwrap_err();
        // 15 weight-1 candidates fit, the 90 weight-2 ones do not
        assert_eq!(err, Error::DistanceCapExceeded { lower_bound: 2 });
    }

    #[test]
    fn five_qubit_minimum_weight_logicals() {
        let ls = minimum_weight_logicals(&catalog::five_qubit(), 26).unwrap();
        assert_eq!(ls.len(), 30);
        assert!(ls.iter().all(|p| p.weight() == 3));
    }

    #[test]
    fn fit_rule() {
        assert!(coset_enumeration_fits(1, 14, 28));
        assert!(coset_enumeration_fits(1, 26, 28));
        assert!(!coset_enumeration_fits(1, 30, 28));
        assert!(coset_enumeration_fits(2, 24, 28));
        assert!(!coset_enumeration_fits(2, 25, 28));
    }
}
