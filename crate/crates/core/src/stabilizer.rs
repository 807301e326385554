//! Stabilizer groups, logical frames and structural predicates.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::bits::{complement_in, nullspace, BitVec, Echelon};
use crate::clifford::{CliffordLabel, CliffordTableau};
use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliOperator, Support};

/// Default cap on exhaustive enumeration, as a power of two.
pub const DEFAULT_MAX_ENUM_BITS: u32 = 26;

/// A validated stabilizer group: independent, commuting, Hermitian
/// generators. Together these exclude `−I` from the group.
#[derive(Clone)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
    echelon: Echelon,
}

/// The `[[n, k, d]]` parameters of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{}]]", self.n, self.k, self.d)
    }
}

/// Logical Pauli operators `X̄_i`, `Z̄_i` obeying the commutation relations
/// of the k-qubit Pauli group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicalFrame {
    pub x: Vec<PauliOperator>,
    pub z: Vec<PauliOperator>,
}

impl LogicalFrame {
    pub fn k(&self) -> usize {
        self.x.len()
    }

    /// `Ȳ_i = i X̄_i Z̄_i`.
    pub fn y(&self, i: usize) -> PauliOperator {
        self.x[i].mul_unchecked(&self.z[i]).times_i(1)
    }

    /// The frame operator for the logical Pauli `i^phase X^a Z^b` on k qubits.
    pub fn lift(&self, logical: &PauliOperator) -> PauliOperator {
        let n = self.x.first().map(|p| p.n()).unwrap_or(0);
        let mut out = PauliOperator::identity(n).times_i(logical.phase());
        for i in logical.x().iter_ones() {
            out = out.mul_unchecked(&self.x[i]);
        }
        for i in logical.z().iter_ones() {
            out = out.mul_unchecked(&self.z[i]);
        }
        out
    }

    /// Expresses a centralizer element as `stabilizer · logical`, returning
    /// the k-qubit logical Pauli (exact phase). `None` outside the centralizer.
    pub fn decompose(&self, group: &StabilizerGroup, p: &PauliOperator) -> Option<PauliOperator> {
        if !group.in_centralizer(p) {
            return None;
        }
        let k = self.k();
        let mut a = BitVec::zeros(k);
        let mut b = BitVec::zeros(k);
        for i in 0..k {
            if !p.commutes_unchecked(&self.z[i]) {
                a.set(i, true);
            }
            if !p.commutes_unchecked(&self.x[i]) {
                b.set(i, true);
            }
        }
        let bare = PauliOperator::from_parts(a.clone(), b.clone(), 0).ok()?;
        let lifted = self.lift(&bare);
        let residual = p.mul_unchecked(&lifted.inverse());
        let s = group.element_matching(&residual)?;
        // residual = i^t · s
        let t = (residual.phase() + 4 - s.phase()) & 3;
        PauliOperator::from_parts(a, b, t).ok()
    }

    /// Replicates a frame across `r` blocks using the interleaved layout
    /// `flat = r·j + block`. Logical qubit `block·k + i` is block `block`'s
    /// `i`-th logical qubit.
    pub fn tensor_power(&self, n: usize, r: usize) -> LogicalFrame {
        let spread = |p: &PauliOperator, block: usize| {
            let map: Vec<usize> = (0..n).map(|j| r * j + block).collect();
            p.embed(n * r, &map)
        };
        let mut x = Vec::new();
        let mut z = Vec::new();
        for block in 0..r {
            for i in 0..self.k() {
                x.push(spread(&self.x[i], block));
                z.push(spread(&self.z[i], block));
            }
        }
        LogicalFrame { x, z }
    }
}

/// Which exhaustive search produced a distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStrategy {
    /// Every element of every nontrivial logical coset.
    CosetEnumeration,
    /// Paulis in order of increasing weight.
    WeightOrdered,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrategyChoice {
    Auto,
    Force(DistanceStrategy),
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceOptions {
    pub strategy: StrategyChoice,
    /// Coset enumeration is chosen automatically when it needs at most
    /// `2^max_enum_bits` elements; the weight-ordered search gives up after
    /// that many candidates.
    pub max_enum_bits: u32,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            strategy: StrategyChoice::Auto,
            max_enum_bits: 28,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub params: CodeParameters,
    pub strategy: DistanceStrategy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralReport {
    pub bell_pair_free: bool,
    pub trivial_qubit_free: bool,
    /// 1-based coordinate pairs carrying a `[[2,0,2]]` factor.
    pub bell_pairs: Vec<(usize, usize)>,
    /// 1-based coordinates where every element is the identity.
    pub trivial_qubits: Vec<usize>,
}

impl StabilizerGroup {
    /// Validates and wraps a generator list. Checks run generator by
    /// generator, so the first offender is reported (1-based).
    pub fn new(generators: Vec<PauliOperator>) -> Result<Self> {
        let n = generators.first().map(|g| g.n()).unwrap_or(0);
        StabilizerGroup::with_n(n, generators)
    }

    /// Like [`new`](Self::new) but allows an empty generator list on `n` qubits.
    pub fn with_n(n: usize, generators: Vec<PauliOperator>) -> Result<Self> {
        let mut rows = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::LengthMismatch(n, g.n()));
            }
            if !g.is_hermitian() {
                return Err(Error::NonHermitian(i + 1));
            }
            for (j, h) in generators[..i].iter().enumerate() {
                if !g.commutes_unchecked(h) {
                    return Err(Error::NonCommuting(j + 1, i + 1));
                }
            }
            rows.push(g.interleaved());
            if Echelon::new(&rows, 2 * n).rank() < rows.len() {
                return Err(Error::Dependent(i + 1));
            }
        }
        let echelon = Echelon::new(&rows, 2 * n);
        Ok(StabilizerGroup { n, generators, echelon })
    }

    /// Parses one signed Pauli string per entry.
    pub fn from_strings(gens: &[&str]) -> Result<Self> {
        let ps: Result<Vec<PauliOperator>> = gens.iter().map(|s| s.parse()).collect();
        StabilizerGroup::new(ps?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.generators.len()
    }

    pub fn k(&self) -> usize {
        self.n - self.m()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn in_centralizer(&self, p: &PauliOperator) -> bool {
        p.n() == self.n && self.generators.iter().all(|g| g.commutes_unchecked(p))
    }

    /// Generator indices whose product equals `p` up to phase.
    pub fn decompose(&self, p: &PauliOperator) -> Option<Vec<usize>> {
        if p.n() != self.n {
            return None;
        }
        let (res, combo) = self.echelon.reduce(&p.interleaved());
        res.is_zero().then(|| combo.iter_ones().collect())
    }

    /// The group element with the same X/Z bits as `p`, if any.
    pub fn element_matching(&self, p: &PauliOperator) -> Option<PauliOperator> {
        let idx = self.decompose(p)?;
        Some(self.product_of(&idx))
    }

    fn product_of(&self, idx: &[usize]) -> PauliOperator {
        idx.iter().fold(PauliOperator::identity(self.n), |acc, &i| {
            acc.mul_unchecked(&self.generators[i])
        })
    }

    /// Exact membership, phase included.
    pub fn contains(&self, p: &PauliOperator) -> bool {
        self.element_matching(p).is_some_and(|s| s.phase() == p.phase())
    }

    /// Membership up to phase.
    pub fn contains_up_to_phase(&self, p: &PauliOperator) -> bool {
        self.decompose(p).is_some()
    }

    fn check_cap(&self, bits: usize, cap_bits: u32, what: &'static str) -> Result<()> {
        if bits > cap_bits as usize {
            return Err(Error::CapExceeded {
                what,
                needed_bits: bits as u32,
                cap_bits,
            });
        }
        Ok(())
    }

    /// All `2^m` elements in Gray-code order, each exactly once.
    pub fn elements(&self) -> Result<Elements<'_>> {
        self.elements_capped(DEFAULT_MAX_ENUM_BITS)
    }

    pub fn elements_capped(&self, cap_bits: u32) -> Result<Elements<'_>> {
        self.check_cap(self.m(), cap_bits, "stabilizer enumeration")?;
        Ok(Elements::new(&self.generators, self.n))
    }

    /// A basis for the subgroup `{ s ∈ S : supp(s) ⊆ ω }`, with exact phases.
    pub fn restricted_subgroup(&self, omega: &Support) -> Vec<PauliOperator> {
        let outside: Vec<usize> = omega.complement().coords();
        // coefficient vectors c with Σ c_i g_i vanishing outside ω
        let m = self.m();
        let mut columns = Vec::with_capacity(2 * outside.len());
        for &j in &outside {
            let mut cx = BitVec::zeros(m);
            let mut cz = BitVec::zeros(m);
            for (i, g) in self.generators.iter().enumerate() {
                cx.set(i, g.x().get(j));
                cz.set(i, g.z().get(j));
            }
            columns.push(cx);
            columns.push(cz);
        }
        nullspace(&columns, m)
            .into_iter()
            .map(|c| self.product_of(&c.iter_ones().collect::<Vec<_>>()))
            .collect()
    }

    /// `true` when every generator is purely X-type or purely Z-type.
    pub fn is_css(&self) -> bool {
        self.generators.iter().all(|g| g.is_x_type() || g.is_z_type())
    }

    /// Canonical logical frame.
    ///
    /// The centralizer is computed as a symplectic null space over the
    /// interleaved layout (pivots on the lowest coordinate, X before Z), the
    /// basis vectors outside the stabilizer span are kept in order, and a
    /// symplectic Gram-Schmidt pass pairs them up. For CSS-form groups the
    /// X- and Z-type centralizers are used separately, so `X̄_i` are X-type
    /// and `Z̄_i` are Z-type.
    pub fn logical_frame(&self) -> LogicalFrame {
        let n = self.n;
        let candidates: Vec<BitVec> = if self.is_css() && self.m() > 0 {
            let zs: Vec<BitVec> = self
                .generators
                .iter()
                .filter(|g| g.is_z_type() && !g.is_identity_up_to_phase())
                .map(|g| g.z().clone())
                .collect();
            let xs: Vec<BitVec> = self
                .generators
                .iter()
                .filter(|g| g.is_x_type() && !g.is_identity_up_to_phase())
                .map(|g| g.x().clone())
                .collect();
            let x_cands = nullspace(&zs, n)
                .into_iter()
                .map(|v| PauliOperator::x_type(&v).interleaved());
            let z_cands = nullspace(&xs, n)
                .into_iter()
                .map(|v| PauliOperator::z_type(&v).interleaved());
            x_cands.chain(z_cands).collect()
        } else {
            // ⟨g, v⟩ = g.x·v.z + g.z·v.x: swap each (x, z) pair of g.
            let twisted: Vec<BitVec> = self
                .generators
                .iter()
                .map(|g| {
                    let mut swapped = PauliOperator::from_parts(g.z().clone(), g.x().clone(), 0).unwrap();
                    swapped = swapped.unsigned();
                    swapped.interleaved()
                })
                .collect();
            nullspace(&twisted, 2 * n)
        };
        let rows: Vec<BitVec> = self.generators.iter().map(|g| g.interleaved()).collect();
        let mut pool: Vec<PauliOperator> = complement_in(&rows, &candidates, 2 * n)
            .iter()
            .map(PauliOperator::from_interleaved)
            .collect();
        let mut x = Vec::new();
        let mut z = Vec::new();
        while !pool.is_empty() {
            let a = pool.remove(0);
            let pos = pool
                .iter()
                .position(|u| !u.commutes_unchecked(&a))
                .expect("centralizer modulo the stabilizer is symplectic");
            let b = pool.remove(pos);
            for u in pool.iter_mut() {
                let with_b = !u.commutes_unchecked(&b);
                let with_a = !u.commutes_unchecked(&a);
                if with_b {
                    *u = u.mul_unchecked(&a);
                }
                if with_a {
                    *u = u.mul_unchecked(&b);
                }
            }
            x.push(a.unsigned());
            z.push(b.unsigned());
        }
        LogicalFrame { x, z }
    }

    /// Exact minimum distance of `C(S) \ S`.
    pub fn minimum_distance(&self) -> Result<DistanceReport> {
        self.minimum_distance_with(&DistanceOptions::default())
    }

    pub fn minimum_distance_with(&self, opts: &DistanceOptions) -> Result<DistanceReport> {
        crate::distance::minimum_distance(self, opts)
    }

    /// Trivially encoded qubits and `[[2,0,2]]` factors.
    pub fn structural_report(&self) -> StructuralReport {
        let n = self.n;
        let trivial: Vec<usize> = (0..n)
            .filter(|&j| self.generators.iter().all(|g| g.letter(j) == Letter::I))
            .map(|j| j + 1)
            .collect();
        let mut bell = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut exact = 0;
                for la in Letter::NONTRIVIAL {
                    for lb in Letter::NONTRIVIAL {
                        let mut letters = vec![Letter::I; n];
                        letters[a] = la;
                        letters[b] = lb;
                        if self.contains_up_to_phase(&PauliOperator::from_letters(&letters, 0)) {
                            exact += 1;
                        }
                    }
                }
                if exact == 3 {
                    bell.push((a + 1, b + 1));
                }
            }
        }
        StructuralReport {
            bell_pair_free: bell.is_empty(),
            trivial_qubit_free: trivial.is_empty(),
            bell_pairs: bell,
            trivial_qubits: trivial,
        }
    }

    /// `S^{⊗r}` on `r·n` qubits; qubit `j` of block `b` sits at `r·j + b`.
    pub fn tensor_power(&self, r: usize) -> Result<StabilizerGroup> {
        if r == 0 {
            return Err(Error::InvalidParameters("tensor power needs r >= 1".into()));
        }
        let n = self.n;
        let mut gens = Vec::with_capacity(self.m() * r);
        for block in 0..r {
            let map: Vec<usize> = (0..n).map(|j| r * j + block).collect();
            for g in &self.generators {
                gens.push(g.embed(n * r, &map));
            }
        }
        StabilizerGroup::with_n(n * r, gens)
    }

    /// Conjugates every generator by a Clifford (Heisenberg picture).
    pub fn conjugated(&self, u: &CliffordTableau) -> Result<StabilizerGroup> {
        StabilizerGroup::with_n(self.n, self.generators.iter().map(|g| u.conjugate(g)).collect())
    }

    /// A random `n`-qubit group with `m` generators: `⟨±Z_1, …, ±Z_m⟩`
    /// scrambled by random Clifford layers.
    pub fn random<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> StabilizerGroup {
        assert!(m <= n);
        let mut u = CliffordTableau::identity(n);
        for _ in 0..(2 * n + 2) {
            let labels: Vec<CliffordLabel> = (0..n)
                .map(|_| CliffordLabel::all().nth(rng.gen_range(0..24)).unwrap())
                .collect();
            u = u.then(&CliffordTableau::from_labels(&labels));
            if n > 1 {
                for _ in 0..n {
                    let a = rng.gen_range(0..n);
                    let mut b = rng.gen_range(0..n - 1);
                    if b >= a {
                        b += 1;
                    }
                    u = u.then(&CliffordTableau::cnot(n, a, b));
                }
            }
        }
        let gens: Vec<PauliOperator> = (0..m)
            .map(|j| {
                let sign = if rng.gen_bool(0.5) { 2 } else { 0 };
                u.conjugate(&PauliOperator::single(n, j, Letter::Z).times_i(sign))
            })
            .collect();
        StabilizerGroup::with_n(n, gens).expect("Clifford image of a valid group")
    }
}

impl fmt::Debug for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "StabilizerGroup<{}>", gens.join(", "))
    }
}

impl PartialEq for StabilizerGroup {
    /// Same set of elements, phases included.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.m() == other.m() && other.generators.iter().all(|g| self.contains(g))
    }
}

/// Gray-code iterator over every element of a stabilizer group.
pub struct Elements<'a> {
    gens: &'a [PauliOperator],
    current: PauliOperator,
    step: u64,
    total: u64,
}

impl<'a> Elements<'a> {
    fn new(gens: &'a [PauliOperator], n: usize) -> Self {
        Elements {
            gens,
            current: PauliOperator::identity(n),
            step: 0,
            total: 1u64 << gens.len(),
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            // generators commute and square to +I, so toggling is exact
            let bit = self.step.trailing_zeros() as usize;
            self.current = self.current.mul_unchecked(&self.gens[bit]);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.step) as usize;
        (left, Some(left))
    }
}
