//! Packed GF(2) vectors and the Gaussian elimination used by every
//! module that does linear algebra over the binary field.

use std::fmt;

/// A fixed-length vector over GF(2), packed 64 coordinates per word.
///
/// Bits beyond `len` are always zero, so word-level equality, hashing and
/// popcounts never see garbage.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVec::zeros(len);
        for j in 0..len {
            v.set(j, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            v.set(j, b);
        }
        v
    }

    /// Builds a vector with the given coordinates set.
    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for j in ones {
            v.set(j, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse01(s: &str) -> Option<Self> {
        let bits: Option<Vec<bool>> = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(|b| BitVec::from_bools(&b))
    }

    /// Low `len` bits of a single word, bit `j` of the word being coordinate `j`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        let mut v = BitVec::zeros(len);
        if len > 0 {
            v.words[0] = word & mask;
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, j: usize) -> bool {
        debug_assert!(j < self.len);
        (self.words[j >> 6] >> (j & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, j: usize, value: bool) {
        debug_assert!(j < self.len);
        let bit = 1u64 << (j & 63);
        if value {
            self.words[j >> 6] |= bit;
        } else {
            self.words[j >> 6] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, j: usize) {
        self.words[j >> 6] ^= 1u64 << (j & 63);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        let mut v = self.clone();
        for (a, b) in v.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
        v
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        let mut v = self.clone();
        for (a, b) in v.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
        v
    }

    pub fn not(&self) -> BitVec {
        let mut v = self.clone();
        for w in v.words.iter_mut() {
            *w = !*w;
        }
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        let r = self.len & 63;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of coordinates set in both vectors.
    #[inline]
    pub fn and_count(&self, other: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product over GF(2).
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        self.and_count(other) & 1 == 1
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `true` when every set coordinate of `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    /// Keeps only the listed coordinates, in the given order.
    pub fn select(&self, coords: &[usize]) -> BitVec {
        let mut v = BitVec::zeros(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            if self.get(c) {
                v.set(i, true);
            }
        }
        v
    }

    /// Deletes coordinate `j`.
    pub fn remove(&self, j: usize) -> BitVec {
        let coords: Vec<usize> = (0..self.len).filter(|&c| c != j).collect();
        self.select(&coords)
    }

    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut v = BitVec::zeros(self.len + other.len);
        for j in self.iter_ones() {
            v.set(j, true);
        }
        for j in other.iter_ones() {
            v.set(self.len + j, true);
        }
        v
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Row-reduced echelon form of a set of rows, remembering how each reduced
/// row was assembled from the inputs.
///
/// Pivots are taken at the lowest available column, so the result depends
/// only on the row space and the input order (for the combination record).
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
    /// combos[i] records which input rows XOR to rows[i].
    combos: Vec<BitVec>,
    /// Input rows that reduced to zero.
    dependent: Vec<usize>,
    ninputs: usize,
}

impl Echelon {
    pub fn new(input: &[BitVec], ncols: usize) -> Self {
        let ninputs = input.len();
        let mut ech = Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            dependent: Vec::new(),
            ninputs,
        };
        for (i, row) in input.iter().enumerate() {
            debug_assert_eq!(row.len(), ncols);
            let mut combo = BitVec::zeros(ninputs);
            combo.set(i, true);
            if !ech.insert(row.clone(), combo) {
                ech.dependent.push(i);
            }
        }
        ech.fully_reduce();
        ech
    }

    fn insert(&mut self, mut row: BitVec, mut combo: BitVec) -> bool {
        for (r, (p, c)) in self.rows.iter().zip(self.pivots.iter().zip(&self.combos)) {
            if row.get(*p) {
                row.xor_assign(r);
                combo.xor_assign(c);
            }
        }
        match row.first_one() {
            None => false,
            Some(p) => {
                let pos = self.pivots.partition_point(|&q| q < p);
                self.rows.insert(pos, row);
                self.pivots.insert(pos, p);
                self.combos.insert(pos, combo);
                true
            }
        }
    }

    fn fully_reduce(&mut self) {
        for i in (0..self.rows.len()).rev() {
            let p = self.pivots[i];
            for j in 0..i {
                if self.rows[j].get(p) {
                    let (head, tail) = self.rows.split_at_mut(i);
                    head[j].xor_assign(&tail[0]);
                    let (ch, ct) = self.combos.split_at_mut(i);
                    ch[j].xor_assign(&ct[0]);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Indices of input rows that were linear combinations of earlier ones.
    pub fn dependent_inputs(&self) -> &[usize] {
        &self.dependent
    }

    /// Reduces `v` against the basis. Returns the residual and which input
    /// rows were added; `v` lies in the row space iff the residual is zero.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut res = v.clone();
        let mut combo = BitVec::zeros(self.ninputs);
        for ((r, &p), c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if res.get(p) {
                res.xor_assign(r);
                combo.xor_assign(c);
            }
        }
        (res, combo)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Basis of the right kernel { v : row·v = 0 for every row }.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::zeros(self.ncols);
            v.set(free, true);
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                if r.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

pub fn rank(rows: &[BitVec], ncols: usize) -> usize {
    Echelon::new(rows, ncols).rank()
}

/// Reduced row basis of the span of `rows`.
pub fn row_basis(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    Echelon::new(rows, ncols).rows().to_vec()
}

/// Basis of { v : r·v = 0 for every r in rows }.
pub fn nullspace(rows: &[BitVec], ncols: usize) -> Vec<BitVec> {
    Echelon::new(rows, ncols).nullspace()
}

/// `true` when span(a) ⊆ span(b).
pub fn span_contains(b: &[BitVec], a: &[BitVec], ncols: usize) -> bool {
    let ech = Echelon::new(b, ncols);
    a.iter().all(|v| ech.contains(v))
}

/// Row-space equality by mutual rank checks.
pub fn span_equal(a: &[BitVec], b: &[BitVec], ncols: usize) -> bool {
    let ra = rank(a, ncols);
    let rb = rank(b, ncols);
    if ra != rb {
        return false;
    }
    let both: Vec<BitVec> = a.iter().chain(b).cloned().collect();
    rank(&both, ncols) == ra
}

/// Extends the span of `base` with rows of `candidates`, returning the
/// candidates (in order) that were independent of everything before them.
pub fn complement_in(base: &[BitVec], candidates: &[BitVec], ncols: usize) -> Vec<BitVec> {
    let mut all: Vec<BitVec> = base.to_vec();
    let mut picked = Vec::new();
    let mut r = rank(&all, ncols);
    for c in candidates {
        all.push(c.clone());
        let r2 = rank(&all, ncols);
        if r2 > r {
            picked.push(c.clone());
            r = r2;
        } else {
            all.pop();
        }
    }
    picked
}
