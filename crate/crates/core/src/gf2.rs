//! Bit-packed GF(2) vectors and binary linear codes.
//!
//! Every vector and code row lives in a single machine word, so lengths are
//! limited to [`MAX_LENGTH`] coordinates. Coordinate `i` is the `i`-th
//! character of the textual form.

use std::fmt;
use std::ops::{BitAnd, BitXor, BitXorAssign};
use std::str::FromStr;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_LENGTH: usize = 64;

/// Largest dimension for which exhaustive codeword enumeration is attempted.
pub const DEFAULT_ENUMERATION_CAP: usize = 24;

#[inline]
pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

fn check_len(len: usize) -> Result<()> {
    if len > MAX_LENGTH {
        Err(Error::LengthTooLarge(len))
    } else {
        Ok(())
    }
}

/// A vector in GF(2)^n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    bits: u64,
}

impl BitVector {
    pub fn zeros(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(Self { len, bits: 0 })
    }

    pub fn ones(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(Self {
            len,
            bits: mask(len),
        })
    }

    pub fn from_support(len: usize, support: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        for &i in support {
            if i >= len {
                return Err(Error::LengthMismatch { left: i + 1, right: len });
            }
            v.bits |= 1 << i;
        }
        Ok(v)
    }

    #[inline]
    pub(crate) fn from_word(len: usize, bits: u64) -> Self {
        debug_assert!(len <= MAX_LENGTH);
        Self {
            len,
            bits: bits & mask(len),
        }
    }

    #[inline]
    pub(crate) fn word(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.bits >> i & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Euclidean inner product over GF(2).
    ///
    /// Panics if the lengths differ.
    pub fn dot(&self, other: &BitVector) -> u8 {
        assert_eq!(self.len, other.len, "dot product of vectors with different lengths");
        ((self.bits & other.bits).count_ones() & 1) as u8
    }

    pub fn support(&self) -> Vec<usize> {
        iter_ones(self.bits).collect()
    }
}

pub(crate) fn iter_ones(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let i = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i)
        }
    })
}

impl BitXor for BitVector {
    type Output = BitVector;
    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len);
        BitVector {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl BitXorAssign for BitVector {
    fn bitxor_assign(&mut self, rhs: BitVector) {
        assert_eq!(self.len, rhs.len);
        self.bits ^= rhs.bits;
    }
}

impl BitAnd for BitVector {
    type Output = BitVector;
    fn bitand(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len);
        BitVector {
            len: self.len,
            bits: self.bits & rhs.bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        check_len(s.len())?;
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        Ok(BitVector { len: s.len(), bits })
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<BitVector>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form over GF(2); zero rows are dropped.
pub fn rref(rows: &[BitVector], ncols: usize) -> Result<Echelon> {
    check_len(ncols)?;
    let mut words = Vec::with_capacity(rows.len());
    for r in rows {
        if r.len() != ncols {
            return Err(Error::LengthMismatch { left: r.len(), right: ncols });
        }
        words.push(r.word());
    }
    let pivots = rref_words(&mut words, ncols);
    Ok(Echelon {
        rank: words.len(),
        rows: words.into_iter().map(|w| BitVector::from_word(ncols, w)).collect(),
        pivots,
    })
}

/// In-place RREF on packed rows; returns pivot columns and truncates zero rows.
pub(crate) fn rref_words(rows: &mut Vec<u64>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let bit = 1u64 << col;
        let Some(found) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// A binary linear code stored by a generator matrix in reduced row echelon
/// form. Because the reduced form is unique, `==` is row-space equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
}

impl BinaryCode {
    pub fn new(n: usize, generators: &[BitVector]) -> Result<Self> {
        check_len(n)?;
        let mut rows = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != n {
                return Err(Error::LengthMismatch { left: g.len(), right: n });
            }
            rows.push(g.word());
        }
        Ok(Self::from_words(n, rows))
    }

    pub(crate) fn from_words(n: usize, mut rows: Vec<u64>) -> Self {
        debug_assert!(n <= MAX_LENGTH);
        let m = mask(n);
        for r in rows.iter_mut() {
            *r &= m;
        }
        rref_words(&mut rows, n);
        BinaryCode { n, rows }
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(BinaryCode { n, rows: Vec::new() })
    }

    pub fn full(n: usize) -> Result<Self> {
        check_len(n)?;
        Ok(BinaryCode {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn generator(&self) -> Vec<BitVector> {
        self.rows.iter().map(|&w| BitVector::from_word(self.n, w)).collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.trailing_zeros() as usize).collect()
    }

    pub(crate) fn reduce_word(&self, mut w: u64) -> u64 {
        for &r in &self.rows {
            let pivot = r & r.wrapping_neg();
            if w & pivot != 0 {
                w ^= r;
            }
        }
        w
    }

    pub(crate) fn contains_word(&self, w: u64) -> bool {
        self.reduce_word(w) == 0
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.n && self.contains_word(v.word())
    }

    /// True when every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.n == other.n && self.rows.iter().all(|&r| other.contains_word(r))
    }

    pub fn dual(&self) -> BinaryCode {
        let pivots = self.pivots();
        let mut is_pivot = 0u64;
        for &p in &pivots {
            is_pivot |= 1 << p;
        }
        let mut out = Vec::with_capacity(self.n - self.k());
        for j in 0..self.n {
            if is_pivot >> j & 1 == 1 {
                continue;
            }
            let mut v = 1u64 << j;
            for (r, &p) in self.rows.iter().zip(&pivots) {
                if r >> j & 1 == 1 {
                    v |= 1 << p;
                }
            }
            out.push(v);
        }
        BinaryCode::from_words(self.n, out)
    }

    /// The span of both codes.
    pub fn sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ok(BinaryCode::from_words(self.n, rows))
    }

    pub fn intersect(&self, other: &BinaryCode) -> Result<BinaryCode> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// `C ∩ C^⊥`.
    pub fn hull(&self) -> BinaryCode {
        self.intersect(&self.dual()).expect("lengths agree")
    }

    /// Add one vector to the generators.
    pub fn extend_by(&self, v: &BitVector) -> Result<BinaryCode> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { left: v.len(), right: self.n });
        }
        let mut rows = self.rows.clone();
        rows.push(v.word());
        Ok(BinaryCode::from_words(self.n, rows))
    }

    /// Append `extra` zero coordinates.
    pub fn pad_zeros(&self, extra: usize) -> Result<BinaryCode> {
        check_len(self.n + extra)?;
        Ok(BinaryCode {
            n: self.n + extra,
            rows: self.rows.clone(),
        })
    }

    /// Keep only the first `n` coordinates (puncturing the rest).
    pub fn truncate(&self, n: usize) -> BinaryCode {
        assert!(n <= self.n);
        BinaryCode::from_words(n, self.rows.clone())
    }

    /// Image under the coordinate map `i -> perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<BinaryCode> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { left: perm.len(), right: self.n });
        }
        let rows = self.rows.iter().map(|&r| permute_word(r, perm)).collect();
        Ok(BinaryCode::from_words(self.n, rows))
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.k() > cap {
            Err(Error::DimensionAboveCap { k: self.k(), cap })
        } else {
            Ok(())
        }
    }

    /// Visits every codeword (including zero) in Gray-code order.
    pub(crate) fn for_each_codeword<F: FnMut(u64)>(&self, mut visit: F) {
        let k = self.k();
        let mut acc = 0u64;
        visit(acc);
        for i in 1u64..(1u64 << k) {
            acc ^= self.rows[i.trailing_zeros() as usize];
            visit(acc);
        }
    }

    /// Visits codewords until `visit` returns false; returns false if stopped early.
    pub(crate) fn try_for_each_codeword<F: FnMut(u64) -> bool>(&self, mut visit: F) -> bool {
        let k = self.k();
        let mut acc = 0u64;
        for i in 1u64..(1u64 << k) {
            acc ^= self.rows[i.trailing_zeros() as usize];
            if !visit(acc) {
                return false;
            }
        }
        true
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        self.weight_enumerator_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn weight_enumerator_capped(&self, cap: usize) -> Result<WeightEnumerator> {
        self.check_cap(cap)?;
        let mut coeffs = vec![0u64; self.n + 1];
        self.for_each_codeword(|w| coeffs[w.count_ones() as usize] += 1);
        Ok(WeightEnumerator { coeffs })
    }

    /// Minimum nonzero weight, or `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        self.min_distance_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn min_distance_capped(&self, cap: usize) -> Result<Option<usize>> {
        self.check_cap(cap)?;
        if self.k() == 0 {
            return Ok(None);
        }
        let mut best = u32::MAX;
        self.try_for_each_codeword(|w| {
            best = best.min(w.count_ones());
            best > 1
        });
        Ok(Some(best as usize))
    }

    /// Whether every nonzero codeword has weight at least `d`; stops at the
    /// first lighter word.
    pub fn has_min_distance_at_least(&self, d: usize) -> Result<bool> {
        self.check_cap(DEFAULT_ENUMERATION_CAP)?;
        let d = d as u32;
        Ok(self.try_for_each_codeword(|w| w.count_ones() >= d))
    }

    /// Minimum weight of the coset `v + C`.
    pub fn coset_min_weight(&self, v: &BitVector) -> Result<usize> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { left: v.len(), right: self.n });
        }
        self.check_cap(DEFAULT_ENUMERATION_CAP)?;
        let base = v.word();
        let mut best = u32::MAX;
        self.for_each_codeword(|w| best = best.min((w ^ base).count_ones()));
        Ok(best as usize)
    }

    /// Serializes to the text format: `n k` followed by `k` rows of 0/1.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k());
        for g in self.generator() {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<BinaryCode> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        let parse_num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("expected an integer, found {s:?}"),
            })
        };
        if parts.len() != 2 {
            return Err(Error::Parse {
                line: 1,
                msg: "header must be \"n k\"".into(),
            });
        }
        let n = parse_num(parts[0])?;
        let k = parse_num(parts[1])?;
        check_len(n)?;
        let mut rows = Vec::with_capacity(k);
        for (idx, line) in lines {
            let line = line.trim();
            if line.len() != n {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("row has {} characters, expected {n}", line.len()),
                });
            }
            let v: BitVector = line.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: "rows may only contain 0 and 1".into(),
            })?;
            rows.push(v);
        }
        if rows.len() != k {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header announces {k} rows but {} were given", rows.len()),
            });
        }
        let code = BinaryCode::new(n, &rows)?;
        if code.k() != k {
            return Err(Error::Parse {
                line: 1,
                msg: format!("rows are linearly dependent (rank {} < {k})", code.k()),
            });
        }
        Ok(code)
    }
}

pub(crate) fn permute_word(w: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for i in iter_ones(w) {
        out |= 1 << perm[i];
    }
    out
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}]", self.n, self.k())?;
        f.debug_list().entries(self.generator().iter().map(|g| g.to_string())).finish()
    }
}

/// Coefficients `A_0..A_n` of a weight enumerator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightEnumerator {
    coeffs: Vec<u64>,
}

impl WeightEnumerator {
    pub fn from_coefficients(coeffs: Vec<u64>) -> Self {
        WeightEnumerator { coeffs }
    }

    pub fn from_terms(n: usize, terms: &[(usize, u64)]) -> Self {
        let mut coeffs = vec![0u64; n + 1];
        for &(i, a) in terms {
            coeffs[i] += a;
        }
        WeightEnumerator { coeffs }
    }

    pub fn length(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&i| self.coeffs[i] != 0)
    }

    /// Nonzero `(i, A_i)` pairs.
    pub fn terms(&self) -> Vec<(usize, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| (i, a))
            .collect()
    }

    /// Weight enumerator of the dual code via the MacWilliams identity
    /// `B_j = 2^{-k} Σ_i A_i K_j(i)` with binary Krawtchouk polynomials.
    pub fn macwilliams_dual(&self) -> Result<WeightEnumerator> {
        let n = self.length();
        let size = self.total() as i128;
        if size == 0 || size & (size - 1) != 0 {
            return Err(Error::Inconsistent("codeword count is not a power of two".into()));
        }
        let binom = binomial_table(n);
        let mut out = vec![0u64; n + 1];
        for (j, slot) in out.iter_mut().enumerate() {
            let mut acc: i128 = 0;
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut kraw: i128 = 0;
                for s in 0..=j.min(i) {
                    if j - s > n - i {
                        continue;
                    }
                    let term = binom[i][s] * binom[n - i][j - s];
                    kraw += if s % 2 == 0 { term } else { -term };
                }
                acc += a as i128 * kraw;
            }
            if acc < 0 || acc % size != 0 {
                return Err(Error::Inconsistent(format!(
                    "MacWilliams transform is not integral at weight {j}"
                )));
            }
            *slot = (acc / size) as u64;
        }
        Ok(WeightEnumerator { coeffs: out })
    }
}

fn binomial_table(n: usize) -> Vec<Vec<i128>> {
    let mut t = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = 1;
        for j in 1..=i {
            t[i][j] = t[i - 1][j - 1] + if j <= i - 1 { t[i - 1][j] } else { 0 };
        }
    }
    t
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.terms() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, a) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => f.write_str("y")?,
                (1, a) => write!(f, "{a}y")?,
                (i, 1) => write!(f, "y^{i}")?,
                (i, a) => write!(f, "{a}y^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for WeightEnumerator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for t in terms {
            seq.serialize_element(&[t.0 as u64, t.1])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for WeightEnumerator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(usize, u64)> = Vec::deserialize(deserializer)?;
        let n = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        if pairs.iter().any(|p| p.1 == 0) {
            return Err(de::Error::custom("zero coefficients are not serialized"));
        }
        Ok(WeightEnumerator::from_terms(n, &pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn code(rows: &[&str]) -> BinaryCode {
        let n = rows[0].len();
        BinaryCode::new(n, &rows.iter().map(|r| bv(r)).collect::<Vec<_>>()).unwrap()
    }

    pub(crate) fn hamming7() -> BinaryCode {
        code(&["1000110", "0100101", "0010011", "0001111"])
    }

    fn extended_hamming8() -> BinaryCode {
        code(&["10001101", "01001011", "00100111", "00011110"])
    }

    #[test]
    fn rref_identity_and_dependent_rows() {
        let id = [bv("100"), bv("010"), bv("001")];
        let e = rref(&id, 3).unwrap();
        assert_eq!(e.rank, 3);
        assert_eq!(e.rows, id.to_vec());
        assert_eq!(e.pivots, vec![0, 1, 2]);

        let e = rref(&[bv("11"), bv("11")], 2).unwrap();
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn dot_and_weight() {
        let u = bv("1101");
        let v = bv("0111");
        assert_eq!(u.weight(), 3);
        assert_eq!((u ^ u).weight(), 0);
        assert_eq!(u.dot(&v), 0);
        assert_eq!(u.dot(&v), v.dot(&u));
        assert_eq!(u.dot(&u), 1);
    }

    #[test]
    fn hamming_dual_is_simplex() {
        let dual = hamming7().dual();
        assert_eq!(dual.k(), 3);
        let mut weights = Vec::new();
        dual.for_each_codeword(|w| weights.push(w.count_ones()));
        assert_eq!(weights.len(), 8);
        assert!(weights.iter().filter(|&&w| w != 0).all(|&w| w == 4));
        for g in hamming7().generator() {
            for h in dual.generator() {
                assert_eq!(g.dot(&h), 0);
            }
        }
    }

    #[test]
    fn full_space_and_zero_code() {
        let full = BinaryCode::full(5).unwrap();
        assert_eq!(full.dual(), BinaryCode::zero(5).unwrap());
        assert_eq!(BinaryCode::zero(5).unwrap().dual(), full);
        let we = BinaryCode::zero(5).unwrap().weight_enumerator().unwrap();
        assert_eq!(we.coefficients(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(BinaryCode::zero(5).unwrap().min_distance().unwrap(), None);
    }

    #[test]
    fn extended_hamming_is_self_dual() {
        let c = extended_hamming8();
        assert_eq!(c.dual(), c);
        assert_eq!(c.hull().k(), 4);
    }

    #[test]
    fn intersections() {
        let c = hamming7();
        assert_eq!(c.intersect(&c).unwrap(), c);
        let simplex = c.dual();
        assert_eq!(simplex.intersect(&simplex.dual()).unwrap(), simplex);
        assert!(matches!(
            c.intersect(&BinaryCode::zero(6).unwrap()),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn hull_of_unit_vector_is_trivial() {
        assert_eq!(code(&["10"]).hull().k(), 0);
    }

    #[test]
    fn hamming_distance_and_enumerator() {
        let c = hamming7();
        assert_eq!(c.min_distance().unwrap(), Some(3));
        let we = c.weight_enumerator().unwrap();
        assert_eq!(we.coefficients(), &[1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(we.to_string(), "1+7y^3+7y^4+y^7");
        assert_eq!(we.macwilliams_dual().unwrap(), c.dual().weight_enumerator().unwrap());
        assert!(c.has_min_distance_at_least(3).unwrap());
        assert!(!c.has_min_distance_at_least(4).unwrap());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let c = BinaryCode::full(30).unwrap();
        assert_eq!(
            c.min_distance(),
            Err(Error::DimensionAboveCap { k: 30, cap: DEFAULT_ENUMERATION_CAP })
        );
        assert!(c.weight_enumerator_capped(30).is_ok());
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let c = hamming7();
        assert_eq!(BinaryCode::from_text(&c.to_text()).unwrap(), c);
        assert!(matches!(
            BinaryCode::from_text("3 1\n1010\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            BinaryCode::from_text("3 1\n1a1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(BinaryCode::from_text("3 2\n101\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            BinaryCode::from_text("3 2\n101\n101\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn weight_enumerator_json() {
        let we = hamming7().weight_enumerator().unwrap();
        let json = serde_json::to_string(&we).unwrap();
        assert_eq!(json, "[[0,1],[3,7],[4,7],[7,1]]");
        let back: WeightEnumerator = serde_json::from_str(&json).unwrap();
        assert_eq!(back.terms(), we.terms());
    }

    #[test]
    fn coset_weights() {
        let c = hamming7();
        // Hamming code is perfect: every coset has a leader of weight <= 1.
        for i in 0..7 {
            let v = BitVector::from_support(7, &[i]).unwrap();
            assert_eq!(c.coset_min_weight(&v).unwrap(), 1);
        }
    }
}
