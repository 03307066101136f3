//! Bit-packed linear algebra over GF(2) and the binary symplectic space.
//!
//! Bit `j` of every vector is position `j` as printed left to right, so the
//! string `"11000"` sets bits 0 and 1. A [`SympVector`] stores its X half `a`
//! and Z half `b` as separate packed words, which keeps the symplectic weight
//! a single `popcount(a | b)` per word.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over GF(2). Bits beyond `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &bit) in bits.iter().enumerate() {
            v.set(i, bit);
        }
        v
    }

    /// Builds a vector from the low `len` bits of `word` (bit `j` of the word is position `j`).
    pub fn from_u64(len: usize, word: u64) -> Self {
        assert!(len <= WORD);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = word & mask_low(len);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Standard inner product mod 2.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(x, y)| (x & y).count_ones())
            .sum::<u32>()
            & 1
            == 1
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            out.set(i, true);
        }
        for i in other.iter_ones() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        assert!(start <= end && end <= self.len);
        let mut out = BitVec::zeros(end - start);
        for i in self.iter_ones().filter(|&i| i >= start && i < end) {
            out.set(i - start, true);
        }
        out
    }

    /// Cyclic shift by `k` positions to the right: bit `j` moves to `(j + k) mod len`.
    pub fn rotate_right(&self, k: usize) -> BitVec {
        let mut out = BitVec::zeros(self.len);
        if self.len == 0 {
            return out;
        }
        for i in self.iter_ones() {
            out.set((i + k) % self.len, true);
        }
        out
    }

    /// The bits as a `u64` when `len <= 64`.
    pub fn as_u64(&self) -> u64 {
        assert!(self.len <= WORD);
        self.words.first().copied().unwrap_or(0)
    }
}

fn mask_low(len: usize) -> u64 {
    if len >= WORD {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in self.iter() {
            f.write_str(if bit { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        column: i + 1,
                        message: format!("expected '0' or '1', found {other:?}"),
                    })
                }
            }
        }
        Ok(v)
    }
}

/// A vector `(a|b)` of the 2n-dimensional binary symplectic space: the image of
/// `±X(a)Z(b)` modulo signs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SympVector {
    a: BitVec,
    b: BitVec,
}

impl SympVector {
    pub fn zero(n: usize) -> Self {
        Self {
            a: BitVec::zeros(n),
            b: BitVec::zeros(n),
        }
    }

    pub fn new(a: BitVec, b: BitVec) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::dim(a.len(), b.len()));
        }
        Ok(Self { a, b })
    }

    /// `(e_j | 0)`, a single bit flip on qubit `j`.
    pub fn x_unit(n: usize, j: usize) -> Self {
        Self {
            a: BitVec::unit(n, j),
            b: BitVec::zeros(n),
        }
    }

    /// `(0 | e_j)`, a single phase flip on qubit `j`.
    pub fn z_unit(n: usize, j: usize) -> Self {
        Self {
            a: BitVec::zeros(n),
            b: BitVec::unit(n, j),
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &BitVec {
        &self.a
    }

    pub fn b(&self) -> &BitVec {
        &self.b
    }

    pub fn a_mut(&mut self) -> &mut BitVec {
        &mut self.a
    }

    pub fn b_mut(&mut self) -> &mut BitVec {
        &mut self.b
    }

    pub fn into_parts(self) -> (BitVec, BitVec) {
        (self.a, self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The alternating form `a·b' + a'·b`.
    pub fn symplectic_product(&self, other: &SympVector) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::dim(self.n(), other.n()));
        }
        Ok(self.sp(other))
    }

    pub(crate) fn sp(&self, other: &SympVector) -> bool {
        let mut acc = 0u32;
        for i in 0..self.a.words.len() {
            acc += ((self.a.words[i] & other.b.words[i]) ^ (other.a.words[i] & self.b.words[i])).count_ones();
        }
        acc & 1 == 1
    }

    /// The quadratic form `Q(a|b) = Σ a_j b_j`; `Q = 1` exactly when the element squares to `-I`.
    pub fn quadratic_form(&self) -> bool {
        self.a.dot(&self.b)
    }

    /// Number of qubits on which the element acts nontrivially.
    pub fn weight(&self) -> usize {
        self.a
            .words
            .iter()
            .zip(&self.b.words)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    pub fn xor_assign(&mut self, other: &SympVector) {
        self.a.xor_assign(&other.a);
        self.b.xor_assign(&other.b);
    }

    pub fn xor(&self, other: &SympVector) -> SympVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// The 2n-bit row `a ‖ b`.
    pub fn to_bits(&self) -> BitVec {
        self.a.concat(&self.b)
    }

    pub fn from_bits(bits: &BitVec) -> Result<Self> {
        if !bits.len().is_multiple_of(2) {
            return Err(Error::dim(bits.len() + 1, bits.len()));
        }
        let n = bits.len() / 2;
        Ok(Self {
            a: bits.slice(0, n),
            b: bits.slice(n, 2 * n),
        })
    }

    /// `(b|a)`: the row used to turn symplectic orthogonality into an ordinary dot product.
    pub fn swapped(&self) -> SympVector {
        Self {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Cyclic shift of both halves by `k` qubit positions.
    pub fn rotate_right(&self, k: usize) -> SympVector {
        Self {
            a: self.a.rotate_right(k),
            b: self.b.rotate_right(k),
        }
    }
}

impl fmt::Display for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.a, self.b)
    }
}

/// Serialized as the printed `"<a>|<b>"` string.
impl serde::Serialize for SympVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for SympVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SympVector {
    type Err = Error;

    /// Parses `"11000|00101"`; surrounding parentheses and whitespace are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = body.split_once('|').ok_or_else(|| Error::Parse {
            line: 1,
            column: 1,
            message: "expected '<a-bits>|<b-bits>'".into(),
        })?;
        let a: BitVec = a.trim().parse()?;
        let b: BitVec = b.trim().parse().map_err(|e| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column: column + a.len() + 1,
                message,
            },
            other => other,
        })?;
        SympVector::new(a, b)
    }
}

/// A dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::dim(cols, bad.len()));
        }
        Ok(Self { cols, rows })
    }

    /// Parses rows such as `["11", "01"]`.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.as_ref().parse::<BitVec>())
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVec::len);
        Self::from_rows(cols, parsed)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::dim(self.cols, row.len()));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Row vector times matrix: `v · self`.
    pub fn left_mul(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.rows.len(), "vector length must equal row count");
        let mut out = BitVec::zeros(self.cols);
        for i in v.iter_ones() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows.len() {
            return Err(Error::dim(self.cols, other.rows.len()));
        }
        Ok(BitMatrix {
            cols: other.cols,
            rows: self.rows.iter().map(|r| other.left_mul(r)).collect(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn first_nonzero_diagonal(&self) -> Option<usize> {
        (0..self.rows.len().min(self.cols)).find(|&i| self.get(i, i))
    }

    pub fn echelon(&self) -> Echelon {
        Echelon::from_rows(self.cols, self.rows.iter().cloned())
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn in_span(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::dim(self.cols, v.len()));
        }
        Ok(self.echelon().contains(v))
    }

    /// Basis of `{ x : row · x = 0 for every row }`, one vector per free column in increasing order.
    pub fn nullspace(&self) -> Vec<BitVec> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in ech.pivots() {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = BitVec::unit(self.cols, free);
                for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
                    if row.get(free) {
                        x.set(p, true);
                    }
                }
                x
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::dim(self.cols, self.rows.len()));
        }
        let n = self.cols;
        let mut left = self.rows.clone();
        let mut right: Vec<BitVec> = (0..n).map(|i| BitVec::unit(n, i)).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| left[r].get(col)).ok_or(Error::Singular)?;
            left.swap(col, pivot);
            right.swap(col, pivot);
            for r in 0..n {
                if r != col && left[r].get(col) {
                    let (lp, rp) = (left[col].clone(), right[col].clone());
                    left[r].xor_assign(&lp);
                    right[r].xor_assign(&rp);
                }
            }
        }
        Ok(BitMatrix { cols: n, rows: right })
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix[{}x{}](", self.rows.len(), self.cols)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{row}")?;
        }
        f.write_str(")")
    }
}

/// Reduced row echelon form. Pivots are chosen at the lowest-index nonzero
/// column, so the reduced basis of a given span is unique.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = BitVec>) -> Self {
        let mut ech = Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for row in rows {
            ech.insert(row);
        }
        ech
    }

    /// Adds a row to the span; returns `false` when it was already dependent.
    pub fn insert(&mut self, row: BitVec) -> bool {
        assert_eq!(row.len(), self.cols);
        let residue = self.reduce(row);
        let Some(p) = residue.first_one() else {
            return false;
        };
        for r in &mut self.rows {
            if r.get(p) {
                r.xor_assign(&residue);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, residue);
        true
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
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

    pub fn cols(&self) -> usize {
        self.cols
    }
}

/// Echelon form of a list of symplectic vectors, viewed as 2n-bit rows `a ‖ b`.
#[derive(Clone, Debug)]
pub struct SympSpan {
    n: usize,
    ech: Echelon,
}

impl SympSpan {
    pub fn new(n: usize, rows: &[SympVector]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.n() != n) {
            return Err(Error::dim(n, bad.n()));
        }
        Ok(Self {
            n,
            ech: Echelon::from_rows(2 * n, rows.iter().map(SympVector::to_bits)),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn contains(&self, v: &SympVector) -> Result<bool> {
        if v.n() != self.n {
            return Err(Error::dim(self.n, v.n()));
        }
        Ok(self.ech.contains(&v.to_bits()))
    }

    /// Reduced basis in pivot order.
    pub fn basis(&self) -> Vec<SympVector> {
        self.ech
            .rows()
            .iter()
            .map(|r| SympVector::from_bits(r).expect("even length"))
            .collect()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }
}

pub fn symplectic_product(u: &SympVector, v: &SympVector) -> Result<bool> {
    u.symplectic_product(v)
}

pub fn quadratic_form(v: &SympVector) -> bool {
    v.quadratic_form()
}

pub fn symplectic_weight(v: &SympVector) -> usize {
    v.weight()
}

/// Dimension of the GF(2) span of `rows`.
pub fn rank(rows: &[SympVector]) -> usize {
    let n = rows.first().map_or(0, SympVector::n);
    Echelon::from_rows(2 * n, rows.iter().map(SympVector::to_bits)).rank()
}

pub fn in_span(v: &SympVector, rows: &[SympVector]) -> Result<bool> {
    SympSpan::new(v.n(), rows)?.contains(v)
}

/// Basis of `{ v : (v, r) = 0 for every row r }`, of dimension `2n - rank(rows)`.
pub fn symplectic_dual(n: usize, rows: &[SympVector]) -> Result<Vec<SympVector>> {
    if let Some(bad) = rows.iter().find(|r| r.n() != n) {
        return Err(Error::dim(n, bad.n()));
    }
    // (v, r) = v · (r_b ‖ r_a) as an ordinary dot product.
    let swapped = BitMatrix::from_rows(2 * n, rows.iter().map(|r| r.swapped().to_bits()).collect())?;
    swapped.nullspace().iter().map(SympVector::from_bits).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sv(s: &str) -> SympVector {
        s.parse().unwrap()
    }

    fn five_qubit_rows() -> Vec<SympVector> {
        ["11000|00101", "01100|10010", "00110|01001", "00011|10100"]
            .iter()
            .map(|s| sv(s))
            .collect()
    }

    #[test]
    fn symplectic_product_examples() {
        assert!(!sv("11000|00101").symplectic_product(&sv("01100|10010")).unwrap());
        assert!(sv("10000|00000").symplectic_product(&sv("00000|10000")).unwrap());
        let v = sv("10110|01101");
        assert!(!v.symplectic_product(&v).unwrap());
    }

    #[test]
    fn symplectic_product_rejects_mismatch() {
        let err = sv("10|01").symplectic_product(&sv("100|010")).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, found: 3 });
    }

    #[test]
    fn quadratic_form_examples() {
        assert!(!sv("11000|00101").quadratic_form());
        assert!(!SympVector::zero(5).quadratic_form());
        assert!(sv("10000|10000").quadratic_form());
    }

    #[test]
    fn weight_examples() {
        assert_eq!(sv("00111|00101").weight(), 3);
        assert_eq!(SympVector::zero(5).weight(), 0);
        assert_eq!(sv("11111|00000").weight(), 5);
    }

    #[test]
    fn rank_examples() {
        let rows = five_qubit_rows();
        assert_eq!(rank(&rows), 4);
        assert_eq!(rank(&[SympVector::zero(3), SympVector::zero(3)]), 0);
        let mut with_fifth = rows.clone();
        with_fifth.push(sv("10001|01010"));
        assert_eq!(rank(&with_fifth), 4);
    }

    #[test]
    fn in_span_examples() {
        let rows = five_qubit_rows();
        assert!(in_span(&sv("10001|01010"), &rows).unwrap());
        assert!(in_span(&SympVector::zero(5), &rows).unwrap());
        assert!(!in_span(&sv("11111|00000"), &rows).unwrap());
        assert!(in_span(&sv("10|01"), &rows).is_err());
    }

    #[test]
    fn dual_of_five_qubit_rows() {
        let rows = five_qubit_rows();
        let dual = symplectic_dual(5, &rows).unwrap();
        assert_eq!(dual.len(), 6);
        let mut expected = rows.clone();
        expected.push(sv("11111|00000"));
        expected.push(sv("00000|11111"));
        assert_eq!(rank(&expected), 6);
        for v in &dual {
            assert!(in_span(v, &expected).unwrap());
        }
        for v in &expected {
            assert!(in_span(v, &dual).unwrap());
        }

        let double = symplectic_dual(5, &dual).unwrap();
        assert_eq!(rank(&double), 4);
        for v in &double {
            assert!(in_span(v, &rows).unwrap());
        }
    }

    #[test]
    fn dual_of_empty_is_everything() {
        let dual = symplectic_dual(2, &[]).unwrap();
        assert_eq!(dual.len(), 4);
        assert_eq!(rank(&dual), 4);
    }

    #[test]
    fn parse_reports_column() {
        let err = "0110|01x1".parse::<SympVector>().unwrap_err();
        assert!(matches!(err, Error::Parse { column: 8, .. }), "{err:?}");
        assert!("0110|011".parse::<SympVector>().is_err());
    }

    #[test]
    fn display_round_trips_a_then_b() {
        assert_eq!(sv("(11000|00101)").to_string(), "11000|00101");
        assert!(sv("11000|00101").a().get(0));
        assert!(!sv("11000|00101").a().get(4));
    }

    #[test]
    fn inverse_and_transpose() {
        let a = BitMatrix::from_strs(&["110", "011", "001"]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), BitMatrix::identity(3));
        assert_eq!(a.transpose().transpose(), a);
        let singular = BitMatrix::from_strs(&["11", "11"]).unwrap();
        assert_eq!(singular.inverse().unwrap_err(), Error::Singular);
    }

    #[test]
    fn nullspace_is_orthogonal_and_complete() {
        let m = BitMatrix::from_strs(&["1101000", "0110100", "0011010", "0001101"]).unwrap();
        let null = m.nullspace();
        assert_eq!(null.len(), 7 - m.rank());
        for x in &null {
            for r in m.rows() {
                assert!(!r.dot(x));
            }
        }
    }

    #[test]
    fn rotation_wraps() {
        let v: BitVec = "10010".parse().unwrap();
        assert_eq!(v.rotate_right(1).to_string(), "01001");
        assert_eq!(v.rotate_right(2).to_string(), "10100");
    }

    fn arb_pair(max_n: usize) -> impl Strategy<Value = (SympVector, SympVector, SympVector)> {
        (1..=max_n).prop_flat_map(|n| {
            let bits = proptest::collection::vec(any::<bool>(), 2 * n);
            (bits.clone(), bits.clone(), bits).prop_map(move |(x, y, z)| {
                let mk = |b: Vec<bool>| SympVector::from_bits(&BitVec::from_bools(&b)).unwrap();
                (mk(x), mk(y), mk(z))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1500))]

        #[test]
        fn polarization((u, v, _w) in arb_pair(32)) {
            let lhs = u.xor(&v).quadratic_form() ^ u.quadratic_form() ^ v.quadratic_form();
            prop_assert_eq!(lhs, u.symplectic_product(&v).unwrap());
        }

        #[test]
        fn alternating_and_bilinear((u, v, w) in arb_pair(70)) {
            prop_assert!(!v.sp(&v));
            prop_assert_eq!(u.xor(&w).sp(&v), u.sp(&v) ^ w.sp(&v));
            prop_assert_eq!(u.sp(&v), v.sp(&u));
        }

        #[test]
        fn weight_zero_iff_zero((u, _v, _w) in arb_pair(70)) {
            prop_assert_eq!(u.weight() == 0, u.is_zero());
        }

        #[test]
        fn dual_dimension_complements_rank(
            n in 1usize..7,
            seed in proptest::collection::vec(any::<u64>(), 0..8),
        ) {
            let rows: Vec<SympVector> = seed
                .iter()
                .map(|&s| SympVector::new(BitVec::from_u64(n, s), BitVec::from_u64(n, s >> 32)).unwrap())
                .collect();
            let dual = symplectic_dual(n, &rows).unwrap();
            prop_assert_eq!(rank(&dual), dual.len());
            prop_assert_eq!(dual.len() + SympSpan::new(n, &rows).unwrap().dim(), 2 * n);
            for d in &dual {
                for r in &rows {
                    prop_assert!(!d.sp(r));
                }
            }
        }
    }
}
