//! Dense linear algebra over GF(2).
//!
//! Vectors and matrix rows are packed into `u64` words, bit `i` living in word
//! `i / 64` at position `i % 64`. Elimination always takes the first row with
//! a nonzero entry in the current column, so rank profiles, nullspace bases
//! and particular solutions are reproducible bit-for-bit.
//!
//! Sizes are only limited by memory, but the rest of the crate caps homology
//! rank at `2g <= 1024`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Builds a vector from 0/1 entries; any odd value counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b & 1 == 1);
        }
        v
    }

    /// The low `len` bits of `mask`, bit `i` of the mask becoming entry `i`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "from_mask supports at most 64 entries");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            v.words[0] = mask & keep;
        }
        v
    }

    /// Inverse of [`BitVector::from_mask`]; `None` when longer than 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.len {
            0 => Some(0),
            l if l <= WORD => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len {})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Standard dot product mod 2.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.iter().map(u8::from).collect()
    }

    fn first_one_from(&self, start: usize) -> Option<usize> {
        (start..self.len).find(|&i| self.get(i))
    }
}

/// Lexicographic on the entry sequence, entry 0 most significant.
impl Ord for BitVector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let t = diff.trailing_zeros();
                return if (a >> t) & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A dense matrix over GF(2), stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from its rows. Every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                context: "BitMatrix::from_rows",
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Row-major 0/1 entries (odd values count as 1).
    pub fn from_bit_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| BitVector::from_bits(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn column(&self, c: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                context: "BitMatrix::add",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.xor(b))
            .collect();
        Ok(BitMatrix { data, ..*self })
    }

    /// `self + I`, which over GF(2) is also `self - I`.
    pub fn plus_identity(&self) -> Result<BitMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context: "BitMatrix::plus_identity",
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m.data[i].flip(i);
        }
        Ok(m)
    }

    pub fn mul_vec(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "BitMatrix::mul_vec",
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for (r, row) in self.data.iter().enumerate() {
            if row.dot(x) {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context: "BitMatrix::vstack",
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BitMatrix {
            rows: data.len(),
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form plus the pivot column of each nonzero row.
    fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.data[r].get(c)) else {
                continue;
            };
            m.data.swap(next, p);
            let pivot_row = m.data[next].clone();
            for r in 0..m.rows {
                if r != next && m.data[r].get(c) {
                    m.data[r].xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        (m, pivots)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    m.rref().1.len()
}

/// Basis of `{x : m x = 0}`, one vector per free column in ascending order.
pub fn nullspace(m: &BitMatrix) -> Vec<BitVector> {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = BitVector::unit(m.cols, free);
            for (row, &p) in pivots.iter().enumerate() {
                if r.get(row, free) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect()
}

pub fn matmul(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            context: "matmul",
            expected: a.cols,
            found: b.rows,
        });
    }
    let mut out = BitMatrix::zeros(a.rows, b.cols);
    for (i, row) in a.data.iter().enumerate() {
        let mut acc = BitVector::zeros(b.cols);
        let mut k = row.first_one_from(0);
        while let Some(j) = k {
            acc.xor_assign(&b.data[j]);
            k = row.first_one_from(j + 1);
        }
        out.data[i] = acc;
    }
    Ok(out)
}

/// An affine subspace of GF(2)^n, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolutionSet {
    dimension: usize,
    particular: Option<BitVector>,
    basis: Vec<BitVector>,
}

impl AffineSolutionSet {
    pub fn empty(dimension: usize) -> Self {
        Self {
            dimension,
            particular: None,
            basis: Vec::new(),
        }
    }

    /// Ambient length `n` of the member vectors.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn particular(&self) -> Option<&BitVector> {
        self.particular.as_ref()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// `None` for the empty set, otherwise the dimension of the direction space.
    pub fn nullity(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.basis.len())
    }

    pub fn cardinality(&self) -> BigUint {
        match self.particular {
            None => BigUint::ZERO,
            Some(_) => BigUint::one() << self.basis.len(),
        }
    }

    pub fn contains(&self, x: &BitVector) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        if x.len() != self.dimension {
            return false;
        }
        let shifted = x.xor(p);
        if shifted.is_zero() {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(shifted);
        let m = BitMatrix::from_rows(self.dimension, rows).expect("lengths checked");
        rank(&m) == self.basis.len()
    }

    /// Every member, enumerated as `particular + sum of a subset of the basis`
    /// with the subset walked in binary counting order. Panics past 2^32 members.
    pub fn elements(&self) -> Vec<BitVector> {
        let Some(p) = &self.particular else {
            return Vec::new();
        };
        assert!(self.basis.len() <= 32, "solution set too large to enumerate");
        (0u64..1 << self.basis.len())
            .map(|mask| {
                let mut v = p.clone();
                for (k, b) in self.basis.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        v.xor_assign(b);
                    }
                }
                v
            })
            .collect()
    }

    /// Members in lexicographic order.
    pub fn sorted_elements(&self) -> Vec<BitVector> {
        let mut v = self.elements();
        v.sort();
        v
    }
}

/// All solutions of `m x = b`.
pub fn solve_affine(m: &BitMatrix, b: &BitVector) -> Result<AffineSolutionSet> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            context: "solve_affine",
            expected: m.rows,
            found: b.len(),
        });
    }
    // Augment with b as an extra column and reduce once.
    let aug_rows = (0..m.rows)
        .map(|r| {
            let mut row = BitVector::zeros(m.cols + 1);
            for c in 0..m.cols {
                if m.get(r, c) {
                    row.set(c, true);
                }
            }
            row.set(m.cols, b.get(r));
            row
        })
        .collect();
    let aug = BitMatrix::from_rows(m.cols + 1, aug_rows)?;
    let (red, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Ok(AffineSolutionSet::empty(m.cols));
    }
    let mut particular = BitVector::zeros(m.cols);
    for (row, &p) in pivots.iter().enumerate() {
        if red.get(row, m.cols) {
            particular.set(p, true);
        }
    }
    Ok(AffineSolutionSet {
        dimension: m.cols,
        particular: Some(particular),
        basis: nullspace(m),
    })
}
