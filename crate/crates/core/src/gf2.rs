//! Dense bit-packed matrices over GF(2).
//!
//! Rows are stored as runs of `u64` words, least significant bit first, so
//! row addition is a word-wise XOR and column intersections are AND + popcount.

use std::fmt;

const WORD: usize = 64;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; stride * rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 bytes. All rows must share one length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from the column indices of the ones in each row.
    pub fn from_row_supports<I>(cols: usize, supports: I) -> Self
    where
        I: IntoIterator,
        I::Item: IntoIterator<Item = usize>,
    {
        let supports: Vec<Vec<usize>> = supports
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let mut m = Self::zeros(supports.len(), cols);
        for (i, s) in supports.iter().enumerate() {
            for &j in s {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Column indices of the ones in row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(i)
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * WORD + b))
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                w[j] += 1;
            }
        }
        w
    }

    pub fn weight(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// `row[dst] ^= row[src]`
    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..src * s + s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s] as &[u64], &mut lo[dst * s..dst * s + s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= x;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.data.swap(a * s + k, b * s + k);
        }
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        let s = out.stride;
        for i in 0..self.rows {
            for k in self.row_ones(i) {
                let src = rhs.row_words(k);
                let dst = &mut out.data[i * s..(i + 1) * s];
                for (d, x) in dst.iter_mut().zip(src) {
                    *d ^= x;
                }
            }
        }
        out
    }

    /// Entry-wise sum over GF(2).
    pub fn add(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (d, x) in out.data.iter_mut().zip(&rhs.data) {
            *d ^= x;
        }
        out
    }

    /// Product with a column vector given as 0/1 bytes.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (self.row_ones(i).filter(|&j| v[j] & 1 == 1).count() & 1) as u8)
            .collect()
    }

    pub fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), self.cols);
        let s = self.stride;
        for (k, &r) in rows.iter().enumerate() {
            out.data[k * s..(k + 1) * s].copy_from_slice(self.row_words(r));
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                if self.get(i, c) {
                    out.set(i, k, true);
                }
            }
        }
        out
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, rhs.rows, "row counts differ");
        let mut out = BitMatrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in self.row_ones(i) {
                out.set(i, j, true);
            }
            for j in rhs.row_ones(i) {
                out.set(i, self.cols + j, true);
            }
        }
        out
    }

    /// `[self ; rhs]`
    pub fn vstack(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        BitMatrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        }
    }

    /// Reduced row echelon form in place. Returns the pivot column of each
    /// nonzero row, in row order.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = self.hstack(&BitMatrix::identity(n));
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Some(aug.select_cols(&right))
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Iterates the set bit positions of a word.
struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Number of positions where two equally sized rows are both one.
#[inline]
pub fn and_popcount(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}
