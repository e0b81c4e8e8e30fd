//! Dense 0-1 matrices with cached marginals, the Gale-Ryser criterion and a
//! greedy realiser for prescribed row and column sums.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::tuples::{conjugate, majorized, IntTuple};

const WORD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("no 0-1 matrix has row sums {rows} and column sums {cols}")]
    Infeasible { rows: IntTuple, cols: IntTuple },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("entry {0} is not 0 or 1")]
    NotBinary(u64),
}

/// A 0-1 matrix stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    row_count: usize,
    col_count: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    row_sums: Vec<u32>,
    col_sums: Vec<u32>,
}

/// Row sums `r` and column sums `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Marginals {
    pub r: IntTuple,
    pub c: IntTuple,
}

impl BinaryMatrix {
    pub fn zeros(row_count: usize, col_count: usize) -> Self {
        let words_per_row = col_count.div_ceil(WORD);
        BinaryMatrix {
            row_count,
            col_count,
            words_per_row,
            bits: vec![0; row_count * words_per_row],
            row_sums: vec![0; row_count],
            col_sums: vec![0; col_count],
        }
    }

    pub fn ones(row_count: usize, col_count: usize) -> Self {
        let mut m = BinaryMatrix::zeros(row_count, col_count);
        for r in 0..row_count {
            for c in 0..col_count {
                m.set(r, c, true);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinaryMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from rows of 0/1 values. All rows must have `col_count` entries.
    pub fn from_rows<T: AsRef<[u8]>>(rows: &[T], col_count: usize) -> Result<Self, MatrixError> {
        let mut m = BinaryMatrix::zeros(rows.len(), col_count);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != col_count {
                return Err(MatrixError::Dimension(format!(
                    "row {r} has {} entries, expected {col_count}",
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(r, c, true),
                    other => return Err(MatrixError::NotBinary(u64::from(other))),
                }
            }
        }
        Ok(m)
    }

    /// Build from rows given as column-index bitmasks (bit `c` is column `c`).
    pub fn from_masks(masks: &[u64], col_count: usize) -> Self {
        assert!(col_count <= WORD);
        let mut m = BinaryMatrix::zeros(masks.len(), col_count);
        for (r, &mask) in masks.iter().enumerate() {
            for c in 0..col_count {
                if mask >> c & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    pub fn col_count(&self) -> usize {
        self.col_count
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.row_count && c < self.col_count);
        self.bits[r * self.words_per_row + c / WORD] >> (c % WORD) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.row_count && c < self.col_count);
        if self.get(r, c) == value {
            return;
        }
        let word = &mut self.bits[r * self.words_per_row + c / WORD];
        *word ^= 1 << (c % WORD);
        if value {
            self.row_sums[r] += 1;
            self.col_sums[c] += 1;
        } else {
            self.row_sums[r] -= 1;
            self.col_sums[c] -= 1;
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn row(&self, r: usize) -> Vec<u8> {
        (0..self.col_count).map(|c| u8::from(self.get(r, c))).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.row_count).map(|r| self.row(r)).collect()
    }

    pub fn row_sums(&self) -> IntTuple {
        IntTuple::new(self.row_sums.clone())
    }

    pub fn col_sums(&self) -> IntTuple {
        IntTuple::new(self.col_sums.clone())
    }

    /// Sums recomputed from the bits, bypassing the cache.
    pub fn recomputed_marginals(&self) -> Marginals {
        let mut r = vec![0u32; self.row_count];
        let mut c = vec![0u32; self.col_count];
        for (i, ri) in r.iter_mut().enumerate() {
            for (j, cj) in c.iter_mut().enumerate() {
                if self.get(i, j) {
                    *ri += 1;
                    *cj += 1;
                }
            }
        }
        Marginals {
            r: IntTuple::new(r),
            c: IntTuple::new(c),
        }
    }

    /// New matrix consisting of the rows `range`.
    pub fn row_slice(&self, range: std::ops::Range<usize>) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(range.len(), self.col_count);
        for (dst, src) in range.enumerate() {
            for c in 0..self.col_count {
                if self.get(src, c) {
                    out.set(dst, c, true);
                }
            }
        }
        out
    }

    /// Append a row given as 0/1 values.
    pub fn push_row(&mut self, row: &[u8]) {
        assert_eq!(row.len(), self.col_count);
        self.bits.extend(std::iter::repeat_n(0, self.words_per_row));
        self.row_sums.push(0);
        self.row_count += 1;
        let r = self.row_count - 1;
        for (c, &v) in row.iter().enumerate() {
            assert!(v <= 1);
            if v == 1 {
                self.set(r, c, true);
            }
        }
    }

    /// Stack `top`, `self` and `bottom` vertically.
    pub fn with_border_rows(&self, top: &[u8], bottom: &[u8]) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(0, self.col_count);
        out.push_row(top);
        for r in 0..self.row_count {
            out.push_row(&self.row(r));
        }
        out.push_row(bottom);
        out
    }

    /// Column `j` of the result is column `source[j]` of `self`.
    pub fn select_columns(&self, source: &[usize]) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.row_count, source.len());
        for r in 0..self.row_count {
            for (dst, &src) in source.iter().enumerate() {
                if self.get(r, src) {
                    out.set(r, dst, true);
                }
            }
        }
        out
    }

    /// Inverse of sorting: column `perm[j]` of the result is column `j` of
    /// `self`.
    pub fn scatter_columns(&self, perm: &[usize]) -> BinaryMatrix {
        assert_eq!(perm.len(), self.col_count);
        let mut out = BinaryMatrix::zeros(self.row_count, self.col_count);
        for r in 0..self.row_count {
            for (src, &dst) in perm.iter().enumerate() {
                if self.get(r, src) {
                    out.set(r, dst, true);
                }
            }
        }
        out
    }

    /// Rows as compact bit strings, one per line.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for r in 0..self.row_count {
            for c in 0..self.col_count {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix {}x{} ", self.row_count, self.col_count)?;
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Serialize for BinaryMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BinaryMatrix {
    /// Rows of a serialized matrix carry no column count, so an empty row
    /// list yields a 0x0 matrix.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u8>>::deserialize(deserializer)?;
        let cols = rows.first().map_or(0, Vec::len);
        BinaryMatrix::from_rows(&rows, cols).map_err(serde::de::Error::custom)
    }
}

/// JSON-friendly view of a matrix with its marginals.
#[derive(Debug, Clone, Serialize)]
pub struct MatrixJson {
    pub rows: Vec<Vec<u8>>,
    pub row_sums: IntTuple,
    pub col_sums: IntTuple,
}

impl From<&BinaryMatrix> for MatrixJson {
    fn from(m: &BinaryMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            row_sums: m.row_sums(),
            col_sums: m.col_sums(),
        }
    }
}

pub fn marginals(m: &BinaryMatrix) -> Marginals {
    Marginals {
        r: m.row_sums(),
        c: m.col_sums(),
    }
}

/// Gale-Ryser: a 0-1 matrix with row sums `r` and column sums `c` exists iff
/// the totals agree and sorted `c` is majorized by the conjugate of `r`.
pub fn gale_ryser_feasible(r: &IntTuple, c: &IntTuple) -> bool {
    // oversized parts on either side are rejected by the majorization itself
    majorized(c, &conjugate(r))
}

/// Ryser's greedy construction. Rows are filled in non-increasing order of
/// row sum; each row puts its ones in the columns with the largest residual
/// demand, ties going to the lowest column index.
pub fn gale_ryser_construct(r: &IntTuple, c: &IntTuple) -> Result<BinaryMatrix, MatrixError> {
    if let Some(&bad) = r.parts().iter().find(|&&x| x as usize > c.len()) {
        return Err(MatrixError::Dimension(format!(
            "row sum {bad} exceeds column count {}",
            c.len()
        )));
    }
    if let Some(&bad) = c.parts().iter().find(|&&x| x as usize > r.len()) {
        return Err(MatrixError::Dimension(format!(
            "column sum {bad} exceeds row count {}",
            r.len()
        )));
    }
    if !gale_ryser_feasible(r, c) {
        return Err(MatrixError::Infeasible {
            rows: r.clone(),
            cols: c.clone(),
        });
    }
    let mut m = BinaryMatrix::zeros(r.len(), c.len());
    let mut residual: Vec<u32> = c.parts().to_vec();
    let mut order: Vec<usize> = (0..c.len()).collect();
    for row in r.sorting_permutation() {
        let need = r.get(row) as usize;
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        for &col in &order[..need] {
            if residual[col] == 0 {
                // unreachable for feasible input
                return Err(MatrixError::Infeasible {
                    rows: r.clone(),
                    cols: c.clone(),
                });
            }
            residual[col] -= 1;
            m.set(row, col, true);
        }
    }
    debug_assert!(residual.iter().all(|&x| x == 0));
    Ok(m)
}

/// True iff every entry of `Vᵀ W` is positive, i.e. every column of `v`
/// shares a row with every column of `w` where both hold a 1.
pub fn product_positive(v: &BinaryMatrix, w: &BinaryMatrix) -> Result<bool, MatrixError> {
    if v.row_count() != w.row_count() {
        return Err(MatrixError::Dimension(format!(
            "row counts differ: {} vs {}",
            v.row_count(),
            w.row_count()
        )));
    }
    if v.col_count() == 0 || w.col_count() == 0 {
        return Ok(true);
    }
    // reach[i] collects the W-columns that meet V-column i in some row
    let words = w.words_per_row;
    let mut reach = vec![0u64; v.col_count() * words];
    for r in 0..v.row_count() {
        let wrow = w.row_words(r);
        for i in 0..v.col_count() {
            if v.get(r, i) {
                for (acc, &bits) in reach[i * words..(i + 1) * words].iter_mut().zip(wrow) {
                    *acc |= bits;
                }
            }
        }
    }
    let full = full_row_mask(w.col_count());
    Ok(reach.chunks(words).all(|acc| acc == full.as_slice()))
}

fn full_row_mask(cols: usize) -> Vec<u64> {
    let mut out = vec![u64::MAX; cols.div_ceil(WORD)];
    let rem = cols % WORD;
    if rem != 0 {
        *out.last_mut().unwrap() = (1u64 << rem) - 1;
    }
    out
}
