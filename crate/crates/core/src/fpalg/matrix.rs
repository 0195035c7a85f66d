use std::fmt;

use super::scalar::{FpScalar, Modulus};
use crate::error::{invalid, Result};

/// Dense row-major matrix over a prime field.
///
/// Subspaces are carried as matrices whose rows form a basis. The zero
/// subspace is a `0 × cols` matrix, never an absent value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    modulus: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMatrix {
    pub fn zeros(modulus: Modulus, rows: usize, cols: usize) -> Self {
        FpMatrix {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// The `0 × cols` matrix spanning the zero subspace.
    pub fn empty(modulus: Modulus, cols: usize) -> Self {
        Self::zeros(modulus, 0, cols)
    }

    pub fn identity(modulus: Modulus, size: usize) -> Self {
        let mut m = Self::zeros(modulus, size, size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows, every entry must lie in `[0, p)`.
    pub fn from_rows<R: AsRef<[u32]>>(modulus: Modulus, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(invalid(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= modulus.get()) {
                return Err(invalid(format!(
                    "row {i} has entry {v} outside [0, {})",
                    modulus.get()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(FpMatrix {
            modulus,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from field elements; all of them must share one modulus.
    pub fn from_scalars(rows: &[Vec<FpScalar>]) -> Result<Self> {
        let first = rows
            .iter()
            .flat_map(|r| r.iter())
            .next()
            .ok_or_else(|| invalid("cannot infer the modulus of an empty scalar grid"))?;
        let modulus = first.modulus();
        let cols = rows[0].len();
        let mut ints = Vec::with_capacity(rows.len());
        for row in rows {
            if row.iter().any(|s| s.modulus() != modulus) {
                return Err(invalid("entries with different moduli"));
            }
            ints.push(row.iter().map(|s| s.value()).collect::<Vec<_>>());
        }
        Self::from_rows(modulus, cols, &ints)
    }

    /// Single-row matrix.
    pub fn from_row(modulus: Modulus, row: &[u32]) -> Result<Self> {
        Self::from_rows(modulus, row.len(), &[row])
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.modulus.get());
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(<[u32]>::to_vec).collect()
    }

    /// Appends a row, panicking on a length mismatch.
    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        debug_assert!(row.iter().all(|&v| v < self.modulus.get()));
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::empty(self.modulus, self.cols);
        for &i in idx {
            out.push_row(self.row(i));
        }
        out
    }

    /// Columns selected by index, in the given order.
    pub fn select_cols(&self, idx: &[usize]) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.modulus, self.rows, idx.len());
        for r in 0..self.rows {
            let src = self.row(r);
            let dst = out.row_mut(r);
            for (j, &c) in idx.iter().enumerate() {
                dst[j] = src[c];
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        out.data.extend_from_slice(&other.data);
        out.rows += other.rows;
        Ok(out)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.modulus, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.modulus != other.modulus || self.cols != other.rows {
            return Err(invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let m = self.modulus;
        let mut out = FpMatrix::zeros(m, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = m.add(out.get(r, c), m.mul(a, other.get(k, c)));
                    out.data[r * other.cols + c] = v;
                }
            }
        }
        Ok(out)
    }

    /// `M · x` for a column vector `x`.
    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(invalid(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(self
            .row_iter()
            .map(|row| dot(self.modulus, row, x))
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub(crate) fn check_compatible(&self, other: &FpMatrix) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(invalid(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        if self.cols != other.cols {
            return Err(invalid(format!(
                "column mismatch: {} vs {}",
                self.cols, other.cols
            )));
        }
        Ok(())
    }
}

/// Euclidean inner product over `F_p`.
pub fn dot(m: Modulus, x: &[u32], y: &[u32]) -> u32 {
    let p = m.get() as u64;
    let mut acc = 0u64;
    for (&a, &b) in x.iter().zip(y) {
        acc = (acc + a as u64 * b as u64) % p;
    }
    acc as u32
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix[{}; {}x{}]", self.modulus, self.rows, self.cols)?;
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}
