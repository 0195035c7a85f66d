use super::gf2;
use super::matrix::FpMatrix;
use crate::error::{invalid, Result};

/// Outcome of Gauss-Jordan elimination under a column order.
///
/// `matrix` holds only the `rank` nonzero rows, in the caller's original
/// column layout. Row `i` has a unit entry at `pivot_cols[i]` and every other
/// row is zero there. Pivots appear in the order they occur in `col_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    pub matrix: FpMatrix,
    pub pivot_cols: Vec<usize>,
    pub col_order: Vec<usize>,
}

impl RrefResult {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    /// The reduced rows with columns rearranged into `col_order`.
    pub fn permuted(&self) -> FpMatrix {
        self.matrix.select_cols(&self.col_order)
    }

    /// Position of each pivot within `col_order`.
    pub fn pivot_positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.col_order.len()];
        for (i, &c) in self.col_order.iter().enumerate() {
            pos[c] = i;
        }
        self.pivot_cols.iter().map(|&c| pos[c]).collect()
    }
}

/// Reduced row echelon form with columns visited in `col_order`.
///
/// The pivot of each step is the first row (from the current rank down) with
/// a nonzero entry, which makes the output deterministic.
pub fn rref(m: &FpMatrix, col_order: &[usize]) -> Result<RrefResult> {
    check_permutation(col_order, m.cols())?;
    let modulus = m.modulus();
    let (rows, pivot_cols) = if modulus.is_binary() {
        gf2::rref_packed(m, col_order)
    } else {
        rref_generic(m, col_order)
    };
    let matrix = FpMatrix::from_rows(modulus, m.cols(), &rows)?;
    Ok(RrefResult {
        matrix,
        pivot_cols,
        col_order: col_order.to_vec(),
    })
}

/// `rref` under the natural column order.
pub fn rref_natural(m: &FpMatrix) -> RrefResult {
    let order: Vec<usize> = (0..m.cols()).collect();
    rref(m, &order).expect("identity order is a permutation")
}

fn check_permutation(order: &[usize], cols: usize) -> Result<()> {
    if order.len() != cols {
        return Err(invalid(format!(
            "column order has {} entries for {cols} columns",
            order.len()
        )));
    }
    let mut seen = vec![false; cols];
    for &c in order {
        if c >= cols || std::mem::replace(&mut seen[c], true) {
            return Err(invalid(format!(
                "column order is not a permutation of 0..{cols}"
            )));
        }
    }
    Ok(())
}

fn rref_generic(m: &FpMatrix, order: &[usize]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let f = m.modulus();
    let mut rows = m.to_rows();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for &c in order {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = f.inv(rows[rank][c]);
        for v in rows[rank].iter_mut() {
            *v = f.mul(*v, inv);
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (v, &pv) in row.iter_mut().zip(&pivot) {
                if pv != 0 {
                    *v = f.sub(*v, f.mul(factor, pv));
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

pub fn rank(m: &FpMatrix) -> usize {
    rref_natural(m).rank()
}

/// Canonical basis (reduced rows) of the row space.
pub fn row_basis(m: &FpMatrix) -> FpMatrix {
    rref_natural(m).matrix
}

/// Basis of `{x : M xᵀ = 0}`, one vector per free column in ascending order.
pub fn kernel_basis(m: &FpMatrix) -> FpMatrix {
    let f = m.modulus();
    let cols = m.cols();
    let red = rref_natural(m);
    let mut is_pivot = vec![false; cols];
    for &c in &red.pivot_cols {
        is_pivot[c] = true;
    }
    let mut out = FpMatrix::empty(f, cols);
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u32; cols];
        x[free] = 1;
        for (i, &pc) in red.pivot_cols.iter().enumerate() {
            x[pc] = f.neg(red.matrix.get(i, free));
        }
        out.push_row(&x);
    }
    out
}

/// Basis of `rowspace(A) + rowspace(B)`.
pub fn space_sum(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    Ok(row_basis(&a.vstack(b)?))
}

/// Basis of `rowspace(A) ∩ rowspace(B)` by the Zassenhaus construction.
pub fn space_intersection(a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix> {
    a.check_compatible(b)?;
    let cols = a.cols();
    let mut big = FpMatrix::zeros(a.modulus(), a.rows() + b.rows(), 2 * cols);
    for r in 0..a.rows() {
        let row = a.row(r);
        let dst = big.row_mut(r);
        dst[..cols].copy_from_slice(row);
        dst[cols..].copy_from_slice(row);
    }
    for r in 0..b.rows() {
        big.row_mut(a.rows() + r)[..cols].copy_from_slice(b.row(r));
    }
    let red = rref_natural(&big);
    let mut out = FpMatrix::empty(a.modulus(), cols);
    for (i, &pc) in red.pivot_cols.iter().enumerate() {
        if pc >= cols {
            out.push_row(&red.matrix.row(i)[cols..]);
        }
    }
    Ok(out)
}

/// Some `x` with `M x = s`, free variables set to zero, or `None`.
pub fn solve_linear(m: &FpMatrix, s: &[u32]) -> Result<Option<Vec<u32>>> {
    if s.len() != m.rows() {
        return Err(invalid(format!(
            "right-hand side has length {}, matrix has {} rows",
            s.len(),
            m.rows()
        )));
    }
    let f = m.modulus();
    let cols = m.cols();
    let mut aug = FpMatrix::zeros(f, m.rows(), cols + 1);
    for r in 0..m.rows() {
        let dst = aug.row_mut(r);
        dst[..cols].copy_from_slice(m.row(r));
        dst[cols] = s[r] % f.get();
    }
    let red = rref_natural(&aug);
    if red.pivot_cols.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![0u32; cols];
    for (i, &pc) in red.pivot_cols.iter().enumerate() {
        x[pc] = red.matrix.get(i, cols);
    }
    Ok(Some(x))
}

/// Whether `v` lies in the row space of `basis`.
pub fn span_contains(basis: &FpMatrix, v: &[u32]) -> bool {
    let r = rank(basis);
    let mut ext = basis.clone();
    ext.push_row(v);
    rank(&ext) == r
}

/// Whether two matrices have the same row space.
pub fn same_span(a: &FpMatrix, b: &FpMatrix) -> Result<bool> {
    a.check_compatible(b)?;
    let ra = rank(a);
    Ok(ra == rank(b) && ra == rank(&a.vstack(b)?))
}

/// Whether `sub` spans a subspace of `rowspace(sup)`.
pub fn is_subspace(sub: &FpMatrix, sup: &FpMatrix) -> Result<bool> {
    sub.check_compatible(sup)?;
    Ok(rank(&sup.vstack(sub)?) == rank(sup))
}

/// Row echelon elimination in row order, restricted to `cols`.
///
/// Returns the indices of the rows that contribute a new pivot, i.e. the
/// rows whose restriction to `cols` is independent of the rows before them.
/// Rows are never reordered, so ties are broken by input order.
pub fn independent_rows_on(m: &FpMatrix, cols: &[usize]) -> Vec<usize> {
    let f = m.modulus();
    let mut basis: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut picked = Vec::new();
    for r in 0..m.rows() {
        let row = m.row(r);
        let mut v: Vec<u32> = cols.iter().map(|&c| row[c]).collect();
        for (pivot, b) in &basis {
            let factor = v[*pivot];
            if factor != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = f.inv(v[pivot]);
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            basis.push((pivot, v));
            picked.push(r);
        }
    }
    picked
}
