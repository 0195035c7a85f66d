//! Symplectic geometry of `F_p^{2n}`.
//!
//! A vector `(a_1..a_n | b_1..b_n)` stands for the operator
//! `X^{a_1} Z^{b_1} ⊗ … ⊗ X^{a_n} Z^{b_n}`; the inner product is
//! `⟨x, y⟩ = Σ a_i b'_i − a'_i b_i`. Qudit indices are 0-based in this API;
//! [`ErasurePattern::from_one_based`] converts from the 1-based convention
//! used by files and the command line.

use std::fmt;

use crate::error::{invalid, Result};
use crate::fpalg::{kernel_basis, rref, FpMatrix, FpScalar, Modulus};

/// A length-`2n` vector `(a|b)` over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliVector {
    modulus: Modulus,
    n: usize,
    data: Vec<u32>,
}

impl PauliVector {
    pub fn new(modulus: Modulus, a: &[u32], b: &[u32]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(invalid(format!(
                "X-part has length {}, Z-part has length {}",
                a.len(),
                b.len()
            )));
        }
        let mut data = a.to_vec();
        data.extend_from_slice(b);
        Self::from_vec(modulus, data)
    }

    /// From the contiguous `(a|b)` layout.
    pub fn from_vec(modulus: Modulus, data: Vec<u32>) -> Result<Self> {
        if !data.len().is_multiple_of(2) {
            return Err(invalid(format!("odd vector length {}", data.len())));
        }
        if data.iter().any(|&v| v >= modulus.get()) {
            return Err(invalid(format!("entry outside {modulus}")));
        }
        Ok(PauliVector {
            modulus,
            n: data.len() / 2,
            data,
        })
    }

    pub fn zero(modulus: Modulus, n: usize) -> Self {
        PauliVector {
            modulus,
            n,
            data: vec![0; 2 * n],
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Number of qudits.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[u32] {
        &self.data[..self.n]
    }

    pub fn b(&self) -> &[u32] {
        &self.data[self.n..]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Qudits where either half is nonzero, ascending.
    pub fn support(&self) -> Vec<usize> {
        support_of(&self.data)
    }

    pub fn symp_weight(&self) -> usize {
        self.support().len()
    }

    /// `P_I(x)`: the `(a|b)` components at the erased qudits, in ascending order.
    pub fn project(&self, erasures: &ErasurePattern) -> Result<Vec<u32>> {
        erasures.check_len(self.n)?;
        Ok(project_slice(&self.data, erasures.indices()))
    }
}

impl fmt::Debug for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ab(&self.data))
    }
}

/// Renders a `(a|b)` slice as `(10|01)`, with commas between entries when `p > 9`.
pub fn format_ab(v: &[u32]) -> String {
    let n = v.len() / 2;
    let wide = v.iter().any(|&x| x > 9);
    let sep = if wide { "," } else { "" };
    let part = |s: &[u32]| s.iter().map(u32::to_string).collect::<Vec<_>>().join(sep);
    format!("({}|{})", part(&v[..n]), part(&v[n..]))
}

/// A set of erased qudit positions, sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ErasurePattern {
    n: usize,
    indices: Vec<usize>,
}

impl ErasurePattern {
    /// From 0-based qudit indices.
    pub fn new(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(invalid(format!(
                "erasure index {bad} out of range for n = {n}"
            )));
        }
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("duplicate erasure index"));
        }
        Ok(ErasurePattern { n, indices })
    }

    /// From 1-based indices in `{1, …, n}`.
    pub fn from_one_based(n: usize, indices: &[usize]) -> Result<Self> {
        if indices.contains(&0) {
            return Err(invalid("erasure indices are 1-based; got 0"));
        }
        Self::new(n, indices.iter().map(|&i| i - 1))
    }

    pub fn empty(n: usize) -> Self {
        ErasurePattern { n, indices: vec![] }
    }

    pub fn full(n: usize) -> Self {
        ErasurePattern {
            n,
            indices: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// 0-based indices, ascending.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// `Ī`, the non-erased positions.
    pub fn complement(&self) -> ErasurePattern {
        ErasurePattern {
            n: self.n,
            indices: (0..self.n).filter(|&i| !self.contains(i)).collect(),
        }
    }

    /// Columns `I ∪ (I + n)` of the `(a|b)` layout: X-part first, then Z-part.
    pub fn columns(&self) -> Vec<usize> {
        let mut cols = self.indices.clone();
        cols.extend(self.indices.iter().map(|i| i + self.n));
        cols
    }

    /// A column order over `2n` columns that visits `I ∪ (I + n)` first and
    /// then the remaining columns in natural order.
    pub fn columns_first(&self) -> Vec<usize> {
        let mut order = self.columns();
        let mut is_front = vec![false; 2 * self.n];
        for &c in &order {
            is_front[c] = true;
        }
        order.extend((0..2 * self.n).filter(|&c| !is_front[c]));
        order
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(invalid(format!(
                "erasure pattern is for n = {}, code has n = {n}",
                self.n
            )));
        }
        Ok(())
    }
}

pub(crate) fn support_of(v: &[u32]) -> Vec<usize> {
    let n = v.len() / 2;
    (0..n).filter(|&i| v[i] != 0 || v[i + n] != 0).collect()
}

pub(crate) fn project_slice(v: &[u32], idx: &[usize]) -> Vec<u32> {
    let n = v.len() / 2;
    let mut out: Vec<u32> = idx.iter().map(|&i| v[i]).collect();
    out.extend(idx.iter().map(|&i| v[i + n]));
    out
}

/// `⟨x, y⟩` on raw `(a|b)` slices of equal even length.
pub(crate) fn symp_raw(m: Modulus, x: &[u32], y: &[u32]) -> u32 {
    let n = x.len() / 2;
    let p = m.get() as u64;
    let mut plus = 0u64;
    let mut minus = 0u64;
    for i in 0..n {
        plus = (plus + x[i] as u64 * y[n + i] as u64) % p;
        minus = (minus + y[i] as u64 * x[n + i] as u64) % p;
    }
    ((plus + p - minus) % p) as u32
}

/// Symplectic inner product.
pub fn symp_product(x: &PauliVector, y: &PauliVector) -> Result<FpScalar> {
    if x.modulus != y.modulus || x.n != y.n {
        return Err(invalid(
            "symplectic product of vectors over different spaces",
        ));
    }
    Ok(FpScalar::new(
        symp_raw(x.modulus, &x.data, &y.data),
        x.modulus,
    ))
}

fn check_even(c: &FpMatrix) -> Result<usize> {
    if !c.cols().is_multiple_of(2) {
        return Err(invalid(format!(
            "symplectic spaces need an even column count, got {}",
            c.cols()
        )));
    }
    Ok(c.cols() / 2)
}

/// Basis of the symplectic dual `C^⊥`.
///
/// Computed as the kernel of `G·Ω` with `Ω = [[0, −I], [I, 0]]`, so each row
/// `(a|b)` of the generator matrix `G` becomes `(b | −a)`.
pub fn symp_dual(c: &FpMatrix) -> Result<FpMatrix> {
    let n = check_even(c)?;
    let m = c.modulus();
    let mut twisted = FpMatrix::zeros(m, c.rows(), 2 * n);
    for r in 0..c.rows() {
        let src = c.row(r);
        let dst = twisted.row_mut(r);
        for i in 0..n {
            dst[i] = src[n + i];
            dst[n + i] = m.neg(src[i]);
        }
    }
    Ok(kernel_basis(&twisted))
}

/// Rows of `C` split after reduction with the columns of `front` visited first.
///
/// Returns `(touching, avoiding)`: reduced basis rows with some nonzero
/// component on `front`'s columns, and those with none. `avoiding` is a basis
/// of `C ∩ F_p^{complement of front}` and `touching` spans a complement of it
/// that meets `F_p^{complement}` only in zero.
pub(crate) fn split_on(c: &FpMatrix, front: &ErasurePattern) -> Result<(FpMatrix, FpMatrix)> {
    let n = check_even(c)?;
    front.check_len(n)?;
    let red = rref(c, &front.columns_first())?;
    let width = 2 * front.len();
    let positions = red.pivot_positions();
    let touching: Vec<usize> = (0..red.rank()).filter(|&i| positions[i] < width).collect();
    let avoiding: Vec<usize> = (0..red.rank()).filter(|&i| positions[i] >= width).collect();
    Ok((
        red.matrix.select_rows(&touching),
        red.matrix.select_rows(&avoiding),
    ))
}

/// Basis of `C ∩ F_p^I`, the elements of `C` supported inside `I`.
pub fn restrict_to_coords(c: &FpMatrix, erasures: &ErasurePattern) -> Result<FpMatrix> {
    let (_, inside) = split_on(c, &erasures.complement())?;
    Ok(inside)
}

/// The matrix whose rows are `P_I` of the rows of `C`.
pub fn project_rows(c: &FpMatrix, erasures: &ErasurePattern) -> Result<FpMatrix> {
    let n = check_even(c)?;
    erasures.check_len(n)?;
    Ok(c.select_cols(&erasures.columns()))
}

/// Union of supports of the rows, i.e. `supp(rowspace)`.
pub fn support_of_rows(c: &FpMatrix) -> Vec<usize> {
    let n = c.cols() / 2;
    let mut hit = vec![false; n];
    for row in c.row_iter() {
        for i in support_of(row) {
            hit[i] = true;
        }
    }
    (0..n).filter(|&i| hit[i]).collect()
}
