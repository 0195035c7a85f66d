//! Two-code CSS specialisation.
//!
//! The stabilizer space is `C_Z × C_X`: vectors `(a|b)` with the X-part `a`
//! drawn from `C_Z` and the Z-part `b` from `C_X`. This requires every row of
//! `C_Z` to be Euclidean-orthogonal to every row of `C_X`. On a surface code
//! `C_X` is spanned by faces (measured as Z-type operators) and `C_Z` by
//! vertices (X-type operators). Each sector is planned on its own and needs
//! at most `|I|` measurements.

use crate::error::{invalid, Error, Result};
use crate::fpalg::{dot, rank, row_basis, rref, FpMatrix, Modulus};
use crate::stabilizer::{erasure_correctable, StabilizerCode};
use crate::symplectic::ErasurePattern;

/// An `[n, k]` linear code over `F_p` given by a generator basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalCode {
    generators: FpMatrix,
}

impl ClassicalCode {
    pub fn new(generators: FpMatrix) -> Result<Self> {
        if rank(&generators) != generators.rows() {
            return Err(invalid("classical generators are linearly dependent"));
        }
        Ok(ClassicalCode { generators })
    }

    /// Reduces a possibly dependent spanning set to a basis.
    pub fn from_spanning_set(rows: FpMatrix) -> Self {
        ClassicalCode {
            generators: row_basis(&rows),
        }
    }

    pub fn from_rows<R: AsRef<[u32]>>(p: u32, n: usize, rows: &[R]) -> Result<Self> {
        Self::new(FpMatrix::from_rows(Modulus::new(p)?, n, rows)?)
    }

    pub fn modulus(&self) -> Modulus {
        self.generators.modulus()
    }

    pub fn n(&self) -> usize {
        self.generators.cols()
    }

    pub fn dim(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &FpMatrix {
        &self.generators
    }
}

/// Whether every generator of `cz` is Euclidean-orthogonal to every generator of `cx`.
pub fn validate_css(cx: &ClassicalCode, cz: &ClassicalCode) -> Result<bool> {
    if cx.modulus() != cz.modulus() || cx.n() != cz.n() {
        return Err(invalid(format!(
            "C_X is [{}] over {}, C_Z is [{}] over {}",
            cx.n(),
            cx.modulus(),
            cz.n(),
            cz.modulus()
        )));
    }
    let m = cx.modulus();
    Ok(cz
        .generators
        .row_iter()
        .all(|z| cx.generators.row_iter().all(|x| dot(m, z, x) == 0)))
}

/// A CSS code from two mutually orthogonal classical codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssCode {
    cx: ClassicalCode,
    cz: ClassicalCode,
}

impl CssCode {
    pub fn new(cx: ClassicalCode, cz: ClassicalCode) -> Result<Self> {
        if !validate_css(&cx, &cz)? {
            return Err(invalid("C_Z is not orthogonal to C_X"));
        }
        Ok(CssCode { cx, cz })
    }

    pub fn cx(&self) -> &ClassicalCode {
        &self.cx
    }

    pub fn cz(&self) -> &ClassicalCode {
        &self.cz
    }

    pub fn n(&self) -> usize {
        self.cx.n()
    }

    pub fn modulus(&self) -> Modulus {
        self.cx.modulus()
    }

    /// Rows `(z|0)` for `z` in `C_Z` followed by `(0|x)` for `x` in `C_X`.
    pub fn embed(&self, dz: &FpMatrix, dx: &FpMatrix) -> FpMatrix {
        let n = self.n();
        let mut out = FpMatrix::zeros(self.modulus(), dz.rows() + dx.rows(), 2 * n);
        for (r, row) in dz.row_iter().enumerate() {
            out.row_mut(r)[..n].copy_from_slice(row);
        }
        for (r, row) in dx.row_iter().enumerate() {
            out.row_mut(dz.rows() + r)[n..].copy_from_slice(row);
        }
        out
    }
}

/// The `[[n, n − k_X − k_Z]]` stabilizer code with `C = C_Z × C_X`.
pub fn css_to_stabilizer(css: &CssCode) -> Result<StabilizerCode> {
    StabilizerCode::new(css.embed(css.cz.generators(), css.cx.generators()))
}

/// Per-sector observables for erasures at `I`.
///
/// `dx` spans `D_X ⊆ C_X` and identifies X erasures; `dz` spans `D_Z ⊆ C_Z`
/// and identifies Z erasures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssPlan {
    pub erasures: ErasurePattern,
    pub dx: FpMatrix,
    pub dz: FpMatrix,
    pub residual_x: FpMatrix,
    pub residual_z: FpMatrix,
    /// `supp(D_X)`, 0-based.
    pub supp_x: Vec<usize>,
    /// `supp(D_Z)`, 0-based.
    pub supp_z: Vec<usize>,
}

impl CssPlan {
    pub fn measurement_count(&self) -> usize {
        self.dx.rows() + self.dz.rows()
    }
}

/// Splits a classical code at `I`: reduced rows touching `I` and the rest.
///
/// Columns of `I` are visited first, the same elimination used for the
/// general plan restricted to `n` columns.
pub fn split_classical(
    code: &ClassicalCode,
    erasures: &ErasurePattern,
) -> Result<(FpMatrix, FpMatrix)> {
    let n = code.n();
    if erasures.n() != n {
        return Err(invalid(format!(
            "erasure pattern is for n = {}, code has n = {n}",
            erasures.n()
        )));
    }
    let mut order = erasures.indices().to_vec();
    order.extend(erasures.complement().indices());
    let red = rref(code.generators(), &order)?;
    let width = erasures.len();
    let pos = red.pivot_positions();
    let touch: Vec<usize> = (0..red.rank()).filter(|&i| pos[i] < width).collect();
    let rest: Vec<usize> = (0..red.rank()).filter(|&i| pos[i] >= width).collect();
    Ok((
        red.matrix.select_rows(&touch),
        red.matrix.select_rows(&rest),
    ))
}

pub(crate) fn classical_support(m: &FpMatrix) -> Vec<usize> {
    (0..m.cols())
        .filter(|&c| (0..m.rows()).any(|r| m.get(r, c) != 0))
        .collect()
}

/// Plans X and Z sectors independently.
pub fn plan_css(css: &CssCode, erasures: &ErasurePattern) -> Result<CssPlan> {
    let code = css_to_stabilizer(css)?;
    if !erasure_correctable(&code, erasures)? {
        let witness =
            crate::stabilizer::correctability_witness(&code, erasures)?.unwrap_or_default();
        return Err(Error::NotCorrectable { witness });
    }
    let (dx, residual_x) = split_classical(&css.cx, erasures)?;
    let (dz, residual_z) = split_classical(&css.cz, erasures)?;
    Ok(CssPlan {
        erasures: erasures.clone(),
        supp_x: classical_support(&dx),
        supp_z: classical_support(&dz),
        dx,
        dz,
        residual_x,
        residual_z,
    })
}
