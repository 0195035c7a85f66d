//! Erasure correction with a reduced set of stabilizer measurements.
//!
//! A stabilizer code is a self-orthogonal subspace `C ⊆ F_p^{2n}`. Erasures
//! at `I` are correctable iff `C ∩ F_p^I = C^⊥ ∩ F_p^I`. Measuring a basis of
//! any `D ⊆ C` with `C = D + (C ∩ F_p^{Ī})` then suffices to identify the
//! error, and the smallest such `D` has dimension
//! `dim C − dim(C ∩ F_p^{Ī}) = dim P_I(C) ≤ 2|I|`.

mod extremal;
mod random;

pub use extremal::binomial as binomial_count;
pub use extremal::{min_fixed_set, worst_case_measurements, MinFixedSet, WorstCase};
pub use random::random_subspace;

use crate::error::{invalid, Error, Result};
use crate::fpalg::{
    is_subspace, rank, row_basis, solve_linear, span_contains, FpMatrix, FpScalar, Modulus,
};
use crate::symplectic::{
    project_rows, restrict_to_coords, split_on, support_of_rows, symp_dual, symp_raw,
    ErasurePattern, PauliVector,
};

/// A `p`-ary `[[n, n − dim C]]` stabilizer code given by a basis of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    modulus: Modulus,
    n: usize,
    generators: FpMatrix,
}

impl StabilizerCode {
    /// Requires independent, pairwise commuting generators with `2n` columns.
    pub fn new(generators: FpMatrix) -> Result<Self> {
        if !generators.cols().is_multiple_of(2) {
            return Err(invalid(format!(
                "generators need 2n columns, got {}",
                generators.cols()
            )));
        }
        let n = generators.cols() / 2;
        if rank(&generators) != generators.rows() {
            return Err(invalid("generators are linearly dependent"));
        }
        let m = generators.modulus();
        for i in 0..generators.rows() {
            for j in i + 1..generators.rows() {
                if symp_raw(m, generators.row(i), generators.row(j)) != 0 {
                    return Err(invalid(format!(
                        "generators {} and {} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        debug_assert!(generators.rows() <= n);
        Ok(StabilizerCode {
            modulus: m,
            n,
            generators,
        })
    }

    /// Like [`StabilizerCode::new`] but accepts a dependent spanning set,
    /// which is reduced to a basis first.
    pub fn from_spanning_set(rows: FpMatrix) -> Result<Self> {
        if !rows.cols().is_multiple_of(2) {
            return Err(invalid(format!(
                "generators need 2n columns, got {}",
                rows.cols()
            )));
        }
        let m = rows.modulus();
        for i in 0..rows.rows() {
            for j in i + 1..rows.rows() {
                if symp_raw(m, rows.row(i), rows.row(j)) != 0 {
                    return Err(invalid(format!(
                        "generators {} and {} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Self::new(row_basis(&rows))
    }

    pub fn from_rows<R: AsRef<[u32]>>(p: u32, n: usize, rows: &[R]) -> Result<Self> {
        Self::new(FpMatrix::from_rows(Modulus::new(p)?, 2 * n, rows)?)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim C`, the number of measurements a full syndrome extraction takes.
    pub fn dim(&self) -> usize {
        self.generators.rows()
    }

    /// Number of logical qudits, `n − dim C`.
    pub fn k(&self) -> usize {
        self.n - self.dim()
    }

    pub fn generators(&self) -> &FpMatrix {
        &self.generators
    }

    /// Basis of `C^⊥`.
    pub fn dual(&self) -> FpMatrix {
        symp_dual(&self.generators).expect("2n columns")
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == 2 * self.n && span_contains(&self.generators, v)
    }
}

/// Observables to measure for a given erasure pattern.
///
/// `observables` spans `D` with `C = D + residual` and `D ∩ F_p^{Ī} = {0}`;
/// `residual` spans `C ∩ F_p^{Ī}`, the stabilizers that never touch `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasurementPlan {
    erasures: ErasurePattern,
    observables: FpMatrix,
    residual: FpMatrix,
    recovering_set: Vec<usize>,
}

impl MeasurementPlan {
    pub fn erasures(&self) -> &ErasurePattern {
        &self.erasures
    }

    /// Basis of `D`, one row per measurement.
    pub fn observables(&self) -> &FpMatrix {
        &self.observables
    }

    /// Basis of `C ∩ F_p^{Ī}`.
    pub fn residual(&self) -> &FpMatrix {
        &self.residual
    }

    /// `supp(D)`: the qudits touched by the measurements (0-based).
    pub fn recovering_set(&self) -> &[usize] {
        &self.recovering_set
    }

    pub fn measurement_count(&self) -> usize {
        self.observables.rows()
    }

    /// Syndrome an error would produce on this plan's observables.
    pub fn syndrome_of(&self, error: &PauliVector) -> Result<Syndrome> {
        syndrome_of(&self.observables, error)
    }
}

/// Measurement outcomes as elements of `F_p`, one per observable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syndrome {
    modulus: Modulus,
    values: Vec<u32>,
}

impl Syndrome {
    pub fn new(modulus: Modulus, values: Vec<u32>) -> Result<Self> {
        if let Some(v) = values.iter().find(|&&v| v >= modulus.get()) {
            return Err(invalid(format!("syndrome value {v} outside {modulus}")));
        }
        Ok(Syndrome { modulus, values })
    }

    pub fn zero(modulus: Modulus, len: usize) -> Self {
        Syndrome {
            modulus,
            values: vec![0; len],
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn scalars(&self) -> Vec<FpScalar> {
        self.values
            .iter()
            .map(|&v| FpScalar::new(v, self.modulus))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `s_i = ⟨x_i, e⟩` for each row `x_i`.
pub fn syndrome_of(observables: &FpMatrix, error: &PauliVector) -> Result<Syndrome> {
    if observables.cols() != error.as_slice().len() || observables.modulus() != error.modulus() {
        return Err(invalid("error vector does not match the observables"));
    }
    let m = observables.modulus();
    let values = observables
        .row_iter()
        .map(|row| symp_raw(m, row, error.as_slice()))
        .collect();
    Ok(Syndrome { modulus: m, values })
}

fn check_pattern(code: &StabilizerCode, erasures: &ErasurePattern) -> Result<()> {
    erasures.check_len(code.n)
}

/// Whether `C ∩ F_p^I = C^⊥ ∩ F_p^I`.
///
/// `C ⊆ C^⊥` makes the left side a subspace of the right, so comparing
/// dimensions decides equality.
pub fn erasure_correctable(code: &StabilizerCode, erasures: &ErasurePattern) -> Result<bool> {
    check_pattern(code, erasures)?;
    let inner = restrict_to_coords(&code.generators, erasures)?;
    let outer = restrict_to_coords(&code.dual(), erasures)?;
    Ok(inner.rows() == outer.rows())
}

/// A vector of `C^⊥ ∩ F_p^I` outside `C`, if the erasures are not correctable.
pub fn correctability_witness(
    code: &StabilizerCode,
    erasures: &ErasurePattern,
) -> Result<Option<Vec<u32>>> {
    check_pattern(code, erasures)?;
    let outer = restrict_to_coords(&code.dual(), erasures)?;
    let witness = outer
        .row_iter()
        .find(|row| !code.contains(row))
        .map(<[u32]>::to_vec);
    Ok(witness)
}

/// Smallest set of observables that corrects erasures at `I`.
///
/// The generator matrix is reduced with the columns `I ∪ (I + n)` visited
/// first. Reduced rows that touch `I` form a basis of `D` with
/// `D ∩ F_p^{Ī} = {0}`; the rest form a basis of `C ∩ F_p^{Ī}`. One
/// elimination on a `dim C × 2n` matrix, so cubic in `n`.
pub fn plan_measurements(
    code: &StabilizerCode,
    erasures: &ErasurePattern,
) -> Result<MeasurementPlan> {
    if let Some(witness) = correctability_witness(code, erasures)? {
        return Err(Error::NotCorrectable { witness });
    }
    let (observables, residual) = split_on(&code.generators, erasures)?;
    let recovering_set = support_of_rows(&observables);
    Ok(MeasurementPlan {
        erasures: erasures.clone(),
        observables,
        residual,
        recovering_set,
    })
}

/// Whether measuring a basis of `D ⊆ C` identifies every error on `I` up to
/// stabilizers, i.e. `C ∩ F_p^I = D^⊥ ∩ F_p^I`.
///
/// The equivalent projected form `P_I(C^⊥) = P_I(D)` is evaluated as well and
/// the two are required to agree.
pub fn verify_plan(code: &StabilizerCode, d: &FpMatrix, erasures: &ErasurePattern) -> Result<bool> {
    check_pattern(code, erasures)?;
    if d.cols() != 2 * code.n || d.modulus() != code.modulus {
        return Err(invalid("observables do not live in the code's space"));
    }
    if !is_subspace(d, &code.generators)? {
        return Err(invalid(
            "observables are not contained in the stabilizer space",
        ));
    }
    // C ⊆ C^⊥ ⊆ D^⊥, so both sides are nested and dimensions decide.
    let left = restrict_to_coords(&code.generators, erasures)?.rows();
    let right = restrict_to_coords(&symp_dual(d)?, erasures)?.rows();
    let direct = left == right;

    let proj_dual = rank(&project_rows(&code.dual(), erasures)?);
    let proj_d = rank(&project_rows(d, erasures)?);
    let projected = proj_dual == proj_d;

    assert_eq!(
        direct, projected,
        "intersection and projection forms of the sufficiency test disagree"
    );
    Ok(direct)
}

/// Recovers an error supported on `I` from the plan's syndrome.
///
/// Solves `⟨x_i, e⟩ = s_i` over the unknowns `(a_I | b_I)`. The solution is
/// unique modulo `C ∩ F_p^I`; the returned representative sets every free
/// unknown of the natural-order reduction to zero.
pub fn decode(
    code: &StabilizerCode,
    plan: &MeasurementPlan,
    syndrome: &Syndrome,
) -> Result<PauliVector> {
    check_pattern(code, plan.erasures())?;
    let m = code.modulus;
    if syndrome.modulus != m {
        return Err(invalid("syndrome is over a different field"));
    }
    let obs = plan.observables();
    if syndrome.len() != obs.rows() {
        return Err(invalid(format!(
            "syndrome has {} values, plan has {} observables",
            syndrome.len(),
            obs.rows()
        )));
    }
    let n = code.n;
    let idx = plan.erasures().indices();
    let w = idx.len();
    let mut system = FpMatrix::zeros(m, obs.rows(), 2 * w);
    for r in 0..obs.rows() {
        let x = obs.row(r);
        let dst = system.row_mut(r);
        for (j, &i) in idx.iter().enumerate() {
            // ⟨x, e⟩ = Σ x.a_i e.b_i − x.b_i e.a_i
            dst[j] = m.neg(x[n + i]);
            dst[w + j] = x[i];
        }
    }
    let sol = solve_linear(&system, syndrome.values())?.ok_or(Error::InconsistentSyndrome)?;
    let mut e = vec![0u32; 2 * n];
    for (j, &i) in idx.iter().enumerate() {
        e[i] = sol[j];
        e[n + i] = sol[w + j];
    }
    PauliVector::from_vec(m, e)
}

/// Basis of `C ∩ F_p^{Ī}`: the stabilizers left out of the plan, which can
/// still screen for errors outside the erasures.
pub fn residual_check_basis(code: &StabilizerCode, erasures: &ErasurePattern) -> Result<FpMatrix> {
    check_pattern(code, erasures)?;
    restrict_to_coords(&code.generators, &erasures.complement())
}
