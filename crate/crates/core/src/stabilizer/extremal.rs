//! Worst-case and fixed-set measurement counts, by exhaustive enumeration.

use itertools::Itertools;

use super::StabilizerCode;
use crate::error::{Error, Result};
use crate::fpalg::{rank, span_contains, FpMatrix, Modulus};
use crate::symplectic::{project_rows, symp_raw, ErasurePattern};

/// Most erasure patterns examined by [`worst_case_measurements`].
pub const WORST_CASE_LIMIT: u128 = 1 << 22;
/// Largest `dim C` accepted by [`min_fixed_set`].
pub const FIXED_SET_MAX_DIM: usize = 7;
/// Largest `n` accepted by [`min_fixed_set`].
pub const FIXED_SET_MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorstCase {
    /// `max_{|I| = δ} dim P_I(C)`.
    pub count: usize,
    /// Lexicographically smallest `I` attaining the maximum.
    pub witness: ErasurePattern,
}

/// Number of measurements needed for the worst erasure pattern of size `δ`,
/// `dim C − min_{|I|=δ} dim(C ∩ F_p^{Ī})`.
pub fn worst_case_measurements(code: &StabilizerCode, delta: usize) -> Result<WorstCase> {
    let n = code.n();
    if delta > n {
        return Err(Error::InvalidInput(format!(
            "delta {delta} exceeds n = {n}"
        )));
    }
    let count = binomial(n, delta);
    if count > WORST_CASE_LIMIT {
        return Err(Error::TooLarge {
            what: "worst-case enumeration",
            size: count,
            limit: WORST_CASE_LIMIT,
        });
    }
    let mut best: Option<WorstCase> = None;
    for subset in (0..n).combinations(delta) {
        let pattern = ErasurePattern::new(n, subset)?;
        let dim = rank(&project_rows(code.generators(), &pattern)?);
        if best.as_ref().is_none_or(|b| dim > b.count) {
            best = Some(WorstCase {
                count: dim,
                witness: pattern,
            });
        }
    }
    Ok(best.expect("at least one subset of size delta"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinFixedSet {
    /// `min { dim D : D ⊆ C, w_s(D^⊥ \ C) ≥ δ + 1 }`.
    pub dim: usize,
    /// First minimal `D` in enumeration order, as a basis.
    pub observables: FpMatrix,
    /// `2n − max { dim W : W ⊇ C^⊥, w_s(W \ C) ≥ δ + 1 }`, computed
    /// independently over supersets of `C^⊥`; always equal to `dim`.
    pub dual_form: usize,
}

/// Smallest single set of observables that corrects every pattern of `δ`
/// erasures.
///
/// `D` qualifies when no vector of symplectic weight `1..=δ` lies in
/// `D^⊥ \ C`. Candidate `D` are enumerated as canonical reduced coefficient
/// matrices over the basis of `C`, by increasing dimension. Restricted to
/// `p = 2`, `dim C ≤ 7` and `n ≤ 8`.
pub fn min_fixed_set(code: &StabilizerCode, delta: usize) -> Result<MinFixedSet> {
    let m = code.modulus();
    if !m.is_binary() {
        return Err(Error::InvalidInput(
            "fixed-set enumeration supports p = 2 only".into(),
        ));
    }
    if code.dim() > FIXED_SET_MAX_DIM {
        return Err(Error::TooLarge {
            what: "fixed-set enumeration (dim C)",
            size: code.dim() as u128,
            limit: FIXED_SET_MAX_DIM as u128,
        });
    }
    if code.n() > FIXED_SET_MAX_N {
        return Err(Error::TooLarge {
            what: "fixed-set enumeration (n)",
            size: code.n() as u128,
            limit: FIXED_SET_MAX_N as u128,
        });
    }

    let light = light_vectors_outside(code, delta);
    let gens = code.generators();
    let k = code.dim();

    let mut found = None;
    'outer: for d in 0..=k {
        for coeffs in canonical_subspaces(m, k, d) {
            let dmat = coeffs.mul(gens)?;
            let qualifies = light
                .iter()
                .all(|x| dmat.row_iter().any(|row| symp_raw(m, row, x) != 0));
            if qualifies {
                found = Some((d, dmat));
                break 'outer;
            }
        }
    }
    let Some((dim, observables)) = found else {
        return Err(Error::Undefined(format!(
            "no subspace of C corrects every pattern of {delta} erasures (delta ≥ distance)"
        )));
    };

    let dual_form = dual_form_minimum(code, &light);
    assert_eq!(
        dim, dual_form,
        "primal and dual fixed-set minimisations disagree"
    );
    Ok(MinFixedSet {
        dim,
        observables,
        dual_form,
    })
}

/// Nonzero vectors of symplectic weight at most `δ` that are not in `C`.
fn light_vectors_outside(code: &StabilizerCode, delta: usize) -> Vec<Vec<u32>> {
    let n = code.n();
    let p = code.modulus().get();
    let mut out = Vec::new();
    for w in 1..=delta.min(n) {
        for support in (0..n).combinations(w) {
            // every qudit in the support carries a nonzero (a_i, b_i)
            let per_site = (p * p - 1) as usize;
            for mut code_word in 0..per_site.pow(w as u32) {
                let mut v = vec![0u32; 2 * n];
                for &i in &support {
                    let pair = (code_word % per_site) as u32 + 1;
                    code_word /= per_site;
                    v[i] = pair % p;
                    v[n + i] = pair / p;
                }
                if !code.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// `2n − max dim W` over `W = C^⊥ + U` with `U` ranging over subspaces of a
/// fixed complement of `C^⊥`, largest first.
fn dual_form_minimum(code: &StabilizerCode, light: &[Vec<u32>]) -> usize {
    let m = code.modulus();
    let dual = code.dual();
    let two_n = 2 * code.n();
    let mut complement = FpMatrix::empty(m, two_n);
    let mut grown = dual.clone();
    for c in 0..two_n {
        let mut e = vec![0u32; two_n];
        e[c] = 1;
        if !span_contains(&grown, &e) {
            grown.push_row(&e);
            complement.push_row(&e);
        }
    }
    let k = complement.rows();
    for u in (0..=k).rev() {
        for coeffs in canonical_subspaces(m, k, u) {
            let w = dual
                .vstack(&coeffs.mul(&complement).expect("shapes"))
                .expect("shapes");
            if light.iter().all(|x| !span_contains(&w, x)) {
                return two_n - (dual.rows() + u);
            }
        }
    }
    unreachable!("W = C^⊥ always qualifies when a primal solution exists")
}

/// Every `d`-dimensional subspace of `F_p^k`, as its unique reduced row
/// echelon basis. Pivot sets ascend lexicographically; free entries count up
/// in base `p` with the first free entry least significant.
pub(crate) fn canonical_subspaces(m: Modulus, k: usize, d: usize) -> Vec<FpMatrix> {
    let p = m.get() as usize;
    let mut out = Vec::new();
    for pivots in (0..k).combinations(d) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..k)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        for mut assignment in 0..p.pow(free.len() as u32) {
            let mut mat = FpMatrix::zeros(m, d, k);
            for (r, &pc) in pivots.iter().enumerate() {
                mat.set(r, pc, 1);
            }
            for &(r, c) in &free {
                mat.set(r, c, (assignment % p) as u32);
                assignment /= p;
            }
            out.push(mat);
        }
    }
    out
}

/// `n` choose `k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
