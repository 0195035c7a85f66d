//! Exhaustive reference implementations.
//!
//! Nothing here performs row reduction. Spans are materialised by listing
//! every linear combination of the generators, membership is a hash lookup,
//! and subspaces of a binary code are enumerated as XOR-closed subsets of its
//! coefficient space. Everything is exponential and meant for tiny instances.
//!
//! Enumeration orders are fixed: linear combinations count up in base `p`
//! with the first generator least significant, and vectors of `F_p^I` count
//! up with `a_{i_1}` least significant, then the rest of `a_I`, then `b_I`.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::error::{invalid, Error, Result};
use crate::fpalg::FpMatrix;
use crate::stabilizer::{StabilizerCode, Syndrome};
use crate::symplectic::{ErasurePattern, PauliVector};

/// Largest number of vectors any oracle will list.
pub const ORACLE_LIMIT: u128 = 1 << 20;
/// Largest `dim C` accepted by the subspace enumerations.
pub const SUBSPACE_MAX_DIM: usize = 7;

fn check_size(what: &'static str, p: u32, exponent: usize) -> Result<()> {
    let size = (p as u128)
        .checked_pow(exponent as u32)
        .unwrap_or(u128::MAX);
    if size > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what,
            size,
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

/// `Σ a_i b'_i − a'_i b_i mod p`, written out independently.
pub fn symp(p: u32, x: &[u32], y: &[u32]) -> u32 {
    let n = x.len() / 2;
    let mut plus = 0u64;
    let mut minus = 0u64;
    for i in 0..n {
        plus += x[i] as u64 * y[n + i] as u64;
        minus += y[i] as u64 * x[n + i] as u64;
    }
    let p = p as u64;
    ((plus % p + p - minus % p) % p) as u32
}

fn add_scaled(p: u32, acc: &mut [u32], c: u32, row: &[u32]) {
    for (a, &r) in acc.iter_mut().zip(row) {
        *a = (*a + c * r) % p;
    }
}

/// Every linear combination of the rows, in enumeration order. Repeats occur
/// when the rows are dependent.
pub fn combinations(rows: &FpMatrix) -> Result<Vec<Vec<u32>>> {
    let p = rows.modulus().get();
    check_size("span listing", p, rows.rows())?;
    let total = (p as usize).pow(rows.rows() as u32);
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut v = vec![0u32; rows.cols()];
        for r in 0..rows.rows() {
            let c = (idx % p as usize) as u32;
            idx /= p as usize;
            if c != 0 {
                add_scaled(p, &mut v, c, rows.row(r));
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// The row space as a set.
pub fn span_set(rows: &FpMatrix) -> Result<HashSet<Vec<u32>>> {
    Ok(combinations(rows)?.into_iter().collect())
}

/// Every vector of `F_p^{2n}` supported on `I`, in enumeration order.
pub fn vectors_on(p: u32, pattern: &ErasurePattern) -> Result<Vec<Vec<u32>>> {
    let n = pattern.n();
    let idx = pattern.indices();
    let slots: Vec<usize> = idx
        .iter()
        .copied()
        .chain(idx.iter().map(|&i| n + i))
        .collect();
    check_size("vectors on I", p, slots.len())?;
    let total = (p as usize).pow(slots.len() as u32);
    let mut out = Vec::with_capacity(total);
    for mut k in 0..total {
        let mut v = vec![0u32; 2 * n];
        for &s in &slots {
            v[s] = (k % p as usize) as u32;
            k /= p as usize;
        }
        out.push(v);
    }
    Ok(out)
}

fn commutes_with_all(p: u32, rows: &FpMatrix, v: &[u32]) -> bool {
    rows.row_iter().all(|r| symp(p, r, v) == 0)
}

/// `C ∩ F_p^I = C^⊥ ∩ F_p^I`.
pub fn brute_eq1(code: &StabilizerCode, pattern: &ErasurePattern) -> Result<bool> {
    let p = code.modulus().get();
    let c = span_set(code.generators())?;
    Ok(vectors_on(p, pattern)?
        .iter()
        .all(|v| c.contains(v) == commutes_with_all(p, code.generators(), v)))
}

/// `C = D + (C ∩ F_p^{Ī})`.
pub fn brute_eq2(code: &StabilizerCode, d: &FpMatrix, pattern: &ErasurePattern) -> Result<bool> {
    let p = code.modulus().get();
    let c = span_set(code.generators())?;
    let n = code.n();
    let residual: Vec<&Vec<u32>> = c
        .iter()
        .filter(|v| {
            pattern
                .indices()
                .iter()
                .all(|&i| v[i] == 0 && v[n + i] == 0)
        })
        .collect();
    let mut sums = HashSet::new();
    for x in span_set(d)? {
        for r in &residual {
            let s: Vec<u32> = x.iter().zip(r.iter()).map(|(a, b)| (a + b) % p).collect();
            sums.insert(s);
        }
    }
    Ok(sums == c)
}

/// `C ∩ F_p^I = D^⊥ ∩ F_p^I`.
pub fn brute_eq3(code: &StabilizerCode, d: &FpMatrix, pattern: &ErasurePattern) -> Result<bool> {
    let p = code.modulus().get();
    let c = span_set(code.generators())?;
    Ok(vectors_on(p, pattern)?
        .iter()
        .all(|v| c.contains(v) == commutes_with_all(p, d, v)))
}

/// All `e ∈ F_p^I` with `⟨d_i, e⟩ = s_i` for every row `d_i` of `D`.
pub fn brute_decode(
    code: &StabilizerCode,
    pattern: &ErasurePattern,
    d: &FpMatrix,
    syndrome: &Syndrome,
) -> Result<Vec<PauliVector>> {
    let p = code.modulus().get();
    if syndrome.len() != d.rows() {
        return Err(invalid(format!(
            "syndrome has {} entries, D has {} rows",
            syndrome.len(),
            d.rows()
        )));
    }
    vectors_on(p, pattern)?
        .into_iter()
        .filter(|e| {
            d.row_iter()
                .zip(syndrome.values())
                .all(|(row, &s)| symp(p, row, e) == s)
        })
        .map(|e| PauliVector::from_vec(code.modulus(), e))
        .collect()
}

/// Whether measuring `D` pins down every error on `I` up to `C ∩ F_p^I`.
///
/// Errors on `I` are grouped by syndrome; each group must be a single coset,
/// i.e. contain exactly `|C ∩ F_p^I|` vectors whose pairwise differences lie
/// in `C`.
pub fn brute_sufficient(
    code: &StabilizerCode,
    d: &FpMatrix,
    pattern: &ErasurePattern,
) -> Result<bool> {
    let p = code.modulus().get();
    let c = span_set(code.generators())?;
    let errors = vectors_on(p, pattern)?;
    let stabilised = errors.iter().filter(|e| c.contains(*e)).count();
    let mut groups: HashMap<Vec<u32>, Vec<&Vec<u32>>> = HashMap::new();
    for e in &errors {
        let s: Vec<u32> = d.row_iter().map(|row| symp(p, row, e)).collect();
        groups.entry(s).or_default().push(e);
    }
    Ok(groups.values().all(|g| {
        let first = g[0];
        g.len() == stabilised
            && g.iter().all(|e| {
                let diff: Vec<u32> = e.iter().zip(first).map(|(a, b)| (a + p - b) % p).collect();
                c.contains(&diff)
            })
    }))
}

/// Binary code elements indexed by coefficient bitmask, with subspaces of
/// `C` represented as 128-bit membership masks over those indices.
struct BinarySubspaces {
    elements: Vec<Vec<u32>>,
    k: usize,
}

impl BinarySubspaces {
    fn new(code: &StabilizerCode) -> Result<Self> {
        if !code.modulus().is_binary() {
            return Err(invalid("subspace enumeration supports p = 2 only"));
        }
        if code.dim() > SUBSPACE_MAX_DIM {
            return Err(Error::TooLarge {
                what: "subspace enumeration (dim C)",
                size: code.dim() as u128,
                limit: SUBSPACE_MAX_DIM as u128,
            });
        }
        Ok(BinarySubspaces {
            elements: combinations(code.generators())?,
            k: code.dim(),
        })
    }

    fn closure(mask: u128, extra: usize) -> u128 {
        let mut out = mask;
        for i in 0..128 {
            if mask >> i & 1 == 1 {
                out |= 1u128 << (i ^ extra);
            }
        }
        out
    }

    /// Smallest `d` for which some `d`-dimensional `D ⊆ C` has, for every
    /// target, an element anticommuting with it. Returns `d` and the first
    /// qualifying subspace found at that level.
    fn min_hitting(&self, targets: &[Vec<u32>]) -> Option<(usize, u128)> {
        let size = 1usize << self.k;
        let hits: Vec<u128> = targets
            .iter()
            .map(|t| {
                (0..size)
                    .filter(|&i| symp(2, &self.elements[i], t) != 0)
                    .fold(0u128, |m, i| m | 1u128 << i)
            })
            .collect();
        let qualifies = |mask: u128| hits.iter().all(|&h| h & mask != 0);

        let mut level: Vec<u128> = vec![1];
        for d in 0..=self.k {
            if let Some(&m) = level.iter().find(|&&m| qualifies(m)) {
                return Some((d, m));
            }
            let mut next = HashSet::new();
            for &m in &level {
                for extra in 1..size {
                    if m >> extra & 1 == 0 {
                        next.insert(Self::closure(m, extra));
                    }
                }
            }
            level = next.into_iter().sorted().collect();
        }
        None
    }

    fn basis_of(&self, mask: u128) -> FpMatrix {
        let mut rows = Vec::new();
        let mut reached: u128 = 1;
        for i in 1..(1usize << self.k) {
            if mask >> i & 1 == 1 && reached >> i & 1 == 0 {
                rows.push(self.elements[i].clone());
                reached = Self::closure(reached, i);
            }
        }
        let cols = self.elements[0].len();
        FpMatrix::from_rows(crate::fpalg::Modulus::TWO, cols, &rows).expect("binary rows")
    }
}

/// `min dim D` over subspaces `D ⊆ C` with `C ∩ F_2^I = D^⊥ ∩ F_2^I`.
pub fn brute_min_d(code: &StabilizerCode, pattern: &ErasurePattern) -> Result<usize> {
    let subspaces = BinarySubspaces::new(code)?;
    if !brute_eq1(code, pattern)? {
        return Err(Error::Undefined("erasures are not correctable".into()));
    }
    let c = span_set(code.generators())?;
    let targets: Vec<Vec<u32>> = vectors_on(2, pattern)?
        .into_iter()
        .filter(|v| !c.contains(v))
        .collect();
    let (dim, _) = subspaces
        .min_hitting(&targets)
        .expect("D = C qualifies under eq1");
    Ok(dim)
}

/// Nonzero vectors of symplectic weight at most `δ`, listed independently of
/// the main crate.
fn light_vectors(p: u32, n: usize, delta: usize) -> Result<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for w in 1..=delta.min(n) {
        for support in (0..n).combinations(w) {
            let pattern = ErasurePattern::new(n, support)?;
            out.extend(
                vectors_on(p, &pattern)?
                    .into_iter()
                    .filter(|v| (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count() == w),
            );
        }
    }
    Ok(out)
}

/// `min dim D` over `D ⊆ C` with `w_s(D^⊥ \ C) ≥ δ + 1`, with a witness basis.
pub fn brute_min_fixed(code: &StabilizerCode, delta: usize) -> Result<(usize, FpMatrix)> {
    let subspaces = BinarySubspaces::new(code)?;
    let c = span_set(code.generators())?;
    let targets: Vec<Vec<u32>> = light_vectors(2, code.n(), delta)?
        .into_iter()
        .filter(|v| !c.contains(v))
        .collect();
    let (dim, mask) = subspaces
        .min_hitting(&targets)
        .ok_or_else(|| Error::Undefined(format!("no D corrects all {delta}-erasures")))?;
    Ok((dim, subspaces.basis_of(mask)))
}

fn projected_dim(c: &[Vec<u32>], n: usize, p: usize, subset: &[usize]) -> usize {
    let projected: HashSet<Vec<u32>> = c
        .iter()
        .map(|v| {
            subset
                .iter()
                .map(|&i| v[i])
                .chain(subset.iter().map(|&i| v[n + i]))
                .collect()
        })
        .collect();
    log_p(projected.len(), p)
}

/// `dim P_I(C)`, from the number of distinct restrictions of codewords to `I`.
pub fn brute_projection_dim(code: &StabilizerCode, pattern: &ErasurePattern) -> Result<usize> {
    let c = combinations(code.generators())?;
    Ok(projected_dim(
        &c,
        code.n(),
        code.modulus().get() as usize,
        pattern.indices(),
    ))
}

/// `max_{|I|=δ} dim P_I(C)`.
pub fn brute_worst_case(code: &StabilizerCode, delta: usize) -> Result<usize> {
    let p = code.modulus().get() as usize;
    let n = code.n();
    let c = combinations(code.generators())?;
    Ok((0..n)
        .combinations(delta)
        .map(|subset| projected_dim(&c, n, p, &subset))
        .max()
        .unwrap_or(0))
}

fn log_p(mut size: usize, p: usize) -> usize {
    let mut d = 0;
    while size > 1 {
        size /= p;
        d += 1;
    }
    d
}

/// Minimum symplectic weight of `R^⊥ \ R`, where `R` is `C ∩ F_p^{Ī}` read on
/// the coordinates `Ī`. `None` when that set is empty.
pub fn brute_residual_distance(
    code: &StabilizerCode,
    pattern: &ErasurePattern,
) -> Result<Option<usize>> {
    let p = code.modulus().get();
    let n = code.n();
    let keep = pattern.complement();
    let m = keep.len();
    check_size("residual weight scan", p, 2 * m)?;
    let restrict = |v: &Vec<u32>| -> Vec<u32> {
        keep.indices()
            .iter()
            .map(|&i| v[i])
            .chain(keep.indices().iter().map(|&i| v[n + i]))
            .collect()
    };
    let residual: HashSet<Vec<u32>> = span_set(code.generators())?
        .iter()
        .filter(|v| {
            pattern
                .indices()
                .iter()
                .all(|&i| v[i] == 0 && v[n + i] == 0)
        })
        .map(restrict)
        .collect();
    let residual_rows: Vec<Vec<u32>> = residual.iter().cloned().collect();
    let mut best: Option<usize> = None;
    for v in vectors_on(p, &ErasurePattern::full(m))? {
        if residual.contains(&v) || residual_rows.iter().any(|r| symp(p, r, &v) != 0) {
            continue;
        }
        let w = (0..m).filter(|&i| v[i] != 0 || v[m + i] != 0).count();
        best = Some(best.map_or(w, |b| b.min(w)));
    }
    Ok(best)
}
