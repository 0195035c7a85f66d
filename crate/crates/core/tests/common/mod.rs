#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use qudit_erasure::css::{ClassicalCode, CssCode};
use qudit_erasure::fpalg::{kernel_basis, FpMatrix, Modulus};
use qudit_erasure::stabilizer::{random_subspace, StabilizerCode};
use qudit_erasure::surface::{planar_patch, toric, Surface};
use qudit_erasure::symplectic::ErasurePattern;

pub fn modulus(p: u32) -> Modulus {
    Modulus::new(p).unwrap()
}

/// A random code with a uniformly drawn dimension in `0..=n`.
pub fn random_code<R: Rng>(rng: &mut R, p: u32, n: usize) -> StabilizerCode {
    let dim = rng.gen_range(0..=n);
    StabilizerCode::random(modulus(p), n, dim, rng).unwrap()
}

/// A random erasure pattern of size at most `max`.
pub fn random_pattern<R: Rng>(rng: &mut R, n: usize, max: usize) -> ErasurePattern {
    let size = rng.gen_range(0..=max.min(n));
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    ErasurePattern::new(n, idx.into_iter().take(size)).unwrap()
}

/// A random subspace of `C`, sometimes all of it.
pub fn random_sub<R: Rng>(rng: &mut R, code: &StabilizerCode) -> FpMatrix {
    if rng.gen_bool(0.2) {
        return code.generators().clone();
    }
    let dim = rng.gen_range(0..=code.dim());
    random_subspace(code.generators(), dim, rng)
}

fn random_rows<R: Rng>(rng: &mut R, m: Modulus, count: usize, cols: usize) -> FpMatrix {
    let mut out = FpMatrix::empty(m, cols);
    for _ in 0..count {
        let row: Vec<u32> = (0..cols).map(|_| rng.gen_range(0..m.get())).collect();
        out.push_row(&row);
    }
    out
}

/// `C_X` random, `C_Z` a random subspace of its orthogonal complement.
pub fn random_css<R: Rng>(rng: &mut R, p: u32, n: usize) -> CssCode {
    let m = modulus(p);
    let count = rng.gen_range(0..=n);
    let cx = ClassicalCode::from_spanning_set(random_rows(rng, m, count, n));
    let complement = kernel_basis(cx.generators());
    let dim = rng.gen_range(0..=complement.rows());
    let cz = ClassicalCode::from_spanning_set(random_subspace(&complement, dim, rng));
    CssCode::new(cx, cz).unwrap()
}

const TORI: [(usize, usize); 9] = [
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (3, 3),
    (3, 4),
    (3, 5),
];
const PATCHES: [(usize, usize); 9] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 3),
];

/// Outer edges of one side of a planar patch: 0 top, 1 bottom, 2 left, 3 right.
fn side(rows: usize, cols: usize, which: usize) -> Vec<String> {
    match which {
        0 => (0..cols).map(|c| format!("h0_{c}")).collect(),
        1 => (0..cols).map(|c| format!("h{rows}_{c}")).collect(),
        2 => (0..rows).map(|r| format!("u{r}_0")).collect(),
        _ => (0..rows).map(|r| format!("u{r}_{cols}")).collect(),
    }
}

/// A torus or a planar patch with a random set of open sides, at most 30 edges.
pub fn random_tiling<R: Rng>(rng: &mut R) -> Surface {
    if rng.gen_bool(0.5) {
        let (r, c) = *TORI.choose(rng).unwrap();
        toric(r, c).unwrap()
    } else {
        let (r, c) = *PATCHES.choose(rng).unwrap();
        let patch = planar_patch(r, c).unwrap();
        let open: Vec<String> = (0..4)
            .filter(|_| rng.gen_bool(0.5))
            .flat_map(|s| side(r, c, s))
            .collect();
        patch.with_open_edges(&open).unwrap()
    }
}
