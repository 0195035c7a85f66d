use rand::Rng;

use super::StabilizerCode;
use crate::error::{invalid, Result};
use crate::fpalg::{rank, FpMatrix, Modulus};
use crate::symplectic::symp_dual;

impl StabilizerCode {
    /// A random stabilizer code with `dim C = dim`, grown one generator at a
    /// time from the symplectic dual of the generators chosen so far.
    pub fn random<R: Rng + ?Sized>(
        modulus: Modulus,
        n: usize,
        dim: usize,
        rng: &mut R,
    ) -> Result<Self> {
        if dim > n {
            return Err(invalid(format!("dim C = {dim} exceeds n = {n}")));
        }
        let p = modulus.get();
        let mut gens = FpMatrix::empty(modulus, 2 * n);
        while gens.rows() < dim {
            let dual = symp_dual(&gens)?;
            let mut v = vec![0u32; 2 * n];
            for row in dual.row_iter() {
                let c = rng.gen_range(0..p);
                if c != 0 {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = modulus.add(*x, modulus.mul(c, y));
                    }
                }
            }
            let mut grown = gens.clone();
            grown.push_row(&v);
            if rank(&grown) == grown.rows() {
                gens = grown;
            }
        }
        Self::new(gens)
    }
}

/// A random subspace of `rowspace(basis)` of dimension at most `dim`, built
/// from random combinations of the basis rows (dependent draws are dropped).
pub fn random_subspace<R: Rng + ?Sized>(basis: &FpMatrix, dim: usize, rng: &mut R) -> FpMatrix {
    let m = basis.modulus();
    let mut out = FpMatrix::empty(m, basis.cols());
    for _ in 0..dim {
        let mut v = vec![0u32; basis.cols()];
        for row in basis.row_iter() {
            let c = rng.gen_range(0..m.get());
            for (x, &y) in v.iter_mut().zip(row) {
                *x = m.add(*x, m.mul(c, y));
            }
        }
        let mut grown = out.clone();
        grown.push_row(&v);
        if rank(&grown) == grown.rows() {
            out = grown;
        }
    }
    out
}
