//! Brute-force cross-checks on random small codes.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qudit_erasure::fpalg::Modulus;
use qudit_erasure::oracle;
use qudit_erasure::stabilizer::{erasure_correctable, plan_measurements, StabilizerCode};
use qudit_erasure::symplectic::ErasurePattern;

fn main() -> Result<(), qudit_erasure::error::Error> {
    let mut rng = StdRng::seed_from_u64(99);
    let (mut agree, mut total) = (0, 0);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let dim = rng.gen_range(1..=n);
        let code = StabilizerCode::random(Modulus::TWO, n, dim, &mut rng)?;
        let size = rng.gen_range(1..=n);
        let pattern = ErasurePattern::new(n, (0..n).filter(|_| rng.gen_bool(0.5)).take(size))?;
        if !erasure_correctable(&code, &pattern)? {
            continue;
        }
        total += 1;
        let plan = plan_measurements(&code, &pattern)?;
        let brute = oracle::brute_min_d(&code, &pattern)?;
        if plan.measurement_count() == brute {
            agree += 1;
        }
    }
    println!("plan size equals exhaustive minimum on {agree}/{total} correctable instances");

    // three-qubit repetition code, Z1Z2 and Z2Z3
    let code = StabilizerCode::from_rows(2, 3, &[[0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 1, 1]])?;
    for i in 0..3 {
        let pattern = ErasurePattern::new(3, [i])?;
        println!(
            "repetition code, erase {}: residual distance {:?}",
            i + 1,
            oracle::brute_residual_distance(&code, &pattern)?
        );
    }
    Ok(())
}
