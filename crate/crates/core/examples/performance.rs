//! Planning time on random binary codes with dim C = n/2.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use qudit_erasure::fpalg::Modulus;
use qudit_erasure::stabilizer::{plan_measurements, StabilizerCode};
use qudit_erasure::symplectic::ErasurePattern;

fn main() -> Result<(), qudit_erasure::error::Error> {
    let mut rng = StdRng::seed_from_u64(1);
    for n in [50, 100, 200, 400] {
        let code = StabilizerCode::random(Modulus::TWO, n, n / 2, &mut rng)?;
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(&mut rng);
        let pattern = ErasurePattern::new(n, idx.into_iter().take(n / 10))?;
        let start = Instant::now();
        let reps = 5;
        let mut count = None;
        for _ in 0..reps {
            count = plan_measurements(&code, &pattern)
                .ok()
                .map(|p| p.measurement_count());
        }
        let per = start.elapsed() / reps;
        println!("n = {n:4}: {per:>10.2?} per plan, measurements {count:?}");
    }
    Ok(())
}
