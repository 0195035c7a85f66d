//! Erase qudits, apply a random error there, measure the plan and decode.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qudit_erasure::fpalg::Modulus;
use qudit_erasure::stabilizer::{decode, plan_measurements, syndrome_of, StabilizerCode};
use qudit_erasure::symplectic::{ErasurePattern, PauliVector};

fn main() -> Result<(), qudit_erasure::error::Error> {
    let mut rng = StdRng::seed_from_u64(7);
    for p in [2, 3, 5] {
        let m = Modulus::new(p)?;
        let code = StabilizerCode::random(m, 5, 4, &mut rng)?;
        let pattern = ErasurePattern::new(5, [1])?;
        let Ok(plan) = plan_measurements(&code, &pattern) else {
            println!("p = {p}: qudit 2 is not protected by this code");
            continue;
        };
        let mut e = vec![0u32; 10];
        e[1] = rng.gen_range(0..p);
        e[6] = rng.gen_range(0..p);
        let error = PauliVector::from_vec(m, e)?;
        let s = syndrome_of(plan.observables(), &error)?;
        let recovered = decode(&code, &plan, &s)?;
        println!(
            "p = {p}: error {error}, syndrome {:?}, decoded {recovered}",
            s.values()
        );
    }
    Ok(())
}
