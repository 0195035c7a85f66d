//! Minimal measurement plan for erasures on a random qutrit code.

use rand::rngs::StdRng;
use rand::SeedableRng;

use qudit_erasure::fpalg::Modulus;
use qudit_erasure::stabilizer::{plan_measurements, StabilizerCode};
use qudit_erasure::symplectic::{format_ab, ErasurePattern};

fn main() -> Result<(), qudit_erasure::error::Error> {
    let mut rng = StdRng::seed_from_u64(2024);
    let m = Modulus::new(3)?;
    let code = StabilizerCode::random(m, 6, 4, &mut rng)?;
    println!("code over F_3 with n = 6, dim C = {}:", code.dim());
    for row in code.generators().row_iter() {
        println!("  {}", format_ab(row));
    }
    for erased in [vec![0], vec![1, 4], vec![0, 2, 5]] {
        let pattern = ErasurePattern::new(6, erased)?;
        match plan_measurements(&code, &pattern) {
            Ok(plan) => {
                println!(
                    "erase {:?}: measure {} of {} generators on qudits {:?}",
                    pattern.one_based(),
                    plan.measurement_count(),
                    code.dim(),
                    plan.recovering_set()
                        .iter()
                        .map(|i| i + 1)
                        .collect::<Vec<_>>()
                );
                for row in plan.observables().row_iter() {
                    println!("    {}", format_ab(row));
                }
                println!("  residual checks: {}", plan.residual().rows());
            }
            Err(e) => println!("erase {:?}: {e}", pattern.one_based()),
        }
    }
    Ok(())
}
