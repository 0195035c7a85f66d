//! CSS codes plan their X and Z sectors separately.

use qudit_erasure::css::{css_to_stabilizer, plan_css, ClassicalCode, CssCode};
use qudit_erasure::stabilizer::plan_measurements;
use qudit_erasure::symplectic::ErasurePattern;

fn main() -> Result<(), qudit_erasure::error::Error> {
    // Steane code: both sectors from the [7,4] Hamming parity checks
    let hamming = [
        [1, 0, 1, 0, 1, 0, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
    ];
    let h = ClassicalCode::from_rows(2, 7, &hamming)?;
    let css = CssCode::new(h.clone(), h)?;
    let code = css_to_stabilizer(&css)?;
    println!("Steane code: n = {}, k = {}", code.n(), code.k());
    for erased in [vec![0], vec![2, 5], vec![0, 1, 2]] {
        let pattern = ErasurePattern::new(7, erased)?;
        match plan_css(&css, &pattern) {
            Ok(plan) => {
                let general = plan_measurements(&code, &pattern)?;
                println!(
                    "erase {:?}: {} X-sector + {} Z-sector = {} (general plan {})",
                    pattern.one_based(),
                    plan.dx.rows(),
                    plan.dz.rows(),
                    plan.measurement_count(),
                    general.measurement_count()
                );
            }
            Err(e) => println!("erase {:?}: {e}", pattern.one_based()),
        }
    }
    Ok(())
}
