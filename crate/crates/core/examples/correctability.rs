//! Which erasure patterns a code can correct, with a witness when it cannot.

use itertools::Itertools;

use qudit_erasure::stabilizer::{correctability_witness, StabilizerCode};
use qudit_erasure::symplectic::{format_ab, ErasurePattern};

fn main() -> Result<(), qudit_erasure::error::Error> {
    let codes = [
        (
            "Bell pair",
            StabilizerCode::from_rows(2, 2, &[[1, 1, 0, 0], [0, 0, 1, 1]])?,
        ),
        ("XX only", StabilizerCode::from_rows(2, 2, &[[1, 1, 0, 0]])?),
        (
            "[[4,2,2]]",
            StabilizerCode::from_rows(2, 4, &[[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]])?,
        ),
    ];
    for (name, code) in &codes {
        println!(
            "{name}: n = {}, dim C = {}, k = {}",
            code.n(),
            code.dim(),
            code.k()
        );
        for size in 1..=code.n().min(2) {
            for subset in (0..code.n()).combinations(size) {
                let pattern = ErasurePattern::new(code.n(), subset)?;
                match correctability_witness(code, &pattern)? {
                    None => println!("  erase {:?}: correctable", pattern.one_based()),
                    Some(w) => println!(
                        "  erase {:?}: not correctable, logical {}",
                        pattern.one_based(),
                        format_ab(&w)
                    ),
                }
            }
        }
    }
    Ok(())
}
