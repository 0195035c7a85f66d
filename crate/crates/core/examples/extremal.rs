//! Worst-case measurement counts against the smallest fixed observable set.

use qudit_erasure::stabilizer::{min_fixed_set, worst_case_measurements, StabilizerCode};
use qudit_erasure::surface::{fig1, SurfaceCode};
use qudit_erasure::symplectic::format_ab;

fn main() -> Result<(), qudit_erasure::error::Error> {
    let codes = vec![
        (
            "Bell",
            StabilizerCode::from_rows(2, 2, &[[1, 1, 0, 0], [0, 0, 1, 1]])?,
        ),
        (
            "[[4,2,2]]",
            StabilizerCode::from_rows(2, 4, &[[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]])?,
        ),
        ("projective plane", SurfaceCode::new(&fig1())?.stabilizer()),
    ];
    for (name, code) in &codes {
        for delta in 0..=2 {
            let wc = worst_case_measurements(code, delta)?;
            let fixed = match min_fixed_set(code, delta) {
                Ok(f) => {
                    let rows: Vec<String> = f.observables.row_iter().map(format_ab).collect();
                    format!("{} [{}]", f.dim, rows.join(" "))
                }
                Err(e) => e.to_string(),
            };
            println!(
                "{name} delta {delta}: worst case {} at {:?}, fixed set {fixed}",
                wc.count,
                wc.witness.one_based()
            );
        }
    }
    Ok(())
}
