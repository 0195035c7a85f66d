//! Locality of surface codes for a few tilings.

use qudit_erasure::surface::{fig1, planar_patch, square, toric, Surface};

fn main() -> Result<(), qudit_erasure::error::Error> {
    let patch = planar_patch(2, 3)?;
    let rough = patch.with_open_edges(&["h0_0", "h0_1", "h0_2", "h2_0", "h2_1", "h2_2"])?;
    let cases: Vec<(&str, Surface)> = vec![
        ("square", square()),
        ("projective plane", fig1()),
        ("torus 3x3", toric(3, 3)?),
        ("patch 2x3 closed", patch),
        ("patch 2x3 open top/bottom", rough),
    ];
    for (name, s) in &cases {
        let single = s
            .locality_single()
            .map_or_else(|e| e.to_string(), |r| r.to_string());
        let profile: Vec<String> = (1..=3)
            .map(|d| {
                s.locality_profile(d)
                    .map_or_else(|_| "-".into(), |r| r.to_string())
            })
            .collect();
        println!(
            "{name:28} single {single:>3}   delta 1..3: {}",
            profile.join(" ")
        );
    }
    Ok(())
}
