//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use common::*;
use qudit_erasure::css::plan_css;
use qudit_erasure::fpalg::{rank, FpMatrix, Modulus};
use qudit_erasure::oracle;
use qudit_erasure::stabilizer::{
    erasure_correctable, min_fixed_set, plan_measurements, syndrome_of, verify_plan,
    worst_case_measurements, StabilizerCode,
};
use qudit_erasure::surface::{fig1, SurfaceCode};
use qudit_erasure::symplectic::{restrict_to_coords, ErasurePattern, PauliVector};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_qerasure"))
        .arg("--format")
        .arg("json")
        .args(args)
        .output()
        .expect("binary runs");
    let value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), value)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| {
            a.iter()
                .filter_map(|x| x.as_str().map(String::from))
                .collect()
        })
        .unwrap_or_default()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let (code, v) = cli_json(&[
        "plan",
        "--surface",
        &fixture("fig1.json"),
        "--erasures",
        "e7",
    ]);
    let elapsed = start.elapsed();
    ensure(code == 0, format!("exit code {code}"))?;
    let faces = strings(&v["faces"]);
    let vertices = strings(&v["vertices"]);
    let qubits = strings(&v["recovering_set"]);
    ensure(faces == ["f3"], format!("faces {faces:?}"))?;
    ensure(vertices == ["v2"], format!("vertices {vertices:?}"))?;
    ensure(
        qubits == ["e1", "e5", "e6", "e7", "e8"],
        format!("qubits {qubits:?}"),
    )?;
    ensure(
        v["baseline_count"] == 7,
        format!("baseline {}", v["baseline_count"]),
    )?;
    ensure(v["n"] == 8, format!("n {}", v["n"]))?;
    ensure(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "I={{e7}}: f3 + v2 on 5 qubits vs baseline 7 on 8 ({elapsed:.0?})"
    ))
}

fn ac2() -> Outcome {
    let (code, v) = cli_json(&[
        "plan",
        "--surface",
        &fixture("fig1.json"),
        "--erasures",
        "e8",
    ]);
    ensure(code == 0, format!("plan exit code {code}"))?;
    let faces = strings(&v["faces"]);
    let vertices = strings(&v["vertices"]);
    let qubits = strings(&v["recovering_set"]);
    ensure(
        faces == ["f3"] && vertices == ["v1"],
        format!("observables {faces:?} {vertices:?}"),
    )?;
    ensure(
        qubits == ["e1", "e2", "e3", "e6", "e7", "e8"],
        format!("qubits {qubits:?}"),
    )?;
    let (code, v) = cli_json(&["locality", "--surface", &fixture("fig1.json"), "--single"]);
    ensure(
        code == 0 && v["r"] == 5,
        format!("locality exit {code}, r = {}", v["r"]),
    )?;
    let surface = fig1();
    let mut widest = 0;
    for e in surface.edge_ids() {
        let (code, v) = cli_json(&["plan", "--surface", &fixture("fig1.json"), "--erasures", e]);
        ensure(code == 0, format!("plan {e} exit {code}"))?;
        widest = widest.max(strings(&v["recovering_set"]).len());
    }
    ensure(
        widest <= 6,
        format!("a single-edge plan touches {widest} qubits"),
    )?;
    Ok(format!(
        "I={{e8}}: f3 + v1 on 6 qubits; locality 5; widest single-edge plan {widest}"
    ))
}

/// Solution sets of `brute_decode` over every reachable syndrome are single
/// cosets of `C ∩ F_p^I`.
fn decode_sets_are_cosets(code: &StabilizerCode, d: &FpMatrix, pattern: &ErasurePattern) -> bool {
    let p = code.modulus().get();
    let c = oracle::span_set(code.generators()).unwrap();
    let errors = oracle::vectors_on(p, pattern).unwrap();
    let stabilised = errors.iter().filter(|e| c.contains(*e)).count();
    let mut seen = HashSet::new();
    for e in &errors {
        let error = PauliVector::from_vec(code.modulus(), e.clone()).unwrap();
        let s = syndrome_of(d, &error).unwrap();
        if !seen.insert(s.values().to_vec()) {
            continue;
        }
        let sols = oracle::brute_decode(code, pattern, d, &s).unwrap();
        let in_coset = sols.iter().all(|x| {
            let diff: Vec<u32> = x
                .as_slice()
                .iter()
                .zip(e)
                .map(|(a, b)| (a + p - b) % p)
                .collect();
            c.contains(&diff)
        });
        if sols.len() != stabilised || !in_coset {
            return false;
        }
    }
    true
}

/// A subspace of `C` to test: all of `C`, the optimal plan, the plan with a
/// row dropped, or a random subspace.
fn candidate_d(r: &mut StdRng, code: &StabilizerCode, pattern: &ErasurePattern) -> FpMatrix {
    match r.gen_range(0..4) {
        0 => code.generators().clone(),
        1 | 2 => match plan_measurements(code, pattern) {
            Ok(plan) => {
                let d = plan.observables().clone();
                if d.rows() > 0 && r.gen_bool(0.5) {
                    let keep: Vec<usize> = (0..d.rows())
                        .filter(|&i| i != r.gen_range(0..d.rows()))
                        .collect();
                    d.select_rows(&keep)
                } else {
                    d
                }
            }
            Err(_) => random_sub(r, code),
        },
        _ => random_sub(r, code),
    }
}

fn ac3() -> Outcome {
    let mut r = StdRng::seed_from_u64(3);
    let trials = 600;
    let (mut yes, mut no, mut decode_checked) = (0, 0, 0);
    for t in 0..trials {
        let p = if t % 2 == 0 { 2 } else { 3 };
        let n = r.gen_range(1..=5);
        let code = random_code(&mut r, p, n);
        let pattern = random_pattern(&mut r, n, n);
        let d = candidate_d(&mut r, &code, &pattern);
        let verdict = verify_plan(&code, &d, &pattern).map_err(|e| e.to_string())?;
        let brute = oracle::brute_sufficient(&code, &d, &pattern).map_err(|e| e.to_string())?;
        ensure(
            verdict == brute,
            format!("trial {t}: verify_plan {verdict}, grouping oracle {brute}"),
        )?;
        if (p as usize).pow(2 * pattern.len() as u32) <= 729 {
            decode_checked += 1;
            let by_decode = decode_sets_are_cosets(&code, &d, &pattern);
            ensure(
                verdict == by_decode,
                format!("trial {t}: verify_plan {verdict}, brute_decode {by_decode}"),
            )?;
        }
        if verdict {
            yes += 1
        } else {
            no += 1
        }
    }
    ensure(
        yes > 0 && no > 0,
        format!("degenerate sample: {yes} sufficient, {no} not"),
    )?;
    Ok(format!(
        "{trials} triples (p = 2, 3; n <= 5), {yes} sufficient / {no} not, {decode_checked} also by brute_decode, 0 discrepancies"
    ))
}

fn ac4() -> Outcome {
    let mut r = StdRng::seed_from_u64(4);
    let target = 250;
    let mut found = 0;
    let mut attempts = 0;
    let mut largest = 0;
    while found < target {
        attempts += 1;
        ensure(
            attempts < 100 * target,
            "could not draw enough correctable instances",
        )?;
        let n = r.gen_range(1..=6);
        let code = random_code(&mut r, 2, n);
        let pattern = random_pattern(&mut r, n, n);
        if !erasure_correctable(&code, &pattern).map_err(|e| e.to_string())? {
            continue;
        }
        found += 1;
        let plan = plan_measurements(&code, &pattern).map_err(|e| e.to_string())?;
        let dim = plan.measurement_count();
        let brute = oracle::brute_min_d(&code, &pattern).map_err(|e| e.to_string())?;
        let proj = oracle::brute_projection_dim(&code, &pattern).map_err(|e| e.to_string())?;
        ensure(
            dim == brute && dim == proj,
            format!(
                "plan {dim}, brute min {brute}, dim P_I(C) {proj} on n = {n}, I = {:?}",
                pattern.indices()
            ),
        )?;
        ensure(
            dim <= 2 * pattern.len(),
            format!("plan {dim} exceeds 2|I| = {}", 2 * pattern.len()),
        )?;
        largest = largest.max(dim);
    }
    Ok(format!("{found} correctable instances (p = 2, n <= 6), plan = brute minimum = dim P_I(C) <= 2|I|, max {largest}"))
}

fn ac5() -> Outcome {
    let mut r = StdRng::seed_from_u64(5);
    let trials = 600;
    let mut counts = [0usize; 4];
    for t in 0..trials {
        let p = if t % 2 == 0 { 2 } else { 3 };
        let n = r.gen_range(1..=5);
        let code = random_code(&mut r, p, n);
        let pattern = random_pattern(&mut r, n, n);
        let d = candidate_d(&mut r, &code, &pattern);
        let e1 = oracle::brute_eq1(&code, &pattern).map_err(|e| e.to_string())?;
        let e2 = oracle::brute_eq2(&code, &d, &pattern).map_err(|e| e.to_string())?;
        let e3 = oracle::brute_eq3(&code, &d, &pattern).map_err(|e| e.to_string())?;
        ensure(
            !e3 || (e1 && e2),
            format!("trial {t}: eq3 holds without eq1 = {e1}, eq2 = {e2}"),
        )?;
        ensure(
            !(e1 && e2) || e3,
            format!("trial {t}: eq1 and eq2 hold without eq3"),
        )?;
        counts[usize::from(e1) * 2 + usize::from(e2)] += 1;
    }
    let [neither, only2, only1, both] = counts;
    ensure(
        both > 0 && only1 > 0,
        "sample never separates the directions",
    )?;
    Ok(format!(
        "{trials} triples, 0 discrepancies (both {both}, eq1 only {only1}, eq2 only {only2}, neither {neither})"
    ))
}

fn sector_dim(gens: &FpMatrix, pattern: &ErasurePattern) -> usize {
    // dim C_i − dim(C_i ∩ F^Ī) via restriction to Ī
    let avoiding =
        restrict_to_coords(&classical_as_pairs(gens), &pattern.complement()).expect("shapes");
    gens.rows() - rank(&avoiding)
}

/// Embeds classical rows `x` as `(x|0)` so the symplectic helpers apply.
fn classical_as_pairs(gens: &FpMatrix) -> FpMatrix {
    let n = gens.cols();
    let mut out = FpMatrix::zeros(gens.modulus(), gens.rows(), 2 * n);
    for (i, row) in gens.row_iter().enumerate() {
        out.row_mut(i)[..n].copy_from_slice(row);
    }
    out
}

fn ac6() -> Outcome {
    let mut r = StdRng::seed_from_u64(6);
    let target = 60;
    let mut tilings = 0;
    let mut attempts = 0;
    let mut max_total = 0;
    while tilings < target {
        attempts += 1;
        ensure(attempts < 50 * target, "could not draw enough tilings")?;
        let surface = random_tiling(&mut r);
        let code = SurfaceCode::new(&surface).map_err(|e| format!("construction failed: {e}"))?;
        if code.n() == 0 {
            continue;
        }
        let stab = code.stabilizer();
        let mut pattern = None;
        for _ in 0..20 {
            let cand = random_pattern(&mut r, code.n(), 4);
            if !cand.is_empty() && erasure_correctable(&stab, &cand).unwrap() {
                pattern = Some(cand);
                break;
            }
        }
        let Some(pattern) = pattern else { continue };
        tilings += 1;
        let k = pattern.len();
        let plan = code.reduce_plan(&pattern).map_err(|e| e.to_string())?;
        let css = plan_css(code.css(), &pattern).map_err(|e| e.to_string())?;
        let general = plan_measurements(&stab, &pattern).map_err(|e| e.to_string())?;
        let (faces, vertices) = plan.counts();
        let x_formula = sector_dim(code.css().cx().generators(), &pattern);
        let z_formula = sector_dim(code.css().cz().generators(), &pattern);
        ensure(
            faces == css.dx.rows() && faces == x_formula,
            format!(
                "face sector: surface {faces}, css {}, formula {x_formula}",
                css.dx.rows()
            ),
        )?;
        ensure(
            vertices == css.dz.rows() && vertices == z_formula,
            format!(
                "vertex sector: surface {vertices}, css {}, formula {z_formula}",
                css.dz.rows()
            ),
        )?;
        ensure(
            faces + vertices == general.measurement_count(),
            format!(
                "total {} vs general {}",
                faces + vertices,
                general.measurement_count()
            ),
        )?;
        ensure(
            faces <= k && vertices <= k,
            format!("sector exceeds |I| = {k}"),
        )?;
        let touched = code.touched_sets(&pattern);
        ensure(
            touched.faces.len() <= 2 * k && touched.vertices.len() <= 2 * k,
            "touched sets exceed 2|I|",
        )?;
        ensure(
            faces <= touched.faces.len() && vertices <= touched.vertices.len(),
            "reduction grew a sector",
        )?;
        ensure(faces + vertices <= 2 * k, "total exceeds 2|I|")?;
        ensure(
            verify_plan(&stab, &code.plan_observables(&plan), &pattern).unwrap(),
            "reduced plan fails verification",
        )?;
        max_total = max_total.max(faces + vertices);
    }
    Ok(format!("{tilings} tilings, surface = css = general per sector, each <= |I|, total <= 2|I| (max {max_total})"))
}

fn ac7() -> Outcome {
    let bell = StabilizerCode::from_rows(2, 2, &[[1, 1, 0, 0], [0, 0, 1, 1]]).unwrap();
    let four =
        StabilizerCode::from_rows(2, 4, &[[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]])
            .unwrap();
    let mut parts = Vec::new();
    for (name, code) in [("Bell", bell), ("[[4,2,2]]", four)] {
        let mf = min_fixed_set(&code, 1).map_err(|e| e.to_string())?;
        let (brute, basis) = oracle::brute_min_fixed(&code, 1).map_err(|e| e.to_string())?;
        let wc = worst_case_measurements(&code, 1).map_err(|e| e.to_string())?;
        let brute_wc = oracle::brute_worst_case(&code, 1).map_err(|e| e.to_string())?;
        ensure(mf.dim == 2, format!("{name}: min fixed {}", mf.dim))?;
        ensure(
            brute == 2 && basis.rows() == 2,
            format!("{name}: oracle min fixed {brute}"),
        )?;
        ensure(
            mf.dual_form == mf.dim,
            format!("{name}: dual form {}", mf.dual_form),
        )?;
        ensure(
            wc.count == brute_wc,
            format!("{name}: worst case {} vs oracle {brute_wc}", wc.count),
        )?;
        ensure(
            mf.dim >= wc.count,
            format!("{name}: fixed {} < worst {}", mf.dim, wc.count),
        )?;
        parts.push(format!(
            "{name} fixed {} (dual {}) >= worst {}",
            mf.dim, mf.dual_form, wc.count
        ));
    }
    Ok(parts.join("; "))
}

fn median_plan_time(n: usize, reps: usize, seed: u64) -> Duration {
    let mut r = StdRng::seed_from_u64(seed);
    let m = Modulus::TWO;
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let code = StabilizerCode::random(m, n, n / 2, &mut r).unwrap();
        let pattern = random_pattern(&mut r, n, n / 10);
        let start = Instant::now();
        let _ = plan_measurements(&code, &pattern);
        times.push(start.elapsed());
    }
    times.sort();
    times[reps / 2]
}

fn ac8() -> Outcome {
    let mut r = StdRng::seed_from_u64(8);
    let code = StabilizerCode::random(Modulus::TWO, 100, 50, &mut r).unwrap();
    let pattern = random_pattern(&mut r, 100, 10);
    let start = Instant::now();
    let plan = plan_measurements(&code, &pattern);
    let single = start.elapsed();
    ensure(
        plan.is_ok() || !erasure_correctable(&code, &pattern).unwrap(),
        "plan failed on a correctable instance",
    )?;
    ensure(
        single < Duration::from_secs(1),
        format!("n = 100 took {single:?}"),
    )?;
    let t50 = median_plan_time(50, 9, 50);
    let t200 = median_plan_time(200, 9, 200);
    let ratio = t200.as_secs_f64() / t50.as_secs_f64().max(1e-9);
    ensure(
        ratio <= 4.0 * 64.0,
        format!("scaling 50 -> 200 ratio {ratio:.1} exceeds 256"),
    )?;
    Ok(format!(
        "n = 100, dim 50: {single:.2?}; median 50 -> 200: {t50:.2?} -> {t200:.2?}, ratio {ratio:.1} (cubic 64, bound 256)"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 fig-1 plan for e7", ac1),
        ("AC2 fig-1 plan for e8 and locality", ac2),
        ("AC3 plan verification vs brute decoding", ac3),
        ("AC4 plan optimality", ac4),
        ("AC5 sufficiency equivalence", ac5),
        ("AC6 css/surface consistency", ac6),
        ("AC7 extremal quantities", ac7),
        ("AC8 performance", ac8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
