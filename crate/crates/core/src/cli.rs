//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a negative answer (not correctable,
//! inconsistent syndrome, undefined quantity), `2` bad input, `3` an
//! enumeration refused as too large.
//!
//! Code files are JSON, either `{"p", "n", "generators"}` with rows `(a|b)`
//! of length `2n`, or `{"p", "n", "cx", "cz"}` with rows of length `n`.
//! Erasures are 1-based qudit indices for code files and edge ids for
//! surface files.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::css::{css_to_stabilizer, plan_css, ClassicalCode, CssCode};
use crate::error::{invalid, Error, Result};
use crate::fpalg::{FpMatrix, Modulus};
use crate::stabilizer::{
    correctability_witness, decode, min_fixed_set, plan_measurements, worst_case_measurements,
    StabilizerCode, Syndrome,
};
use crate::surface::{Surface, SurfaceCode};
use crate::symplectic::{format_ab, ErasurePattern};

#[derive(Parser, Debug)]
#[command(
    name = "qerasure",
    version,
    about = "Minimal stabilizer measurements for erasure correction"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Stabilizer or CSS code file.
    pub code: Option<PathBuf>,
    /// Surface file.
    #[arg(long)]
    pub surface: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether the erasures are correctable.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        erasures: String,
    },
    /// Compute a minimal set of observables to measure.
    Plan {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        erasures: String,
    },
    /// Recover the erased error from measured syndrome values.
    Decode {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "")]
        erasures: String,
        #[arg(long, default_value = "")]
        syndrome: String,
    },
    /// Locality of a surface code.
    Locality {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long, conflicts_with = "single", required_unless_present = "single")]
        delta: Option<usize>,
        /// Single-erasure locality.
        #[arg(long)]
        single: bool,
    },
    /// Measurements needed by the worst erasure pattern of a given size.
    WorstCase {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        delta: usize,
    },
    /// Smallest fixed set of observables correcting every pattern of a given size.
    MinFixed {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        delta: usize,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StabilizerFile {
    p: u32,
    n: usize,
    generators: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CssFile {
    p: u32,
    n: usize,
    cx: Vec<Vec<u32>>,
    cz: Vec<Vec<u32>>,
}

/// A parsed code file.
#[derive(Clone, Debug)]
pub enum CodeInput {
    Stabilizer(StabilizerCode),
    Css(CssCode),
}

fn rows_matrix(p: u32, width: usize, rows: &[Vec<u32>], field: &str) -> Result<FpMatrix> {
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
        return Err(invalid(format!(
            "{field}[{i}] has length {}, expected {width}",
            r.len()
        )));
    }
    FpMatrix::from_rows(Modulus::new(p)?, width, rows).map_err(|e| invalid(format!("{field}: {e}")))
}

/// Parses a stabilizer or CSS code file. Dependent generators are accepted.
pub fn parse_code(text: &str) -> Result<CodeInput> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| invalid(format!("code file: {e}")))?;
    let is_css = value.get("cx").is_some() || value.get("cz").is_some();
    if is_css {
        let f: CssFile =
            serde_json::from_value(value).map_err(|e| invalid(format!("CSS code file: {e}")))?;
        let cx = ClassicalCode::from_spanning_set(rows_matrix(f.p, f.n, &f.cx, "cx")?);
        let cz = ClassicalCode::from_spanning_set(rows_matrix(f.p, f.n, &f.cz, "cz")?);
        Ok(CodeInput::Css(CssCode::new(cx, cz)?))
    } else {
        let f: StabilizerFile = serde_json::from_value(value)
            .map_err(|e| invalid(format!("stabilizer code file: {e}")))?;
        let gens = rows_matrix(f.p, 2 * f.n, &f.generators, "generators")?;
        Ok(CodeInput::Stabilizer(StabilizerCode::from_spanning_set(
            gens,
        )?))
    }
}

impl CodeInput {
    pub fn stabilizer(&self) -> Result<StabilizerCode> {
        match self {
            CodeInput::Stabilizer(c) => Ok(c.clone()),
            CodeInput::Css(c) => css_to_stabilizer(c),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

enum Loaded {
    Code(CodeInput),
    Surface(Box<SurfaceCode>),
}

impl Loaded {
    fn from_input(input: &Input) -> Result<Self> {
        match (&input.code, &input.surface) {
            (Some(path), None) => Ok(Loaded::Code(parse_code(&read(path)?)?)),
            (None, Some(path)) => Ok(Loaded::Surface(Box::new(SurfaceCode::new(
                &Surface::from_json(&read(path)?)?,
            )?))),
            _ => Err(invalid("give exactly one of a code file or --surface")),
        }
    }

    fn stabilizer(&self) -> Result<StabilizerCode> {
        match self {
            Loaded::Code(c) => c.stabilizer(),
            Loaded::Surface(s) => Ok(s.stabilizer()),
        }
    }

    fn erasures(&self, list: &str) -> Result<ErasurePattern> {
        let items: Vec<&str> = split_list(list);
        match self {
            Loaded::Surface(s) => s.erasures(&items),
            Loaded::Code(c) => {
                let n = c.stabilizer()?.n();
                let idx = items
                    .iter()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| invalid(format!("erasure {t:?} is not a qudit index")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ErasurePattern::from_one_based(n, &idx)
            }
        }
    }

    /// Labels of the erased positions as the user names them.
    fn erasure_labels(&self, pattern: &ErasurePattern) -> Vec<String> {
        self.qudit_labels(pattern.indices())
    }

    fn qudit_labels(&self, cols: &[usize]) -> Vec<String> {
        match self {
            Loaded::Surface(s) => cols
                .iter()
                .map(|&c| s.surface().edge_ids()[s.edge_of(c)].clone())
                .collect(),
            Loaded::Code(_) => cols.iter().map(|c| (c + 1).to_string()).collect(),
        }
    }
}

fn split_list(list: &str) -> Vec<&str> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

/// Result of `plan`. Serialises with sorted keys.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanReport {
    /// `stabilizer`, `css` or `surface`.
    pub kind: String,
    pub p: u32,
    pub n: usize,
    pub dim_c: usize,
    pub erasures: Vec<String>,
    /// Observable labels: `(a|b)` vectors, or face and vertex ids.
    pub observables: Vec<String>,
    pub faces: Vec<String>,
    pub vertices: Vec<String>,
    /// Qudits touched by the observables.
    pub recovering_set: Vec<String>,
    pub measurement_count: usize,
    /// Measuring every generator of `C`.
    pub baseline_count: usize,
    pub residual_dim: usize,
}

impl PlanReport {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serialises");
        serde_json::to_string_pretty(&value).expect("value serialises")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "code        {} over F_{}, n = {}, dim C = {}",
            self.kind, self.p, self.n, self.dim_c
        );
        let _ = writeln!(s, "erasures    {}", brace(&self.erasures));
        let _ = writeln!(
            s,
            "measure     {} observables (baseline {})",
            self.measurement_count, self.baseline_count
        );
        if self.kind == "surface" {
            let _ = writeln!(s, "faces       {}", brace(&self.faces));
            let _ = writeln!(s, "vertices    {}", brace(&self.vertices));
        } else {
            for o in &self.observables {
                let _ = writeln!(s, "            {o}");
            }
        }
        let _ = writeln!(
            s,
            "qudits      {} ({})",
            brace(&self.recovering_set),
            self.recovering_set.len()
        );
        let _ = writeln!(s, "residual    dim {}", self.residual_dim);
        s
    }
}

fn brace(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn build_plan(loaded: &Loaded, erasures: &str) -> Result<PlanReport> {
    let code = loaded.stabilizer()?;
    let pattern = loaded.erasures(erasures)?;
    let kind;
    let (observables, faces, vertices, support): (
        Vec<String>,
        Vec<String>,
        Vec<String>,
        Vec<usize>,
    ) = match loaded {
        Loaded::Surface(s) => {
            kind = "surface";
            let plan = s.reduce_plan(&pattern)?;
            let support = plan
                .measured_qubits
                .iter()
                .map(|id| {
                    s.column_of(s.surface().edge_index(id).expect("known edge"))
                        .expect("qubit")
                })
                .collect();
            let obs = plan
                .faces_to_measure
                .iter()
                .chain(&plan.vertices_to_measure)
                .cloned()
                .collect();
            (
                obs,
                plan.faces_to_measure,
                plan.vertices_to_measure,
                support,
            )
        }
        Loaded::Code(CodeInput::Css(css)) => {
            kind = "css";
            let plan = plan_css(css, &pattern)?;
            let rows = css.embed(&plan.dz, &plan.dx);
            let mut support: Vec<usize> = plan.supp_x.iter().chain(&plan.supp_z).copied().collect();
            support.sort_unstable();
            support.dedup();
            (
                rows.row_iter().map(format_ab).collect(),
                vec![],
                vec![],
                support,
            )
        }
        Loaded::Code(CodeInput::Stabilizer(_)) => {
            kind = "stabilizer";
            let plan = plan_measurements(&code, &pattern)?;
            let obs = plan.observables().row_iter().map(format_ab).collect();
            (obs, vec![], vec![], plan.recovering_set().to_vec())
        }
    };
    let count = observables.len();
    Ok(PlanReport {
        kind: kind.into(),
        p: code.modulus().get(),
        n: code.n(),
        dim_c: code.dim(),
        erasures: loaded.erasure_labels(&pattern),
        observables,
        faces,
        vertices,
        recovering_set: loaded.qudit_labels(&support),
        measurement_count: count,
        baseline_count: code.dim(),
        residual_dim: code.dim() - count,
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotCorrectable { .. } | Error::InconsistentSyndrome | Error::Undefined(_) => 1,
        Error::InvalidInput(_) | Error::MalformedSurface(_) => 2,
        Error::TooLarge { .. } => 3,
    }
}

struct Output<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit(&mut self, json: Value, table: String) {
        let text = match self.format {
            Format::Json => serde_json::to_string_pretty(&json).expect("value serialises") + "\n",
            Format::Table => table,
        };
        let _ = self.out.write_all(text.as_bytes());
    }
}

fn run_command(cli: &Cli, out: &mut Output<'_>) -> Result<i32> {
    match &cli.command {
        Command::Check { input, erasures } => {
            let loaded = Loaded::from_input(input)?;
            let code = loaded.stabilizer()?;
            let pattern = loaded.erasures(erasures)?;
            let witness = correctability_witness(&code, &pattern)?;
            let correctable = witness.is_none();
            let witness_text = witness.as_deref().map(format_ab);
            let json = serde_json::json!({
                "correctable": correctable,
                "erasures": loaded.erasure_labels(&pattern),
                "witness": witness_text,
            });
            let table = match &witness_text {
                None => "correctable\n".to_string(),
                Some(w) => format!("not correctable, witness {w}\n"),
            };
            out.emit(json, table);
            Ok(if correctable { 0 } else { 1 })
        }
        Command::Plan { input, erasures } => {
            let report = build_plan(&Loaded::from_input(input)?, erasures)?;
            let json = serde_json::to_value(&report).expect("report serialises");
            out.emit(json, report.to_table());
            Ok(0)
        }
        Command::Decode {
            input,
            erasures,
            syndrome,
        } => {
            let loaded = Loaded::from_input(input)?;
            let code = loaded.stabilizer()?;
            let pattern = loaded.erasures(erasures)?;
            let plan = plan_measurements(&code, &pattern)?;
            let values = split_list(syndrome)
                .iter()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| invalid(format!("syndrome entry {t:?} is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            if values.len() != plan.measurement_count() {
                return Err(invalid(format!(
                    "syndrome has {} entries, the plan measures {} observables",
                    values.len(),
                    plan.measurement_count()
                )));
            }
            let s = Syndrome::new(code.modulus(), values)?;
            let e = decode(&code, &plan, &s)?;
            let observables: Vec<String> = plan.observables().row_iter().map(format_ab).collect();
            let json = serde_json::json!({
                "error": e.to_string(),
                "a": e.a(),
                "b": e.b(),
                "observables": observables,
            });
            out.emit(json, format!("error {e}\n"));
            Ok(0)
        }
        Command::Locality {
            surface,
            delta,
            single,
        } => {
            let s = Surface::from_json(&read(surface)?)?;
            let (r, json) = if *single {
                let r = s.locality_single()?;
                (r, serde_json::json!({ "r": r, "single": true }))
            } else {
                let d = delta.expect("clap requires delta without --single");
                let r = s.locality_profile(d)?;
                (r, serde_json::json!({ "r": r, "delta": d }))
            };
            out.emit(json, format!("r = {r}\n"));
            Ok(0)
        }
        Command::WorstCase { input, delta } => {
            let loaded = Loaded::from_input(input)?;
            let wc = worst_case_measurements(&loaded.stabilizer()?, *delta)?;
            let witness = loaded.erasure_labels(&wc.witness);
            let table = format!("worst case {} at {}\n", wc.count, brace(&witness));
            out.emit(
                serde_json::json!({ "delta": delta, "count": wc.count, "witness": witness }),
                table,
            );
            Ok(0)
        }
        Command::MinFixed { input, delta } => {
            let loaded = Loaded::from_input(input)?;
            let mf = min_fixed_set(&loaded.stabilizer()?, *delta)?;
            let observables: Vec<String> = mf.observables.row_iter().map(format_ab).collect();
            let mut table = format!("min fixed set {}\n", mf.dim);
            for o in &observables {
                table.push_str(&format!("    {o}\n"));
            }
            out.emit(
                serde_json::json!({
                    "delta": delta,
                    "dim": mf.dim,
                    "dual_form": mf.dual_form,
                    "observables": observables,
                }),
                table,
            );
            Ok(0)
        }
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut output = Output {
        format: cli.format,
        out,
    };
    match run_command(&cli, &mut output) {
        Ok(code) => code,
        Err(e) => {
            let msg = match &e {
                Error::NotCorrectable { witness } => {
                    format!(
                        "erasures are not correctable, witness {}",
                        format_ab(witness)
                    )
                }
                other => other.to_string(),
            };
            let _ = writeln!(err, "qerasure: {msg}");
            exit_code(&e)
        }
    }
}

/// Runs on the process arguments with standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
