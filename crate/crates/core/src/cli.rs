//! Command-line front end.
//!
//! Exit status: 0 when every check passes, 1 when a counterexample or
//! verification failure is found, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::basicset::{verify_basic_set, Comparison, DecompMatrix, OrderingFunction};
use crate::crystal::uglov_multipartitions;
use crate::dg::check_theorem_5_6;
use crate::error::{Error, Result};
use crate::kappa::a_function;
use crate::multipartition::{enumerate, Kind};
use crate::orders::check_prop_5_4;
use crate::params::{uglov_shift, ChargeParams};
use crate::rational::{format_rational, parse_rational};
use crate::report::{SweepReport, SCHEMA};

pub const OUT_DIR_ENV: &str = "BASIC_SET_KIT_OUT";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "basic-set-kit", version, about = "Exact multipartition combinatorics for canonical basic sets")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Worker threads for sweeps (default: available cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Write the main artifact to this directory instead of stdout.
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Partition,
    Composition,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Partition => Kind::Partition,
            KindArg::Composition => Kind::Composition,
        }
    }
}

#[derive(Debug, Args)]
pub struct Charge {
    #[arg(long)]
    pub level: usize,
    #[arg(long)]
    pub e: u32,
    /// Multicharge, one integer per component (default all zero).
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    pub s: Vec<i64>,
    /// Shift vector as "p/q" values, or the preset "uglov" (u_j = je/l).
    #[arg(long, num_args = 1.., allow_negative_numbers = true, default_value = "uglov")]
    pub u: Vec<String>,
}

impl Charge {
    fn params(&self) -> Result<ChargeParams> {
        build_params(self.level, self.e, &self.s, &self.u)
    }
}

fn build_params(level: usize, e: u32, s: &[i64], u: &[String]) -> Result<ChargeParams> {
    if level == 0 {
        return Err(Error::Params("level must be at least 1".into()));
    }
    let s = if s.is_empty() { vec![0; level] } else { s.to_vec() };
    if s.len() != level {
        return Err(Error::Params(format!("--s has {} values but --level is {level}", s.len())));
    }
    let u = if u.len() == 1 && u[0] == "uglov" {
        uglov_shift(e, level)
    } else {
        u.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?
    };
    if u.len() != level {
        return Err(Error::Params(format!("--u has {} values but --level is {level}", u.len())));
    }
    ChargeParams::new(e, s, u)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List all multipartitions of n in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, value_enum, default_value = "partition")]
        kind: KindArg,
    },
    /// Tabulate the a-function.
    ATable {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        charge: Charge,
        #[arg(long, value_enum, default_value = "partition")]
        kind: KindArg,
    },
    /// Exhaustively check that precedence matchings force a drop in a.
    CheckProp54 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        charge: Charge,
    },
    /// Exhaustively check that DG compatibility forces a drop in a.
    CheckThm56 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        charge: Charge,
    },
    /// Uglov multipartitions reachable by good-node additions.
    Uglov {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        level: usize,
        #[arg(long)]
        e: u32,
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        s: Vec<i64>,
        /// psi(h_0) = k/e; only k = 1 is supported.
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Also emit one good-node path per element.
        #[arg(long)]
        paths: bool,
    },
    /// Check the basic-set axioms on a multiplicity matrix.
    VerifyBasicSet {
        /// JSON file {"rows":[...],"cols":[...],"entries":[[...]]}.
        #[arg(long)]
        matrix: PathBuf,
        /// "a" for the a-function, or a JSON file of {"label","value"} entries.
        #[arg(long)]
        f: String,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        s: Vec<i64>,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, default_value = "uglov")]
        u: Vec<String>,
        /// Require f(F) - f(E) to be a positive integer.
        #[arg(long)]
        integer_gap: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Enumerate { .. } => "enumerate",
            Command::ATable { .. } => "a-table",
            Command::CheckProp54 { .. } => "check-prop54",
            Command::CheckThm56 { .. } => "check-thm56",
            Command::Uglov { .. } => "uglov",
            Command::VerifyBasicSet { .. } => "verify-basic-set",
        }
    }
}

struct Output {
    body: String,
    ext: &'static str,
    /// Printed to stdout even when the body goes to a file.
    summary: Option<String>,
    status: i32,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&config) {
        Ok(out) => match emit(&config, out, stdout) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(config: &RunConfig, out: Output, stdout: &mut dyn Write) -> std::io::Result<i32> {
    match &config.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}.{}", config.command.name(), out.ext));
            std::fs::write(&path, &out.body)?;
            if let Some(s) = &out.summary {
                stdout.write_all(s.as_bytes())?;
            }
            writeln!(stdout, "wrote {}", path.display())?;
        }
        None => stdout.write_all(out.body.as_bytes())?,
    }
    Ok(out.status)
}

fn execute(config: &RunConfig) -> Result<Output> {
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(t) = config.threads {
            b = b.num_threads(t);
        }
        b.build().map_err(|e| Error::Input(e.to_string()))?
    };
    pool.install(|| execute_in_pool(config))
}

fn json_body<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn execute_in_pool(config: &RunConfig) -> Result<Output> {
    let fmt = config.format;
    match &config.command {
        Command::Enumerate { n, level, kind } => {
            if *level == 0 {
                return Err(Error::Params("level must be at least 1".into()));
            }
            let all = enumerate(*n, *level, (*kind).into());
            let (body, ext) = match fmt.unwrap_or(Format::Json) {
                Format::Json => (
                    json_body(&json!({"schema": SCHEMA, "n": n, "level": level, "count": all.len(), "elements": all})),
                    "json",
                ),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["index", "multipartition"]).map_err(csv_err)?;
                    for (i, m) in all.iter().enumerate() {
                        w.write_record([i.to_string(), m.to_string()]).map_err(csv_err)?;
                    }
                    (csv_string(w)?, "csv")
                }
                Format::Text => (all.iter().map(|m| format!("{m}\n")).collect(), "txt"),
            };
            Ok(Output { body, ext, summary: None, status: EXIT_PASS })
        }
        Command::ATable { n, charge, kind } => {
            let params = charge.params()?;
            let all = enumerate(*n, params.level(), (*kind).into());
            let rows = all.iter().map(|m| Ok((m, a_function(m, &params)?))).collect::<Result<Vec<_>>>()?;
            let (body, ext) = match fmt.unwrap_or(Format::Csv) {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["multipartition", "a"]).map_err(csv_err)?;
                    for (m, a) in &rows {
                        w.write_record([m.to_string(), format_rational(a)]).map_err(csv_err)?;
                    }
                    (csv_string(w)?, "csv")
                }
                Format::Json => {
                    let table: Vec<_> =
                        rows.iter().map(|(m, a)| json!({"multipartition": m, "a": format_rational(a)})).collect();
                    (json_body(&json!({"schema": SCHEMA, "n": n, "params": params, "table": table})), "json")
                }
                Format::Text => (rows.iter().map(|(m, a)| format!("{m}\t{}\n", format_rational(a))).collect(), "txt"),
            };
            Ok(Output { body, ext, summary: None, status: EXIT_PASS })
        }
        Command::CheckProp54 { n, charge } => sweep_output(check_prop_5_4(*n, &charge.params()?)?, fmt),
        Command::CheckThm56 { n, charge } => sweep_output(check_theorem_5_6(*n, &charge.params()?)?, fmt),
        Command::Uglov { n, level, e, s, k, paths } => {
            if *k != 1 {
                return Err(Error::Params(format!(
                    "psi(h_0) = {k}/e is not supported; only k = 1 has a proven Uglov labelling"
                )));
            }
            let params = build_params(*level, *e, s, &["uglov".to_string()])?;
            let set = uglov_multipartitions(*n, &params)?;
            let (body, ext) = match fmt.unwrap_or(Format::Json) {
                Format::Json => {
                    let mut v = json!({
                        "schema": SCHEMA, "n": n, "level": level, "e": e, "s": params.s(),
                        "count": set.elements.len(), "elements": set.elements,
                    });
                    if *paths {
                        v["paths"] = serde_json::to_value(&set.paths).expect("serializable");
                    }
                    (json_body(&v), "json")
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    let mut header = vec!["multipartition"];
                    if *paths {
                        header.push("path");
                    }
                    w.write_record(&header).map_err(csv_err)?;
                    for (m, p) in set.elements.iter().zip(&set.paths) {
                        let mut rec = vec![m.to_string()];
                        if *paths {
                            rec.push(serde_json::to_string(p).expect("serializable"));
                        }
                        w.write_record(&rec).map_err(csv_err)?;
                    }
                    (csv_string(w)?, "csv")
                }
                Format::Text => {
                    let mut s = format!("count {}\n", set.elements.len());
                    for (m, p) in set.elements.iter().zip(&set.paths) {
                        s.push_str(&m.to_string());
                        if *paths {
                            let steps: Vec<_> = p.iter().map(|st| format!("{}:{}", st.residue, st.node)).collect();
                            s.push_str(&format!("\t{}", steps.join(" ")));
                        }
                        s.push('\n');
                    }
                    (s, "txt")
                }
            };
            Ok(Output { body, ext, summary: None, status: EXIT_PASS })
        }
        Command::VerifyBasicSet { matrix, f, e, s, u, integer_gap } => {
            let text =
                std::fs::read_to_string(matrix).map_err(|err| Error::Input(format!("{}: {err}", matrix.display())))?;
            let d = DecompMatrix::from_json(&text)?;
            let ordering = if f == "a" {
                let e = e.ok_or_else(|| Error::Params("--f a needs --e".into()))?;
                let level = d.rows().first().map(|m| m.level()).ok_or_else(|| Error::Matrix("no row labels".into()))?;
                if let Some(m) = d.rows().iter().find(|m| m.level() != level) {
                    return Err(Error::Matrix(format!("label {m} has level {} not {level}", m.level())));
                }
                OrderingFunction::a_function(&d, &build_params(level, e, s, u)?)?
            } else {
                let text = std::fs::read_to_string(f).map_err(|err| Error::Input(format!("{f}: {err}")))?;
                OrderingFunction::from_json(&text)?
            };
            let comparison = if *integer_gap { Comparison::IntegerGap } else { Comparison::Less };
            let report = verify_basic_set(&d, &ordering, comparison)?;
            let status = if report.passed { EXIT_PASS } else { EXIT_FAIL };
            let summary = format!(
                "basic-set: {} ({} diagonal, {} order violations)\n",
                if report.passed { "PASS" } else { "FAIL" },
                report.diagonal_violations.len(),
                report.order_violations.len()
            );
            let (body, ext) = match fmt.unwrap_or(Format::Text) {
                Format::Text => (format!("{summary}{}", json_body(&report)), "txt"),
                _ => (json_body(&report), "json"),
            };
            Ok(Output { body, ext, summary: Some(summary), status })
        }
    }
}

fn sweep_output(report: SweepReport, fmt: Option<Format>) -> Result<Output> {
    let status = if report.passed { EXIT_PASS } else { EXIT_FAIL };
    let summary = report.summary();
    let (body, ext) = match fmt.unwrap_or(Format::Text) {
        Format::Text => (format!("{summary}{}", json_body(&report)), "txt"),
        _ => (json_body(&report), "json"),
    };
    Ok(Output { body, ext, summary: Some(summary), status })
}

fn csv_err(e: csv::Error) -> Error {
    Error::Input(e.to_string())
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Input(e.to_string()))
}
