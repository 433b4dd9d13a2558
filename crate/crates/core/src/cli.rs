//! The `vsasm` command line.
//!
//! Every verb writes machine-readable output (JSON, or a bare integer for
//! `count`) unless `--pretty` is given. Exit status: 0 on success, 1 when a
//! verification fails, 2 on a usage error.

use std::collections::HashMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::amt::{self, vsasm_bottom};
use crate::error::{Error, Result};
use crate::identities;
use crate::involutions::{self, System};
use crate::lattice::{self, Interpretation};
use crate::poly::{Alphabet, LaurentPoly};
use crate::pp::{self, Rspp};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` for which `count` enumerates triangles; above it the value
/// comes from the integer determinant.
const COUNT_BRUTE_MAX: usize = 4;

#[derive(Parser, Debug)]
#[command(name = "vsasm", version, about = "Generating functions for vertically symmetric alternating sign matrices")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Allow exhaustive path enumeration at n = 4 in `crosscheck`.
    #[arg(long, global = true)]
    slow: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generating function of one model.
    Gf {
        #[arg(long, value_enum)]
        model: Model,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        /// Bottom row, comma separated; only the triangle models accept an arbitrary one.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        bottom: Option<Vec<i64>>,
    },
    /// Generating function evaluated at integers; defaults to the plain count.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Assignment such as `u=1,v=1,w=-1,X=1`; `X` sets every `X_i`, `X3` a single one.
        #[arg(long, allow_hyphen_values = true)]
        spec: Option<String>,
    },
    /// Pairwise comparison of every route to the generating function.
    Crosscheck {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Instance checks of the identity catalogue, one JSON line per case.
    VerifyIdentities {
        #[arg(long)]
        only: Option<String>,
    },
    /// Exhaustive checks of a sign-reversing involution.
    VerifyInvolutions {
        #[arg(long, value_parser = parse_system)]
        system: System,
        /// Parameter bounds, comma separated; defaults depend on the system.
        #[arg(long, value_delimiter = ',')]
        max_params: Option<Vec<usize>>,
    },
    /// Row-strict plane partition (JSON file) to Magog triangle.
    Magog {
        #[arg(long)]
        rspp: PathBuf,
    },
    /// Unrefined determinant against a direct count of path families.
    Tilings {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Model {
    Brute,
    Operator,
    Antisym,
    Bialternant,
    I1,
    #[value(name = "i1det")]
    I1Det,
    I2,
    #[value(name = "i2det")]
    I2Det,
    I3,
    #[value(name = "i3det")]
    I3Det,
    Jt4,
    Pairs,
}

impl Model {
    const ALL: [Model; 12] = [
        Model::Brute,
        Model::Operator,
        Model::Antisym,
        Model::Bialternant,
        Model::I1,
        Model::I1Det,
        Model::I2,
        Model::I2Det,
        Model::I3,
        Model::I3Det,
        Model::Jt4,
        Model::Pairs,
    ];

    fn name(self) -> &'static str {
        match self {
            Model::Brute => "brute",
            Model::Operator => "operator",
            Model::Antisym => "antisym",
            Model::Bialternant => "bialternant",
            Model::I1 => "i1",
            Model::I1Det => "i1det",
            Model::I2 => "i2",
            Model::I2Det => "i2det",
            Model::I3 => "i3",
            Model::I3Det => "i3det",
            Model::Jt4 => "jt4",
            Model::Pairs => "pairs",
        }
    }

    fn takes_bottom(self) -> bool {
        matches!(self, Model::Brute | Model::Operator | Model::Antisym)
    }

    /// Routes that enumerate exponentially many objects.
    fn enumerative(self) -> bool {
        matches!(self, Model::I1 | Model::I2 | Model::I3 | Model::Pairs)
    }

    fn gf(self, bottom: &[i64]) -> Result<LaurentPoly> {
        let n = bottom.len();
        if !self.takes_bottom() && bottom != vsasm_bottom(n).as_slice() {
            return Err(Error::Unsupported(format!("model {} only handles the bottom row 0,2,...,2n-2", self.name())));
        }
        match self {
            Model::Brute => amt::gf_brute(bottom),
            Model::Operator => amt::gf_operator(bottom),
            Model::Antisym => amt::gf_antisym(bottom),
            Model::Bialternant => amt::gf_bialternant(n),
            Model::I1 => Ok(lattice::enum_gf(Interpretation::I1, n)),
            Model::I1Det => lattice::det_gf_interp1(n),
            Model::I2 => Ok(lattice::enum_gf(Interpretation::I2, n)),
            Model::I2Det => lattice::det_gf_interp2(n),
            Model::I3 => Ok(lattice::enum_gf(Interpretation::I3, n)),
            Model::I3Det => lattice::det_gf_interp3(n),
            Model::Jt4 => lattice::det_gf_jt4(n),
            Model::Pairs => Ok(pp::enum_gf_pairs(n)),
        }
    }
}

/// Names accepted by `gf --model`, in crosscheck order.
pub const MODEL_NAMES: [&str; 12] =
    ["brute", "operator", "antisym", "bialternant", "i1", "i1det", "i2", "i2det", "i3", "i3det", "jt4", "pairs"];

/// Generating function of the named model. Only `brute`, `operator` and
/// `antisym` accept a bottom row other than `0, 2, ..., 2n-2`.
pub fn model_gf(name: &str, bottom: &[i64]) -> Result<LaurentPoly> {
    let model = Model::from_str(name, false).map_err(|_| Error::Parse(format!("unknown model '{name}'")))?;
    amt::check_bottom(bottom)?;
    model.gf(bottom)
}

/// Routes compared by `crosscheck` at order `n`.
fn crosscheck_routes(n: usize, slow: bool) -> Vec<Model> {
    Model::ALL
        .into_iter()
        .filter(|m| match n {
            0..=3 => true,
            4 => slow || !m.enumerative(),
            _ => !m.enumerative() && !matches!(m, Model::Brute | Model::Operator | Model::Antisym),
        })
        .collect()
}

fn parse_system(s: &str) -> std::result::Result<System, String> {
    s.parse::<System>().map_err(|e| e.to_string())
}

/// Outcome of a verb: the status code plus what has to be written.
struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn verdict(passed: bool, stdout: String, diagnostic: impl FnOnce() -> String) -> Self {
        if passed {
            Outcome::ok(stdout)
        } else {
            Outcome { code: EXIT_FAIL, stdout, stderr: diagnostic() }
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Unsupported(_) | Error::Evaluation(_) | Error::Structure(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parses `args` (program name first), runs the verb and returns the exit
/// status. `VSASM_THREADS` caps the worker pool.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = match &pool {
        Some(p) => p.install(|| dispatch(&cli)),
        None => dispatch(&cli),
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            let _ = err.write_all(o.stderr.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn thread_pool() -> Result<Option<rayon::ThreadPool>> {
    let Ok(raw) = std::env::var("VSASM_THREADS") else {
        return Ok(None);
    };
    let k: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| Error::Parse(format!("VSASM_THREADS must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build()
        .map(Some)
        .map_err(|e| Error::Unsupported(format!("cannot build thread pool: {e}")))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Command::Gf { model, n, bottom } => gf(cli, *model, *n, bottom.as_deref()),
        Command::Count { n, spec } => count(*n as usize, spec.as_deref()),
        Command::Crosscheck { n } => crosscheck(cli, *n as usize),
        Command::VerifyIdentities { only } => verify_identities(cli, only.as_deref()),
        Command::VerifyInvolutions { system, max_params } => verify_involutions(cli, *system, max_params.as_deref()),
        Command::Magog { rspp } => magog(cli, rspp),
        Command::Tilings { n } => tilings(cli, *n as usize),
    }
}

fn render(cli: &Cli, v: &Value) -> String {
    let mut s = if cli.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }
        .expect("JSON values serialize");
    s.push('\n');
    s
}

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
fn int_value(x: &BigInt) -> Value {
    i64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

fn gf(cli: &Cli, model: Model, n: Option<u32>, bottom: Option<&[i64]>) -> Result<Outcome> {
    let bottom = match (n, bottom) {
        (None, None) => return Err(Error::Parse("gf needs --n or --bottom".into())),
        (Some(n), None) => vsasm_bottom(n as usize),
        (n, Some(b)) => {
            if n.is_some_and(|n| n as usize != b.len()) {
                return Err(Error::Parse(format!("--n disagrees with the {} bottom entries", b.len())));
            }
            if b.is_empty() {
                return Err(Error::Parse("empty bottom row".into()));
            }
            b.to_vec()
        }
    };
    amt::check_bottom(&bottom)?;
    let p = model.gf(&bottom)?;
    Ok(Outcome::ok(if cli.pretty {
        format!("{p}\n")
    } else {
        let mut s = p.to_json();
        s.push('\n');
        s
    }))
}

/// Values for `u, v, w, X_1..X_n`, starting from the counting point.
fn parse_spec(n: usize, spec: Option<&str>) -> Result<Vec<BigInt>> {
    let mut vals: Vec<BigInt> = vec![1.into(), 1.into(), (-1).into()];
    vals.extend((0..n).map(|_| BigInt::from(1)));
    let Some(spec) = spec else {
        return Ok(vals);
    };
    let alpha = Alphabet::standard(n);
    let mut seen = HashMap::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected name=value, got '{part}'")))?;
        let (key, value) = (key.trim(), value.trim());
        let x: BigInt = value.parse().map_err(|_| Error::Parse(format!("'{value}' is not an integer")))?;
        if seen.insert(key.to_string(), ()).is_some() {
            return Err(Error::Parse(format!("'{key}' assigned twice")));
        }
        if key == "X" {
            for v in &mut vals[3..] {
                *v = x.clone();
            }
        } else {
            let i = alpha.index_of(key).ok_or_else(|| Error::Parse(format!("unknown variable '{key}'")))?;
            vals[i] = x;
        }
    }
    // a single X_i overrides a blanket X regardless of order
    for part in spec.split(',') {
        if let Some((key, value)) = part.split_once('=') {
            let key = key.trim();
            if key.starts_with('X') && key != "X" {
                vals[alpha.idx(key)] = value.trim().parse().expect("parsed above");
            }
        }
    }
    Ok(vals)
}

fn count(n: usize, spec: Option<&str>) -> Result<Outcome> {
    let vals = parse_spec(n, spec)?;
    let c = if n <= COUNT_BRUTE_MAX {
        amt::count_specialized(&vsasm_bottom(n), &vals)?
    } else {
        lattice::specialized_det(Interpretation::Jt4, n, &vals)?
    };
    Ok(Outcome::ok(format!("{c}\n")))
}

fn crosscheck(cli: &Cli, n: usize) -> Result<Outcome> {
    let routes = crosscheck_routes(n, cli.slow);
    let bottom = vsasm_bottom(n);
    let gfs: Vec<LaurentPoly> = routes.par_iter().map(|m| m.gf(&bottom)).collect::<Result<_>>()?;
    let matrix: Vec<Vec<bool>> = gfs.iter().map(|a| gfs.iter().map(|b| a == b).collect()).collect();
    let agree = matrix.iter().flatten().all(|&e| e);
    let names: Vec<&str> = routes.iter().map(|m| m.name()).collect();
    let stdout = if cli.pretty {
        let w = names.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut s = format!("{:w$} {}\n", "", names.iter().map(|c| format!("{c:>w$}")).collect::<Vec<_>>().join(" "));
        for (name, row) in names.iter().zip(&matrix) {
            let cells: Vec<String> = row.iter().map(|&e| format!("{:>w$}", if e { "=" } else { "x" })).collect();
            s += &format!("{name:w$} {}\n", cells.join(" "));
        }
        if agree {
            s += &format!("all {} routes agree: {}\n", names.len(), gfs[0]);
        }
        s
    } else {
        let m: Vec<Vec<u8>> = matrix.iter().map(|r| r.iter().map(|&e| e as u8).collect()).collect();
        let gf = if agree { serde_json::to_value(gfs[0].to_json_value()).expect("serializes") } else { Value::Null };
        render(cli, &json!({ "n": n, "routes": names, "matrix": m, "agree": agree, "gf": gf }))
    };
    Ok(Outcome::verdict(agree, stdout, || {
        let bad: Vec<String> = routes
            .iter()
            .zip(&gfs)
            .filter(|(_, g)| **g != gfs[0])
            .map(|(m, _)| m.name().to_string())
            .collect();
        format!("mismatch at n = {n}: routes {} differ from {}\n", bad.join(", "), names[0])
    }))
}

fn verify_identities(cli: &Cli, only: Option<&str>) -> Result<Outcome> {
    let cases = identities::verify_catalogue(only)?;
    let mut stdout = String::new();
    for c in &cases {
        if cli.pretty {
            stdout += &format!("{:<16} {:<14} {}\n", c.name, format!("{:?}", c.params), c.status());
        } else {
            stdout += &c.to_json();
            stdout.push('\n');
        }
    }
    let failed: Vec<String> = cases.iter().filter(|c| !c.passed()).map(|c| format!("{}{:?}", c.name, c.params)).collect();
    Ok(Outcome::verdict(failed.is_empty(), stdout, || format!("failed: {}\n", failed.join(", "))))
}

fn verify_involutions(cli: &Cli, system: System, bounds: Option<&[usize]>) -> Result<Outcome> {
    let bounds = bounds.map_or_else(|| system.default_bounds(), <[usize]>::to_vec);
    let reports = involutions::verify(system, &bounds)?;
    let passed = reports.iter().all(|r| r.passed());
    let v = json!({
        "system": system.name(),
        "max_params": bounds,
        "status": if passed { "pass" } else { "fail" },
        "reports": reports,
    });
    Ok(Outcome::verdict(passed, render(cli, &v), || {
        let bad: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.params.to_string()).collect();
        format!("{system}: failures at {}\n", bad.join(", "))
    }))
}

/// Accepted file contents: a list of rows, or `{"n": N, "rows": [...]}`
/// where missing bottom rows are empty.
#[derive(Deserialize)]
#[serde(untagged)]
enum RsppFile {
    Rows(Vec<Vec<u32>>),
    Tagged { n: Option<usize>, rows: Vec<Vec<u32>> },
}

fn magog(cli: &Cli, path: &PathBuf) -> Result<Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let file: RsppFile = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut rows = match file {
        RsppFile::Rows(r) => r,
        RsppFile::Tagged { n, rows } => {
            let mut rows = rows;
            if let Some(n) = n {
                if rows.len() > n {
                    return Err(Error::Parse(format!("{} rows given for n = {n}", rows.len())));
                }
                rows.resize(n, Vec::new());
            }
            rows
        }
    };
    if rows.is_empty() {
        rows.push(Vec::new());
    }
    let q = Rspp::new(rows)?;
    let ssyt = pp::rspp_to_ssyt(&q);
    let gt = pp::ssyt_to_gt(&ssyt, q.n());
    let m = pp::rspp_to_magog(&q)?;
    let back = pp::magog_to_rspp(&m)?;
    if back != q {
        return Err(Error::Consistency("Magog triangle does not map back to the input".into()));
    }
    let v = json!({ "n": q.n(), "rspp": q.rows, "ssyt": ssyt, "gt": gt, "magog": m.rows });
    Ok(Outcome::ok(render(cli, &v)))
}

fn tilings(cli: &Cli, n: usize) -> Result<Outcome> {
    let det = lattice::unrefined_det(n);
    let (families, signed) = lattice::tiling_count(n);
    let agree = BigInt::from(families) == det && i128::from(signed) == i128::from(families);
    let v = json!({
        "n": n,
        "unrefined_det": int_value(&det),
        "families": families,
        "signed_sum": signed,
        "agree": agree,
    });
    Ok(Outcome::verdict(agree, render(cli, &v), || {
        format!("n = {n}: determinant {det}, {families} families, signed sum {signed}\n")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("vsasm").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spec_parsing() {
        let v = parse_spec(2, Some("u=2, w=0,X=3,X1=5")).unwrap();
        assert_eq!(v, [2, 1, 0, 5, 3].map(BigInt::from));
        assert!(parse_spec(2, Some("X3=1")).is_err());
        assert!(parse_spec(2, Some("u=1,u=2")).is_err());
        assert!(parse_spec(2, Some("u")).is_err());
    }

    #[test]
    fn counts_at_two() {
        assert_eq!(call(&["count", "--n", "2"]).1, "3\n");
        assert_eq!(call(&["count", "--n", "2", "--spec", "u=1,v=1,w=-1,X=1"]).1, "3\n");
        // u = v = w = 1 counts every arrowed triangle
        assert_eq!(call(&["count", "--n", "2", "--spec", "w=1"]).1, "45\n");
    }

    #[test]
    fn routes_by_order() {
        assert_eq!(Model::ALL.map(Model::name), MODEL_NAMES);
        assert_eq!(crosscheck_routes(3, false).len(), 12);
        assert_eq!(crosscheck_routes(4, false).len(), 8);
        assert_eq!(crosscheck_routes(4, true).len(), 12);
        assert!(!crosscheck_routes(5, false).contains(&Model::Brute));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["gf", "--model", "nope", "--n", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["gf", "--model", "pairs", "--bottom", "0,3"]).0, EXIT_USAGE);
        assert_eq!(call(&["gf", "--model", "brute"]).0, EXIT_USAGE);
        assert_eq!(call(&["count", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify-identities", "--only", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify-involutions", "--system", "touching", "--max-params", "1,2"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn bottom_row_models() {
        let (code, out, _) = call(&["gf", "--model", "operator", "--bottom", "0,3"]);
        assert_eq!(code, 0);
        let (_, brute, _) = call(&["gf", "--model", "brute", "--bottom", "0,3"]);
        assert_eq!(out, brute);
    }
}
