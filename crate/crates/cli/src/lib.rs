//! Command implementations for the `ncatalan` binary.
//!
//! Every command renders to a `String`; [`run`] maps errors to exit codes
//! (`1` for a failed identity, `2` for bad usage).

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use ncatalan::binomial::{binom, Kind};
use ncatalan::catalan::{catalan, dd_truncated, truncated, truncated_tilde};
use ncatalan::identities::{registry, Identity, Outcome, Params};
use ncatalan::matrix::{gauss_l, gauss_u, hankel, hankel_inverse, quasidet_bordered, NcMatrix};
use ncatalan::qpoly::{chi_q, QPoly};
use ncatalan::text::poly_to_json;
use ncatalan::NcPoly;

#[derive(Parser, Debug)]
#[command(name = "ncatalan", version, about = "Noncommutative Catalan numbers in the free group ring")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Size bound for `verify`.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    /// Worker threads for `verify`.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// C_n, or a truncated / specialized variant.
    Catalan(CatalanArgs),
    /// Noncommutative binomial coefficients.
    Binom(BinomArgs),
    /// Hankel matrices of Catalan numbers.
    Hankel(HankelArgs),
    /// Apply eps, chi_q, sigma, pi or bar to an object.
    Special(SpecialArgs),
    /// Check registered identities.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct CatalanArgs {
    #[arg(long)]
    pub n: usize,
    /// Truncation level; gives C_n^k.
    #[arg(long)]
    pub k: Option<usize>,
    /// C_n^k x_{n-k}^-1 (needs --k).
    #[arg(long, requires = "k", conflicts_with_all = ["sigma", "double_underline"])]
    pub tilde: bool,
    /// Apply x_k -> x0^k x1^k.
    #[arg(long, conflicts_with = "double_underline")]
    pub sigma: bool,
    /// sigma(C_n^k) x1^(k-n) (needs --k).
    #[arg(long, requires = "k")]
    pub double_underline: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BinomKind {
    First,
    Second,
}

#[derive(Args, Debug)]
pub struct BinomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = BinomKind::First)]
    pub kind: BinomKind,
}

#[derive(Args, Debug)]
pub struct HankelArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// show | factor | inverse | quasidet I J
    #[arg(long, num_args = 1..=3, default_values_t = ["show".to_string()])]
    pub action: Vec<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecialOp {
    Eps,
    ChiQ,
    Sigma,
    Pi,
    Bar,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    Catalan,
    Truncated,
    Tilde,
    BinomFirst,
    BinomSecond,
}

#[derive(Args, Debug)]
pub struct SpecialArgs {
    #[arg(long, value_enum)]
    pub op: SpecialOp,
    #[arg(long, value_enum, conflicts_with = "expr", required_unless_present = "expr")]
    pub object: Option<Object>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// A polynomial in the text grammar, e.g. "x2 + x1*x0^-1*x1".
    #[arg(long)]
    pub expr: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// An identity id, or "all".
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// List the registered identities instead of running them.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<ncatalan::Error> for CliError {
    fn from(e: ncatalan::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type Res = Result<String, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn render_poly(p: &NcPoly, f: Format) -> String {
    match f {
        Format::Text => p.to_string(),
        Format::Json => poly_to_json(p).to_string(),
        Format::Latex => p.to_latex(),
    }
}

fn render_q(p: &QPoly, f: Format) -> String {
    match f {
        Format::Text => p.to_string(),
        Format::Json => p.to_json().to_string(),
        Format::Latex => p.to_latex(),
    }
}

fn render_matrix(m: &NcMatrix, f: Format) -> String {
    match f {
        Format::Text | Format::Json => m.to_json().to_string(),
        Format::Latex => m.to_latex(),
    }
}

fn check_k(n: usize, k: Option<usize>) -> Result<(), CliError> {
    match k {
        Some(k) if k > n => Err(usage(format!("need k <= n, got n = {n}, k = {k}"))),
        _ => Ok(()),
    }
}

pub fn cmd_catalan(a: &CatalanArgs, f: Format) -> Res {
    check_k(a.n, a.k)?;
    let p = match (a.k, a.tilde, a.double_underline) {
        (Some(k), true, _) => (*truncated_tilde(a.n, k)).clone(),
        (Some(k), _, true) => (*dd_truncated(a.n, k)).clone(),
        (Some(k), false, false) => truncated(a.n, k),
        (None, _, _) => (*catalan(a.n)).clone(),
    };
    let p = if a.sigma { p.sigma() } else { p };
    Ok(render_poly(&p, f))
}

pub fn cmd_binom(a: &BinomArgs, f: Format) -> Res {
    let kind = match a.kind {
        BinomKind::First => Kind::First,
        BinomKind::Second => Kind::Second,
    };
    Ok(render_poly(&binom(a.n, a.k, kind), f))
}

fn parse_index(s: &str) -> Result<usize, CliError> {
    s.parse().map_err(|_| usage(format!("expected a nonnegative integer, got {s:?}")))
}

pub fn cmd_hankel(a: &HankelArgs, f: Format) -> Res {
    let (m, n) = (a.m, a.n);
    let needs_small_m = || {
        if m > 1 {
            Err(usage(format!("factorization and inverse need m in {{0, 1}}, got {m}")))
        } else {
            Ok(())
        }
    };
    match a.action.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
        ["show"] => Ok(render_matrix(&hankel(m, n), f)),
        ["factor"] => {
            needs_small_m()?;
            let (l, u) = (gauss_l(m, n), gauss_u(m, n));
            let ok = l.mul(&u)? == hankel(m, n);
            let out = match f {
                Format::Json => json!({"L": l.to_json(), "U": u.to_json(), "verified": ok}).to_string(),
                Format::Text => format!("L = {}\nU = {}\nL*U = H: {}", l.to_json(), u.to_json(), ok),
                Format::Latex => format!("L = {}\nU = {}", l.to_latex(), u.to_latex()),
            };
            if ok {
                Ok(out)
            } else {
                Err(CliError::Failed(out))
            }
        }
        ["inverse"] => {
            needs_small_m()?;
            Ok(render_matrix(&hankel_inverse(m, n), f))
        }
        ["quasidet", i, j] => {
            needs_small_m()?;
            let (i, j) = (parse_index(i)?, parse_index(j)?);
            Ok(render_poly(&quasidet_bordered(m, i, j)?, f))
        }
        other => Err(usage(format!(
            "unknown action {:?}; expected show, factor, inverse or quasidet I J",
            other.join(" ")
        ))),
    }
}

fn special_object(a: &SpecialArgs) -> Result<NcPoly, CliError> {
    if let Some(e) = &a.expr {
        return Ok(e.parse()?);
    }
    let n = a.n.ok_or_else(|| usage("--object needs --n"))?;
    let k = || a.k.ok_or_else(|| usage("this object needs --k"));
    let obj = a.object.expect("clap enforces --object or --expr");
    Ok(match obj {
        Object::Catalan => (*catalan(n)).clone(),
        Object::Truncated => {
            check_k(n, a.k)?;
            truncated(n, k()?)
        }
        Object::Tilde => {
            check_k(n, a.k)?;
            (*truncated_tilde(n, k()?)).clone()
        }
        Object::BinomFirst => binom(n, k()?, Kind::First),
        Object::BinomSecond => binom(n, k()?, Kind::Second),
    })
}

pub fn cmd_special(a: &SpecialArgs, f: Format) -> Res {
    let p = special_object(a)?;
    Ok(match a.op {
        SpecialOp::Eps => {
            let e = p.eps();
            match f {
                Format::Json => Value::Number(e.to_string().parse().expect("integer")).to_string(),
                _ => e.to_string(),
            }
        }
        SpecialOp::ChiQ => render_q(&chi_q(&p), f),
        SpecialOp::Sigma => render_poly(&p.sigma(), f),
        SpecialOp::Pi => render_poly(&p.pi(), f),
        SpecialOp::Bar => render_poly(&p.bar(), f),
    })
}

/// One checked cell of a verification run.
#[derive(Clone, Debug)]
pub struct CellResult {
    pub id: &'static str,
    pub params: Params,
    pub outcome: Outcome,
    pub millis: u128,
}

impl CellResult {
    pub fn to_json(&self) -> Value {
        let params: serde_json::Map<String, Value> =
            self.params.pairs().iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        let mut v = json!({
            "id": self.id,
            "params": params,
            "status": if self.outcome.passed() { "pass" } else { "fail" },
            "millis": self.millis as u64,
        });
        if let Outcome::Fail { lhs, rhs } = &self.outcome {
            v["lhs"] = json!(lhs);
            v["rhs"] = json!(rhs);
        }
        v
    }
}

/// Resolves the suite and bound, then checks every cell on `jobs` threads.
/// Results are sorted by id, then parameters.
pub fn run_verify(suite: &str, max_n: Option<usize>, jobs: usize) -> Result<Vec<(Identity, usize, Vec<CellResult>)>, CliError> {
    let selected: Vec<Identity> = if suite == "all" {
        registry()
    } else {
        let found: Vec<Identity> = registry().into_iter().filter(|i| i.id == suite).collect();
        if found.is_empty() {
            return Err(usage(format!("unknown suite {suite:?}; run `verify --list` for the registered ids")));
        }
        found
    };
    let mut plan = Vec::new();
    for ident in selected {
        let bound = match max_n {
            Some(n) if suite != "all" && n > ident.hard_cap => {
                return Err(usage(format!("--max-n {n} exceeds the cap {} for {}", ident.hard_cap, ident.id)));
            }
            Some(n) => n.min(ident.hard_cap),
            None => ident.default_max_n,
        };
        plan.push((ident, bound));
    }
    let tasks: Vec<(usize, Params)> = plan
        .iter()
        .enumerate()
        .flat_map(|(slot, (ident, bound))| ident.cells(*bound).into_iter().map(move |p| (slot, p)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| usage(format!("cannot start {jobs} workers: {e}")))?;
    let results: Vec<(usize, CellResult)> = pool.install(|| {
        tasks
            .into_par_iter()
            .map(|(slot, params)| {
                let ident = &plan[slot].0;
                let start = Instant::now();
                let outcome = ident.check(&params);
                let millis = start.elapsed().as_millis();
                (slot, CellResult { id: ident.id, params, outcome, millis })
            })
            .collect()
    });
    let mut grouped: Vec<Vec<CellResult>> = plan.iter().map(|_| Vec::new()).collect();
    for (slot, r) in results {
        grouped[slot].push(r);
    }
    Ok(plan
        .into_iter()
        .zip(grouped)
        .map(|((ident, bound), mut cells)| {
            cells.sort_by(|a, b| a.params.cmp(&b.params));
            (ident, bound, cells)
        })
        .collect())
}

/// The failing cell with the smallest parameters.
pub fn minimal_failure(cells: &[CellResult]) -> Option<&CellResult> {
    cells.iter().filter(|c| !c.outcome.passed()).min_by(|a, b| {
        a.params.weight().cmp(&b.params.weight()).then_with(|| a.params.cmp(&b.params))
    })
}

pub fn cmd_verify(a: &VerifyArgs, max_n: Option<usize>, jobs: usize, f: Format) -> Res {
    if a.list {
        let mut out = String::new();
        for i in registry() {
            out.push_str(&format!(
                "{:30} bound {} (default {}, cap {}): {}\n",
                i.id, i.bound, i.default_max_n, i.hard_cap, i.statement
            ));
        }
        return Ok(out.trim_end().to_string());
    }
    let runs = run_verify(&a.suite, max_n, jobs)?;
    let mut failed = false;
    let out = match f {
        Format::Json => {
            let cells: Vec<Value> = runs.iter().flat_map(|(_, _, cells)| cells.iter().map(CellResult::to_json)).collect();
            failed = runs.iter().any(|(_, _, c)| minimal_failure(c).is_some());
            serde_json::to_string_pretty(&Value::Array(cells)).expect("serializable")
        }
        Format::Text | Format::Latex => {
            let mut lines = Vec::new();
            for (ident, bound, cells) in &runs {
                let millis: u128 = cells.iter().map(|c| c.millis).sum();
                let fails = cells.iter().filter(|c| !c.outcome.passed()).count();
                let status = if fails == 0 { "PASS" } else { "FAIL" };
                lines.push(format!(
                    "{status} {} [{} <= {bound}, {} cells, {millis} ms] {}",
                    ident.id,
                    ident.bound,
                    cells.len(),
                    ident.statement
                ));
                if let Some(c) = minimal_failure(cells) {
                    failed = true;
                    if let Outcome::Fail { lhs, rhs } = &c.outcome {
                        lines.push(format!("  {fails} failing cells; smallest at {}", c.params));
                        lines.push(format!("  lhs: {lhs}"));
                        lines.push(format!("  rhs: {rhs}"));
                    }
                }
            }
            let total: usize = runs.iter().map(|(_, _, c)| c.len()).sum();
            lines.push(format!(
                "{} identities, {total} cells: {}",
                runs.len(),
                if failed { "FAILED" } else { "all passed" }
            ));
            lines.join("\n")
        }
    };
    if failed {
        Err(CliError::Failed(out))
    } else {
        Ok(out)
    }
}

/// Runs a parsed command line; returns the text to print.
pub fn run(cli: &Cli) -> Res {
    match &cli.command {
        Command::Catalan(a) => cmd_catalan(a, cli.format),
        Command::Binom(a) => cmd_binom(a, cli.format),
        Command::Hankel(a) => cmd_hankel(a, cli.format),
        Command::Special(a) => cmd_special(a, cli.format),
        Command::Verify(a) => cmd_verify(a, cli.max_n, cli.jobs, cli.format),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Res {
        let mut full = vec!["ncatalan"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).expect("parses"))
    }

    #[test]
    fn catalan_variants() {
        assert_eq!(go(&["catalan", "--n", "2"]).unwrap(), "x2 + x1*x0^-1*x1");
        assert_eq!(go(&["catalan", "--n", "0"]).unwrap(), "x0");
        assert_eq!(go(&["catalan", "--n", "3", "--k", "1", "--tilde"]).unwrap(), "x1*x0^-1 + x2*x1^-1 + x3*x2^-1");
        assert_eq!(go(&["catalan", "--n", "2", "--k", "0", "--double-underline"]).unwrap(), "x0^2");
        assert_eq!(go(&["catalan", "--n", "2", "--k", "3"]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn conflicting_flags_are_rejected() {
        assert!(Cli::try_parse_from(["ncatalan", "catalan", "--n", "2", "--tilde"]).is_err());
        assert!(Cli::try_parse_from(["ncatalan", "catalan", "--n", "2", "--k", "1", "--tilde", "--sigma"]).is_err());
    }

    #[test]
    fn hankel_actions() {
        assert_eq!(go(&["hankel", "--m", "0", "--n", "1", "--action", "quasidet", "1", "1"]).unwrap(), "x2");
        assert_eq!(go(&["hankel", "--m", "0", "--n", "1"]).unwrap(), r#"[["x0","x1"],["x1","x2 + x1*x0^-1*x1"]]"#);
        assert_eq!(go(&["hankel", "--m", "2", "--n", "1", "--action", "inverse"]).unwrap_err().exit_code(), 2);
        assert_eq!(go(&["hankel", "--m", "0", "--n", "1", "--action", "spin"]).unwrap_err().exit_code(), 2);
        assert_eq!(go(&["hankel", "--m", "0", "--n", "1", "--action", "quasidet", "2", "1"]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn special_ops() {
        assert_eq!(go(&["special", "--op", "eps", "--object", "catalan", "--n", "3"]).unwrap(), "5");
        assert_eq!(go(&["special", "--op", "chi-q", "--object", "catalan", "--n", "3"]).unwrap(), "1 + 2*q + q^2 + q^3");
        assert_eq!(go(&["special", "--op", "pi", "--expr", "x2 + x1*x0^-1*x1"]).unwrap(), "2*x1*x0^-1*x1");
        assert_eq!(go(&["special", "--op", "bar", "--expr", "x2*x0^-1*x1"]).unwrap(), "x1*x0^-1*x2");
        assert_eq!(go(&["special", "--op", "sigma", "--expr", "x1 +"]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn verify_single_suite() {
        assert!(go(&["verify", "--suite", "bar-invariance", "--max-n", "5"]).unwrap().starts_with("PASS bar-invariance"));
        assert_eq!(go(&["verify", "--suite", "no-such-id"]).unwrap_err().exit_code(), 2);
        assert_eq!(go(&["verify", "--suite", "gauss", "--max-n", "40"]).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn minimal_failure_prefers_small_params() {
        let cell = |n: i64, pass: bool| CellResult {
            id: "x",
            params: Params::new(&[("n", n)]),
            outcome: if pass { Outcome::Pass } else { Outcome::Fail { lhs: "a".into(), rhs: "b".into() } },
            millis: 0,
        };
        let cells = vec![cell(1, true), cell(2, false), cell(3, false)];
        assert_eq!(minimal_failure(&cells).unwrap().params.get("n"), 2);
        assert!(minimal_failure(&cells[..1]).is_none());
    }
}
