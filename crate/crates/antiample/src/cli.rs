//! Command-line frontend: one subcommand per module, JSON envelopes on
//! standard output.
//!
//! Every response is a single JSON object with the keys `diagnostics`,
//! `params`, `result`, and `subcommand` (object keys are emitted
//! sorted, so output is byte-stable for identical inputs). The process
//! exits 0 exactly when the diagnostics list carries no errors; domain
//! errors produce a diagnostic and exit 1; an unknown subcommand prints
//! usage text and exits 2. `--human` switches to an aligned plain-text
//! rendering of the same result.

use crate::bott::{bott_dim, cm_regular, wedge_t_range_hypersurface, wedge_t_range_index, BottQuery};
use crate::cartier::cartier_rank_table;
use crate::obstruction::{
    ci_line_exists, ci_verdict, curve_obstruction, fano3_verdict, subspace_obstruction,
    CompleteIntersectionInput, CurveWitness, FanoThreefoldKind, SubspaceWitness,
};
use crate::projective::{fstar_decompose_pn, threshold_scan};
use crate::selftest;
use crate::toric::{
    bx_ample, bx_dual_ample, divisor_positivity, frobenius_cokernel, frobenius_pushforward, Fan,
    LineBundleDecomposition, ToricDivisor,
};
use crate::trunc_sym::{enumerate_basis, filtration_ranks, trunc_dim, TruncParams};
use crate::verdict::Verdict;
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

/// What `run` hands back to the binary: the full standard-output text
/// and the process exit code.
#[derive(Debug)]
pub struct CliOutcome {
    pub exit_code: i32,
    pub stdout: String,
}

#[derive(Debug, Serialize)]
struct Diagnostic {
    level: &'static str,
    message: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "antiample",
    version,
    about = "Exact positivity calculator for Frobenius pushforwards and cokernels",
    subcommand_required = true
)]
struct Cli {
    /// Render an aligned text report instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Truncated symmetric power dimensions, bases, filtration ranks.
    Trunc(TruncArgs),
    /// Rank table of the Cartier complex on a smooth n-fold.
    Cartier(CartierArgs),
    /// Fan validation, pushforward decompositions, cokernel verdicts.
    Toric(ToricArgs),
    /// Pushforward decomposition of O(d) on projective n-space.
    Pn(PnArgs),
    /// Cohomology of twisted forms, regularity, tangent-power ranges.
    Bott(BottArgs),
    /// Ampleness obstruction rules on witness data.
    Obstruct(ObstructArgs),
    /// Run the full oracle suite; nonzero exit on any mismatch.
    Selftest,
}

#[derive(Debug, Args)]
struct TruncArgs {
    /// Rank of the vector space (codimension of the center).
    #[arg(long)]
    c: u64,
    /// Characteristic, a prime.
    #[arg(long)]
    p: u64,
    /// Power l; required unless --filtration is given.
    #[arg(long)]
    l: Option<u64>,
    /// Also list the monomial basis (lexicographic).
    #[arg(long)]
    basis: bool,
    /// Emit the filtration rank table instead of a single dimension.
    #[arg(long)]
    filtration: bool,
    /// Ambient dimension for the pushforward rank (with --filtration).
    #[arg(long)]
    ambient: Option<u64>,
}

#[derive(Debug, Args)]
struct CartierArgs {
    /// Dimension of the smooth variety.
    #[arg(long)]
    n: u64,
    /// Characteristic, a prime.
    #[arg(long)]
    p: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ToricOp {
    Validate,
    Pushforward,
    Cokernel,
    BxDualAmple,
    BxAmple,
    Positivity,
}

#[derive(Debug, Args)]
struct ToricArgs {
    /// Path to a fan JSON file with keys dim, rays, cones.
    #[arg(long)]
    fan: PathBuf,
    /// Characteristic, a prime (unused by validate/positivity).
    #[arg(long)]
    p: Option<u64>,
    /// Divisor coefficients, one per ray, e.g. 1,0,-2.
    #[arg(long, allow_hyphen_values = true)]
    divisor: Option<String>,
    #[arg(long, value_enum)]
    op: ToricOp,
}

#[derive(Debug, Args)]
struct PnArgs {
    /// Dimension of the projective space.
    #[arg(long)]
    n: u64,
    /// Characteristic, a prime.
    #[arg(long)]
    p: u64,
    /// Twist d of the pushed-forward line bundle.
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    /// Scan an inclusive range lo..hi for nef/ample thresholds.
    #[arg(long, allow_hyphen_values = true)]
    scan: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WedgeRangeKind {
    Hypersurface,
    Index,
}

#[derive(Debug, Args)]
struct BottArgs {
    /// Ambient projective dimension.
    #[arg(long)]
    n: Option<u64>,
    /// Exterior power of the cotangent bundle.
    #[arg(long)]
    k: Option<u64>,
    /// Twist.
    #[arg(long, allow_hyphen_values = true)]
    j: Option<i64>,
    /// Cohomology degree.
    #[arg(long)]
    i: Option<u64>,
    /// Check Castelnuovo-Mumford (k+1)-regularity of the k-forms.
    #[arg(long)]
    regularity: bool,
    /// Positivity ranges for exterior powers of the tangent bundle.
    #[arg(long, value_enum)]
    wedge_range: Option<WedgeRangeKind>,
    /// Hypersurface degree (with --wedge-range hypersurface).
    #[arg(long)]
    d: Option<u64>,
    /// Dimension of X (with --wedge-range index).
    #[arg(long)]
    dim_x: Option<u64>,
    /// Fano index a, i.e. omega_X = O_X(-a) (with --wedge-range index).
    #[arg(long)]
    a: Option<u64>,
}

#[derive(Debug, Args)]
struct ObstructArgs {
    /// Anticanonical degree of a smooth rational curve.
    #[arg(long, allow_hyphen_values = true)]
    curve_deg: Option<i64>,
    /// Linear subspace witness as r,degree.
    #[arg(long, allow_hyphen_values = true)]
    subspace: Option<String>,
    /// Complete intersection as n:d1,d2,...:p.
    #[arg(long)]
    ci: Option<String>,
    /// Fano threefold as kind:p with kind in {p3, quadric, other}.
    #[arg(long)]
    fano3: Option<String>,
}

/// Parse argv and execute. Never panics on user input; all failures are
/// rendered as diagnostics or usage text.
pub fn run<I, T>(argv: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return render_parse_error(e),
    };
    let human = cli.human;
    let (subcommand, params, result) = match &cli.command {
        Command::Trunc(args) => ("trunc", trunc_params(args), run_trunc(args)),
        Command::Cartier(args) => (
            "cartier",
            json!({ "n": args.n, "p": args.p }),
            run_cartier(args),
        ),
        Command::Toric(args) => ("toric", toric_params(args), run_toric(args)),
        Command::Pn(args) => (
            "pn",
            json!({ "n": args.n, "p": args.p, "d": args.d, "scan": args.scan }),
            run_pn(args),
        ),
        Command::Bott(args) => ("bott", bott_params(args), run_bott(args)),
        Command::Obstruct(args) => (
            "obstruct",
            json!({
                "curve_deg": args.curve_deg,
                "subspace": args.subspace,
                "ci": args.ci,
                "fano3": args.fano3,
            }),
            run_obstruct(args),
        ),
        Command::Selftest => ("selftest", json!({}), run_selftest()),
    };
    emit(subcommand, params, result, human)
}

fn render_parse_error(e: clap::Error) -> CliOutcome {
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            CliOutcome { exit_code: 0, stdout: e.render().to_string() }
        }
        ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand => {
            CliOutcome { exit_code: 2, stdout: e.render().to_string() }
        }
        _ => {
            let envelope = json!({
                "diagnostics": [Diagnostic { level: "error", message: e.to_string() }],
                "params": Value::Null,
                "result": Value::Null,
                "subcommand": Value::Null,
            });
            CliOutcome { exit_code: 1, stdout: format!("{}\n", pretty(&envelope)) }
        }
    }
}

/// A handler's successful output: JSON payload, aligned-text rendering,
/// and any non-fatal diagnostics to attach.
type HandlerOutput = Result<(Value, String, Vec<Diagnostic>), String>;

fn emit(subcommand: &str, params: Value, result: HandlerOutput, human: bool) -> CliOutcome {
    match result {
        Ok((payload, human_text, diagnostics)) => {
            let exit_code = i32::from(diagnostics.iter().any(|d| d.level == "error"));
            let envelope = json!({
                "diagnostics": diagnostics,
                "params": params,
                "result": payload,
                "subcommand": subcommand,
            });
            let stdout = if human {
                format!("{}\n", human_text.trim_end())
            } else {
                format!("{}\n", pretty(&envelope))
            };
            CliOutcome { exit_code, stdout }
        }
        Err(message) => {
            let envelope = json!({
                "diagnostics": [Diagnostic { level: "error", message: message.clone() }],
                "params": params,
                "result": Value::Null,
                "subcommand": subcommand,
            });
            let stdout = if human {
                format!("error: {message}\n")
            } else {
                format!("{}\n", pretty(&envelope))
            };
            CliOutcome { exit_code: 1, stdout }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("envelope serializes")
}

fn to_json<T: Serialize>(value: &T) -> Result<Value, String> {
    serde_json::to_value(value).map_err(|e| format!("serialization failed: {e}"))
}

fn trunc_params(args: &TruncArgs) -> Value {
    json!({
        "c": args.c,
        "p": args.p,
        "l": args.l,
        "basis": args.basis,
        "filtration": args.filtration,
        "ambient": args.ambient,
    })
}

fn run_trunc(args: &TruncArgs) -> HandlerOutput {
    if args.filtration {
        let table =
            filtration_ranks(args.c, args.p, args.ambient).map_err(|e| e.to_string())?;
        let mut human = format!(
            "filtration ranks of I/I^[p], c = {}, p = {}\n",
            args.c, args.p
        );
        for (i, rank) in table.graded_ranks.iter().enumerate() {
            let _ = writeln!(human, "  graded piece {:>3} (T^{:<3}) rank {rank}", i, i + 1);
        }
        let _ = writeln!(human, "  total rank      {}", table.total_rank);
        if let Some(push) = &table.pushforward_rank {
            let _ = writeln!(human, "  pushforward rank {push}");
        }
        return Ok((to_json(&table)?, human, vec![]));
    }
    let l = args.l.ok_or("--l is required unless --filtration is given")?;
    let params = TruncParams::new(args.c, args.p, l).map_err(|e| e.to_string())?;
    let dim = trunc_dim(&params);
    let mut payload = json!({ "dim": crate::bigjson::to_number(&dim)? });
    let mut human = format!("dim T^{l} of a rank-{} space at p = {}: {dim}\n", args.c, args.p);
    if args.basis {
        let basis = enumerate_basis(&params);
        human.push_str("basis exponent vectors:\n");
        for vector in &basis {
            let _ = writeln!(human, "  {:?}", vector.0);
        }
        payload["basis"] = to_json(&basis)?;
    }
    Ok((payload, human, vec![]))
}

fn run_cartier(args: &CartierArgs) -> HandlerOutput {
    let table = cartier_rank_table(args.n, args.p).map_err(|e| e.to_string())?;
    let mut human = format!(
        "Cartier complex ranks, n = {}, p = {}\n  {:>3} {:>14} {:>14} {:>14}\n",
        args.n, args.p, "i", "F*Omega^i", "Z^i", "B^i"
    );
    for (i, row) in table.rows.iter().enumerate() {
        let _ = writeln!(
            human,
            "  {:>3} {:>14} {:>14} {:>14}",
            i,
            row.pushforward_forms.to_string(),
            row.closed_forms.to_string(),
            row.exact_forms.to_string()
        );
    }
    let _ = writeln!(human, "Frobenius cokernel rank: {}", table.frobenius_cokernel_rank());
    Ok((to_json(&table)?, human, vec![]))
}

fn toric_params(args: &ToricArgs) -> Value {
    let op = args.op.to_possible_value().expect("op has a name");
    json!({
        "fan": args.fan.display().to_string(),
        "p": args.p,
        "divisor": args.divisor,
        "op": op.get_name(),
    })
}

fn load_fan(path: &PathBuf) -> Result<Fan, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read fan file {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("fan file {} is not valid: {e}", path.display()))
}

fn parse_divisor(fan: &Fan, spec: &Option<String>) -> Result<ToricDivisor, String> {
    match spec {
        None => Ok(ToricDivisor::zero(fan.num_rays())),
        Some(text) => {
            let coeffs = text
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|e| format!("bad coefficient {s:?}: {e}")))
                .collect::<Result<Vec<i64>, String>>()?;
            if coeffs.len() != fan.num_rays() {
                return Err(format!(
                    "divisor has {} coefficients but the fan has {} rays",
                    coeffs.len(),
                    fan.num_rays()
                ));
            }
            Ok(ToricDivisor::new(coeffs))
        }
    }
}

fn require_prime_arg(p: Option<u64>) -> Result<u64, String> {
    p.ok_or_else(|| "--p is required for this operation".to_string())
}

fn decomposition_payload(d: &LineBundleDecomposition) -> Value {
    let summands: Vec<Value> = d
        .iter()
        .map(|(summand, mult)| {
            json!({
                "coeffs": summand.coeffs,
                "degree": summand.coefficient_sum(),
                "multiplicity": mult,
            })
        })
        .collect();
    json!({ "summands": summands, "total_multiplicity": d.total_multiplicity() })
}

fn decomposition_human(title: &str, d: &LineBundleDecomposition) -> String {
    let mut human = format!("{title}\n");
    for (summand, mult) in d.iter() {
        let _ = writeln!(
            human,
            "  {:>4} x divisor {}  (coefficient sum {})",
            mult,
            summand,
            summand.coefficient_sum()
        );
    }
    let _ = writeln!(human, "  total multiplicity {}", d.total_multiplicity());
    human
}

fn verdict_human(title: &str, verdict: &Verdict) -> String {
    let mut human = format!("{title}: {}\n", verdict.value);
    for step in &verdict.trace {
        let _ = writeln!(human, "  [{}] {}", step.rule, step.detail);
    }
    human
}

fn run_toric(args: &ToricArgs) -> HandlerOutput {
    let fan = load_fan(&args.fan)?;
    match args.op {
        ToricOp::Validate => {
            let violations = fan.violations();
            let human = if violations.is_empty() {
                "fan is smooth, complete, and well-formed\n".to_string()
            } else {
                let mut text = String::from("fan violations:\n");
                for v in &violations {
                    let _ = writeln!(text, "  - {v}");
                }
                text
            };
            let payload = json!({
                "valid": violations.is_empty(),
                "violations": to_json(&violations)?,
            });
            Ok((payload, human, vec![]))
        }
        ToricOp::Positivity => {
            let divisor = parse_divisor(&fan, &args.divisor)?;
            let verdict = divisor_positivity(&fan, &divisor).map_err(|e| e.to_string())?;
            let human = format!("divisor {} is {}\n", divisor, verdict.value);
            Ok((to_json(&verdict)?, human, vec![]))
        }
        ToricOp::Pushforward => {
            let p = require_prime_arg(args.p)?;
            let divisor = parse_divisor(&fan, &args.divisor)?;
            let decomposition =
                frobenius_pushforward(&fan, &divisor, p).map_err(|e| e.to_string())?;
            let human = decomposition_human(
                &format!("F_* O(D) for D = {divisor} at p = {p}"),
                &decomposition,
            );
            Ok((decomposition_payload(&decomposition), human, vec![]))
        }
        ToricOp::Cokernel => {
            let p = require_prime_arg(args.p)?;
            let decomposition = frobenius_cokernel(&fan, p).map_err(|e| e.to_string())?;
            let human =
                decomposition_human(&format!("Frobenius cokernel at p = {p}"), &decomposition);
            Ok((decomposition_payload(&decomposition), human, vec![]))
        }
        ToricOp::BxDualAmple | ToricOp::BxAmple => {
            let p = require_prime_arg(args.p)?;
            let verdict = if args.op == ToricOp::BxDualAmple {
                bx_dual_ample(&fan, p)
            } else {
                bx_ample(&fan, p)
            }
            .map_err(|e| e.to_string())?;
            let question = if args.op == ToricOp::BxDualAmple {
                "dual Frobenius cokernel ample"
            } else {
                "Frobenius cokernel ample"
            };
            let mut human = verdict_human(question, &verdict.as_verdict());
            if let Some(witness) = &verdict.witness {
                let _ = writeln!(
                    human,
                    "  witness summand {} (multiplicity {})",
                    witness.summand, witness.multiplicity
                );
            }
            Ok((to_json(&verdict)?, human, vec![]))
        }
    }
}

fn parse_scan(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("scan range {text:?} is not of the form lo..hi"))?;
    let lo = lo.trim().parse::<i64>().map_err(|e| format!("bad scan bound {lo:?}: {e}"))?;
    let hi = hi.trim().parse::<i64>().map_err(|e| format!("bad scan bound {hi:?}: {e}"))?;
    Ok((lo, hi))
}

fn run_pn(args: &PnArgs) -> HandlerOutput {
    match (&args.scan, args.d) {
        (Some(range), _) => {
            let (lo, hi) = parse_scan(range)?;
            let scan = threshold_scan(args.n, args.p, lo, hi).map_err(|e| e.to_string())?;
            let human = format!(
                "thresholds on P^{} at p = {}: first nef twist d = {}, first ample twist d = {}\n",
                args.n, args.p, scan.min_nef_d, scan.min_ample_d
            );
            Ok((to_json(&scan)?, human, vec![]))
        }
        (None, Some(d)) => {
            let decomposition =
                fstar_decompose_pn(args.n, args.p, d).map_err(|e| e.to_string())?;
            let positivity = decomposition.positivity();
            let mut human = format!(
                "F_* O({d}) on P^{} at p = {}: {positivity}\n",
                args.n, args.p
            );
            for (twist, mult) in &decomposition.summands {
                let _ = writeln!(human, "  O({twist}) x {mult}");
            }
            let mut payload = to_json(&decomposition)?;
            payload["positivity"] = to_json(&positivity)?;
            Ok((payload, human, vec![]))
        }
        (None, None) => Err("either --d or --scan lo..hi is required".to_string()),
    }
}

fn bott_params(args: &BottArgs) -> Value {
    json!({
        "n": args.n,
        "k": args.k,
        "j": args.j,
        "i": args.i,
        "regularity": args.regularity,
        "wedge_range": args
            .wedge_range
            .and_then(|w| w.to_possible_value())
            .map(|v| v.get_name().to_string()),
        "d": args.d,
        "dim_x": args.dim_x,
        "a": args.a,
    })
}

fn run_bott(args: &BottArgs) -> HandlerOutput {
    if let Some(kind) = args.wedge_range {
        let (range, label) = match kind {
            WedgeRangeKind::Hypersurface => {
                let n = args.n.ok_or("--n is required for --wedge-range hypersurface")?;
                let d = args.d.ok_or("--d is required for --wedge-range hypersurface")?;
                if n < 2 || d == 0 {
                    return Err("hypersurface ranges need n >= 2 and d >= 1".to_string());
                }
                (
                    wedge_t_range_hypersurface(n, d),
                    format!("degree-{d} hypersurface in P^{n}"),
                )
            }
            WedgeRangeKind::Index => {
                let dim_x = args.dim_x.ok_or("--dim-x is required for --wedge-range index")?;
                let a = args.a.ok_or("--a is required for --wedge-range index")?;
                if dim_x == 0 || a == 0 {
                    return Err("index ranges need dim X >= 1 and a >= 1".to_string());
                }
                (wedge_t_range_index(dim_x, a), format!("dim X = {dim_x}, index a = {a}"))
            }
        };
        let describe = |lo: i64, hi: i64| {
            if lo > hi {
                "empty".to_string()
            } else {
                format!("{lo} <= i <= {hi}")
            }
        };
        let human = format!(
            "wedge^i T_X positivity for {label}\n  ample: {}\n  nef:   {}\n",
            describe(range.ample_lo, range.ample_hi),
            describe(range.nef_lo, range.nef_hi)
        );
        return Ok((to_json(&range)?, human, vec![]));
    }
    let n = args.n.ok_or("--n is required")?;
    let k = args.k.ok_or("--k is required")?;
    if args.regularity {
        let cert = cm_regular(n, k).map_err(|e| e.to_string())?;
        let mut human = format!(
            "Omega^{k} on P^{n} is {}-regular: {}\n",
            k + 1,
            if cert.regular { "yes" } else { "NO" }
        );
        for check in &cert.checks {
            let _ = writeln!(
                human,
                "  H^{}(Omega^{k}({})) = {}",
                check.i, check.twist, check.dim
            );
        }
        return Ok((to_json(&cert)?, human, vec![]));
    }
    let j = args.j.ok_or("--j is required")?;
    let i = args.i.ok_or("--i is required")?;
    let query = BottQuery::new(n, k, j, i).map_err(|e| e.to_string())?;
    let dim = bott_dim(&query);
    let human = format!("dim H^{i}(P^{n}, Omega^{k}({j})) = {dim}\n");
    let payload = json!({ "dim": crate::bigjson::to_number(&dim)?, "query": to_json(&query)? });
    Ok((payload, human, vec![]))
}

fn parse_subspace(text: &str) -> Result<SubspaceWitness, String> {
    let (r, degree) = text
        .split_once(',')
        .ok_or_else(|| format!("subspace witness {text:?} is not of the form r,degree"))?;
    Ok(SubspaceWitness {
        r: r.trim().parse().map_err(|e| format!("bad r {r:?}: {e}"))?,
        degree: degree.trim().parse().map_err(|e| format!("bad degree {degree:?}: {e}"))?,
    })
}

fn parse_ci(text: &str) -> Result<CompleteIntersectionInput, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [n, degrees, p] = parts.as_slice() else {
        return Err(format!("complete intersection {text:?} is not of the form n:d1,d2,...:p"));
    };
    let n = n.trim().parse().map_err(|e| format!("bad n {n:?}: {e}"))?;
    let degrees = degrees
        .split(',')
        .map(|d| d.trim().parse::<u64>().map_err(|e| format!("bad degree {d:?}: {e}")))
        .collect::<Result<Vec<u64>, String>>()?;
    let p = p.trim().parse().map_err(|e| format!("bad p {p:?}: {e}"))?;
    CompleteIntersectionInput::new(n, degrees, p).map_err(|e| e.to_string())
}

fn parse_fano3(text: &str) -> Result<(FanoThreefoldKind, u64), String> {
    let (kind, p) = text
        .split_once(':')
        .ok_or_else(|| format!("fano3 input {text:?} is not of the form kind:p"))?;
    let kind = match kind.trim().to_ascii_lowercase().as_str() {
        "p3" => FanoThreefoldKind::P3,
        "quadric" => FanoThreefoldKind::Quadric,
        "other" => FanoThreefoldKind::Other,
        other => return Err(format!("unknown Fano threefold kind {other:?}")),
    };
    let p: u64 = p.trim().parse().map_err(|e| format!("bad p {p:?}: {e}"))?;
    if !crate::combinatorics::is_prime(p) {
        return Err(format!("characteristic must be prime, got {p}"));
    }
    Ok((kind, p))
}

fn run_obstruct(args: &ObstructArgs) -> HandlerOutput {
    let mut verdicts: Vec<Value> = Vec::new();
    let mut human = String::new();
    if args.curve_deg.is_none()
        && args.subspace.is_none()
        && args.ci.is_none()
        && args.fano3.is_none()
    {
        return Err(
            "provide at least one of --curve-deg, --subspace, --ci, --fano3".to_string()
        );
    }
    if let Some(degree) = args.curve_deg {
        let witness = CurveWitness { anticanonical_degree: degree };
        let verdict = curve_obstruction(&witness);
        human.push_str(&verdict_human(
            &format!("rational curve with -K.C = {degree}"),
            &verdict,
        ));
        verdicts.push(json!({ "kind": "curve", "witness": to_json(&witness)?, "verdict": to_json(&verdict)? }));
    }
    if let Some(text) = &args.subspace {
        let witness = parse_subspace(text)?;
        let verdict = subspace_obstruction(&witness);
        human.push_str(&verdict_human(
            &format!("linear P^{} of degree {}", witness.r, witness.degree),
            &verdict,
        ));
        verdicts.push(json!({ "kind": "subspace", "witness": to_json(&witness)?, "verdict": to_json(&verdict)? }));
    }
    if let Some(text) = &args.ci {
        let input = parse_ci(text)?;
        let verdict = ci_verdict(&input);
        let line = ci_line_exists(input.n, &input.degrees);
        human.push_str(&verdict_human(
            &format!("complete intersection of degrees {:?} in P^{}", input.degrees, input.n),
            &verdict,
        ));
        verdicts.push(json!({
            "kind": "complete_intersection",
            "input": to_json(&input)?,
            "line_existence": to_json(&line)?,
            "verdict": to_json(&verdict)?,
        }));
    }
    if let Some(text) = &args.fano3 {
        let (kind, p) = parse_fano3(text)?;
        let witness = args.curve_deg.map(|d| CurveWitness { anticanonical_degree: d });
        let verdict = fano3_verdict(kind, p, witness.as_ref());
        human.push_str(&verdict_human(
            &format!("Fano threefold {kind:?} at p = {p}"),
            &verdict,
        ));
        verdicts.push(json!({
            "kind": "fano_threefold",
            "classification": format!("{kind:?}"),
            "p": p,
            "curve_witness": to_json(&witness)?,
            "verdict": to_json(&verdict)?,
        }));
    }
    Ok((json!({ "verdicts": verdicts }), human, vec![]))
}

fn run_selftest() -> HandlerOutput {
    let outcomes = selftest::run_all();
    let mut human = String::new();
    for outcome in &outcomes {
        let _ = writeln!(
            human,
            "criterion {} ({}): {} [{} cases, {} ms]",
            outcome.criterion,
            outcome.name,
            if outcome.passed { "pass" } else { "FAIL" },
            outcome.cases,
            outcome.millis
        );
        for failure in &outcome.failures {
            let _ = writeln!(human, "    {failure}");
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let diagnostics = if failed > 0 {
        vec![Diagnostic { level: "error", message: format!("{failed} criteria failed") }]
    } else {
        vec![]
    };
    Ok((json!({ "checks": to_json(&outcomes)?, "failed": failed }), human, diagnostics))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutcome {
        run(std::iter::once("antiample").chain(args.iter().copied()))
    }

    #[test]
    fn trunc_golden_dimension() {
        let outcome = run_args(&["trunc", "--c", "2", "--p", "3", "--l", "4"]);
        assert_eq!(outcome.exit_code, 0);
        let v: Value = serde_json::from_str(&outcome.stdout).unwrap();
        assert_eq!(v["result"]["dim"], json!(1));
        assert_eq!(v["subcommand"], json!("trunc"));
        assert_eq!(v["diagnostics"], json!([]));
    }

    #[test]
    fn cartier_envelope_has_cokernel_rank() {
        let outcome = run_args(&["cartier", "--n", "1", "--p", "2"]);
        assert_eq!(outcome.exit_code, 0);
        let v: Value = serde_json::from_str(&outcome.stdout).unwrap();
        assert_eq!(v["result"]["rows"][1]["exact_forms"], json!(1));
        assert_eq!(v["result"]["rows"][0]["pushforward_forms"], json!(2));
    }

    #[test]
    fn invalid_characteristic_is_a_diagnostic() {
        let outcome = run_args(&["trunc", "--c", "2", "--p", "4", "--l", "1"]);
        assert_eq!(outcome.exit_code, 1);
        let v: Value = serde_json::from_str(&outcome.stdout).unwrap();
        assert_eq!(v["result"], Value::Null);
        assert_eq!(v["diagnostics"][0]["level"], json!("error"));
    }

    #[test]
    fn unknown_subcommand_gives_usage_and_exit_two() {
        let outcome = run_args(&["frobulate"]);
        assert_eq!(outcome.exit_code, 2);
        assert!(outcome.stdout.contains("Usage"));
    }

    #[test]
    fn pn_requires_a_mode() {
        let outcome = run_args(&["pn", "--n", "1", "--p", "2"]);
        assert_eq!(outcome.exit_code, 1);
    }

    #[test]
    fn output_is_byte_stable() {
        let first = run_args(&["pn", "--n", "2", "--p", "3", "--d", "5"]);
        let second = run_args(&["pn", "--n", "2", "--p", "3", "--d", "5"]);
        assert_eq!(first.stdout, second.stdout);
        assert_eq!(first.exit_code, 0);
    }

    #[test]
    fn obstruct_combines_witnesses() {
        let outcome = run_args(&["obstruct", "--fano3", "quadric:3", "--curve-deg", "2"]);
        assert_eq!(outcome.exit_code, 0);
        let v: Value = serde_json::from_str(&outcome.stdout).unwrap();
        let verdicts = v["result"]["verdicts"].as_array().unwrap();
        assert_eq!(verdicts.len(), 2);
        // The curve witness overrides the quadric classification.
        assert_eq!(verdicts[1]["verdict"]["value"], json!("NotAmple"));
    }

    #[test]
    fn human_mode_is_plain_text() {
        let outcome = run_args(&["--human", "cartier", "--n", "2", "--p", "3"]);
        assert_eq!(outcome.exit_code, 0);
        assert!(serde_json::from_str::<Value>(&outcome.stdout).is_err());
        assert!(outcome.stdout.contains("Frobenius cokernel rank: 8"));
    }
}
