use clap::{Parser, ValueEnum};
use krcrystal::affine::AffineCrystal;
use krcrystal::classical::{dual_star_skew, tab_e, tab_f};
use krcrystal::energy::{local_energy, rmatrix, EnergyContext, TensorPair};
use krcrystal::model::{ClassicalWeight, Letter, Tableau};
use krcrystal::plactic::SkewTableau;
use krcrystal::shape_maps::{drop, fill, filling_locations, iota_trace};
use krcrystal::verify::full_report;
use krcrystal::word::signature;
use krcrystal::CrystalError;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Command {
    Build,
    Verify,
    BcGraph,
    Rmatrix,
    Energy,
    Xsum,
    Example,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// Kirillov-Reshetikhin crystals B^{2,s} of type D_n^(1).
#[derive(Parser, Debug)]
#[command(name = "krcrystal", version)]
struct Cli {
    /// Command to run (or use --command).
    #[arg(value_enum)]
    positional: Option<Command>,
    #[arg(long, value_enum)]
    command: Option<Command>,
    /// Rank of D_n, at least 4.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Width s of B^{2,s}.
    #[arg(long, default_value_t = 1)]
    s: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Maximum number of vertices per crystal.
    #[arg(long, default_value_t = 5_000_000)]
    budget: usize,
    /// Tensor factors: a count L of copies of B^{2,s}, or widths listed leftmost first.
    #[arg(long, default_value = "2")]
    factors: String,
    /// Classical weight: `kϖ2` (also `kw2`), or comma-separated Dynkin labels
    /// Λ₁..Λ_n (a leading Λ₀ entry is accepted when n+1 values are given).
    #[arg(long)]
    lambda: Option<String>,
    /// Worked example id for `example`: signature, dual, drop, fill, lecouvey-iota or all.
    #[arg(long, default_value = "all")]
    id: String,
}

enum Failure {
    Error(CrystalError),
    Check(Value),
}

impl From<CrystalError> for Failure {
    fn from(e: CrystalError) -> Self {
        Failure::Error(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Error(CrystalError::InvalidConfig(msg.into()))
}

fn parse_widths(arg: &str, s: usize) -> std::result::Result<Vec<usize>, Failure> {
    let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
    let nums = parts
        .iter()
        .map(|p| p.parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| invalid(format!("cannot parse --factors {arg:?}")))?;
    let widths = if nums.len() == 1 { vec![s; nums[0]] } else { nums };
    if widths.is_empty() || widths.contains(&0) {
        return Err(invalid("factors must be positive"));
    }
    Ok(widths)
}

fn parse_lambda(arg: &str, n: usize) -> std::result::Result<ClassicalWeight, Failure> {
    let t = arg.trim();
    for suffix in ["ϖ2", "ϖ₂", "w2"] {
        if let Some(k) = t.strip_suffix(suffix) {
            let k: i32 = if k.is_empty() { Ok(1) } else { k.parse() }
                .map_err(|_| invalid(format!("cannot parse --lambda {arg:?}")))?;
            return Ok(ClassicalWeight::k_varpi2(n, k));
        }
    }
    let labels = t
        .split(',')
        .map(|x| x.trim().parse::<i32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| invalid(format!("cannot parse --lambda {arg:?}")))?;
    let labels = match labels.len() {
        l if l == n => labels,
        l if l == n + 1 => labels[1..].to_vec(),
        l => return Err(invalid(format!("--lambda needs {n} or {} labels, got {l}", n + 1))),
    };
    ClassicalWeight::from_dynkin(&labels).ok_or_else(|| invalid("spin weights never occur in B^{2,s}"))
}

fn render(format: Format, json: Value, dot: Option<String>) -> Outcome {
    match (format, dot) {
        (Format::Dot, Some(d)) => Ok(d),
        (Format::Dot, None) => Err(invalid("this command has no DOT output")),
        (Format::Json, _) => Ok(serde_json::to_string_pretty(&json).expect("serializable") + "\n"),
    }
}

fn assemble(cli: &Cli, s: usize) -> std::result::Result<AffineCrystal, Failure> {
    Ok(AffineCrystal::assemble(cli.n, s, cli.budget)?)
}

/// Distinct widths, and each factor's type index, rightmost factor first.
fn factor_types(widths: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut distinct: Vec<usize> = widths.to_vec();
    distinct.sort();
    distinct.dedup();
    let types = widths
        .iter()
        .rev()
        .map(|w| distinct.binary_search(w).expect("present"))
        .collect();
    (distinct, types)
}

fn run(cli: &Cli, command: Command) -> Outcome {
    match command {
        Command::Build => {
            let c = assemble(cli, cli.s)?;
            render(cli.format, c.to_json(), Some(c.to_dot()))
        }
        Command::Verify => {
            let c = assemble(cli, cli.s)?;
            let report = full_report(&c)?;
            let out = render(cli.format, serde_json::to_value(&report).expect("serializable"), None)?;
            if report.all_pass() {
                Ok(out)
            } else {
                let failed: Vec<&str> = report
                    .checks
                    .iter()
                    .filter(|c| !c.passed())
                    .map(|c| c.criterion.as_str())
                    .collect();
                if let Some(path) = &cli.out {
                    std::fs::write(path, &out).map_err(|e| invalid(e.to_string()))?;
                } else {
                    print!("{out}");
                }
                Err(Failure::Check(json!({"failed": failed})))
            }
        }
        Command::BcGraph => {
            let c = assemble(cli, cli.s)?;
            render(cli.format, c.branching.to_json(), Some(c.branching.to_dot()))
        }
        Command::Rmatrix | Command::Energy => {
            let widths = parse_widths(&cli.factors, cli.s)?;
            let (w2, w1) = match widths.as_slice() {
                [a, b] => (*a, *b),
                _ => return Err(invalid("rmatrix and energy take exactly two factors")),
            };
            let b2 = assemble(cli, w2)?;
            let b1 = if w1 == w2 { b2.clone() } else { assemble(cli, w1)? };
            let r = rmatrix(&b2, &b1)?;
            let src = TensorPair::new(&b2, &b1)?;
            let dst = TensorPair::new(&b1, &b2)?;
            let pair = |t: &TensorPair, x: usize| {
                let (l, r) = t.decode(x);
                json!([t.left.tableau(l).to_string(), t.right.tableau(r).to_string()])
            };
            let body = if command == Command::Rmatrix {
                let rows: Vec<Value> = (0..src.len())
                    .map(|x| json!({"from": pair(&src, x), "to": pair(&dst, r.map[x])}))
                    .collect();
                json!({"n": cli.n, "factors": [w2, w1], "rmatrix": rows})
            } else {
                let h = local_energy(&b2, &b1, &r)?;
                let rows: Vec<Value> = (0..src.len())
                    .map(|x| json!({"pair": pair(&src, x), "h": h.h[x]}))
                    .collect();
                let (distinct, _) = factor_types(&widths);
                let crystals = distinct
                    .iter()
                    .map(|&w| if w == w2 { b2.clone() } else { b1.clone() })
                    .collect();
                let ctx = EnergyContext::new(crystals)?;
                let intrinsic: BTreeMap<usize, Vec<Value>> = distinct
                    .iter()
                    .enumerate()
                    .map(|(t, &w)| {
                        let c = &ctx.crystals[t];
                        let d = (0..c.len())
                            .map(|v| json!({"tableau": c.tableau(v).to_string(), "d": ctx.single(t)[v]}))
                            .collect();
                        (w, d)
                    })
                    .collect();
                json!({"n": cli.n, "factors": [w2, w1], "local_energy": rows, "intrinsic_energy": intrinsic})
            };
            render(cli.format, body, None)
        }
        Command::Xsum => {
            let widths = parse_widths(&cli.factors, cli.s)?;
            let lambda = parse_lambda(
                cli.lambda.as_deref().ok_or_else(|| invalid("xsum needs --lambda"))?,
                cli.n,
            )?;
            let (distinct, types) = factor_types(&widths);
            let crystals = distinct
                .iter()
                .map(|&w| assemble(cli, w))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let ctx = EnergyContext::new(crystals)?;
            let poly: BTreeMap<String, u64> = ctx
                .one_dim_sum(&types, &lambda)
                .into_iter()
                .map(|(e, c)| (e.to_string(), c))
                .collect();
            render(
                cli.format,
                json!({"n": cli.n, "factors": widths, "lambda": lambda.0, "polynomial": poly}),
                None,
            )
        }
        Command::Example => {
            let results = examples(&cli.id)?;
            let mismatched: Vec<&str> = results
                .iter()
                .filter(|(_, v)| v["expected"] != v["computed"])
                .map(|(k, _)| k.as_str())
                .collect();
            let body = json!({"examples": results});
            if mismatched.is_empty() {
                render(cli.format, body, None)
            } else {
                Err(Failure::Check(json!({"mismatched": mismatched, "examples": body})))
            }
        }
    }
}

fn t(n: usize, top: &[i8], bottom: &[i8]) -> Tableau {
    Tableau::from_rows(n, top, bottom)
}

fn letters(v: &[i8]) -> Vec<Letter> {
    v.iter().map(|&x| Letter(x)).collect()
}

fn show<T: std::fmt::Display>(x: Option<T>) -> String {
    x.map_or("0".into(), |x| x.to_string())
}

/// The worked examples with their pinned outputs.
fn examples(id: &str) -> std::result::Result<BTreeMap<String, Value>, Failure> {
    let all = ["signature", "dual", "drop", "fill", "lecouvey-iota"];
    let ids: Vec<&str> = if id == "all" { all.to_vec() } else { vec![id] };
    let mut out = BTreeMap::new();
    for id in ids {
        let pair = |expected: Value, computed: Value| json!({"expected": expected, "computed": computed});
        let v = match id {
            "signature" => {
                let x = t(4, &[1, 2, 4, -3, -3], &[3, -4, -4, -2, -1]);
                let w = x.column_word();
                let (s2, s4) = (signature(4, 2, &w), signature(4, 4, &w));
                pair(
                    json!({
                        "signature_2": ["+−+−−", "−"],
                        "signature_4": ["−++−++", "−+++"],
                        "f2": "1 2 4 3̄ 2̄ / 3 4̄ 4̄ 2̄ 1̄",
                        "f4": "1 2 4 3̄ 3̄ / 4̄ 4̄ 4̄ 2̄ 1̄",
                        "e4": "1 2 4 3̄ 3̄ / 3 3 4̄ 2̄ 1̄",
                    }),
                    json!({
                        "signature_2": [s2.full_string(), s2.reduced_string()],
                        "signature_4": [s4.full_string(), s4.reduced_string()],
                        "f2": show(tab_f(2, &x)),
                        "f4": show(tab_f(4, &x)),
                        "e4": show(tab_e(4, &x)),
                    }),
                )
            }
            "dual" => {
                let s = SkewTableau::straight(4, letters(&[1, 1, 2]), letters(&[-3]));
                pair(json!("3 1̄ 1̄ / 2̄"), json!(dual_star_skew(&s)?.to_string()))
            }
            "drop" => {
                let (d, k) = drop(&t(4, &[1, 2, 3, 3], &[-4, -2, -2, -1]))?;
                pair(json!({"dropped": "1 3 3 / 4̄ 2̄ 1̄", "k": 3}), json!({"dropped": d.to_string(), "k": k}))
            }
            "fill" => {
                let a = t(4, &[1, 2, 3], &[-4, -2, -1]);
                let b = t(4, &[2, 3, 3], &[-4, -2, -1]);
                let locs = |x: &Tableau| filling_locations(x).iter().map(|l| l.index).collect::<Vec<_>>();
                pair(
                    json!({
                        "first": "1 2 2 3 / 4̄ 2̄ 2̄ 1̄", "first_locations": [1, 2],
                        "second": "2 2 3 3 / 4̄ 2̄ 2̄ 1̄", "second_locations": [1, 1],
                    }),
                    json!({
                        "first": fill(&a, 4)?.to_string(), "first_locations": locs(&a),
                        "second": fill(&b, 4)?.to_string(), "second_locations": locs(&b),
                    }),
                )
            }
            "lecouvey-iota" => {
                let x = t(4, &[1, 1, 2, 2, 2, -3, -2], &[2, 2, 3, -2, -2, -2, -1]);
                let tr = iota_trace(&x, 6)?;
                pair(
                    json!([
                        "1 1 2 3̄ 2̄ / 2 2 3 2̄ 1̄",
                        "· · 2 3̄ 2̄ / 2 2 3 2̄",
                        "· · · 3 3̄ 2̄ / 2 2 3 3̄",
                        "1 1 1 3 3̄ 2̄ / 2 2 3 3̄ 1̄ 1̄",
                        "1 1 1 3 3 3̄ 2̄ / 2 2 3 3̄ 3̄ 1̄ 1̄",
                    ]),
                    json!([
                        tr.dropped.to_string(),
                        tr.stripped.to_string(),
                        tr.slid.to_string(),
                        tr.refilled.to_string(),
                        tr.result.to_string(),
                    ]),
                )
            }
            other => return Err(invalid(format!("unknown example id {other:?}"))),
        };
        out.insert(id.to_string(), v);
    }
    Ok(out)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let command = match (cli.positional, cli.command) {
        (Some(a), Some(b)) if a != b => None,
        (a, b) => a.or(b),
    };
    let result = match command {
        Some(_) if cli.n < 4 => Err(Failure::Error(CrystalError::UnsupportedRank(cli.n))),
        Some(_) if cli.s == 0 || cli.budget == 0 => Err(invalid("s and budget must be positive")),
        Some(c) => run(&cli, c),
        None => Err(invalid("give exactly one command, positionally or with --command")),
    };
    match result {
        Ok(text) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("{}", json!({"error": {"code": "IO", "message": e.to_string()}}));
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Error(e)) => {
            eprintln!("{}", json!({"error": {"code": e.code(), "message": e.to_string()}}));
            ExitCode::from(2)
        }
        Err(Failure::Check(details)) => {
            eprintln!("{}", json!({"error": {"code": "CHECK_FAILED", "details": details}}));
            ExitCode::from(1)
        }
    }
}
