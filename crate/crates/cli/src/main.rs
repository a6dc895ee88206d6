//! Command-line front end: exact solution counting for `a·x + b·y + c·z = n`,
//! strict bounds, the inverse exactly-k-representations problem, and the
//! boundary-decomposition conjecture audit.
//!
//! Every invocation writes exactly one envelope to stdout — human-readable
//! text by default, a single JSON line with `--json`. Exit codes: 0 ok (and
//! inconclusive verdicts), 1 domain/precondition/overflow errors, 2 usage
//! errors. Big integers are string-encoded in JSON; they routinely exceed the
//! 64-bit JSON-safe range.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use denumerant::{
    brute_force_count, check_counterexample, check_counterexample_with_audit, classify, count,
    count_bounds, count_pairwise_coprime, count_sawtooth, rk_general, BigInt, BoundInterval,
    Category, CategoryReason, CategoryTag, CoinTriple, DecompositionAudit, Error, RkResult,
    ThresholdVariant, DEFAULT_SEARCH_CAP,
};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "denumerant",
    version,
    about = "Exact counting of non-negative solutions of a\u{b7}x + b\u{b7}y + c\u{b7}z = n"
)]
struct Cli {
    /// Emit a single-line JSON envelope instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Print only the primary result value (text mode)
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| format!("`{s}` is not a decimal integer"))
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed form, with automatic reduction for non-pairwise-coprime input
    Auto,
    /// Floor-sum closed form (pairwise-coprime input only)
    Formula,
    /// Sawtooth-form evaluation (pairwise-coprime input only)
    Sawtooth,
    /// Enumeration oracle (bounded n)
    Brute,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Formula => "formula",
            Method::Sawtooth => "sawtooth",
            Method::Brute => "brute",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Threshold {
    /// The smaller, proof-consistent threshold formula
    #[default]
    Theorem3,
    /// The larger summary-form threshold formula
    Summary,
}

impl Threshold {
    fn variant(self) -> ThresholdVariant {
        match self {
            Threshold::Theorem3 => ThresholdVariant::Theorem3,
            Threshold::Summary => ThresholdVariant::Summary,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Threshold::Theorem3 => "theorem3",
            Threshold::Summary => "summary",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count the non-negative solutions of a·x + b·y + c·z = n
    Count {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
        #[arg(value_parser = parse_bigint)]
        n: BigInt,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Also report the strict bound envelope (pairwise-coprime input)
        #[arg(long)]
        show_bounds: bool,
    },
    /// Strict two-sided bounds on the count (pairwise-coprime input)
    Bounds {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
        #[arg(value_parser = parse_bigint)]
        n: BigInt,
    },
    /// Which n have exactly k representations: the member set and its
    /// max/min/cardinality/sum statistics
    Rk {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
        #[arg(value_parser = parse_bigint)]
        k: BigInt,
        #[arg(long, value_enum, default_value = "theorem3")]
        threshold: Threshold,
    },
    /// Category of k: is the candidate set {γ_k} or empty
    Classify {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
        #[arg(value_parser = parse_bigint)]
        k: BigInt,
        #[arg(long, value_enum, default_value = "theorem3")]
        threshold: Threshold,
    },
    /// Boundary profile, consequence bound, and counterexample verdict for
    /// the boundary-decomposition conjecture
    Conjecture {
        #[arg(value_parser = parse_bigint)]
        a: BigInt,
        #[arg(value_parser = parse_bigint)]
        b: BigInt,
        #[arg(value_parser = parse_bigint)]
        c: BigInt,
        #[arg(value_parser = parse_bigint)]
        n: BigInt,
        /// Search a decomposition witness for every solution
        #[arg(long)]
        search_witnesses: bool,
    },
}

/// Everything one command run produces, before rendering.
struct Outcome {
    status: &'static str,
    message: String,
    result: Value,
    text: Vec<String>,
    quiet_line: String,
}

fn rational_str(r: &denumerant::BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn interval_json(iv: &BoundInterval) -> Value {
    json!({
        "lower": rational_str(&iv.lower),
        "upper": rational_str(&iv.upper),
        "integer_floor": iv.integer_floor.to_string(),
        "integer_ceil": iv.integer_ceil.to_string(),
    })
}

fn interval_text(iv: &BoundInterval) -> String {
    format!(
        "strict bounds: ({}, {}); integer envelope [{}, {}]",
        rational_str(&iv.lower),
        rational_str(&iv.upper),
        iv.integer_floor,
        iv.integer_ceil
    )
}

fn category_json(cat: &Category) -> Value {
    json!({
        "tag": match cat.tag {
            CategoryTag::CategoryI => "category_i",
            CategoryTag::CategoryII => "category_ii",
        },
        "reason": match cat.reason {
            CategoryReason::GammaEqualsDelta => "gamma_equals_delta",
            CategoryReason::CountMismatch => "count_mismatch",
            CategoryReason::CountMatch => "count_match",
        },
        "gamma": cat.gamma.to_string(),
        "delta": cat.delta.to_string(),
        "count_at_gamma": cat.count_at_gamma.as_ref().map(|v| v.to_string()),
    })
}

fn category_text(cat: &Category) -> Vec<String> {
    let mut lines = vec![format!(
        "{}: {}",
        cat.tag,
        match cat.reason {
            CategoryReason::GammaEqualsDelta => "gamma = delta, the window contains no candidate",
            CategoryReason::CountMismatch => "count at gamma differs from k",
            CategoryReason::CountMatch => "count at gamma equals k",
        }
    )];
    let mut line = format!("gamma = {}, delta = {}", cat.gamma, cat.delta);
    if let Some(v) = &cat.count_at_gamma {
        line.push_str(&format!(", count at gamma = {v}"));
    }
    lines.push(line);
    lines
}

fn opt_str(v: &Option<BigInt>) -> String {
    v.as_ref()
        .map(|x| x.to_string())
        .unwrap_or_else(|| "undefined".into())
}

fn members_str(members: &[BigInt]) -> String {
    let inner: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn rk_outcome(r: &RkResult) -> Outcome {
    let result = json!({
        "regime": r.regime.to_string(),
        "category": category_json(&r.category),
        "members": r.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "g_stat": r.g_stat.as_ref().map(|v| v.to_string()),
        "h_stat": r.h_stat.as_ref().map(|v| v.to_string()),
        "c_stat": r.c_stat.to_string(),
        "s_stat": r.s_stat.to_string(),
    });
    let mut text = vec![format!("k = {} ({} regime)", r.k, r.regime)];
    text.extend(category_text(&r.category));
    text.push(format!("members = {}", members_str(&r.members)));
    text.push(format!(
        "g = {}, h = {}, c = {}, s = {}",
        opt_str(&r.g_stat),
        opt_str(&r.h_stat),
        r.c_stat,
        r.s_stat
    ));
    Outcome {
        status: "ok",
        message: format!("k = {} is of {}", r.k, r.category.tag),
        result,
        text,
        quiet_line: members_str(&r.members),
    }
}

fn to_u64_or_domain(v: &BigInt, what: &str) -> Result<u64, Error> {
    v.to_u64()
        .ok_or_else(|| Error::Domain(format!("{what} = {v} exceeds the enumeration range")))
}

fn run_count(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
    method: Method,
    show_bounds: bool,
) -> Result<Outcome, Error> {
    let value = match method {
        Method::Auto => count(a, b, c, n)?,
        Method::Formula => count_pairwise_coprime(a, b, c, n)?,
        Method::Sawtooth => count_sawtooth(a, b, c, n)?,
        Method::Brute => {
            let (au, bu, cu, nu) = (
                to_u64_or_domain(a, "a")?,
                to_u64_or_domain(b, "b")?,
                to_u64_or_domain(c, "c")?,
                to_u64_or_domain(n, "n")?,
            );
            BigInt::from(brute_force_count(au, bu, cu, nu)?)
        }
    };
    let mut result = json!({
        "count": value.to_string(),
        "method": method.name(),
    });
    let mut text = vec![format!("N({a}, {b}, {c}; {n}) = {value}")];
    let mut message = format!("{value} solutions");
    if show_bounds {
        let triple = CoinTriple::new(a, b, c)?;
        if triple.is_pairwise_coprime() {
            let iv = count_bounds(a, b, c, n)?;
            result["bounds"] = interval_json(&iv);
            text.push(interval_text(&iv));
        } else {
            message.push_str("; bounds omitted (coefficients are not pairwise coprime)");
        }
    }
    Ok(Outcome {
        status: "ok",
        message,
        result,
        text,
        quiet_line: value.to_string(),
    })
}

fn run_bounds(a: &BigInt, b: &BigInt, c: &BigInt, n: &BigInt) -> Result<Outcome, Error> {
    let iv = count_bounds(a, b, c, n)?;
    Ok(Outcome {
        status: "ok",
        message: format!(
            "integer envelope [{}, {}]",
            iv.integer_floor, iv.integer_ceil
        ),
        result: interval_json(&iv),
        text: vec![interval_text(&iv)],
        quiet_line: format!("{} {}", iv.integer_floor, iv.integer_ceil),
    })
}

fn run_classify(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    k: &BigInt,
    threshold: Threshold,
) -> Result<Outcome, Error> {
    let cat = classify(a, b, c, k, threshold.variant())?;
    Ok(Outcome {
        status: "ok",
        message: format!("k = {k} is of {}", cat.tag),
        result: category_json(&cat),
        text: category_text(&cat),
        quiet_line: match cat.tag {
            CategoryTag::CategoryI => "category_i".into(),
            CategoryTag::CategoryII => "category_ii".into(),
        },
    })
}

fn audit_json(audit: &DecompositionAudit) -> Value {
    match audit {
        DecompositionAudit::AllDecompose { targets_checked } => json!({
            "outcome": "all_decompose",
            "targets_checked": targets_checked,
        }),
        DecompositionAudit::MissingWitness {
            target,
            targets_checked,
        } => json!({
            "outcome": "missing_witness",
            "target": {
                "x": target.x.to_string(),
                "y": target.y.to_string(),
                "z": target.z.to_string(),
            },
            "targets_checked": targets_checked,
        }),
        DecompositionAudit::Inconclusive { search_space, cap } => json!({
            "outcome": "inconclusive",
            "search_space": search_space.to_string(),
            "cap": cap,
        }),
    }
}

fn run_conjecture(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    n: &BigInt,
    search_witnesses: bool,
) -> Result<Outcome, Error> {
    let report = if search_witnesses {
        check_counterexample_with_audit(a, b, c, n, DEFAULT_SEARCH_CAP)?
    } else {
        check_counterexample(a, b, c, n)?
    };
    let refuted = !report.conjecture_consequence_holds;
    let mut status = "ok";
    let result = json!({
        "profile": {
            "n1": report.profile.n1,
            "n2": report.profile.n2,
            "n3": report.profile.n3,
            "nhat": report.profile.nhat,
        },
        "consequence_bound": report.consequence_bound.to_string(),
        "bound_interval": report.bound_interval.as_ref().map(interval_json),
        "exact_count": report.exact_count.to_string(),
        "conjecture_consequence_holds": report.conjecture_consequence_holds,
        "refuted": refuted,
        "decomposition": report.decomposition_audit.as_ref().map(audit_json),
    });
    let mut text = vec![
        format!(
            "boundary profile: N1 = {}, N2 = {}, N3 = {}, Nhat = {}",
            report.profile.n1, report.profile.n2, report.profile.n3, report.profile.nhat
        ),
        format!("consequence bound 3*C(Nhat, 3) = {}", report.consequence_bound),
        format!("exact count = {}", report.exact_count),
    ];
    if let Some(iv) = &report.bound_interval {
        text.push(interval_text(iv));
    }
    text.push(if refuted {
        format!(
            "consequence REFUTED: {} > {}",
            report.exact_count, report.consequence_bound
        )
    } else {
        format!(
            "consequence holds: {} <= {}",
            report.exact_count, report.consequence_bound
        )
    });
    match &report.decomposition_audit {
        Some(DecompositionAudit::AllDecompose { targets_checked }) => {
            text.push(format!("all {targets_checked} solutions decompose"));
        }
        Some(DecompositionAudit::MissingWitness {
            target,
            targets_checked,
        }) => {
            text.push(format!(
                "solution {target} admits no boundary decomposition (found after {targets_checked} targets)"
            ));
        }
        Some(DecompositionAudit::Inconclusive { search_space, cap }) => {
            status = "inconclusive";
            text.push(format!(
                "witness search inconclusive: space {search_space} exceeds cap {cap}"
            ));
        }
        None => {}
    }
    Ok(Outcome {
        status,
        message: if refuted {
            "conjecture consequence refuted".into()
        } else {
            "conjecture consequence holds".into()
        },
        result,
        text,
        quiet_line: if refuted { "refuted".into() } else { "holds".into() },
    })
}

fn dispatch(command: &Command) -> (&'static str, BTreeMap<String, String>, Result<Outcome, Error>) {
    let mut inputs = BTreeMap::new();
    match command {
        Command::Count {
            a,
            b,
            c,
            n,
            method,
            show_bounds,
        } => {
            inputs.insert("a".into(), a.to_string());
            inputs.insert("b".into(), b.to_string());
            inputs.insert("c".into(), c.to_string());
            inputs.insert("n".into(), n.to_string());
            inputs.insert("method".into(), method.name().into());
            inputs.insert("show_bounds".into(), show_bounds.to_string());
            ("count", inputs, run_count(a, b, c, n, *method, *show_bounds))
        }
        Command::Bounds { a, b, c, n } => {
            inputs.insert("a".into(), a.to_string());
            inputs.insert("b".into(), b.to_string());
            inputs.insert("c".into(), c.to_string());
            inputs.insert("n".into(), n.to_string());
            ("bounds", inputs, run_bounds(a, b, c, n))
        }
        Command::Rk {
            a,
            b,
            c,
            k,
            threshold,
        } => {
            inputs.insert("a".into(), a.to_string());
            inputs.insert("b".into(), b.to_string());
            inputs.insert("c".into(), c.to_string());
            inputs.insert("k".into(), k.to_string());
            inputs.insert("threshold".into(), threshold.name().into());
            let out = rk_general(a, b, c, k, threshold.variant()).map(|r| rk_outcome(&r));
            ("rk", inputs, out)
        }
        Command::Classify {
            a,
            b,
            c,
            k,
            threshold,
        } => {
            inputs.insert("a".into(), a.to_string());
            inputs.insert("b".into(), b.to_string());
            inputs.insert("c".into(), c.to_string());
            inputs.insert("k".into(), k.to_string());
            inputs.insert("threshold".into(), threshold.name().into());
            ("classify", inputs, run_classify(a, b, c, k, *threshold))
        }
        Command::Conjecture {
            a,
            b,
            c,
            n,
            search_witnesses,
        } => {
            inputs.insert("a".into(), a.to_string());
            inputs.insert("b".into(), b.to_string());
            inputs.insert("c".into(), c.to_string());
            inputs.insert("n".into(), n.to_string());
            inputs.insert("search_witnesses".into(), search_witnesses.to_string());
            (
                "conjecture",
                inputs,
                run_conjecture(a, b, c, n, *search_witnesses),
            )
        }
    }
}

fn error_status(err: &Error) -> &'static str {
    match err {
        Error::Domain(_) => "domain_error",
        Error::Precondition(_) => "precondition_error",
        Error::Overflow => "overflow",
        // a bug, not bad input; still reported through the closed status set
        Error::Internal(_) => "domain_error",
    }
}

fn emit_json(command: &str, inputs: &BTreeMap<String, String>, status: &str, message: &str, result: Value) {
    let envelope = json!({
        "command": command,
        "inputs": inputs,
        "status": status,
        "message": message,
        "result": result,
    });
    println!("{envelope}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, inputs, outcome) = dispatch(&cli.command);
    match outcome {
        Ok(out) => {
            if cli.json {
                emit_json(command, &inputs, out.status, &out.message, out.result);
            } else if cli.quiet {
                println!("{}", out.quiet_line);
            } else {
                for line in &out.text {
                    println!("{line}");
                }
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let status = error_status(&err);
            if cli.json {
                emit_json(command, &inputs, status, &err.to_string(), Value::Null);
            } else {
                println!("error ({status}): {err}");
            }
            eprintln!("{command} failed: {err}");
            ExitCode::FAILURE
        }
    }
}
