use std::collections::BTreeMap;
use std::io::BufRead;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use dschur::braid::{parse_braid, with_strands, BraidWord};
use dschur::coeff::{LaurentPoly2, RationalFn};
use dschur::invariants::{
    alexander, homfly, homfly_framed, reduced_homfly, sl_invariant, InvariantResult, Variables,
};
use dschur::selftest::{run_suite, Budget};
use dschur::{Error, Params};

#[derive(Parser)]
#[command(
    name = "dschur",
    version,
    about = "Exact Homfly-Pt, Alexander and sl(m) invariants of braid closures"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantArg {
    Homfly,
    #[value(name = "homfly-framed")]
    HomflyFramed,
    Reduced,
    Alexander,
    Slm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one invariant of one braid closure.
    Compute {
        /// Braid word, e.g. "s1 s2^-1 s1"; empty for the trivial braid
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Strand count override (default: 1 + max generator index)
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, value_enum)]
        invariant: InvariantArg,
        /// Specialization level, required for --invariant slm
        #[arg(long)]
        m: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Seed for probe-based diagnostics (kept for reproducibility)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the built-in verification suites.
    Selftest {
        /// relations | markov | oracle | all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// full (acceptance-sized) or quick
        #[arg(long, default_value = "full")]
        budget: String,
        /// Negative control: corrupt qbin and expect the pascal check to fail
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
    /// Batch-process a JSON-lines knot table.
    Table {
        #[arg(long)]
        file: PathBuf,
        /// Also compute framed/reduced/sl2/sl3 for every entry
        #[arg(long)]
        all_invariants: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::BraidParse { .. } => 2,
        Error::TermBudget { .. } => 4,
        _ => 3,
    }
}

fn params_from_env() -> Params {
    let mut params = Params::default();
    if let Ok(v) = std::env::var("DSCHUR_MAX_TERMS") {
        if let Ok(n) = v.parse::<usize>() {
            params.max_terms = n;
        } else {
            eprintln!("warning: ignoring unparsable DSCHUR_MAX_TERMS={v}");
        }
    }
    params
}

fn poly_terms_json(p: &LaurentPoly2) -> serde_json::Value {
    serde_json::Value::Array(
        p.terms()
            .map(|(eq, ecq, c)| json!([eq, ecq, c.to_string()]))
            .collect(),
    )
}

fn result_json(name: Option<&str>, r: &InvariantResult) -> serde_json::Value {
    let variables = match r.variables {
        Variables::QQ => "qQ",
        Variables::Q => "q",
        Variables::T => "t",
    };
    let mut obj = json!({
        "mode": r.mode.name(),
        "writhe": r.writhe,
        "components": r.components,
        "variables": variables,
        "terms": poly_terms_json(r.value.num()),
        "den_terms": poly_terms_json(r.value.den()),
    });
    if let Some(n) = name {
        obj["name"] = json!(n);
    }
    if let Some(m) = r.m {
        obj["m"] = json!(m);
    }
    obj
}

/// LaTeX with Q rendered verbatim as q^{\beta}.
fn latex_poly(p: &LaurentPoly2, var: &str, beta_var: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (eq, ecq, c)) in p.terms().enumerate() {
        let exponent = if beta_var {
            match (eq, ecq) {
                (0, 0) => String::new(),
                (e, 0) => format!("{e}"),
                (0, 1) => "\\beta".into(),
                (0, -1) => "-\\beta".into(),
                (0, b) => format!("{b}\\beta"),
                (e, 1) => format!("{e}+\\beta"),
                (e, -1) => format!("{e}-\\beta"),
                (e, b) => format!("{e}{b:+}\\beta"),
            }
        } else if eq == 0 {
            String::new()
        } else {
            format!("{eq}")
        };
        let mono = if exponent.is_empty() {
            String::new()
        } else {
            format!("{var}^{{{exponent}}}")
        };
        let abs = num_traits::Signed::abs(c);
        let sign = if i == 0 {
            if num_traits::Signed::is_negative(c) {
                "-"
            } else {
                ""
            }
        } else if num_traits::Signed::is_negative(c) {
            " - "
        } else {
            " + "
        };
        out.push_str(sign);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if num_traits::One::is_one(&abs) {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}{mono}"));
        }
    }
    out
}

fn latex_value(v: &RationalFn, variables: Variables) -> String {
    let (var, beta) = match variables {
        Variables::QQ | Variables::Q => ("q", true),
        Variables::T => ("t", false),
    };
    if v.den().is_one() {
        latex_poly(v.num(), var, beta)
    } else {
        format!(
            "\\frac{{{}}}{{{}}}",
            latex_poly(v.num(), var, beta),
            latex_poly(v.den(), var, beta)
        )
    }
}


fn compute_invariant(
    b: &BraidWord,
    which: InvariantArg,
    m: Option<i64>,
    params: &Params,
) -> Result<InvariantResult, Error> {
    match which {
        InvariantArg::Homfly => homfly(b, params),
        InvariantArg::HomflyFramed => homfly_framed(b, params),
        InvariantArg::Reduced => reduced_homfly(b, params),
        InvariantArg::Alexander => alexander(b, params),
        InvariantArg::Slm => {
            let m = m.ok_or(Error::DegeneratePresentation(
                "--m is required for --invariant slm".into(),
            ))?;
            sl_invariant(b, m, params)
        }
    }
}

fn cmd_compute(
    braid: &str,
    strands: Option<usize>,
    invariant: InvariantArg,
    m: Option<i64>,
    format: FormatArg,
) -> Result<(), Error> {
    if invariant != InvariantArg::Slm && m.is_some() {
        return Err(Error::DegeneratePresentation(
            "--m only applies to --invariant slm".into(),
        ));
    }
    let params = params_from_env();
    let mut b = parse_braid(braid)?;
    if let Some(k) = strands {
        b = with_strands(&b, k)?;
    }
    let r = compute_invariant(&b, invariant, m, &params)?;
    match format {
        FormatArg::Text => println!("{}", r.render()),
        FormatArg::Json => println!("{}", result_json(None, &r)),
        FormatArg::Latex => println!("{}", latex_value(&r.value, r.variables)),
    }
    Ok(())
}

fn cmd_selftest(suite: &str, seed: u64, budget: &str, mutate: Option<&str>) -> u8 {
    if !["relations", "markov", "oracle", "all"].contains(&suite) {
        eprintln!("unknown suite {suite:?} (relations | markov | oracle | all)");
        return 2;
    }
    let budget = match budget {
        "quick" => Budget::quick(),
        _ => Budget::full(),
    };
    let mutate_qbin = mutate == Some("corrupt-qbin");
    let checks = run_suite(suite, seed, &budget, mutate_qbin);
    let mut failed = Vec::new();
    for c in &checks {
        println!(
            "{} {}: {}",
            if c.ok { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
        if !c.ok {
            failed.push(c.name);
        }
    }
    if failed.is_empty() {
        println!("selftest: all {} checks passed", checks.len());
        0
    } else {
        println!("selftest: FAILED at {}", failed.join(", "));
        1
    }
}

#[derive(serde::Deserialize)]
struct TableEntry {
    name: String,
    braid: String,
    #[serde(default)]
    strands: Option<usize>,
    #[serde(default)]
    expected: Option<BTreeMap<String, ExpectedPoly>>,
}

#[derive(serde::Deserialize)]
struct ExpectedPoly {
    terms: Vec<(i64, i64, serde_json::Value)>,
    #[serde(default)]
    den_terms: Option<Vec<(i64, i64, serde_json::Value)>>,
}

fn coeff_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

fn expected_value(e: &ExpectedPoly) -> Option<RationalFn> {
    let num = LaurentPoly2::from_terms(
        e.terms
            .iter()
            .map(|(eq, ecq, c)| Some((*eq, *ecq, coeff_from_json(c)?)))
            .collect::<Option<Vec<_>>>()?,
    );
    let den = match &e.den_terms {
        None => LaurentPoly2::one(),
        Some(terms) => LaurentPoly2::from_terms(
            terms
                .iter()
                .map(|(eq, ecq, c)| Some((*eq, *ecq, coeff_from_json(c)?)))
                .collect::<Option<Vec<_>>>()?,
        ),
    };
    RationalFn::new(num, den).ok()
}

struct Row {
    lines: Vec<String>,
    errors: usize,
    mismatches: usize,
    comparisons: usize,
}

fn cmd_table(file: &PathBuf, all_invariants: bool, jobs: usize) -> u8 {
    let reader = match std::fs::File::open(file) {
        Ok(f) => std::io::BufReader::new(f),
        Err(e) => {
            eprintln!("cannot open {}: {e}", file.display());
            return 2;
        }
    };
    let mut entries = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("read error at line {}: {e}", lineno + 1);
                return 2;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<TableEntry>(&line) {
            Ok(entry) => entries.push(entry),
            Err(e) => {
                eprintln!("malformed table line {}: {e}", lineno + 1);
                return 2;
            }
        }
    }
    let params = params_from_env();
    let invariants: Vec<(&str, InvariantArg, Option<i64>)> = if all_invariants {
        vec![
            ("homfly-framed", InvariantArg::HomflyFramed, None),
            ("homfly", InvariantArg::Homfly, None),
            ("reduced", InvariantArg::Reduced, None),
            ("alexander", InvariantArg::Alexander, None),
            ("sl2", InvariantArg::Slm, Some(2)),
            ("sl3", InvariantArg::Slm, Some(3)),
        ]
    } else {
        vec![
            ("homfly", InvariantArg::Homfly, None),
            ("alexander", InvariantArg::Alexander, None),
        ]
    };

    let process = |entry: &TableEntry| -> Row {
        let mut row = Row {
            lines: Vec::new(),
            errors: 0,
            mismatches: 0,
            comparisons: 0,
        };
        let b = parse_braid(&entry.braid).and_then(|b| match entry.strands {
            Some(k) => with_strands(&b, k),
            None => Ok(b),
        });
        let b = match b {
            Ok(b) => b,
            Err(e) => {
                row.lines.push(format!("{}: braid error: {e}", entry.name));
                row.errors += 1;
                return row;
            }
        };
        for (label, which, m) in &invariants {
            match compute_invariant(&b, *which, *m, &params) {
                Ok(r) => {
                    let verdict = match entry.expected.as_ref().and_then(|ex| ex.get(*label)) {
                        None => "",
                        Some(ex) => match expected_value(ex) {
                            Some(want) if want == r.value => {
                                row.comparisons += 1;
                                " [expected: ok]"
                            }
                            Some(_) => {
                                row.comparisons += 1;
                                row.mismatches += 1;
                                " [expected: MISMATCH]"
                            }
                            None => {
                                row.mismatches += 1;
                                " [expected: unparsable]"
                            }
                        },
                    };
                    row.lines.push(format!(
                        "{} {label}: {}{verdict}",
                        entry.name,
                        r.render()
                    ));
                }
                Err(e) => {
                    row.errors += 1;
                    row.lines
                        .push(format!("{} {label}: error: {e}", entry.name));
                }
            }
        }
        row
    };

    let rows: Vec<Row> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            entries.par_iter().map(process).collect()
        })
    } else {
        entries.iter().map(process).collect()
    };

    let mut errors = 0;
    let mut mismatches = 0;
    let mut comparisons = 0;
    for row in &rows {
        for line in &row.lines {
            println!("{line}");
        }
        errors += row.errors;
        mismatches += row.mismatches;
        comparisons += row.comparisons;
    }
    println!(
        "table: {} entries, {} comparisons, {} mismatches, {} errors",
        rows.len(),
        comparisons,
        mismatches,
        errors
    );
    if mismatches > 0 {
        3
    } else {
        0
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Compute {
            braid,
            strands,
            invariant,
            m,
            format,
            seed: _,
        } => match cmd_compute(&braid, strands, invariant, m, format) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                exit_code_for(&e)
            }
        },
        Cmd::Selftest {
            suite,
            seed,
            budget,
            mutate,
        } => cmd_selftest(&suite, seed, &budget, mutate.as_deref()),
        Cmd::Table {
            file,
            all_invariants,
            jobs,
        } => cmd_table(&file, all_invariants, jobs),
    };
    ExitCode::from(code)
}
