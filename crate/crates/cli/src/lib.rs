//! Command-line front end. Every command writes one JSON document (or CSV for
//! `mobius` and `count`) to standard output; big integers are always decimal
//! strings and rationals are `{num, den}` in lowest terms.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use ree_mobius::inversion::{decimal_string, defining_relation_sum, epi_count_report};
use ree_mobius::oracle::{
    closure, enumerate_subgroups, hall_inversion_check, lattice_mobius, parse_permutations,
    verify_maximal_intersection, DEFAULT_BOUND,
};
use ree_mobius::{
    cross_check_corollaries, divisors, generation_probability, verify_trivial_mobius,
    verify_unique_divisibility, Error, ProbabilitySpec, ReeGroup, TargetGroup,
};

pub const SCHEMA_VERSION: &str = "1";

const DECIMAL_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "ree-mobius", version, about = "Möbius inversion counts for the small Ree groups R(3^n)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Subgroup classes with Möbius values and class sizes.
    Mobius {
        #[arg(long)]
        n: u64,
    },
    /// Epimorphism counts from a target presentation onto R(3^n).
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        target: String,
        /// Divide by |Aut(G)| to count normal subgroups.
        #[arg(long)]
        d: bool,
    },
    /// Exact generation probability.
    Prob {
        #[arg(long)]
        n: u64,
        /// `a,b` with orders in {2,3,6,9,inf}, or `2,2,2`.
        #[arg(long)]
        spec: String,
    },
    /// Consistency checks on the catalog and the inversion formulas.
    Verify {
        #[arg(long)]
        n: u64,
        /// Extend the checks to every odd rank up to 45 and routing up to 199.
        #[arg(long)]
        deep: bool,
    },
    /// Subgroup lattice of a permutation group read from a file.
    Oracle {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value = "f2")]
        target: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: message.into() }
    }
}

#[derive(Serialize)]
struct Document {
    schema_version: &'static str,
    command: &'static str,
    params: BTreeMap<&'static str, String>,
    results: Value,
}

struct Rendered {
    failed: bool,
    document: Document,
    csv: Option<String>,
}

fn rational_json(r: &BigRational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

/// Parses `argv` (including the program name) and runs one command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome::usage(text),
            };
        }
    };
    let format = cli.format;
    let rendered = match dispatch(cli.command, format) {
        Ok(r) => r,
        Err(e) => {
            return Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let stdout = match (format, rendered.csv) {
        (Format::Csv, Some(csv)) => csv,
        (Format::Csv, None) => {
            return Outcome::usage(format!(
                "error: --format csv is only available for mobius and count (got {})\n",
                rendered.document.command
            ))
        }
        (Format::Json, _) => {
            let mut s = serde_json::to_string_pretty(&rendered.document).expect("serialisable");
            s.push('\n');
            s
        }
    };
    Outcome { code: i32::from(rendered.failed), stdout, stderr: String::new() }
}

fn dispatch(command: Command, format: Format) -> ree_mobius::Result<Rendered> {
    match command {
        Command::Mobius { n } => mobius(n, format),
        Command::Count { n, target, d } => count(n, &target, d, format),
        Command::Prob { n, spec } => prob(n, &spec),
        Command::Verify { n, deep } => verify(n, deep),
        Command::Oracle { group, target, bound } => oracle(&group, &target, bound),
    }
}

fn params<const N: usize>(pairs: [(&'static str, String); N]) -> BTreeMap<&'static str, String> {
    pairs.into_iter().collect()
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn mobius(n: u64, format: Format) -> ree_mobius::Result<Rendered> {
    let g = ReeGroup::new(n)?;
    let records = g.records()?;
    let header = ["tag", "h", "label", "subgroup_order", "normaliser_order", "mobius", "class_size"];
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.instance.tag.to_string(),
                r.instance.h.to_string(),
                r.label.clone(),
                r.subgroup_order.to_string(),
                r.normaliser_order.to_string(),
                r.mobius.to_string(),
                r.class_size.to_string(),
            ]
        })
        .collect();
    let classes: Vec<Value> = rows
        .iter()
        .map(|row| Value::Object(header.iter().zip(row).map(|(k, v)| (k.to_string(), json!(v))).collect()))
        .collect();
    let results = json!({
        "n": n.to_string(),
        "group_order": g.order().to_string(),
        "aut_order": g.aut_order().to_string(),
        "classes": classes,
    });
    Ok(Rendered {
        failed: false,
        document: Document { schema_version: SCHEMA_VERSION, command: "mobius", params: params([("n", n.to_string())]), results },
        csv: (format == Format::Csv).then(|| to_csv(&header, &rows)),
    })
}

fn count(n: u64, target: &str, with_d: bool, format: Format) -> ree_mobius::Result<Rendered> {
    let target: TargetGroup = target.parse()?;
    let report = epi_count_report(target, n, with_d)?;
    let mut results = json!({
        "target": target.id(),
        "n": n.to_string(),
        "phi_class_sum": report.phi_class_sum.to_string(),
        "phi_closed_form": report.phi_closed_form.to_string(),
        "agree": report.agree,
    });
    let (d, scope) = match &report.d {
        Some(d) => {
            let scope = if d.beyond_paper { "extension beyond paper" } else { "published" };
            results["d"] = json!(d.value.to_string());
            results["d_scope"] = json!(scope);
            (d.value.to_string(), scope.to_string())
        }
        None => (String::new(), String::new()),
    };
    let csv = to_csv(
        &["target", "n", "phi_class_sum", "phi_closed_form", "agree", "d", "d_scope"],
        &[vec![
            target.id().to_string(),
            n.to_string(),
            report.phi_class_sum.to_string(),
            report.phi_closed_form.to_string(),
            report.agree.to_string(),
            d,
            scope,
        ]],
    );
    Ok(Rendered {
        failed: false,
        document: Document {
            schema_version: SCHEMA_VERSION,
            command: "count",
            params: params([("n", n.to_string()), ("target", target.id().to_string()), ("d", with_d.to_string())]),
            results,
        },
        csv: (format == Format::Csv).then_some(csv),
    })
}

fn prob(n: u64, spec: &str) -> ree_mobius::Result<Rendered> {
    let parsed: ProbabilitySpec = spec.parse()?;
    let p = generation_probability(parsed, n)?;
    let results = json!({
        "spec": parsed.to_string(),
        "n": n.to_string(),
        "probability": rational_json(&p),
        "decimal": decimal_string(&p, DECIMAL_DIGITS),
    });
    Ok(Rendered {
        failed: false,
        document: Document {
            schema_version: SCHEMA_VERSION,
            command: "prob",
            params: params([("n", n.to_string()), ("spec", spec.to_string())]),
            results,
        },
        csv: None,
    })
}

#[derive(Serialize)]
struct Check {
    name: String,
    status: &'static str,
    detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: if ok { "pass" } else { "fail" }, detail: detail.into() }
    }
}

fn verify(n: u64, deep: bool) -> ree_mobius::Result<Rendered> {
    ReeGroup::new(n)?;
    let mut checks = Vec::new();
    let ranks: Vec<u64> = if deep {
        let mut r: Vec<u64> = (3..=45).step_by(2).collect();
        if !r.contains(&n) {
            r.push(n);
        }
        r
    } else {
        vec![n]
    };

    for &m in &ranks {
        let g = ReeGroup::new(m)?;
        let mut bad = Vec::new();
        let instances = g.class_instances();
        for inst in &instances {
            let expected = BigInt::from(i32::from(*inst == g.full_group()));
            let sum = defining_relation_sum(&g, inst)?;
            if sum != expected {
                bad.push(format!("{inst}: {sum}"));
            }
        }
        let detail = if bad.is_empty() {
            format!("{} classes", instances.len())
        } else {
            bad.join("; ")
        };
        checks.push(Check::new(format!("defining_relation n={m}"), bad.is_empty(), detail));
        checks.push(Check::new(
            format!("trivial_mobius n={m}"),
            verify_trivial_mobius(m)?,
            "proper nonzero classes weigh -1",
        ));
    }

    let routing: Vec<(u64, u64)> = if deep {
        (1..=199u64).step_by(2).flat_map(|m| divisors(m).unwrap().into_iter().map(move |l| (l, m))).collect()
    } else {
        divisors(n)?.into_iter().map(|l| (l, n)).collect()
    };
    let failures: Vec<String> = routing
        .iter()
        .filter(|&&(l, m)| !verify_unique_divisibility(l, m).unwrap_or(false))
        .map(|(l, m)| format!("l={l} n={m}"))
        .collect();
    checks.push(Check::new(
        "hall_divisibility",
        failures.is_empty(),
        if failures.is_empty() { format!("{} pairs", routing.len()) } else { failures.join(", ") },
    ));

    let cross = cross_check_corollaries(n)?;
    for e in &cross.entries {
        let status = match (e.agree, e.target.has_published_d()) {
            (true, _) => "pass",
            (false, true) => "fail",
            (false, false) => "discrepancy",
        };
        let detail = if e.agree {
            "class sum equals closed form".to_string()
        } else {
            format!("class sum minus closed form = {}", e.discrepancy)
        };
        checks.push(Check { name: format!("closed_form {}", e.target), status, detail });
    }

    let g = ReeGroup::new(n)?;
    let aut = g.aut_order();
    for t in [TargetGroup::F2, TargetGroup::Hecke3] {
        let phi = &cross.entry(t).expect("all targets checked").class_sum;
        let ok = (phi % &aut) == num_bigint::BigUint::default();
        checks.push(Check::new(format!("aut_divides {t}"), ok, format!("|Aut| = {aut}")));
    }

    let count = |s: &str| checks.iter().filter(|c| c.status == s).count();
    let summary = json!({
        "pass": count("pass").to_string(),
        "fail": count("fail").to_string(),
        "discrepancy": count("discrepancy").to_string(),
    });
    let failed = count("fail") > 0;
    let results = json!({
        "n": n.to_string(),
        "deep": deep,
        "checks": serde_json::to_value(&checks).expect("serialisable"),
        "summary": summary,
    });
    Ok(Rendered {
        failed,
        document: Document {
            schema_version: SCHEMA_VERSION,
            command: "verify",
            params: params([("n", n.to_string()), ("deep", deep.to_string())]),
            results,
        },
        csv: None,
    })
}

fn oracle(path: &PathBuf, target: &str, bound: usize) -> ree_mobius::Result<Rendered> {
    let target: TargetGroup = target.parse()?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) })?;
    let gens = parse_permutations(&text)?;
    let g = closure(&gens)?;
    let lat = lattice_mobius(enumerate_subgroups(&g, bound)?);
    let mu = lat.mu().expect("computed above");
    let check = hall_inversion_check(&g, &lat, target, bound)?;
    let theorem = verify_maximal_intersection(&lat);

    let mu_table: Vec<Value> = lat
        .nodes()
        .iter()
        .zip(mu)
        .enumerate()
        .map(|(i, (node, m))| {
            let gens: Vec<String> = node.generators.iter().map(|&x| g.element(x).to_string()).collect();
            json!({
                "index": i.to_string(),
                "order": node.order.to_string(),
                "mu": m.to_string(),
                "generators": gens,
            })
        })
        .collect();
    let results = json!({
        "degree": g.degree().to_string(),
        "group_order": g.order().to_string(),
        "subgroup_count": lat.len().to_string(),
        "maximal_count": lat.maximal().len().to_string(),
        "mu_trivial": mu[lat.bottom()].to_string(),
        "mu_table": mu_table,
        "target": target.id(),
        "inversion": check.inversion.to_string(),
        "brute_force": check.brute_force.to_string(),
        "agree": check.agree,
        "maximal_intersection": theorem,
    });
    Ok(Rendered {
        failed: !(check.agree && theorem),
        document: Document {
            schema_version: SCHEMA_VERSION,
            command: "oracle",
            params: params([
                ("group", path.display().to_string()),
                ("target", target.id().to_string()),
                ("bound", bound.to_string()),
            ]),
            results,
        },
        csv: None,
    })
}
