//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::Value;

use ree_mobius::inversion::proper_mobius_mass;
use ree_mobius::{
    aut_order, cross_check_corollaries, divisors, generation_probability, phi_class_sum,
    route_hall_divisibility, verify_defining_relation, verify_unique_divisibility,
    ProbabilitySpec, ReeGroup, TargetGroup,
};
use ree_mobius_cli::run;

const RANKS: [u64; 9] = [3, 5, 7, 9, 15, 21, 25, 33, 45];

const D2_TABLE: [(u64, &str); 4] = [
    (3, "3357637312"),
    (5, "9965130790521984"),
    (7, "34169987177353651660608"),
    (9, "127166774444890319085083766720"),
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn cli_json(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["ree-mobius"];
    argv.extend_from_slice(args);
    let out = run(argv);
    let doc = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, doc)
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{:.3}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs())
}

fn d2_reproduction() -> Outcome {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    for (n, expected) in D2_TABLE {
        let ns = n.to_string();
        let (code, doc) = cli_json(&["count", "--n", &ns, "--target", "f2", "--d"]);
        let got = doc["results"]["d"].as_str().unwrap_or("<missing>").to_string();
        if code != 0 || got != expected {
            mismatches.push(format!("N={n}: expected {expected}, got {got}"));
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(1);
    let timing = within(elapsed, Duration::from_secs(1));
    if mismatches.is_empty() {
        outcome(fast, format!("N=3,5,7,9 exact, {timing}"))
    } else {
        outcome(false, format!("{}; {timing}", mismatches.join("; ")))
    }
}

fn trivial_mobius() -> Outcome {
    let start = Instant::now();
    let bad: Vec<String> = RANKS
        .iter()
        .filter_map(|&n| {
            let s = proper_mobius_mass(n).unwrap();
            (s != BigInt::from(-1)).then(|| format!("n={n}: {s}"))
        })
        .collect();
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        if bad.is_empty() { format!("sum = -1 at every n, {}", within(elapsed, Duration::from_secs(1))) } else { bad.join("; ") },
    )
}

fn defining_relations() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut bad = Vec::new();
    for n in RANKS {
        for inst in ReeGroup::new(n).unwrap().class_instances() {
            total += 1;
            if !verify_defining_relation(&inst, n).unwrap() {
                bad.push(format!("{inst} at n={n}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(5),
        if bad.is_empty() {
            format!("{total} class instances, {}", within(elapsed, Duration::from_secs(5)))
        } else {
            bad.join("; ")
        },
    )
}

fn hall_routing() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for n in (1..=99u64).step_by(2) {
        for l in divisors(n).unwrap() {
            pairs += 1;
            let routed = route_hall_divisibility(l, n).is_ok();
            if !routed || !verify_unique_divisibility(l, n).unwrap() {
                bad.push(format!("l={l} n={n}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(10),
        if bad.is_empty() {
            format!("{pairs} (l, n) pairs, {}", within(elapsed, Duration::from_secs(10)))
        } else {
            bad.join("; ")
        },
    )
}

fn closed_forms() -> Outcome {
    let mut fatal = Vec::new();
    let mut discrepancies = Vec::new();
    for n in [3u64, 5, 7, 15, 45] {
        let report = cross_check_corollaries(n).unwrap();
        for e in report.discrepancies() {
            let note = format!("{} at n={n}", e.target);
            if matches!(e.target, TargetGroup::F2 | TargetGroup::Hecke3) {
                fatal.push(note);
            } else {
                discrepancies.push(note);
            }
        }
    }
    let mut detail = if fatal.is_empty() {
        "f2 and hecke3 agree at n=3,5,7,15,45".to_string()
    } else {
        format!("disagreement: {}", fatal.join(", "))
    };
    if !discrepancies.is_empty() {
        detail.push_str(&format!("; reported discrepancies: {}", discrepancies.join(", ")));
    }
    outcome(fatal.is_empty(), detail)
}

fn probabilities() -> Outcome {
    let p23: ProbabilitySpec = "2,3".parse().unwrap();
    let p33: ProbabilitySpec = "3,3".parse().unwrap();
    let mut problems = Vec::new();
    let exact = generation_probability(p23, 3).unwrap();
    if exact != BigRational::new(648.into(), 703.into()) {
        problems.push(format!("P23(R(27)) = {exact}"));
    }
    for spec in [p23, p33] {
        let values: Vec<BigRational> = [3u64, 5, 7, 9, 11].iter().map(|&n| generation_probability(spec, n).unwrap()).collect();
        if !values.windows(2).all(|w| w[0] < w[1]) {
            problems.push(format!("P{spec} not strictly increasing"));
        }
        let gap = BigRational::from_integer(1.into()) - generation_probability(spec, 9).unwrap();
        if gap >= BigRational::new(1.into(), 1000.into()) {
            problems.push(format!("1 - P{spec}(R(3^9)) = {gap}"));
        }
    }
    outcome(
        problems.is_empty(),
        if problems.is_empty() {
            "P23(R(27)) = 648/703, monotone over n=3..11, both gaps below 1e-3 at n=9".to_string()
        } else {
            problems.join("; ")
        },
    )
}

struct OracleRun {
    file: &'static str,
    name: &'static str,
    limit: Duration,
}

const ORACLE_GROUPS: [OracleRun; 3] = [
    OracleRun { file: "s4.txt", name: "S4", limit: Duration::from_secs(10) },
    OracleRun { file: "a5.txt", name: "A5", limit: Duration::from_secs(10) },
    OracleRun { file: "l2_8.txt", name: "L2(8)", limit: Duration::from_secs(300) },
];

fn oracle_equivalence() -> (Outcome, Outcome) {
    let mut bad = Vec::new();
    let mut theorem_bad = Vec::new();
    let mut timings = Vec::new();
    for g in &ORACLE_GROUPS {
        let start = Instant::now();
        for target in ["f2", "hecke3"] {
            let (_, doc) = cli_json(&["oracle", "--group", &data(g.file), "--target", target]);
            let r = &doc["results"];
            if r["agree"] != Value::Bool(true) {
                bad.push(format!("{} {target}: inversion {} vs brute force {}", g.name, r["inversion"], r["brute_force"]));
            }
            if r["maximal_intersection"] != Value::Bool(true) {
                theorem_bad.push(g.name.to_string());
            }
        }
        let elapsed = start.elapsed();
        if elapsed >= g.limit {
            bad.push(format!("{} took {}", g.name, within(elapsed, g.limit)));
        }
        timings.push(format!("{} {:.2}s", g.name, elapsed.as_secs_f64()));
    }
    theorem_bad.dedup();
    let seven = outcome(
        bad.is_empty(),
        if bad.is_empty() { format!("f2 and hecke3 agree; {}", timings.join(", ")) } else { bad.join("; ") },
    );
    let eight = outcome(
        theorem_bad.is_empty(),
        if theorem_bad.is_empty() {
            "every nonzero-mu subgroup of S4, A5, L2(8) is G or an intersection of maximals".to_string()
        } else {
            format!("violated in {}", theorem_bad.join(", "))
        },
    );
    (seven, eight)
}

fn aut_divisibility() -> Outcome {
    let mut bad = Vec::new();
    for (file, aut) in [("a5.txt", 120u32), ("l2_8.txt", 1512)] {
        let (_, doc) = cli_json(&["oracle", "--group", &data(file), "--target", "f2"]);
        let phi: BigUint = doc["results"]["brute_force"].as_str().unwrap_or("1").parse().unwrap();
        if &phi % aut != BigUint::default() {
            bad.push(format!("{file}: {phi} mod {aut}"));
        }
    }
    for n in RANKS {
        if phi_class_sum(TargetGroup::F2, n).unwrap() % aut_order(n).unwrap() != BigUint::default() {
            bad.push(format!("aut_order({n})"));
        }
    }
    outcome(
        bad.is_empty(),
        if bad.is_empty() { "A5 (120), L2(8) (1512), and aut_order(n) for all tested n".to_string() } else { bad.join("; ") },
    )
}

fn main() {
    let mut results: Vec<(u32, &str, Outcome)> = vec![
        (1, "d2 reproduction", d2_reproduction()),
        (2, "trivial subgroup Mobius value", trivial_mobius()),
        (3, "defining relations", defining_relations()),
        (4, "Hall order routing", hall_routing()),
        (5, "closed-form cross-checks", closed_forms()),
        (6, "generation probabilities", probabilities()),
    ];
    let (seven, eight) = oracle_equivalence();
    results.push((7, "oracle equivalence", seven));
    results.push((8, "nonzero mu on maximal intersections", eight));
    results.push((9, "Aut divisibility", aut_divisibility()));

    let mut failures = 0;
    for (id, name, o) in &results {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        if !o.ok {
            failures += 1;
        }
        println!("acceptance {id} [{tag}] {name}: {}", o.detail);
    }
    println!("acceptance summary: {} passed, {failures} failed", results.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
