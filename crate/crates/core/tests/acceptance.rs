//! Acceptance criteria, one PASS/FAIL line each. Runs with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use hypercube_strength::bounds::{
    comparison_table, upper_bound_closed, upper_bound_prior, upper_bound_recurrence,
};
use hypercube_strength::cli;
use hypercube_strength::graph::hypercube;
use hypercube_strength::verify::{run_one, Suite};
use hypercube_strength::{
    label_of, min_strength, strf_hypercube_edges, strf_hypercube_scan, BitString, SolveBudget,
    Status,
};
use num_bigint::BigUint;

// wall-clock limits and rates, pinned
const TABLES_LIMIT: Duration = Duration::from_secs(1);
const STRF_LIMIT: Duration = Duration::from_secs(60);
const RECURRENCE_LIMIT: Duration = Duration::from_secs(60);
const TABLE2_LIMIT: Duration = Duration::from_secs(1);
const CLOSED_LIMIT: Duration = Duration::from_secs(1);
const SMALL_SOLVE_LIMIT: Duration = Duration::from_secs(10);
const Q4_BUDGET: Duration = Duration::from_secs(600);
const SUITES_LIMIT: Duration = Duration::from_secs(300);
const LABEL_RATE_MIN: f64 = 1e6;
const LABEL_RATE_SAMPLES: u64 = 2_000_000;
const SCAN24_LIMIT: Duration = Duration::from_secs(120);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > limit {
        out.ok = false;
        out.detail = format!("{}; took {took:.2?}, limit {limit:?}", out.detail);
    } else {
        out.detail = format!("{} ({took:.2?})", out.detail);
    }
    out
}

fn qstr(args: &str) -> cli::Output {
    cli::run(std::iter::once("qstr").chain(args.split_whitespace()))
}

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn tables() -> Outcome {
    let mut rows = 0;
    for n in 3..=6 {
        let out = qstr(&format!("--format csv label --n {n} --table"));
        let expected = fixture(&format!("table1_n{n}.csv"));
        if out.code != 0 || out.stdout != expected {
            return fail(format!("n={n} differs from the golden table"));
        }
        rows += expected.lines().count() - 1;
    }
    if rows != 120 {
        return fail(format!("{rows} rows"));
    }
    pass("120 rows match for n = 3..6")
}

fn strf_values() -> Outcome {
    for (n, v) in [(3, 11u32), (4, 21), (5, 40)] {
        let e = strf_hypercube_edges(n).unwrap().value;
        let s = strf_hypercube_scan(n).unwrap().value;
        if e != BigUint::from(v) || s != BigUint::from(v) {
            return fail(format!("n={n}: edges {e}, scan {s}, expected {v}"));
        }
    }
    for n in 2..=14 {
        let e = strf_hypercube_edges(n).unwrap().value;
        let s = strf_hypercube_scan(n).unwrap().value;
        if e != s {
            return fail(format!("n={n}: edges {e} != scan {s}"));
        }
    }
    pass("11, 21, 40 at n = 3, 4, 5; evaluators agree for n = 2..14")
}

fn central(a: u32) -> u128 {
    let k = a.div_ceil(2);
    (0..k).fold(1u128, |acc, j| acc * (a - j) as u128 / (j + 1) as u128)
}

// independent unrolling of the two-step recurrence
fn recurrence_oracle(n: u32) -> u128 {
    match n {
        3 => 11,
        4 => 21,
        5 => 40,
        _ => recurrence_oracle(n - 2) + 3 * (1u128 << (n - 2)) + central(n - 3) + central(n - 2),
    }
}

fn recurrence() -> Outcome {
    for n in 5..=14usize {
        let s = strf_hypercube_scan(n).unwrap().value;
        let bound = upper_bound_recurrence(n).unwrap();
        if bound != BigUint::from(recurrence_oracle(n as u32)) {
            return fail(format!("n={n}: bound {bound} disagrees with the oracle"));
        }
        if s > bound {
            return fail(format!("n={n}: {s} > {bound}"));
        }
    }
    pass("str_f <= recurrence bound for n = 5..14")
}

fn table2() -> Outcome {
    let expected = [
        (41u32, 40u32),
        (81, 78),
        (161, 152),
        (321, 300),
        (641, 591),
        (1281, 1173),
        (2561, 2323),
        (5121, 4623),
        (10241, 9181),
    ];
    let rows = comparison_table(5, 13).unwrap();
    for (row, (p, r)) in rows.iter().zip(expected) {
        if row.upper_prior != BigUint::from(p) || row.upper_recurrence != BigUint::from(r) {
            return fail(format!(
                "n={}: ({}, {})",
                row.n, row.upper_prior, row.upper_recurrence
            ));
        }
    }
    if rows.len() != 9 {
        return fail(format!("{} rows", rows.len()));
    }
    let csv = qstr("--format csv bounds --n-min 5 --n-max 13");
    if csv.stdout != fixture("table2.csv") {
        return fail("CSV differs from the fixture");
    }
    pass("nine (prior, recurrence) pairs and the CSV fixture match")
}

fn closed_form() -> Outcome {
    for n in 14..=64u32 {
        let closed = upper_bound_closed(n as usize).unwrap();
        let prior = upper_bound_prior(n as usize).unwrap();
        let want = (1u128 << n) + (1u128 << (n - 3)) + 28;
        if closed != BigUint::from(want) {
            return fail(format!("n={n}: {closed} != {want}"));
        }
        if &prior - &closed != BigUint::from((1u128 << (n - 3)) - 27) {
            return fail(format!("n={n}: prior - closed = {}", prior - closed));
        }
    }
    pass("exact for n = 14..64")
}

fn solver_small() -> Outcome {
    let budget = SolveBudget::time(SMALL_SOLVE_LIMIT);
    for (n, v) in [(1, 3), (2, 6), (3, 11)] {
        let out = min_strength(&hypercube(n).unwrap(), &budget).unwrap();
        if out.status != Status::Optimal || out.best_value != v {
            return fail(format!("Q_{n}: {:?} {}", out.status, out.best_value));
        }
    }
    pass("optimal 3, 6, 11 for Q_1..Q_3")
}

fn solver_q4() -> Outcome {
    let out = min_strength(&hypercube(4).unwrap(), &SolveBudget::time(Q4_BUDGET)).unwrap();
    if out.status != Status::Optimal || out.best_value != 21 {
        return fail(format!("Q_4: {:?} {}", out.status, out.best_value));
    }
    pass(format!("Q_4 optimal 21 after {} nodes", out.nodes_explored))
}

fn suites() -> Outcome {
    let plan = [
        (Suite::Bijection, 14),
        (Suite::Complement, 13),
        (Suite::Witness, 12),
        (Suite::Lemma23, 16),
        (Suite::Succprec, 12),
        (Suite::Binomial, 0),
        (Suite::Recurrence, 14),
    ];
    let mut checks = 0;
    for (suite, n) in plan {
        let report = run_one(suite, n);
        if report.n_max < n {
            return fail(format!("{} clamped to n = {}", report.suite, report.n_max));
        }
        for c in &report.checks {
            checks += 1;
            if !c.passed {
                return fail(format!(
                    "{}: {} at {:?}",
                    report.suite, c.name, c.counterexample
                ));
            }
        }
    }
    let gate = qstr("--format csv verify --suite all --n-max 12");
    if gate.code != 0 {
        return fail(format!(
            "verify --suite all --n-max 12 exited {}",
            gate.code
        ));
    }
    pass(format!(
        "{checks} checks at the required sizes; the n-max 12 gate exits 0"
    ))
}

fn performance() -> Outcome {
    let n = 30;
    let strings: Vec<BitString> = (0..1024u64)
        .map(|i| BitString::from_word(n, i.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 34).unwrap())
        .collect();
    let start = Instant::now();
    let mut acc = BigUint::default();
    for i in 0..LABEL_RATE_SAMPLES {
        acc += label_of(n, &strings[(i % 1024) as usize]).unwrap();
    }
    let rate = LABEL_RATE_SAMPLES as f64 / start.elapsed().as_secs_f64();
    std::hint::black_box(acc);
    if rate < LABEL_RATE_MIN {
        return fail(format!("label_of at n=30: {rate:.3e}/s"));
    }
    let start = Instant::now();
    let v = strf_hypercube_scan(24).unwrap().value;
    let took = start.elapsed();
    if took > SCAN24_LIMIT {
        return fail(format!("scan(24) took {took:.2?}"));
    }
    pass(format!(
        "label_of at n=30: {rate:.3e}/s; scan(24) = {v} in {took:.2?}"
    ))
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 9] = [
        ("1 label tables", TABLES_LIMIT, tables),
        ("2 strength of the labeling", STRF_LIMIT, strf_values),
        ("3 recurrence consistency", RECURRENCE_LIMIT, recurrence),
        ("4 comparison table", TABLE2_LIMIT, table2),
        ("5 closed form", CLOSED_LIMIT, closed_form),
        ("6a exact solver Q_1..Q_3", SMALL_SOLVE_LIMIT, solver_small),
        ("6b exact solver Q_4", Q4_BUDGET, solver_q4),
        ("7 property suites", SUITES_LIMIT, suites),
        ("8 performance", Duration::MAX, performance),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let out = timed(limit, f);
        println!(
            "{} criterion {name}: {}",
            if out.ok { "PASS" } else { "FAIL" },
            out.detail
        );
        failed += usize::from(!out.ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
