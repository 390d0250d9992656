//! Acceptance criteria, one line each. Run with
//! `cargo test -p forest-poset-cli --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use forest_poset_cli::verify::{self, Check, Sample};

const SEED: u64 = 20240611;

struct Outcome {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn from_checks(
    id: u32,
    title: &'static str,
    checks: &[&Check],
    extra: Option<(bool, String)>,
) -> Outcome {
    let mut passed = checks.iter().all(|c| c.passed);
    let mut detail: Vec<String> = checks.iter().map(|c| c.to_string()).collect();
    if let Some((ok, note)) = extra {
        passed &= ok;
        detail.push(note);
    }
    Outcome {
        id,
        title,
        passed,
        detail: detail.join("\n      "),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() -> ExitCode {
    let mut outcomes = Vec::new();

    let (comb, took) = timed(|| verify::comb_factorization(7, 5));
    outcomes.push(from_checks(
        1,
        "comb chi = (y-1)...(y-n+1), 2 <= n <= 7, brute n <= 5, < 10 s",
        &[&comb],
        Some((
            took < Duration::from_secs(10),
            format!("{:.2} s", took.as_secs_f64()),
        )),
    ));

    let (sweep, took) = timed(|| verify::sweep(5, None));
    outcomes.push(from_checks(
        2,
        "fast = brute on every interval, n <= 5, < 5 min",
        &[&sweep.equivalence],
        Some((
            took < Duration::from_secs(300),
            format!("{:.2} s", took.as_secs_f64()),
        )),
    ));
    outcomes.push(from_checks(
        3,
        "M(x, 1) = 1 on every interval of criterion 2",
        &[&sweep.m_at_one],
        None,
    ));
    outcomes.push(from_checks(
        4,
        "chi roots = exponents on every interval of criterion 2",
        &[&sweep.chi_roots],
        None,
    ));
    outcomes.push(from_checks(
        5,
        "rank property on every interval, n <= 5",
        &[&sweep.ranked],
        None,
    ));

    let axioms = verify::order_axioms(4);
    outcomes.push(from_checks(
        6,
        "order axioms and strict inner-vertex growth, n <= 4",
        &[&axioms],
        None,
    ));

    let exhaustive = verify::classification(4, None);
    let sampled = verify::classification_sample(Sample {
        labels: 5,
        count: 1000,
        seed: SEED,
    });
    let enough = sampled.checked >= 1000;
    outcomes.push(from_checks(
        7,
        "same (F', V) gives isomorphic partitive posets: all n <= 4, 1000 sampled at n = 5",
        &[&exhaustive, &sampled],
        Some((enough, format!("{} sampled pairs", sampled.checked))),
    ));

    let rebuilt = verify::decomposition(4, None);
    outcomes.push(from_checks(
        8,
        "product / twisted / vee-product rebuilds, n <= 4",
        &[&rebuilt],
        None,
    ));

    let witness = verify::semimodularity_witness(4);
    outcomes.push(from_checks(
        9,
        "a non-semimodular interval exists on 4 labels",
        &[&witness],
        None,
    ));

    let counts = verify::counting(7, 6, 6);
    outcomes.push(from_checks(
        10,
        "trees (2n-3)!! n <= 7, forests n <= 6, |[E, comb]| = Bell(n) n <= 6",
        &[&counts],
        None,
    ));

    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}  {}", o.id, o.title);
        println!("      {}", o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
