//! Runs every acceptance criterion through the `lascoux` binary and prints one
//! PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

struct Run {
    code: i32,
    report: Value,
}

fn verify(check: &str, extra: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lascoux"))
        .args(["--json", "verify", check])
        .args(extra)
        .output()
        .expect("running lascoux");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Run { code: out.status.code().unwrap_or(-1), report }
}

fn clean(run: &Run) -> Result<(), String> {
    let failures = run.report["failures"].as_array().map_or(usize::MAX, Vec::len);
    let instances = run.report["instances_run"].as_u64().unwrap_or(0);
    if run.code == 0 && failures == 0 && instances > 0 {
        Ok(())
    } else {
        Err(format!(
            "{} exited {} with {failures} failures over {instances} instances",
            run.report["check_name"], run.code
        ))
    }
}

fn notices(run: &Run) -> Vec<String> {
    run.report["notices"]
        .as_array()
        .map(|v| v.iter().filter_map(|n| n.as_str().map(str::to_string)).collect())
        .unwrap_or_default()
}

fn checks(names: &[(&str, &[&str])]) -> Result<(), String> {
    for (name, extra) in names {
        clean(&verify(name, extra))?;
    }
    Ok(())
}

fn figure_one() -> Result<(), String> {
    let run = verify("figure1", &[]);
    clean(&run)?;
    let notes = notices(&run);
    for gamma in ["L_201", "L_102", "L_012"] {
        if !notes.iter().any(|n| n.starts_with(gamma)) {
            return Err(format!("no notice for {gamma}"));
        }
    }
    Ok(())
}

type Criterion = (u32, &'static str, Duration, Box<dyn Fn() -> Result<(), String>>);

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        (1, "atoms of the rearrangements of 210", Duration::from_secs(1), Box::new(figure_one)),
        (
            2,
            "G_λ as a sum of atoms",
            Duration::from_secs(60),
            Box::new(|| checks(&[("thm13", &["--max-boxes", "4", "--vars", "4"])])),
        ),
        (
            3,
            "quasisymmetric Grothendieck formulas",
            Duration::from_secs(60),
            Box::new(|| checks(&[("eq1", &["--max-boxes", "4", "--vars", "4"])])),
        ),
        (4, "ρ round trips", Duration::from_secs(30), Box::new(|| checks(&[("rho", &["--max-parts", "4"])]))),
        (
            5,
            "uncrowding and the Schur expansion",
            Duration::from_secs(60),
            Box::new(|| checks(&[("uncrowd", &[]), ("lenart", &["--max-boxes", "3", "--vars", "3"])])),
        ),
        (
            6,
            "operator identities",
            Duration::from_secs(30),
            Box::new(|| checks(&[("ops", &["--max-boxes", "4", "--vars", "4"])])),
        ),
        (
            7,
            "Ω_δ as a sum of atoms",
            Duration::from_secs(120),
            Box::new(|| checks(&[("thm51", &["--max-boxes", "6", "--max-parts", "4"])])),
        ),
        (
            8,
            "operator atoms equal filling atoms",
            Duration::from_secs(600),
            Box::new(|| checks(&[("conj52", &["--max-boxes", "6", "--max-parts", "5"])])),
        ),
        (
            9,
            "reversed-basement atoms",
            Duration::from_secs(600),
            Box::new(|| checks(&[("conj53", &["--max-boxes", "6", "--max-parts", "5"])])),
        ),
        (10, "genomic structure constants", Duration::from_secs(60), Box::new(|| checks(&[("conj54", &[])]))),
        (11, "basis expansions and classification", Duration::from_secs(60), Box::new(|| checks(&[("bases", &[])]))),
    ];
    let mut failed = Vec::new();
    for (n, what, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome =
            outcome.and_then(
                |()| {
                    if elapsed <= limit {
                        Ok(())
                    } else {
                        Err(format!("took {elapsed:?}, limit {limit:?}"))
                    }
                },
            );
        match outcome {
            Ok(()) => println!("criterion {n}: PASS  {what} ({} ms)", elapsed.as_millis()),
            Err(e) => {
                println!("criterion {n}: FAIL  {what}: {e}");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
