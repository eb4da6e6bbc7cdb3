//! Acceptance criteria 1 to 10. Each prints one PASS/FAIL line with its
//! elapsed time against the allowed budget and exits nonzero if any fails.
//! Runs without the libtest harness so the lines always reach the output.

use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use hemiring::congruence::is_congruence_simple;
use hemiring::ideal::is_ideal_simple;
use hemiring::lattice::{build_e_m, build_f_m};
use hemiring::FiniteSemilattice;
use hemiring_cli::report::{Verdict, VerificationReport};
use hemiring_cli::suites::{run_suite, SuiteOptions};

type Criterion = (&'static str, u64, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite(id: &str, k: usize) -> VerificationReport {
    run_suite(id, SuiteOptions { max_order: Some(k) }).unwrap_or_else(|e| panic!("{id}: {e}"))
}

/// Confirmed, at least `min_instances`, and an instance for every prefix in
/// `need`.
fn confirmed(r: &VerificationReport, min_instances: usize, need: &[&str]) -> Outcome {
    let missing: Vec<&&str> = need
        .iter()
        .filter(|n| !r.instances.iter().any(|i| i.name.starts_with(**n)))
        .collect();
    let ok =
        r.verdict == Verdict::Confirmed && r.instances.len() >= min_instances && missing.is_empty();
    let mut detail = format!("{} {} instances", r.verdict.as_str(), r.instances.len());
    if let Some(c) = r.counterexamples().next() {
        detail.push_str(&format!(
            "; first counterexample {} ({})",
            c.name,
            c.witness.clone().unwrap_or_default()
        ));
    }
    if !missing.is_empty() {
        detail.push_str(&format!("; missing {missing:?}"));
    }
    Outcome { ok, detail }
}

fn criterion_1() -> Outcome {
    // 1 + 1 + 1 + 2 + 5 semilattice classes up to order 5
    let r = suite("eab_identities", 5);
    let mut o = confirmed(&r, 10, &[]);
    o.ok &= r.instances.len() == 10;
    o
}

fn criterion_2() -> Outcome {
    let r = suite("thm3_3", 5);
    let mut o = confirmed(&r, 10, &[]);
    o.ok &= r.instances.len() == 10;
    let non_distributive = r
        .instances
        .iter()
        .filter(|i| {
            i.outcomes
                .iter()
                .any(|(k, v)| k == "distributive" && v == "false")
        })
        .count();
    o.ok &= non_distributive == 2;
    o.detail
        .push_str(&format!(", {non_distributive} non-distributive"));
    o
}

fn criterion_3() -> Outcome {
    let e = build_e_m(&FiniteSemilattice::diamond());
    let r = e.as_hemiring();
    let f = build_f_m(&e).as_subset(&e);
    let cs = is_congruence_simple(r);
    let is = is_ideal_simple(r);
    let f_ok = f.validate(r).is_ok() && !f.is_whole() && !f.is_zero(r);
    let suite_ok = suite("diamond", 5).verdict == Verdict::Confirmed;
    Outcome {
        ok: cs && !is && f_ok && suite_ok,
        detail: format!(
            "|E|={} congruence_simple={cs} ideal_simple={is} |F|={} proper nonzero ideal={f_ok}",
            r.order(),
            f.len()
        ),
    }
}

fn criterion_4() -> Outcome {
    confirmed(
        &suite("congruence_oracle", 8),
        150,
        &["h3-", "hi4-", "E[", "GF(", "Z/8"],
    )
}

fn criterion_5() -> Outcome {
    // semirings of order 1, 2, 3: 1 + 2 + 6
    confirmed(&suite("prop5_5", 3), 9, &["r1-", "r2-", "r3-"])
}

fn criterion_6() -> Outcome {
    let r = suite("prop5_3", 3);
    let mut o = confirmed(&r, 1, &["M_2(B) e=", "M_2(Z/2) e=", "r3-"]);
    let full = r
        .instances
        .iter()
        .filter(|i| i.outcomes.iter().any(|(k, v)| k == "full" && v == "true"))
        .count();
    o.ok &= full > 0;
    o.detail.push_str(&format!(", {full} full idempotents"));
    o
}

fn criterion_7() -> Outcome {
    let r = suite("thm5_10", 4);
    let mut o = confirmed(&r, 4, &["B, B", "M_2(B), M_2(B)E11", "E[C3], Re"]);
    let c3 = r
        .instances
        .iter()
        .filter(|i| i.name.starts_with("E[C3]"))
        .count();
    o.ok &= c3 >= 1;
    o.detail
        .push_str(&format!(", {c3} minimal left ideals of E_C3"));
    o
}

fn criterion_8() -> Outcome {
    let r = suite("cor5_8", 4);
    let mut o = confirmed(&r, 1, &[]);
    let fields = r
        .instances
        .iter()
        .filter(|i| {
            i.outcomes
                .iter()
                .any(|(k, v)| k == "match" && v.starts_with("M_1(GF("))
        })
        .count();
    o.ok &= fields == 2;
    o.detail.push_str(&format!(", {fields} matched by fields"));
    o
}

fn criterion_9() -> Outcome {
    let aic = suite("thm6_4_6_5", 4);
    let lo = suite("thm6_7", 4);
    let mut o = confirmed(&aic, 1, &[]);
    let lo_o = confirmed(&lo, 1, &[]);
    let cs_lo: Vec<&str> = lo
        .instances
        .iter()
        .filter(|i| {
            i.outcomes
                .iter()
                .any(|(k, v)| k == "congruence_simple" && v == "true")
        })
        .map(|i| i.name.as_str())
        .collect();
    o.ok &= lo_o.ok && cs_lo.len() == 1;
    o.detail = format!(
        "aic: {}; lattice-ordered: {}; congruence-simple lattice-ordered: {cs_lo:?}",
        o.detail, lo_o.detail
    );
    o
}

fn hemiring(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_hemiring"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn snapshot(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                fs::read(&p).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn criterion_10() -> Outcome {
    let tmp = tempfile::TempDir::new().unwrap();
    let mut diffs = Vec::new();
    for format in ["text", "structured"] {
        let a = hemiring(&["--format", format, "verify", "all"]);
        let b = hemiring(&["--format", format, "verify", "all"]);
        if a != b {
            diffs.push(format!("verify all ({format})"));
        }
    }
    let kinds = [
        ("semilattices", "5"),
        ("hemirings", "3"),
        ("idempotent-hemirings", "4"),
        ("semirings", "3"),
        ("idempotent-semirings", "4"),
    ];
    let mut files = 0;
    for (kind, order) in kinds {
        let runs: Vec<_> = ["a", "b"]
            .iter()
            .map(|run| {
                let dir = tmp.path().join(format!("{kind}-{run}"));
                hemiring(&[
                    "enumerate",
                    kind,
                    "--order",
                    order,
                    "--up-to",
                    "--out",
                    dir.to_str().unwrap(),
                ]);
                snapshot(&dir)
            })
            .collect();
        files += runs[0].len();
        if runs[0] != runs[1] {
            diffs.push(format!("enumerate {kind}"));
        }
    }
    Outcome {
        ok: diffs.is_empty() && files > 0,
        detail: if diffs.is_empty() {
            format!("verify all (text, structured) and {files} catalog files byte-identical")
        } else {
            format!("differences: {diffs:?}")
        },
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("e_ab identities over semilattices <= 5", 60, criterion_1),
        (
            "E_M simple <=> ideal-simple <=> distributive",
            300,
            criterion_2,
        ),
        (
            "E_M3 congruence-simple, not ideal-simple; F_M3 proper ideal",
            60,
            criterion_3,
        ),
        (
            "principal-congruence decider agrees with lattice enumeration",
            300,
            criterion_4,
        ),
        (
            "M_2(R) transfers simplicity predicates, |R| <= 3",
            600,
            criterion_5,
        ),
        (
            "corner correspondences for ideals and congruences",
            300,
            criterion_6,
        ),
        ("double centralizer isomorphisms", 300, criterion_7),
        ("simple semirings are M_n(F) or E_M", 900, criterion_8),
        ("aic and lattice-ordered classifications", 300, criterion_9),
        ("determinism of verify and enumerate", 600, criterion_10),
    ];
    let mut failed = Vec::new();
    for (n, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*budget);
        let pass = outcome.ok && in_time;
        println!(
            "criterion {:>2}: {} {name} [{:.2}s / {budget}s] {}",
            n + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
        if !pass {
            failed.push(n + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 10 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
