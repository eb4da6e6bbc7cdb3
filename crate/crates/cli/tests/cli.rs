use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hemiring::constructions::{boolean_b, integers_mod, matrix_semiring, two_zero_mult};
use hemiring::hom::is_isomorphic;
use hemiring::FiniteSemilattice;
use hemiring_cli::format::{parse_hemiring, write_hemiring, write_semilattice};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hemiring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn put(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_boolean_semifield() {
    let dir = TempDir::new().unwrap();
    let b = put(&dir, "b.txt", &write_hemiring(&boolean_b(), &["B"]));
    let o = run(&["classify", s(&b)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "simple: true",
        "aic: true",
        "lattice_ordered: true",
        "division: true",
        "infinite_element: 1",
    ] {
        assert!(text.contains(line), "missing {line} in\n{text}");
    }
}

#[test]
fn classify_z2_and_structured_output() {
    let dir = TempDir::new().unwrap();
    let z2 = put(&dir, "z2.txt", &write_hemiring(&integers_mod(2), &[]));
    let o = run(&["--format", "structured", "classify", s(&z2)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ring"], true);
    assert_eq!(v["simple"], true);
    assert_eq!(v["additively_idempotent"], false);
}

#[test]
fn endo_outputs_round_trip_and_report() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (
            "c3",
            FiniteSemilattice::chain(3),
            "e_order: 6",
            "f_equals_e: true",
            "distributive: true",
        ),
        (
            "m3",
            FiniteSemilattice::diamond(),
            "e_order: ",
            "f_equals_e: false",
            "distributive: false",
        ),
        (
            "one",
            FiniteSemilattice::chain(1),
            "e_order: 1",
            "f_equals_e: true",
            "distributive: true",
        ),
    ];
    for (name, m, a, b, c) in cases {
        let file = put(&dir, &format!("{name}.txt"), &write_semilattice(&m, &[]));
        let out = dir.path().join(name);
        let o = run(&["endo", s(&file), "--out", s(&out)]);
        assert_eq!(o.status.code(), Some(0));
        let text = stdout(&o);
        for line in [a, b, c] {
            assert!(text.contains(line), "{name}: missing {line} in\n{text}");
        }
        for table in ["E.txt", "F.txt"] {
            let path = out.join(table);
            let check = run(&["check", s(&path)]);
            assert_eq!(check.status.code(), Some(0), "{name}/{table}");
            assert!(stdout(&check).contains("valid: true"));
            let text = fs::read_to_string(&path).unwrap();
            let r = parse_hemiring(&text).unwrap();
            assert_eq!(
                write_hemiring(&r, &[if table == "E.txt" { "E_M" } else { "F_M" }]),
                text
            );
        }
    }
    // E of the diamond: congruence-simple, not ideal-simple
    let o = run(&["classify", s(&dir.path().join("m3/E.txt"))]);
    let text = stdout(&o);
    assert!(
        text.contains("congruence_simple: true") && text.contains("ideal_simple: false"),
        "{text}"
    );
}

#[test]
fn input_errors_exit_2_with_line_numbers() {
    let dir = TempDir::new().unwrap();
    let bad = put(&dir, "bad.txt", "order 2\nzero 0\nadd\n0 1\n1 x\n");
    let o = run(&["check", s(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
    let missing = run(&["classify", s(&dir.path().join("nope.txt"))]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn check_reports_failing_axiom() {
    let dir = TempDir::new().unwrap();
    // Z/3 addition; 1·(1 + 1) = 1 but 1·1 + 1·1 = 2
    let f = put(
        &dir,
        "f.txt",
        "order 3\nzero 0\nadd\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 1 1\n0 1 1\n",
    );
    let o = run(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.contains("fails at") && text.contains("valid: false"),
        "{text}"
    );
}

#[test]
fn enumerate_layout() {
    let dir = TempDir::new().unwrap();
    for order in ["1", "2"] {
        let out = dir.path().join(format!("s{order}"));
        assert_eq!(
            run(&[
                "enumerate",
                "semilattices",
                "--order",
                order,
                "--out",
                s(&out)
            ])
            .status
            .code(),
            Some(0)
        );
        let files: Vec<_> = fs::read_dir(&out)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .filter(|n| n != "index.tsv")
            .collect();
        assert_eq!(files.len(), 1, "{files:?}");
    }
    let out = dir.path().join("h2");
    assert_eq!(
        run(&["enumerate", "hemirings", "--order", "2", "--out", s(&out)])
            .status
            .code(),
        Some(0)
    );
    let algebras: Vec<_> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .map(|p| parse_hemiring(&fs::read_to_string(p).unwrap()).unwrap())
        .collect();
    for want in [boolean_b(), two_zero_mult(), integers_mod(2)] {
        assert!(algebras
            .iter()
            .any(|r| is_isomorphic(r, &want.forget_identity()).is_some()));
    }
    let too_big = run(&[
        "enumerate",
        "hemirings",
        "--order",
        "9",
        "--out",
        s(&dir.path().join("x")),
    ]);
    assert_eq!(too_big.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "no_such_suite"]).status.code(), Some(2));
    let skipped = run(&["verify", "prop5_5", "--max-order", "9"]);
    assert_eq!(skipped.status.code(), Some(3));
    assert!(stdout(&skipped).contains("verdict: skipped"));
    let ok = run(&["--format", "structured", "verify", "diamond"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&ok)).unwrap();
    assert_eq!(v["verdict"], "confirmed");
    assert_eq!(v["instances"].as_array().unwrap().len(), 2);
}

#[test]
fn morita_and_matrix_commands() {
    let dir = TempDir::new().unwrap();
    let b = put(&dir, "b.txt", &write_hemiring(&boolean_b(), &[]));
    let m2_path = dir.path().join("m2.txt");
    assert_eq!(
        run(&["matrix", s(&b), "--n", "2", "--out", s(&m2_path)])
            .status
            .code(),
        Some(0)
    );
    let m2 = parse_hemiring(&fs::read_to_string(&m2_path).unwrap()).unwrap();
    assert_eq!(m2, *matrix_semiring(&boolean_b(), 2).unwrap().as_hemiring());

    let e11 = matrix_semiring(&boolean_b(), 2)
        .unwrap()
        .unit(0, 0)
        .unwrap();
    let o = run(&[
        "morita",
        "corner",
        s(&m2_path),
        "--idempotent",
        &e11.to_string(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# full: true"));
    let c = parse_hemiring(&text).unwrap();
    assert!(is_isomorphic(&c, &boolean_b()).is_some());

    let not_idem = run(&["morita", "corner", s(&b), "--idempotent", "5"]);
    assert_eq!(not_idem.status.code(), Some(2));
}

#[test]
fn congruence_and_ideal_listings() {
    let dir = TempDir::new().unwrap();
    let z4 = put(&dir, "z4.txt", &write_hemiring(&integers_mod(4), &[]));
    let o = run(&["congruences", s(&z4)]);
    assert!(stdout(&o).starts_with("congruences: 3\n"), "{}", stdout(&o));
    let o = run(&["ideals", s(&z4), "--side", "left"]);
    assert!(stdout(&o).starts_with("ideals: 3\n"), "{}", stdout(&o));
}
