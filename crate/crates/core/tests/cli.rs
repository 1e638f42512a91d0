//! End-to-end runs of the `clonoid` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clonoid"))
        .args(args)
        .env_remove("CLONOID_CAP")
        .env_remove("CLONOID_GOLDEN_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn all_output(o: &Output) -> String {
    format!("{}{}", stdout(o), String::from_utf8_lossy(&o.stderr))
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// A copy of the golden tables with one file edited.
fn corrupted(tag: &str, file: &str, edit: impl Fn(&str) -> String) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("clonoid-golden-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.join(p.file_name().unwrap())).unwrap();
    }
    let text = std::fs::read_to_string(dir.join(file)).unwrap();
    let changed = edit(&text);
    assert_ne!(changed, text, "edit must change {file}");
    std::fs::write(dir.join(file), changed).unwrap();
    dir
}

#[test]
fn classify_prints_the_class() {
    let o = run(&["classify", "--fn", "3:96", "--source", "Sc"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "F^{01}_{01}");
}

#[test]
fn enumerate_lists_five_clonoids() {
    let o = run(&["enumerate", "--source", "Omega", "--target", "Ic"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains('5'), "{text}");
    for name in ["Empty", "C0", "C1", "Omega"] {
        assert!(text.contains(name), "{name} missing from\n{text}");
    }
}

#[test]
fn tables_verify_a_suite() {
    let o = run(&["tables", "--suite", "mcvc"]);
    assert!(o.status.success(), "{}", all_output(&o));
    assert!(stdout(&o).contains("56/56 stable, 56/56 distinct"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &[
            "enumerate",
            "--source",
            "Tc",
            "--target",
            "Ic",
            "--format",
            "json",
        ][..],
        &["hasse", "--source", "Sc", "--target", "Lc"],
        &["stable", "--class", "Smaj_11 | Refl_11"],
    ] {
        let (a, b) = (run(args), run(args));
        assert!(a.status.success(), "{args:?}: {}", all_output(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["enumerate", "--source", "Nope", "--target", "Ic"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(all_output(&o).contains("Omega"), "valid names are listed");
    assert_eq!(
        run(&["enumerate", "--source", "L", "--target", "Ic"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "--fn", "3:zz", "--source", "Sc"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn corrupted_tables_fail_with_the_row_named() {
    let cases: Vec<(&str, &str, Box<dyn Fn(&str) -> String>, &str)> = vec![
        (
            "count",
            "mclc.json",
            Box::new(|t: &str| t.replacen("\"count\": 15", "\"count\": 16", 1)),
            "count",
        ),
        (
            "expr",
            "scvc.json",
            Box::new(|t: &str| t.replacen("\"Smaj_10\"", "\"Smaj_11\"", 1)),
            "row 7",
        ),
        (
            "left",
            "scvc.json",
            Box::new(|t: &str| t.replacen("\"left\": \"XI\"", "\"left\": \"OI\"", 1)),
            "row 2",
        ),
        (
            "minors",
            "discriminator.json",
            Box::new(|t: &str| t.replacen("1296", "1297", 1)),
            "(Sc, Ic)",
        ),
    ];
    for (tag, file, edit, row) in cases {
        let dir = corrupted(tag, file, edit);
        let suite = file.trim_end_matches(".json");
        let o = run(&[
            "tables",
            "--suite",
            suite,
            "--golden-dir",
            dir.to_str().unwrap(),
        ]);
        let text = all_output(&o);
        assert_eq!(o.status.code(), Some(1), "{tag}: {text}");
        assert!(
            text.contains("FAIL") && text.contains(row),
            "{tag}: expected `{row}` in\n{text}"
        );
        std::fs::remove_dir_all(dir).unwrap();
    }
}
