//! Golden invocations of the `kpalg` binary, shared by the golden test and
//! the acceptance runner.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub const GOLDENS: &[(&str, &[&str])] = &[
    ("normalize_class_move", &["normalize", "--k", "2", "--level", "2", "p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*"]),
    ("normalize_expand_trace", &["normalize", "--k", "2", "--level", "2", "--trace", "p[(1,0)->(0,0);1] . p[(1,0)->(0,0);1]*"]),
    ("normalize_trace_structured", &["normalize", "--k", "2", "--level", "2", "--trace", "--format", "structured", "p[(1,0)->(0,0);1] . p[(1,0)->(0,0);1]*"]),
    ("normalize_orthogonal", &["normalize", "--k", "1", "--level", "2", "v(0) . v(1)"]),
    ("normalize_level_one", &["normalize", "--k", "1", "--level", "1", "p[(1)->(0);1] . p[(1)->(0);1]*"]),
    ("normalize_zmod", &["normalize", "--k", "1", "--level", "2", "--ring", "zmod:5", "-1 * v(0) + 7 * v(0) . v(0)"]),
    ("normalize_input_file", &["normalize", "--k", "2", "--level", "2", "--input", "tests/golden/elements.txt"]),
    ("mul_ghost_path", &["mul", "--k", "2", "--level", "2", "p[(1,1)->(0,1);2]*", "p[(1,1)->(1,0);2]"]),
    ("mul_structured", &["mul", "--k", "2", "--level", "2", "--format", "structured", "p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*", "p[(1,1)->(0,0);2,1]"]),
    ("star_pair", &["star", "--k", "2", "--level", "2", "p[(1,1)->(1,0);2] . p[(2,0)->(1,0);1]*"]),
    ("star_vertex", &["star", "--k", "2", "--level", "1", "v(3,-1)"]),
    ("basis_pair_count", &["basis", "--k", "1", "--level", "2", "--window", "-2..2", "--degree-bound", "1", "--shape", "pair", "--range-left", "0", "--range-right", "0"]),
    ("basis_all_small", &["basis", "--k", "2", "--level", "2", "--window=0..1", "--degree-bound", "1"]),
    ("basis_paths_structured", &["basis", "--k", "1", "--level", "2", "--window=-1..1", "--degree-bound", "2", "--shape", "path", "--format", "structured"]),
    ("basis_ghosts_box", &["basis", "--k", "2", "--level", "1", "--window=-1,0..0,1", "--degree-bound", "1", "--shape", "ghost"]),
    ("check_lemma3", &["check", "lemma3", "--k", "2", "--level", "2", "--seed", "42", "--cases", "200"]),
    ("check_confluence_structured", &["check", "confluence", "--k", "2", "--level", "2", "--seed", "7", "--cases", "300", "--format", "structured"]),
    ("check_all", &["check", "all", "--k", "2", "--level", "2", "--seed", "42", "--cases", "500"]),
    ("error_level_range", &["normalize", "--k", "2", "--level", "2", "p[(1,1)->(0,0);3,1]"]),
    ("error_unknown_check", &["check", "lemma99", "--k", "1", "--level", "1"]),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.out"))
}

/// Stdout, then stderr for failing commands (checks print timings there),
/// then the exit status.
pub fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_kpalg"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    let code = out.status.code().unwrap_or(-1);
    let mut text = String::from_utf8(out.stdout).expect("utf-8 stdout");
    if code == 2 {
        text.push_str("--- stderr\n");
        text.push_str(&String::from_utf8(out.stderr).expect("utf-8 stderr"));
    }
    text.push_str(&format!("--- exit {code}\n"));
    text
}

/// Compare one invocation with its golden file; with `UPDATE_GOLDENS` set,
/// rewrite the file instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let first = run(args);
    let second = run(args);
    if first != second {
        return Err(format!("{name}: two runs differ"));
    }
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        fs::write(&path, &first).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
    if expected != first {
        return Err(format!("{name}: output differs from golden\n--- expected\n{expected}--- actual\n{first}"));
    }
    Ok(())
}
