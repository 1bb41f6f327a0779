mod common;

#[test]
fn golden_invocations() {
    assert_eq!(common::GOLDENS.len(), 20);
    let errors: Vec<String> = common::GOLDENS
        .iter()
        .filter_map(|(name, args)| common::check_golden(name, args).err())
        .collect();
    assert!(errors.is_empty(), "{}", errors.join("\n"));
}

#[test]
fn worked_examples() {
    let out = common::run(&["normalize", "--k", "2", "--level", "2", "p[(1,1)->(0,1);2] . p[(1,1)->(0,1);2]*"]);
    assert_eq!(out, "1 * p[(1,1)->(1,0);2] . p[(1,1)->(1,0);2]*\n--- exit 0\n");
    let out = common::run(&[
        "basis", "--k", "1", "--level", "2", "--window", "-2..2", "--degree-bound", "1", "--shape", "pair",
        "--range-left", "0", "--range-right", "0",
    ]);
    assert_eq!(out.lines().filter(|l| !l.starts_with("---")).count(), 3);
}

#[test]
fn exit_codes() {
    assert!(common::run(&["normalize", "--k", "2", "--level", "2", "v(0)"]).ends_with("--- exit 2\n"));
    assert!(common::run(&["normalize", "--level", "2", "v(0)"]).ends_with("--- exit 2\n"));
    assert!(common::run(&["normalize", "--k", "1", "--level", "2", "--ring", "zmod:1", "v(0)"]).ends_with("--- exit 2\n"));
    assert!(common::run(&["check", "kp", "--k", "1", "--level", "2", "--window=-1..1"]).ends_with("--- exit 0\n"));
}

#[test]
fn failure_repro_single_case() {
    let out = common::run(&["check", "lemma8", "--k", "2", "--level", "2", "--seed", "5", "--cases", "50", "--case", "3"]);
    assert!(out.starts_with("check lemma8: pass cases=1 seed=5"), "{out}");
}
