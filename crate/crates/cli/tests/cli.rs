use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(rel).to_string_lossy().into_owned()
}

fn scratch(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walkit")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn eval_values() {
    assert_eq!(ok(&["eval", &corpus("wal/cheapest_schedule.wal"), "(a)"]), "8");
    assert_eq!(ok(&["eval", &corpus("wal/costs.wal"), "(a b)"]), "2");
    assert_eq!(ok(&["eval", &corpus("wal/costs.wal"), "(a b c)"]), "4/3");
    assert_eq!(ok(&["eval", &corpus("wal/clash.wal"), "(a)"]), "-inf");
    assert_eq!(ok(&["eval", &corpus("wal/disc_first.wal"), "b (a)"]), "9");
    assert_eq!(ok(&["eval", &corpus("wba/ratio_two_loops.wba"), "(a)"]), "3");
    assert_eq!(ok(&["eval", &corpus("wba/disc_choice.wba"), "(a)"]), "8");
    assert_eq!(ok(&["eval", &corpus("wba/energy1_det.wba"), "(a)"]), "1");
}

#[test]
fn exit_codes() {
    // Malformed word.
    assert_eq!(code(&["eval", &corpus("wal/costs.wal"), "(a"]), 1);
    // Malformed file.
    let bad = scratch("bad.wal");
    std::fs::write(&bad, "structure: ratio\nalphabet: a\nmeet x. (P_a(x) =>\n").unwrap();
    assert_eq!(code(&["eval", &bad, "(a)"]), 1);
    // Letter outside the alphabet.
    assert_eq!(code(&["eval", &corpus("wal/costs.wal"), "(z)"]), 2);
    // Over the join cap.
    assert_eq!(code(&["--prefix-cap", "0", "eval", &corpus("wal/cheapest_schedule.wal"), "(a)"]), 2);
    // Ambiguous automaton has no WAL sentence.
    assert_eq!(code(&["translate", &corpus("wba/ratio_two_loops.wba")]), 2);
    // Missing file.
    assert_eq!(code(&["eval", &scratch("missing.wba"), "(a)"]), 2);
    // A weight outside the structure.
    assert_eq!(code(&["--one", "(1,-1)", "eval", &corpus("wal/costs.wal"), "(a)"]), 2);
}

#[test]
fn flag_overrides_header_with_a_warning() {
    let out = run(&["--one", "(5,1)", "eval", &corpus("wal/costs.wal"), "(c)"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "5");
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn nivat_round_trip() {
    let a = corpus("wba/disc_fin_b.wba");
    let t = scratch("disc_fin_b.triple");
    let back = scratch("disc_fin_b.wba");
    ok(&["decompose", &a, "-o", &t]);
    ok(&["recompose", &t, "-o", &back]);
    assert!(ok(&["equiv-sample", &a, &back]).starts_with("EQUIVALENT"));
    assert!(ok(&["equiv-sample", &a, &t]).starts_with("EQUIVALENT"));
}

#[test]
fn convert_round_trip() {
    let a = corpus("wba/ratio_alternate.wba");
    let m = scratch("alternate.wma");
    let back = scratch("alternate.wba");
    ok(&["convert", &a, "-o", &m]);
    assert!(std::fs::read_to_string(&m).unwrap().contains("accsets"));
    ok(&["convert", &m, "-o", &back]);
    assert!(ok(&["equiv-sample", &a, &back]).starts_with("EQUIVALENT"));
}

#[test]
fn translate_and_compile() {
    let a = corpus("wba/ratio_two_loops.wba");
    let f = scratch("two_loops.ewal");
    ok(&["translate", "--ewal", &a, "-o", &f]);
    assert_eq!(ok(&["eval", &f, "(a)"]), "3");
    assert!(ok(&["equiv-sample", &a, &f]).starts_with("EQUIVALENT"));
    let compiled = scratch("schedule.wba");
    ok(&["compile", &corpus("wal/cheapest_schedule.wal"), "-o", &compiled]);
    assert_eq!(ok(&["eval", &compiled, "(a)"]), "8");
}

#[test]
fn ambiguity_reports() {
    assert_eq!(ok(&["check-ambiguity", &corpus("wba/disc_det.wba")]), "UNAMBIGUOUS");
    let out = ok(&["check-ambiguity", &corpus("wba/ratio_two_loops.wba")]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("AMBIGUOUS on"));
    assert_eq!(lines.len(), 3);
    assert_ne!(lines[1].split_once(':').unwrap().1, lines[2].split_once(':').unwrap().1);
}

#[test]
fn different_behaviors_are_reported() {
    let one_loop = scratch("one_loop.wba");
    std::fs::write(&one_loop, "structure: ratio\nalphabet: a\ninitial: p\naccepting: p\ntrans: p a p (1,1)\n").unwrap();
    let out = ok(&["equiv-sample", &corpus("wba/ratio_two_loops.wba"), &one_loop]);
    assert_eq!(out, "DIFFERENT on (a): 3 vs 1");
    assert_eq!(code(&["equiv-sample", &corpus("wba/ratio_two_loops.wba"), &corpus("wal/all_a.wal")]), 2);
}
