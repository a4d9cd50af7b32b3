use std::path::PathBuf;
use std::process::{Command, Output};

fn wqo(args: &[&str]) -> Output {
    wqo_env(args, None)
}

fn wqo_env(args: &[&str], bits: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_wqo"));
    cmd.args(args).env_remove("WQO_BIT_BUDGET");
    if let Some(b) = bits {
        cmd.env("WQO_BIT_BUDGET", b);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wqo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn documented_examples() {
    let o = wqo(&["ord", "cmp", "w", "w*1+1"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "less\n"));
    let o = wqo(&["swo", "search", "--K", "0", "--max-M", "4"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "M = 1\n"));
    let o = wqo(&["claims", "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(": pass (").count(), 4);
}

#[test]
fn exit_codes() {
    assert_eq!(wqo(&["ord", "cmp", "w+", "w"]).status.code(), Some(2));
    assert_eq!(wqo(&["no-such-verb"]).status.code(), Some(2));
    assert_eq!(wqo(&["tree-embed", "a[b]", "a"]).status.code(), Some(1));
    assert_eq!(wqo(&["--max-bits", "4", "ord", "slow", "w^(w^(w))", "9"]).status.code(), Some(3));
    assert_eq!(wqo(&["--max-bits", "0", "ord", "cmp", "0", "0"]).status.code(), Some(2));
    let missing = wqo(&["phi-eval", "--sig", "/nonexistent/x.sig", "a"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/nonexistent/x.sig"));
}

#[test]
fn bit_budget_layering() {
    let args = ["ord", "slow", "w^(w^(w))", "4"];
    assert_eq!(wqo_env(&args, None).status.code(), Some(0));
    assert_eq!(wqo_env(&args, Some("8")).status.code(), Some(3));
    let cfg = scratch("big.cfg", "# roomy\nmax_bits = 100000\n");
    let cfg = cfg.to_str().unwrap();
    let with_cfg = ["--config", cfg, "ord", "slow", "w^(w^(w))", "4"];
    assert_eq!(wqo_env(&with_cfg, Some("8")).status.code(), Some(0));
    let flagged = ["--config", cfg, "--max-bits", "8", "ord", "slow", "w^(w^(w))", "4"];
    assert_eq!(wqo_env(&flagged, None).status.code(), Some(3));
    assert_eq!(wqo_env(&args, Some("lots")).status.code(), Some(2));
}

#[test]
fn tsv_rows() {
    let o = wqo(&["--format", "tsv", "good-pair", "--kind", "string", "011", "0", "00"]);
    assert_eq!(stdout(&o), "good\t1\t2\n");
    let o = wqo(&["--format", "tsv", "hl2dl", "01100"]);
    assert_eq!(stdout(&o), "01100\t(1,2,2)\t3\n");
    let sig = scratch("unary.sig", "gens: a\nops: f/1\n");
    let o = wqo(&["--format", "tsv", "min-order", "--sig", sig.to_str().unwrap(), "--nodes", "2"]);
    assert_eq!(
        stdout(&o),
        "a[]\ta[]\ttrue\ttrue\na[]\tf[a[]]\ttrue\ttrue\nf[a[]]\ta[]\tfalse\tfalse\nf[a[]]\tf[a[]]\ttrue\ttrue\n"
    );
}

#[test]
fn sequence_length_cap() {
    let mut args = vec!["--max-seq-len", "3", "good-pair", "--kind", "tuple"];
    args.extend(["(1)", "(2)", "(3)", "(4)"]);
    assert_eq!(wqo(&args).status.code(), Some(2));
}

#[test]
fn w_and_swo_verbs() {
    let o = wqo(&["w", "search", "--K", "1", "--max-M", "3"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "M = 2\n"));
    let o = wqo(&["w", "search", "--K", "1", "--max-M", "3", "--profile", "literal"]);
    assert_eq!(o.status.code(), Some(2), "literal universes need a node cap");
    let o = wqo(&["w", "leq", "--mode", "literal", "(1+1)", "(1+1)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = wqo(&["w", "leq", "(1+1)", "A((1+1),1)"]);
    assert_eq!(o.status.code(), Some(0));
    let o = wqo(&["w", "value", "--k", "2", "--profile", "literal", "A(1,(1+1))"]);
    assert_eq!(stdout(&o), "4\n");
    let o = wqo(&["w", "check", "--bound", "atr-slot", "--K", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = wqo(&["swo", "search", "--K", "1", "--max-M", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "exhausted up to M = 1\ncounterexample: x^(0)+(0) 0\n");
    let o = wqo(&["swo", "check", "--K", "0", "x^(x^(0)+(0))+(0)"]);
    assert_eq!(stdout(&o), "hypothesis fails at index 0\n");
}

#[test]
fn ordinal_verbs() {
    let run = |args: &[&str]| stdout(&wqo(args));
    assert_eq!(run(&["ord", "natsum", "w+1", "w^(2)"]), "w^(2)+w+1\n");
    assert_eq!(run(&["ord", "fs", "w^(2)", "3"]), "w*3\n");
    assert_eq!(run(&["ord", "slow", "w^(2)", "2"]), "4\n");
    assert_eq!(run(&["ord", "maxcoef", "w^(w*3)+2"]), "3\n");
    let o = wqo(&["ord", "descent", "--K", "1", "w", "w"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "witness j = 0\n"));
}
