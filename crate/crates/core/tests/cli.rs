use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_growthlab")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("growthlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn ab_of_sym4() {
    let o = bin(&["ab", "--group", "sym 4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n1,2\n2,3\n3,4\n24,4\n");
}

#[test]
fn rep_and_relative_ab() {
    let o = bin(&["rep", "--group", "sym 3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,Rep_n\n1,2\n"));
    assert!(text.ends_with("6,3\n"));
    // stabiliser baseline in a dihedral group of prime degree
    let o = bin(&["ab", "--group", "dihedral 7", "--rel", "stab 0", "--n", "14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",1")), "{}", stdout(&o));
}

#[test]
fn subs_lists_classes() {
    let o = bin(&["subs", "--group", "sym 3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "index,order,class_length,is_normal,abelianization_order");
    assert_eq!(rows.len(), 5);
    assert!(rows.contains(&"2,3,1,true,3"));
    assert!(rows.contains(&"3,2,3,false,2"));
    assert!(rows.contains(&"1,6,1,true,2"));
}

#[test]
fn zeta_of_alt5() {
    let o = bin(&["zeta", "--group", "alt 5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("237103/216000"));
    let v: f64 = lines.next().unwrap().parse().unwrap();
    assert!((v - 237103.0 / 216000.0).abs() < 1e-12);
}

#[test]
fn table_json() {
    let o = bin(&["table", "--group", "sym 5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 120);
    assert_eq!(v["class_count"], 7);
    let mut degrees: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 4, 4, 5, 5, 6]);
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["ab", "--group", "sim 4"]).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["ab", "--group", "sym 4", "--rel", "cyclic-sub (0 1 2 3 4)"]).status.code(), Some(2));
    let empty = scratch("empty.txt", "# nothing here\n");
    let o = bin(&["verify", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "check_id,group,status,lhs,rhs,n,witness\n");
    let bad = scratch("bad.txt", "sym 4\nnot a group\n");
    assert_eq!(bin(&["verify", "--corpus", bad.to_str().unwrap()]).status.code(), Some(2));
    let unknown = bin(&["verify", "--check", "no-such-check", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn failing_corpus_and_replay() {
    // S4 has no one-element generating set
    let corpus = scratch("wrong-d.txt", "cyclic 5\nsym 4 | d=1\n");
    let out = corpus.with_file_name("report.json");
    let o = bin(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--check",
        "sub-count,eqLM",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let fails: Vec<&serde_json::Value> = report["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["status"] == "fail")
        .collect();
    assert_eq!(fails.len(), 1);
    assert_eq!(fails[0]["check_id"], "sub-count");

    let witness = scratch("witness.json", &fails[0]["witness"].to_string());
    let o = bin(&["replay", witness.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("sub-count sym 4: fail (reproduced: true)"), "{}", stdout(&o));
    let o = bin(&["replay", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn csv_is_worker_independent() {
    let args = |w: &'static str| ["verify", "--check", "eqLM,ab-hered-1,rep-hered-1,rel-base", "--workers", w];
    let one = bin(&args("1"));
    let four = bin(&args("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}
