use std::process::{Command, Output};

use joinortho::classifier::Verdict;
use joinortho::compat::{validate_witness, WitnessPair};

fn joinortho(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_joinortho"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_exit_codes_and_fields() {
    let o = joinortho(&["classify", "--m", "2,2", "--n", "2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Verdict = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v.ajo.as_str(), "yes");

    let o = joinortho(&["classify", "--m", "2,1", "--n", "2,1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#""ajo":"no""#));

    let o = joinortho(&["classify", "--m", "2^5", "--n", "3,2,1^5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#""sjo":true"#));

    let o = joinortho(&["classify", "--m", "2^5", "--n", "3,2,1^5", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains(r#""ajo":"unknown","rule":"BUDGET""#));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(joinortho(&["classify", "--m", "2,x", "--n", "1"]).status.code(), Some(64));
    assert_eq!(joinortho(&["classify", "--m", "2"]).status.code(), Some(64));
    assert_eq!(joinortho(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(joinortho(&["table", "nope"]).status.code(), Some(64));
    assert_eq!(joinortho(&["enumerate", "--budget", "0"]).status.code(), Some(64));
    assert_eq!(joinortho(&["--help"]).status.code(), Some(0));
}

#[test]
fn witness_command() {
    let o = joinortho(&["witness", "--m", "2,2", "--n", "2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let w: WitnessPair = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(validate_witness(&w), Ok(()));
    assert!(stdout(&o).starts_with(r#"{"mode":"D","r":"#));

    let o = joinortho(&["witness", "--m", "2,1", "--n", "2,1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not always join-orthogonalisable"));
}

#[test]
fn every_yes_verdict_round_trips() {
    let o = joinortho(&["enumerate", "--max-total", "6", "--max-l", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut yes = 0;
    for line in text.lines() {
        let v: Verdict = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), line);
        if let Some(w) = v.witness {
            assert_eq!(validate_witness(&w), Ok(()), "{line}");
            yes += 1;
        }
    }
    assert!(yes > 50);
}

#[test]
fn enumerate_includes_reference_pairs() {
    let text = stdout(&joinortho(&["enumerate", "--max-total", "4", "--max-l", "3", "--format", "csv"]));
    assert!(text.lines().any(|l| l == r#"2,3,"2,2","2,1,1",true,true,yes,STRONG_SUITABILITY,true"#));
    let text = stdout(&joinortho(&["enumerate", "--max-total", "2", "--format", "csv"]));
    assert!(text.lines().any(|l| l.starts_with("1,1,1,1,") && l.contains(",yes,")));
    let text = stdout(&joinortho(&["enumerate", "--max-total", "3", "--k", "1", "--format", "csv"]));
    assert!(text.lines().any(|l| l.starts_with(r#"1,3,3,"1,1,1","#) && l.contains(",yes,")));
}

#[test]
fn verify_chain_default_bounds_pass() {
    let o = joinortho(&["verify-chain"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(r#""violations":0"#));
    let o = joinortho(&["verify-chain", "--max-total", "8", "--k", "3", "--l", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = joinortho(&["verify-chain", "--max-total", "4", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gap_hunt_finds_separating_pairs() {
    let a = stdout(&joinortho(&[
        "gap-hunt", "--k", "5", "--l", "7", "--max-total", "10", "--max-l", "7",
    ]));
    assert!(a.contains(r#"{"k":5,"l":7,"class":"a","m":[2,2,2,2,2],"n":[3,2,1,1,1,1,1]}"#), "{a}");
    let b = stdout(&joinortho(&["gap-hunt", "--k", "3", "--l", "4", "--max-total", "6"]));
    assert!(b.contains(r#""class":"b","m":[2,2,2],"n":[3,1,1,1]"#), "{b}");
    for (k, l) in [("1", "3"), ("2", "4"), ("2", "5"), ("3", "5"), ("4", "4")] {
        let g = stdout(&joinortho(&["gap-hunt", "--k", k, "--l", l, "--max-total", "9"]));
        assert!(g.is_empty(), "k={k} l={l}: {g}");
    }
}

#[test]
fn table_text() {
    let o = joinortho(&["table", "pm-join-paths", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row5 = text.lines().find(|l| l.starts_with("m=5")).unwrap();
    assert!(row5.contains("(1,1,1) (2,1) (3)"));
    let row6 = text.lines().find(|l| l.starts_with("m=6")).unwrap();
    assert!(!row6.contains('('));
}
