use std::process::{Command, Output};

use serde_json::{json, Value};

fn polish(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polish"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(polish(args).stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    polish(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_slice(&polish(&full).stdout).unwrap()
}

fn csv_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut full = args.to_vec();
    full.extend(["--format", "csv"]);
    let out = polish(&full).stdout;
    let mut reader = csv::Reader::from_reader(out.as_slice());
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

#[test]
fn parse_valid() {
    assert_eq!(
        stdout(&["parse", "CCpKqNqNp"]),
        "valid\n\
         polish: CCpKqNqNp\n\
         infix: ((p → (q ∧ ¬q)) → ¬p)\n\
         variables: p q\n\
         tree:\n  C\n    C\n      p\n      K\n        q\n        N\n          q\n    N\n      p\n"
    );
    assert_eq!(code(&["parse", "CCpKqNqNp"]), 0);
}

#[test]
fn parse_invalid() {
    let out = polish(&["parse", "CKCpqq"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("invalid: UnexpectedEnd"));
    assert!(text.ends_with("  CKCpqq\n        ^\n"));

    let v = json(&["parse", ""]);
    assert_eq!(v["results"]["valid"], false);
    assert_eq!(v["results"]["error"]["kind"], "UnexpectedEnd");
    assert_eq!(v["results"]["error"]["position"], 0);

    let v = json(&["parse", "Cp?"]);
    assert_eq!(v["results"]["error"]["kind"], "UnknownToken");
    assert_eq!(v["results"]["error"]["position"], 2);
    let v = json(&["parse", "Npq"]);
    assert_eq!(v["results"]["error"]["kind"], "TrailingTokens");
    assert_eq!(v["results"]["error"]["position"], 2);
}

#[test]
fn parse_custom_operators() {
    let v = json(&["parse", "++abc", "--ops", "+:2"]);
    assert_eq!(v["results"]["valid"], true);
    assert_eq!(v["results"]["variables"], json!(["a", "b", "c"]));
    assert_eq!(code(&["parse", "+a", "--ops", "+:2"]), 2);
    assert_eq!(code(&["parse", "p", "--ops", "+2"]), 2);
}

#[test]
fn classical_table() {
    assert_eq!(
        stdout(&["table", "Np", "--logic", "classical"]),
        "p | Np\n1 | 0\n0 | 1\n"
    );
    assert_eq!(
        stdout(&["table", "Cpq"]),
        "p q | Cpq\n1 1 | 1\n1 0 | 0\n0 1 | 1\n0 0 | 1\n"
    );
}

#[test]
fn trivalent_tables() {
    let out = stdout(&["table", "Cpq", "--logic", "lukasiewicz"]);
    assert_eq!(out.lines().count(), 10);
    assert!(out.contains("\n½ ½ | 1\n"));
    let out = stdout(&["table", "Cpq", "--logic", "kleene"]);
    assert!(out.contains("\n½ ½ | ½\n"));
}

#[test]
fn matrix_table() {
    let (header, rows) = csv_rows(&["table", "Cpq", "--logic", "matrix"]);
    assert_eq!(header, ["p", "q", "value"]);
    assert_eq!(rows.len(), 9);
    assert!(rows.contains(&vec!["0.5".into(), "0.5".into(), "0.75".into()]));

    let v = json(&["table", "Kpq", "--logic", "matrix", "--grid", "0,0.25,1"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[4]["inputs"], json!([0.25, 0.25]));
    assert_eq!(rows[4]["value"], 0.0625);
    assert_eq!(rows[4]["vector"], json!([0.9375, 0.0625]));

    let (_, rows) = csv_rows(&["table", "Apq", "--logic", "projection", "--grid", "0.5"]);
    assert_eq!(
        rows,
        vec![vec!["0.5".to_string(), "0.5".into(), "0.75".into()]]
    );
    assert_eq!(code(&["table", "Cpq", "--grid", "0.5"]), 2);
}

#[test]
fn machine_formats_agree_with_text() {
    for logic in ["classical", "lukasiewicz", "kleene", "matrix", "projection"] {
        let args = ["table", "CKpqNr", "--logic", logic];
        let text = stdout(&args);
        let (header, csv) = csv_rows(&args);
        let v = json(&args);
        let json_rows = v["results"]["rows"].as_array().unwrap();
        assert_eq!(v["command"], "table");
        assert_eq!(v["formula"], "CKpqNr");
        assert_eq!(v["semantics"], logic);
        assert_eq!(header, ["p", "q", "r", "value"]);
        assert_eq!(csv.len(), json_rows.len());
        assert_eq!(text.lines().count(), csv.len() + 1);
        for ((line, row), record) in text.lines().skip(1).zip(&csv).zip(json_rows) {
            let numbers: Vec<f64> = row.iter().map(|x| x.parse().unwrap()).collect();
            let mut from_json: Vec<f64> = record["inputs"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_f64().unwrap())
                .collect();
            from_json.push(record["value"].as_f64().unwrap());
            assert_eq!(numbers, from_json);
            let shown: Vec<f64> = line
                .split_whitespace()
                .filter(|t| *t != "|")
                .map(|t| if t == "½" { 0.5 } else { t.parse().unwrap() })
                .collect();
            assert_eq!(shown, numbers, "{logic}: {line}");
        }
    }
}

#[test]
fn check_verdicts() {
    assert_eq!(
        stdout(&["check", "ApNp", "--mode", "tautology"]),
        "TAUTOLOGY\n"
    );
    assert_eq!(code(&["check", "ApNp", "--mode", "tautology"]), 0);
    assert_eq!(
        stdout(&["check", "Apq", "--mode", "equiv", "NKNpNq"]),
        "EQUIVALENT\n"
    );
    assert_eq!(code(&["check", "Apq", "--mode", "equiv", "NKNpNq"]), 0);

    let out = polish(&["check", "Kpq", "--mode", "tautology"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "NOT TAUTOLOGY\ncounterexample: p=1,q=0\n"
    );

    let v = json(&["check", "Cpq", "--mode", "equiv", "Cqp"]);
    assert_eq!(v["results"]["verdict"], "NOT EQUIVALENT");
    assert_eq!(v["results"]["counterexample"], json!({"p": 1.0, "q": 0.0}));

    assert_eq!(code(&["check", "Cpq", "--mode", "equiv"]), 2);
    assert_eq!(code(&["check", "Cp", "--mode", "tautology"]), 2);
}

#[test]
fn eval_values() {
    assert_eq!(
        stdout(&[
            "eval",
            "Kpq",
            "--assign",
            "p=0.5,q=0.5",
            "--logic",
            "projection"
        ]),
        "0.25\n"
    );
    assert_eq!(
        stdout(&["eval", "Cpq", "--assign", "p=1,q=0", "--logic", "classical"]),
        "0\n"
    );
    assert_eq!(
        stdout(&[
            "eval",
            "Cpq",
            "--assign",
            "p=0.5,q=0",
            "--logic",
            "lukasiewicz"
        ]),
        "½\n"
    );
    assert_eq!(
        stdout(&["eval", "Np", "--assign", "p=0.5", "--logic", "matrix", "--dim", "2"]),
        "vector: 0.5 0.5\nweight: ½\n"
    );
    let v = json(&[
        "eval", "Np", "--assign", "p=0.5", "--logic", "matrix", "--dim", "2",
    ]);
    assert_eq!(v["results"]["vector"], json!([0.5, 0.5]));
    assert_eq!(v["results"]["weight"], 0.5);

    let v = json(&[
        "eval",
        "Cpq",
        "--assign",
        "p=0.3,q=0.6",
        "--logic",
        "matrix",
        "--dim",
        "4",
        "--basis",
        "random:5",
    ]);
    assert!((v["results"]["weight"].as_f64().unwrap() - 0.88).abs() < 1e-9);
    assert_eq!(v["results"]["vector"].as_array().unwrap().len(), 4);
}

#[test]
fn eval_rejects_bad_input() {
    for args in [
        &["eval", "Np", "--assign", "p=0.5"][..],
        &["eval", "Np", "--assign", "p=0.3", "--logic", "kleene"],
        &["eval", "Np", "--assign", "p=1.5", "--logic", "projection"],
        &["eval", "Kpq", "--assign", "p=1"],
        &["eval", "Np", "--assign", "p=1,p=0"],
        &["eval", "Np", "--assign", "p:1"],
        &[
            "eval", "Np", "--assign", "p=1", "--logic", "matrix", "--basis", "random",
        ],
        &[
            "eval", "Np", "--assign", "p=1", "--logic", "matrix", "--dim", "1",
        ],
    ] {
        let out = polish(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8(out.stderr)
            .unwrap()
            .starts_with("error: "));
    }
}

#[test]
fn diff_listings() {
    assert_eq!(
        stdout(&["diff", "Cpq", "--pair", "luk-kleene"]),
        "p q | lukasiewicz kleene\n½ ½ | 1 ½\n"
    );
    let v = json(&["diff", "Apq", "--pair", "luk-matrix"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["inputs"], json!([0.5, 0.5]));
    assert_eq!(rows[0]["lukasiewicz"], 0.5);
    assert_eq!(rows[0]["matrix"], 0.75);
    assert_eq!(rows[0]["printed_value"], 0.25);
    assert_eq!(
        stdout(&["diff", "Np", "--pair", "luk-matrix"]),
        "no disagreements\n"
    );
    let (_, rows) = csv_rows(&["diff", "Np", "--pair", "luk-matrix"]);
    assert!(rows.is_empty());
    assert_eq!(code(&["diff", "KKKpqKrsKtuv"]), 2);
}

#[test]
fn matrix_dumps() {
    assert_eq!(
        stdout(&[
            "matrices",
            "--dim",
            "2",
            "--basis",
            "canonical",
            "--symbol",
            "N"
        ]),
        "0 1\n1 0\n"
    );
    assert_eq!(stdout(&["matrices", "--symbol", "K"]), "1 1 1 0\n0 0 0 1\n");
    let all = stdout(&["matrices"]);
    assert!(all.starts_with("# N 2x2\n0 1\n1 0\n\n# C 2x4\n"));

    let v = json(&[
        "matrices", "--dim", "3", "--basis", "random:9", "--symbol", "a",
    ]);
    let m = &v["results"]["matrices"][0];
    assert_eq!((m["rows"].as_u64(), m["cols"].as_u64()), (Some(3), Some(9)));

    // 17 significant digits are enough to rebuild each entry exactly.
    let text = stdout(&[
        "matrices", "--dim", "3", "--basis", "random:9", "--symbol", "a",
    ]);
    let from_text: Vec<f64> = text
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    let from_json: Vec<f64> = m["data"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|row| row.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()))
        .collect();
    assert_eq!(from_text, from_json);

    assert_eq!(code(&["matrices", "--dim", "1"]), 2);
    assert_eq!(code(&["matrices", "--dim", "65"]), 2);
}

#[test]
fn random_bases_are_reproducible() {
    let args = ["matrices", "--dim", "4", "--basis", "random:123"];
    assert_eq!(stdout(&args), stdout(&args));
    assert_ne!(
        stdout(&args),
        stdout(&["matrices", "--dim", "4", "--basis", "random:124"])
    );
}

#[test]
fn quiet_keeps_exit_codes() {
    for (args, expected) in [
        (&["--quiet", "check", "ApNp"][..], 0),
        (&["-q", "check", "Kpq"], 1),
        (&["-q", "parse", "Cp"], 2),
    ] {
        let out = polish(args);
        assert_eq!(out.status.code(), Some(expected));
        assert!(out.stdout.is_empty() && out.stderr.is_empty());
    }
}
