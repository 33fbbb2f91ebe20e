use std::io::Cursor;

use twisted_gauss::cli::run;

fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["twisted-gauss"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut Cursor::new(stdin.as_bytes().to_vec()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn unknot_prints_terminal() {
    assert_eq!(cli(&["unknot", "O1+U1+"], ""), (0, "\n".into(), String::new()));
    assert_eq!(cli(&["unknot", "b"], "").1, "b\n");
}

#[test]
fn unknot_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let p = path.to_str().unwrap();
    let (code, out, _) = cli(&["unknot", "U1-O2-U3+O4+U2-O1-bU4+bO3+", "--trace", p], "");
    assert_eq!(code, 0);
    let (code, verdict, _) = cli(&["verify", "--trace", p], "");
    assert_eq!(code, 0, "{verdict}");
    assert!(verdict.starts_with("ok\t"));
    assert!(verdict.trim_end().ends_with(out.trim_end()));
    // damage one key
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut f: Vec<String> = lines[3].split('\t').map(String::from).collect();
    f[6] = "bb".into();
    lines[3] = f.join("\t");
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    let (code, verdict, _) = cli(&["verify", "--trace", p], "");
    assert_eq!(code, 1);
    assert!(verdict.contains("step 1"), "{verdict}");
}

#[test]
fn equiv_and_search() {
    let (code, out, _) = cli(&["equiv", "bb", "", "--kinds", "T2_DEL"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("path\t1\n"));
    assert_eq!(cli(&["equiv", "b", "", "--kinds", "T2_DEL"], "").0, 1);
    let (code, out, _) = cli(&["search", "bb", "--kinds", "T2", "--insertions", "2"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "0\tbb\n1\t\n1\tbbbb\n");
    let (code, _, err) = cli(&["search", "O1+O2+U1+U2+", "--insertions", "4", "--max-states", "5"], "");
    assert_eq!(code, 1);
    assert!(err.contains("partial"));
}

#[test]
fn input_errors_exit_2() {
    let (code, _, err) = cli(&["parse", "O1+U1-"], "");
    assert_eq!(code, 2);
    assert!(err.contains("different signs"));
    assert_eq!(cli(&["nonsense"], "").0, 2);
    assert_eq!(cli(&["apply", "O1+U1+", "--move", "F1", "--site", "0"], "").0, 2);
    assert_eq!(cli(&["apply", "O1+U1+", "--move", "R9", "--site", "0"], "").0, 2);
}

#[test]
fn batch_from_stdin_keeps_order() {
    let (code, out, _) = cli(&["print", "--canonical"], "O1+U1+\nU7-O7-\nbb\n");
    assert_eq!(code, 0);
    assert_eq!(out, "O1+U1+\nO1-U1-\nbb\n");
    let (code, out, _) = cli(&["validate"], "O1+U1+\nO1+\n");
    assert_eq!(code, 1);
    assert!(out.lines().nth(1).unwrap().starts_with("invalid"));
}

#[test]
fn apply_and_enumerate() {
    assert_eq!(cli(&["apply", "bO1+bU1+", "--move", "T3_FWD", "--site", "0", "--params", "label=1"], "").1, "U1-bO1-b\n");
    let (_, out, _) = cli(&["enumerate", "O1+U1+", "--kinds", "R1_DEL"], "");
    assert_eq!(out, "R1_DEL\t0\tlabel=1,first=O,sign=+\n");
}

#[test]
fn seeded_campaign_is_deterministic() {
    let a = cli(&["unknot", "--seed", "11", "--count", "5"], "");
    assert_eq!(a.0, 0);
    assert_eq!(a, cli(&["unknot", "--seed", "11", "--count", "5"], ""));
    assert_eq!(a.1.lines().count(), 5);
}

#[test]
fn macro_check_passes() {
    let (code, out, _) = cli(&["macro-check", "--table"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 41);
    assert!(!out.contains("fail"));
}
