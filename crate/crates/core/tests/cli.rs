use std::io::Write as _;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wordrep").chain(args.iter().copied());
    let code = wordrep::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const P3: &str = "vertices: 1 2 3\n1 2\n2 3\n";
const K2: &str = "vertices: 1 2\n1 2\n";
const K2_K1: &str = "vertices: 1 2 3\n1 2\n";
const P3_K1: &str = "vertices: 1 2 3 4\n1 2\n2 3\n";
const O2: &str = "vertices: 1 2\n";

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn domain_error(args: &[&str], prefix: &str) {
    let (code, _, err) = run(args);
    assert_eq!(code, 1, "{args:?}: {err}");
    assert!(err.starts_with(prefix), "{args:?}: {err}");
}

#[test]
fn basic_commands() {
    assert_eq!(ok(&["ternary", "--length", "6"]), "210201\n");
    assert_eq!(ok(&["thue-morse", "--bits", "8"]), "01101001\n");
    assert_eq!(ok(&["derive", "121323"]), P3);
    assert_eq!(ok(&["check", "121323", P3]), "represents: true\nsquare-free: true\nuniformity: 2\n");
    assert_eq!(ok(&["check", "1213"]), "square-free: true\nuniformity: none\n");
    assert_eq!(ok(&["desquare", "121212", K2]), "12\n");
    assert_eq!(ok(&["extend", "121323", P3, "--blocks", "1"]), "312132312\n");
    assert_eq!(ok(&["disconnected", K2_K1, "--word", "12", "--word", "3"]), "1323132\n");
    assert_eq!(ok(&["disconnected", P3_K1, "--word", "121323", "--short"]), "12132341234\n");
    assert_eq!(ok(&["empty-word", "4"]), "2131234321\n");
    assert_eq!(ok(&["squares", "14251136536542", "--first"]), "5 1 trivial\ncount: 1\n");
    assert!(ok(&["squares", "14251136536542"]).contains("7 365\n"));
    assert_eq!(ok(&["repnum", O2]), "k: 2\nwitness: 1122\n");
}

#[test]
fn enumeration_output() {
    let out = ok(&["enumerate-kn", "2"]);
    assert_eq!(out, "12\n21\n121\n212\ncount: 4\n");
    assert!(ok(&["enumerate-kn", "4"]).ends_with("count: 96\n"));
    assert!(ok(&["minwords", P3]).ends_with("count: 4\n"));
    let kuniform = ok(&["kuniform", P3, "2"]);
    assert!(kuniform.lines().all(|l| l.starts_with("count") || l.len() == 6));
}

#[test]
fn graph_and_word_files() {
    let dir = std::env::temp_dir().join(format!("wordrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("p3.txt");
    let word = dir.join("w.txt");
    std::fs::File::create(&graph).unwrap().write_all(b"# path\nvertices: 1 2 3\n1 2\n2 3\n").unwrap();
    std::fs::write(&word, "121323\n").unwrap();
    let out = ok(&["check", word.to_str().unwrap(), graph.to_str().unwrap()]);
    assert!(out.starts_with("represents: true"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn domain_errors_exit_with_one() {
    domain_error(&["empty-word", "2"], "NoSquareFreeRepresentation: O_2");
    domain_error(&["empty-word", "0"], "InvalidGraph");
    domain_error(&["desquare", "1122", O2], "NotConnected");
    domain_error(&["desquare", "1213", "vertices: 1 2 3\n1 2\n1 3\n2 3\n"], "DoesNotRepresent");
    domain_error(&["extend", "1212", K2], "CompleteGraphUnbounded");
    domain_error(&["extend", "1213", P3], "NotUniform");
    domain_error(&["extend", "121323", P3, "--blocks", "2"], "ExtensionHasSquare");
    domain_error(&["extend", "121323121323", P3], "NotSquareFree");
    domain_error(&["disconnected", K2], "ConstructionFailed");
    domain_error(&["disconnected", O2], "NoEdgedComponent");
    domain_error(&["disconnected", K2_K1, "--short"], "ComponentComplete");
    domain_error(&["enumerate-kn", "8"], "CapExceeded");
    domain_error(&["repnum", P3, "--max-k", "0"], "InvalidBudget");
    domain_error(&["minwords", P3, "--max-length", "2"], "BudgetExceeded");
    domain_error(&["kuniform", P3, "3", "--node-limit", "5"], "BudgetExceeded");
    domain_error(&["check", "", P3], "EmptyWord");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["nonsense"][..],
        &["ternary"],
        &["empty-word", "minus"],
        &["derive", "12#3"],
        &["check", "12", "vertices: 1 2\n1 9\n"],
        &["check", "12", "/no/such/graph/file"],
        &["disconnected", K2_K1, "--word", "45"],
    ] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}
