use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gaq_cli::run(std::iter::once("gaq").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gaq-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn malformed_input_exits_one() {
    let path = scratch("bad.alg", "basis 1 x\nmul x x = 1//2*x\n");
    let (code, _, err) = run(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = run(&["verify", "--builtin", "nonsense:1"]);
    assert_eq!(code, 1);
}

#[test]
fn failed_check_exits_two() {
    let (code, out, _) = run(&["quadric-check", "--builtin", "truncated:2:2"]);
    assert_eq!(code, 2, "{out}");
}

#[test]
fn quadric_check_prints_equation() {
    let (code, out, _) = run(&["quadric-check", "--builtin", "quadric:3"]);
    assert_eq!(code, 0);
    assert!(out.contains("equation\t2*y0*y4 - y1^2 - y2^2 - y3^2"), "{out}");
}

#[test]
fn builtin_list_names_every_family() {
    let (code, out, _) = run(&["builtin", "--list"]);
    assert_eq!(code, 0);
    for family in ["truncated", "ht-finite", "quadric", "r5", "remark1", "bn", "free-rowed"] {
        assert!(out.lines().any(|l| l.starts_with(&format!("{family}:"))), "{family}");
    }
}

#[test]
fn tsv_output_is_deterministic() {
    let args = ["modality", "--builtin", "truncated:2:3", "--seed", "5"];
    let (a, first, _) = run(&args);
    let (b, second, _) = run(&args);
    assert_eq!((a, b), (0, 0));
    assert_eq!(first, second);
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("gaq-cli-out-{}.tsv", std::process::id()));
    let (code, stdout, _) = run(&["census", "--builtin", "remark1:1", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, direct, _) = run(&["census", "--builtin", "remark1:1"]);
    assert_eq!(written, direct);
    std::fs::remove_file(path).ok();
}

#[test]
fn presentation_round_trips_through_algebra_file() {
    let pres = scratch("cusp.pres", "vars x y\nrel x^2 - y^3\nrel x*y\n");
    let (code, alg, _) = run(&["from-presentation", "--in", pres.to_str().unwrap()]);
    assert_eq!(code, 0, "{alg}");
    let path = scratch("cusp.alg", &alg);
    let (code, out, _) = run(&["verify", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let (_, from_alg, _) = run(&["iso-invariants", "--in", path.to_str().unwrap()]);
    let (_, from_pres, _) = run(&["iso-invariants", "--in", pres.to_str().unwrap()]);
    let fields = |s: &str| s.split_once('\t').map(|(_, rest)| rest.to_string());
    assert_eq!(fields(&from_alg), fields(&from_pres));
    assert!(from_alg.contains("hilbert (4,2,1,0)"), "{from_alg}");
}

#[test]
fn canonical_quadric_and_counterexample() {
    let (code, out, _) = run(&["canonical-quadric", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("basis 1 S1 S2 S1^2"), "{out}");
    let (code, out, _) = run(&["so-counterexample", "7"]);
    assert_eq!(code, 0, "{out}");
}
