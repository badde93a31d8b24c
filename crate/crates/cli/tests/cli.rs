use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use weylalt::altcond::ClosedForm;
use weylalt::rootsys::Algebra;
use weylalt::Q;
use weylalt_cli::{run, run_with};

fn exe(args: &[&str]) -> (i32, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_weylalt")).args(args).output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

fn inproc(form: Option<&ClosedForm>, args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("weylalt").chain(args.iter().copied());
    let code = run_with(argv, form, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn golden(name: &str) -> Vec<u8> {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden").join(name);
    std::fs::read(p).unwrap()
}

/// A2 with T2 pushed down by 2, so the identity drops out at λ = 3ϖ1, μ = 0.
fn broken_a2() -> ClosedForm {
    let form = ClosedForm::standard(Algebra::A2);
    let mut t2 = form.condition("T2").unwrap().clone();
    t2.constant -= Q::from_integer(2);
    form.replace(t2).unwrap()
}

#[test]
fn info_reports() {
    let (code, out, _) = exe(&["info", "g2"]);
    assert_eq!(code, 0);
    assert!(out.contains("rho = 5 a1 + 3 a2"));
    let (_, out, _) = exe(&["info", "d2"]);
    assert!(out.contains("weyl group, order 4:"));
    assert_eq!(out.matches("length").count(), 4);
    let (code, _, err) = exe(&["info", "x9"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
}

#[test]
fn partition_values() {
    assert_eq!(exe(&["partition", "a2", "2", "3"]).1, "3\n");
    assert_eq!(exe(&["partition", "b2", "0", "0"]).1, "1\n");
    assert_eq!(exe(&["partition", "g2", "2", "1"]).1, "3\n");
    assert_eq!(exe(&["partition", "g2", "-1", "4"]).1, "0\n");
}

#[test]
fn mult_reports() {
    let (code, out, _) = exe(&["mult", "a2", "--lambda", "1,1", "--mu", "0,0", "--basis", "fund"]);
    assert_eq!(code, 0);
    assert!(out.contains("multiplicity = 2\n"));
    assert!(out.contains("set = {e"));
    let (_, out, _) = exe(&["mult", "g2", "--lambda", "0,0", "--mu", "0,0", "--basis", "root"]);
    assert!(out.contains("multiplicity = 1\n") && out.contains("set = {e}\n"));
    let (_, out, _) = exe(&["mult", "c2", "--lambda", "1,0", "--mu", "0,0", "--basis", "fund"]);
    assert!(out.contains("multiplicity = 0\n") && out.contains("set = {}\n"));
}

#[test]
fn altset_agrees() {
    let (code, out, _) = exe(&["altset", "a2", "--lambda", "3,0", "--mu", "0,0", "--basis", "fund"]);
    assert_eq!(code, 0);
    assert_eq!(out, "closed = {e, s2}\noracle = {e, s2}\n");
    let (code, out, _) = exe(&["altset", "d2", "--lambda", "-2,-2", "--mu", "0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains("case = {s2s1}"));
}

#[test]
fn altset_fault_injection() {
    let broken = broken_a2();
    let args = ["altset", "a2", "--lambda", "3,0", "--mu", "0,0", "--basis", "fund"];
    assert_eq!(inproc(None, &args).0, 0);
    let (code, out) = inproc(Some(&broken), &args);
    assert_eq!(code, 1);
    assert!(out.contains("closed = {s2}") && out.contains("MISMATCH"));
    // the override only applies to its own algebra
    assert_eq!(inproc(Some(&broken), &["altset", "b2", "--lambda", "0,0", "--mu", "0,0"]).0, 0);
}

#[test]
fn verify_fault_injection() {
    let (code, out) = inproc(Some(&broken_a2()), &["verify", "a2", "--lambda-window", "4", "--mu-max", "1"]);
    assert_eq!(code, 1);
    assert!(!out.starts_with("0 mismatches"));
}

#[test]
fn verify_sweeps() {
    let (code, out, _) = exe(&["verify", "b2", "--lambda-window", "15", "--mu-max", "4"]);
    assert_eq!((code, out.as_str()), (0, "0 mismatches / 14415 points\n"));
    let (code, out, _) = exe(&["verify", "d2", "--lambda-window", "15", "--mu-max", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("0 mismatches / "));
    let (code, out, _) = exe(&["verify", "c2", "--lambda-window", "0"]);
    assert_eq!((code, out.as_str()), (0, "0 mismatches / 0 points\n"));
}

#[test]
fn verify_verbose() {
    let (code, out) = inproc(None, &["verify", "d2", "--lambda-window", "1", "--mu-max", "0", "--verbose"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "lambda=-1,1 mu=0,0 closed={} oracle={}");
    assert!(lines.contains(&"lambda=0,0 mu=0,0 closed={e} oracle={e}"));
}

#[test]
fn diagram_csv_case_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2.csv");
    let p = path.to_str().unwrap();
    let (code, _, _) =
        exe(&["diagram", "b2", "--mu", "0,2", "--basis", "fund", "--window", "12", "--format", "csv", "--out", p]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let sets: BTreeSet<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).filter(|s| !s.is_empty()).collect();
    assert!(!sets.is_empty() && sets.len() <= 24, "{}", sets.len());
    assert_eq!(text.lines().count(), 1 + 25 * 25);
}

#[test]
fn diagram_svg_matches_golden() {
    let o = Command::new(env!("CARGO_BIN_EXE_weylalt"))
        .args(["diagram", "d2", "--mu", "0,0", "--window", "8", "--format", "svg"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(o.stdout, golden("d2_mu0_w8.svg"));
}

#[test]
fn diagram_g2_classify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.svg");
    let args = ["diagram", "g2", "--mu", "2,1", "--basis", "root", "--window", "12", "--format", "svg"];
    let (code, out, _) = exe(&[&args[..], &["--classify", "--out", path.to_str().unwrap()]].concat());
    assert_eq!((code, out.as_str()), (0, "twelve-star\n"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains("class=\"legend\"") && svg.contains("class=\"swatch\""));
    let (code, out, _) = exe(&["diagram", "g2", "--mu", "2,1", "--basis", "root", "--classify"]);
    assert_eq!((code, out.as_str()), (0, "twelve-star\n"));
}

#[test]
fn diagram_tikz_to_stdout() {
    let (code, out, _) = exe(&["diagram", "a2", "--window", "3", "--format", "tikz"]);
    assert_eq!(code, 0);
    assert!(out.contains("\\begin{tikzpicture}") && out.ends_with("\\end{tikzpicture}\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(exe(&[]).0, 2);
    assert_eq!(exe(&["mult", "a2", "--lambda", "1", "--mu", "0,0"]).0, 2);
    assert_eq!(exe(&["mult", "a2", "--mu", "0,0"]).0, 2);
    assert_eq!(exe(&["diagram", "a2", "--format", "png"]).0, 2);
    assert_eq!(exe(&["verify", "b2", "--lambda-window", "-1"]).0, 2);
    // outside the shape analysis: m odd for B2
    let (code, _, err) = exe(&["diagram", "b2", "--mu", "1,1", "--classify"]);
    assert_eq!(code, 2);
    assert!(err.contains("divisibility"));
    let (code, out, _) = exe(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn negative_coordinates() {
    let (code, out, _) = exe(&["altset", "b2", "--lambda", "-4,-6", "--mu", "0,0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("closed = {"));
}

#[test]
fn deterministic_output() {
    let args = ["diagram", "c2", "--mu", "2,1", "--window", "6", "--format", "tikz"];
    assert_eq!(exe(&args).1, exe(&args).1);
    let mut a = Vec::new();
    let mut b = Vec::new();
    assert_eq!(run(["weylalt", "info", "b2"], &mut a, &mut Vec::new()), 0);
    assert_eq!(run(["weylalt", "info", "b2"], &mut b, &mut Vec::new()), 0);
    assert_eq!(a, b);
}
