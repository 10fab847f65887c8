use std::process::{Command, Output};

fn thv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn bracket_in_both_modes() {
    let o = thv(&["bracket", "L(2)", "L(-2)", "--central"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-4*L(0) + 1/2*CL\n");
    let o = thv(&["bracket", "L(1)", "L(2)"]);
    assert_eq!(stdout(&o), "L(3)\n");
    let o = thv(&["bracket", "I(3)", "I(-3)", "--central"]);
    assert_eq!(stdout(&o), "-3*CI\n");
}

#[test]
fn parse_errors_exit_2_with_column() {
    let o = thv(&["bracket", "1/0*L(1)", "L(0)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(
        stderr(&o).contains("column 3: zero denominator"),
        "{}",
        stderr(&o)
    );
    let o = thv(&["bracket", "L(1)", "CL"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(thv(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn cobracket_forms() {
    let o = thv(&["cobracket", "--delta", "1", "0", "0", "L(3)"]);
    assert_eq!(stdout(&o), "3*I(0)⊗I(3) - 3*I(3)⊗I(0)\n");
    let o = thv(&["cobracket", "--r-a", "L(0)", "--r-b", "L(2)", "I(2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2*L(2)⊗I(2)"));
    let o = thv(&["cobracket", "--r-a", "L(0)", "--r-b", "L(0)", "L(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn cybe_exit_codes() {
    let o = thv(&["cybe", "--a", "L(0)", "--b", "L(2) + I(2)", "--expect-zero"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cybe=ZERO"));
    let o = thv(&["cybe", "--a", "L(0)", "--b", "L(2) + I(1)", "--expect-zero"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("- L(2)⊗I(1)⊗L(0)"));
}

#[test]
fn cybe_scan_rows() {
    let o = thv(&["cybe-scan", "--m", "2:2", "--n", "1:2", "--q", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "m=2 n=1 q=0 cybe=ZERO predicted=ZERO agree=YES\n\
         m=2 n=1 q=1 cybe=NONZERO predicted=NONZERO agree=YES\n\
         m=2 n=2 q=0 cybe=ZERO predicted=ZERO agree=YES\n\
         m=2 n=2 q=1 cybe=ZERO predicted=ZERO agree=YES\n"
    );
}

#[test]
fn dual_bracket_with_oracle() {
    let o = thv(&[
        "dual-bracket",
        "--family",
        "T43",
        "--params",
        "m=2,q=1",
        "--i",
        "V,1",
        "--j",
        "W,5",
        "--check-oracle",
        "--window",
        "12",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("closed=2*eV(4) - 3*eW(3)"));
    assert!(out.contains("agree=YES"));
    let o = thv(&[
        "dual-bracket",
        "--family",
        "T42",
        "--params",
        "m=0",
        "--i",
        "V,1",
        "--j",
        "V,1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    // oracle window too small for this pair
    let o = thv(&[
        "dual-bracket",
        "--family",
        "T42",
        "--params",
        "m=2",
        "--i",
        "V,1",
        "--j",
        "V,9",
        "--check-oracle",
        "--window",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dual_cobracket_listing() {
    let o = thv(&[
        "dual-cobracket",
        "--sector",
        "V",
        "--m",
        "2",
        "--window",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("eV(0)⊗eV(3) coeff=3 oracle=3"));
    assert!(out.trim_end().ends_with("mismatches=0"));
}

#[test]
fn verify_single_suite_and_failures() {
    let o = thv(&["verify", "--suite", "jacobi_centerless", "--window", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "check=jacobi_centerless window=4 params=- status=PASS defects=0\n"
    );
    let o = thv(&[
        "verify",
        "--suite",
        "cybe_classification",
        "--window",
        "5",
        "--param",
        "q=[0,1,-3,7/2]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with(
        "check=cybe_classification window=5 params=m:[-5..5];n:[-5..5];q:[0,1,-3,7/2] status=PASS"
    ));
    let o = thv(&["verify", "--suite", "jacobi_central", "--window", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("defect: input="))
            .count(),
        20
    );
    assert_eq!(thv(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(thv(&["verify", "--window", "3"]).status.code(), Some(2));
}

#[test]
fn verify_all_reports_every_check() {
    let o = thv(&["verify", "--window", "4"]);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("check=")).count(), 23);
    assert_eq!(
        o.status.code(),
        Some(if out.contains("status=FAIL") { 1 } else { 0 })
    );
}

#[test]
fn recur_evaluates_both_directions() {
    let o = thv(&[
        "recur", "--coeffs", "1,1", "--seed", "0:0,1", "--eval", "-2:5", "--rank", "8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("f(-2)=-1\nf(-1)=1\nf(0)=0\n"));
    assert!(out.contains("f(5)=5\n"));
    assert!(out.ends_with("shift_rank(N=8)=2\n"));
    let o = thv(&[
        "recur", "--coeffs", "1,0", "--seed", "0:0,1", "--eval", "0:1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
