use std::process::Command;

use ncsym::{NCExpansion, SymExpansion};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ncsym(args: &str) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ncsym"))
        .args(args.split_whitespace())
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn first_line(args: &str) -> String {
    let r = ncsym(args);
    assert_eq!(r.code, 0, "{args}: {}", r.stderr);
    r.stdout.lines().next().unwrap_or_default().to_string()
}

#[test]
fn expand() {
    assert_eq!(first_line("expand 2,1"), "h[2,1] - h[3]");
    assert_eq!(first_line("expand 3"), "h[3]");
    assert_eq!(first_line("expand 2,2/1"), "h[2,1] - h[3]");
}

#[test]
fn expand_nc() {
    assert_eq!(
        first_line("expand-nc --source 2,1"),
        "1/2*h[12/3] - 1/6*h[123]"
    );
    assert_eq!(
        first_line("expand-nc 321 2,2/1"),
        "1/2*h[12/3] - 1/6*h[123]"
    );
    assert_eq!(first_line("expand-nc 132 2,1"), "1/2*h[13/2] - 1/6*h[123]");
    assert_eq!(first_line("expand-nc id 2,1"), "1/2*h[12/3] - 1/6*h[123]");
}

#[test]
fn machine_format() {
    let r = ncsym("--format machine expand-nc --source 2,1");
    assert_eq!(r.stdout, "1/2\t12/3\n-1/6\t123\n");
    let r = ncsym("--format machine expand 2,1");
    assert_eq!(r.stdout, "1\t2,1\n-1\t3\n");
}

#[test]
fn printed_expansions_reparse() {
    for d in ["2,1", "3,3,1/2", "4,2,2/1,1", "3,2/1", "1,1,1,1"] {
        let sym = first_line(&format!("expand {d}"));
        let parsed: SymExpansion = sym.parse().unwrap();
        assert_eq!(parsed.to_string(), sym);
        let nc = first_line(&format!("expand-nc --source {d}"));
        let parsed: NCExpansion = nc.parse().unwrap();
        assert_eq!(parsed.to_string(), nc);
    }
}

#[test]
fn classify() {
    assert_eq!(first_line("classify id 2,1 321 2,2/1"), "EQUAL");
    assert_eq!(
        first_line("classify id 2,1 id 2,2/1"),
        "NOT-EQUAL (condition 3)"
    );
    let v = first_line("classify id 2,1 id 3");
    assert!(
        v == "NOT-EQUAL (condition 1)" || v == "NOT-EQUAL (condition 2)",
        "{v}"
    );
    assert_eq!(first_line("classify id 2,1 123 2,1"), "EQUAL (oracle)");
    assert_eq!(first_line("classify id 2,1 132 2,1"), "NOT-EQUAL (oracle)");
}

#[test]
fn classify_agrees_with_equal() {
    let cases = [
        "id 2,1 321 2,2/1",
        "231 2,1 id 2,2/1",
        "1324 3,1 id 4,2/1,1",
        "4321 3,1 id 3,3/2",
        "2143 3,1 id 3,3/2",
        "12345 3,2 id 4,2/1",
        "54321 2,2,1 id 3,2,1/1",
        "13254 4,2/1 id 3,3/1",
        "id 2,2 id 2,2",
    ];
    for c in cases {
        let verdict = first_line(&format!("classify {c}"));
        let oracle = first_line(&format!("equal {c}"));
        assert_eq!(verdict.starts_with("EQUAL"), oracle == "EQUAL", "{c}");
    }
}

#[test]
fn disconnected_is_refused() {
    let r = ncsym("classify id 2,1/1 id 3");
    assert_eq!(r.code, 1);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("connected"), "{}", r.stderr);
}

#[test]
fn overlap() {
    let r = ncsym("overlap 5,5,4,4,2/4,3,3,1 2");
    assert_eq!(r.stdout, "(1,1,1,1)\npartition: (1,1,1,1)\n");
    let r = ncsym("overlap 5,5,4,4,2/4,3,3,1 1");
    assert_eq!(r.stdout, "(1,2,1,3,2)\npartition: (3,2,2,1,1)\n");
    assert_eq!(ncsym("overlap 2,1 3").code, 1);
}

#[test]
fn rho() {
    let r = ncsym("rho id 2,1");
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "h[2,1] - h[3]\nMATCHES commutative: yes\n");
    assert_eq!(ncsym("rho 3142 3,3/2").code, 0);
}

#[test]
fn show() {
    assert_eq!(ncsym("show 2,1").stdout, "##\n#.\n");
    assert_eq!(ncsym("show 3,3/2").stdout, "..#\n###\n");
}

#[test]
fn verify() {
    for n in [1, 3, 5] {
        let r = ncsym(&format!("verify {n}"));
        assert_eq!(r.code, 0, "{}", r.stdout);
        assert!(r.stdout.contains("disagreements: 0"));
        assert!(r.stdout.ends_with("result: PASS\n"));
    }
    let r = ncsym("verify 4 --jobs 2 --format machine");
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
}

#[test]
fn verify_cap() {
    assert_eq!(ncsym("verify 7").code, 1);
    assert_eq!(ncsym("verify 0").code, 1);
    assert_eq!(ncsym("verify 9 --force").code, 1);
}

#[test]
fn exit_codes() {
    assert_eq!(ncsym("expand 2,x").code, 2);
    assert!(ncsym("expand 2,x").stderr.contains('x'));
    assert_eq!(ncsym("expand 1,2").code, 2);
    assert_eq!(ncsym("expand-nc 12 2,1").code, 1);
    assert_eq!(ncsym("expand-nc 1224 2,2").code, 2);
    assert_eq!(ncsym("classify id 2,1 id 2,1,1").code, 1);
}
