use std::io::Write;
use std::process::{Command, Output};

fn nilflux(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilflux"))
        .args(args)
        .env("NILFLUX_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn scenario(src: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

fn verify(src: &str, extra: &[&str]) -> (String, String, i32) {
    let f = scenario(src);
    let mut args = vec!["verify", f.path().to_str().unwrap()];
    args.extend(extra);
    let out = nilflux(&args);
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn h3_theorems_all_pass() {
    let (out, _, code) = verify("preset=h3 checks=theorems", &[]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(lines.len(), 4, "{out}");
    for (line, id) in lines.iter().zip(["T5.1a", "T5.1b", "T5.2a", "T5.2b"]) {
        assert!(line.starts_with("pass"), "{line}");
        assert!(line.contains(id), "{line}");
    }
}

#[test]
fn iwasawa_abelian_anomaly_has_negative_alpha() {
    let (out, _, code) = verify(
        "preset = iwasawa\nconnection = plus\ninstanton = abelian\nchecks = anomaly\n",
        &[],
    );
    assert_eq!(code, 1);
    assert!(out.starts_with("invalid"), "{out}");
    assert!(out.contains("alpha'=-8*t^2"), "{out}");
}

#[test]
fn torus_is_balanced() {
    let (out, _, code) = verify("preset=torus checks=balanced,integrable", &[]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().all(|l| l.starts_with("pass")), "{out}");
}

#[test]
fn custom_structure_equations() {
    let (out, _, code) = verify("structure = (0, 0, 0, 0, 12, 13)\nchecks = integrable\n", &[]);
    assert_eq!(code, 1, "{out}");
    assert!(out.starts_with("fail"), "{out}");
}

#[test]
fn records_format_is_tab_separated() {
    let (out, _, code) = verify("preset=h3 checks=theorems", &["--format=records"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        assert!(line.starts_with("name="), "{line}");
        assert!(line.contains("\tstatus=pass\t"), "{line}");
    }
}

#[test]
fn errors_exit_with_usage_code() {
    let (_, err, code) = verify("preset=h3\nchecks=balanced, wobble\n", &[]);
    assert_eq!(code, 2);
    assert!(err.contains("scenario line 2"), "{err}");

    let (_, err, code) = verify("preset=nowhere checks=balanced", &[]);
    assert_eq!(code, 2);
    assert!(err.contains("nowhere"), "{err}");

    // the sign of alpha' depends on t
    let (_, err, code) = verify("preset=h3 checks=anomaly", &[]);
    assert_eq!(code, 2);
    assert!(err.contains("`t`"), "{err}");

    let out = nilflux(&["verify", "/nonexistent/scenario"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bound_parameters_settle_the_sign() {
    let (out, _, code) = verify("preset=h3 param=t=1 checks=anomaly", &[]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("valid"), "{out}");
}

#[test]
fn reproduction_suite_matches_expectations() {
    let out = nilflux(&["reproduce-paper"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    let summary = text.lines().last().unwrap();
    assert!(summary.ends_with(" 0 unexpected"), "{summary}");
    assert!(!text.lines().any(|l| l.starts_with("BAD")));
}

#[test]
fn reproduction_suite_restricted_to_one_preset() {
    let out = nilflux(&["reproduce-paper", "--only=h19minus", "--format=records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("name=h19minus:")));
    for id in ["T8.2i", "T8.2ii", "L8.1", "instanton-family"] {
        assert!(text.contains(&format!("name=h19minus:{id}\t")), "{id}");
    }
    assert!(text.contains("alpha_prime=2"));

    let out = nilflux(&["reproduce-paper", "--only=h99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn p1_of_bismut_connection() {
    let out = nilflux(&["p1", "--preset", "h3", "--connection", "plus", "--param", "t=1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "8*pi^2*p1(h3, plus) = -4*e1234\n");

    let out = nilflux(&["p1", "--preset", "h3", "--connection", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    let a = nilflux(&["reproduce-paper", "--format=records"]);
    let b = nilflux(&["reproduce-paper", "--format=records"]);
    assert_eq!(a.stdout, b.stdout);
    let (x, _, _) = verify("preset=h2h4h5 param=t=1 param=b=0 connection=lc,plus checks=eom", &[]);
    let (y, _, _) = verify("preset=h2h4h5 param=t=1 param=b=0 connection=lc,plus checks=eom", &[]);
    assert_eq!(x, y);
}

#[test]
fn anomaly_and_eom_share_one_anomaly_report() {
    let src = "preset = h3\nparam = t=1\ninstanton = abelian\nchecks = balanced, anomaly, eom\n";
    let (out, _, code) = verify(src, &["--format=records"]);
    assert_eq!(code, 0, "{out}");
    let names: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(
        names,
        [
            "name=balanced",
            "name=anomaly-plus/abelian",
            "name=plus/abelian: eom (i)",
            "name=plus/abelian: eom (ii)",
            "name=plus/abelian: eom (iii)",
            "name=plus/abelian: gravitino identity",
        ]
    );
}
