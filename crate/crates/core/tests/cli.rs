use std::path::PathBuf;
use std::process::Command;

use nbhd_perfect::cli::{run, RunReport};
use nbhd_perfect::graph::{parse_text, write_text};
use nbhd_perfect::optimal::parse_certificates;
use nbhd_perfect::FamilySpec;
use proptest::prelude::*;

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nbhd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn graph_file(name: &str, spec: &str) -> PathBuf {
    let g = FamilySpec::parse(spec, None).unwrap().generate().unwrap();
    temp_file(name, &write_text(&g, &[]))
}

fn nbhd(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_nbhd")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn recognize_c5() {
    let p = graph_file("c5.txt", "cycle(5)");
    let (code, out, _) = nbhd(&["recognize", "--in", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("P4-tidy, not neighborhood-perfect, witness C5"), "{out}");
}

#[test]
fn sets_on_starfish_round_trip() {
    let text = write_text(&FamilySpec::starfish(6).generate().unwrap(), &[]);
    let p = temp_file("s6.txt", &text);
    let (code, out, _) = nbhd(&["sets", "--in", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let body = out.strip_prefix("class P4-tidy\n").unwrap();
    let lists = parse_certificates(body).unwrap();
    assert_eq!((lists.a_n.len(), lists.r_n.len()), (6, 6));
    lists.validate(&parse_text(&text).unwrap()).unwrap();
}

#[test]
fn oracle_guard() {
    let p = graph_file("p13.txt", "path(13)");
    let (code, _, err) = nbhd(&["oracle", "--param", "pn", "--in", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("limit is 12"), "{err}");
    let (code, out, err) = nbhd(&["oracle", "--param", "pn", "--max-n", "13", "--in", p.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "pn 6\n"));
    assert!(err.starts_with("warning:"));
}

#[test]
fn unsupported_class_exits_one() {
    let p = graph_file("c6.txt", "cycle(6)");
    assert_eq!(nbhd(&["params", "--in", p.to_str().unwrap()]).0, 1);
}

#[test]
fn json_reports_round_trip() {
    let p = graph_file("fat.txt", "fat(starfish(3),4,2k1)");
    for cmd in ["recognize", "sets", "params"] {
        let o = run(["nbhd", cmd, "--json", "--in", p.to_str().unwrap()]);
        assert_eq!(o.code, 0);
        let r: RunReport = serde_json::from_str(&o.stdout).unwrap();
        let again = serde_json::to_string_pretty(&r).unwrap() + "\n";
        assert_eq!(again, o.stdout);
        if let Some(l) = &r.certificates {
            l.validate(&parse_text(&std::fs::read_to_string(&p).unwrap()).unwrap()).unwrap();
        }
    }
}

#[test]
fn generate_json_and_reduce() {
    let o = run(["nbhd", "generate", "path(4)", "--format", "json"]);
    assert_eq!(o.code, 0);
    let g = nbhd_perfect::graph::parse_json(&o.stdout).unwrap();
    assert_eq!((g.n(), g.m()), (4, 3));
    let p = graph_file("k3.txt", "complete(3)");
    let o = run(["nbhd", "reduce", "--kind", "alpha", "--in", p.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert_eq!(parse_text(&o.stdout).unwrap().n(), 3 + 3 + 3);
    let e = graph_file("e3.txt", "edgeless(3)");
    assert_eq!(run(["nbhd", "reduce", "--kind", "vc", "--in", e.to_str().unwrap()]).code, 2);
}

#[test]
fn selftest_and_bench() {
    let o = run(["nbhd", "selftest", "--max-n", "4"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("n 4: 64 class members of 64 graphs"));
    let o = run(["nbhd", "bench", "--seed", "2", "--start", "500", "--steps", "2"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn malformed_input_never_panics(text in "[pe0-9 \n-]{0,40}", json in any::<bool>()) {
        let p = temp_file("fuzz.txt", &text);
        let format = if json { "json" } else { "edge" };
        for cmd in ["recognize", "sets", "params"] {
            let o = run(["nbhd", cmd, "--format", format, "--in", p.to_str().unwrap()]);
            prop_assert!([0, 1, 2].contains(&o.code));
        }
    }
}
