use std::process::Command;

use serde_json::Value;
use sheafwall::betti::{kronecker_poincare, DimVector};
use sheafwall::divisors::{nef_generators, wall_divisor};
use sheafwall::{ChernP2, QPoly, Rational};

fn sheafwall(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sheafwall"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = sheafwall(args);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

fn rational(v: &Value) -> Rational {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn nef_text_output() {
    assert_eq!(
        sheafwall(&["nef", "--degree", "6"]),
        (0, "A, 16A + L\n".into(), String::new())
    );
}

#[test]
fn betti_json_round_trips() {
    let v = json(&["betti", "--space", "N6", "--json"]);
    let coeffs: Vec<_> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    let expect = kronecker_poincare(3, DimVector::new(5, 4).unwrap()).unwrap();
    assert_eq!(&QPoly::new(coeffs), expect.poly());
    assert_eq!(v["degree"], 20);
    assert_eq!(v["euler"], expect.euler().to_string());

    let v = json(&["betti", "--space", "M6", "--json", "--at", "2"]);
    assert_eq!(v["euler"], "17064");
    assert_eq!(v["degree"], 37);
    assert_eq!(v["at"]["q"], "2");
}

#[test]
fn divisor_json_round_trips() {
    let v = json(&["nef", "--degree", "7", "--json"]);
    let (a, b) = nef_generators(7).unwrap();
    for (g, expect) in v["generators"].as_array().unwrap().iter().zip([a, b]) {
        assert_eq!(rational(&g["a"]), expect.a);
        assert_eq!(rational(&g["l"]), expect.l);
    }
    let v = json(&[
        "divisor",
        "--degree",
        "6",
        "--destabilizer",
        "1,1,-1/2",
        "--json",
    ]);
    let expect = wall_divisor(6, &"1,1,-1/2".parse::<ChernP2>().unwrap()).unwrap();
    assert_eq!((rational(&v["a"]), rational(&v["l"])), (expect.a, expect.l));
}

#[test]
fn walls_json_lists_table_one() {
    let v = json(&["walls", "--degree", "6", "--json"]);
    let actual: Vec<Rational> = v["walls"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|w| w["actual"] == true)
        .map(|w| rational(&w["radius_sq"]))
        .collect();
    let expect: Vec<Rational> = [64, 49, 46, 31, 28, 25, 16]
        .iter()
        .map(|&n| Rational::new(n, 9))
        .collect();
    assert_eq!(actual, expect);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    let first = sheafwall(&["walls", "--degree", "6", "--svg", a.to_str().unwrap()]);
    let second = sheafwall(&["walls", "--degree", "6", "--svg", b.to_str().unwrap()]);
    assert_eq!(first, second);
    let svg = std::fs::read(&a).unwrap();
    assert_eq!(svg, std::fs::read(&b).unwrap());
    assert_eq!(String::from_utf8(svg).unwrap().matches("<path").count(), 9);
    assert_eq!(
        sheafwall(&["betti", "--space", "M6"]),
        sheafwall(&["betti", "--space", "M6"])
    );
}

#[test]
fn exit_codes() {
    assert_eq!(sheafwall(&["nef"]).0, 1);
    assert_eq!(
        sheafwall(&["walls", "--degree", "6", "--svg", "/nonexistent/dir/x.svg"]).0,
        2
    );
    assert_eq!(sheafwall(&["betti", "--space", "kronecker:3:x:2"]).0, 1);
    let (code, _, stderr) = sheafwall(&["betti", "--space", "kronecker:3:2:2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not coprime"), "{stderr}");
    let (code, _, stderr) = sheafwall(&["divisor", "--degree", "6", "--destabilizer", "0,0,0"]);
    assert_eq!(code, 2, "{stderr}");
}
