//! End-to-end tests against the built binary: exit codes, report shape,
//! determinism, and the cross-command identities.

use std::io::Write;
use std::process::{Command, Output};

use fibkit_cli::format::{parse_curve_file, print_curve6, CurveFile};
use fibkit_core::genus6::{random_pointed_curve6, Placement, SurfacePoint};

fn fibkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("fibkit-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

const UNIT_LIMIT: &str = "curve5 v1\n\
quadric\n0 4 1\n1 3 1\n2 2 1\n\
quadric\n1 4 1\n2 3 1\n\
quadric\n2 4 1\n3 3 -1\n\
point 0 0 0 0 1\n";

const RATIO_CURVE: &str = "curve5 v1\n\
quadric\n0 4 1\n1 3 2\n2 2 4\n\
quadric\n1 4 1\n2 3 3\n\
quadric\n2 4 1\n3 3 -1\n\
point 0 0 0 0 1\n";

// a(1,2,2) = 0 with nonzero numerator: the blow-up route degenerates
const BN4_CURVE: &str = "curve5 v1\n\
quadric\n0 4 1\n1 3 1\n\
quadric\n1 4 1\n2 3 1\n\
quadric\n2 4 1\n3 3 -1\n\
point 0 0 0 0 1\n";

#[test]
fn validate_passes_on_valid_genus5_file() {
    let path = write_temp("valid.c5", UNIT_LIMIT);
    let out = fibkit(&["validate", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result pass"));
}

#[test]
fn float_literal_is_a_parse_error_with_position() {
    let path = write_temp("float.c5", &UNIT_LIMIT.replace("1 3 1", "1 3 0.5"));
    let out = fibkit(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse-error"), "{err}");
    assert!(err.contains("line 4 column 5"), "{err}");
    assert!(err.contains("0.5"), "{err}");
}

#[test]
fn collinear_base_points_surface_as_general_position_failure() {
    let file = "curve6 v1\n\
base 1 0 0\nbase 0 1 0\nbase 1 1 0\nbase 1 1 1\n\
sextic\n6 0 0 1\n\
point 1 2 3\n";
    let path = write_temp("collinear.c6", file);
    let out = fibkit(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("general-position-failure"), "{err}");
}

#[test]
fn phi5_both_routes_match_on_the_unit_limit_file() {
    let path = write_temp("unit.c5", UNIT_LIMIT);
    let out = fibkit(&["phi5", "--both", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("closed-form {R,C}|{E,T}"), "{text}");
    assert!(text.contains("match true"), "{text}");
    assert!(text.contains("detect.weierstrass true"), "{text}");
}

#[test]
fn phi5_reports_interior_lambda() {
    let path = write_temp("ratio.c5", RATIO_CURVE);
    let out = fibkit(&["phi5", "--closed-form", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("closed-form lambda=3/2"), "{text}");
}

#[test]
fn degenerate_blowup_exits_nonzero_with_step_name() {
    let path = write_temp("bn4.c5", BN4_CURVE);
    let out = fibkit(&["phi5", "--blowup", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degenerate-configuration"), "{err}");
    assert!(err.contains("second-blowup"), "{err}");
}

#[test]
fn trivial_subgroup_is_rejected() {
    let path = write_temp("unit2.c5", UNIT_LIMIT);
    let out = fibkit(&[
        "git",
        "--lambda",
        "0",
        "0",
        "0",
        "0",
        "0",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("invalid-one-ps"), "{err}");
}

#[test]
fn git_classification_and_cross_command_identity() {
    let path = write_temp("ratio2.c5", RATIO_CURVE);
    let out = fibkit(&[
        "git",
        "--linearization",
        "3",
        "2",
        "--lambda",
        "-2",
        "-1",
        "0",
        "1",
        "2",
        "--classify",
        "--flat-limit",
        "--rescale",
        path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("mu 0"), "{text}");
    assert!(
        text.contains("classification strictly-semistable"),
        "{text}"
    );
    // the rescale invariant equals the phi5 image of the same file
    assert!(text.contains("invariant lambda=3/2"), "{text}");
    // factor decomposition of mu under O(3,2)
    let point: i64 = grab(&text, "mu.point-factor").parse().unwrap();
    let net: i64 = grab(&text, "mu.net-factor").parse().unwrap();
    assert_eq!(3 * point + 2 * net, 0);
}

fn grab(text: &str, key: &str) -> String {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} ")))
        .unwrap_or_else(|| panic!("missing key {key} in {text}"))
        .to_string()
}

#[test]
fn pencil_chain_numbers() {
    let out = fibkit(&["divisors", "pencil", "8", "4", "5", "16"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for line in [
        "chi_tot 24",
        "delta_0 40",
        "K2_tot -12",
        "kappa 20",
        "lambda 5",
        "omega 1",
        "weierstrass-dot-pencil 10",
    ] {
        assert!(text.contains(line), "missing `{line}` in {text}");
    }
    // inconsistent surface data trips the divisibility guard
    let out = fibkit(&["divisors", "pencil", "9", "4", "5", "16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("non-integral-lambda"));
}

#[test]
fn classes_eval_pullback_and_logan() {
    let out = fibkit(&["divisors", "classes", "--eval", "W", "F1"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("value 120"));

    let out = fibkit(&["divisors", "classes", "--pullback", "120", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("class O(15,10)"), "{text}");
    assert!(text.contains("collinear-with-O(3,2) true"), "{text}");
    assert!(text.contains("ratio 5"), "{text}");

    let out = fibkit(&["divisors", "classes", "--logan", "0", "0", "120", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("consistent true"), "{text}");

    let out = fibkit(&["divisors", "classes", "--logan", "0", "0", "120", "11"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("consistent false"), "{text}");
    assert!(text.contains("discrepancy (0,1)"), "{text}");
}

#[test]
fn numerology_command() {
    for (args, alpha) in [
        (["5", "1", "5", "0,5"], "alpha 4"),
        (["5", "1", "4", "0,3"], "alpha 2"),
        (["5", "2", "6", "0,2,4"], "alpha 3"),
    ] {
        let out = fibkit(&["divisors", "numerology", args[0], args[1], args[2], args[3]]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains(alpha), "{text}");
        assert!(text.contains("is_divisor yes"), "{text}");
    }
}

#[test]
fn reports_are_deterministic() {
    let path = write_temp("det.c5", RATIO_CURVE);
    let a = fibkit(&["phi5", "--both", path.to_str().unwrap()]);
    let b = fibkit(&["phi5", "--both", path.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn echoed_normal_form_reparses_to_an_equal_curve() {
    let path = write_temp("echo.c5", RATIO_CURVE);
    let out = fibkit(&["phi5", "--closed-form", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let echoed: String = text
        .lines()
        .filter_map(|l| l.strip_prefix("normal-form "))
        .map(|l| format!("{l}\n"))
        .collect();
    let CurveFile::Genus5(reparsed) = parse_curve_file(&echoed).unwrap() else {
        panic!("expected a genus-5 record");
    };
    let CurveFile::Genus5(original) = parse_curve_file(RATIO_CURVE).unwrap() else {
        panic!();
    };
    // the input is already in normal form, so the echo equals the input
    assert!(reparsed.equivalent_to(&original));
}

#[test]
fn json_output_parses() {
    let path = write_temp("json.c5", RATIO_CURVE);
    let out = fibkit(&["--json", "phi5", "--both", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["match"], "true");
    assert_eq!(v["closed-form"], "lambda=3/2");
}

#[test]
fn g6_commands_and_membership_agreement() {
    // generate records through the library and check both commands
    for (seed, placement, expect_boundary) in [
        (0u64, Placement::Generic, false),
        (1, Placement::OnLine(0, 1), true),
        (2, Placement::OnLine(2, 3), true),
    ] {
        let curve = random_pointed_curve6(seed, placement);
        let SurfacePoint::Plane(p) = &curve.point else {
            panic!()
        };
        let record = print_curve6(curve.surface.base_points(), &curve.sextic, p);
        let path = write_temp(&format!("g6-{seed}.c6"), &record);

        let out = fibkit(&["g6", "d6", path.to_str().unwrap()]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let d6_text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(d6_text.contains("in_d6 true"), expect_boundary, "{d6_text}");

        let out = fibkit(&["g6", "phi6", path.to_str().unwrap()]);
        assert!(out.status.success());
        let phi6_text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(
            phi6_text.contains("boundary true"),
            expect_boundary,
            "{phi6_text}"
        );

        let out = fibkit(&["g6", "curves", path.to_str().unwrap()]);
        assert!(out.status.success());
        let curves_text = String::from_utf8(out.stdout).unwrap();
        assert!(curves_text.contains("count 10"));
        assert!(curves_text.contains("blow-down-sets 5"));
    }
}

#[test]
fn curve_file_round_trip_is_the_identity() {
    let CurveFile::Genus5(first) = parse_curve_file(RATIO_CURVE).unwrap() else {
        panic!();
    };
    let printed = fibkit_cli::format::print_curve5(&first);
    let CurveFile::Genus5(second) = parse_curve_file(&printed).unwrap() else {
        panic!();
    };
    assert!(first.equivalent_to(&second));
    assert_eq!(printed, fibkit_cli::format::print_curve5(&second));
}

#[test]
fn wrong_record_type_is_a_domain_error() {
    let curve = random_pointed_curve6(4, Placement::Generic);
    let SurfacePoint::Plane(p) = &curve.point else {
        panic!()
    };
    let record = print_curve6(curve.surface.base_points(), &curve.sextic, p);
    let path = write_temp("wrong-type.c6", &record);
    let out = fibkit(&["phi5", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("wrong-record-type"));
}
