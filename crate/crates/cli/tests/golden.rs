//! Golden JSON reports. Set `UPDATE_GOLDEN=1` to rewrite the files after
//! checking the new output by hand.

use std::path::PathBuf;
use std::process::Command;

fn germs(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_germs")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().expect("exit code"))
}

fn golden(name: &str, args: &[&str], exit: i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (got, code) = germs(&full);
    assert_eq!(code, exit, "{name}: exit code\n{got}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).expect("write golden file");
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name}: report differs from {}", path.display());
    let (again, _) = germs(&full);
    assert_eq!(again, got, "{name}: output is not deterministic");
}

#[test]
fn minimal_form_m36_k4() {
    golden("minimal_form_36_4", &["minimal-form", "--m", "36", "--k", "4"], 0);
}

#[test]
fn slice_of_drop_germ() {
    golden("slice_drop_germ", &["slice", "--germ", "y^16+x*y^13|y^22+x*y^19+x^7*y"], 0);
}

#[test]
fn unfold_sextic_family() {
    golden("unfold_sextic", &["unfold", "--germ", "y^4|x*y^5+x^5*y+y^6", "--delta3", "t*y^7"], 0);
}

#[test]
fn counterexample_drop_germ() {
    golden("counterexample_drop_germ", &["counterexample", "--germ", "y^16+x*y^15|y^18+x*y^17+x^17*y"], 0);
}

#[test]
fn exponents_branch() {
    golden("exponents_8_12_14_15", &["exponents", "--branch", "8:u^12+u^14+u^15"], 0);
}

#[test]
fn dpoints_cross_cap() {
    golden("dpoints_cross_cap", &["dpoints", "--germ", "y^2|y^3+x*y"], 0);
}

#[test]
fn syntax_error_report() {
    golden("syntax_error", &["exponents", "--branch", "8:u^^2"], 2);
}

#[test]
fn verify_tables_report() {
    golden("verify_tables", &["verify-tables"], 0);
}
