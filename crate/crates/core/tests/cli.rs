use std::path::PathBuf;
use std::process::{Command, Output};

use ropebound_core::bounds::BoundsCertificate;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ropebound"));
    c.env_remove("ROPEBOUND_CAP").env_remove("ROPEBOUND_SEED");
    c
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ropebound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn bounds_summary_for_trefoil() {
    let o = bin().arg("bounds").arg(fixture("trefoil24.lat")).output().unwrap();
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("B0=2  s(K')="), "{s}");
    assert!(s.trim_end().ends_with("L=24  L(K) > 1/7"), "{s}");
}

#[test]
fn structured_certificate_round_trips() {
    let o = bin().args(["bounds", "--format", "structured"]).arg(fixture("figure8_30.lat")).output().unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    let cert = BoundsCertificate::from_toml(&text).unwrap();
    assert!(cert.recheck().is_empty());
    assert_eq!(cert.to_toml().unwrap(), text);
    assert_eq!(cert.b0(), 3);
}

#[test]
fn homfly_of_unknot_file() {
    let p = scratch("unknot.pd", "PD[]; loops=1\n");
    let o = bin().arg("homfly").arg(&p).output().unwrap();
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn family_torus2_reports_braid_index() {
    let o = bin().args(["family", "torus2", "--n", "2"]).output().unwrap();
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("PD["));
    assert!(s.contains("braid_index_formula=3"));
    let spec = bin().args(["family", "pretzel(1,1,2)"]).output().unwrap();
    assert!(stdout(&spec).contains("braid_index_formula=6"));
}

#[test]
fn orientation_flag_reaches_the_diagram() {
    // Hopf link: reversing one component turns both crossings negative
    let p = scratch("hopf.pd", "PD[X[4,1,3,2], X[2,3,1,4]]\n");
    let fwd = bin().arg("homfly").arg(&p).output().unwrap();
    let rev = bin().args(["homfly", "--orientation", "01"]).arg(&p).output().unwrap();
    assert_ne!(stdout(&fwd), stdout(&rev));
    let s = bin().args(["seifert", "--orientation", "01"]).arg(&p).output().unwrap();
    assert_eq!(stdout(&s), "2\n");
    let bad = bin().args(["seifert", "--orientation", "10"]).arg(&p).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let short = bin().args(["seifert", "--orientation", "0"]).arg(&p).output().unwrap();
    assert_eq!(short.status.code(), Some(1));
}

#[test]
fn user_errors_exit_one() {
    let missing = bin().args(["homfly", "/nonexistent/file.pd"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));
    assert!(!missing.stderr.is_empty());
    let garbage = scratch("garbage.lat", "0 0 zero\n");
    let o = bin().arg("validate").arg(&garbage).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let broken = scratch("broken.lat", "0 0 0\n2 0 0\n2 1 0\n0 1 0\n");
    let o = bin().arg("validate").arg(&broken).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cap_flag_beats_environment() {
    let f = fixture("trefoil24.lat");
    let env_only = bin().env("ROPEBOUND_CAP", "2").arg("bounds").arg(&f).output().unwrap();
    assert_eq!(env_only.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&env_only.stderr).contains("cap"));
    let both = bin().env("ROPEBOUND_CAP", "2").args(["bounds", "--cap", "24"]).arg(&f).output().unwrap();
    assert!(both.status.success());
    let zero = bin().args(["bounds", "--cap", "0"]).arg(&f).output().unwrap();
    assert!(!zero.status.success());
}

#[test]
fn project_lists_cord_diagrams() {
    let o = bin().arg("project").arg(fixture("knot51_34.lat")).output().unwrap();
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("PD["));
    assert!(s.contains("\ncolumn "));
    assert!(s.contains("boundary "));
}

#[test]
fn render_is_well_formed_svg() {
    for name in ["trefoil24.lat", "figure8_30.lat", "knot51_34.lat"] {
        for extra in [&[][..], &["--rewriting"][..]] {
            let o = bin().arg("render").args(extra).arg(fixture(name)).output().unwrap();
            assert!(o.status.success(), "{name} {extra:?}");
            let text = stdout(&o);
            let doc = roxmltree::Document::parse(&text).unwrap();
            assert_eq!(doc.root_element().tag_name().name(), "svg");
        }
    }
    let p = scratch("trefoil.pd", "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]\n");
    let o = bin().arg("render").arg(&p).output().unwrap();
    roxmltree::Document::parse(&stdout(&o)).unwrap();
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ropebound-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let target = dir.join("cert.toml");
    let o = bin()
        .args(["bounds", "--format", "structured", "--out"])
        .arg(&target)
        .arg(fixture("trefoil24.lat"))
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let cert = BoundsCertificate::from_toml(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(cert.length, 24);
}
