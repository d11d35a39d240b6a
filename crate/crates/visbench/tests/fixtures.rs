//! The shipped fixture files mirror the compiled-in constants so external
//! tools can replay them. `regenerate` rewrites the files from the
//! constants; the sync tests fail when the two drift apart.
//!
//! Regenerate with:
//!
//! ```text
//! cargo test -p visbench --test fixtures -- --ignored regenerate
//! ```

use std::path::PathBuf;

use visbench::mcda::reference_table;
use visbench::measures::Pmf;
use visbench::scenarios::{
    abcd_scenario, good_bad_scenario, isosurface_pmf, london_pmf, mip_q, mip_qprime,
    LondonPmfSpec, UserScenario,
};

fn fixture_dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(sub)
}

fn scenario_pmfs(s: &UserScenario) -> Vec<(String, Pmf)> {
    let name = s.name.replace('-', "_");
    let mut out = vec![(format!("{name}_truth"), s.ground_truth.clone())];
    for (label, pmf) in &s.outputs {
        out.push((format!("{name}_{label}"), pmf.clone()));
    }
    for (label, pmf) in &s.users {
        out.push((format!("{name}_{}", label.to_lowercase()), pmf.clone()));
    }
    out
}

fn all_pmf_fixtures() -> Vec<(String, Pmf)> {
    let mut out = Vec::new();
    out.push(("mip_q".to_string(), mip_q()));
    out.push(("mip_qprime".to_string(), mip_qprime()));
    let labels: Vec<String> = mip_q().labels().to_vec();
    for (i, letter) in ["a", "b", "c", "d"].iter().enumerate() {
        out.push((
            format!("mip_p{letter}"),
            Pmf::one_hot_labeled(labels.clone(), i + 1).unwrap(),
        ));
    }
    out.push(("mip_f".to_string(), Pmf::one_hot_labeled(labels, 3).unwrap()));
    out.push(("isosurface".to_string(), isosurface_pmf()));
    out.push((
        "london_xi20".to_string(),
        london_pmf(&LondonPmfSpec::new(20).unwrap()).unwrap(),
    ));
    out.extend(scenario_pmfs(&good_bad_scenario()));
    out.extend(scenario_pmfs(&abcd_scenario()));
    out
}

const MANIFEST: &str = "# arteries depiction, answer B\n\
input=../pmf/mip_q.csv\n\
output=../pmf/mip_f.csv\n\
recon=../pmf/mip_pb.csv\n";

#[test]
#[ignore = "rewrites the shipped fixtures from the compiled-in constants"]
fn regenerate() {
    let pmf_dir = fixture_dir("pmf");
    std::fs::create_dir_all(&pmf_dir).unwrap();
    for (name, pmf) in all_pmf_fixtures() {
        pmf.write_csv(&pmf_dir.join(format!("{name}.csv"))).unwrap();
    }
    let mcda_dir = fixture_dir("mcda");
    std::fs::create_dir_all(&mcda_dir).unwrap();
    std::fs::write(mcda_dir.join("criteria.csv"), reference_table().to_csv()).unwrap();
    let benefit_dir = fixture_dir("benefit");
    std::fs::create_dir_all(&benefit_dir).unwrap();
    std::fs::write(benefit_dir.join("mip_b.manifest"), MANIFEST).unwrap();
}

#[test]
fn pmf_fixtures_match_constants() {
    for (name, pmf) in all_pmf_fixtures() {
        let path = fixture_dir("pmf").join(format!("{name}.csv"));
        let shipped = Pmf::read_csv(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(shipped, pmf, "{name}.csv is out of sync; regenerate fixtures");
        let mut rendered = String::new();
        pmf.to_csv_string(&mut rendered);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), rendered, "{name}.csv formatting drifted");
    }
}

#[test]
fn criteria_fixture_matches_builtin_table() {
    let path = fixture_dir("mcda").join("criteria.csv");
    let shipped = std::fs::read_to_string(&path).unwrap();
    assert_eq!(shipped, reference_table().to_csv());
    let parsed = visbench::mcda::CriteriaTable::read_csv(&path).unwrap();
    assert_eq!(parsed, reference_table());
}

#[test]
fn benefit_manifest_evaluates() {
    let path = fixture_dir("benefit").join("mip_b.manifest");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), MANIFEST);
    let case = visbench::benefit::TransformCase::read_manifest(&path).unwrap();
    let b = visbench::benefit::benefit_bounded(&case, &visbench::DivergenceSpec::js()).unwrap();
    assert!((b.benefit - 0.500).abs() < 1.5e-3);
}

#[test]
fn survey_fixture_round_trip_via_files() {
    let dir = fixture_dir("survey");
    let kcl = visbench::survey::parse_london_csv(&dir.join("london_kcl.csv")).unwrap();
    assert_eq!(kcl.len(), 12);
    let reparsed = visbench::survey::parse_london_reader(
        visbench::survey::london_to_csv(&kcl).as_bytes(),
        "round-trip",
    )
    .unwrap();
    assert_eq!(kcl, reparsed);
    let overrides = visbench::survey::Overrides::read_csv(&dir.join("overrides.csv")).unwrap();
    assert_eq!(overrides, visbench::survey::Overrides::reference());
}
