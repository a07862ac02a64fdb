//! Campaign-level properties: orbit reduction soundness, determinism and
//! the artifact layout.

use std::fs;
use std::path::Path;

use lcdforge::campaigns::{
    campaign_p11, campaign_p17, campaign_p7, run_all, CampaignOptions, CampaignReport, CampaignSelection,
};
use lcdforge::BinaryCode;

const ON: CampaignOptions = CampaignOptions { orbit_reduce: true };
const OFF: CampaignOptions = CampaignOptions { orbit_reduce: false };

/// Everything that must not depend on orbit reduction.
fn summary(r: &CampaignReport) -> Vec<(String, usize, usize, usize, Option<usize>, Vec<String>)> {
    r.stages
        .iter()
        .map(|s| {
            let mut wes: Vec<String> = s
                .codes
                .iter()
                .map(|c| format!("{}|{}", c.weight_enumerator_text, c.aut_order))
                .collect();
            wes.sort();
            (s.name.clone(), s.lcd_count, s.survivor_count, s.inequivalent_count, s.max_lcd_distance, wes)
        })
        .collect()
}

#[test]
fn orbit_reduction_is_sound_p7() {
    for f in [0, 1] {
        assert_eq!(summary(&campaign_p7(f, ON).unwrap()), summary(&campaign_p7(f, OFF).unwrap()));
    }
}

#[test]
fn orbit_reduction_is_sound_p17() {
    assert_eq!(summary(&campaign_p17(ON).unwrap()), summary(&campaign_p17(OFF).unwrap()));
}

#[test]
fn orbit_reduction_is_sound_p11() {
    assert_eq!(summary(&campaign_p11(ON).unwrap()), summary(&campaign_p11(OFF).unwrap()));
}

#[test]
fn every_classified_code_passes_the_triangle() {
    let r = campaign_p17(ON).unwrap();
    for s in &r.stages {
        for c in &s.codes {
            assert!(c.is_lcd && c.structure_agrees && c.module_check_agrees, "{} {}", s.name, c.label);
            assert!(c.sigma_in_aut && c.duality_transfer, "{} {}", s.name, c.label);
        }
    }
    let k1k2 = r.stage("p17-k1k2").unwrap();
    assert!(k1k2.codes.iter().all(|c| c.k == 16 && c.k_j == vec![1, 1]));
}

#[test]
fn p7_survivors_satisfy_paired_dimension_corollary() {
    let r = campaign_p7(0, ON).unwrap();
    let s = r.stage("p7-f0").unwrap();
    assert!(s.codes.iter().all(|c| c.paired_dims_equal && c.k_j[0] == c.k_j[1]));
    assert_eq!(s.checks["paired_dims_equal"], serde_json::json!(true));
}

fn read_dir_sorted(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), fs::read(e.path()).unwrap())
        })
        .collect();
    out.sort();
    out
}

#[test]
fn artifacts_are_deterministic_and_scoped() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path();
    let reports = run_all(out, CampaignSelection::P17, ON).unwrap();
    let first = read_dir_sorted(&out.join("p17"));

    // One file per classified code meeting its target, readable back.
    let expected: usize = reports
        .iter()
        .flat_map(|r| r.stages.iter())
        .flat_map(|s| s.codes.iter())
        .filter(|c| c.meets_target)
        .count();
    assert_eq!(first.len(), expected + 1);
    for r in &reports {
        for s in &r.stages {
            for c in s.codes.iter().filter(|c| c.meets_target) {
                let text = fs::read_to_string(out.join("p17").join(c.file.as_ref().unwrap())).unwrap();
                let code = BinaryCode::from_text(&text).unwrap();
                assert_eq!(code, c.code);
                assert_eq!(code.weight_enumerator().unwrap(), c.weight_enumerator);
            }
        }
    }

    // Sentinel in another campaign directory survives a scoped rerun.
    fs::create_dir_all(out.join("p11")).unwrap();
    fs::write(out.join("p11").join("sentinel"), b"x").unwrap();
    run_all(out, CampaignSelection::P17, ON).unwrap();
    assert_eq!(read_dir_sorted(&out.join("p17")), first);
    assert_eq!(read_dir_sorted(&out.join("p11")), vec![("sentinel".to_string(), b"x".to_vec())]);
}
