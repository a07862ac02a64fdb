//! Classification campaigns for `p = 7, 11, 17`.
//!
//! Every stage follows the same pipeline: enumerate decomposition candidates
//! in lexicographic order of their parameters, optionally merge candidates
//! lying in one orbit of the transformation group, assemble and filter the
//! binary codes in parallel, then classify the survivors up to permutation
//! equivalence in candidate order, so each class is labelled by its earliest
//! candidate.

mod p11;
mod p17;
mod p7;

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclotomic::{Factorization, RingPoly};
use crate::decomposition::{decompose, pi_project, ModuleCode, SigmaPermutation};
use crate::equivalence::{
    automorphism_group_order, orbit_reduce, CandidateOrbit, Classifier, ModuleTuple, OrbitGroup,
};
use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BitVector, WeightEnumerator};
use crate::lcd::{hermitian_dual, is_lcd, k1_equals_k2_check, module_lcd_check, verdict_for};

pub use p11::campaign_p11;
pub use p17::campaign_p17;
pub use p7::{campaign_p7, campaign_p7_all};

#[derive(Clone, Copy, Debug)]
pub struct CampaignOptions {
    pub orbit_reduce: bool,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions { orbit_reduce: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Target {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

/// Full analysis of one classified code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeEntry {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub meets_target: bool,
    pub weight_enumerator: WeightEnumerator,
    pub weight_enumerator_text: String,
    pub aut_order: u128,
    pub k_pi: usize,
    pub k_j: Vec<usize>,
    /// Number of candidates equivalent to this code.
    pub class_size: usize,
    pub is_lcd: bool,
    /// The structural LCD verdict (via `C_π` and the module hulls) agrees.
    pub structure_agrees: bool,
    /// The module criterion stated with the components of `C^⊥` agrees.
    pub module_check_agrees: bool,
    /// `π(F_σ(C^⊥)) = C_π^⊥` and the Hermitian dual of each component equals
    /// the dual code's component over the partner ideal.
    pub duality_transfer: bool,
    pub sigma_in_aut: bool,
    /// Paired ideals carry components of equal dimension.
    pub paired_dims_equal: bool,
    pub generator: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip)]
    pub code: BinaryCode,
}

impl CodeEntry {
    pub fn consistent(&self) -> bool {
        self.structure_agrees && self.module_check_agrees && self.duality_transfer && self.sigma_in_aut
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageReport {
    pub name: String,
    pub p: u32,
    pub c: usize,
    pub f: usize,
    pub target: Target,
    pub candidate_count: usize,
    pub orbit_count: usize,
    /// Candidates whose code is LCD.
    pub lcd_count: usize,
    /// Candidates whose code is LCD and meets the distance target.
    pub survivor_count: usize,
    /// Largest minimum distance among LCD candidates.
    pub max_lcd_distance: Option<usize>,
    pub inequivalent_count: usize,
    pub survivors: Vec<String>,
    pub codes: Vec<CodeEntry>,
    pub checks: BTreeMap<String, serde_json::Value>,
}

impl StageReport {
    pub fn consistent(&self) -> bool {
        self.codes.iter().all(CodeEntry::consistent)
    }

    pub fn code_by_label(&self, label: &str) -> Option<&CodeEntry> {
        self.codes.iter().find(|c| c.label == label)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub stages: Vec<StageReport>,
}

impl CampaignReport {
    pub fn stage(&self, name: &str) -> Option<&StageReport> {
        self.stages.iter().find(|s| s.name == name)
    }

    pub fn consistent(&self) -> bool {
        self.stages.iter().all(StageReport::consistent)
    }
}

pub(crate) struct Candidate {
    pub label: String,
    pub tuple: ModuleTuple,
}

pub(crate) struct StageSpec<'a> {
    pub name: &'a str,
    pub sigma: SigmaPermutation,
    pub fact: &'a Factorization,
    pub target: Target,
    /// Classify every LCD candidate, not only those meeting the target.
    pub classify_all_lcd: bool,
    pub orbit_reduce: bool,
}

/// A classified code together with the candidate that represents it.
pub(crate) struct ClassRep {
    pub label: String,
    pub tuple: ModuleTuple,
    pub code: BinaryCode,
    /// Indices of all candidates in the class.
    pub members: Vec<usize>,
}

pub(crate) struct StageOutcome {
    pub report: StageReport,
    pub classes: Vec<ClassRep>,
    /// Indices of candidates meeting the target.
    pub survivors: Vec<usize>,
}

struct Evaluation {
    code: BinaryCode,
    lcd: bool,
    d: Option<usize>,
}

pub(crate) fn run_stage(spec: &StageSpec<'_>, candidates: &[Candidate]) -> Result<StageOutcome> {
    let start = Instant::now();
    let orbits: Vec<CandidateOrbit> = if spec.orbit_reduce {
        let tuples: Vec<ModuleTuple> = candidates.iter().map(|c| c.tuple.clone()).collect();
        orbit_reduce(&tuples, &OrbitGroup::new(spec.fact, spec.sigma))
    } else {
        (0..candidates.len())
            .map(|i| CandidateOrbit { representative: i, members: vec![i], orbit_size: 1 })
            .collect()
    };
    let evaluations: Vec<Evaluation> = orbits
        .par_iter()
        .map(|o| {
            let code = candidates[o.representative].tuple.assemble(&spec.sigma, spec.fact)?;
            let lcd = is_lcd(&code);
            let d = if lcd { code.min_distance()? } else { None };
            Ok(Evaluation { code, lcd, d })
        })
        .collect::<Result<_>>()?;

    let meets = |e: &Evaluation| e.lcd && e.d.map_or(false, |d| d >= spec.target.d);
    let mut lcd_count = 0;
    let mut survivors = Vec::new();
    let mut max_lcd_distance = None;
    for (o, e) in orbits.iter().zip(&evaluations) {
        if e.lcd {
            lcd_count += o.members.len();
            max_lcd_distance = max_lcd_distance.max(e.d);
        }
        if meets(e) {
            survivors.extend_from_slice(&o.members);
        }
    }
    survivors.sort_unstable();

    let mut classifier = Classifier::new();
    let mut classes: Vec<ClassRep> = Vec::new();
    for (o, e) in orbits.iter().zip(&evaluations) {
        if !(meets(e) || (spec.classify_all_lcd && e.lcd)) {
            continue;
        }
        let (idx, fresh) = classifier.insert(&e.code)?;
        if fresh {
            let rep = &candidates[o.representative];
            classes.push(ClassRep {
                label: rep.label.clone(),
                tuple: rep.tuple.clone(),
                code: e.code.clone(),
                members: Vec::new(),
            });
        }
        classes[idx].members.extend_from_slice(&o.members);
    }
    for class in classes.iter_mut() {
        class.members.sort_unstable();
    }

    let codes: Vec<CodeEntry> = classes
        .par_iter()
        .map(|cl| {
            let mut entry = analyze_code(&cl.code, &spec.sigma, spec.fact, &cl.label)?;
            entry.class_size = cl.members.len();
            entry.meets_target = entry.is_lcd && entry.d.map_or(false, |d| d >= spec.target.d);
            Ok(entry)
        })
        .collect::<Result<_>>()?;

    log::info!(
        "stage {}: {} candidates, {} orbits, {} lcd, {} survivors, {} classes in {:.2?}",
        spec.name,
        candidates.len(),
        orbits.len(),
        lcd_count,
        survivors.len(),
        classes.len(),
        start.elapsed()
    );
    let report = StageReport {
        name: spec.name.to_string(),
        p: spec.sigma.p(),
        c: spec.sigma.c(),
        f: spec.sigma.f(),
        target: spec.target,
        candidate_count: candidates.len(),
        orbit_count: orbits.len(),
        lcd_count,
        survivor_count: survivors.len(),
        max_lcd_distance,
        inequivalent_count: classes.len(),
        survivors: survivors.iter().map(|&i| candidates[i].label.clone()).collect(),
        codes,
        checks: BTreeMap::new(),
    };
    Ok(StageOutcome { report, classes, survivors })
}

/// Everything the reports record about one code.
pub fn analyze_code(
    code: &BinaryCode,
    sigma: &SigmaPermutation,
    fact: &Factorization,
    label: &str,
) -> Result<CodeEntry> {
    let we = code.weight_enumerator()?;
    let lcd = is_lcd(code);
    let d = decompose(code, sigma, fact)?;
    let verdict = verdict_for(&d, fact);
    let dual = decompose(&code.dual(), sigma, fact)?;
    let transfer = pi_project(&dual.fixed, sigma)? == d.c_pi.dual()
        && d.modules.iter().all(|mj| {
            let partner = fact.ideals[mj.ideal()].partner;
            dual.modules
                .iter()
                .find(|m| m.ideal() == partner)
                .map_or(false, |m| *m == hermitian_dual(mj, fact))
        });
    Ok(CodeEntry {
        label: label.to_string(),
        n: code.n(),
        k: code.k(),
        d: we.min_distance(),
        meets_target: false,
        weight_enumerator_text: we.to_string(),
        weight_enumerator: we,
        aut_order: automorphism_group_order(code)?,
        k_pi: d.k_pi(),
        k_j: d.module_dims(),
        class_size: 1,
        is_lcd: lcd,
        structure_agrees: verdict.is_lcd == lcd,
        module_check_agrees: module_lcd_check(&d.modules, &dual.modules, fact) == lcd,
        duality_transfer: transfer,
        sigma_in_aut: sigma.is_automorphism(code),
        paired_dims_equal: k1_equals_k2_check(&d, fact),
        generator: code.generator().iter().map(BitVector::to_string).collect(),
        file: None,
        code: code.clone(),
    })
}

/// Checks the MacWilliams identity on `code` by enumerating both the code
/// and its dual (the dual may exceed the default enumeration cap).
pub fn macwilliams_check(code: &BinaryCode, cap: usize) -> Result<bool> {
    let we = code.weight_enumerator_capped(cap)?;
    let dual = code.dual().weight_enumerator_capped(cap)?;
    Ok(we.macwilliams_dual()? == dual)
}

// ----- helpers shared by the campaign definitions -----

/// The one-dimensional module spanned by `row` over `ideal`.
pub(crate) fn module_row(fact: &Factorization, ideal: usize, row: Vec<RingPoly>) -> Result<ModuleCode> {
    let c = row.len();
    ModuleCode::new(fact, ideal, c, vec![row])
}

pub(crate) fn ideal_of(fact: &Factorization, e: &RingPoly) -> Result<usize> {
    fact.ideal_with_idempotent(e)
        .map(|f| f.index)
        .ok_or_else(|| Error::Inconsistent(format!("{e} is not a primitive idempotent")))
}

/// Nonzero vectors of `F_2^len` with odd weight, in increasing integer order
/// of their text form.
pub(crate) fn odd_weight_vectors(len: usize) -> Vec<BitVector> {
    let mut out: Vec<BitVector> = (1u64..(1 << len))
        .filter(|w| w.count_ones() % 2 == 1)
        .map(|w| bits_msb_first(len, w))
        .collect();
    out.sort_by_key(|v| v.to_string());
    out
}

/// `BitVector` whose text form is the `len`-bit binary expansion of `w`.
pub(crate) fn bits_msb_first(len: usize, w: u64) -> BitVector {
    let support: Vec<usize> = (0..len).filter(|&i| w >> (len - 1 - i) & 1 == 1).collect();
    BitVector::from_support(len, &support).expect("length within range")
}

pub(crate) fn one_dim(v: &BitVector) -> BinaryCode {
    BinaryCode::new(v.len(), std::slice::from_ref(v)).expect("length within range")
}

pub(crate) fn json<T: Serialize>(v: T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

/// Which campaigns [`run_all`] executes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CampaignSelection {
    All,
    P7(Option<usize>),
    P11,
    P17,
}

/// Runs the selected campaigns and writes `<out>/<campaign>/report.json` plus
/// one code file per classified code meeting its stage target.
pub fn run_all(out: &Path, selection: CampaignSelection, opts: CampaignOptions) -> Result<Vec<CampaignReport>> {
    let mut reports = Vec::new();
    match selection {
        CampaignSelection::All | CampaignSelection::P7(None) => reports.extend(campaign_p7_all(opts)?),
        CampaignSelection::P7(Some(f)) => reports.push(campaign_p7(f, opts)?),
        _ => {}
    }
    if matches!(selection, CampaignSelection::All | CampaignSelection::P11) {
        reports.push(campaign_p11(opts)?);
    }
    if matches!(selection, CampaignSelection::All | CampaignSelection::P17) {
        reports.push(campaign_p17(opts)?);
    }
    for report in reports.iter_mut() {
        write_report(out, report)?;
    }
    Ok(reports)
}

/// Writes one campaign's artifacts, filling in the `file` fields.
pub fn write_report(out: &Path, report: &mut CampaignReport) -> Result<()> {
    let dir = out.join(&report.campaign);
    fs::create_dir_all(&dir)?;
    for stage in report.stages.iter_mut() {
        for (i, entry) in stage.codes.iter_mut().enumerate() {
            if !entry.meets_target {
                continue;
            }
            let name = format!("{}-{:02}.txt", stage.name, i + 1);
            fs::write(dir.join(&name), entry.code.to_text())?;
            entry.file = Some(name);
        }
    }
    let text = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(dir.join("report.json"), text + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_vectors() {
        let v: Vec<String> = odd_weight_vectors(2).iter().map(|b| b.to_string()).collect();
        assert_eq!(v, vec!["01", "10"]);
        assert_eq!(odd_weight_vectors(5).len(), 16);
        assert_eq!(bits_msb_first(5, 0b00111).to_string(), "00111");
    }
}
