//! `p = 11`, `c = 3`: the even-weight subring is a single field with 1024
//! elements, and `C_φ` is one-dimensional, spanned by
//! `(e, α^{i1} β^{j1}, α^{i2} β^{j2})`.

use serde_json::json;

use super::{
    json, module_row, odd_weight_vectors, one_dim, run_stage, CampaignOptions, CampaignReport,
    Candidate, StageReport, StageSpec, Target,
};
use crate::cyclotomic::{factor_xp_minus1, ideal_element_order, Factorization, RingPoly};
use crate::decomposition::SigmaPermutation;
use crate::equivalence::ModuleTuple;
use crate::error::{Error, Result};
use crate::gf2::BinaryCode;
use crate::lcd::is_lcd;

const P: u32 = 11;
const C: usize = 3;

pub(crate) struct Elements {
    pub fact: Factorization,
    pub e: RingPoly,
    pub alpha: RingPoly,
    pub beta: RingPoly,
    pub gamma: RingPoly,
    pub ideal: usize,
}

impl Elements {
    pub fn new() -> Result<Elements> {
        let fact = factor_xp_minus1(P as u64)?;
        let e = RingPoly::parse(P, "x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10")?;
        let ideal = super::ideal_of(&fact, &e)?;
        Ok(Elements {
            e,
            alpha: RingPoly::parse(P, "x^9+x^2")?,
            beta: RingPoly::parse(P, "x^10+x^8+x^7+x^6+x^2+1")?,
            gamma: RingPoly::x(P) * e,
            ideal,
            fact,
        })
    }

    /// `α^i β^j` inside the field.
    pub fn element(&self, i: u64, j: u64) -> RingPoly {
        self.alpha.pow(i, self.e) * self.beta.pow(j, self.e)
    }

    pub fn tuple(&self, l: [u64; 4]) -> Result<ModuleTuple> {
        let row = vec![self.e, self.element(l[0], l[1]), self.element(l[2], l[3])];
        let m = module_row(&self.fact, self.ideal, row)?;
        Ok(ModuleTuple::new(BinaryCode::zero(C)?, vec![m], &self.fact, C))
    }
}

fn label(l: [u64; 4]) -> String {
    format!("{},{},{},{}", l[0], l[1], l[2], l[3])
}

/// The labels whose codes are singled out in the literature.
pub const NAMED_LABELS: [[u64; 4]; 3] = [[0, 1, 5, 0], [1, 1, 22, 1], [5, 0, 10, 0]];

/// The `p = 11` campaign: all 8649 generators, then extensions by `C_π`.
pub fn campaign_p11(opts: CampaignOptions) -> Result<CampaignReport> {
    let el = Elements::new()?;
    let orders = [
        ideal_element_order(&el.alpha, &el.e)?,
        ideal_element_order(&el.beta, &el.e)?,
        ideal_element_order(&el.gamma, &el.e)?,
    ];
    let (oa, ob) = (orders[0], orders[1]);

    let mut labels = Vec::new();
    for i1 in 0..oa {
        for j1 in 0..ob {
            for i2 in 0..oa {
                for j2 in 0..ob {
                    labels.push([i1, j1, i2, j2]);
                }
            }
        }
    }
    let candidates: Vec<Candidate> = labels
        .iter()
        .map(|&l| Ok(Candidate { label: label(l), tuple: el.tuple(l)? }))
        .collect::<Result<_>>()?;
    let sigma = SigmaPermutation::new(P, C, 0)?;
    let spec = StageSpec {
        name: "p11-f0",
        sigma,
        fact: &el.fact,
        target: Target { n: 33, k: 10, d: 12 },
        classify_all_lcd: false,
        orbit_reduce: opts.orbit_reduce,
    };
    let mut base = run_stage(&spec, &candidates)?;

    // Where the named labels land, and how the survivors relate to the
    // side condition e + α^{i1} + α^{i2} != 0.
    let class_of = |l: [u64; 4]| -> Option<usize> {
        let idx = labels.iter().position(|&x| x == l)?;
        base.classes.iter().position(|cl| cl.members.contains(&idx))
    };
    let named: Vec<_> = NAMED_LABELS
        .iter()
        .map(|&l| json!({ "label": label(l), "class": class_of(l) }))
        .collect();
    let violates = |l: &[u64; 4]| (el.e + el.alpha.pow(l[0], el.e) + el.alpha.pow(l[2], el.e)).is_zero();
    let survivors_violating = base.survivors.iter().filter(|&&i| violates(&labels[i])).count();
    let candidates_violating = labels.iter().filter(|l| violates(l)).count();
    {
        let checks = &mut base.report.checks;
        checks.insert("element_orders".into(), json(orders));
        checks.insert("named_labels".into(), json(named));
        checks.insert("survivors_violating_side_condition".into(), json(survivors_violating));
        checks.insert("candidates_violating_side_condition".into(), json(candidates_violating));
        checks.insert(
            "survivors_with_dimension_10".into(),
            json(base.report.codes.iter().all(|c| c.k == 10)),
        );
    }

    // [33,11,12]: add a one-dimensional C_π of length 3 to every survivor.
    let mut k11_lcd_d12 = 0usize;
    let mut k11_max_d = 0usize;
    let mut k11_pairs = 0usize;
    let mut k11_lcd = 0usize;
    for &i in &base.survivors {
        let code = candidates[i].tuple.assemble(&sigma, &el.fact)?;
        for u in odd_weight_vectors(C) {
            let lifted = crate::decomposition::pi_lift(&one_dim(&u), &sigma)?;
            let ext = code.sum(&lifted)?;
            k11_pairs += 1;
            if is_lcd(&ext) {
                k11_lcd += 1;
                let d = ext.min_distance()?.unwrap_or(0);
                k11_max_d = k11_max_d.max(d);
                if d >= 12 {
                    k11_lcd_d12 += 1;
                }
            }
        }
    }
    let k11 = StageReport {
        name: "p11-k11".into(),
        p: P,
        c: C,
        f: 0,
        target: Target { n: 33, k: 11, d: 12 },
        candidate_count: k11_pairs,
        orbit_count: k11_pairs,
        lcd_count: k11_lcd,
        survivor_count: k11_lcd_d12,
        max_lcd_distance: Some(k11_max_d),
        inequivalent_count: 0,
        survivors: Vec::new(),
        codes: Vec::new(),
        checks: Default::default(),
    };

    // [35,11,12]: f = 2 and every odd-weight C_π of length 5 on the named codes.
    let sigma2 = SigmaPermutation::new(P, C, 2)?;
    let mut ext_candidates = Vec::new();
    for &l in &NAMED_LABELS {
        let base_tuple = el.tuple(l)?;
        for u in odd_weight_vectors(C + 2) {
            ext_candidates.push(Candidate {
                label: format!("{}|C_pi=<{}>", label(l), u),
                tuple: ModuleTuple::new(one_dim(&u), base_tuple.modules.clone(), &el.fact, C),
            });
        }
    }
    let ext_spec = StageSpec {
        name: "p11-f2",
        sigma: sigma2,
        fact: &el.fact,
        target: Target { n: 35, k: 11, d: 12 },
        classify_all_lcd: false,
        orbit_reduce: false,
    };
    let ext = run_stage(&ext_spec, &ext_candidates)?;
    if base.report.codes.iter().any(|c| c.k != 10) {
        return Err(Error::Inconsistent("p = 11 survivor with k != 10".into()));
    }
    Ok(CampaignReport {
        campaign: "p11".into(),
        stages: vec![base.report, k11, ext.report],
    })
}
