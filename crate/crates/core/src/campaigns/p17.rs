//! `p = 17`, `c = 2`: the even-weight subring splits into two fields `G_1`,
//! `G_2` with 256 elements each.

use super::{
    json, module_row, odd_weight_vectors, one_dim, run_stage, CampaignOptions, CampaignReport,
    Candidate, StageOutcome, StageSpec, Target,
};
use crate::cyclotomic::{factor_xp_minus1, ideal_element_order, Factorization, RingPoly};
use crate::decomposition::SigmaPermutation;
use crate::equivalence::ModuleTuple;
use crate::error::Result;
use crate::gf2::{BinaryCode, BitVector};

const P: u32 = 17;
const C: usize = 2;

pub(crate) struct Elements {
    pub fact: Factorization,
    pub e1: RingPoly,
    pub e2: RingPoly,
    /// `g_1(x)^17`, inside `G_1`.
    pub delta: RingPoly,
    /// `g_2(x)^17`, inside `G_2`.
    pub tau: RingPoly,
    pub ideal1: usize,
    pub ideal2: usize,
    pub delta_order: u64,
    pub tau_order: u64,
}

impl Elements {
    pub fn new() -> Result<Elements> {
        let fact = factor_xp_minus1(P as u64)?;
        let e1 = RingPoly::parse(P, "x+x^2+x^4+x^8+x^9+x^13+x^15+x^16")?;
        let e2 = RingPoly::parse(P, "x^3+x^5+x^6+x^7+x^10+x^11+x^12+x^14")?;
        let one = RingPoly::one(P);
        let g1 = RingPoly::parse(P, "1+x+x^3+x^6+x^8+x^9")?;
        let g2 = RingPoly::parse(P, "1+x^3+x^4+x^5+x^6+x^9")?;
        let delta = g1.pow(17, one);
        let tau = g2.pow(17, one);
        Ok(Elements {
            ideal1: super::ideal_of(&fact, &e1)?,
            ideal2: super::ideal_of(&fact, &e2)?,
            delta_order: ideal_element_order(&delta, &e1)?,
            tau_order: ideal_element_order(&tau, &e2)?,
            fact,
            e1,
            e2,
            delta,
            tau,
        })
    }

    /// `x^i δ^j` in `G_1`.
    pub fn g1(&self, i: u32, j: u64) -> RingPoly {
        self.delta.pow(j, self.e1).shift(i)
    }

    /// `x^i τ^j` in `G_2`.
    pub fn g2(&self, i: u32, j: u64) -> RingPoly {
        self.tau.pow(j, self.e2).shift(i)
    }

    /// `M_1 = <(e_1, x^i δ^j)>`, `M_2 = 0`.
    pub fn k1_tuple(&self, i: u32, j: u64) -> Result<ModuleTuple> {
        let m1 = module_row(&self.fact, self.ideal1, vec![self.e1, self.g1(i, j)])?;
        Ok(ModuleTuple::new(BinaryCode::zero(C)?, vec![m1], &self.fact, C))
    }

    /// `M_1 = <(e_1, δ^{j1})>`, `M_2 = <(e_2, x^i τ^{j2})>`.
    pub fn k1k2_tuple(&self, j1: u64, j2: u64, i: u32) -> Result<ModuleTuple> {
        let m1 = module_row(&self.fact, self.ideal1, vec![self.e1, self.g1(0, j1)])?;
        let m2 = module_row(&self.fact, self.ideal2, vec![self.e2, self.g2(i, j2)])?;
        Ok(ModuleTuple::new(BinaryCode::zero(C)?, vec![m1, m2], &self.fact, C))
    }

    /// The exponent `k` with `δ(x^3) = τ^k`, if any: the image of `δ` under
    /// the substitution that maps `G_1` onto `G_2`.
    pub fn delta_image_exponent(&self) -> Option<u64> {
        let image = self.delta.substitute(3);
        (0..self.tau_order).find(|&k| self.tau.pow(k, self.e2) == image)
    }
}

fn block_vector(pattern: &[bool]) -> BitVector {
    let support: Vec<usize> = pattern
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .flat_map(|(blk, _)| (blk * P as usize)..((blk + 1) * P as usize))
        .collect();
    BitVector::from_support(C * P as usize, &support).expect("length 34")
}

fn ext_stage(
    name: &str,
    base: &StageOutcome,
    el: &Elements,
    f: usize,
    d: usize,
) -> Result<StageOutcome> {
    let rep = &base.classes[0];
    let mut candidates = Vec::new();
    for u in odd_weight_vectors(C + f) {
        candidates.push(Candidate {
            label: format!("{}|C_pi=<{}>", rep.label, u),
            tuple: ModuleTuple::new(one_dim(&u), rep.tuple.modules.clone(), &el.fact, C),
        });
    }
    let spec = StageSpec {
        name,
        sigma: SigmaPermutation::new(P, C, f)?,
        fact: &el.fact,
        target: Target { n: 34 + f, k: 9, d },
        classify_all_lcd: false,
        orbit_reduce: false,
    };
    run_stage(&spec, &candidates)
}

fn k1k2_stage(
    name: &str,
    el: &Elements,
    labels: &[(u64, u64, u32)],
    opts: CampaignOptions,
) -> Result<StageOutcome> {
    let candidates: Vec<Candidate> = labels
        .iter()
        .map(|&(j1, j2, i)| {
            Ok(Candidate { label: format!("{j1},{j2},{i}"), tuple: el.k1k2_tuple(j1, j2, i)? })
        })
        .collect::<Result<_>>()?;
    let spec = StageSpec {
        name,
        sigma: SigmaPermutation::new(P, C, 0)?,
        fact: &el.fact,
        target: Target { n: 34, k: 16, d: 8 },
        classify_all_lcd: false,
        orbit_reduce: opts.orbit_reduce,
    };
    let mut out = run_stage(&spec, &candidates)?;
    let mut wes: Vec<&str> =
        out.report.codes.iter().map(|c| c.weight_enumerator_text.as_str()).collect();
    wes.sort_unstable();
    wes.dedup();
    let distinct = wes.len();
    out.report.checks.insert("distinct_weight_enumerators".into(), json(distinct));
    Ok(out)
}

/// Each class representative of `base` with `C_π = <(01)>` or `<(10)>`.
fn cpi_stage(name: &str, base: &StageOutcome, el: &Elements) -> Result<StageOutcome> {
    let mut candidates = Vec::new();
    for cl in &base.classes {
        for u in odd_weight_vectors(C) {
            candidates.push(Candidate {
                label: format!("{}|C_pi=<{}>", cl.label, u),
                tuple: ModuleTuple::new(one_dim(&u), cl.tuple.modules.clone(), &el.fact, C),
            });
        }
    }
    let spec = StageSpec {
        name,
        sigma: SigmaPermutation::new(P, C, 0)?,
        fact: &el.fact,
        target: Target { n: 34, k: 17, d: 8 },
        classify_all_lcd: false,
        orbit_reduce: false,
    };
    run_stage(&spec, &candidates)
}

/// The `p = 17` campaign: the case `k_1 = 1, k_2 = 0` with its extensions,
/// then the case `k_1 = k_2 = 1` with and without a `C_π` component.
pub fn campaign_p17(opts: CampaignOptions) -> Result<CampaignReport> {
    let el = Elements::new()?;
    let sigma = SigmaPermutation::new(P, C, 0)?;
    let order = el.delta_order;

    // k1 = 1, k2 = 0
    let mut labels = Vec::new();
    for i in 0..P {
        for j in 0..order {
            labels.push((i, j));
        }
    }
    let candidates: Vec<Candidate> = labels
        .iter()
        .map(|&(i, j)| Ok(Candidate { label: format!("{i},{j}"), tuple: el.k1_tuple(i, j)? }))
        .collect::<Result<_>>()?;
    let spec = StageSpec {
        name: "p17-k1",
        sigma,
        fact: &el.fact,
        target: Target { n: 34, k: 8, d: 13 },
        classify_all_lcd: false,
        orbit_reduce: opts.orbit_reduce,
    };
    let mut k1 = run_stage(&spec, &candidates)?;
    let mut js: Vec<u64> = k1.survivors.iter().map(|&s| labels[s].1).collect();
    js.sort_unstable();
    js.dedup();
    let coset_weights: Vec<usize> = match k1.classes.first() {
        Some(rep) => [[true, false], [false, true], [true, true]]
            .iter()
            .map(|pat| rep.code.coset_min_weight(&block_vector(pat)))
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    {
        let checks = &mut k1.report.checks;
        checks.insert("delta_order".into(), json(el.delta_order));
        checks.insert("tau_order".into(), json(el.tau_order));
        checks.insert("surviving_j".into(), json(&js));
        checks.insert("coset_min_weights".into(), json(&coset_weights));
    }
    let mut stages = vec![];
    let (ext34, ext36) = if k1.classes.is_empty() {
        (None, None)
    } else {
        (
            Some(ext_stage("p17-k1-ext34", &k1, &el, 0, 13)?),
            Some(ext_stage("p17-k1-ext36", &k1, &el, 2, 14)?),
        )
    };
    stages.push(k1.report);
    stages.extend(ext34.map(|s| s.report));
    stages.extend(ext36.map(|s| s.report));

    // k1 = k2 = 1, every (j1, j2, i).
    let mut labels2 = Vec::new();
    for j1 in 0..order {
        for j2 in 0..el.tau_order {
            for i in 0..P {
                labels2.push((j1, j2, i));
            }
        }
    }
    let mut full = k1k2_stage("p17-k1k2", &el, &labels2, opts)?;

    // Labels of the same classes when M_2 is parametrized by powers of δ(x^3)
    // instead of τ: τ^{j2} = δ(x^3)^{t} with j2 = k·t.
    let k = el.delta_image_exponent();
    let alt_labels: Option<Vec<String>> = k.map(|k| {
        full.classes
            .iter()
            .map(|cl| {
                cl.members
                    .iter()
                    .filter_map(|&m| {
                        let (j1, j2, i) = labels2[m];
                        (0..el.tau_order)
                            .find(|&t| (t * k) % el.tau_order == j2)
                            .map(|t| (j1, t, i))
                    })
                    .min()
                    .map(|(a, b, c)| format!("{a},{b},{c}"))
                    .unwrap_or_default()
            })
            .collect()
    });
    full.report.checks.insert("delta_image_exponent".into(), json(k));
    full.report.checks.insert("labels_under_delta_image_reading".into(), json(alt_labels));

    // The subfamily with the τ-exponent of M_2 tied to the δ-exponent of M_1.
    let tied_labels: Vec<(u64, u64, u32)> =
        (0..order).flat_map(|j| (0..P).map(move |i| (j, j, i))).collect();
    let tied = k1k2_stage("p17-k1k2-tied", &el, &tied_labels, opts)?;

    let full_cpi = cpi_stage("p17-k1k2-full-cpi", &full, &el)?;
    let tied_cpi = cpi_stage("p17-k1k2-cpi", &tied, &el)?;
    stages.extend([full.report, full_cpi.report, tied.report, tied_cpi.report]);
    Ok(CampaignReport { campaign: "p17".into(), stages })
}
