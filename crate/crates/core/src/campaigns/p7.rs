//! `p = 7`, `c = 4`: the `[28,6,12]` classification and its extensions by
//! `f = 1..6` fixed points.

use rayon::prelude::*;
use serde_json::json;

use super::{
    bits_msb_first, ideal_of, json, module_row, one_dim, run_stage, CampaignOptions,
    CampaignReport, Candidate, ClassRep, StageOutcome, StageReport, StageSpec, Target,
};
use crate::cyclotomic::{factor_xp_minus1, Factorization, RingPoly};
use crate::decomposition::{pi_lift, SigmaPermutation};
use crate::equivalence::ModuleTuple;
use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BitVector};

const P: u32 = 7;
const C: usize = 4;

struct Setup {
    fact: Factorization,
    e: [RingPoly; 2],
    ideals: [usize; 2],
}

impl Setup {
    fn new() -> Result<Setup> {
        let fact = factor_xp_minus1(P as u64)?;
        let e1 = RingPoly::parse(P, "1+x+x^2+x^4")?;
        let e2 = RingPoly::parse(P, "1+x^3+x^5+x^6")?;
        let ideals = [ideal_of(&fact, &e1)?, ideal_of(&fact, &e2)?];
        Ok(Setup { fact, e: [e1, e2], ideals })
    }

    /// `(x^{a_1} e, …, x^{a_4} e)` with `None` standing for 0.
    fn row(&self, which: usize, exps: &[Option<u32>]) -> Vec<RingPoly> {
        exps.iter()
            .map(|x| x.map_or(RingPoly::zero(P), |i| self.e[which].shift(i)))
            .collect()
    }
}

fn exps_label(exps: &[Option<u32>]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .map(|x| x.map_or("-".to_string(), |i| i.to_string()))
        .collect();
    format!("({})", parts.join(","))
}

/// All normalized generators of one-dimensional codes of length 4 over the
/// field: first nonzero entry equal to the idempotent, lexicographic order
/// with 0 before the powers of `x`.
fn normalized_rows() -> Vec<Vec<Option<u32>>> {
    let symbols: Vec<Option<u32>> = std::iter::once(None).chain((0..P).map(Some)).collect();
    let mut out = Vec::new();
    for a in &symbols {
        for b in &symbols {
            for c in &symbols {
                for d in &symbols {
                    let row = vec![*a, *b, *c, *d];
                    if row.iter().find(|x| x.is_some()) == Some(&Some(0)) {
                        out.push(row);
                    }
                }
            }
        }
    }
    out
}

/// The two choices of `M_1` up to equivalence: a `[4,1,3]` and a `[4,1,4]` code.
pub(crate) const M1_CHOICES: [[Option<u32>; 4]; 2] =
    [[Some(0), Some(0), Some(0), None], [Some(0), Some(0), Some(0), Some(0)]];

fn label(m1: &[Option<u32>], m2: &[Option<u32>]) -> String {
    format!("M1={};M2={}", exps_label(m1), exps_label(m2))
}

fn stage_f0(s: &Setup, opts: CampaignOptions) -> Result<StageOutcome> {
    let sigma = SigmaPermutation::new(P, C, 0)?;
    let zero = BinaryCode::zero(C)?;
    let mut candidates = Vec::new();
    for m1 in M1_CHOICES {
        let mod1 = module_row(&s.fact, s.ideals[0], s.row(0, &m1))?;
        for m2 in normalized_rows() {
            let mod2 = module_row(&s.fact, s.ideals[1], s.row(1, &m2))?;
            candidates.push(Candidate {
                label: label(&m1, &m2),
                tuple: ModuleTuple::new(zero.clone(), vec![mod1.clone(), mod2], &s.fact, C),
            });
        }
    }
    let spec = StageSpec {
        name: "p7-f0",
        sigma,
        fact: &s.fact,
        target: Target { n: 28, k: 6, d: 12 },
        classify_all_lcd: false,
        orbit_reduce: opts.orbit_reduce,
    };
    let mut out = run_stage(&spec, &candidates)?;

    let class_of = |label: &str| -> Option<usize> {
        let idx = candidates.iter().position(|c| c.label == label)?;
        out.classes.iter().position(|cl| cl.members.contains(&idx))
    };
    let named = [
        label(&M1_CHOICES[0], &[Some(0), Some(1), None, Some(0)]),
        label(&M1_CHOICES[0], &[Some(0), Some(1), Some(2), Some(0)]),
        label(&M1_CHOICES[1], &[Some(0), Some(1), Some(2), Some(5)]),
    ];
    let named_classes: Vec<_> = named
        .iter()
        .map(|l| json!({ "label": l, "class": class_of(l) }))
        .collect();
    let mut classes_414: Vec<usize> = out
        .classes
        .iter()
        .enumerate()
        .filter(|(_, cl)| {
            cl.members
                .iter()
                .any(|&i| candidates[i].label.starts_with(&format!("M1={}", exps_label(&M1_CHOICES[1]))))
        })
        .map(|(i, _)| i)
        .collect();
    classes_414.dedup();
    let report = &mut out.report;
    report.checks.insert("named_constructions".into(), json(named_classes));
    report
        .checks
        .insert("classes_with_m1_of_weight_4".into(), json(classes_414.len()));
    report.checks.insert(
        "paired_dims_equal".into(),
        json(report.codes.iter().all(|c| c.paired_dims_equal)),
    );
    Ok(out)
}

fn extension_candidates(
    bases: &[ClassRep],
    c_pis: &[BinaryCode],
    s: &Setup,
) -> Vec<Candidate> {
    let mut out = Vec::new();
    for base in bases {
        for c_pi in c_pis {
            let gens: Vec<String> = c_pi.generator().iter().map(|g| g.to_string()).collect();
            out.push(Candidate {
                label: format!("{}|C_pi=<{}>", base.label, gens.join(",")),
                tuple: ModuleTuple::new(c_pi.clone(), base.tuple.modules.clone(), &s.fact, C),
            });
        }
    }
    out
}

fn stage_f1(s: &Setup, base: &StageOutcome, all_odd: bool) -> Result<StageReport> {
    let sigma = SigmaPermutation::new(P, C, 1)?;
    let c_pis: Vec<BinaryCode> = (1u64..32)
        .map(|w| bits_msb_first(5, w))
        .filter(|u| u.weight() % 2 == 1 && (all_odd || u.weight() >= 3))
        .map(|u| one_dim(&u))
        .collect();
    let candidates = extension_candidates(&base.classes, &c_pis, s);
    let spec = StageSpec {
        name: if all_odd { "p7-f1-all-odd" } else { "p7-f1" },
        sigma,
        fact: &s.fact,
        target: Target { n: 29, k: 7, d: 12 },
        classify_all_lcd: true,
        orbit_reduce: false,
    };
    Ok(run_stage(&spec, &candidates)?.report)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// The four `[6,2]` generator matrices for `C_π` with `f = 2`.
const F2_CPI: [[&str; 2]; 4] = [
    ["110000", "101000"],
    ["110000", "101110"],
    ["110000", "101011"],
    ["110000", "101111"],
];

fn stage_f2(s: &Setup, base: &StageOutcome) -> Result<StageReport> {
    let sigma = SigmaPermutation::new(P, C, 2)?;
    let mut c_pis: Vec<BinaryCode> = Vec::new();
    for rows in F2_CPI {
        let gens: Vec<BitVector> = rows.iter().map(|r| r.parse()).collect::<Result<_>>()?;
        let code = BinaryCode::new(6, &gens)?;
        for perm in permutations(C) {
            let full: Vec<usize> = (0..6).map(|i| if i < C { perm[i] } else { i }).collect();
            let image = code.permuted(&full)?;
            if !c_pis.contains(&image) {
                c_pis.push(image);
            }
        }
    }
    let candidates = extension_candidates(&base.classes, &c_pis, s);
    let spec = StageSpec {
        name: "p7-f2",
        sigma,
        fact: &s.fact,
        target: Target { n: 30, k: 8, d: 12 },
        classify_all_lcd: false,
        orbit_reduce: false,
    };
    let mut report = run_stage(&spec, &candidates)?.report;

    // E_σ(C) plus a one-dimensional F_σ(C) whose C_π word has weight 2.
    let mut max_d = 0;
    for cl in &base.classes {
        let e = cl.code.pad_zeros(2)?;
        for w in (1u64..64).filter(|w| w.count_ones() == 2) {
            let u = bits_msb_first(6, w);
            let lifted = pi_lift(&one_dim(&u), &sigma)?;
            let code = e.sum(&lifted)?;
            max_d = max_d.max(code.min_distance()?.unwrap_or(0));
        }
    }
    report
        .checks
        .insert("weight2_fixed_part_max_distance".into(), json(max_d));
    Ok(report)
}

/// Largest minimum distance of an LCD `[n,k]` code, searched over all
/// systematic generator matrices `[I_k | A]` (every code is equivalent to
/// one of these).
pub fn max_lcd_distance_systematic(n: usize, k: usize) -> usize {
    assert!(k >= 1 && n > k && n <= 16 && k <= 8);
    let r = n - k;
    let total = 1u64 << (k * r);
    (0..total)
        .into_par_iter()
        .map(|a| {
            let rows: Vec<u64> = (0..k)
                .map(|i| (1u64 << i) | (((a >> (i * r)) & ((1 << r) - 1)) << k))
                .collect();
            // Gram matrix over GF(2); LCD iff it is nonsingular.
            let mut gram: Vec<u64> = rows
                .iter()
                .map(|x| {
                    rows.iter()
                        .enumerate()
                        .fold(0u64, |acc, (j, y)| acc | (((x & y).count_ones() as u64) & 1) << j)
                })
                .collect();
            if crate::gf2::rref_words(&mut gram, k).len() < k {
                return 0;
            }
            let mut acc = 0u64;
            let mut best = u32::MAX;
            for g in 1u64..(1 << k) {
                acc ^= rows[g.trailing_zeros() as usize];
                best = best.min(acc.count_ones());
            }
            best as usize
        })
        .max()
        .unwrap_or(0)
}

fn stage_bound(base: &StageOutcome, f: usize) -> Result<StageReport> {
    let sigma = SigmaPermutation::new(P, C, f)?;
    let len = C + f;
    let bases: Vec<BinaryCode> = base
        .survivors
        .iter()
        .map(|&i| base.classes.iter().find(|cl| cl.members.contains(&i)).map(|cl| cl.code.clone()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Inconsistent("survivor without class".into()))?;
    let words: Vec<u64> = (1u64..(1 << len)).filter(|w| w.count_ones() <= 3).collect();
    let mut max_d = 0usize;
    let mut pairs = 0usize;
    for e in &bases {
        let padded = e.pad_zeros(f)?;
        let d_e = padded.min_distance()?.unwrap_or(usize::MAX);
        for &w in &words {
            let u = bits_msb_first(len, w);
            let lifted = pi_lift(&one_dim(&u), &sigma)?.generator()[0].clone();
            let d = d_e.min(padded.coset_min_weight(&lifted)?);
            max_d = max_d.max(d);
            pairs += 1;
        }
    }
    let cpi_max = max_lcd_distance_systematic(len, f);
    let mut checks = std::collections::BTreeMap::new();
    checks.insert("max_lcd_distance_of_c_pi".into(), json(cpi_max));
    checks.insert(
        "max_distance_with_low_weight_c_pi_word".into(),
        json(max_d),
    );
    checks.insert("base_codes".into(), json(bases.len()));
    Ok(StageReport {
        name: format!("p7-f{f}-bound"),
        p: P,
        c: C,
        f,
        target: Target { n: 28 + f, k: 6 + f, d: 12 },
        candidate_count: pairs,
        orbit_count: pairs,
        lcd_count: 0,
        survivor_count: 0,
        max_lcd_distance: None,
        inequivalent_count: 0,
        survivors: Vec::new(),
        codes: Vec::new(),
        checks,
    })
}

/// The `p = 7` campaign with `f` fixed points (`0 <= f <= 6`).
pub fn campaign_p7(f: usize, opts: CampaignOptions) -> Result<CampaignReport> {
    if f > 6 {
        return Err(Error::Inconsistent(format!("f = {f} is outside 0..=6")));
    }
    let s = Setup::new()?;
    let base = stage_f0(&s, opts)?;
    campaign_from_base(&s, &base, f)
}

/// All seven `p = 7` campaigns, sharing one `f = 0` run.
pub fn campaign_p7_all(opts: CampaignOptions) -> Result<Vec<CampaignReport>> {
    let s = Setup::new()?;
    let base = stage_f0(&s, opts)?;
    (0..=6).map(|f| campaign_from_base(&s, &base, f)).collect()
}

/// The `f = 0` stage is reported by the `f = 0` campaign only; the others
/// use its survivors as input.
fn campaign_from_base(s: &Setup, base: &StageOutcome, f: usize) -> Result<CampaignReport> {
    let stages = match f {
        0 => vec![base.report.clone()],
        1 => vec![stage_f1(s, base, false)?, stage_f1(s, base, true)?],
        2 => vec![stage_f2(s, base)?],
        _ => vec![stage_bound(base, f)?],
    };
    Ok(CampaignReport { campaign: format!("p7-f{f}"), stages })
}
