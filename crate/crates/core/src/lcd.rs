//! LCD predicates: the direct hull test and the structural test that goes
//! through `C_π` and the Hermitian hulls of the module components.

use serde::Serialize;

use crate::cyclotomic::{Factorization, RingPoly};
use crate::decomposition::{decompose, Decomposition, ModuleCode, SigmaPermutation};
use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BitVector};

/// True iff `C ∩ C^⊥ = {0}`.
pub fn is_lcd(code: &BinaryCode) -> bool {
    code.hull().k() == 0
}

/// `⟨u, v⟩ = Σ u_j · v_j(x^{-1})`.
pub fn hermitian_product(u: &[RingPoly], v: &[RingPoly]) -> Result<RingPoly> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    let p = u
        .first()
        .or(v.first())
        .map(RingPoly::modulus)
        .ok_or_else(|| Error::Inconsistent("empty vectors carry no modulus".into()))?;
    Ok(u
        .iter()
        .zip(v)
        .fold(RingPoly::zero(p), |acc, (a, b)| acc + *a * b.conjugate()))
}

/// All of `I_j^c` as a binary code of length `c*p`.
pub fn ideal_space(fact: &Factorization, ideal: usize, c: usize) -> BinaryCode {
    let field = &fact.ideals[ideal];
    let rows = (0..c)
        .map(|b| {
            let mut row = vec![RingPoly::zero(fact.p); c];
            row[b] = field.idempotent;
            row
        })
        .collect();
    ModuleCode::new(fact, ideal, c, rows)
        .expect("idempotent lies in its ideal")
        .to_binary(fact)
}

/// The Hermitian dual of `M_j`, a module over the partner ideal: all
/// `w ∈ I_{j'}^c` with `⟨v, w⟩ = 0` for every `v ∈ M_j`.
///
/// Because `M_j` is closed under multiplication by `x`, `⟨v, w⟩ = 0` for all
/// `v` is the same as `w` being Euclidean-orthogonal to the binary image of
/// `M_j`, so the dual is a GF(2) intersection.
pub fn hermitian_dual(module: &ModuleCode, fact: &Factorization) -> ModuleCode {
    let partner = fact.ideals[module.ideal()].partner;
    let binary = module
        .to_binary(fact)
        .dual()
        .intersect(&ideal_space(fact, partner, module.length()))
        .expect("equal lengths");
    ModuleCode::from_binary(fact, partner, &binary).expect("intersection of modules is a module")
}

/// For each `j`, `M_j ∩ (M_{j'})^⊥` where `j'` is the partner of `j`; both
/// live over `I_j`. `C_φ` is Hermitian LCD iff all are zero.
pub fn module_hermitian_hulls(modules: &[ModuleCode], fact: &Factorization) -> Vec<ModuleCode> {
    modules
        .iter()
        .map(|mj| {
            let partner = fact.ideals[mj.ideal()].partner;
            let other = modules
                .iter()
                .find(|m| m.ideal() == partner)
                .cloned()
                .unwrap_or_else(|| ModuleCode::zero(partner, mj.length()));
            let dual = hermitian_dual(&other, fact);
            let hull = mj
                .to_binary(fact)
                .intersect(&dual.to_binary(fact))
                .expect("equal lengths");
            ModuleCode::from_binary(fact, mj.ideal(), &hull).expect("intersection of modules")
        })
        .collect()
}

/// The module-level criterion stated with the components of `C` and of
/// `C^⊥`: every `M_j ∩ M̂_j` must be zero, where `M̂_j` is the component of
/// the dual code over the same ideal.
pub fn module_lcd_check(
    modules: &[ModuleCode],
    dual_modules: &[ModuleCode],
    fact: &Factorization,
) -> bool {
    modules.iter().all(|mj| {
        match dual_modules.iter().find(|d| d.ideal() == mj.ideal()) {
            None => true,
            Some(dj) => {
                mj.to_binary(fact)
                    .intersect(&dj.to_binary(fact))
                    .expect("equal lengths")
                    .k()
                    == 0
            }
        }
    })
}

/// Hull dimensions found at every level of the decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcdVerdict {
    pub is_lcd: bool,
    pub fixed_hull_dim: usize,
    pub even_hull_dim: usize,
    pub c_pi_hull_dim: usize,
    /// Binary dimension of `C_φ ∩ Ĉ_φ`.
    pub c_phi_hull_dim: usize,
    /// Dimension over the field of each `M_j ∩ (M_{j'})^⊥`.
    pub module_hull_dims: Vec<usize>,
    /// A nonzero hull vector for each failing level, keyed by level name.
    pub witnesses: Vec<(String, String)>,
}

fn witness(code: &BinaryCode) -> Option<String> {
    code.generator().first().map(BitVector::to_string)
}

/// LCD verdict computed from `F_σ(C)`, `E_σ(C)`, `C_π` and the Hermitian
/// hulls of the components of `C_φ`.
pub fn lcd_via_structure(
    code: &BinaryCode,
    sigma: &SigmaPermutation,
    fact: &Factorization,
) -> Result<LcdVerdict> {
    let d = decompose(code, sigma, fact)?;
    Ok(verdict_for(&d, fact))
}

pub fn verdict_for(d: &Decomposition, fact: &Factorization) -> LcdVerdict {
    let mut witnesses = Vec::new();
    let mut record = |name: &str, hull: &BinaryCode| {
        if let Some(w) = witness(hull) {
            witnesses.push((name.to_string(), w));
        }
        hull.k()
    };
    let fixed_hull_dim = record("fixed", &d.fixed.hull());
    let even_hull_dim = record("even", &d.even.hull());
    let c_pi_hull_dim = record("c_pi", &d.c_pi.hull());
    let hulls = module_hermitian_hulls(&d.modules, fact);
    let mut c_phi_hull_dim = 0;
    let mut module_hull_dims = Vec::with_capacity(hulls.len());
    for h in &hulls {
        let binary = h.to_binary(fact);
        c_phi_hull_dim += binary.k();
        module_hull_dims.push(h.k());
        if let Some(w) = witness(&binary) {
            witnesses.push((format!("module_{}", h.ideal()), w));
        }
    }
    let is_lcd = c_pi_hull_dim == 0 && c_phi_hull_dim == 0;
    LcdVerdict {
        is_lcd,
        fixed_hull_dim,
        even_hull_dim,
        c_pi_hull_dim,
        c_phi_hull_dim,
        module_hull_dims,
        witnesses,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HullExtension {
    pub before: usize,
    pub after: usize,
}

impl HullExtension {
    /// `dim hull(⟨C, x⟩) >= dim hull(C) - 1`.
    pub fn holds(&self) -> bool {
        self.after + 1 >= self.before
    }
}

/// Hull dimensions of `C` and of `⟨C, x⟩` for `x ∉ C`.
pub fn hull_extension_bound(code: &BinaryCode, x: &BitVector) -> Result<HullExtension> {
    if x.len() != code.n() {
        return Err(Error::LengthMismatch { left: x.len(), right: code.n() });
    }
    if code.contains(x) {
        return Err(Error::VectorInCode);
    }
    Ok(HullExtension {
        before: code.hull().k(),
        after: code.extend_by(x)?.hull().k(),
    })
}

/// Whether paired (non-self-reciprocal) ideals carry components of equal
/// dimension, as every LCD code must.
pub fn k1_equals_k2_check(d: &Decomposition, fact: &Factorization) -> bool {
    d.modules.iter().all(|mj| {
        let partner = fact.ideals[mj.ideal()].partner;
        let other = d.modules.iter().find(|m| m.ideal() == partner).map_or(0, ModuleCode::k);
        other == mj.k()
    })
}
