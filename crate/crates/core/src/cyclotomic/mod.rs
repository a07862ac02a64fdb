//! Arithmetic in `R_p = F_2[x]/(x^p - 1)` for an odd prime `p`: the
//! factorization of `x^p - 1`, the primitive idempotents of the minimal
//! ideals, the reciprocal pairing between them, and field arithmetic inside
//! each minimal ideal.

pub mod arith;
mod ext;
pub mod poly;
pub mod ring;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

pub use arith::{cyclotomic_cosets, ord2_mod};
pub use poly::Gf2Poly;
pub use ring::RingPoly;

use crate::error::{Error, Result};
use arith::{check_odd_prime, factorize};
use ext::ExtField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    /// The factor `x - 1`.
    Linear,
    SelfReciprocal,
    PairFirst,
    PairSecond,
}

/// One minimal ideal `I_j` of `R_p`, isomorphic to `F_2[x]/(factor)`.
#[derive(Clone, Debug)]
pub struct IdealField {
    pub index: usize,
    pub factor: Gf2Poly,
    pub kind: FactorKind,
    /// The generating idempotent `e_j`; it is the identity of the field.
    pub idempotent: RingPoly,
    /// Index `j'` with `e_j(x^{-1}) = e_{j'}(x)`.
    pub partner: usize,
    /// Dimension over GF(2), equal to the degree of `factor`.
    pub degree: u32,
    /// Multiplicative generator of the nonzero elements.
    pub generator: RingPoly,
    inverses: Option<HashMap<u64, u64>>,
}

impl IdealField {
    /// Number of elements, `2^degree`.
    pub fn order(&self) -> u128 {
        1u128 << self.degree
    }

    pub fn contains(&self, a: &RingPoly) -> bool {
        *a * self.idempotent == *a
    }

    pub fn inverse(&self, a: &RingPoly) -> Result<RingPoly> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        if !self.contains(a) {
            return Err(Error::NotInIdeal);
        }
        if let Some(table) = &self.inverses {
            let bits = table[&a.bits()];
            return Ok(RingPoly::from_bits(a.modulus(), bits));
        }
        let group = (1u64 << self.degree) - 1;
        Ok(a.pow(group - 1, self.idempotent))
    }

    /// `{x^t e_j : 0 <= t < degree}`, a GF(2)-basis of the ideal.
    pub fn basis(&self) -> Vec<RingPoly> {
        (0..self.degree).map(|t| self.idempotent.shift(t)).collect()
    }
}

/// The factorization `x^p - 1 = (x-1) g_1 ... g_s h_1 h_1^* ... h_t h_t^*`
/// together with the minimal ideals, indexed `I_0 = <(x^p-1)/(x-1)>`,
/// `I_1..I_s` for the self-reciprocal factors, then `I_{s+1}..I_{s+t}` for
/// the `h_j` and `I_{s+t+1}..I_{s+2t}` for the `h_j^*`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub p: u32,
    pub m: u32,
    pub self_reciprocal: Vec<Gf2Poly>,
    pub pairs: Vec<(Gf2Poly, Gf2Poly)>,
    pub ideals: Vec<IdealField>,
}

impl Factorization {
    pub fn s(&self) -> usize {
        self.self_reciprocal.len()
    }

    pub fn t(&self) -> usize {
        self.pairs.len()
    }

    /// Number of minimal ideals inside the even-weight subring, `s + 2t`.
    pub fn r(&self) -> usize {
        self.s() + 2 * self.t()
    }

    /// All factors in the order `x-1, g_1.., h_1, h_1^*, ..`.
    pub fn factors(&self) -> Vec<(Gf2Poly, FactorKind)> {
        let mut out = vec![(Gf2Poly(0b11), FactorKind::Linear)];
        out.extend(self.self_reciprocal.iter().map(|&g| (g, FactorKind::SelfReciprocal)));
        for &(h, hs) in &self.pairs {
            out.push((h, FactorKind::PairFirst));
            out.push((hs, FactorKind::PairSecond));
        }
        out
    }

    /// The minimal ideal whose idempotent is `e`, if any.
    pub fn ideal_with_idempotent(&self, e: &RingPoly) -> Option<&IdealField> {
        self.ideals.iter().find(|f| f.idempotent == *e)
    }

    /// Index of the ideal that `I_j` is mapped onto by `x -> x^t`.
    pub fn substitution_image(&self, j: usize, t: u32) -> usize {
        let image = self.ideals[j].idempotent.substitute(t);
        self.ideals
            .iter()
            .position(|f| f.idempotent == image)
            .expect("substitution permutes the primitive idempotents")
    }

    pub fn report(&self) -> FactorizationReport {
        let factors = self
            .factors()
            .into_iter()
            .zip(&self.ideals)
            .map(|((poly, kind), ideal)| FactorEntry {
                factor: if kind == FactorKind::Linear {
                    "x-1".to_string()
                } else {
                    poly.to_string()
                },
                kind,
                idempotent: ideal.idempotent.to_string(),
                partner: ideal.partner,
            })
            .collect();
        FactorizationReport {
            p: self.p,
            m: self.m,
            s: self.s(),
            t: self.t(),
            display: self.to_string(),
            factors,
        }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (poly, kind) in self.factors() {
            if kind == FactorKind::Linear {
                f.write_str("(x-1)")?;
            } else {
                write!(f, "({poly})")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorEntry {
    pub factor: String,
    pub kind: FactorKind,
    pub idempotent: String,
    pub partner: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub p: u32,
    pub m: u32,
    pub s: usize,
    pub t: usize,
    pub display: String,
    pub factors: Vec<FactorEntry>,
}

/// Factors `x^p - 1` over GF(2) through minimal polynomials of a primitive
/// `p`-th root of unity, one per nonzero cyclotomic coset.
pub fn factor_xp_minus1(p: u64) -> Result<Factorization> {
    check_odd_prime(p)?;
    let m = ord2_mod(p)?;
    let cosets = cyclotomic_cosets(p)?;
    let field = ExtField::new(m);
    let alpha = field.root_of_unity(p);

    let mut self_reciprocal = Vec::new();
    let mut paired = Vec::new();
    for coset in cosets.iter().skip(1) {
        let f = field.minimal_polynomial(alpha, coset);
        if f.reciprocal() == f {
            self_reciprocal.push(f);
        } else if f < f.reciprocal() {
            paired.push((f, f.reciprocal()));
        }
    }
    self_reciprocal.sort();
    paired.sort();

    let p32 = p as u32;
    let product = self_reciprocal
        .iter()
        .chain(paired.iter().flat_map(|(a, b)| [a, b]))
        .fold(Gf2Poly(0b11), |acc, f| acc.mul(*f));
    if product != Gf2Poly::x_pow_minus_one(p32) {
        return Err(Error::Inconsistent(format!(
            "product of factors {product} differs from x^{p}-1"
        )));
    }

    let mut fact = Factorization {
        p: p32,
        m,
        self_reciprocal,
        pairs: paired,
        ideals: Vec::new(),
    };
    let mut ideals = Vec::new();
    for (index, (factor, kind)) in fact.factors().into_iter().enumerate() {
        let idempotent = idempotent_of(factor, p)?;
        let degree = factor.degree() as u32;
        ideals.push(IdealField {
            index,
            factor,
            kind,
            idempotent,
            partner: index,
            degree,
            generator: idempotent,
            inverses: None,
        });
    }
    let partners = reciprocal_pairing(&ideals);
    for (ideal, partner) in ideals.iter_mut().zip(partners) {
        ideal.partner = partner;
        ideal.generator = find_generator(ideal)?;
        if ideal.degree <= 16 {
            ideal.inverses = Some(inverse_table(ideal));
        }
    }
    fact.ideals = ideals;
    Ok(fact)
}

/// The primitive idempotent of the minimal ideal `<(x^p-1)/factor>`, found by
/// exhaustive search over sums of cyclotomic-coset monomials.
pub fn idempotent_of(factor: Gf2Poly, p: u64) -> Result<RingPoly> {
    check_odd_prime(p)?;
    let p32 = p as u32;
    let full = Gf2Poly::x_pow_minus_one(p32);
    let (cofactor, rem) = full.div_rem(factor);
    if !rem.is_zero() || !factor.is_irreducible() {
        return Err(Error::NotIrreducibleDivisor(factor.to_string()));
    }
    let factor_elem = RingPoly::from_bits(p32, factor.0 & crate::gf2::mask(p as usize));
    let cofactor_elem = RingPoly::from_bits(p32, cofactor.0);
    let cosets = cyclotomic_cosets(p)?;
    let coset_sums: Vec<RingPoly> = cosets
        .iter()
        .map(|c| RingPoly::from_exponents(p32, c))
        .collect();
    // x - 1 has degree 1 < p, so reducing the factor mod x^p - 1 is only
    // needed when deg factor = p, which cannot happen for a proper divisor.
    debug_assert!(factor.degree() < p as i32);
    for subset in 1u64..(1u64 << cosets.len()) {
        let e = crate::gf2::iter_ones(subset)
            .fold(RingPoly::zero(p32), |acc, i| acc + coset_sums[i]);
        if (factor_elem * e).is_zero() && e * cofactor_elem == cofactor_elem {
            return Ok(e);
        }
    }
    Err(Error::NotIrreducibleDivisor(factor.to_string()))
}

/// For each ideal, the index of the ideal holding its conjugate idempotent.
pub fn reciprocal_pairing(fields: &[IdealField]) -> Vec<usize> {
    fields
        .iter()
        .map(|f| {
            let conj = f.idempotent.conjugate();
            fields
                .iter()
                .position(|g| g.idempotent == conj)
                .expect("conjugation permutes the primitive idempotents")
        })
        .collect()
}

/// Multiplicative order of `a` inside the ideal with identity `e`: the least
/// `k >= 1` with `a^k = e`.
pub fn ideal_element_order(a: &RingPoly, e: &RingPoly) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    if *a * *e != *a {
        return Err(Error::NotInIdeal);
    }
    let p = a.modulus();
    let generator_poly = Gf2Poly(e.bits()).gcd(Gf2Poly::x_pow_minus_one(p));
    let dim = p - generator_poly.degree() as u32;
    let group = (1u64 << dim) - 1;
    if a.pow(group, *e) != *e {
        return Err(Error::NotInvertible);
    }
    let mut order = group;
    for (q, _) in factorize(group) {
        while order % q == 0 && a.pow(order / q, *e) == *e {
            order /= q;
        }
    }
    Ok(order)
}

fn find_generator(ideal: &IdealField) -> Result<RingPoly> {
    let p = ideal.idempotent.modulus();
    let group = (1u64 << ideal.degree) - 1;
    for bits in 1u64.. {
        let a = RingPoly::from_bits(p, bits) * ideal.idempotent;
        if a.is_zero() {
            continue;
        }
        if ideal_element_order(&a, &ideal.idempotent)? == group {
            return Ok(a);
        }
    }
    unreachable!()
}

fn inverse_table(ideal: &IdealField) -> HashMap<u64, u64> {
    let group = (1u64 << ideal.degree) - 1;
    let mut table = HashMap::with_capacity(group as usize);
    let g = ideal.generator;
    let g_inv = g.pow(group - 1, ideal.idempotent);
    let (mut a, mut a_inv) = (ideal.idempotent, ideal.idempotent);
    for _ in 0..group {
        table.insert(a.bits(), a_inv.bits());
        a = a * g;
        a_inv = a_inv * g_inv;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(exps: &[u32]) -> Gf2Poly {
        Gf2Poly::from_exponents(exps)
    }

    #[test]
    fn factorization_p7() {
        let f = factor_xp_minus1(7).unwrap();
        assert_eq!(f.to_string(), "(x-1)(x^3+x+1)(x^3+x^2+1)");
        assert_eq!((f.s(), f.t(), f.m), (0, 1, 3));
        assert_eq!(f.ideals[1].idempotent.to_string(), "1+x+x^2+x^4");
        assert_eq!(f.ideals[2].idempotent.to_string(), "1+x^3+x^5+x^6");
        assert_eq!(reciprocal_pairing(&f.ideals), vec![0, 2, 1]);
    }

    #[test]
    fn factorization_p17() {
        let f = factor_xp_minus1(17).unwrap();
        assert_eq!(f.self_reciprocal, vec![poly(&[8, 5, 4, 3, 0]), poly(&[8, 7, 6, 4, 2, 1, 0])]);
        assert_eq!((f.s(), f.t()), (2, 0));
        assert_eq!(reciprocal_pairing(&f.ideals), vec![0, 1, 2]);
    }

    #[test]
    fn factorization_p23() {
        let f = factor_xp_minus1(23).unwrap();
        assert_eq!(
            f.pairs,
            vec![(poly(&[11, 9, 7, 6, 5, 1, 0]), poly(&[11, 10, 6, 5, 4, 2, 0]))]
        );
        assert_eq!(
            f.to_string(),
            "(x-1)(x^11+x^9+x^7+x^6+x^5+x+1)(x^11+x^10+x^6+x^5+x^4+x^2+1)"
        );
    }

    #[test]
    fn p11_single_field() {
        let f = factor_xp_minus1(11).unwrap();
        assert_eq!((f.s(), f.t(), f.m), (1, 0, 10));
        assert_eq!(reciprocal_pairing(&f.ideals), vec![0, 1]);
        let e = RingPoly::parse(11, "x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10").unwrap();
        assert_eq!(f.ideals[1].idempotent, e);
    }

    #[test]
    fn idempotent_p5() {
        // Independent check: e^2 = e and e is a multiple of (x^5-1)/g.
        let g = poly(&[4, 3, 2, 1, 0]);
        let e = idempotent_of(g, 5).unwrap();
        assert_eq!(e, RingPoly::from_exponents(5, &[1, 2, 3, 4]));
        assert_eq!(e * e, e);
        let (cofactor, _) = Gf2Poly::x_pow_minus_one(5).div_rem(g);
        assert_eq!(Gf2Poly(e.bits()).rem(cofactor), Gf2Poly::ZERO);
    }

    #[test]
    fn idempotent_rejects_non_divisors() {
        assert!(idempotent_of(poly(&[2, 1, 0]), 7).is_err());
        // (x^3+x+1)(x+1) divides x^7-1 but is reducible.
        assert!(idempotent_of(poly(&[3, 1, 0]).mul(Gf2Poly(0b11)), 7).is_err());
    }

    #[test]
    fn element_orders() {
        let f11 = factor_xp_minus1(11).unwrap();
        let e = f11.ideals[1].idempotent;
        let alpha = RingPoly::parse(11, "x^9+x^2").unwrap();
        let beta = RingPoly::parse(11, "x^10+x^8+x^7+x^6+x^2+1").unwrap();
        let gamma = RingPoly::x(11) * e;
        assert_eq!(ideal_element_order(&alpha, &e).unwrap(), 31);
        assert_eq!(ideal_element_order(&beta, &e).unwrap(), 3);
        assert_eq!(ideal_element_order(&gamma, &e).unwrap(), 11);

        let e1 = RingPoly::parse(17, "x+x^2+x^4+x^8+x^9+x^13+x^15+x^16").unwrap();
        let e2 = RingPoly::parse(17, "x^3+x^5+x^6+x^7+x^10+x^11+x^12+x^14").unwrap();
        let g1 = RingPoly::parse(17, "1+x+x^3+x^6+x^8+x^9").unwrap();
        let g2 = RingPoly::parse(17, "1+x^3+x^4+x^5+x^6+x^9").unwrap();
        let delta = g1.pow(17, RingPoly::one(17));
        let tau = g2.pow(17, RingPoly::one(17));
        assert_eq!(delta, RingPoly::parse(17, "x^3+x^7+x^8+x^9+x^10+x^14").unwrap());
        assert_eq!(tau, RingPoly::parse(17, "x+x^3+x^8+x^9+x^14+x^16").unwrap());
        assert_eq!(ideal_element_order(&delta, &e1).unwrap(), 15);
        assert_eq!(ideal_element_order(&tau, &e2).unwrap(), 15);
    }

    #[test]
    fn element_order_errors() {
        let f7 = factor_xp_minus1(7).unwrap();
        let e1 = f7.ideals[1].idempotent;
        let e2 = f7.ideals[2].idempotent;
        assert_eq!(ideal_element_order(&RingPoly::zero(7), &e1), Err(Error::ZeroElement));
        assert_eq!(ideal_element_order(&e2, &e1), Err(Error::NotInIdeal));
    }

    #[test]
    fn field_inverse() {
        for p in [7u64, 11, 17, 23] {
            let f = factor_xp_minus1(p).unwrap();
            for ideal in &f.ideals {
                for bits in [1u64, 5, 77, 1234] {
                    let a = RingPoly::from_bits(p as u32, bits) * ideal.idempotent;
                    if a.is_zero() {
                        continue;
                    }
                    assert_eq!(a * ideal.inverse(&a).unwrap(), ideal.idempotent);
                }
            }
        }
    }

    #[test]
    fn large_prime_factorization() {
        let f = factor_xp_minus1(61).unwrap();
        assert_eq!(f.m, 60);
        assert_eq!(f.r(), 1);
    }
}
