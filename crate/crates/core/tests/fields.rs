use std::collections::HashSet;

use lcdforge::cyclotomic::{factor_xp_minus1, ideal_element_order, RingPoly};

#[test]
fn p11_field_is_generated_by_alpha_beta_gamma() {
    let p = 11;
    let e = RingPoly::parse(p, "x+x^2+x^3+x^4+x^5+x^6+x^7+x^8+x^9+x^10").unwrap();
    let alpha = RingPoly::parse(p, "x^9+x^2").unwrap();
    let beta = RingPoly::parse(p, "x^10+x^8+x^7+x^6+x^2+1").unwrap();
    let gamma = RingPoly::x(p) * e;
    assert_eq!(ideal_element_order(&alpha, &e).unwrap(), 31);
    assert_eq!(ideal_element_order(&beta, &e).unwrap(), 3);
    assert_eq!(ideal_element_order(&gamma, &e).unwrap(), 11);

    let mut seen = HashSet::new();
    for i in 0..31 {
        for j in 0..3 {
            for k in 0..11 {
                let a = alpha.pow(i, e) * beta.pow(j, e) * gamma.pow(k, e);
                assert!(!a.is_zero());
                assert_eq!(a * e, a);
                seen.insert(a);
            }
        }
    }
    assert_eq!(seen.len(), 1023);
}

#[test]
fn ideals_are_fields() {
    for p in [3u64, 5, 7, 11, 13, 17] {
        let fact = factor_xp_minus1(p).unwrap();
        for f in fact.ideals.iter().skip(1) {
            let basis = f.basis();
            let mut a = RingPoly::zero(p as u32);
            for g in 1u64..(1 << basis.len()) {
                a = a + basis[g.trailing_zeros() as usize];
                assert_eq!(a * f.idempotent, a);
                let inv = f.inverse(&a).unwrap();
                assert_eq!(a * inv, f.idempotent, "p={p} a={a}");
            }
        }
    }
}

#[test]
fn conjugation_is_multiplicative() {
    let p = 13;
    let a = RingPoly::parse(p, "1+x^3+x^4+x^11").unwrap();
    let b = RingPoly::parse(p, "x+x^2+x^7").unwrap();
    assert_eq!((a * b).conjugate(), a.conjugate() * b.conjugate());
    assert_eq!(a.conjugate().conjugate(), a);
}

#[test]
fn p17_reciprocal_pairing_is_trivial() {
    // 2^4 = -1 mod 17, so every factor is self-reciprocal.
    let fact = factor_xp_minus1(17).unwrap();
    assert_eq!((fact.s(), fact.t()), (2, 0));
    assert!(fact.ideals.iter().all(|f| f.partner == f.index));
}
