//! The extension field GF(2^m), used to build minimal polynomials of the
//! `p`-th roots of unity.

use super::arith::factorize;
use super::poly::{mul_mod, Gf2Poly};

pub(crate) struct ExtField {
    m: u32,
    modulus: Gf2Poly,
}

impl ExtField {
    /// GF(2^m) realised modulo the least irreducible polynomial of degree `m`.
    pub fn new(m: u32) -> ExtField {
        assert!((1..=62).contains(&m));
        let modulus = (0u64..)
            .map(|k| Gf2Poly((1u64 << m) | (k << 1) | 1))
            .find(|f| f.is_irreducible())
            .expect("irreducible polynomials exist in every degree");
        ExtField { m, modulus }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(Gf2Poly(a), Gf2Poly(b), self.modulus).0
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// An element of multiplicative order exactly `p`, where `p` is a prime
    /// dividing `2^m - 1`.
    pub fn root_of_unity(&self, p: u64) -> u64 {
        let group = (1u64 << self.m) - 1;
        assert_eq!(group % p, 0);
        debug_assert!(factorize(p).len() == 1);
        (2u64..)
            .map(|g| self.pow(g, group / p))
            .find(|&h| h != 1)
            .expect("the multiplicative group is cyclic")
    }

    /// `prod_{i in exps} (X + beta^i)`, which must have binary coefficients.
    pub fn minimal_polynomial(&self, beta: u64, exps: &[u32]) -> Gf2Poly {
        let mut coeffs = vec![1u64];
        for &e in exps {
            let root = self.pow(beta, e as u64);
            let mut next = vec![0u64; coeffs.len() + 1];
            for (j, &c) in coeffs.iter().enumerate() {
                next[j + 1] ^= c;
                next[j] ^= self.mul(root, c);
            }
            coeffs = next;
        }
        let mut out = 0u64;
        for (j, &c) in coeffs.iter().enumerate() {
            assert!(c <= 1, "minimal polynomial has a coefficient outside GF(2)");
            out |= c << j;
        }
        Gf2Poly(out)
    }
}
