//! Polynomials over GF(2) of degree below 64, bit `i` holding the
//! coefficient of `x^i`.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gf2Poly(pub u64);

pub(crate) fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= (b as u128) << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly(0);
    pub const ONE: Gf2Poly = Gf2Poly(1);

    pub fn from_exponents(exps: &[u32]) -> Gf2Poly {
        Gf2Poly(exps.iter().fold(0, |acc, &e| acc ^ (1u64 << e)))
    }

    /// `x^p - 1` (equivalently `x^p + 1`).
    pub fn x_pow_minus_one(p: u32) -> Gf2Poly {
        assert!(p < 64);
        Gf2Poly((1u64 << p) | 1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree, with -1 for the zero polynomial.
    pub fn degree(self) -> i32 {
        63 - self.0.leading_zeros() as i32
    }

    /// Product; panics if the degree would exceed 63.
    pub fn mul(self, other: Gf2Poly) -> Gf2Poly {
        let prod = clmul(self.0, other.0);
        assert!(prod >> 64 == 0, "polynomial product exceeds degree 63");
        Gf2Poly(prod as u64)
    }

    pub fn div_rem(self, divisor: Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree();
        let mut q = 0u64;
        let mut r = self.0;
        while r != 0 && Gf2Poly(r).degree() >= dd {
            let shift = Gf2Poly(r).degree() - dd;
            q |= 1 << shift;
            r ^= divisor.0 << shift;
        }
        (Gf2Poly(q), Gf2Poly(r))
    }

    pub fn rem(self, divisor: Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }

    pub fn gcd(self, other: Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.rem(b);
            a = b;
            b = r;
        }
        a
    }

    /// `x^deg f(1/x)`.
    pub fn reciprocal(self) -> Gf2Poly {
        if self.is_zero() {
            return self;
        }
        let d = self.degree() as u32;
        let mut out = 0u64;
        for i in 0..=d {
            if self.0 >> i & 1 == 1 {
                out |= 1 << (d - i);
            }
        }
        Gf2Poly(out)
    }

    /// Ben-Or irreducibility test.
    pub fn is_irreducible(self) -> bool {
        let d = self.degree();
        if d < 1 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let x = Gf2Poly(2);
        let mut u = x;
        for _ in 1..=d / 2 {
            u = mul_mod(u, u, self);
            if (Gf2Poly(u.0 ^ x.0)).gcd(self) != Gf2Poly::ONE {
                return false;
            }
        }
        true
    }
}

pub(crate) fn reduce_wide(mut v: u128, modulus: Gf2Poly) -> u64 {
    let d = modulus.degree() as u32;
    for bit in (d..128).rev() {
        if v >> bit & 1 == 1 {
            v ^= (modulus.0 as u128) << (bit - d);
        }
    }
    v as u64
}

pub(crate) fn mul_mod(a: Gf2Poly, b: Gf2Poly, modulus: Gf2Poly) -> Gf2Poly {
    Gf2Poly(reduce_wide(clmul(a.0, b.0), modulus))
}

impl fmt::Display for Gf2Poly {
    /// Descending monomials, e.g. `x^3+x+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for i in (0..64).rev() {
            if self.0 >> i & 1 == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Gf2Poly::from_exponents(&[3, 1, 0]);
        let b = Gf2Poly::from_exponents(&[3, 2, 0]);
        assert_eq!(a.reciprocal(), b);
        let prod = a.mul(b).mul(Gf2Poly(0b11));
        assert_eq!(prod, Gf2Poly::x_pow_minus_one(7));
        assert_eq!(prod.div_rem(a), (b.mul(Gf2Poly(0b11)), Gf2Poly::ZERO));
        assert_eq!(a.gcd(b), Gf2Poly::ONE);
        assert_eq!(a.to_string(), "x^3+x+1");
    }

    #[test]
    fn irreducibility() {
        assert!(Gf2Poly::from_exponents(&[3, 1, 0]).is_irreducible());
        assert!(!Gf2Poly::from_exponents(&[2, 0]).is_irreducible());
        assert!(Gf2Poly::from_exponents(&[8, 5, 4, 3, 0]).is_irreducible());
        // (x^2+x+1)^2
        assert!(!Gf2Poly::from_exponents(&[4, 2, 0]).is_irreducible());
    }
}
