//! Elements of the quotient ring `F_2[x]/(x^p - 1)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::gf2::mask;

/// An element of `F_2[x]/(x^p - 1)`, bit `i` holding the coefficient of `x^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingPoly {
    p: u32,
    bits: u64,
}

#[inline]
fn rotl(b: u64, i: u32, p: u32) -> u64 {
    if i == 0 {
        b
    } else {
        ((b << i) | (b >> (p - i))) & mask(p as usize)
    }
}

impl RingPoly {
    pub fn zero(p: u32) -> Self {
        assert!((2..64).contains(&p), "modulus {p} out of range");
        RingPoly { p, bits: 0 }
    }

    pub fn one(p: u32) -> Self {
        Self::monomial(p, 0)
    }

    pub fn x(p: u32) -> Self {
        Self::monomial(p, 1)
    }

    pub fn monomial(p: u32, i: u32) -> Self {
        let mut r = Self::zero(p);
        r.bits = 1 << (i % p);
        r
    }

    /// `x^{i_1} + x^{i_2} + ...`; exponents are reduced mod `p`.
    pub fn from_exponents(p: u32, exps: &[u32]) -> Self {
        let mut r = Self::zero(p);
        for &e in exps {
            r.bits ^= 1 << (e % p);
        }
        r
    }

    pub(crate) fn from_bits(p: u32, bits: u64) -> Self {
        debug_assert!((2..64).contains(&p));
        RingPoly {
            p,
            bits: bits & mask(p as usize),
        }
    }

    pub(crate) fn bits(&self) -> u64 {
        self.bits
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn coefficient(&self, i: u32) -> bool {
        self.bits >> (i % self.p) & 1 == 1
    }

    pub fn exponents(&self) -> Vec<u32> {
        crate::gf2::iter_ones(self.bits).map(|i| i as u32).collect()
    }

    /// `v(x^{-1}) = v(x^{p-1})`.
    pub fn conjugate(&self) -> Self {
        self.substitute(self.p - 1)
    }

    /// `v(x^t)`.
    pub fn substitute(&self, t: u32) -> Self {
        let mut out = 0u64;
        for i in crate::gf2::iter_ones(self.bits) {
            out ^= 1 << ((i as u64 * t as u64) % self.p as u64);
        }
        RingPoly { p: self.p, bits: out }
    }

    /// `x^k v(x)`.
    pub fn shift(&self, k: u32) -> Self {
        RingPoly {
            p: self.p,
            bits: rotl(self.bits, k % self.p, self.p),
        }
    }

    /// `self^k`, with `identity` standing for the empty product (the ring's
    /// one, or an ideal's idempotent when computing inside that ideal).
    pub fn pow(&self, mut k: u64, identity: RingPoly) -> Self {
        let mut acc = identity;
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    /// Parses `1+x^3+x^5+x^6`-style sums of monomials.
    pub fn parse(p: u32, s: &str) -> Result<Self> {
        let mut r = Self::zero(p);
        let s = s.trim();
        if s == "0" {
            return Ok(r);
        }
        for term in s.split('+') {
            let term = term.trim();
            let e = match term {
                "1" => 0,
                "x" => 1,
                t if t.starts_with("x^") => t[2..].parse::<u32>().map_err(|_| Error::Parse {
                    line: 1,
                    msg: format!("bad exponent in {t:?}"),
                })?,
                t => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("bad monomial {t:?}"),
                    })
                }
            };
            r.bits ^= 1 << (e % p);
        }
        Ok(r)
    }
}

impl Add for RingPoly {
    type Output = RingPoly;
    fn add(self, rhs: RingPoly) -> RingPoly {
        assert_eq!(self.p, rhs.p);
        RingPoly {
            p: self.p,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl AddAssign for RingPoly {
    fn add_assign(&mut self, rhs: RingPoly) {
        assert_eq!(self.p, rhs.p);
        self.bits ^= rhs.bits;
    }
}

impl Mul for RingPoly {
    type Output = RingPoly;
    fn mul(self, rhs: RingPoly) -> RingPoly {
        assert_eq!(self.p, rhs.p);
        let mut out = 0u64;
        for i in crate::gf2::iter_ones(self.bits) {
            out ^= rotl(rhs.bits, i as u32, self.p);
        }
        RingPoly { p: self.p, bits: out }
    }
}

impl fmt::Display for RingPoly {
    /// Ascending monomials, e.g. `1+x^3+x^5+x^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for i in crate::gf2::iter_ones(self.bits) {
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

impl fmt::Debug for RingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingPoly<{}>({self})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem(p: u32) -> impl Strategy<Value = RingPoly> {
        any::<u64>().prop_map(move |b| RingPoly::from_bits(p, b))
    }

    #[test]
    fn x_to_the_p_is_one() {
        for p in [3, 7, 17, 61] {
            assert_eq!(RingPoly::x(p).pow(p as u64, RingPoly::one(p)), RingPoly::one(p));
        }
    }

    #[test]
    fn display_and_parse() {
        let e2 = RingPoly::from_exponents(7, &[0, 3, 5, 6]);
        assert_eq!(e2.to_string(), "1+x^3+x^5+x^6");
        assert_eq!(RingPoly::parse(7, "1+x^3+x^5+x^6").unwrap(), e2);
        assert_eq!(RingPoly::parse(7, "x+x^9").unwrap(), RingPoly::from_exponents(7, &[1, 2]));
        assert!(RingPoly::parse(7, "1+y").is_err());
    }

    proptest! {
        #[test]
        fn ring_laws(p in prop::sample::select(vec![3u32, 5, 7, 11, 13, 17, 23, 31, 61]),
                     seed in any::<[u64; 3]>()) {
            let a = RingPoly::from_bits(p, seed[0]);
            let b = RingPoly::from_bits(p, seed[1]);
            let c = RingPoly::from_bits(p, seed[2]);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a.conjugate().conjugate(), a);
            prop_assert_eq!((a * b).conjugate(), a.conjugate() * b.conjugate());
            prop_assert_eq!(a.shift(1), RingPoly::x(p) * a);
        }

        #[test]
        fn squaring_is_substitution_by_two(a in elem(17)) {
            prop_assert_eq!(a * a, a.substitute(2));
        }
    }
}
