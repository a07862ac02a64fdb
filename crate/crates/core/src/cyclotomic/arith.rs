//! Small integer number theory: primality, multiplicative order of 2 and
//! factorization of `2^m - 1`-sized integers.

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Pollard-Brent; `n` must be composite and odd.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization as sorted `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut primes = Vec::new();
    for q in [2u64, 3, 5, 7, 11, 13] {
        while n % q == 0 {
            primes.push(q);
            n /= q;
        }
    }
    let mut stack = vec![n];
    while let Some(v) = stack.pop() {
        if v == 1 {
            continue;
        }
        if is_prime(v) {
            primes.push(v);
        } else {
            let d = pollard_rho(v);
            stack.push(d);
            stack.push(v / d);
        }
    }
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p > 61 {
        return Err(Error::PrimeTooLarge(p));
    }
    Ok(())
}

/// Multiplicative order of 2 modulo an odd prime `p`.
pub fn ord2_mod(p: u64) -> Result<u32> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let mut m = 1u32;
    let mut v = 2 % p;
    while v != 1 {
        v = v * 2 % p;
        m += 1;
    }
    Ok(m)
}

/// 2-cyclotomic cosets modulo `p`, each listed in doubling order from its
/// least element; cosets are sorted by that least element.
pub fn cyclotomic_cosets(p: u64) -> Result<Vec<Vec<u32>>> {
    check_odd_prime(p)?;
    let p = p as u32;
    let mut seen = vec![false; p as usize];
    let mut cosets = Vec::new();
    for r in 0..p {
        if seen[r as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut v = r;
        while !seen[v as usize] {
            seen[v as usize] = true;
            coset.push(v);
            v = v * 2 % p;
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Smallest primitive root modulo the prime `p`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let phi = p - 1;
    let factors = factorize(phi);
    (2..p)
        .find(|&g| factors.iter().all(|&(q, _)| pow_mod(g, phi / q, p) != 1))
        .unwrap_or(1)
}
