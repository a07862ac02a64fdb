//! Decomposition of a binary code invariant under a permutation `σ` of odd
//! prime order `p` with `c` cycles of length `p` and `f` fixed points.
//!
//! Coordinates `0..c*p` are grouped into cycles of `p` consecutive positions;
//! inside cycle `b`, position `b*p + r` carries the coefficient of `x^r`, so
//! `σ` acts on each cycle as multiplication by `x`. The remaining `f`
//! coordinates are fixed.

use serde::Serialize;

use crate::cyclotomic::arith::check_odd_prime;
use crate::cyclotomic::{Factorization, IdealField, RingPoly};
use crate::error::{Error, Result};
use crate::gf2::{mask, BinaryCode, BitVector, MAX_LENGTH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SigmaPermutation {
    p: u32,
    c: usize,
    f: usize,
}

impl SigmaPermutation {
    pub fn new(p: u32, c: usize, f: usize) -> Result<Self> {
        check_odd_prime(p as u64)?;
        let n = c * p as usize + f;
        if n > MAX_LENGTH {
            return Err(Error::LengthTooLarge(n));
        }
        Ok(SigmaPermutation { p, c, f })
    }

    /// Reads a permutation of order `p` given as an image table (`perm[i]` is
    /// the image of `i`) and returns it in normal form together with the
    /// relabelling `map` such that `code.permuted(&map)` is invariant under
    /// the normal form whenever `code` is invariant under `perm`.
    pub fn from_permutation(perm: &[usize]) -> Result<(Self, Vec<usize>)> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &x in perm {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Inconsistent("not a permutation".into()));
            }
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut fixed = Vec::new();
        let mut visited = vec![false; n];
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut x = perm[start];
            while x != start {
                visited[x] = true;
                cycle.push(x);
                x = perm[x];
            }
            if cycle.len() == 1 {
                fixed.push(start);
            } else {
                cycles.push(cycle);
            }
        }
        let p = cycles.first().map_or(0, |c| c.len());
        if cycles.is_empty() || cycles.iter().any(|c| c.len() != p) {
            return Err(Error::Inconsistent(
                "permutation must consist of cycles of one prime length and fixed points".into(),
            ));
        }
        let sigma = SigmaPermutation::new(p as u32, cycles.len(), fixed.len())?;
        let mut map = vec![0; n];
        for (b, cycle) in cycles.iter().enumerate() {
            for (r, &x) in cycle.iter().enumerate() {
                map[x] = b * p + r;
            }
        }
        for (i, &x) in fixed.iter().enumerate() {
            map[x] = cycles.len() * p + i;
        }
        Ok((sigma, map))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn n(&self) -> usize {
        self.c * self.p as usize + self.f
    }

    /// The image table of `σ` on `0..n`.
    pub fn as_permutation(&self) -> Vec<usize> {
        let p = self.p as usize;
        (0..self.n())
            .map(|i| if i < self.c * p { i - i % p + (i % p + 1) % p } else { i })
            .collect()
    }

    pub(crate) fn block(&self, w: u64, b: usize) -> u64 {
        (w >> (b * self.p as usize)) & mask(self.p as usize)
    }

    pub(crate) fn apply_word(&self, w: u64) -> u64 {
        let p = self.p as usize;
        let mut out = w & !mask(self.c * p);
        for b in 0..self.c {
            let r = RingPoly::from_bits(self.p, self.block(w, b)).shift(1);
            out |= r.bits() << (b * p);
        }
        out
    }

    pub fn apply(&self, v: &BitVector) -> BitVector {
        BitVector::from_word(v.len(), self.apply_word(v.word()))
    }

    pub fn is_automorphism(&self, code: &BinaryCode) -> bool {
        code.n() == self.n()
            && code
                .words()
                .iter()
                .all(|&r| code.contains_word(self.apply_word(r)))
    }

    fn require_automorphism(&self, code: &BinaryCode) -> Result<()> {
        if code.n() != self.n() {
            return Err(Error::LengthMismatch { left: code.n(), right: self.n() });
        }
        if !self.is_automorphism(code) {
            return Err(Error::NotAutomorphism);
        }
        Ok(())
    }

    /// Vectors fixed by `σ`: constant on every cycle.
    pub fn fixed_space(&self) -> BinaryCode {
        let p = self.p as usize;
        let mut rows: Vec<u64> = (0..self.c).map(|b| mask(p) << (b * p)).collect();
        rows.extend((0..self.f).map(|i| 1u64 << (self.c * p + i)));
        BinaryCode::from_words(self.n(), rows)
    }

    /// Vectors of even weight on every cycle and zero on the fixed points.
    pub fn even_space(&self) -> BinaryCode {
        let p = self.p as usize;
        let rows = (0..self.c)
            .flat_map(|b| (1..p).map(move |r| (1u64 << (b * p)) | (1u64 << (b * p + r))))
            .collect();
        BinaryCode::from_words(self.n(), rows)
    }

    pub(crate) fn is_cycle_constant(&self, w: u64) -> bool {
        let full = mask(self.p as usize);
        (0..self.c).all(|b| matches!(self.block(w, b), 0) || self.block(w, b) == full)
    }

    pub(crate) fn is_even_on_cycles(&self, w: u64, len: usize) -> bool {
        let cp = self.c * self.p as usize;
        (w >> cp) & mask(len.saturating_sub(cp)) == 0
            && (0..self.c).all(|b| self.block(w, b).count_ones() % 2 == 0)
    }

    /// Expands a word of length `c+f` by repeating each of the first `c` bits
    /// `p` times.
    pub(crate) fn lift_word(&self, w: u64) -> u64 {
        let p = self.p as usize;
        let mut out = (w >> self.c) << (self.c * p);
        for b in 0..self.c {
            if w >> b & 1 == 1 {
                out |= mask(p) << (b * p);
            }
        }
        out
    }

    /// Splits a word of length `c*p` into its `c` cycle components.
    pub(crate) fn to_ring_vector(&self, w: u64) -> Vec<RingPoly> {
        (0..self.c)
            .map(|b| RingPoly::from_bits(self.p, self.block(w, b)))
            .collect()
    }

    pub(crate) fn from_ring_vector(&self, v: &[RingPoly]) -> u64 {
        v.iter()
            .enumerate()
            .fold(0, |acc, (b, r)| acc | (r.bits() << (b * self.p as usize)))
    }
}

/// Gaussian elimination over the field `I_j`, returning the unique reduced
/// row echelon form (pivot entries equal to the idempotent).
pub(crate) fn field_rref(field: &IdealField, rows: Vec<Vec<RingPoly>>) -> Vec<Vec<RingPoly>> {
    let mut rows: Vec<Vec<RingPoly>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .collect();
    let len = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..len {
        let Some(pos) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pos);
        let inv = field.inverse(&rows[rank][col]).expect("nonzero ideal element");
        for a in rows[rank].iter_mut() {
            *a = *a * inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let factor = rows[i][col];
                for t in 0..len {
                    let sub = factor * rows[rank][t];
                    rows[i][t] += sub;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// A linear code `M_j` of length `c` over the minimal ideal `I_j`, kept in
/// reduced row echelon form over the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleCode {
    ideal: usize,
    length: usize,
    rows: Vec<Vec<RingPoly>>,
}

impl ModuleCode {
    pub fn zero(ideal: usize, length: usize) -> Self {
        ModuleCode { ideal, length, rows: Vec::new() }
    }

    /// Builds the module spanned (over `I_ideal`) by `rows`; every entry must
    /// lie in the ideal.
    pub fn new(
        fact: &Factorization,
        ideal: usize,
        length: usize,
        rows: Vec<Vec<RingPoly>>,
    ) -> Result<Self> {
        let field = fact
            .ideals
            .get(ideal)
            .ok_or_else(|| Error::Inconsistent(format!("no ideal with index {ideal}")))?;
        for row in &rows {
            if row.len() != length {
                return Err(Error::LengthMismatch { left: row.len(), right: length });
            }
            for a in row {
                if a.modulus() != fact.p {
                    return Err(Error::Inconsistent("entry over a different modulus".into()));
                }
                if !field.contains(a) {
                    return Err(Error::NotInIdeal);
                }
            }
        }
        Ok(ModuleCode {
            ideal,
            length,
            rows: field_rref(field, rows),
        })
    }

    pub fn ideal(&self) -> usize {
        self.ideal
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Dimension over the ideal field.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<RingPoly>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The module as a binary code of length `c*p`: spanned by `x^t * row`
    /// for `0 <= t < m`.
    pub fn to_binary(&self, fact: &Factorization) -> BinaryCode {
        let sigma = SigmaPermutation { p: fact.p, c: self.length, f: 0 };
        let m = fact.ideals[self.ideal].degree;
        let mut words = Vec::with_capacity(self.rows.len() * m as usize);
        for row in &self.rows {
            for t in 0..m {
                let shifted: Vec<RingPoly> = row.iter().map(|a| a.shift(t)).collect();
                words.push(sigma.from_ring_vector(&shifted));
            }
        }
        BinaryCode::from_words(self.length * fact.p as usize, words)
    }

    /// Recovers a module from its binary image (length `c*p`, all blocks in
    /// the ideal).
    pub fn from_binary(fact: &Factorization, ideal: usize, code: &BinaryCode) -> Result<Self> {
        let p = fact.p as usize;
        if code.n() % p != 0 {
            return Err(Error::LengthMismatch { left: code.n(), right: p });
        }
        let sigma = SigmaPermutation { p: fact.p, c: code.n() / p, f: 0 };
        let rows = code.words().iter().map(|&w| sigma.to_ring_vector(w)).collect();
        let module = ModuleCode::new(fact, ideal, sigma.c, rows)?;
        if module.k() * fact.ideals[ideal].degree as usize != code.k() {
            return Err(Error::Inconsistent("binary code is not a module over the ideal".into()));
        }
        Ok(module)
    }

    /// Image under `x -> x^t`; lands in the ideal `fact.substitution_image`.
    pub fn substitute(&self, fact: &Factorization, t: u32) -> Self {
        let ideal = fact.substitution_image(self.ideal, t);
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|a| a.substitute(t)).collect())
            .collect();
        ModuleCode {
            ideal,
            length: self.length,
            rows: field_rref(&fact.ideals[ideal], rows),
        }
    }

    /// Multiplies coordinate `j` by `x^k`.
    pub fn shift_coordinate(&self, fact: &Factorization, j: usize, k: u32) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r[j] = r[j].shift(k);
                r
            })
            .collect();
        ModuleCode {
            ideal: self.ideal,
            length: self.length,
            rows: field_rref(&fact.ideals[self.ideal], rows),
        }
    }

    /// Moves coordinate `i` to position `perm[i]`.
    pub fn permute_coordinates(&self, fact: &Factorization, perm: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = r.clone();
                for (i, &to) in perm.iter().enumerate() {
                    out[to] = r[i];
                }
                out
            })
            .collect();
        ModuleCode {
            ideal: self.ideal,
            length: self.length,
            rows: field_rref(&fact.ideals[self.ideal], rows),
        }
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                let parts: Vec<String> = r.iter().map(|a| a.to_string()).collect();
                format!("({})", parts.join(", "))
            })
            .collect()
    }
}

/// `F_σ(C)`: codewords fixed by `σ`.
pub fn fixed_subcode(code: &BinaryCode, sigma: &SigmaPermutation) -> Result<BinaryCode> {
    sigma.require_automorphism(code)?;
    code.intersect(&sigma.fixed_space())
}

/// `E_σ(C)`: codewords of even weight on every cycle and zero on fixed points.
pub fn even_subcode(code: &BinaryCode, sigma: &SigmaPermutation) -> Result<BinaryCode> {
    sigma.require_automorphism(code)?;
    code.intersect(&sigma.even_space())
}

/// `C_π`: one coordinate per cycle followed by the fixed coordinates.
pub fn pi_project(fixed: &BinaryCode, sigma: &SigmaPermutation) -> Result<BinaryCode> {
    if fixed.n() != sigma.n() {
        return Err(Error::LengthMismatch { left: fixed.n(), right: sigma.n() });
    }
    let p = sigma.p as usize;
    let mut rows = Vec::with_capacity(fixed.k());
    for &w in fixed.words() {
        if !sigma.is_cycle_constant(w) {
            return Err(Error::NotCycleConstant);
        }
        let mut out = (w >> (sigma.c * p)) << sigma.c;
        for b in 0..sigma.c {
            out |= (w >> (b * p) & 1) << b;
        }
        rows.push(out);
    }
    Ok(BinaryCode::from_words(sigma.c + sigma.f, rows))
}

/// Inverse of [`pi_project`].
pub fn pi_lift(c_pi: &BinaryCode, sigma: &SigmaPermutation) -> Result<BinaryCode> {
    if c_pi.n() != sigma.c + sigma.f {
        return Err(Error::LengthMismatch { left: c_pi.n(), right: sigma.c + sigma.f });
    }
    let rows = c_pi.words().iter().map(|&w| sigma.lift_word(w)).collect();
    Ok(BinaryCode::from_words(sigma.n(), rows))
}

/// Splits `C_φ`, the image of `E_σ(C)*` (length `c*p`), into its components
/// `M_1, …, M_r`, one per minimal ideal inside the even-weight subring.
pub fn phi_project(
    estar: &BinaryCode,
    sigma: &SigmaPermutation,
    fact: &Factorization,
) -> Result<Vec<ModuleCode>> {
    let cp = sigma.c * sigma.p as usize;
    if estar.n() != cp {
        return Err(Error::LengthMismatch { left: estar.n(), right: cp });
    }
    if fact.p != sigma.p {
        return Err(Error::Inconsistent("factorization and σ use different primes".into()));
    }
    if estar.words().iter().any(|&w| !sigma.is_even_on_cycles(w, cp)) {
        return Err(Error::NotEvenOnCycles);
    }
    let vectors: Vec<Vec<RingPoly>> =
        estar.words().iter().map(|&w| sigma.to_ring_vector(w)).collect();
    let mut modules = Vec::with_capacity(fact.r());
    for j in 1..=fact.r() {
        let e = fact.ideals[j].idempotent;
        let projected = vectors
            .iter()
            .map(|v| v.iter().map(|&a| a * e).collect())
            .collect();
        modules.push(ModuleCode::new(fact, j, sigma.c, projected)?);
    }
    let m = fact.m as usize;
    let total: usize = modules.iter().map(|mj| mj.k() * m).sum();
    if total != estar.k() {
        return Err(Error::Inconsistent(format!(
            "module dimensions sum to {total}, expected {}",
            estar.k()
        )));
    }
    Ok(modules)
}

/// Builds the binary code with `C_π = c_pi` and `C_φ = ⊕ modules`.
pub fn assemble_code(
    c_pi: &BinaryCode,
    modules: &[ModuleCode],
    sigma: &SigmaPermutation,
    fact: &Factorization,
) -> Result<BinaryCode> {
    if fact.p != sigma.p {
        return Err(Error::Inconsistent("factorization and σ use different primes".into()));
    }
    let mut rows: Vec<u64> = pi_lift(c_pi, sigma)?.words().to_vec();
    for module in modules {
        if module.length != sigma.c {
            return Err(Error::LengthMismatch { left: module.length, right: sigma.c });
        }
        if module.ideal == 0 || module.ideal > fact.r() {
            return Err(Error::Inconsistent(format!(
                "module over ideal {} is not inside the even-weight subring",
                module.ideal
            )));
        }
        rows.extend_from_slice(module.to_binary(fact).words());
    }
    Ok(BinaryCode::from_words(sigma.n(), rows))
}

/// The full decomposition of a `σ`-invariant code.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub sigma: SigmaPermutation,
    pub fixed: BinaryCode,
    pub even: BinaryCode,
    pub c_pi: BinaryCode,
    /// `M_1, …, M_r`; `modules[j-1]` lives over ideal `j`.
    pub modules: Vec<ModuleCode>,
}

impl Decomposition {
    pub fn k_pi(&self) -> usize {
        self.c_pi.k()
    }

    pub fn module_dims(&self) -> Vec<usize> {
        self.modules.iter().map(ModuleCode::k).collect()
    }

    /// `E_σ(C)*`: the even subcode with the fixed coordinates deleted.
    pub fn even_star(&self) -> BinaryCode {
        self.even.truncate(self.sigma.c * self.sigma.p as usize)
    }

    pub fn report(&self) -> DecompositionReport {
        DecompositionReport {
            p: self.sigma.p,
            c: self.sigma.c,
            f: self.sigma.f,
            k_pi: self.k_pi(),
            k_j: self.module_dims(),
            c_pi: self.c_pi.generator().iter().map(|g| g.to_string()).collect(),
            modules: self.modules.iter().map(ModuleCode::row_strings).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub p: u32,
    pub c: usize,
    pub f: usize,
    pub k_pi: usize,
    pub k_j: Vec<usize>,
    pub c_pi: Vec<String>,
    pub modules: Vec<Vec<String>>,
}

pub fn decompose(
    code: &BinaryCode,
    sigma: &SigmaPermutation,
    fact: &Factorization,
) -> Result<Decomposition> {
    let fixed = fixed_subcode(code, sigma)?;
    let even = even_subcode(code, sigma)?;
    let c_pi = pi_project(&fixed, sigma)?;
    let estar = even.truncate(sigma.c * sigma.p as usize);
    let modules = phi_project(&estar, sigma, fact)?;
    Ok(Decomposition { sigma: *sigma, fixed, even, c_pi, modules })
}
