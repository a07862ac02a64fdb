//! Orbit reduction of `(C_π, M_1, …, M_r)` candidates under the group
//! generated by four families of coordinate permutations that commute with
//! the decomposition:
//!
//! * substitution `x -> x^t` inside every cycle (moves modules between ideals),
//! * multiplication of one cycle coordinate by `x` (a cyclic shift of that cycle),
//! * permutation of the cycles,
//! * permutation of the fixed points.
//!
//! Each generator is a coordinate permutation of the assembled binary code,
//! so orbit-mates always assemble to equivalent codes.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::cyclotomic::arith::primitive_root;
use crate::cyclotomic::Factorization;
use crate::decomposition::{assemble_code, ModuleCode, SigmaPermutation};
use crate::error::Result;
use crate::gf2::BinaryCode;

/// A point of the search space: `C_π` and one module per ideal `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleTuple {
    pub c_pi: BinaryCode,
    pub modules: Vec<ModuleCode>,
}

impl ModuleTuple {
    /// Fills in zero modules for missing ideals and orders by ideal index.
    pub fn new(c_pi: BinaryCode, modules: Vec<ModuleCode>, fact: &Factorization, c: usize) -> Self {
        let mut all: Vec<ModuleCode> = (1..=fact.r()).map(|j| ModuleCode::zero(j, c)).collect();
        for m in modules {
            let slot = m.ideal() - 1;
            all[slot] = m;
        }
        ModuleTuple { c_pi, modules: all }
    }

    pub fn assemble(&self, sigma: &SigmaPermutation, fact: &Factorization) -> Result<BinaryCode> {
        assemble_code(&self.c_pi, &self.modules, sigma, fact)
    }

    fn sorted(mut self) -> Self {
        self.modules.sort_by_key(ModuleCode::ideal);
        self
    }
}

/// The transformation group acting on [`ModuleTuple`]s for a fixed `σ`.
pub struct OrbitGroup<'a> {
    fact: &'a Factorization,
    sigma: SigmaPermutation,
    root: u32,
}

impl<'a> OrbitGroup<'a> {
    pub fn new(fact: &'a Factorization, sigma: SigmaPermutation) -> Self {
        OrbitGroup {
            fact,
            sigma,
            root: primitive_root(fact.p as u64) as u32,
        }
    }

    /// `x -> x^t` on every cycle.
    pub fn substitute(&self, s: &ModuleTuple, t: u32) -> ModuleTuple {
        ModuleTuple {
            c_pi: s.c_pi.clone(),
            modules: s.modules.iter().map(|m| m.substitute(self.fact, t)).collect(),
        }
        .sorted()
    }

    /// Multiplies cycle coordinate `j` by `x^k`.
    pub fn shift(&self, s: &ModuleTuple, j: usize, k: u32) -> ModuleTuple {
        ModuleTuple {
            c_pi: s.c_pi.clone(),
            modules: s
                .modules
                .iter()
                .map(|m| m.shift_coordinate(self.fact, j, k))
                .collect(),
        }
    }

    /// Moves cycle `i` to position `perm[i]`.
    pub fn permute_cycles(&self, s: &ModuleTuple, perm: &[usize]) -> ModuleTuple {
        let c = self.sigma.c();
        let full: Vec<usize> = (0..c + self.sigma.f())
            .map(|i| if i < c { perm[i] } else { i })
            .collect();
        ModuleTuple {
            c_pi: s.c_pi.permuted(&full).expect("length c+f"),
            modules: s
                .modules
                .iter()
                .map(|m| m.permute_coordinates(self.fact, perm))
                .collect(),
        }
    }

    /// Moves fixed point `i` to position `perm[i]`.
    pub fn permute_fixed(&self, s: &ModuleTuple, perm: &[usize]) -> ModuleTuple {
        let c = self.sigma.c();
        let full: Vec<usize> = (0..c + self.sigma.f())
            .map(|i| if i < c { i } else { c + perm[i - c] })
            .collect();
        ModuleTuple {
            c_pi: s.c_pi.permuted(&full).expect("length c+f"),
            modules: s.modules.clone(),
        }
    }

    fn generator_images(&self, s: &ModuleTuple) -> Vec<ModuleTuple> {
        let (c, f) = (self.sigma.c(), self.sigma.f());
        let mut out = vec![self.substitute(s, self.root)];
        out.extend((0..c).map(|j| self.shift(s, j, 1)));
        if c >= 2 {
            out.push(self.permute_cycles(s, &transposition(c)));
            out.push(self.permute_cycles(s, &rotation(c)));
        }
        if f >= 2 {
            out.push(self.permute_fixed(s, &transposition(f)));
            out.push(self.permute_fixed(s, &rotation(f)));
        }
        out
    }
}

fn transposition(len: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..len).collect();
    p.swap(0, 1);
    p
}

fn rotation(len: usize) -> Vec<usize> {
    (0..len).map(|i| (i + 1) % len).collect()
}

/// One orbit met by the candidate list: its representative is the earliest
/// candidate in the input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateOrbit {
    pub representative: usize,
    pub members: Vec<usize>,
    /// Size of the whole orbit in the tuple space, including points that are
    /// not candidates.
    pub orbit_size: usize,
}

/// Partitions `candidates` into orbits of `group`. Each orbit is explored
/// completely by breadth-first search, so two candidates share an orbit
/// exactly when some composition of generators maps one to the other.
pub fn orbit_reduce(candidates: &[ModuleTuple], group: &OrbitGroup<'_>) -> Vec<CandidateOrbit> {
    let mut index: HashMap<&ModuleTuple, Vec<usize>> = HashMap::new();
    for (i, c) in candidates.iter().enumerate() {
        index.entry(c).or_default().push(i);
    }
    let mut assigned = vec![false; candidates.len()];
    let mut orbits = Vec::new();
    for start in 0..candidates.len() {
        if assigned[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut seen: HashSet<ModuleTuple> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(candidates[start].clone());
        queue.push_back(candidates[start].clone());
        while let Some(s) = queue.pop_front() {
            if let Some(ids) = index.get(&s) {
                for &i in ids {
                    assigned[i] = true;
                    members.push(i);
                }
            }
            for image in group.generator_images(&s) {
                if !seen.contains(&image) {
                    seen.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }
        members.sort_unstable();
        orbits.push(CandidateOrbit {
            representative: start,
            members,
            orbit_size: seen.len(),
        });
    }
    log::debug!(
        "orbit reduction: {} candidates -> {} orbits",
        candidates.len(),
        orbits.len()
    );
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{factor_xp_minus1, RingPoly};

    #[test]
    fn p7_substitution_swaps_modules() {
        let fact = factor_xp_minus1(7).unwrap();
        let sigma = SigmaPermutation::new(7, 4, 0).unwrap();
        let g = OrbitGroup::new(&fact, sigma);
        let e1 = fact.ideals[1].idempotent;
        let e2 = fact.ideals[2].idempotent;
        let z = RingPoly::zero(7);
        let m1 = ModuleCode::new(&fact, 1, 4, vec![vec![e1, e1, e1, z]]).unwrap();
        let s = ModuleTuple::new(BinaryCode::zero(4).unwrap(), vec![m1], &fact, 4);
        let image = g.substitute(&s, 3);
        assert!(image.modules[0].is_zero());
        assert_eq!(image.modules[1].rows()[0], vec![e2, e2, e2, z]);
    }

    #[test]
    fn single_candidate_is_its_own_orbit() {
        let fact = factor_xp_minus1(3).unwrap();
        let sigma = SigmaPermutation::new(3, 1, 0).unwrap();
        let g = OrbitGroup::new(&fact, sigma);
        let s = ModuleTuple::new(BinaryCode::zero(1).unwrap(), vec![], &fact, 1);
        let orbits = orbit_reduce(&[s], &g);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].members, vec![0]);
        assert_eq!(orbits[0].orbit_size, 1);
    }

    #[test]
    fn shifts_collapse() {
        let fact = factor_xp_minus1(5).unwrap();
        let sigma = SigmaPermutation::new(5, 2, 0).unwrap();
        let g = OrbitGroup::new(&fact, sigma);
        let e = fact.ideals[1].idempotent;
        let candidates: Vec<ModuleTuple> = (0..5)
            .map(|i| {
                let m = ModuleCode::new(&fact, 1, 2, vec![vec![e, e.shift(i)]]).unwrap();
                ModuleTuple::new(BinaryCode::zero(2).unwrap(), vec![m], &fact, 2)
            })
            .collect();
        let orbits = orbit_reduce(&candidates, &g);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].members, vec![0, 1, 2, 3, 4]);
    }
}
