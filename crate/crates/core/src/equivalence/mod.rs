//! Permutation equivalence of binary codes, automorphism group orders, and
//! orbit reduction of decomposition candidates.

mod orbit;
mod refine;

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::BinaryCode;
use refine::{individualize, refine, search, Coloring, Incidence};

pub use orbit::{orbit_reduce, CandidateOrbit, ModuleTuple, OrbitGroup};

/// Largest length accepted by the equivalence routines.
pub const MAX_EQUIVALENCE_LENGTH: usize = 40;
/// Largest dimension accepted by the equivalence routines.
pub const MAX_EQUIVALENCE_DIMENSION: usize = 20;

fn check_size(code: &BinaryCode) -> Result<()> {
    if code.n() > MAX_EQUIVALENCE_LENGTH || code.k() > MAX_EQUIVALENCE_DIMENSION {
        return Err(Error::SizeBound { n: code.n(), k: code.k() });
    }
    Ok(())
}

/// Result of an equivalence test. When `equivalent`, `permutation[i]` is the
/// coordinate of the second code that coordinate `i` of the first maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub equivalent: bool,
    pub permutation: Option<Vec<usize>>,
}

impl Serialize for EquivalenceCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("EquivalenceCertificate", 2)?;
        st.serialize_field("equivalent", &self.equivalent)?;
        st.serialize_field(
            "permutation",
            &self.permutation.as_deref().map(cycle_notation),
        )?;
        st.end()
    }
}

/// One-line cycle notation with 1-based points, e.g. `(1 3 2)(4 5)`; the
/// identity prints as `()`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = perm[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Precomputed data for one code.
struct Prepared {
    code: BinaryCode,
    weights: Vec<u64>,
    graph: Incidence,
    root: Coloring,
}

impl Prepared {
    fn new(code: &BinaryCode) -> Result<Prepared> {
        check_size(code)?;
        let we = code.weight_enumerator()?;
        let present: Vec<usize> = we.terms().into_iter().map(|(i, _)| i).filter(|&i| i > 0).collect();
        let graph = Incidence::new(code, &present);
        let root = refine(&graph, graph.initial_colors(), 0);
        Ok(Prepared {
            code: code.clone(),
            weights: we.coefficients().to_vec(),
            graph,
            root,
        })
    }

    fn invariant(&self) -> u64 {
        let mut h = DefaultHasher::new();
        (self.code.n(), self.code.k(), &self.weights, self.root.trace).hash(&mut h);
        h.finish()
    }
}

/// An invariant of permutation equivalence: equal for equivalent codes.
/// Combines the weight enumerator with the refined incidence structure.
pub fn equivalence_invariant(code: &BinaryCode) -> Result<u64> {
    Ok(Prepared::new(code)?.invariant())
}

/// Decides whether `b` is a coordinate permutation of `a`.
pub fn are_equivalent(a: &BinaryCode, b: &BinaryCode) -> Result<EquivalenceCertificate> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch { left: a.n(), right: b.n() });
    }
    let pa = Prepared::new(a)?;
    let pb = Prepared::new(b)?;
    Ok(equivalent_prepared(&pa, &pb))
}

fn equivalent_prepared(pa: &Prepared, pb: &Prepared) -> EquivalenceCertificate {
    let not = EquivalenceCertificate { equivalent: false, permutation: None };
    if pa.code.k() != pb.code.k() || pa.weights != pb.weights {
        return not;
    }
    let mut accept = |perm: &[usize]| pa.code.permuted(perm).map_or(false, |c| c == pb.code);
    match search(&pa.graph, &pa.root, &pb.graph, &pb.root, &mut accept) {
        Some(perm) => EquivalenceCertificate { equivalent: true, permutation: Some(perm) },
        None => not,
    }
}

/// Incremental classifier: keeps one prepared representative per class.
#[derive(Default)]
pub struct Classifier {
    reps: Vec<(u64, Prepared)>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the class index of `code`, creating a new class if it is
    /// inequivalent to every representative so far.
    pub fn insert(&mut self, code: &BinaryCode) -> Result<(usize, bool)> {
        let prepared = Prepared::new(code)?;
        let inv = prepared.invariant();
        for (i, (rep_inv, rep)) in self.reps.iter().enumerate() {
            if *rep_inv == inv && equivalent_prepared(rep, &prepared).equivalent {
                return Ok((i, false));
            }
        }
        self.reps.push((inv, prepared));
        Ok((self.reps.len() - 1, true))
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// Order of the group of coordinate permutations fixing the code.
pub fn automorphism_group_order(code: &BinaryCode) -> Result<u128> {
    let prepared = Prepared::new(code)?;
    stabilizer_order(&prepared, &prepared.root)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `|Aut(C)_coloring|` by the orbit–stabilizer theorem along the
/// individualization chain.
fn stabilizer_order(pr: &Prepared, coloring: &Coloring) -> Result<u128> {
    let n = pr.graph.ncols;
    let Some(cell) = coloring.target_cell(n) else {
        return Ok(1);
    };
    let v = cell[0];
    let left = individualize(&pr.graph, coloring, v);
    let mut uf = UnionFind((0..n).collect());
    let mut accept = |perm: &[usize]| pr.code.permuted(perm).map_or(false, |c| c == pr.code);
    for &w in &cell[1..] {
        if uf.find(w) == uf.find(v) {
            continue;
        }
        let right = individualize(&pr.graph, coloring, w);
        if let Some(perm) = search(&pr.graph, &left, &pr.graph, &right, &mut accept) {
            for (i, &j) in perm.iter().enumerate() {
                uf.union(i, j);
            }
        }
    }
    let root = uf.find(v);
    let orbit = cell.iter().filter(|&&w| uf.find(w) == root).count() as u128;
    let below = stabilizer_order(pr, &left)?;
    orbit.checked_mul(below).ok_or(Error::GroupOrderOverflow)
}
