//! Colour refinement and individualization on the bipartite incidence graph
//! between coordinates and a weight-defined set of codewords.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::gf2::{iter_ones, BinaryCode};

#[inline]
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Columns `0..ncols` followed by one vertex per selected codeword.
pub(crate) struct Incidence {
    pub ncols: usize,
    words: Vec<u64>,
    col_words: Vec<Vec<u32>>,
}

impl Incidence {
    /// Uses the codewords of the smallest nonzero weights, adding weight
    /// classes until they span the code.
    pub fn new(code: &BinaryCode, weights_present: &[usize]) -> Incidence {
        let n = code.n();
        let mut words = Vec::new();
        for &w in weights_present {
            code.for_each_codeword(|c| {
                if c.count_ones() as usize == w {
                    words.push(c);
                }
            });
            let mut span = words.clone();
            crate::gf2::rref_words(&mut span, n);
            if span.len() == code.k() {
                break;
            }
        }
        let mut col_words = vec![Vec::new(); n];
        for (i, &w) in words.iter().enumerate() {
            for c in iter_ones(w) {
                col_words[c].push(i as u32);
            }
        }
        Incidence { ncols: n, words, col_words }
    }

    fn vertices(&self) -> usize {
        self.ncols + self.words.len()
    }

    pub fn initial_colors(&self) -> Vec<u32> {
        let mut colors = vec![0u32; self.vertices()];
        for (i, &w) in self.words.iter().enumerate() {
            colors[self.ncols + i] = 1 + w.count_ones();
        }
        colors
    }
}

/// An equitable colouring together with the trace of the refinement that
/// produced it.
#[derive(Clone)]
pub(crate) struct Coloring {
    pub colors: Vec<u32>,
    pub count: u32,
    pub trace: u64,
}

impl Coloring {
    pub fn column_cells(&self, ncols: usize) -> Vec<Vec<usize>> {
        let mut cells: Vec<Vec<usize>> = vec![Vec::new(); self.count as usize];
        for c in 0..ncols {
            cells[self.colors[c] as usize].push(c);
        }
        cells
    }

    pub fn columns_discrete(&self, ncols: usize) -> bool {
        let mut seen = vec![false; self.count as usize];
        (0..ncols).all(|c| !std::mem::replace(&mut seen[self.colors[c] as usize], true))
    }

    /// The non-singleton column cell chosen for branching: smallest size,
    /// ties broken by colour. Depends only on the colouring, so corresponding
    /// nodes of isomorphic graphs choose corresponding cells.
    pub fn target_cell(&self, ncols: usize) -> Option<Vec<usize>> {
        self.column_cells(ncols)
            .into_iter()
            .filter(|c| c.len() > 1)
            .min_by_key(|c| c.len())
    }
}

/// Refines `colors` to the coarsest equitable colouring below it. New colours
/// are ranks of (old colour, hash of neighbour-colour multiset), so the
/// result is a canonical function of the input.
pub(crate) fn refine(g: &Incidence, mut colors: Vec<u32>, parent_trace: u64) -> Coloring {
    let nv = g.vertices();
    let mut count = count_colors(&colors);
    let mut hasher = DefaultHasher::new();
    parent_trace.hash(&mut hasher);
    let mut sig = vec![0u64; nv];
    let mut order: Vec<usize> = (0..nv).collect();
    loop {
        let h: Vec<u64> = colors.iter().map(|&c| mix(c as u64)).collect();
        for (c, ws) in g.col_words.iter().enumerate() {
            sig[c] = ws
                .iter()
                .fold(0u64, |acc, &w| acc.wrapping_add(h[g.ncols + w as usize]));
        }
        for (i, &w) in g.words.iter().enumerate() {
            sig[g.ncols + i] = iter_ones(w).fold(0u64, |acc, c| acc.wrapping_add(h[c]));
        }
        order.sort_unstable_by_key(|&v| (colors[v], sig[v]));
        let mut new_colors = vec![0u32; nv];
        let mut rank = 0u32;
        for idx in 0..nv {
            let v = order[idx];
            if idx > 0 {
                let u = order[idx - 1];
                if (colors[u], sig[u]) != (colors[v], sig[v]) {
                    (colors[u], sig[u], idx).hash(&mut hasher);
                    rank += 1;
                }
            }
            new_colors[v] = rank;
        }
        let last = order[nv - 1];
        (colors[last], sig[last], nv).hash(&mut hasher);
        let new_count = rank + 1;
        colors = new_colors;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    Coloring { colors, count, trace: hasher.finish() }
}

fn count_colors(colors: &[u32]) -> u32 {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() as u32
}

/// Gives vertex `v` a fresh colour and refines.
pub(crate) fn individualize(g: &Incidence, base: &Coloring, v: usize) -> Coloring {
    let mut colors = base.colors.clone();
    colors[v] = base.count;
    refine(g, colors, base.trace.wrapping_add(mix(base.count as u64)))
}

/// Searches for an isomorphism from `(ga, ca)` to `(gb, cb)` that passes
/// `accept`, returning the column permutation `i -> perm[i]`. The left side
/// always branches on the first vertex of its target cell; the right side
/// tries every vertex of the corresponding cell.
pub(crate) fn search<F>(
    ga: &Incidence,
    ca: &Coloring,
    gb: &Incidence,
    cb: &Coloring,
    accept: &mut F,
) -> Option<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    if ca.trace != cb.trace || ca.count != cb.count {
        return None;
    }
    let n = ga.ncols;
    if ca.columns_discrete(n) {
        let mut by_color = vec![usize::MAX; cb.count as usize];
        for c in 0..n {
            by_color[cb.colors[c] as usize] = c;
        }
        let perm: Vec<usize> = (0..n).map(|c| by_color[ca.colors[c] as usize]).collect();
        if perm.iter().any(|&x| x == usize::MAX) {
            return None;
        }
        return accept(&perm).then_some(perm);
    }
    let cell = ca.target_cell(n)?;
    let color = ca.colors[cell[0]];
    let left = individualize(ga, ca, cell[0]);
    for w in (0..n).filter(|&c| cb.colors[c] == color) {
        let right = individualize(gb, cb, w);
        if let Some(perm) = search(ga, &left, gb, &right, accept) {
            return Some(perm);
        }
    }
    None
}
