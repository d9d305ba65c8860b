//! Canonical forms for small graphs, used as memoization keys.
//!
//! Isomorphic graphs map to the same key. The algorithm is iterated
//! neighborhood refinement with individualization on the first ambiguous
//! cell, taking the minimum adjacency encoding over all branches. One
//! shortcut avoids the factorial blowup on highly symmetric graphs: when
//! every ambiguous cell is a clique or independent set whose members share
//! the same neighbors outside the cell, the members are interchangeable and
//! any within-cell order yields the same encoding.

use crate::graph::Graph;
use std::collections::BTreeMap;

/// Hashable canonical identity of a graph up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonKey {
    n: usize,
    bits: Vec<u64>,
}

impl CanonKey {
    pub fn n(&self) -> usize {
        self.n
    }
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    let initial = vec![(0..g.n()).collect::<Vec<_>>()];
    let mut best: Option<Vec<u64>> = None;
    search(g, initial, &mut best);
    CanonKey {
        n: g.n(),
        bits: best.expect("search always produces an encoding"),
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(g, cells);
    let first_ambiguous = cells.iter().position(|c| c.len() > 1);
    let target = match first_ambiguous {
        None => {
            consider(g, &cells, best);
            return;
        }
        Some(t) => {
            if all_cells_interchangeable(g, &cells) {
                consider(g, &cells, best);
                return;
            }
            t
        }
    };
    for &v in &cells[target] {
        let mut split = Vec::with_capacity(cells.len() + 1);
        for (i, cell) in cells.iter().enumerate() {
            if i == target {
                split.push(vec![v]);
                split.push(cell.iter().copied().filter(|&w| w != v).collect());
            } else {
                split.push(cell.clone());
            }
        }
        search(g, split, best);
    }
}

fn consider(g: &Graph, cells: &[Vec<usize>], best: &mut Option<Vec<u64>>) {
    let order: Vec<usize> = cells.iter().flatten().copied().collect();
    let bits = encode(g, &order);
    match best {
        Some(b) if *b <= bits => {}
        _ => *best = Some(bits),
    }
}

/// Splits cells by per-cell neighbor counts until stable. Sub-cells are
/// ordered by their count signature, which depends only on the isomorphism
/// type and the incoming cell order.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0usize; g.n()];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let signature = |v: usize| -> Vec<u32> {
            let mut counts = vec![0u32; cells.len()];
            for &w in g.neighbors(v) {
                counts[cell_of[w]] += 1;
            }
            counts
        };
        let mut next = Vec::with_capacity(cells.len());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                groups.entry(signature(v)).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            next.extend(groups.into_values());
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// True when within-cell order cannot affect the encoding: each ambiguous
/// cell induces a clique or an independent set, and its members all have the
/// same neighbors outside the cell.
fn all_cells_interchangeable(g: &Graph, cells: &[Vec<usize>]) -> bool {
    cells.iter().all(|cell| {
        if cell.len() == 1 {
            return true;
        }
        let inside = |v: usize| cell.contains(&v);
        let first_out: Vec<usize> = g.neighbors(cell[0]).iter().copied().filter(|&w| !inside(w)).collect();
        let uniform_outside = cell.iter().all(|&v| {
            let out: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| !inside(w)).collect();
            out == first_out
        });
        if !uniform_outside {
            return false;
        }
        let mut pairs_adjacent = 0usize;
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                if g.has_edge(u, v) {
                    pairs_adjacent += 1;
                }
            }
        }
        let total = cell.len() * (cell.len() - 1) / 2;
        pairs_adjacent == 0 || pairs_adjacent == total
    })
}

/// Upper-triangle adjacency bits under `order`, packed big-endian into u64
/// words. Encodings of equal-size graphs compare lexicographically.
fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let nbits = n * (n - 1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                words[idx / 64] |= 1u64 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    words
}
