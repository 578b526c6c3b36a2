//! Canonical forms and isomorphism-free enumeration of small graphs.
//!
//! The canonical form is the lexicographically least adjacency encoding over
//! all vertex orderings consistent with an equitable ordered partition:
//! cells are refined by neighbour counts until stable, the first non-singleton
//! cell is individualised vertex by vertex, and every resulting discrete
//! ordering is encoded. Refinement only prunes the ordering set; the minimum
//! itself is exact, so two graphs get equal forms iff they are isomorphic.

use crate::graph::{from_edge_mask, Graph, MAX_VERTICES};
use std::collections::HashSet;

/// Label-independent fingerprint of a graph: vertex count byte followed by
/// the packed upper triangle (colex order, MSB first) of the canonically
/// relabelled adjacency matrix. Equal forms iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.0[0] as usize;
        let mut g = Graph::empty(n);
        let mut idx = 0usize;
        for v in 1..n {
            for u in 0..v {
                let byte = self.0[1 + idx / 8];
                if byte >> (7 - idx % 8) & 1 == 1 {
                    g.set_edge(u, v, true);
                }
                idx += 1;
            }
        }
        g
    }
}

/// Packs `g` under the relabelling `perm` (old label -> new label).
fn encode(g: &Graph, perm: &[usize; MAX_VERTICES]) -> Vec<u8> {
    let n = g.n();
    let mut inv = [0usize; MAX_VERTICES];
    for v in 0..n {
        inv[perm[v]] = v;
    }
    let pairs = n * (n - 1) / 2;
    let mut out = vec![0u8; 1 + pairs.div_ceil(8)];
    out[0] = n as u8;
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(inv[u], inv[v]) {
                out[1 + idx / 8] |= 1 << (7 - idx % 8);
            }
            idx += 1;
        }
    }
    out
}

/// Equitable refinement: split every cell by neighbour counts into every
/// other cell, sub-cells ordered by ascending count, until stable. The
/// procedure depends only on the partition and adjacency, never on labels.
fn refine(g: &Graph, cells: &mut Vec<Vec<u8>>) {
    'scan: loop {
        for ci in 0..cells.len() {
            if cells[ci].len() <= 1 {
                continue;
            }
            for si in 0..cells.len() {
                let mut smask = 0u64;
                for &v in &cells[si] {
                    smask |= 1u64 << v;
                }
                let count = |v: u8| (g.neighbours(v as usize) & smask).count_ones();
                let c0 = count(cells[ci][0]);
                if cells[ci][1..].iter().all(|&v| count(v) == c0) {
                    continue;
                }
                // split cells[ci] by count, ascending
                let mut tagged: Vec<(u32, u8)> =
                    cells[ci].iter().map(|&v| (count(v), v)).collect();
                tagged.sort_unstable();
                let mut groups: Vec<Vec<u8>> = Vec::new();
                for (c, v) in tagged {
                    match groups.last_mut() {
                        Some(last) if count(last[0]) == c => last.push(v),
                        _ => groups.push(vec![v]),
                    }
                }
                cells.splice(ci..=ci, groups);
                continue 'scan;
            }
        }
        return;
    }
}

fn search(g: &Graph, cells: Vec<Vec<u8>>, best: &mut Option<Vec<u8>>) {
    let mut cells = cells;
    refine(g, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut perm = [0usize; MAX_VERTICES];
            for (pos, cell) in cells.iter().enumerate() {
                perm[cell[0] as usize] = pos;
            }
            let enc = encode(g, &perm);
            if best.as_ref().is_none_or(|b| enc < *b) {
                *best = Some(enc);
            }
        }
        Some(ci) => {
            let members = cells[ci].clone();
            for &v in &members {
                let mut next = cells.clone();
                next[ci] = vec![v];
                next.insert(ci + 1, members.iter().copied().filter(|&u| u != v).collect());
                search(g, next, best);
            }
        }
    }
}

/// Canonical form of `g`; invariant under every relabelling.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let cells = vec![(0..g.n() as u8).collect::<Vec<u8>>()];
    let mut best = None;
    search(g, cells, &mut best);
    CanonicalForm(best.expect("at least one discrete ordering"))
}

/// One representative per isomorphism class on exactly `n` vertices.
///
/// Up to 7 vertices this filters all `2^C(n,2)` labelled graphs through
/// canonical dedup; 8 vertices are reached by extending the 7-vertex
/// representatives with one new vertex over all of its possible
/// neighbourhoods (every 8-vertex graph arises this way from deleting its
/// last vertex). Larger n would need orderly generation, so it is refused.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n), "enumeration supported for 1..=8 vertices");
    if n <= 7 {
        let pairs = n * (n - 1) / 2;
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut out = Vec::new();
        for mask in 0u64..1 << pairs {
            let g = from_edge_mask(n, mask);
            if seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        }
        out
    } else {
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut out = Vec::new();
        for base in nonisomorphic_graphs(7) {
            for nb in 0u64..1 << 7 {
                let mut g = Graph::empty(8);
                for (u, v) in base.edges() {
                    g.set_edge(u, v, true);
                }
                g.set_neighbourhood(7, nb);
                if seen.insert(canonical_form(&g)) {
                    out.push(g);
                }
            }
        }
        out
    }
}

/// Connected representatives only.
pub fn connected_nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

// =============================================================================
// Tests
// =============================================================================
