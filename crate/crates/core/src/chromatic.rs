//! Exact chromatic number, proper-colouring counts, critical edges,
//! nearly-proper colouring counts, and their closed-form upper bounds.
//!
//! Counting never touches floating point: everything returns
//! arbitrary-precision integers.

use crate::graph::{Graph, MAX_VERTICES};
use crate::numbers::{count_pow, factorial, falling_factorial, Count};
use num_traits::{One, Zero};

/// Chromatic number plus the edges whose removal lowers it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticProfile {
    pub chi: usize,
    pub crit_edges: Vec<(usize, usize)>,
}

impl ChromaticProfile {
    pub fn crit(&self) -> usize {
        self.crit_edges.len()
    }
}

/// Exact chromatic number by iterative deepening: try m = 1, 2, ... with a
/// branch-and-bound existence check.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 1;
    }
    for m in 2..=g.n() {
        if colourable(g, m) {
            return m;
        }
    }
    unreachable!("every graph on n vertices is n-colourable")
}

/// Existence of a proper m-colouring. Branches on the uncoloured vertex with
/// the most distinctly-coloured neighbours (saturation), ties by degree then
/// index; candidate colours are capped at one beyond the highest colour used
/// so far, which quotients out colour-permutation symmetry.
fn colourable(g: &Graph, m: usize) -> bool {
    if m == 0 {
        return false;
    }
    let mut colours = [usize::MAX; MAX_VERTICES];
    rec_colour(g, &mut colours, 0, m, 0)
}

fn rec_colour(
    g: &Graph,
    colours: &mut [usize; MAX_VERTICES],
    done: usize,
    m: usize,
    max_used: usize,
) -> bool {
    let n = g.n();
    if done == n {
        return true;
    }
    // pick the most saturated uncoloured vertex
    let mut pick = usize::MAX;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if colours[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        let mut nb = g.neighbours(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            if colours[u] != usize::MAX {
                seen |= 1u64 << colours[u];
            }
            nb &= nb - 1;
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > best {
            pick = v;
            best = key;
        }
    }
    let v = pick;
    let mut forbidden = 0u64;
    let mut nb = g.neighbours(v);
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        if colours[u] != usize::MAX {
            forbidden |= 1u64 << colours[u];
        }
        nb &= nb - 1;
    }
    let limit = m.min(max_used + 1);
    for c in 0..limit {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        colours[v] = c;
        if rec_colour(g, colours, done + 1, m, max_used.max(c + 1)) {
            colours[v] = usize::MAX;
            return true;
        }
        colours[v] = usize::MAX;
    }
    false
}

/// Exact number of proper colourings V(g) -> [m].
///
/// Components factor; within a component, degree-<=1 vertices peel off with
/// factors m (isolated) or m-1 (leaf); the remaining 2-core is counted by
/// enumerating its partitions into independent colour classes in
/// restricted-growth order, each partition into k classes contributing
/// (m)_k colour assignments.
pub fn count_proper_colourings(g: &Graph, m: usize) -> Count {
    if m == 0 {
        return Count::zero();
    }
    let mut total = Count::one();
    for comp in g.components() {
        total *= component_colourings(g, comp, m);
        if total.is_zero() {
            break;
        }
    }
    total
}

fn component_colourings(g: &Graph, comp: u64, m: usize) -> Count {
    let mut remaining = comp;
    let mut factor = Count::one();
    loop {
        if remaining.count_ones() == 1 {
            return factor * Count::from(m);
        }
        let mut leaf = None;
        let mut t = remaining;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            if (g.neighbours(v) & remaining).count_ones() <= 1 {
                leaf = Some(v);
                break;
            }
            t &= t - 1;
        }
        match leaf {
            Some(v) => {
                // a stripped component stays connected, so degree is exactly 1
                factor *= Count::from(m - 1);
                if factor.is_zero() {
                    return factor;
                }
                remaining &= !(1u64 << v);
            }
            None => break,
        }
    }
    factor * core_colourings(g, remaining, m)
}

fn core_colourings(g: &Graph, core: u64, m: usize) -> Count {
    let mut order = Vec::with_capacity(core.count_ones() as usize);
    let mut t = core;
    while t != 0 {
        order.push(t.trailing_zeros() as usize);
        t &= t - 1;
    }
    let weights: Vec<Count> = (0..=order.len().min(m))
        .map(|k| falling_factorial(m, k))
        .collect();
    let mut classes: Vec<u64> = Vec::new();
    rec_partitions(g, &order, 0, m, &mut classes, &weights)
}

fn rec_partitions(
    g: &Graph,
    order: &[usize],
    i: usize,
    m: usize,
    classes: &mut Vec<u64>,
    weights: &[Count],
) -> Count {
    if i == order.len() {
        return weights[classes.len()].clone();
    }
    let v = order[i];
    let nb = g.neighbours(v);
    let bit = 1u64 << v;
    let mut total = Count::zero();
    for k in 0..classes.len() {
        if classes[k] & nb == 0 {
            classes[k] |= bit;
            total += rec_partitions(g, order, i + 1, m, classes, weights);
            classes[k] &= !bit;
        }
    }
    if classes.len() < m {
        classes.push(bit);
        total += rec_partitions(g, order, i + 1, m, classes, weights);
        classes.pop();
    }
    total
}

/// Edges whose deletion strictly lowers the chromatic number.
pub fn critical_edges(g: &Graph) -> ChromaticProfile {
    let chi = chromatic_number(g);
    let mut crit_edges = Vec::new();
    for (u, v) in g.edges() {
        let mut h = *g;
        h.set_edge(u, v, false);
        if colourable(&h, chi - 1) {
            crit_edges.push((u, v));
        }
    }
    ChromaticProfile { chi, crit_edges }
}

/// Number of functions V(h) -> [chi(h)-1] with exactly one monochromatic
/// edge. Enumeration prunes as soon as a second monochromatic edge appears.
///
/// # Panics
/// When h is edgeless (chi must be at least 2 for the colour set to exist).
pub fn nearly_proper_count(h: &Graph) -> Count {
    let chi = chromatic_number(h);
    assert!(chi >= 2, "nearly-proper colourings need chi >= 2 (an edge)");
    let r = chi - 1;
    let order = traversal_order(h);
    let mut colours = [usize::MAX; MAX_VERTICES];
    Count::from(rec_nearly(h, &order, 0, r, &mut colours, 0))
}

/// Visits components consecutively, breadth-first inside each, so that newly
/// placed vertices see coloured neighbours early.
pub(crate) fn traversal_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let mut queue = vec![comp.trailing_zeros() as usize];
        let mut seen = 1u64 << queue[0];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            order.push(v);
            let mut nb = g.neighbours(v) & comp & !seen;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                seen |= 1u64 << u;
                queue.push(u);
                nb &= nb - 1;
            }
        }
    }
    order
}

fn rec_nearly(
    h: &Graph,
    order: &[usize],
    i: usize,
    r: usize,
    colours: &mut [usize; MAX_VERTICES],
    mono: usize,
) -> u128 {
    if i == order.len() {
        return (mono == 1) as u128;
    }
    let v = order[i];
    let mut total = 0u128;
    for c in 0..r {
        let mut new_mono = mono;
        let mut nb = h.neighbours(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            if colours[u] == c {
                new_mono += 1;
            }
            nb &= nb - 1;
        }
        if new_mono <= 1 {
            colours[v] = c;
            total += rec_nearly(h, order, i + 1, r, colours, new_mono);
            colours[v] = usize::MAX;
        }
    }
    total
}

/// Closed-form upper bound on [`nearly_proper_count`]:
/// crit * (chi-2)! * (chi-2)^{v-chi-k+1} * (chi-1)^{k} in general, and the
/// sharper crit * 3^{k} * 2^{v-k-1} when chi = 4. Exponents are never
/// negative because the chi-chromatic component alone has at least chi
/// vertices.
///
/// # Panics
/// When chi(h) < 3; the two-colour case is degenerate and refused.
pub fn nearly_proper_bound(h: &Graph) -> Count {
    let profile = critical_edges(h);
    let chi = profile.chi;
    assert!(chi >= 3, "bound defined for chi >= 3, got chi = {chi}");
    let v = h.n();
    let k = h.component_count();
    let crit = Count::from(profile.crit());
    if chi == 4 {
        crit * count_pow(3, k) * count_pow(2, v - k - 1)
    } else {
        // v + 1 >= chi + k since the chi-chromatic component has >= chi vertices
        crit * factorial(chi - 2) * count_pow(chi - 2, v + 1 - chi - k) * count_pow(chi - 1, k)
    }
}

/// m!·(m−1)^{n−m}: the ceiling on proper m-colourings of connected
/// m-chromatic graphs (m ≠ 3), tight exactly for hairy complete graphs.
///
/// # Panics
/// When n < m or m = 0.
pub fn tomescu_bound(m: usize, n: usize) -> Count {
    assert!(m >= 1 && n >= m, "need 1 <= m <= n, got m={m}, n={n}");
    factorial(m) * count_pow(m - 1, n - m)
}

// =============================================================================
// Tests
// =============================================================================
