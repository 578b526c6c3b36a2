//! Simple undirected graphs on at most 64 labelled vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, which keeps neighbour
//! queries, complementation and induced-subgraph extraction branch-free and
//! makes exhaustive scans over small hosts cheap. No loops, no multi-edges.

use std::fmt;

/// Hard ceiling on vertex count; one adjacency row fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// Undirected graph, vertices `0..n`.
///
/// Invariants: `1 <= n <= 64`, the adjacency matrix is symmetric with zero
/// diagonal, and every bit at position `>= n` (and every row `>= n`) is zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

/// Pendant-attachment description: a base graph plus, per pendant, the base
/// vertex it hangs from. Pendants attach to base vertices only, never to
/// other pendants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HairySpec {
    pub base: Graph,
    pub attach: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "vertex count {n} outside 1..={MAX_VERTICES}"
        );
        Graph {
            n,
            adj: [0u64; MAX_VERTICES],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let full = mask_n(n);
        for v in 0..n {
            g.adj[v] = full & !(1u64 << v);
        }
        g
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.set_edge(v, (v + 1) % n, true);
        }
        g
    }

    /// Path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.set_edge(i, (i + 1) % 5, true);
            g.set_edge(5 + i, 5 + (i + 2) % 5, true);
            g.set_edge(i, 5 + i, true);
        }
        g
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    /// Adds or removes the edge `uv`. `u != v`.
    #[inline]
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        if present {
            self.adj[u] |= 1u64 << v;
            self.adj[v] |= 1u64 << u;
        } else {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
        }
    }

    #[inline]
    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        self.adj[u] ^= 1u64 << v;
        self.adj[v] ^= 1u64 << u;
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline(always)]
    pub fn neighbours(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Overwrites the whole neighbourhood of `v` (symmetrically). Bits must
    /// lie below `n` and must not include `v` itself.
    pub fn set_neighbourhood(&mut self, v: usize, nb: u64) {
        assert!(v < self.n);
        assert_eq!(nb & !mask_n(self.n), 0, "neighbourhood out of range");
        assert_eq!(nb >> v & 1, 0, "self-loop");
        for u in 0..self.n {
            if u == v {
                continue;
            }
            let bit = nb >> u & 1;
            self.adj[u] = self.adj[u] & !(1u64 << v) | bit << v;
        }
        self.adj[v] = nb;
    }

    pub fn edge_count(&self) -> usize {
        let mut total = 0usize;
        for v in 0..self.n {
            total += self.adj[v].count_ones() as usize;
        }
        total / 2
    }

    /// Edges as `(u, v)` with `u < v`, in colex order of `(v, u)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n {
            let mut below = self.adj[v] & ((1u64 << v) - 1);
            while below != 0 {
                let u = below.trailing_zeros() as usize;
                out.push((u, v));
                below &= below - 1;
            }
        }
        out
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let full = mask_n(self.n);
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            g.adj[v] = !self.adj[v] & full & !(1u64 << v);
        }
        g
    }

    /// Subgraph induced on the set bits of `keep`, vertices relabelled in
    /// increasing order of old label. `keep` must be nonempty.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & mask_n(self.n);
        assert!(keep != 0, "induced subgraph on empty vertex set");
        let mut map = [0usize; MAX_VERTICES];
        let mut m = 0usize;
        #[allow(clippy::needless_range_loop)]
        for v in 0..self.n {
            if keep >> v & 1 == 1 {
                map[v] = m;
                m += 1;
            }
        }
        let mut g = Graph::empty(m);
        for v in 0..self.n {
            if keep >> v & 1 == 0 {
                continue;
            }
            let mut nb = self.adj[v] & keep;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                if u > v {
                    g.set_edge(map[v], map[u], true);
                }
                nb &= nb - 1;
            }
        }
        g
    }

    /// Deletes one vertex; the rest shift down to stay contiguous.
    pub fn without_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n && self.n > 1);
        self.induced(mask_n(self.n) & !(1u64 << v))
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabelled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        g
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = 0u64;
        let full = mask_n(self.n);
        let mut k = 0usize;
        while seen != full {
            let start = (!seen & full).trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut frontier = 0u64;
                let mut t = comp;
                while t != 0 {
                    let v = t.trailing_zeros() as usize;
                    frontier |= self.adj[v];
                    t &= t - 1;
                }
                let grown = comp | frontier;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            k += 1;
        }
        k
    }

    /// Vertex sets of the connected components, each as a bitset, in order of
    /// smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let full = mask_n(self.n);
        let mut out = Vec::new();
        while seen != full {
            let start = (!seen & full).trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut frontier = 0u64;
                let mut t = comp;
                while t != 0 {
                    let v = t.trailing_zeros() as usize;
                    frontier |= self.adj[v];
                    t &= t - 1;
                }
                let grown = comp | frontier;
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Checks the internal invariants; used by debug assertions in tests.
    pub fn check_invariants(&self) {
        assert!((1..=MAX_VERTICES).contains(&self.n));
        let full = mask_n(self.n);
        for v in 0..MAX_VERTICES {
            if v >= self.n {
                assert_eq!(self.adj[v], 0, "row {v} beyond n nonzero");
            } else {
                assert_eq!(self.adj[v] & !full, 0, "row {v} has bits beyond n");
                assert_eq!(self.adj[v] >> v & 1, 0, "loop at {v}");
            }
        }
        for u in 0..self.n {
            for v in 0..self.n {
                assert_eq!(self.has_edge(u, v), self.has_edge(v, u), "asymmetry {u},{v}");
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Bitset with bits `0..n` set.
#[inline(always)]
pub fn mask_n(n: usize) -> u64 {
    debug_assert!((1..=64).contains(&n));
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Colex index of the unordered pair `{u, v}`, `u < v`:
/// (0,1) -> 0, (0,2) -> 1, (1,2) -> 2, (0,3) -> 3, ...
///
/// This is the bit order of the graph6 encoding and of edge masks.
#[inline(always)]
pub fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Builds a graph from an edge-presence mask in `pair_index` order.
/// Only usable while all pair indices fit in a `u64`, i.e. `n <= 11`.
pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
    assert!(n <= 11, "edge mask covers at most C(11,2) = 55 pairs");
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if mask >> pair_index(u, v) & 1 == 1 {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Balanced complete multipartite graph on `n` vertices with `r` parts;
/// vertex `i` sits in part `i mod r`, so the first `n mod r` parts get the
/// extra vertex. Edges join distinct parts.
pub fn turan_graph(n: usize, r: usize) -> Graph {
    assert!(r >= 1 && r <= n, "need 1 <= r <= n, got r={r}, n={n}");
    let mut g = Graph::empty(n);
    for v in 0..n {
        for u in 0..v {
            if u % r != v % r {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Whether `g` is a balanced complete multipartite graph with exactly `r`
/// parts, under any vertex labelling.
///
/// In such a graph two vertices share a part iff their adjacency rows are
/// equal, so the candidate parts are the equal-row classes.
pub fn is_turan(g: &Graph, r: usize) -> bool {
    assert!(r >= 1 && r <= g.n(), "need 1 <= r <= v(g)");
    let n = g.n();
    let mut part_of = [usize::MAX; MAX_VERTICES];
    let mut rows: Vec<u64> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    #[allow(clippy::needless_range_loop)]
    for v in 0..n {
        match rows.iter().position(|&row| row == g.neighbours(v)) {
            Some(i) => {
                part_of[v] = i;
                sizes[i] += 1;
            }
            None => {
                part_of[v] = rows.len();
                rows.push(g.neighbours(v));
                sizes.push(1);
            }
        }
    }
    if rows.len() != r {
        return false;
    }
    // each row must be exactly "everything outside my part"
    let full = mask_n(n);
    let mut part_mask = vec![0u64; r];
    for v in 0..n {
        part_mask[part_of[v]] |= 1u64 << v;
    }
    for v in 0..n {
        if g.neighbours(v) != full & !part_mask[part_of[v]] {
            return false;
        }
    }
    let lo = *sizes.iter().min().unwrap();
    let hi = *sizes.iter().max().unwrap();
    hi - lo <= 1
}

/// Appends one pendant vertex per entry of `spec.attach`, each joined only to
/// its base vertex. Output vertices `0..v(base)` are the base, the pendants
/// follow in `attach` order.
pub fn make_hairy(spec: &HairySpec) -> Graph {
    let nb = spec.base.n();
    let t = spec.attach.len();
    assert!(nb + t <= MAX_VERTICES, "pendants overflow vertex ceiling");
    for &a in &spec.attach {
        assert!(a < nb, "attachment {a} is not a base vertex");
    }
    let mut g = Graph::empty(nb + t);
    for (u, v) in spec.base.edges() {
        g.set_edge(u, v, true);
    }
    for (i, &a) in spec.attach.iter().enumerate() {
        g.set_edge(nb + i, a, true);
    }
    g
}

// =============================================================================
// Tests
// =============================================================================
