//! The weighted two-colour objective: a red pattern counted injectively in
//! the host, a blue pattern counted injectively in its complement, each term
//! scaled so the balanced multipartite colourings approach value 1 from
//! below as the host grows.

use crate::graph::{turan_graph, Graph};
use crate::hom::t_density;
use crate::numbers::{count_pow, count_to_ratio, ratio, ratio_str, Count, Ratio};
use serde_json::json;

/// A pattern pair with its cached counts and scale weights.
///
/// Singleton components are stripped at construction: they carry no edges
/// and only dilute densities. After stripping, rho1 = (chi2-1)^{v1-k1} and
/// rho2 = (chi1-1)^{v2-k2}, the exact reciprocals of the densities the
/// opposite Turán colouring concedes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairContext {
    pub h1: Graph,
    pub h2: Graph,
    pub v1: usize,
    pub v2: usize,
    pub e1: usize,
    pub e2: usize,
    pub k1: usize,
    pub k2: usize,
    pub chi1: usize,
    pub chi2: usize,
    pub rho1: Count,
    pub rho2: Count,
}

/// Objective evaluation split into its two colour terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectiveValue {
    pub value: Ratio,
    pub red_term: Ratio,
    pub blue_term: Ratio,
}

impl ObjectiveValue {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "value": ratio_str(&self.value),
            "red_term": ratio_str(&self.red_term),
            "blue_term": ratio_str(&self.blue_term),
        })
    }
}

/// Which of the two Turán colourings achieves the baseline: the side whose
/// colour class is the balanced multipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaselineSide {
    Red,
    Blue,
    Both,
}

impl BaselineSide {
    pub fn as_str(self) -> &'static str {
        match self {
            BaselineSide::Red => "red",
            BaselineSide::Blue => "blue",
            BaselineSide::Both => "both",
        }
    }
}

fn strip_singletons(g: &Graph) -> Graph {
    assert!(g.edge_count() >= 1, "patterns must have at least one edge");
    let mut keep = 0u64;
    for comp in g.components() {
        if comp.count_ones() >= 2 {
            keep |= comp;
        }
    }
    g.induced(keep)
}

/// # Panics
/// When either pattern is edgeless.
pub fn make_context(h1: &Graph, h2: &Graph) -> PairContext {
    let h1 = strip_singletons(h1);
    let h2 = strip_singletons(h2);
    let (v1, v2) = (h1.n(), h2.n());
    let (k1, k2) = (h1.component_count(), h2.component_count());
    let chi1 = crate::chromatic::chromatic_number(&h1);
    let chi2 = crate::chromatic::chromatic_number(&h2);
    PairContext {
        rho1: count_pow(chi2 - 1, v1 - k1),
        rho2: count_pow(chi1 - 1, v2 - k2),
        e1: h1.edge_count(),
        e2: h2.edge_count(),
        h1,
        h2,
        v1,
        v2,
        k1,
        k2,
        chi1,
        chi2,
    }
}

/// rho1 * t_inj(h1, g) + rho2 * t_inj(h2, complement(g)), with both densities
/// over the falling-factorial denominator.
///
/// # Panics
/// When v(g) < max(v1, v2): the falling-factorial denominator would vanish.
pub fn m_objective(ctx: &PairContext, g: &Graph) -> ObjectiveValue {
    assert!(
        g.n() >= ctx.v1.max(ctx.v2),
        "host on {} vertices is smaller than the patterns ({}, {})",
        g.n(),
        ctx.v1,
        ctx.v2
    );
    let red_term = count_to_ratio(&ctx.rho1) * t_density(&ctx.h1, g, true);
    let blue_term = count_to_ratio(&ctx.rho2) * t_density(&ctx.h2, &g.complement(), true);
    ObjectiveValue {
        value: red_term.clone() + blue_term.clone(),
        red_term,
        blue_term,
    }
}

/// lambda * t(h1, g) + (2 - lambda) * t(h2, complement(g)) with plain
/// (non-injective) densities; no host-size floor since n^{v} never vanishes.
///
/// # Panics
/// When lambda is outside [0, 2].
pub fn lambda_objective(h1: &Graph, h2: &Graph, g: &Graph, lambda: &Ratio) -> Ratio {
    assert!(
        *lambda >= ratio(0, 1) && *lambda <= ratio(2, 1),
        "lambda must lie in [0, 2], got {}",
        ratio_str(lambda)
    );
    let co = g.complement();
    lambda * t_density(h1, g, false) + (ratio(2, 1) - lambda) * t_density(h2, &co, false)
}

/// The better of the two Turán colourings at host size n: red classes form
/// the balanced (chi1-1)-partite graph (red term vanishes), or blue classes
/// do with chi2-1 parts (blue term vanishes). Ties report both.
pub fn turan_baseline(ctx: &PairContext, n: usize) -> (Ratio, BaselineSide) {
    assert!(
        n >= ctx.v1.max(ctx.v2),
        "baseline needs n >= max pattern order"
    );
    let red_side = m_objective(ctx, &turan_graph(n, ctx.chi1 - 1)).value;
    let blue_side = m_objective(ctx, &turan_graph(n, ctx.chi2 - 1).complement()).value;
    match red_side.cmp(&blue_side) {
        std::cmp::Ordering::Less => (red_side, BaselineSide::Red),
        std::cmp::Ordering::Greater => (blue_side, BaselineSide::Blue),
        std::cmp::Ordering::Equal => (red_side, BaselineSide::Both),
    }
}

// =============================================================================
// Tests
// =============================================================================
