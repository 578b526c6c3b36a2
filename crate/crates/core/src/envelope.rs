//! Versioned JSON documents shared by the command-line and C front ends.
//! Map keys serialize alphabetically, there are no timestamps, and the
//! worker count never appears, so equal inputs always produce byte-identical
//! documents regardless of which front end or how many threads built them.

use crate::chromatic::{
    count_proper_colourings, critical_edges, nearly_proper_bound, nearly_proper_count,
    tomescu_bound,
};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::numbers::ratio_str;
use crate::objective::{ObjectiveValue, PairContext};
use crate::perturb::PerturbReport;
use crate::search::SearchReport;
use serde_json::{json, Value};

pub const OBJECTIVE_SCHEMA: &str = "ramsey-forge/objective/1";
pub const SEARCH_SCHEMA: &str = "ramsey-forge/search/1";
pub const PERTURB_SCHEMA: &str = "ramsey-forge/perturb/1";
pub const BOUNDS_SCHEMA: &str = "ramsey-forge/bounds/1";

pub fn context_json(ctx: &PairContext) -> Value {
    json!({
        "v1": ctx.v1, "v2": ctx.v2,
        "e1": ctx.e1, "e2": ctx.e2,
        "k1": ctx.k1, "k2": ctx.k2,
        "chi1": ctx.chi1, "chi2": ctx.chi2,
        "rho1": ctx.rho1.to_string(),
        "rho2": ctx.rho2.to_string(),
    })
}

/// `h1`/`h2` are the patterns as supplied (before singleton stripping), so
/// the echoed config reproduces the caller's input exactly.
pub fn objective_document(
    h1: &Graph,
    h2: &Graph,
    g: &Graph,
    ctx: &PairContext,
    value: &ObjectiveValue,
) -> Value {
    json!({
        "schema": OBJECTIVE_SCHEMA,
        "config": {
            "h1": write_graph6(h1),
            "h2": write_graph6(h2),
            "g": write_graph6(g),
        },
        "context": context_json(ctx),
        "report": value.to_json(),
    })
}

pub fn search_document(
    h1: &Graph,
    h2: &Graph,
    seed: u64,
    max_n: usize,
    report: &SearchReport,
) -> Value {
    json!({
        "schema": SEARCH_SCHEMA,
        "config": {
            "h1": write_graph6(h1),
            "h2": write_graph6(h2),
            "n": report.n,
            "mode": report.mode.as_str(),
            "seed": seed,
            "max_n": max_n,
        },
        "report": report.to_json(),
    })
}

pub fn perturb_document(
    h1: &Graph,
    h2: &Graph,
    ctx: &PairContext,
    report: &PerturbReport,
) -> Value {
    json!({
        "schema": PERTURB_SCHEMA,
        "config": {
            "h1": write_graph6(h1),
            "h2": write_graph6(h2),
            "n": report.n,
            "grid": report.grid.iter().map(ratio_str).collect::<Vec<_>>(),
        },
        "context": context_json(ctx),
        "report": report.to_json(),
    })
}

/// Computes every colouring statistic for one pattern. The nearly-proper
/// fields need a third colour class to mean anything and are omitted below
/// chromatic number 3; `tomescu_exceeded` flags the lone known case where
/// the proper-colouring count escapes the factorial bound.
pub fn bounds_document(h: &Graph) -> Value {
    let profile = critical_edges(h);
    let chi = profile.chi;
    let proper = count_proper_colourings(h, chi);
    let bound = tomescu_bound(chi, h.n());
    let mut report = json!({
        "v": h.n(),
        "e": h.edge_count(),
        "chi": chi,
        "k": h.component_count(),
        "crit": profile.crit(),
        "proper_colourings_at_chi": proper.to_string(),
        "tomescu_bound": bound.to_string(),
        "tomescu_exceeded": proper > bound,
    });
    if chi >= 3 {
        report["nearly_proper_count"] = json!(nearly_proper_count(h).to_string());
        report["nearly_proper_bound"] = json!(nearly_proper_bound(h).to_string());
    }
    json!({
        "schema": BOUNDS_SCHEMA,
        "config": { "h": write_graph6(h) },
        "report": report,
    })
}

// =============================================================================
// Tests
// =============================================================================
