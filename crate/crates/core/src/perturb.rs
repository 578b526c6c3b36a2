//! Exact expectation of the objective under the random construction that
//! starts from disjoint balanced cliques (the complement of the multipartite
//! blue pattern) and deletes each clique edge independently with probability
//! epsilon, plus the first-order coefficient and the imbalance test that
//! together certify when a pattern pair cannot be multiplicity good.
//!
//! Everything is closed-form over exact rationals; nothing is sampled. The
//! red term uses the fact that an injective placement occupies distinct host
//! edges, so it survives deletion with probability (1-eps)^{e1}. The blue
//! term groups part-assignments of h2 by monochromatic-edge count and
//! per-part occupancy; distinct parts may differ in size by one, so the
//! occupancy key is the exact per-part vector, not a multiset.

use crate::chromatic::{nearly_proper_bound, nearly_proper_count, traversal_order};
use crate::graph::{Graph, MAX_VERTICES};
use crate::numbers::{
    count_pow, count_to_ratio, falling_factorial, ratio, ratio_from_counts, ratio_pow, ratio_str,
    Count, Ratio,
};
use crate::objective::{turan_baseline, PairContext};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;

/// Profile enumeration refuses patterns above this order.
pub const PROFILE_CAP: usize = 14;

/// Counts of functions V(h) -> [r] by number of monochromatic edges.
/// Only nonzero counts are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonochromaticProfile {
    pub r: usize,
    pub counts: BTreeMap<usize, Count>,
}

impl MonochromaticProfile {
    pub fn count(&self, mono_edges: usize) -> Count {
        self.counts.get(&mono_edges).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> Count {
        self.counts.values().sum()
    }
}

/// Exact profile by enumerating all r^{v(h)} functions; the colour of the
/// first visited vertex is split across workers and the partial profiles
/// summed, which is order-independent.
///
/// # Panics
/// When r = 0 or v(h) exceeds [`PROFILE_CAP`].
pub fn monochromatic_profile(h: &Graph, r: usize) -> MonochromaticProfile {
    assert!(r >= 1, "need at least one colour class");
    assert!(
        h.n() <= PROFILE_CAP,
        "profile enumeration capped at {PROFILE_CAP} vertices"
    );
    let order = traversal_order(h);
    let buckets = (0..r)
        .into_par_iter()
        .map(|first| {
            let mut per_bucket = vec![0u64; h.edge_count() + 1];
            let mut colours = [usize::MAX; MAX_VERTICES];
            colours[order[0]] = first;
            count_by_mono(h, &order, 1, r, &mut colours, 0, &mut per_bucket);
            per_bucket
        })
        .reduce(
            || vec![0u64; h.edge_count() + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let counts = buckets
        .into_iter()
        .enumerate()
        .filter(|(_, n)| *n > 0)
        .map(|(b, n)| (b, Count::from(n)))
        .collect();
    MonochromaticProfile { r, counts }
}

/// Work equals the number of functions, so u64 tallies cannot overflow in
/// any enumeration that finishes.
fn count_by_mono(
    h: &Graph,
    order: &[usize],
    i: usize,
    r: usize,
    colours: &mut [usize; MAX_VERTICES],
    mono: usize,
    out: &mut [u64],
) {
    if i == order.len() {
        out[mono] += 1;
        return;
    }
    let v = order[i];
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
        colours[v] = c;
        count_by_mono(h, order, i + 1, r, colours, new_mono, out);
        colours[v] = usize::MAX;
    }
}

/// The blue-side refinement: functions V(h) -> [r] grouped by
/// (monochromatic edge count, per-class occupancy vector).
struct RefinedProfile {
    entries: BTreeMap<(usize, Vec<usize>), Count>,
}

fn refined_profile(h: &Graph, r: usize) -> RefinedProfile {
    assert!(r >= 1, "need at least one colour class");
    assert!(
        h.n() <= PROFILE_CAP,
        "profile enumeration capped at {PROFILE_CAP} vertices"
    );
    let order = traversal_order(h);
    let entries = (0..r)
        .into_par_iter()
        .map(|first| {
            let mut out: BTreeMap<(usize, Vec<usize>), u64> = BTreeMap::new();
            let mut colours = [usize::MAX; MAX_VERTICES];
            let mut occupancy = vec![0usize; r];
            colours[order[0]] = first;
            occupancy[first] = 1;
            refine_rec(h, &order, 1, &mut colours, &mut occupancy, 0, &mut out);
            out
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (key, n) in b {
                *a.entry(key).or_default() += n;
            }
            a
        });
    RefinedProfile {
        entries: entries
            .into_iter()
            .map(|(key, n)| (key, Count::from(n)))
            .collect(),
    }
}

fn refine_rec(
    h: &Graph,
    order: &[usize],
    i: usize,
    colours: &mut [usize; MAX_VERTICES],
    occupancy: &mut Vec<usize>,
    mono: usize,
    out: &mut BTreeMap<(usize, Vec<usize>), u64>,
) {
    if i == order.len() {
        *out.entry((mono, occupancy.clone())).or_default() += 1;
        return;
    }
    let v = order[i];
    for c in 0..occupancy.len() {
        let mut new_mono = mono;
        let mut nb = h.neighbours(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            if colours[u] == c {
                new_mono += 1;
            }
            nb &= nb - 1;
        }
        colours[v] = c;
        occupancy[c] += 1;
        refine_rec(h, order, i + 1, colours, occupancy, new_mono, out);
        occupancy[c] -= 1;
        colours[v] = usize::MAX;
    }
}

/// Part sizes of the balanced r-partite pattern on n vertices (vertex i in
/// part i mod r): the first n mod r parts get the extra vertex.
fn part_sizes(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// E[objective] when the host starts as disjoint balanced cliques (one per
/// blue part) and loses each edge independently with probability eps.
///
/// # Panics
/// When eps is outside [0, 1] or n < max(v1, v2).
pub fn expected_objective(ctx: &PairContext, n: usize, eps: &Ratio) -> Ratio {
    let refined = refined_profile(&ctx.h2, ctx.chi2 - 1);
    expected_with_profile(ctx, n, eps, &refined)
}

fn expected_with_profile(
    ctx: &PairContext,
    n: usize,
    eps: &Ratio,
    refined: &RefinedProfile,
) -> Ratio {
    assert!(
        *eps >= ratio(0, 1) && *eps <= ratio(1, 1),
        "epsilon must lie in [0, 1], got {}",
        ratio_str(eps)
    );
    assert!(
        n >= ctx.v1.max(ctx.v2),
        "host order {n} is smaller than the patterns"
    );
    let r = ctx.chi2 - 1;
    let sizes = part_sizes(n, r);

    let survive = ratio_pow(&(ratio(1, 1) - eps), ctx.e1);
    let red = count_to_ratio(&ctx.rho1)
        * ratio_from_counts(
            clique_host_injections(&ctx.h1, &sizes),
            falling_factorial(n, ctx.v1),
        )
        * survive;

    let mut placements = ratio(0, 1);
    for ((mono, occupancy), count) in &refined.entries {
        let mut weight = count_to_ratio(count) * ratio_pow(eps, *mono);
        for (i, &need) in occupancy.iter().enumerate() {
            weight *= count_to_ratio(&falling_factorial(sizes[i], need));
        }
        placements += weight;
    }
    let blue =
        count_to_ratio(&ctx.rho2) * placements / count_to_ratio(&falling_factorial(n, ctx.v2));

    red + blue
}

/// Injective homomorphisms from `h` into disjoint cliques with the given
/// part sizes. An injective image of a connected piece can never straddle
/// two cliques, and inside a clique every injective placement is a
/// homomorphism, so the count is a sum over component-to-clique assignments
/// of falling-factorial products. Works for hosts of any order, unlike a
/// materialized host graph.
fn clique_host_injections(h: &Graph, sizes: &[usize]) -> Count {
    let comps = component_sizes(h);
    let mut loads = vec![0usize; sizes.len()];
    let mut total = Count::zero();
    assign_components(&comps, 0, sizes, &mut loads, &mut total);
    total
}

fn assign_components(
    comps: &[usize],
    i: usize,
    sizes: &[usize],
    loads: &mut [usize],
    total: &mut Count,
) {
    if i == comps.len() {
        let mut product = Count::one();
        for (j, &load) in loads.iter().enumerate() {
            product *= falling_factorial(sizes[j], load);
        }
        *total += product;
        return;
    }
    for j in 0..sizes.len() {
        if loads[j] + comps[i] > sizes[j] {
            continue;
        }
        loads[j] += comps[i];
        assign_components(comps, i + 1, sizes, loads, total);
        loads[j] -= comps[i];
    }
}

fn component_sizes(g: &Graph) -> Vec<usize> {
    let full = if g.n() == 64 { !0u64 } else { (1u64 << g.n()) - 1 };
    let mut seen = 0u64;
    let mut sizes = Vec::new();
    while seen != full {
        let start = (!seen & full).trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        loop {
            let mut frontier = 0u64;
            let mut t = comp;
            while t != 0 {
                let v = t.trailing_zeros() as usize;
                frontier |= g.neighbours(v);
                t &= t - 1;
            }
            let grown = comp | frontier;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        sizes.push(comp.count_ones() as usize);
        seen |= comp;
    }
    sizes
}

/// The eps-coefficient of the n -> infinity limit of [`expected_objective`]:
/// -e1 + K*(chi1-1)^{v2-k2}/(chi2-1)^{v2} with K the nearly-proper count of
/// h2. Strictly negative slope certifies beating the Turán baseline for
/// small eps at large n.
///
/// # Panics
/// When chi(h2) < 3 (the construction needs at least two parts).
pub fn linear_coefficient(ctx: &PairContext) -> Ratio {
    assert!(ctx.chi2 >= 3, "linear coefficient needs chi(h2) >= 3");
    let nearly = nearly_proper_count(&ctx.h2);
    ratio(-(ctx.e1 as i64), 1)
        + count_to_ratio(&nearly)
            * ratio_from_counts(
                count_pow(ctx.chi1 - 1, ctx.v2 - ctx.k2),
                count_pow(ctx.chi2 - 1, ctx.v2),
            )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerturbVerdict {
    NotMultiplicityGood,
    Inconclusive,
}

impl PerturbVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            PerturbVerdict::NotMultiplicityGood => "not-multiplicity-good",
            PerturbVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// The edge-count threshold from the linear coefficient's worst case: the
/// closed-form ceiling on the nearly-proper count of h2 scaled by
/// (chi1-1)^{v2-k2}/(chi2-1)^{v2}. If e(h1) strictly exceeds it, the linear
/// coefficient is negative regardless of h2's fine structure, and the pair
/// cannot be multiplicity good.
///
/// # Panics
/// When chi(h2) < 3.
pub fn imbalance_threshold(ctx: &PairContext) -> (Ratio, PerturbVerdict) {
    assert!(ctx.chi2 >= 3, "imbalance threshold needs chi(h2) >= 3");
    let threshold = count_to_ratio(&nearly_proper_bound(&ctx.h2))
        * ratio_from_counts(
            count_pow(ctx.chi1 - 1, ctx.v2 - ctx.k2),
            count_pow(ctx.chi2 - 1, ctx.v2),
        );
    let verdict = if ratio(ctx.e1 as i64, 1) > threshold {
        PerturbVerdict::NotMultiplicityGood
    } else {
        PerturbVerdict::Inconclusive
    };
    (threshold, verdict)
}

/// An exact epsilon sweep with the first-order diagnosis attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbReport {
    pub n: usize,
    pub grid: Vec<Ratio>,
    pub values: Vec<Ratio>,
    pub linear_coefficient: Ratio,
    pub threshold: Ratio,
    pub verdict: PerturbVerdict,
    pub baseline: Ratio,
    pub below_baseline: Vec<bool>,
}

impl PerturbReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "grid": self.grid.iter().map(ratio_str).collect::<Vec<_>>(),
            "values": self.values.iter().map(ratio_str).collect::<Vec<_>>(),
            "linear_coefficient": ratio_str(&self.linear_coefficient),
            "threshold": ratio_str(&self.threshold),
            "verdict": self.verdict.as_str(),
            "baseline": ratio_str(&self.baseline),
            "below_baseline": self.below_baseline,
        })
    }

    /// One row per grid point; `below_baseline` marks values strictly under
    /// the Turán baseline at this n.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("epsilon,value_num,value_den,below_baseline\n");
        for (eps, (value, below)) in self
            .grid
            .iter()
            .zip(self.values.iter().zip(&self.below_baseline))
        {
            out.push_str(&format!(
                "{},{},{},{}\n",
                ratio_str(eps),
                value.numer(),
                value.denom(),
                below
            ));
        }
        out
    }
}

/// Evaluates the expectation on every grid point and attaches the
/// first-order diagnosis and the baseline comparison.
///
/// # Panics
/// As the constituents: grid outside [0, 1], n too small, or chi(h2) < 3.
pub fn sweep(ctx: &PairContext, n: usize, grid: &[Ratio]) -> PerturbReport {
    let refined = refined_profile(&ctx.h2, ctx.chi2 - 1);
    let values: Vec<Ratio> = grid
        .iter()
        .map(|eps| expected_with_profile(ctx, n, eps, &refined))
        .collect();
    let (baseline, _) = turan_baseline(ctx, n);
    let below_baseline = values.iter().map(|v| *v < baseline).collect();
    let (threshold, verdict) = imbalance_threshold(ctx);
    PerturbReport {
        n,
        grid: grid.to_vec(),
        values,
        linear_coefficient: linear_coefficient(ctx),
        threshold,
        verdict,
        baseline,
        below_baseline,
    }
}

// =============================================================================
// Tests
// =============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::nonisomorphic_graphs;
    use crate::chromatic::{chromatic_number, count_proper_colourings};
    use crate::graph::{make_hairy, turan_graph, HairySpec};
    use crate::numbers::ratio_str;
    use crate::objective::{m_objective, make_context};
    use num_traits::{Signed, Zero};

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    fn hairy_triangle(pendants: usize) -> Graph {
        make_hairy(&HairySpec {
            base: k(3),
            attach: (0..pendants).map(|i| i % 3).collect(),
        })
    }

    #[test]
    fn profile_fixtures() {
        let p = monochromatic_profile(&k(3), 2);
        assert_eq!(p.count(0), Count::zero());
        assert_eq!(p.count(1), Count::from(6u32));
        assert_eq!(p.count(3), Count::from(2u32));
        assert_eq!(p.total(), Count::from(8u32));

        let p = monochromatic_profile(&k(2), 1);
        assert_eq!(p.counts, BTreeMap::from([(1, Count::from(1u32))]));

        let p = monochromatic_profile(&Graph::cycle(5), 2);
        assert_eq!(p.count(0), Count::zero());
        assert_eq!(p.count(1), Count::from(10u32));
        assert_eq!(p.total(), Count::from(32u32));
    }

    #[test]
    fn profile_marginals_match_other_counters() {
        for n in 2..=5usize {
            for g in nonisomorphic_graphs(n) {
                for r in 1..=3usize {
                    let p = monochromatic_profile(&g, r);
                    assert_eq!(p.total(), count_pow(r, n));
                    assert_eq!(p.count(0), count_proper_colourings(&g, r));
                }
                let chi = chromatic_number(&g);
                if chi >= 2 {
                    let p = monochromatic_profile(&g, chi - 1);
                    assert_eq!(p.count(1), nearly_proper_count(&g));
                }
            }
        }
    }

    #[test]
    fn refined_profile_marginalizes_to_plain() {
        for g in [k(3), Graph::cycle(5), Graph::path(4), hairy_triangle(2)] {
            for r in 1..=3usize {
                let plain = monochromatic_profile(&g, r);
                let refined = refined_profile(&g, r);
                let mut marginal: BTreeMap<usize, Count> = BTreeMap::new();
                for ((mono, _), count) in &refined.entries {
                    *marginal.entry(*mono).or_default() += count;
                }
                marginal.retain(|_, v| !v.is_zero());
                assert_eq!(marginal, plain.counts);
            }
        }
    }

    #[test]
    fn endpoints_match_deterministic_objectives() {
        let ctx = make_context(&k(3), &k(3));
        for n in [6usize, 7, 9] {
            let cliques = turan_graph(n, ctx.chi2 - 1).complement();
            assert_eq!(
                expected_objective(&ctx, n, &ratio(0, 1)),
                m_objective(&ctx, &cliques).value,
                "n={n}"
            );
            assert_eq!(
                expected_objective(&ctx, n, &ratio(1, 1)),
                count_to_ratio(&ctx.rho2),
                "n={n}"
            );
        }
        assert_eq!(expected_objective(&ctx, 6, &ratio(0, 1)), ratio(2, 5));
    }

    /// Brute-force oracle: average the exact objective over all 2^E deletion
    /// patterns of the within-part edges, weighted by eps^{|S|}(1-eps)^{E-|S|}.
    fn brute_expectation(ctx: &PairContext, n: usize, eps: &Ratio) -> Ratio {
        let cliques = turan_graph(n, ctx.chi2 - 1).complement();
        let edges = cliques.edges();
        let mut total = ratio(0, 1);
        for pattern in 0u64..1 << edges.len() {
            let mut host = cliques;
            let mut deleted = 0usize;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if pattern >> i & 1 == 1 {
                    host.set_edge(u, v, false);
                    deleted += 1;
                }
            }
            total += ratio_pow(eps, deleted)
                * ratio_pow(&(ratio(1, 1) - eps), edges.len() - deleted)
                * m_objective(ctx, &host).value;
        }
        total
    }

    #[test]
    fn closed_form_matches_deletion_pattern_enumeration() {
        let pairs = [make_context(&k(3), &k(3)), make_context(&hairy_triangle(1), &k(3))];
        for ctx in &pairs {
            // n=7 splits the blue pattern into parts of sizes 4 and 3, which
            // exercises the unbalanced occupancy weights
            for n in [6usize, 7] {
                for eps in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
                    assert_eq!(
                        expected_objective(ctx, n, &eps),
                        brute_expectation(ctx, n, &eps),
                        "n={n}, eps={}",
                        ratio_str(&eps)
                    );
                }
            }
        }
    }

    #[test]
    fn linear_coefficient_fixtures() {
        assert_eq!(
            linear_coefficient(&make_context(&k(3), &k(3))),
            ratio(0, 1)
        );
        assert_eq!(
            linear_coefficient(&make_context(&hairy_triangle(1), &k(3))),
            ratio(-1, 1)
        );
        assert_eq!(
            linear_coefficient(&make_context(&k(2), &k(3))),
            ratio(-1, 4)
        );
    }

    #[test]
    #[should_panic(expected = "chi(h2) >= 3")]
    fn linear_coefficient_refuses_bipartite_blue() {
        linear_coefficient(&make_context(&k(3), &k(2)));
    }

    #[test]
    fn threshold_fixtures() {
        let (threshold, verdict) = imbalance_threshold(&make_context(&k(3), &k(3)));
        assert_eq!(threshold, ratio(3, 1));
        assert_eq!(verdict, PerturbVerdict::Inconclusive);

        let (threshold, verdict) = imbalance_threshold(&make_context(&hairy_triangle(1), &k(3)));
        assert_eq!(threshold, ratio(3, 1));
        assert_eq!(verdict, PerturbVerdict::NotMultiplicityGood);

        // four-chromatic blue side takes the sharper branch:
        // 6 * 2^2 * 2^3 / 3^3
        let (threshold, verdict) = imbalance_threshold(&make_context(&k(3), &k(4)));
        assert_eq!(threshold, ratio(64, 9));
        assert_eq!(verdict, PerturbVerdict::Inconclusive);

        let (threshold, verdict) = imbalance_threshold(&make_context(&hairy_triangle(5), &k(4)));
        assert_eq!(threshold, ratio(64, 9));
        assert_eq!(verdict, PerturbVerdict::NotMultiplicityGood); // e = 8 > 64/9
    }

    #[test]
    fn pendants_only_tighten_the_verdict() {
        for pendants in 0..=3usize {
            let base = make_context(&hairy_triangle(pendants), &k(3));
            let more = make_context(&hairy_triangle(pendants + 1), &k(3));
            assert_eq!(imbalance_threshold(&base).0, imbalance_threshold(&more).0);
            assert_eq!(more.e1, base.e1 + 1);
            let worse = imbalance_threshold(&base).1 == PerturbVerdict::NotMultiplicityGood
                && imbalance_threshold(&more).1 == PerturbVerdict::Inconclusive;
            assert!(!worse);
        }
    }

    #[test]
    fn sweep_finds_the_dip_below_baseline() {
        let ctx = make_context(&hairy_triangle(1), &k(3));
        let grid: Vec<Ratio> = (0..=10).map(|i| ratio(i, 100)).collect();
        let report = sweep(&ctx, 40, &grid);
        assert_eq!(report.verdict, PerturbVerdict::NotMultiplicityGood);
        assert_eq!(report.linear_coefficient, ratio(-1, 1));
        assert!(!report.below_baseline[0]); // eps = 0 equals a Turán colouring value
        assert!(report.below_baseline.iter().any(|&b| b));
        assert_eq!(report.values[0], report.baseline);
    }

    #[test]
    fn finite_difference_slope_approaches_linear_coefficient() {
        let ctx = make_context(&k(3), &k(3));
        let f0_cache: BTreeMap<usize, Ratio> = [20usize, 40, 80]
            .into_iter()
            .map(|n| (n, expected_objective(&ctx, n, &ratio(0, 1))))
            .collect();
        for (step, den) in [(ratio(1, 100), 100i64), (ratio(1, 1000), 1000)] {
            for n in [20usize, 40, 80] {
                let f1 = expected_objective(&ctx, n, &step);
                let slope = (f1 - f0_cache[&n].clone()) * ratio(den, 1);
                let window =
                    ratio(5, 1) * (ratio(1, n as i64) + ratio(1, den)) * ratio(3 + 6, 1);
                assert!(
                    (slope - linear_coefficient(&ctx)).abs() <= window,
                    "n={n}, step=1/{den}"
                );
            }
        }
    }

    #[test]
    fn single_point_sweep_is_the_baseline() {
        let ctx = make_context(&k(3), &k(3));
        let report = sweep(&ctx, 8, &[ratio(0, 1)]);
        assert_eq!(report.values.len(), 1);
        assert_eq!(report.values[0], report.baseline);
        assert_eq!(report.below_baseline, vec![false]);
    }

    #[test]
    fn csv_shape() {
        let ctx = make_context(&k(3), &k(3));
        let report = sweep(&ctx, 6, &[ratio(0, 1), ratio(1, 2)]);
        let csv = report.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "epsilon,value_num,value_den,below_baseline");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("0/1,2,5,"));
    }

    #[test]
    fn report_json_shape() {
        let ctx = make_context(&k(3), &k(3));
        let json = sweep(&ctx, 6, &[ratio(0, 1)]).to_json();
        assert_eq!(json["verdict"], "inconclusive");
        assert_eq!(json["linear_coefficient"], "0/1");
        assert_eq!(json["threshold"], "3/1");
        assert_eq!(json["baseline"], "2/5");
    }

    #[test]
    #[should_panic(expected = "epsilon must lie in [0, 1]")]
    fn epsilon_out_of_range_is_refused() {
        expected_objective(&make_context(&k(3), &k(3)), 6, &ratio(3, 2));
    }

    #[test]
    fn clique_host_injections_match_the_materialized_host() {
        use crate::hom::inj_hom_count;
        let mut split = Graph::empty(5);
        split.set_edge(0, 1, true);
        split.set_edge(0, 2, true);
        split.set_edge(1, 2, true);
        split.set_edge(3, 4, true);
        let patterns = [k(2), k(3), hairy_triangle(2), Graph::cycle(5), split];
        for h in &patterns {
            for n in 5..=9usize {
                for r in 2..=3usize {
                    let host = turan_graph(n, r).complement();
                    assert_eq!(
                        clique_host_injections(h, &part_sizes(n, r)),
                        inj_hom_count(h, &host),
                        "pattern on {} vertices, n={n}, r={r}",
                        h.n()
                    );
                }
            }
        }
    }

    #[test]
    fn expectation_is_defined_past_the_dense_graph_cap() {
        let ctx = make_context(&k(3), &k(3));
        // intact: 4 * (2 * 40*39*38) / (80*79*78) = 76/79
        let at_80 = expected_objective(&ctx, 80, &ratio(0, 1));
        assert_eq!(at_80, ratio(76, 79));
        let deep = expected_objective(&ctx, 80, &ratio(1, 1));
        assert_eq!(deep, count_to_ratio(&ctx.rho2));
    }
}
