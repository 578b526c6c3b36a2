//! Exact homomorphism and injective-homomorphism counting, the two density
//! normalisations, and per-vertex contributions.
//!
//! Two denominators coexist on purpose and are kept strictly apart:
//! [`t_density`] with `injective` divides by the falling factorial
//! (n)_{v(h)} (random injective map), while the non-injective variant and
//! [`vertex_contribution`] divide by n^{v(h)} (random arbitrary map).
//! Mixing them up produces answers that are plausibly close and wrong.

use crate::graph::{mask_n, Graph, MAX_VERTICES};
use crate::numbers::{count_pow, falling_factorial, ratio_from_counts, Count, Ratio};
use num_traits::{One, Zero};

/// Number of maps V(h) -> V(g) sending every edge of h to an edge of g.
/// Counts are labelled: no quotient by automorphisms of h.
pub fn hom_count(h: &Graph, g: &Graph) -> Count {
    let mut total = Count::one();
    for comp in h.components() {
        let order = bfs_order(h, comp);
        total *= Count::from(count_maps(h, g, &order, false));
        if total.is_zero() {
            break;
        }
    }
    total
}

/// Number of injective homomorphisms from h into g; 0 when v(h) > v(g).
/// Injectivity couples the components of h, so they share one image set.
pub fn inj_hom_count(h: &Graph, g: &Graph) -> Count {
    Count::from(InjCounter::new(h).count(g))
}

/// Injective counter with the pattern's traversal order precomputed, for
/// repeated counts of one pattern against many hosts.
#[derive(Clone, Debug)]
pub struct InjCounter {
    h: Graph,
    order: Vec<usize>,
}

impl InjCounter {
    pub fn new(h: &Graph) -> InjCounter {
        let mut order = Vec::with_capacity(h.n());
        for comp in h.components() {
            order.extend(bfs_order(h, comp));
        }
        InjCounter { h: *h, order }
    }

    /// See [`count_maps`] for why u128 cannot overflow.
    pub fn count(&self, g: &Graph) -> u128 {
        if self.h.n() > g.n() {
            return 0;
        }
        count_maps(&self.h, g, &self.order, true)
    }
}

/// Breadth-first order of one component, so every vertex after the root
/// arrives with at least one already-placed neighbour to constrain it.
fn bfs_order(h: &Graph, comp: u64) -> Vec<usize> {
    let mut queue = vec![comp.trailing_zeros() as usize];
    let mut seen = 1u64 << queue[0];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let mut nb = h.neighbours(v) & comp & !seen;
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            seen |= 1u64 << u;
            queue.push(u);
            nb &= nb - 1;
        }
    }
    queue
}

/// Backtracking count. The candidate set for each vertex is the intersection
/// of the host neighbourhoods of its already-placed h-neighbours, minus the
/// used set when injective. Work is proportional to the count itself, so the
/// u128 accumulator cannot overflow in any run that terminates.
fn count_maps(h: &Graph, g: &Graph, order: &[usize], injective: bool) -> u128 {
    let mut images = [usize::MAX; MAX_VERTICES];
    rec_maps(h, g, order, 0, &mut images, 0, injective)
}

fn rec_maps(
    h: &Graph,
    g: &Graph,
    order: &[usize],
    i: usize,
    images: &mut [usize; MAX_VERTICES],
    used: u64,
    injective: bool,
) -> u128 {
    if i == order.len() {
        return 1;
    }
    let v = order[i];
    let mut cand = mask_n(g.n());
    if injective {
        cand &= !used;
    }
    let mut nb = h.neighbours(v);
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        if images[u] != usize::MAX {
            cand &= g.neighbours(images[u]);
        }
        nb &= nb - 1;
    }
    let mut total = 0u128;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        images[v] = w;
        total += rec_maps(h, g, order, i + 1, images, used | (1u64 << w), injective);
        images[v] = usize::MAX;
        cand &= cand - 1;
    }
    total
}

/// Homomorphism density of h in g.
///
/// Non-injective: hom_count / n^{v(h)}, the probability that a uniformly
/// random map is a homomorphism. Injective: inj_hom_count / (n)_{v(h)}, the
/// probability for a uniformly random injective map; requires v(h) <= v(g)
/// or the denominator vanishes.
pub fn t_density(h: &Graph, g: &Graph, injective: bool) -> Ratio {
    let n = g.n();
    if injective {
        assert!(
            h.n() <= n,
            "injective density needs v(h) <= v(g), got {} > {n}",
            h.n()
        );
        ratio_from_counts(inj_hom_count(h, g), falling_factorial(n, h.n()))
    } else {
        ratio_from_counts(hom_count(h, g), count_pow(n, h.n()))
    }
}

/// Probability that a uniformly random map V(h) -> V(g) is an injective
/// homomorphism whose image contains v. Denominator n^{v(h)}, not the
/// falling factorial.
pub fn vertex_contribution(h: &Graph, g: &Graph, v: usize) -> Ratio {
    let n = g.n();
    assert!(v < n, "vertex {v} out of range for host on {n} vertices");
    let hitting = if n == 1 {
        inj_hom_count(h, g) // the image is forced to contain the sole vertex
    } else {
        inj_hom_count(h, g) - inj_hom_count(h, &g.without_vertex(v))
    };
    ratio_from_counts(hitting, count_pow(n, h.n()))
}

// =============================================================================
// Tests
// =============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::nonisomorphic_graphs;
    use crate::chromatic::count_proper_colourings;
    use crate::graph::turan_graph;
    use crate::numbers::ratio;
    use num_traits::Signed;

    /// Independent oracle scanning all v(g)^{v(h)} maps.
    fn brute_maps(h: &Graph, g: &Graph, injective: bool) -> u64 {
        let hv = h.n();
        let gn = g.n();
        let mut img = vec![0usize; hv];
        let mut total = 0u64;
        'outer: loop {
            let inj_ok = !injective || {
                let mut seen = 0u64;
                img.iter().all(|&w| {
                    let fresh = seen >> w & 1 == 0;
                    seen |= 1 << w;
                    fresh
                })
            };
            if inj_ok
                && h.edges()
                    .iter()
                    .all(|&(a, b)| g.has_edge(img[a], img[b]))
            {
                total += 1;
            }
            for digit in img.iter_mut() {
                *digit += 1;
                if *digit < gn {
                    continue 'outer;
                }
                *digit = 0;
            }
            return total;
        }
    }

    #[test]
    fn hom_fixtures() {
        for g in [Graph::cycle(5), Graph::petersen(), turan_graph(7, 3)] {
            assert_eq!(
                hom_count(&Graph::complete(2), &g),
                Count::from(2 * g.edge_count() as u64)
            );
        }
        assert_eq!(hom_count(&Graph::complete(3), &Graph::cycle(5)), Count::zero());
        assert_eq!(hom_count(&Graph::complete(3), &Graph::complete(3)), Count::from(6u32));
    }

    #[test]
    fn injective_fixtures() {
        assert_eq!(
            inj_hom_count(&Graph::complete(3), &Graph::complete(4)),
            Count::from(24u32)
        );
        assert_eq!(
            inj_hom_count(&Graph::complete(2), &Graph::cycle(5)),
            Count::from(10u32)
        );
        let t62 = turan_graph(6, 2);
        assert_eq!(inj_hom_count(&Graph::complete(3), &t62), Count::zero());
        assert_eq!(
            inj_hom_count(&Graph::complete(3), &t62.complement()),
            Count::from(12u32)
        );
        // oversized pattern
        assert_eq!(
            inj_hom_count(&Graph::complete(4), &Graph::complete(3)),
            Count::zero()
        );
    }

    #[test]
    fn counts_match_brute_force() {
        for hn in 1..=4usize {
            for h in nonisomorphic_graphs(hn) {
                for gn in 1..=6usize {
                    for g in nonisomorphic_graphs(gn) {
                        assert_eq!(hom_count(&h, &g), Count::from(brute_maps(&h, &g, false)));
                        assert_eq!(
                            inj_hom_count(&h, &g),
                            Count::from(brute_maps(&h, &g, true))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn hom_into_complete_graph_counts_proper_colourings() {
        for n in 1..=5usize {
            for h in nonisomorphic_graphs(n) {
                for m in 1..=4usize {
                    assert_eq!(hom_count(&h, &Graph::complete(m)), count_proper_colourings(&h, m));
                }
            }
        }
    }

    #[test]
    fn density_fixtures() {
        for n in 2..=7usize {
            assert_eq!(
                t_density(&Graph::complete(2), &Graph::complete(n), false),
                ratio(n as i64 - 1, n as i64)
            );
        }
        assert_eq!(
            t_density(&Graph::complete(3), &Graph::complete(5), true),
            ratio(1, 1)
        );
        assert_eq!(
            t_density(&Graph::complete(3), &turan_graph(6, 2).complement(), true),
            ratio(1, 10)
        );
    }

    #[test]
    #[should_panic(expected = "v(h) <= v(g)")]
    fn injective_density_refuses_oversized_pattern() {
        t_density(&Graph::complete(4), &Graph::complete(3), true);
    }

    #[test]
    fn vertex_contribution_fixtures() {
        assert_eq!(
            vertex_contribution(&Graph::complete(2), &Graph::complete(2), 0),
            ratio(1, 2)
        );
        for v in 0..5 {
            assert_eq!(
                vertex_contribution(&Graph::complete(3), &Graph::cycle(5), v),
                ratio(0, 1)
            );
        }
    }

    #[test]
    fn vertex_contributions_sum_to_image_size_times_density() {
        for hn in 1..=3usize {
            for h in nonisomorphic_graphs(hn) {
                for gn in 1..=5usize {
                    for g in nonisomorphic_graphs(gn) {
                        let mut sum = ratio(0, 1);
                        for v in 0..gn {
                            sum += vertex_contribution(&h, &g, v);
                        }
                        let expected = ratio_from_counts(
                            Count::from(hn as u64) * inj_hom_count(&h, &g),
                            count_pow(gn, hn),
                        );
                        assert_eq!(sum, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn densities_converge_as_host_grows() {
        // |t - t_inj| <= C(v,2) * v^v / n, a crude finite-n gap bound
        for h in nonisomorphic_graphs(4) {
            let v = h.n() as i64;
            for g in nonisomorphic_graphs(6) {
                let gap = (t_density(&h, &g, false) - t_density(&h, &g, true)).abs();
                let bound = ratio(v * (v - 1) / 2 * v.pow(v as u32), g.n() as i64);
                assert!(gap <= bound);
            }
        }
    }

    #[test]
    fn counts_are_isomorphism_invariant() {
        let h = Graph::path(4);
        let perm_h = [2usize, 0, 3, 1];
        let g = Graph::petersen();
        let perm_g: Vec<usize> = (0..10).map(|i| (3 * i + 1) % 10).collect();
        assert_eq!(hom_count(&h, &g), hom_count(&h.relabelled(&perm_h), &g));
        assert_eq!(hom_count(&h, &g), hom_count(&h, &g.relabelled(&perm_g)));
        assert_eq!(inj_hom_count(&h, &g), inj_hom_count(&h.relabelled(&perm_h), &g));
        assert_eq!(inj_hom_count(&h, &g), inj_hom_count(&h, &g.relabelled(&perm_g)));
    }
}
