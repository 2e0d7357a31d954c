//! Seeded instance generators: ground-truth YES families (triangle
//! representations, permutation graphs, interval graphs) and random
//! bipartite instances. All coordinates are small distinct integers so
//! every comparison is exact.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bigraph::BipartiteGraph;
use crate::orders::{PartialOrder, SimpleGraph};
use crate::{Edge, Error};

/// One triangle per vertex: an apex on the top line and an interval on the
/// bottom line. Apexes are a permutation of 1..n and the 2n interval
/// endpoints a permutation of 1..2n, so general position holds by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRepresentation {
    pub apexes: Vec<i64>,
    pub intervals: Vec<(i64, i64)>,
}

impl TriangleRepresentation {
    pub fn len(&self) -> usize {
        self.apexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.apexes.is_empty()
    }

    /// `T_u` lies completely to the left of `T_v`: apexes and intervals
    /// both strictly ordered.
    pub fn left_of(&self, u: usize, v: usize) -> bool {
        self.apexes[u] < self.apexes[v] && self.intervals[u].1 < self.intervals[v].0
    }
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic random triangle representation on `n` vertices.
pub fn gen_triangle_representation(n: usize, seed: u64) -> TriangleRepresentation {
    let mut rng = rng_for(seed);
    let mut apexes: Vec<i64> = (1..=n as i64).collect();
    apexes.shuffle(&mut rng);
    let mut endpoints: Vec<i64> = (1..=2 * n as i64).collect();
    endpoints.shuffle(&mut rng);
    let intervals = endpoints
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    TriangleRepresentation { apexes, intervals }
}

/// Intersection graph of the triangles: adjacent unless one triangle lies
/// completely to the left of the other.
pub fn intersection_graph(r: &TriangleRepresentation) -> SimpleGraph {
    let n = r.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !r.left_of(u, v) && !r.left_of(v, u) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("indices in range")
}

/// The left-of relation of the representation, always a strict partial
/// order (by construction it is these orders the triangles realize).
pub fn order_of_representation(r: &TriangleRepresentation) -> PartialOrder {
    let n = r.len();
    let mut relation = BTreeSet::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && r.left_of(u, v) {
                relation.insert((u, v));
            }
        }
    }
    PartialOrder::new(n, relation).expect("left-of is irreflexive and transitive")
}

/// Random bipartite graph: each of the `u_count × v_count` pairs is an edge
/// independently with probability `density`.
pub fn gen_random_bipartite(
    u_count: usize,
    v_count: usize,
    density: f64,
    seed: u64,
) -> Result<BipartiteGraph, Error> {
    check_density(density)?;
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for u in 0..u_count {
        for v in 0..v_count {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edge_list(u_count, v_count, edges)
}

/// Random subset of `G`'s edges, each picked with probability `density`.
pub fn gen_random_f(g: &BipartiteGraph, density: f64, seed: u64) -> Result<BTreeSet<Edge>, Error> {
    check_density(density)?;
    let mut rng = rng_for(seed);
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(density))
        .collect())
}

/// Permutation graph of a random permutation: `i < j` adjacent iff the
/// permutation inverts them.
pub fn gen_permutation_graph(n: usize, seed: u64) -> SimpleGraph {
    let mut rng = rng_for(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if perm[i] > perm[j] {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("indices in range")
}

/// Interval graph of `n` random intervals with distinct endpoints.
pub fn gen_interval_graph(n: usize, seed: u64) -> SimpleGraph {
    let mut rng = rng_for(seed);
    let mut endpoints: Vec<i64> = (1..=2 * n as i64).collect();
    endpoints.shuffle(&mut rng);
    let intervals: Vec<(i64, i64)> = endpoints
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a1, b1) = intervals[i];
            let (a2, b2) = intervals[j];
            if a1 < b2 && a2 < b1 {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("indices in range")
}

fn check_density(density: f64) -> Result<(), Error> {
    if (0.0..=1.0).contains(&density) {
        Ok(())
    } else {
        Err(Error::BadDensity(density))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representation_basics() {
        let r = gen_triangle_representation(0, 1);
        assert!(r.is_empty());

        let r = gen_triangle_representation(1, 2);
        assert_eq!(r.len(), 1);

        // determinism
        assert_eq!(
            gen_triangle_representation(12, 7),
            gen_triangle_representation(12, 7)
        );

        // general position: all apexes distinct, all endpoints distinct
        let r = gen_triangle_representation(10, 3);
        let apexes: BTreeSet<i64> = r.apexes.iter().copied().collect();
        assert_eq!(apexes.len(), 10);
        let endpoints: BTreeSet<i64> = r
            .intervals
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect();
        assert_eq!(endpoints.len(), 20);
        assert!(r.intervals.iter().all(|&(a, b)| a < b));
    }

    #[test]
    fn left_of_matches_adjacency() {
        for seed in 0..20 {
            let r = gen_triangle_representation(8, seed);
            let g = intersection_graph(&r);
            for u in 0..8 {
                for v in (u + 1)..8 {
                    let disjoint = r.left_of(u, v) || r.left_of(v, u);
                    assert_eq!(g.has_edge(u, v), !disjoint);
                }
            }
        }
    }

    #[test]
    fn order_is_complement_dual_of_intersection_graph() {
        for seed in 0..20 {
            let r = gen_triangle_representation(9, seed);
            let p = order_of_representation(&r);
            let g = intersection_graph(&r);
            assert_eq!(p.comparability_graph(), g.complement());
        }
    }

    #[test]
    fn disjoint_row_gives_chain_and_overlap_gives_antichain() {
        let row = TriangleRepresentation {
            apexes: vec![1, 2, 3],
            intervals: vec![(1, 2), (3, 4), (5, 6)],
        };
        let p = order_of_representation(&row);
        assert_eq!(p.relation().len(), 3);

        let stack = TriangleRepresentation {
            apexes: vec![1, 2, 3],
            intervals: vec![(1, 6), (2, 5), (3, 4)],
        };
        let p = order_of_representation(&stack);
        assert!(p.relation().is_empty());
    }

    #[test]
    fn density_extremes_and_errors() {
        let empty = gen_random_bipartite(4, 4, 0.0, 1).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = gen_random_bipartite(4, 4, 1.0, 1).unwrap();
        assert_eq!(full.edge_count(), 16);
        assert!(matches!(
            gen_random_bipartite(2, 2, 1.5, 1),
            Err(Error::BadDensity(_))
        ));
        assert!(matches!(
            gen_random_f(&full, -0.1, 1),
            Err(Error::BadDensity(_))
        ));
        // reproducibility
        assert_eq!(
            gen_random_bipartite(6, 6, 0.4, 99).unwrap(),
            gen_random_bipartite(6, 6, 0.4, 99).unwrap()
        );
    }

    #[test]
    fn family_generators_are_deterministic() {
        assert_eq!(gen_permutation_graph(10, 5), gen_permutation_graph(10, 5));
        assert_eq!(gen_interval_graph(10, 5), gen_interval_graph(10, 5));
    }
}
