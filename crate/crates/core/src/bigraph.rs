//! Bipartite graphs and the 2K2 machinery: bipartite complement, edge
//! conflicts, committed/uncommitted classification, chain-graph testing.

use std::collections::BTreeSet;

use crate::{Edge, Error};

/// Bipartite graph with left side `0..u_count` and right side `0..v_count`.
///
/// Edges are kept sorted and deduplicated; a dense boolean matrix backs
/// constant-time membership queries, which the conflict and classification
/// scans rely on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    u_count: usize,
    v_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<bool>,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// out-of-range endpoints are input errors.
    pub fn from_edge_list(
        u_count: usize,
        v_count: usize,
        pairs: impl IntoIterator<Item = Edge>,
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            if u >= u_count {
                return Err(Error::LeftIndexOutOfRange {
                    index: u,
                    bound: u_count,
                });
            }
            if v >= v_count {
                return Err(Error::RightIndexOutOfRange {
                    index: v,
                    bound: v_count,
                });
            }
            set.insert((u, v));
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adjacency = vec![false; u_count * v_count];
        for &(u, v) in &edges {
            adjacency[u * v_count + v] = true;
        }
        Ok(Self {
            u_count,
            v_count,
            edges,
            adjacency,
        })
    }

    pub fn u_count(&self) -> usize {
        self.u_count
    }

    pub fn v_count(&self) -> usize {
        self.v_count
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.u_count && v < self.v_count);
        self.adjacency[u * self.v_count + v]
    }

    /// The bipartite complement: same sides, edge set `(U × V) \ E`.
    pub fn bipartite_complement(&self) -> Self {
        let pairs = (0..self.u_count)
            .flat_map(|u| (0..self.v_count).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Self::from_edge_list(self.u_count, self.v_count, pairs)
            .expect("complement endpoints are in range")
    }

    /// The spanning subgraph of `self` whose edge set is exactly `edge_subset`.
    pub fn spanning_subgraph(&self, edge_subset: &BTreeSet<Edge>) -> Result<Self, Error> {
        for &e in edge_subset {
            if !self.has_edge(e.0, e.1) {
                return Err(Error::EdgeNotInGraph { edge: e });
            }
        }
        Self::from_edge_list(self.u_count, self.v_count, edge_subset.iter().copied())
    }

    /// The graph with the edges of `removed` deleted.
    pub fn without_edges(&self, removed: &BTreeSet<Edge>) -> Self {
        let pairs = self.edges.iter().copied().filter(|e| !removed.contains(e));
        Self::from_edge_list(self.u_count, self.v_count, pairs).expect("edges already in range")
    }

    /// True iff the four endpoints of `e` and `e'` induce a 2K2 in this
    /// graph: all four vertices distinct and both cross pairs are non-edges.
    pub fn in_conflict(&self, e: Edge, e2: Edge) -> Result<bool, Error> {
        for &edge in &[e, e2] {
            if !self.has_edge(edge.0, edge.1) {
                return Err(Error::EdgeNotInGraph { edge });
            }
        }
        let (u1, v1) = e;
        let (u2, v2) = e2;
        Ok(u1 != u2 && v1 != v2 && !self.has_edge(u1, v2) && !self.has_edge(u2, v1))
    }

    /// Splits the edges into committed (in conflict with some other edge)
    /// and uncommitted, by the pairwise scan.
    pub fn classify_edges(&self) -> EdgeClassification {
        let m = self.edges.len();
        let mut is_committed = vec![false; m];
        for i in 0..m {
            for j in (i + 1)..m {
                if self
                    .in_conflict(self.edges[i], self.edges[j])
                    .expect("own edges")
                {
                    is_committed[i] = true;
                    is_committed[j] = true;
                }
            }
        }
        let mut committed = BTreeSet::new();
        let mut uncommitted = BTreeSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if is_committed[i] {
                committed.insert(e);
            } else {
                uncommitted.insert(e);
            }
        }
        EdgeClassification {
            committed,
            uncommitted,
        }
    }

    /// Tests whether the spanning subgraph with edge set `edge_subset` is a
    /// chain graph (left-vertex neighborhoods totally ordered by inclusion).
    ///
    /// On failure returns two edges of `edge_subset` inducing a 2K2 within
    /// the subgraph.
    pub fn is_chain_graph(&self, edge_subset: &BTreeSet<Edge>) -> Result<ChainVerdict, Error> {
        let mut nbhd: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.u_count];
        for &(u, v) in edge_subset {
            if !self.has_edge(u, v) {
                return Err(Error::EdgeNotInGraph { edge: (u, v) });
            }
            nbhd[u].insert(v);
        }
        // Sort by degree, ties by index; chain iff consecutive neighborhoods nest.
        let mut order: Vec<usize> = (0..self.u_count).collect();
        order.sort_by_key(|&u| (nbhd[u].len(), u));
        for w in order.windows(2) {
            let (small, large) = (w[0], w[1]);
            if nbhd[small].is_subset(&nbhd[large]) {
                continue;
            }
            // Degrees are non-decreasing, so a violation yields a 2K2 witness:
            // some v only in the smaller neighborhood, some v' only in the larger.
            let v = *nbhd[small]
                .difference(&nbhd[large])
                .next()
                .expect("non-subset has a private element");
            let v2 = *nbhd[large]
                .difference(&nbhd[small])
                .next()
                .expect("|N(large)| >= |N(small)| forces a private element");
            return Ok(ChainVerdict::Not2K2Free {
                witness: ((small, v), (large, v2)),
            });
        }
        Ok(ChainVerdict::Chain)
    }
}

/// Partition of a graph's edges into committed (`E_c`) and uncommitted (`E_u`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub committed: BTreeSet<Edge>,
    pub uncommitted: BTreeSet<Edge>,
}

/// Result of a chain-graph test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainVerdict {
    Chain,
    /// Two subset edges whose endpoints induce a 2K2 in the spanning subgraph.
    Not2K2Free { witness: (Edge, Edge) },
}

impl ChainVerdict {
    pub fn is_chain(&self) -> bool {
        matches!(self, ChainVerdict::Chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(u: usize, v: usize, edges: &[Edge]) -> BipartiteGraph {
        BipartiteGraph::from_edge_list(u, v, edges.iter().copied()).unwrap()
    }

    fn two_k2() -> BipartiteGraph {
        graph(2, 2, &[(0, 0), (1, 1)])
    }

    fn k22() -> BipartiteGraph {
        graph(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)])
    }

    fn path3() -> BipartiteGraph {
        // edges (u1,v1), (u2,v1), (u2,v2)
        graph(2, 2, &[(0, 0), (1, 0), (1, 1)])
    }

    #[test]
    fn from_edge_list_basics() {
        assert_eq!(two_k2().edge_count(), 2);
        assert_eq!(graph(2, 2, &[]).edge_count(), 0);
        let g = graph(1, 1, &[(0, 0), (0, 0)]);
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            BipartiteGraph::from_edge_list(2, 2, [(2, 0)]),
            Err(Error::LeftIndexOutOfRange { .. })
        ));
        assert!(matches!(
            BipartiteGraph::from_edge_list(2, 2, [(0, 5)]),
            Err(Error::RightIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn complement_basics() {
        assert_eq!(k22().bipartite_complement().edge_count(), 0);
        assert_eq!(graph(2, 2, &[]).bipartite_complement(), k22());
        let g = graph(3, 4, &[(0, 1), (2, 3), (1, 1)]);
        assert_eq!(g.bipartite_complement().bipartite_complement(), g);
        assert_eq!(g.bipartite_complement().edge_count(), 12 - 3);
    }

    #[test]
    fn conflict_basics() {
        assert!(two_k2().in_conflict((0, 0), (1, 1)).unwrap());
        assert!(two_k2().in_conflict((1, 1), (0, 0)).unwrap());
        assert!(!k22().in_conflict((0, 0), (1, 1)).unwrap());
        assert!(!path3().in_conflict((0, 0), (1, 1)).unwrap());
        assert!(matches!(
            two_k2().in_conflict((0, 1), (1, 1)),
            Err(Error::EdgeNotInGraph { .. })
        ));
    }

    #[test]
    fn classify_basics() {
        let c = two_k2().classify_edges();
        assert_eq!(c.committed.len(), 2);
        assert!(c.uncommitted.is_empty());

        let c = k22().classify_edges();
        assert!(c.committed.is_empty());
        assert_eq!(c.uncommitted.len(), 4);

        let c = path3().classify_edges();
        assert!(c.committed.is_empty());
        assert_eq!(c.uncommitted.len(), 3);
    }

    #[test]
    fn chain_test_basics() {
        let g = two_k2();
        let all: BTreeSet<Edge> = g.edges().iter().copied().collect();
        match g.is_chain_graph(&all).unwrap() {
            ChainVerdict::Not2K2Free { witness: (a, b) } => {
                let mut w = [a, b];
                w.sort();
                assert_eq!(w, [(0, 0), (1, 1)]);
            }
            ChainVerdict::Chain => panic!("2K2 is not a chain graph"),
        }

        let g = k22();
        let all: BTreeSet<Edge> = g.edges().iter().copied().collect();
        assert!(g.is_chain_graph(&all).unwrap().is_chain());

        // nested: N(u0) = {v0} ⊆ N(u1) = {v0, v1}
        let g = graph(2, 2, &[(0, 0), (1, 0), (1, 1)]);
        let all: BTreeSet<Edge> = g.edges().iter().copied().collect();
        assert!(g.is_chain_graph(&all).unwrap().is_chain());

        // subset edge outside the graph is an input error
        let mut bad = BTreeSet::new();
        bad.insert((0usize, 1usize));
        assert!(matches!(
            two_k2().is_chain_graph(&bad),
            Err(Error::EdgeNotInGraph { .. })
        ));
    }

    #[test]
    fn chain_witness_is_valid_2k2_of_subset() {
        // 2K2 inside a subset even though the graph has the cross edges.
        let g = k22();
        let mut sub = BTreeSet::new();
        sub.insert((0, 0));
        sub.insert((1, 1));
        match g.is_chain_graph(&sub).unwrap() {
            ChainVerdict::Not2K2Free {
                witness: ((u1, v1), (u2, v2)),
            } => {
                assert!(sub.contains(&(u1, v1)) && sub.contains(&(u2, v2)));
                assert!(u1 != u2 && v1 != v2);
                assert!(!sub.contains(&(u1, v2)) && !sub.contains(&(u2, v1)));
            }
            ChainVerdict::Chain => panic!("subset is a 2K2"),
        }
    }

    #[test]
    fn empty_and_isolated_vertices_are_chain() {
        let g = graph(4, 5, &[(0, 0)]);
        let all: BTreeSet<Edge> = g.edges().iter().copied().collect();
        assert!(g.is_chain_graph(&all).unwrap().is_chain());
        assert!(g.is_chain_graph(&BTreeSet::new()).unwrap().is_chain());
    }
}
