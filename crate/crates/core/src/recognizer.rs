//! End-to-end recognition of simple-triangle graphs: complement, transitive
//! orientation, then linear-interval recognition of the resulting order.

use crate::chaincover::ChainCover;
use crate::orders::{
    recognize_linear_interval_order, transitive_orientation, LioResult, OrientationResult,
    PartialOrder, SimpleGraph,
};

/// Why a graph is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoReason {
    ComplementNotComparability,
    NoLinearIntervalCover,
}

/// Verdict with certificates: on Yes, a transitive orientation of the
/// complement and a linear-interval cover of the complement of its
/// domination bigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognitionResult {
    Yes {
        orientation: PartialOrder,
        cover: ChainCover,
    },
    No(NoReason),
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, RecognitionResult::Yes { .. })
    }
}

/// Decides whether `g` is a simple-triangle graph. Any transitive
/// orientation of the complement works: being a linear-interval order is a
/// comparability invariant, so the verdict does not depend on the choice.
pub fn recognize_simple_triangle(g: &SimpleGraph) -> RecognitionResult {
    let complement = g.complement();
    let orientation = match transitive_orientation(&complement) {
        OrientationResult::Oriented(p) => p,
        OrientationResult::NotComparability => {
            return RecognitionResult::No(NoReason::ComplementNotComparability)
        }
    };
    match recognize_linear_interval_order(&orientation) {
        LioResult::Yes(cover) => RecognitionResult::Yes { orientation, cover },
        LioResult::No => RecognitionResult::No(NoReason::NoLinearIntervalCover),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaincover::{self};
    use crate::orders::{e0_edges, lio_cover_problem};

    fn simple(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn single_vertex_is_yes() {
        assert!(recognize_simple_triangle(&simple(1, &[])).is_yes());
    }

    #[test]
    fn c5_is_rejected_for_complement() {
        let c5 = simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(
            recognize_simple_triangle(&c5),
            RecognitionResult::No(NoReason::ComplementNotComparability)
        );
    }

    #[test]
    fn yes_certificate_verifies() {
        // P4 is a permutation graph, hence simple-triangle.
        let p4 = simple(4, &[(0, 1), (1, 2), (2, 3)]);
        match recognize_simple_triangle(&p4) {
            RecognitionResult::Yes { orientation, cover } => {
                // orientation orients exactly the complement's edges
                let complement = p4.complement();
                let mut undirected: Vec<(usize, usize)> = orientation
                    .relation()
                    .iter()
                    .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
                    .collect();
                undirected.sort();
                undirected.dedup();
                assert_eq!(undirected, complement.edges());
                // cover verifies against the lio instance with F = E0
                let problem = lio_cover_problem(&orientation);
                assert_eq!(chaincover::verify_cover(&problem, &cover), Ok(Ok(())));
                assert!(cover.g1_edges.is_disjoint(&e0_edges(4)));
            }
            RecognitionResult::No(r) => panic!("P4 must be accepted, got {r:?}"),
        }
    }
}
