//! Partial orders, transitive orientation of comparability graphs, and the
//! domination bipartite graph reduction.

use std::collections::BTreeSet;

use crate::bigraph::BipartiteGraph;
use crate::chaincover::{self, ChainCover, CoverOutcome, CoverProblem};
use crate::{Edge, Error};

/// Simple undirected graph on vertices `0..n`, dense adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<bool>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, Error> {
        let mut g = Self {
            n,
            adjacency: vec![false; n * n],
        };
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, bound: n });
                }
            }
            if a == b {
                return Err(Error::NotPartialOrder(format!("self-loop at {a}")));
            }
            g.adjacency[a * n + b] = true;
            g.adjacency[b * n + a] = true;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a * self.n + b]
    }

    /// Edges as pairs (a, b) with a < b, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = Self {
            n: self.n,
            adjacency: vec![false; self.n * self.n],
        };
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && !self.has_edge(a, b) {
                    g.adjacency[a * self.n + b] = true;
                }
            }
        }
        g
    }
}

/// A strict partial order on `0..n`: irreflexive and transitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrder {
    n: usize,
    relation: BTreeSet<(usize, usize)>,
}

impl PartialOrder {
    pub fn new(n: usize, relation: BTreeSet<(usize, usize)>) -> Result<Self, Error> {
        for &(a, b) in &relation {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, bound: n });
                }
            }
            if a == b {
                return Err(Error::NotPartialOrder(format!("reflexive pair ({a}, {a})")));
            }
        }
        for &(a, b) in &relation {
            for &(b2, c) in relation.range((b, 0)..(b + 1, 0)) {
                debug_assert_eq!(b, b2);
                if !relation.contains(&(a, c)) {
                    return Err(Error::NotPartialOrder(format!(
                        "({a}, {b}) and ({b}, {c}) without ({a}, {c})"
                    )));
                }
            }
        }
        Ok(Self { n, relation })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.relation
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.relation.contains(&(a, b))
    }

    /// The comparability graph of the order (undirected underlying graph).
    pub fn comparability_graph(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.relation.iter().copied()).expect("valid pairs")
    }
}

/// Result of [`transitive_orientation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientationResult {
    Oriented(PartialOrder),
    NotComparability,
}

/// Orients the edges of `g` transitively via the forcing (implication class)
/// algorithm, or reports that `g` is not a comparability graph.
///
/// Edges are taken in lexicographic order; the first unforced edge of each
/// class is oriented low → high. Forcing works on the not-yet-oriented
/// subgraph: `a → b` forces `a → c` when `ac` is unoriented and `bc` is not
/// an unoriented edge, and forces `c → b` when `cb` is unoriented and `ca`
/// is not. An explicit transitivity check validates the result.
pub fn transitive_orientation(g: &SimpleGraph) -> OrientationResult {
    let n = g.n();
    // remaining[a][b]: edge ab not yet oriented
    let mut remaining = vec![false; n * n];
    for (a, b) in g.edges() {
        remaining[a * n + b] = true;
        remaining[b * n + a] = true;
    }
    let mut oriented: BTreeSet<(usize, usize)> = BTreeSet::new();

    for a in 0..n {
        for b in (a + 1)..n {
            if !remaining[a * n + b] {
                continue;
            }
            // Explore the implication class of a → b in the remaining graph.
            let mut class: std::collections::BTreeMap<(usize, usize), (usize, usize)> =
                std::collections::BTreeMap::new();
            let mut queue = std::collections::VecDeque::new();
            class.insert((a, b), (a, b));
            queue.push_back((a, b));
            let mut contradiction = false;
            while let Some((x, y)) = queue.pop_front() {
                for c in 0..n {
                    // x → y forces x → c when xc remains and yc does not remain
                    if c != y
                        && remaining[x * n + c]
                        && !remaining[y * n + c]
                        && !force(&mut class, &mut queue, (x, c))
                    {
                        contradiction = true;
                    }
                    // x → y forces c → y when cy remains and cx does not remain
                    if c != x
                        && remaining[c * n + y]
                        && !remaining[c * n + x]
                        && !force(&mut class, &mut queue, (c, y))
                    {
                        contradiction = true;
                    }
                }
            }
            if contradiction {
                return OrientationResult::NotComparability;
            }
            for (&key, &dir) in &class {
                debug_assert_eq!(key, normalize(dir));
                remaining[dir.0 * n + dir.1] = false;
                remaining[dir.1 * n + dir.0] = false;
                oriented.insert(dir);
            }
        }
    }

    // Validate transitivity before trusting the forcing.
    for &(x, y) in &oriented {
        for z in 0..n {
            if oriented.contains(&(y, z)) && !oriented.contains(&(x, z)) {
                return OrientationResult::NotComparability;
            }
        }
    }
    let order = PartialOrder::new(n, oriented).expect("checked transitive and irreflexive");
    OrientationResult::Oriented(order)
}

fn normalize(dir: (usize, usize)) -> (usize, usize) {
    if dir.0 < dir.1 {
        dir
    } else {
        (dir.1, dir.0)
    }
}

/// Records a forced direction; false on a contradiction (both directions
/// forced within one class).
fn force(
    class: &mut std::collections::BTreeMap<(usize, usize), (usize, usize)>,
    queue: &mut std::collections::VecDeque<(usize, usize)>,
    dir: (usize, usize),
) -> bool {
    match class.get(&normalize(dir)) {
        Some(&existing) => existing == dir,
        None => {
            class.insert(normalize(dir), dir);
            queue.push_back(dir);
            true
        }
    }
}

/// The domination bipartite graph `C(P)`: sides `V` and a primed copy `V'`,
/// with edge `(i, j')` iff `i ≺ j`.
pub fn domination_bigraph(p: &PartialOrder) -> BipartiteGraph {
    BipartiteGraph::from_edge_list(p.n(), p.n(), p.relation().iter().copied())
        .expect("relation indices are in range")
}

/// The diagonal `E_0 = {(i, i') | 0 ≤ i < n}`.
pub fn e0_edges(n: usize) -> BTreeSet<Edge> {
    (0..n).map(|i| (i, i)).collect()
}

/// Result of [`recognize_linear_interval_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LioResult {
    /// A linear-interval cover of the bipartite complement of `C(P)`.
    Yes(ChainCover),
    No,
}

impl LioResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, LioResult::Yes(_))
    }
}

/// Decides whether `p` is a linear-interval order by solving the restricted
/// cover problem on the bipartite complement of `C(P)` with `F = E_0`.
pub fn recognize_linear_interval_order(p: &PartialOrder) -> LioResult {
    let problem = lio_cover_problem(p);
    match chaincover::solve_restricted_cover(&problem) {
        CoverOutcome::Cover(c) => {
            debug_assert!(c.g1_edges.is_disjoint(&e0_edges(p.n())));
            LioResult::Yes(c)
        }
        CoverOutcome::Infeasible => LioResult::No,
    }
}

/// The cover instance underlying linear-interval recognition:
/// graph = bipartite complement of `C(P)`, forbidden = `E_0`.
pub fn lio_cover_problem(p: &PartialOrder) -> CoverProblem {
    let complement = domination_bigraph(p).bipartite_complement();
    CoverProblem::new(complement, e0_edges(p.n())).expect("E_0 lies in the complement")
}
