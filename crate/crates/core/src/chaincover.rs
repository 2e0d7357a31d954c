//! The restricted 2-chain subgraph cover pipeline: 2SAT edge bipartition,
//! swap repair of B-configurations, and chain completion of the red edges.

use std::collections::BTreeSet;

use crate::bigraph::{BipartiteGraph, ChainVerdict, EdgeClassification};
use crate::twosat::{Assignment, Lit, TwoSatInstance};
use crate::{Edge, Error};

/// An instance: a bipartite graph `G` and the edge set `F` that the first
/// chain subgraph must avoid.
#[derive(Debug, Clone)]
pub struct CoverProblem {
    graph: BipartiteGraph,
    forbidden: BTreeSet<Edge>,
}

impl CoverProblem {
    pub fn new(graph: BipartiteGraph, forbidden: BTreeSet<Edge>) -> Result<Self, Error> {
        for &e in &forbidden {
            if !graph.has_edge(e.0, e.1) {
                return Err(Error::EdgeNotInGraph { edge: e });
            }
        }
        Ok(Self { graph, forbidden })
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn forbidden(&self) -> &BTreeSet<Edge> {
        &self.forbidden
    }
}

/// Red/blue coloring of the committed edges; red edges are bound for `G1`
/// and therefore never in `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeBipartition {
    pub red: BTreeSet<Edge>,
    pub blue: BTreeSet<Edge>,
}

/// The five 4-vertex colored patterns a bipartition must avoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConfigKind {
    A1,
    A2,
    B1,
    B2,
    C,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 5] = [
        ConfigKind::A1,
        ConfigKind::A2,
        ConfigKind::B1,
        ConfigKind::B2,
        ConfigKind::C,
    ];

    /// The kinds excluded by the 2SAT step.
    pub const AC: [ConfigKind; 3] = [ConfigKind::A1, ConfigKind::A2, ConfigKind::C];
}

/// A found forbidden configuration on vertices `(u1, v1, u2, v2)`, with
/// `u1v1` and `u2v2` the two same-colored edges of the pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbiddenConfiguration {
    pub kind: ConfigKind,
    pub vertices: (usize, usize, usize, usize),
}

/// A 2-chain subgraph cover: `g1 ∪ g2 = E(G)`, `g1 ∩ F = ∅`, both chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    pub g1_edges: BTreeSet<Edge>,
    pub g2_edges: BTreeSet<Edge>,
}

/// Outcome of the solver: a verified cover, or proof-by-UNSAT that none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverOutcome {
    Cover(ChainCover),
    Infeasible,
}

impl CoverOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, CoverOutcome::Cover(_))
    }
}

/// Why a claimed cover is invalid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    /// An edge of `G` missing from `g1 ∪ g2`.
    UnionMissingEdge(Edge),
    /// A forbidden edge present in `g1`.
    ForbiddenInG1(Edge),
    /// `g1` contains an induced 2K2.
    G1NotChain { witness: (Edge, Edge) },
    /// `g2` contains an induced 2K2.
    G2NotChain { witness: (Edge, Edge) },
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverViolation::UnionMissingEdge((u, v)) => {
                write!(f, "union: edge ({u}, {v}) covered by neither side")
            }
            CoverViolation::ForbiddenInG1((u, v)) => {
                write!(f, "F-disjointness: forbidden edge ({u}, {v}) in g1")
            }
            CoverViolation::G1NotChain { witness: (a, b) } => write!(
                f,
                "g1 not chain: edges ({}, {}) and ({}, {}) induce a 2K2",
                a.0, a.1, b.0, b.1
            ),
            CoverViolation::G2NotChain { witness: (a, b) } => write!(
                f,
                "g2 not chain: edges ({}, {}) and ({}, {}) induce a 2K2",
                a.0, a.1, b.0, b.1
            ),
        }
    }
}

/// 2CNF encoding of the (A, C)-freeness constraints together with the
/// edge ↔ variable correspondence. Variable `x_e` is false iff `e` is red.
#[derive(Debug, Clone)]
pub struct PartitionFormula {
    pub instance: TwoSatInstance,
    /// Committed edges in lexicographic order; index = 2SAT variable.
    pub edge_of_var: Vec<Edge>,
}

impl PartitionFormula {
    /// Decodes a satisfying assignment: `x_e = 0 ⟺ e ∈ E_r`.
    pub fn decode(&self, assignment: &Assignment) -> EdgeBipartition {
        let mut red = BTreeSet::new();
        let mut blue = BTreeSet::new();
        for (var, &e) in self.edge_of_var.iter().enumerate() {
            if assignment.value(var) {
                blue.insert(e);
            } else {
                red.insert(e);
            }
        }
        EdgeBipartition { red, blue }
    }
}

/// Builds the 2CNF formula whose satisfying assignments are exactly the
/// (A, C)-free bipartitions of the committed edges with `F ∩ E_c` blue:
/// a unit clause per committed forbidden edge, the pair of clauses
/// `(x_e ∨ x_e')`, `(¬x_e ∨ ¬x_e')` per conflicting committed pair, and
/// `(x_e ∨ x_e')` per committed pair spanning a path of length 3 whose
/// middle edge is in `F`.
pub fn build_partition_formula(p: &CoverProblem, cls: &EdgeClassification) -> PartitionFormula {
    let edge_of_var: Vec<Edge> = cls.committed.iter().copied().collect();
    let mut inst = TwoSatInstance::new(edge_of_var.len());
    let var_of = |e: &Edge| edge_of_var.binary_search(e).expect("committed edge");

    for e in &cls.committed {
        if p.forbidden.contains(e) {
            inst.add_unit(Lit::pos(var_of(e))).expect("var in range");
        }
    }
    let g = &p.graph;
    for (i, &e) in edge_of_var.iter().enumerate() {
        for (j, &e2) in edge_of_var.iter().enumerate().skip(i + 1) {
            let (u1, v1) = e;
            let (u2, v2) = e2;
            if u1 == u2 || v1 == v2 {
                continue;
            }
            let cross_a = g.has_edge(u1, v2);
            let cross_b = g.has_edge(u2, v1);
            if !cross_a && !cross_b {
                // in conflict: exactly one of e, e' red
                inst.add_clause(Lit::pos(i), Lit::pos(j)).expect("in range");
                inst.add_clause(Lit::neg(i), Lit::neg(j)).expect("in range");
            } else if cross_a != cross_b {
                // path of length 3; forbid both red if the middle edge is in F
                let middle = if cross_a { (u1, v2) } else { (u2, v1) };
                if p.forbidden.contains(&middle) {
                    inst.add_clause(Lit::pos(i), Lit::pos(j)).expect("in range");
                }
            }
        }
    }
    PartitionFormula {
        instance: inst,
        edge_of_var,
    }
}

/// Step 1: computes an (A, C)-free bipartition of the committed edges, or
/// `None` when the 2SAT instance is unsatisfiable, which certifies that no
/// restricted cover exists.
pub fn ac_free_bipartition(p: &CoverProblem) -> Option<EdgeBipartition> {
    let cls = p.graph.classify_edges();
    let formula = build_partition_formula(p, &cls);
    formula.instance.solve().map(|a| formula.decode(&a))
}

/// Exhaustively lists all configurations of the requested kinds in the
/// bipartition, by scanning quadruples spanned by pairs of colored edges.
pub fn find_configurations(
    p: &CoverProblem,
    b: &EdgeBipartition,
    kinds: &[ConfigKind],
) -> Vec<ForbiddenConfiguration> {
    let g = &p.graph;
    let mut found = Vec::new();
    for &kind in kinds {
        let same: Vec<Edge> = match kind {
            ConfigKind::A1 | ConfigKind::B1 | ConfigKind::C => b.red.iter().copied().collect(),
            ConfigKind::A2 | ConfigKind::B2 => b.blue.iter().copied().collect(),
        };
        // A1/A2 are symmetric in the two edges; B1/B2/C are not.
        let symmetric = matches!(kind, ConfigKind::A1 | ConfigKind::A2);
        for (i, &(u1, v1)) in same.iter().enumerate() {
            let start = if symmetric { i + 1 } else { 0 };
            for &(u2, v2) in same.iter().skip(start) {
                if u1 == u2 || v1 == v2 {
                    continue;
                }
                let hit = match kind {
                    ConfigKind::A1 | ConfigKind::A2 => {
                        !g.has_edge(u1, v2) && !g.has_edge(u2, v1)
                    }
                    ConfigKind::B1 => !g.has_edge(u1, v2) && b.blue.contains(&(u2, v1)),
                    ConfigKind::B2 => !g.has_edge(u1, v2) && b.red.contains(&(u2, v1)),
                    ConfigKind::C => !g.has_edge(u1, v2) && p.forbidden.contains(&(u2, v1)),
                };
                if hit {
                    found.push(ForbiddenConfiguration {
                        kind,
                        vertices: (u1, v1, u2, v2),
                    });
                }
            }
        }
    }
    found
}

/// One swap at the non-edge `uv`: exchanges
/// `H_r = {u'v' ∈ E_r | uv', u'v ∈ E_b}` and
/// `H_b = {u'v' ∈ E_b | uv', u'v ∈ E_r}` between the color classes,
/// removing every B-configuration whose non-edge is `uv`.
pub fn swap_step(p: &CoverProblem, b: &EdgeBipartition, uv: Edge) -> EdgeBipartition {
    let (u, v) = uv;
    assert!(
        !p.graph.has_edge(u, v),
        "swap_step requires a non-edge of G"
    );
    let h_r: BTreeSet<Edge> = b
        .red
        .iter()
        .copied()
        .filter(|&(u2, v2)| b.blue.contains(&(u, v2)) && b.blue.contains(&(u2, v)))
        .collect();
    let h_b: BTreeSet<Edge> = b
        .blue
        .iter()
        .copied()
        .filter(|&(u2, v2)| b.red.contains(&(u, v2)) && b.red.contains(&(u2, v)))
        .collect();
    // (A, C)-freeness of the input keeps every committed F edge blue.
    assert!(
        h_b.iter().all(|e| !p.forbidden.contains(e)),
        "swap would move an F edge out of E_b"
    );
    let red: BTreeSet<Edge> = b.red.difference(&h_r).copied().chain(h_b.iter().copied()).collect();
    let blue: BTreeSet<Edge> = b.blue.difference(&h_b).copied().chain(h_r.iter().copied()).collect();
    EdgeBipartition { red, blue }
}

/// Step 2: one swap pass over the non-edges in lexicographic order turns an
/// (A, C)-free bipartition into an (A, B, C)-free one; swapped edges never
/// re-enter a forbidden configuration, so a single pass suffices.
pub fn abc_free_bipartition(p: &CoverProblem, b: &EdgeBipartition) -> EdgeBipartition {
    let mut current = b.clone();
    for u in 0..p.graph.u_count() {
        for v in 0..p.graph.v_count() {
            if !p.graph.has_edge(u, v) {
                current = swap_step(p, &current, (u, v));
            }
        }
    }
    current
}

/// A witness that no chain completion exists: vertices
/// `u_0, v_0, ..., u_{k-1}, v_{k-1}` with `u_i v_i` a non-edge of `H` and
/// `u_{i+1} v_i ∈ M` (indices mod `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingCycle {
    pub us: Vec<usize>,
    pub vs: Vec<usize>,
}

impl AlternatingCycle {
    /// Checks the witness against `H` and `M`.
    pub fn is_valid(&self, h: &BipartiteGraph, m: &BTreeSet<Edge>) -> bool {
        let k = self.us.len();
        if k < 2 || self.vs.len() != k {
            return false;
        }
        let distinct = |xs: &[usize]| {
            let set: BTreeSet<usize> = xs.iter().copied().collect();
            set.len() == xs.len()
        };
        if !distinct(&self.us) || !distinct(&self.vs) {
            return false;
        }
        (0..k).all(|i| {
            !h.has_edge(self.us[i], self.vs[i]) && m.contains(&(self.us[(i + 1) % k], self.vs[i]))
        })
    }
}

/// Result of [`chain_completion`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionResult {
    /// A chain edge set `C` with `M ⊆ C ⊆ E(H)`.
    Chain(BTreeSet<Edge>),
    /// No completion exists; here is why.
    Cycle(AlternatingCycle),
}

/// Computes a chain completion of `M` in `H` by peeling vertices that are
/// isolated in `M` (contribute nothing) or dominating in `H` (contribute all
/// their remaining `H` edges), or returns an alternating cycle when the
/// peeling gets stuck.
pub fn chain_completion(h: &BipartiteGraph, m: &BTreeSet<Edge>) -> Result<CompletionResult, Error> {
    for &e in m {
        if !h.has_edge(e.0, e.1) {
            return Err(Error::EdgeNotInGraph { edge: e });
        }
    }
    let nu = h.u_count();
    let nv = h.v_count();

    // Side-tagged vertex ids: U vertices first, then V.
    let id_u = |u: usize| u;
    let id_v = |v: usize| nu + v;

    let mut alive = vec![true; nu + nv];
    let mut alive_u = nu;
    let mut alive_v = nv;
    let mut deg_m = vec![0usize; nu + nv];
    let mut deg_h = vec![0usize; nu + nv];
    for &(u, v) in m {
        deg_m[id_u(u)] += 1;
        deg_m[id_v(v)] += 1;
    }
    for &(u, v) in h.edges() {
        deg_h[id_u(u)] += 1;
        deg_h[id_v(v)] += 1;
    }
    // deg in the bipartite complement = alive opposite count − deg_h
    let deg_hat = |x: usize, alive_u: usize, alive_v: usize, deg_h: &[usize]| {
        let opposite = if x < nu { alive_v } else { alive_u };
        opposite - deg_h[x]
    };

    let mut completion: BTreeSet<Edge> = BTreeSet::new();
    let mut queue: std::collections::VecDeque<usize> = (0..nu + nv).collect();
    let mut remaining = nu + nv;

    while remaining > 0 {
        let x = match queue.pop_front() {
            Some(x) => x,
            None => {
                // Every remaining vertex has deg_m ≥ 1 and deg_hat ≥ 1:
                // an alternating cycle exists, extract it.
                let cycle = extract_cycle(h, m, &alive, nu);
                debug_assert!(cycle.is_valid(h, m));
                return Ok(CompletionResult::Cycle(cycle));
            }
        };
        if !alive[x] {
            continue;
        }
        let isolated = deg_m[x] == 0;
        let dominating = deg_hat(x, alive_u, alive_v, &deg_h) == 0;
        if !isolated && !dominating {
            continue; // stale entry; requeued on change
        }
        // Prefer the isolated peel when both apply: it adds no edges.
        alive[x] = false;
        remaining -= 1;
        if x < nu {
            alive_u -= 1;
        } else {
            alive_v -= 1;
        }
        let (others, is_left) = if x < nu {
            (nu..nu + nv, true)
        } else {
            (0..nu, false)
        };
        for y in others {
            if !alive[y] {
                continue;
            }
            let (u, v) = if is_left { (x, y - nu) } else { (y, x - nu) };
            let in_h = h.has_edge(u, v);
            if !isolated && in_h {
                completion.insert((u, v));
            }
            if in_h {
                deg_h[y] -= 1;
            }
            if m.contains(&(u, v)) {
                deg_m[y] -= 1;
            }
            // The opposite-side alive count also dropped, so deg_hat(y) only
            // changes when xy was an H edge... it changes when xy was a
            // non-edge; either way re-test y.
            if deg_m[y] == 0 || deg_hat(y, alive_u, alive_v, &deg_h) == 0 {
                queue.push_back(y);
            }
        }
    }
    debug_assert!(completion.is_superset(m));
    Ok(CompletionResult::Chain(completion))
}

/// Walks the alternation (non-edge of `H` from U to V, `M` edge from V to U)
/// inside the alive vertices until a cycle closes, then shortens it until
/// all vertices are distinct.
fn extract_cycle(
    h: &BipartiteGraph,
    m: &BTreeSet<Edge>,
    alive: &[bool],
    nu: usize,
) -> AlternatingCycle {
    let nv = h.v_count();
    let alive_u = |u: usize| alive[u];
    let alive_v = |v: usize| alive[nu + v];
    let next_v = |u: usize| {
        (0..nv)
            .find(|&v| alive_v(v) && !h.has_edge(u, v))
            .expect("stuck vertex has an alive non-edge")
    };
    let next_u = |v: usize| {
        (0..nu)
            .find(|&u| alive_u(u) && m.contains(&(u, v)))
            .expect("stuck vertex has an alive M edge")
    };

    let start = (0..nu).find(|&u| alive_u(u)).expect("some U vertex alive");
    let mut us = vec![start];
    let mut vs = Vec::new();
    loop {
        let u = *us.last().expect("nonempty");
        let v = next_v(u);
        vs.push(v);
        let u2 = next_u(v);
        if let Some(pos) = us.iter().position(|&x| x == u2) {
            // close the cycle on the repeated U vertex
            let mut cycle_us = us.split_off(pos);
            let mut cycle_vs = vs.split_off(pos);
            // Shorten while some V vertex repeats.
            loop {
                let mut dup = None;
                'outer: for i in 0..cycle_vs.len() {
                    for j in (i + 1)..cycle_vs.len() {
                        if cycle_vs[i] == cycle_vs[j] {
                            dup = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                match dup {
                    None => break,
                    Some((i, j)) => {
                        // v_i = v_j: the sub-cycle u_{i+1}..u_j with
                        // v_{i+1}..v_{j-1}, v_j keeps the alternation
                        // (the wrap arc u_{i+1} v_j = u_{i+1} v_i is in M).
                        cycle_us = cycle_us[i + 1..=j].to_vec();
                        cycle_vs = cycle_vs[i + 1..=j].to_vec();
                    }
                }
            }
            return AlternatingCycle {
                us: cycle_us,
                vs: cycle_vs,
            };
        }
        us.push(u2);
    }
}

/// Steps 1–3 end to end. `Infeasible` exactly when the Step-1 formula is
/// unsatisfiable; any returned cover passes [`verify_cover`].
pub fn solve_restricted_cover(p: &CoverProblem) -> CoverOutcome {
    let cls = p.graph.classify_edges();
    let formula = build_partition_formula(p, &cls);
    let assignment = match formula.instance.solve() {
        Some(a) => a,
        None => return CoverOutcome::Infeasible,
    };
    let ac_free = formula.decode(&assignment);
    let abc_free = abc_free_bipartition(p, &ac_free);
    debug_assert!(abc_free.red.is_disjoint(&p.forbidden));

    // G2 = E_b ∪ E_u, chain by construction.
    let g2_edges: BTreeSet<Edge> = abc_free
        .blue
        .union(&cls.uncommitted)
        .copied()
        .collect();

    // G1 = chain completion of E_r in G − F; guaranteed to exist.
    let g_minus_f = p.graph.without_edges(&p.forbidden);
    let g1_edges = match chain_completion(&g_minus_f, &abc_free.red)
        .expect("red edges avoid F, so they are edges of G − F")
    {
        CompletionResult::Chain(c) => c,
        CompletionResult::Cycle(cycle) => unreachable!(
            "an (A, B, C)-free bipartition admits a chain completion of E_r, got {cycle:?}"
        ),
    };
    let cover = ChainCover { g1_edges, g2_edges };
    debug_assert_eq!(verify_cover(p, &cover), Ok(Ok(())));
    CoverOutcome::Cover(cover)
}

/// Checks the definitional postconditions of a cover: union covers `E(G)`,
/// `g1` avoids `F`, and both sides are chain graphs. Outer error = edges
/// outside `G`; inner error = a violation report.
pub fn verify_cover(
    p: &CoverProblem,
    c: &ChainCover,
) -> Result<Result<(), CoverViolation>, Error> {
    for e in c.g1_edges.iter().chain(c.g2_edges.iter()) {
        if !p.graph.has_edge(e.0, e.1) {
            return Err(Error::EdgeNotInGraph { edge: *e });
        }
    }
    for &e in p.graph.edges() {
        if !c.g1_edges.contains(&e) && !c.g2_edges.contains(&e) {
            return Ok(Err(CoverViolation::UnionMissingEdge(e)));
        }
    }
    if let Some(&e) = c.g1_edges.intersection(&p.forbidden).next() {
        return Ok(Err(CoverViolation::ForbiddenInG1(e)));
    }
    if let ChainVerdict::Not2K2Free { witness } = p.graph.is_chain_graph(&c.g1_edges)? {
        return Ok(Err(CoverViolation::G1NotChain { witness }));
    }
    if let ChainVerdict::Not2K2Free { witness } = p.graph.is_chain_graph(&c.g2_edges)? {
        return Ok(Err(CoverViolation::G2NotChain { witness }));
    }
    Ok(Ok(()))
}
