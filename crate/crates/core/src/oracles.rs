//! Deliberately naive brute-force references. Tests and the CLI `audit`
//! command compare the pipeline against these; nothing here shares code
//! with the algorithms under test.
//!
//! Size guards are hard errors so a test can never silently run an
//! unsound "oracle" on an instance it cannot exhaust.

use std::collections::BTreeSet;

use crate::bigraph::BipartiteGraph;
use crate::chaincover::{AlternatingCycle, CoverProblem};
use crate::orders::{PartialOrder, SimpleGraph};
use crate::twosat::{Assignment, TwoSatInstance};
use crate::{Edge, Error};

const COVER_EDGE_LIMIT: usize = 14;
const CYCLE_VERTEX_LIMIT: usize = 16;
const ORIENTATION_EDGE_LIMIT: usize = 20;
const TWOSAT_VAR_LIMIT: usize = 16;

/// Pairwise 2K2 scan: is `edge_set` (as a spanning subgraph on its own
/// vertex universe) 2K2-free?
pub fn oracle_is_chain(edge_set: &BTreeSet<Edge>) -> bool {
    let edges: Vec<Edge> = edge_set.iter().copied().collect();
    for (i, &(u1, v1)) in edges.iter().enumerate() {
        for &(u2, v2) in edges.iter().skip(i + 1) {
            if u1 != u2
                && v1 != v2
                && !edge_set.contains(&(u1, v2))
                && !edge_set.contains(&(u2, v1))
            {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search for a restricted 2-chain cover: every non-forbidden
/// edge is tried in `G1` only, `G2` only, or both; forbidden edges go to
/// `G2`. Prunes on 2K2s of `G` inside one side (those can never be fixed)
/// and checks the subset chain condition at the leaves.
pub fn oracle_cover_exists(p: &CoverProblem) -> Result<bool, Error> {
    let m = p.graph().edge_count();
    if m > COVER_EDGE_LIMIT {
        return Err(Error::OracleGuard {
            what: "edge count",
            actual: m,
            limit: COVER_EDGE_LIMIT,
        });
    }
    let edges: Vec<Edge> = p.graph().edges().to_vec();
    let mut g1: BTreeSet<Edge> = BTreeSet::new();
    let mut g2: BTreeSet<Edge> = BTreeSet::new();
    Ok(assign(p, &edges, 0, &mut g1, &mut g2))
}

fn assign(
    p: &CoverProblem,
    edges: &[Edge],
    i: usize,
    g1: &mut BTreeSet<Edge>,
    g2: &mut BTreeSet<Edge>,
) -> bool {
    if i == edges.len() {
        return oracle_is_chain(g1) && oracle_is_chain(g2);
    }
    let e = edges[i];
    let conflicts_within = |side: &BTreeSet<Edge>| {
        side.iter()
            .any(|&e2| p.graph().in_conflict(e, e2).expect("graph edges"))
    };
    let choices: &[(bool, bool)] = if p.forbidden().contains(&e) {
        &[(false, true)]
    } else {
        &[(true, false), (false, true), (true, true)]
    };
    for &(in_g1, in_g2) in choices {
        if in_g1 && conflicts_within(g1) {
            continue;
        }
        if in_g2 && conflicts_within(g2) {
            continue;
        }
        if in_g1 {
            g1.insert(e);
        }
        if in_g2 {
            g2.insert(e);
        }
        let found = assign(p, edges, i + 1, g1, g2);
        if in_g1 {
            g1.remove(&e);
        }
        if in_g2 {
            g2.remove(&e);
        }
        if found {
            return true;
        }
    }
    false
}

/// DFS over the alternation digraph (U→V along non-edges of `H`, V→U along
/// `M`); any directed cycle yields an alternating cycle with distinct
/// vertices after shortening.
pub fn oracle_alternating_cycle(
    h: &BipartiteGraph,
    m: &BTreeSet<Edge>,
) -> Result<Option<AlternatingCycle>, Error> {
    let n = h.u_count() + h.v_count();
    if h.u_count().max(h.v_count()) > CYCLE_VERTEX_LIMIT {
        return Err(Error::OracleGuard {
            what: "side size",
            actual: h.u_count().max(h.v_count()),
            limit: CYCLE_VERTEX_LIMIT,
        });
    }
    for &e in m {
        if !h.has_edge(e.0, e.1) {
            return Err(Error::EdgeNotInGraph { edge: e });
        }
    }
    let nu = h.u_count();
    let succ = |x: usize| -> Vec<usize> {
        if x < nu {
            (0..h.v_count())
                .filter(|&v| !h.has_edge(x, v))
                .map(|v| nu + v)
                .collect()
        } else {
            (0..nu).filter(|&u| m.contains(&(u, x - nu))).collect()
        }
    };
    // Iterative DFS with an explicit path; 0 = white, 1 = on path, 2 = done.
    let mut color = vec![0u8; n];
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut path: Vec<usize> = vec![start];
        let mut iters: Vec<usize> = vec![0];
        color[start] = 1;
        while let Some(&x) = path.last() {
            let next = {
                let it = iters.last_mut().expect("parallel stacks");
                let children = succ(x);
                if *it < children.len() {
                    let c = children[*it];
                    *it += 1;
                    Some(c)
                } else {
                    None
                }
            };
            match next {
                Some(c) if color[c] == 1 => {
                    let pos = path.iter().position(|&y| y == c).expect("on path");
                    return Ok(Some(cycle_from_path(&path[pos..], nu)));
                }
                Some(c) if color[c] == 0 => {
                    color[c] = 1;
                    path.push(c);
                    iters.push(0);
                }
                Some(_) => {}
                None => {
                    color[x] = 2;
                    path.pop();
                    iters.pop();
                }
            }
        }
    }
    Ok(None)
}

fn cycle_from_path(cycle: &[usize], nu: usize) -> AlternatingCycle {
    // The cycle alternates sides; rotate so it starts at a U vertex.
    let offset = if cycle[0] < nu { 0 } else { 1 };
    let mut us = Vec::new();
    let mut vs = Vec::new();
    for (k, &x) in cycle.iter().enumerate() {
        if (k + offset) % 2 == 0 {
            us.push(x);
        } else {
            vs.push(x - nu);
        }
    }
    if offset == 1 {
        // Walk order is v_0, u_0, v_1, u_1, ...: arc v_i → u_i is an M edge
        // and u_i → v_{i+1} a non-edge, so pairing u_i with v_{i+1} restores
        // the convention u_i v_i ∈ Ê, u_{i+1} v_i ∈ M.
        vs.rotate_left(1);
    }
    AlternatingCycle { us, vs }
}

/// All orientations of the edges whose relation is transitive, enumerated by
/// brute force over the `2^m` orientations.
pub fn oracle_all_transitive_orientations(g: &SimpleGraph) -> Result<Vec<PartialOrder>, Error> {
    let edges = g.edges();
    let m = edges.len();
    if m > ORIENTATION_EDGE_LIMIT {
        return Err(Error::OracleGuard {
            what: "edge count",
            actual: m,
            limit: ORIENTATION_EDGE_LIMIT,
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let relation: BTreeSet<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        if is_transitive(&relation) {
            out.push(PartialOrder::new(g.n(), relation).expect("transitive and irreflexive"));
        }
    }
    Ok(out)
}

fn is_transitive(relation: &BTreeSet<(usize, usize)>) -> bool {
    relation.iter().all(|&(a, b)| {
        relation
            .range((b, 0)..(b + 1, 0))
            .all(|&(_, c)| relation.contains(&(a, c)))
    })
}

/// Exhaustive 2SAT: tries all `2^n` assignments.
pub fn oracle_twosat_solve(inst: &TwoSatInstance) -> Result<Option<Assignment>, Error> {
    let n = inst.var_count();
    if n > TWOSAT_VAR_LIMIT {
        return Err(Error::OracleGuard {
            what: "variable count",
            actual: n,
            limit: TWOSAT_VAR_LIMIT,
        });
    }
    for mask in 0u32..(1u32 << n) {
        let a = Assignment {
            values: (0..n).map(|i| mask >> i & 1 == 1).collect(),
        };
        if a.satisfies(inst) {
            return Ok(Some(a));
        }
    }
    Ok(None)
}
