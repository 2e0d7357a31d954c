//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Tolerances are pinned in
//! the assertions; any failure fails the corresponding test.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trichain::audit::random_cover_instance;
use trichain::bigraph::BipartiteGraph;
use trichain::chaincover::{
    self, abc_free_bipartition, ac_free_bipartition, chain_completion, find_configurations,
    solve_restricted_cover, CompletionResult, ConfigKind, CoverOutcome, CoverProblem,
};
use trichain::genio;
use trichain::oracles;
use trichain::orders::{
    recognize_linear_interval_order, transitive_orientation, OrientationResult,
};
use trichain::recognizer::{recognize_simple_triangle, RecognitionResult};
use trichain::twosat::{Lit, TwoSatInstance};
use trichain::Edge;

fn all_3x3_graphs() -> impl Iterator<Item = BipartiteGraph> {
    (0u32..512).map(|mask| {
        let edges = (0..9)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i / 3, i % 3));
        BipartiteGraph::from_edge_list(3, 3, edges).unwrap()
    })
}

/// Criterion 1: solver feasibility equals the exhaustive oracle on (a) every
/// 3×3 bipartite graph with every F ⊆ E and (b) ≥ 1000 seeded random
/// instances with both sides ≤ 5. Zero disagreements tolerated. Criterion 2
/// (certificate validity) is enforced along the way: every cover returned
/// here must verify.
#[test]
fn criterion_1_oracle_equivalence() {
    let mut checked = 0usize;
    let run_one = |p: &CoverProblem| {
        let expected = oracles::oracle_cover_exists(p).unwrap();
        match solve_restricted_cover(p) {
            CoverOutcome::Cover(c) => {
                assert!(expected, "solver found a cover the oracle says cannot exist");
                assert_eq!(chaincover::verify_cover(p, &c), Ok(Ok(())));
            }
            CoverOutcome::Infeasible => {
                assert!(!expected, "solver missed a cover the oracle found");
            }
        }
    };

    let mut exhaustive = 0usize;
    for g in all_3x3_graphs() {
        let edges = g.edges().to_vec();
        for fmask in 0u32..(1 << edges.len()) {
            let f: BTreeSet<Edge> = edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| fmask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            run_one(&CoverProblem::new(g.clone(), f).unwrap());
            exhaustive += 1;
        }
    }
    assert_eq!(exhaustive, 19683);
    checked += exhaustive;

    let mut rng = ChaCha8Rng::seed_from_u64(0xacce01);
    for _ in 0..1000 {
        run_one(&random_cover_instance(&mut rng, 5));
        checked += 1;
    }
    println!(
        "criterion 1: pass — {exhaustive} exhaustive 3x3 instances and 1000 random ≤5+5 instances, 0 disagreements ({checked} total)"
    );
}

/// Criterion 2: every Yes verdict across the recognizers carries a
/// certificate that verifies independently; zero tolerance. (Cover
/// certificates are additionally checked in criterion 1.)
#[test]
fn criterion_2_certificate_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce02);
    let mut yes = 0usize;
    let mut total = 0usize;
    for _ in 0..300 {
        let n = rng.gen_range(1..=7);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = trichain::orders::SimpleGraph::new(n, edges).unwrap();
        total += 1;
        if let RecognitionResult::Yes { orientation, cover } = recognize_simple_triangle(&g) {
            yes += 1;
            // the orientation orients exactly the complement's edges
            let complement = g.complement();
            let mut undirected: BTreeSet<(usize, usize)> = BTreeSet::new();
            for &(a, b) in orientation.relation() {
                assert!(!orientation.precedes(b, a));
                undirected.insert(if a < b { (a, b) } else { (b, a) });
            }
            let expected: BTreeSet<(usize, usize)> = complement.edges().into_iter().collect();
            assert_eq!(undirected, expected);
            // the cover verifies against the derived instance
            let problem = trichain::orders::lio_cover_problem(&orientation);
            assert_eq!(chaincover::verify_cover(&problem, &cover), Ok(Ok(())));
            assert!(cover
                .g1_edges
                .is_disjoint(&trichain::orders::e0_edges(n)));
        }
    }
    assert!(yes > 0, "sample produced no Yes instances");
    println!(
        "criterion 2: pass — {yes}/{total} Yes verdicts, 100% of certificates verified"
    );
}

/// Criterion 3: the intermediate invariants of the pipeline hold on ≥ 500
/// random instances per check — Step 1 output is (A, C)-free, Step 2 output
/// is (A, B, C)-free with E_b ∪ E_u a chain, and chain completion succeeds
/// exactly when no alternating cycle exists.
#[test]
fn criterion_3_pipeline_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce03);
    let mut step_checks = 0usize;
    let mut attempts = 0usize;
    while step_checks < 500 {
        attempts += 1;
        assert!(attempts < 20_000, "SAT instances too rare in the sample");
        let p = random_cover_instance(&mut rng, 5);
        let b = match ac_free_bipartition(&p) {
            Some(b) => b,
            None => continue,
        };
        assert!(
            find_configurations(&p, &b, &ConfigKind::AC).is_empty(),
            "Step 1 output has an A or C configuration"
        );
        let b2 = abc_free_bipartition(&p, &b);
        assert!(
            find_configurations(&p, &b2, &ConfigKind::ALL).is_empty(),
            "Step 2 output has a forbidden configuration"
        );
        // blue ∪ uncommitted is a chain
        let cls = p.graph().classify_edges();
        let g2: BTreeSet<Edge> = b2.blue.union(&cls.uncommitted).copied().collect();
        assert!(
            p.graph().is_chain_graph(&g2).unwrap().is_chain(),
            "E_b ∪ E_u is not a chain"
        );
        step_checks += 1;
    }

    let mut completion_checks = 0usize;
    for _ in 0..500 {
        let u = rng.gen_range(1..=6);
        let v = rng.gen_range(1..=6);
        let h = genio::gen_random_bipartite(u, v, rng.gen_range(0.2..0.8), rng.gen()).unwrap();
        let m = genio::gen_random_f(&h, 0.5, rng.gen()).unwrap();
        let oracle_cycle = oracles::oracle_alternating_cycle(&h, &m).unwrap();
        match chain_completion(&h, &m).unwrap() {
            CompletionResult::Chain(c) => {
                assert!(oracle_cycle.is_none(), "completion succeeded despite a cycle");
                assert!(c.is_superset(&m));
                assert!(oracles::oracle_is_chain(&c));
            }
            CompletionResult::Cycle(cycle) => {
                assert!(oracle_cycle.is_some(), "completion failed without a cycle");
                assert!(cycle.is_valid(&h, &m));
            }
        }
        completion_checks += 1;
    }
    println!(
        "criterion 3: pass — {step_checks} bipartition checks and {completion_checks} completion checks, 0 violations"
    );
}

/// Criterion 4: generated positive families are always accepted — ≥ 500
/// triangle-representation graphs (n ≤ 40), ≥ 200 permutation graphs and
/// ≥ 200 interval graphs (n ≤ 30).
#[test]
fn criterion_4_positive_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce04);
    for i in 0..500u64 {
        let n = rng.gen_range(1..=40);
        let r = genio::gen_triangle_representation(n, i);
        let g = genio::intersection_graph(&r);
        assert!(
            recognize_simple_triangle(&g).is_yes(),
            "triangle-representation graph rejected (n = {n}, seed = {i})"
        );
    }
    for i in 0..200u64 {
        let n = rng.gen_range(1..=30);
        let g = genio::gen_permutation_graph(n, i);
        assert!(
            recognize_simple_triangle(&g).is_yes(),
            "permutation graph rejected (n = {n}, seed = {i})"
        );
    }
    for i in 0..200u64 {
        let n = rng.gen_range(1..=30);
        let g = genio::gen_interval_graph(n, i);
        assert!(
            recognize_simple_triangle(&g).is_yes(),
            "interval graph rejected (n = {n}, seed = {i})"
        );
    }
    println!("criterion 4: pass — 500 triangle + 200 permutation + 200 interval graphs all Yes");
}

/// Criterion 5: the linear-interval verdict is identical across all
/// transitive orientations of the complement, over ≥ 200 sampled graphs on
/// ≤ 6 vertices whose complement is a comparability graph.
#[test]
fn criterion_5_comparability_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce05);
    let mut sampled = 0usize;
    let mut attempts = 0usize;
    let mut orientations_seen = 0usize;
    while sampled < 200 {
        attempts += 1;
        assert!(attempts < 10_000, "comparability complements too rare");
        let n = rng.gen_range(1..=6);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = trichain::orders::SimpleGraph::new(n, edges).unwrap();
        let complement = g.complement();
        if !matches!(
            transitive_orientation(&complement),
            OrientationResult::Oriented(_)
        ) {
            continue;
        }
        let all = oracles::oracle_all_transitive_orientations(&complement).unwrap();
        assert!(!all.is_empty());
        let verdicts: BTreeSet<bool> = all
            .iter()
            .map(|p| recognize_linear_interval_order(p).is_yes())
            .collect();
        assert_eq!(
            verdicts.len(),
            1,
            "verdict differs across transitive orientations"
        );
        let expected = verdicts.into_iter().next().unwrap();
        assert_eq!(
            recognize_simple_triangle(&g).is_yes(),
            expected,
            "pipeline verdict differs from the orientation-wise verdict"
        );
        orientations_seen += all.len();
        sampled += 1;
    }
    println!(
        "criterion 5: pass — {sampled} graphs, {orientations_seen} orientations, identical verdicts throughout"
    );
}

/// Criterion 6: 2SAT verdicts match exhaustive enumeration on ≥ 1000 random
/// instances with ≤ 16 variables, and every returned assignment satisfies
/// all clauses.
#[test]
fn criterion_6_twosat_correctness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce06);
    let mut sat = 0usize;
    for _ in 0..1000 {
        let vars = rng.gen_range(1..=16);
        let clauses = rng.gen_range(0..=48);
        let mut inst = TwoSatInstance::new(vars);
        for _ in 0..clauses {
            let mut lit = || {
                let var = rng.gen_range(0..vars);
                if rng.gen_bool(0.5) {
                    Lit::pos(var)
                } else {
                    Lit::neg(var)
                }
            };
            let (a, b) = (lit(), lit());
            inst.add_clause(a, b).unwrap();
        }
        let expected = oracles::oracle_twosat_solve(&inst).unwrap().is_some();
        match inst.solve() {
            Some(a) => {
                assert!(expected, "solver satisfied an unsatisfiable instance");
                assert!(a.satisfies(&inst), "returned assignment violates a clause");
                sat += 1;
            }
            None => assert!(!expected, "solver missed a satisfying assignment"),
        }
    }
    println!("criterion 6: pass — 1000 instances ({sat} SAT), verdicts match exhaustive search");
}

/// Criterion 7: regression tripwire on asymptotics — on dense random
/// instances with the side size doubling 8 → 16 → 32 → 64, wall time per
/// doubling grows at most ~16× (a 5 ms floor absorbs timer noise).
#[test]
fn criterion_7_complexity_smoke() {
    let time_for = |n: usize| -> Duration {
        let mut total = Duration::ZERO;
        for seed in 0..3u64 {
            let g = genio::gen_random_bipartite(n, n, 0.5, 0xacce07 ^ seed).unwrap();
            let f = genio::gen_random_f(&g, 0.2, seed).unwrap();
            let p = CoverProblem::new(g, f).unwrap();
            let start = Instant::now();
            let _ = solve_restricted_cover(&p);
            total += start.elapsed();
        }
        total
    };
    let floor = Duration::from_millis(5);
    let mut previous: Option<Duration> = None;
    let mut report = Vec::new();
    for n in [8usize, 16, 32, 64] {
        let t = time_for(n);
        report.push(format!("n={n}: {:?}", t));
        if let Some(prev) = previous {
            let ratio = t.as_secs_f64() / prev.max(floor).as_secs_f64();
            assert!(
                ratio <= 16.0,
                "time grew {ratio:.1}× from one doubling (report: {report:?})"
            );
        }
        previous = Some(t);
    }
    println!("criterion 7: pass — {}", report.join(", "));
}
