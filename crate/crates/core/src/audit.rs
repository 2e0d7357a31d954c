//! Randomized cross-checks of the pipeline against the brute-force oracles.
//! Used by the `audit` CLI subcommand and by the acceptance tests.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chaincover::{
    self, chain_completion, CompletionResult, CoverOutcome, CoverProblem,
};
use crate::genio;
use crate::oracles;
use crate::twosat::{Lit, TwoSatInstance};

/// Largest instance the cover oracle will accept.
pub const ORACLE_EDGE_CAP: usize = 14;

#[derive(Debug, Clone, Copy)]
pub struct AuditConfig {
    /// Per-side vertex cap for generated bipartite instances.
    pub max_size: usize,
    /// Trials per suite.
    pub trials: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            max_size: 5,
            trials: 200,
            seed: 0,
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct AuditSummary {
    pub cover_trials: usize,
    pub cover_disagreements: usize,
    pub completion_trials: usize,
    pub completion_disagreements: usize,
    pub twosat_trials: usize,
    pub twosat_disagreements: usize,
}

impl AuditSummary {
    pub fn disagreements(&self) -> usize {
        self.cover_disagreements + self.completion_disagreements + self.twosat_disagreements
    }
}

impl std::fmt::Display for AuditSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "cover feasibility vs oracle: {} trials, {} disagreements",
            self.cover_trials, self.cover_disagreements
        )?;
        writeln!(
            f,
            "chain completion vs alternating-cycle oracle: {} trials, {} disagreements",
            self.completion_trials, self.completion_disagreements
        )?;
        writeln!(
            f,
            "2SAT vs exhaustive enumeration: {} trials, {} disagreements",
            self.twosat_trials, self.twosat_disagreements
        )?;
        write!(f, "total disagreements: {}", self.disagreements())
    }
}

/// A random cover instance small enough for the oracle, deterministic in
/// `seed`.
pub fn random_cover_instance(rng: &mut ChaCha8Rng, max_size: usize) -> CoverProblem {
    loop {
        let u = rng.gen_range(1..=max_size);
        let v = rng.gen_range(1..=max_size);
        let density = rng.gen_range(0.15..0.6);
        let g = genio::gen_random_bipartite(u, v, density, rng.gen()).expect("valid density");
        if g.edge_count() > ORACLE_EDGE_CAP {
            continue;
        }
        let f = genio::gen_random_f(&g, 0.3, rng.gen()).expect("valid density");
        return CoverProblem::new(g, f).expect("F drawn from the edges");
    }
}

/// Runs every suite with the production solver.
pub fn run_audit(cfg: AuditConfig) -> AuditSummary {
    run_audit_with_solver(cfg, &chaincover::solve_restricted_cover)
}

/// Same, with an injectable cover solver so the harness itself can be
/// sanity-checked against a deliberately broken pipeline.
pub fn run_audit_with_solver(
    cfg: AuditConfig,
    solver: &dyn Fn(&CoverProblem) -> CoverOutcome,
) -> AuditSummary {
    let mut summary = AuditSummary::default();

    // Suite 1: restricted-cover feasibility and certificate validity.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let p = random_cover_instance(&mut rng, cfg.max_size);
        let expected = oracles::oracle_cover_exists(&p).expect("instance under the guard");
        summary.cover_trials += 1;
        match solver(&p) {
            CoverOutcome::Cover(c) => {
                let verified = chaincover::verify_cover(&p, &c) == Ok(Ok(()));
                if !expected || !verified {
                    summary.cover_disagreements += 1;
                }
            }
            CoverOutcome::Infeasible => {
                if expected {
                    summary.cover_disagreements += 1;
                }
            }
        }
    }

    // Suite 2: chain completion vs the alternating-cycle oracle.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    for _ in 0..cfg.trials {
        let size = cfg.max_size.min(6);
        let u = rng.gen_range(1..=size);
        let v = rng.gen_range(1..=size);
        let h = genio::gen_random_bipartite(u, v, rng.gen_range(0.2..0.8), rng.gen())
            .expect("valid density");
        let m: BTreeSet<_> = genio::gen_random_f(&h, 0.5, rng.gen()).expect("valid density");
        summary.completion_trials += 1;
        let oracle_cycle = oracles::oracle_alternating_cycle(&h, &m).expect("under guard");
        match chain_completion(&h, &m).expect("M drawn from H") {
            CompletionResult::Chain(c) => {
                let ok = oracle_cycle.is_none()
                    && c.is_superset(&m)
                    && c.iter().all(|&(a, b)| h.has_edge(a, b))
                    && oracles::oracle_is_chain(&c);
                if !ok {
                    summary.completion_disagreements += 1;
                }
            }
            CompletionResult::Cycle(cycle) => {
                if oracle_cycle.is_none() || !cycle.is_valid(&h, &m) {
                    summary.completion_disagreements += 1;
                }
            }
        }
    }

    // Suite 3: 2SAT verdicts vs exhaustive enumeration.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    for _ in 0..cfg.trials {
        let vars = rng.gen_range(1..=16);
        let clauses = rng.gen_range(0..=40);
        let mut inst = TwoSatInstance::new(vars);
        for _ in 0..clauses {
            let lit = |rng: &mut ChaCha8Rng| {
                let var = rng.gen_range(0..vars);
                if rng.gen_bool(0.5) {
                    Lit::pos(var)
                } else {
                    Lit::neg(var)
                }
            };
            let a = lit(&mut rng);
            let b = lit(&mut rng);
            inst.add_clause(a, b).expect("vars in range");
        }
        summary.twosat_trials += 1;
        let expected = oracles::oracle_twosat_solve(&inst)
            .expect("under guard")
            .is_some();
        match inst.solve() {
            Some(a) => {
                if !expected || !a.satisfies(&inst) {
                    summary.twosat_disagreements += 1;
                }
            }
            None => {
                if expected {
                    summary.twosat_disagreements += 1;
                }
            }
        }
    }

    summary
}
