//! 2CNF satisfiability via the implication graph and strongly connected
//! components, linear in the formula size.

use crate::Error;

/// A literal: variable index plus polarity (`true` = positive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit {
            var,
            positive: false,
        }
    }

    fn node(self) -> usize {
        2 * self.var + usize::from(!self.positive)
    }

    fn negated_node(self) -> usize {
        2 * self.var + usize::from(self.positive)
    }
}

/// A 2CNF formula. Unit clauses are stored as `(l, l)`.
#[derive(Debug, Clone, Default)]
pub struct TwoSatInstance {
    var_count: usize,
    clauses: Vec<(Lit, Lit)>,
}

/// A satisfying truth assignment, one value per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn value(&self, var: usize) -> bool {
        self.values[var]
    }

    pub fn satisfies(&self, inst: &TwoSatInstance) -> bool {
        inst.clauses.iter().all(|&(a, b)| {
            self.values[a.var] == a.positive || self.values[b.var] == b.positive
        })
    }
}

impl TwoSatInstance {
    pub fn new(var_count: usize) -> Self {
        Self {
            var_count,
            clauses: Vec::new(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    pub fn add_clause(&mut self, a: Lit, b: Lit) -> Result<(), Error> {
        for lit in [a, b] {
            if lit.var >= self.var_count {
                return Err(Error::VariableOutOfRange {
                    index: lit.var,
                    bound: self.var_count,
                });
            }
        }
        self.clauses.push((a, b));
        Ok(())
    }

    pub fn add_unit(&mut self, a: Lit) -> Result<(), Error> {
        self.add_clause(a, a)
    }

    /// Debug dump in DIMACS-CNF text form, 1-based signed literals.
    pub fn to_dimacs(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "p cnf {} {}", self.var_count, self.clauses.len());
        for &(a, b) in &self.clauses {
            let enc = |l: Lit| {
                let v = (l.var + 1) as i64;
                if l.positive {
                    v
                } else {
                    -v
                }
            };
            let _ = writeln!(out, "{} {} 0", enc(a), enc(b));
        }
        out
    }

    /// Solves the instance. Returns a satisfying assignment, or `None` when
    /// the formula is unsatisfiable.
    ///
    /// Implication graph with nodes `l`, `¬l` per variable and arcs
    /// `¬a → b`, `¬b → a` per clause; Tarjan SCC gives components in reverse
    /// topological order, and a variable is true iff its positive node's
    /// component comes after (is earlier in topological order than) the
    /// negative node's. All iteration orders are fixed, so the result is
    /// deterministic for a given instance.
    pub fn solve(&self) -> Option<Assignment> {
        let n = 2 * self.var_count;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.clauses {
            adj[a.negated_node()].push(b.node());
            adj[b.negated_node()].push(a.node());
        }
        let comp = tarjan_scc(&adj);
        let mut values = Vec::with_capacity(self.var_count);
        for var in 0..self.var_count {
            let pos = comp[2 * var];
            let neg = comp[2 * var + 1];
            if pos == neg {
                return None;
            }
            // Tarjan numbers components in reverse topological order, so a
            // smaller component id means "later" in the implication order.
            values.push(pos < neg);
        }
        let assignment = Assignment { values };
        debug_assert!(assignment.satisfies(self));
        Some(assignment)
    }
}

/// Iterative Tarjan; returns the component index of each node. Components
/// are numbered in reverse topological order of the condensation.
fn tarjan_scc(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for start in 0..n {
        if index[start] != UNSET {
            continue;
        }
        call.push((start, 0));
        while let Some(&(v, ei)) = call.last() {
            if ei == 0 {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if ei < adj[v].len() {
                call.last_mut().expect("nonempty").1 += 1;
                let w = adj[v][ei];
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }
    comp
}
