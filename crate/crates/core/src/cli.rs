//! Command-line interface. Exit codes: 0 = yes / success, 1 = no verdict
//! (or a failed verification / audit), 2 = usage or input error.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::audit::{run_audit, AuditConfig};
use crate::cert::{Certificate, REASON_UNSAT};
use crate::chaincover::{self, ChainCover, CoverOutcome, CoverProblem};
use crate::genio;
use crate::instance::{self, InstanceFile};
use crate::orders::{self, recognize_linear_interval_order, LioResult, PartialOrder};
use crate::recognizer::recognize_simple_triangle;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(name = "trichain", version, about = "simple-triangle graph and linear-interval order recognition")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// simple-triangle graph recognition (graph instances)
    Pst,
    /// linear-interval order recognition (order instances)
    Lio,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Triangle,
    TriangleOrder,
    Permutation,
    Interval,
    Bipartite,
    Cover,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is simple-triangle or an order is
    /// linear-interval; prints a JSON certificate.
    Recognize {
        input: PathBuf,
        /// Expected instance kind; inferred from the header when omitted.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a restricted 2-chain cover instance (bigraph with f lines).
    Cover {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate against the instance it claims to answer.
    Verify {
        instance: PathBuf,
        certificate: PathBuf,
    },
    /// Generate a seeded instance on stdout.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(short, long)]
        n: usize,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
        /// Edge density for bipartite/cover instances.
        #[arg(short, long, default_value_t = 0.3)]
        density: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the pipeline against brute-force references.
    Audit {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
}

/// Parses `args` (excluding argv[0] handling is clap's) and runs; returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success status
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command) -> Result<i32, String> {
    match command {
        Command::Recognize { input, kind, output } => cmd_recognize(&input, kind, output),
        Command::Cover { input, output } => cmd_cover(&input, output),
        Command::Verify {
            instance,
            certificate,
        } => cmd_verify(&instance, &certificate),
        Command::Gen {
            family,
            n,
            seed,
            density,
            output,
        } => cmd_gen(family, n, seed, density, output),
        Command::Audit {
            trials,
            seed,
            max_size,
        } => Ok(cmd_audit(trials, seed, max_size)),
    }
}

fn read_instance(path: &PathBuf) -> Result<InstanceFile, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    instance::parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str, output: Option<PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn cmd_recognize(
    input: &PathBuf,
    kind: Option<Kind>,
    output: Option<PathBuf>,
) -> Result<i32, String> {
    let parsed = read_instance(input)?;
    let cert = match (&parsed, kind) {
        (InstanceFile::Graph(g), None | Some(Kind::Pst)) => {
            Certificate::from_recognition(&recognize_simple_triangle(g))
        }
        (InstanceFile::Order(p), None | Some(Kind::Lio)) => {
            match recognize_linear_interval_order(p) {
                LioResult::Yes(cover) => Certificate::yes_cover(&cover),
                LioResult::No => Certificate::no(crate::cert::REASON_NO_COVER),
            }
        }
        (other, Some(_)) => {
            return Err(format!(
                "instance kind {:?} does not match the requested --kind",
                other.kind_name()
            ))
        }
        (InstanceFile::Cover(_), None) => {
            return Err("bigraph instances are solved with the cover subcommand".into())
        }
    };
    let code = if cert.is_yes() { EXIT_YES } else { EXIT_NO };
    emit(&cert.to_json(), output)?;
    Ok(code)
}

fn cmd_cover(input: &PathBuf, output: Option<PathBuf>) -> Result<i32, String> {
    let parsed = read_instance(input)?;
    let p = match parsed {
        InstanceFile::Cover(p) => p,
        other => {
            return Err(format!(
                "cover expects a bigraph instance, got {:?}",
                other.kind_name()
            ))
        }
    };
    let cert = match chaincover::solve_restricted_cover(&p) {
        CoverOutcome::Cover(c) => Certificate::yes_cover(&c),
        CoverOutcome::Infeasible => Certificate::no(REASON_UNSAT),
    };
    let code = if cert.is_yes() { EXIT_YES } else { EXIT_NO };
    emit(&cert.to_json(), output)?;
    Ok(code)
}

fn cmd_verify(instance_path: &PathBuf, cert_path: &PathBuf) -> Result<i32, String> {
    let parsed = read_instance(instance_path)?;
    let text = fs::read_to_string(cert_path).map_err(|e| format!("{}: {e}", cert_path.display()))?;
    let cert =
        Certificate::from_json(&text).map_err(|e| format!("{}: {e}", cert_path.display()))?;
    if !cert.is_yes() {
        // A "no" verdict carries no independently checkable witness.
        return Err("cannot verify a \"no\" certificate".into());
    }
    match check_yes_certificate(&parsed, &cert) {
        Ok(()) => {
            println!("valid");
            Ok(EXIT_YES)
        }
        Err(reason) => {
            println!("invalid: {reason}");
            Ok(EXIT_NO)
        }
    }
}

fn cover_of(cert: &Certificate) -> Result<ChainCover, String> {
    let (g1_edges, g2_edges) = cert
        .cover_edges()
        .ok_or_else(|| "certificate has no cover".to_string())?;
    Ok(ChainCover { g1_edges, g2_edges })
}

fn check_cover(p: &CoverProblem, cert: &Certificate) -> Result<(), String> {
    let cover = cover_of(cert)?;
    match chaincover::verify_cover(p, &cover) {
        Ok(Ok(())) => Ok(()),
        Ok(Err(violation)) => Err(violation.to_string()),
        Err(e) => Err(e.to_string()),
    }
}

fn check_yes_certificate(parsed: &InstanceFile, cert: &Certificate) -> Result<(), String> {
    match parsed {
        InstanceFile::Cover(p) => check_cover(p, cert),
        InstanceFile::Order(p) => check_cover(&orders::lio_cover_problem(p), cert),
        InstanceFile::Graph(g) => {
            let pairs = cert
                .orientation_pairs()
                .ok_or_else(|| "certificate has no orientation".to_string())?;
            let orientation =
                PartialOrder::new(g.n(), pairs).map_err(|e| format!("orientation: {e}"))?;
            // must orient exactly the complement's edges, one way each
            let complement = g.complement();
            let mut undirected: BTreeSet<(usize, usize)> = BTreeSet::new();
            for &(a, b) in orientation.relation() {
                if orientation.precedes(b, a) {
                    return Err(format!("orientation contains both ({a},{b}) and ({b},{a})"));
                }
                undirected.insert(if a < b { (a, b) } else { (b, a) });
            }
            let expected: BTreeSet<(usize, usize)> = complement.edges().into_iter().collect();
            if undirected != expected {
                return Err("orientation does not cover exactly the complement edges".into());
            }
            check_cover(&orders::lio_cover_problem(&orientation), cert)
        }
    }
}

fn cmd_gen(
    family: Family,
    n: usize,
    seed: u64,
    density: f64,
    output: Option<PathBuf>,
) -> Result<i32, String> {
    let text = match family {
        Family::Triangle => {
            let r = genio::gen_triangle_representation(n, seed);
            instance::write_graph(&genio::intersection_graph(&r))
        }
        Family::TriangleOrder => {
            let r = genio::gen_triangle_representation(n, seed);
            instance::write_order(&genio::order_of_representation(&r))
        }
        Family::Permutation => instance::write_graph(&genio::gen_permutation_graph(n, seed)),
        Family::Interval => instance::write_graph(&genio::gen_interval_graph(n, seed)),
        Family::Bipartite => {
            let g = genio::gen_random_bipartite(n, n, density, seed)
                .map_err(|e| e.to_string())?;
            let p = CoverProblem::new(g, BTreeSet::new()).expect("empty F");
            instance::write_cover_problem(&p)
        }
        Family::Cover => {
            let g = genio::gen_random_bipartite(n, n, density, seed)
                .map_err(|e| e.to_string())?;
            let f = genio::gen_random_f(&g, 0.3, seed.wrapping_add(1))
                .map_err(|e| e.to_string())?;
            let p = CoverProblem::new(g, f).expect("F drawn from the edges");
            instance::write_cover_problem(&p)
        }
    };
    emit(&text, output)?;
    Ok(EXIT_YES)
}

fn cmd_audit(trials: usize, seed: u64, max_size: usize) -> i32 {
    let summary = run_audit(AuditConfig {
        trials,
        seed,
        max_size,
    });
    println!("{summary}");
    if summary.disagreements() == 0 {
        EXIT_YES
    } else {
        EXIT_NO
    }
}
