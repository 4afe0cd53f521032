//! `tfvs`: command-line front end.
//!
//! Exit codes: 0 YES (or success), 1 NO (or a failed self-check),
//! 2 input error, 3 internal invariant violation.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use tfvs_core::approx::{greedy_3_approx, kernelize, Verdict};
use tfvs_core::family::enumerate_set_pairs;
use tfvs_core::generate::generate;
use tfvs_core::io;
use tfvs_core::oracle;
use tfvs_core::partition::balanced_partition;
use tfvs_core::solver::{tfvs_solve, tfvs_solve_observed, Answer, PairMetrics, SolveOptions};
use tfvs_core::{Error, Tournament};

const PHI: f64 = 1.618;

#[derive(Parser)]
#[command(name = "tfvs", version, about = "Feedback vertex set in tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Pipeline {
    /// Worker threads for the pair stream.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Run the full pipeline even for k <= 4.
    #[arg(long)]
    no_bypass: bool,
}

impl Pipeline {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            bypass: !self.no_bypass,
            threads: self.threads.max(1),
            ..SolveOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a feedback vertex set of size at most k exists.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Print the witness on a second line when the answer is YES.
        #[arg(long)]
        witness: bool,
        /// Print the full report as JSON instead.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        pipeline: Pipeline,
    },
    /// Brute-force ground truth.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: OracleMode,
        /// Budget, required by `--mode branch`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Greedy triangle-deleting approximation.
    Approx {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Apply the kernel and print the reduced tournament.
    Kernel {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Write the reduced tournament here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Balanced edge partition of an undirected multigraph, with self-check.
    Partition {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the (M, P) set pairs.
    EnumPairs {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Write a seeded random tournament.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the pipeline with counters and write one CSV row per pair.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        csv: PathBuf,
        #[command(flatten)]
        pipeline: Pipeline,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Fvs,
    Fvc,
    Branch,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

fn ids(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn read_tournament(path: &Path) -> Result<Tournament, Failure> {
    let text =
        io::read_file(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::parse_tournament(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn answer_code(answer: Answer) -> u8 {
    match answer {
        Answer::Yes => 0,
        Answer::No => 1,
    }
}

/// Returns the exit code and the text for stdout.
fn run(command: Command) -> Result<(u8, String), Failure> {
    match command {
        Command::Solve {
            input,
            k,
            witness,
            json,
            pipeline,
        } => {
            let t = read_tournament(&input)?;
            let report = tfvs_solve(&t, k, &pipeline.options())?;
            let text = if json {
                serde_json::to_string_pretty(&report)
                    .map_err(|e| Failure::Internal(e.to_string()))?
                    + "\n"
            } else {
                report.render(witness)
            };
            Ok((answer_code(report.answer), text))
        }
        Command::Oracle { input, mode, k } => {
            let text = io::read_file(&input)?;
            match mode {
                OracleMode::Fvs => {
                    let r = oracle::brute_min_fvs(&io::parse_tournament(&text)?)?;
                    Ok((0, format!("{}\n{}\n", r.opt_size, ids(&r.witness))))
                }
                OracleMode::Fvc => {
                    let r = oracle::brute_min_fvc(&io::parse_mixed(&text)?)?;
                    Ok((0, format!("{}\n{}\n", r.opt_size, ids(&r.witness))))
                }
                OracleMode::Branch => {
                    let k = k.ok_or_else(|| Failure::Input("--mode branch needs --k".into()))?;
                    match oracle::triangle_branch_fvs(&io::parse_tournament(&text)?, k) {
                        Some(w) => Ok((0, format!("YES\n{}\n", ids(&w)))),
                        None => Ok((1, "NO\n".into())),
                    }
                }
            }
        }
        Command::Approx { input, k } => {
            let t = read_tournament(&input)?;
            let r = greedy_3_approx(&t, k);
            let mut out = String::new();
            match r.verdict {
                Verdict::Found => {
                    let _ = writeln!(out, "FOUND {}", r.fvs.len());
                    let _ = writeln!(out, "{}", ids(&r.fvs));
                }
                Verdict::NoSolutionWithinBudget => {
                    let _ = writeln!(out, "NO");
                }
            }
            for tri in &r.triangles {
                let _ = writeln!(out, "triangle {}", ids(tri));
            }
            let code = if r.verdict == Verdict::Found { 0 } else { 1 };
            Ok((code, out))
        }
        Command::Kernel { input, k, out } => {
            let t = read_tournament(&input)?;
            let kernel = kernelize(&t, k);
            let matrix = io::write_tournament(&kernel.reduced);
            let mut text = format!("k {}\nids {}\n", kernel.k_reduced, ids(&kernel.ids));
            match out {
                Some(path) => write_out(&path, &matrix)?,
                None => text.push_str(&matrix),
            }
            Ok((0, text))
        }
        Command::Partition { input } => {
            let g = io::parse_undirected(&io::read_file(&input)?)?;
            let p = balanced_partition(&g);
            let text = format!(
                "A: {}\nB: {}\n{} {} {}\n",
                ids(&p.a),
                ids(&p.b),
                p.m_a,
                p.m_b,
                p.m_c
            );
            let ok = p.within_bounds(g.max_degree()) && p.moves <= g.edge_count();
            Ok((if ok { 0 } else { 1 }, text))
        }
        Command::EnumPairs { input, k, limit } => {
            let t = read_tournament(&input)?;
            let mut out = String::new();
            if let Some(pairs) = enumerate_set_pairs(&t, k) {
                for pair in pairs.take(limit.unwrap_or(usize::MAX)) {
                    let _ = writeln!(out, "M: {} / P: {}", ids(&pair.m), ids(&pair.p));
                }
            }
            Ok((0, out))
        }
        Command::Gen { n, seed, out } => {
            if n == 0 {
                return Err(Failure::Input("n must be at least 1".into()));
            }
            write_out(&out, &io::write_tournament(&generate(n, seed)))?;
            Ok((0, String::new()))
        }
        Command::Bench {
            input,
            k,
            csv,
            pipeline,
        } => {
            let t = read_tournament(&input)?;
            let rows: Mutex<Vec<PairMetrics>> = Mutex::new(Vec::new());
            let report = tfvs_solve_observed(&t, k, &pipeline.options(), &|m| {
                rows.lock().expect("metrics lock").push(m.clone());
            })?;
            let mut rows = rows.into_inner().expect("metrics lock");
            rows.sort_by_key(|m| m.index);
            let mut table = String::from(
                "index,m_size,p_size,d_instance,budget,nodes,leaves,max_depth,matching_calls,found\n",
            );
            for m in &rows {
                let _ = writeln!(
                    table,
                    "{},{},{},{},{},{},{},{},{},{}",
                    m.index,
                    m.m_size,
                    m.p_size,
                    m.d_instance,
                    m.budget,
                    m.nodes,
                    m.leaves,
                    m.max_depth,
                    m.matching_calls,
                    m.found
                );
            }
            write_out(&csv, &table)?;
            let max_leaves = rows.iter().map(|m| m.leaves).max().unwrap_or(0);
            let text = format!(
                "answer {}\npairs {}\nleaves {}\nmax_leaves_per_call {}\nmax_depth {}\nleaf_ratio {:.4}\n",
                report.answer,
                report.pairs_examined,
                report.branch_leaves,
                max_leaves,
                report.max_depth,
                max_leaves as f64 / PHI.powi(k as i32),
            );
            Ok((answer_code(report.answer), text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((code, text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            match &failure {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Internal(msg) => eprintln!("internal error: {msg}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(Failure::from(Error::Internal("x".into())).exit_code(), 3);
        assert_eq!(Failure::from(Error::CyclicSet).exit_code(), 2);
        assert_eq!(Failure::from(Error::SelfLoop(1)).exit_code(), 2);
    }
}
