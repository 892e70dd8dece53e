use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use popstack::characterize::{
    self, construct_pair, count_sortable, count_two_avoiding, reduce_pair, verify_pair,
    ConstructionConfig,
};
use popstack::enumerate::DEFAULT_ENUM_LIMIT;
use popstack::pairfile::{self, CountRow};
use popstack::{sort_trace, sort_trace_bounded, two_contains, Error, Permutation};

/// Pop-stack sorting and two-set pattern avoidance.
#[derive(Parser)]
#[command(name = "popstack", version, about)]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the pass-by-pass trace of sorting a permutation.
    ///
    /// Each line shows `input | blocks | output`. Exits 1 if the
    /// permutation is not sorted within the requested passes.
    SortTrace {
        /// Permutation, e.g. "41352" or "4 1 3 5 2".
        perm: String,
        /// Trace at most this many passes instead of sorting fully.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Test a permutation against a pair file; print the witness if any.
    ///
    /// Exits 0 when the permutation 2-avoids the pair, 1 when it
    /// 2-contains it.
    Check {
        /// Permutation to test.
        perm: String,
        /// Pair file with [F] and [G] sections.
        pair_file: PathBuf,
    },
    /// Enumerate a candidate (F, G) pair for k-pass sortability.
    Construct {
        /// Number of passes being characterized.
        #[arg(long)]
        k: usize,
        /// Length cap for the non-sortable (forbidden) side.
        #[arg(long)]
        omega1_cap: usize,
        /// Length cap for the saving side.
        #[arg(long)]
        omega2_cap: usize,
        /// Pair file characterizing (k-1)-pass sortability; used to
        /// validate the caps. Defaults to the single-pass pair when k = 2.
        #[arg(long)]
        prior: Option<PathBuf>,
        /// Write the pair here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Drop provably redundant members from a pair file.
    Reduce {
        pair_file: PathBuf,
        /// Re-verify two-avoidance agreement on all permutations up to
        /// this length (0 skips the check).
        #[arg(long, default_value_t = 6)]
        check_bound: usize,
        /// Write the reduced pair here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print per-length CSV counts of sortable and/or two-avoiding
    /// permutations.
    Count {
        /// Count permutations sortable in this many passes.
        #[arg(long)]
        k: Option<usize>,
        /// Count permutations two-avoiding this pair file.
        #[arg(long)]
        pair: Option<PathBuf>,
        /// Largest length to count.
        #[arg(long)]
        n_max: usize,
    },
    /// Exhaustively compare a pair file against k-pass sortability.
    ///
    /// Prints the CSV count table; exits 1 when any length mismatches.
    Verify {
        pair_file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
    },
}

fn enum_limit() -> Result<usize, String> {
    match std::env::var("POPSTACK_MAX_ENUM_LEN") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("invalid POPSTACK_MAX_ENUM_LEN {v:?}: {e}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUM_LIMIT),
        Err(e) => Err(format!("invalid POPSTACK_MAX_ENUM_LEN: {e}")),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Error> {
    s.parse()
}

fn run(cmd: Cmd, limit: usize) -> Result<u8, Error> {
    match cmd {
        Cmd::SortTrace { perm, k } => {
            let perm = parse_perm(&perm)?;
            let trace = match k {
                Some(k) => sort_trace_bounded(&perm, k),
                None => sort_trace(&perm),
            };
            let text = trace.to_string();
            if !text.is_empty() {
                println!("{text}");
            }
            let sorted = trace
                .final_state()
                .map_or(perm.is_increasing(), Permutation::is_increasing);
            let n = trace.num_passes();
            let passes = if n == 1 { "pass" } else { "passes" };
            if sorted {
                println!("sorted after {n} {passes}");
                Ok(0)
            } else {
                println!("not sorted after {n} {passes}");
                Ok(1)
            }
        }
        Cmd::Check { perm, pair_file } => {
            let perm = parse_perm(&perm)?;
            let pair = pairfile::read_pair_file(&pair_file)?;
            match two_contains(&perm, &pair) {
                Some(witness) => {
                    println!("2-contains");
                    println!("pattern: {}", witness.pattern());
                    println!("positions: {}", witness.occurrence());
                    let sub = popstack::subpermutation_at(&perm, witness.occurrence())?;
                    println!("values: {sub}");
                    Ok(1)
                }
                None => {
                    println!("2-avoids");
                    Ok(0)
                }
            }
        }
        Cmd::Construct {
            k,
            omega1_cap,
            omega2_cap,
            prior,
            out,
        } => {
            let prior_pair = match prior {
                Some(path) => Some(pairfile::read_pair_file(&path)?),
                None if k == 2 => Some(characterize::single_pass_pair()),
                None => None,
            };
            let config = ConstructionConfig::new(k, omega1_cap, omega2_cap, prior_pair)?;
            let pair = construct_pair(&config, limit)?;
            let mut comments = vec![
                format!("constructed candidate pair for k = {k}"),
                format!("caps: forbidden <= {omega1_cap}, saving <= {omega2_cap}"),
            ];
            if config.omega1_cap_is_exact() == Some(true) {
                comments.push("forbidden cap equals the derived sufficient bound".into());
            }
            let text = pairfile::render_pair(&pair, &comments);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Reduce {
            pair_file,
            check_bound,
            out,
        } => {
            let pair = pairfile::read_pair_file(&pair_file)?;
            let reduced = reduce_pair(&pair, check_bound, limit)?;
            let comments = [format!(
                "reduced from {} forbidden / {} saving patterns",
                pair.forbidden().len(),
                pair.saving().len()
            )];
            let text = pairfile::render_pair(&reduced, &comments);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Cmd::Count { k, pair, n_max } => {
            let pair = match pair {
                Some(path) => Some(pairfile::read_pair_file(&path)?),
                None => None,
            };
            if k.is_none() && pair.is_none() {
                eprintln!("error: count needs --k and/or --pair");
                return Ok(2);
            }
            let mut rows = Vec::new();
            for n in 1..=n_max {
                let av2 = match &pair {
                    Some(p) => Some(count_two_avoiding(p, n, limit)?),
                    None => None,
                };
                let sortable = match k {
                    Some(k) => Some(count_sortable(k, n, limit)?),
                    None => None,
                };
                rows.push(CountRow {
                    n,
                    av2_count: av2,
                    sortable_count: sortable,
                    mismatches: None,
                });
            }
            print!("{}", pairfile::render_counts(&rows));
            Ok(0)
        }
        Cmd::Verify {
            pair_file,
            k,
            n_max,
        } => {
            let pair = pairfile::read_pair_file(&pair_file)?;
            let report = verify_pair(&pair, k, n_max, limit)?;
            print!("{}", pairfile::render_verify_csv(&report));
            for row in &report.rows {
                for m in &row.mismatches {
                    let side = if m.sortable {
                        "sortable but 2-contains"
                    } else {
                        "2-avoids but not sortable"
                    };
                    eprintln!("mismatch at n={}: {} ({side})", row.n, m.perm);
                }
            }
            Ok(if report.is_exact() { 0 } else { 1 })
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::EnumerationBudget { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: could not configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let limit = match enum_limit() {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli.cmd, limit) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
