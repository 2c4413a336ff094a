//! `pentagrow`: grow, measure, census, export and check pentagon
//! structures.
//!
//! Summary lines are `key=value` pairs separated by spaces. Exit codes:
//! 0 success, 1 invariant or verification failure, 2 usage error, 3 I/O.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pentagrow_core::export::{self, LoadError, SvgOptions, SvgPlan};
use pentagrow_core::graph::{analyze, summary_of};
use pentagrow_core::growth::grow;
use pentagrow_core::holes::{census_of, Catalog, CatalogError};
use pentagrow_core::stats::{self, fmt_sig, StatsError};
use pentagrow_core::verify::verify_structure;

#[derive(Parser)]
#[command(
    name = "pentagrow",
    version,
    about = "Random pentagon growth with exact geometry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grow one structure and print its counts.
    Grow {
        /// Number of tiles, seed included.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Structure file to write.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Batch of runs with V, E, H and perimeters at geometric checkpoints.
    Stats {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        /// Seed of run 0; run i uses seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-run CSV.
        #[arg(long)]
        out: PathBuf,
        /// Summary CSV [default: <out stem>.summary.csv].
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Worker threads [default: all cores].
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Name and count the holes of a structure.
    Holes {
        #[arg(long = "in")]
        input: PathBuf,
        /// Catalog file; created from the built-in shapes if missing and
        /// updated with new shapes.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Histogram CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-layer SVG for laser cutting.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Millimetres per tile side.
        #[arg(long, default_value_t = 10.0)]
        scale: f64,
        /// Cut the holes out instead of engraving their outlines.
        #[arg(long)]
        holes_as_cut: bool,
        /// Leave out the attachment tree.
        #[arg(long)]
        no_tree: bool,
        /// Leave out the stage-colored fills.
        #[arg(long)]
        no_fills: bool,
    },
    /// Check every invariant of a structure file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also compare V and E with a brute-force float oracle (n <= 50).
        #[arg(long)]
        deep: bool,
    },
}

enum Failure {
    Invariant(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invariant(m) | Failure::Usage(m) | Failure::Io(m) => m,
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::InvariantViolation(_) => Failure::Invariant(e.to_string()),
            _ => Failure::Io(e.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Io { .. } | CatalogError::Parse { .. } => Failure::Io(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

impl From<StatsError> for Failure {
    fn from(e: StatsError) -> Self {
        match e {
            StatsError::Io { .. } => Failure::Io(e.to_string()),
            StatsError::BadRequest(_) => Failure::Usage(e.to_string()),
            _ => Failure::Invariant(e.to_string()),
        }
    }
}

fn invariant(e: impl std::fmt::Display) -> Failure {
    Failure::Invariant(e.to_string())
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("pentagrow: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Grow { n, seed, out } => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let state = grow(n, seed).map_err(invariant)?;
            let free = state.free_edge_count();
            let s = state.into_structure();
            if let Some(path) = out {
                export::save(&s, &path)?;
            }
            let (graph, faces) = analyze(&s).map_err(invariant)?;
            let sum = summary_of(&s, &graph, &faces);
            println!(
                "n={} V={} E={} H={} outer_perimeter={} total_boundary={} free_edges={free}",
                sum.n,
                sum.vertices,
                sum.edges,
                sum.holes_faces,
                fmt_sig(sum.perimeter.outer.to_f64()),
                fmt_sig(sum.perimeter.total_boundary.to_f64()),
            );
            if !sum.euler_consistent() {
                return Err(Failure::Invariant(format!(
                    "faces give H={}, Euler gives H={}",
                    sum.holes_faces, sum.holes_euler
                )));
            }
        }
        Command::Stats {
            n_max,
            runs,
            seed,
            out,
            summary,
            threads,
        } => {
            if threads == Some(0) {
                return Err(Failure::Usage("--threads must be at least 1".into()));
            }
            let schedule = stats::geometric_schedule(n_max);
            let records = stats::run_batch(n_max, runs, seed, &schedule, threads)?;
            stats::write_csv(&records, &out)?;
            let summary_path = summary.unwrap_or_else(|| {
                let stem = out.file_stem().unwrap_or_default().to_string_lossy();
                out.with_file_name(format!("{stem}.summary.csv"))
            });
            if schedule.len() < 2 {
                println!("runs={runs} n={n_max} summary=skipped");
                return Ok(());
            }
            let est = stats::estimate_limits(&records)?;
            stats::write_summary_csv(&est, &summary_path)?;
            let last = est.last();
            println!(
                "runs={} n={} V/n={} se_V={} E/n={} se_E={} H/n={} se_H={}",
                est.runs,
                last.n,
                fmt_sig(last.mean_v),
                fmt_sig(last.se_v),
                fmt_sig(last.mean_e),
                fmt_sig(last.se_e),
                fmt_sig(last.mean_h),
                fmt_sig(last.se_h),
            );
        }
        Command::Holes {
            input,
            catalog,
            out,
        } => {
            let s = export::load(&input)?;
            let mut cat = match &catalog {
                Some(p) if p.exists() => Catalog::load(p)?,
                _ => Catalog::seeded(),
            };
            let (graph, faces) = analyze(&s).map_err(invariant)?;
            let census = census_of(&s, &graph, &faces, &mut cat).map_err(invariant)?;
            if let Some(p) = &catalog {
                if cat.is_dirty() || !p.exists() {
                    cat.save(p)?;
                }
            }
            if let Some(p) = &out {
                write(p, &census.to_csv(&cat))?;
            }
            let hist: Vec<String> = census
                .histogram
                .iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            println!(
                "holes={} angle_sum_violations={} non_unit={} discovered={} histogram={}",
                census.holes,
                census.angle_sum_violations,
                census.non_unit,
                census.discovered.len(),
                hist.join(",")
            );
            if census.angle_sum_violations > 0 {
                return Err(Failure::Invariant(format!(
                    "{} holes violate the angle sum",
                    census.angle_sum_violations
                )));
            }
        }
        Command::Export {
            input,
            svg,
            scale,
            holes_as_cut,
            no_tree,
            no_fills,
        } => {
            if !(scale.is_finite() && scale > 0.0) {
                return Err(Failure::Usage("--scale must be positive".into()));
            }
            let s = export::load(&input)?;
            let options = SvgOptions {
                scale_mm: scale,
                holes_as_cut,
                tree: !no_tree,
                fills: !no_fills,
                ..SvgOptions::default()
            };
            let plan = SvgPlan::build(&s, options).map_err(invariant)?;
            write(&svg, &plan.render())?;
            println!(
                "width_mm={} height_mm={} cut_length_mm={} holes={}",
                fmt_sig(plan.width_mm),
                fmt_sig(plan.height_mm),
                fmt_sig(plan.cut_length_mm()),
                plan.holes.len()
            );
        }
        Command::Verify { input, deep } => {
            let s = export::load_unchecked(&input)?;
            let report = verify_structure(&s, deep);
            for c in &report.checks {
                let status = if c.passed { "ok" } else { "FAIL" };
                println!("{status} {} {}", c.name, c.detail);
            }
            if !report.passed() {
                let names: Vec<&str> = report.failures().map(|c| c.name).collect();
                return Err(Failure::Invariant(format!("failed: {}", names.join(", "))));
            }
        }
    }
    Ok(())
}
