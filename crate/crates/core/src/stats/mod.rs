//! Batches of independent runs and the growth curves of V, E, H and the
//! perimeters.
//!
//! Run `i` uses seed `base_seed + i`. Each run grows once to `n_max` and is
//! measured at every checkpoint on the way, so a checkpoint at n sees
//! exactly the structure `grow(n, seed)` would produce.

mod fit;
mod format;

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

pub use fit::{linear_fit, mean_se, LinearFit};
pub use format::fmt_sig;

use crate::graph::{summarize, GraphError};
use crate::growth::{GrowthError, GrowthState};

#[derive(Debug, thiserror::Error)]
pub enum StatsError {
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("Euler identity broken at seed {seed}, n = {n}: faces give {faces} holes, formula {formula}")]
    EulerMismatch {
        seed: u64,
        n: usize,
        faces: usize,
        formula: i64,
    },
    #[error("need at least two checkpoints")]
    InsufficientData,
    #[error("records do not share one checkpoint schedule")]
    MismatchedSchedules,
    #[error("bad batch request: {0}")]
    BadRequest(&'static str),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Checkpoint {
    pub n: usize,
    pub v: usize,
    pub e: usize,
    pub h_euler: i64,
    pub h_faces: usize,
    pub outer_perimeter: f64,
    pub total_boundary: f64,
    pub free_edges: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunRecord {
    pub seed: u64,
    pub checkpoints: Vec<Checkpoint>,
}

/// 10, 20, 50, 100, 200, 500, ... below `n_max`, then `n_max`.
pub fn geometric_schedule(n_max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut decade = 10usize;
    'outer: loop {
        for m in [1, 2, 5] {
            let n = decade * m;
            if n >= n_max {
                break 'outer;
            }
            out.push(n);
        }
        decade *= 10;
    }
    out.push(n_max);
    out
}

/// One run measured at each checkpoint (sorted, deduplicated, ≤ `n_max`).
pub fn run_one(n_max: usize, seed: u64, schedule: &[usize]) -> Result<RunRecord, StatsError> {
    if n_max == 0 {
        return Err(StatsError::BadRequest("n_max must be at least 1"));
    }
    let mut points: Vec<usize> = schedule
        .iter()
        .copied()
        .filter(|&n| n >= 1 && n <= n_max)
        .collect();
    points.sort_unstable();
    points.dedup();
    let mut state = GrowthState::seed_structure(seed);
    let mut checkpoints = Vec::with_capacity(points.len());
    for n in points {
        while state.len() < n {
            state.attach()?;
        }
        let s = summarize(state.structure())?;
        if !s.euler_consistent() {
            return Err(StatsError::EulerMismatch {
                seed,
                n,
                faces: s.holes_faces,
                formula: s.holes_euler,
            });
        }
        checkpoints.push(Checkpoint {
            n,
            v: s.vertices,
            e: s.edges,
            h_euler: s.holes_euler,
            h_faces: s.holes_faces,
            outer_perimeter: s.perimeter.outer.to_f64(),
            total_boundary: s.perimeter.total_boundary.to_f64(),
            free_edges: state.free_edge_count(),
        });
    }
    Ok(RunRecord { seed, checkpoints })
}

/// `runs` independent runs, in seed order. `threads = None` uses all
/// cores; the result does not depend on it.
pub fn run_batch(
    n_max: usize,
    runs: usize,
    base_seed: u64,
    schedule: &[usize],
    threads: Option<usize>,
) -> Result<Vec<RunRecord>, StatsError> {
    if runs == 0 {
        return Err(StatsError::BadRequest("runs must be at least 1"));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| StatsError::Pool(e.to_string()))?;
    pool.install(|| {
        (0..runs as u64)
            .into_par_iter()
            .map(|i| run_one(n_max, base_seed.wrapping_add(i), schedule))
            .collect()
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub mean_v: f64,
    pub se_v: f64,
    pub mean_e: f64,
    pub se_e: f64,
    pub mean_h: f64,
    pub se_h: f64,
}

/// Slope of a total against n over the tail checkpoints.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TailSlope {
    pub fit: LinearFit,
    /// 95% normal interval for the slope.
    pub ci: (f64, f64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct BatchSummary {
    pub runs: usize,
    pub n_max: usize,
    pub rows: Vec<SummaryRow>,
    pub slope_v: TailSlope,
    pub slope_e: TailSlope,
    pub slope_h: TailSlope,
    pub slope_outer: TailSlope,
    pub slope_total: TailSlope,
}

impl BatchSummary {
    pub fn last(&self) -> &SummaryRow {
        self.rows.last().expect("summary has rows")
    }
}

const Z95: f64 = 1.959_963_984_540_054;

/// Ratio means with standard errors per checkpoint, and least-squares
/// slopes of the totals over the last half of the checkpoints (all runs
/// pooled).
pub fn estimate_limits(records: &[RunRecord]) -> Result<BatchSummary, StatsError> {
    let first = records.first().ok_or(StatsError::InsufficientData)?;
    let schedule: Vec<usize> = first.checkpoints.iter().map(|c| c.n).collect();
    if schedule.len() < 2 {
        return Err(StatsError::InsufficientData);
    }
    for r in records {
        if !r
            .checkpoints
            .iter()
            .map(|c| c.n)
            .eq(schedule.iter().copied())
        {
            return Err(StatsError::MismatchedSchedules);
        }
    }
    let rows = schedule
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let ratio = |f: fn(&Checkpoint) -> f64| {
                let xs: Vec<f64> = records
                    .iter()
                    .map(|r| f(&r.checkpoints[i]) / n as f64)
                    .collect();
                mean_se(&xs)
            };
            let (mean_v, se_v) = ratio(|c| c.v as f64);
            let (mean_e, se_e) = ratio(|c| c.e as f64);
            let (mean_h, se_h) = ratio(|c| c.h_euler as f64);
            SummaryRow {
                n,
                mean_v,
                se_v,
                mean_e,
                se_e,
                mean_h,
                se_h,
            }
        })
        .collect();
    let tail = schedule.len() / 2;
    let slope = |f: fn(&Checkpoint) -> f64| {
        let (xs, ys): (Vec<f64>, Vec<f64>) = records
            .iter()
            .flat_map(|r| r.checkpoints[tail..].iter().map(|c| (c.n as f64, f(c))))
            .unzip();
        let fit = linear_fit(&xs, &ys);
        TailSlope {
            ci: (
                fit.slope - Z95 * fit.slope_se,
                fit.slope + Z95 * fit.slope_se,
            ),
            fit,
        }
    };
    Ok(BatchSummary {
        runs: records.len(),
        n_max: *schedule.last().expect("nonempty"),
        rows,
        slope_v: slope(|c| c.v as f64),
        slope_e: slope(|c| c.e as f64),
        slope_h: slope(|c| c.h_euler as f64),
        slope_outer: slope(|c| c.outer_perimeter),
        slope_total: slope(|c| c.total_boundary),
    })
}

pub const RECORD_HEADER: &str = "seed,n,V,E,H,outer_perimeter,total_boundary,free_edges";
pub const SUMMARY_HEADER: &str = "n,mean_V_over_n,se_V,mean_E_over_n,se_E,mean_H_over_n,se_H";

pub fn records_csv(records: &[RunRecord]) -> String {
    let mut out = String::from(RECORD_HEADER);
    out.push('\n');
    for r in records {
        for c in &r.checkpoints {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.seed,
                c.n,
                c.v,
                c.e,
                c.h_euler,
                fmt_sig(c.outer_perimeter),
                fmt_sig(c.total_boundary),
                c.free_edges
            ));
        }
    }
    out
}

pub fn summary_csv(summary: &BatchSummary) -> String {
    let mut out = String::from(SUMMARY_HEADER);
    out.push('\n');
    for r in &summary.rows {
        let cells = [r.mean_v, r.se_v, r.mean_e, r.se_e, r.mean_h, r.se_h].map(fmt_sig);
        out.push_str(&format!("{},{}\n", r.n, cells.join(",")));
    }
    out
}

fn write_file(path: &Path, text: &str) -> Result<(), StatsError> {
    let io = |source| StatsError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut f = std::fs::File::create(path).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)
}

pub fn write_csv(records: &[RunRecord], path: &Path) -> Result<(), StatsError> {
    write_file(path, &records_csv(records))
}

pub fn write_summary_csv(summary: &BatchSummary, path: &Path) -> Result<(), StatsError> {
    write_file(path, &summary_csv(summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_shape() {
        assert_eq!(geometric_schedule(10), vec![10]);
        assert_eq!(geometric_schedule(1), vec![1]);
        assert_eq!(
            geometric_schedule(1000),
            vec![10, 20, 50, 100, 200, 500, 1000]
        );
        assert_eq!(geometric_schedule(300), vec![10, 20, 50, 100, 200, 300]);
    }

    #[test]
    fn single_tile_batch() {
        let r = run_batch(1, 1, 5, &[1], Some(1)).unwrap();
        let c = r[0].checkpoints[0];
        assert_eq!((c.n, c.v, c.e, c.h_euler, c.h_faces), (1, 5, 5, 0, 0));
        assert_eq!(c.free_edges, 5);
        assert_eq!(c.outer_perimeter, 5.0);
    }

    #[test]
    fn checkpoints_match_separate_growth() {
        let r = run_one(200, 4, &[50, 200]).unwrap();
        let g = crate::growth::grow(50, 4).unwrap();
        let s = summarize(g.structure()).unwrap();
        assert_eq!(r.checkpoints[0].v, s.vertices);
        assert_eq!(r.checkpoints[0].free_edges, g.free_edge_count());
    }

    fn synthetic(slope: f64) -> Vec<RunRecord> {
        (0..3)
            .map(|seed| RunRecord {
                seed,
                checkpoints: [100usize, 200, 400, 800]
                    .iter()
                    .map(|&n| Checkpoint {
                        n,
                        v: (slope * n as f64).round() as usize,
                        e: 4 * n,
                        h_euler: 0,
                        h_faces: 0,
                        outer_perimeter: n as f64,
                        total_boundary: 2.0 * n as f64,
                        free_edges: 0,
                    })
                    .collect(),
            })
            .collect()
    }

    #[test]
    fn exact_line_has_exact_slope() {
        let s = estimate_limits(&synthetic(2.68)).unwrap();
        assert!((s.slope_v.fit.slope - 2.68).abs() < 1e-12);
        assert!(s.slope_v.fit.slope_se.abs() < 1e-9);
        assert!((s.last().mean_v - 2.68).abs() < 1e-12);
        assert_eq!(s.last().se_v, 0.0);
    }

    #[test]
    fn too_few_checkpoints() {
        let mut r = synthetic(1.0);
        for x in &mut r {
            x.checkpoints.truncate(1);
        }
        assert!(matches!(
            estimate_limits(&r),
            Err(StatsError::InsufficientData)
        ));
        assert!(matches!(
            estimate_limits(&[]),
            Err(StatsError::InsufficientData)
        ));
    }

    #[test]
    fn csv_shapes() {
        assert_eq!(records_csv(&[]), format!("{RECORD_HEADER}\n"));
        let r = run_batch(1, 1, 0, &[1], Some(1)).unwrap();
        assert_eq!(records_csv(&r).lines().count(), 2);
    }
}
