//! Wall-clock scaling measurements for the coloring and elimination routines.

use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::chordal::peo_halin;
use crate::coloring::color_halin;
use crate::generators::{generate, GenError, GenSpec, Variant};
use crate::recognition::HalinCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Color,
    Peo,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "color" => Ok(Algorithm::Color),
            "peo" => Ok(Algorithm::Peo),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub schedule: Vec<usize>,
    pub variant: Variant,
    pub algorithm: Algorithm,
    pub seed: u64,
    /// Distinct graphs generated per size.
    pub graphs: usize,
    /// Timed batches per graph.
    pub samples: usize,
    /// Each batch repeats the call until it lasts at least this long.
    pub min_batch: Duration,
}

impl BenchConfig {
    pub fn new(algorithm: Algorithm, variant: Variant, schedule: Vec<usize>) -> Self {
        BenchConfig {
            schedule,
            variant,
            algorithm,
            seed: 0,
            graphs: 3,
            samples: 5,
            min_batch: Duration::from_millis(5),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchPoint {
    pub n: usize,
    pub median_secs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub algorithm: Algorithm,
    pub variant: Variant,
    pub points: Vec<BenchPoint>,
    /// Least-squares slope of log(time) against log(n); `None` below two points.
    pub slope: Option<f64>,
}

/// Least-squares slope of `ln y` over `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}

fn time_per_call(min_batch: Duration, mut f: impl FnMut()) -> f64 {
    let t = Instant::now();
    f();
    let single = t.elapsed().max(Duration::from_nanos(1));
    let iters = (min_batch.as_nanos() / single.as_nanos()).max(1) as u32;
    let t = Instant::now();
    for _ in 0..iters {
        f();
    }
    t.elapsed().as_secs_f64() / f64::from(iters)
}

/// Times the configured algorithm at every size in the schedule. Graph
/// generation and certificate construction are not timed.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport, GenError> {
    let mut points = Vec::with_capacity(cfg.schedule.len());
    for &n in &cfg.schedule {
        let mut times = Vec::new();
        for g_idx in 0..cfg.graphs.max(1) {
            let spec = GenSpec::new(cfg.variant, n, cfg.seed.wrapping_add(g_idx as u64));
            let gen = generate(&spec)?;
            let cert = HalinCertificate::from_outer(&gen.graph, &gen.outer)
                .expect("generated graphs carry valid certificates");
            for _ in 0..cfg.samples.max(1) {
                let t = match cfg.algorithm {
                    Algorithm::Color => time_per_call(cfg.min_batch, || {
                        black_box(color_halin(black_box(&gen.graph), black_box(&cert)).expect("coloring"));
                    }),
                    Algorithm::Peo => time_per_call(cfg.min_batch, || {
                        black_box(peo_halin(black_box(&gen.graph), black_box(&cert)).expect("peo"));
                    }),
                };
                times.push(t);
            }
        }
        points.push(BenchPoint { n, median_secs: median(times) });
    }
    let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.n as f64, p.median_secs)).collect();
    Ok(BenchReport { algorithm: cfg.algorithm, variant: cfg.variant, slope: loglog_slope(&xy), points })
}
