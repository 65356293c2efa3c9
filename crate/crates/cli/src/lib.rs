//! Command-line pipeline: generate, recognize, color, eliminate, verify and bench.
//!
//! Every subcommand prints one JSON document on stdout. Exit codes are
//! [`EXIT_OK`] for success, [`EXIT_NO`] for a negative decision and
//! [`EXIT_ERROR`] for usage, I/O and format errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use halin_core::chordal::PeoDoc;
use halin_core::coloring::ColoringDoc;
use halin_core::dot::to_dot;
use halin_core::oracles::{chromatic_number_bruteforce, is_chordal_bruteforce, MAX_ORACLE_COLORS};
use halin_core::recognition::CertificateDoc;
use halin_core::scaling::{run_bench, Algorithm, BenchConfig};
use halin_core::{
    chordal_completion, color_halin, generate, peo_halin, recognize, verify_peo, GenSpec, Graph, GraphDoc,
    HalinCertificate, Variant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "halin", version, about = "Recognize, color and triangulate Halin graphs")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph, including its outer cycle, as JSON.
    Generate {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a graph is Halin and report its certificate.
    Recognize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Optimal vertex coloring of a Halin graph.
    Color {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Also write a Graphviz rendering with colored nodes.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Perfect elimination ordering of a treewidth-3 chordal completion.
    Peo {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Write the completed chordal graph as JSON.
        #[arg(long)]
        emit_completion: Option<PathBuf>,
    },
    /// Audit a result against the brute-force oracles.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: VerifyMode,
        /// Coloring JSON for `--mode coloring`.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Elimination JSON for `--mode peo`.
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// Time coloring or elimination over a size schedule.
    Bench {
        /// Comma-separated vertex counts, e.g. `1000,2000,4000`.
        #[arg(long, default_value = "", value_parser = parse_schedule)]
        schedule: Schedule,
        #[arg(long, default_value = "color", value_parser = parse_algorithm)]
        algo: Algorithm,
        #[arg(long, default_value = "halin", value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        graphs: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    /// The coloring is proper and uses the chromatic number of colors.
    Coloring,
    /// The input graph is chordal.
    Chordal,
    /// The order is a perfect elimination ordering of the graph plus its fill edges.
    Peo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule(pub Vec<usize>);

fn parse_schedule(s: &str) -> Result<Schedule, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| format!("bad size `{t}`: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Schedule)
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn invalid(e: impl std::fmt::Display) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Runs one command, writing its JSON report to `out`. Errors are reported
/// on stderr and mapped to [`EXIT_ERROR`].
pub fn run_cli(config: CliConfig, out: &mut dyn Write) -> i32 {
    match execute(config.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Generate { variant, n, seed, out: path } => {
            let gen = generate(&GenSpec::new(variant, n, seed)).map_err(CliError::invalid)?;
            let doc = gen.graph.to_doc(Some(gen.outer));
            match path {
                Some(path) => {
                    write_json(&path, &doc)?;
                    print(out, &json!({ "written": path, "n": n, "variant": variant }))?;
                }
                None => print(out, &doc)?,
            }
            Ok(EXIT_OK)
        }
        Command::Recognize { input, emit_certificate } => {
            let g = read_graph(&input)?;
            match recognize(&g) {
                Ok(cert) => {
                    if let Some(path) = emit_certificate {
                        write_json(&path, &cert.to_doc())?;
                    }
                    print(out, &json!({ "halin": true, "certificate": cert.to_doc() }))?;
                    Ok(EXIT_OK)
                }
                Err(rejection) => {
                    print(out, &json!({ "halin": false, "reason": rejection.reason, "detail": rejection.detail }))?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Color { input, certificate, dot } => {
            let g = read_graph(&input)?;
            let Some(cert) = certificate_for(&g, certificate.as_deref(), out)? else {
                return Ok(EXIT_NO);
            };
            let coloring = color_halin(&g, &cert).map_err(CliError::invalid)?;
            if let Some(path) = dot {
                write_text(&path, &to_dot(&g, Some(&cert), Some(&coloring)))?;
            }
            print(out, &coloring.to_doc())?;
            Ok(EXIT_OK)
        }
        Command::Peo { input, certificate, emit_completion } => {
            let g = read_graph(&input)?;
            let Some(cert) = certificate_for(&g, certificate.as_deref(), out)? else {
                return Ok(EXIT_NO);
            };
            let peo = peo_halin(&g, &cert).map_err(CliError::invalid)?;
            if let Some(path) = emit_completion {
                write_json(&path, &chordal_completion(&g, &peo).to_doc(None))?;
            }
            print(out, &peo.to_doc())?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, mode, coloring, order } => {
            let g = read_graph(&input)?;
            match mode {
                VerifyMode::Coloring => verify_coloring(&g, coloring.as_deref(), out),
                VerifyMode::Chordal => {
                    let chordal = is_chordal_bruteforce(&g).map_err(CliError::invalid)?;
                    print(out, &json!({ "chordal": chordal }))?;
                    Ok(if chordal { EXIT_OK } else { EXIT_NO })
                }
                VerifyMode::Peo => verify_order(&g, order.as_deref(), out),
            }
        }
        Command::Bench { schedule, algo, variant, seed, graphs, samples } => {
            let mut cfg = BenchConfig::new(algo, variant, schedule.0);
            cfg.seed = seed;
            cfg.graphs = graphs;
            cfg.samples = samples;
            let report = run_bench(&cfg).map_err(CliError::invalid)?;
            print(out, &report)?;
            Ok(EXIT_OK)
        }
    }
}

/// Loads and validates a supplied certificate, or runs recognition. `None`
/// means the graph is not Halin; the rejection has already been printed.
fn certificate_for(g: &Graph, path: Option<&Path>, out: &mut dyn Write) -> Result<Option<HalinCertificate>, CliError> {
    if let Some(path) = path {
        let doc: CertificateDoc = read_json(path)?;
        let cert = HalinCertificate::from_doc(&doc, g.n()).map_err(CliError::invalid)?;
        cert.validate(g).map_err(CliError::invalid)?;
        return Ok(Some(cert));
    }
    match recognize(g) {
        Ok(cert) => Ok(Some(cert)),
        Err(rejection) => {
            print(out, &json!({ "halin": false, "reason": rejection.reason, "detail": rejection.detail }))?;
            Ok(None)
        }
    }
}

fn verify_coloring(g: &Graph, path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let path = path.ok_or_else(|| CliError::Invalid("--mode coloring needs --coloring FILE".into()))?;
    let doc: ColoringDoc = read_json(path)?;
    let mut color = vec![None; g.n()];
    for (&v, &c) in &doc.colors {
        *color.get_mut(v).ok_or_else(|| CliError::Invalid(format!("colored vertex {v} out of range")))? = Some(c);
    }
    if let Some(v) = g.live_vertices().find(|&v| color[v].is_none()) {
        return Err(CliError::Invalid(format!("vertex {v} has no color")));
    }
    let conflict = g.edges().find(|&(u, v)| color[u] == color[v]);
    let mut used: Vec<u8> = g.live_vertices().filter_map(|v| color[v]).collect();
    used.sort_unstable();
    used.dedup();
    let chromatic = chromatic_number_bruteforce(g, MAX_ORACLE_COLORS).map_err(CliError::invalid)?;
    let optimal = chromatic.is_some_and(|k| k == used.len());
    print(
        out,
        &json!({
            "proper": conflict.is_none(),
            "conflict": conflict.map(|(u, v)| [u, v]),
            "num_colors": used.len(),
            "chromatic_number": chromatic,
            "optimal": optimal,
        }),
    )?;
    Ok(if conflict.is_none() && optimal { EXIT_OK } else { EXIT_NO })
}

fn verify_order(g: &Graph, path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let path = path.ok_or_else(|| CliError::Invalid("--mode peo needs --order FILE".into()))?;
    let doc: PeoDoc = read_json(path)?;
    let mut filled = g.clone();
    for &[u, v] in &doc.fill_edges {
        filled.add_edge(u, v).map_err(CliError::invalid)?;
    }
    let perfect = verify_peo(&filled, &doc.order).map_err(CliError::invalid)?;
    let chordal = is_chordal_bruteforce(&filled).ok();
    print(out, &json!({ "perfect": perfect, "chordal_completion": chordal }))?;
    Ok(if perfect { EXIT_OK } else { EXIT_NO })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let doc: GraphDoc = read_json(path)?;
    doc.to_graph().map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("documents serialize");
    write_text(path, &(text + "\n"))
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn print<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string(value).expect("documents serialize");
    writeln!(out, "{text}").map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}
