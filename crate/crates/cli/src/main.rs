//! `berge`: build, solve, check and verify linear {2,3}-uniform hypergraphs.
//!
//! Exit codes: 0 success, 1 a bound or claim violation was found, 2 error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use berge_core::constructions::{ConstructionError, ConstructionSpec, Family};
use berge_core::cycle_structure::{ClaimError, CycleContext};
use berge_core::enumerator::{run_campaign, Campaign, CampaignParams, Dedup, EnumerateError, Mode, Uniformity, ALL_CYCLES_BELOW};
use berge_core::hg::{self, ParseError};
use berge_core::solver::{SolveError, Solver};
use berge_core::LinearHypergraph;

const SCHEMA_VERSION: &str = "1";
const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Parser)]
#[command(name = "berge", version, about = "Berge paths and cycles in linear {2,3}-uniform hypergraphs")]
struct Cli {
    /// Worker threads for `verify` (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "verb", rename_all = "kebab-case")]
enum Command {
    /// Emit a member of a known family as `.hg`.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        /// Path length parameter (STS order for `disjoint-sts`).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        copies: Option<usize>,
    },
    /// Exact Berge path / cycle queries.
    Solve {
        #[arg(value_enum)]
        query: Query,
        /// `.hg` file, or `-` for stdin.
        file: PathBuf,
        /// Path length for `has-path`.
        #[arg(long, required_if_eq("query", "has-path"))]
        k: Option<usize>,
    },
    /// Run the cycle-structure checks on one hypergraph.
    Check {
        #[arg(value_enum)]
        what: CheckWhat,
        file: PathBuf,
    },
    /// Run a verification campaign.
    Verify {
        #[arg(value_enum)]
        campaign: CampaignArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Random mode with this many samples (exhaustive when absent).
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum)]
        uniformity: Option<UniformityArg>,
        #[arg(long, value_enum, default_value_t = DedupArg::Labeled)]
        dedup: DedupArg,
        /// Exhaustive vertex cap (default 7 for {2,3}, 8 for 3-uniform).
        #[arg(long, env = "HX_CAP_N")]
        #[serde(skip)]
        cap: Option<usize>,
        /// Dump extremal and violating hypergraphs here as `.hg` files.
        #[arg(long)]
        #[serde(skip)]
        witness_dir: Option<PathBuf>,
    },
    /// The two-shadow of a hypergraph.
    Shadow { file: PathBuf },
    /// Basic counts.
    Stats { file: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FamilyArg {
    Fano,
    StsBose,
    StsSkolem,
    DisjointSts,
    StarK3,
    MatchingK2,
    TwoEdgeClique,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Fano => Family::Fano,
            FamilyArg::StsBose => Family::StsBose,
            FamilyArg::StsSkolem => Family::StsSkolem,
            FamilyArg::DisjointSts => Family::DisjointSts,
            FamilyArg::StarK3 => Family::StarK3,
            FamilyArg::MatchingK2 => Family::MatchingK2,
            FamilyArg::TwoEdgeClique => Family::TwoEdgeClique,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Query {
    LongestPath,
    Circumference,
    HasPath,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CheckWhat {
    Claims,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CampaignArg {
    TheoremUniform,
    TheoremShadow,
    Remark,
    Claims,
}

impl From<CampaignArg> for Campaign {
    fn from(c: CampaignArg) -> Campaign {
        match c {
            CampaignArg::TheoremUniform => Campaign::TheoremUniform,
            CampaignArg::TheoremShadow => Campaign::TheoremShadow,
            CampaignArg::Remark => Campaign::Remark,
            CampaignArg::Claims => Campaign::Claims,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum UniformityArg {
    Three,
    TwoThree,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum DedupArg {
    Labeled,
    Isomorphism,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Construct(#[from] ConstructionError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Claim(#[from] ClaimError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "E_IO",
            CliError::Parse { source, .. } => source.code(),
            CliError::Construct(e) => e.code(),
            CliError::Solve(e) => e.code(),
            CliError::Claim(e) => e.code(),
            CliError::Enumerate(e) => e.code(),
            CliError::Usage(_) => "E_USAGE",
            CliError::Json(_) => "E_JSON",
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: &'static str,
    command: &'a Command,
    result: Value,
    timing: Timing,
}

#[derive(Serialize)]
struct Timing {
    elapsed_seconds: f64,
}

enum Output {
    Json { result: Value, violation: bool },
    Text(String),
}

fn read_hg(path: &Path) -> Result<LinearHypergraph, CliError> {
    let shown = path.display().to_string();
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: shown.clone(), source })?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?
    };
    hg::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

fn run(command: &Command) -> Result<Output, CliError> {
    match command {
        Command::Construct { family, n, k, copies } => {
            let spec = ConstructionSpec { family: (*family).into(), n: *n, k: *k, copies: *copies };
            Ok(Output::Text(hg::to_string(&spec.build()?)))
        }
        Command::Solve { query, file, k } => {
            let h = read_hg(file)?;
            let solver = Solver::new(&h)?;
            let result = match query {
                Query::LongestPath => {
                    let p = solver.longest_path();
                    json!({ "length": p.len(), "witness_vertices": p.vertices, "witness_edges": p.edges })
                }
                Query::Circumference => match solver.longest_cycle() {
                    Some(c) => json!({ "circumference": c.len(), "witness_vertices": c.vertices, "witness_edges": c.edges }),
                    None => json!({ "circumference": null, "witness_vertices": null, "witness_edges": null }),
                },
                Query::HasPath => {
                    let k = k.ok_or_else(|| CliError::Usage("has-path needs --k".into()))?;
                    let p = solver.find_path(k);
                    json!({
                        "k": k,
                        "has_path": p.is_some(),
                        "witness_vertices": p.as_ref().map(|p| &p.vertices),
                        "witness_edges": p.as_ref().map(|p| &p.edges),
                    })
                }
            };
            Ok(Output::Json { result, violation: false })
        }
        Command::Check { what: CheckWhat::Claims, file } => {
            let h = read_hg(file)?;
            let contexts = if h.n() < ALL_CYCLES_BELOW {
                CycleContext::all_longest(&h)?
            } else {
                CycleContext::longest(&h)?.into_iter().collect()
            };
            let summaries: Vec<_> = contexts.iter().map(|ctx| ctx.check_all()).collect();
            let total: usize = summaries.iter().map(|s| s.violations.len()).sum();
            let sum = |f: fn(&berge_core::cycle_structure::ClaimSummary) -> u64| summaries.iter().map(f).sum::<u64>();
            let result = json!({
                "n": h.n(),
                "cycle_length": contexts.first().map(|c| c.len()),
                "cycles_checked": contexts.len(),
                "cycles": contexts.iter().map(|c| c.cycle()).collect::<Vec<_>>(),
                "checked_vertices": sum(|s| s.checked_vertices),
                "checked_triples": sum(|s| s.checked_triples),
                "checked_pairs": sum(|s| s.checked_pairs),
                "violations": summaries.iter().flat_map(|s| &s.violations).collect::<Vec<_>>(),
                "violations_total": total,
            });
            Ok(Output::Json { result, violation: total > 0 })
        }
        Command::Verify { campaign, n, k, samples, seed, uniformity, dedup, cap, witness_dir } => {
            let campaign: Campaign = (*campaign).into();
            let uniformity = match uniformity {
                Some(UniformityArg::Three) => Uniformity::Three,
                Some(UniformityArg::TwoThree) => Uniformity::TwoThree,
                None => campaign.uniformity(),
            };
            let params = CampaignParams {
                n: *n,
                k: *k,
                uniformity,
                mode: match samples {
                    Some(s) => Mode::Random { samples: *s, seed: *seed },
                    None => Mode::Exhaustive,
                },
                dedup: match dedup {
                    DedupArg::Labeled => Dedup::Labeled,
                    DedupArg::Isomorphism => Dedup::Isomorphism,
                },
                cap: cap.unwrap_or(uniformity.default_cap()),
            };
            let report = run_campaign(campaign, &params)?;
            if let Some(dir) = witness_dir {
                dump_witnesses(dir, &report)?;
            }
            Ok(Output::Json { violation: !report.verified(), result: serde_json::to_value(&report)? })
        }
        Command::Shadow { file } => {
            let h = read_hg(file)?;
            let s = h.shadow();
            let pairs: Vec<[u32; 2]> = s.pairs().map(|(a, b)| [a, b]).collect();
            Ok(Output::Json { result: json!({ "n": h.n(), "shadow_edges": s.len(), "pairs": pairs }), violation: false })
        }
        Command::Stats { file } => {
            let h = read_hg(file)?;
            let result = json!({
                "n": h.n(),
                "m": h.m(),
                "pairs": h.count_pairs(),
                "triples": h.count_triples(),
                "shadow_edges": h.shadow_edge_count(),
                "min_shadow_degree": h.min_shadow_degree(),
                "max_shadow_degree": h.max_shadow_degree(),
            });
            Ok(Output::Json { result, violation: false })
        }
    }
}

fn dump_witnesses(dir: &Path, report: &berge_core::enumerator::VerificationReport) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: dir.display().to_string(), source };
    std::fs::create_dir_all(dir).map_err(io)?;
    for (i, w) in report.extremal_witnesses.iter().enumerate() {
        std::fs::write(dir.join(format!("extremal_{i:03}.hg")), w).map_err(io)?;
    }
    for (i, v) in report.violations.iter().enumerate() {
        std::fs::write(dir.join(format!("violation_{i:03}.hg")), &v.witness).map_err(io)?;
    }
    Ok(())
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error [E_USAGE]: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = run(&cli.command).and_then(|out| match out {
        Output::Text(text) => emit(cli.output.as_deref(), &text).map(|_| false),
        Output::Json { result, violation } => {
            let report = JsonReport {
                schema_version: SCHEMA_VERSION,
                command: &cli.command,
                result,
                timing: Timing { elapsed_seconds: start.elapsed().as_secs_f64() },
            };
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            emit(cli.output.as_deref(), &text).map(|_| violation)
        }
    });
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error [{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}
