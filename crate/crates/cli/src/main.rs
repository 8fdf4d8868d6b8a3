//! Command-line front end: experiment configuration, execution, and
//! emission of analysis-ready data files.

use clap::{Parser, Subcommand, ValueEnum};
use pcmlab::de::{CrossoverMethod, MutationStrategy};
use pcmlab::gao::{gaode_run, OracleConfig};
use pcmlab::harness::{
    aps, batch, ecdf, geometric_grid, write_aps_csv, write_ecdf_csv, write_records_jsonl,
    RunConfig, RunRecord, RunTrajectory, TargetSet,
};
use pcmlab::pcm::{pcm_descriptor, registry, HyperMap};
use pcmlab::problems::{make_problem, suite_function_ids, Problem};
use pcmlab::rng::derive_rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_RUN_FAILURES: u8 = 1;
const EXIT_CONFIG_ERROR: u8 = 2;

/// Environment variable naming the default output root.
const OUTPUT_ENV: &str = "PCMLAB_OUTPUT";

#[derive(Parser)]
#[command(name = "pcmlab", about = "Parameter-control laboratory for differential evolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the experiment described by a TOML spec file.
    Run {
        spec: PathBuf,
        /// Worker threads for the batch executor.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Output root; overrides the spec file and PCMLAB_OUTPUT.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Execute the oracle runner (rand/1/bin only) on a spec file.
    Gaode {
        spec: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Aggregate run records under a directory into CSV data files.
    Analyze {
        dir: PathBuf,
        #[arg(long, value_enum)]
        mode: AnalyzeMode,
    },
    /// Print the method catalog with taxonomy columns and defaults.
    List,
}

#[derive(Copy, Clone, ValueEnum)]
enum AnalyzeMode {
    Ecdf,
    Aps,
}

/// Either a keyword ("all", "all16", "suite") or an explicit list.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Selection {
    Keyword(String),
    List(Vec<String>),
}

/// The experiment spec file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExperimentSpec {
    pcms: Selection,
    /// Operator names "mutation/crossover", or the keyword "all16"
    /// (8 mutation strategies x {bin, sec}).
    operators: Selection,
    dimensions: Vec<usize>,
    problems: Selection,
    #[serde(default = "default_runs")]
    runs: usize,
    #[serde(default = "default_seed")]
    seed: u64,
    #[serde(default = "default_budget_multiplier")]
    budget_multiplier: usize,
    #[serde(default = "default_restart")]
    restart: bool,
    #[serde(default)]
    output: Option<PathBuf>,
    /// Per-method hyperparameter overrides.
    #[serde(default)]
    hyperparams: BTreeMap<String, HyperMap>,
}

fn default_runs() -> usize {
    15
}
fn default_seed() -> u64 {
    42
}
fn default_budget_multiplier() -> usize {
    10_000
}
fn default_restart() -> bool {
    true
}

#[derive(Debug)]
struct ConfigError(String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn load_spec(path: &Path) -> Result<ExperimentSpec, ConfigError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
}

fn resolve_pcms(sel: &Selection) -> Result<Vec<String>, ConfigError> {
    let valid: Vec<&str> = registry().iter().map(|d| d.id).collect();
    match sel {
        Selection::Keyword(k) if k == "all" => Ok(valid.iter().map(|s| s.to_string()).collect()),
        Selection::Keyword(k) => Err(ConfigError(format!(
            "unknown pcm keyword '{k}'; use \"all\" or a list of: {}",
            valid.join(", ")
        ))),
        Selection::List(ids) => {
            for id in ids {
                if !valid.contains(&id.as_str()) {
                    return Err(ConfigError(format!(
                        "unknown pcm '{id}'; valid names: {}",
                        valid.join(", ")
                    )));
                }
            }
            Ok(ids.clone())
        }
    }
}

fn resolve_operators(
    sel: &Selection,
) -> Result<Vec<(MutationStrategy, CrossoverMethod)>, ConfigError> {
    let valid_names = || -> String {
        MutationStrategy::ALL
            .iter()
            .flat_map(|m| CrossoverMethod::ALL.iter().map(move |c| format!("{}/{}", m.id(), c.id())))
            .collect::<Vec<_>>()
            .join(", ")
    };
    match sel {
        Selection::Keyword(k) if k == "all16" => Ok(MutationStrategy::ALL
            .iter()
            .flat_map(|&m| {
                [CrossoverMethod::Binomial, CrossoverMethod::ShuffledExponential]
                    .into_iter()
                    .map(move |c| (m, c))
            })
            .collect()),
        Selection::Keyword(k) => Err(ConfigError(format!(
            "unknown operator keyword '{k}'; use \"all16\" or a list of: {}",
            valid_names()
        ))),
        Selection::List(names) => names
            .iter()
            .map(|name| {
                let (m, c) = name.split_once('/').ok_or_else(|| {
                    ConfigError(format!(
                        "operator '{name}' is not 'mutation/crossover'; valid: {}",
                        valid_names()
                    ))
                })?;
                let m = MutationStrategy::parse(m)
                    .map_err(|_| ConfigError(format!("unknown operator '{name}'; valid: {}", valid_names())))?;
                let c = CrossoverMethod::parse(c)
                    .map_err(|_| ConfigError(format!("unknown operator '{name}'; valid: {}", valid_names())))?;
                Ok((m, c))
            })
            .collect(),
    }
}

fn resolve_problems(sel: &Selection) -> Result<Vec<String>, ConfigError> {
    let valid = suite_function_ids();
    match sel {
        Selection::Keyword(k) if k == "suite" => {
            Ok(valid.iter().map(|s| s.to_string()).collect())
        }
        Selection::Keyword(k) => Err(ConfigError(format!(
            "unknown problem keyword '{k}'; use \"suite\" or a list of: {}",
            valid.join(", ")
        ))),
        Selection::List(ids) => {
            for id in ids {
                if !valid.contains(&id.as_str()) {
                    return Err(ConfigError(format!(
                        "unknown problem '{id}'; valid names: {}",
                        valid.join(", ")
                    )));
                }
            }
            Ok(ids.clone())
        }
    }
}

/// Expands a spec into the ordered (config, problem) list. The expansion is
/// a pure function of the spec, so reruns are byte-identical.
fn expand(spec: &ExperimentSpec) -> Result<Vec<(RunConfig, Problem)>, ConfigError> {
    let pcms = resolve_pcms(&spec.pcms)?;
    let operators = resolve_operators(&spec.operators)?;
    let problems = resolve_problems(&spec.problems)?;
    if spec.dimensions.is_empty() {
        return Err(ConfigError("dimensions must be non-empty".into()));
    }
    let mut items = Vec::new();
    for pcm_id in &pcms {
        let descriptor = pcm_descriptor(pcm_id)
            .map_err(|e| ConfigError(e.to_string()))?;
        let hypers = spec.hyperparams.get(pcm_id).cloned().unwrap_or_default();
        descriptor
            .resolve(&hypers)
            .map_err(|e| ConfigError(e.to_string()))?;
        for &(mutation, crossover) in &operators {
            for &dimension in &spec.dimensions {
                for problem_id in &problems {
                    let problem = make_problem(problem_id, dimension, spec.seed)
                        .map_err(|e| ConfigError(e.to_string()))?;
                    let mut cfg = RunConfig::new(pcm_id, mutation, crossover);
                    cfg.budget_multiplier = spec.budget_multiplier;
                    cfg.n_runs = spec.runs;
                    cfg.seed = spec.seed;
                    // Time-schedule methods lose their schedule on restart
                    // and always run with restarts disabled.
                    cfg.restart_enabled = spec.restart && descriptor.restart_compatible;
                    cfg.hyperparams = hypers.clone();
                    items.push((cfg, problem));
                }
            }
        }
    }
    Ok(items)
}

fn output_root(flag: Option<PathBuf>, spec: &ExperimentSpec) -> PathBuf {
    flag.or_else(|| spec.output.clone())
        .or_else(|| std::env::var_os(OUTPUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("results"))
}

fn cell_dir(root: &Path, cfg: &RunConfig, problem: &Problem) -> PathBuf {
    root.join(&cfg.pcm_id)
        .join(format!("{}-{}", cfg.mutation.id(), cfg.crossover.id()))
        .join(&problem.id)
        .join(format!("D{}", problem.dimension))
}

#[derive(Serialize)]
struct ManifestRow {
    config_hash: String,
    pcm_id: String,
    mutation: &'static str,
    crossover: &'static str,
    problem: String,
    dimension: usize,
    records: String,
}

fn cmd_run(spec_path: &Path, jobs: usize, output: Option<PathBuf>) -> Result<u8, ConfigError> {
    let spec = load_spec(spec_path)?;
    let items = expand(&spec)?;
    let root = output_root(output, &spec);
    let records = batch(&items, jobs);

    // One directory per (pcm, operator, problem, D); records serialized
    // through this single writer loop.
    let mut manifest = Vec::new();
    for (ci, (cfg, problem)) in items.iter().enumerate() {
        let dir = cell_dir(&root, cfg, problem);
        fs::create_dir_all(&dir).map_err(|e| ConfigError(format!("mkdir {}: {e}", dir.display())))?;
        let path = dir.join("records.jsonl");
        let cell: Vec<RunRecord> = records
            .iter()
            .filter(|r| r.config_index == ci)
            .cloned()
            .collect();
        let file = fs::File::create(&path)
            .map_err(|e| ConfigError(format!("create {}: {e}", path.display())))?;
        write_records_jsonl(file, &cell)
            .map_err(|e| ConfigError(format!("write {}: {e}", path.display())))?;
        manifest.push(ManifestRow {
            config_hash: cfg.hash_for(problem),
            pcm_id: cfg.pcm_id.clone(),
            mutation: cfg.mutation.id(),
            crossover: cfg.crossover.id(),
            problem: problem.id.clone(),
            dimension: problem.dimension,
            records: path.strip_prefix(&root).unwrap().display().to_string(),
        });
    }
    let manifest_path = root.join("manifest.json");
    fs::write(&manifest_path, serde_json::to_string_pretty(&manifest).unwrap())
        .map_err(|e| ConfigError(format!("write {}: {e}", manifest_path.display())))?;

    let failures = records.iter().filter(|r| r.error.is_some()).count();
    if failures > 0 {
        eprintln!("{failures} of {} runs failed", records.len());
        Ok(EXIT_RUN_FAILURES)
    } else {
        println!("{} runs written under {}", records.len(), root.display());
        Ok(EXIT_OK)
    }
}

/// A harness record extended with the oracle's probe counter.
#[derive(Serialize)]
struct GaodeRecord {
    config_hash: String,
    problem_id: String,
    dimension: usize,
    run_index: usize,
    seed: u64,
    trajectory: Option<RunTrajectory>,
    probe_evaluations: u64,
    error: Option<String>,
}

fn cmd_gaode(spec_path: &Path, output: Option<PathBuf>) -> Result<u8, ConfigError> {
    let spec = load_spec(spec_path)?;
    let problems = resolve_problems(&spec.problems)?;
    let root = output_root(output, &spec);
    let oracle = OracleConfig::default();
    let mut failures = 0usize;
    let mut total = 0usize;
    for &dimension in &spec.dimensions {
        for problem_id in &problems {
            let problem = make_problem(problem_id, dimension, spec.seed)
                .map_err(|e| ConfigError(e.to_string()))?;
            let mut cfg = RunConfig::new(
                "gaode",
                MutationStrategy::Rand1,
                CrossoverMethod::Binomial,
            );
            cfg.budget_multiplier = spec.budget_multiplier;
            cfg.n_runs = spec.runs;
            cfg.seed = spec.seed;
            cfg.restart_enabled = spec.restart;
            let dir = root
                .join("gaode")
                .join("rand1-bin")
                .join(problem_id)
                .join(format!("D{dimension}"));
            fs::create_dir_all(&dir)
                .map_err(|e| ConfigError(format!("mkdir {}: {e}", dir.display())))?;
            let mut rows = Vec::new();
            for run_index in 0..spec.runs {
                let rng = derive_rng(spec.seed, total as u64, run_index as u64);
                let outcome = gaode_run(&cfg, &oracle, &problem, rng);
                if outcome.is_err() {
                    failures += 1;
                }
                rows.push(GaodeRecord {
                    config_hash: cfg.hash_for(&problem),
                    problem_id: problem_id.clone(),
                    dimension,
                    run_index,
                    seed: spec.seed,
                    trajectory: outcome.as_ref().ok().map(|o| o.trajectory.clone()),
                    probe_evaluations: outcome
                        .as_ref()
                        .ok()
                        .map(|o| o.probe_evaluations)
                        .unwrap_or(0),
                    error: outcome.err().map(|e| e.to_string()),
                });
            }
            let path = dir.join("records.jsonl");
            let mut text = String::new();
            for row in &rows {
                text.push_str(&serde_json::to_string(row).unwrap());
                text.push('\n');
            }
            fs::write(&path, text)
                .map_err(|e| ConfigError(format!("write {}: {e}", path.display())))?;
            total += 1;
        }
    }
    if failures > 0 {
        eprintln!("{failures} oracle runs failed");
        Ok(EXIT_RUN_FAILURES)
    } else {
        println!("oracle records written under {}", root.display());
        Ok(EXIT_OK)
    }
}

fn collect_records(dir: &Path) -> Result<Vec<RunRecord>, ConfigError> {
    let mut records = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        let entries = fs::read_dir(&d)
            .map_err(|e| ConfigError(format!("read {}: {e}", d.display())))?;
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .collect();
        paths.sort();
        for p in paths {
            if p.is_dir() {
                stack.push(p);
            } else if p.file_name().is_some_and(|n| n == "records.jsonl") {
                let text = fs::read_to_string(&p)
                    .map_err(|e| ConfigError(format!("read {}: {e}", p.display())))?;
                for line in text.lines() {
                    // Oracle records have a different shape; skip anything
                    // that is not a harness record.
                    if let Ok(r) = serde_json::from_str::<RunRecord>(line) {
                        records.push(r);
                    }
                }
            }
        }
    }
    if records.is_empty() {
        return Err(ConfigError(format!(
            "no harness records found under {}",
            dir.display()
        )));
    }
    Ok(records)
}

/// Checks an emitted CSV against its documented header and row shape.
fn check_csv_schema(path: &Path, header: &str) -> Result<(), ConfigError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("read {}: {e}", path.display())))?;
    let mut lines = text.lines();
    if lines.next() != Some(header) {
        return Err(ConfigError(format!("{}: bad header", path.display())));
    }
    let n_fields = header.split(',').count();
    for line in lines {
        if line.split(',').count() != n_fields {
            return Err(ConfigError(format!("{}: bad row '{line}'", path.display())));
        }
    }
    Ok(())
}

fn cmd_analyze(dir: &Path, mode: AnalyzeMode) -> Result<u8, ConfigError> {
    let records = collect_records(dir)?;
    match mode {
        AnalyzeMode::Ecdf => {
            let dims: std::collections::BTreeSet<usize> =
                records.iter().map(|r| r.dimension).collect();
            if dims.len() > 1 {
                return Err(ConfigError(format!(
                    "a single ECDF needs one dimension, found {dims:?}; analyze per-D directories separately"
                )));
            }
            let dimension = *dims.iter().next().unwrap();
            let budget = records
                .iter()
                .filter_map(|r| r.trajectory.as_ref())
                .filter_map(|t| t.checkpoints.last().map(|&(e, _)| e))
                .max()
                .unwrap_or(1);
            let axis: Vec<f64> = geometric_grid(1, budget / dimension as u64, 100)
                .into_iter()
                .map(|b| b as f64)
                .collect();
            let targets = TargetSet::default();
            let mut algorithms: std::collections::BTreeSet<&str> =
                records.iter().map(|r| r.pcm_id.as_str()).collect();
            let algorithms: Vec<String> =
                std::mem::take(&mut algorithms).into_iter().map(String::from).collect();
            for algorithm in &algorithms {
                let trajectories: Vec<&RunTrajectory> = records
                    .iter()
                    .filter(|r| &r.pcm_id == algorithm)
                    .filter_map(|r| r.trajectory.as_ref())
                    .collect();
                let curve = ecdf(&trajectories, &targets, &axis, dimension)
                    .map_err(|e| ConfigError(e.to_string()))?;
                let path = dir.join(format!("ecdf_{algorithm}.csv"));
                let file = fs::File::create(&path)
                    .map_err(|e| ConfigError(format!("create {}: {e}", path.display())))?;
                write_ecdf_csv(file, &curve)
                    .map_err(|e| ConfigError(format!("write {}: {e}", path.display())))?;
                check_csv_schema(&path, "budget_per_D,proportion")?;
                println!("{}", path.display());
            }
        }
        AnalyzeMode::Aps => {
            // One APS table per (dimension, operator).
            let groups: std::collections::BTreeSet<(usize, String)> = records
                .iter()
                .map(|r| {
                    (
                        r.dimension,
                        format!("{}-{}", r.mutation.id(), r.crossover.id()),
                    )
                })
                .collect();
            for (dimension, operator) in groups {
                let in_group: Vec<&RunRecord> = records
                    .iter()
                    .filter(|r| {
                        r.dimension == dimension
                            && format!("{}-{}", r.mutation.id(), r.crossover.id()) == operator
                    })
                    .collect();
                let algorithms: Vec<String> = in_group
                    .iter()
                    .map(|r| r.pcm_id.clone())
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                if algorithms.len() < 2 {
                    return Err(ConfigError(
                        "aps needs at least two algorithms in each group".into(),
                    ));
                }
                let problems: Vec<String> = in_group
                    .iter()
                    .map(|r| r.problem_id.clone())
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let errors: Vec<Vec<Vec<f64>>> = algorithms
                    .iter()
                    .map(|a| {
                        problems
                            .iter()
                            .map(|p| {
                                in_group
                                    .iter()
                                    .filter(|r| &r.pcm_id == a && &r.problem_id == p)
                                    .filter_map(|r| r.trajectory.as_ref())
                                    .map(|t| t.final_error)
                                    .collect()
                            })
                            .collect()
                    })
                    .collect();
                let scores = aps(&errors).map_err(|e| ConfigError(e.to_string()))?;
                let rows: Vec<(String, String, f64)> = algorithms
                    .iter()
                    .zip(&scores)
                    .map(|(a, &s)| (a.clone(), "all".to_string(), s))
                    .collect();
                let path = dir.join(format!("aps_D{dimension}_{operator}.csv"));
                let file = fs::File::create(&path)
                    .map_err(|e| ConfigError(format!("create {}: {e}", path.display())))?;
                write_aps_csv(file, &rows)
                    .map_err(|e| ConfigError(format!("write {}: {e}", path.display())))?;
                check_csv_schema(&path, "algorithm,problem_group,aps")?;
                println!("{}", path.display());
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_list() -> u8 {
    println!(
        "{:<8} {:<12} {:<5} {:<7} {:<7} {:<4} {:<4} {:<4} {:<5} {:<5} {:<8} defaults",
        "id", "name", "class", "F-ctrl", "C-ctrl", "S/O", "C/D", "S/M", "info", "inh.", "restart"
    );
    for d in registry() {
        let defaults = d
            .hypers
            .iter()
            .map(|h| format!("{}={}", h.name, h.default))
            .collect::<Vec<_>>()
            .join(" ");
        println!(
            "{:<8} {:<12} {:<5} {:<7} {:<7} {:<4} {:<4} {:<4} {:<5} {:<5} {:<8} {}",
            d.id,
            d.name,
            d.class.label(),
            d.f_control,
            d.c_control,
            if d.success_observation.is_empty() { "-" } else { d.success_observation },
            d.value_type,
            d.cardinality,
            d.info,
            if d.inheritance { "yes" } else { "no" },
            if d.restart_compatible { "yes" } else { "no" },
            defaults
        );
    }
    EXIT_OK
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { spec, jobs, output } => cmd_run(&spec, jobs, output),
        Command::Gaode { spec, output } => cmd_gaode(&spec, output),
        Command::Analyze { dir, mode } => cmd_analyze(&dir, mode),
        Command::List => Ok(cmd_list()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG_ERROR)
        }
    }
}
