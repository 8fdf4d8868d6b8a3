//! Experimental protocol: run orchestration, restarts, budget accounting,
//! trajectory logging, ECDF curves, and average performance scores.

use crate::de::{
    apply_mutation, crossover, plan_mutation, repair_bounds, select_and_archive, CrossoverMethod,
    Individual, MutationStrategy, OperatorConfig, Population,
};
use crate::error::{Error, Result};
use crate::pcm::{create_pcm, ContextBuffers, HyperMap, TrialOutcome};
use crate::problems::Problem;
use crate::rng::{derive_rng, RunRng};
use crate::stats::{rank_sum_test, RankSumOutcome};
use rand::RngCore;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io::Write;

/// Spread threshold below which a population counts as collapsed.
pub const RESTART_TOLERANCE: f64 = 1e-12;

/// Number of geometrically spaced best-so-far checkpoints per run.
pub const CHECKPOINT_COUNT: usize = 100;

/// Default population size: 5 D, except 20 on very low dimensions.
pub fn default_population_size(dimension: usize) -> usize {
    if dimension >= 4 {
        5 * dimension
    } else {
        20
    }
}

/// The 51 target precisions 10^(2 - 0.2 k), k = 0..=50.
#[derive(Debug, Clone)]
pub struct TargetSet {
    values: Vec<f64>,
}

impl Default for TargetSet {
    fn default() -> Self {
        TargetSet {
            values: (0..=50).map(|k| 10f64.powf(2.0 - 0.2 * k as f64)).collect(),
        }
    }
}

impl TargetSet {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The hardest (smallest) target, nominally 1e-8.
    pub fn final_target(&self) -> f64 {
        *self.values.last().expect("non-empty target set")
    }
}

/// Configuration of one (method, operator, problem) cell.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    pub pcm_id: String,
    pub mutation: MutationStrategy,
    pub crossover: CrossoverMethod,
    /// Explicit population size; defaults to the per-dimension rule.
    pub population_size: Option<usize>,
    /// Budget = multiplier * D evaluations.
    pub budget_multiplier: usize,
    pub n_runs: usize,
    pub seed: u64,
    pub restart_enabled: bool,
    pub hyperparams: HyperMap,
}

impl RunConfig {
    pub fn new(pcm_id: &str, mutation: MutationStrategy, crossover: CrossoverMethod) -> Self {
        RunConfig {
            pcm_id: pcm_id.to_string(),
            mutation,
            crossover,
            population_size: None,
            budget_multiplier: 10_000,
            n_runs: 15,
            seed: 42,
            restart_enabled: true,
            hyperparams: HyperMap::new(),
        }
    }

    pub fn population_size_for(&self, dimension: usize) -> usize {
        self.population_size
            .unwrap_or_else(|| default_population_size(dimension))
    }

    pub fn budget_for(&self, dimension: usize) -> u64 {
        (self.budget_multiplier * dimension) as u64
    }

    /// Stable short hash identifying the configuration on a given problem.
    pub fn hash_for(&self, problem: &Problem) -> String {
        let mut hasher = Sha256::new();
        hasher.update(serde_json::to_vec(self).expect("config serializes"));
        hasher.update(problem.id.as_bytes());
        hasher.update(problem.dimension.to_le_bytes());
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// What one run produced.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunTrajectory {
    /// For each target (in TargetSet order), the evaluation count at which it
    /// was first hit, if ever.
    pub target_hits: Vec<Option<u64>>,
    /// Best-so-far error sampled at geometric evaluation checkpoints.
    pub checkpoints: Vec<(u64, f64)>,
    /// Evaluation counts at which restarts fired.
    pub restart_events: Vec<u64>,
    pub final_error: f64,
    /// Total charged evaluations.
    pub evaluations: u64,
}

impl RunTrajectory {
    /// Charged evaluations to the final target, censored at budget + 1.
    pub fn evals_to_final_target(&self, budget: u64) -> u64 {
        self.target_hits
            .last()
            .copied()
            .flatten()
            .unwrap_or(budget + 1)
    }
}

/// Geometric grid of `count` evaluation counts from `lo` to `hi` inclusive.
pub fn geometric_grid(lo: u64, hi: u64, count: usize) -> Vec<u64> {
    let lo = lo.max(1);
    let hi = hi.max(lo);
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    let mut grid: Vec<u64> = (0..count)
        .map(|i| {
            let t = if count > 1 { i as f64 / (count - 1) as f64 } else { 1.0 };
            (a + t * (b - a)).exp().round() as u64
        })
        .collect();
    grid.dedup();
    grid
}

/// Returns true when the population has collapsed: the objective spread is
/// below tolerance, or every coordinate spread is.
pub fn maybe_restart(pop: &Population, tolerance: f64) -> bool {
    let f_min = pop.members.iter().map(|m| m.f).fold(f64::INFINITY, f64::min);
    let f_max = pop
        .members
        .iter()
        .map(|m| m.f)
        .fold(f64::NEG_INFINITY, f64::max);
    if f_max - f_min < tolerance {
        return true;
    }
    let d = pop.members[0].x.len();
    (0..d).all(|j| {
        let lo = pop.members.iter().map(|m| m.x[j]).fold(f64::INFINITY, f64::min);
        let hi = pop
            .members
            .iter()
            .map(|m| m.x[j])
            .fold(f64::NEG_INFINITY, f64::max);
        hi - lo < tolerance
    })
}

/// Bookkeeping shared by the harness and the oracle runner: budget charging,
/// target hits, and checkpoint recording.
pub(crate) struct Meter<'a> {
    problem: &'a Problem,
    targets: &'a TargetSet,
    budget: u64,
    pub evaluations: u64,
    pub best_error: f64,
    target_hits: Vec<Option<u64>>,
    grid: Vec<u64>,
    grid_next: usize,
    checkpoints: Vec<(u64, f64)>,
    restart_events: Vec<u64>,
}

impl<'a> Meter<'a> {
    pub fn new(problem: &'a Problem, targets: &'a TargetSet, n: usize, budget: u64) -> Self {
        Meter {
            problem,
            targets,
            budget,
            evaluations: 0,
            best_error: f64::INFINITY,
            target_hits: vec![None; targets.len()],
            grid: geometric_grid(n as u64, budget, CHECKPOINT_COUNT),
            grid_next: 0,
            checkpoints: Vec::with_capacity(CHECKPOINT_COUNT),
            restart_events: vec![],
        }
    }

    pub fn remaining(&self) -> u64 {
        self.budget - self.evaluations
    }

    /// Charges one evaluation and returns the objective value.
    pub fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        let f = self.problem.evaluate(x)?;
        self.evaluations += 1;
        let error = f - self.problem.f_opt;
        if error < self.best_error {
            self.best_error = error;
            for (k, &target) in self.targets.values().iter().enumerate() {
                if self.target_hits[k].is_none() && error <= target {
                    self.target_hits[k] = Some(self.evaluations);
                }
            }
        }
        while self.grid_next < self.grid.len() && self.evaluations >= self.grid[self.grid_next] {
            self.checkpoints.push((self.grid[self.grid_next], self.best_error));
            self.grid_next += 1;
        }
        Ok(f)
    }

    pub fn final_target_hit(&self) -> bool {
        self.target_hits.last().copied().flatten().is_some()
    }

    pub fn log_restart(&mut self) {
        self.restart_events.push(self.evaluations);
    }

    pub fn finish(mut self) -> RunTrajectory {
        // The best-so-far persists through any unreached checkpoints.
        while self.grid_next < self.grid.len() {
            self.checkpoints.push((self.grid[self.grid_next], self.best_error));
            self.grid_next += 1;
        }
        RunTrajectory {
            target_hits: self.target_hits,
            checkpoints: self.checkpoints,
            restart_events: self.restart_events,
            final_error: self.best_error,
            evaluations: self.evaluations,
        }
    }
}

/// Samples a fresh uniform population and evaluates it through the meter.
pub(crate) fn init_population(
    problem: &Problem,
    n: usize,
    meter: &mut Meter<'_>,
    rng: &mut dyn RngCore,
) -> Result<Population> {
    let mut members = Vec::with_capacity(n);
    for _ in 0..n {
        let x: Vec<f64> = problem
            .bounds
            .iter()
            .map(|&(lo, hi)| {
                let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                lo + u * (hi - lo)
            })
            .collect();
        let f = meter.evaluate(&x)?;
        members.push(Individual {
            x,
            f,
            assigned_f: f64::NAN,
            assigned_c: f64::NAN,
        });
    }
    Ok(Population {
        members,
        archive: vec![],
        generation: 1,
    })
}

/// Executes one run of a parameter-controlled DE on `problem`.
pub fn run(cfg: &RunConfig, problem: &Problem, mut rng: RunRng) -> Result<RunTrajectory> {
    let n = cfg.population_size_for(problem.dimension);
    let budget = cfg.budget_for(problem.dimension);
    if budget < n as u64 {
        return Err(Error::InvalidConfig(format!(
            "budget {budget} below population size {n}"
        )));
    }
    let targets = TargetSet::default();
    let t_max = ((budget / n as u64) as usize).max(1);
    let mut op = OperatorConfig::new(cfg.mutation, cfg.crossover);
    if cfg.mutation.uses_archive() {
        op.archive_cap = n;
    }

    let mut meter = Meter::new(problem, &targets, n, budget);
    let mut pcm = create_pcm(&cfg.pcm_id, &cfg.hyperparams)?;
    let mut pop = init_population(problem, n, &mut meter, &mut rng)?;
    let mut buffers = ContextBuffers::default();
    let mut t = 1usize;

    while meter.remaining() > 0 && !meter.final_target_hit() {
        buffers.fill(&pop);
        let allowance = (meter.remaining() as usize).min(n);
        let mut trials: Vec<Option<Individual>> = vec![None; n];
        {
            let ctx = buffers.context(&pop, t, t_max);
            pcm.begin_generation(&ctx, &mut rng);
            for i in 0..allowance {
                let plan = plan_mutation(&pop, i, &op, &mut rng)?;
                let (f_i, c_i) = pcm.sample(i, plan.base_index, &ctx, &mut rng);
                let mutant = apply_mutation(&pop, &plan, f_i);
                let parent = &pop.members[i];
                let v = crossover(cfg.crossover, &parent.x, &mutant, c_i, &mut rng);
                let v = repair_bounds(v, &parent.x, &problem.bounds);
                let f_u = meter.evaluate(&v)?;
                pcm.report(i, &TrialOutcome::new(parent.f, f_u, f_i, c_i));
                trials[i] = Some(Individual {
                    x: v,
                    f: f_u,
                    assigned_f: f_i,
                    assigned_c: c_i,
                });
                if meter.final_target_hit() {
                    break;
                }
            }
        }
        pop = select_and_archive(pop, trials, op.archive_cap, &mut rng);
        pcm.end_generation(&mut rng);
        t += 1;

        if cfg.restart_enabled
            && !meter.final_target_hit()
            && meter.remaining() >= n as u64
            && maybe_restart(&pop, RESTART_TOLERANCE)
        {
            meter.log_restart();
            pcm = create_pcm(&cfg.pcm_id, &cfg.hyperparams)?;
            pop = init_population(problem, n, &mut meter, &mut rng)?;
            t = 1;
        }
    }
    Ok(meter.finish())
}

/// One scheduled run inside a batch.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunRecord {
    pub config_index: usize,
    pub run_index: usize,
    pub config_hash: String,
    pub pcm_id: String,
    pub mutation: MutationStrategy,
    pub crossover: CrossoverMethod,
    pub problem_id: String,
    pub dimension: usize,
    pub seed: u64,
    pub trajectory: Option<RunTrajectory>,
    pub error: Option<String>,
}

fn execute_one(
    config_index: usize,
    run_index: usize,
    cfg: &RunConfig,
    problem: &Problem,
) -> RunRecord {
    let rng = derive_rng(cfg.seed, config_index as u64, run_index as u64);
    let outcome = run(cfg, problem, rng);
    RunRecord {
        config_index,
        run_index,
        config_hash: cfg.hash_for(problem),
        pcm_id: cfg.pcm_id.clone(),
        mutation: cfg.mutation,
        crossover: cfg.crossover,
        problem_id: problem.id.clone(),
        dimension: problem.dimension,
        seed: cfg.seed,
        trajectory: outcome.as_ref().ok().cloned(),
        error: outcome.err().map(|e| e.to_string()),
    }
}

/// Executes every (config, run) pair. Each run derives an independent RNG
/// stream from (seed, config index, run index), so the result store is
/// byte-identical regardless of `jobs`.
pub fn batch(items: &[(RunConfig, Problem)], jobs: usize) -> Vec<RunRecord> {
    let tasks: Vec<(usize, usize)> = items
        .iter()
        .enumerate()
        .flat_map(|(ci, (cfg, _))| (0..cfg.n_runs).map(move |ri| (ci, ri)))
        .collect();

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool");
        return pool.install(|| {
            tasks
                .par_iter()
                .map(|&(ci, ri)| execute_one(ci, ri, &items[ci].0, &items[ci].1))
                .collect()
        });
    }

    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        tasks
            .iter()
            .map(|&(ci, ri)| execute_one(ci, ri, &items[ci].0, &items[ci].1))
            .collect()
    }
}

/// Proportion of (trajectory, target) pairs hit within b * D evaluations,
/// for each budget point b on the evaluations-per-dimension axis.
pub fn ecdf(
    trajectories: &[&RunTrajectory],
    targets: &TargetSet,
    budget_axis: &[f64],
    dimension: usize,
) -> Result<Vec<(f64, f64)>> {
    if trajectories.is_empty() || targets.is_empty() {
        return Err(Error::EmptyInput("ecdf"));
    }
    let total = (trajectories.len() * targets.len()) as f64;
    Ok(budget_axis
        .iter()
        .map(|&b| {
            let limit = b * dimension as f64;
            let hits = trajectories
                .iter()
                .flat_map(|t| t.target_hits.iter())
                .filter(|h| matches!(h, Some(e) if (*e as f64) <= limit))
                .count();
            (b, hits as f64 / total)
        })
        .collect())
}

/// Average performance score per algorithm. `final_errors[i][g]` holds
/// algorithm i's final errors on problem g, one per run. The penalty of i on
/// g is the fraction of rivals that beat it at p < 0.05 by the rank-sum
/// test; the APS averages penalties over problems. Lower is better.
pub fn aps(final_errors: &[Vec<Vec<f64>>]) -> Result<Vec<f64>> {
    let m = final_errors.len();
    if m < 2 {
        return Err(Error::EmptyInput("aps needs at least two algorithms"));
    }
    let n_problems = final_errors[0].len();
    if n_problems == 0 || final_errors.iter().any(|a| a.len() != n_problems) {
        return Err(Error::InvalidConfig(
            "aps: algorithms must cover the same problems".into(),
        ));
    }
    let mut scores = vec![0.0; m];
    for (i, score) in scores.iter_mut().enumerate() {
        let mut total_penalty = 0.0;
        for g in 0..n_problems {
            let mut beaten_by = 0usize;
            for j in 0..m {
                if j == i {
                    continue;
                }
                if rank_sum_test(&final_errors[j][g], &final_errors[i][g], 0.05)?
                    == RankSumOutcome::ABetter
                {
                    beaten_by += 1;
                }
            }
            total_penalty += beaten_by as f64 / (m - 1) as f64;
        }
        *score = total_penalty / n_problems as f64;
    }
    Ok(scores)
}

/// Writes run records as line-delimited JSON.
pub fn write_records_jsonl<W: Write>(mut w: W, records: &[RunRecord]) -> std::io::Result<()> {
    for record in records {
        serde_json::to_writer(&mut w, record)?;
        writeln!(w)?;
    }
    Ok(())
}

/// Writes an ECDF curve as CSV with a documented header.
pub fn write_ecdf_csv<W: Write>(mut w: W, curve: &[(f64, f64)]) -> std::io::Result<()> {
    writeln!(w, "budget_per_D,proportion")?;
    for (b, p) in curve {
        writeln!(w, "{b},{p}")?;
    }
    Ok(())
}

/// Writes APS rows as CSV with a documented header.
pub fn write_aps_csv<W: Write>(
    mut w: W,
    rows: &[(String, String, f64)],
) -> std::io::Result<()> {
    writeln!(w, "algorithm,problem_group,aps")?;
    for (algorithm, group, score) in rows {
        writeln!(w, "{algorithm},{group},{score}")?;
    }
    Ok(())
}
