//! Greedy approximate oracle: before committing each trial, probe K
//! candidate (F, C) pairs under R repeats of common random numbers and keep
//! the pair whose best probe is lowest, committing that probe's trial.
//! Probe evaluations are counted separately and never charged against the
//! run budget.

use crate::de::{repair_bounds, select_and_archive, CrossoverMethod, Individual, MutationStrategy};
use crate::error::{Error, Result};
use crate::harness::{init_population, maybe_restart, Meter, RunConfig, RunTrajectory, TargetSet, RESTART_TOLERANCE};
use crate::problems::Problem;
use crate::rng::RunRng;
use rand::RngCore;

/// Lookahead width (K candidates) and depth (R repeats per candidate).
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub candidates: usize,
    pub repeats: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { candidates: 100, repeats: 10 }
    }
}

/// A run trajectory plus the uncharged probe-evaluation count.
#[derive(Debug, Clone)]
pub struct OracleTrajectory {
    pub trajectory: RunTrajectory,
    pub probe_evaluations: u64,
}

fn uniform01(rng: &mut dyn RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn uniform_index(rng: &mut dyn RngCore, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// Three donor indices distinct from the target and from each other.
fn donor_triple(rng: &mut dyn RngCore, n: usize, target: usize) -> (usize, usize, usize) {
    let mut pick = |taken: &[usize]| loop {
        let r = uniform_index(rng, n);
        if r != target && !taken.contains(&r) {
            return r;
        }
    };
    let r1 = pick(&[]);
    let r2 = pick(&[r1]);
    let r3 = pick(&[r1, r2]);
    (r1, r2, r3)
}

/// The random numbers shared by all candidates within one repeat.
struct RepeatDraws {
    donors: (usize, usize, usize),
    j_rand: usize,
    mask: Vec<f64>,
}

impl RepeatDraws {
    fn draw(rng: &mut dyn RngCore, n: usize, d: usize, target: usize) -> Self {
        RepeatDraws {
            donors: donor_triple(rng, n, target),
            j_rand: uniform_index(rng, d),
            mask: (0..d).map(|_| uniform01(rng)).collect(),
        }
    }
}

/// Builds the rand/1/bin trial of `(f, c)` under the given shared draws.
fn build_trial(
    parent: &[f64],
    x: &[&[f64]],
    draws: &RepeatDraws,
    f: f64,
    c: f64,
    bounds: &[(f64, f64)],
) -> Vec<f64> {
    let (r1, r2, r3) = draws.donors;
    let v: Vec<f64> = parent
        .iter()
        .enumerate()
        .map(|(j, &pj)| {
            if j == draws.j_rand || draws.mask[j] < c {
                x[r1][j] + f * (x[r2][j] - x[r3][j])
            } else {
                pj
            }
        })
        .collect();
    repair_bounds(v, parent, bounds)
}

/// Executes one oracle-guided DE run; rand/1/bin only.
pub fn gaode_run(
    cfg: &RunConfig,
    oracle: &OracleConfig,
    problem: &Problem,
    mut rng: RunRng,
) -> Result<OracleTrajectory> {
    if cfg.mutation != MutationStrategy::Rand1 || cfg.crossover != CrossoverMethod::Binomial {
        return Err(Error::InvalidConfig(
            "the oracle runner supports rand/1/bin only".into(),
        ));
    }
    if oracle.candidates == 0 || oracle.repeats == 0 {
        return Err(Error::InvalidConfig(
            "oracle needs at least one candidate and one repeat".into(),
        ));
    }
    let n = cfg.population_size_for(problem.dimension);
    let budget = cfg.budget_for(problem.dimension);
    if budget < n as u64 {
        return Err(Error::InvalidConfig(format!(
            "budget {budget} below population size {n}"
        )));
    }
    let targets = TargetSet::default();
    let mut meter = Meter::new(problem, &targets, n, budget);
    let mut pop = init_population(problem, n, &mut meter, &mut rng)?;
    let mut probes = 0u64;
    let d = problem.dimension;

    while meter.remaining() > 0 && !meter.final_target_hit() {
        let allowance = (meter.remaining() as usize).min(n);
        let mut trials: Vec<Option<Individual>> = vec![None; n];
        let x: Vec<&[f64]> = pop.members.iter().map(|m| m.x.as_slice()).collect();
        for i in 0..allowance {
            let parent = &pop.members[i].x;
            // Candidates are shared across repeats; repeat draws are shared
            // across candidates (common random numbers).
            let candidates: Vec<(f64, f64)> = (0..oracle.candidates)
                .map(|_| (uniform01(&mut rng), uniform01(&mut rng)))
                .collect();
            let repeats: Vec<RepeatDraws> = (0..oracle.repeats)
                .map(|_| RepeatDraws::draw(&mut rng, n, d, i))
                .collect();
            // A candidate's score is its best probe over the R repeats:
            // the result that parameter set "would have yielded".
            let mut scores = vec![(f64::INFINITY, 0usize); oracle.candidates];
            for (r, draws) in repeats.iter().enumerate() {
                for (k, &(f, c)) in candidates.iter().enumerate() {
                    let trial = build_trial(parent, &x, draws, f, c, &problem.bounds);
                    let value = problem.evaluate(&trial)?;
                    probes += 1;
                    if value < scores[k].0 {
                        scores[k] = (value, r);
                    }
                }
            }
            // Lowest score wins; ties go to the lowest index.
            let mut best = 0;
            for k in 1..oracle.candidates {
                if scores[k].0 < scores[best].0 {
                    best = k;
                }
            }
            let (f, c) = candidates[best];
            let v = build_trial(parent, &x, &repeats[scores[best].1], f, c, &problem.bounds);
            let f_u = meter.evaluate(&v)?;
            trials[i] = Some(Individual {
                x: v,
                f: f_u,
                assigned_f: f,
                assigned_c: c,
            });
            if meter.final_target_hit() {
                break;
            }
        }
        drop(x);
        pop = select_and_archive(pop, trials, 0, &mut rng);

        if cfg.restart_enabled
            && !meter.final_target_hit()
            && meter.remaining() >= n as u64
            && maybe_restart(&pop, RESTART_TOLERANCE)
        {
            meter.log_restart();
            pop = init_population(problem, n, &mut meter, &mut rng)?;
        }
    }
    Ok(OracleTrajectory {
        trajectory: meter.finish(),
        probe_evaluations: probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_problem;
    use crate::rng::derive_rng;

    fn small_cfg() -> RunConfig {
        let mut cfg = RunConfig::new(
            "f05c09",
            MutationStrategy::Rand1,
            CrossoverMethod::Binomial,
        );
        cfg.population_size = Some(20);
        cfg.budget_multiplier = 100;
        cfg
    }

    #[test]
    fn rejects_other_operators() {
        let problem = make_problem("sphere", 5, 1).unwrap();
        let mut cfg = small_cfg();
        cfg.mutation = MutationStrategy::Best1;
        let err = gaode_run(&cfg, &OracleConfig::default(), &problem, derive_rng(1, 0, 0));
        assert!(err.is_err());
    }

    #[test]
    fn probes_are_not_charged() {
        let problem = make_problem("sphere", 5, 1).unwrap();
        let cfg = small_cfg();
        let oracle = OracleConfig { candidates: 10, repeats: 2 };
        let out = gaode_run(&cfg, &oracle, &problem, derive_rng(2, 0, 0)).unwrap();
        assert!(out.trajectory.evaluations <= cfg.budget_for(5));
        // Every committed trial needed K * R probes.
        let committed = out.trajectory.evaluations - 20;
        assert_eq!(out.probe_evaluations, committed * 20);
    }

    #[test]
    fn oracle_is_deterministic() {
        let problem = make_problem("sphere", 5, 1).unwrap();
        let cfg = small_cfg();
        let oracle = OracleConfig { candidates: 8, repeats: 2 };
        let a = gaode_run(&cfg, &oracle, &problem, derive_rng(3, 0, 0)).unwrap();
        let b = gaode_run(&cfg, &oracle, &problem, derive_rng(3, 0, 0)).unwrap();
        assert_eq!(a.trajectory.final_error, b.trajectory.final_error);
        assert_eq!(a.probe_evaluations, b.probe_evaluations);
    }

    #[test]
    fn oracle_beats_fixed_parameters_on_sphere() {
        let problem = make_problem("sphere", 5, 1).unwrap();
        let cfg = small_cfg();
        let oracle = OracleConfig { candidates: 30, repeats: 3 };
        let with_oracle = gaode_run(&cfg, &oracle, &problem, derive_rng(4, 0, 0)).unwrap();
        let plain = crate::harness::run(&cfg, &problem, derive_rng(4, 0, 0)).unwrap();
        assert!(with_oracle.trajectory.final_error <= plain.final_error);
    }
}
