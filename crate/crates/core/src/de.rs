//! Base differential evolution machinery: population and archive,
//! mutation strategies, crossover methods, pairwise survivor selection,
//! and box-constraint repair.

use crate::error::{Error, Result};
use rand::RngCore;
use serde::{Deserialize, Serialize};

/// One population member: decision vector, objective value, and the control
/// parameters used to create it.
#[derive(Debug, Clone)]
pub struct Individual {
    pub x: Vec<f64>,
    pub f: f64,
    pub assigned_f: f64,
    pub assigned_c: f64,
}

/// The population, its external archive of replaced parents, and the
/// generation counter.
#[derive(Debug, Clone)]
pub struct Population {
    pub members: Vec<Individual>,
    pub archive: Vec<Individual>,
    pub generation: usize,
}

impl Population {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn best_index(&self) -> usize {
        let mut best = 0;
        for i in 1..self.members.len() {
            if self.members[i].f < self.members[best].f {
                best = i;
            }
        }
        best
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MutationStrategy {
    Rand1,
    Rand2,
    Best1,
    Best2,
    CurrentToRand1,
    CurrentToBest1,
    CurrentToPBest1,
    RandToPBest1,
}

impl MutationStrategy {
    pub const ALL: [MutationStrategy; 8] = [
        MutationStrategy::Rand1,
        MutationStrategy::Rand2,
        MutationStrategy::Best1,
        MutationStrategy::Best2,
        MutationStrategy::CurrentToRand1,
        MutationStrategy::CurrentToBest1,
        MutationStrategy::CurrentToPBest1,
        MutationStrategy::RandToPBest1,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MutationStrategy::Rand1 => "rand1",
            MutationStrategy::Rand2 => "rand2",
            MutationStrategy::Best1 => "best1",
            MutationStrategy::Best2 => "best2",
            MutationStrategy::CurrentToRand1 => "current-to-rand1",
            MutationStrategy::CurrentToBest1 => "current-to-best1",
            MutationStrategy::CurrentToPBest1 => "current-to-pbest1",
            MutationStrategy::RandToPBest1 => "rand-to-pbest1",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|m| m.id() == s)
            .ok_or_else(|| Error::UnknownMutation(s.to_string()))
    }

    /// Number of mutually distinct donor indices drawn from the population.
    fn donors_needed(self) -> usize {
        match self {
            MutationStrategy::Rand1 => 3,
            MutationStrategy::Rand2 => 5,
            MutationStrategy::Best1 => 2,
            MutationStrategy::Best2 => 4,
            MutationStrategy::CurrentToRand1 => 3,
            MutationStrategy::CurrentToBest1 => 2,
            MutationStrategy::CurrentToPBest1 => 1,
            MutationStrategy::RandToPBest1 => 2,
        }
    }

    pub fn uses_archive(self) -> bool {
        matches!(
            self,
            MutationStrategy::CurrentToPBest1 | MutationStrategy::RandToPBest1
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossoverMethod {
    Binomial,
    Exponential,
    ShuffledExponential,
}

impl CrossoverMethod {
    pub const ALL: [CrossoverMethod; 3] = [
        CrossoverMethod::Binomial,
        CrossoverMethod::Exponential,
        CrossoverMethod::ShuffledExponential,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CrossoverMethod::Binomial => "bin",
            CrossoverMethod::Exponential => "exp",
            CrossoverMethod::ShuffledExponential => "sec",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::UnknownCrossover(s.to_string()))
    }
}

/// Variation-operator configuration shared by all members of a run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperatorConfig {
    pub mutation: MutationStrategy,
    pub crossover: CrossoverMethod,
    /// Fraction of the population eligible as `pbest`, in (0, 1].
    pub p_best_fraction: f64,
    pub archive_cap: usize,
}

impl OperatorConfig {
    pub fn new(mutation: MutationStrategy, crossover: CrossoverMethod) -> Self {
        OperatorConfig {
            mutation,
            crossover,
            p_best_fraction: 0.05,
            archive_cap: 0,
        }
    }
}

/// A fully drawn set of donor choices for one mutation. The scale factor is
/// applied afterwards, so control parameters can be sampled once the base
/// vector is known.
#[derive(Debug, Clone)]
pub struct MutationPlan {
    strategy: MutationStrategy,
    target: usize,
    /// Index of the base vector in the population (used by rank-based methods).
    pub base_index: usize,
    donors: Vec<usize>,
    pbest: Option<usize>,
    /// Index into members ++ archive for the archive-eligible donor.
    union_donor: Option<usize>,
}

fn draw_distinct(
    rng: &mut dyn RngCore,
    upper: usize,
    exclude: &[usize],
    count: usize,
) -> Option<Vec<usize>> {
    let mut picked = Vec::with_capacity(count);
    let available = upper - exclude.iter().filter(|&&e| e < upper).count();
    if available < count {
        return None;
    }
    while picked.len() < count {
        let r = (rng.next_u64() % upper as u64) as usize;
        if exclude.contains(&r) || picked.contains(&r) {
            continue;
        }
        picked.push(r);
    }
    Some(picked)
}

/// Draws donor indices for mutating member `target`. All draws are distinct
/// from each other and from the target and special vectors involved.
pub fn plan_mutation(
    pop: &Population,
    target: usize,
    cfg: &OperatorConfig,
    rng: &mut dyn RngCore,
) -> Result<MutationPlan> {
    let n = pop.size();
    let strategy = cfg.mutation;
    let mut exclude = vec![target];

    let pbest = if strategy.uses_archive() {
        let p_count = ((cfg.p_best_fraction * n as f64).ceil() as usize).max(1);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            pop.members[a]
                .f
                .partial_cmp(&pop.members[b].f)
                .unwrap()
                .then(a.cmp(&b))
        });
        let pick = (rng.next_u64() % p_count as u64) as usize;
        Some(order[pick])
    } else {
        None
    };
    if matches!(
        strategy,
        MutationStrategy::Best1 | MutationStrategy::Best2 | MutationStrategy::CurrentToBest1
    ) {
        let best = pop.best_index();
        if !exclude.contains(&best) {
            exclude.push(best);
        }
    }
    if let Some(p) = pbest {
        if !exclude.contains(&p) {
            exclude.push(p);
        }
    }

    let needed = strategy.donors_needed();
    let donors = draw_distinct(rng, n, &exclude, needed).ok_or(Error::PopulationTooSmall {
        strategy: strategy.id(),
        n,
        required: needed + exclude.len(),
    })?;

    // The final difference donor of the pbest strategies may come from the
    // archive as well as the population.
    let union_donor = if strategy.uses_archive() {
        let union = n + pop.archive.len();
        let mut all_excluded = exclude.clone();
        all_excluded.extend_from_slice(&donors);
        let picked =
            draw_distinct(rng, union, &all_excluded, 1).ok_or(Error::PopulationTooSmall {
                strategy: strategy.id(),
                n,
                required: needed + exclude.len() + 1,
            })?;
        Some(picked[0])
    } else {
        None
    };

    let base_index = match strategy {
        MutationStrategy::Rand1 | MutationStrategy::Rand2 | MutationStrategy::RandToPBest1 => {
            donors[0]
        }
        MutationStrategy::Best1 | MutationStrategy::Best2 => pop.best_index(),
        MutationStrategy::CurrentToRand1
        | MutationStrategy::CurrentToBest1
        | MutationStrategy::CurrentToPBest1 => target,
    };

    Ok(MutationPlan {
        strategy,
        target,
        base_index,
        donors,
        pbest,
        union_donor,
    })
}

fn union_vec<'a>(pop: &'a Population, idx: usize) -> &'a [f64] {
    if idx < pop.size() {
        &pop.members[idx].x
    } else {
        &pop.archive[idx - pop.size()].x
    }
}

/// Applies the planned mutation with scale factor `f`, returning the mutant.
pub fn apply_mutation(pop: &Population, plan: &MutationPlan, f: f64) -> Vec<f64> {
    let m = &pop.members;
    let d = m[plan.target].x.len();
    let x = |i: usize| &m[i].x;
    let mut v = vec![0.0; d];
    match plan.strategy {
        MutationStrategy::Rand1 => {
            let (r1, r2, r3) = (plan.donors[0], plan.donors[1], plan.donors[2]);
            for j in 0..d {
                v[j] = x(r1)[j] + f * (x(r2)[j] - x(r3)[j]);
            }
        }
        MutationStrategy::Rand2 => {
            let dn = &plan.donors;
            for j in 0..d {
                v[j] = x(dn[0])[j]
                    + f * (x(dn[1])[j] - x(dn[2])[j])
                    + f * (x(dn[3])[j] - x(dn[4])[j]);
            }
        }
        MutationStrategy::Best1 => {
            let best = pop.best_index();
            let (r1, r2) = (plan.donors[0], plan.donors[1]);
            for j in 0..d {
                v[j] = x(best)[j] + f * (x(r1)[j] - x(r2)[j]);
            }
        }
        MutationStrategy::Best2 => {
            let best = pop.best_index();
            let dn = &plan.donors;
            for j in 0..d {
                v[j] = x(best)[j]
                    + f * (x(dn[0])[j] - x(dn[1])[j])
                    + f * (x(dn[2])[j] - x(dn[3])[j]);
            }
        }
        MutationStrategy::CurrentToRand1 => {
            let i = plan.target;
            let dn = &plan.donors;
            for j in 0..d {
                v[j] = x(i)[j] + f * (x(dn[0])[j] - x(i)[j]) + f * (x(dn[1])[j] - x(dn[2])[j]);
            }
        }
        MutationStrategy::CurrentToBest1 => {
            let i = plan.target;
            let best = pop.best_index();
            let (r1, r2) = (plan.donors[0], plan.donors[1]);
            for j in 0..d {
                v[j] = x(i)[j] + f * (x(best)[j] - x(i)[j]) + f * (x(r1)[j] - x(r2)[j]);
            }
        }
        MutationStrategy::CurrentToPBest1 => {
            let i = plan.target;
            let pb = plan.pbest.expect("pbest planned");
            let r1 = plan.donors[0];
            let r2 = union_vec(pop, plan.union_donor.expect("union donor planned"));
            for j in 0..d {
                v[j] = x(i)[j] + f * (x(pb)[j] - x(i)[j]) + f * (x(r1)[j] - r2[j]);
            }
        }
        MutationStrategy::RandToPBest1 => {
            let pb = plan.pbest.expect("pbest planned");
            let (r1, r2) = (plan.donors[0], plan.donors[1]);
            let r3 = union_vec(pop, plan.union_donor.expect("union donor planned"));
            for j in 0..d {
                v[j] = x(r1)[j] + f * (x(pb)[j] - x(r1)[j]) + f * (x(r2)[j] - r3[j]);
            }
        }
    }
    v
}

/// Convenience wrapper: plan and apply in one call.
pub fn mutate(
    pop: &Population,
    target: usize,
    f: f64,
    cfg: &OperatorConfig,
    rng: &mut dyn RngCore,
) -> Result<(Vec<f64>, usize)> {
    let plan = plan_mutation(pop, target, cfg, rng)?;
    let v = apply_mutation(pop, &plan, f);
    Ok((v, plan.base_index))
}

fn uniform(rng: &mut dyn RngCore) -> f64 {
    // 53-bit uniform in [0, 1).
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Binomial crossover: each component comes from the mutant with probability
/// `c`; one uniformly chosen component always does.
pub fn crossover_bin(parent: &[f64], mutant: &[f64], c: f64, rng: &mut dyn RngCore) -> Vec<f64> {
    let d = parent.len();
    let j_rand = (rng.next_u64() % d as u64) as usize;
    (0..d)
        .map(|j| {
            if j == j_rand || uniform(rng) < c {
                mutant[j]
            } else {
                parent[j]
            }
        })
        .collect()
}

/// Length of the copied block: L >= k with probability c^(k-1), capped at d.
fn exponential_block_len(c: f64, d: usize, rng: &mut dyn RngCore) -> usize {
    let mut len = 1;
    while len < d && uniform(rng) < c {
        len += 1;
    }
    len
}

/// Exponential crossover: a circular block of consecutive components starting
/// at a uniform index is copied from the mutant.
pub fn crossover_exp(parent: &[f64], mutant: &[f64], c: f64, rng: &mut dyn RngCore) -> Vec<f64> {
    let d = parent.len();
    let start = (rng.next_u64() % d as u64) as usize;
    let len = exponential_block_len(c, d, rng);
    let mut trial = parent.to_vec();
    for k in 0..len {
        let j = (start + k) % d;
        trial[j] = mutant[j];
    }
    trial
}

/// Shuffled exponential crossover: the same block-length law applied in a
/// uniformly shuffled index space, which removes positional bias.
pub fn crossover_sec(parent: &[f64], mutant: &[f64], c: f64, rng: &mut dyn RngCore) -> Vec<f64> {
    let d = parent.len();
    let mut order: Vec<usize> = (0..d).collect();
    // Fisher-Yates shuffle of the index space.
    for k in (1..d).rev() {
        let j = (rng.next_u64() % (k as u64 + 1)) as usize;
        order.swap(k, j);
    }
    let start = (rng.next_u64() % d as u64) as usize;
    let len = exponential_block_len(c, d, rng);
    let mut trial = parent.to_vec();
    for k in 0..len {
        let j = order[(start + k) % d];
        trial[j] = mutant[j];
    }
    trial
}

pub fn crossover(
    method: CrossoverMethod,
    parent: &[f64],
    mutant: &[f64],
    c: f64,
    rng: &mut dyn RngCore,
) -> Vec<f64> {
    match method {
        CrossoverMethod::Binomial => crossover_bin(parent, mutant, c, rng),
        CrossoverMethod::Exponential => crossover_exp(parent, mutant, c, rng),
        CrossoverMethod::ShuffledExponential => crossover_sec(parent, mutant, c, rng),
    }
}

/// Midpoint repair: an out-of-bounds component moves to the midpoint between
/// the parent's component and the violated bound.
pub fn repair_bounds(mut v: Vec<f64>, parent: &[f64], bounds: &[(f64, f64)]) -> Vec<f64> {
    for j in 0..v.len() {
        let (lo, hi) = bounds[j];
        if v[j] < lo {
            v[j] = (parent[j] + lo) / 2.0;
        } else if v[j] > hi {
            v[j] = (parent[j] + hi) / 2.0;
        }
    }
    v
}

/// Pairwise survivor selection with archive bookkeeping. `trials[i]`, when
/// present, competes with member `i`; a tie goes to the trial. Replaced
/// parents enter the archive; uniform-random eviction keeps it at capacity.
pub fn select_and_archive(
    mut pop: Population,
    trials: Vec<Option<Individual>>,
    archive_cap: usize,
    rng: &mut dyn RngCore,
) -> Population {
    assert!(trials.len() <= pop.size());
    for (i, trial) in trials.into_iter().enumerate() {
        let Some(trial) = trial else { continue };
        if trial.f <= pop.members[i].f {
            let parent = std::mem::replace(&mut pop.members[i], trial);
            if archive_cap > 0 {
                pop.archive.push(parent);
            }
        }
    }
    while pop.archive.len() > archive_cap {
        let victim = (rng.next_u64() % pop.archive.len() as u64) as usize;
        pop.archive.swap_remove(victim);
    }
    pop.generation += 1;
    pop
}
