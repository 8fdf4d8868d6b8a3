//! Methods selecting (F, C) pairs from predefined discrete pools, with
//! success counters steering the selection.

use super::{randu, GenerationContext, ParameterControl, TrialOutcome};
use rand::RngCore;

/// The nine competitive pairs q^1 = (0.5, 0) .. q^9 = (1, 1).
pub const CDE_PAIRS: [(f64, f64); 9] = [
    (0.5, 0.0),
    (0.5, 0.5),
    (0.5, 1.0),
    (0.8, 0.0),
    (0.8, 0.5),
    (0.8, 1.0),
    (1.0, 0.0),
    (1.0, 0.5),
    (1.0, 1.0),
];

/// Parameter pools of the ensemble method (6 x 9 grid).
pub const EPSDE_F_POOL: [f64; 6] = [0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
pub const EPSDE_C_POOL: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// Parameter pools of the pruning method (7 x 9 = 63 pairs).
pub const DEDPS_F_POOL: [f64; 7] = [0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];
pub const DEDPS_C_POOL: [f64; 9] = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];

/// Competitive pair selection: pair q^k is drawn with probability
/// s_k = (n_succ_k + n0) / sum_l (n_succ_l + n0); when any s_k falls below
/// delta, all success counters are reset.
#[derive(Debug, Clone)]
pub struct Cde {
    pub n0: f64,
    pub delta: f64,
    pub(crate) n_succ: [u64; 9],
    pub(crate) assigned: Vec<usize>,
}

impl Default for Cde {
    fn default() -> Self {
        Cde { n0: 2.0, delta: 1.0 / 45.0, n_succ: [0; 9], assigned: vec![] }
    }
}

impl Cde {
    /// Current selection probabilities (they always sum to 1).
    pub fn probabilities(&self) -> [f64; 9] {
        let total: f64 = self.n_succ.iter().map(|&n| n as f64 + self.n0).sum();
        let mut s = [0.0; 9];
        for (k, &n) in self.n_succ.iter().enumerate() {
            s[k] = (n as f64 + self.n0) / total;
        }
        s
    }
}

impl ParameterControl for Cde {
    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        if self.assigned.len() <= member {
            self.assigned.resize(member + 1, 0);
        }
        let s = self.probabilities();
        let u = randu(rng, 0.0, 1.0);
        let mut acc = 0.0;
        let mut chosen = 8;
        for (k, &p) in s.iter().enumerate() {
            acc += p;
            if u < acc {
                chosen = k;
                break;
            }
        }
        self.assigned[member] = chosen;
        CDE_PAIRS[chosen]
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        if outcome.success {
            if let Some(&k) = self.assigned.get(member) {
                self.n_succ[k] += 1;
            }
        }
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        if self.probabilities().iter().any(|&s| s < self.delta) {
            self.n_succ = [0; 9];
        }
    }
}

/// Pool pruning: 63 pairs assigned without replacement each generation; at
/// the checkpoint generations the worse-scoring half of the pool is removed.
#[derive(Debug, Clone)]
pub struct Dedps {
    pub checkpoints: Vec<usize>,
    pub(crate) active: Vec<usize>,
    pub(crate) n_succ: Vec<u64>,
    pub(crate) n_total: Vec<u64>,
    pub(crate) assigned: Vec<usize>,
    pub(crate) t: usize,
}

impl Default for Dedps {
    fn default() -> Self {
        let m = DEDPS_F_POOL.len() * DEDPS_C_POOL.len();
        Dedps {
            checkpoints: vec![50, 100, 150, 200],
            active: (0..m).collect(),
            n_succ: vec![0; m],
            n_total: vec![0; m],
            assigned: vec![],
            t: 0,
        }
    }
}

impl Dedps {
    pub fn pair(index: usize) -> (f64, f64) {
        (
            DEDPS_F_POOL[index / DEDPS_C_POOL.len()],
            DEDPS_C_POOL[index % DEDPS_C_POOL.len()],
        )
    }

    pub fn active_len(&self) -> usize {
        self.active.len()
    }

    fn score(&self, index: usize) -> f64 {
        if self.n_total[index] == 0 {
            0.0
        } else {
            self.n_succ[index] as f64 / self.n_total[index] as f64
        }
    }
}

impl ParameterControl for Dedps {
    fn begin_generation(&mut self, ctx: &GenerationContext<'_>, rng: &mut dyn RngCore) {
        self.t = ctx.t;
        let n = ctx.f_values.len();
        // Fisher-Yates over the active pool: the first min(n, m) members get
        // distinct pairs, surplus members get uniform random pairs.
        let m = self.active.len();
        for i in 0..m.saturating_sub(1).min(n) {
            let j = i + (rng.next_u64() % (m - i) as u64) as usize;
            self.active.swap(i, j);
        }
        self.assigned.clear();
        for i in 0..n {
            let k = if i < m {
                self.active[i]
            } else {
                self.active[(rng.next_u64() % m as u64) as usize]
            };
            self.assigned.push(k);
        }
    }

    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, _: &mut dyn RngCore) -> (f64, f64) {
        Self::pair(self.assigned[member])
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        let k = self.assigned[member];
        self.n_total[k] += 1;
        if outcome.success {
            self.n_succ[k] += 1;
        }
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        if self.checkpoints.contains(&self.t) && self.active.len() > 1 {
            let remove = self.active.len() / 2;
            // Worst scores go; ties broken by pool index for determinism.
            let mut active = std::mem::take(&mut self.active);
            active.sort_by(|&a, &b| {
                self.score(b)
                    .partial_cmp(&self.score(a))
                    .unwrap()
                    .then(a.cmp(&b))
            });
            active.truncate(active.len() - remove);
            self.active = active;
            self.n_succ.iter_mut().for_each(|n| *n = 0);
            self.n_total.iter_mut().for_each(|n| *n = 0);
        }
    }
}
