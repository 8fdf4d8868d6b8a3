//! Success-based methods driven by historical records of successful
//! parameter values: windowed medians, exponential mean tracking, and
//! multi-cell memories.

use super::{clamp01, jade_scale_factor, randc, randn, randu, GenerationContext, ParameterControl, TrialOutcome};
use crate::stats::{arithmetic_mean, lehmer_mean, median, power_mean, weighted_mean};
use rand::RngCore;
use std::collections::VecDeque;

/// F ~ randn(0.5, 0.3) used as-is (no repair); C ~ randn(mu_C, 0.1) clamped,
/// with mu_C set to the median of successful C values over a FIFO window of
/// the last `t_learn` generations once the learning period has elapsed.
#[derive(Debug, Clone)]
pub struct Sade {
    pub t_learn: usize,
    pub(crate) mu_c: f64,
    pub(crate) window: VecDeque<Vec<f64>>,
    pub(crate) current: Vec<f64>,
    pub(crate) completed: usize,
}

impl Default for Sade {
    fn default() -> Self {
        Sade {
            t_learn: 50,
            mu_c: 0.5,
            window: VecDeque::new(),
            current: vec![],
            completed: 0,
        }
    }
}

impl ParameterControl for Sade {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        (randn(rng, 0.5, 0.3), clamp01(randn(rng, self.mu_c, 0.1)))
    }

    fn report(&mut self, _: usize, outcome: &TrialOutcome) {
        if outcome.success {
            self.current.push(outcome.c_used);
        }
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        self.completed += 1;
        self.window.push_back(std::mem::take(&mut self.current));
        if self.completed > self.t_learn {
            let all: Vec<f64> = self.window.iter().flatten().copied().collect();
            if let Ok(m) = median(&all) {
                self.mu_c = m;
            }
            self.window.pop_front();
        }
    }
}

/// Updates p from the success/total counters of the two F distributions;
/// keeps the old value if the denominator vanishes.
pub fn sansde_probability(p: f64, ns1: usize, nt1: usize, ns2: usize, nt2: usize) -> f64 {
    let denominator = (ns2 * nt1 + ns1 * nt2) as f64;
    if denominator > 0.0 {
        (ns1 * nt2) as f64 / denominator
    } else {
        p
    }
}

/// F from an adaptive mix of randn(0.5, 0.3) and randc(0, 1) (clamped); C as
/// a windowed scheme whose mu_C is the improvement-weighted mean of
/// successful C values.
#[derive(Debug, Clone)]
pub struct Sansde {
    pub t_learn: usize,
    pub(crate) p: f64,
    pub(crate) mu_c: f64,
    pub(crate) branch: Vec<bool>,
    pub(crate) ns: [usize; 2],
    pub(crate) nt: [usize; 2],
    pub(crate) window: VecDeque<Vec<(f64, f64)>>,
    pub(crate) current: Vec<(f64, f64)>,
    pub(crate) completed: usize,
}

impl Default for Sansde {
    fn default() -> Self {
        Sansde {
            t_learn: 50,
            p: 0.5,
            mu_c: 0.5,
            branch: vec![],
            ns: [0; 2],
            nt: [0; 2],
            window: VecDeque::new(),
            current: vec![],
            completed: 0,
        }
    }
}

impl ParameterControl for Sansde {
    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        if self.branch.len() <= member {
            self.branch.resize(member + 1, false);
        }
        let use_normal = randu(rng, 0.0, 1.0) < self.p;
        self.branch[member] = use_normal;
        let f = if use_normal {
            randn(rng, 0.5, 0.3)
        } else {
            randc(rng, 0.0, 1.0)
        };
        (clamp01(f), clamp01(randn(rng, self.mu_c, 0.1)))
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        let k = if self.branch.get(member).copied().unwrap_or(true) { 0 } else { 1 };
        self.nt[k] += 1;
        if outcome.success {
            self.ns[k] += 1;
            self.current.push((outcome.c_used, outcome.improvement()));
        }
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        self.completed += 1;
        if self.completed % self.t_learn == 0 {
            self.p = sansde_probability(self.p, self.ns[0], self.nt[0], self.ns[1], self.nt[1]);
            self.ns = [0; 2];
            self.nt = [0; 2];
        }
        self.window.push_back(std::mem::take(&mut self.current));
        if self.completed > self.t_learn {
            let (values, weights): (Vec<f64>, Vec<f64>) =
                self.window.iter().flatten().copied().unzip();
            if let Ok(m) = weighted_mean(&values, &weights) {
                self.mu_c = m;
            }
            self.window.pop_front();
        }
    }
}

/// Collects a generation's successful parameter values.
#[derive(Debug, Clone, Default)]
pub(crate) struct SuccessSets {
    pub(crate) f: Vec<f64>,
    pub(crate) c: Vec<f64>,
}

impl SuccessSets {
    fn record(&mut self, outcome: &TrialOutcome) {
        if outcome.success {
            self.f.push(outcome.f_used);
            self.c.push(outcome.c_used);
        }
    }

    fn take(&mut self) -> Option<(Vec<f64>, Vec<f64>)> {
        if self.f.is_empty() {
            None
        } else {
            Some((std::mem::take(&mut self.f), std::mem::take(&mut self.c)))
        }
    }
}

/// F ~ randc(mu_F, 0.1) with truncate/regenerate repair; C ~ randn(mu_C, 0.1)
/// clamped; means blended toward the Lehmer mean of S^F and the arithmetic
/// mean of S^C at learning rate c.
#[derive(Debug, Clone)]
pub struct Jade {
    pub c: f64,
    pub(crate) mu_f: f64,
    pub(crate) mu_c: f64,
    pub(crate) sets: SuccessSets,
}

impl Default for Jade {
    fn default() -> Self {
        Jade { c: 0.1, mu_f: 0.5, mu_c: 0.5, sets: SuccessSets::default() }
    }
}

impl ParameterControl for Jade {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        (
            jade_scale_factor(rng, self.mu_f),
            clamp01(randn(rng, self.mu_c, 0.1)),
        )
    }

    fn report(&mut self, _: usize, outcome: &TrialOutcome) {
        self.sets.record(outcome);
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        if let Some((s_f, s_c)) = self.sets.take() {
            if let Ok(lehmer) = lehmer_mean(&s_f) {
                self.mu_f = (1.0 - self.c) * self.mu_f + self.c * lehmer;
            }
            if let Ok(mean) = arithmetic_mean(&s_c) {
                self.mu_c = (1.0 - self.c) * self.mu_c + self.c * mean;
            }
        }
    }
}

/// JADE's scheme with power means (exponent 1.5) and per-generation learning
/// rates c_F ~ uniform[0, 0.2], c_C ~ uniform[0, 0.1].
#[derive(Debug, Clone)]
pub struct Imde {
    pub(crate) mu_f: f64,
    pub(crate) mu_c: f64,
    pub(crate) sets: SuccessSets,
}

impl Default for Imde {
    fn default() -> Self {
        Imde { mu_f: 0.5, mu_c: 0.5, sets: SuccessSets::default() }
    }
}

impl ParameterControl for Imde {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        (
            jade_scale_factor(rng, self.mu_f),
            clamp01(randn(rng, self.mu_c, 0.1)),
        )
    }

    fn report(&mut self, _: usize, outcome: &TrialOutcome) {
        self.sets.record(outcome);
    }

    fn end_generation(&mut self, rng: &mut dyn RngCore) {
        if let Some((s_f, s_c)) = self.sets.take() {
            let c_f = randu(rng, 0.0, 0.2);
            let c_c = randu(rng, 0.0, 0.1);
            if let Ok(pm) = power_mean(&s_f) {
                self.mu_f = (1.0 - c_f) * self.mu_f + c_f * pm;
            }
            if let Ok(pm) = power_mean(&s_c) {
                self.mu_c = (1.0 - c_c) * self.mu_c + c_c * pm;
            }
        }
    }
}

/// Historical memories M^F and M^C of H cells, all initialized to 0.5; each
/// sample draws a cell uniformly; one cell per generation is overwritten with
/// Lehmer means of the success sets, the write index cycling through 1..=H.
#[derive(Debug, Clone)]
pub struct Shade {
    pub h: usize,
    pub(crate) m_f: Vec<f64>,
    pub(crate) m_c: Vec<f64>,
    pub(crate) k: usize,
    pub(crate) sets: SuccessSets,
}

impl Default for Shade {
    fn default() -> Self {
        Shade::with_memory(5)
    }
}

impl Shade {
    pub fn with_memory(h: usize) -> Self {
        Shade {
            h,
            m_f: vec![0.5; h],
            m_c: vec![0.5; h],
            k: 0,
            sets: SuccessSets::default(),
        }
    }

    pub fn memory(&self) -> (&[f64], &[f64]) {
        (&self.m_f, &self.m_c)
    }
}

impl ParameterControl for Shade {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        let r = (rng.next_u64() % self.h as u64) as usize;
        (
            jade_scale_factor(rng, self.m_f[r]),
            clamp01(randn(rng, self.m_c[r], 0.1)),
        )
    }

    fn report(&mut self, _: usize, outcome: &TrialOutcome) {
        self.sets.record(outcome);
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        if let Some((s_f, s_c)) = self.sets.take() {
            if let Ok(lehmer) = lehmer_mean(&s_f) {
                self.m_f[self.k] = lehmer;
            }
            // All-zero success sets have no Lehmer mean; fall back to 0.
            self.m_c[self.k] = lehmer_mean(&s_c).unwrap_or(0.0);
            self.k = (self.k + 1) % self.h;
        }
    }
}

/// F ~ randn(mu_F, 0.1), set to 1 when outside [0,1]; C ~ randc(mu_C, 0.1)
/// redrawn into [0,1]; both means tracked with arithmetic means at rate c.
#[derive(Debug, Clone)]
pub struct Slade {
    pub c: f64,
    pub(crate) mu_f: f64,
    pub(crate) mu_c: f64,
    pub(crate) sets: SuccessSets,
}

impl Default for Slade {
    fn default() -> Self {
        Slade { c: 0.1, mu_f: 0.5, mu_c: 0.5, sets: SuccessSets::default() }
    }
}

impl ParameterControl for Slade {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        let raw = randn(rng, self.mu_f, 0.1);
        let f = if (0.0..=1.0).contains(&raw) { raw } else { 1.0 };
        let c = loop {
            let v = randc(rng, self.mu_c, 0.1);
            if (0.0..=1.0).contains(&v) {
                break v;
            }
        };
        (f, c)
    }

    fn report(&mut self, _: usize, outcome: &TrialOutcome) {
        self.sets.record(outcome);
    }

    fn end_generation(&mut self, _: &mut dyn RngCore) {
        if let Some((s_f, s_c)) = self.sets.take() {
            if let Ok(mean) = arithmetic_mean(&s_f) {
                self.mu_f = (1.0 - self.c) * self.mu_f + self.c * mean;
            }
            if let Ok(mean) = arithmetic_mean(&s_c) {
                self.mu_c = (1.0 - self.c) * self.mu_c + self.c * mean;
            }
        }
    }
}
