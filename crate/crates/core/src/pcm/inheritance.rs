//! Success-based methods with a parameter inheritance mechanism: each member
//! stores its own (F, C), regenerates trial values, and keeps the new pair
//! only when the trial vector wins the pairwise selection.

use super::pool::{EPSDE_C_POOL, EPSDE_F_POOL};
use super::{clamp01, randc, randu, GenerationContext, ParameterControl, TrialOutcome};
use rand::RngCore;

fn ensure_len<T: Clone>(v: &mut Vec<T>, n: usize, fill: T) {
    if v.len() < n {
        v.resize(n, fill);
    }
}

/// Per-member (F, C) with probabilistic uniform regeneration.
#[derive(Debug, Clone)]
pub struct Jde {
    pub tau_f: f64,
    pub tau_c: f64,
    pub(crate) stored: Vec<(f64, f64)>,
    pub(crate) trial: Vec<(f64, f64)>,
}

impl Default for Jde {
    fn default() -> Self {
        Jde { tau_f: 0.1, tau_c: 0.1, stored: vec![], trial: vec![] }
    }
}

impl Jde {
    fn sample_with_gates(
        &mut self,
        member: usize,
        prob_f: f64,
        prob_c: f64,
        rng: &mut dyn RngCore,
    ) -> (f64, f64) {
        ensure_len(&mut self.stored, member + 1, (0.5, 0.9));
        ensure_len(&mut self.trial, member + 1, (0.5, 0.9));
        let (f_kept, c_kept) = self.stored[member];
        let f = if randu(rng, 0.0, 1.0) < prob_f {
            randu(rng, 0.1, 1.0)
        } else {
            f_kept
        };
        let c = if randu(rng, 0.0, 1.0) < prob_c {
            randu(rng, 0.0, 1.0)
        } else {
            c_kept
        };
        self.trial[member] = (f, c);
        (f, c)
    }

    fn inherit(&mut self, member: usize, outcome: &TrialOutcome) {
        if outcome.success && member < self.trial.len() {
            self.stored[member] = self.trial[member];
        }
    }
}

impl ParameterControl for Jde {
    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        let (tau_f, tau_c) = (self.tau_f, self.tau_c);
        self.sample_with_gates(member, tau_f, tau_c, rng)
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        self.inherit(member, outcome);
    }
}

/// Fitness-diversity variant of [`Jde`]: the regeneration probability is
/// K(1 - phi_t) with phi_t = f_std / (f_max - f_min), 0 on a flat population.
#[derive(Debug, Clone)]
pub struct Fdsade {
    pub k: f64,
    pub(crate) inner: Jde,
    pub(crate) prob: f64,
}

impl Default for Fdsade {
    fn default() -> Self {
        Fdsade { k: 0.3, inner: Jde::default(), prob: 0.3 }
    }
}

impl ParameterControl for Fdsade {
    fn begin_generation(&mut self, ctx: &GenerationContext<'_>, _: &mut dyn RngCore) {
        let range = ctx.f_max - ctx.f_min;
        let phi = if range <= 0.0 { 0.0 } else { ctx.f_std / range };
        self.prob = self.k * (1.0 - phi);
    }

    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        let prob = self.prob;
        self.inner.sample_with_gates(member, prob, prob, rng)
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        self.inner.inherit(member, outcome);
    }
}

/// Objective-guided variant of [`Jde`]: members better than the population
/// average shrink their stored parameters by alpha instead of redrawing.
#[derive(Debug, Clone)]
pub struct Isade {
    pub tau_f: f64,
    pub tau_c: f64,
    pub(crate) stored: Vec<(f64, f64)>,
    pub(crate) trial: Vec<(f64, f64)>,
}

impl Default for Isade {
    fn default() -> Self {
        Isade { tau_f: 0.1, tau_c: 0.1, stored: vec![], trial: vec![] }
    }
}

impl ParameterControl for Isade {
    fn sample(&mut self, member: usize, _: usize, ctx: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        ensure_len(&mut self.stored, member + 1, (0.5, 0.9));
        ensure_len(&mut self.trial, member + 1, (0.5, 0.9));
        let (f_kept, c_kept) = self.stored[member];
        let f_i = ctx.f_values[member];
        let alpha = if ctx.f_avg > ctx.f_min {
            (f_i - ctx.f_min) / (ctx.f_avg - ctx.f_min)
        } else {
            0.0
        };
        let better = f_i < ctx.f_avg;
        let f = if randu(rng, 0.0, 1.0) < self.tau_f {
            if better {
                alpha * (f_kept - 0.1) + 0.1
            } else {
                randu(rng, 0.1, 1.0)
            }
        } else {
            f_kept
        };
        let c = if randu(rng, 0.0, 1.0) < self.tau_c {
            if better {
                alpha * c_kept
            } else {
                randu(rng, 0.0, 1.0)
            }
        } else {
            c_kept
        };
        self.trial[member] = (f, c);
        (f, c)
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        if outcome.success && member < self.trial.len() {
            self.stored[member] = self.trial[member];
        }
    }
}

/// Pool-based inheritance: pairs come from a fixed grid; a pair survives as
/// long as its trials keep succeeding and is redrawn after a failure.
#[derive(Debug, Clone, Default)]
pub struct Epsde {
    pub(crate) stored: Vec<Option<(f64, f64)>>,
}

impl Epsde {
    fn draw_pair(rng: &mut dyn RngCore) -> (f64, f64) {
        let f = EPSDE_F_POOL[(rng.next_u64() % EPSDE_F_POOL.len() as u64) as usize];
        let c = EPSDE_C_POOL[(rng.next_u64() % EPSDE_C_POOL.len() as u64) as usize];
        (f, c)
    }
}

impl ParameterControl for Epsde {
    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        ensure_len(&mut self.stored, member + 1, None);
        if self.stored[member].is_none() {
            self.stored[member] = Some(Self::draw_pair(rng));
        }
        self.stored[member].expect("pair present")
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        if !outcome.success && member < self.stored.len() {
            self.stored[member] = None;
        }
    }
}

/// Location pairs of the bimodal Cauchy distributions for F and for C.
pub const COBIDE_F_LOCATIONS: (f64, f64) = (0.65, 1.0);
pub const COBIDE_C_LOCATIONS: (f64, f64) = (0.1, 0.95);

/// Bimodal-Cauchy sampling with the same inheritance rule as [`Epsde`]:
/// F repaired by truncate-above-1 / regenerate-below-0, C clamped.
#[derive(Debug, Clone, Default)]
pub struct Cobide {
    pub(crate) stored: Vec<Option<(f64, f64)>>,
}

impl Cobide {
    fn draw_f(rng: &mut dyn RngCore) -> f64 {
        loop {
            let location = if rng.next_u64() % 2 == 0 {
                COBIDE_F_LOCATIONS.0
            } else {
                COBIDE_F_LOCATIONS.1
            };
            let f = randc(rng, location, 0.1);
            if f > 1.0 {
                return 1.0;
            }
            if f > 0.0 {
                return f;
            }
        }
    }

    fn draw_c(rng: &mut dyn RngCore) -> f64 {
        let location = if rng.next_u64() % 2 == 0 {
            COBIDE_C_LOCATIONS.0
        } else {
            COBIDE_C_LOCATIONS.1
        };
        clamp01(randc(rng, location, 0.1))
    }
}

impl ParameterControl for Cobide {
    fn sample(&mut self, member: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        ensure_len(&mut self.stored, member + 1, None);
        if self.stored[member].is_none() {
            self.stored[member] = Some((Self::draw_f(rng), Self::draw_c(rng)));
        }
        self.stored[member].expect("pair present")
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        if !outcome.success && member < self.stored.len() {
            self.stored[member] = None;
        }
    }
}
