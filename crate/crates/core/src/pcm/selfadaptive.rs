//! Self-adaptive control: each member carries its own F value, and new F
//! values are produced by a rand/1-style recombination of stored values.

use super::{clamp01, randn, GenerationContext, ParameterControl, TrialOutcome};
use rand::RngCore;

/// Maps an out-of-range value into [0, 1] by taking the fractional part,
/// e.g. 1.4 -> 0.4 and -0.3 -> 0.7. A result of exactly 0 is re-wrapped from
/// the raw value's absolute fractional part.
pub fn wrap_unit(x: f64) -> f64 {
    if (0.0..=1.0).contains(&x) {
        return x;
    }
    let w = x - x.floor();
    if w > 0.0 {
        w
    } else {
        x.abs().fract()
    }
}

/// C ~ randn(0.5, 0.15) clamped; F self-adapted over the population's stored
/// values: F_i = F_r1 + randn(0, 0.5) (F_r2 - F_r3), wrapped into [0, 1],
/// inherited on success.
#[derive(Debug, Clone, Default)]
pub struct Sde {
    pub(crate) stored: Vec<f64>,
    pub(crate) trial: Vec<f64>,
}

impl Sde {
    fn ensure_init(&mut self, n: usize, rng: &mut dyn RngCore) {
        while self.stored.len() < n {
            self.stored.push(wrap_unit(randn(rng, 0.5, 0.15)));
        }
        if self.trial.len() < n {
            self.trial.resize(n, 0.5);
        }
    }
}

impl ParameterControl for Sde {
    fn begin_generation(&mut self, ctx: &GenerationContext<'_>, rng: &mut dyn RngCore) {
        self.ensure_init(ctx.f_values.len(), rng);
    }

    fn sample(&mut self, member: usize, _: usize, ctx: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        let n = ctx.f_values.len().max(member + 1);
        self.ensure_init(n, rng);
        let f = if n < 3 {
            self.stored[member]
        } else {
            // Three indices distinct from each other.
            let r1 = (rng.next_u64() % n as u64) as usize;
            let r2 = loop {
                let r = (rng.next_u64() % n as u64) as usize;
                if r != r1 {
                    break r;
                }
            };
            let r3 = loop {
                let r = (rng.next_u64() % n as u64) as usize;
                if r != r1 && r != r2 {
                    break r;
                }
            };
            wrap_unit(self.stored[r1] + randn(rng, 0.0, 0.5) * (self.stored[r2] - self.stored[r3]))
        };
        self.trial[member] = f;
        (f, clamp01(randn(rng, 0.5, 0.15)))
    }

    fn report(&mut self, member: usize, outcome: &TrialOutcome) {
        if outcome.success && member < self.trial.len() {
            self.stored[member] = self.trial[member];
        }
    }
}
