//! Deterministic methods: parameter values depend only on fixed rules,
//! randomness, or the generation counter, never on search feedback.

use super::{clamp01, randn, randu, GenerationContext, ParameterControl};
use rand::RngCore;

/// The fixed-parameter baseline: F = 0.5, C = 0.9.
#[derive(Debug, Clone)]
pub struct FixedF05C09 {
    pub f: f64,
    pub c: f64,
}

impl Default for FixedF05C09 {
    fn default() -> Self {
        FixedF05C09 { f: 0.5, c: 0.9 }
    }
}

impl ParameterControl for FixedF05C09 {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, _: &mut dyn RngCore) -> (f64, f64) {
        (self.f, self.c)
    }
}

/// Random scale factor: F uniform in [f_min, f_max], constant C.
#[derive(Debug, Clone)]
pub struct Dersf {
    pub f_min: f64,
    pub f_max: f64,
    pub c: f64,
}

impl Default for Dersf {
    fn default() -> Self {
        Dersf { f_min: 0.5, f_max: 1.0, c: 0.9 }
    }
}

impl ParameterControl for Dersf {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        (randu(rng, self.f_min, self.f_max), self.c)
    }
}

/// Linearly decreasing scale factor: F(1) ~ f_max down to F(t_max) = f_min.
pub fn scale_ramp(t: usize, t_max: usize, f_min: f64, f_max: f64) -> f64 {
    (f_max - f_min) * ((t_max - t.min(t_max)) as f64 / t_max as f64) + f_min
}

/// Time-varying scale factor shared by the whole population; constant C.
#[derive(Debug, Clone)]
pub struct Detvsf {
    pub f_min: f64,
    pub f_max: f64,
    pub c: f64,
    pub(crate) current_f: f64,
}

impl Default for Detvsf {
    fn default() -> Self {
        Detvsf { f_min: 0.4, f_max: 1.2, c: 0.9, current_f: 1.2 }
    }
}

impl ParameterControl for Detvsf {
    fn begin_generation(&mut self, ctx: &GenerationContext<'_>, _: &mut dyn RngCore) {
        self.current_f = scale_ramp(ctx.t, ctx.t_max, self.f_min, self.f_max);
    }

    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, _: &mut dyn RngCore) -> (f64, f64) {
        (clamp01(self.current_f), self.c)
    }
}

/// F schedule of the sinusoidal method; amplitude grows with t/t_max.
pub fn sinde_scale_factor(t: usize, t_max: usize, omega: f64) -> f64 {
    let phase = 2.0 * std::f64::consts::PI * omega * t as f64;
    0.5 * ((t as f64 / t_max as f64) * phase.sin() + 1.0)
}

/// C schedule of the sinusoidal method; F's schedule shifted by pi.
pub fn sinde_crossover_rate(t: usize, t_max: usize, omega: f64) -> f64 {
    let phase = 2.0 * std::f64::consts::PI * omega * t as f64 + std::f64::consts::PI;
    0.5 * ((t as f64 / t_max as f64) * phase.sin() + 1.0)
}

/// Sinusoidal schedules for both F and C, shared by the whole population.
#[derive(Debug, Clone)]
pub struct Sinde {
    pub omega: f64,
    pub(crate) current: (f64, f64),
}

impl Default for Sinde {
    fn default() -> Self {
        Sinde { omega: 0.25, current: (0.5, 0.5) }
    }
}

impl ParameterControl for Sinde {
    fn begin_generation(&mut self, ctx: &GenerationContext<'_>, _: &mut dyn RngCore) {
        self.current = (
            sinde_scale_factor(ctx.t, ctx.t_max, self.omega),
            sinde_crossover_rate(ctx.t, ctx.t_max, self.omega),
        );
    }

    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, _: &mut dyn RngCore) -> (f64, f64) {
        self.current
    }
}

/// F ~ randn(0.75, 0.1) clamped; C uniform in [0.8, 1].
#[derive(Debug, Clone, Default)]
pub struct Zmde;

impl ParameterControl for Zmde {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        (clamp01(randn(rng, 0.75, 0.1)), randu(rng, 0.8, 1.0))
    }
}

/// The three canonical (F, C) pairs, drawn uniformly per member per generation.
pub const CODE_PAIRS: [(f64, f64); 3] = [(1.0, 0.1), (1.0, 0.9), (0.8, 0.2)];

#[derive(Debug, Clone, Default)]
pub struct Code;

impl ParameterControl for Code {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        CODE_PAIRS[(rng.next_u64() % 3) as usize]
    }
}

/// Extreme-value switching: F in {0.5, 2} and C in {0, 1}, both uniform.
/// F = 2 is intentional and passes through unclamped.
#[derive(Debug, Clone, Default)]
pub struct Swde;

impl ParameterControl for Swde {
    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, rng: &mut dyn RngCore) -> (f64, f64) {
        let f = if rng.next_u64() % 2 == 0 { 0.5 } else { 2.0 };
        let c = if rng.next_u64() % 2 == 0 { 0.0 } else { 1.0 };
        (f, c)
    }
}
