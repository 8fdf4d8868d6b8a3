//! Parameter control methods for the scale factor F and crossover rate C.
//!
//! Every method sits behind the same generation-synchronous interface:
//! `begin_generation` receives a snapshot of the population, `sample` is
//! called once per member after the engine has fixed the base vector,
//! `report` delivers the trial outcome once per member, and
//! `end_generation` closes the bookkeeping for the iteration.

use crate::de::Population;
use rand::RngCore;
use rand_distr::Distribution;

mod deterministic;
mod history;
mod inheritance;
mod observation;
mod pool;
mod registry;
mod selfadaptive;

pub use deterministic::{
    scale_ramp, sinde_crossover_rate, sinde_scale_factor, Code, Dersf, Detvsf, FixedF05C09, Sinde,
    Swde, Zmde, CODE_PAIRS,
};
pub use history::{sansde_probability, Imde, Jade, Sade, Sansde, Shade, Slade};
pub use inheritance::{
    Cobide, Epsde, Fdsade, Isade, Jde, COBIDE_C_LOCATIONS, COBIDE_F_LOCATIONS,
};
pub use observation::{depd_scale_factor, ide_locations, rde_pair, Depd, Ide, Rde};
pub use pool::{Cde, Dedps, CDE_PAIRS, DEDPS_C_POOL, DEDPS_F_POOL, EPSDE_C_POOL, EPSDE_F_POOL};
pub use registry::{
    create_pcm, pcm_descriptor, pcm_ids, registry, HyperMap, HyperSpec, PcmClass, PcmDescriptor,
};
pub use selfadaptive::{wrap_unit, Sde};

/// Per-trial feedback handed back to a method.
#[derive(Debug, Clone, Copy)]
pub struct TrialOutcome {
    pub success: bool,
    pub f_parent: f64,
    pub f_trial: f64,
    pub f_used: f64,
    pub c_used: f64,
}

impl TrialOutcome {
    /// Success is defined as f(trial) <= f(parent); ties count as success.
    pub fn new(f_parent: f64, f_trial: f64, f_used: f64, c_used: f64) -> Self {
        TrialOutcome {
            success: f_trial <= f_parent,
            f_parent,
            f_trial,
            f_used,
            c_used,
        }
    }

    pub fn improvement(&self) -> f64 {
        (self.f_parent - self.f_trial).abs()
    }
}

/// Snapshot of the population handed to methods each generation.
#[derive(Debug, Clone)]
pub struct GenerationContext<'a> {
    /// Generation counter, starting at 1.
    pub t: usize,
    pub t_max: usize,
    pub f_values: &'a [f64],
    /// ranks[i] is the 1-based rank of member i; rank 1 is the best.
    pub ranks: &'a [usize],
    pub f_min: f64,
    pub f_max: f64,
    pub f_avg: f64,
    pub f_std: f64,
    pub x_matrix: Vec<&'a [f64]>,
}

/// Computes 1-based ranks (rank 1 = best) with ties broken by member index.
pub fn compute_ranks(f_values: &[f64]) -> Vec<usize> {
    let n = f_values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| f_values[a].partial_cmp(&f_values[b]).unwrap().then(a.cmp(&b)));
    let mut ranks = vec![0; n];
    for (rank0, &i) in order.iter().enumerate() {
        ranks[i] = rank0 + 1;
    }
    ranks
}

/// Owned buffers backing a [`GenerationContext`].
#[derive(Debug, Clone, Default)]
pub struct ContextBuffers {
    pub f_values: Vec<f64>,
    pub ranks: Vec<usize>,
}

impl ContextBuffers {
    pub fn fill(&mut self, pop: &Population) {
        self.f_values.clear();
        self.f_values.extend(pop.members.iter().map(|m| m.f));
        self.ranks = compute_ranks(&self.f_values);
    }

    pub fn context<'a>(&'a self, pop: &'a Population, t: usize, t_max: usize) -> GenerationContext<'a> {
        let n = self.f_values.len() as f64;
        let f_min = self.f_values.iter().cloned().fold(f64::INFINITY, f64::min);
        let f_max = self.f_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let f_avg = self.f_values.iter().sum::<f64>() / n;
        let f_std =
            (self.f_values.iter().map(|f| (f - f_avg) * (f - f_avg)).sum::<f64>() / n).sqrt();
        GenerationContext {
            t,
            t_max,
            f_values: &self.f_values,
            ranks: &self.ranks,
            f_min,
            f_max,
            f_avg,
            f_std,
            x_matrix: pop.members.iter().map(|m| m.x.as_slice()).collect(),
        }
    }
}

/// The generation-synchronous parameter control interface.
pub trait ParameterControl: Send {
    fn begin_generation(&mut self, _ctx: &GenerationContext<'_>, _rng: &mut dyn RngCore) {}

    /// Samples (F, C) for one member. `base_index` is the index of the base
    /// vector chosen by the mutation strategy.
    fn sample(
        &mut self,
        member: usize,
        base_index: usize,
        ctx: &GenerationContext<'_>,
        rng: &mut dyn RngCore,
    ) -> (f64, f64);

    fn report(&mut self, _member: usize, _outcome: &TrialOutcome) {}

    fn end_generation(&mut self, _rng: &mut dyn RngCore) {}
}

// ---- shared sampling helpers -------------------------------------------

pub(crate) fn randu(rng: &mut dyn RngCore, lo: f64, hi: f64) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    lo + u * (hi - lo)
}

/// Normal draw parameterized by mean and VARIANCE, matching randn(mu, sigma^2).
pub(crate) fn randn(rng: &mut dyn RngCore, mean: f64, variance: f64) -> f64 {
    let normal = rand_distr::Normal::new(mean, variance.sqrt()).expect("valid normal");
    normal.sample(&mut Shim(rng))
}

/// Cauchy draw with location and scale, matching randc(mu, gamma).
pub(crate) fn randc(rng: &mut dyn RngCore, location: f64, scale: f64) -> f64 {
    let cauchy = rand_distr::Cauchy::new(location, scale).expect("valid cauchy");
    cauchy.sample(&mut Shim(rng))
}

pub(crate) fn clamp01(v: f64) -> f64 {
    v.clamp(0.0, 1.0)
}

/// The JADE repair rule for F: truncate to 1 from above, regenerate while
/// the draw is non-positive.
pub(crate) fn jade_scale_factor(rng: &mut dyn RngCore, location: f64) -> f64 {
    loop {
        let f = randc(rng, location, 0.1);
        if f > 1.0 {
            return 1.0;
        }
        if f > 0.0 {
            return f;
        }
    }
}

/// Redraws a normal sample until it falls inside [0, 1].
pub(crate) fn redrawn_normal01(rng: &mut dyn RngCore, mean: f64, variance: f64) -> f64 {
    loop {
        let v = randn(rng, mean, variance);
        if (0.0..=1.0).contains(&v) {
            return v;
        }
    }
}

// rand_distr distributions need a sized Rng; adapt the trait object.
pub(crate) struct Shim<'a>(pub &'a mut dyn RngCore);

impl RngCore for Shim<'_> {
    fn next_u32(&mut self) -> u32 {
        self.0.next_u32()
    }
    fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }
    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.0.fill_bytes(dest)
    }
}
