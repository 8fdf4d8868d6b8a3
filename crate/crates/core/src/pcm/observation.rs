//! Observation-based methods: parameters derived from indicator values of
//! the population (objective values, ranks) rather than success feedback.

use super::{clamp01, redrawn_normal01, GenerationContext, ParameterControl};
use rand::RngCore;

/// Shared scale factor derived from the population's objective extremes.
/// If the denominator objective is 0 the ratio counts as >= 1 so the other
/// branch applies; if both extremes are 0 the result is `f_min`.
pub fn depd_scale_factor(f_min_obj: f64, f_max_obj: f64, f_floor: f64) -> f64 {
    if f_min_obj == 0.0 && f_max_obj == 0.0 {
        return f_floor;
    }
    let ratio = if f_min_obj == 0.0 {
        f64::INFINITY
    } else {
        (f_max_obj / f_min_obj).abs()
    };
    let complement = if ratio < 1.0 {
        1.0 - ratio
    } else if f_max_obj == 0.0 {
        1.0
    } else {
        1.0 - (f_min_obj / f_max_obj).abs()
    };
    f_floor.max(complement)
}

/// Population-level F from the max/min objective ratio; constant C = 0.5.
#[derive(Debug, Clone)]
pub struct Depd {
    pub f_floor: f64,
    pub c: f64,
    pub(crate) current_f: f64,
}

impl Default for Depd {
    fn default() -> Self {
        Depd { f_floor: 0.4, c: 0.5, current_f: 0.4 }
    }
}

impl ParameterControl for Depd {
    fn begin_generation(&mut self, ctx: &GenerationContext<'_>, _: &mut dyn RngCore) {
        self.current_f = depd_scale_factor(ctx.f_min, ctx.f_max, self.f_floor);
    }

    fn sample(&mut self, _: usize, _: usize, _: &GenerationContext<'_>, _: &mut dyn RngCore) -> (f64, f64) {
        (clamp01(self.current_f), self.c)
    }
}

/// Deterministic (F, C) assignment from the base vector's rank j in 1..=N:
/// F rises and C falls linearly as the rank worsens.
pub fn rde_pair(j: usize, n: usize, f_min: f64, f_max: f64, c_min: f64, c_max: f64) -> (f64, f64) {
    let fraction = if n > 1 { (j - 1) as f64 / (n - 1) as f64 } else { 0.0 };
    (
        f_min + (f_max - f_min) * fraction,
        c_max - (c_max - c_min) * fraction,
    )
}

#[derive(Debug, Clone)]
pub struct Rde {
    pub f_min: f64,
    pub f_max: f64,
    pub c_min: f64,
    pub c_max: f64,
}

impl Default for Rde {
    fn default() -> Self {
        Rde { f_min: 0.6, f_max: 0.95, c_min: 0.85, c_max: 0.95 }
    }
}

impl ParameterControl for Rde {
    fn sample(
        &mut self,
        _: usize,
        base_index: usize,
        ctx: &GenerationContext<'_>,
        _: &mut dyn RngCore,
    ) -> (f64, f64) {
        let j = ctx.ranks[base_index];
        rde_pair(j, ctx.ranks.len(), self.f_min, self.f_max, self.c_min, self.c_max)
    }
}

/// Normal-distribution locations for the rank-driven method: mu_F from the
/// base vector's rank, mu_C from the target's own rank.
pub fn ide_locations(base_rank: usize, target_rank: usize, n: usize) -> (f64, f64) {
    if n <= 1 {
        return (0.0, 0.0);
    }
    (base_rank as f64 / n as f64, target_rank as f64 / n as f64)
}

/// F ~ randn(j/N, 0.1) and C ~ randn(i_rank/N, 0.1), both redrawn into [0, 1].
#[derive(Debug, Clone, Default)]
pub struct Ide;

impl ParameterControl for Ide {
    fn sample(
        &mut self,
        member: usize,
        base_index: usize,
        ctx: &GenerationContext<'_>,
        rng: &mut dyn RngCore,
    ) -> (f64, f64) {
        let (mu_f, mu_c) = ide_locations(ctx.ranks[base_index], ctx.ranks[member], ctx.ranks.len());
        (
            redrawn_normal01(rng, mu_f, 0.1),
            redrawn_normal01(rng, mu_c, 0.1),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::super::testutil::OwnedContext;
    use super::*;
    use crate::rng::derive_rng;

    #[test]
    fn depd_branches_and_guards() {
        // |f_max / f_min| = 0.5 < 1: first branch.
        assert_eq!(depd_scale_factor(-4.0, -2.0, 0.4), 0.5);
        // Ratio 100 >= 1: second branch, 1 - 1/100.
        assert!((depd_scale_factor(1.0, 100.0, 0.4) - 0.99).abs() < 1e-15);
        // Degenerate population: complement is 0, the floor wins.
        assert_eq!(depd_scale_factor(3.0, 3.0, 0.4), 0.4);
        // Zero denominators.
        assert_eq!(depd_scale_factor(0.0, 0.0, 0.4), 0.4);
        assert_eq!(depd_scale_factor(0.0, 5.0, 0.4), 1.0);
        assert_eq!(depd_scale_factor(5.0, 0.0, 0.4), 1.0);
    }

    #[test]
    fn depd_shared_within_generation() {
        let mut pcm = Depd::default();
        let owned = OwnedContext::new(vec![-4.0, -2.0, -3.0], 1, 10);
        let mut rng = derive_rng(5, 0, 0);
        pcm.begin_generation(&owned.ctx(), &mut rng);
        for i in 0..3 {
            assert_eq!(pcm.sample(i, i, &owned.ctx(), &mut rng), (0.5, 0.5));
        }
    }

    #[test]
    fn rde_boundary_assignments() {
        assert_eq!(rde_pair(1, 20, 0.6, 0.95, 0.85, 0.95), (0.6, 0.95));
        let (f, c) = rde_pair(20, 20, 0.6, 0.95, 0.85, 0.95);
        assert!((f - 0.95).abs() < 1e-15 && (c - 0.85).abs() < 1e-15);
        // Degenerate population of one.
        assert_eq!(rde_pair(1, 1, 0.6, 0.95, 0.85, 0.95), (0.6, 0.95));
    }

    #[test]
    fn rde_monotone_in_rank() {
        let mut prev = rde_pair(1, 10, 0.6, 0.95, 0.85, 0.95);
        for j in 2..=10 {
            let cur = rde_pair(j, 10, 0.6, 0.95, 0.85, 0.95);
            assert!(cur.0 > prev.0 && cur.1 < prev.1);
            prev = cur;
        }
    }

    #[test]
    fn rde_uses_base_rank() {
        let mut pcm = Rde::default();
        // Member 2 is the best (rank 1).
        let owned = OwnedContext::new(vec![5.0, 9.0, 1.0], 1, 10);
        let mut rng = derive_rng(6, 0, 0);
        assert_eq!(pcm.sample(0, 2, &owned.ctx(), &mut rng), (0.6, 0.95));
        let worst = pcm.sample(0, 1, &owned.ctx(), &mut rng);
        assert!((worst.0 - 0.95).abs() < 1e-15 && (worst.1 - 0.85).abs() < 1e-15);
    }

    #[test]
    fn ide_location_fractions() {
        assert_eq!(ide_locations(1, 1, 100), (0.01, 0.01));
        assert_eq!(ide_locations(100, 100, 100), (1.0, 1.0));
        assert_eq!(ide_locations(1, 1, 1), (0.0, 0.0));
        // mu_C strictly increasing in the target's rank.
        for i in 1..100 {
            assert!(ide_locations(1, i, 100).1 < ide_locations(1, i + 1, 100).1);
        }
    }

    #[test]
    fn ide_samples_in_unit_interval_and_track_rank() {
        let mut pcm = Ide;
        let f_values: Vec<f64> = (0..100).map(|i| i as f64).collect();
        let owned = OwnedContext::new(f_values, 1, 10);
        let mut rng = derive_rng(7, 0, 0);
        let mut mean_best = 0.0;
        let mut mean_worst = 0.0;
        let reps = 2000;
        for _ in 0..reps {
            let (f, c) = pcm.sample(0, 0, &owned.ctx(), &mut rng);
            assert!((0.0..=1.0).contains(&f) && (0.0..=1.0).contains(&c));
            mean_best += c;
            let (_, c) = pcm.sample(99, 99, &owned.ctx(), &mut rng);
            mean_worst += c;
        }
        // Superior individuals get small C values on average.
        assert!(mean_best / reps as f64 + 0.3 < mean_worst / reps as f64);
    }
}
