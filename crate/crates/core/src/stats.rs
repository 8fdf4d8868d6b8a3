//! Numerical means and the two-sample rank test used by the adaptive
//! methods and the analysis pipeline.

use crate::error::{Error, Result};
use statrs::distribution::{ContinuousCDF, Normal};

/// Lehmer mean: sum(s^2) / sum(s). Biases toward larger values.
pub fn lehmer_mean(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("lehmer_mean"));
    }
    let num: f64 = values.iter().map(|s| s * s).sum();
    let den: f64 = values.iter().sum();
    if den == 0.0 {
        return Err(Error::Stats("lehmer mean of all-zero sample".into()));
    }
    Ok(num / den)
}

/// Exponent of the power mean used by the IMDE update rule.
pub const POWER_MEAN_EXPONENT: f64 = 1.5;

/// Power mean with exponent 1.5: ((1/n) sum s^1.5)^(1/1.5).
pub fn power_mean(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("power_mean"));
    }
    let p = POWER_MEAN_EXPONENT;
    let m = values.iter().map(|s| s.powf(p)).sum::<f64>() / values.len() as f64;
    Ok(m.powf(1.0 / p))
}

pub fn arithmetic_mean(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("arithmetic_mean"));
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Mean of `values` weighted proportionally to `raw_weights`.
///
/// Falls back to the arithmetic mean when all weights are zero, which
/// happens when every recorded improvement was exactly zero.
pub fn weighted_mean(values: &[f64], raw_weights: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("weighted_mean"));
    }
    assert_eq!(values.len(), raw_weights.len());
    let total: f64 = raw_weights.iter().sum();
    if total <= 0.0 {
        return arithmetic_mean(values);
    }
    Ok(values
        .iter()
        .zip(raw_weights)
        .map(|(v, w)| v * (w / total))
        .sum())
}

/// Median with the usual convention: mean of the two central order
/// statistics for even-length samples.
pub fn median(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput("median"));
    }
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        Ok(v[n / 2])
    } else {
        Ok((v[n / 2 - 1] + v[n / 2]) / 2.0)
    }
}

/// Outcome of the two-sided rank-sum comparison of two samples of
/// minimization errors. "Better" means stochastically smaller.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSumOutcome {
    ABetter,
    BBetter,
    NoDifference,
}

/// Midranks of the concatenated sample, ties averaged.
fn midranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let r = (i + j + 2) as f64 / 2.0;
        for k in i..=j {
            ranks[order[k]] = r;
        }
        i = j + 1;
    }
    ranks
}

/// Exact two-sided p-value of the rank-sum statistic by enumerating all
/// assignments of the pooled midranks. Only used for small pooled sizes.
fn exact_p_value(ranks: &[f64], n1: usize, mean: f64, observed_dev: f64) -> f64 {
    let n = ranks.len();
    let mut extreme = 0u64;
    let mut total = 0u64;
    // Iterate over all C(n, n1) subsets via a moving index combination.
    let mut comb: Vec<usize> = (0..n1).collect();
    loop {
        let w: f64 = comb.iter().map(|&k| ranks[k]).sum();
        total += 1;
        if (w - mean).abs() >= observed_dev - 1e-9 {
            extreme += 1;
        }
        // Advance to the next combination, if any.
        let mut i = n1;
        while i > 0 && comb[i - 1] == i - 1 + n - n1 {
            i -= 1;
        }
        if i == 0 {
            return extreme as f64 / total as f64;
        }
        comb[i - 1] += 1;
        for j in i..n1 {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

/// Pooled size at or below which the exact null distribution is enumerated
/// instead of using the normal approximation.
const EXACT_ENUMERATION_LIMIT: usize = 12;

/// Two-sided Wilcoxon rank-sum test at significance level `alpha`.
///
/// Small pooled samples are decided by exact enumeration of the rank-sum
/// distribution; larger ones use the normal approximation with tie-corrected
/// variance and continuity correction. Direction of a significant result is
/// taken from the sample medians.
pub fn rank_sum_test(a: &[f64], b: &[f64], alpha: f64) -> Result<RankSumOutcome> {
    let (n1, n2) = (a.len(), b.len());
    if n1 < 2 || n2 < 2 {
        return Err(Error::Stats("rank_sum_test needs at least 2 per side".into()));
    }
    let n = n1 + n2;
    let pooled: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
    let ranks = midranks(&pooled);
    let w: f64 = ranks[..n1].iter().sum();
    let mean = n1 as f64 * (n + 1) as f64 / 2.0;

    let p = if n <= EXACT_ENUMERATION_LIMIT {
        exact_p_value(&ranks, n1, mean, (w - mean).abs())
    } else {
        let tie_term: f64 = {
            let mut sorted = pooled.clone();
            sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
            let mut term = 0.0;
            let mut i = 0;
            while i < n {
                let mut j = i;
                while j + 1 < n && sorted[j + 1] == sorted[i] {
                    j += 1;
                }
                let t = (j - i + 1) as f64;
                term += t * t * t - t;
                i = j + 1;
            }
            term
        };
        let var = (n1 as f64 * n2 as f64 / 12.0)
            * ((n + 1) as f64 - tie_term / (n as f64 * (n - 1) as f64));
        if var <= 0.0 {
            return Ok(RankSumOutcome::NoDifference);
        }
        let dev = (w - mean).abs();
        let z = (dev - 0.5).max(0.0) / var.sqrt();
        let normal = Normal::new(0.0, 1.0).unwrap();
        2.0 * (1.0 - normal.cdf(z))
    };

    if p >= alpha {
        return Ok(RankSumOutcome::NoDifference);
    }
    let ma = median(a)?;
    let mb = median(b)?;
    Ok(if ma < mb {
        RankSumOutcome::ABetter
    } else if mb < ma {
        RankSumOutcome::BBetter
    } else if w < mean {
        // Medians tie; fall back to the rank-sum direction.
        RankSumOutcome::ABetter
    } else {
        RankSumOutcome::BBetter
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lehmer_examples() {
        assert!((lehmer_mean(&[0.5, 0.5]).unwrap() - 0.5).abs() < 1e-15);
        assert!((lehmer_mean(&[0.2, 0.4]).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(lehmer_mean(&[0.0, 0.0]).is_err());
        assert!(lehmer_mean(&[]).is_err());
    }

    #[test]
    fn lehmer_dominates_arithmetic() {
        let s = [0.13, 0.6, 0.92, 0.4];
        assert!(lehmer_mean(&s).unwrap() >= arithmetic_mean(&s).unwrap());
    }

    #[test]
    fn power_mean_examples() {
        assert!((power_mean(&[0.7]).unwrap() - 0.7).abs() < 1e-15);
        let expected = ((0.25f64.powf(1.5) + 1.0) / 2.0).powf(1.0 / 1.5);
        assert!((power_mean(&[0.25, 1.0]).unwrap() - expected).abs() < 1e-15);
        assert!((expected - 0.6814).abs() < 1e-4);
    }

    #[test]
    fn weighted_mean_examples() {
        let v = weighted_mean(&[0.2, 0.8], &[1.0, 3.0]).unwrap();
        assert!((v - 0.65).abs() < 1e-15);
        // All-zero improvements fall back to the arithmetic mean.
        let v = weighted_mean(&[0.2, 0.8], &[0.0, 0.0]).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        assert!((weighted_mean(&[0.3], &[5.0]).unwrap() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn median_examples() {
        assert_eq!(median(&[0.4]).unwrap(), 0.4);
        assert_eq!(median(&[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7]).unwrap(), 0.4);
        assert_eq!(median(&[1.0, 3.0]).unwrap(), 2.0);
    }

    #[test]
    fn rank_sum_disjoint_three_vs_three_not_significant() {
        // Exact two-sided p for fully separated 3 vs 3 is 2/20 = 0.1 > 0.05.
        let out = rank_sum_test(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0], 0.05).unwrap();
        assert_eq!(out, RankSumOutcome::NoDifference);
    }

    #[test]
    fn rank_sum_identical_samples() {
        let a = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(rank_sum_test(&a, &a, 0.05).unwrap(), RankSumOutcome::NoDifference);
    }

    #[test]
    fn rank_sum_large_disjoint_samples() {
        let a: Vec<f64> = (0..15).map(|i| 0.001 * i as f64).collect();
        let b: Vec<f64> = (0..15).map(|i| 1.0 + 0.001 * i as f64).collect();
        assert_eq!(rank_sum_test(&a, &b, 0.05).unwrap(), RankSumOutcome::ABetter);
        assert_eq!(rank_sum_test(&b, &a, 0.05).unwrap(), RankSumOutcome::BBetter);
    }

    #[test]
    fn rank_sum_rejects_tiny_samples() {
        assert!(rank_sum_test(&[1.0], &[1.0, 2.0], 0.05).is_err());
    }

    #[test]
    fn means_bounded_by_extremes() {
        let s = [0.05, 0.3, 0.77, 0.51, 0.9];
        let lo = s.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = s.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        for m in [
            lehmer_mean(&s).unwrap(),
            power_mean(&s).unwrap(),
            arithmetic_mean(&s).unwrap(),
            median(&s).unwrap(),
        ] {
            assert!(m >= lo && m <= hi);
        }
    }
}
