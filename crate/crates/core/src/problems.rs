//! Benchmark test functions with known optima.
//!
//! A compact ten-function suite covering the five usual difficulty
//! categories: separable, moderate conditioning, high conditioning and
//! unimodal, multimodal with adequate global structure, and multimodal
//! with weak global structure. Every function has a closed-form
//! definition, a seeded shift of the optimum, and an optional seeded
//! orthogonal rotation, so `f(x) = f_base(R (x - x_opt)) + f_opt` holds
//! exactly with `f_base(0) = 0`.

use crate::error::{Error, Result};
use crate::rng::derive_rng;
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Category {
    Separable,
    ModerateConditioning,
    HighConditioning,
    MultimodalStructured,
    MultimodalWeak,
}

impl Category {
    pub fn label(self) -> &'static str {
        match self {
            Category::Separable => "separable",
            Category::ModerateConditioning => "moderate-conditioning",
            Category::HighConditioning => "high-conditioning",
            Category::MultimodalStructured => "multimodal-structured",
            Category::MultimodalWeak => "multimodal-weak",
        }
    }
}

#[derive(Debug, Clone)]
struct GallagherPeak {
    center: Vec<f64>,
    height: f64,
    width: f64,
}

#[derive(Debug, Clone)]
enum BaseFunction {
    Sphere,
    /// Separable ellipsoid, condition number 10^4.
    SeparableEllipsoid,
    /// Rosenbrock shifted so the minimum sits at the origin.
    Rosenbrock,
    /// Asymmetric quadratic: positive half-axes are penalized 10^4 times harder.
    AsymmetricSector,
    /// Ellipsoid with condition number 10^6.
    HighConditionEllipsoid,
    Discus,
    Rastrigin,
    Griewank,
    /// Separable deceptive function: a narrow global basin at the origin and a
    /// wide shallow basin of value 10 per coordinate around y = 4.
    Deceptive,
    /// Random-peaks landscape: the tallest of 21 Gaussian peaks marks the optimum.
    Gallagher { peaks: Vec<GallagherPeak> },
}

/// An immutable benchmark problem instance.
#[derive(Debug, Clone)]
pub struct Problem {
    pub id: String,
    pub dimension: usize,
    pub bounds: Vec<(f64, f64)>,
    pub f_opt: f64,
    pub x_opt: Vec<f64>,
    pub category: Category,
    pub shift_seed: Option<u64>,
    pub rotation_seed: Option<u64>,
    base: BaseFunction,
    /// Row-major orthogonal matrix, when this instance is rotated.
    rotation: Option<Vec<Vec<f64>>>,
}

/// One row of the reproducibility manifest for a suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub dimension: usize,
    pub category: String,
    pub f_opt: f64,
    pub shift_seed: Option<u64>,
    pub rotation_seed: Option<u64>,
}

impl Problem {
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        let shifted: Vec<f64> = x.iter().zip(&self.x_opt).map(|(a, b)| a - b).collect();
        let y = match &self.rotation {
            Some(rot) => rotate(rot, &shifted),
            None => shifted,
        };
        Ok(self.base_value(&y) + self.f_opt)
    }

    fn base_value(&self, y: &[f64]) -> f64 {
        let d = y.len();
        match &self.base {
            BaseFunction::Sphere => y.iter().map(|v| v * v).sum(),
            BaseFunction::SeparableEllipsoid => conditioned_quadratic(y, 1e4),
            BaseFunction::Rosenbrock => {
                let mut s = 0.0;
                for j in 0..d.saturating_sub(1) {
                    let a = y[j + 1] + 1.0 - (y[j] + 1.0) * (y[j] + 1.0);
                    s += 100.0 * a * a + y[j] * y[j];
                }
                s
            }
            BaseFunction::AsymmetricSector => y
                .iter()
                .map(|&v| if v > 0.0 { 1e4 * v * v } else { v * v })
                .sum(),
            BaseFunction::HighConditionEllipsoid => conditioned_quadratic(y, 1e6),
            BaseFunction::Discus => {
                1e6 * y[0] * y[0] + y[1..].iter().map(|v| v * v).sum::<f64>()
            }
            BaseFunction::Rastrigin => {
                10.0 * d as f64
                    + y.iter()
                        .map(|&v| v * v - 10.0 * (2.0 * std::f64::consts::PI * v).cos())
                        .sum::<f64>()
            }
            BaseFunction::Griewank => {
                let sum: f64 = y.iter().map(|v| v * v).sum::<f64>() / 4000.0;
                let prod: f64 = y
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| (v / ((j + 1) as f64).sqrt()).cos())
                    .product();
                1.0 + sum - prod
            }
            BaseFunction::Deceptive => y
                .iter()
                .map(|&v| {
                    let narrow = 25.0 * v * v;
                    let wide = 0.5 * (v - 4.0) * (v - 4.0) + 10.0;
                    let ripple = 2.0 * (1.0 - (2.0 * std::f64::consts::PI * v).cos());
                    narrow.min(wide) + ripple
                })
                .sum(),
            BaseFunction::Gallagher { peaks } => {
                let best = peaks
                    .iter()
                    .map(|p| {
                        let dist2: f64 = y
                            .iter()
                            .zip(&p.center)
                            .map(|(a, b)| (a - b) * (a - b))
                            .sum();
                        p.height * (-p.width * dist2 / (2.0 * d as f64)).exp()
                    })
                    .fold(0.0, f64::max);
                10.0 - best
            }
        }
    }

    pub fn manifest_entry(&self) -> ManifestEntry {
        ManifestEntry {
            id: self.id.clone(),
            dimension: self.dimension,
            category: self.category.label().to_string(),
            f_opt: self.f_opt,
            shift_seed: self.shift_seed,
            rotation_seed: self.rotation_seed,
        }
    }
}

fn conditioned_quadratic(y: &[f64], condition: f64) -> f64 {
    let d = y.len();
    y.iter()
        .enumerate()
        .map(|(j, &v)| {
            let exponent = if d > 1 { j as f64 / (d - 1) as f64 } else { 0.0 };
            condition.powf(exponent) * v * v
        })
        .sum()
}

fn rotate(rot: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    rot.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Orthogonal matrix from the QR decomposition (modified Gram-Schmidt) of a
/// seeded Gaussian matrix, with diagonal signs fixed positive.
pub fn random_rotation(dimension: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = derive_rng(seed, 0x726f74, 0);
    let normal = rand_distr::StandardNormal;
    let mut cols: Vec<Vec<f64>> = (0..dimension)
        .map(|_| {
            (0..dimension)
                .map(|_| rand_distr::Distribution::sample(&normal, &mut rng))
                .collect()
        })
        .collect();
    for j in 0..dimension {
        for k in 0..j {
            let proj: f64 = (0..dimension).map(|i| cols[j][i] * cols[k][i]).sum();
            for i in 0..dimension {
                cols[j][i] -= proj * cols[k][i];
            }
        }
        let norm: f64 = cols[j].iter().map(|v| v * v).sum::<f64>().sqrt();
        // Sign fix keeps the construction unique for a given seed.
        let sign = if cols[j][j] < 0.0 { -1.0 } else { 1.0 };
        for v in &mut cols[j] {
            *v /= norm * sign;
        }
    }
    // Columns are orthonormal; rows of the returned matrix are those columns,
    // so the matrix applied row-wise is orthogonal.
    (0..dimension)
        .map(|i| (0..dimension).map(|j| cols[i][j]).collect())
        .collect()
}

const SUITE_IDS: [(&str, Category, bool); 10] = [
    ("sphere", Category::Separable, false),
    ("ellipsoid-sep", Category::Separable, false),
    ("rosenbrock-rot", Category::ModerateConditioning, true),
    ("sector", Category::ModerateConditioning, false),
    ("ellipsoid-hc-rot", Category::HighConditioning, true),
    ("discus", Category::HighConditioning, false),
    ("rastrigin-rot", Category::MultimodalStructured, true),
    ("griewank", Category::MultimodalStructured, false),
    ("deceptive", Category::MultimodalWeak, false),
    ("gallagher", Category::MultimodalWeak, false),
];

/// All function ids in suite order.
pub fn suite_function_ids() -> Vec<&'static str> {
    SUITE_IDS.iter().map(|(id, _, _)| *id).collect()
}

/// Builds one instance of the named function at dimension `d`.
pub fn make_problem(id: &str, dimension: usize, seed: u64) -> Result<Problem> {
    let index = SUITE_IDS
        .iter()
        .position(|(name, _, _)| *name == id)
        .ok_or_else(|| Error::UnknownProblem(id.to_string()))?;
    let (_, category, rotated) = SUITE_IDS[index];

    let shift_seed = seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(index as u64 * 1000 + dimension as u64);
    let mut shift_rng = derive_rng(shift_seed, 0x736866, 0);
    let x_opt: Vec<f64> = (0..dimension)
        .map(|_| shift_rng.random_range(-4.0..4.0))
        .collect();

    let rotation_seed = rotated.then_some(shift_seed.wrapping_add(1));
    let rotation = rotation_seed.map(|s| random_rotation(dimension, s));

    let base = match id {
        "sphere" => BaseFunction::Sphere,
        "ellipsoid-sep" => BaseFunction::SeparableEllipsoid,
        "rosenbrock-rot" => BaseFunction::Rosenbrock,
        "sector" => BaseFunction::AsymmetricSector,
        "ellipsoid-hc-rot" => BaseFunction::HighConditionEllipsoid,
        "discus" => BaseFunction::Discus,
        "rastrigin-rot" => BaseFunction::Rastrigin,
        "griewank" => BaseFunction::Griewank,
        "deceptive" => BaseFunction::Deceptive,
        "gallagher" => {
            let mut peak_rng = derive_rng(shift_seed, 0x706b73, 0);
            let mut peaks = vec![GallagherPeak {
                center: vec![0.0; dimension],
                height: 10.0,
                width: 2.0,
            }];
            for _ in 1..21 {
                peaks.push(GallagherPeak {
                    center: (0..dimension)
                        .map(|_| peak_rng.random_range(-4.0..4.0))
                        .collect(),
                    height: peak_rng.random_range(1.1..9.1),
                    width: peak_rng.random_range(1.0..5.0),
                });
            }
            BaseFunction::Gallagher { peaks }
        }
        _ => unreachable!(),
    };

    Ok(Problem {
        id: id.to_string(),
        dimension,
        bounds: vec![(-5.0, 5.0); dimension],
        f_opt: 0.0,
        x_opt,
        category,
        shift_seed: Some(shift_seed),
        rotation_seed,
        base,
        rotation,
    })
}

/// The full ten-function suite at each requested dimension.
pub fn make_suite(dimensions: &[usize], seed: u64) -> Result<Vec<Problem>> {
    let mut out = Vec::with_capacity(10 * dimensions.len());
    for &d in dimensions {
        for (id, _, _) in SUITE_IDS {
            out.push(make_problem(id, d, seed)?);
        }
    }
    Ok(out)
}
