//! Monte Carlo recovery experiments over integer-valued sparse signals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{solve_ht, solve_ls, solve_omp, solve_promp, MeasurementMatrix};

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub sparsities: Vec<usize>,
    pub trials: usize,
    /// Exact Euclidean norm given to the additive noise; zero means
    /// noiseless.
    pub noise_norm: f64,
    pub seed: u64,
    /// Nonzero amplitudes are drawn uniformly from {-max_amp..max_amp}\{0}.
    pub max_amp: i64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig { sparsities: (1..=5).collect(), trials: 500, noise_norm: 0.0, seed: 7, max_amp: 5 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub sparsity: usize,
    pub method: &'static str,
    pub success_rate: f64,
    pub mean_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentTable {
    pub rows: Vec<ExperimentRow>,
}

impl ExperimentTable {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("sparsity,method,success_rate,mean_error\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.6},{:.6}\n",
                r.sparsity, r.method, r.success_rate, r.mean_error
            ));
        }
        out
    }

    pub fn rate(&self, method: &str, sparsity: usize) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.method == method && r.sparsity == sparsity)
            .map(|r| r.success_rate)
    }

    pub fn error(&self, method: &str, sparsity: usize) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.method == method && r.sparsity == sparsity)
            .map(|r| r.mean_error)
    }
}

pub const METHODS: [&str; 4] = ["LS", "HT", "OMP", "PrOMP"];

/// Runs the four solvers over seeded random integer-valued sparse signals
/// and tabulates exact-recovery rates and mean errors. Per-trial RNG
/// streams are derived deterministically from the master seed, so output is
/// bit-reproducible.
pub fn run_experiment(a: &MeasurementMatrix, config: &ExperimentConfig) -> ExperimentTable {
    let mut rows = Vec::new();
    for &s in &config.sparsities {
        let mut successes = [0usize; 4];
        let mut errors = [0f64; 4];
        for trial in 0..config.trials {
            let mut rng = trial_rng(config.seed, s, trial);
            let x = random_sparse_signal(&mut rng, a.cols, s, config.max_amp);
            let mut y = a.mul_vec(&x);
            if config.noise_norm > 0.0 {
                add_scaled_noise(&mut rng, &mut y, config.noise_norm);
            }
            let results = [
                solve_ls(a, &y),
                solve_ht(a, &y, s.max(1)),
                solve_omp(a, &y, s.max(1)),
                solve_promp(a, &y, s.max(1)),
            ];
            for (k, r) in results.into_iter().enumerate() {
                if r.matches_exactly(&x) {
                    successes[k] += 1;
                }
                errors[k] += r.error_norm(&x);
            }
        }
        for (k, method) in METHODS.into_iter().enumerate() {
            rows.push(ExperimentRow {
                sparsity: s,
                method,
                success_rate: successes[k] as f64 / config.trials as f64,
                mean_error: errors[k] / config.trials as f64,
            });
        }
    }
    ExperimentTable { rows }
}

fn trial_rng(seed: u64, sparsity: usize, trial: usize) -> ChaCha8Rng {
    let stream = seed
        ^ (sparsity as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)
        ^ (trial as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    ChaCha8Rng::seed_from_u64(stream)
}

fn random_sparse_signal(rng: &mut ChaCha8Rng, n: usize, sparsity: usize, max_amp: i64) -> Vec<f64> {
    let mut x = vec![0.0; n];
    let mut support: Vec<usize> = Vec::with_capacity(sparsity);
    while support.len() < sparsity {
        let j = rng.gen_range(0..n);
        if !support.contains(&j) {
            support.push(j);
        }
    }
    for j in support {
        let mut v = 0i64;
        while v == 0 {
            v = rng.gen_range(-max_amp..=max_amp);
        }
        x[j] = v as f64;
    }
    x
}

/// Gaussian noise by Box-Muller, rescaled to the exact requested norm.
fn add_scaled_noise(rng: &mut ChaCha8Rng, y: &mut [f64], target_norm: f64) {
    let mut noise: Vec<f64> = Vec::with_capacity(y.len());
    while noise.len() < y.len() {
        let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
        let u2: f64 = rng.gen_range(0.0..1.0);
        let r = (-2.0 * u1.ln()).sqrt();
        noise.push(r * (2.0 * std::f64::consts::PI * u2).cos());
        if noise.len() < y.len() {
            noise.push(r * (2.0 * std::f64::consts::PI * u2).sin());
        }
    }
    let norm: f64 = noise.iter().map(|x| x * x).sum::<f64>().sqrt();
    for (yi, ni) in y.iter_mut().zip(noise) {
        *yi += ni * target_norm / norm;
    }
}

#[cfg(test)]
mod tests {
    use super::super::{steiner_etf, steiner_triple_system};
    use super::*;

    fn fano_matrix() -> MeasurementMatrix {
        steiner_etf(&steiner_triple_system(7).unwrap()).unwrap()
    }

    #[test]
    fn zero_sparsity_recovers_perfectly() {
        let a = fano_matrix();
        let config = ExperimentConfig {
            sparsities: vec![0],
            trials: 5,
            ..ExperimentConfig::default()
        };
        let table = run_experiment(&a, &config);
        for method in METHODS {
            assert_eq!(table.rate(method, 0), Some(1.0), "{method}");
            assert!(table.error(method, 0).unwrap() < 1e-9);
        }
    }

    #[test]
    fn experiment_is_reproducible() {
        let a = fano_matrix();
        let config = ExperimentConfig {
            sparsities: vec![1, 2],
            trials: 25,
            noise_norm: 0.1,
            ..ExperimentConfig::default()
        };
        let t1 = run_experiment(&a, &config);
        let t2 = run_experiment(&a, &config);
        assert_eq!(t1.to_csv(), t2.to_csv());
    }

    #[test]
    fn omp_dominates_at_low_sparsity() {
        let a = fano_matrix();
        let config = ExperimentConfig {
            sparsities: vec![1, 2],
            trials: 100,
            ..ExperimentConfig::default()
        };
        let table = run_experiment(&a, &config);
        assert_eq!(table.rate("OMP", 1), Some(1.0));
        let promp2 = table.rate("PrOMP", 2).unwrap();
        let omp2 = table.rate("OMP", 2).unwrap();
        assert!(promp2 >= omp2, "PrOMP {promp2} vs OMP {omp2}");
    }
}
