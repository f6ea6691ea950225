//! Seeded Monte-Carlo estimation of the measure of generic sets: regular
//! sequences, full-height and unit ideals, generic degrees of autonomy and
//! generic controller strength.
//!
//! Systems are sampled with monomial support bounded in degree, integer
//! coefficients in a configurable range and an inclusion probability per
//! monomial. Trials derive independent ChaCha streams from the master seed
//! by a counter split, so histograms are reproducible bit-for-bit regardless
//! of how trials are scheduled.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::behavior::{AutonomyDegree, SystemMatrix};
use crate::control::{generic_degree, strength};
use crate::ideal::{is_regular_sequence, LaurentIdeal};
use crate::poly::{monomials_up_to_degree, LaurentPoly, Rational};

/// Parameters of the sampled matrix space: shape, degree bound, coefficient
/// range, per-monomial density and the master seed.
#[derive(Clone, PartialEq, Debug)]
pub struct SampleSpec {
    pub n: usize,
    pub k: usize,
    pub rows: usize,
    pub degree_bound: u64,
    pub coeff_low: i64,
    pub coeff_high: i64,
    pub density: f64,
    pub seed: u64,
}

impl SampleSpec {
    pub fn new(n: usize, k: usize, rows: usize, degree_bound: u64, seed: u64) -> SampleSpec {
        SampleSpec {
            n,
            k,
            rows,
            degree_bound,
            coeff_low: -5,
            coeff_high: 5,
            density: 1.0,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n < 1 {
            return Err("lattice dimension must be at least 1".into());
        }
        if self.k < 1 {
            return Err("system must have at least one variable".into());
        }
        if self.coeff_low > self.coeff_high {
            return Err("empty coefficient range".into());
        }
        if self.coeff_low == 0 && self.coeff_high == 0 {
            return Err("coefficient range contains no nonzero integer".into());
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err("density must lie in (0, 1]".into());
        }
        Ok(())
    }

    fn assert_valid(&self) {
        if let Err(msg) = self.validate() {
            panic!("invalid sample spec: {msg}");
        }
    }
}

/// Empirical outcome frequencies of one experiment.
#[derive(Clone, PartialEq, Debug)]
pub struct ExperimentStats {
    pub trials: u64,
    pub histogram: BTreeMap<String, u64>,
    /// Histogram key predicted by the genericity statement under test.
    pub predicted: String,
    pub generic_count: u64,
    pub wall_time: Duration,
    pub seed: u64,
}

impl ExperimentStats {
    fn from_outcomes(
        outcomes: Vec<String>,
        predicted: String,
        wall_time: Duration,
        seed: u64,
    ) -> ExperimentStats {
        let trials = outcomes.len() as u64;
        let mut histogram: BTreeMap<String, u64> = BTreeMap::new();
        for o in outcomes {
            *histogram.entry(o).or_insert(0) += 1;
        }
        let generic_count = histogram.get(&predicted).copied().unwrap_or(0);
        let total: u64 = histogram.values().sum();
        assert_eq!(total, trials, "histogram counts must sum to the trial count");
        ExperimentStats {
            trials,
            histogram,
            predicted,
            generic_count,
            wall_time,
            seed,
        }
    }

    /// Fraction of trials hitting the predicted generic outcome.
    pub fn fraction_generic(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.generic_count as f64 / self.trials as f64
    }
}

/// One random nonzero Laurent polynomial: each monomial of degree at most
/// the bound is included with probability `density`, with a uniform nonzero
/// integer coefficient from the configured range.
pub fn sample_poly(spec: &SampleSpec, rng: &mut ChaCha8Rng) -> LaurentPoly {
    spec.assert_valid();
    let support = monomials_up_to_degree(spec.n, spec.degree_bound);
    loop {
        let mut terms = Vec::new();
        for m in &support {
            if !rng.gen_bool(spec.density) {
                continue;
            }
            let coeff = loop {
                let c = rng.gen_range(spec.coeff_low..=spec.coeff_high);
                if c != 0 {
                    break c;
                }
            };
            terms.push((m.clone(), Rational::from(BigInt::from(coeff))));
        }
        let p = LaurentPoly::from_terms(spec.n, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// One random matrix in the sampled space; every entry is a nonzero
/// polynomial, so no row degenerates to zero.
pub fn sample_matrix(spec: &SampleSpec, rng: &mut ChaCha8Rng) -> SystemMatrix {
    let rows = (0..spec.rows)
        .map(|_| (0..spec.k).map(|_| sample_poly(spec, rng)).collect())
        .collect();
    SystemMatrix::new(spec.n, spec.k, rows)
}

/// Runs `trials` independent trials with per-trial ChaCha streams split off
/// the master seed. Results are collected in trial order, so the outcome is
/// identical however the trials are scheduled.
fn run_trials<T, F>(trials: u64, seed: u64, trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            trial(&mut rng)
        })
        .collect()
}

/// Frequency with which `rows`-tuples of sampled polynomials form regular
/// sequences (`rows <= n`). Every passing tuple is checked to generate an
/// ideal of height `rows`, and every proper nonzero sampled ideal to have
/// height at most `rows`.
pub fn expt_regular_sequences(spec: &SampleSpec, trials: u64) -> ExperimentStats {
    spec.assert_valid();
    let r = spec.rows;
    assert!(r >= 1 && r <= spec.n, "regular sequence experiment requires 1 <= rows <= n");
    let start = Instant::now();
    let outcomes = run_trials(trials, spec.seed, |rng| {
        let seq: Vec<LaurentPoly> = (0..r).map(|_| sample_poly(spec, rng)).collect();
        let regular = is_regular_sequence(&seq);
        let ideal = LaurentIdeal::from_gens(spec.n, seq);
        if ideal.is_proper() && !ideal.is_zero() {
            assert!(ideal.height() <= r, "height exceeded the generator count");
        }
        if regular {
            assert_eq!(ideal.height(), r, "regular sequence of deficient height");
            "regular".to_string()
        } else {
            "not_regular".to_string()
        }
    });
    ExperimentStats::from_outcomes(outcomes, "regular".into(), start.elapsed(), spec.seed)
}

/// Frequency with which `rows`-tuples (`rows > n`) generate the unit ideal
/// of the Laurent ring.
pub fn expt_unit_ideal(spec: &SampleSpec, trials: u64) -> ExperimentStats {
    spec.assert_valid();
    assert!(spec.rows > spec.n, "unit ideal experiment requires rows > n");
    let start = Instant::now();
    let outcomes = run_trials(trials, spec.seed, |rng| {
        let gens: Vec<LaurentPoly> = (0..spec.rows).map(|_| sample_poly(spec, rng)).collect();
        let ideal = LaurentIdeal::from_gens(spec.n, gens);
        if ideal.is_proper() {
            "not_unit".to_string()
        } else {
            "unit".to_string()
        }
    });
    ExperimentStats::from_outcomes(outcomes, "unit".into(), start.elapsed(), spec.seed)
}

/// Histogram of the degree of autonomy over sampled matrices. The predicted
/// generic value is 0 for wide matrices, `rows - k + 1` when that lies in
/// `[1, n]`, and infinity beyond. Over-determined trials are checked against
/// the determinantal height bound: a finite degree above `rows - k + 1` is a
/// bug, not noise.
pub fn expt_generic_degree(spec: &SampleSpec, trials: u64) -> ExperimentStats {
    spec.assert_valid();
    let predicted = generic_degree(spec.n, spec.k, spec.rows);
    let start = Instant::now();
    let outcomes = run_trials(trials, spec.seed, |rng| {
        let m = sample_matrix(spec, rng);
        let degree = m.degree_of_autonomy();
        if spec.rows >= spec.k {
            let bound = spec.rows - spec.k + 1;
            if let AutonomyDegree::Finite(d) = degree {
                assert!(d <= bound, "degree {d} exceeded the bound {bound}");
            }
        }
        degree.to_string()
    });
    ExperimentStats::from_outcomes(outcomes, predicted.to_string(), start.elapsed(), spec.seed)
}

/// Histogram of controller strength over independently sampled
/// (plant, controller) pairs; the controller shares the plant's sampling
/// parameters with its own row count. Predicted generic strength: the full
/// combined degree `rows + controller_rows - k + 1` for wide plants, the
/// controller row count for plants with `rows >= k`, infinity when the
/// combined count exceeds `n`.
pub fn expt_controller_strength(
    plant_spec: &SampleSpec,
    controller_rows: usize,
    trials: u64,
) -> ExperimentStats {
    plant_spec.assert_valid();
    let n = plant_spec.n;
    let k = plant_spec.k;
    let combined = generic_degree(n, k, plant_spec.rows + controller_rows);
    let predicted = match combined {
        AutonomyDegree::Infinite => AutonomyDegree::Infinite,
        AutonomyDegree::Finite(s) => {
            if plant_spec.rows < k {
                AutonomyDegree::Finite(s)
            } else {
                AutonomyDegree::Finite(controller_rows)
            }
        }
    };
    let mut controller_spec = plant_spec.clone();
    controller_spec.rows = controller_rows;
    let start = Instant::now();
    let outcomes = run_trials(trials, plant_spec.seed, |rng| {
        let plant = sample_matrix(plant_spec, rng);
        let controller = sample_matrix(&controller_spec, rng);
        let report = strength(&plant, &controller);
        // For a plant of generic degree the combined height bound caps the
        // strength by the controller row count.
        if plant_spec.rows >= k
            && report.delta_plant == AutonomyDegree::Finite(plant_spec.rows - k + 1)
        {
            if let AutonomyDegree::Finite(s) = report.strength {
                assert!(
                    s <= controller_rows,
                    "strength {s} exceeded the controller size {controller_rows}"
                );
            }
        }
        report.strength.to_string()
    });
    ExperimentStats::from_outcomes(
        outcomes,
        predicted.to_string(),
        start.elapsed(),
        plant_spec.seed,
    )
}
