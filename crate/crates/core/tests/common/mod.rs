//! Random inputs shared by the integration and acceptance tests.
#![allow(dead_code)]

use inforcer::distribution::{Distribution, UtilityVector, WeightVector};
use inforcer::registry::{MeasureInput, MeasureSpec, Param, UserParams, WeightRuleKind};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A strictly positive distribution with entries bounded away from 0 and 1.
pub fn distribution(rng: &mut impl Rng, n: usize) -> Distribution {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    Distribution::renormalized(&raw, inforcer::distribution::Positivity::StrictlyPositive).unwrap()
}

pub fn weights(rng: &mut impl Rng, n: usize) -> WeightVector {
    let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    WeightVector::renormalized(&raw).unwrap()
}

pub fn utilities(rng: &mut impl Rng, n: usize) -> UtilityVector {
    UtilityVector::new((0..n).map(|_| rng.gen_range(0.1..5.0)).collect()).unwrap()
}

/// An order parameter in (0.1, 5) at least 0.05 away from 1.
pub fn order(rng: &mut impl Rng) -> f64 {
    loop {
        let a = rng.gen_range(0.1..5.0);
        if (a - 1.0_f64).abs() >= 0.05 {
            return a;
        }
    }
}

/// A value in (lo, hi) of random sign.
pub fn signed(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let v = rng.gen_range(lo..hi);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

/// Admissible parameters for a row; `n` is the dimension, used for per-index exponents.
pub fn params(spec: &MeasureSpec, rng: &mut impl Rng, n: usize) -> UserParams {
    let mut q = UserParams::new();
    match spec.name {
        "varma_1" => {
            let mu = rng.gen_range(1.0..3.0);
            q = q.with(Param::Mu, mu).with(Param::Alpha, mu - rng.gen_range(0.05..0.95));
        }
        "varma_2" => {
            let mu = rng.gen_range(1.0..3.0);
            let ratio = loop {
                let r: f64 = rng.gen_range(0.05..0.98);
                if (1.0 - r).abs() >= 0.05 {
                    break r;
                }
            };
            q = q.with(Param::Mu, mu).with(Param::Alpha, ratio * mu);
        }
        "nath_1" | "nath_2" => {
            q = q.with(Param::Alpha, order(rng)).with(Param::Mu, rng.gen_range(0.2..3.0));
        }
        "aczel_daroczy_1" | "singh" => {
            q = q.with(Param::Beta, rng.gen_range(0.1..3.0));
            if spec.name == "singh" {
                q = q.with(Param::Alpha, order(rng));
            }
        }
        "aczel_daroczy_2" => {
            let a = rng.gen_range(0.1..3.0);
            let b = loop {
                let b: f64 = rng.gen_range(0.1..3.0);
                if (a - b).abs() >= 0.05 {
                    break b;
                }
            };
            q = q.with(Param::Alpha, a).with(Param::Beta, b);
        }
        "kapur" | "khan_autar" => {
            let a = order(rng);
            let lo = (1.05 - a).max(0.1);
            q = q.with(Param::Alpha, a).with(Param::Beta, rng.gen_range(lo..lo + 3.0));
        }
        "rathie" => {
            let a = order(rng);
            q = q.with(Param::Alpha, a).with_betas(rathie_betas(rng, a, n));
        }
        "teodorescu" | "pardo_taneja" | "pardo" => {
            q = q.with(Param::Gamma, rng.gen_range(1.05..5.0));
        }
        "tuteja" => {
            q = q
                .with(Param::Gamma, rng.gen_range(1.05..5.0))
                .with(Param::Beta, rng.gen_range(1.05..5.0));
        }
        "van_der_lubbe_certainty_1" | "van_der_lubbe_certainty_2" | "bhatia_1" | "bhatia_2" => {
            q = q.with(Param::Tau, rng.gen_range(0.1..3.0));
            if spec.params.contains(&Param::Lambda) {
                q = q.with(Param::Lambda, signed(rng, 0.05, 2.0));
            }
            if spec.params.contains(&Param::Beta) {
                q = q.with(Param::Beta, rng.gen_range(0.1..3.0));
            }
        }
        _ => {
            for &param in spec.params {
                let v = match param {
                    Param::Alpha | Param::Gamma => order(rng),
                    Param::Tau => -rng.gen_range(0.1..3.0),
                    Param::Lambda => signed(rng, 0.05, 2.0),
                    _ => continue,
                };
                q = q.with(param, v);
            }
            if spec.params.contains(&Param::E) {
                let c = signed(rng, 0.1, 2.0);
                let e = c.signum() * rng.gen_range(0.1..2.0);
                q = q.with(Param::C, c).with(Param::E, e);
            }
        }
    }
    q
}

/// Per-index exponents with `beta_i > 0` and `alpha + beta_i > 1`.
pub fn rathie_betas(rng: &mut impl Rng, alpha: f64, n: usize) -> Vec<f64> {
    let lo = (1.05 - alpha).max(0.1);
    (0..n).map(|_| rng.gen_range(lo..lo + 3.0)).collect()
}

/// Random inputs matching a row's weight rule.
pub struct Inputs {
    pub p: Distribution,
    pub u: Option<WeightVector>,
    pub v: Option<UtilityVector>,
}

impl Inputs {
    pub fn draw(spec: &MeasureSpec, rng: &mut impl Rng, n: usize) -> Self {
        let p = distribution(rng, n);
        let u = spec.needs_external_weights().then(|| weights(rng, n));
        let v = (spec.weight_rule == WeightRuleKind::Utility).then(|| utilities(rng, n));
        Self { p, u, v }
    }

    pub fn as_input(&self) -> MeasureInput<'_> {
        MeasureInput {
            p: &self.p,
            u: self.u.as_ref(),
            utilities: self.v.as_ref(),
        }
    }
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if got == want {
        0.0
    } else {
        (got - want).abs() / want.abs()
    }
}
