//! Generic evaluation of the content `EC(p) = h(τ·log₂ p)` and of the
//! quasi-linear mean measure
//!
//! ```text
//! G(U; P) = h( Σ u_k log₂ p_k^τ )                    λ = 0
//! G(U; P) = h( (1/λ) log₂ Σ u_k p_k^{τλ} )           λ ≠ 0
//! ```
//!
//! with `τ < 0`. Choosing `h` linear or `(2^{cx} - 1)/e` gives the four-branch
//! polynomial inaccuracy class; `h = 2^{-cx}/e` gives the certainty class.
//!
//! Everything is computed on the argument of `h` first (the mean exponent,
//! always ≥ 0), then mapped through `h`. The inner sum is evaluated in the log
//! domain, so `p_k^{τλ}` never materializes.

use serde::Serialize;

use crate::composition::{compose, CompositionOp, GeneratorH};
use crate::distribution::{Distribution, WeightRule, WeightVector};
use crate::error::{Error, Result};
use crate::numeric::{compensated_sum, log2_mean_exp2};

pub const DEFAULT_LAMBDA_SWITCH: f64 = 1e-8;

/// Relative tolerance used by the identity checks.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

/// Routes `|λ| ≤ lambda_switch` to the logarithmic (λ = 0) branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchSelector {
    lambda_switch: f64,
}

impl BranchSelector {
    pub fn new(lambda_switch: f64) -> Result<Self> {
        if lambda_switch > 0.0 && lambda_switch.is_finite() {
            Ok(Self { lambda_switch })
        } else {
            Err(Error::ConstraintViolation(format!(
                "lambda switch must be positive, got {lambda_switch}"
            )))
        }
    }

    pub fn lambda_switch(&self) -> f64 {
        self.lambda_switch
    }

    pub fn is_log_branch(&self, lambda: f64) -> bool {
        lambda.abs() <= self.lambda_switch
    }
}

impl Default for BranchSelector {
    fn default() -> Self {
        Self {
            lambda_switch: DEFAULT_LAMBDA_SWITCH,
        }
    }
}

/// Engine parameters `(τ, λ, h)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureParams {
    pub tau: f64,
    pub lambda: f64,
    pub generator: GeneratorH,
}

impl MeasureParams {
    pub fn new(tau: f64, lambda: f64, generator: GeneratorH) -> Result<Self> {
        check_tau(tau)?;
        if !lambda.is_finite() {
            return Err(Error::ConstraintViolation(format!("lambda = {lambda} is not finite")));
        }
        Ok(Self {
            tau,
            lambda,
            generator,
        })
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if tau < 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(format!("tau must be negative, got {tau}")))
    }
}

/// `EC(p) = h(τ·log₂ p)` for `0 < p ≤ 1`.
pub fn inforcer_content(p: f64, params: &MeasureParams) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Domain(format!("content needs 0 < p <= 1, got {p}")));
    }
    check_tau(params.tau)?;
    params.generator.apply(params.tau * p.log2())
}

/// The argument of `h`: `Σ u_k τ log₂ p_k` or `(1/λ) log₂ Σ u_k p_k^{τλ}`.
///
/// Weights are divided by their sum, so inputs accepted within the simplex
/// tolerance are averaged exactly. Zero weights annihilate their term even when
/// `p_k = 0`; a positive weight on `p_k = 0` is a domain error.
pub fn mean_exponent(
    u: &WeightVector,
    p: &Distribution,
    tau: f64,
    lambda: f64,
    sel: &BranchSelector,
) -> Result<f64> {
    if u.len() != p.len() {
        return Err(Error::LengthMismatch {
            expected: p.len(),
            found: u.len(),
        });
    }
    check_tau(tau)?;
    let mut weights = Vec::with_capacity(p.len());
    let mut logs = Vec::with_capacity(p.len());
    for (k, (&uk, &pk)) in u.values().iter().zip(p.values()).enumerate() {
        if uk == 0.0 {
            continue;
        }
        if pk <= 0.0 {
            return Err(Error::Domain(format!(
                "p[{k}] = {pk} carries positive weight u[{k}] = {uk}"
            )));
        }
        weights.push(uk);
        logs.push(pk.log2());
    }
    if weights.is_empty() {
        return Err(Error::DegenerateWeights("every weight is zero".into()));
    }

    let x = if sel.is_log_branch(lambda) {
        let total = compensated_sum(weights.iter().copied());
        tau * compensated_sum(weights.iter().zip(&logs).map(|(w, l)| w * l)) / total
    } else {
        let exponents: Vec<f64> = logs.iter().map(|l| tau * lambda * l).collect();
        let mean = log2_mean_exp2(&weights, &exponents)
            .ok_or_else(|| Error::DegenerateWeights("every weight is zero".into()))?;
        mean / lambda
    };
    if !x.is_finite() {
        return Err(Error::Overflow(format!(
            "mean exponent is {x} for tau = {tau}, lambda = {lambda}"
        )));
    }
    // Nonnegative for τ < 0 and p ≤ 1; only rounding can push it below zero.
    Ok(x.max(0.0))
}

/// `G(U; P)` for an arbitrary generator.
pub fn inforcer_measure(
    u: &WeightVector,
    p: &Distribution,
    params: &MeasureParams,
    sel: &BranchSelector,
) -> Result<f64> {
    let x = mean_exponent(u, p, params.tau, params.lambda, sel)?;
    params.generator.apply(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Inaccuracy,
    Certainty,
}

/// Parameters `(τ, λ, c, e)` of the polynomially composable classes.
///
/// For inaccuracy, `e = 0` selects the linear generator (with `a = 1`) and `c`
/// is unused; otherwise `h(x) = (2^{cx} - 1)/e` with `c·e > 0`. Certainty uses
/// `h(x) = 2^{-cx}/e` and additionally requires `e > 0` so that the measure
/// stays positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolyParams {
    pub family: Family,
    pub tau: f64,
    pub lambda: f64,
    pub c: f64,
    pub e: f64,
}

impl PolyParams {
    pub fn inaccuracy(tau: f64, lambda: f64, c: f64, e: f64) -> Result<Self> {
        let params = Self {
            family: Family::Inaccuracy,
            tau,
            lambda,
            c,
            e,
        };
        params.validate()?;
        Ok(params)
    }

    /// Logarithmic inaccuracy (`e = 0`).
    pub fn log_inaccuracy(tau: f64, lambda: f64) -> Result<Self> {
        Self::inaccuracy(tau, lambda, 0.0, 0.0)
    }

    pub fn certainty(tau: f64, lambda: f64, c: f64, e: f64) -> Result<Self> {
        let params = Self {
            family: Family::Certainty,
            tau,
            lambda,
            c,
            e,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        check_tau(self.tau)?;
        for (name, v) in [("lambda", self.lambda), ("c", self.c), ("e", self.e)] {
            if !v.is_finite() {
                return Err(Error::ConstraintViolation(format!("{name} = {v} is not finite")));
            }
        }
        match self.family {
            Family::Inaccuracy if self.e != 0.0 && self.c * self.e <= 0.0 => {
                Err(Error::ConstraintViolation(format!(
                    "inaccuracy with e != 0 needs c·e > 0, got c = {}, e = {}",
                    self.c, self.e
                )))
            }
            Family::Certainty if !(self.c > 0.0 && self.e > 0.0) => {
                Err(Error::ConstraintViolation(format!(
                    "certainty needs c·e > 0 with e > 0, got c = {}, e = {}",
                    self.c, self.e
                )))
            }
            _ => Ok(()),
        }
    }

    /// True for the logarithmic (linear generator) inaccuracy branches.
    pub fn is_logarithmic(&self) -> bool {
        self.family == Family::Inaccuracy && self.e == 0.0
    }

    pub fn generator(&self) -> GeneratorH {
        match self.family {
            Family::Inaccuracy if self.e == 0.0 => GeneratorH::identity(),
            Family::Inaccuracy => GeneratorH::ExpInfo {
                c: self.c,
                e: self.e,
            },
            Family::Certainty => GeneratorH::ExpCert {
                c: self.c,
                e: self.e,
            },
        }
    }

    pub fn measure_params(&self) -> MeasureParams {
        MeasureParams {
            tau: self.tau,
            lambda: self.lambda,
            generator: self.generator(),
        }
    }

    /// `⊕_e` for inaccuracy (plain `+` when `e = 0`), `e·x·y` for certainty.
    pub fn composition(&self) -> CompositionOp {
        self.generator().composition()
    }

    pub fn evaluate(&self, u: &WeightVector, p: &Distribution, sel: &BranchSelector) -> Result<f64> {
        self.validate()?;
        inforcer_measure(u, p, &self.measure_params(), sel)
    }
}

/// Polynomial inaccuracy: the four `(λ ≈ 0?, e = 0?)` branches.
pub fn inaccuracy(
    u: &WeightVector,
    p: &Distribution,
    tau: f64,
    lambda: f64,
    c: f64,
    e: f64,
    sel: &BranchSelector,
) -> Result<f64> {
    PolyParams::inaccuracy(tau, lambda, c, e)?.evaluate(u, p, sel)
}

/// Polynomial certainty: `(1/e)·2^{-τ c Σ u log₂ p}` or `(1/e)(Σ u p^{τλ})^{-c/λ}`.
pub fn certainty(
    u: &WeightVector,
    p: &Distribution,
    tau: f64,
    lambda: f64,
    c: f64,
    e: f64,
    sel: &BranchSelector,
) -> Result<f64> {
    PolyParams::certainty(tau, lambda, c, e)?.evaluate(u, p, sel)
}

/// `H(P) = G(u(P); P)` with the weights derived by `rule`.
pub fn entropy(
    p: &Distribution,
    rule: &WeightRule,
    params: &PolyParams,
    sel: &BranchSelector,
) -> Result<f64> {
    let u = rule.build(p)?;
    params.evaluate(&u, p, sel)
}

/// Outcome of a numerical identity check `lhs = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VerificationReport {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub passed: bool,
    pub tolerance: f64,
}

impl VerificationReport {
    /// Relative comparison, falling back to absolute error when `|rhs| < 1`.
    pub fn compare(lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if abs_err == 0.0 {
            0.0
        } else if rhs == 0.0 {
            f64::INFINITY
        } else {
            abs_err / rhs.abs()
        };
        let passed = if rhs.abs() < 1.0 {
            rel_err <= tolerance || abs_err <= tolerance
        } else {
            rel_err <= tolerance
        };
        Self {
            lhs,
            rhs,
            abs_err,
            rel_err,
            passed: passed && lhs.is_finite() && rhs.is_finite(),
            tolerance,
        }
    }
}

/// Checks `G(U ⋆ V; P ⋆ Q) = G(U; P) ⊙ G(V; Q)` with the generator's own `⊙`.
#[allow(clippy::too_many_arguments)]
pub fn verify_composability(
    params: &MeasureParams,
    u: &WeightVector,
    p: &Distribution,
    v: &WeightVector,
    q: &Distribution,
    sel: &BranchSelector,
    tolerance: f64,
) -> Result<VerificationReport> {
    let lhs = inforcer_measure(&u.direct_product(v), &p.direct_product(q), params, sel)?;
    let first = inforcer_measure(u, p, params, sel)?;
    let second = inforcer_measure(v, q, params, sel)?;
    let rhs = compose(&params.generator.composition(), first, second)?;
    Ok(VerificationReport::compare(lhs, rhs, tolerance))
}

/// Checks `EC(p·q) = EC(p) ⊙ EC(q)`.
pub fn verify_content_law(
    params: &MeasureParams,
    p: f64,
    q: f64,
    tolerance: f64,
) -> Result<VerificationReport> {
    let lhs = inforcer_content(p * q, params)?;
    let rhs = compose(
        &params.generator.composition(),
        inforcer_content(p, params)?,
        inforcer_content(q, params)?,
    )?;
    Ok(VerificationReport::compare(lhs, rhs, tolerance))
}
