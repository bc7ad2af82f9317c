//! Probability vectors on the simplex, weight vectors and their algebra.
//!
//! Nothing here renormalizes silently: constructors validate and reject.
//! [`Distribution::renormalized`] exists for callers that opt in explicitly.

use crate::error::{Error, Result};
use crate::numeric::compensated_sum;

/// Absolute tolerance on `|Σ p - 1|`.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Positivity {
    /// Entries may be zero (Δ_n).
    NonNegative,
    /// Every entry must be strictly positive (Δ_n⁺).
    StrictlyPositive,
}

/// A validated probability vector of length at least 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    values: Vec<f64>,
    positivity: Positivity,
}

fn validate_simplex(values: &[f64], mode: Positivity) -> Result<()> {
    if values.len() < 2 {
        return Err(Error::TooShort { len: values.len() });
    }
    for (index, &value) in values.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { index, value });
        }
        let admissible = match mode {
            Positivity::NonNegative => value >= 0.0,
            Positivity::StrictlyPositive => value > 0.0,
        };
        if !admissible {
            return Err(Error::NegativeMass { index, value });
        }
    }
    let sum = compensated_sum(values.iter().copied());
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NotNormalized {
            sum,
            tolerance: NORMALIZATION_TOLERANCE,
        });
    }
    Ok(())
}

fn rescale(values: &[f64]) -> Result<Vec<f64>> {
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFinite { index, value });
    }
    if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| **v < 0.0) {
        return Err(Error::NegativeMass { index, value });
    }
    let sum = compensated_sum(values.iter().copied());
    if !(sum > 0.0 && sum.is_finite()) {
        return Err(Error::NotNormalized {
            sum,
            tolerance: NORMALIZATION_TOLERANCE,
        });
    }
    Ok(values.iter().map(|v| v / sum).collect())
}

impl Distribution {
    pub fn new(values: Vec<f64>, positivity: Positivity) -> Result<Self> {
        validate_simplex(&values, positivity)?;
        Ok(Self { values, positivity })
    }

    /// Shorthand for a distribution in Δ_n (zeros allowed).
    pub fn nonneg(values: Vec<f64>) -> Result<Self> {
        Self::new(values, Positivity::NonNegative)
    }

    /// Shorthand for a distribution in Δ_n⁺.
    pub fn positive(values: Vec<f64>) -> Result<Self> {
        Self::new(values, Positivity::StrictlyPositive)
    }

    /// Divides by the sum, then validates.
    pub fn renormalized(values: &[f64], positivity: Positivity) -> Result<Self> {
        Self::new(rescale(values)?, positivity)
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort { len: n });
        }
        Ok(Self {
            values: vec![1.0 / n as f64; n],
            positivity: Positivity::StrictlyPositive,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn positivity(&self) -> Positivity {
        self.positivity
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.values.iter().all(|&v| v > 0.0)
    }

    /// Direct product `P ⋆ Q = (p_1 q_1, p_1 q_2, …, p_n q_m)`, row-major.
    pub fn direct_product(&self, other: &Distribution) -> Distribution {
        let positivity = if self.positivity == Positivity::StrictlyPositive
            && other.positivity == Positivity::StrictlyPositive
        {
            Positivity::StrictlyPositive
        } else {
            Positivity::NonNegative
        };
        Distribution {
            values: outer(&self.values, &other.values),
            positivity,
        }
    }
}

/// Free-function form of [`Distribution::direct_product`].
pub fn direct_product(p: &Distribution, q: &Distribution) -> Distribution {
    p.direct_product(q)
}

fn outer(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| x * y))
        .collect()
}

/// Averaging weights `U ∈ Δ_n`. Zeros are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    values: Vec<f64>,
}

impl WeightVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        validate_simplex(&values, Positivity::NonNegative)?;
        Ok(Self { values })
    }

    pub fn renormalized(values: &[f64]) -> Result<Self> {
        Self::new(rescale(values)?)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn direct_product(&self, other: &WeightVector) -> WeightVector {
        WeightVector {
            values: outer(&self.values, &other.values),
        }
    }

    /// Weights that are already normalized by construction.
    fn from_normalized(values: Vec<f64>) -> Self {
        Self { values }
    }
}

impl From<&Distribution> for WeightVector {
    fn from(p: &Distribution) -> Self {
        WeightVector {
            values: p.values.clone(),
        }
    }
}

/// Unnormalized positive utilities `v_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityVector {
    values: Vec<f64>,
}

impl UtilityVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::TooShort { len: 0 });
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
            if value <= 0.0 {
                return Err(Error::NegativeMass { index, value });
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Utilities of independent pairs multiply, in [`direct_product`] order.
    pub fn direct_product(&self, other: &UtilityVector) -> UtilityVector {
        UtilityVector {
            values: outer(&self.values, &other.values),
        }
    }
}

fn ensure_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// Natural log of `p^β`, with `0^β` handled for β ≥ 0.
fn ln_power(p: f64, beta: f64, index: usize) -> Result<f64> {
    if !beta.is_finite() {
        return Err(Error::DegenerateWeights(format!("exponent {beta} is not finite")));
    }
    if p > 0.0 {
        Ok(beta * p.ln())
    } else if beta > 0.0 {
        Ok(f64::NEG_INFINITY)
    } else if beta == 0.0 {
        Ok(0.0)
    } else {
        Err(Error::Domain(format!(
            "p[{index}] = 0 raised to negative exponent {beta}"
        )))
    }
}

/// Normalizes `exp(l_k)` without forming the raw sum, so huge or tiny powers
/// neither overflow nor flush the normalizer to zero.
fn normalize_log_terms(log_terms: &[f64]) -> Result<WeightVector> {
    let max = log_terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return Err(Error::DegenerateWeights("every term is zero".into()));
    }
    if !max.is_finite() {
        return Err(Error::DegenerateWeights("a term is infinite".into()));
    }
    let scaled: Vec<f64> = log_terms.iter().map(|l| (l - max).exp()).collect();
    let total = compensated_sum(scaled.iter().copied());
    if !(total.is_finite() && total > 0.0) {
        return Err(Error::DegenerateWeights(format!("normalizer {total}")));
    }
    Ok(WeightVector::from_normalized(
        scaled.into_iter().map(|s| s / total).collect(),
    ))
}

/// Escort weights `u_k = p_k^β / Σ_i p_i^β`.
pub fn escort_weights(p: &Distribution, beta: f64) -> Result<WeightVector> {
    let logs = p
        .values()
        .iter()
        .enumerate()
        .map(|(i, &pk)| ln_power(pk, beta, i))
        .collect::<Result<Vec<_>>>()?;
    normalize_log_terms(&logs)
}

/// Escort weights with one exponent per index, `u_k ∝ p_k^{β_k}`.
pub fn per_index_escort_weights(p: &Distribution, betas: &[f64]) -> Result<WeightVector> {
    ensure_len(p.len(), betas.len())?;
    let logs = p
        .values()
        .iter()
        .zip(betas)
        .enumerate()
        .map(|(i, (&pk, &b))| ln_power(pk, b, i))
        .collect::<Result<Vec<_>>>()?;
    normalize_log_terms(&logs)
}

/// Utility-weighted escort `u_k ∝ p_k^β v_k`.
pub fn utility_weights(p: &Distribution, beta: f64, v: &UtilityVector) -> Result<WeightVector> {
    ensure_len(p.len(), v.len())?;
    let logs = p
        .values()
        .iter()
        .zip(v.values())
        .enumerate()
        .map(|(i, (&pk, &vk))| Ok(ln_power(pk, beta, i)? + vk.ln()))
        .collect::<Result<Vec<_>>>()?;
    normalize_log_terms(&logs)
}

/// `w_k ∝ u_k p_k`: an external weighting tilted by the probabilities.
pub fn product_weights(u: &WeightVector, p: &Distribution) -> Result<WeightVector> {
    ensure_len(p.len(), u.len())?;
    let logs: Vec<f64> = u
        .values()
        .iter()
        .zip(p.values())
        .map(|(&uk, &pk)| {
            if uk > 0.0 && pk > 0.0 {
                uk.ln() + pk.ln()
            } else {
                f64::NEG_INFINITY
            }
        })
        .collect();
    normalize_log_terms(&logs)
}

/// How the averaging weights `U` are derived for a measure.
#[derive(Debug, Clone, PartialEq)]
pub enum WeightRule {
    /// `U = P`.
    SelfWeights,
    Escort(f64),
    PerIndexEscort(Vec<f64>),
    Utility(f64, UtilityVector),
    External(WeightVector),
    ExternalTimesP(WeightVector),
}

impl WeightRule {
    pub fn build(&self, p: &Distribution) -> Result<WeightVector> {
        match self {
            WeightRule::SelfWeights => Ok(WeightVector::from(p)),
            WeightRule::Escort(beta) => escort_weights(p, *beta),
            WeightRule::PerIndexEscort(betas) => per_index_escort_weights(p, betas),
            WeightRule::Utility(beta, v) => utility_weights(p, *beta, v),
            WeightRule::External(u) => {
                ensure_len(p.len(), u.len())?;
                Ok(u.clone())
            }
            WeightRule::ExternalTimesP(u) => product_weights(u, p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn fair_coin_is_valid() {
        let d = Distribution::nonneg(vec![0.5, 0.5]).unwrap();
        assert_eq!(d.values(), &[0.5, 0.5]);
    }

    #[test]
    fn rejects_unnormalized() {
        let err = Distribution::nonneg(vec![0.5, 0.6]).unwrap_err();
        assert!(matches!(err, Error::NotNormalized { .. }), "{err:?}");
    }

    #[test]
    fn rejects_zero_under_strict_positivity() {
        let err = Distribution::positive(vec![0.2, 0.0, 0.8]).unwrap_err();
        assert_eq!(err, Error::NegativeMass { index: 1, value: 0.0 });
        assert!(Distribution::nonneg(vec![0.2, 0.0, 0.8]).is_ok());
    }

    #[test]
    fn rejects_short_negative_and_nan() {
        assert_eq!(Distribution::nonneg(vec![1.0]).unwrap_err(), Error::TooShort { len: 1 });
        assert_eq!(Distribution::nonneg(vec![]).unwrap_err(), Error::TooShort { len: 0 });
        assert!(matches!(
            Distribution::nonneg(vec![1.5, -0.5]).unwrap_err(),
            Error::NegativeMass { index: 1, .. }
        ));
        assert!(matches!(
            Distribution::nonneg(vec![f64::NAN, 1.0]).unwrap_err(),
            Error::NonFinite { index: 0, .. }
        ));
    }

    #[test]
    fn tolerance_boundary() {
        assert!(Distribution::nonneg(vec![0.5, 0.5 + 5e-10]).is_ok());
        assert!(Distribution::nonneg(vec![0.5, 0.5 + 5e-9]).is_err());
    }

    #[test]
    fn renormalize_is_opt_in() {
        let d = Distribution::renormalized(&[1.0, 3.0], Positivity::NonNegative).unwrap();
        assert_eq!(d.values(), &[0.25, 0.75]);
        assert!(Distribution::renormalized(&[0.0, 0.0], Positivity::NonNegative).is_err());
    }

    #[test]
    fn product_examples() {
        let coin = Distribution::nonneg(vec![0.5, 0.5]).unwrap();
        assert_eq!(coin.direct_product(&coin).values(), &[0.25; 4]);

        let p = Distribution::nonneg(vec![0.2, 0.8]).unwrap();
        assert!(close(p.direct_product(&coin).values(), &[0.1, 0.1, 0.4, 0.4], 1e-15));

        let p = Distribution::nonneg(vec![0.3, 0.7]).unwrap();
        let q = Distribution::nonneg(vec![1.0 / 3.0; 3]).unwrap();
        let third = 0.7 / 3.0;
        assert!(close(
            direct_product(&p, &q).values(),
            &[0.1, 0.1, 0.1, third, third, third],
            1e-15
        ));
    }

    #[test]
    fn escort_examples() {
        let coin = Distribution::nonneg(vec![0.5, 0.5]).unwrap();
        assert!(close(escort_weights(&coin, 2.0).unwrap().values(), &[0.5, 0.5], 1e-15));

        let p = Distribution::nonneg(vec![0.2, 0.8]).unwrap();
        assert!(close(escort_weights(&p, 1.0).unwrap().values(), &[0.2, 0.8], 1e-15));
        assert!(close(
            escort_weights(&p, 2.0).unwrap().values(),
            &[0.04 / 0.68, 0.64 / 0.68],
            1e-15
        ));
    }

    #[test]
    fn escort_negative_beta_needs_positive_support() {
        let p = Distribution::nonneg(vec![0.0, 1.0]).unwrap();
        assert!(escort_weights(&p, -1.0).is_err());
        assert_eq!(escort_weights(&p, 2.0).unwrap().values(), &[0.0, 1.0]);
    }

    #[test]
    fn escort_extreme_beta_stays_finite() {
        let p = Distribution::nonneg(vec![1e-300, 1.0 - 1e-300]).unwrap();
        let w = escort_weights(&p, -5.0).unwrap();
        assert!(w.values().iter().all(|v| v.is_finite()));
        assert!((w.values()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn utility_examples() {
        let coin = Distribution::nonneg(vec![0.5, 0.5]).unwrap();
        let ones = UtilityVector::new(vec![1.0, 1.0]).unwrap();
        assert!(close(utility_weights(&coin, 1.0, &ones).unwrap().values(), &[0.5, 0.5], 1e-15));

        let v = UtilityVector::new(vec![1.0, 3.0]).unwrap();
        assert!(close(utility_weights(&coin, 1.0, &v).unwrap().values(), &[0.25, 0.75], 1e-15));

        let p = Distribution::nonneg(vec![0.2, 0.8]).unwrap();
        let twos = UtilityVector::new(vec![2.0, 2.0]).unwrap();
        assert!(close(utility_weights(&p, 0.0, &twos).unwrap().values(), &[0.5, 0.5], 1e-15));
    }

    #[test]
    fn utility_length_mismatch() {
        let coin = Distribution::nonneg(vec![0.5, 0.5]).unwrap();
        let v = UtilityVector::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(
            utility_weights(&coin, 1.0, &v).unwrap_err(),
            Error::LengthMismatch { expected: 2, found: 3 }
        );
        assert!(UtilityVector::new(vec![1.0, 0.0]).is_err());
    }

    #[test]
    fn external_weights_must_match_length() {
        let coin = Distribution::nonneg(vec![0.5, 0.5]).unwrap();
        let u = WeightVector::new(vec![0.2, 0.3, 0.5]).unwrap();
        assert!(WeightRule::External(u).build(&coin).is_err());
    }

    #[test]
    fn product_weights_tilt_by_p() {
        let p = Distribution::nonneg(vec![0.2, 0.8]).unwrap();
        let u = WeightVector::new(vec![0.5, 0.5]).unwrap();
        assert!(close(product_weights(&u, &p).unwrap().values(), &[0.2, 0.8], 1e-15));
    }
}
