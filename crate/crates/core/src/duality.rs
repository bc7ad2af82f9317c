//! Certainty → inaccuracy transform `g(y) = h_I(h_C⁻¹(y))`.
//!
//! A multiplicative certainty measure and a pseudo-additive inaccuracy measure
//! that share `(τ, λ)` and weights are related by `I(U; P) = g(C(U; P))`.
//! The proportionality constant between the two generator arguments is pinned
//! to 1.

use crate::composition::GeneratorH;
use crate::distribution::{Distribution, WeightVector};
use crate::engine::{BranchSelector, Family, PolyParams, VerificationReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityMap {
    certainty: GeneratorH,
    information: GeneratorH,
}

impl DualityMap {
    /// `certainty` must be an `exp_cert` generator, `information` linear or `exp_info`.
    pub fn new(certainty: GeneratorH, information: GeneratorH) -> Result<Self> {
        if !matches!(certainty, GeneratorH::ExpCert { .. }) {
            return Err(Error::ConstraintViolation(format!(
                "certainty side must be exp_cert, got {certainty}"
            )));
        }
        if !information.is_increasing() {
            return Err(Error::ConstraintViolation(format!(
                "information side must be increasing, got {information}"
            )));
        }
        Ok(Self {
            certainty,
            information,
        })
    }

    /// Builds the map from a certainty and an inaccuracy parameter set.
    pub fn between(cert: &PolyParams, info: &PolyParams) -> Result<Self> {
        if cert.family != Family::Certainty || info.family != Family::Inaccuracy {
            return Err(Error::ConstraintViolation(
                "duality pairs a certainty measure with an inaccuracy measure".into(),
            ));
        }
        Self::new(cert.generator(), info.generator())
    }

    pub fn certainty_generator(&self) -> GeneratorH {
        self.certainty
    }

    pub fn information_generator(&self) -> GeneratorH {
        self.information
    }

    pub fn apply(&self, y: f64) -> Result<f64> {
        self.information.apply(self.certainty.invert(y)?)
    }
}

pub fn certainty_to_inaccuracy(map: &DualityMap, y: f64) -> Result<f64> {
    map.apply(y)
}

/// Verifies `I(U; P) = g(C(U; P))`. `lhs` is the inaccuracy, `rhs` the mapped certainty.
pub fn dual_check(
    cert: &PolyParams,
    info: &PolyParams,
    u: &WeightVector,
    p: &Distribution,
    sel: &BranchSelector,
    tolerance: f64,
) -> Result<VerificationReport> {
    let shared_lambda = cert.lambda == info.lambda
        || (sel.is_log_branch(cert.lambda) && sel.is_log_branch(info.lambda));
    if cert.tau != info.tau || !shared_lambda {
        return Err(Error::ConstraintViolation(format!(
            "duality needs shared (tau, lambda): certainty ({}, {}), inaccuracy ({}, {})",
            cert.tau, cert.lambda, info.tau, info.lambda
        )));
    }
    let map = DualityMap::between(cert, info)?;
    let certainty = cert.evaluate(u, p, sel)?;
    let inaccuracy = info.evaluate(u, p, sel)?;
    Ok(VerificationReport::compare(inaccuracy, map.apply(certainty)?, tolerance))
}
