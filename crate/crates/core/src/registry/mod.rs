//! Catalog of named measures.
//!
//! Each row carries two independent evaluation routes: a map from the row's
//! user-facing parameters to engine parameters `(τ, λ, c, e)` plus a weight
//! rule, and the row's closed form coded directly with `powf`/`log2`. The
//! second route is the oracle for the first.

mod catalog;

use std::fmt;

use serde::Serialize;

use crate::distribution::{Distribution, UtilityVector, WeightRule, WeightVector};
use crate::engine::{BranchSelector, Family, PolyParams};
use crate::error::{Error, Result};

pub use catalog::CATALOG;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasureFamily {
    /// Entropies: weights are derived from `P` itself.
    Information,
    /// Two-distribution measures with external weights `U`.
    Inaccuracy,
    Certainty,
}

impl MeasureFamily {
    pub fn engine_family(self) -> Family {
        match self {
            MeasureFamily::Information | MeasureFamily::Inaccuracy => Family::Inaccuracy,
            MeasureFamily::Certainty => Family::Certainty,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MeasureFamily::Information => "information",
            MeasureFamily::Inaccuracy => "inaccuracy",
            MeasureFamily::Certainty => "certainty",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightRuleKind {
    #[serde(rename = "self")]
    SelfWeights,
    /// `p^β`
    Escort,
    /// `p^{β_i}`
    PerIndexEscort,
    /// `p^β v_i`
    Utility,
    /// `u`
    ExternalU,
    /// `u·p`
    ExternalUTimesP,
}

impl WeightRuleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WeightRuleKind::SelfWeights => "self",
            WeightRuleKind::Escort => "escort",
            WeightRuleKind::PerIndexEscort => "per_index_escort",
            WeightRuleKind::Utility => "utility",
            WeightRuleKind::ExternalU => "external_u",
            WeightRuleKind::ExternalUTimesP => "external_u_times_p",
        }
    }
}

/// Scalar user parameters a row may read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Param {
    Alpha,
    Beta,
    Gamma,
    Mu,
    Tau,
    Lambda,
    C,
    E,
}

impl Param {
    pub const ALL: [Param; 8] = [
        Param::Alpha,
        Param::Beta,
        Param::Gamma,
        Param::Mu,
        Param::Tau,
        Param::Lambda,
        Param::C,
        Param::E,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::Gamma => "gamma",
            Param::Mu => "mu",
            Param::Tau => "tau",
            Param::Lambda => "lambda",
            Param::C => "c",
            Param::E => "e",
        }
    }

    pub fn parse(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.as_str() == name)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// User-facing parameters, as printed in the catalog rows.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct UserParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<f64>,
    /// Per-index exponents `β_i`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betas: Option<Vec<f64>>,
}

impl UserParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, param: Param) -> Option<f64> {
        match param {
            Param::Alpha => self.alpha,
            Param::Beta => self.beta,
            Param::Gamma => self.gamma,
            Param::Mu => self.mu,
            Param::Tau => self.tau,
            Param::Lambda => self.lambda,
            Param::C => self.c,
            Param::E => self.e,
        }
    }

    pub fn set(&mut self, param: Param, value: f64) {
        let slot = match param {
            Param::Alpha => &mut self.alpha,
            Param::Beta => &mut self.beta,
            Param::Gamma => &mut self.gamma,
            Param::Mu => &mut self.mu,
            Param::Tau => &mut self.tau,
            Param::Lambda => &mut self.lambda,
            Param::C => &mut self.c,
            Param::E => &mut self.e,
        };
        *slot = Some(value);
    }

    pub fn with(mut self, param: Param, value: f64) -> Self {
        self.set(param, value);
        self
    }

    pub fn with_betas(mut self, betas: Vec<f64>) -> Self {
        self.betas = Some(betas);
        self
    }

    pub fn require(&self, param: Param) -> Result<f64> {
        let v = self
            .get(param)
            .ok_or_else(|| Error::MissingInput(format!("parameter {param}")))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::ConstraintViolation(format!("{param} = {v} is not finite")))
        }
    }

    pub fn alpha(&self) -> Result<f64> {
        self.require(Param::Alpha)
    }
    pub fn beta(&self) -> Result<f64> {
        self.require(Param::Beta)
    }
    pub fn gamma(&self) -> Result<f64> {
        self.require(Param::Gamma)
    }
    pub fn mu(&self) -> Result<f64> {
        self.require(Param::Mu)
    }
    pub fn tau(&self) -> Result<f64> {
        self.require(Param::Tau)
    }
    pub fn lambda(&self) -> Result<f64> {
        self.require(Param::Lambda)
    }
    pub fn c(&self) -> Result<f64> {
        self.require(Param::C)
    }
    pub fn e(&self) -> Result<f64> {
        self.require(Param::E)
    }

    pub fn betas(&self) -> Result<&[f64]> {
        let betas = self
            .betas
            .as_deref()
            .ok_or_else(|| Error::MissingInput("per-index exponents (betas)".into()))?;
        if let Some(b) = betas.iter().find(|b| !b.is_finite()) {
            return Err(Error::ConstraintViolation(format!("beta_i = {b} is not finite")));
        }
        Ok(betas)
    }
}

/// Inputs to a named measure.
#[derive(Debug, Clone, Copy)]
pub struct MeasureInput<'a> {
    pub p: &'a Distribution,
    pub u: Option<&'a WeightVector>,
    pub utilities: Option<&'a UtilityVector>,
}

impl<'a> MeasureInput<'a> {
    pub fn new(p: &'a Distribution) -> Self {
        Self {
            p,
            u: None,
            utilities: None,
        }
    }

    pub fn with_weights(mut self, u: &'a WeightVector) -> Self {
        self.u = Some(u);
        self
    }

    pub fn with_utilities(mut self, v: &'a UtilityVector) -> Self {
        self.utilities = Some(v);
        self
    }

    pub fn p(&self) -> &[f64] {
        self.p.values()
    }

    pub fn u(&self) -> Result<&[f64]> {
        let u = self
            .u
            .ok_or_else(|| Error::MissingInput("external weights U".into()))?;
        same_len(self.p.len(), u.len())?;
        Ok(u.values())
    }

    pub fn utilities(&self) -> Result<&[f64]> {
        let v = self
            .utilities
            .ok_or_else(|| Error::MissingInput("utilities V".into()))?;
        same_len(self.p.len(), v.len())?;
        Ok(v.values())
    }
}

fn same_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

pub(crate) fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(msg()))
    }
}

type EngineMap = fn(&UserParams) -> Result<PolyParams>;
type Reference = fn(&UserParams, &MeasureInput<'_>) -> Result<f64>;

/// One catalog row.
pub struct MeasureSpec {
    pub name: &'static str,
    pub title: &'static str,
    pub aliases: &'static [&'static str],
    pub family: MeasureFamily,
    pub weight_rule: WeightRuleKind,
    pub params: &'static [Param],
    /// The row's closed form, in plain text.
    pub formula: &'static str,
    /// Human-readable map from user parameters to `(τ, λ, c, e)`.
    pub engine_map: &'static str,
    pub constraints: &'static str,
    /// Set when the engine parameters were re-derived from the closed form
    /// because the listed parameter mapping are inconsistent with it.
    pub adjustment: Option<&'static str>,
    pub reference_id: &'static str,
    map: EngineMap,
    reference: Reference,
}

impl fmt::Debug for MeasureSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeasureSpec")
            .field("name", &self.name)
            .field("family", &self.family)
            .field("weight_rule", &self.weight_rule)
            .field("params", &self.params)
            .finish_non_exhaustive()
    }
}

impl MeasureSpec {
    pub fn needs_external_weights(&self) -> bool {
        matches!(
            self.weight_rule,
            WeightRuleKind::ExternalU | WeightRuleKind::ExternalUTimesP
        )
    }

    pub fn needs_utilities(&self) -> bool {
        self.weight_rule == WeightRuleKind::Utility
    }

    pub fn needs_betas(&self) -> bool {
        self.weight_rule == WeightRuleKind::PerIndexEscort
    }

    pub fn is_sign_adjusted(&self) -> bool {
        self.adjustment.is_some()
    }

    /// Validates the row constraints and resolves `(τ, λ, c, e)`.
    pub fn engine_params(&self, params: &UserParams) -> Result<PolyParams> {
        let resolved = (self.map)(params)?;
        debug_assert_eq!(resolved.family, self.family.engine_family());
        Ok(resolved)
    }

    pub fn weight_rule(&self, params: &UserParams, input: &MeasureInput<'_>) -> Result<WeightRule> {
        Ok(match self.weight_rule {
            WeightRuleKind::SelfWeights => WeightRule::SelfWeights,
            WeightRuleKind::Escort => WeightRule::Escort(params.beta()?),
            WeightRuleKind::PerIndexEscort => {
                let betas = params.betas()?;
                same_len(input.p.len(), betas.len())?;
                WeightRule::PerIndexEscort(betas.to_vec())
            }
            WeightRuleKind::Utility => {
                input.utilities()?;
                WeightRule::Utility(params.beta()?, input.utilities.cloned().unwrap())
            }
            WeightRuleKind::ExternalU => {
                input.u()?;
                WeightRule::External(input.u.cloned().unwrap())
            }
            WeightRuleKind::ExternalUTimesP => {
                input.u()?;
                WeightRule::ExternalTimesP(input.u.cloned().unwrap())
            }
        })
    }

    pub fn weights(&self, params: &UserParams, input: &MeasureInput<'_>) -> Result<WeightVector> {
        self.weight_rule(params, input)?.build(input.p)
    }

    /// Evaluates through the generic engine.
    pub fn evaluate(
        &self,
        params: &UserParams,
        input: &MeasureInput<'_>,
        sel: &BranchSelector,
    ) -> Result<f64> {
        let engine = self.engine_params(params)?;
        let u = self.weights(params, input)?;
        engine.evaluate(&u, input.p, sel)
    }

    /// Evaluates the row's closed form directly. Requires strictly positive `P`.
    pub fn reference(&self, params: &UserParams, input: &MeasureInput<'_>) -> Result<f64> {
        self.engine_params(params)?;
        if let Some((k, v)) = input.p().iter().enumerate().find(|(_, v)| **v <= 0.0) {
            return Err(Error::Domain(format!(
                "reference formulas need strictly positive P, p[{k}] = {v}"
            )));
        }
        if self.needs_betas() {
            same_len(input.p.len(), params.betas()?.len())?;
        }
        let value = (self.reference)(params, input)?;
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Overflow(format!("{} reference value is {value}", self.name)))
        }
    }

    pub fn summary(&self) -> MeasureSummary {
        MeasureSummary {
            name: self.name,
            title: self.title,
            family: self.family,
            weight_rule: self.weight_rule,
            params: self.params.to_vec(),
            needs_betas: self.needs_betas(),
            needs_weights: self.needs_external_weights(),
            needs_utilities: self.needs_utilities(),
            formula: self.formula,
            engine_map: self.engine_map,
            constraints: self.constraints,
            sign_adjusted: self.is_sign_adjusted(),
            adjustment: self.adjustment,
            reference_id: self.reference_id,
        }
    }
}

/// Serializable view of a row, used by listings.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureSummary {
    pub name: &'static str,
    pub title: &'static str,
    pub family: MeasureFamily,
    pub weight_rule: WeightRuleKind,
    pub params: Vec<Param>,
    pub needs_betas: bool,
    pub needs_weights: bool,
    pub needs_utilities: bool,
    pub formula: &'static str,
    pub engine_map: &'static str,
    pub constraints: &'static str,
    pub sign_adjusted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjustment: Option<&'static str>,
    pub reference_id: &'static str,
}

pub fn list_measures() -> Vec<MeasureSummary> {
    CATALOG.iter().map(MeasureSpec::summary).collect()
}

pub fn lookup(name: &str) -> Result<&'static MeasureSpec> {
    let key = name.trim().to_ascii_lowercase().replace(['-', ' '], "_");
    if let Some(spec) = CATALOG
        .iter()
        .find(|s| s.name == key || s.aliases.contains(&key.as_str()))
    {
        return Ok(spec);
    }
    let mut scored: Vec<(f64, &'static str)> = CATALOG
        .iter()
        .map(|s| {
            let score = std::iter::once(s.name)
                .chain(s.aliases.iter().copied())
                .map(|cand| {
                    let prefix = cand.starts_with(&key) || key.starts_with(cand);
                    let sim = strsim::jaro_winkler(&key, cand);
                    if prefix && key.len() >= 3 { sim.max(0.95) } else { sim }
                })
                .fold(0.0, f64::max);
            (score, s.name)
        })
        .filter(|(score, _)| *score >= 0.85)
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(b.1)));
    Err(Error::UnknownMeasure {
        name: name.to_string(),
        suggestions: scored.into_iter().take(5).map(|(_, n)| n.to_string()).collect(),
    })
}

/// Evaluates a named measure through the engine.
pub fn evaluate_named(
    name: &str,
    p: &Distribution,
    params: &UserParams,
    u: Option<&WeightVector>,
    v: Option<&UtilityVector>,
) -> Result<f64> {
    let input = MeasureInput { p, u, utilities: v };
    lookup(name)?.evaluate(params, &input, &BranchSelector::default())
}

/// Evaluates a named measure by its directly coded closed form.
pub fn reference_evaluate(
    name: &str,
    p: &Distribution,
    params: &UserParams,
    u: Option<&WeightVector>,
    v: Option<&UtilityVector>,
) -> Result<f64> {
    let input = MeasureInput { p, u, utilities: v };
    lookup(name)?.reference(params, &input)
}

/// A certainty row together with the inaccuracy measure it maps onto.
#[derive(Debug, Clone)]
pub struct DualPair {
    pub certainty: PolyParams,
    pub information: PolyParams,
    /// Named information row, when one shares `(τ, λ)` and weights.
    pub counterpart: Option<&'static str>,
    pub counterpart_params: UserParams,
}

/// Pairs a certainty row with its logarithmic inaccuracy counterpart.
///
/// Named pairings: Onicescu ↔ Rényi α = 2, Teodorescu and Pardo–Taneja
/// (order γ) ↔ Rényi α = γ, Van der Lubbe certainty ↔ Van der Lubbe
/// information with the engine's `(τ, λ)`. The remaining rows pair with the
/// linear-generator inaccuracy that shares their weights and `(τ, λ)`.
pub fn dual_pair(name: &str, params: &UserParams) -> Result<DualPair> {
    let spec = lookup(name)?;
    if spec.family != MeasureFamily::Certainty {
        return Err(Error::ConstraintViolation(format!(
            "`{}` is not a certainty measure",
            spec.name
        )));
    }
    let certainty = spec.engine_params(params)?;
    let (counterpart, counterpart_params) = match spec.name {
        "onicescu" => (Some("renyi"), UserParams::new().with(Param::Alpha, 2.0)),
        "teodorescu" | "pardo_taneja" => (
            Some("renyi"),
            UserParams::new().with(Param::Alpha, params.gamma()?),
        ),
        "van_der_lubbe_certainty_1" => (
            Some("van_der_lubbe_1"),
            UserParams::new().with(Param::Tau, certainty.tau),
        ),
        "van_der_lubbe_certainty_2" => (
            Some("van_der_lubbe_2"),
            UserParams::new()
                .with(Param::Tau, certainty.tau)
                .with(Param::Lambda, certainty.lambda),
        ),
        _ => (None, UserParams::new()),
    };
    let information = match counterpart {
        Some(info_name) => lookup(info_name)?.engine_params(&counterpart_params)?,
        None => PolyParams::log_inaccuracy(certainty.tau, certainty.lambda)?,
    };
    Ok(DualPair {
        certainty,
        information,
        counterpart,
        counterpart_params,
    })
}
