//! Composition laws `⊙` and the generator isomorphisms `h` with
//! `h(a + b) = h(a) ⊙ h(b)`.
//!
//! Only the polynomial cases are represented: the linear generator (plain
//! addition), the information exponential `(2^{cx} - 1)/e` (pseudo-addition
//! `x + y + exy`) and the certainty exponential `2^{-cx}/e` (scaled product
//! `exy`). All exponentials are base 2.

use std::f64::consts::LN_2;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Linear,
    ExpInfo,
    ExpCert,
}

/// A strictly monotone generator `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorH {
    /// `h(x) = a·x`, `a > 0`.
    Linear { a: f64 },
    /// `h(x) = (2^{c·x} - 1)/e`, `c·e > 0`.
    ExpInfo { c: f64, e: f64 },
    /// `h(x) = 2^{-c·x}/e`, `c·e > 0`.
    ExpCert { c: f64, e: f64 },
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(format!("{name} = {v} is not finite")))
    }
}

fn positive_product(c: f64, e: f64) -> Result<()> {
    finite("c", c)?;
    finite("e", e)?;
    if c * e > 0.0 {
        Ok(())
    } else {
        Err(Error::ConstraintViolation(format!(
            "exponential generator needs c·e > 0, got c = {c}, e = {e}"
        )))
    }
}

impl GeneratorH {
    pub fn linear(a: f64) -> Result<Self> {
        finite("a", a)?;
        if a <= 0.0 {
            return Err(Error::ConstraintViolation(format!(
                "linear generator needs a > 0, got {a}"
            )));
        }
        Ok(GeneratorH::Linear { a })
    }

    /// The identity generator `h(x) = x`.
    pub fn identity() -> Self {
        GeneratorH::Linear { a: 1.0 }
    }

    pub fn exp_info(c: f64, e: f64) -> Result<Self> {
        positive_product(c, e)?;
        Ok(GeneratorH::ExpInfo { c, e })
    }

    pub fn exp_cert(c: f64, e: f64) -> Result<Self> {
        positive_product(c, e)?;
        Ok(GeneratorH::ExpCert { c, e })
    }

    pub fn kind(&self) -> GeneratorKind {
        match self {
            GeneratorH::Linear { .. } => GeneratorKind::Linear,
            GeneratorH::ExpInfo { .. } => GeneratorKind::ExpInfo,
            GeneratorH::ExpCert { .. } => GeneratorKind::ExpCert,
        }
    }

    /// True for the information generators (linear and `exp_info`).
    pub fn is_increasing(&self) -> bool {
        !matches!(self, GeneratorH::ExpCert { .. })
    }

    pub fn apply(&self, x: f64) -> Result<f64> {
        let y = match *self {
            GeneratorH::Linear { a } => a * x,
            GeneratorH::ExpInfo { c, e } => (c * x * LN_2).exp_m1() / e,
            GeneratorH::ExpCert { c, e } => {
                let y = (-c * x).exp2() / e;
                if y == 0.0 && x.is_finite() {
                    return Err(Error::Overflow(format!(
                        "2^({}) underflows to zero",
                        -c * x
                    )));
                }
                y
            }
        };
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Overflow(format!("h({x}) = {y} for {self}")))
        }
    }

    pub fn invert(&self, y: f64) -> Result<f64> {
        let x = match *self {
            GeneratorH::Linear { a } => y / a,
            GeneratorH::ExpInfo { c, e } => {
                let t = e * y;
                #[allow(clippy::neg_cmp_op_on_partial_ord)]
                if !(t > -1.0) {
                    return Err(Error::OutOfRange {
                        value: y,
                        reason: "exp_info inverse needs e·y + 1 > 0",
                    });
                }
                t.ln_1p() / (c * LN_2)
            }
            GeneratorH::ExpCert { c, e } => {
                let t = e * y;
                #[allow(clippy::neg_cmp_op_on_partial_ord)]
                if !(t > 0.0) {
                    return Err(Error::OutOfRange {
                        value: y,
                        reason: "exp_cert inverse needs e·y > 0",
                    });
                }
                -t.log2() / c
            }
        };
        if x.is_finite() {
            Ok(x)
        } else {
            Err(Error::Overflow(format!("h^-1({y}) = {x} for {self}")))
        }
    }

    /// The operation `⊙` this generator induces.
    pub fn composition(&self) -> CompositionOp {
        match *self {
            GeneratorH::Linear { .. } => CompositionOp::Additive,
            GeneratorH::ExpInfo { e, .. } => CompositionOp::PseudoAdditive { e },
            GeneratorH::ExpCert { e, .. } => CompositionOp::Multiplicative { e },
        }
    }
}

impl fmt::Display for GeneratorH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorH::Linear { a } => write!(f, "linear(a={a})"),
            GeneratorH::ExpInfo { c, e } => write!(f, "exp_info(c={c}, e={e})"),
            GeneratorH::ExpCert { c, e } => write!(f, "exp_cert(c={c}, e={e})"),
        }
    }
}

pub fn apply_h(h: &GeneratorH, x: f64) -> Result<f64> {
    h.apply(x)
}

pub fn invert_h(h: &GeneratorH, y: f64) -> Result<f64> {
    h.invert(y)
}

/// A composition law on the reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CompositionOp {
    Additive,
    /// `x ⊕_e y = x + y + e·x·y`.
    PseudoAdditive { e: f64 },
    /// `x ⊙ y = e·x·y`, identity `1/e`.
    Multiplicative { e: f64 },
    /// `h(h⁻¹(x) + h⁻¹(y))`.
    ViaGenerator(GeneratorH),
}

impl CompositionOp {
    pub fn multiplicative(e: f64) -> Result<Self> {
        if e == 0.0 {
            Err(Error::ZeroScale)
        } else {
            Ok(CompositionOp::Multiplicative { e })
        }
    }

    pub fn apply(&self, x: f64, y: f64) -> Result<f64> {
        compose(self, x, y)
    }
}

pub fn pseudo_add(x: f64, y: f64, e: f64) -> f64 {
    x + y + e * (x * y)
}

pub fn mult_compose(x: f64, y: f64, e: f64) -> Result<f64> {
    if e == 0.0 {
        return Err(Error::ZeroScale);
    }
    Ok(e * (x * y))
}

pub fn compose(op: &CompositionOp, x: f64, y: f64) -> Result<f64> {
    match *op {
        CompositionOp::Additive => Ok(x + y),
        CompositionOp::PseudoAdditive { e } => Ok(pseudo_add(x, y, e)),
        CompositionOp::Multiplicative { e } => mult_compose(x, y, e),
        CompositionOp::ViaGenerator(h) => h.apply(h.invert(x)? + h.invert(y)?),
    }
}
