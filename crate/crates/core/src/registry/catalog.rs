//! The rows. Reference closures code each closed form literally; they must not
//! call into the engine.

use super::{ensure, MeasureFamily as F, MeasureSpec, Param, WeightRuleKind as W};
use crate::engine::PolyParams;
use crate::error::Result;

use Param::*;

fn sum_pow(p: &[f64], a: f64) -> f64 {
    p.iter().map(|x| x.powf(a)).sum()
}

fn sum_p_log_p(p: &[f64]) -> f64 {
    p.iter().map(|x| x * x.log2()).sum()
}

/// `2^{1-γ} - 1`, the normalizing scale of the Havrda–Charvát family.
fn hc_scale(gamma: f64) -> f64 {
    (1.0 - gamma).exp2() - 1.0
}

fn order(name: &str, v: f64) -> Result<()> {
    ensure(v > 0.0 && v != 1.0, || format!("{name} must be positive and != 1, got {v}"))
}

fn nonzero_lambda(lambda: f64) -> Result<()> {
    ensure(lambda != 0.0, || "lambda must be nonzero for this row".into())
}

pub static CATALOG: &[MeasureSpec] = &[
    // ---- entropies (logarithmic, e = 0) ----
    MeasureSpec {
        name: "shannon",
        title: "Shannon",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[],
        formula: "-sum p_i log2 p_i",
        engine_map: "tau=-1, lambda=0, e=0",
        constraints: "none",
        adjustment: None,
        reference_id: "closed_form.shannon",
        map: |_| PolyParams::log_inaccuracy(-1.0, 0.0),
        reference: |_, i| Ok(-sum_p_log_p(i.p())),
    },
    MeasureSpec {
        name: "renyi",
        title: "Rényi",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha],
        formula: "1/(1-alpha) log2 sum p_i^alpha",
        engine_map: "tau=-1, lambda=1-alpha, e=0",
        constraints: "alpha > 0, alpha != 1",
        adjustment: None,
        reference_id: "closed_form.renyi",
        map: |q| {
            let a = q.alpha()?;
            order("alpha", a)?;
            PolyParams::log_inaccuracy(-1.0, 1.0 - a)
        },
        reference: |q, i| {
            let a = q.alpha()?;
            Ok(sum_pow(i.p(), a).log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "varma_1",
        title: "Varma",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha, Mu],
        formula: "1/(mu-alpha) log2 sum p_i^(alpha-mu+1)",
        engine_map: "tau=-1, lambda=mu-alpha, e=0",
        constraints: "mu >= 1, mu-1 < alpha < mu",
        adjustment: None,
        reference_id: "closed_form.varma_1",
        map: |q| {
            let (a, m) = (q.alpha()?, q.mu()?);
            ensure(m >= 1.0 && m - 1.0 < a && a < m, || {
                format!("varma_1 needs mu >= 1 and mu-1 < alpha < mu, got alpha={a}, mu={m}")
            })?;
            PolyParams::log_inaccuracy(-1.0, m - a)
        },
        reference: |q, i| {
            let (a, m) = (q.alpha()?, q.mu()?);
            Ok(sum_pow(i.p(), a - m + 1.0).log2() / (m - a))
        },
    },
    MeasureSpec {
        name: "varma_2",
        title: "Varma",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha, Mu],
        formula: "mu/(mu-alpha) log2 sum p_i^(alpha/mu)",
        engine_map: "tau=-1, lambda=1-alpha/mu, e=0",
        constraints: "mu >= 1, 0 < alpha < mu",
        adjustment: None,
        reference_id: "closed_form.varma_2",
        map: |q| {
            let (a, m) = (q.alpha()?, q.mu()?);
            ensure(m >= 1.0 && 0.0 < a && a < m, || {
                format!("varma_2 needs mu >= 1 and 0 < alpha < mu, got alpha={a}, mu={m}")
            })?;
            PolyParams::log_inaccuracy(-1.0, 1.0 - a / m)
        },
        reference: |q, i| {
            let (a, m) = (q.alpha()?, q.mu()?);
            Ok(m / (m - a) * sum_pow(i.p(), a / m).log2())
        },
    },
    MeasureSpec {
        name: "nath_1",
        title: "Nath",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha, Mu],
        formula: "1/(1-alpha) log2 sum p_i^(mu*alpha-mu+1)",
        engine_map: "tau=-mu, lambda=1-alpha, e=0",
        constraints: "alpha > 0, alpha != 1, mu > 0",
        adjustment: None,
        reference_id: "closed_form.nath_1",
        map: |q| {
            let (a, m) = (q.alpha()?, q.mu()?);
            order("alpha", a)?;
            ensure(m > 0.0, || format!("mu must be positive, got {m}"))?;
            PolyParams::log_inaccuracy(-m, 1.0 - a)
        },
        reference: |q, i| {
            let (a, m) = (q.alpha()?, q.mu()?);
            Ok(sum_pow(i.p(), m * a - m + 1.0).log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "nath_2",
        title: "Nath",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha, Mu],
        formula: "1/(1-alpha) log2 sum p_i^(alpha^mu)",
        engine_map: "tau=(alpha^mu-1)/(1-alpha), lambda=1-alpha, e=0",
        constraints: "alpha > 0, alpha != 1, mu > 0",
        adjustment: None,
        reference_id: "closed_form.nath_2",
        map: |q| {
            let (a, m) = (q.alpha()?, q.mu()?);
            order("alpha", a)?;
            ensure(m > 0.0, || format!("mu must be positive, got {m}"))?;
            PolyParams::log_inaccuracy((a.powf(m) - 1.0) / (1.0 - a), 1.0 - a)
        },
        reference: |q, i| {
            let (a, m) = (q.alpha()?, q.mu()?);
            Ok(sum_pow(i.p(), a.powf(m)).log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "aczel_daroczy_1",
        title: "Aczél and Daróczy",
        aliases: &[],
        family: F::Information,
        weight_rule: W::Escort,
        params: &[Beta],
        formula: "-sum p_i^beta log2 p_i / sum p_i^beta",
        engine_map: "tau=-1, lambda=0, e=0, u=escort(beta)",
        constraints: "beta finite",
        adjustment: None,
        reference_id: "closed_form.aczel_daroczy_1",
        map: |q| {
            q.beta()?;
            PolyParams::log_inaccuracy(-1.0, 0.0)
        },
        reference: |q, i| {
            let b = q.beta()?;
            let p = i.p();
            let num: f64 = p.iter().map(|x| x.powf(b) * x.log2()).sum();
            Ok(-num / sum_pow(p, b))
        },
    },
    MeasureSpec {
        name: "aczel_daroczy_2",
        title: "Aczél and Daróczy",
        aliases: &[],
        family: F::Information,
        weight_rule: W::Escort,
        params: &[Alpha, Beta],
        formula: "1/(beta-alpha) log2 (sum p_i^alpha / sum p_i^beta)",
        engine_map: "tau=-1, lambda=beta-alpha, e=0, u=escort(beta)",
        constraints: "alpha > 0, beta > 0, alpha != beta",
        adjustment: None,
        reference_id: "closed_form.aczel_daroczy_2",
        map: |q| {
            let (a, b) = (q.alpha()?, q.beta()?);
            ensure(a > 0.0 && b > 0.0 && a != b, || {
                format!("aczel_daroczy_2 needs alpha, beta > 0 and alpha != beta, got {a}, {b}")
            })?;
            PolyParams::log_inaccuracy(-1.0, b - a)
        },
        reference: |q, i| {
            let (a, b) = (q.alpha()?, q.beta()?);
            Ok((sum_pow(i.p(), a) / sum_pow(i.p(), b)).log2() / (b - a))
        },
    },
    MeasureSpec {
        name: "kapur",
        title: "Kapur",
        aliases: &[],
        family: F::Information,
        weight_rule: W::Escort,
        params: &[Alpha, Beta],
        formula: "1/(1-alpha) log2 (sum p_i^(alpha+beta-1) / sum p_i^beta)",
        engine_map: "tau=-1, lambda=1-alpha, e=0, u=escort(beta)",
        constraints: "alpha > 0, alpha != 1, beta > 0, alpha+beta-1 > 0",
        adjustment: None,
        reference_id: "closed_form.kapur",
        map: |q| {
            let (a, b) = (q.alpha()?, q.beta()?);
            order("alpha", a)?;
            ensure(b > 0.0 && a + b - 1.0 > 0.0, || {
                format!("kapur needs beta > 0 and alpha+beta > 1, got alpha={a}, beta={b}")
            })?;
            PolyParams::log_inaccuracy(-1.0, 1.0 - a)
        },
        reference: |q, i| {
            let (a, b) = (q.alpha()?, q.beta()?);
            Ok((sum_pow(i.p(), a + b - 1.0) / sum_pow(i.p(), b)).log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "rathie",
        title: "Rathie",
        aliases: &[],
        family: F::Information,
        weight_rule: W::PerIndexEscort,
        params: &[Alpha],
        formula: "1/(1-alpha) log2 (sum p_i^(alpha+beta_i-1) / sum p_i^beta_i)",
        engine_map: "tau=-1, lambda=1-alpha, e=0, u_i ∝ p_i^beta_i",
        constraints: "alpha > 0, alpha != 1, beta_i > 0, alpha+beta_i-1 > 0; one beta_i per outcome",
        adjustment: None,
        reference_id: "closed_form.rathie",
        map: |q| {
            let a = q.alpha()?;
            order("alpha", a)?;
            for &b in q.betas()? {
                ensure(b > 0.0 && a + b - 1.0 > 0.0, || {
                    format!("rathie needs beta_i > 0 and alpha+beta_i > 1, got beta_i={b}")
                })?;
            }
            PolyParams::log_inaccuracy(-1.0, 1.0 - a)
        },
        reference: |q, i| {
            let a = q.alpha()?;
            let (p, betas) = (i.p(), q.betas()?);
            let num: f64 = p.iter().zip(betas).map(|(x, b)| x.powf(a + b - 1.0)).sum();
            let den: f64 = p.iter().zip(betas).map(|(x, b)| x.powf(*b)).sum();
            Ok((num / den).log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "khan_autar",
        title: "Khan and Autar",
        aliases: &[],
        family: F::Information,
        weight_rule: W::Utility,
        params: &[Alpha, Beta],
        formula: "1/(1-alpha) log2 (sum p_i^(alpha+beta-1) v_i / sum p_i^beta v_i)",
        engine_map: "tau=-1, lambda=1-alpha, e=0, u_i ∝ p_i^beta v_i",
        constraints: "alpha > 0, alpha != 1, beta > 0, alpha+beta-1 > 0, v_i > 0",
        adjustment: None,
        reference_id: "closed_form.khan_autar",
        map: |q| {
            let (a, b) = (q.alpha()?, q.beta()?);
            order("alpha", a)?;
            ensure(b > 0.0 && a + b - 1.0 > 0.0, || {
                format!("khan_autar needs beta > 0 and alpha+beta > 1, got alpha={a}, beta={b}")
            })?;
            PolyParams::log_inaccuracy(-1.0, 1.0 - a)
        },
        reference: |q, i| {
            let (a, b) = (q.alpha()?, q.beta()?);
            let (p, v) = (i.p(), i.utilities()?);
            let num: f64 = p.iter().zip(v).map(|(x, w)| x.powf(a + b - 1.0) * w).sum();
            let den: f64 = p.iter().zip(v).map(|(x, w)| x.powf(b) * w).sum();
            Ok((num / den).log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "singh",
        title: "Singh et al.",
        aliases: &["singh_et_al"],
        family: F::Information,
        weight_rule: W::Utility,
        params: &[Alpha, Beta],
        formula: "1/(1-alpha) log2 (sum p_i^(alpha*beta) v_i / sum p_i^beta v_i)",
        engine_map: "tau=-beta, lambda=1-alpha, e=0, u_i ∝ p_i^beta v_i",
        constraints: "alpha > 0, alpha != 1, beta > 0, v_i > 0",
        adjustment: None,
        reference_id: "closed_form.singh",
        map: |q| {
            let (a, b) = (q.alpha()?, q.beta()?);
            order("alpha", a)?;
            ensure(b > 0.0, || format!("beta must be positive, got {b}"))?;
            PolyParams::log_inaccuracy(-b, 1.0 - a)
        },
        reference: |q, i| {
            let (a, b) = (q.alpha()?, q.beta()?);
            let (p, v) = (i.p(), i.utilities()?);
            let num: f64 = p.iter().zip(v).map(|(x, w)| x.powf(a * b) * w).sum();
            let den: f64 = p.iter().zip(v).map(|(x, w)| x.powf(b) * w).sum();
            Ok((num / den).log2() / (1.0 - a))
        },
    },
    // ---- pseudo-additive entropies (e != 0) ----
    MeasureSpec {
        name: "havrda_charvat",
        title: "Havrda and Charvát, Daróczy",
        aliases: &["daroczy"],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "1/(2^(1-gamma)-1) (sum p_i^gamma - 1)",
        engine_map: "tau=-1, lambda=1-gamma, c=1-gamma, e=2^(1-gamma)-1",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.havrda_charvat",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 1.0 - g, 1.0 - g, hc_scale(g))
        },
        reference: |q, i| {
            let g = q.gamma()?;
            Ok((sum_pow(i.p(), g) - 1.0) / hc_scale(g))
        },
    },
    MeasureSpec {
        name: "sharma_mittal_1",
        title: "Sharma and Mittal",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "1/(2^(1-gamma)-1) (2^(sum (gamma-1) p_k log2 p_k) - 1)",
        engine_map: "tau=-1, lambda=0, c=1-gamma, e=2^(1-gamma)-1",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.sharma_mittal_1",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 0.0, 1.0 - g, hc_scale(g))
        },
        reference: |q, i| {
            let g = q.gamma()?;
            let s: f64 = i.p().iter().map(|x| (g - 1.0) * x * x.log2()).sum();
            Ok((s.exp2() - 1.0) / hc_scale(g))
        },
    },
    MeasureSpec {
        name: "sharma_mittal_2",
        title: "Sharma and Mittal",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha, Gamma],
        formula: "1/(2^(1-gamma)-1) ((sum p_i^alpha)^((1-gamma)/(1-alpha)) - 1)",
        engine_map: "tau=-1, lambda=1-alpha, c=1-gamma, e=2^(1-gamma)-1",
        constraints: "alpha > 0, alpha != 1, gamma > 0, gamma != 1",
        adjustment: Some(
            "the listed mapping gives tau=1-alpha, lambda=-1; the closed form requires tau=-1, lambda=1-alpha",
        ),
        reference_id: "closed_form.sharma_mittal_2",
        map: |q| {
            let (a, g) = (q.alpha()?, q.gamma()?);
            order("alpha", a)?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 1.0 - a, 1.0 - g, hc_scale(g))
        },
        reference: |q, i| {
            let (a, g) = (q.alpha()?, q.gamma()?);
            Ok((sum_pow(i.p(), a).powf((1.0 - g) / (1.0 - a)) - 1.0) / hc_scale(g))
        },
    },
    MeasureSpec {
        name: "tsallis",
        title: "Tsallis",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "1/(1-gamma) (sum p_i^gamma - 1)",
        engine_map: "tau=-1, lambda=1-gamma, c=1-gamma, e=1-gamma",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.tsallis",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 1.0 - g, 1.0 - g, 1.0 - g)
        },
        reference: |q, i| {
            let g = q.gamma()?;
            Ok((sum_pow(i.p(), g) - 1.0) / (1.0 - g))
        },
    },
    MeasureSpec {
        name: "frank_daffertshofer_1",
        title: "Frank and Daffertshofer",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "1/(1-gamma) (2^(sum (gamma-1) p_k log2 p_k) - 1)",
        engine_map: "tau=-1, lambda=0, c=1-gamma, e=1-gamma",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.frank_daffertshofer_1",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 0.0, 1.0 - g, 1.0 - g)
        },
        reference: |q, i| {
            let g = q.gamma()?;
            let s: f64 = i.p().iter().map(|x| (g - 1.0) * x * x.log2()).sum();
            Ok((s.exp2() - 1.0) / (1.0 - g))
        },
    },
    MeasureSpec {
        name: "frank_daffertshofer_2",
        title: "Frank and Daffertshofer",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Alpha, Gamma],
        formula: "1/(1-gamma) ((sum p_i^alpha)^((1-gamma)/(1-alpha)) - 1)",
        engine_map: "tau=-1, lambda=1-alpha, c=1-gamma, e=1-gamma",
        constraints: "alpha > 0, alpha != 1, gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.frank_daffertshofer_2",
        map: |q| {
            let (a, g) = (q.alpha()?, q.gamma()?);
            order("alpha", a)?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 1.0 - a, 1.0 - g, 1.0 - g)
        },
        reference: |q, i| {
            let (a, g) = (q.alpha()?, q.gamma()?);
            Ok((sum_pow(i.p(), a).powf((1.0 - g) / (1.0 - a)) - 1.0) / (1.0 - g))
        },
    },
    MeasureSpec {
        name: "arimoto",
        title: "Arimoto",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "1/(gamma-1) ((sum p_i^(1/gamma))^gamma - 1)",
        engine_map: "tau=-1, lambda=(gamma-1)/gamma, c=gamma-1, e=gamma-1",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.arimoto",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, (g - 1.0) / g, g - 1.0, g - 1.0)
        },
        reference: |q, i| {
            let g = q.gamma()?;
            Ok((sum_pow(i.p(), 1.0 / g).powf(g) - 1.0) / (g - 1.0))
        },
    },
    MeasureSpec {
        name: "boekee_van_der_lubbe",
        title: "Boekee and Van der Lubbe",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "gamma/(1-gamma) ((sum p_i^gamma)^(1/gamma) - 1)",
        engine_map: "tau=-1, lambda=1-gamma, c=(1-gamma)/gamma, e=(1-gamma)/gamma",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.boekee_van_der_lubbe",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            let ce = (1.0 - g) / g;
            PolyParams::inaccuracy(-1.0, 1.0 - g, ce, ce)
        },
        reference: |q, i| {
            let g = q.gamma()?;
            Ok(g / (1.0 - g) * (sum_pow(i.p(), g).powf(1.0 / g) - 1.0))
        },
    },
    // ---- free-parameter rows ----
    MeasureSpec {
        name: "van_der_lubbe_1",
        title: "Van der Lubbe et al.",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Tau],
        formula: "sum p_i log2 p_i^tau",
        engine_map: "tau, lambda=0, e=0",
        constraints: "tau < 0",
        adjustment: None,
        reference_id: "closed_form.van_der_lubbe_1",
        map: |q| PolyParams::log_inaccuracy(q.tau()?, 0.0),
        reference: |q, i| {
            let t = q.tau()?;
            Ok(i.p().iter().map(|x| x * x.powf(t).log2()).sum())
        },
    },
    MeasureSpec {
        name: "van_der_lubbe_2",
        title: "Van der Lubbe et al.",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Tau, Lambda],
        formula: "1/lambda log2 sum p_k^(tau*lambda+1)",
        engine_map: "tau, lambda, e=0",
        constraints: "tau < 0, lambda != 0",
        adjustment: None,
        reference_id: "closed_form.van_der_lubbe_2",
        map: |q| {
            let l = q.lambda()?;
            nonzero_lambda(l)?;
            PolyParams::log_inaccuracy(q.tau()?, l)
        },
        reference: |q, i| {
            let (t, l) = (q.tau()?, q.lambda()?);
            Ok(sum_pow(i.p(), t * l + 1.0).log2() / l)
        },
    },
    MeasureSpec {
        name: "van_der_lubbe_3",
        title: "Van der Lubbe et al.",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Tau, C, E],
        formula: "1/e (2^(sum tau c p_k log2 p_k) - 1)",
        engine_map: "tau, lambda=0, c, e",
        constraints: "tau < 0, c*e > 0",
        adjustment: None,
        reference_id: "closed_form.van_der_lubbe_3",
        map: |q| {
            let (c, e) = (q.c()?, q.e()?);
            ensure(e != 0.0, || "e must be nonzero for this row".into())?;
            PolyParams::inaccuracy(q.tau()?, 0.0, c, e)
        },
        reference: |q, i| {
            let (t, c, e) = (q.tau()?, q.c()?, q.e()?);
            let s: f64 = i.p().iter().map(|x| t * c * x * x.log2()).sum();
            Ok((s.exp2() - 1.0) / e)
        },
    },
    MeasureSpec {
        name: "van_der_lubbe_4",
        title: "Van der Lubbe et al.",
        aliases: &[],
        family: F::Information,
        weight_rule: W::SelfWeights,
        params: &[Tau, Lambda, C, E],
        formula: "1/e ((sum p_k^(tau*lambda+1))^(c/lambda) - 1)",
        engine_map: "tau, lambda, c, e",
        constraints: "tau < 0, lambda != 0, c*e > 0",
        adjustment: None,
        reference_id: "closed_form.van_der_lubbe_4",
        map: |q| {
            let (l, c, e) = (q.lambda()?, q.c()?, q.e()?);
            nonzero_lambda(l)?;
            ensure(e != 0.0, || "e must be nonzero for this row".into())?;
            PolyParams::inaccuracy(q.tau()?, l, c, e)
        },
        reference: |q, i| {
            let (t, l, c, e) = (q.tau()?, q.lambda()?, q.c()?, q.e()?);
            Ok((sum_pow(i.p(), t * l + 1.0).powf(c / l) - 1.0) / e)
        },
    },
    // ---- inaccuracies (external U) ----
    MeasureSpec {
        name: "kerridge",
        title: "Kerridge",
        aliases: &[],
        family: F::Inaccuracy,
        weight_rule: W::ExternalU,
        params: &[],
        formula: "-sum u_i log2 p_i",
        engine_map: "tau=-1, lambda=0, e=0, weights u",
        constraints: "u in the simplex",
        adjustment: None,
        reference_id: "closed_form.kerridge",
        map: |_| PolyParams::log_inaccuracy(-1.0, 0.0),
        reference: |_, i| {
            let u = i.u()?;
            Ok(-i.p().iter().zip(u).map(|(x, w)| w * x.log2()).sum::<f64>())
        },
    },
    MeasureSpec {
        name: "nath_inaccuracy_1",
        title: "Nath (inaccuracy)",
        aliases: &[],
        family: F::Inaccuracy,
        weight_rule: W::ExternalU,
        params: &[Gamma],
        formula: "1/(2^(1-gamma)-1) (sum u_i p_i^(gamma-1) - 1)",
        engine_map: "tau=-1, lambda=1-gamma, c=1-gamma, e=2^(1-gamma)-1, weights u",
        constraints: "gamma > 0, gamma != 1",
        adjustment: Some("the listed weights are p; the closed form weights by u"),
        reference_id: "closed_form.nath_inaccuracy_1",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 1.0 - g, 1.0 - g, hc_scale(g))
        },
        reference: |q, i| {
            let g = q.gamma()?;
            let s: f64 = i.p().iter().zip(i.u()?).map(|(x, w)| w * x.powf(g - 1.0)).sum();
            Ok((s - 1.0) / hc_scale(g))
        },
    },
    MeasureSpec {
        name: "nath_inaccuracy_2",
        title: "Nath (inaccuracy)",
        aliases: &[],
        family: F::Inaccuracy,
        weight_rule: W::ExternalU,
        params: &[Alpha],
        formula: "1/(1-alpha) log2 sum u_i p_i^(alpha-1)",
        engine_map: "tau=-1, lambda=1-alpha, e=0, weights u",
        constraints: "alpha > 0, alpha != 1",
        adjustment: None,
        reference_id: "closed_form.nath_inaccuracy_2",
        map: |q| {
            let a = q.alpha()?;
            order("alpha", a)?;
            PolyParams::log_inaccuracy(-1.0, 1.0 - a)
        },
        reference: |q, i| {
            let a = q.alpha()?;
            let s: f64 = i.p().iter().zip(i.u()?).map(|(x, w)| w * x.powf(a - 1.0)).sum();
            Ok(s.log2() / (1.0 - a))
        },
    },
    MeasureSpec {
        name: "gupta_sharma_1",
        title: "Gupta and Sharma, Picard",
        aliases: &["picard"],
        family: F::Inaccuracy,
        weight_rule: W::ExternalU,
        params: &[Gamma],
        formula: "1/(2^(1-gamma)-1) (2^(sum (gamma-1) u_k log2 p_k) - 1)",
        engine_map: "tau=-1, lambda=0, c=1-gamma, e=2^(1-gamma)-1, weights u",
        constraints: "gamma > 0, gamma != 1",
        adjustment: None,
        reference_id: "closed_form.gupta_sharma_1",
        map: |q| {
            let g = q.gamma()?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 0.0, 1.0 - g, hc_scale(g))
        },
        reference: |q, i| {
            let g = q.gamma()?;
            let s: f64 = i.p().iter().zip(i.u()?).map(|(x, w)| (g - 1.0) * w * x.log2()).sum();
            Ok((s.exp2() - 1.0) / hc_scale(g))
        },
    },
    MeasureSpec {
        name: "gupta_sharma_2",
        title: "Gupta and Sharma, Picard",
        aliases: &[],
        family: F::Inaccuracy,
        weight_rule: W::ExternalU,
        params: &[Alpha, Gamma],
        formula: "1/(2^(1-gamma)-1) ((sum u_i p_i^(alpha-1))^((1-gamma)/(1-alpha)) - 1)",
        engine_map: "tau=-1, lambda=1-alpha, c=1-gamma, e=2^(1-gamma)-1, weights u",
        constraints: "alpha > 0, alpha != 1, gamma > 0, gamma != 1",
        adjustment: Some(
            "the listed mapping gives tau=1-alpha, lambda=-1; the closed form requires tau=-1, lambda=1-alpha",
        ),
        reference_id: "closed_form.gupta_sharma_2",
        map: |q| {
            let (a, g) = (q.alpha()?, q.gamma()?);
            order("alpha", a)?;
            order("gamma", g)?;
            PolyParams::inaccuracy(-1.0, 1.0 - a, 1.0 - g, hc_scale(g))
        },
        reference: |q, i| {
            let (a, g) = (q.alpha()?, q.gamma()?);
            let s: f64 = i.p().iter().zip(i.u()?).map(|(x, w)| w * x.powf(a - 1.0)).sum();
            Ok((s.powf((1.0 - g) / (1.0 - a)) - 1.0) / hc_scale(g))
        },
    },
    // ---- certainty ----
    MeasureSpec {
        name: "onicescu",
        title: "Onicescu, Weaver",
        aliases: &["weaver", "information_energy"],
        family: F::Certainty,
        weight_rule: W::SelfWeights,
        params: &[],
        formula: "sum p_i^2",
        engine_map: "tau=-1, lambda=-1, c=1, e=1",
        constraints: "none",
        adjustment: None,
        reference_id: "closed_form.onicescu",
        map: |_| PolyParams::certainty(-1.0, -1.0, 1.0, 1.0),
        reference: |_, i| Ok(i.p().iter().map(|x| x * x).sum()),
    },
    MeasureSpec {
        name: "teodorescu",
        title: "Teodorescu",
        aliases: &["theodorescu"],
        family: F::Certainty,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "1/(gamma-1) sum p_i^gamma",
        engine_map: "tau=-1, lambda=1-gamma, c=gamma-1, e=gamma-1",
        constraints: "gamma > 1",
        adjustment: None,
        reference_id: "closed_form.teodorescu",
        map: |q| {
            let g = q.gamma()?;
            ensure(g > 1.0, || format!("gamma must exceed 1, got {g}"))?;
            PolyParams::certainty(-1.0, 1.0 - g, g - 1.0, g - 1.0)
        },
        reference: |q, i| {
            let g = q.gamma()?;
            Ok(sum_pow(i.p(), g) / (g - 1.0))
        },
    },
    MeasureSpec {
        name: "pardo_taneja",
        title: "Pardo and Taneja",
        aliases: &[],
        family: F::Certainty,
        weight_rule: W::SelfWeights,
        params: &[Gamma],
        formula: "sum p_i^gamma",
        engine_map: "tau=-1, lambda=1-gamma, c=gamma-1, e=1",
        constraints: "gamma > 1",
        adjustment: None,
        reference_id: "closed_form.pardo_taneja",
        map: |q| {
            let g = q.gamma()?;
            ensure(g > 1.0, || format!("gamma must exceed 1, got {g}"))?;
            PolyParams::certainty(-1.0, 1.0 - g, g - 1.0, 1.0)
        },
        reference: |q, i| Ok(sum_pow(i.p(), q.gamma()?)),
    },
    MeasureSpec {
        name: "pardo",
        title: "Pardo",
        aliases: &[],
        family: F::Certainty,
        weight_rule: W::ExternalUTimesP,
        params: &[Gamma],
        formula: "1/(gamma-1) sum u_i p_i^gamma / sum u_i p_i",
        engine_map: "tau=-1, lambda=1-gamma, c=gamma-1, e=gamma-1, weights ∝ u_i p_i",
        constraints: "gamma > 1",
        adjustment: None,
        reference_id: "closed_form.pardo",
        map: |q| {
            let g = q.gamma()?;
            ensure(g > 1.0, || format!("gamma must exceed 1, got {g}"))?;
            PolyParams::certainty(-1.0, 1.0 - g, g - 1.0, g - 1.0)
        },
        reference: |q, i| {
            let g = q.gamma()?;
            let (p, u) = (i.p(), i.u()?);
            let num: f64 = p.iter().zip(u).map(|(x, w)| w * x.powf(g)).sum();
            let den: f64 = p.iter().zip(u).map(|(x, w)| w * x).sum();
            Ok(num / den / (g - 1.0))
        },
    },
    MeasureSpec {
        name: "tuteja",
        title: "Tuteja et al.",
        aliases: &["tuteja_et_al"],
        family: F::Certainty,
        weight_rule: W::ExternalUTimesP,
        params: &[Beta, Gamma],
        formula: "1/(gamma-1) (sum u_i p_i^gamma / sum u_i p_i)^((gamma-1)/(beta-1))",
        engine_map: "tau=(gamma-1)/(1-beta), lambda=1-beta, c=gamma-1, e=gamma-1, weights ∝ u_i p_i",
        constraints: "gamma > 1, beta > 1",
        adjustment: None,
        reference_id: "closed_form.tuteja",
        map: |q| {
            let (b, g) = (q.beta()?, q.gamma()?);
            ensure(g > 1.0 && b > 1.0, || {
                format!("tuteja needs gamma > 1 and beta > 1, got gamma={g}, beta={b}")
            })?;
            PolyParams::certainty((g - 1.0) / (1.0 - b), 1.0 - b, g - 1.0, g - 1.0)
        },
        reference: |q, i| {
            let (b, g) = (q.beta()?, q.gamma()?);
            let (p, u) = (i.p(), i.u()?);
            let num: f64 = p.iter().zip(u).map(|(x, w)| w * x.powf(g)).sum();
            let den: f64 = p.iter().zip(u).map(|(x, w)| w * x).sum();
            Ok((num / den).powf((g - 1.0) / (b - 1.0)) / (g - 1.0))
        },
    },
    MeasureSpec {
        name: "van_der_lubbe_certainty_1",
        title: "Van der Lubbe et al. (certainty)",
        aliases: &[],
        family: F::Certainty,
        weight_rule: W::SelfWeights,
        params: &[Tau],
        formula: "2^(sum tau p_k log2 p_k)",
        engine_map: "engine tau=-tau, lambda=0, c=1, e=1",
        constraints: "tau > 0",
        adjustment: Some(
            "the listed c=-1 breaks c*e > 0; equivalent engine form (-tau, 1, 1) with the row's tau > 0",
        ),
        reference_id: "closed_form.van_der_lubbe_certainty_1",
        map: |q| {
            let t = q.tau()?;
            ensure(t > 0.0, || format!("tau must be positive for this row, got {t}"))?;
            PolyParams::certainty(-t, 0.0, 1.0, 1.0)
        },
        reference: |q, i| {
            let t = q.tau()?;
            Ok(i.p().iter().map(|x| t * x * x.log2()).sum::<f64>().exp2())
        },
    },
    MeasureSpec {
        name: "van_der_lubbe_certainty_2",
        title: "Van der Lubbe et al. (certainty)",
        aliases: &[],
        family: F::Certainty,
        weight_rule: W::SelfWeights,
        params: &[Tau, Lambda],
        formula: "(sum p_k^(1+tau*lambda))^(1/lambda)",
        engine_map: "engine tau=-tau, lambda=-lambda, c=1, e=1",
        constraints: "tau > 0, lambda != 0",
        adjustment: Some(
            "the listed c=-1 breaks c*e > 0; equivalent engine form (-tau, -lambda, 1, 1) with the row's tau > 0",
        ),
        reference_id: "closed_form.van_der_lubbe_certainty_2",
        map: |q| {
            let (t, l) = (q.tau()?, q.lambda()?);
            ensure(t > 0.0, || format!("tau must be positive for this row, got {t}"))?;
            nonzero_lambda(l)?;
            PolyParams::certainty(-t, -l, 1.0, 1.0)
        },
        reference: |q, i| {
            let (t, l) = (q.tau()?, q.lambda()?);
            Ok(sum_pow(i.p(), 1.0 + t * l).powf(1.0 / l))
        },
    },
    MeasureSpec {
        name: "bhatia_1",
        title: "Bhatia",
        aliases: &[],
        family: F::Certainty,
        weight_rule: W::Escort,
        params: &[Beta, Tau],
        formula: "2^(sum tau p_k^beta log2 p_k / sum p_k^beta)",
        engine_map: "engine tau=-tau, lambda=0, c=1, e=1, u=escort(beta)",
        constraints: "tau > 0, beta finite",
        adjustment: Some(
            "the listed c=-1 breaks c*e > 0; equivalent engine form (-tau, 1, 1) with the row's tau > 0",
        ),
        reference_id: "closed_form.bhatia_1",
        map: |q| {
            let t = q.tau()?;
            q.beta()?;
            ensure(t > 0.0, || format!("tau must be positive for this row, got {t}"))?;
            PolyParams::certainty(-t, 0.0, 1.0, 1.0)
        },
        reference: |q, i| {
            let (b, t) = (q.beta()?, q.tau()?);
            let p = i.p();
            let den = sum_pow(p, b);
            Ok(p.iter().map(|x| t * x.powf(b) * x.log2() / den).sum::<f64>().exp2())
        },
    },
    MeasureSpec {
        name: "bhatia_2",
        title: "Bhatia",
        aliases: &[],
        family: F::Certainty,
        weight_rule: W::Escort,
        params: &[Beta, Tau, Lambda],
        formula: "(sum p_k^(beta+tau*lambda) / sum p_k^beta)^(1/lambda)",
        engine_map: "engine tau=-tau, lambda=-lambda, c=1, e=1, u=escort(beta)",
        constraints: "tau > 0, lambda != 0, beta finite",
        adjustment: Some(
            "the listed c=-1 breaks c*e > 0; equivalent engine form (-tau, -lambda, 1, 1) with the row's tau > 0",
        ),
        reference_id: "closed_form.bhatia_2",
        map: |q| {
            let (t, l) = (q.tau()?, q.lambda()?);
            q.beta()?;
            ensure(t > 0.0, || format!("tau must be positive for this row, got {t}"))?;
            nonzero_lambda(l)?;
            PolyParams::certainty(-t, -l, 1.0, 1.0)
        },
        reference: |q, i| {
            let (b, t, l) = (q.beta()?, q.tau()?, q.lambda()?);
            Ok((sum_pow(i.p(), b + t * l) / sum_pow(i.p(), b)).powf(1.0 / l))
        },
    },
];
