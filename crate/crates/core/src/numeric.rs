//! Small floating-point helpers shared by the weight builders and the engine.

/// Neumaier-compensated sum.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}

/// `log2(Σ w_k 2^{x_k} / Σ w_k)` for nonnegative weights.
///
/// Terms with zero weight are skipped. When every exponent is small the sum is
/// formed as `Σw + Σ w (2^x - 1)` so that results near zero keep their relative
/// precision; otherwise the largest exponent is factored out first.
/// Returns `None` when every weight is zero.
pub fn log2_mean_exp2(weights: &[f64], exponents: &[f64]) -> Option<f64> {
    debug_assert_eq!(weights.len(), exponents.len());
    let active = || {
        weights
            .iter()
            .zip(exponents)
            .filter(|(w, _)| **w > 0.0)
            .map(|(w, x)| (*w, *x))
    };
    let max = active().map(|(_, x)| x).fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return None;
    }
    let max_abs = active().map(|(_, x)| x.abs()).fold(0.0, f64::max);
    if max_abs <= 0.5 {
        let total = compensated_sum(active().map(|(w, _)| w));
        let excess = compensated_sum(active().map(|(w, x)| w * (x * std::f64::consts::LN_2).exp_m1()));
        Some((excess / total).ln_1p() / std::f64::consts::LN_2)
    } else {
        let total = compensated_sum(active().map(|(w, _)| w));
        let scaled = compensated_sum(active().map(|(w, x)| w * (x - max).exp2()));
        Some(max + (scaled / total).log2())
    }
}
