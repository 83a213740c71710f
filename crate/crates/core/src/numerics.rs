//! Stable power-sum kernels.
//!
//! Interpolated summing norms raise moderate values to exponents like
//! `p / (1 - sigma)`, which overflows `f64` well inside the admissible
//! parameter range. Sums of the form `Σ cᵢ·tᵢ^θ` are therefore carried in
//! log space throughout the crate.

/// `log(Σ exp(vᵢ))` with the usual max shift. Empty input and all `-inf`
/// both give `-inf`.
pub fn logsumexp(values: &[f64]) -> f64 {
    let m = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = values.iter().map(|&v| (v - m).exp()).sum();
    m + sum.ln()
}

/// `(Σ vᵢ^θ)^(1/θ)` for nonnegative `vᵢ`, scaled by the maximum so that
/// large `θ` cannot overflow. Returns 0 when every entry is 0.
pub fn power_sum_root(values: &[f64], theta: f64) -> f64 {
    debug_assert!(theta > 0.0);
    let m = values.iter().cloned().fold(0.0_f64, f64::max);
    if m == 0.0 {
        return 0.0;
    }
    let sum: f64 = values.iter().map(|&v| (v / m).powf(theta)).sum();
    m * sum.powf(1.0 / theta)
}

/// `log(Σ exp(log_cᵢ)·tᵢ^θ)` for nonnegative `tᵢ`. Entries with
/// `log_cᵢ = -inf` or `tᵢ = 0` contribute nothing.
pub fn log_weighted_power_sum(log_coeffs: &[f64], terms: &[f64], theta: f64) -> f64 {
    debug_assert_eq!(log_coeffs.len(), terms.len());
    let logs: Vec<f64> = log_coeffs
        .iter()
        .zip(terms)
        .map(|(&lc, &t)| if t > 0.0 { lc + theta * t.ln() } else { f64::NEG_INFINITY })
        .collect();
    logsumexp(&logs)
}

/// Smoothed absolute value `sqrt(t^2 + eps^2)` used for gradient probes of
/// `|t|^θ` terms with `θ < 1`.
pub fn smooth_abs(t: f64, eps: f64) -> f64 {
    (t * t + eps * eps).sqrt()
}

/// Relative closeness helper used across test suites and oracle checks.
pub fn rel_err(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// SplitMix64 step; derives independent sub-seeds from a master seed.
pub fn derive_seed(master: u64, tag: u64) -> u64 {
    let mut z = master
        .wrapping_add(tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
