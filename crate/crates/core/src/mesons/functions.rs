use num_complex::Complex64;
use serde::Serialize;

use super::params::{MesonParams, MixingCoefficients};
use crate::scan::{scan_curve, uniform_grid, ScanResult, Violation};
use crate::{Error, Result};

pub const F_INDICES: [u8; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

/// `g±(τ) = ½(e^{−iE_Hτ} ± e^{−iE_Lτ})` with `E_{H,L} = ±ΔM/2 − iΓ_{H,L}/2`
/// (the common mass phase is dropped).
pub fn g_functions(tau: f64, params: &MesonParams) -> Result<(Complex64, Complex64)> {
    check_time(tau)?;
    let heavy = Complex64::new(
        -params.gamma_heavy() * tau / 2.0,
        -params.delta_m * tau / 2.0,
    )
    .exp();
    let light = Complex64::new(
        -params.gamma_light() * tau / 2.0,
        params.delta_m * tau / 2.0,
    )
    .exp();
    Ok((0.5 * (heavy + light), 0.5 * (heavy - light)))
}

/// `e^{−iE_Hτ}` and `e^{−iE_Lτ}` with the factor `e^{−Γτ/2}` removed, so
/// `g̃± = ½(heavy ± light)` stays moderate at large `τ`.
fn reduced_exponentials(tau: f64, params: &MesonParams) -> (Complex64, Complex64) {
    let heavy = Complex64::new(-params.delta_gamma * tau / 4.0, -params.delta_m * tau / 2.0).exp();
    let light = Complex64::new(params.delta_gamma * tau / 4.0, params.delta_m * tau / 2.0).exp();
    (heavy, light)
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "time must be finite and non-negative, got {t}"
        )))
    }
}

fn check_index(index: u8) -> Result<()> {
    if F_INDICES.contains(&index) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "F index must be in 1..=8, got {index}"
        )))
    }
}

/// Left-hand side `F_N` of the time-dependent inequality `F_N ≤ 1` at
/// proper time `t` (seconds).
pub fn f_function(index: u8, t: f64, params: &MesonParams) -> Result<f64> {
    check_index(index)?;
    check_time(t)?;
    Ok(f_unchecked(index, t, params))
}

/// [`f_function`] at `z = Γt` lifetimes.
pub fn f_function_at_z(index: u8, z: f64, params: &MesonParams) -> Result<f64> {
    f_function(index, params.time_from_z(z), params)
}

fn f_unchecked(index: u8, t: f64, params: &MesonParams) -> f64 {
    let (heavy_amp, light_amp) = reduced_exponentials(t, params);
    let q_over_p = Complex64::from_polar(params.r, params.zeta);
    let k = 0.5 * (q_over_p + q_over_p.inv());
    let one = Complex64::new(1.0, 0.0);
    let gm = 0.5 * (heavy_amp - light_amp);
    // g̃₊ ∓ k g̃₋ = light ± (1 ∓ k) g̃₋ = heavy ∓ (1 ± k) g̃₋; the smaller
    // coefficient avoids cancellation near k = ±1
    let (cp_even, cp_odd) = if (one - k).norm() <= (one + k).norm() {
        (light_amp + (one - k) * gm, heavy_amp - (one - k) * gm)
    } else {
        (heavy_amp - (one + k) * gm, light_amp + (one + k) * gm)
    };
    let (cp_even, cp_odd) = (cp_even.norm_sqr(), cp_odd.norm_sqr());
    let flavour = (0.5 * (heavy_amp + light_amp)).norm_sqr();
    let heavy = (-params.delta_gamma * t / 2.0).exp();
    let light = (params.delta_gamma * t / 2.0).exp();
    match index {
        1 => cp_even * flavour,
        2 => cp_even * heavy,
        3 => cp_odd * flavour,
        4 => cp_odd * heavy,
        5 => flavour * heavy,
        6 => flavour * light,
        7 => cp_even * light,
        8 => cp_odd * light,
        _ => unreachable!("index checked by caller"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EqualityVariant {
    Plus,
    Minus,
}

/// `|1 ± p/q|² − 2`; zero if joint probabilities existed.
pub fn static_equality_residual(variant: EqualityVariant, mix: &MixingCoefficients) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    let lhs = match variant {
        EqualityVariant::Plus => one + mix.p_over_q(),
        EqualityVariant::Minus => one - mix.p_over_q(),
    };
    lhs.norm_sqr() - 2.0
}

/// `2 ln 3 / |ΔΓ|` in seconds: beyond it the CP-conserving form of the
/// `{M₁, M}` inequality fails whatever the oscillation phase.
pub fn guaranteed_violation_time(params: &MesonParams) -> Result<f64> {
    if params.delta_gamma == 0.0 {
        return Err(Error::InvalidParameter(
            "guaranteed violation time needs ΔΓ ≠ 0".into(),
        ));
    }
    Ok(2.0 * 3f64.ln() / params.delta_gamma.abs())
}

/// Samples `F_N` on a uniform grid of `n_points` in `z ∈ [0, z_max]` and
/// returns the intervals with `F_N > 1`.
pub fn violation_scan(
    index: u8,
    params: &MesonParams,
    z_max: f64,
    n_points: usize,
) -> Result<ScanResult> {
    check_index(index)?;
    if !(z_max > 0.0) || !z_max.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "z_max must be positive, got {z_max}"
        )));
    }
    let axis = uniform_grid(0.0, z_max, n_points)?;
    scan_curve(
        axis,
        |z| f_unchecked(index, params.time_from_z(z), params),
        Violation::Above(1.0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs() -> MesonParams {
        MesonParams::from_mev("Bs", -6.0e-11, 1.2e-8, 4.3533e-10, 1.004, 185.0).unwrap()
    }

    #[test]
    fn g_at_zero() {
        let (gp, gm) = g_functions(0.0, &bs()).unwrap();
        assert_eq!(gp, Complex64::new(1.0, 0.0));
        assert_eq!(gm, Complex64::new(0.0, 0.0));
        assert!(g_functions(-1e-15, &bs()).is_err());
    }

    #[test]
    fn g_modulus_at_one_lifetime() {
        let p = bs();
        let tau = p.time_from_z(1.0);
        let (gp, _) = g_functions(tau, &p).unwrap();
        let y = p.delta_gamma * tau / 2.0;
        assert!((y + 0.0689).abs() < 1e-3);
        let want = (-1f64).exp() / 2.0 * (y.cosh() + (p.delta_m * tau).cos());
        assert!((gp.norm_sqr() - want).abs() < 1e-12);
    }

    #[test]
    fn f_at_zero_and_bad_index() {
        for n in F_INDICES {
            assert_eq!(f_function(n, 0.0, &bs()).unwrap(), 1.0);
        }
        assert!(f_function(0, 0.0, &bs()).is_err());
        assert!(f_function(9, 0.0, &bs()).is_err());
    }

    #[test]
    fn residual_examples() {
        let m = MixingCoefficients::from_ratio(1.0, 0.0).unwrap();
        assert!((static_equality_residual(EqualityVariant::Plus, &m) - 2.0).abs() < 1e-15);
        let m = MixingCoefficients::from_ratio(1.0, std::f64::consts::PI).unwrap();
        assert!((static_equality_residual(EqualityVariant::Plus, &m) + 2.0).abs() < 1e-15);
        assert!((static_equality_residual(EqualityVariant::Minus, &m) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn guaranteed_time_scaling() {
        let p = bs();
        let t = guaranteed_violation_time(&p).unwrap();
        let mut doubled = p.clone();
        doubled.delta_gamma *= 2.0;
        assert!((guaranteed_violation_time(&doubled).unwrap() - t / 2.0).abs() < 1e-12 * t);
        let mut flat = p;
        flat.delta_gamma = 0.0;
        assert!(guaranteed_violation_time(&flat).is_err());
    }

    #[test]
    fn scan_f6_never_violates() {
        let s = violation_scan(6, &bs(), 50.0, 2001).unwrap();
        assert!(s.violation_intervals.is_empty());
        assert!(violation_scan(1, &bs(), 0.0, 10).is_err());
        assert!(violation_scan(1, &bs(), 10.0, 1).is_err());
    }
}
