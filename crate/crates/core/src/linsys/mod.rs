//! Rational transfer functions, state-space realisations, and the
//! closed-form frequency response of complex-order elements.

mod poly;
mod ss;
mod tf;

pub use ss::{ss_to_tf, StateSpace};
pub use tf::{make_lag, make_lead, tf_to_ss, RationalTf, CANCEL_TOL};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orders of a complex-order element `s^(alpha + j beta)`.
///
/// `alpha` sets the magnitude slope, `beta` the phase slope versus
/// log-frequency. Such an element has no finite-dimensional realisation;
/// only its frequency response, [`eval_complex_order`], is available in
/// closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexOrderSpec {
    pub alpha: f64,
    pub beta: f64,
}

impl ComplexOrderSpec {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::NonFinite("complex order".into()));
        }
        Ok(ComplexOrderSpec { alpha, beta })
    }
}

/// Closed-form frequency response of `s^(alpha + j beta)` at `omega`:
///
/// ```text
/// gain_db   = 20 alpha log10(omega) + 20 log10(e^(-beta pi / 2))
/// phase_rad = alpha pi / 2 + beta ln(10) log10(omega)
/// ```
///
/// Returns `(gain_db, phase_rad)`.
pub fn eval_complex_order(spec: &ComplexOrderSpec, omega: f64) -> Result<(f64, f64)> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::InvalidFrequency(omega));
    }
    let log_w = omega.log10();
    // 20 log10(e^(-beta pi/2)) evaluated in log space to avoid under/overflow
    let gain_db = 20.0 * spec.alpha * log_w
        - 10.0 * std::f64::consts::PI * spec.beta * std::f64::consts::LOG10_E;
    let phase = spec.alpha * std::f64::consts::FRAC_PI_2
        + spec.beta * std::f64::consts::LN_10 * log_w;
    Ok((gain_db, phase))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, LN_10, PI};

    #[test]
    fn unity_element() {
        let spec = ComplexOrderSpec::new(0.0, 0.0).unwrap();
        for w in [0.01, 1.0, 250.0] {
            let (g, p) = eval_complex_order(&spec, w).unwrap();
            assert_eq!(g, 0.0);
            assert_eq!(p, 0.0);
        }
    }

    #[test]
    fn integrator_orders() {
        let spec = ComplexOrderSpec::new(-1.0, 0.0).unwrap();
        let (g, p) = eval_complex_order(&spec, 10.0).unwrap();
        assert_relative_eq!(g, -20.0, epsilon = 1e-12);
        assert_relative_eq!(p, -FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn pure_imaginary_order_at_unit_frequency() {
        // gain = 20 log10(e^(-pi/2)) ~ -13.6438 dB, phase = 0
        let spec = ComplexOrderSpec::new(0.0, 1.0).unwrap();
        let (g, p) = eval_complex_order(&spec, 1.0).unwrap();
        let expect = 20.0 * (-PI / 2.0).exp().log10();
        assert_relative_eq!(g, expect, epsilon = 1e-9);
        assert_relative_eq!(g, -13.643763538418412, epsilon = 1e-9);
        assert_eq!(p, 0.0);
    }

    #[test]
    fn slopes_are_affine_in_log_frequency() {
        let spec = ComplexOrderSpec::new(-0.7, 0.4).unwrap();
        // finite differences over a log grid spanning four decades
        for i in 0..40 {
            let w = 10f64.powf(-2.0 + 4.0 * i as f64 / 39.0);
            let (g1, p1) = eval_complex_order(&spec, w).unwrap();
            let (g2, p2) = eval_complex_order(&spec, w * 10.0).unwrap();
            assert_relative_eq!(g2 - g1, 20.0 * spec.alpha, epsilon = 1e-9);
            assert_relative_eq!(p2 - p1, spec.beta * LN_10, epsilon = 1e-9);
        }
    }

    #[test]
    fn rejects_nonpositive_frequency() {
        let spec = ComplexOrderSpec::new(0.0, 1.0).unwrap();
        assert!(eval_complex_order(&spec, 0.0).is_err());
        assert!(eval_complex_order(&spec, -1.0).is_err());
    }
}
