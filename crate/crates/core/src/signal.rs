//! Input signals for time-domain simulation.
//!
//! Analytic variants (`Step`, `Sine`, `MultiSine`) are evaluated exactly at
//! integrator stage times, which keeps the fixed-step scheme at full order.
//! `Samples` interpolates linearly between uniformly spaced samples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One sinusoidal component of a [`Signal::MultiSine`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SineComponent {
    pub amplitude: f64,
    pub omega: f64,
    #[serde(default)]
    pub phase: f64,
}

/// A scalar input signal defined for all `t >= 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Signal {
    /// Identically zero.
    Zero,
    /// `amplitude` for `t >= start`, zero before.
    Step {
        amplitude: f64,
        #[serde(default)]
        start: f64,
    },
    /// `amplitude * sin(omega * t + phase)`.
    Sine {
        amplitude: f64,
        omega: f64,
        #[serde(default)]
        phase: f64,
    },
    /// Sum of sinusoids.
    MultiSine { components: Vec<SineComponent> },
    /// Uniformly sampled data, linearly interpolated. Zero before `t = 0`;
    /// held at the last sample beyond the end.
    Samples { dt: f64, values: Vec<f64> },
}

impl Signal {
    /// Unit sine `sin(omega * t)`.
    pub fn unit_sine(omega: f64) -> Self {
        Signal::Sine {
            amplitude: 1.0,
            omega,
            phase: 0.0,
        }
    }

    /// Unit step at `t = 0`.
    pub fn unit_step() -> Self {
        Signal::Step {
            amplitude: 1.0,
            start: 0.0,
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Signal::Zero => 0.0,
            Signal::Step { amplitude, start } => {
                if t >= *start {
                    *amplitude
                } else {
                    0.0
                }
            }
            Signal::Sine {
                amplitude,
                omega,
                phase,
            } => amplitude * (omega * t + phase).sin(),
            Signal::MultiSine { components } => components
                .iter()
                .map(|c| c.amplitude * (c.omega * t + c.phase).sin())
                .sum(),
            Signal::Samples { dt, values } => {
                if values.is_empty() || t < 0.0 {
                    return 0.0;
                }
                let pos = t / dt;
                let i = pos.floor() as usize;
                if i + 1 >= values.len() {
                    return *values.last().unwrap();
                }
                let frac = pos - i as f64;
                values[i] * (1.0 - frac) + values[i + 1] * frac
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            Signal::Zero => true,
            Signal::Step { amplitude, start } => amplitude.is_finite() && start.is_finite(),
            Signal::Sine {
                amplitude,
                omega,
                phase,
            } => amplitude.is_finite() && omega.is_finite() && phase.is_finite(),
            Signal::MultiSine { components } => components
                .iter()
                .all(|c| c.amplitude.is_finite() && c.omega.is_finite() && c.phase.is_finite()),
            Signal::Samples { dt, values } => {
                *dt > 0.0 && dt.is_finite() && values.iter().all(|v| v.is_finite())
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::NonFinite("signal definition".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_and_sine() {
        let s = Signal::Step {
            amplitude: 2.0,
            start: 1.0,
        };
        assert_eq!(s.eval(0.5), 0.0);
        assert_eq!(s.eval(1.0), 2.0);

        let w = Signal::unit_sine(2.0);
        assert!((w.eval(0.25) - (0.5f64).sin()).abs() < 1e-15);
    }

    #[test]
    fn samples_interpolate_and_clamp() {
        let s = Signal::Samples {
            dt: 0.5,
            values: vec![0.0, 1.0, 0.0],
        };
        assert_eq!(s.eval(0.25), 0.5);
        assert_eq!(s.eval(0.75), 0.5);
        assert_eq!(s.eval(10.0), 0.0);
        assert_eq!(s.eval(-1.0), 0.0);
    }

    #[test]
    fn invalid_samples_rejected() {
        let s = Signal::Samples {
            dt: 0.0,
            values: vec![1.0],
        };
        assert!(s.validate().is_err());
    }
}
