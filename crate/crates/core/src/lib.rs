//! Simulation and frequency-domain analysis of reset control systems.
//!
//! The crate is organised around five layers:
//!
//! - [`linsys`] — rational transfer functions, state-space realisations and
//!   their algebra, plus the closed-form frequency response of complex-order
//!   elements.
//! - [`resetsim`] — hybrid simulation of reset control systems: linear flow
//!   between events, state jumps at zero crossings of a reset-condition
//!   signal.
//! - [`harmonics`] — describing-function and higher-order-harmonic analysis
//!   by steady-state simulation and Fourier projection, and the
//!   reset-condition phase profile.
//! - [`architect`] — builders for CgLp, continuous-reset and parallel
//!   continuous-reset controllers, shaping-filter fitting, and a baseline
//!   PID.
//! - [`closedloop`] — closed-loop experiments: plants, feedback simulation
//!   with reference/disturbance/noise injection, step metrics,
//!   pseudo-sensitivity sweeps and a Kalman-filtered reset line.

pub mod architect;
pub mod closedloop;
pub mod error;
pub mod harmonics;
pub mod linsys;
pub mod resetsim;
pub mod signal;

pub use error::{Error, Result};
