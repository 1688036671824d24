//! Proper rational transfer functions with real coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::poly;
use super::ss::StateSpace;
use crate::error::{Error, Result};

/// Default relative tolerance for explicit pole-zero cancellation.
pub const CANCEL_TOL: f64 = 1e-9;

/// A proper rational transfer function `num(s) / den(s)`.
///
/// Coefficients are stored in ascending powers of `s`. Construction rejects
/// improper fractions (numerator degree above denominator degree), empty or
/// non-finite coefficient lists, and zero denominators. No pole-zero
/// cancellation is ever performed implicitly; see [`RationalTf::cancel`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TfRepr", into = "TfRepr")]
pub struct RationalTf {
    num: Vec<f64>,
    den: Vec<f64>,
}

/// Wire format: `{"num": [...], "den": [...]}`, ascending powers.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TfRepr {
    num: Vec<f64>,
    den: Vec<f64>,
}

impl TryFrom<TfRepr> for RationalTf {
    type Error = Error;
    fn try_from(r: TfRepr) -> Result<Self> {
        RationalTf::new(r.num, r.den)
    }
}

impl From<RationalTf> for TfRepr {
    fn from(tf: RationalTf) -> Self {
        TfRepr {
            num: tf.num,
            den: tf.den,
        }
    }
}

impl RationalTf {
    pub fn new(num: Vec<f64>, den: Vec<f64>) -> Result<Self> {
        if num.is_empty() || den.is_empty() {
            return Err(Error::InvalidTf("empty coefficient list".into()));
        }
        if !num.iter().chain(den.iter()).all(|c| c.is_finite()) {
            return Err(Error::NonFinite("transfer function coefficients".into()));
        }
        let num = poly::trim(num);
        let den = poly::trim(den);
        if poly::is_zero(&den) {
            return Err(Error::InvalidTf("denominator is identically zero".into()));
        }
        let (nd, dd) = (poly::degree(&num), poly::degree(&den));
        if nd > dd {
            return Err(Error::Improper {
                num_deg: nd,
                den_deg: dd,
            });
        }
        Ok(RationalTf { num, den })
    }

    /// Constant gain `k`.
    pub fn constant(k: f64) -> Result<Self> {
        RationalTf::new(vec![k], vec![1.0])
    }

    /// Unity transfer function.
    pub fn one() -> Self {
        RationalTf {
            num: vec![1.0],
            den: vec![1.0],
        }
    }

    /// Zero transfer function.
    pub fn zero() -> Self {
        RationalTf {
            num: vec![0.0],
            den: vec![1.0],
        }
    }

    /// Pure integrator `1/s`.
    pub fn integrator() -> Self {
        RationalTf {
            num: vec![1.0],
            den: vec![0.0, 1.0],
        }
    }

    pub fn num(&self) -> &[f64] {
        &self.num
    }

    pub fn den(&self) -> &[f64] {
        &self.den
    }

    pub fn num_degree(&self) -> usize {
        poly::degree(&self.num)
    }

    pub fn den_degree(&self) -> usize {
        poly::degree(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        poly::is_zero(&self.num)
    }

    pub fn is_strictly_proper(&self) -> bool {
        self.is_zero() || self.num_degree() < self.den_degree()
    }

    /// Evaluate at `s = j*omega`.
    ///
    /// Fails with [`Error::PoleOnAxis`] when the denominator vanishes there.
    pub fn freq_response(&self, omega: f64) -> Result<Complex64> {
        if !omega.is_finite() {
            return Err(Error::InvalidFrequency(omega));
        }
        let s = Complex64::new(0.0, omega);
        let d = poly::eval(&self.den, s);
        let scale = poly::eval_scale(&self.den, omega.abs());
        if d.norm() <= 1e-12 * scale {
            return Err(Error::PoleOnAxis { omega });
        }
        Ok(poly::eval(&self.num, s) / d)
    }

    /// Series connection `self * other`.
    pub fn series(&self, other: &RationalTf) -> RationalTf {
        RationalTf {
            num: poly::mul(&self.num, &other.num),
            den: poly::mul(&self.den, &other.den),
        }
    }

    /// Parallel connection `self + other` over the common denominator.
    pub fn parallel_sum(&self, other: &RationalTf) -> RationalTf {
        RationalTf {
            num: poly::add(
                &poly::mul(&self.num, &other.den),
                &poly::mul(&other.num, &self.den),
            ),
            den: poly::mul(&self.den, &other.den),
        }
    }

    /// Difference `self - other` over the common denominator.
    pub fn subtract(&self, other: &RationalTf) -> RationalTf {
        RationalTf {
            num: poly::sub(
                &poly::mul(&self.num, &other.den),
                &poly::mul(&other.num, &self.den),
            ),
            den: poly::mul(&self.den, &other.den),
        }
    }

    pub fn negate(&self) -> RationalTf {
        RationalTf {
            num: poly::scale(&self.num, -1.0),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, k: f64) -> RationalTf {
        RationalTf {
            num: poly::scale(&self.num, k),
            den: self.den.clone(),
        }
    }

    pub fn poles(&self) -> Vec<Complex64> {
        poly::roots(&self.den)
    }

    pub fn zeros(&self) -> Vec<Complex64> {
        if self.is_zero() {
            return Vec::new();
        }
        poly::roots(&self.num)
    }

    /// Explicit pole-zero cancellation.
    ///
    /// Common factors of numerator and denominator found by a tolerant
    /// Euclidean GCD (`tol` on monic-normalised coefficients, default
    /// [`CANCEL_TOL`]) are divided out. Cancellation is never applied
    /// implicitly by the arithmetic operations.
    pub fn cancel(&self, tol: Option<f64>) -> RationalTf {
        let tol = tol.unwrap_or(CANCEL_TOL);
        if self.is_zero() {
            return RationalTf::zero();
        }
        let g = poly::gcd(&self.num, &self.den, tol);
        if poly::degree(&g) == 0 {
            return self.clone();
        }
        let (num, _) = poly::div(&self.num, &g);
        let (den, _) = poly::div(&self.den, &g);
        RationalTf::new(num, den).expect("cancellation preserves properness")
    }

    /// Scale numerator and denominator so the denominator is monic.
    pub fn monic(&self) -> RationalTf {
        let lead = *self.den.last().unwrap();
        RationalTf {
            num: self.num.iter().map(|c| c / lead).collect(),
            den: self.den.iter().map(|c| c / lead).collect(),
        }
    }

    /// Controllable-canonical state-space realisation.
    pub fn to_state_space(&self) -> StateSpace {
        tf_to_ss(self)
    }
}

/// First-order lead `(s/omega_l + 1) / (s/omega_h + 1)` with `omega_l < omega_h`.
pub fn make_lead(omega_l: f64, omega_h: f64) -> Result<RationalTf> {
    if !(omega_l.is_finite() && omega_h.is_finite()) || omega_l <= 0.0 || omega_h <= 0.0 {
        return Err(Error::InvalidCorner(format!(
            "lead corners must be positive, got ({omega_l}, {omega_h})"
        )));
    }
    if omega_l >= omega_h {
        return Err(Error::InvalidCorner(format!(
            "lead requires omega_l < omega_h, got ({omega_l}, {omega_h})"
        )));
    }
    RationalTf::new(vec![1.0, 1.0 / omega_l], vec![1.0, 1.0 / omega_h])
}

/// First-order lag `1 / (s/omega_l + 1)`.
pub fn make_lag(omega_l: f64) -> Result<RationalTf> {
    if !omega_l.is_finite() || omega_l <= 0.0 {
        return Err(Error::InvalidCorner(format!(
            "lag corner must be positive, got {omega_l}"
        )));
    }
    RationalTf::new(vec![1.0], vec![1.0, 1.0 / omega_l])
}

/// Controllable-canonical realisation of a proper transfer function.
///
/// A degree-zero fraction becomes a pure gain (empty state). The realisation
/// splits off the feedthrough `D` and places the strictly proper remainder
/// in companion form.
pub fn tf_to_ss(tf: &RationalTf) -> StateSpace {
    let n = tf.den_degree();
    let den_lead = *tf.den().last().unwrap();
    if n == 0 {
        return StateSpace::gain(tf.num()[0] / tf.den()[0]);
    }
    // monic denominator a_0 + a_1 s + ... + s^n
    let a_coeffs: Vec<f64> = tf.den().iter().map(|c| c / den_lead).collect();
    let mut b_coeffs = vec![0.0; n + 1];
    for (i, &c) in tf.num().iter().enumerate() {
        b_coeffs[i] = c / den_lead;
    }
    let d = b_coeffs[n];
    let mut a = nalgebra::DMatrix::<f64>::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        a[(i, i + 1)] = 1.0;
    }
    for j in 0..n {
        a[(n - 1, j)] = -a_coeffs[j];
    }
    let mut b = nalgebra::DMatrix::<f64>::zeros(n, 1);
    b[(n - 1, 0)] = 1.0;
    let mut c = nalgebra::DMatrix::<f64>::zeros(1, n);
    for j in 0..n {
        c[(0, j)] = b_coeffs[j] - d * a_coeffs[j];
    }
    let d = nalgebra::DMatrix::<f64>::from_element(1, 1, d);
    StateSpace::new(a, b, c, d).expect("canonical realisation is consistent")
}
