//! State-space realisations of linear time-invariant systems.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::poly;
use super::tf::RationalTf;
use crate::error::{Error, Result};

/// Continuous-time LTI system `x' = A x + B u`, `y = C x + D u`.
///
/// `A` is `n x n`, `B` is `n x m`, `C` is `p x n`, `D` is `p x m`. A system
/// with `n = 0` is a pure gain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SsRepr", into = "SsRepr")]
pub struct StateSpace {
    a: DMatrix<f64>,
    b: DMatrix<f64>,
    c: DMatrix<f64>,
    d: DMatrix<f64>,
}

/// Wire format: row-major nested arrays.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SsRepr {
    a: Vec<Vec<f64>>,
    b: Vec<Vec<f64>>,
    c: Vec<Vec<f64>>,
    d: Vec<Vec<f64>>,
}

fn to_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

fn from_rows(rows: &[Vec<f64>], what: &str) -> Result<DMatrix<f64>> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::DimensionMismatch(format!("ragged rows in {what}")));
    }
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}

impl TryFrom<SsRepr> for StateSpace {
    type Error = Error;
    fn try_from(r: SsRepr) -> Result<Self> {
        StateSpace::new(
            from_rows(&r.a, "A")?,
            from_rows(&r.b, "B")?,
            from_rows(&r.c, "C")?,
            from_rows(&r.d, "D")?,
        )
    }
}

impl From<StateSpace> for SsRepr {
    fn from(ss: StateSpace) -> Self {
        SsRepr {
            a: to_rows(&ss.a),
            b: to_rows(&ss.b),
            c: to_rows(&ss.c),
            d: to_rows(&ss.d),
        }
    }
}

impl StateSpace {
    pub fn new(a: DMatrix<f64>, b: DMatrix<f64>, c: DMatrix<f64>, d: DMatrix<f64>) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::DimensionMismatch("A must be square".into()));
        }
        let (p, m) = (d.nrows(), d.ncols());
        if b.nrows() != n || b.ncols() != m {
            return Err(Error::DimensionMismatch(format!(
                "B must be {n} x {m}, got {} x {}",
                b.nrows(),
                b.ncols()
            )));
        }
        if c.nrows() != p || c.ncols() != n {
            return Err(Error::DimensionMismatch(format!(
                "C must be {p} x {n}, got {} x {}",
                c.nrows(),
                c.ncols()
            )));
        }
        for m in [&a, &b, &c, &d] {
            if m.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite("state-space matrices".into()));
            }
        }
        Ok(StateSpace { a, b, c, d })
    }

    /// Pure static gain (empty state).
    pub fn gain(k: f64) -> StateSpace {
        StateSpace {
            a: DMatrix::zeros(0, 0),
            b: DMatrix::zeros(0, 1),
            c: DMatrix::zeros(1, 0),
            d: DMatrix::from_element(1, 1, k),
        }
    }

    /// SISO system from flat row-major matrix data.
    pub fn siso(a: Vec<f64>, b: Vec<f64>, c: Vec<f64>, d: f64) -> Result<StateSpace> {
        let n = b.len();
        if a.len() != n * n || c.len() != n {
            return Err(Error::DimensionMismatch(
                "siso expects A of n*n entries and B, C of n entries".into(),
            ));
        }
        StateSpace::new(
            DMatrix::from_row_slice(n, n, &a),
            DMatrix::from_column_slice(n, 1, &b),
            DMatrix::from_row_slice(1, n, &c),
            DMatrix::from_element(1, 1, d),
        )
    }

    pub fn a(&self) -> &DMatrix<f64> {
        &self.a
    }

    pub fn b(&self) -> &DMatrix<f64> {
        &self.b
    }

    pub fn c(&self) -> &DMatrix<f64> {
        &self.c
    }

    pub fn d(&self) -> &DMatrix<f64> {
        &self.d
    }

    pub fn n_states(&self) -> usize {
        self.a.nrows()
    }

    pub fn n_inputs(&self) -> usize {
        self.b.ncols()
    }

    pub fn n_outputs(&self) -> usize {
        self.c.nrows()
    }

    pub fn is_siso(&self) -> bool {
        self.n_inputs() == 1 && self.n_outputs() == 1
    }

    pub fn eigenvalues(&self) -> Vec<Complex64> {
        if self.n_states() == 0 {
            return Vec::new();
        }
        self.a.complex_eigenvalues().iter().copied().collect()
    }

    /// Frequency response matrix `C (j w I - A)^-1 B + D`.
    pub fn freq_response(&self, omega: f64) -> Result<DMatrix<Complex64>> {
        if !omega.is_finite() {
            return Err(Error::InvalidFrequency(omega));
        }
        let n = self.n_states();
        let dc = self.d.map(|v| Complex64::new(v, 0.0));
        if n == 0 {
            return Ok(dc);
        }
        let mut m = self.a.map(|v| Complex64::new(-v, 0.0));
        for i in 0..n {
            m[(i, i)] += Complex64::new(0.0, omega);
        }
        let bc = self.b.map(|v| Complex64::new(v, 0.0));
        let lu = m.lu();
        let x = lu
            .solve(&bc)
            .ok_or(Error::PoleOnAxis { omega })?;
        let cc = self.c.map(|v| Complex64::new(v, 0.0));
        Ok(&cc * x + dc)
    }

    /// Scalar frequency response of a SISO system.
    pub fn siso_freq_response(&self, omega: f64) -> Result<Complex64> {
        if !self.is_siso() {
            return Err(Error::DimensionMismatch(
                "siso_freq_response requires a SISO system".into(),
            ));
        }
        Ok(self.freq_response(omega)?[(0, 0)])
    }

    /// Resolvent column `(j w I - A)^-1 B` of a single-input system.
    pub fn resolvent_column(&self, omega: f64) -> Result<DVector<Complex64>> {
        if self.n_inputs() != 1 {
            return Err(Error::DimensionMismatch(
                "resolvent_column requires a single-input system".into(),
            ));
        }
        let n = self.n_states();
        if n == 0 {
            return Ok(DVector::zeros(0));
        }
        let mut m = self.a.map(|v| Complex64::new(-v, 0.0));
        for i in 0..n {
            m[(i, i)] += Complex64::new(0.0, omega);
        }
        let bc = DVector::from_fn(n, |i, _| Complex64::new(self.b[(i, 0)], 0.0));
        m.lu()
            .solve(&bc)
            .ok_or(Error::PoleOnAxis { omega })
    }

    /// Series interconnection: input drives `self`, its output drives `other`.
    pub fn series(&self, other: &StateSpace) -> Result<StateSpace> {
        if self.n_outputs() != other.n_inputs() {
            return Err(Error::DimensionMismatch(
                "series requires self outputs == other inputs".into(),
            ));
        }
        let (n1, n2) = (self.n_states(), other.n_states());
        let m = self.n_inputs();
        let p = other.n_outputs();
        let mut a = DMatrix::zeros(n1 + n2, n1 + n2);
        a.view_mut((0, 0), (n1, n1)).copy_from(&self.a);
        a.view_mut((n1, n1), (n2, n2)).copy_from(&other.a);
        a.view_mut((n1, 0), (n2, n1)).copy_from(&(&other.b * &self.c));
        let mut b = DMatrix::zeros(n1 + n2, m);
        b.view_mut((0, 0), (n1, m)).copy_from(&self.b);
        b.view_mut((n1, 0), (n2, m)).copy_from(&(&other.b * &self.d));
        let mut c = DMatrix::zeros(p, n1 + n2);
        c.view_mut((0, 0), (p, n1)).copy_from(&(&other.d * &self.c));
        c.view_mut((0, n1), (p, n2)).copy_from(&other.c);
        let d = &other.d * &self.d;
        StateSpace::new(a, b, c, d)
    }

    /// Parallel interconnection: shared input, summed outputs.
    pub fn parallel(&self, other: &StateSpace) -> Result<StateSpace> {
        if self.n_inputs() != other.n_inputs() || self.n_outputs() != other.n_outputs() {
            return Err(Error::DimensionMismatch(
                "parallel requires matching input/output dimensions".into(),
            ));
        }
        let (n1, n2) = (self.n_states(), other.n_states());
        let m = self.n_inputs();
        let p = self.n_outputs();
        let mut a = DMatrix::zeros(n1 + n2, n1 + n2);
        a.view_mut((0, 0), (n1, n1)).copy_from(&self.a);
        a.view_mut((n1, n1), (n2, n2)).copy_from(&other.a);
        let mut b = DMatrix::zeros(n1 + n2, m);
        b.view_mut((0, 0), (n1, m)).copy_from(&self.b);
        b.view_mut((n1, 0), (n2, m)).copy_from(&other.b);
        let mut c = DMatrix::zeros(p, n1 + n2);
        c.view_mut((0, 0), (p, n1)).copy_from(&self.c);
        c.view_mut((0, n1), (p, n2)).copy_from(&other.c);
        let d = &self.d + &other.d;
        StateSpace::new(a, b, c, d)
    }
}

/// SISO state space back to a rational transfer function via the
/// Faddeev-LeVerrier recursion.
pub fn ss_to_tf(ss: &StateSpace) -> Result<RationalTf> {
    if !ss.is_siso() {
        return Err(Error::DimensionMismatch("ss_to_tf requires SISO".into()));
    }
    let n = ss.n_states();
    let d0 = ss.d()[(0, 0)];
    if n == 0 {
        return RationalTf::constant(d0);
    }
    // char(s) = s^n + q[1] s^(n-1) + ... + q[n];
    // (sI - A)^-1 = sum_k s^(n-1-k) M_k / char(s)
    let mut q = vec![0.0; n + 1];
    q[0] = 1.0;
    let mut m_k = DMatrix::<f64>::identity(n, n);
    let mut num_desc = vec![0.0; n + 1];
    let a = ss.a();
    let b = ss.b();
    let c = ss.c();
    for k in 1..=n {
        // numerator coefficient of s^(n-k): C M_k B
        num_desc[k] = (c * &m_k * b)[(0, 0)];
        let am = a * &m_k;
        q[k] = -am.trace() / k as f64;
        m_k = am + DMatrix::<f64>::identity(n, n) * q[k];
    }
    // add the feedthrough: num = C adj(sI-A) B + D char(s)
    for k in 0..=n {
        num_desc[k] += d0 * q[k];
    }
    let num: Vec<f64> = num_desc.into_iter().rev().collect();
    let den: Vec<f64> = q.into_iter().rev().collect();
    RationalTf::new(poly::trim(num), poly::trim(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linsys::tf::{make_lead, tf_to_ss};
    use approx::assert_relative_eq;

    #[test]
    fn first_order_canonical() {
        let tf = RationalTf::new(vec![1.0], vec![1.0, 1.0]).unwrap();
        let ss = tf_to_ss(&tf);
        assert_eq!(ss.n_states(), 1);
        assert_relative_eq!(ss.a()[(0, 0)], -1.0);
        assert_relative_eq!(ss.b()[(0, 0)], 1.0);
        assert_relative_eq!(ss.c()[(0, 0)], 1.0);
        assert_relative_eq!(ss.d()[(0, 0)], 0.0);
    }

    #[test]
    fn constant_gain_realisation() {
        let tf = RationalTf::constant(3.5).unwrap();
        let ss = tf_to_ss(&tf);
        assert_eq!(ss.n_states(), 0);
        assert_relative_eq!(ss.d()[(0, 0)], 3.5);
    }

    #[test]
    fn lead_realises_with_feedthrough() {
        let tf = make_lead(1.0, 10.0).unwrap();
        let ss = tf_to_ss(&tf);
        assert_eq!(ss.n_states(), 1);
        assert!(ss.d()[(0, 0)].abs() > 1e-12);
        for i in 0..100 {
            let w = 10f64.powf(-2.0 + 4.0 * i as f64 / 99.0);
            let a = tf.freq_response(w).unwrap();
            let b = ss.siso_freq_response(w).unwrap();
            assert_relative_eq!(a.re, b.re, max_relative = 1e-9, epsilon = 1e-12);
            assert_relative_eq!(a.im, b.im, max_relative = 1e-9, epsilon = 1e-12);
        }
    }

    #[test]
    fn series_matches_tf_product() {
        let f = make_lead(1.0, 10.0).unwrap();
        let g = RationalTf::new(vec![2.0], vec![1.0, 0.5]).unwrap();
        let ss = tf_to_ss(&f).series(&tf_to_ss(&g)).unwrap();
        for w in [0.01, 0.3, 2.0, 40.0] {
            let want = f.freq_response(w).unwrap() * g.freq_response(w).unwrap();
            let got = ss.siso_freq_response(w).unwrap();
            assert_relative_eq!(got.re, want.re, max_relative = 1e-10, epsilon = 1e-13);
            assert_relative_eq!(got.im, want.im, max_relative = 1e-10, epsilon = 1e-13);
        }
    }

    #[test]
    fn ss_to_tf_roundtrip() {
        let tf = RationalTf::new(vec![2.0, 0.3, 1.0], vec![4.0, 1.0, 0.5, 1.0])
            .unwrap()
            .monic();
        let back = ss_to_tf(&tf_to_ss(&tf)).unwrap().monic();
        for (a, b) in back.num().iter().zip(tf.num()) {
            assert_relative_eq!(a, b, epsilon = 1e-10);
        }
        for (a, b) in back.den().iter().zip(tf.den()) {
            assert_relative_eq!(a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn freq_response_pole_on_axis() {
        // undamped oscillator: eigenvalues at +-j
        let ss = StateSpace::siso(vec![0.0, 1.0, -1.0, 0.0], vec![0.0, 1.0], vec![1.0, 0.0], 0.0)
            .unwrap();
        assert!(ss.siso_freq_response(1.0).is_err());
        assert!(ss.siso_freq_response(0.5).is_ok());
    }

    #[test]
    fn serde_roundtrip() {
        let ss = StateSpace::siso(vec![-1.0], vec![1.0], vec![1.0], 0.5).unwrap();
        let json = serde_json::to_string(&ss).unwrap();
        let back: StateSpace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ss);
    }

    #[test]
    fn dimension_checks() {
        let bad = StateSpace::new(
            DMatrix::zeros(2, 2),
            DMatrix::zeros(1, 1),
            DMatrix::zeros(1, 2),
            DMatrix::zeros(1, 1),
        );
        assert!(bad.is_err());
    }
}
