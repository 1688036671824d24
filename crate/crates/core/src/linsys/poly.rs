//! Real polynomial arithmetic on ascending-power coefficient lists.
//!
//! The coefficient at index `k` multiplies `s^k`. All routines keep lists
//! trimmed: the highest-order coefficient is nonzero unless the polynomial
//! is identically zero, in which case the list is `[0.0]`.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Drop exact trailing zeros, keeping at least one coefficient.
pub fn trim(mut coeffs: Vec<f64>) -> Vec<f64> {
    while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
        coeffs.pop();
    }
    coeffs
}

pub fn degree(coeffs: &[f64]) -> usize {
    coeffs.len().saturating_sub(1)
}

pub fn is_zero(coeffs: &[f64]) -> bool {
    coeffs.iter().all(|&c| c == 0.0)
}

pub fn mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len().max(b.len())];
    for (i, &ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, &bi) in b.iter().enumerate() {
        out[i] += bi;
    }
    trim(out)
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len().max(b.len())];
    for (i, &ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, &bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(out)
}

pub fn scale(a: &[f64], k: f64) -> Vec<f64> {
    trim(a.iter().map(|&c| c * k).collect())
}

/// Horner evaluation at a complex point.
pub fn eval(coeffs: &[f64], s: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * s + c;
    }
    acc
}

/// Upper bound on `|p(s)|` used to decide whether an evaluation is a
/// genuine near-zero (pole hit) rather than an ordinary small value.
pub fn eval_scale(coeffs: &[f64], s_abs: f64) -> f64 {
    let mut scale = 0.0;
    let mut pw = 1.0;
    for &c in coeffs {
        scale += c.abs() * pw;
        pw *= s_abs;
    }
    scale
}

/// Polynomial long division `a = q * b + r` with `deg r < deg b`.
pub fn div(a: &[f64], b: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let b = trim(b.to_vec());
    assert!(!is_zero(&b), "division by zero polynomial");
    let db = degree(&b);
    let lead = b[db];
    let mut r = a.to_vec();
    if degree(&r) < db {
        return (vec![0.0], trim(r));
    }
    let dq = degree(&r) - db;
    let mut q = vec![0.0; dq + 1];
    for k in (0..=dq).rev() {
        let coef = r[db + k] / lead;
        q[k] = coef;
        for j in 0..=db {
            r[j + k] -= coef * b[j];
        }
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

/// Monic greatest common divisor by the Euclidean remainder sequence.
///
/// Remainder coefficients below `tol` relative to the remainder's largest
/// coefficient are treated as zero, so near-common factors within `tol` of
/// the monic-normalised coefficients cancel. Returns `[1.0]` for coprime
/// inputs.
pub fn gcd(a: &[f64], b: &[f64], tol: f64) -> Vec<f64> {
    fn monic(p: Vec<f64>) -> Vec<f64> {
        let lead = *p.last().unwrap();
        p.iter().map(|c| c / lead).collect()
    }
    if is_zero(a) {
        return monic(trim(b.to_vec()));
    }
    if is_zero(b) {
        return monic(trim(a.to_vec()));
    }
    let mut f = monic(trim(a.to_vec()));
    let mut g = monic(trim(b.to_vec()));
    if degree(&f) < degree(&g) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if degree(&g) == 0 {
            return vec![1.0];
        }
        let (_, r) = div(&f, &g);
        let norm = r.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if norm <= tol {
            return g;
        }
        let chopped: Vec<f64> = r
            .iter()
            .map(|&c| if c.abs() <= tol * norm { 0.0 } else { c })
            .collect();
        f = g;
        g = monic(trim(chopped));
    }
}

/// Roots via the companion matrix. Degree-zero polynomials have none.
pub fn roots(coeffs: &[f64]) -> Vec<Complex64> {
    let coeffs = trim(coeffs.to_vec());
    let n = degree(&coeffs);
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let mut companion = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        companion[(i, n - 1)] = -coeffs[i] / lead;
    }
    companion.complex_eigenvalues().iter().copied().collect()
}

/// Rebuild a real polynomial `lead * prod (s - r_i)` from a root set that is
/// (numerically) closed under conjugation. Conjugate pairs are expanded as
/// real quadratics; residual imaginary parts from eigenvalue extraction are
/// discarded.
pub fn from_roots(roots: &[Complex64], lead: f64) -> Vec<f64> {
    let mut remaining: Vec<Complex64> = roots.to_vec();
    let mut poly = vec![lead];
    while let Some(r) = remaining.pop() {
        if r.im.abs() <= 1e-12 * (1.0 + r.re.abs()) {
            // real root: multiply by (s - re)
            poly = mul(&poly, &[-r.re, 1.0]);
        } else {
            // find and consume the conjugate partner
            let mut best = None;
            let mut best_d = f64::INFINITY;
            for (i, c) in remaining.iter().enumerate() {
                let d = (c.conj() - r).norm();
                if d < best_d {
                    best_d = d;
                    best = Some(i);
                }
            }
            let partner = best.expect("complex root without conjugate partner");
            let c = remaining.swap_remove(partner);
            let re = 0.5 * (r.re + c.re);
            let im = 0.5 * (r.im.abs() + c.im.abs());
            // (s - (re + j im))(s - (re - j im)) = s^2 - 2 re s + re^2 + im^2
            poly = mul(&poly, &[re * re + im * im, -2.0 * re, 1.0]);
        }
    }
    trim(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn mul_add_sub() {
        // (1 + s)(2 + s) = 2 + 3s + s^2
        assert_eq!(mul(&[1.0, 1.0], &[2.0, 1.0]), vec![2.0, 3.0, 1.0]);
        assert_eq!(add(&[1.0, 2.0], &[1.0]), vec![2.0, 2.0]);
        assert_eq!(sub(&[1.0, 2.0], &[1.0, 2.0]), vec![0.0]);
    }

    #[test]
    fn eval_horner() {
        // p(s) = 1 + 2s + s^2 at s = j: 1 + 2j - 1 = 2j
        let v = eval(&[1.0, 2.0, 1.0], Complex64::new(0.0, 1.0));
        assert_relative_eq!(v.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(v.im, 2.0, epsilon = 1e-15);
    }

    #[test]
    fn roots_roundtrip() {
        // roots of s^2 + 3s + 2 are -1, -2
        let mut r = roots(&[2.0, 3.0, 1.0]);
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert_relative_eq!(r[0].re, -2.0, epsilon = 1e-10);
        assert_relative_eq!(r[1].re, -1.0, epsilon = 1e-10);

        let p = from_roots(&r, 1.0);
        assert_relative_eq!(p[0], 2.0, epsilon = 1e-10);
        assert_relative_eq!(p[1], 3.0, epsilon = 1e-10);
        assert_relative_eq!(p[2], 1.0, epsilon = 1e-10);
    }

    #[test]
    fn complex_roots_reconstruct_real_poly() {
        // s^2 + 2s + 5 has roots -1 +- 2j
        let r = roots(&[5.0, 2.0, 1.0]);
        let p = from_roots(&r, 1.0);
        assert_eq!(p.len(), 3);
        assert_relative_eq!(p[0], 5.0, epsilon = 1e-10);
        assert_relative_eq!(p[1], 2.0, epsilon = 1e-10);
    }
}
