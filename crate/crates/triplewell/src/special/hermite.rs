//! Unit-normalized harmonic-oscillator eigenfunctions in dimensionless
//! units, `psi_n(xi) = pi^(-1/4) (2^n n!)^(-1/2) H_n(xi) e^(-xi^2/2)`,
//! evaluated by the stable normalized three-term recurrence.

use crate::error::{Error, Result};

/// Largest supported oscillator level.
pub const HERMITE_MAX_N: usize = 64;

/// `(psi_n(xi), psi_n'(xi))`.
pub fn hermite_psi(n: usize, xi: f64) -> Result<(f64, f64)> {
    if n > HERMITE_MAX_N {
        return Err(Error::Range(format!(
            "oscillator level {n} exceeds supported {HERMITE_MAX_N}"
        )));
    }
    let all = hermite_psi_upto(n, xi)?;
    Ok(all[n])
}

/// All `(psi_k, psi_k')` for `k = 0..=n` at `xi`; the recurrence yields the
/// lower levels for free.
pub fn hermite_psi_upto(n: usize, xi: f64) -> Result<Vec<(f64, f64)>> {
    if n > HERMITE_MAX_N {
        return Err(Error::Range(format!(
            "oscillator level {n} exceeds supported {HERMITE_MAX_N}"
        )));
    }
    let mut out = Vec::with_capacity(n + 1);
    let psi0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * xi * xi).exp();
    out.push((psi0, -xi * psi0));
    if n == 0 {
        return Ok(out);
    }
    let psi1 = std::f64::consts::SQRT_2 * xi * psi0;
    out.push((psi1, -xi * psi1 + std::f64::consts::SQRT_2 * psi0));
    for k in 1..n {
        let kf = k as f64;
        let v = (2.0 / (kf + 1.0)).sqrt() * xi * out[k].0 - (kf / (kf + 1.0)).sqrt() * out[k - 1].0;
        // psi_n' = -xi psi_n + sqrt(2n) psi_(n-1)
        let d = -xi * v + (2.0 * (kf + 1.0)).sqrt() * out[k].0;
        out.push((v, d));
    }
    Ok(out)
}
