//! Independent verification machinery, deliberately decoupled from the
//! production kernels: a slow reference for `D_nu`, a finite-difference
//! eigensolver for the generated potentials, and brute-force spectral
//! propagation. Used by tests and by `triplewell verify`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{trapezoid_c, GridSpec};
use crate::model::Model;
use crate::dynamics::PacketState;

/// Reciprocal Gamma that is zero at the poles; small positive arguments
/// go through the reflection-free product form to stay independent of the
/// production Lanczos code.
fn recip_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    // shift up and use Stirling's series at large argument
    let mut shift = 1.0;
    let mut y = x;
    while y < 24.0 {
        shift *= y;
        y += 1.0;
    }
    // ln Gamma(y) by Stirling with Bernoulli terms
    let b = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
    ];
    let mut corr = 0.0;
    let mut ypow = y;
    for bk in b {
        corr += bk / ypow;
        ypow *= y * y;
    }
    let ln_gamma = (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + corr;
    shift / ln_gamma.exp()
}

/// Slow reference for `D_nu(z)`.
///
/// For `z <= 2` (including all negative arguments) the direct even/odd
/// Taylor solutions of Weber's equation are summed with compensated
/// accumulation: `(k+2)(k+1) a_(k+2) = a_(k-2)/4 - (nu + 1/2) a_k`, and
/// `D = D_nu(0) y_even + D_nu'(0) y_odd`. For larger positive arguments —
/// where those series cancel catastrophically — the positive-integrand
/// representation `e^(-z^2/4)/Gamma(-nu) int_0^inf t^(-nu-1)
/// e^(-t^2/2 - zt) dt` is evaluated with log-domain exp-sinh quadrature.
///
/// `digits` bounds the term/refinement budget; f64 arithmetic caps the
/// achievable accuracy near 1e-13 relative regardless.
pub fn pcf_series_reference(nu: f64, z: f64, digits: u32) -> Result<f64> {
    if !(1..=40).contains(&digits) {
        return Err(Error::InvalidParams(format!(
            "digits = {digits} outside 1..=40"
        )));
    }
    if z.abs() > 12.0 {
        return Err(Error::Range(format!("reference limited to |z| <= 12, got {z}")));
    }
    if !(nu <= 0.5 && nu > -28.0) {
        return Err(Error::Range(format!("reference order {nu} unsupported")));
    }
    if z <= 2.0 {
        taylor_pair(nu, z, digits)
    } else if nu >= 0.0 {
        // only nu = 0 reaches here in practice; the Taylor pair still has
        // headroom at small positive z
        taylor_pair(nu, z, digits)
    } else {
        exp_sinh_integral(nu, z, digits)
    }
}

fn taylor_pair(nu: f64, z: f64, digits: u32) -> Result<f64> {
    let tol = 10f64.powi(-(digits as i32) - 2);
    // even series: a0 = 1, a1 = 0; odd: a0 = 0, a1 = 1
    let mut even_km2 = 1.0; // a_k with k-2 lag, even chain: a0
    let mut even_k = -(nu + 0.5) / 2.0; // a2 = -(nu + 1/2) a0 / 2
    let mut odd_km2 = 1.0; // a1
    let mut odd_k = -(nu + 0.5) / 6.0; // a3
    let z2 = z * z;
    let mut zp_even = 1.0; // z^0
    let mut zp_odd = z; // z^1
    let mut y_even = zp_even;
    let mut y_odd = zp_odd;
    let mut ce = 0.0;
    let mut co = 0.0;
    let add = |sum: &mut f64, comp: &mut f64, term: f64| {
        let y = term - *comp;
        let t = *sum + y;
        *comp = (t - *sum) - y;
        *sum = t;
    };
    zp_even *= z2;
    zp_odd *= z2;
    add(&mut y_even, &mut ce, even_k * zp_even);
    add(&mut y_odd, &mut co, odd_k * zp_odd);
    let mut converged = false;
    for k in (2..3000).step_by(2) {
        let kf = k as f64;
        // next even coefficient a_(k+2) from a_k, a_(k-2)
        let e_next = (even_km2 / 4.0 - (nu + 0.5) * even_k) / ((kf + 2.0) * (kf + 1.0));
        let o_next =
            (odd_km2 / 4.0 - (nu + 0.5) * odd_k) / ((kf + 3.0) * (kf + 2.0));
        even_km2 = even_k;
        even_k = e_next;
        odd_km2 = odd_k;
        odd_k = o_next;
        zp_even *= z2;
        zp_odd *= z2;
        let te = even_k * zp_even;
        let to = odd_k * zp_odd;
        add(&mut y_even, &mut ce, te);
        add(&mut y_odd, &mut co, to);
        if kf > z2 / 2.0
            && te.abs() <= tol * y_even.abs().max(1e-300)
            && to.abs() <= tol * y_odd.abs().max(1e-300)
        {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!(
            "reference Taylor series stalled at nu = {nu}, z = {z}"
        )));
    }
    let d0 = 2f64.powf(nu / 2.0) * PI.sqrt() * recip_gamma((1.0 - nu) / 2.0);
    let dp0 = -(2f64.powf((nu + 1.0) / 2.0)) * PI.sqrt() * recip_gamma(-nu / 2.0);
    Ok(d0 * y_even + dp0 * y_odd)
}

fn exp_sinh_integral(nu: f64, z: f64, digits: u32) -> Result<f64> {
    let alpha = -nu;
    // t = exp((pi/2) sinh u); integrand in log-domain:
    // ln f = alpha ln t - t^2/2 - z t + ln((pi/2) cosh u)
    let ln_f = |u: f64| -> f64 {
        let ln_t = (PI / 2.0) * u.sinh();
        let t = ln_t.exp();
        alpha * ln_t - 0.5 * t * t - z * t + ((PI / 2.0) * u.cosh()).ln()
    };
    // left cap where alpha * (pi/2) sinh|u| > 60
    let u_lo = -((2.0 * 60.0 / (PI * alpha)).asinh().max(3.0));
    let u_hi = 2.2;
    let target = 10f64.powi(-(digits as i32).min(13) - 1);
    let mut h = 0.1;
    let mut prev = f64::NAN;
    for _ in 0..6 {
        let steps = ((u_hi - u_lo) / h).ceil() as usize;
        let mut sum = 0.0;
        let mut comp = 0.0;
        for i in 0..=steps {
            let u = u_lo + h * i as f64;
            let lf = ln_f(u);
            if lf < -745.0 {
                continue;
            }
            let v = lf.exp();
            let y = v - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        let val = h * sum;
        if prev.is_finite() && (val - prev).abs() <= target * val.abs() {
            let gamma_alpha = 1.0 / recip_gamma(alpha);
            return Ok((-z * z / 4.0).exp() / gamma_alpha * val);
        }
        prev = val;
        h /= 2.0;
    }
    Err(Error::Convergence(format!(
        "exp-sinh reference stalled at nu = {nu}, z = {z}"
    )))
}

/// Eigen-decomposition of the discretized Hamiltonian
/// `-1/2 d^2/dxi^2 + U` with Dirichlet ends.
#[derive(Debug, Clone)]
pub struct FdEigen {
    /// Richardson-extrapolated eigenvalues (grid h and 2h combined), the
    /// values to compare against analytic spectra.
    pub values: Vec<f64>,
    /// Raw fine-grid eigenvalues (O(h^2) accurate).
    pub raw_values: Vec<f64>,
    /// Fine-grid eigenvectors, L2-normalized, including the boundary
    /// zeros; `vectors[k][i]` aligns with the input grid.
    pub vectors: Vec<Vec<f64>>,
}

/// Lowest `k` eigenpairs of the three-point finite-difference Hamiltonian
/// built from potential samples on a uniform grid, via Sturm bisection and
/// inverse iteration on the symmetric tridiagonal form.
///
/// When `points` is odd the eigenvalues are Richardson-refined with the
/// decimated (every other sample) grid, removing the O(h^2) term.
pub fn fd_eigensolve(potential: &[f64], grid: &GridSpec, k: usize) -> Result<FdEigen> {
    if potential.len() != grid.points {
        return Err(Error::Grid(format!(
            "potential samples ({}) do not match grid points ({})",
            potential.len(),
            grid.points
        )));
    }
    if k == 0 || k > 20 {
        return Err(Error::InvalidParams(format!("k = {k} outside 1..=20")));
    }
    if grid.points < 2 * k + 3 {
        return Err(Error::Grid("grid too small for requested eigencount".into()));
    }
    let raw = tridiag_lowest(potential, grid.h(), k)?;
    let values = if grid.points % 2 == 1 && grid.points >= 4 * k + 5 {
        let coarse: Vec<f64> = potential.iter().step_by(2).copied().collect();
        let coarse_vals = tridiag_lowest(&coarse, 2.0 * grid.h(), k)?;
        raw.iter()
            .zip(&coarse_vals)
            .map(|(f, c)| (4.0 * f - c) / 3.0)
            .collect()
    } else {
        raw.clone()
    };
    let vectors = (0..k)
        .map(|j| eigenvector(potential, grid.h(), raw[j]))
        .collect::<Result<Vec<_>>>()?;
    Ok(FdEigen {
        values,
        raw_values: raw,
        vectors,
    })
}

/// Lowest `k` eigenvalues of the interior tridiagonal matrix
/// `diag_i = 1/h^2 + U_i`, `off = -1/(2 h^2)` by Sturm-count bisection.
fn tridiag_lowest(potential: &[f64], h: f64, k: usize) -> Result<Vec<f64>> {
    let n = potential.len() - 2;
    let diag: Vec<f64> = potential[1..potential.len() - 1]
        .iter()
        .map(|u| 1.0 / (h * h) + u)
        .collect();
    let off = -0.5 / (h * h);
    let off2 = off * off;
    // eigenvalue count below lambda via the LDL^T pivot signs
    let count_below = |lambda: f64| -> usize {
        let mut count = 0usize;
        let mut d = f64::INFINITY; // first pivot has no off^2/d term
        for &di in &diag {
            d = (di - lambda) - off2 / d;
            if d < 0.0 {
                count += 1;
            }
            if d == 0.0 {
                d = -1e-300;
            }
        }
        count
    };
    let dmin = diag.iter().cloned().fold(f64::INFINITY, f64::min);
    let dmax = diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let (lo0, hi0) = (dmin + 2.0 * off, dmax - 2.0 * off);
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let (mut lo, mut hi) = (lo0, hi0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-13 * (1.0 + mid.abs()) {
                break;
            }
        }
        out.push(0.5 * (lo + hi));
        if out[j] > hi0 - 1.0 {
            return Err(Error::Convergence(format!(
                "tridiagonal bisection failed for index {j} (n = {n})"
            )));
        }
    }
    Ok(out)
}

/// Inverse iteration for the eigenvector at `lambda` (fine grid), with
/// partial-pivot tridiagonal elimination and a deterministic start.
fn eigenvector(potential: &[f64], h: f64, lambda: f64) -> Result<Vec<f64>> {
    let m = potential.len();
    let n = m - 2;
    let diag: Vec<f64> = potential[1..m - 1]
        .iter()
        .map(|u| 1.0 / (h * h) + u - lambda - 1e-11)
        .collect();
    let off = -0.5 / (h * h);
    let mut v: Vec<f64> = (0..n).map(|i| (0.7 * (i as f64 + 1.3)).sin()).collect();
    for _ in 0..3 {
        v = solve_tridiag_pp(&diag, off, &v)?;
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut v {
            *x /= norm;
        }
    }
    // embed with Dirichlet zeros and L2-normalize
    let mut full = vec![0.0; m];
    full[1..m - 1].copy_from_slice(&v);
    let l2: f64 = full.iter().map(|x| x * x).sum::<f64>() * h;
    let inv = 1.0 / l2.sqrt();
    for x in &mut full {
        *x *= inv;
    }
    // sign: leftmost significant lobe positive
    let peak = full.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    if let Some(first) = full.iter().find(|x| x.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            for x in &mut full {
                *x = -*x;
            }
        }
    }
    Ok(full)
}

/// Gaussian elimination with partial pivoting for a symmetric tridiagonal
/// system with constant off-diagonal.
fn solve_tridiag_pp(diag: &[f64], off: f64, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    // bands: a = subdiag, b = diag, c = superdiag, d = second superdiag
    let mut b: Vec<f64> = diag.to_vec();
    let mut c = vec![off; n - 1];
    let mut d = vec![0.0; n.saturating_sub(2)];
    let mut x: Vec<f64> = rhs.to_vec();
    for i in 0..n - 1 {
        let a_i = off;
        if a_i.abs() > b[i].abs() {
            // swap rows i and i+1
            let (bi, ci) = (b[i], c[i]);
            b[i] = a_i;
            c[i] = b[i + 1];
            let di_new = if i + 2 < n { c[i + 1] } else { 0.0 };
            b[i + 1] = ci;
            if i + 2 < n {
                c[i + 1] = if i < d.len() { d[i] } else { 0.0 };
            }
            if i < d.len() {
                d[i] = di_new;
            }
            x.swap(i, i + 1);
            let factor = bi / b[i];
            b[i + 1] -= factor * c[i];
            if i + 2 < n {
                c[i + 1] -= factor * d[i];
            }
            x[i + 1] -= factor * x[i];
        } else {
            if b[i] == 0.0 {
                b[i] = 1e-300;
            }
            let factor = a_i / b[i];
            b[i + 1] -= factor * c[i];
            if i + 2 < n && i < d.len() {
                c[i + 1] -= factor * d[i];
            }
            x[i + 1] -= factor * x[i];
        }
    }
    if b[n - 1] == 0.0 {
        b[n - 1] = 1e-300;
    }
    // back substitution
    let mut out = vec![0.0; n];
    out[n - 1] = x[n - 1] / b[n - 1];
    if n >= 2 {
        out[n - 2] = (x[n - 2] - c[n - 2] * out[n - 1]) / b[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        let mut acc = x[i] - c[i] * out[i + 1];
        if i < d.len() {
            acc -= d[i] * out[i + 2];
        }
        out[i] = acc / b[i];
    }
    Ok(out)
}

/// Brute-force spectral propagation
/// `sum_n <Psi_n|Phi> Psi_n(xi) e^(-i E_n T)`, the adjudicating oracle for
/// propagator branch choices. Pointwise model evaluation, own inner
/// products; shares no evolution code with the dynamics module.
pub fn spectral_propagate_reference(
    model: &Model,
    packet: &PacketState,
    t: f64,
    n_max: usize,
) -> Result<PacketState> {
    if n_max > crate::model::MAX_STATE_INDEX {
        return Err(Error::Range(format!("n_max = {n_max} too large")));
    }
    let xs = packet.grid.samples();
    let h = packet.grid.h();
    let mut amps = vec![Complex64::default(); xs.len()];
    for n in 0..=n_max {
        let vals: Vec<f64> = xs
            .iter()
            .map(|&x| model.wavefunction(n, x).map(|(v, _)| v))
            .collect::<Result<_>>()?;
        let prod: Vec<Complex64> = vals.iter().zip(&packet.amps).map(|(v, a)| v * a).collect();
        let c = trapezoid_c(&prod, h);
        let phase = Complex64::from_polar(1.0, -model.eigenvalue(n) * t);
        for (a, v) in amps.iter_mut().zip(&vals) {
            *a += c * phase * v;
        }
    }
    Ok(PacketState {
        grid: packet.grid,
        amps,
        time: t,
    })
}
