//! One triple-well model: the solution chain phi1, phi2, phi, phi-small,
//! chi functions, the Wronskian W(phi-small, phi) with analytic
//! log-derivatives, the potential, the full spectrum with normalized
//! eigenfunctions, and the well geometry.
//!
//! Everything is evaluated in dimensionless units `xi = sqrt(omega) x`;
//! energies are `E-bar = E/omega`. The building blocks at the two extra
//! levels are
//!
//! ```text
//! phi(xi)       = D_nu(sqrt2 xi) + Lambda  D_nu(-sqrt2 xi)      (nodeless)
//! phi_small(xi) = D_mu(sqrt2 xi) - Lambda1 D_mu(-sqrt2 xi)      (one node)
//! W(xi)         = phi_small phi' - phi_small' phi               (positive)
//! U(xi)         = xi^2/2 - d^2/dxi^2 ln W
//! ```
//!
//! with `nu = -1/2 + eps`, `mu = -1/2 + eps1`. Since both factors solve
//! the oscillator equation, `W' = 2 (eps1 - eps) phi_small phi`, so every
//! log-derivative of W used here is analytic; no numeric differentiation
//! happens in any production path.

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::parallel;
use crate::quad;
use crate::special::{gamma, hermite_psi_upto, pcf_d, pcf_d_deriv, HERMITE_MAX_N};

/// Largest eigenstate index (0 and 1 are the extra levels, `k + 2` is
/// oscillator level `k`).
pub const MAX_STATE_INDEX: usize = HERMITE_MAX_N; // levels up to HERMITE_MAX_N - 2

/// Order parameter of `D_nu`; rejects the degenerate non-negative integers
/// where `Gamma(-nu)` has a pole and the pair `D_nu(+-z)` is dependent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PcfOrder(f64);

impl PcfOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() {
            return Err(Error::InvalidParams(format!("order {nu} not finite")));
        }
        if nu >= 0.0 && nu == nu.floor() {
            return Err(Error::InvalidParams(format!(
                "order {nu} is a non-negative integer: Gamma(-nu) pole, \
                 D_nu(z) and D_nu(-z) are linearly dependent"
            )));
        }
        Ok(Self(nu))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// The five free parameters of one triple-well model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Oscillator frequency in natural units (> 0).
    pub omega: f64,
    /// nu = -1/2 + eps-bar, must lie in (-1/2, 0).
    pub nu: f64,
    /// mu = -1/2 + eps1-bar, must lie below nu; negative integers allowed.
    pub mu: f64,
    /// Asymmetry of the eps-level solution (> 0).
    pub lambda: f64,
    /// Asymmetry of the eps1-level solution (> 0).
    pub lambda1: f64,
}

impl ModelParams {
    pub fn validate(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::InvalidParams(what.to_string()));
        for (name, v) in [
            ("omega", self.omega),
            ("nu", self.nu),
            ("mu", self.mu),
            ("lambda", self.lambda),
            ("lambda1", self.lambda1),
        ] {
            if !v.is_finite() {
                return fail(&format!("{name} = {v} is not finite"));
            }
        }
        if self.omega <= 0.0 {
            return fail(&format!("omega = {} must be > 0", self.omega));
        }
        if !(-0.5 < self.nu && self.nu < 0.0) {
            return fail(&format!("nu = {} must lie in (-1/2, 0)", self.nu));
        }
        if self.mu >= self.nu {
            return fail(&format!(
                "mu = {} must be < nu = {} (eps1 < eps)",
                self.mu, self.nu
            ));
        }
        if self.mu <= -28.0 {
            return fail(&format!("mu = {} below supported range", self.mu));
        }
        PcfOrder::new(self.nu).map_err(|_| {
            Error::InvalidParams(format!("nu = {} is a non-negative integer", self.nu))
        })?;
        // mu < nu < 0 already excludes non-negative integers for mu
        if self.lambda <= 0.0 {
            return fail(&format!("lambda = {} must be > 0", self.lambda));
        }
        if self.lambda1 <= 0.0 {
            return fail(&format!("lambda1 = {} must be > 0", self.lambda1));
        }
        if (self.nu - self.mu).abs() < 1e-6 {
            return fail(&format!(
                "nu - mu = {:e} too small: normalization constants degenerate",
                self.nu - self.mu
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    /// The inserted ground state at eps1 (index 0).
    ExtraGround,
    /// The inserted first excited state at eps (index 1).
    ExtraFirst,
    /// Oscillator descendant, level `index - 2`.
    OscillatorDescendant,
}

/// A labeled eigenlevel of the triple-well Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub index: usize,
    /// Dimensionless energy E/omega.
    pub energy: f64,
    pub kind: StateKind,
}

/// Well geometry: three minima and the two barrier tops between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellPartition {
    pub minima: [f64; 3],
    pub barriers: [f64; 2],
}

/// All solution-chain values at one point, used by every evaluator.
#[derive(Debug, Clone, Copy)]
pub struct BasisPoint {
    pub xi: f64,
    /// phi(xi, eps, Lambda) and its xi-derivative.
    pub phi: f64,
    pub dphi: f64,
    /// phi_small(xi, eps1, Lambda1) and its xi-derivative.
    pub phis: f64,
    pub dphis: f64,
    /// W(phi_small, phi) and its first two xi-derivatives.
    pub w: f64,
    pub dw: f64,
    pub d2w: f64,
    /// The mu-level fundamental pair (for the chi functions).
    pub d1m: f64,
    pub d1m_dxi: f64,
    pub d2m: f64,
    pub d2m_dxi: f64,
}

impl BasisPoint {
    pub fn dlog_w(&self) -> f64 {
        self.dw / self.w
    }

    pub fn d2log_w(&self) -> f64 {
        self.d2w / self.w - (self.dw / self.w) * (self.dw / self.w)
    }

    pub fn dlog_phi(&self) -> f64 {
        self.dphi / self.phi
    }
}

/// Cached per-state normalization and sign convention.
#[derive(Debug, Clone, Copy)]
struct StateNorm {
    inv_norm: f64,
    sign: f64,
}

/// Analytic and numerically re-derived normalization constants.
#[derive(Debug, Clone, Copy)]
pub struct NormalizationConstants {
    /// Analytic `N-tilde_Lambda1^{-1}` (ground state), from
    /// `N-tilde_Lambda1^{-2} = 4 Lambda1 (nu - mu) sqrt(pi omega)/Gamma(-mu)`.
    pub analytic_ground: f64,
    /// Analytic `N_Lambda^{-1}` (first excited), from
    /// `N_Lambda^{-2} = 4 Lambda (nu - mu) sqrt(pi omega)/Gamma(-nu)`.
    pub analytic_first: f64,
    /// `1/sqrt(int (phi/W)^2 dxi)` by quadrature.
    pub numeric_ground: f64,
    /// `1/sqrt(int (phi_small/W)^2 dxi)` by quadrature.
    pub numeric_first: f64,
}

impl NormalizationConstants {
    /// analytic / numeric; equals 1 at omega = 1 up to quadrature error.
    pub fn ratio_ground(&self) -> f64 {
        self.analytic_ground / self.numeric_ground
    }

    pub fn ratio_first(&self) -> f64 {
        self.analytic_first / self.numeric_first
    }
}

/// Immutable triple-well model handle.
#[derive(Debug, Clone)]
pub struct Model {
    params: ModelParams,
    /// eps-bar = nu + 1/2
    eps: f64,
    /// eps1-bar = mu + 1/2
    eps1: f64,
    norms: Vec<StateNorm>,
    constants: NormalizationConstants,
}

/// Quadrature window for normalization integrals; wide enough that every
/// supported state's Gaussian tail is negligible.
const NORM_XI_MAX: f64 = 12.0;
const NORM_PANEL: f64 = 0.25;

impl Model {
    pub fn new(params: ModelParams) -> Result<Self> {
        params.validate()?;
        let eps = params.nu + 0.5;
        let eps1 = params.mu + 0.5;
        let mut model = Model {
            params,
            eps,
            eps1,
            norms: Vec::new(),
            constants: NormalizationConstants {
                analytic_ground: 0.0,
                analytic_first: 0.0,
                numeric_ground: 0.0,
                numeric_first: 0.0,
            },
        };
        model.build_norm_table()?;
        Ok(model)
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// eps-bar = nu + 1/2.
    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// eps1-bar = mu + 1/2.
    pub fn eps1(&self) -> f64 {
        self.eps1
    }

    /// Evaluates the whole solution chain at `xi`.
    pub fn basis_at(&self, xi: f64) -> Result<BasisPoint> {
        let p = &self.params;
        let z = SQRT_2 * xi;
        let d1n = pcf_d(p.nu, z)?;
        let d2n = pcf_d(p.nu, -z)?;
        let d1n_d = SQRT_2 * pcf_d_deriv(p.nu, z)?;
        let d2n_d = -SQRT_2 * pcf_d_deriv(p.nu, -z)?;
        let d1m = pcf_d(p.mu, z)?;
        let d2m = pcf_d(p.mu, -z)?;
        let d1m_d = SQRT_2 * pcf_d_deriv(p.mu, z)?;
        let d2m_d = -SQRT_2 * pcf_d_deriv(p.mu, -z)?;

        let phi = d1n + p.lambda * d2n;
        let dphi = d1n_d + p.lambda * d2n_d;
        let phis = d1m - p.lambda1 * d2m;
        let dphis = d1m_d - p.lambda1 * d2m_d;

        let w = phis * dphi - dphis * phi;
        if !w.is_finite() || w == 0.0 {
            return Err(Error::Degenerate(format!(
                "W({xi}) = {w}; invalid parameter combination"
            )));
        }
        let de = 2.0 * (self.eps1 - self.eps);
        let dw = de * phis * phi;
        let d2w = de * (dphis * phi + phis * dphi);
        Ok(BasisPoint {
            xi,
            phi,
            dphi,
            phis,
            dphis,
            w,
            dw,
            d2w,
            d1m,
            d1m_dxi: d1m_d,
            d2m,
            d2m_dxi: d2m_d,
        })
    }

    /// `phi(xi, eps, Lambda)` and its xi-derivative; strictly positive.
    pub fn phi_big(&self, xi: f64) -> Result<(f64, f64)> {
        let b = self.basis_at(xi)?;
        Ok((b.phi, b.dphi))
    }

    /// `phi(xi, eps1, Lambda1)` and its xi-derivative; exactly one node.
    pub fn phi_small(&self, xi: f64) -> Result<(f64, f64)> {
        let b = self.basis_at(xi)?;
        Ok((b.phis, b.dphis))
    }

    /// The two linearly independent solutions of the intermediate
    /// Hamiltonian at the eps1 level,
    /// `chi1 = W(phi1(eps1), phi)/phi`, `chi2 = -W(phi2(eps1), phi)/phi`;
    /// both strictly positive.
    pub fn chi_pair(&self, xi: f64) -> Result<(f64, f64)> {
        let b = self.basis_at(xi)?;
        let chi1 = (b.d1m * b.dphi - b.d1m_dxi * b.phi) / b.phi;
        let chi2 = -(b.d2m * b.dphi - b.d2m_dxi * b.phi) / b.phi;
        Ok((chi1, chi2))
    }

    /// `W(phi_small, phi)` with its first two logarithmic xi-derivatives,
    /// all analytic through `W' = 2 (eps1 - eps) phi_small phi`.
    pub fn wronskian_core(&self, xi: f64) -> Result<(f64, f64, f64)> {
        let b = self.basis_at(xi)?;
        Ok((b.w, b.dlog_w(), b.d2log_w()))
    }

    /// Dimensionless triple-well potential `U(xi) = xi^2/2 - (ln W)''`.
    ///
    /// Spectrum: `{mu + 1/2, nu + 1/2, 1/2, 3/2, ...}`.
    pub fn potential(&self, xi: f64) -> Result<f64> {
        let b = self.basis_at(xi)?;
        Ok(0.5 * xi * xi - b.d2log_w())
    }

    /// Analytic first derivative of the potential (used by the extremum
    /// refinement): `U' = xi - (ln W)'''`.
    fn potential_deriv(&self, xi: f64) -> Result<f64> {
        let b = self.basis_at(xi)?;
        let de = 2.0 * (self.eps1 - self.eps);
        let phis_pp = (xi * xi - 2.0 * self.eps1) * b.phis;
        let phi_pp = (xi * xi - 2.0 * self.eps) * b.phi;
        let d3w = de * (phis_pp * b.phi + 2.0 * b.dphis * b.dphi + b.phis * phi_pp);
        let r1 = b.dw / b.w;
        let r2 = b.d2w / b.w;
        let r3 = d3w / b.w;
        let d3log = r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1;
        Ok(xi - d3log)
    }

    /// Dimensionless eigenvalue of state `index`.
    pub fn eigenvalue(&self, index: usize) -> f64 {
        match index {
            0 => self.eps1,
            1 => self.eps,
            k => (k - 2) as f64 + 0.5,
        }
    }

    pub fn eigen_state(&self, index: usize) -> EigenState {
        let kind = match index {
            0 => StateKind::ExtraGround,
            1 => StateKind::ExtraFirst,
            _ => StateKind::OscillatorDescendant,
        };
        EigenState {
            index,
            energy: self.eigenvalue(index),
            kind,
        }
    }

    /// Unit-normalized eigenfunction value and xi-derivative.
    ///
    /// Normalization is enforced numerically (cached at construction);
    /// the sign convention makes the leftmost significant lobe positive.
    pub fn wavefunction(&self, index: usize, xi: f64) -> Result<(f64, f64)> {
        if index > MAX_STATE_INDEX {
            return Err(Error::Range(format!(
                "state index {index} exceeds supported {MAX_STATE_INDEX}"
            )));
        }
        let b = self.basis_at(xi)?;
        let (v, d) = self.wavefunction_raw(index, &b)?;
        let n = &self.norms[index];
        Ok((n.sign * n.inv_norm * v, n.sign * n.inv_norm * d))
    }

    /// Un-normalized eigenfunction from a prepared basis point.
    fn wavefunction_raw(&self, index: usize, b: &BasisPoint) -> Result<(f64, f64)> {
        match index {
            0 => {
                let v = b.phi / b.w;
                let d = b.dphi / b.w - b.phi * b.dw / (b.w * b.w);
                Ok((v, d))
            }
            1 => {
                let v = b.phis / b.w;
                let d = b.dphis / b.w - b.phis * b.dw / (b.w * b.w);
                Ok((v, d))
            }
            idx => {
                let n = idx - 2;
                let states = hermite_psi_upto(n, b.xi)?;
                let (psi, dpsi) = states[n];
                Ok(self.descendant_from_parts(n, psi, dpsi, b))
            }
        }
    }

    /// Descendant state `Psi(xi, E_n)` assembled from the oscillator state
    /// and the basis point:
    /// `a [ psi + c phi_small W(psi, phi)/W ]` with `a = sqrt((n - nu)/(n - mu))`,
    /// `c = (nu - mu)/(n - nu)`.
    fn descendant_from_parts(&self, n: usize, psi: f64, dpsi: f64, b: &BasisPoint) -> (f64, f64) {
        let p = &self.params;
        let nf = n as f64;
        let a = ((nf - p.nu) / (nf - p.mu)).sqrt();
        let c = (p.nu - p.mu) / (nf - p.nu);
        let s = psi * b.dphi - dpsi * b.phi;
        // W(psi, phi)' = 2 (E_n - eps) psi phi
        let ds = 2.0 * (nf - p.nu) * psi * b.phi;
        let v = a * (psi + c * b.phis * s / b.w);
        let d = a
            * (dpsi + c * (b.dphis * s + b.phis * ds) / b.w
                - c * b.phis * s * b.dw / (b.w * b.w));
        (v, d)
    }

    /// Values of all eigenfunctions `0..=n_max` at one basis point
    /// (amortizes the oscillator recurrence).
    fn wavefunctions_at(&self, n_max: usize, b: &BasisPoint) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(b.phi / b.w);
        if n_max >= 1 {
            out.push(b.phis / b.w);
        }
        if n_max >= 2 {
            let states = hermite_psi_upto(n_max - 2, b.xi)?;
            for (n, &(psi, dpsi)) in states.iter().enumerate() {
                out.push(self.descendant_from_parts(n, psi, dpsi, b).0);
            }
        }
        for (i, v) in out.iter_mut().enumerate() {
            let n = &self.norms[i];
            *v *= n.sign * n.inv_norm;
        }
        Ok(out)
    }

    /// Analytic and numeric normalization constants for the two extra
    /// levels. The numeric ones govern all wavefunction scaling; the
    /// analytic/numeric ratios equal 1 at omega = 1 to quadrature error.
    pub fn normalization_constants(&self) -> NormalizationConstants {
        self.constants
    }

    /// Maps the Riccati integration constant `lambda > -1` to the
    /// asymmetry `Lambda`, using the limits of
    /// `Delta(x) = (phi1 - phi2)/(phi1 + phi2)` for the oscillator pair.
    pub fn lambda_to_big_lambda(&self, lambda: f64) -> Result<f64> {
        if !(lambda > -1.0) {
            return Err(Error::InvalidParams(format!(
                "lambda = {lambda} must be > -1"
            )));
        }
        let delta = |xi: f64| -> Result<f64> {
            let z = SQRT_2 * xi;
            let p1 = pcf_d(self.params.nu, z)?;
            let p2 = pcf_d(self.params.nu, -z)?;
            Ok((p1 - p2) / (p1 + p2))
        };
        let dp = delta(6.0)?; // -> -1
        let dm = delta(-6.0)?; // -> +1
        Ok((dp - lambda - (lambda + 1.0) * dm) / (dp + lambda - (lambda + 1.0) * dm))
    }

    /// Locates the three minima and two barrier tops of the potential on
    /// `[-scan_range, scan_range]` by slope sign changes refined with
    /// bisection on the analytic `U'` to 1e-8 in xi.
    pub fn well_partition(&self, scan_range: f64, scan_points: usize) -> Result<WellPartition> {
        if scan_points < 1000 {
            return Err(Error::InvalidParams(format!(
                "scan_points = {scan_points}, need >= 1000"
            )));
        }
        if !(scan_range > 0.0) {
            return Err(Error::InvalidParams("scan_range must be > 0".into()));
        }
        let g = GridSpec::new(-scan_range, scan_range, scan_points)?;
        let slopes: Vec<f64> = {
            let res: Result<Vec<f64>> = g
                .samples()
                .iter()
                .map(|&x| self.potential_deriv(x))
                .collect();
            res?
        };
        let mut minima = Vec::new();
        let mut maxima = Vec::new();
        // extrema sitting exactly on a sample (symmetric models put one at
        // xi = 0) produce a zero slope rather than a sign change
        for i in 1..scan_points - 1 {
            if slopes[i] == 0.0 && slopes[i - 1] != 0.0 && slopes[i + 1] != 0.0 {
                if slopes[i - 1] < 0.0 && slopes[i + 1] > 0.0 {
                    minima.push(g.at(i));
                } else if slopes[i - 1] > 0.0 && slopes[i + 1] < 0.0 {
                    maxima.push(g.at(i));
                }
            }
        }
        for i in 0..scan_points - 1 {
            let (s0, s1) = (slopes[i], slopes[i + 1]);
            if s0 == 0.0 || s1 == 0.0 || s0 * s1 > 0.0 {
                continue;
            }
            let (mut lo, mut hi) = (g.at(i), g.at(i + 1));
            let mut f_lo = s0;
            while hi - lo > 1e-8 {
                let mid = 0.5 * (lo + hi);
                let fm = self.potential_deriv(mid)?;
                if f_lo * fm <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    f_lo = fm;
                }
            }
            let root = 0.5 * (lo + hi);
            if s0 < 0.0 {
                minima.push(root); // slope - -> +  : minimum
            } else {
                maxima.push(root);
            }
        }
        minima.sort_by(f64::total_cmp);
        maxima.sort_by(f64::total_cmp);
        if minima.len() != 3 || maxima.len() != 2 {
            return Err(Error::Shape(format!(
                "expected 3 minima and 2 barriers on [-{scan_range}, {scan_range}], \
                 found {} and {}; parameters outside the triple-well regime",
                minima.len(),
                maxima.len()
            )));
        }
        let p = WellPartition {
            minima: [minima[0], minima[1], minima[2]],
            barriers: [maxima[0], maxima[1]],
        };
        if !(p.minima[0] < p.barriers[0]
            && p.barriers[0] < p.minima[1]
            && p.minima[1] < p.barriers[1]
            && p.barriers[1] < p.minima[2])
        {
            return Err(Error::Shape("extrema not interleaved".into()));
        }
        Ok(p)
    }

    /// Potential sampled on a grid (parallel over points).
    pub fn potential_grid(&self, xis: &[f64]) -> Result<Vec<f64>> {
        let res = parallel::map_indexed(xis.len(), |i| self.potential(xis[i]));
        res.into_iter().collect()
    }

    /// Sequential twin of [`potential_grid`](Self::potential_grid).
    pub fn potential_grid_seq(&self, xis: &[f64]) -> Result<Vec<f64>> {
        let res = parallel::map_indexed_seq(xis.len(), |i| self.potential(xis[i]));
        res.into_iter().collect()
    }

    /// All normalized eigenfunction values for states `0..=n_max` on a
    /// grid; `values[state][point]`. Parallel over grid points.
    pub fn state_table(&self, n_max: usize, xis: &[f64]) -> Result<StateTable> {
        if n_max > MAX_STATE_INDEX {
            return Err(Error::Range(format!(
                "n_max = {n_max} exceeds supported {MAX_STATE_INDEX}"
            )));
        }
        let cols = parallel::map_indexed(xis.len(), |i| -> Result<Vec<f64>> {
            let b = self.basis_at(xis[i])?;
            self.wavefunctions_at(n_max, &b)
        });
        let cols: Vec<Vec<f64>> = cols.into_iter().collect::<Result<_>>()?;
        let mut values = vec![vec![0.0; xis.len()]; n_max + 1];
        for (i, col) in cols.iter().enumerate() {
            for (s, &v) in col.iter().enumerate() {
                values[s][i] = v;
            }
        }
        let energies = (0..=n_max).map(|i| self.eigenvalue(i)).collect();
        Ok(StateTable { energies, values })
    }

    /// Builds the numeric normalization / sign table for all supported
    /// states and the analytic constants.
    fn build_norm_table(&mut self) -> Result<()> {
        let p = self.params;
        let (nodes, weights) = quad::composite_nodes(-NORM_XI_MAX, NORM_XI_MAX, NORM_PANEL);
        let basis: Vec<BasisPoint> = {
            let res = parallel::map_indexed(nodes.len(), |i| self.basis_at(nodes[i]));
            res.into_iter().collect::<Result<_>>()?
        };
        // raw values, state-major
        let n_states = MAX_STATE_INDEX + 1;
        let mut raw = vec![vec![0.0; nodes.len()]; n_states];
        for (j, b) in basis.iter().enumerate() {
            raw[0][j] = b.phi / b.w;
            raw[1][j] = b.phis / b.w;
            let states = hermite_psi_upto(MAX_STATE_INDEX - 2, b.xi)?;
            for (n, &(psi, dpsi)) in states.iter().enumerate() {
                raw[n + 2][j] = self.descendant_from_parts(n, psi, dpsi, b).0;
            }
        }
        self.norms = raw
            .iter()
            .map(|vals| {
                let sq: f64 = vals
                    .iter()
                    .zip(&weights)
                    .map(|(v, w)| w * v * v)
                    .sum();
                let inv_norm = 1.0 / sq.sqrt();
                // leftmost significant lobe positive
                let peak = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                let first = vals
                    .iter()
                    .find(|v| v.abs() > 1e-3 * peak)
                    .copied()
                    .unwrap_or(1.0);
                StateNorm {
                    inv_norm,
                    sign: if first < 0.0 { -1.0 } else { 1.0 },
                }
            })
            .collect();

        let sqrt_pi_om = (std::f64::consts::PI * p.omega).sqrt();
        let analytic_ground = (4.0 * p.lambda1 * (p.nu - p.mu) * sqrt_pi_om
            / gamma(-p.mu)?)
        .sqrt();
        let analytic_first =
            (4.0 * p.lambda * (p.nu - p.mu) * sqrt_pi_om / gamma(-p.nu)?).sqrt();
        self.constants = NormalizationConstants {
            analytic_ground,
            analytic_first,
            numeric_ground: self.norms[0].inv_norm,
            numeric_first: self.norms[1].inv_norm,
        };
        Ok(())
    }
}

/// Eigenfunction values over a grid, state-major.
#[derive(Debug, Clone)]
pub struct StateTable {
    pub energies: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::trapezoid;

    fn fig2a() -> Model {
        Model::new(ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -1.0,
            lambda: 1.0,
            lambda1: 1.0,
        })
        .unwrap()
    }

    fn table2() -> Model {
        Model::new(ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -0.03,
            lambda: 0.05,
            lambda1: 1.0,
        })
        .unwrap()
    }

    #[test]
    fn params_validation_names_field() {
        let bad = ModelParams {
            omega: 1.0,
            nu: 0.3,
            mu: -1.0,
            lambda: 1.0,
            lambda1: 1.0,
        };
        let err = Model::new(bad).unwrap_err();
        assert!(err.to_string().contains("nu"), "{err}");
        let bad = ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -0.02,
            lambda: 1.0,
            lambda1: 1.0,
        };
        assert!(Model::new(bad).is_err());
        let bad = ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -1.0,
            lambda: -1.0,
            lambda1: 1.0,
        };
        assert!(Model::new(bad).unwrap_err().to_string().contains("lambda"));
        // near-degenerate guard
        let bad = ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -0.0200000001,
            lambda: 1.0,
            lambda1: 1.0,
        };
        assert!(Model::new(bad).is_err());
    }

    #[test]
    fn valid_paper_parameter_sets() {
        fig2a();
        table2();
        Model::new(ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -2.0,
            lambda: 1.0,
            lambda1: 1.0,
        })
        .unwrap();
    }

    #[test]
    fn phi_big_symmetric_and_nodeless() {
        let m = fig2a();
        for xi in [0.5, 1.7] {
            let (a, _) = m.phi_big(xi).unwrap();
            let (b, _) = m.phi_big(-xi).unwrap();
            assert!((a - b).abs() < 1e-12 * a.abs());
        }
        // frozen: 2 D_{-0.02}(0)
        let (v, _) = m.phi_big(0.0).unwrap();
        assert!((v - 2.025075196107381108815).abs() < 1e-12);
        let g = GridSpec::new(-8.0, 8.0, 1601).unwrap();
        for x in g.samples() {
            assert!(m.phi_big(x).unwrap().0 > 0.0, "phi({x}) <= 0");
        }
    }

    #[test]
    fn phi_small_odd_with_single_node() {
        let m = fig2a();
        let (v0, _) = m.phi_small(0.0).unwrap();
        assert!(v0.abs() < 1e-13);
        let (a, _) = m.phi_small(1.0).unwrap();
        let (b, _) = m.phi_small(-1.0).unwrap();
        assert!((a + b).abs() < 1e-12 * a.abs());
        // frozen: D_{-1}(sqrt2) - D_{-1}(-sqrt2)
        assert!((a - (-3.482655989167173682265)).abs() < 1e-12);
        // exactly one sign change on [-8, 8] (the exact zero at the grid
        // midpoint is skipped, not double counted)
        let g = GridSpec::new(-8.0, 8.0, 1601).unwrap();
        let signs: Vec<f64> = g
            .samples()
            .iter()
            .map(|&x| m.phi_small(x).unwrap().0)
            .filter(|v| v.abs() > 1e-14)
            .map(f64::signum)
            .collect();
        let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
        assert_eq!(changes, 1);
    }

    #[test]
    fn chi_pair_positive_with_stated_asymptotics() {
        let m = fig2a();
        let g = GridSpec::new(-8.0, 8.0, 801).unwrap();
        for x in g.samples() {
            let (c1, c2) = m.chi_pair(x).unwrap();
            assert!(c1 > 0.0 && c2 > 0.0, "chi at {x}: {c1}, {c2}");
        }
        let (a1, a2) = m.chi_pair(5.0).unwrap();
        let (b1, b2) = m.chi_pair(6.0).unwrap();
        assert!(b1 < a1, "chi1 must fall toward +inf");
        assert!(b2 > a2, "chi2 must grow toward +inf");
    }

    #[test]
    fn chi_wronskian_identity() {
        // W(chi1, chi2) = 2 (eps - eps1) W(phi1(mu), phi2(mu)), checked by
        // Richardson finite differences of chi (test-side oracle)
        let m = fig2a();
        let p = m.params();
        let want = 2.0 * (m.eps() - m.eps1()) * 2.0 * std::f64::consts::PI.sqrt()
            / gamma(-p.mu).unwrap();
        for xi in [-2.0, 0.0, 2.0] {
            let h = 1e-5;
            let d = |f: &dyn Fn(f64) -> f64, x: f64| {
                (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
            };
            let c1 = |x: f64| m.chi_pair(x).unwrap().0;
            let c2 = |x: f64| m.chi_pair(x).unwrap().1;
            let w = c1(xi) * d(&c2, xi) - d(&c1, xi) * c2(xi);
            assert!(
                (w - want).abs() < 1e-6 * want.abs(),
                "xi={xi}: {w} vs {want}"
            );
        }
    }

    #[test]
    fn wronskian_log_derivative_matches_finite_difference() {
        let m = table2();
        for xi in [-3.0, -0.4, 1.2, 4.0] {
            let (_, dlog, _) = m.wronskian_core(xi).unwrap();
            let h = 1e-5;
            let lw = |x: f64| m.wronskian_core(x).unwrap().0.abs().ln();
            let fd =
                (lw(xi - 2.0 * h) - 8.0 * lw(xi - h) + 8.0 * lw(xi + h) - lw(xi + 2.0 * h))
                    / (12.0 * h);
            assert!((dlog - fd).abs() < 1e-7 * (1.0 + dlog.abs()), "xi = {xi}");
        }
    }

    #[test]
    fn wronskian_sign_constant_and_even_when_symmetric() {
        let m = fig2a();
        let g = GridSpec::new(-8.0, 8.0, 801).unwrap();
        let signs: Vec<f64> = g
            .samples()
            .iter()
            .map(|&x| m.wronskian_core(x).unwrap().0.signum())
            .collect();
        assert!(signs.windows(2).all(|w| w[0] == w[1]));
        for xi in [0.7, 2.4, 5.0] {
            let (a, _, _) = m.wronskian_core(xi).unwrap();
            let (b, _, _) = m.wronskian_core(-xi).unwrap();
            assert!((a - b).abs() < 1e-11 * a.abs());
        }
    }

    #[test]
    fn potential_shapes() {
        let m = fig2a();
        // symmetric case: U(xi) = U(-xi)
        for xi in [0.3, 1.9, 4.4] {
            let a = m.potential(xi).unwrap();
            let b = m.potential(-xi).unwrap();
            assert!((a - b).abs() < 1e-10 * (1.0 + a.abs()));
        }
        // triple-well count
        let w = m.well_partition(8.0, 4001).unwrap();
        assert!(w.minima[0] < w.barriers[0] && w.barriers[0] < w.minima[1]);
        assert!(w.minima[1].abs() < 1e-6);
        assert!((w.minima[0] + w.minima[2]).abs() < 1e-6);
        // oscillator tail: U/(xi^2/2) -> 1
        let r = m.potential(8.0).unwrap() / (0.5 * 64.0);
        assert!((r - 1.0).abs() < 0.1, "{r}");
    }

    #[test]
    fn well_partition_shape_error_when_wells_escape_the_scan() {
        // side minima of the Fig 2a model sit near +-2.85; a scan window
        // that cannot contain them must surface the shape error
        let m = fig2a();
        match m.well_partition(2.0, 2001) {
            Err(Error::Shape(_)) => {}
            other => panic!("expected shape error, got {other:?}"),
        }
        assert!(matches!(
            m.well_partition(8.0, 100),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn eigenvalues_fig2a() {
        let m = fig2a();
        assert_eq!(m.eigenvalue(0), -0.5);
        assert!((m.eigenvalue(1) - 0.48).abs() < 1e-15);
        assert_eq!(m.eigenvalue(2), 0.5);
        assert_eq!(m.eigenvalue(7), 5.5);
        assert_eq!(m.eigen_state(0).kind, StateKind::ExtraGround);
        assert_eq!(m.eigen_state(1).kind, StateKind::ExtraFirst);
        assert_eq!(m.eigen_state(4).kind, StateKind::OscillatorDescendant);
    }

    #[test]
    fn wavefunctions_normalized_and_orthogonal() {
        let m = fig2a();
        let g = GridSpec::new(-10.0, 10.0, 2001).unwrap();
        let xs = g.samples();
        let t = m.state_table(6, &xs).unwrap();
        for i in 0..=6 {
            for j in i..=6 {
                let prod: Vec<f64> = t.values[i]
                    .iter()
                    .zip(&t.values[j])
                    .map(|(a, b)| a * b)
                    .collect();
                let want = if i == j { 1.0 } else { 0.0 };
                let got = trapezoid(&prod, g.h());
                assert!(
                    (got - want).abs() < 1e-7,
                    "<{i}|{j}> = {got}"
                );
            }
        }
    }

    #[test]
    fn first_excited_vanishes_at_origin_when_symmetric() {
        let m = fig2a();
        let (v, _) = m.wavefunction(1, 0.0).unwrap();
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn node_counts_follow_index() {
        let m = table2();
        let g = GridSpec::new(-8.0, 8.0, 3201).unwrap();
        let xs = g.samples();
        let t = m.state_table(5, &xs).unwrap();
        for (idx, vals) in t.values.iter().enumerate() {
            let peak = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let sig: Vec<f64> = vals
                .iter()
                .map(|v| if v.abs() > 1e-6 * peak { *v } else { 0.0 })
                .collect();
            let mut nodes = 0;
            let mut last = 0.0;
            for v in sig {
                if v == 0.0 {
                    continue;
                }
                if last != 0.0 && v * last < 0.0 {
                    nodes += 1;
                }
                last = v;
            }
            assert_eq!(nodes, idx, "state {idx}");
        }
    }

    #[test]
    fn normalization_ratio_unity_at_omega_one() {
        for m in [fig2a(), table2()] {
            let c = m.normalization_constants();
            assert!((c.ratio_ground() - 1.0).abs() < 1e-6, "{}", c.ratio_ground());
            assert!((c.ratio_first() - 1.0).abs() < 1e-6, "{}", c.ratio_first());
        }
    }

    #[test]
    fn analytic_constant_scales_with_lambda() {
        // doubling Lambda doubles N_Lambda^{-2}
        let a = table2().normalization_constants().analytic_first;
        let m2 = Model::new(ModelParams {
            lambda: 0.10,
            ..*table2().params()
        })
        .unwrap();
        let b = m2.normalization_constants().analytic_first;
        assert!((b * b / (a * a) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn lambda_map_is_shift_by_one() {
        let m = fig2a();
        assert!((m.lambda_to_big_lambda(0.0).unwrap() - 1.0).abs() < 1e-10);
        assert!((m.lambda_to_big_lambda(1.0).unwrap() - 2.0).abs() < 1e-10);
        assert!((m.lambda_to_big_lambda(-0.999).unwrap() - 0.001).abs() < 1e-9);
        assert!(m.lambda_to_big_lambda(-1.0).is_err());
    }

    #[test]
    fn parity_of_all_states_in_symmetric_model() {
        let m = fig2a();
        let g = GridSpec::new(-6.0, 6.0, 501).unwrap();
        let xs = g.samples();
        let t = m.state_table(8, &xs).unwrap();
        for (idx, vals) in t.values.iter().enumerate() {
            let sign = if idx % 2 == 0 { 1.0 } else { -1.0 };
            for (i, &v) in vals.iter().enumerate() {
                let mirror = vals[xs.len() - 1 - i];
                assert!(
                    (v - sign * mirror).abs() <= 1e-8,
                    "state {idx} at {}: {v} vs {mirror}",
                    xs[i]
                );
            }
        }
    }

    #[test]
    fn potential_grid_par_seq_agree() {
        let m = table2();
        let xs: Vec<f64> = GridSpec::new(-6.0, 6.0, 301).unwrap().samples();
        let a = m.potential_grid(&xs).unwrap();
        let b = m.potential_grid_seq(&xs).unwrap();
        assert_eq!(a, b);
    }
}
