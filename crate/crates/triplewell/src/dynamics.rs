//! Wave-packet preparation, eigenbasis expansion, time evolution via the
//! exact kernel or the spectral sum, well occupations and transport
//! diagnostics.
//!
//! The propagator path uses the reordered scheme: the kernel's
//! xi0-dependence factors into `phi_small(xi0)/W`, `phi(xi0)/W` prefactors
//! and theta cutoffs, so the double integral collapses to cumulative
//! integrals over the packet grid followed by one zeta-quadrature per
//! output point. Cost O(points * nodes) instead of
//! O(points^2 * quadrature); identical by Fubini (the integrands decay
//! like Gaussians). The two cumulatives are accumulated from opposite
//! ends: a tail value formed as `total - cumulative` would carry an
//! absolute rounding floor of ~1e-16 * total, which the dominant
//! D(-sqrt2 zeta) ~ e^(+zeta^2/2) then amplifies into O(1) garbage.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{cumulative, cumulative_backward, trapezoid, trapezoid_c, GridSpec};
use crate::model::{Model, WellPartition};
use crate::parallel;
use crate::propagator::{TimePoint, ZETA_MAX};
use crate::quad;
use crate::special::pcf_d;

/// Which well a packet targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Well {
    Left,
    Center,
    Right,
}

/// An initial Gaussian packet: center position and squeeze parameter R
/// (variance `e^(-2R)/2` in xi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketSpec {
    pub center: f64,
    pub squeeze: f64,
}

impl PacketSpec {
    pub fn new(center: f64, squeeze: f64) -> Self {
        Self { center, squeeze }
    }

    /// Packet centered on one of the partition's minima.
    pub fn at_well(partition: &WellPartition, well: Well, squeeze: f64) -> Self {
        let center = match well {
            Well::Left => partition.minima[0],
            Well::Center => partition.minima[1],
            Well::Right => partition.minima[2],
        };
        Self { center, squeeze }
    }
}

/// Complex field sampled on a uniform grid at one time.
#[derive(Debug, Clone)]
pub struct PacketState {
    pub grid: GridSpec,
    pub amps: Vec<Complex64>,
    pub time: f64,
}

impl PacketState {
    /// Trapezoidal L2 norm.
    pub fn norm(&self) -> f64 {
        let d: Vec<f64> = self.amps.iter().map(|a| a.norm_sqr()).collect();
        trapezoid(&d, self.grid.h()).sqrt()
    }

    /// Pointwise complex conjugate (time-reversal partner).
    pub fn conjugate(&self) -> PacketState {
        PacketState {
            grid: self.grid,
            amps: self.amps.iter().map(|a| a.conj()).collect(),
            time: 0.0,
        }
    }
}

/// Real expansion coefficients over the eigenbasis, index-aligned with
/// the model's state indices.
#[derive(Debug, Clone)]
pub struct ExpansionCoefficients {
    pub c: Vec<f64>,
    pub n_max: usize,
}

impl ExpansionCoefficients {
    pub fn sum_sq(&self) -> f64 {
        self.c.iter().map(|c| c * c).sum()
    }
}

/// `Phi(xi, 0) = (e^(2R)/pi)^(1/4) exp(-(xi - center)^2 e^(2R) / 2)`.
///
/// The grid must cover `center +- 8 e^(-R)` (about eleven standard
/// deviations; truncated mass below 1e-27).
pub fn initial_packet(spec: &PacketSpec, grid: &GridSpec) -> Result<PacketState> {
    let reach = 8.0 * (-spec.squeeze).exp();
    if grid.xi_min > spec.center - reach || grid.xi_max < spec.center + reach {
        return Err(Error::Grid(format!(
            "grid [{}, {}] does not cover the packet support [{}, {}]",
            grid.xi_min,
            grid.xi_max,
            spec.center - reach,
            spec.center + reach
        )));
    }
    let e2r = (2.0 * spec.squeeze).exp();
    let amp = (e2r / PI).powf(0.25);
    let amps = grid
        .samples()
        .iter()
        .map(|&x| {
            let d = x - spec.center;
            Complex64::new(amp * (-0.5 * d * d * e2r).exp(), 0.0)
        })
        .collect();
    Ok(PacketState {
        grid: *grid,
        amps,
        time: 0.0,
    })
}

/// Projects a time-zero packet onto states `0..=n_max` by trapezoidal
/// quadrature on the packet grid.
pub fn expand(model: &Model, packet: &PacketState, n_max: usize) -> Result<ExpansionCoefficients> {
    if packet.time != 0.0 {
        return Err(Error::InvalidParams(
            "expand requires a packet at time 0".into(),
        ));
    }
    let xs = packet.grid.samples();
    let table = model.state_table(n_max, &xs)?;
    let h = packet.grid.h();
    let c: Vec<f64> = (0..=n_max)
        .map(|n| {
            let prod: Vec<f64> = table.values[n]
                .iter()
                .zip(&packet.amps)
                .map(|(v, a)| v * a.re)
                .collect();
            trapezoid(&prod, h)
        })
        .collect();
    Ok(ExpansionCoefficients { c, n_max })
}

/// `sum_n c_n Psi_n(xi) e^(-i E_n T)` on the grid; defined for all T
/// including caustics.
pub fn evolve_spectral(
    model: &Model,
    coeffs: &ExpansionCoefficients,
    t: f64,
    grid: &GridSpec,
) -> Result<PacketState> {
    let xs = grid.samples();
    let table = model.state_table(coeffs.n_max, &xs)?;
    Ok(evolve_from_table(coeffs, &table.energies, &table.values, grid, t, false))
}

/// Sequential twin of [`evolve_spectral`].
pub fn evolve_spectral_seq(
    model: &Model,
    coeffs: &ExpansionCoefficients,
    t: f64,
    grid: &GridSpec,
) -> Result<PacketState> {
    let xs = grid.samples();
    let table = model.state_table(coeffs.n_max, &xs)?;
    Ok(evolve_from_table(coeffs, &table.energies, &table.values, grid, t, true))
}

fn evolve_from_table(
    coeffs: &ExpansionCoefficients,
    energies: &[f64],
    values: &[Vec<f64>],
    grid: &GridSpec,
    t: f64,
    sequential: bool,
) -> PacketState {
    let phases: Vec<Complex64> = energies
        .iter()
        .map(|&e| Complex64::from_polar(1.0, -e * t))
        .collect();
    let point = |i: usize| -> Complex64 {
        let mut acc = Complex64::default();
        for (n, &c) in coeffs.c.iter().enumerate() {
            acc += c * values[n][i] * phases[n];
        }
        acc
    };
    let amps = if sequential {
        parallel::map_indexed_seq(grid.points, point)
    } else {
        parallel::map_indexed(grid.points, point)
    };
    PacketState {
        grid: *grid,
        amps,
        time: t,
    }
}

/// Evolves a time-zero packet with the exact triple-well kernel.
pub fn evolve_propagator(model: &Model, packet: &PacketState, at: &TimePoint) -> Result<PacketState> {
    evolve_propagator_impl(model, packet, at, false)
}

/// Sequential twin of [`evolve_propagator`].
pub fn evolve_propagator_seq(
    model: &Model,
    packet: &PacketState,
    at: &TimePoint,
) -> Result<PacketState> {
    evolve_propagator_impl(model, packet, at, true)
}

fn evolve_propagator_impl(
    model: &Model,
    packet: &PacketState,
    at: &TimePoint,
    sequential: bool,
) -> Result<PacketState> {
    if packet.time != 0.0 {
        return Err(Error::InvalidParams(
            "evolve_propagator requires a packet at time 0".into(),
        ));
    }
    let grid = packet.grid;
    let xs = grid.samples();
    let h = grid.h();
    let n = grid.points;
    let p = *model.params();

    // solution-chain arrays over the packet grid
    let basis: Vec<crate::model::BasisPoint> = {
        let r = parallel::map_indexed(n, |i| model.basis_at(xs[i]));
        r.into_iter().collect::<Result<Vec<_>>>()?
    };
    let u1: Vec<f64> = basis.iter().map(|b| b.phis / b.w).collect();
    let u0: Vec<f64> = basis.iter().map(|b| b.phi / b.w).collect();

    // bound-state projections (normalized states)
    let nc = model.normalization_constants();
    let psi0: Vec<f64> = u0.iter().map(|v| v * nc.numeric_ground).collect();
    let psi1: Vec<f64> = u1.iter().map(|v| v * nc.numeric_first).collect();
    let c0 = project(&psi0, &packet.amps, h);
    let c1 = project(&psi1, &packet.amps, h);

    // cumulative prefactor integrals, forward for P^- and backward for P^+
    let f1: Vec<Complex64> = u1.iter().zip(&packet.amps).map(|(u, a)| u * a).collect();
    let f0: Vec<Complex64> = u0.iter().zip(&packet.amps).map(|(u, a)| u * a).collect();
    let c1f = cumulative(&f1, h);
    let c1b = cumulative_backward(&f1, h);
    let c0f = cumulative(&f0, h);
    let c0b = cumulative_backward(&f0, h);

    // shared quadrature nodes over [-ZETA_MAX, ZETA_MAX]
    let width = (0.5 * at.sin_tau()).min(0.5);
    let (nodes, weights) = quad::composite_nodes(-ZETA_MAX, ZETA_MAX, width);
    let sin_t = at.sin_t();
    let cos_t = at.cos_t();

    // g(zeta) = Lambda D_nu(-sz) P1+ - D_nu(sz) P1- + Lambda1 D_mu(-sz) P0+ + D_mu(sz) P0-
    let node_fac: Vec<Complex64> = {
        let r = parallel::map_indexed(nodes.len(), |q| -> Result<Complex64> {
            let zeta = nodes[q];
            let z = SQRT_2 * zeta;
            let (p1m, p1p) = interp_pair(&grid, &xs, &f1, &c1f, &c1b, zeta);
            let (p0m, p0p) = interp_pair(&grid, &xs, &f0, &c0f, &c0b, zeta);
            let g = p.lambda * pcf_d(p.nu, -z)? * p1p - pcf_d(p.nu, z)? * p1m
                + p.lambda1 * pcf_d(p.mu, -z)? * p0p
                + pcf_d(p.mu, z)? * p0m;
            let chirp = Complex64::from_polar(1.0, zeta * zeta * cos_t / (2.0 * sin_t));
            Ok(weights[q] * g * chirp)
        });
        r.into_iter().collect::<Result<Vec<_>>>()?
    };

    let pref = at.prefactor();
    let eps = model.eps();
    let eps1 = model.eps1();
    let ph1 = Complex64::from_polar(1.0, -eps * at.t());
    let ph0 = Complex64::from_polar(1.0, -eps1 * at.t());

    let point = |i: usize| -> Complex64 {
        let xi = xs[i];
        let own_phase = Complex64::from_polar(1.0, xi * xi * cos_t / (2.0 * sin_t));
        let mut i0 = Complex64::default();
        let mut i1 = Complex64::default();
        let mut i2 = Complex64::default();
        for (q, nf) in node_fac.iter().enumerate() {
            let zeta = nodes[q];
            let k = *nf * Complex64::from_polar(1.0, -xi * zeta / sin_t);
            let qq = (xi * cos_t - zeta) / sin_t;
            i0 += k;
            i1 += k * Complex64::new(0.0, qq);
            i2 += k * Complex64::new(-qq * qq, cos_t / sin_t);
        }
        let scale = pref * own_phase;
        i0 *= scale;
        i1 *= scale;
        i2 *= scale;
        let b = &basis[i];
        let dlog_w = b.dlog_w();
        let dlog_phi = b.dlog_phi();
        let ll = i2 - dlog_w * i1 - (xi * xi - 2.0 * eps - dlog_phi * dlog_w) * i0;
        -ll + c1 * ph1 * psi1[i] + c0 * ph0 * psi0[i]
    };
    let amps = if sequential {
        parallel::map_indexed_seq(n, point)
    } else {
        parallel::map_indexed(n, point)
    };

    let out = PacketState {
        grid,
        amps,
        time: at.t(),
    };
    let drift = (out.norm() - packet.norm()).abs();
    if drift > 1e-4 {
        return Err(Error::Convergence(format!(
            "propagator evolution lost norm: drift {drift:.3e} at T = {}",
            at.t()
        )));
    }
    Ok(out)
}

fn project(state: &[f64], amps: &[Complex64], h: f64) -> Complex64 {
    let prod: Vec<Complex64> = state.iter().zip(amps).map(|(s, a)| s * a).collect();
    trapezoid_c(&prod, h)
}

/// `P^-(zeta) = int_(-inf)^zeta f`, `P^+(zeta) = int_zeta^inf f` from the
/// two cumulatives plus a local quadratic increment through the three
/// nearest samples.
fn interp_pair(
    grid: &GridSpec,
    xs: &[f64],
    f: &[Complex64],
    cf: &[Complex64],
    cb: &[Complex64],
    zeta: f64,
) -> (Complex64, Complex64) {
    let n = xs.len();
    if zeta <= grid.xi_min {
        return (Complex64::default(), cb[0]);
    }
    if zeta >= grid.xi_max {
        return (cf[n - 1], Complex64::default());
    }
    let h = grid.h();
    let i = grid.cell_of(zeta).clamp(1, n - 2);
    let t = zeta - xs[i];
    let (fm, f0, fp) = (f[i - 1], f[i], f[i + 1]);
    let a1 = (fp - fm) / (2.0 * h);
    let a2 = (fp - 2.0 * f0 + fm) / (2.0 * h * h);
    let inc = f0 * t + a1 * (t * t / 2.0) + a2 * (t * t * t / 3.0);
    (cf[i] + inc, cb[i] - inc)
}

/// Probability in the left / central / right well, split at the barrier
/// positions, with linear density interpolation in the fractional cells.
pub fn well_probabilities(packet: &PacketState, partition: &WellPartition) -> (f64, f64, f64) {
    let dens: Vec<f64> = packet.amps.iter().map(|a| a.norm_sqr()).collect();
    let g = &packet.grid;
    let h = g.h();
    // cumulative trapezoid of the density
    let mut cum = vec![0.0; dens.len()];
    for i in 1..dens.len() {
        cum[i] = cum[i - 1] + 0.5 * h * (dens[i - 1] + dens[i]);
    }
    let total = cum[dens.len() - 1];
    let at = |x: f64| -> f64 {
        if x <= g.xi_min {
            return 0.0;
        }
        if x >= g.xi_max {
            return total;
        }
        let i = g.cell_of(x);
        let t = (x - g.at(i)) / h;
        let d = dens[i] * (1.0 - t) + dens[i + 1] * t;
        cum[i] + 0.5 * (dens[i] + d) * (x - g.at(i))
    };
    let b0 = at(partition.barriers[0]);
    let b1 = at(partition.barriers[1]);
    (b0, b1 - b0, total - b1)
}

/// One row of a transport scan.
#[derive(Debug, Clone, Copy)]
pub struct TransportSample {
    pub t: f64,
    pub pl: f64,
    pub pc: f64,
    pub pr: f64,
    /// `|<Phi(0)|Phi(T)>|^2`.
    pub autocorr: f64,
}

/// Result of a transport/revival scan.
#[derive(Debug, Clone)]
pub struct TransportSeries {
    pub samples: Vec<TransportSample>,
    /// Parabolic-refined argmax of the autocorrelation past `horizon/10`,
    /// as `(T, value)`.
    pub revival: Option<(f64, f64)>,
}

/// Scans spectral-path observables over `T in [0, horizon]` with the given
/// step; times within 1e-2 of a caustic are shifted forward by 1e-2 so the
/// same times remain usable for propagator spot checks.
pub fn transport_diagnostics(
    model: &Model,
    packet: &PacketState,
    horizon: f64,
    step: f64,
) -> Result<TransportSeries> {
    if !(step > 0.0 && horizon > 0.0) {
        return Err(Error::InvalidParams("horizon and step must be > 0".into()));
    }
    let partition = model.well_partition(8.0, 4001)?;
    let coeffs = expand(model, packet, 40)?;
    let xs = packet.grid.samples();
    let table = model.state_table(coeffs.n_max, &xs)?;
    let count = (horizon / step).floor() as usize + 1;
    let times: Vec<f64> = (0..count)
        .map(|k| {
            let mut t = k as f64 * step;
            let frac = t % PI;
            if frac < 1e-2 || PI - frac < 1e-2 {
                t += 1e-2;
            }
            t
        })
        .collect();
    let samples: Vec<TransportSample> = parallel::map_indexed(times.len(), |k| {
        let t = times[k];
        let state = evolve_from_table(&coeffs, &table.energies, &table.values, &packet.grid, t, true);
        let (pl, pc, pr) = well_probabilities(&state, &partition);
        let overlap: Vec<Complex64> = packet
            .amps
            .iter()
            .zip(&state.amps)
            .map(|(a, b)| a.conj() * b)
            .collect();
        let autocorr = trapezoid_c(&overlap, packet.grid.h()).norm_sqr();
        TransportSample {
            t,
            pl,
            pc,
            pr,
            autocorr,
        }
    });
    let start = samples.iter().position(|s| s.t > horizon / 10.0);
    let revival = start.and_then(|s0| {
        let best = samples[s0..]
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.autocorr.total_cmp(&b.1.autocorr))
            .map(|(i, _)| s0 + i)?;
        if best == 0 || best + 1 >= samples.len() {
            let s = &samples[best];
            return Some((s.t, s.autocorr));
        }
        // parabolic refinement through the three neighbors
        let (ym, y0, yp) = (
            samples[best - 1].autocorr,
            samples[best].autocorr,
            samples[best + 1].autocorr,
        );
        let denom = ym - 2.0 * y0 + yp;
        let dt = if denom.abs() > 1e-300 {
            0.5 * (ym - yp) / denom
        } else {
            0.0
        };
        let t = samples[best].t + dt.clamp(-1.0, 1.0) * step;
        Some((t, y0 - 0.25 * (ym - yp) * dt))
    });
    Ok(TransportSeries { samples, revival })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;

    fn table1_row1() -> Model {
        Model::new(ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -0.03,
            lambda: 1.0,
            lambda1: 1.0,
        })
        .unwrap()
    }

    fn grid() -> GridSpec {
        GridSpec::new(-10.0, 10.0, 2001).unwrap()
    }

    #[test]
    fn initial_packet_normalized_with_stated_moments() {
        let g = grid();
        let spec = PacketSpec::new(-1.2, 0.66);
        let p = initial_packet(&spec, &g).unwrap();
        assert!((p.norm() - 1.0).abs() < 1e-10);
        // peak at the center
        let peak = p
            .amps
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .unwrap()
            .0;
        assert!((g.at(peak) - spec.center).abs() <= g.h());
        // second moment about center = e^(-2R)/2
        let xs = g.samples();
        let m2: Vec<f64> = xs
            .iter()
            .zip(&p.amps)
            .map(|(x, a)| (x - spec.center).powi(2) * a.norm_sqr())
            .collect();
        let want = (-2.0 * 0.66f64).exp() / 2.0;
        assert!((trapezoid(&m2, g.h()) - want).abs() < 1e-10);
    }

    #[test]
    fn initial_packet_coverage_error() {
        let g = GridSpec::new(-2.0, 2.0, 101).unwrap();
        let spec = PacketSpec::new(-1.5, 0.3);
        assert!(matches!(
            initial_packet(&spec, &g),
            Err(Error::Grid(_))
        ));
    }

    #[test]
    fn expand_eigenstate_gives_unit_vector() {
        let m = table1_row1();
        let g = grid();
        let xs = g.samples();
        let table = m.state_table(6, &xs).unwrap();
        let packet = PacketState {
            grid: g,
            amps: table.values[1].iter().map(|v| Complex64::new(*v, 0.0)).collect(),
            time: 0.0,
        };
        let c = expand(&m, &packet, 6).unwrap();
        for (n, &cn) in c.c.iter().enumerate() {
            let want = if n == 1 { 1.0 } else { 0.0 };
            assert!((cn - want).abs() < 1e-8, "c[{n}] = {cn}");
        }
    }

    #[test]
    fn bessel_bound_holds() {
        let m = table1_row1();
        let g = grid();
        let part = m.well_partition(8.0, 4001).unwrap();
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 1.0), &g).unwrap();
        let c = expand(&m, &p, 40).unwrap();
        assert!(c.sum_sq() <= 1.0 + 1e-6);
        assert!(c.sum_sq() > 0.99);
    }

    #[test]
    fn spectral_evolution_at_zero_reproduces_projection() {
        let m = table1_row1();
        let g = grid();
        let part = m.well_partition(8.0, 4001).unwrap();
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 1.0), &g).unwrap();
        let c = expand(&m, &p, 40).unwrap();
        let s = evolve_spectral(&m, &c, 0.0, &g).unwrap();
        // differs from the packet only by the tiny out-of-basis remainder
        let mut sup = 0.0f64;
        for (a, b) in p.amps.iter().zip(&s.amps) {
            sup = sup.max((a - b).norm());
        }
        assert!(sup < 0.02, "{sup}");
        assert!((s.norm() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn oscillator_descendants_are_two_pi_periodic() {
        // integer-spaced levels: dropping the two extra states makes |Phi|
        // 2 pi periodic (the field itself picks up the half-integer global
        // phase e^{-i pi})
        let m = table1_row1();
        let g = GridSpec::new(-8.0, 8.0, 801).unwrap();
        let mut c = ExpansionCoefficients {
            c: vec![0.0; 9],
            n_max: 8,
        };
        c.c[2] = 0.6;
        c.c[3] = -0.5;
        c.c[5] = 0.4;
        let a = evolve_spectral(&m, &c, 0.37, &g).unwrap();
        let b = evolve_spectral(&m, &c, 0.37 + 2.0 * PI, &g).unwrap();
        let sup = a
            .amps
            .iter()
            .zip(&b.amps)
            .map(|(x, y)| (x.norm() - y.norm()).abs())
            .fold(0.0f64, f64::max);
        assert!(sup < 1e-10, "{sup}");
    }

    #[test]
    fn propagator_path_matches_spectral_on_projected_packet() {
        let m = table1_row1();
        let g = grid();
        let part = m.well_partition(8.0, 4001).unwrap();
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 1.0), &g).unwrap();
        let c = expand(&m, &p, 40).unwrap();
        let projected = evolve_spectral(&m, &c, 0.0, &g).unwrap();
        let projected = PacketState {
            time: 0.0,
            ..projected
        };
        let t = 3.3;
        let spec = evolve_spectral(&m, &c, t, &g).unwrap();
        let prop = evolve_propagator(&m, &projected, &TimePoint::new(t).unwrap()).unwrap();
        let sup = spec
            .amps
            .iter()
            .zip(&prop.amps)
            .enumerate()
            .filter(|(i, _)| g.at(*i).abs() <= 6.0)
            .map(|(_, (a, b))| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(sup < 1e-4, "sup = {sup:.3e}");
        assert!((prop.norm() - projected.norm()).abs() < 1e-5);
    }

    #[test]
    fn propagator_short_time_is_near_identity() {
        // |Phi| deviates from the initial profile at O(T^2) for a real
        // packet (the probability current vanishes at T = 0)
        let m = table1_row1();
        let g = grid();
        let part = m.well_partition(8.0, 4001).unwrap();
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 1.0), &g).unwrap();
        let tp = TimePoint::new(0.02).unwrap();
        let out = evolve_propagator(&m, &p, &tp).unwrap();
        let sup = p
            .amps
            .iter()
            .zip(&out.amps)
            .map(|(a, b)| (a.norm() - b.norm()).abs())
            .fold(0.0f64, f64::max);
        assert!(sup <= 2e-2, "{sup}");
    }

    #[test]
    fn propagator_eigenstate_input_is_stationary() {
        let m = table1_row1();
        let g = grid();
        let xs = g.samples();
        let table = m.state_table(1, &xs).unwrap();
        let packet = PacketState {
            grid: g,
            amps: table.values[1].iter().map(|v| Complex64::new(*v, 0.0)).collect(),
            time: 0.0,
        };
        let tp = TimePoint::new(0.9).unwrap();
        let out = evolve_propagator(&m, &packet, &tp).unwrap();
        let sup = out
            .amps
            .iter()
            .zip(&packet.amps)
            .enumerate()
            .filter(|(i, _)| g.at(*i).abs() <= 6.0)
            .map(|(_, (a, b))| (a.norm() - b.norm()).abs())
            .fold(0.0f64, f64::max);
        assert!(sup < 1e-6, "{sup:.2e}");
    }

    #[test]
    fn well_probabilities_sum_and_symmetry() {
        let m = Model::new(ModelParams {
            omega: 1.0,
            nu: -0.02,
            mu: -1.0,
            lambda: 1.0,
            lambda1: 1.0,
        })
        .unwrap();
        let part = m.well_partition(8.0, 4001).unwrap();
        let g = grid();
        // symmetric packet at the central minimum
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Center, 0.66), &g).unwrap();
        let (pl, pc, pr) = well_probabilities(&p, &part);
        assert!((pl - pr).abs() < 1e-8);
        assert!((pl + pc + pr - 1.0).abs() < 1e-5);
        // left packet barely leaks at R = 0.66
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 0.66), &g).unwrap();
        let (pl, pc, pr) = well_probabilities(&p, &part);
        assert!(pl >= 0.99, "{pl}");
        assert!(pc + pr <= 0.01);
    }

    #[test]
    fn transport_scan_runs_and_conserves_probability() {
        let m = table1_row1();
        let g = grid();
        let part = m.well_partition(8.0, 4001).unwrap();
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 1.0), &g).unwrap();
        let series = transport_diagnostics(&m, &p, 20.0, 0.5).unwrap();
        assert!(series.samples.len() >= 40);
        for s in &series.samples {
            assert!((s.pl + s.pc + s.pr - 1.0).abs() < 1e-3, "at T = {}", s.t);
            assert!(s.autocorr <= 1.0 + 1e-6);
        }
        assert!(series.revival.is_some());
    }

    #[test]
    fn time_reversibility_round_trip() {
        let m = table1_row1();
        let g = grid();
        let part = m.well_partition(8.0, 4001).unwrap();
        let p = initial_packet(&PacketSpec::at_well(&part, Well::Left, 1.0), &g).unwrap();
        let c = expand(&m, &p, 40).unwrap();
        let projected = PacketState {
            time: 0.0,
            ..evolve_spectral(&m, &c, 0.0, &g).unwrap()
        };
        let tp = TimePoint::new(0.9).unwrap();
        let fwd = evolve_propagator(&m, &projected, &tp).unwrap();
        let back = evolve_propagator(&m, &fwd.conjugate(), &tp).unwrap();
        let sup = back
            .amps
            .iter()
            .zip(&projected.amps)
            .enumerate()
            .filter(|(i, _)| g.at(*i).abs() <= 6.0)
            .map(|(_, (a, b))| (a.norm() - b.norm()).abs())
            .fold(0.0f64, f64::max);
        assert!(sup <= 1e-4, "{sup:.2e}");
    }
}
