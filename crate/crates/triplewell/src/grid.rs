//! Uniform grids and grid-sampled integration.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A uniform grid on `[xi_min, xi_max]` with `points` samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub xi_min: f64,
    pub xi_max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(xi_min: f64, xi_max: f64, points: usize) -> Result<Self> {
        if !(xi_min.is_finite() && xi_max.is_finite()) {
            return Err(Error::Grid("bounds must be finite".into()));
        }
        if xi_min >= xi_max {
            return Err(Error::Grid(format!(
                "xi_min = {xi_min} must be < xi_max = {xi_max}"
            )));
        }
        if points < 3 {
            return Err(Error::Grid(format!("points = {points}, need >= 3")));
        }
        Ok(Self { xi_min, xi_max, points })
    }

    /// Grid spacing.
    pub fn h(&self) -> f64 {
        (self.xi_max - self.xi_min) / (self.points - 1) as f64
    }

    pub fn at(&self, i: usize) -> f64 {
        self.xi_min + self.h() * i as f64
    }

    pub fn samples(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.at(i)).collect()
    }

    pub fn contains(&self, xi: f64) -> bool {
        xi >= self.xi_min && xi <= self.xi_max
    }

    /// Index of the cell `[x_i, x_{i+1}]` containing `xi`, clamped to the grid.
    pub fn cell_of(&self, xi: f64) -> usize {
        let i = ((xi - self.xi_min) / self.h()).floor() as isize;
        i.clamp(0, self.points as isize - 2) as usize
    }
}

/// Trapezoidal integral of uniformly sampled real values.
pub fn trapezoid(values: &[f64], h: f64) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let inner: f64 = values[1..values.len() - 1].iter().sum();
    h * (0.5 * (values[0] + values[values.len() - 1]) + inner)
}

/// Trapezoidal integral of uniformly sampled complex values.
pub fn trapezoid_c(values: &[Complex64], h: f64) -> Complex64 {
    if values.len() < 2 {
        return Complex64::new(0.0, 0.0);
    }
    let inner: Complex64 = values[1..values.len() - 1].iter().sum();
    h * (0.5 * (values[0] + values[values.len() - 1]) + inner)
}

/// Cumulative integral `c[i] = int_{x_0}^{x_i} f` on a uniform grid.
///
/// Uses the three-point Newton-Cotes increments
/// `int_{x0}^{x1} = h(5 f0 + 8 f1 - f2)/12`,
/// `int_{x1}^{x2} = h(-f0 + 8 f1 + 5 f2)/12`,
/// which are O(h^4) locally, unlike the trapezoid's O(h^3).
pub fn cumulative(values: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = values.len();
    let mut c = vec![Complex64::new(0.0, 0.0); n];
    if n < 3 {
        if n == 2 {
            c[1] = 0.5 * h * (values[0] + values[1]);
        }
        return c;
    }
    let mut i = 0;
    while i + 2 < n {
        c[i + 1] = c[i] + h * (5.0 * values[i] + 8.0 * values[i + 1] - values[i + 2]) / 12.0;
        c[i + 2] = c[i + 1] + h * (-values[i] + 8.0 * values[i + 1] + 5.0 * values[i + 2]) / 12.0;
        i += 2;
    }
    if i + 2 == n {
        // one trailing cell
        c[n - 1] = c[n - 2] + h * (-values[n - 3] + 8.0 * values[n - 2] + 5.0 * values[n - 1]) / 12.0;
    }
    c
}

/// Backward cumulative integral `c[i] = int_{x_i}^{x_end} f`.
///
/// Accumulated from the right so that values in the right tail are sums of
/// locally tiny products rather than differences of near-equal totals; the
/// distinction matters wherever the result is later multiplied by a
/// dominant (exponentially growing) solution.
pub fn cumulative_backward(values: &[Complex64], h: f64) -> Vec<Complex64> {
    let rev: Vec<Complex64> = values.iter().rev().copied().collect();
    let mut c = cumulative(&rev, h);
    c.reverse();
    c
}
