//! Scalar special-function kernels: Gamma, the parabolic cylinder function
//! `D_nu(z)` with its z-derivative, and normalized harmonic-oscillator
//! eigenfunctions. Everything downstream (Wronskians, potentials,
//! wavefunctions, propagator integrands) is assembled from these three.
//!
//! All functions are pure; safe to call concurrently.

mod gamma;
mod hermite;
mod pcf;

pub use gamma::gamma;
pub use hermite::{hermite_psi, hermite_psi_upto, HERMITE_MAX_N};
pub use pcf::{pcf_d, pcf_d_deriv, PCF_MAX_ABS_Z, PCF_MIN_ORDER};
