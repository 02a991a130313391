//! Exactly-solvable triple-well quantum models built from the harmonic
//! oscillator by a two-step Darboux chain: potentials, the full eigenbasis,
//! the exact time-evolution kernel, and tunneling dynamics of localized
//! wave packets.
//!
//! Everything is expressed in dimensionless units `xi = sqrt(omega) x`,
//! `T = omega t`, `E-bar = E / omega`. A model is fixed by five parameters
//! (`omega`, `nu`, `mu`, `Lambda`, `Lambda1`); see [`ModelParams`].
//!
//! The crate is organized as
//!
//! * [`special`] — scalar kernels: Gamma, parabolic cylinder `D_nu`,
//!   oscillator eigenfunctions;
//! * [`model`] — one triple-well model: solution chain, potential,
//!   spectrum, normalized eigenfunctions, well geometry;
//! * [`propagator`] — the oscillator kernel `K0`, half-line Green
//!   transforms, intertwining operators and the assembled triple-well
//!   kernel;
//! * [`dynamics`] — wave packets, eigenbasis expansion, propagator- and
//!   spectral-path evolution, well occupations, transport diagnostics;
//! * [`oracle`] — independent verification machinery (slow series,
//!   finite-difference eigensolver, brute-force spectral propagation);
//! * [`verify`] — the runnable check suite backing `triplewell verify`
//!   and the acceptance tests.
//!
//! Grid-batch entry points are data-parallel (rayon) when the default
//! `parallel` feature is enabled; `*_seq` variants always run
//! sequentially and back the benchmark comparisons.

pub mod dynamics;
pub mod error;
pub mod grid;
pub mod model;
pub mod oracle;
pub(crate) mod parallel;
pub mod propagator;
pub mod quad;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use grid::GridSpec;
pub use model::{EigenState, Model, ModelParams, PcfOrder, StateKind, WellPartition};
pub use propagator::TimePoint;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;
