//! Spectra of a spring-coupled two-mass oscillator, with and without a
//! Newtonian attraction between the masses.
//!
//! The library reduces the two-body Hooke chain to a dimensionless
//! one-coordinate problem, solves the unperturbed two-point boundary
//! problem in parabolic cylinder functions, and treats the gravitational
//! perturbation through the biconfluent Heun equation: Frobenius series,
//! boundary determinants, numeric eigenvalue extraction with a shooting
//! cross-check, and a Hermite-function expansion of the solution with its
//! quantized coupling lattice.
//!
//! Organization:
//!
//! - [`reduction`]: physical parameters -> dimensionless problem data
//! - [`specfun`]: gamma, Kummer M, parabolic cylinder D, Hermite and
//!   Laguerre functions of noninteger order, plus an identity battery
//! - [`ho_spectrum`]: the unperturbed boundary determinant and its roots
//! - [`heun`]: biconfluent Heun machinery and the perturbed spectrum
//! - [`hermite_series`]: the four-term Hermite-coefficient recurrence and
//!   the quantized coupling condition
//! - [`cli`]: the `gravheun` command-line front end
//!
//! Every runnable capability also has a worked example under `examples/`.

pub mod cli;
pub mod error;
pub mod hermite_series;
pub mod heun;
pub mod ho_spectrum;
pub mod ode;
pub mod reduction;
pub mod rootfind;
pub mod specfun;

pub use error::{Error, Result};
pub use reduction::{CoordinateMap, EigenRecord, PhysicalSystem, ReducedProblem, SpectrumMethod};
pub use specfun::SeriesControl;
