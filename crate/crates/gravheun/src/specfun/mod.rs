//! From-scratch special functions over complex order and argument.
//!
//! Everything downstream is built on four primitives: a Lanczos gamma,
//! the Kummer confluent hypergeometric series M(a; b; z), the parabolic
//! cylinder function D_nu(z) in its two-Kummer representation, and the
//! noninteger-order Hermite and generalized Laguerre functions derived
//! from them. The [`identities`] module stress-tests the connection
//! formulas that tie these together.

mod gamma;
mod hermite;
mod identities;
mod kummer;
mod laguerre;
mod pcf;

pub use gamma::{gamma, gamma_re, is_nonpositive_integer, recip_gamma, recip_gamma_re};
pub use hermite::hermite_h;
pub use identities::{identity_battery, IdentityReport, IdentityResidual};
pub use kummer::{kummer_m, kummer_m_re};
pub use laguerre::laguerre_l;
pub use pcf::{pcf_d, pcf_d_re, reflection_term};

/// Tolerance and term-cap knobs for the series evaluators.
#[derive(Debug, Clone, Copy)]
pub struct SeriesControl {
    /// Relative tolerance for series tails.
    pub tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self { tol: 1e-13, max_terms: 10_000 }
    }
}

impl SeriesControl {
    pub fn new(tol: f64, max_terms: usize) -> crate::Result<Self> {
        if !(tol > 0.0) || max_terms < 10 {
            return Err(crate::Error::InvalidInput(format!(
                "series control needs tol > 0 and max_terms >= 10, got ({tol}, {max_terms})"
            )));
        }
        Ok(Self { tol, max_terms })
    }
}
