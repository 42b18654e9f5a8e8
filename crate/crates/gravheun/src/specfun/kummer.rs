use num_complex::Complex64;

use super::gamma::is_nonpositive_integer;
use super::SeriesControl;
use crate::error::{Error, Result};

/// Kummer confluent hypergeometric function M(a; b; z), entire in z.
///
/// Direct Taylor series for Re z >= 0; for Re z < 0 the Kummer transform
/// M(a; b; z) = e^z M(b-a; b; -z) is applied first so that the summed
/// series has no catastrophic cancellation.
pub fn kummer_m(a: Complex64, b: Complex64, z: Complex64, ctl: SeriesControl) -> Result<Complex64> {
    if !a.is_finite() || !b.is_finite() || !z.is_finite() {
        return Err(Error::InvalidInput(format!("kummer_m of non-finite input ({a}, {b}, {z})")));
    }
    if is_nonpositive_integer(b) {
        return Err(Error::GammaPole { re: b.re });
    }
    if z.re < 0.0 {
        return Ok(z.exp() * kummer_series(b - a, b, -z, ctl)?);
    }
    kummer_series(a, b, z, ctl)
}

/// M(a; b; x) on the real line.
pub fn kummer_m_re(a: f64, b: f64, x: f64, ctl: SeriesControl) -> Result<f64> {
    kummer_m(Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(x, 0.0), ctl)
        .map(|v| v.re)
}

fn kummer_series(a: Complex64, b: Complex64, z: Complex64, ctl: SeriesControl) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0u32;
    for n in 0..ctl.max_terms {
        let nf = n as f64;
        term = term * (a + nf) * z / ((b + nf) * (nf + 1.0));
        sum += term;
        // two consecutive negligible terms, so a single sign-flip zero of
        // (a)_n cannot fake convergence
        if term.norm() <= ctl.tol * sum.norm().max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence { what: "kummer_m", max_terms: ctl.max_terms })
}
