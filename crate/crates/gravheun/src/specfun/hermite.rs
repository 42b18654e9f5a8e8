use std::f64::consts::PI;

use super::gamma::recip_gamma_re;
use super::kummer::kummer_m_re;
use super::SeriesControl;
use crate::error::Result;

/// Hermite function H_nu(x) of arbitrary real order,
///
/// ```text
/// H_nu(x) = 2^nu sqrt(pi) [ M(-nu/2; 1/2; x^2) / Gamma((1-nu)/2)
///                           - 2 x M((1-nu)/2; 3/2; x^2) / Gamma(-nu/2) ]
/// ```
///
/// For integer nu >= 0 one of the gamma reciprocals vanishes and the other
/// series terminates, reproducing the Hermite polynomial exactly.
pub fn hermite_h(nu: f64, x: f64, ctl: SeriesControl) -> Result<f64> {
    let m1 = kummer_m_re(-nu / 2.0, 0.5, x * x, ctl)?;
    let m2 = kummer_m_re((1.0 - nu) / 2.0, 1.5, x * x, ctl)?;
    Ok(2f64.powf(nu)
        * PI.sqrt()
        * (recip_gamma_re((1.0 - nu) / 2.0) * m1 - 2.0 * x * recip_gamma_re(-nu / 2.0) * m2))
}
