use num_complex::Complex64;
use rand::distributions::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use super::gamma::gamma_re;
use super::hermite::hermite_h;
use super::kummer::kummer_m_re;
use super::laguerre::laguerre_l;
use super::pcf::{pcf_d, pcf_d_re};
use super::SeriesControl;
use crate::error::Result;

/// Worst-case residual of one identity over the random trial set.
#[derive(Debug, Clone)]
pub struct IdentityResidual {
    pub identity: &'static str,
    pub max_residual: f64,
}

/// Residual report for the whole battery, one entry per identity.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub trials: usize,
    pub entries: Vec<IdentityResidual>,
}

impl IdentityReport {
    pub fn worst(&self) -> f64 {
        self.entries.iter().map(|e| e.max_residual).fold(0.0, f64::max)
    }
}

/// Absolute error below unit scale, relative above it; keeps residuals
/// meaningful both near zeros and near gamma poles.
fn mixed_residual(got: Complex64, expected: Complex64) -> f64 {
    let err = (got - expected).norm();
    let scale = expected.norm();
    if scale < 1.0 {
        err
    } else {
        err / scale
    }
}

fn phase(theta: f64) -> Complex64 {
    Complex64::new(0.0, theta).exp()
}

/// Stress-tests the connection and reflection formulas used by the
/// boundary-determinant reduction on `trials` random draws of a
/// noninteger order nu in (-3, 3) and argument z in (-3, 3).
///
/// The six identities, with rho = -nu - 1:
///
/// 1. rotation connection:
///    D_rho(iz) = Gamma(-nu)/sqrt(2 pi) e^{i pi (nu+1)/2} (D_nu(z) - e^{-i pi nu} D_nu(-z))
/// 2. value-at-zero ratio: D_rho(0)/D_nu(0) = sqrt(2/pi) Gamma(1+rho) cos(pi rho / 2)
/// 3. phase sum: 2 cos(pi rho / 2) - i e^{-i pi (rho+1)/2} = e^{i pi rho / 2}
/// 4. reflection, Laguerre form:
///    D_nu(-z) = D_nu(z) - 2^{(nu+1)/2} z e^{-z^2/4} Gamma((nu+1)/2) sin(pi nu/2) L_{(nu-1)/2}^{1/2}(z^2/2)
/// 5. reflection, Kummer form:
///    D_nu(-z) = D_nu(z) - 2^{(nu+1)/2} nu Gamma(nu/2) sin(pi nu/2)/sqrt(pi) z e^{-z^2/4} M((1-nu)/2; 3/2; z^2/2)
/// 6. Hermite bridge: H_nu(x) = 2^{nu/2} e^{x^2/2} D_nu(sqrt(2) x)
///
/// Failures are reported as residuals, never thrown.
pub fn identity_battery(seed: u64, trials: usize) -> Result<IdentityReport> {
    assert!(trials >= 1, "identity_battery needs at least one trial");
    let ctl = SeriesControl::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = Uniform::new(-3.0f64, 3.0);

    let mut worst = [0.0f64; 6];
    for _ in 0..trials {
        // keep nu a safe distance from the integers where the individual
        // factors run through poles and zeros
        let nu = loop {
            let v = span.sample(&mut rng);
            if (v - v.round()).abs() >= 0.05 {
                break v;
            }
        };
        let z = span.sample(&mut rng);
        let rho = -nu - 1.0;

        let d_nu_z = pcf_d_re(nu, z, ctl)?;
        let d_nu_mz = pcf_d_re(nu, -z, ctl)?;

        // 1. rotation connection
        let lhs = pcf_d(Complex64::new(rho, 0.0), Complex64::new(0.0, z), ctl)?;
        let coef = gamma_re(-nu)? / (2.0 * PI).sqrt();
        let rhs = coef
            * phase(PI * (nu + 1.0) / 2.0)
            * (Complex64::new(d_nu_z, 0.0) - phase(-PI * nu) * d_nu_mz);
        worst[0] = worst[0].max(mixed_residual(lhs, rhs));

        // 2. value-at-zero ratio
        let ratio = pcf_d_re(rho, 0.0, ctl)? / pcf_d_re(nu, 0.0, ctl)?;
        let closed = (2.0 / PI).sqrt() * gamma_re(1.0 + rho)? * (PI * rho / 2.0).cos();
        worst[1] = worst[1].max(mixed_residual(ratio.into(), closed.into()));

        // 3. phase sum
        let lhs3 = 2.0 * (PI * rho / 2.0).cos() - Complex64::i() * phase(-PI * (rho + 1.0) / 2.0);
        worst[2] = worst[2].max(mixed_residual(lhs3, phase(PI * rho / 2.0)));

        // 4. reflection, Laguerre form
        let refl_lag = 2f64.powf((nu + 1.0) / 2.0)
            * z
            * (-z * z / 4.0).exp()
            * gamma_re((nu + 1.0) / 2.0)?
            * (PI * nu / 2.0).sin()
            * laguerre_l((nu - 1.0) / 2.0, 0.5, z * z / 2.0, ctl)?;
        worst[3] = worst[3].max(mixed_residual(d_nu_mz.into(), (d_nu_z - refl_lag).into()));

        // 5. reflection, Kummer form
        let refl_kum = 2f64.powf((nu + 1.0) / 2.0)
            * nu
            * gamma_re(nu / 2.0)?
            * (PI * nu / 2.0).sin()
            / PI.sqrt()
            * z
            * (-z * z / 4.0).exp()
            * kummer_m_re((1.0 - nu) / 2.0, 1.5, z * z / 2.0, ctl)?;
        worst[4] = worst[4].max(mixed_residual(d_nu_mz.into(), (d_nu_z - refl_kum).into()));

        // 6. Hermite bridge
        let lhs6 = hermite_h(nu, z, ctl)?;
        let rhs6 = 2f64.powf(nu / 2.0) * (z * z / 2.0).exp() * pcf_d_re(nu, 2f64.sqrt() * z, ctl)?;
        worst[5] = worst[5].max(mixed_residual(lhs6.into(), rhs6.into()));
    }

    let names = [
        "pcf-rotation-connection",
        "pcf-zero-ratio",
        "phase-sum",
        "pcf-reflection-laguerre",
        "pcf-reflection-kummer",
        "hermite-pcf-bridge",
    ];
    Ok(IdentityReport {
        trials,
        entries: names
            .iter()
            .zip(worst.iter())
            .map(|(&identity, &max_residual)| IdentityResidual { identity, max_residual })
            .collect(),
    })
}
