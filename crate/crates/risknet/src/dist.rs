//! Standardized innovation distributions.
//!
//! Both families are normalized to zero mean and unit variance so that they
//! can drive the variance recursion directly:
//!
//! * `Normal` — the standard Gaussian.
//! * `SkewT` — a Fernandez-Steel skewing of the unit-variance Student-t.
//!   The base density `f` (variance one, `nu > 2`) is split at the origin and
//!   rescaled by the asymmetry parameter `xi > 0`:
//!
//!   ```text
//!   f_xi(z) = 2/(xi + 1/xi) * [ f(z/xi)·1{z>=0} + f(z·xi)·1{z<0} ]
//!   ```
//!
//!   which is then shifted and scaled back to zero mean and unit variance.
//!   `xi = 1` recovers the symmetric Student-t.

use rand::Rng;
use rand_distr::Distribution;
use serde::{Deserialize, Serialize};

use crate::ad::Scalar;
use crate::error::{Error, Result};
use crate::special;

/// Innovation law of the standardized residuals.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum InnovationDist {
    Normal,
    SkewT { nu: f64, xi: f64 },
}

impl InnovationDist {
    pub fn validate(&self) -> Result<()> {
        if let InnovationDist::SkewT { nu, xi } = self {
            if !(*nu > 2.0) {
                return Err(Error::InvalidParameter(format!(
                    "skew-t degrees of freedom must exceed 2, got {nu}"
                )));
            }
            if !(*xi > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "skew-t asymmetry must be positive, got {xi}"
                )));
            }
        }
        Ok(())
    }

    pub fn log_pdf(&self, eps: f64) -> f64 {
        match *self {
            InnovationDist::Normal => normal_log_pdf(eps),
            InnovationDist::SkewT { nu, xi } => SkewTKernel::new(nu, xi).log_pdf(eps),
        }
    }

    pub fn cdf(&self, eps: f64) -> f64 {
        match *self {
            InnovationDist::Normal => special::norm_cdf(eps),
            InnovationDist::SkewT { nu, xi } => skewt_cdf(eps, nu, xi),
        }
    }

    pub fn quantile(&self, p: f64) -> f64 {
        match *self {
            InnovationDist::Normal => special::norm_quantile(p),
            InnovationDist::SkewT { nu, xi } => skewt_quantile(p, nu, xi),
        }
    }

    /// First absolute moment `E|eps|` of the standardized law.
    pub fn abs_moment(&self) -> Result<f64> {
        match *self {
            InnovationDist::Normal => Ok((2.0 / std::f64::consts::PI).sqrt()),
            InnovationDist::SkewT { nu, xi } => {
                self.validate()?;
                Ok(SkewTKernel::new(nu, xi).abs_moment())
            }
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            InnovationDist::Normal => rand_distr::StandardNormal.sample(rng),
            InnovationDist::SkewT { nu, xi } => sample_skewt(rng, nu, xi),
        }
    }
}

pub fn normal_log_pdf<S: Scalar>(eps: S) -> S {
    S::c(-0.5 * (2.0 * std::f64::consts::PI).ln()) - S::c(0.5) * eps * eps
}

/// Precomputed constants for one `(nu, xi)` pair, generic over the scalar so
/// the marginal likelihood can differentiate through the shape parameters.
#[derive(Clone, Copy)]
pub struct SkewTKernel<S> {
    nu: S,
    xi: S,
    /// Mean of the raw skewed variable.
    mu: S,
    /// Standard deviation of the raw skewed variable.
    sigma: S,
    /// `E|Z|` of the unit-variance symmetric base density.
    m1: S,
    /// Constant part of the log density: `ln sigma + ln K + ln C_nu`.
    ln_norm: S,
    half: S,
    nu_m2: S,
}

impl<S: Scalar> SkewTKernel<S> {
    pub fn new(nu: S, xi: S) -> Self {
        let one = S::c(1.0);
        let half_nu1 = S::c(0.5) * (nu + 1.0);
        let lgr = half_nu1.ln_gamma() - (S::c(0.5) * nu).ln_gamma();
        let nu_m2 = nu - 2.0;
        let sqrt_pi = S::c(std::f64::consts::PI.sqrt());
        // ln of the base density normalizing constant
        let ln_c = lgr - S::c(0.5) * (S::c(std::f64::consts::PI) * nu_m2).ln();
        let m1 = S::c(2.0) * nu_m2.sqrt() * lgr.exp() / (sqrt_pi * (nu - 1.0));
        let inv_xi = one / xi;
        let mu = m1 * (xi - inv_xi);
        let ez2 = xi * xi + inv_xi * inv_xi - 1.0;
        let sigma = (ez2 - mu * mu).sqrt();
        let ln_k = S::c(2.0f64.ln()) - (xi + inv_xi).ln();
        SkewTKernel {
            nu,
            xi,
            mu,
            sigma,
            m1,
            ln_norm: sigma.ln() + ln_k + ln_c,
            half: half_nu1,
            nu_m2,
        }
    }

    /// Log density of the standardized skew-t at `eps`.
    #[inline]
    pub fn log_pdf(&self, eps: S) -> S {
        let z = self.mu + self.sigma * eps;
        let w = if z >= S::c(0.0) {
            z / self.xi
        } else {
            z * self.xi
        };
        self.ln_norm - self.half * (w * w / self.nu_m2).ln_1p()
    }

    /// `E|eps|` assembled from one-sided truncated moments of the base t.
    ///
    /// With `P(m) = ∫_{-inf}^m z f_xi(z) dz` and mean `mu`,
    /// `E|Z - mu| = 2 mu F_xi(mu) - 2 P(mu)`, all pieces closed-form except
    /// the base CDF.
    pub fn abs_moment(&self) -> S {
        let xi2 = self.xi * self.xi;
        let k = S::c(2.0) / (self.xi + S::c(1.0) / self.xi);
        let half_m1 = S::c(0.5) * self.m1;
        // g(a) = (1 + a^2/(nu-2))^(-(nu-1)/2), the t partial-moment tail
        let g = |a: S| (-(S::c(0.5) * (self.nu - 1.0)) * (a * a / self.nu_m2).ln_1p()).exp();
        let scale = (self.nu / self.nu_m2).sqrt();
        let (partial, cdf_mu) = if self.mu >= S::c(0.0) {
            let a = self.mu / self.xi;
            let p = k * (xi2 * half_m1 * (S::c(1.0) - g(a)) - half_m1 / xi2);
            let f_std = S::student_t_cdf(a * scale, self.nu);
            let f = S::c(1.0) / (xi2 + 1.0) + S::c(2.0) * xi2 / (xi2 + 1.0) * (f_std - 0.5);
            (p, f)
        } else {
            let a = -(self.mu * self.xi);
            let p = -(k * half_m1 * g(a) / xi2);
            let f_std = S::student_t_cdf(self.mu * self.xi * scale, self.nu);
            let f = S::c(2.0) / (xi2 + 1.0) * f_std;
            (p, f)
        };
        (S::c(2.0) * self.mu * cdf_mu - S::c(2.0) * partial) / self.sigma
    }
}

/// CDF of the standardized skew-t.
pub fn skewt_cdf(eps: f64, nu: f64, xi: f64) -> f64 {
    let kern = SkewTKernel::<f64>::new(nu, xi);
    let z = kern.mu + kern.sigma * eps;
    let scale = (nu / (nu - 2.0)).sqrt();
    let xi2 = xi * xi;
    if z <= 0.0 {
        2.0 / (1.0 + xi2) * special::t_cdf(z * xi * scale, nu)
    } else {
        1.0 / (1.0 + xi2) + 2.0 * xi2 / (1.0 + xi2) * (special::t_cdf(z / xi * scale, nu) - 0.5)
    }
}

/// Quantile of the standardized skew-t.
pub fn skewt_quantile(p: f64, nu: f64, xi: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "skewt_quantile: p must lie in (0,1)");
    let kern = SkewTKernel::<f64>::new(nu, xi);
    let scale = ((nu - 2.0) / nu).sqrt();
    let xi2 = xi * xi;
    let split = 1.0 / (1.0 + xi2);
    let z = if p <= split {
        special::t_quantile(0.5 * p * (1.0 + xi2), nu) * scale / xi
    } else {
        special::t_quantile(0.5 + (p - split) * (1.0 + xi2) / (2.0 * xi2), nu) * scale * xi
    };
    (z - kern.mu) / kern.sigma
}

/// Draw from the standardized skew-t by the two-sided composition: with
/// probability `xi^2/(1+xi^2)` the positive half `xi·|X|`, otherwise
/// `-|X|/xi`, where `X` is the unit-variance symmetric t.
pub fn sample_skewt<R: Rng + ?Sized>(rng: &mut R, nu: f64, xi: f64) -> f64 {
    let kern = SkewTKernel::<f64>::new(nu, xi);
    let t = rand_distr::StudentT::new(nu)
        .expect("valid dof")
        .sample(rng);
    let absx = (t * ((nu - 2.0) / nu).sqrt()).abs();
    let z = if rng.random::<f64>() < xi * xi / (1.0 + xi * xi) {
        xi * absx
    } else {
        -absx / xi
    };
    (z - kern.mu) / kern.sigma
}
