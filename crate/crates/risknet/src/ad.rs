//! Forward-mode automatic differentiation on dual numbers.
//!
//! The likelihood filters are written once, generically over [`Scalar`], and
//! evaluated either on plain `f64` (value only) or on [`Dual`] (value plus one
//! directional derivative). A full gradient costs one dual pass per parameter.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::special;

/// Numeric type the likelihood code is generic over.
pub trait Scalar:
    Copy
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Add<f64, Output = Self>
    + Sub<f64, Output = Self>
    + Mul<f64, Output = Self>
    + Div<f64, Output = Self>
{
    /// Lift a constant.
    fn c(x: f64) -> Self;
    /// Primal value.
    fn val(self) -> f64;
    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn sqrt(self) -> Self;
    fn abs(self) -> Self;
    fn ln_1p(self) -> Self;
    fn ln_gamma(self) -> Self;
    /// CDF of the classic (unit-scale) Student-t distribution, differentiable
    /// in both the evaluation point and the degrees of freedom.
    fn student_t_cdf(x: Self, nu: Self) -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn c(x: f64) -> Self {
        x
    }
    #[inline]
    fn val(self) -> f64 {
        self
    }
    #[inline]
    fn ln(self) -> Self {
        f64::ln(self)
    }
    #[inline]
    fn exp(self) -> Self {
        f64::exp(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn ln_1p(self) -> Self {
        f64::ln_1p(self)
    }
    #[inline]
    fn ln_gamma(self) -> Self {
        special::ln_gamma(self)
    }
    #[inline]
    fn student_t_cdf(x: Self, nu: Self) -> Self {
        special::t_cdf(x, nu)
    }
}

/// Value/derivative pair `v + e·dx`.
#[derive(Clone, Copy, Debug)]
pub struct Dual {
    pub v: f64,
    pub e: f64,
}

impl Dual {
    #[inline]
    pub fn new(v: f64, e: f64) -> Self {
        Dual { v, e }
    }
    /// The active variable of a differentiation pass.
    #[inline]
    pub fn var(v: f64) -> Self {
        Dual { v, e: 1.0 }
    }
}

impl PartialEq for Dual {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v
    }
}

impl PartialOrd for Dual {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        self.v.partial_cmp(&other.v)
    }
}

macro_rules! dual_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $v:expr, |$av:ident, $ae:ident, $bv:ident, $be:ident| $e:expr) => {
        impl $trait for Dual {
            type Output = Dual;
            #[inline]
            fn $method(self, rhs: Dual) -> Dual {
                let ($a, $b) = (self.v, rhs.v);
                let ($av, $ae, $bv, $be) = (self.v, self.e, rhs.v, rhs.e);
                let _ = ($av, $bv);
                Dual::new($v, $e)
            }
        }
        impl $trait<f64> for Dual {
            type Output = Dual;
            #[inline]
            fn $method(self, rhs: f64) -> Dual {
                $trait::$method(self, Dual::new(rhs, 0.0))
            }
        }
        impl $trait<Dual> for f64 {
            type Output = Dual;
            #[inline]
            fn $method(self, rhs: Dual) -> Dual {
                $trait::$method(Dual::new(self, 0.0), rhs)
            }
        }
    };
}

dual_binop!(Add, add, |a, b| a + b, |av, ae, bv, be| ae + be);
dual_binop!(Sub, sub, |a, b| a - b, |av, ae, bv, be| ae - be);
dual_binop!(Mul, mul, |a, b| a * b, |av, ae, bv, be| ae * bv + av * be);
dual_binop!(Div, div, |a, b| a / b, |av, ae, bv, be| (ae * bv - av * be)
    / (bv * bv));

impl Neg for Dual {
    type Output = Dual;
    #[inline]
    fn neg(self) -> Dual {
        Dual::new(-self.v, -self.e)
    }
}

impl Scalar for Dual {
    #[inline]
    fn c(x: f64) -> Self {
        Dual::new(x, 0.0)
    }
    #[inline]
    fn val(self) -> f64 {
        self.v
    }
    #[inline]
    fn ln(self) -> Self {
        Dual::new(self.v.ln(), self.e / self.v)
    }
    #[inline]
    fn exp(self) -> Self {
        let ev = self.v.exp();
        Dual::new(ev, self.e * ev)
    }
    #[inline]
    fn sqrt(self) -> Self {
        let s = self.v.sqrt();
        Dual::new(s, self.e / (2.0 * s))
    }
    #[inline]
    fn abs(self) -> Self {
        // subgradient 0 at the kink
        let sign = if self.v > 0.0 {
            1.0
        } else if self.v < 0.0 {
            -1.0
        } else {
            0.0
        };
        Dual::new(self.v.abs(), self.e * sign)
    }
    #[inline]
    fn ln_1p(self) -> Self {
        Dual::new(self.v.ln_1p(), self.e / (1.0 + self.v))
    }
    #[inline]
    fn ln_gamma(self) -> Self {
        Dual::new(
            special::ln_gamma(self.v),
            self.e * special::digamma(self.v),
        )
    }
    fn student_t_cdf(x: Self, nu: Self) -> Self {
        let v = special::t_cdf(x.v, nu.v);
        let mut e = special::t_pdf(x.v, nu.v) * x.e;
        if nu.e != 0.0 {
            // No closed form for dF/dnu; a centred difference is accurate to
            // ~1e-10 here, far below the gradient tolerances downstream.
            let h = 1e-5 * nu.v.max(1.0);
            let dnu = (special::t_cdf(x.v, nu.v + h) - special::t_cdf(x.v, nu.v - h)) / (2.0 * h);
            e += dnu * nu.e;
        }
        Dual::new(v, e)
    }
}

/// Evaluate `f` and its full gradient by running one dual pass per coordinate.
pub fn gradient<F>(f: F, x: &[f64]) -> (f64, Vec<f64>)
where
    F: Fn(&[Dual]) -> Dual,
{
    let mut duals: Vec<Dual> = x.iter().map(|&v| Dual::new(v, 0.0)).collect();
    let mut grad = vec![0.0; x.len()];
    let mut value = f64::NAN;
    for i in 0..x.len() {
        duals[i].e = 1.0;
        let out = f(&duals);
        duals[i].e = 0.0;
        grad[i] = out.e;
        value = out.v;
    }
    if x.is_empty() {
        value = f(&duals).v;
    }
    (value, grad)
}
