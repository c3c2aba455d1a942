use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use super::Complex;

/// A complex value carried together with its exact derivative in `t`.
///
/// Arithmetic follows the Leibniz rule, so any expression assembled from
/// `DualC` values has an exact `t`-derivative in its `dt` channel.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DualC {
    pub val: Complex,
    pub dt: Complex,
}

impl DualC {
    pub const ZERO: DualC = DualC {
        val: Complex::new(0.0, 0.0),
        dt: Complex::new(0.0, 0.0),
    };
    pub const ONE: DualC = DualC {
        val: Complex::new(1.0, 0.0),
        dt: Complex::new(0.0, 0.0),
    };

    #[inline]
    pub const fn new(val: Complex, dt: Complex) -> Self {
        DualC { val, dt }
    }

    /// A value that does not depend on `t`.
    #[inline]
    pub fn constant(val: Complex) -> Self {
        DualC {
            val,
            dt: Complex::new(0.0, 0.0),
        }
    }

    #[inline]
    pub fn real(v: f64) -> Self {
        Self::constant(Complex::new(v, 0.0))
    }

    /// The independent variable `t` itself, seeded with `dt = 1`.
    #[inline]
    pub fn variable(t: f64) -> Self {
        DualC {
            val: Complex::new(t, 0.0),
            dt: Complex::new(1.0, 0.0),
        }
    }

    #[inline]
    pub fn conj(self) -> Self {
        DualC {
            val: self.val.conj(),
            dt: self.dt.conj(),
        }
    }

    /// `|u|²` with derivative `2 Re(u* u_t)`; imaginary parts are exactly zero.
    #[inline]
    pub fn norm_sqr(self) -> Self {
        let d = 2.0 * (self.val.conj() * self.dt).re;
        DualC {
            val: Complex::new(self.val.norm_sqr(), 0.0),
            dt: Complex::new(d, 0.0),
        }
    }

    #[inline]
    pub fn scale(self, c: Complex) -> Self {
        DualC {
            val: self.val * c,
            dt: self.dt * c,
        }
    }

    #[inline]
    pub fn scale_re(self, s: f64) -> Self {
        DualC {
            val: self.val * s,
            dt: self.dt * s,
        }
    }

    pub fn recip(self) -> Self {
        let inv = self.val.inv();
        DualC {
            val: inv,
            dt: -self.dt * inv * inv,
        }
    }

    pub fn exp(self) -> Self {
        let e = self.val.exp();
        DualC {
            val: e,
            dt: self.dt * e,
        }
    }

    /// Principal square root.
    pub fn sqrt(self) -> Self {
        let s = self.val.sqrt();
        DualC {
            val: s,
            dt: self.dt / (s * 2.0),
        }
    }

    pub fn powi(self, n: u32) -> Self {
        let mut acc = DualC::ONE;
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }

    pub fn is_finite(&self) -> bool {
        self.val.is_finite() && self.dt.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.val == Complex::new(0.0, 0.0) && self.dt == Complex::new(0.0, 0.0)
    }
}

impl From<Complex> for DualC {
    fn from(c: Complex) -> Self {
        DualC::constant(c)
    }
}

impl fmt::Display for DualC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; d/dt {})", self.val, self.dt)
    }
}

impl Add for DualC {
    type Output = DualC;
    #[inline]
    fn add(self, rhs: DualC) -> DualC {
        DualC::new(self.val + rhs.val, self.dt + rhs.dt)
    }
}

impl AddAssign for DualC {
    #[inline]
    fn add_assign(&mut self, rhs: DualC) {
        self.val += rhs.val;
        self.dt += rhs.dt;
    }
}

impl Sub for DualC {
    type Output = DualC;
    #[inline]
    fn sub(self, rhs: DualC) -> DualC {
        DualC::new(self.val - rhs.val, self.dt - rhs.dt)
    }
}

impl SubAssign for DualC {
    #[inline]
    fn sub_assign(&mut self, rhs: DualC) {
        self.val -= rhs.val;
        self.dt -= rhs.dt;
    }
}

impl Mul for DualC {
    type Output = DualC;
    #[inline]
    fn mul(self, rhs: DualC) -> DualC {
        DualC::new(self.val * rhs.val, self.dt * rhs.val + self.val * rhs.dt)
    }
}

impl Div for DualC {
    type Output = DualC;
    #[inline]
    fn div(self, rhs: DualC) -> DualC {
        let q = self.val / rhs.val;
        DualC::new(q, (self.dt - q * rhs.dt) / rhs.val)
    }
}

impl Neg for DualC {
    type Output = DualC;
    #[inline]
    fn neg(self) -> DualC {
        DualC::new(-self.val, -self.dt)
    }
}

impl Add<Complex> for DualC {
    type Output = DualC;
    #[inline]
    fn add(self, rhs: Complex) -> DualC {
        DualC::new(self.val + rhs, self.dt)
    }
}

impl Sub<Complex> for DualC {
    type Output = DualC;
    #[inline]
    fn sub(self, rhs: Complex) -> DualC {
        DualC::new(self.val - rhs, self.dt)
    }
}

impl Mul<Complex> for DualC {
    type Output = DualC;
    #[inline]
    fn mul(self, rhs: Complex) -> DualC {
        self.scale(rhs)
    }
}

impl Mul<f64> for DualC {
    type Output = DualC;
    #[inline]
    fn mul(self, rhs: f64) -> DualC {
        self.scale_re(rhs)
    }
}
