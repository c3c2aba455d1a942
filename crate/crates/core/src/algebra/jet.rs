//! Truncated Laurent series in a single real perturbation variable `f`.
//!
//! A [`LaurentJet`] stores the coefficients of `f^min .. f^(min+K)`; every
//! coefficient is a [`DualC`], so `t`-derivatives ride along through all
//! series arithmetic. Truncation is relative: products and quotients keep
//! `K + 1` significant terms counted from the leading power, sums keep the
//! terms both operands know about.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Complex, DualC};
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentJet {
    min_order: i32,
    coeffs: Vec<DualC>,
}

impl LaurentJet {
    /// Builds a jet from `coeffs[i]` = coefficient of `f^(min_order + i)`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(min_order: i32, coeffs: Vec<DualC>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        LaurentJet { min_order, coeffs }
    }

    pub fn zero(truncation: usize) -> Self {
        Self::from_coeffs(0, vec![DualC::ZERO; truncation + 1])
    }

    pub fn constant(c: DualC, truncation: usize) -> Self {
        let mut coeffs = vec![DualC::ZERO; truncation + 1];
        coeffs[0] = c;
        Self::from_coeffs(0, coeffs)
    }

    /// The perturbation variable `f` itself.
    pub fn variable(truncation: usize) -> Self {
        let mut coeffs = vec![DualC::ZERO; truncation + 1];
        coeffs[0] = DualC::ONE;
        Self::from_coeffs(1, coeffs)
    }

    /// `f^power`, exact, carried to the given truncation.
    pub fn monomial(power: i32, truncation: usize) -> Self {
        let mut coeffs = vec![DualC::ZERO; truncation + 1];
        coeffs[0] = DualC::ONE;
        Self::from_coeffs(power, coeffs)
    }

    /// Lowest stored power of `f`.
    pub fn min_order(&self) -> i32 {
        self.min_order
    }

    /// Number of stored terms beyond the leading one.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest power of `f` whose coefficient is known.
    pub fn max_order(&self) -> i32 {
        self.min_order + self.truncation() as i32
    }

    pub fn coeffs(&self) -> &[DualC] {
        &self.coeffs
    }

    /// Coefficient of `f^power`. Powers below the leading one are zero;
    /// powers beyond the truncation are unknown and yield `None`.
    pub fn coeff(&self, power: i32) -> Option<DualC> {
        if power > self.max_order() {
            None
        } else if power < self.min_order {
            Some(DualC::ZERO)
        } else {
            Some(self.coeffs[(power - self.min_order) as usize])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(DualC::is_zero)
    }

    /// Drops exactly-zero leading coefficients. An all-zero jet is returned
    /// unchanged.
    pub fn trimmed(&self) -> LaurentJet {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(0) | None => self.clone(),
            Some(k) => LaurentJet {
                min_order: self.min_order + k as i32,
                coeffs: self.coeffs[k..].to_vec(),
            },
        }
    }

    /// Re-expresses the jet on the power range `min_order..=max_order`,
    /// padding with zeros below and dropping terms above.
    ///
    /// # Panics
    /// If `min_order` exceeds the current leading power and any dropped
    /// coefficient is nonzero, or if the requested range is empty.
    pub fn with_range(&self, min_order: i32, max_order: i32) -> LaurentJet {
        assert!(max_order >= min_order);
        let coeffs = (min_order..=max_order)
            .map(|p| self.coeff(p).unwrap_or(DualC::ZERO))
            .collect();
        for p in self.min_order..min_order.min(self.max_order() + 1) {
            assert!(
                self.coeff(p).is_none_or(|c| c.is_zero()),
                "dropping nonzero coefficient at f^{p}"
            );
        }
        LaurentJet { min_order, coeffs }
    }

    pub fn map(&self, g: impl Fn(DualC) -> DualC) -> LaurentJet {
        LaurentJet {
            min_order: self.min_order,
            coeffs: self.coeffs.iter().map(|&c| g(c)).collect(),
        }
    }

    pub fn scale(&self, c: DualC) -> LaurentJet {
        self.map(|x| x * c)
    }

    pub fn scale_c(&self, c: Complex) -> LaurentJet {
        self.map(|x| x.scale(c))
    }

    pub fn add_scalar(&self, c: DualC) -> LaurentJet {
        self.clone() + LaurentJet::constant(c, self.max_order().max(0) as usize)
    }

    /// Multiplies by `f^power` (shifts every exponent).
    pub fn shift(&self, power: i32) -> LaurentJet {
        LaurentJet {
            min_order: self.min_order + power,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Series quotient `self / rhs`; the divisor's leading coefficient must
    /// be nonzero after trimming exact zeros.
    pub fn checked_div(&self, rhs: &LaurentJet) -> Result<LaurentJet, AlgebraError> {
        let b = rhs.trimmed();
        if b.coeffs[0].val == Complex::new(0.0, 0.0) {
            return Err(AlgebraError::DivisionByZero);
        }
        let k = self.truncation().min(b.truncation());
        let b0_inv = b.coeffs[0].recip();
        let mut q: Vec<DualC> = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let mut acc = self.coeffs[n];
            for j in 1..=n {
                acc -= b.coeffs[j] * q[n - j];
            }
            q.push(acc * b0_inv);
        }
        Ok(LaurentJet {
            min_order: self.min_order - b.min_order,
            coeffs: q,
        })
    }

    pub fn recip(&self) -> Result<LaurentJet, AlgebraError> {
        let one = LaurentJet::constant(DualC::ONE, self.truncation());
        one.checked_div(self)
    }

    /// Fails with [`AlgebraError::PoleBudget`] if the jet has a pole deeper
    /// than `budget` (a positive pole order).
    pub fn check_pole_budget(&self, budget: i32) -> Result<(), AlgebraError> {
        let t = self.trimmed();
        if t.min_order < -budget && !t.is_zero() {
            return Err(AlgebraError::PoleBudget {
                found: -t.min_order,
                budget,
            });
        }
        Ok(())
    }
}

impl fmt::Display for LaurentJet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}·f^{}", c.val, self.min_order + i as i32)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(f^{})", self.max_order() + 1)
    }
}

/// Principal square root of a jet with an even leading exponent.
pub fn jet_sqrt(j: &LaurentJet) -> Result<LaurentJet, AlgebraError> {
    let j = j.trimmed();
    if j.is_zero() {
        return Err(AlgebraError::DegenerateJet);
    }
    if j.min_order % 2 != 0 {
        return Err(AlgebraError::BranchPoint(j.min_order));
    }
    let k = j.truncation();
    let s0 = j.coeffs[0].sqrt();
    let two_s0_inv = (s0 * 2.0).recip();
    let mut s: Vec<DualC> = Vec::with_capacity(k + 1);
    s.push(s0);
    for n in 1..=k {
        let mut acc = j.coeffs[n];
        for m in 1..n {
            acc -= s[m] * s[n - m];
        }
        s.push(acc * two_s0_inv);
    }
    Ok(LaurentJet {
        min_order: j.min_order / 2,
        coeffs: s,
    })
}

/// Exponential of a jet without negative powers.
pub fn jet_exp(j: &LaurentJet) -> Result<LaurentJet, AlgebraError> {
    let j = j.trimmed();
    if j.min_order < 0 && !j.is_zero() {
        return Err(AlgebraError::EssentialSingularity(-j.min_order));
    }
    let top = j.max_order().max(0);
    let a = j.with_range(0, top);
    let k = top as usize;
    // n E_n = Σ_{m=1}^{n} m a_m E_{n-m}
    let mut e: Vec<DualC> = Vec::with_capacity(k + 1);
    e.push(a.coeffs[0].exp());
    for n in 1..=k {
        let mut acc = DualC::ZERO;
        for m in 1..=n {
            acc += a.coeffs[m] * e[n - m] * (m as f64);
        }
        e.push(acc * (1.0 / n as f64));
    }
    Ok(LaurentJet {
        min_order: 0,
        coeffs: e,
    })
}

impl Add for LaurentJet {
    type Output = LaurentJet;
    fn add(self, rhs: LaurentJet) -> LaurentJet {
        &self + &rhs
    }
}

impl<'a> Add<&'a LaurentJet> for &'a LaurentJet {
    type Output = LaurentJet;
    fn add(self, rhs: &LaurentJet) -> LaurentJet {
        let lo = self.min_order.min(rhs.min_order);
        let hi = self.max_order().min(rhs.max_order());
        let coeffs = (lo..=hi)
            .map(|p| self.coeff(p).unwrap() + rhs.coeff(p).unwrap())
            .collect();
        LaurentJet {
            min_order: lo,
            coeffs,
        }
    }
}

impl Sub for LaurentJet {
    type Output = LaurentJet;
    fn sub(self, rhs: LaurentJet) -> LaurentJet {
        &self - &rhs
    }
}

impl<'a> Sub<&'a LaurentJet> for &'a LaurentJet {
    type Output = LaurentJet;
    fn sub(self, rhs: &LaurentJet) -> LaurentJet {
        self + &(-rhs)
    }
}

impl Mul for LaurentJet {
    type Output = LaurentJet;
    fn mul(self, rhs: LaurentJet) -> LaurentJet {
        &self * &rhs
    }
}

// Cauchy product; index arithmetic is expected here
#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Mul<&'a LaurentJet> for &'a LaurentJet {
    type Output = LaurentJet;
    fn mul(self, rhs: &LaurentJet) -> LaurentJet {
        let k = self.truncation().min(rhs.truncation());
        let coeffs = (0..=k)
            .map(|n| {
                let mut acc = DualC::ZERO;
                for i in 0..=n {
                    acc += self.coeffs[i] * rhs.coeffs[n - i];
                }
                acc
            })
            .collect();
        LaurentJet {
            min_order: self.min_order + rhs.min_order,
            coeffs,
        }
    }
}

impl Neg for LaurentJet {
    type Output = LaurentJet;
    fn neg(self) -> LaurentJet {
        -&self
    }
}

impl Neg for &LaurentJet {
    type Output = LaurentJet;
    fn neg(self) -> LaurentJet {
        self.map(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> DualC {
        DualC::constant(Complex::new(re, im))
    }

    fn close(a: DualC, b: DualC, tol: f64) -> bool {
        (a.val - b.val).norm() <= tol * (1.0 + b.val.norm())
            && (a.dt - b.dt).norm() <= tol * (1.0 + b.dt.norm())
    }

    fn assert_jet_eq(a: &LaurentJet, b: &LaurentJet, tol: f64) {
        let lo = a.min_order().min(b.min_order());
        let hi = a.max_order().min(b.max_order());
        for p in lo..=hi {
            let (x, y) = (a.coeff(p).unwrap(), b.coeff(p).unwrap());
            assert!(close(x, y, tol), "f^{p}: {x} vs {y}");
        }
    }

    #[test]
    fn sqrt_of_one_is_one() {
        let j = LaurentJet::constant(DualC::ONE, 6);
        let s = jet_sqrt(&j).unwrap();
        assert_jet_eq(&s, &j, 0.0);
    }

    #[test]
    fn sqrt_of_discriminant_at_lambda1() {
        // 4i f² + 4 f⁴
        let mut co = vec![DualC::ZERO; 9];
        co[0] = c(0.0, 4.0);
        co[2] = c(4.0, 0.0);
        let j = LaurentJet::from_coeffs(2, co);
        let s = jet_sqrt(&j).unwrap();
        assert_eq!(s.min_order(), 1);
        let lead = Complex::from_polar(2.0, std::f64::consts::FRAC_PI_4);
        assert!((s.coeffs()[0].val - lead).norm() < 1e-15);
        let sq = &s * &s;
        assert_jet_eq(&sq, &j, 1e-14);
    }

    #[test]
    fn sqrt_binomial_series() {
        // sqrt(4 + 4f²) = 2 + f² - f⁴/4 + f⁶/8 - 5f⁸/64
        let mut co = vec![DualC::ZERO; 9];
        co[0] = c(4.0, 0.0);
        co[2] = c(4.0, 0.0);
        let s = jet_sqrt(&LaurentJet::from_coeffs(0, co)).unwrap();
        let expect = [2.0, 0.0, 1.0, 0.0, -0.25, 0.0, 0.125, 0.0, -5.0 / 64.0];
        for (p, e) in expect.iter().enumerate() {
            assert!(
                close(s.coeff(p as i32).unwrap(), c(*e, 0.0), 1e-15),
                "f^{p}"
            );
        }
    }

    #[test]
    fn sqrt_rejects_odd_leading_and_zero() {
        let j = LaurentJet::variable(4);
        assert_eq!(jet_sqrt(&j), Err(AlgebraError::BranchPoint(1)));
        assert_eq!(
            jet_sqrt(&LaurentJet::zero(4)),
            Err(AlgebraError::DegenerateJet)
        );
    }

    #[test]
    fn exp_examples() {
        let e0 = jet_exp(&LaurentJet::zero(5)).unwrap();
        assert_jet_eq(&e0, &LaurentJet::constant(DualC::ONE, 5), 0.0);

        let z = Complex::new(0.3, -1.2);
        let ec = jet_exp(&LaurentJet::constant(DualC::constant(z), 5)).unwrap();
        assert!(close(ec.coeff(0).unwrap(), DualC::constant(z.exp()), 1e-15));
        for p in 1..=5 {
            assert!(ec.coeff(p).unwrap().is_zero());
        }

        let ef = jet_exp(&LaurentJet::variable(8)).unwrap();
        let mut fact = 1.0;
        for n in 0..=9 {
            if n > 0 {
                fact *= n as f64;
            }
            assert!(
                close(ef.coeff(n).unwrap(), c(1.0 / fact, 0.0), 1e-15),
                "f^{n}"
            );
        }
    }

    #[test]
    fn exp_rejects_poles() {
        let j = LaurentJet::monomial(-1, 3);
        assert_eq!(jet_exp(&j), Err(AlgebraError::EssentialSingularity(1)));
    }

    #[test]
    fn exp_carries_t_derivative() {
        // exp(t·f): coefficient of f^n is t^n/n!, derivative n t^(n-1)/n!
        let t = 0.8;
        let j = LaurentJet::variable(6).scale(DualC::variable(t));
        let e = jet_exp(&j).unwrap();
        let e3 = e.coeff(3).unwrap();
        assert!((e3.val.re - t.powi(3) / 6.0).abs() < 1e-15);
        assert!((e3.dt.re - t.powi(2) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn laurent_division_produces_pole() {
        let one = LaurentJet::constant(DualC::ONE, 4);
        let q = one.checked_div(&LaurentJet::variable(4)).unwrap();
        assert_eq!(q.min_order(), -1);
        assert!(close(q.coeff(-1).unwrap(), DualC::ONE, 0.0));
        assert!(LaurentJet::zero(3).recip().is_err());
    }

    #[test]
    fn pole_budget() {
        let j = LaurentJet::monomial(-5, 3);
        assert!(j.check_pole_budget(6).is_ok());
        assert_eq!(
            j.check_pole_budget(4),
            Err(AlgebraError::PoleBudget {
                found: 5,
                budget: 4
            })
        );
    }

    fn arb_jet(min: i32) -> impl Strategy<Value = LaurentJet> {
        proptest::collection::vec((-2.0..2.0f64, -2.0..2.0f64, -1.0..1.0f64), 7).prop_map(
            move |v| {
                let mut co: Vec<DualC> = v
                    .into_iter()
                    .map(|(a, b, d)| DualC::new(Complex::new(a, b), Complex::new(d, -d)))
                    .collect();
                // keep the leading coefficient well away from zero
                co[0] = DualC::new(Complex::new(1.0 + co[0].val.norm(), co[0].val.im), co[0].dt);
                LaurentJet::from_coeffs(min, co)
            },
        )
    }

    proptest! {
        #[test]
        fn mul_then_div_roundtrips(a in arb_jet(-1), b in arb_jet(2)) {
            let back = (&a * &b).checked_div(&b).unwrap();
            prop_assert_eq!(back.min_order(), a.min_order());
            for p in a.min_order()..=back.max_order() {
                prop_assert!(close(back.coeff(p).unwrap(), a.coeff(p).unwrap(), 1e-12));
            }
        }

        #[test]
        fn sqrt_squares_back(a in arb_jet(-2)) {
            let s = jet_sqrt(&a).unwrap();
            let sq = &s * &s;
            for p in a.min_order()..=sq.max_order() {
                prop_assert!(close(sq.coeff(p).unwrap(), a.coeff(p).unwrap(), 1e-12));
            }
        }

        #[test]
        fn exp_of_negation_is_inverse(a in arb_jet(0)) {
            let e = jet_exp(&a).unwrap();
            let en = jet_exp(&(-&a)).unwrap();
            let one = &e * &en;
            prop_assert!(close(one.coeff(0).unwrap(), DualC::ONE, 1e-12));
            for p in 1..=one.max_order() {
                prop_assert!(close(one.coeff(p).unwrap(), DualC::ZERO, 1e-10));
            }
        }
    }
}
