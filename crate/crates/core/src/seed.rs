//! Plane-wave background and the Lax-pair eigenfunction it supports.
//!
//! The eigenfunction is available two ways: pointwise at a generic spectral
//! parameter, and as a jet in `f` about the rogue-wave point
//! `λ₁ = -a/2 + i/2` with `λ = λ₁ + f²`.

use crate::algebra::{jet_exp, jet_sqrt, Complex, DualC, LaurentJet, Mat2, I};
use crate::error::{Error, Result};

/// Background parameter, rogue-wave order and the free structural
/// parameters `s_k = m_k + i n_k`, `k = 1..order-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeedConfig {
    pub a: f64,
    pub order: usize,
    pub s: Vec<Complex>,
}

impl SeedConfig {
    pub fn new(a: f64, order: usize, s: Vec<Complex>) -> Result<Self> {
        let cfg = SeedConfig { a, order, s };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Order `N` with all structural parameters zero.
    pub fn fundamental(a: f64, order: usize) -> Result<Self> {
        Self::new(
            a,
            order,
            vec![Complex::new(0.0, 0.0); order.saturating_sub(1)],
        )
    }

    pub fn validate(&self) -> Result<()> {
        if !self.a.is_finite() {
            return Err(Error::Config(format!("a must be finite, got {}", self.a)));
        }
        if self.order == 0 {
            return Err(Error::Config("order must be at least 1".into()));
        }
        if self.s.len() != self.order - 1 {
            return Err(Error::Config(format!(
                "order {} needs {} structural parameters, got {}",
                self.order,
                self.order - 1,
                self.s.len()
            )));
        }
        if self.s.iter().any(|s| !s.is_finite()) {
            return Err(Error::Config("structural parameters must be finite".into()));
        }
        Ok(())
    }

    /// Jet truncation order used for this rogue-wave order.
    pub fn truncation(&self) -> usize {
        2 * self.order + 4
    }

    /// Deepest pole an intermediate jet may carry.
    pub fn pole_budget(&self) -> i32 {
        2 * self.order as i32 + 2
    }

    pub fn lambda1(&self) -> Complex {
        rogue_lambda(self.a)
    }
}

/// A nonzero spectral parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralPoint {
    pub lambda: Complex,
}

impl SpectralPoint {
    pub fn new(lambda: Complex) -> Result<Self> {
        if lambda == Complex::new(0.0, 0.0) {
            return Err(Error::SingularV);
        }
        Ok(SpectralPoint { lambda })
    }

    /// The point `-a/2 + i/2` where the rogue-wave chain is built.
    pub fn rogue(a: f64) -> Self {
        SpectralPoint {
            lambda: rogue_lambda(a),
        }
    }
}

pub fn rogue_lambda(a: f64) -> Complex {
    Complex::new(-a / 2.0, 0.5)
}

/// Components `(ψ, φ)` of a column eigenfunction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenPair {
    pub psi: DualC,
    pub phi: DualC,
}

impl EigenPair {
    pub fn new(psi: DualC, phi: DualC) -> Self {
        EigenPair { psi, phi }
    }

    pub fn scale(self, c: Complex) -> Self {
        EigenPair::new(self.psi.scale(c), self.phi.scale(c))
    }

    /// `|ψ|² + |φ|²` (value only).
    pub fn norm_sqr(&self) -> f64 {
        self.psi.val.norm_sqr() + self.phi.val.norm_sqr()
    }
}

/// `√(1+a²)`.
#[inline]
pub fn root(a: f64) -> f64 {
    (1.0 + a * a).sqrt()
}

/// Seed phase `θ = (a√(1+a²) x + t)/√(1+a²)` with its `t`-derivative.
pub fn phase(a: f64, x: f64, t: f64) -> DualC {
    let c = root(a);
    DualC::new(
        Complex::new((a * c * x + t) / c, 0.0),
        Complex::new(1.0 / c, 0.0),
    )
}

/// Plane-wave seed `A₀ = e^{iθ}`, `B₀ = -a/√(1+a²)`.
pub fn plane_wave_seed(a: f64, x: f64, t: f64) -> (DualC, f64) {
    let a0 = (phase(a, x, t) * I).exp();
    (a0, -a / root(a))
}

/// `4λ² + 4aλ + 1 + a²`.
pub fn discriminant(a: f64, lambda: Complex) -> Complex {
    lambda * lambda * 4.0 + lambda * (4.0 * a) + (1.0 + a * a)
}

/// Lax-pair `U` for a field value `A` at spectral parameter `λ`.
pub fn lax_u(amp: Complex, lambda: Complex) -> Mat2<Complex> {
    Mat2::new(-I * lambda, amp * 0.5, -amp.conj() * 0.5, I * lambda)
}

/// Lax-pair `V` for `A_t`, `B` at spectral parameter `λ ≠ 0`.
pub fn lax_v(amp_t: Complex, b: f64, lambda: Complex) -> Mat2<Complex> {
    let k = (I * lambda * 4.0).inv();
    Mat2::new(
        Complex::new(-b, 0.0) * k,
        amp_t * k,
        amp_t.conj() * k,
        Complex::new(b, 0.0) * k,
    )
}

/// Eigenfunction of the seed's Lax pair at a generic spectral parameter.
///
/// The structural sum is evaluated with `f² = λ - λ₁`, so sampling at
/// `λ = λ₁ + f²` reproduces the jet construction. Square roots take the
/// principal branch; the pair `(C₁, C₂)` is then fixed so that
/// `√(2λ+a-R)·√(2λ+a+R) = i`, which keeps both exponential modes on the
/// Lax pair's eigenvectors.
pub fn eigenfunction_generic(
    a: f64,
    lambda: Complex,
    x: f64,
    t: f64,
    s: &[Complex],
) -> Result<EigenPair> {
    let lambda = SpectralPoint::new(lambda)?.lambda;
    let disc = discriminant(a, lambda);
    if disc.norm() < 1e-12 {
        return Err(Error::DegenerateSpectralPoint);
    }
    let c = root(a);
    let r = disc.sqrt();
    let two_mu = lambda * 2.0 + a;
    let p = (two_mu - r).sqrt();
    let mut q = (two_mu + r).sqrt();
    if (p * q).im < 0.0 {
        q = -q;
    }
    let c1 = p / r;
    let c2 = q / r;

    let f2 = lambda - rogue_lambda(a);
    let mut shift = Complex::new(0.0, 0.0);
    let mut fk = Complex::new(1.0, 0.0);
    for sk in s {
        fk *= f2;
        shift += sk * fk;
    }
    let inner = DualC::variable(t) + (lambda * (2.0 * c * x) + shift);
    let m = inner * (I * r / (lambda * (4.0 * c)));
    let (ep, em) = (m.exp(), (-m).exp());
    let half = phase(a, x, t) * (I * 0.5);
    let (gp, gm) = (half.exp(), (-half).exp());
    let psi = (ep * c1 - em * c2) * gp;
    let phi = (em * c1 - ep * c2) * gm;
    Ok(EigenPair::new(psi, phi))
}

const CLEANUP_TOL: f64 = 1e-9;

/// Eigenfunction jets `(ψ(f), φ(f))` about `λ₁` with `λ = λ₁ + f²`.
///
/// The discriminant is used in its factored form `4f²(i + f²)`, so
/// `R = 2f√(i+f²)` and the `1/f` poles of `C₁`, `C₂` cancel inside the jet
/// algebra. Returned jets start at `f⁰`; odd powers are verified to vanish
/// and set to exactly zero, so the coefficient of `f^{2k}` is `Ψ₁^{[k]}`.
pub fn eigenfunction_jet(cfg: &SeedConfig, x: f64, t: f64) -> Result<(LaurentJet, LaurentJet)> {
    let (psi, phi) = eigenfunction_jet_raw(cfg, x, t)?;
    Ok((even_part(&psi, "psi")?, even_part(&phi, "phi")?))
}

/// The same jets before cleanup: they may start below `f⁰` and carry
/// round-off in odd powers.
pub fn eigenfunction_jet_raw(cfg: &SeedConfig, x: f64, t: f64) -> Result<(LaurentJet, LaurentJet)> {
    cfg.validate()?;
    let k = cfg.truncation();
    let a = cfg.a;
    let c = root(a);

    let f = LaurentJet::variable(k);
    let f2 = &f * &f;
    let q = jet_sqrt(&(LaurentJet::constant(DualC::constant(I), k) + f2.clone()))?;
    let lambda = LaurentJet::constant(DualC::constant(cfg.lambda1()), k) + f2.clone();
    let r = (&f * &q).scale_c(Complex::new(2.0, 0.0));

    let c1 = (&q - &f).checked_div(&r)?;
    let c2 = (&q + &f).checked_div(&r)?;
    c1.check_pole_budget(cfg.pole_budget())?;
    c2.check_pole_budget(cfg.pole_budget())?;

    let mut inner = lambda
        .scale_c(Complex::new(2.0 * c * x, 0.0))
        .add_scalar(DualC::variable(t));
    for (i, sk) in cfg.s.iter().enumerate() {
        let pow = 2 * (i as i32 + 1);
        inner = inner + LaurentJet::monomial(pow, k).scale_c(*sk);
    }
    let m = (&r * &inner).checked_div(&lambda)?.scale_c(I / (4.0 * c));
    let ep = jet_exp(&m)?;
    let em = jet_exp(&(-&m))?;

    let half = phase(a, x, t) * (I * 0.5);
    let psi = (&(&c1 * &ep) - &(&c2 * &em)).scale(half.exp());
    let phi = (&(&c1 * &em) - &(&c2 * &ep)).scale((-half).exp());
    psi.check_pole_budget(cfg.pole_budget())?;
    phi.check_pole_budget(cfg.pole_budget())?;
    Ok((psi, phi))
}

/// Asserts that negative and odd powers vanish (relative to the largest
/// coefficient) and returns the jet on `f⁰..` with them set to zero.
fn even_part(j: &LaurentJet, name: &str) -> Result<LaurentJet> {
    let scale_val = j.coeffs().iter().map(|c| c.val.norm()).fold(0.0, f64::max);
    let scale_dt = j.coeffs().iter().map(|c| c.dt.norm()).fold(0.0, f64::max);
    for p in j.min_order()..=j.max_order() {
        if p >= 0 && p % 2 == 0 {
            continue;
        }
        let cp = j.coeff(p).unwrap();
        if cp.val.norm() > CLEANUP_TOL * scale_val || cp.dt.norm() > CLEANUP_TOL * scale_dt {
            return Err(Error::Consistency(format!(
                "{name} jet has a non-vanishing f^{p} coefficient {cp}"
            )));
        }
    }
    let top = j.max_order();
    let coeffs = (0..=top)
        .map(|p| {
            if p % 2 == 0 {
                j.coeff(p).unwrap()
            } else {
                DualC::ZERO
            }
        })
        .collect();
    Ok(LaurentJet::from_coeffs(0, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mat2_inv;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn seed_values() {
        let (a0, b0) = plane_wave_seed(0.0, 0.0, 0.0);
        assert!((a0.val - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(b0, 0.0);

        let (a0, b0) = plane_wave_seed(1.0, 0.0, 0.0);
        assert!((a0.val - c(1.0, 0.0)).norm() < 1e-15);
        assert!((b0 + 0.5f64.sqrt()).abs() < 1e-15);

        for &(x, t) in &[(0.0, 0.0), (3.0, -2.0), (-7.5, 11.0)] {
            let (_, b0) = plane_wave_seed(0.1, x, t);
            assert!((b0 + 0.1 / 1.01f64.sqrt()).abs() < 1e-15);
            assert!((b0 - (-0.09950371902099892)).abs() < 1e-15);
        }
    }

    #[test]
    fn seed_normalization_and_derivative() {
        for &a in &[-1.0, 0.0, 0.1, 0.5, 2.0] {
            let (a0, b0) = plane_wave_seed(a, 1.3, -0.4);
            assert!((a0.dt.norm_sqr() + b0 * b0 - 1.0).abs() < 1e-12);
            let expect = a0.val * I / root(a);
            assert!((a0.dt - expect).norm() < 1e-15);
        }
    }

    #[test]
    fn seed_solves_ab_system() {
        // A_xt = A B exactly; B constant and |A| = 1 make B_x + ½(|A|²)_t = 0.
        for &a in &[0.0, 0.1, -0.7] {
            let (x, t) = (0.4, 1.9);
            let (a0, b0) = plane_wave_seed(a, x, t);
            // A_xt = ∂x (i/c) e^{iθ} = (i/c)(i a) e^{iθ}
            let axt = I / root(a) * I * a * a0.val;
            assert!((axt - a0.val * b0).norm() < 1e-12);
        }
    }

    #[test]
    fn discriminant_nonzero_off_lambda1() {
        assert!((discriminant(0.0, I) - c(-3.0, 0.0)).norm() < 1e-15);
        assert!(eigenfunction_generic(0.0, I, 0.0, 0.0, &[]).is_ok());
    }

    #[test]
    fn generic_rejects_degenerate_points() {
        assert_eq!(
            eigenfunction_generic(0.3, rogue_lambda(0.3), 0.0, 0.0, &[]),
            Err(Error::DegenerateSpectralPoint)
        );
        assert_eq!(
            eigenfunction_generic(0.3, c(0.0, 0.0), 0.0, 0.0, &[]),
            Err(Error::SingularV)
        );
    }

    #[test]
    fn discriminant_factorization_at_lambda1() {
        // 4λ²+4aλ+1+a² at λ = λ₁ + f² equals 4i f² + 4 f⁴ for every a
        for &a in &[-1.0, -0.3, 0.0, 0.1, 0.5, 1.0, 3.0] {
            let k = 8;
            let f2 = LaurentJet::monomial(2, k);
            let lam = LaurentJet::constant(DualC::constant(rogue_lambda(a)), k) + f2;
            let d = (&lam * &lam).scale_c(c(4.0, 0.0)) + lam.scale_c(c(4.0 * a, 0.0));
            let d = d.add_scalar(DualC::real(1.0 + a * a));
            let expect = [
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(0.0, 4.0),
                c(0.0, 0.0),
                c(4.0, 0.0),
            ];
            for (p, e) in expect.iter().enumerate() {
                assert!(
                    (d.coeff(p as i32).unwrap().val - e).norm() < 1e-14,
                    "a={a} f^{p}"
                );
            }
            for p in 5..=d.max_order() {
                assert!(d.coeff(p).unwrap().val.norm() < 1e-14);
            }
        }
    }

    fn lax_residual(a: f64, lambda: Complex, x: f64, t: f64, s: &[Complex], h: f64) -> f64 {
        crate::validate::eigenfunction_lax_residual(a, lambda, x, t, s, h).unwrap()
    }

    #[test]
    fn generic_lax_residual_is_second_order() {
        let (a, lambda) = (0.3, c(0.4, 0.7));
        let s = [c(1.0, -0.5)];
        let r1 = lax_residual(a, lambda, 0.6, -0.8, &s, 1e-2);
        let r2 = lax_residual(a, lambda, 0.6, -0.8, &s, 5e-3);
        let ratio = r1 / r2;
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio} ({r1}, {r2})");
    }

    #[test]
    fn generic_dt_channel_matches_finite_difference() {
        let (a, lambda, x, t) = (-0.4, c(-0.2, 1.1), 0.7, 0.2);
        let h = 1e-5;
        let e = eigenfunction_generic(a, lambda, x, t, &[]).unwrap();
        let ep = eigenfunction_generic(a, lambda, x, t + h, &[]).unwrap();
        let em = eigenfunction_generic(a, lambda, x, t - h, &[]).unwrap();
        let fd = (ep.psi.val - em.psi.val) / (2.0 * h);
        assert!((e.psi.dt - fd).norm() < 1e-8 * (1.0 + fd.norm()));
        let fd = (ep.phi.val - em.phi.val) / (2.0 * h);
        assert!((e.phi.dt - fd).norm() < 1e-8 * (1.0 + fd.norm()));
    }

    #[test]
    fn jet_leading_coefficient_at_origin() {
        let cfg = SeedConfig::fundamental(0.0, 1).unwrap();
        let (psi, phi) = eigenfunction_jet(&cfg, 0.0, 0.0).unwrap();
        let expect = c(-1.0, 1.0) * std::f64::consts::FRAC_1_SQRT_2;
        assert!((psi.coeff(0).unwrap().val - expect).norm() < 1e-14);
        // p₂^{[0]}(0,0) = -(1-i)·i = -(1+i), prefactor √2/(2i)
        let expect_phi = c(-1.0, 1.0) * std::f64::consts::FRAC_1_SQRT_2;
        assert!((phi.coeff(0).unwrap().val - expect_phi).norm() < 1e-14);
    }

    #[test]
    fn jets_are_even_and_start_at_zero() {
        let cfg = SeedConfig::new(0.37, 3, vec![c(2.0, 1.0), c(-1.0, 0.5)]).unwrap();
        let (psi, phi) = eigenfunction_jet(&cfg, 1.4, -2.2).unwrap();
        for j in [&psi, &phi] {
            assert_eq!(j.min_order(), 0);
            assert!(j.max_order() >= 2 * (cfg.order as i32 - 1));
            for p in (1..=j.max_order()).step_by(2) {
                assert!(j.coeff(p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn jet_matches_richardson_extrapolation_of_generic_path() {
        let a = 0.1;
        let s = [c(2.0, 1.0)];
        let (x, t) = (0.3, -0.7);
        let cfg = SeedConfig::new(a, 2, s.to_vec()).unwrap();
        let (psi, phi) = eigenfunction_jet(&cfg, x, t).unwrap();
        let hs = [1e-2, 5e-3, 2.5e-3];
        let samples: Vec<EigenPair> = hs
            .iter()
            .map(|f| eigenfunction_generic(a, rogue_lambda(a) + f * f, x, t, &s).unwrap())
            .collect();
        // quadratic fit in u = f² through the three samples
        let u: Vec<f64> = hs.iter().map(|f| f * f).collect();
        let extract = |vals: [Complex; 3]| {
            // Lagrange basis for value at 0 and derivative at 0
            let mut c0 = c(0.0, 0.0);
            let mut c1 = c(0.0, 0.0);
            for i in 0..3 {
                let (j, k) = ((i + 1) % 3, (i + 2) % 3);
                let den = (u[i] - u[j]) * (u[i] - u[k]);
                c0 += vals[i] * (u[j] * u[k] / den);
                c1 += vals[i] * (-(u[j] + u[k]) / den);
            }
            (c0, c1)
        };
        let (p0, p1) = extract([samples[0].psi.val, samples[1].psi.val, samples[2].psi.val]);
        let (q0, q1) = extract([samples[0].phi.val, samples[1].phi.val, samples[2].phi.val]);
        assert!((p0 - psi.coeff(0).unwrap().val).norm() < 1e-6);
        assert!((p1 - psi.coeff(2).unwrap().val).norm() < 1e-6);
        assert!((q0 - phi.coeff(0).unwrap().val).norm() < 1e-6);
        assert!((q1 - phi.coeff(2).unwrap().val).norm() < 1e-6);
    }

    #[test]
    fn jet_coefficients_solve_lax_pair_at_lambda1() {
        // The f⁰ coefficient is an exact eigenfunction at λ₁.
        let a = 0.25;
        let cfg = SeedConfig::fundamental(a, 1).unwrap();
        let lam = rogue_lambda(a);
        let (x, t, h) = (0.5, 0.9, 1e-4);
        let at = |x: f64, t: f64| {
            let (p, q) = eigenfunction_jet(&cfg, x, t).unwrap();
            [p.coeff(0).unwrap(), q.coeff(0).unwrap()]
        };
        let p0 = at(x, t);
        let (xp, xm) = (at(x + h, t), at(x - h, t));
        let (a0, b0) = plane_wave_seed(a, x, t);
        let u = lax_u(a0.val, lam).apply(&[p0[0].val, p0[1].val]);
        let v = lax_v(a0.dt, b0, lam).apply(&[p0[0].val, p0[1].val]);
        for i in 0..2 {
            let dx = (xp[i].val - xm[i].val) / (2.0 * h);
            assert!((dx - u[i]).norm() < 1e-7);
            // t-derivative straight from the dual channel
            assert!((p0[i].dt - v[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn lax_v_requires_nonzero_lambda() {
        let v = lax_v(c(1.0, 0.0), 0.5, c(0.0, 0.5));
        assert!(mat2_inv(&v).is_ok());
        assert!(SpectralPoint::new(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(SeedConfig::new(f64::NAN, 1, vec![]).is_err());
        assert!(SeedConfig::new(0.1, 0, vec![]).is_err());
        assert!(SeedConfig::new(0.1, 2, vec![]).is_err());
        assert!(SeedConfig::new(0.1, 2, vec![c(0.0, 0.0)]).is_ok());
        assert_eq!(SeedConfig::fundamental(0.1, 3).unwrap().s.len(), 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn generic_solves_lax_pair(a in -1.0..1.0f64,
                                   lre in -1.0..1.0f64,
                                   lim in 0.2..1.5f64,
                                   neg in proptest::bool::ANY,
                                   x in -2.0..2.0f64,
                                   t in -2.0..2.0f64) {
            let lambda = c(lre, if neg { -lim } else { lim });
            prop_assume!(discriminant(a, lambda).norm() > 1e-2);
            let r = lax_residual(a, lambda, x, t, &[], 1e-4);
            prop_assert!(r < 1e-6, "residual {r}");
        }
    }
}
