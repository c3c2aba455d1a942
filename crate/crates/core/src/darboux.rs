//! One-fold Darboux updates and the generalized (single spectral point)
//! Darboux chain.
//!
//! At level `l` the chain needs the eigenfunction `Ψ₁[l-1]` of the level
//! `l-1` Lax pair at `λ₁`. It is the `f^{2(l-1)}` coefficient of
//! `(f² + T₁[l-1]) ⋯ (f² + T₁[1]) Ψ₁(f)`, where `Ψ₁(f)` is the seed
//! eigenfunction jet and `T₁[k] = λ₁ I - H[k-1] Λ H[k-1]⁻¹`. All lower
//! coefficients of that product vanish, which is what makes the limit finite.

use log::warn;

use crate::algebra::{mat2_inv, Complex, DualC, LaurentJet, Mat2, I};
use crate::error::{AlgebraError, Error, Result};
use crate::seed::{eigenfunction_jet, plane_wave_seed, EigenPair, SeedConfig};

/// Tolerance on the imaginary residue of the `B` update.
const B_IMAG_TOL: f64 = 1e-9;

/// Fields `(A, B)` after `level` Darboux steps at one point. `A.dt` is the
/// exact `t`-derivative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolutionSample {
    pub a: DualC,
    pub b: f64,
    pub level: usize,
}

impl SolutionSample {
    /// `|A_t|² + B² - 1`.
    pub fn normalization_dev(&self) -> f64 {
        self.a.dt.norm_sqr() + self.b * self.b - 1.0
    }
}

/// The matrices of one Darboux step built from `Ψ₁[l-1]`.
#[derive(Clone, Debug)]
pub struct DtStep {
    pub h: Mat2<DualC>,
    pub lambda: Mat2<DualC>,
    /// `T[l]` evaluated at `λ = λ₁`.
    pub t_at_lambda1: Mat2<DualC>,
}

impl DtStep {
    pub fn new(pair: &EigenPair, lambda1: Complex) -> std::result::Result<Self, AlgebraError> {
        let (psi, phi) = (pair.psi, pair.phi);
        let h = Mat2::new(psi, phi.conj(), phi, -psi.conj());
        let lambda = Mat2::diag(DualC::constant(lambda1), DualC::constant(lambda1.conj()));
        let h_inv = mat2_inv(&h)?;
        let conj = &(&h * &lambda) * &h_inv;
        let t_at_lambda1 = Mat2::identity_like(&psi).scale(&DualC::constant(lambda1)) - conj;
        Ok(DtStep {
            h,
            lambda,
            t_at_lambda1,
        })
    }

    /// `|T₁ Ψ| / (|T₁| |Ψ|)`, the relative defect of the kernel identity.
    pub fn kernel_residual(&self, pair: &EigenPair) -> f64 {
        let v = self.t_at_lambda1.apply(&[pair.psi, pair.phi]);
        let out = (v[0].val.norm_sqr() + v[1].val.norm_sqr()).sqrt();
        let t_norm = self
            .t_at_lambda1
            .m
            .iter()
            .flatten()
            .map(|e| e.val.norm())
            .fold(0.0, f64::max);
        out / (t_norm * pair.norm_sqr().sqrt())
    }
}

fn denominator(psi: DualC, phi: DualC) -> Result<(DualC, DualC, DualC)> {
    let (np, nq) = (psi.norm_sqr(), phi.norm_sqr());
    let d = np + nq;
    if d.val.re.is_nan() || d.val.re < f64::MIN_POSITIVE || !d.val.re.is_finite() {
        return Err(Error::ZeroEigenfunction);
    }
    Ok((np, nq, d))
}

/// `A_next = A_prev - 4i(λ-λ*) ψφ*/(|ψ|²+|φ|²)`, derivative by the quotient rule.
pub fn dt_update_a(a_prev: DualC, lambda: Complex, psi: DualC, phi: DualC) -> Result<DualC> {
    let (_, _, d) = denominator(psi, phi)?;
    let k = -I * 4.0 * (lambda - lambda.conj());
    Ok(a_prev + (psi * phi.conj() / d).scale(k))
}

/// `B_next = B_prev - 4i(λ-λ*) [|ψ|²(|φ|²)_t - |φ|²(|ψ|²)_t]/(|ψ|²+|φ|²)²`.
pub fn dt_update_b(b_prev: f64, lambda: Complex, psi: DualC, phi: DualC) -> Result<f64> {
    let (np, nq, d) = denominator(psi, phi)?;
    let k = -I * 4.0 * (lambda - lambda.conj());
    let num = np.val.re * nq.dt.re - nq.val.re * np.dt.re;
    let raw = k * (num / (d.val.re * d.val.re));
    if raw.im.abs() > B_IMAG_TOL * raw.re.abs().max(1.0) {
        return Err(Error::Consistency(format!(
            "B update has imaginary residue {}",
            raw.im
        )));
    }
    Ok(b_prev + raw.re)
}

/// One classical Darboux step at an arbitrary spectral parameter.
///
/// A real `λ` makes the update vanish; the inputs are returned unchanged.
pub fn classical_dt_step(
    a_prev: DualC,
    b_prev: f64,
    lambda: Complex,
    eig: &EigenPair,
) -> Result<(DualC, f64)> {
    if lambda.im == 0.0 {
        warn!("classical DT step at real λ = {lambda} is the identity");
        return Ok((a_prev, b_prev));
    }
    Ok((
        dt_update_a(a_prev, lambda, eig.psi, eig.phi)?,
        dt_update_b(b_prev, lambda, eig.psi, eig.phi)?,
    ))
}

/// Everything the chain computed at one point.
#[derive(Clone, Debug)]
pub struct DtTrace {
    /// Levels `0..=N`.
    pub samples: Vec<SolutionSample>,
    /// `Ψ₁[l-1]` used at level `l`, `l = 1..=N`.
    pub pairs: Vec<EigenPair>,
    /// Step matrices for `l = 1..=N`.
    pub steps: Vec<DtStep>,
    /// Largest coefficient of `f^{2j}`, `j < l-1`, left in the level-`l`
    /// product, relative to the extracted coefficient. Zero analytically.
    pub limit_defects: Vec<f64>,
}

/// Runs the generalized Darboux chain at `(x, t)` and returns all levels.
pub fn generalized_dt_point(cfg: &SeedConfig, x: f64, t: f64) -> Result<Vec<SolutionSample>> {
    Ok(generalized_dt_trace(cfg, x, t)?.samples)
}

pub fn generalized_dt_trace(cfg: &SeedConfig, x: f64, t: f64) -> Result<DtTrace> {
    let (psi, phi) = eigenfunction_jet(cfg, x, t)?;
    generalized_dt_from_jets(cfg, x, t, psi, phi)
}

/// Runs the chain from given eigenfunction jets (even in `f`, starting at
/// `f⁰`). Used directly to check invariance under rescaling of the jets.
pub fn generalized_dt_from_jets(
    cfg: &SeedConfig,
    x: f64,
    t: f64,
    psi: LaurentJet,
    phi: LaurentJet,
) -> Result<DtTrace> {
    cfg.validate()?;
    let n = cfg.order;
    let lambda1 = cfg.lambda1();
    let (a0, b0) = plane_wave_seed(cfg.a, x, t);

    let mut samples = Vec::with_capacity(n + 1);
    samples.push(SolutionSample {
        a: a0,
        b: b0,
        level: 0,
    });
    let mut pairs = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n);
    let mut defects = Vec::with_capacity(n);

    let mut w = [psi, phi];
    for level in 1..=n {
        let power = 2 * (level as i32 - 1);
        let pick = |j: &LaurentJet| {
            j.coeff(power).ok_or_else(|| {
                Error::Consistency(format!(
                    "jet exhausted at level {level}: need f^{power}, have up to f^{}",
                    j.max_order()
                ))
            })
        };
        let pair = EigenPair::new(pick(&w[0])?, pick(&w[1])?);

        let scale = pair.norm_sqr().sqrt();
        let mut defect: f64 = 0.0;
        for p in (0..power).step_by(2) {
            let (u, v) = (w[0].coeff(p).unwrap(), w[1].coeff(p).unwrap());
            defect = defect.max((u.val.norm_sqr() + v.val.norm_sqr()).sqrt() / scale);
        }
        defects.push(defect);

        let ctx = |e: Error| match e {
            Error::ZeroEigenfunction => Error::DegenerateEigenfunction { x, t, level },
            other => other,
        };
        let prev = samples[level - 1];
        let a = dt_update_a(prev.a, lambda1, pair.psi, pair.phi).map_err(ctx)?;
        let b = dt_update_b(prev.b, lambda1, pair.psi, pair.phi).map_err(ctx)?;
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::Consistency(format!(
                "non-finite field at level {level} (x={x}, t={t})"
            )));
        }
        samples.push(SolutionSample { a, b, level });

        let step = DtStep::new(&pair, lambda1).map_err(|_| Error::SingularH { x, t, level })?;
        if level < n {
            let k = w[0].truncation();
            let lift = |e: &DualC| LaurentJet::constant(*e, k);
            let f2 = LaurentJet::monomial(2, k);
            let t_jet = step.t_at_lambda1.map(lift) + Mat2::diag(f2.clone(), f2);
            w = t_jet.apply(&w);
        }
        pairs.push(pair);
        steps.push(step);
    }

    Ok(DtTrace {
        samples,
        pairs,
        steps,
        limit_defects: defects,
    })
}
