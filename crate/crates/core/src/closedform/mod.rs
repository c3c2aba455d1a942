//! Explicit first- and second-order rogue waves.
//!
//! These formulas are an independent evaluation path: they never touch the
//! jet machinery, only fixed polynomials in `(x, t, a)` with the free
//! parameters `m₁`, `n₁`. The second order is composed from the level-one
//! eigenfunction `Ψ₁[1]` and a single Darboux update on top of the first
//! order; it is never expanded into one expression.

mod tables;

use crate::algebra::{Complex, DualC, I};
use crate::darboux::{dt_update_a, dt_update_b};
use crate::error::{Error, Result};
use crate::seed::{phase, rogue_lambda, root, EigenPair};

use tables::{Block, Param};

/// Powers of the evaluation variables, shared by every table lookup.
struct Vars {
    c: f64,
    m1: f64,
    n1: f64,
    a_pow: [f64; 10],
    x_pow: [f64; 5],
    t_pow: [DualC; 5],
}

impl Vars {
    fn new(a: f64, m1: f64, n1: f64, x: f64, t: f64) -> Self {
        let mut a_pow = [1.0; 10];
        for k in 1..10 {
            a_pow[k] = a_pow[k - 1] * a;
        }
        let mut x_pow = [1.0; 5];
        for k in 1..5 {
            x_pow[k] = x_pow[k - 1] * x;
        }
        let tv = DualC::variable(t);
        let mut t_pow = [DualC::ONE; 5];
        for k in 1..5 {
            t_pow[k] = t_pow[k - 1] * tv;
        }
        Vars {
            c: root(a),
            m1,
            n1,
            a_pow,
            x_pow,
            t_pow,
        }
    }

    fn eval(&self, poly: &[Block]) -> DualC {
        let mut total = DualC::ZERO;
        for block in poly {
            let mut factor = match block.param {
                Param::One => 1.0,
                Param::M1 => self.m1,
                Param::N1 => self.n1,
            };
            if block.radical {
                factor *= self.c;
            }
            if factor == 0.0 {
                continue;
            }
            let mut acc = DualC::ZERO;
            for term in block.terms {
                let coeff = Complex::new(term.re, term.im)
                    * (self.a_pow[term.a as usize] * self.x_pow[term.x as usize]);
                acc += self.t_pow[term.t as usize] * coeff;
            }
            total += acc * factor;
        }
        total
    }
}

/// `F₁, H₁, D₁, G₁` at one point, with `t`-derivatives.
#[derive(Clone, Copy, Debug)]
pub struct FirstOrderPolys {
    pub f1: DualC,
    pub h1: DualC,
    pub d1: DualC,
    pub g1: DualC,
}

pub fn first_order_polys(a: f64, x: f64, t: f64) -> FirstOrderPolys {
    let v = Vars::new(a, 0.0, 0.0, x, t);
    FirstOrderPolys {
        f1: v.eval(tables::F1),
        h1: v.eval(tables::H1),
        d1: v.eval(tables::D1),
        g1: v.eval(tables::G1),
    }
}

/// First-order rogue wave
/// `A = e^{iθ}(1 + (F₁ + iH₁)/D₁)`, `B = G₁/(√(1+a²) D₁²)`.
pub fn first_order(a: f64, x: f64, t: f64) -> (DualC, f64) {
    let p = first_order_polys(a, x, t);
    let carrier = (phase(a, x, t) * I).exp();
    let rational = (p.f1 + p.h1 * I) / p.d1;
    let amp = carrier * (rational + Complex::new(1.0, 0.0));
    let b = p.g1.val.re / (root(a) * p.d1.val.re * p.d1.val.re);
    (amp, b)
}

fn half_phases(a: f64, x: f64, t: f64) -> (DualC, DualC) {
    let half = phase(a, x, t) * (I * 0.5);
    (half.exp(), (-half).exp())
}

/// `Ψ₁^{[0]}`, the seed eigenfunction at `λ₁`.
pub fn psi0_closed(a: f64, x: f64, t: f64) -> EigenPair {
    let v = Vars::new(a, 0.0, 0.0, x, t);
    let (gp, gm) = half_phases(a, x, t);
    let pref = Complex::new(std::f64::consts::SQRT_2, 0.0) / ((I - a) * (2.0 * root(a)));
    EigenPair::new(
        v.eval(tables::P10) * gp * (-pref),
        v.eval(tables::P20) * gm * pref,
    )
}

/// `Ψ₁^{[1]}`, the `f²` coefficient of the seed eigenfunction.
pub fn psi1_bracket_closed(a: f64, m1: f64, n1: f64, x: f64, t: f64) -> EigenPair {
    let parts = second_order_parts(a, m1, n1, x, t);
    let (gp, gm) = half_phases(a, x, t);
    let ia = I - a;
    let pref = Complex::new(std::f64::consts::SQRT_2, std::f64::consts::SQRT_2)
        / (ia * ia * ia * (12.0 * (1.0 + a * a).powf(1.5)));
    EigenPair::new(parts.p1_1 * gp * pref, parts.p2_1 * gm * (-pref))
}

/// Polynomial pieces of the second-order solution at one point.
#[derive(Clone, Copy, Debug)]
pub struct SecondOrderParts {
    pub rho1: DualC,
    pub rho2: DualC,
    pub p1_1: DualC,
    pub p2_1: DualC,
    pub m1: f64,
    pub n1: f64,
}

pub fn second_order_parts(a: f64, m1: f64, n1: f64, x: f64, t: f64) -> SecondOrderParts {
    let v = Vars::new(a, m1, n1, x, t);
    SecondOrderParts {
        rho1: v.eval(tables::RHO1),
        rho2: v.eval(tables::RHO2),
        p1_1: v.eval(tables::P11),
        p2_1: v.eval(tables::P21),
        m1,
        n1,
    }
}

/// `Ψ₁[1]`, the eigenfunction of the first-order Lax pair at `λ₁`, from
/// `ρ₁`, `ρ₂` and `D₁`.
pub fn psi1_level1_closed(a: f64, m1: f64, n1: f64, x: f64, t: f64) -> EigenPair {
    let parts = second_order_parts(a, m1, n1, x, t);
    let d1 = first_order_polys(a, x, t).d1;
    let (gp, gm) = half_phases(a, x, t);
    let ia = I - a;
    let pref = Complex::new(-std::f64::consts::SQRT_2, std::f64::consts::SQRT_2)
        / (ia * ia * (6.0 * (1.0 + a * a).powf(1.5)));
    let scale = d1.recip() * pref;
    EigenPair::new(parts.rho1 * scale * gp, parts.rho2 * scale * gm)
}

/// Second-order rogue wave: one Darboux update with `Ψ₁[1]` applied to the
/// first-order fields.
pub fn second_order(a: f64, m1: f64, n1: f64, x: f64, t: f64) -> Result<(DualC, f64)> {
    let (a1, b1) = first_order(a, x, t);
    let pair = psi1_level1_closed(a, m1, n1, x, t);
    let lambda1 = rogue_lambda(a);
    let ctx = |e: Error| match e {
        Error::ZeroEigenfunction => Error::DegenerateEigenfunction { x, t, level: 2 },
        other => other,
    };
    let a2 = dt_update_a(a1, lambda1, pair.psi, pair.phi).map_err(ctx)?;
    let b2 = dt_update_b(b1, lambda1, pair.psi, pair.phi).map_err(ctx)?;
    Ok((a2, b2))
}
