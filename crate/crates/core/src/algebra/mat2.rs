use std::ops::{Add, Mul, Neg, Sub};

use super::{Complex, DualC, LaurentJet};
use crate::error::AlgebraError;

/// Scalar algebra a [`Mat2`] can be built over.
///
/// The `_like` constructors exist because jet scalars need a truncation
/// order taken from an existing value.
pub trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn try_recip(&self) -> Result<Self, AlgebraError>;
}

impl Scalar for Complex {
    fn zero_like(&self) -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex::new(1.0, 0.0)
    }
    fn try_recip(&self) -> Result<Self, AlgebraError> {
        if *self == Complex::new(0.0, 0.0) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.inv())
        }
    }
}

impl Scalar for DualC {
    fn zero_like(&self) -> Self {
        DualC::ZERO
    }
    fn one_like(&self) -> Self {
        DualC::ONE
    }
    fn try_recip(&self) -> Result<Self, AlgebraError> {
        if self.val == Complex::new(0.0, 0.0) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Scalar for LaurentJet {
    fn zero_like(&self) -> Self {
        LaurentJet::zero(self.truncation())
    }
    fn one_like(&self) -> Self {
        LaurentJet::constant(DualC::ONE, self.truncation())
    }
    fn try_recip(&self) -> Result<Self, AlgebraError> {
        self.recip()
    }
}

/// Row-major 2×2 matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity_like(s: &S) -> Self {
        Self::diag(s.one_like(), s.one_like())
    }

    pub fn diag(a: S, d: S) -> Self {
        let z = a.zero_like();
        Self::new(a, z.clone(), z, d)
    }

    pub fn det(&self) -> S {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    /// Adjugate, so that `M · adj(M) = det(M) · I`.
    pub fn adj(&self) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(d.clone(), -b.clone(), -c.clone(), a.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        let [[a, b], [c, d]] = &self.m;
        Self::new(
            a.clone() * s.clone(),
            b.clone() * s.clone(),
            c.clone() * s.clone(),
            d.clone() * s.clone(),
        )
    }

    pub fn apply(&self, v: &[S; 2]) -> [S; 2] {
        let [[a, b], [c, d]] = &self.m;
        [
            a.clone() * v[0].clone() + b.clone() * v[1].clone(),
            c.clone() * v[0].clone() + d.clone() * v[1].clone(),
        ]
    }

    pub fn map<T: Scalar>(&self, g: impl Fn(&S) -> T) -> Mat2<T> {
        let [[a, b], [c, d]] = &self.m;
        Mat2::new(g(a), g(b), g(c), g(d))
    }
}

/// Inverse through the adjugate; fails when the determinant is not
/// invertible in the scalar algebra.
pub fn mat2_inv<S: Scalar>(m: &Mat2<S>) -> Result<Mat2<S>, AlgebraError> {
    let inv_det = m
        .det()
        .try_recip()
        .map_err(|_| AlgebraError::SingularMatrix)?;
    Ok(m.adj().scale(&inv_det))
}

impl<S: Scalar> Add for Mat2<S> {
    type Output = Mat2<S>;
    fn add(self, rhs: Mat2<S>) -> Mat2<S> {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = rhs.m;
        Mat2::new(a + e, b + f, c + g, d + h)
    }
}

impl<S: Scalar> Sub for Mat2<S> {
    type Output = Mat2<S>;
    fn sub(self, rhs: Mat2<S>) -> Mat2<S> {
        let [[a, b], [c, d]] = self.m;
        let [[e, f], [g, h]] = rhs.m;
        Mat2::new(a - e, b - f, c - g, d - h)
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: Mat2<S>) -> Mat2<S> {
        &self * &rhs
    }
}

impl<'a, S: Scalar> Mul<&'a Mat2<S>> for &'a Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: &Mat2<S>) -> Mat2<S> {
        let [[a, b], [c, d]] = &self.m;
        let [[e, f], [g, h]] = &rhs.m;
        Mat2::new(
            a.clone() * e.clone() + b.clone() * g.clone(),
            a.clone() * f.clone() + b.clone() * h.clone(),
            c.clone() * e.clone() + d.clone() * g.clone(),
            c.clone() * f.clone() + d.clone() * h.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn max_dev(a: &Mat2<Complex>, b: &Mat2<Complex>) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((a.m[i][j] - b.m[i][j]).norm());
            }
        }
        m
    }

    #[test]
    fn inverse_of_identity() {
        let id = Mat2::identity_like(&c(0.0, 0.0));
        assert_eq!(mat2_inv(&id).unwrap(), id);
    }

    #[test]
    fn inverse_of_diagonal() {
        let l = c(-0.05, 0.5);
        let m = Mat2::diag(l, l.conj());
        let inv = mat2_inv(&m).unwrap();
        let expect = Mat2::diag(l.inv(), l.conj().inv());
        assert!(max_dev(&inv, &expect) < 1e-15);
    }

    #[test]
    fn h_pattern_determinant() {
        let (psi, phi) = (c(1.0, 0.0), c(0.0, 1.0));
        let h = Mat2::new(psi, phi.conj(), phi, -psi.conj());
        assert!((h.det() - c(-2.0, 0.0)).norm() < 1e-15);
        let prod = &h * &mat2_inv(&h).unwrap();
        assert!(max_dev(&prod, &Mat2::identity_like(&psi)) < 1e-15);
    }

    #[test]
    fn adjugate_identity() {
        let m = Mat2::new(c(1.0, 2.0), c(-0.5, 0.1), c(3.0, -1.0), c(0.2, 0.7));
        let lhs = &m * &m.adj();
        let d = m.det();
        let rhs = Mat2::diag(d, d);
        assert!(max_dev(&lhs, &rhs) < 1e-14);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = Mat2::new(c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0));
        assert_eq!(mat2_inv(&m), Err(AlgebraError::SingularMatrix));
    }

    #[test]
    fn jet_matrix_inverse() {
        // [[1, f], [f, 1]]⁻¹ = (1-f²)⁻¹ [[1, -f], [-f, 1]]
        let k = 6;
        let one = LaurentJet::constant(DualC::ONE, k);
        let f = LaurentJet::variable(k).with_range(0, k as i32);
        let m = Mat2::new(one.clone(), f.clone(), f.clone(), one.clone());
        let inv = mat2_inv(&m).unwrap();
        let prod = &m * &inv;
        for (i, row) in prod.m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                for p in 0..=e.max_order() {
                    let want = if i == j && p == 0 { 1.0 } else { 0.0 };
                    assert!((e.coeff(p).unwrap().val - c(want, 0.0)).norm() < 1e-14);
                }
            }
        }
    }
}
