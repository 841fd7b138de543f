use serde::{Deserialize, Serialize};
use schemars::JsonSchema;

use super::field::{FieldElem, FieldError};
use super::gaussian::Gaussian;

pub type Vec2 = [FieldElem; 2];

/// 2×2 matrix over the field tower, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, JsonSchema)]
#[serde(transparent)]
pub struct Mat2(pub [[FieldElem; 2]; 2]);

impl Mat2 {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_gaussians(e: [[Gaussian; 2]; 2]) -> Self {
        let [[a, b], [c, d]] = e;
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_ints(e: [[i64; 2]; 2]) -> Self {
        Mat2::new(
            FieldElem::from_int(e[0][0]),
            FieldElem::from_int(e[0][1]),
            FieldElem::from_int(e[1][0]),
            FieldElem::from_int(e[1][1]),
        )
    }

    pub fn zero() -> Self {
        Mat2::from_ints([[0, 0], [0, 0]])
    }

    pub fn identity() -> Self {
        Mat2::from_ints([[1, 0], [0, 1]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElem {
        &self.0[i][j]
    }

    pub fn entries(&self) -> impl Iterator<Item = &FieldElem> {
        self.0.iter().flatten()
    }

    pub fn extension(&self) -> Result<Option<Gaussian>, FieldError> {
        FieldElem::common_extension(self.entries())
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(FieldElem::is_zero)
    }

    pub fn trace(&self) -> FieldElem {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn is_trace_free(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn det(&self) -> FieldElem {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }

    pub fn add(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.0[i][j] + &o.0[i][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.0[i][j] - &o.0[i][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let e = |i: usize, j: usize| c * &self.0[i][j];
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn inverse(&self) -> Option<Self> {
        let di = self.det().inv()?;
        let [[a, b], [c, d]] = &self.0;
        Some(Mat2::new(d.clone(), -b, -c, a.clone()).scale(&di))
    }

    /// `P·self·P⁻¹`.
    pub fn conjugate_by(&self, p: &Mat2, p_inv: &Mat2) -> Self {
        p.mul(self).mul(p_inv)
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        [
            &self.0[0][0] * &v[0] + &self.0[0][1] * &v[1],
            &self.0[1][0] * &v[0] + &self.0[1][1] * &v[1],
        ]
    }
}

/// `det[v w]`, zero iff the vectors are parallel.
pub fn wedge(v: &Vec2, w: &Vec2) -> FieldElem {
    &v[0] * &w[1] - &v[1] * &w[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det() {
        let m = Mat2::from_ints([[2, 1], [1, 1]]);
        assert_eq!(m.det(), FieldElem::one());
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat2::identity());
        assert!(Mat2::from_ints([[1, 2], [2, 4]]).inverse().is_none());
    }

    #[test]
    fn commutator_of_pauli_pair() {
        let a = Mat2::from_ints([[1, 0], [0, -1]]);
        let b = Mat2::from_ints([[0, 1], [1, 0]]);
        assert_eq!(a.commutator(&b), Mat2::from_ints([[0, 2], [-2, 0]]));
    }
}
