use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::normal_form::{normal_form_even, normal_form_odd, NormalFormEven, NormalFormOdd};
use super::polymat::{integrability_check, proportionality_decompose, DegreeProfile, PolyMat2, Proportionality};
use super::HopfError;
use crate::arith::{FieldElem, Gaussian, Mat2};

/// Point `[α : β]` of ℙ¹, first nonzero coordinate equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, JsonSchema)]
pub struct ProjPair {
    pub alpha: Gaussian,
    pub beta: Gaussian,
}

impl ProjPair {
    pub fn new(alpha: Gaussian, beta: Gaussian) -> Self {
        ProjPair { alpha, beta }.normalized()
    }

    pub fn normalized(&self) -> Self {
        let pivot = if self.alpha.is_zero() { &self.beta } else { &self.alpha };
        let inv = pivot.inv().expect("[0 : 0] is not a projective point");
        ProjPair {
            alpha: &self.alpha * &inv,
            beta: &self.beta * &inv,
        }
    }
}

/// Coordinates on `Z₁`: `(t′, s′, v′)` with `w·(4t′v′ − s′²) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ModuliPointEven {
    pub t_sq: FieldElem,
    pub s_p: FieldElem,
    pub v_p: FieldElem,
    pub scale: ProjPair,
}

impl ModuliPointEven {
    pub fn unit_w(&self) -> Option<FieldElem> {
        let four = FieldElem::from_int(4);
        (&four * &self.t_sq * &self.v_p - &self.s_p * &self.s_p).inv()
    }

    /// `(t′, s′, v′, w)`, matching [`Z1`]'s affine coordinates.
    pub fn affine_coordinates(&self) -> Vec<FieldElem> {
        let w = self.unit_w().expect("stable point has 4t'v' != s'^2");
        vec![self.t_sq.clone(), self.s_p.clone(), self.v_p.clone(), w]
    }
}

/// Coordinates on `Z₂`: the quadratic form `b₁x² + b₂xy + b₃y²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ModuliPointOdd {
    pub b1: Gaussian,
    pub b2: Gaussian,
    pub b3: Gaussian,
    pub scale: ProjPair,
}

impl ModuliPointOdd {
    pub fn affine_coordinates(&self) -> Vec<Gaussian> {
        vec![self.b1.clone(), self.b2.clone(), self.b3.clone()]
    }
}

/// An affine piece cut out by `equations` independent equations, times
/// `Pic(X)` and a projective line of scales.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ModuliComponent {
    pub name: String,
    pub affine_coordinates: Vec<String>,
    pub equations: usize,
    pub picard_dim: usize,
    pub projective_dim: usize,
}

impl ModuliComponent {
    pub fn dimension(&self) -> usize {
        self.affine_coordinates.len() - self.equations + self.picard_dim + self.projective_dim
    }
}

// Pic of a Hopf surface is ℂ*.
const HOPF_PICARD_DIM: usize = 1;

#[allow(non_snake_case)]
pub fn Z1() -> ModuliComponent {
    ModuliComponent {
        name: "Z1".into(),
        affine_coordinates: ["t_sq", "s_p", "v_p", "w"].map(String::from).to_vec(),
        equations: 1,
        picard_dim: HOPF_PICARD_DIM,
        projective_dim: 1,
    }
}

#[allow(non_snake_case)]
pub fn Z2() -> ModuliComponent {
    ModuliComponent {
        name: "Z2".into(),
        affine_coordinates: ["b1", "b2", "b3"].map(String::from).to_vec(),
        equations: 0,
        picard_dim: HOPF_PICARD_DIM,
        projective_dim: 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum ModuliClass {
    Z1(ModuliPointEven),
    Z2(ModuliPointOdd),
    Unstable,
    NotIntegrable,
    NotProportional,
}

/// Moduli point of the `c₂ = 0` co-Higgs field `(Φ₁, Φ₂)` on `L ⊕ L` (even
/// profile) or `L ⊕ L(−T)` (odd profile).
pub fn cohiggs_moduli_point(p1: &PolyMat2, p2: &PolyMat2) -> Result<ModuliClass, HopfError> {
    if !integrability_check(p1, p2)? {
        return Ok(ModuliClass::NotIntegrable);
    }
    let Proportionality::Proportional { phi0, scale } = proportionality_decompose(p1, p2)? else {
        return Ok(ModuliClass::NotProportional);
    };
    match phi0.profile()? {
        DegreeProfile::EVEN => {
            let coeff = |k: usize| {
                let e = |p: &crate::arith::HomPoly| FieldElem::base(p.coeffs()[k].clone());
                Mat2::new(e(phi0.a()), e(phi0.b()), e(phi0.c()), -e(phi0.a()))
            };
            match normal_form_even(&coeff(0), &coeff(1))? {
                NormalFormEven::Stable(nf) => Ok(ModuliClass::Z1(ModuliPointEven {
                    t_sq: nf.t_sq,
                    s_p: nf.s_p,
                    v_p: nf.v_p,
                    scale,
                })),
                NormalFormEven::Unstable { .. } => Ok(ModuliClass::Unstable),
            }
        }
        DegreeProfile::ODD => {
            match normal_form_odd(phi0.a(), phi0.b(), &phi0.c().coeffs()[0])? {
                NormalFormOdd::Stable { b1, b2, b3 } => {
                    Ok(ModuliClass::Z2(ModuliPointOdd { b1, b2, b3, scale }))
                }
                NormalFormOdd::Unstable => Ok(ModuliClass::Unstable),
            }
        }
        other => Err(HopfError::DegreeMismatch(format!(
            "profile {other:?} is neither of the c2 = 0 shapes"
        ))),
    }
}
