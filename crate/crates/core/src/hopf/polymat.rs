use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::moduli::ProjPair;
use super::HopfError;
use crate::arith::{Gaussian, HomPoly};

/// Trace-free 2×2 matrix `[[a, b], [c, −a]]` of binary forms, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(transparent)]
pub struct PolyMat2(pub [[HomPoly; 2]; 2]);

/// Degrees of the entries `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct DegreeProfile {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl DegreeProfile {
    /// `φ₀ ∈ H⁰(End₀(L ⊕ L)(T))`.
    pub const EVEN: DegreeProfile = DegreeProfile { a: 1, b: 1, c: 1 };
    /// `φ₀ ∈ H⁰(End₀(L ⊕ L(−T))(T))`.
    pub const ODD: DegreeProfile = DegreeProfile { a: 1, b: 2, c: 0 };
}

impl PolyMat2 {
    pub fn new(a: HomPoly, b: HomPoly, c: HomPoly) -> Self {
        let d = a.neg();
        PolyMat2([[a, b], [c, d]])
    }

    pub fn a(&self) -> &HomPoly {
        &self.0[0][0]
    }

    pub fn b(&self) -> &HomPoly {
        &self.0[0][1]
    }

    pub fn c(&self) -> &HomPoly {
        &self.0[1][0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(HomPoly::is_zero)
    }

    pub fn scale(&self, k: &Gaussian) -> Self {
        PolyMat2::new(self.a().scale(k), self.b().scale(k), self.c().scale(k))
    }

    /// Checks trace-freeness and that the entries come from one twisted
    /// endomorphism bundle: `deg b + deg c = 2 deg a`.
    pub fn profile(&self) -> Result<DegreeProfile, HopfError> {
        let [[a, b], [c, d]] = &self.0;
        if a.degree() != d.degree() {
            return Err(HopfError::DegreeMismatch(
                "diagonal entries differ in degree".into(),
            ));
        }
        if a.add(d).is_some_and(|t| !t.is_zero()) {
            return Err(HopfError::NotTraceFree);
        }
        if b.degree() + c.degree() != 2 * a.degree() {
            return Err(HopfError::DegreeMismatch(format!(
                "off-diagonal degrees {} + {} do not equal 2 x {}",
                b.degree(),
                c.degree(),
                a.degree()
            )));
        }
        Ok(DegreeProfile {
            a: a.degree(),
            b: b.degree(),
            c: c.degree(),
        })
    }

    fn coeffs(&self) -> impl Iterator<Item = &Gaussian> {
        [self.a(), self.b(), self.c()]
            .into_iter()
            .flat_map(|p| p.coeffs().iter())
    }
}

fn check_compatible(p1: &PolyMat2, p2: &PolyMat2) -> Result<DegreeProfile, HopfError> {
    let d1 = p1.profile()?;
    let d2 = p2.profile()?;
    if d1 != d2 {
        return Err(HopfError::DegreeMismatch(format!(
            "entry degrees {d1:?} vs {d2:?}"
        )));
    }
    Ok(d1)
}

/// `φ ∧ φ = 0` for `φ = (Φ₁, Φ₂)`: the cross terms `a₁b₂ − a₂b₁`,
/// `c₁a₂ − c₂a₁`, `b₁c₂ − b₂c₁` vanish identically.
pub fn integrability_check(p1: &PolyMat2, p2: &PolyMat2) -> Result<bool, HopfError> {
    check_compatible(p1, p2)?;
    let cross = |x: &HomPoly, y: &HomPoly, u: &HomPoly, w: &HomPoly| {
        x.mul(y).sub(&u.mul(w)).expect("equal degrees").is_zero()
    };
    Ok(cross(p1.a(), p2.b(), p2.a(), p1.b())
        && cross(p1.c(), p2.a(), p2.c(), p1.a())
        && cross(p1.b(), p2.c(), p2.b(), p1.c()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum Proportionality {
    Proportional { phi0: PolyMat2, scale: ProjPair },
    NotProportional,
}

/// Writes `(Φ₁, Φ₂) = (α·φ₀, β·φ₀)` with constant `α, β` when possible;
/// `φ₀` is the first nonzero component, so the scale starts with 1.
pub fn proportionality_decompose(p1: &PolyMat2, p2: &PolyMat2) -> Result<Proportionality, HopfError> {
    check_compatible(p1, p2)?;
    let (phi0, other, first) = match (p1.is_zero(), p2.is_zero()) {
        (true, true) => return Ok(Proportionality::NotProportional),
        (false, _) => (p1, p2, true),
        (true, false) => (p2, p1, false),
    };
    let (pivot, opposite) = phi0
        .coeffs()
        .zip(other.coeffs())
        .find(|(x, _)| !x.is_zero())
        .expect("nonzero matrix");
    let lambda = opposite.div(pivot).expect("nonzero pivot");
    if phi0.scale(&lambda) != *other {
        return Ok(Proportionality::NotProportional);
    }
    let scale = if first {
        ProjPair::new(Gaussian::one(), lambda)
    } else {
        ProjPair::new(lambda, Gaussian::one())
    };
    Ok(Proportionality::Proportional {
        phi0: phi0.clone(),
        scale: scale.normalized(),
    })
}
