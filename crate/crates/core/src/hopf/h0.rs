use num_traits::{One, Zero};
use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::HopfError;
use crate::arith::rational::{int, rat, Rational};
use crate::invariants::H0Value;
use crate::json::RationalRepr;
use crate::surface::{degree, LineBundleX, SurfaceSpec};

/// Filtrable bundle on a Hopf surface, through the data that controls
/// `h⁰(End₀E(T))`: `m = deg(K₁ ⊗ K₂ ⊗ det E⁻¹)` for the maximal destabilising
/// bundles, and `π_*(K₁⁻¹ ⊗ E) = O ⊕ O(−ℓ)` when `E` is not regular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct HopfBundleDesc {
    pub regular_generic_fibre: bool,
    #[serde(default)]
    pub extension_of_line_bundles: bool,
    pub c2: i64,
    pub m: i64,
    #[serde(default)]
    pub ell: i64,
}

pub fn h0_end0_twisted(desc: &HopfBundleDesc) -> Result<H0Value, HopfError> {
    let HopfBundleDesc { c2, m, ell, .. } = *desc;
    if c2 < 0 {
        return Err(HopfError::PreconditionViolated(format!(
            "filtrable bundles on a Hopf surface have c2 >= 0, got {c2}"
        )));
    }
    if desc.regular_generic_fibre {
        return Ok(H0Value::exact((m + 2).max(0)));
    }
    if ell < 0 || m > ell {
        return Err(HopfError::InconsistentCase(format!(
            "non-regular bundle needs 0 <= m <= ell, got m = {m}, ell = {ell}"
        )));
    }
    if desc.extension_of_line_bundles != (c2 == 0) {
        return Err(HopfError::InconsistentCase(
            "non-regular bundles split as line bundles exactly when c2 = 0".into(),
        ));
    }
    if c2 == 0 {
        if m != ell {
            return Err(HopfError::InconsistentCase(format!(
                "c2 = 0 forces m = ell, got m = {m}, ell = {ell}"
            )));
        }
        Ok(H0Value::exact(6.max(m + 4)))
    } else {
        if m >= ell {
            return Err(HopfError::InconsistentCase(format!(
                "c2 > 0 forces m < ell, got m = {m}, ell = {ell}"
            )));
        }
        Ok(H0Value::exact((m + 2).max(0) + (m - ell + 2).max(0)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum SplitShape {
    /// `E = L ⊕ L`
    KplusK,
    /// `E = L ⊕ L(−T)`
    KplusKminusT,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct PairDesc {
    pub filtrable: bool,
    pub c2: i64,
    pub phi_nonzero: bool,
    pub e_stable: bool,
    pub shape: SplitShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum PairVerdict {
    /// Non-filtrable: the zero field is the only trace-free co-Higgs field.
    OnlyZeroHiggs,
    StablePair,
    UnstablePair,
    /// `c₂ = 0` and `E` has one of the two shapes carrying stable fields.
    StableHiggsExist,
    NoStableHiggs,
}

pub fn classify_pair(d: &PairDesc) -> Result<PairVerdict, HopfError> {
    if !d.filtrable {
        return Ok(PairVerdict::OnlyZeroHiggs);
    }
    if d.c2 < 0 {
        return Err(HopfError::PreconditionViolated(format!(
            "filtrable bundles on a Hopf surface have c2 >= 0, got {}",
            d.c2
        )));
    }
    let by_bundle = if d.e_stable {
        PairVerdict::StablePair
    } else {
        PairVerdict::UnstablePair
    };
    if d.c2 > 0 || !d.phi_nonzero {
        return Ok(by_bundle);
    }
    Ok(match d.shape {
        SplitShape::KplusK | SplitShape::KplusKminusT => PairVerdict::StableHiggsExist,
        SplitShape::Other => PairVerdict::NoStableHiggs,
    })
}

/// Stable bundle with `c₂ > 0` carrying a two-dimensional family of
/// integrable co-Higgs fields: an elementary modification of `L₁ ⊕ L₂` along
/// a fibre `T` by a degree-`c₂` line bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct StableExample {
    pub l1: LineBundleX,
    pub l2: LineBundleX,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub deg_l1: Rational,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub deg_l2: Rational,
    pub det: LineBundleX,
    pub c2: i64,
    pub deg_lambda: i64,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub slope: Rational,
    pub m: i64,
    pub regular_generic_fibre: bool,
    pub stable: bool,
    pub h0_end0_twisted: H0Value,
    pub cohiggs_dim: u64,
}

pub fn construct_stable_example(c2: i64) -> Result<StableExample, HopfError> {
    if c2 < 1 {
        return Err(HopfError::PreconditionViolated(format!(
            "the construction needs a jump, so c2 >= 1; got {c2}"
        )));
    }
    let spec = SurfaceSpec::hopf();
    let l1 = LineBundleX::new(0, Rational::zero(), 0, 0);
    let l2 = LineBundleX::new(0, rat(1, 2), 0, 0);
    let (d1, d2) = (degree(&l1, &spec), degree(&l2, &spec));
    let fibre = degree(&LineBundleX::pullback(1), &spec);
    debug_assert!(-Rational::one() < &d1 - &d2 && &d1 - &d2 < Rational::one());

    let det = l1.tensor(&l2).expect("torsion").twist_pullback(-1);
    let slope = degree(&det, &spec) / int(2);
    let sub1 = &d1 - &fibre;
    let sub2 = &d2 - &fibre;
    let stable = sub1 < slope && sub2 < slope;
    let m_rat = &sub1 + &sub2 - degree(&det, &spec);
    assert!(m_rat.is_integer());
    let m: i64 = m_rat.to_integer().try_into().expect("small");
    // fibre restrictions of L_a differ unless the exponents differ by an integer
    let regular = !(&l1.q - &l2.q).is_integer();
    let h0 = h0_end0_twisted(&HopfBundleDesc {
        regular_generic_fibre: regular,
        extension_of_line_bundles: false,
        c2,
        m,
        ell: 0,
    })?;
    // H⁰(T_X) is two-dimensional, T_X = O(T) ⊕ O(T)
    let cohiggs_dim = 2 * h0.value().expect("regular case is exact");
    Ok(StableExample {
        l1,
        l2,
        deg_l1: d1,
        deg_l2: d2,
        det,
        c2,
        deg_lambda: c2,
        slope,
        m,
        regular_generic_fibre: regular,
        stable,
        h0_end0_twisted: h0,
        cohiggs_dim,
    })
}
