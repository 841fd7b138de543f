//! Discriminant, filtrability threshold, existence ranges, h⁰ of line bundles
//! on curves, and the twist gates that rule out non-trivial stable pairs.

use num_traits::Signed;
use schemars::JsonSchema;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::rational::{rat, Rational};
use crate::json::RationalRepr;
use crate::surface::LineBundleX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("negative genus {0}")]
    NegativeGenus(i64),
    #[error("conflicting flags: {0}")]
    ConflictingFlags(String),
}

/// `Δ = c₂/2 + n_δ/4`, the rank-2 discriminant `(4c₂ − c₁²)/8` with `c₁² = −2n_δ`.
pub fn discriminant(c2: i64, delta: &LineBundleX) -> Rational {
    rat(c2, 2) + m_invariant(delta)
}

/// Filtrability threshold `m(2, δ) = n_δ/4`.
pub fn m_invariant(delta: &LineBundleX) -> Rational {
    rat(delta.n_delta as i64, 4)
}

/// Existence threshold `−e_δ/4`.
pub fn existence_floor(delta: &LineBundleX) -> Rational {
    rat(-delta.e_inv, 4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct RangeVerdict {
    pub exists: bool,
    pub filtrable_exists: bool,
    pub in_nonfiltrable_range: bool,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub delta: Rational,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub m: Rational,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub floor: Rational,
}

pub fn classify_range(c2: i64, delta: &LineBundleX) -> RangeVerdict {
    let d = discriminant(c2, delta);
    let m = m_invariant(delta);
    let floor = existence_floor(delta);
    let exists = d >= floor;
    let filtrable_exists = d >= m;
    RangeVerdict {
        exists,
        filtrable_exists,
        in_nonfiltrable_range: exists && !filtrable_exists,
        delta: d,
        m,
        floor,
    }
}

/// Dimension of a space of sections, possibly only bounded.
///
/// `Interval.hi = None` means no upper bound is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum H0Value {
    Exact { value: u64 },
    Interval { lo: u64, hi: Option<u64> },
    Undecidable,
}

impl H0Value {
    pub fn exact(v: i64) -> Self {
        H0Value::Exact {
            value: v.max(0) as u64,
        }
    }

    pub fn value(&self) -> Option<u64> {
        match self {
            H0Value::Exact { value } => Some(*value),
            _ => None,
        }
    }

    /// Certified lower bound.
    pub fn lower(&self) -> Option<u64> {
        match self {
            H0Value::Exact { value } => Some(*value),
            H0Value::Interval { lo, .. } => Some(*lo),
            H0Value::Undecidable => None,
        }
    }

    pub fn is_positive(&self) -> Option<bool> {
        match self {
            H0Value::Exact { value } => Some(*value > 0),
            H0Value::Interval { lo, hi } => {
                if *lo > 0 {
                    Some(true)
                } else if *hi == Some(0) {
                    Some(false)
                } else {
                    None
                }
            }
            H0Value::Undecidable => None,
        }
    }

    /// Turns an answer into a lower bound with unknown upper end.
    pub fn at_least(&self) -> Self {
        match self.lower() {
            Some(lo) => H0Value::Interval { lo, hi: None },
            None => H0Value::Undecidable,
        }
    }
}

/// Side conditions on a line bundle `V` of degree `deg` on a genus-`g` curve.
/// Absent flags are unknown.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct H0Flags {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_trivial: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_canonical: Option<bool>,
    /// `V ≅ O(b)` for a point `b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub is_point: Option<bool>,
    /// `V ≅ K(−b)` for a point `b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_minus_point: Option<bool>,
    /// `V` is general in its degree (Brill–Noether general).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic: Option<bool>,
}

impl H0Flags {
    pub fn trivial() -> Self {
        H0Flags {
            is_trivial: Some(true),
            ..Default::default()
        }
    }

    pub fn canonical() -> Self {
        H0Flags {
            is_canonical: Some(true),
            ..Default::default()
        }
    }

    pub fn canonical_minus_point() -> Self {
        H0Flags {
            canonical_minus_point: Some(true),
            ..Default::default()
        }
    }

    pub fn generic() -> Self {
        H0Flags {
            generic: Some(true),
            ..Default::default()
        }
    }

    /// Flags describing `K ⊗ V⁻¹`.
    pub fn serre_dual(&self) -> Self {
        H0Flags {
            is_trivial: self.is_canonical,
            is_canonical: self.is_trivial,
            is_point: self.canonical_minus_point,
            canonical_minus_point: self.is_point,
            generic: self.generic,
        }
    }
}

fn check_flags(deg: i64, g: i64, f: &H0Flags) -> Result<(), InvariantsError> {
    let wrong = |name: &str, want: i64| -> Result<(), InvariantsError> {
        Err(InvariantsError::ConflictingFlags(format!(
            "{name} needs degree {want}, got {deg}"
        )))
    };
    if f.is_trivial == Some(true) && deg != 0 {
        return wrong("is_trivial", 0);
    }
    if f.is_canonical == Some(true) && deg != 2 * g - 2 {
        return wrong("is_canonical", 2 * g - 2);
    }
    if f.is_point == Some(true) && deg != 1 {
        return wrong("is_point", 1);
    }
    if f.canonical_minus_point == Some(true) && deg != 2 * g - 3 {
        return wrong("canonical_minus_point", 2 * g - 3);
    }
    let special = [f.is_trivial, f.is_canonical, f.is_point, f.canonical_minus_point]
        .iter()
        .any(|x| *x == Some(true));
    if special && f.generic == Some(true) && g > 0 {
        return Err(InvariantsError::ConflictingFlags(
            "generic together with a special flag".into(),
        ));
    }
    if g == 0 && deg == 0 && f.is_trivial == Some(false) {
        return Err(InvariantsError::ConflictingFlags(
            "every degree-0 bundle on P^1 is trivial".into(),
        ));
    }
    if g == 1 && f.is_trivial.zip(f.is_canonical).is_some_and(|(t, c)| t != c) {
        return Err(InvariantsError::ConflictingFlags(
            "on an elliptic curve K is trivial".into(),
        ));
    }
    Ok(())
}

/// `h⁰(B, V)` for a line bundle of degree `deg` on a curve of genus `g`,
/// by Riemann–Roch, Serre duality and the supplied side conditions.
pub fn h0_curve(deg: i64, g: i64, flags: &H0Flags) -> Result<H0Value, InvariantsError> {
    if g < 0 {
        return Err(InvariantsError::NegativeGenus(g));
    }
    check_flags(deg, g, flags)?;
    let chi = deg + 1 - g;
    if deg < 0 {
        return Ok(H0Value::exact(0));
    }
    if deg > 2 * g - 2 {
        return Ok(H0Value::exact(chi));
    }
    if deg == 0 {
        let trivial = flags
            .is_trivial
            .or(flags.is_canonical.filter(|_| g == 1))
            .or((g == 0).then_some(true))
            .or(flags.generic.filter(|&x| x).map(|_| false));
        return Ok(match trivial {
            Some(t) => H0Value::exact(t as i64),
            None => H0Value::Undecidable,
        });
    }
    if deg == 2 * g - 2 {
        let canonical = flags
            .is_canonical
            .or(flags.generic.filter(|&x| x).map(|_| false));
        return Ok(match canonical {
            Some(true) => H0Value::exact(g),
            Some(false) => H0Value::exact(g - 1),
            None => H0Value::Undecidable,
        });
    }
    // 0 < deg < 2g − 2, so g ≥ 2
    if flags.is_point == Some(true) {
        return Ok(H0Value::exact(1));
    }
    if flags.canonical_minus_point == Some(true) {
        return Ok(H0Value::exact(g - 1));
    }
    if flags.generic == Some(true) {
        return Ok(H0Value::exact(chi.max(0)));
    }
    if g == 2 {
        // deg = 1: effective exactly when V is a point class
        if let Some(p) = flags.is_point {
            return Ok(H0Value::exact(p as i64));
        }
    }
    Ok(H0Value::Interval {
        lo: chi.max(0) as u64,
        hi: Some((deg / 2 + 1) as u64),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum Twist {
    LineBundle {
        #[serde(with = "crate::json::rational")]
        #[schemars(with = "RationalRepr")]
        deg: Rational,
        #[serde(default)]
        trivial: bool,
    },
    Tangent,
    Cotangent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum GateVerdict {
    NoStablePairs,
    OnlyScalarFields,
    Possible,
}

/// Whether stable pairs `(E, φ: E → E ⊗ V)` with non-scalar `φ` can exist.
pub fn twist_gate(twist: &Twist, genus: i64) -> GateVerdict {
    match twist {
        Twist::LineBundle { deg, trivial } => {
            if deg.is_negative() {
                GateVerdict::NoStablePairs
            } else if *trivial {
                GateVerdict::OnlyScalarFields
            } else {
                GateVerdict::Possible
            }
        }
        Twist::Tangent if genus == 0 => GateVerdict::Possible,
        Twist::Tangent => GateVerdict::NoStablePairs,
        Twist::Cotangent if genus >= 2 => GateVerdict::Possible,
        Twist::Cotangent => GateVerdict::NoStablePairs,
    }
}

/// `3(g − 1)`: sections of `End₀F ⊗ K` for a stable rank-2 `F`.
pub fn end0_canonical_h0(g: i64) -> i64 {
    3 * (g - 1)
}
