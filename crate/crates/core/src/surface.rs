//! Principal elliptic surfaces `X → B` and degrees of their torsion line bundles.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use schemars::JsonSchema;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::rational::{floor_int, int, Rational};
use crate::json::RationalRepr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("d = 0 describes a Kähler surface")]
    KaehlerCase,
    #[error("negative base genus {0}")]
    NegativeGenus(i64),
    #[error("negative twist degree {0}")]
    NegativeTwist(i64),
    #[error("tau_log must be positive")]
    NonPositiveTauLog,
    #[error("e-invariant {e_inv} outside [-{g}, 0]")]
    EInvOutOfRange { e_inv: i64, g: i64 },
    #[error("n_delta = {n_delta} is impossible on a genus-{g} base")]
    NDeltaImpossible { n_delta: u32, g: i64 },
    #[error("tensor factor must have n_delta = 0")]
    NotTorsion,
}

/// Surface `X = Θ*/(τ)` over a genus-`g` curve, `d = c₁(Θ)`, `tau_log = ln|τ|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct SurfaceSpec {
    pub g: i64,
    pub d: i64,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub tau_log: Rational,
}

impl SurfaceSpec {
    pub fn new(g: i64, d: i64, tau_log: Rational) -> Self {
        SurfaceSpec { g, d, tau_log }
    }

    pub fn hopf() -> Self {
        SurfaceSpec::new(0, 1, int(1))
    }
}

/// Line bundle `π*H ⊗ L_a` with `c₁(H) = h_deg` and `|a| = |τ|^q`.
///
/// `phase` is an opaque label for the unit part of `a`; it never enters a
/// degree and is ignored by `==` (see [`LineBundleX::eq_with_phase`]).
#[derive(Debug, Clone, Serialize, Deserialize, JsonSchema)]
pub struct LineBundleX {
    pub h_deg: i64,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub q: Rational,
    #[serde(default)]
    pub n_delta: u32,
    #[serde(default)]
    pub e_inv: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<String>,
}

impl PartialEq for LineBundleX {
    fn eq(&self, o: &Self) -> bool {
        self.h_deg == o.h_deg && self.q == o.q && self.n_delta == o.n_delta && self.e_inv == o.e_inv
    }
}

impl Eq for LineBundleX {}

impl LineBundleX {
    pub fn new(h_deg: i64, q: Rational, n_delta: u32, e_inv: i64) -> Self {
        LineBundleX {
            h_deg,
            q,
            n_delta,
            e_inv,
            phase: None,
        }
    }

    /// Pullback `π*H` of a degree-`h` bundle on the base.
    pub fn pullback(h: i64) -> Self {
        LineBundleX::new(h, Rational::zero(), 0, 0)
    }

    pub fn eq_with_phase(&self, o: &Self) -> bool {
        self == o && self.phase == o.phase
    }

    /// Tensor product with a bundle whose Chern class is torsion.
    pub fn tensor(&self, o: &Self) -> Result<Self, SurfaceError> {
        if o.n_delta != 0 {
            return Err(SurfaceError::NotTorsion);
        }
        Ok(LineBundleX {
            h_deg: self.h_deg + o.h_deg,
            q: &self.q + &o.q,
            n_delta: self.n_delta,
            e_inv: self.e_inv,
            phase: None,
        })
    }

    /// Twist by `π*O_B(k·b)` for a point `b`.
    pub fn twist_pullback(&self, k: i64) -> Self {
        LineBundleX {
            h_deg: self.h_deg + k,
            ..self.clone()
        }
    }
}

pub fn validate_surface(spec: &SurfaceSpec) -> Result<SurfaceSpec, SurfaceError> {
    if spec.g < 0 {
        return Err(SurfaceError::NegativeGenus(spec.g));
    }
    if spec.d == 0 {
        return Err(SurfaceError::KaehlerCase);
    }
    if spec.d < 0 {
        return Err(SurfaceError::NegativeTwist(spec.d));
    }
    if !spec.tau_log.is_positive() {
        return Err(SurfaceError::NonPositiveTauLog);
    }
    Ok(spec.clone())
}

/// Checks the determinant data against the base genus: `−g ≤ e ≤ 0`, no
/// non-constant map from ℙ¹ to an elliptic curve, and no degree-1 map from a
/// curve of genus ≥ 2.
pub fn validate_line_bundle(l: &LineBundleX, g: i64) -> Result<(), SurfaceError> {
    if g < 0 {
        return Err(SurfaceError::NegativeGenus(g));
    }
    if l.e_inv > 0 || l.e_inv < -g {
        return Err(SurfaceError::EInvOutOfRange { e_inv: l.e_inv, g });
    }
    let impossible = (g == 0 && l.n_delta != 0) || (g >= 2 && l.n_delta == 1);
    if impossible {
        return Err(SurfaceError::NDeltaImpossible {
            n_delta: l.n_delta,
            g,
        });
    }
    Ok(())
}

/// Representative with `q ∈ [0, 1)` under `(h, q) ~ (h + d, q + 1)`.
pub fn canonicalize(l: &LineBundleX, spec: &SurfaceSpec) -> LineBundleX {
    let k = floor_int(&l.q);
    let shift: i64 = (&k * BigInt::from(spec.d))
        .try_into()
        .expect("canonical shift fits in i64");
    LineBundleX {
        h_deg: l.h_deg - shift,
        q: &l.q - Rational::from_integer(k),
        ..l.clone()
    }
}

/// `deg L = c₁(H) − d·ln|a| / ln|τ| = h_deg − d·q`.
pub fn degree(l: &LineBundleX, spec: &SurfaceSpec) -> Rational {
    int(l.h_deg) - int(spec.d) * &l.q
}

/// A bundle `L_a` (so `h_deg = 0`) of prescribed degree `c`.
pub fn realize_degree(c: &Rational, spec: &SurfaceSpec) -> LineBundleX {
    LineBundleX::new(0, -c / int(spec.d), 0, 0)
}
