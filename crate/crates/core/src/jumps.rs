//! Jumps, allowable elementary modifications and the pushforward `N = π_*(End₀E)`.

use std::borrow::Cow;
use std::fmt;

use num_traits::Zero;
use schemars::{json_schema, JsonSchema, Schema, SchemaGenerator};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::rational::{int, rat, Rational};
use crate::invariants::{classify_range, discriminant, existence_floor};
use crate::json::RationalRepr;
use crate::surface::LineBundleX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JumpsError {
    #[error("invalid jump at {at}: {reason}")]
    InvalidJump { at: String, reason: String },
    #[error("two jumps recorded over {0}")]
    DuplicateJump(String),
    #[error("jump ledger {total} exceeds the bound {bound}")]
    LedgerViolation { total: i64, bound: String },
    #[error("modification of degree {deg} at {at} is not allowable")]
    NotAllowable { at: String, deg: i64 },
    #[error("bundle is filtrable")]
    NotNonFiltrable,
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("invalid point label `{0}`")]
    InvalidPoint(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sheet {
    Plus,
    Minus,
}

impl Sheet {
    pub fn flip(self) -> Sheet {
        match self {
            Sheet::Plus => Sheet::Minus,
            Sheet::Minus => Sheet::Plus,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Sheet::Plus => "+",
            Sheet::Minus => "-",
        }
    }
}

/// Point of the base curve: a Weierstrass point `W1..W6` or a generic point
/// on a sheet of the hyperelliptic double cover (genus 2), or an opaque label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    W(u8),
    Generic { label: String, sheet: Sheet },
    Opaque(String),
}

impl Point {
    pub fn generic(label: &str, sheet: Sheet) -> Self {
        Point::Generic {
            label: label.to_string(),
            sheet,
        }
    }

    pub fn opaque(label: &str) -> Self {
        Point::Opaque(label.to_string())
    }

    /// Image under the hyperelliptic involution.
    pub fn involution(&self) -> Self {
        match self {
            Point::Generic { label, sheet } => Point::Generic {
                label: label.clone(),
                sheet: sheet.flip(),
            },
            p => p.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<Self, JumpsError> {
        if let Some(label) = s.strip_prefix("pt:") {
            if label.is_empty() {
                return Err(JumpsError::InvalidPoint(s.into()));
            }
            return Ok(Point::Opaque(label.into()));
        }
        if let Some(i) = s.strip_prefix('W') {
            if let Ok(i) = i.parse::<u8>() {
                if (1..=6).contains(&i) {
                    return Ok(Point::W(i));
                }
            }
        }
        Err(JumpsError::InvalidPoint(s.into()))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match self {
            Point::W(i) => write!(f, "W{i}"),
            Point::Generic { label, sheet } => write!(f, "{label}{}", sheet.symbol()),
            Point::Opaque(l) => write!(f, "pt:{l}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GenericRepr {
    generic: String,
    sheet: String,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointIn {
    Label(String),
    Generic(GenericRepr),
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Point::Generic { label, sheet } => GenericRepr {
                generic: label.clone(),
                sheet: sheet.symbol().into(),
            }
            .serialize(s),
            p => s.serialize_str(&p.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Point, D::Error> {
        use serde::de::Error;
        match PointIn::deserialize(d)? {
            PointIn::Label(s) => Point::parse(&s).map_err(D::Error::custom),
            PointIn::Generic(g) => {
                let sheet = match g.sheet.as_str() {
                    "+" => Sheet::Plus,
                    "-" => Sheet::Minus,
                    other => return Err(D::Error::custom(format!("bad sheet `{other}`"))),
                };
                if g.generic.is_empty() {
                    return Err(D::Error::custom("empty generic point label"));
                }
                Ok(Point::Generic {
                    label: g.generic,
                    sheet,
                })
            }
        }
    }
}

impl JsonSchema for Point {
    fn schema_name() -> Cow<'static, str> {
        "Point".into()
    }

    fn json_schema(_: &mut SchemaGenerator) -> Schema {
        json_schema!({
            "description": "Weierstrass point W1..W6, generic point with sheet, or opaque pt:<label>",
            "oneOf": [
                { "type": "string", "pattern": "^(W[1-6]|pt:.+)$" },
                {
                    "type": "object",
                    "properties": {
                        "generic": { "type": "string", "minLength": 1 },
                        "sheet": { "enum": ["+", "-"] }
                    },
                    "required": ["generic", "sheet"],
                    "additionalProperties": false
                }
            ]
        })
    }
}

/// Jump over the fibre at `at`, heights `h₀ ≥ h₁ ≥ … ≥ h_{l−1} > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, JsonSchema)]
pub struct Jump {
    pub at: Point,
    pub heights: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct JumpStats {
    pub l: u32,
    pub mu: u64,
    pub s: u32,
}

impl Jump {
    pub fn new(at: Point, heights: Vec<u32>) -> Self {
        Jump { at, heights }
    }

    pub fn validate(&self) -> Result<(), JumpsError> {
        let bad = |reason: &str| JumpsError::InvalidJump {
            at: self.at.to_string(),
            reason: reason.into(),
        };
        if self.heights.is_empty() {
            return Err(bad("no heights"));
        }
        if self.heights.contains(&0) {
            return Err(bad("heights must be positive"));
        }
        if self.heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("heights must be non-increasing"));
        }
        Ok(())
    }

    pub fn stats(&self) -> JumpStats {
        let mut distinct = self.heights.clone();
        distinct.dedup();
        JumpStats {
            l: self.heights.len() as u32,
            mu: self.heights.iter().map(|&h| h as u64).sum(),
            s: distinct.len() as u32,
        }
    }
}

pub fn jump_stats(j: &Jump) -> Result<JumpStats, JumpsError> {
    j.validate()?;
    Ok(j.stats())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct BundleDescriptor {
    pub delta: LineBundleX,
    pub c2: i64,
    #[serde(default)]
    pub jumps: Vec<Jump>,
    pub filtrable: bool,
    #[serde(default)]
    pub regular_generic_fibre: bool,
}

fn total_mu(jumps: &[Jump]) -> i64 {
    jumps.iter().map(|j| j.stats().mu as i64).sum()
}

fn in_nonfiltrable_territory(c2: i64, delta: &LineBundleX) -> bool {
    classify_range(c2, delta).in_nonfiltrable_range || (delta.n_delta == 0 && c2 > 0)
}

impl BundleDescriptor {
    pub fn discriminant(&self) -> Rational {
        discriminant(self.c2, &self.delta)
    }

    /// Jump data, the ledger `Σ ℓ(E, b) ≤ 2Δ(E)` with `ℓ(E, b) = μ_b`, and
    /// the range conditions. A non-filtrable bundle and its jump-free
    /// reduction must both lie where only non-filtrable bundles exist.
    pub fn validate(&self) -> Result<(), JumpsError> {
        let mut seen = std::collections::BTreeSet::new();
        for j in &self.jumps {
            j.validate()?;
            if !seen.insert(&j.at) {
                return Err(JumpsError::DuplicateJump(j.at.to_string()));
            }
        }
        let mu = total_mu(&self.jumps);
        let delta = self.discriminant();
        if int(mu) > &delta * int(2) {
            return Err(JumpsError::LedgerViolation {
                total: mu,
                bound: crate::arith::rational::fmt_rational(&(&delta * int(2))),
            });
        }
        let range = classify_range(self.c2, &self.delta);
        if self.filtrable {
            if !range.filtrable_exists {
                return Err(JumpsError::InvalidDescriptor(
                    "filtrable bundles need discriminant >= m".into(),
                ));
            }
        } else {
            if !in_nonfiltrable_territory(self.c2, &self.delta) {
                return Err(JumpsError::InvalidDescriptor(
                    "discriminant outside the non-filtrable range".into(),
                ));
            }
            if !in_nonfiltrable_territory(self.c2 - mu, &self.delta) {
                let floor = existence_floor(&self.delta);
                return Err(JumpsError::LedgerViolation {
                    total: mu,
                    bound: crate::arith::rational::fmt_rational(&((&delta - floor) * int(2))),
                });
            }
        }
        Ok(())
    }
}

/// Elementary modification along the fibre over `b` by a line bundle of
/// degree `deg_lambda`: `det` picks up `π*O(−b)` and `c₂` shifts by
/// `deg_lambda`. At a jump of top height `h₀`, degree `−h₀` removes that
/// level; positive degrees `r ≥ h₀` (or any positive degree off the jump
/// locus) add a level of height `r`.
pub fn apply_modification(
    desc: &BundleDescriptor,
    b: &Point,
    deg_lambda: i64,
) -> Result<BundleDescriptor, JumpsError> {
    desc.validate()?;
    let mut out = desc.clone();
    out.delta = desc.delta.twist_pullback(-1);
    out.c2 = desc.c2 + deg_lambda;
    let not_allowable = || JumpsError::NotAllowable {
        at: b.to_string(),
        deg: deg_lambda,
    };
    let idx = out.jumps.iter().position(|j| &j.at == b);
    match (idx, deg_lambda) {
        (_, 0) => {}
        (Some(i), d) => {
            let top = out.jumps[i].heights[0] as i64;
            if d == -top {
                out.jumps[i].heights.remove(0);
                if out.jumps[i].heights.is_empty() {
                    out.jumps.remove(i);
                }
            } else if d >= top {
                out.jumps[i].heights.insert(0, d as u32);
            } else {
                return Err(not_allowable());
            }
        }
        (None, d) if d > 0 => out.jumps.push(Jump::new(b.clone(), vec![d as u32])),
        (None, _) => return Err(not_allowable()),
    }
    out.validate()?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct TwistTerm {
    pub at: Point,
    pub coeff: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ReducedJumps {
    pub clean: BundleDescriptor,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub delta_shift: Rational,
    /// `Σ sᵢ bᵢ`, by which `π_*(End₀E)` is twisted down relative to the clean bundle.
    pub twist: Vec<TwistTerm>,
}

/// Runs every allowable modification: `Δ(E) = Δ(Ē) + ½Σμᵢ` and
/// `π_*(End₀E) = π_*(End₀Ē)(−Σ sᵢbᵢ)`.
pub fn reduce_jumps(desc: &BundleDescriptor) -> Result<ReducedJumps, JumpsError> {
    desc.validate()?;
    let mut l_total = 0i64;
    let mut mu_total = 0i64;
    let mut twist = Vec::new();
    for j in &desc.jumps {
        let st = j.stats();
        l_total += st.l as i64;
        mu_total += st.mu as i64;
        twist.push(TwistTerm {
            at: j.at.clone(),
            coeff: st.s,
        });
    }
    let clean = BundleDescriptor {
        delta: desc.delta.twist_pullback(-l_total),
        c2: desc.c2 - mu_total,
        jumps: Vec::new(),
        filtrable: desc.filtrable,
        regular_generic_fibre: desc.regular_generic_fibre,
    };
    Ok(ReducedJumps {
        clean,
        delta_shift: rat(mu_total, 2),
        twist,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct Pushforward {
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub deg_n: Rational,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub deg_n_clean: Rational,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub deg_r: Rational,
    #[serde(with = "crate::json::rational")]
    #[schemars(with = "RationalRepr")]
    pub delta_clean: Rational,
    pub twist_degree: u64,
    /// `2·deg N̄ = −deg R`, the degree shadow of `N̄² ≅ O(−R)`.
    pub n_sq_is_minus_r: bool,
}

/// `deg N = −4Δ(Ē) − Σsᵢ`, `deg R = 8Δ(Ē)`.
pub fn pushforward_and_ramification(desc: &BundleDescriptor) -> Result<Pushforward, JumpsError> {
    if desc.filtrable {
        return Err(JumpsError::NotNonFiltrable);
    }
    let red = reduce_jumps(desc)?;
    let delta_clean = red.clean.discriminant();
    let s: u64 = red.twist.iter().map(|t| t.coeff as u64).sum();
    let deg_n_clean = -int(4) * &delta_clean;
    let deg_r = int(8) * &delta_clean;
    let n_sq_is_minus_r = (&deg_n_clean * int(2) + &deg_r).is_zero();
    assert!(n_sq_is_minus_r);
    Ok(Pushforward {
        deg_n: &deg_n_clean - int(s as i64),
        deg_n_clean,
        deg_r,
        delta_clean,
        twist_degree: s,
        n_sq_is_minus_r,
    })
}
