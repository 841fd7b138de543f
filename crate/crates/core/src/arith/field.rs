use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use schemars::{json_schema, JsonSchema, Schema, SchemaGenerator};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::gaussian::Gaussian;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("square root of {0} needs a second quadratic extension")]
    NestedExtension(String),
    #[error("elements live in different quadratic extensions ({0} vs {1})")]
    IncompatibleExtensions(String, String),
    #[error("extension generator {0} is already a square in Q(i)")]
    TrivialExtension(String),
}

/// Element `a + b·t` of ℚ(i) or of ℚ(i)(t) with `t² = θ`.
///
/// `theta` is `None` exactly when `b = 0`; the extension is forgotten by
/// elements that do not use it, so any two elements combine as long as at
/// most one generator is involved.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    a: Gaussian,
    b: Gaussian,
    theta: Option<Gaussian>,
}

fn join(x: &Option<Gaussian>, y: &Option<Gaussian>) -> Result<Option<Gaussian>, FieldError> {
    match (x, y) {
        (Some(p), Some(q)) if p != q => Err(FieldError::IncompatibleExtensions(
            p.to_string(),
            q.to_string(),
        )),
        (Some(p), _) | (None, Some(p)) => Ok(Some(p.clone())),
        (None, None) => Ok(None),
    }
}

impl FieldElem {
    pub fn base(a: Gaussian) -> Self {
        FieldElem {
            a,
            b: Gaussian::zero(),
            theta: None,
        }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem::base(Gaussian::from_int(n))
    }

    pub fn zero() -> Self {
        FieldElem::from_int(0)
    }

    pub fn one() -> Self {
        FieldElem::from_int(1)
    }

    /// `a + b·√θ`. Fails if θ already has a square root in ℚ(i).
    pub fn with_ext(a: Gaussian, b: Gaussian, theta: Gaussian) -> Result<Self, FieldError> {
        if b.is_zero() {
            return Ok(FieldElem::base(a));
        }
        if theta.sqrt().is_some() {
            return Err(FieldError::TrivialExtension(theta.to_string()));
        }
        Ok(FieldElem {
            a,
            b,
            theta: Some(theta),
        })
    }

    /// The generator `√θ` itself.
    pub fn generator(theta: Gaussian) -> Result<Self, FieldError> {
        FieldElem::with_ext(Gaussian::zero(), Gaussian::one(), theta)
    }

    pub fn a(&self) -> &Gaussian {
        &self.a
    }

    pub fn b(&self) -> &Gaussian {
        &self.b
    }

    pub fn theta(&self) -> Option<&Gaussian> {
        self.theta.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn in_base(&self) -> bool {
        self.theta.is_none()
    }

    pub fn as_base(&self) -> Option<&Gaussian> {
        self.in_base().then_some(&self.a)
    }

    fn build(a: Gaussian, b: Gaussian, theta: Option<Gaussian>) -> Self {
        if b.is_zero() {
            FieldElem::base(a)
        } else {
            FieldElem { a, b, theta }
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, FieldError> {
        if self.theta.is_none() && o.theta.is_none() {
            return Ok(FieldElem::base(&self.a + &o.a));
        }
        let theta = join(&self.theta, &o.theta)?;
        Ok(FieldElem::build(&self.a + &o.a, &self.b + &o.b, theta))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, FieldError> {
        if self.theta.is_none() && o.theta.is_none() {
            return Ok(FieldElem::base(&self.a * &o.a));
        }
        let theta = join(&self.theta, &o.theta)?;
        let tt = theta.clone().unwrap_or_else(Gaussian::zero);
        let a = &self.a * &o.a + &(&self.b * &o.b) * &tt;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(FieldElem::build(a, b, theta))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, FieldError> {
        self.try_add(&-o)
    }

    /// Extension of a pair of elements, or an error if they disagree.
    pub fn common_extension<'a, I>(items: I) -> Result<Option<Gaussian>, FieldError>
    where
        I: IntoIterator<Item = &'a FieldElem>,
    {
        items
            .into_iter()
            .try_fold(None, |acc, x| join(&acc, &x.theta))
    }

    pub fn conj_ext(&self) -> Self {
        FieldElem::build(self.a.clone(), -&self.b, self.theta.clone())
    }

    /// Norm down to ℚ(i): `a² − b²θ`.
    pub fn norm_to_base(&self) -> Gaussian {
        match &self.theta {
            None => self.a.clone(),
            Some(t) => &self.a * &self.a - &(&self.b * &self.b) * t,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.theta {
            None => self.a.inv().map(FieldElem::base),
            Some(_) => {
                let n = self.norm_to_base().inv()?;
                let c = self.conj_ext();
                Some(FieldElem::build(&c.a * &n, &c.b * &n, c.theta))
            }
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self * &i)
    }

    pub fn scale(&self, g: &Gaussian) -> Self {
        FieldElem::build(&self.a * g, &self.b * g, self.theta.clone())
    }

    /// Square root inside the current field, if it exists.
    pub fn sqrt_in_field(&self) -> Option<Self> {
        match &self.theta {
            None => {
                if let Some(r) = self.a.sqrt() {
                    return Some(FieldElem::base(r));
                }
                None
            }
            Some(theta) => {
                let two = Gaussian::from_int(2);
                let disc = self.norm_to_base();
                let n = disc.sqrt()?;
                for cand in [&self.a + &n, &self.a - &n] {
                    let x_sq = cand.div(&two)?;
                    if let Some(x) = x_sq.sqrt() {
                        if x.is_zero() {
                            continue;
                        }
                        let y = self.b.div(&(&two * &x))?;
                        let root = FieldElem::build(x, y, Some(theta.clone()));
                        if &root * &root == *self {
                            return Some(root);
                        }
                    }
                }
                // a + b·t with x = 0 means the element is y²θ, impossible when b ≠ 0
                None
            }
        }
    }

    /// Square root in the tower: inside the field if possible, otherwise
    /// adjoins `√self` when `self` lies in ℚ(i), relative to an optional
    /// ambient extension that must then be compatible.
    pub fn sqrt_in_tower(&self, ambient: Option<&Gaussian>) -> Result<Self, FieldError> {
        if let Some(r) = self.sqrt_in_field() {
            return Ok(r);
        }
        if let (Some(theta), None) = (ambient, &self.theta) {
            // self ∈ ℚ(i); maybe self = c²θ so the root is c·t
            if let Some(q) = self.a.div(theta) {
                if let Some(c) = q.sqrt() {
                    return FieldElem::with_ext(Gaussian::zero(), c, theta.clone());
                }
            }
            return Err(FieldError::NestedExtension(self.to_string()));
        }
        match &self.theta {
            None => FieldElem::generator(self.a.clone()),
            Some(_) => Err(FieldError::NestedExtension(self.to_string())),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match &self.theta {
            None => write!(f, "{}", self.a),
            Some(t) => write!(f, "({}) + ({})*sqrt({})", self.a, self.b, t),
        }
    }
}

macro_rules! forward_field_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                self.$try(o).expect("mixed quadratic extensions")
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                (&self).$m(&o)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                (&self).$m(o)
            }
        }
        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                self.$m(&o)
            }
        }
    };
}

forward_field_op!(Add, add, try_add);
forward_field_op!(Sub, sub, try_sub);
forward_field_op!(Mul, mul, try_mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::build(-&self.a, -&self.b, self.theta.clone())
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl From<Gaussian> for FieldElem {
    fn from(g: Gaussian) -> Self {
        FieldElem::base(g)
    }
}

#[derive(Serialize)]
struct FieldOut<'a> {
    a: &'a Gaussian,
    b: &'a Gaussian,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta: Option<&'a Gaussian>,
}

impl Serialize for FieldElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FieldOut {
            a: &self.a,
            b: &self.b,
            theta: self.theta.as_ref(),
        }
        .serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FieldIn {
    Ext {
        a: Gaussian,
        #[serde(default = "Gaussian::zero")]
        b: Gaussian,
        theta: Option<Gaussian>,
    },
    Base(Gaussian),
}

impl<'de> Deserialize<'de> for FieldElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<FieldElem, D::Error> {
        match FieldIn::deserialize(d)? {
            FieldIn::Base(g) => Ok(FieldElem::base(g)),
            FieldIn::Ext { a, b, theta } => match theta {
                None if b.is_zero() => Ok(FieldElem::base(a)),
                None => Err(serde::de::Error::custom("`b` given without `theta`")),
                Some(t) => FieldElem::with_ext(a, b, t).map_err(serde::de::Error::custom),
            },
        }
    }
}

impl JsonSchema for FieldElem {
    fn schema_name() -> Cow<'static, str> {
        "FieldElem".into()
    }

    fn json_schema(g: &mut SchemaGenerator) -> Schema {
        let z = g.subschema_for::<Gaussian>();
        json_schema!({
            "description": "a + b*sqrt(theta) with a, b, theta in Q(i); a bare Q(i) value is accepted on input",
            "oneOf": [
                {
                    "type": "object",
                    "properties": { "a": z, "b": z, "theta": z },
                    "required": ["a"],
                    "additionalProperties": false
                },
                z
            ]
        })
    }
}
