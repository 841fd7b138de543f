use std::borrow::Cow;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use schemars::{json_schema, JsonSchema, Schema, SchemaGenerator};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{fmt_rational, int, rational_sqrt, Rational};
use crate::json::{RationalRepr, Q};

/// Element `re + im·i` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Gaussian::new(int(n), int(0))
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(int(re), int(im))
    }

    pub fn real(re: Rational) -> Self {
        Gaussian::new(re, Rational::zero())
    }

    pub fn i() -> Self {
        Gaussian::from_ints(0, 1)
    }

    pub fn zero() -> Self {
        Gaussian::from_int(0)
    }

    pub fn one() -> Self {
        Gaussian::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Gaussian::new(&self.re * r, &self.im * r)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self * &o)
    }

    /// Square root in ℚ(i), normalised so the real part is positive, or zero
    /// with non-negative imaginary part.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Gaussian::zero());
        }
        let r = rational_sqrt(&self.norm())?;
        let two = int(2);
        let x = rational_sqrt(&((&self.re + &r) / &two))?;
        let mut y = rational_sqrt(&((&r - &self.re) / &two))?;
        if self.im.is_negative() {
            y = -y;
        }
        let root = Gaussian::new(x, y);
        debug_assert_eq!(&root * &root, *self);
        Some(root)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Gaussian::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rational(&self.im)),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}i", fmt_rational(&self.re), fmt_rational(&-&self.im))
            }
            _ => write!(f, "{}+{}i", fmt_rational(&self.re), fmt_rational(&self.im)),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Gaussian> for &Gaussian {
            type Output = Gaussian;
            fn $m(self, o: &Gaussian) -> Gaussian {
                let f: fn(&Gaussian, &Gaussian) -> Gaussian = $body;
                f(self, o)
            }
        }
        impl $tr<Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $m(self, o: Gaussian) -> Gaussian {
                (&self).$m(&o)
            }
        }
        impl $tr<&Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $m(self, o: &Gaussian) -> Gaussian {
                (&self).$m(o)
            }
        }
        impl $tr<Gaussian> for &Gaussian {
            type Output = Gaussian;
            fn $m(self, o: Gaussian) -> Gaussian {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Gaussian::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| Gaussian::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| Gaussian::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        -self.clone()
    }
}

impl Serialize for Gaussian {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [Q(self.re.clone()), Q(self.im.clone())].serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GaussianIn {
    Pair([Q; 2]),
    Real(Q),
}

impl<'de> Deserialize<'de> for Gaussian {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Gaussian, D::Error> {
        match GaussianIn::deserialize(d)? {
            GaussianIn::Pair([re, im]) => Ok(Gaussian::new(re.0, im.0)),
            GaussianIn::Real(re) => Ok(Gaussian::real(re.0)),
        }
    }
}

impl JsonSchema for Gaussian {
    fn schema_name() -> Cow<'static, str> {
        "Gaussian".into()
    }

    fn json_schema(g: &mut SchemaGenerator) -> Schema {
        let r = g.subschema_for::<RationalRepr>();
        json_schema!({
            "description": "element of Q(i) as [re, im], or a bare rational",
            "oneOf": [
                { "type": "array", "items": r, "minItems": 2, "maxItems": 2 },
                r
            ]
        })
    }
}
