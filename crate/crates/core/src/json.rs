//! Serde and JSON-schema glue for exact rationals.
//!
//! Rationals travel as lowest-terms strings (`"3"`, `"-1/2"`); plain JSON
//! integers are accepted on input.

use std::borrow::Cow;
use std::fmt;

use num_bigint::BigInt;
use schemars::{json_schema, JsonSchema, Schema, SchemaGenerator};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

use crate::arith::rational::{fmt_rational, parse_rational, Rational};

pub const RATIONAL_PATTERN: &str = "^[+-]?[0-9]+(/[+-]?[0-9]+)?$";

pub struct RationalRepr;

impl JsonSchema for RationalRepr {
    fn schema_name() -> Cow<'static, str> {
        "Rational".into()
    }

    fn json_schema(_: &mut SchemaGenerator) -> Schema {
        json_schema!({
            "description": "exact rational, \"p\" or \"p/q\"; integers allowed on input",
            "oneOf": [
                { "type": "string", "pattern": RATIONAL_PATTERN },
                { "type": "integer" }
            ]
        })
    }
}

struct RationalVisitor;

impl Visitor<'_> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational string \"p/q\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        parse_rational(v).map_err(E::custom)
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(Rational::from_integer(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        Ok(Rational::from_integer(BigInt::from(v)))
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }
}

/// Newtype used where a rational sits inside a container (vectors, options, tuples).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q(pub Rational);

impl serde::Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serialize(&self.0, s)
    }
}

impl<'de> serde::Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        rational::deserialize(d).map(Q)
    }
}

impl JsonSchema for Q {
    fn schema_name() -> Cow<'static, str> {
        RationalRepr::schema_name()
    }

    fn json_schema(g: &mut SchemaGenerator) -> Schema {
        RationalRepr::json_schema(g)
    }
}

impl From<Rational> for Q {
    fn from(r: Rational) -> Q {
        Q(r)
    }
}
