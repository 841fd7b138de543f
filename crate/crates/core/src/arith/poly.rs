use std::borrow::Cow;

use schemars::{json_schema, JsonSchema, Schema, SchemaGenerator};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gaussian::Gaussian;

/// Homogeneous polynomial in `(x, y)` over ℚ(i).
///
/// `coeffs[k]` multiplies `x^(d−k)·y^k`, so the degree is `coeffs.len() − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    coeffs: Vec<Gaussian>,
}

impl HomPoly {
    /// Panics on an empty coefficient list; a degree must be known.
    pub fn new(coeffs: Vec<Gaussian>) -> Self {
        assert!(!coeffs.is_empty(), "homogeneous polynomial needs a degree");
        HomPoly { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        HomPoly::new(vec![Gaussian::zero(); degree + 1])
    }

    pub fn constant(c: Gaussian) -> Self {
        HomPoly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        HomPoly::new(coeffs.iter().map(|&c| Gaussian::from_int(c)).collect())
    }

    pub fn x() -> Self {
        HomPoly::from_ints(&[1, 0])
    }

    pub fn y() -> Self {
        HomPoly::from_ints(&[0, 1])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Gaussian::is_zero)
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        HomPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Self {
        HomPoly::new(self.coeffs.iter().map(|a| -a).collect())
    }

    /// Sum of two polynomials of the same degree.
    pub fn add(&self, o: &Self) -> Option<Self> {
        (self.degree() == o.degree())
            .then(|| HomPoly::new(self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, o: &Self) -> Option<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![Gaussian::zero(); self.degree() + o.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        HomPoly::new(out)
    }

    /// Substitute `(x, y) ↦ (p·x + q·y, r·x + s·y)`.
    pub fn substitute(&self, m: [[&Gaussian; 2]; 2]) -> Self {
        let lx = HomPoly::new(vec![m[0][0].clone(), m[0][1].clone()]);
        let ly = HomPoly::new(vec![m[1][0].clone(), m[1][1].clone()]);
        let d = self.degree();
        let mut out = HomPoly::zero(d);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = HomPoly::constant(c.clone());
            for _ in 0..(d - k) {
                term = term.mul(&lx);
            }
            for _ in 0..k {
                term = term.mul(&ly);
            }
            out = out.add(&term).expect("same degree");
        }
        out
    }
}

impl Serialize for HomPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<HomPoly, D::Error> {
        let coeffs = Vec::<Gaussian>::deserialize(d)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom(
                "polynomial needs at least one coefficient",
            ));
        }
        Ok(HomPoly { coeffs })
    }
}

impl JsonSchema for HomPoly {
    fn schema_name() -> Cow<'static, str> {
        "HomPoly".into()
    }

    fn json_schema(g: &mut SchemaGenerator) -> Schema {
        let z = g.subschema_for::<Gaussian>();
        json_schema!({
            "description": "homogeneous polynomial in x, y; entry k is the coefficient of x^(d-k) y^k",
            "type": "array",
            "items": z,
            "minItems": 1
        })
    }
}
