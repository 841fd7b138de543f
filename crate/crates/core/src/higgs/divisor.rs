//! Divisor classes on a genus-2 curve built from Weierstrass points `W1..W6`
//! and generic points `G(l, ±)`, using only `2Wᵢ ~ K`, `G(l,+) + G(l,−) ~ K`
//! and `ΣWᵢ ~ 3K`.

use std::collections::BTreeMap;

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::HiggsError;
use crate::invariants::H0Value;
use crate::jumps::{Point, Sheet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct DivTerm {
    pub at: Point,
    pub coeff: i64,
}

/// Finite ℤ-combination of points; zero coefficients are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize, JsonSchema)]
#[serde(try_from = "Vec<DivTerm>", into = "Vec<DivTerm>")]
#[schemars(with = "Vec<DivTerm>")]
pub struct DivisorG2 {
    terms: BTreeMap<Point, i64>,
}

impl TryFrom<Vec<DivTerm>> for DivisorG2 {
    type Error = HiggsError;

    fn try_from(v: Vec<DivTerm>) -> Result<Self, HiggsError> {
        let mut d = DivisorG2::zero();
        for t in v {
            if let Point::Opaque(_) = t.at {
                return Err(HiggsError::InvalidPoint(t.at.to_string()));
            }
            d.add_point(&t.at, t.coeff);
        }
        Ok(d)
    }
}

impl From<DivisorG2> for Vec<DivTerm> {
    fn from(d: DivisorG2) -> Self {
        d.terms
            .into_iter()
            .map(|(at, coeff)| DivTerm { at, coeff })
            .collect()
    }
}

impl DivisorG2 {
    pub fn zero() -> Self {
        DivisorG2::default()
    }

    pub fn point(p: Point) -> Self {
        let mut d = DivisorG2::zero();
        d.add_point(&p, 1);
        d
    }

    pub fn from_terms(terms: &[(Point, i64)]) -> Self {
        let mut d = DivisorG2::zero();
        for (p, c) in terms {
            d.add_point(p, *c);
        }
        d
    }

    /// `2·W6`, a representative of `K`.
    pub fn canonical() -> Self {
        DivisorG2::from_terms(&[(Point::W(6), 2)])
    }

    pub fn add_point(&mut self, p: &Point, c: i64) {
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.terms.iter().map(|(p, c)| (p, *c))
    }

    pub fn coeff(&self, p: &Point) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// No point with multiplicity above one.
    pub fn is_reduced(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut d = self.clone();
        for (p, c) in o.terms() {
            d.add_point(p, c);
        }
        d
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut d = DivisorG2::zero();
        for (p, c) in self.terms() {
            d.add_point(p, k * c);
        }
        d
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn involution(&self) -> Self {
        let mut d = DivisorG2::zero();
        for (p, c) in self.terms() {
            d.add_point(&p.involution(), c);
        }
        d
    }

    /// Sum of fibres of the hyperelliptic map: even on every `Wᵢ`, equal on
    /// the two sheets over every generic label.
    pub fn is_sum_of_fibres(&self) -> bool {
        self.terms().all(|(p, c)| match p {
            Point::W(_) => c % 2 == 0,
            Point::Generic { .. } => self.coeff(&p.involution()) == c,
            Point::Opaque(_) => false,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct ResidualTerm {
    pub at: Point,
    pub mult: u32,
}

/// Reduced form `Σ εᵢ(Wᵢ − W6) + c·K + o·W6 + residual`, with the 2-torsion
/// vector `ε` of weight at most 2 and `o ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct PicClassG2 {
    pub degree: i64,
    pub epsilon: [u8; 5],
    pub canonical_multiple: i64,
    pub residual: Vec<ResidualTerm>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl PicClassG2 {
    pub fn residual_degree(&self) -> i64 {
        self.residual.iter().map(|r| r.mult as i64).sum()
    }

    /// Coefficient of the extra `W6`.
    pub fn odd_part(&self) -> i64 {
        self.degree - 2 * self.canonical_multiple - self.residual_degree()
    }

    pub fn epsilon_weight(&self) -> u32 {
        self.epsilon.iter().map(|&e| e as u32).sum()
    }

    pub fn is_lattice(&self) -> bool {
        self.residual.is_empty()
    }

    pub fn epsilon_string(&self) -> String {
        self.epsilon.iter().map(|e| e.to_string()).collect()
    }

    /// Whether the class is `[O]`.
    ///
    /// Lattice classes are decided exactly. A class whose residual is a
    /// single generic point of multiplicity 1 or 2 is never trivial: it would
    /// make `G` linearly equivalent to a Weierstrass point or `2G` a divisor
    /// of `|K|` or of a one-section system `|Wᵢ + Wⱼ|`.
    pub fn is_trivial(&self) -> Decision {
        if self.degree != 0 {
            return Decision::No;
        }
        match self.residual.as_slice() {
            [] if self.epsilon == [0; 5] => Decision::Yes,
            [] => Decision::No,
            [r] if r.mult <= 2 => Decision::No,
            _ => Decision::Unknown,
        }
    }
}

/// Canonical reduced form of `[D]`.
pub fn g2_class_reduce(d: &DivisorG2) -> Result<PicClassG2, HiggsError> {
    let mut k: i64 = 0;
    let mut w = [0i64; 6];
    let mut generic: BTreeMap<&str, (i64, i64)> = BTreeMap::new();
    for (p, c) in d.terms() {
        match p {
            Point::W(i) => w[(*i - 1) as usize] += c,
            Point::Generic { label, sheet } => {
                let e = generic.entry(label.as_str()).or_default();
                match sheet {
                    Sheet::Plus => e.0 += c,
                    Sheet::Minus => e.1 += c,
                }
            }
            Point::Opaque(_) => return Err(HiggsError::InvalidPoint(p.to_string())),
        }
    }
    let mut residual = Vec::new();
    for (label, (plus, minus)) in generic {
        // a·G⁺ + b·G⁻ = min(a, b)·K + |a − b|·(dominant sheet)
        let (sheet, mult, pairs) = if plus >= minus {
            (Sheet::Plus, plus - minus, minus)
        } else {
            (Sheet::Minus, minus - plus, plus)
        };
        k += pairs;
        if mult > 0 {
            residual.push(ResidualTerm {
                at: Point::generic(label, sheet),
                mult: mult as u32,
            });
        }
    }
    // nᵢ·Wᵢ = (nᵢ mod 2)·Wᵢ + ⌊nᵢ/2⌋·K, then Wᵢ = eᵢ + W6
    let mut parity = [0u8; 6];
    for i in 0..6 {
        k += w[i].div_euclid(2);
        parity[i] = w[i].rem_euclid(2) as u8;
    }
    let ones: i64 = parity.iter().map(|&x| x as i64).sum();
    k += ones / 2;
    let mut epsilon = [0u8; 5];
    epsilon.copy_from_slice(&parity[..5]);
    // e₁ + … + e₅ ~ 0
    if epsilon.iter().map(|&x| x as u32).sum::<u32>() >= 3 {
        for e in &mut epsilon {
            *e ^= 1;
        }
    }
    Ok(PicClassG2 {
        degree: d.degree(),
        epsilon,
        canonical_multiple: k,
        residual,
    })
}

pub fn is_trivial_divisor(d: &DivisorG2) -> Result<Decision, HiggsError> {
    Ok(g2_class_reduce(d)?.is_trivial())
}

/// Whether an effective divisor `r` is linearly equivalent to `target`.
///
/// Beyond the class calculus this uses two exact facts: on a genus-2 curve
/// every divisor of `|K|` and `|2K|` is a sum of hyperelliptic fibres, and a
/// degree-2 effective divisor that is not a fibre is alone in its system.
pub fn effective_equivalent(r: &DivisorG2, target: &DivisorG2) -> Result<Decision, HiggsError> {
    let t = g2_class_reduce(target)?;
    if r.degree() != t.degree {
        return Ok(Decision::No);
    }
    if r.is_effective() {
        if t.is_lattice() && t.epsilon == [0; 5] && t.odd_part() == 0 && (1..=2).contains(&t.canonical_multiple) {
            return Ok(if r.is_sum_of_fibres() { Decision::Yes } else { Decision::No });
        }
        if t.degree == 2 && t.canonical_multiple == 0 && t.odd_part() == 0 && t.epsilon == [0; 5] {
            let mut e = DivisorG2::zero();
            for term in &t.residual {
                e.add_point(&term.at, term.mult as i64);
            }
            if !e.is_sum_of_fibres() {
                return Ok(if *r == e { Decision::Yes } else { Decision::No });
            }
        }
    }
    is_trivial_divisor(&r.sub(target))
}

/// `h⁰(B, L)` for the line bundle of a reduced class on a genus-2 curve.
pub fn h0_genus2(c: &PicClassG2) -> H0Value {
    let minus_k = |c: &PicClassG2| PicClassG2 {
        degree: c.degree - 2,
        canonical_multiple: c.canonical_multiple - 1,
        ..c.clone()
    };
    match c.degree {
        d if d < 0 => H0Value::exact(0),
        0 => match c.is_trivial() {
            Decision::Yes => H0Value::exact(1),
            Decision::No => H0Value::exact(0),
            Decision::Unknown => H0Value::Undecidable,
        },
        1 => {
            if c.is_lattice() {
                // Wᵢ or W6 exactly when ε has weight at most one
                H0Value::exact((c.epsilon_weight() <= 1) as i64)
            } else if c.residual_degree() == 1 {
                // G + λ with λ of degree 0 in the lattice: effective iff λ = 0
                H0Value::exact((c.epsilon == [0; 5] && c.canonical_multiple == 0) as i64)
            } else {
                H0Value::Undecidable
            }
        }
        2 => match minus_k(c).is_trivial() {
            Decision::Yes => H0Value::exact(2),
            Decision::No => H0Value::exact(1),
            Decision::Unknown => H0Value::Interval { lo: 1, hi: Some(2) },
        },
        d => H0Value::exact(d - 1),
    }
}
