//! Existence results for `g ≥ 2` and the resulting smoothness verdicts.

use num_traits::Zero;
use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::genus2::{g2_higgs_decide, G2HiggsInput, G2Verdict};
use super::HiggsError;
use crate::arith::rational::rat;
use crate::invariants::{classify_range, end0_canonical_h0, h0_curve, H0Flags, H0Value};
use crate::surface::{validate_line_bundle, LineBundleX};

/// A filtrable bundle `0 → L → E → L⁻¹ ⊗ δ → 0` with `H = L² ⊗ δ⁻¹` on the
/// base. `flags` describe `H ⊗ K_B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "case")]
pub enum FiltrableCase {
    /// Regular on the generic fibre.
    RegularGeneric {
        h_deg: i64,
        #[serde(default)]
        flags: H0Flags,
    },
    /// Pullback of an extension `F` on the base.
    PullbackExtension { f_stable: bool },
    /// Not regular on the generic fibre and not a pullback.
    NotExtension {
        h_deg: i64,
        #[serde(default)]
        flags: H0Flags,
    },
}

pub fn filtrable_higgs_h0(case: &FiltrableCase, g: i64) -> Result<H0Value, HiggsError> {
    if g < 2 {
        return Err(HiggsError::GenusTooSmall(g));
    }
    Ok(match case {
        FiltrableCase::RegularGeneric { h_deg, flags } => h0_curve(h_deg + 2 * g - 2, g, flags)?,
        FiltrableCase::PullbackExtension { f_stable } => {
            let chi = end0_canonical_h0(g) as u64;
            if *f_stable {
                H0Value::Exact { value: chi }
            } else {
                H0Value::Interval { lo: chi, hi: None }
            }
        }
        FiltrableCase::NotExtension { h_deg, flags } => {
            h0_curve(h_deg + 2 * g - 2, g, flags)?.at_least()
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum Existence {
    Exists,
    NotGuaranteed,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct NonFiltrableExistence {
    pub verdict: Existence,
    /// `h⁰(End₀E ⊗ K_X)` of the witnessing bundle, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0: Option<H0Value>,
    pub citation: String,
}

/// Whether some stable non-filtrable bundle with these invariants carries a
/// non-zero trace-free Higgs field.
pub fn nonfiltrable_existence(
    g: i64,
    delta: &LineBundleX,
    c2: i64,
) -> Result<NonFiltrableExistence, HiggsError> {
    if g < 2 {
        return Err(HiggsError::GenusTooSmall(g));
    }
    validate_line_bundle(delta, g)?;
    let range = classify_range(c2, delta);
    if !range.in_nonfiltrable_range {
        return Err(HiggsError::RangeError);
    }
    let e = delta.e_inv;
    let d = &range.delta;
    let out = |verdict, h0, citation: &str| NonFiltrableExistence {
        verdict,
        h0,
        citation: citation.into(),
    };
    if *d == range.floor && e > 1 - g {
        // clean regular bundle: N ⊗ K_B has degree e + 2g − 2, and N is a
        // non-trivial half-period when e = 0
        let flags = H0Flags {
            is_canonical: (e == 0).then_some(false),
            ..Default::default()
        };
        let h0 = h0_curve(e + 2 * g - 2, g, &flags)?;
        return Ok(out(Existence::Exists, Some(h0), "regular-minimal"));
    }
    if *d > range.floor && e > 2 - g && g >= 3 {
        return Ok(out(Existence::Exists, None, "single-jump"));
    }
    if *d < rat(g - 1, 4) {
        return Ok(out(Existence::Exists, None, "small-discriminant"));
    }
    if g == 2 {
        if e == -2 && *d > rat(1, 2) {
            return Ok(out(Existence::None, Some(H0Value::exact(0)), "genus2:e=-2"));
        }
        if e == 0 {
            return Ok(out(Existence::Exists, None, "genus2:e=0"));
        }
    }
    Ok(out(Existence::NotGuaranteed, None, "no-criterion"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum Smoothness {
    Smooth,
    NotSmooth,
    Unknown,
    Empty,
}

/// Whether a verdict covers the whole moduli space or only the point of the
/// supplied bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum SmoothnessScope {
    Moduli,
    Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct SmoothnessVerdict {
    pub verdict: Smoothness,
    pub scope: SmoothnessScope,
    pub citation: String,
}

/// Smoothness of the moduli space of stable rank-2 bundles with determinant
/// `δ` and `c₂`; with `g2` supplied on a genus-2 base, of the moduli space at
/// that bundle.
pub fn smoothness_verdict(
    g: i64,
    delta: &LineBundleX,
    c2: i64,
    g2: Option<&G2HiggsInput>,
) -> Result<SmoothnessVerdict, HiggsError> {
    validate_line_bundle(delta, g)?;
    let range = classify_range(c2, delta);
    let moduli = |verdict, citation: &str| SmoothnessVerdict {
        verdict,
        scope: SmoothnessScope::Moduli,
        citation: citation.into(),
    };
    if !range.exists {
        return Ok(moduli(Smoothness::Empty, "empty"));
    }
    if g < 2 {
        return Ok(moduli(Smoothness::Smooth, "no-stable-pairs"));
    }
    let e = delta.e_inv;
    let d = &range.delta;
    let nonzero = !d.is_zero();
    if nonzero && range.filtrable_exists {
        return Ok(moduli(Smoothness::NotSmooth, "filtrable"));
    }
    if nonzero && *d == range.floor && e > 1 - g {
        return Ok(moduli(Smoothness::NotSmooth, "regular-minimal"));
    }
    if nonzero && *d > range.floor && e > 2 - g && g >= 3 {
        return Ok(moduli(Smoothness::NotSmooth, "single-jump"));
    }
    if g != 2 || !range.in_nonfiltrable_range {
        return Ok(moduli(Smoothness::Unknown, "no-criterion"));
    }
    if let Some(input) = g2 {
        if input.e_inv != e {
            return Err(HiggsError::InconsistentInput(format!(
                "e_inv {} differs from the surface value {e}",
                input.e_inv
            )));
        }
        if *d != rat(-e, 4) + rat(input.k as i64, 2) {
            return Err(HiggsError::InconsistentInput(format!(
                "k = {} does not match Δ = {d}",
                input.k
            )));
        }
        let dec = g2_higgs_decide(input)?;
        let point = |verdict| SmoothnessVerdict {
            verdict,
            scope: SmoothnessScope::Point,
            citation: dec.citation.clone(),
        };
        match dec.verdict {
            G2Verdict::HiggsExists => return Ok(point(Smoothness::NotSmooth)),
            G2Verdict::NoHiggs => return Ok(point(Smoothness::Smooth)),
            G2Verdict::Undecidable => {}
        }
    }
    if e == -2 && *d > rat(1, 2) {
        return Ok(moduli(Smoothness::Smooth, "genus2:e=-2"));
    }
    if e == 0 {
        return Ok(moduli(Smoothness::NotSmooth, "genus2:e=0"));
    }
    Ok(moduli(Smoothness::Unknown, "no-criterion"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::higgs::DivisorG2;
    use crate::jumps::{Point, Sheet};

    fn bundle(n_delta: u32, e: i64) -> LineBundleX {
        LineBundleX::new(0, int(0), n_delta, e)
    }

    #[test]
    fn filtrable_cases() {
        let a = FiltrableCase::RegularGeneric {
            h_deg: -1,
            flags: H0Flags::canonical_minus_point(),
        };
        assert_eq!(filtrable_higgs_h0(&a, 2).unwrap(), H0Value::exact(1));
        let a = FiltrableCase::RegularGeneric {
            h_deg: -3,
            flags: H0Flags::default(),
        };
        assert_eq!(filtrable_higgs_h0(&a, 2).unwrap(), H0Value::exact(0));
        let b = FiltrableCase::PullbackExtension { f_stable: true };
        assert_eq!(filtrable_higgs_h0(&b, 3).unwrap(), H0Value::exact(6));
        assert!(filtrable_higgs_h0(&b, 1).is_err());
        let b = FiltrableCase::PullbackExtension { f_stable: false };
        assert_eq!(filtrable_higgs_h0(&b, 3).unwrap().lower(), Some(6));
        let c = FiltrableCase::NotExtension {
            h_deg: 2,
            flags: H0Flags::default(),
        };
        assert_eq!(
            filtrable_higgs_h0(&c, 2).unwrap(),
            H0Value::Interval { lo: 3, hi: None }
        );
    }

    #[test]
    fn nonfiltrable_examples() {
        // e = 0, Δ = 0 < m = 2
        let r = nonfiltrable_existence(2, &bundle(8, 0), -4).unwrap();
        assert_eq!(r.verdict, Existence::Exists);
        assert_eq!(r.h0, Some(H0Value::exact(1)));
        let r = nonfiltrable_existence(4, &bundle(8, 0), -4).unwrap();
        assert_eq!(r.h0, Some(H0Value::exact(3)));
        // e = −2, Δ = 3/2 > 1/2
        let r = nonfiltrable_existence(3, &bundle(8, -2), -1).unwrap();
        assert_eq!(r.verdict, Existence::NotGuaranteed);
        let r = nonfiltrable_existence(3, &bundle(8, 0), -2).unwrap();
        assert_eq!((r.verdict, r.citation.as_str()), (Existence::Exists, "single-jump"));
        let r = nonfiltrable_existence(2, &bundle(8, -2), -2).unwrap();
        assert_eq!(r.verdict, Existence::None);
        assert!(matches!(
            nonfiltrable_existence(2, &bundle(8, 0), 0),
            Err(HiggsError::RangeError)
        ));
    }

    #[test]
    fn smoothness_examples() {
        let v = smoothness_verdict(2, &bundle(8, -2), -2, None).unwrap();
        assert_eq!(v.verdict, Smoothness::Smooth);
        let v = smoothness_verdict(2, &bundle(8, 0), -2, None).unwrap();
        assert_eq!(v.verdict, Smoothness::NotSmooth);
        // filtrable, Δ = 3/4
        let v = smoothness_verdict(2, &bundle(3, 0), 0, None).unwrap();
        assert_eq!((v.verdict, v.citation.as_str()), (Smoothness::NotSmooth, "filtrable"));
        let v = smoothness_verdict(2, &bundle(8, -2), -10, None).unwrap();
        assert_eq!(v.verdict, Smoothness::Empty);
        let v = smoothness_verdict(2, &bundle(8, -1), -3, None).unwrap();
        assert_eq!(v.verdict, Smoothness::Unknown);
    }

    #[test]
    fn smoothness_at_a_point() {
        let ramification = DivisorG2::from_terms(&[
            (Point::generic("a", Sheet::Plus), 1),
            (Point::generic("a", Sheet::Minus), 1),
            (Point::generic("b", Sheet::Plus), 1),
            (Point::generic("b", Sheet::Minus), 1),
        ]);
        let mk = |n: DivisorG2| G2HiggsInput {
            e_inv: -2,
            k: 0,
            jumps: vec![],
            ramification: ramification.clone(),
            n_clean: Some(n),
        };
        let d = bundle(8, -2);
        let sing = mk(DivisorG2::from_terms(&[(Point::W(1), -2)]));
        let v = smoothness_verdict(2, &d, -3, Some(&sing)).unwrap();
        assert_eq!((v.verdict, v.scope), (Smoothness::NotSmooth, SmoothnessScope::Point));
        let smooth = mk(DivisorG2::from_terms(&[(Point::W(1), -1), (Point::W(2), -1)]));
        let v = smoothness_verdict(2, &d, -3, Some(&smooth)).unwrap();
        assert_eq!((v.verdict, v.scope), (Smoothness::Smooth, SmoothnessScope::Point));
        assert!(smoothness_verdict(2, &d, -1, Some(&smooth)).is_err());
    }
}
