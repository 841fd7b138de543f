//! Higgs fields on non-filtrable bundles over a genus-2 base, decided through
//! `h⁰(B, N ⊗ K_B)` with `N = π_*(End₀E)`.

use std::collections::BTreeSet;

use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::divisor::{effective_equivalent, g2_class_reduce, h0_genus2, Decision, DivisorG2};
use super::HiggsError;
use crate::invariants::H0Value;
use crate::jumps::{Jump, Point};

/// A bundle with `Δ = −e/4 + k/2`, its jumps, the ramification divisor `R`
/// of its clean part `Ē`, and optionally the divisor class of
/// `N̄ = π_*(End₀Ē)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct G2HiggsInput {
    pub e_inv: i64,
    pub k: u32,
    #[serde(default)]
    pub jumps: Vec<Jump>,
    #[serde(default)]
    pub ramification: DivisorG2,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_clean: Option<DivisorG2>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub enum G2Verdict {
    HiggsExists,
    NoHiggs,
    Undecidable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct G2Decision {
    pub verdict: G2Verdict,
    /// `h⁰(B, N ⊗ K_B)`.
    pub h0: H0Value,
    pub deg_nk: i64,
    /// `k̄ = k − Σμ`, the excess of the clean part.
    pub clean_excess: u32,
    pub citation: String,
}

fn inconsistent(msg: impl Into<String>) -> HiggsError {
    HiggsError::InconsistentInput(msg.into())
}

struct Checked {
    clean_excess: i64,
    twist: DivisorG2,
}

fn check(input: &G2HiggsInput) -> Result<Checked, HiggsError> {
    let e = input.e_inv;
    if !(-2..=0).contains(&e) {
        return Err(inconsistent(format!("e_inv {e} is not in {{-2, -1, 0}}")));
    }
    let mut seen = BTreeSet::new();
    let mut mu_total: i64 = 0;
    let mut twist = DivisorG2::zero();
    for j in &input.jumps {
        j.validate()?;
        if let Point::Opaque(_) = j.at {
            return Err(HiggsError::InvalidPoint(j.at.to_string()));
        }
        if !seen.insert(j.at.clone()) {
            return Err(inconsistent(format!("two jumps over {}", j.at)));
        }
        let st = j.stats();
        mu_total += st.mu as i64;
        twist.add_point(&j.at, st.s as i64);
    }
    let clean_excess = input.k as i64 - mu_total;
    if clean_excess < 0 {
        return Err(inconsistent(format!(
            "jumps carry {mu_total} but k = {}",
            input.k
        )));
    }
    let r = &input.ramification;
    g2_class_reduce(r)?;
    if !r.is_effective() || !r.is_reduced() {
        return Err(inconsistent("ramification divisor must be effective and reduced"));
    }
    let want = -2 * e + 4 * clean_excess;
    if r.degree() != want {
        return Err(inconsistent(format!(
            "ramification degree {} but 8Δ(Ē) = {want}",
            r.degree()
        )));
    }
    if let Some(n) = &input.n_clean {
        let want = e - 2 * clean_excess;
        if n.degree() != want {
            return Err(inconsistent(format!(
                "deg N̄ = {} but should be {want}",
                n.degree()
            )));
        }
        if g2_class_reduce(&n.scale(2).add(r))?.is_trivial() == Decision::No {
            return Err(inconsistent("N̄² is not O(−R)"));
        }
        let n_full = g2_class_reduce(&n.sub(&twist))?;
        if h0_genus2(&n_full).is_positive() == Some(true) {
            return Err(inconsistent("h⁰(N) > 0, so the bundle is not simple"));
        }
    }
    Ok(Checked {
        clean_excess,
        twist,
    })
}

pub fn g2_higgs_decide(input: &G2HiggsInput) -> Result<G2Decision, HiggsError> {
    let Checked {
        clean_excess,
        twist,
    } = check(input)?;
    let s = twist.degree();
    let d = input.e_inv - 2 * clean_excess - s + 2;
    let prefix = format!("e={}:k={}", input.e_inv, input.k);
    let out = |verdict, h0, tag: &str| G2Decision {
        verdict,
        h0,
        deg_nk: d,
        clean_excess: clean_excess as u32,
        citation: format!("{prefix}:{tag}"),
    };
    if d < 0 {
        return Ok(out(G2Verdict::NoHiggs, H0Value::exact(0), "negative-degree"));
    }
    let k2 = DivisorG2::canonical().scale(2);
    let r = &input.ramification;

    if let Some(n) = &input.n_clean {
        let nk = n.sub(&twist).add(&DivisorG2::canonical());
        let h = h0_genus2(&g2_class_reduce(&nk)?);
        let v = match h.is_positive() {
            Some(true) => G2Verdict::HiggsExists,
            Some(false) => G2Verdict::NoHiggs,
            None => G2Verdict::Undecidable,
        };
        return Ok(out(v, h, "class"));
    }

    match d {
        // e = 0, k = 0: N̄ is a non-trivial half-period, so h⁰(N̄ ⊗ K) = 1
        2 => Ok(out(G2Verdict::HiggsExists, H0Value::exact(1), "degree-two")),
        1 => {
            // N ⊗ K ≅ O(b′) forces 2b′ ~ 2K − R − 2T
            let target = k2.sub(r).sub(&twist.scale(2));
            let c = g2_class_reduce(&target)?;
            let is_k = c.is_lattice()
                && c.epsilon == [0; 5]
                && c.odd_part() == 0
                && c.canonical_multiple == 1;
            if c.is_lattice() && !is_k {
                return Ok(out(G2Verdict::NoHiggs, H0Value::exact(0), "necessary-class"));
            }
            if twist.degree() == 0
                && effective_equivalent(r, &DivisorG2::canonical())? == Decision::No
            {
                return Ok(out(G2Verdict::NoHiggs, H0Value::exact(0), "ramification-not-canonical"));
            }
            Ok(out(G2Verdict::Undecidable, H0Value::Undecidable, "half-period-unknown"))
        }
        _ => {
            // N ≅ K⁻¹ forces R ~ 2K − 2T
            let target = k2.sub(&twist.scale(2));
            match effective_equivalent(r, &target)? {
                Decision::No => Ok(out(
                    G2Verdict::NoHiggs,
                    H0Value::exact(0),
                    "ramification-mismatch",
                )),
                _ => Ok(out(G2Verdict::Undecidable, H0Value::Undecidable, "half-period-unknown")),
            }
        }
    }
}
