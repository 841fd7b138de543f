//! Grid evaluation of range flags, Higgs existence and smoothness verdicts.

use rayon::prelude::*;
use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use crate::arith::rational::{fmt_rational, int};
use crate::higgs::{nonfiltrable_existence, smoothness_verdict, Existence, Smoothness};
use crate::invariants::{classify_range, twist_gate, GateVerdict, Twist};
use crate::surface::{validate_line_bundle, LineBundleX};

/// Explicit values or an inclusive range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(untagged)]
pub enum Axis {
    List(Vec<i64>),
    Range { from: i64, to: i64 },
}

impl Axis {
    pub fn values(&self) -> Vec<i64> {
        match self {
            Axis::List(v) => v.clone(),
            Axis::Range { from, to } => (*from..=*to).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct SweepConfig {
    pub g: Axis,
    pub e_inv: Axis,
    pub n_delta: Axis,
    pub c2: Axis,
}

impl SweepConfig {
    pub fn grid(&self) -> Vec<(i64, i64, i64, i64)> {
        let (gs, es, ns, cs) = (
            self.g.values(),
            self.e_inv.values(),
            self.n_delta.values(),
            self.c2.values(),
        );
        let mut out = Vec::with_capacity(gs.len() * es.len() * ns.len() * cs.len());
        for &g in &gs {
            for &e in &es {
                for &n in &ns {
                    for &c in &cs {
                        out.push((g, e, n, c));
                    }
                }
            }
        }
        out
    }
}

pub const SWEEP_HEADER: [&str; 13] = [
    "g",
    "e_inv",
    "n_delta",
    "c2",
    "delta",
    "m",
    "floor",
    "exists",
    "filtrable_exists",
    "in_nonfiltrable_range",
    "higgs",
    "smoothness",
    "citation",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct SweepRow {
    pub g: i64,
    pub e_inv: i64,
    pub n_delta: i64,
    pub c2: i64,
    pub delta: String,
    pub m: String,
    pub floor: String,
    pub exists: bool,
    pub filtrable_exists: bool,
    pub in_nonfiltrable_range: bool,
    pub higgs: String,
    pub smoothness: String,
    pub citation: String,
}

impl SweepRow {
    pub fn record(&self) -> [String; 13] {
        [
            self.g.to_string(),
            self.e_inv.to_string(),
            self.n_delta.to_string(),
            self.c2.to_string(),
            self.delta.clone(),
            self.m.clone(),
            self.floor.clone(),
            self.exists.to_string(),
            self.filtrable_exists.to_string(),
            self.in_nonfiltrable_range.to_string(),
            self.higgs.clone(),
            self.smoothness.clone(),
            self.citation.clone(),
        ]
    }
}

pub fn evaluate_point(g: i64, e_inv: i64, n_delta: i64, c2: i64) -> SweepRow {
    let n = u32::try_from(n_delta).unwrap_or(u32::MAX);
    let delta = LineBundleX::new(0, int(0), n, e_inv);
    let range = classify_range(c2, &delta);
    let mut row = SweepRow {
        g,
        e_inv,
        n_delta,
        c2,
        delta: fmt_rational(&range.delta),
        m: fmt_rational(&range.m),
        floor: fmt_rational(&range.floor),
        exists: range.exists,
        filtrable_exists: range.filtrable_exists,
        in_nonfiltrable_range: range.in_nonfiltrable_range,
        higgs: "InvalidInput".into(),
        smoothness: "InvalidInput".into(),
        citation: String::new(),
    };
    if n_delta < 0 || validate_line_bundle(&delta, g).is_err() {
        row.citation = "invalid".into();
        return row;
    }
    row.higgs = if !range.exists {
        "Empty".into()
    } else if twist_gate(&Twist::Cotangent, g) == GateVerdict::NoStablePairs {
        "NoStablePairs".into()
    } else if range.filtrable_exists {
        "Exists".into()
    } else {
        match nonfiltrable_existence(g, &delta, c2) {
            Ok(r) => match r.verdict {
                Existence::Exists => "Exists",
                Existence::NotGuaranteed => "NotGuaranteed",
                Existence::None => "None",
            }
            .into(),
            Err(_) => "InvalidInput".into(),
        }
    };
    match smoothness_verdict(g, &delta, c2, None) {
        Ok(v) => {
            row.smoothness = match v.verdict {
                Smoothness::Smooth => "Smooth",
                Smoothness::NotSmooth => "NotSmooth",
                Smoothness::Unknown => "Unknown",
                Smoothness::Empty => "Empty",
            }
            .into();
            row.citation = v.citation;
        }
        Err(_) => row.citation = "invalid".into(),
    }
    row
}

/// Rows in grid order (g, e_inv, n_delta, c2 nested left to right).
pub fn sweep(config: &SweepConfig) -> Vec<SweepRow> {
    config
        .grid()
        .into_par_iter()
        .map(|(g, e, n, c)| evaluate_point(g, e, n, c))
        .collect()
}
