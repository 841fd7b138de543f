use schemars::{schema_for, JsonSchema};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use elliptic_higgs::arith::{Gaussian, HomPoly, Mat2};
use elliptic_higgs::higgs::{
    filtrable_higgs_h0, g2_class_reduce, g2_higgs_decide, h0_genus2, nonfiltrable_existence,
    smoothness_verdict, DivisorG2, FiltrableCase, G2Decision, G2HiggsInput, NonFiltrableExistence,
    PicClassG2, SmoothnessVerdict,
};
use elliptic_higgs::hopf::{
    classify_pair, cohiggs_moduli_point, construct_stable_example, h0_end0_twisted,
    integrability_check, normal_form_even, normal_form_odd, HopfBundleDesc, ModuliClass,
    NormalFormEven, NormalFormOdd, PairDesc, PairVerdict, PolyMat2, StableExample,
};
use elliptic_higgs::invariants::{
    classify_range, h0_curve, twist_gate, GateVerdict, H0Flags, H0Value, RangeVerdict, Twist,
};
use elliptic_higgs::json::Q;
use elliptic_higgs::jumps::{
    apply_modification, jump_stats, pushforward_and_ramification, reduce_jumps, BundleDescriptor,
    Jump, JumpStats, Point, Pushforward, ReducedJumps,
};
use elliptic_higgs::surface::{
    canonicalize, degree, validate_line_bundle, validate_surface, LineBundleX, SurfaceSpec,
};

/// Failure of a command, mapped to an exit code by the caller.
#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Domain { error: String, detail: String },
}

impl CliError {
    pub fn domain<E: std::fmt::Debug + std::fmt::Display>(e: E) -> Self {
        CliError::Domain {
            error: error_name(&format!("{e:?}")),
            detail: e.to_string(),
        }
    }
}

const WRAPPERS: [&str; 5] = ["Surface", "Invariants", "Jumps", "Field", "Hopf"];

/// Innermost variant name of a nested error's `Debug` form.
fn error_name(debug: &str) -> String {
    let end = debug
        .find(|c: char| !c.is_alphanumeric() && c != '_')
        .unwrap_or(debug.len());
    let name = &debug[..end];
    let rest = &debug[end..];
    if WRAPPERS.contains(&name) && rest.starts_with('(') && rest[1..].starts_with(char::is_uppercase) {
        return error_name(&rest[1..]);
    }
    name.to_string()
}

pub struct Command {
    pub name: &'static str,
    pub run: fn(&str) -> Result<Value, CliError>,
    pub schema: fn() -> Value,
}

fn parse<I: DeserializeOwned>(text: &str) -> Result<I, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
}

fn to_json<O: Serialize>(o: &O) -> Value {
    serde_json::to_value(o).expect("result serializes")
}

fn schemas<I: JsonSchema, O: JsonSchema>() -> Value {
    json!({
        "input": schema_for!(I),
        "output": schema_for!(O),
    })
}

macro_rules! command {
    ($name:expr, $in:ty => $out:ty, $f:expr) => {
        Command {
            name: $name,
            run: |text| {
                let input: $in = parse(text)?;
                let f: fn($in) -> Result<$out, CliError> = $f;
                f(input).map(|o| to_json(&o))
            },
            schema: schemas::<$in, $out>,
        }
    };
}

#[derive(Deserialize, JsonSchema)]
struct SurfaceBundle {
    surface: SurfaceSpec,
    bundle: LineBundleX,
}

#[derive(Serialize, JsonSchema)]
struct DegreeOut {
    degree: Q,
}

#[derive(Deserialize, JsonSchema)]
struct RangeIn {
    c2: i64,
    delta: LineBundleX,
    /// Base genus; when present the determinant data is validated against it.
    #[serde(default)]
    g: Option<i64>,
}

#[derive(Deserialize, JsonSchema)]
struct H0CurveIn {
    deg: i64,
    g: i64,
    #[serde(default)]
    flags: H0Flags,
}

#[derive(Deserialize, JsonSchema)]
struct GateIn {
    twist: Twist,
    g: i64,
}

#[derive(Serialize, JsonSchema)]
struct GateOut {
    verdict: GateVerdict,
}

#[derive(Deserialize, JsonSchema)]
struct MatPair {
    a1: Mat2,
    a2: Mat2,
}

#[derive(Deserialize, JsonSchema)]
struct OddIn {
    a: HomPoly,
    b: HomPoly,
    c: Gaussian,
}

#[derive(Deserialize, JsonSchema)]
struct PolyPair {
    p1: PolyMat2,
    p2: PolyMat2,
}

#[derive(Serialize, JsonSchema)]
struct IntegrableOut {
    integrable: bool,
}

#[derive(Serialize, JsonSchema)]
struct VerdictOut<T> {
    verdict: T,
}

#[derive(Deserialize, JsonSchema)]
struct ExampleIn {
    c2: i64,
}

#[derive(Deserialize, JsonSchema)]
struct ModifyIn {
    desc: BundleDescriptor,
    at: Point,
    deg_lambda: i64,
}

#[derive(Deserialize, JsonSchema)]
struct FiltrableIn {
    case: FiltrableCase,
    g: i64,
}

#[derive(Deserialize, JsonSchema)]
struct NonFiltrableIn {
    g: i64,
    delta: LineBundleX,
    c2: i64,
}

#[derive(Deserialize, JsonSchema)]
struct SmoothIn {
    g: i64,
    delta: LineBundleX,
    c2: i64,
    #[serde(default)]
    genus2: Option<G2HiggsInput>,
}

#[derive(Deserialize, JsonSchema)]
struct ClassIn {
    divisor: DivisorG2,
}

#[derive(Serialize, JsonSchema)]
struct ClassOut {
    class: PicClassG2,
    h0: H0Value,
}

pub fn commands() -> Vec<Command> {
    vec![
        command!("surface validate", SurfaceSpec => SurfaceSpec, |s| {
            validate_surface(&s).map_err(CliError::domain)
        }),
        command!("surface degree", SurfaceBundle => DegreeOut, |i| {
            validate_surface(&i.surface).map_err(CliError::domain)?;
            Ok(DegreeOut { degree: Q(degree(&i.bundle, &i.surface)) })
        }),
        command!("surface canon", SurfaceBundle => LineBundleX, |i| {
            validate_surface(&i.surface).map_err(CliError::domain)?;
            Ok(canonicalize(&i.bundle, &i.surface))
        }),
        command!("range classify", RangeIn => RangeVerdict, |i| {
            if let Some(g) = i.g {
                validate_line_bundle(&i.delta, g).map_err(CliError::domain)?;
            }
            Ok(classify_range(i.c2, &i.delta))
        }),
        command!("range h0", H0CurveIn => H0Value, |i| {
            h0_curve(i.deg, i.g, &i.flags).map_err(CliError::domain)
        }),
        command!("range gate", GateIn => GateOut, |i| {
            Ok(GateOut { verdict: twist_gate(&i.twist, i.g) })
        }),
        command!("hopf nf-even", MatPair => NormalFormEven, |i| {
            normal_form_even(&i.a1, &i.a2).map_err(CliError::domain)
        }),
        command!("hopf nf-odd", OddIn => NormalFormOdd, |i| {
            normal_form_odd(&i.a, &i.b, &i.c).map_err(CliError::domain)
        }),
        command!("hopf integrable", PolyPair => IntegrableOut, |i| {
            integrability_check(&i.p1, &i.p2)
                .map(|integrable| IntegrableOut { integrable })
                .map_err(CliError::domain)
        }),
        command!("hopf moduli", PolyPair => ModuliClass, |i| {
            cohiggs_moduli_point(&i.p1, &i.p2).map_err(CliError::domain)
        }),
        command!("hopf h0", HopfBundleDesc => H0Value, |d| {
            h0_end0_twisted(&d).map_err(CliError::domain)
        }),
        command!("hopf classify", PairDesc => VerdictOut<PairVerdict>, |d| {
            classify_pair(&d)
                .map(|verdict| VerdictOut { verdict })
                .map_err(CliError::domain)
        }),
        command!("hopf example", ExampleIn => StableExample, |i| {
            construct_stable_example(i.c2).map_err(CliError::domain)
        }),
        command!("jumps stats", Jump => JumpStats, |j| {
            jump_stats(&j).map_err(CliError::domain)
        }),
        command!("jumps modify", ModifyIn => BundleDescriptor, |i| {
            apply_modification(&i.desc, &i.at, i.deg_lambda).map_err(CliError::domain)
        }),
        command!("jumps reduce", BundleDescriptor => ReducedJumps, |d| {
            reduce_jumps(&d).map_err(CliError::domain)
        }),
        command!("jumps pushforward", BundleDescriptor => Pushforward, |d| {
            pushforward_and_ramification(&d).map_err(CliError::domain)
        }),
        command!("higgs filtrable", FiltrableIn => H0Value, |i| {
            filtrable_higgs_h0(&i.case, i.g).map_err(CliError::domain)
        }),
        command!("higgs nonfiltrable", NonFiltrableIn => NonFiltrableExistence, |i| {
            nonfiltrable_existence(i.g, &i.delta, i.c2).map_err(CliError::domain)
        }),
        command!("higgs class", ClassIn => ClassOut, |i| {
            let class = g2_class_reduce(&i.divisor).map_err(CliError::domain)?;
            let h0 = h0_genus2(&class);
            Ok(ClassOut { class, h0 })
        }),
        command!("higgs genus2", G2HiggsInput => G2Decision, |i| {
            g2_higgs_decide(&i).map_err(CliError::domain)
        }),
        command!("higgs smooth", SmoothIn => SmoothnessVerdict, |i| {
            smoothness_verdict(i.g, &i.delta, i.c2, i.genus2.as_ref()).map_err(CliError::domain)
        }),
    ]
}

pub fn find(name: &str) -> Option<Command> {
    commands().into_iter().find(|c| c.name == name)
}
