use schemars::JsonSchema;
use serde::{Deserialize, Serialize};

use super::HopfError;
use crate::arith::mat2::wedge;
use crate::arith::{FieldElem, Gaussian, HomPoly, Mat2, Vec2};

fn check_pair(a1: &Mat2, a2: &Mat2) -> Result<Option<Gaussian>, HopfError> {
    if !a1.is_trace_free() || !a2.is_trace_free() {
        return Err(HopfError::NotTraceFree);
    }
    Ok(FieldElem::common_extension(a1.entries().chain(a2.entries()))?)
}

/// `det([A₁, A₂])`.
pub fn commutator_det(a1: &Mat2, a2: &Mat2) -> Result<FieldElem, HopfError> {
    check_pair(a1, a2)?;
    Ok(a1.commutator(a2).det())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum CommonEigen {
    NoCommon,
    Common { vector: Vec2 },
}

fn e1() -> Vec2 {
    [FieldElem::one(), FieldElem::zero()]
}

fn e2() -> Vec2 {
    [FieldElem::zero(), FieldElem::one()]
}

/// Eigenvectors of a nonzero trace-free matrix, one per eigenvalue `±t`.
fn eigenvectors(a: &Mat2, ambient: Option<&Gaussian>) -> Result<Vec<Vec2>, HopfError> {
    let t = (-a.det()).sqrt_in_tower(ambient)?;
    let mut lambdas = vec![t.clone()];
    if !t.is_zero() {
        lambdas.push(-t);
    }
    let mut out = Vec::new();
    for l in lambdas {
        let [[p, q], [r, s]] = &a.sub(&Mat2::identity().scale(&l)).0;
        // rank one, so a nonzero row (p, q) gives the kernel (q, −p)
        let v = if !p.is_zero() || !q.is_zero() {
            [q.clone(), -p]
        } else {
            [s.clone(), -r]
        };
        out.push(v);
    }
    Ok(out)
}

/// Shared eigenvector by enumerating the eigenvectors of `A₁` (or of `A₂` when `A₁ = 0`).
pub fn common_eigenvector(a1: &Mat2, a2: &Mat2) -> Result<CommonEigen, HopfError> {
    let ext = check_pair(a1, a2)?;
    let (first, second) = if a1.is_zero() { (a2, a1) } else { (a1, a2) };
    if first.is_zero() {
        return Ok(CommonEigen::Common { vector: e1() });
    }
    for v in eigenvectors(first, ext.as_ref())? {
        if wedge(&v, &second.apply(&v)).is_zero() {
            return Ok(CommonEigen::Common { vector: v });
        }
    }
    Ok(CommonEigen::NoCommon)
}

/// Conjugation invariants `(t², s′, v′) = (−det A₁, tr A₁A₂, −det A₂)`.
pub fn even_invariants(a1: &Mat2, a2: &Mat2) -> (FieldElem, FieldElem, FieldElem) {
    (-a1.det(), a1.mul(a2).trace(), -a2.det())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
pub struct EvenNormalForm {
    pub t: FieldElem,
    pub t_sq: FieldElem,
    pub s_p: FieldElem,
    pub v_p: FieldElem,
    /// `P` with `P·A₁·P⁻¹ = a1_normal` and `P·A₂·P⁻¹ = a2_normal`.
    pub certificate: Mat2,
    pub a1_normal: Mat2,
    pub a2_normal: Mat2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum NormalFormEven {
    Stable(EvenNormalForm),
    Unstable { common: Vec2 },
}

/// Brings a pair without common eigenvector to
/// `A₁′ = [[t, s′], [0, −t]]`, `A₂′ = [[0, v′], [1, 0]]`.
pub fn normal_form_even(a1: &Mat2, a2: &Mat2) -> Result<NormalFormEven, HopfError> {
    let ext = check_pair(a1, a2)?;
    if a1.is_zero() && a2.is_zero() {
        return Err(HopfError::DegenerateInput);
    }
    let cdet = a1.commutator(a2).det();
    if cdet.is_zero() {
        return match common_eigenvector(a1, a2)? {
            CommonEigen::Common { vector } => Ok(NormalFormEven::Unstable { common: vector }),
            CommonEigen::NoCommon => unreachable!("vanishing commutator determinant"),
        };
    }
    let t = (-a1.det()).sqrt_in_tower(ext.as_ref())?;
    let tid = Mat2::identity().scale(&t);

    // f₂ not an eigenvector of A₁, f₁ = (A₁ + t)f₂; in the basis (f₁, f₂) A₁ = [[t, 1], [0, −t]]
    let one = FieldElem::one;
    let candidates = [e2(), e1(), [one(), one()]];
    let f2 = candidates
        .into_iter()
        .find(|f| !wedge(&a1.apply(f), f).is_zero())
        .expect("nonzero trace-free matrix has a non-eigenvector among e1, e2, e1+e2");
    let f1 = a1.add(&tid).apply(&f2);
    let q = Mat2::new(f1[0].clone(), f2[0].clone(), f1[1].clone(), f2[1].clone());
    let p1 = q.inverse().expect("f1, f2 independent");
    let b2 = a2.conjugate_by(&p1, &q);

    let u = b2.entry(0, 0).clone();
    let v = b2.entry(0, 1).clone();
    let s = b2.entry(1, 0).clone();
    let s_inv = s.inv().expect("s = 0 would give a common eigenvector");
    let p2 = Mat2::new(one(), -(&u * &s_inv), FieldElem::zero(), s_inv);
    let p2_inv = Mat2::new(one(), u.clone(), FieldElem::zero(), s.clone());

    let p = p2.mul(&p1);
    let p_inv = q.mul(&p2_inv);
    let s_p = &s + &(FieldElem::from_int(2) * &t * &u);
    let v_p = &u * &u + &s * &v;
    let a1_normal = Mat2::new(t.clone(), s_p.clone(), FieldElem::zero(), -&t);
    let a2_normal = Mat2::new(FieldElem::zero(), v_p.clone(), one(), FieldElem::zero());
    assert_eq!(a1.conjugate_by(&p, &p_inv), a1_normal);
    assert_eq!(a2.conjugate_by(&p, &p_inv), a2_normal);
    let t_sq = &t * &t;
    assert_eq!(
        FieldElem::from_int(4) * &t_sq * &v_p - &s_p * &s_p,
        cdet,
        "4t²v′ − s′² = det[A₁, A₂]"
    );
    Ok(NormalFormEven::Stable(EvenNormalForm {
        t,
        t_sq,
        s_p,
        v_p,
        certificate: p,
        a1_normal,
        a2_normal,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, JsonSchema)]
#[serde(tag = "kind")]
pub enum NormalFormOdd {
    /// Coefficients of `b′ = c·b + a²`.
    Stable { b1: Gaussian, b2: Gaussian, b3: Gaussian },
    Unstable,
}

/// `φ₀ = [[a, b], [c, −a]]` with `deg a = 1`, `deg b = 2`, `c` constant.
pub fn normal_form_odd(a: &HomPoly, b: &HomPoly, c: &Gaussian) -> Result<NormalFormOdd, HopfError> {
    if a.degree() != 1 || b.degree() != 2 {
        return Err(HopfError::DegreeMismatch(format!(
            "expected deg a = 1, deg b = 2, got {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(HopfError::DegenerateInput);
    }
    if c.is_zero() {
        return Ok(NormalFormOdd::Unstable);
    }
    let bp = b.scale(c).add(&a.mul(a)).expect("both quadratic");
    let [b1, b2, b3] = bp.coeffs() else {
        unreachable!()
    };
    Ok(NormalFormOdd::Stable {
        b1: b1.clone(),
        b2: b2.clone(),
        b3: b3.clone(),
    })
}
