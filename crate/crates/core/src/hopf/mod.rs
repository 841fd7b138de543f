//! Rank-2 co-Higgs bundles on Hopf surfaces.

mod h0;
mod moduli;
mod normal_form;
mod polymat;

pub use h0::{
    classify_pair, construct_stable_example, h0_end0_twisted, HopfBundleDesc, PairDesc,
    PairVerdict, SplitShape, StableExample,
};
pub use moduli::{
    cohiggs_moduli_point, ModuliClass, ModuliComponent, ModuliPointEven, ModuliPointOdd,
    ProjPair, Z1, Z2,
};
pub use normal_form::{
    common_eigenvector, commutator_det, even_invariants, normal_form_even, normal_form_odd,
    CommonEigen, EvenNormalForm, NormalFormEven, NormalFormOdd,
};
pub use polymat::{
    integrability_check, proportionality_decompose, DegreeProfile, PolyMat2, Proportionality,
};

use thiserror::Error;

use crate::arith::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("matrix is not trace-free")]
    NotTraceFree,
    #[error("both matrices vanish")]
    DegenerateInput,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("inconsistent case: {0}")]
    InconsistentCase(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}
