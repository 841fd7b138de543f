pub mod arith;
pub mod json;
pub mod surface;
pub mod invariants;
pub mod hopf;
pub mod jumps;
pub mod higgs;
pub mod sweep;
