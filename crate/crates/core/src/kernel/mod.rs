//! Simply typed λ-calculus core of the target higher-order logic: types,
//! terms, the typing judgment, capture-avoiding substitution, α-equivalence,
//! and β/η-normalization.
//!
//! Terms and types are immutable values and all operations are pure; fresh
//! names are generated locally per invocation, so everything here is safe to
//! call concurrently.

mod ops;
mod print;
mod sig;
mod term;
mod types;

pub use ops::{alpha_eq, beta_eta_normalize, substitute, typecheck};
pub use print::render_term;
pub use sig::{logical_instance_ok, Signature};
pub use term::{HolTerm, RESERVED};
pub use types::HolType;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("unbound constant `{0}`")]
    UnboundConstant(String),
    #[error("type mismatch at {at}: expected `{expected}`, found `{found}`")]
    TypeMismatch {
        at: String,
        expected: HolType,
        found: HolType,
    },
    #[error("`{0}` is a reserved logical constant")]
    ReservedName(String),
    #[error("constant `{0}` declared twice")]
    DuplicateConstant(String),
    #[error("logical constant `{name}` used at illegal type `{ty}`")]
    BadLogicalInstance { name: String, ty: HolType },
}
