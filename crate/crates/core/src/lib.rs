//! A desk-scale universal-reasoning toolkit: quantified multi-modal,
//! epistemic, free, and description logics are embedded into a simply typed
//! higher-order kernel by a small equational theory, and the embedding is
//! checked against a direct Kripke-semantics evaluator, a bounded
//! countermodel finder, and a prefixed tableau prover.

pub mod embedding;
pub mod kernel;
pub mod syntax;
pub mod value;

pub use embedding::{
    AlcConcept, DomainCondition, EmbedError, FrameClass, FrameFlags, Grounding, LogicPreset,
};
pub use kernel::{HolTerm, HolType, KernelError, Signature};
pub use syntax::{Declarations, ModalAst, ParseError, ProblemFile, Sort, TermAst};
pub use value::{Carriers, FunValue, Value};
