use super::ast::{Declarations, ModalAst};
use crate::embedding::{FrameClass, LogicPreset};

/// Which family of logic a problem file lives in. Free-logic problems have no
/// frame/modal structure and are checked classically.
#[derive(Clone, Debug, PartialEq)]
pub enum LogicKind {
    Modal(FrameClass),
    Free,
}

/// A parsed and cross-reference-checked problem file.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemFile {
    pub logic: LogicKind,
    /// Present iff `logic` is modal.
    pub preset: Option<LogicPreset>,
    pub decls: Declarations,
    pub axioms: Vec<(String, ModalAst)>,
    pub conjectures: Vec<(String, ModalAst)>,
}

impl ProblemFile {
    pub fn conjecture(&self, name: &str) -> Option<&ModalAst> {
        self.conjectures
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f)
    }

    pub fn axiom(&self, name: &str) -> Option<&ModalAst> {
        self.axioms.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    /// Axioms in declaration order, used as premises.
    pub fn premises(&self) -> Vec<ModalAst> {
        self.axioms.iter().map(|(_, f)| f.clone()).collect()
    }
}
