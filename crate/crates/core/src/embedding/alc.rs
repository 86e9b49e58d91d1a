//! Concepts of the base description logic and their reading as multi-modal
//! K formulas: value restrictions become boxes over the role's modality,
//! existential restrictions become diamonds, and subsumption becomes global
//! validity of the implication.

use crate::syntax::ModalAst;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlcConcept {
    Top,
    Bottom,
    Atomic(String),
    Not(Box<AlcConcept>),
    And(Box<AlcConcept>, Box<AlcConcept>),
    Or(Box<AlcConcept>, Box<AlcConcept>),
    /// ∃ role . concept
    SomeValues(String, Box<AlcConcept>),
    /// ∀ role . concept
    AllValues(String, Box<AlcConcept>),
}

impl AlcConcept {
    pub fn atomic(name: impl Into<String>) -> AlcConcept {
        AlcConcept::Atomic(name.into())
    }

    pub fn not(c: AlcConcept) -> AlcConcept {
        AlcConcept::Not(Box::new(c))
    }

    pub fn and(a: AlcConcept, b: AlcConcept) -> AlcConcept {
        AlcConcept::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: AlcConcept, b: AlcConcept) -> AlcConcept {
        AlcConcept::Or(Box::new(a), Box::new(b))
    }

    pub fn some(role: impl Into<String>, c: AlcConcept) -> AlcConcept {
        AlcConcept::SomeValues(role.into(), Box::new(c))
    }

    pub fn all(role: impl Into<String>, c: AlcConcept) -> AlcConcept {
        AlcConcept::AllValues(role.into(), Box::new(c))
    }

    /// Role names occurring in the concept, the modality index set of the
    /// translated formula.
    pub fn roles(&self, acc: &mut std::collections::BTreeSet<String>) {
        match self {
            AlcConcept::Top | AlcConcept::Bottom | AlcConcept::Atomic(_) => {}
            AlcConcept::Not(c) => c.roles(acc),
            AlcConcept::And(a, b) | AlcConcept::Or(a, b) => {
                a.roles(acc);
                b.roles(acc);
            }
            AlcConcept::SomeValues(r, c) | AlcConcept::AllValues(r, c) => {
                acc.insert(r.clone());
                c.roles(acc);
            }
        }
    }
}

/// Translates a concept into its multi-modal K formula.
pub fn translate_alc(concept: &AlcConcept) -> ModalAst {
    match concept {
        AlcConcept::Top => ModalAst::Top,
        AlcConcept::Bottom => ModalAst::Bottom,
        AlcConcept::Atomic(name) => ModalAst::atom(name.clone()),
        AlcConcept::Not(c) => ModalAst::not(translate_alc(c)),
        AlcConcept::And(a, b) => ModalAst::and(translate_alc(a), translate_alc(b)),
        AlcConcept::Or(a, b) => ModalAst::or(translate_alc(a), translate_alc(b)),
        AlcConcept::AllValues(role, c) => ModalAst::boxed(role.clone(), translate_alc(c)),
        AlcConcept::SomeValues(role, c) => ModalAst::dia(role.clone(), translate_alc(c)),
    }
}

/// `C ⊑ D` as the formula whose global validity expresses the subsumption.
pub fn subsumption(sub: &AlcConcept, sup: &AlcConcept) -> ModalAst {
    ModalAst::implies(translate_alc(sub), translate_alc(sup))
}
