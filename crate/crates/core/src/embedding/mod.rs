//! The equational theory mapping object-logic syntax to terms of the target
//! logic: world-lifted connectives, type-indexed quantifier instances, frame
//! presets, domain conditions, and validity grounding.

mod alc;
mod embed;
mod free;
mod preset;

pub use alc::{subsumption, translate_alc, AlcConcept};
pub use embed::{embed, frame_axioms, ground};
pub use free::{embed_free, free_signature, EXISTENCE};
pub use preset::{DomainCondition, FrameClass, FrameFlags, Grounding, LogicPreset, EIW};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("sort error: {0}")]
    SortError(String),
    #[error("varying domains require the existence predicate `eiw` in the signature")]
    MissingExistencePredicate,
    #[error("unsupported connective: {0}")]
    UnsupportedConnective(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{alpha_eq, beta_eta_normalize, render_term, typecheck, HolTerm, HolType};
    use crate::syntax::{Declarations, ModalAst, Sort};

    fn decls() -> Declarations {
        let mut d = Declarations::new();
        d.consts.push(("p".into(), Sort::Prop));
        d.consts.push(("q".into(), Sort::Prop));
        d.consts
            .push(("P".into(), Sort::fun(Sort::Indiv, Sort::Prop)));
        d
    }

    fn unfolded(ast: &ModalAst, preset: &LogicPreset) -> String {
        let sig = preset.signature(&decls()).unwrap();
        let t = embed(ast, preset, &sig).unwrap();
        render_term(&beta_eta_normalize(&t).unwrap())
    }

    #[test]
    fn lifted_conjunction_unfolds_pointwise() {
        let preset = LogicPreset::new(FrameClass::K);
        let ast = ModalAst::and(ModalAst::atom("p"), ModalAst::atom("q"));
        assert_eq!(unfolded(&ast, &preset), "\\w:i. p w & q w");
    }

    #[test]
    fn box_unfolds_through_accessibility() {
        let preset = LogicPreset::new(FrameClass::K);
        let ast = ModalAst::boxed("r", ModalAst::atom("p"));
        assert_eq!(unfolded(&ast, &preset), "\\w:i. forall v:i. r w v -> p v");
    }

    #[test]
    fn universal_s5_box_quantifies_over_all_worlds() {
        let preset = LogicPreset::new(FrameClass::S5Universal);
        let ast = ModalAst::boxed("r", ModalAst::atom("p"));
        // η-contracted canonical form of \w. forall v:i. p v
        assert_eq!(unfolded(&ast, &preset), "\\w:i. forall p");
    }

    #[test]
    fn atom_embedding_is_pure_type_lifting() {
        let preset = LogicPreset::new(FrameClass::K);
        let sig = preset.signature(&decls()).unwrap();
        let t = embed(&ModalAst::atom("p"), &preset, &sig).unwrap();
        assert_eq!(t, HolTerm::cst("p", HolType::world_pred()));
    }

    #[test]
    fn embedding_has_world_predicate_type_and_grounding_closes_it() {
        let preset = LogicPreset::new(FrameClass::Kt);
        let sig = preset.signature(&decls()).unwrap();
        let ast = ModalAst::implies(
            ModalAst::boxed("r", ModalAst::atom("p")),
            ModalAst::atom("p"),
        );
        let t = embed(&ast, &preset, &sig).unwrap();
        assert_eq!(typecheck(&t, &sig).unwrap(), HolType::world_pred());
        let g = ground(&t, &preset).unwrap();
        assert_eq!(typecheck(&g, &sig).unwrap(), HolType::Bool);
    }

    #[test]
    fn actual_world_grounding_applies_the_designated_constant() {
        let preset =
            LogicPreset::new(FrameClass::K).with_grounding(Grounding::Actual("w0".into()));
        let sig = preset.signature(&decls()).unwrap();
        let t = embed(&ModalAst::atom("p"), &preset, &sig).unwrap();
        let g = beta_eta_normalize(&ground(&t, &preset).unwrap()).unwrap();
        assert_eq!(render_term(&g), "p w0");
    }

    #[test]
    fn constant_domain_quantifier_is_unguarded() {
        let preset = LogicPreset::new(FrameClass::K);
        let ast = ModalAst::forall(
            "x",
            Sort::Indiv,
            ModalAst::Atom("P".into(), vec![crate::syntax::TermAst::Var("x".into())]),
        );
        assert_eq!(unfolded(&ast, &preset), "\\w:i. forall x:mu. P x w");
    }

    #[test]
    fn varying_domain_quantifier_is_guarded_by_eiw() {
        let preset = LogicPreset::new(FrameClass::K).with_domains(DomainCondition::Varying);
        let ast = ModalAst::forall(
            "x",
            Sort::Indiv,
            ModalAst::Atom("P".into(), vec![crate::syntax::TermAst::Var("x".into())]),
        );
        assert_eq!(
            unfolded(&ast, &preset),
            "\\w:i. forall x:mu. eiw x w -> P x w"
        );
    }

    #[test]
    fn varying_domains_need_eiw_in_signature() {
        let preset = LogicPreset::new(FrameClass::K).with_domains(DomainCondition::Varying);
        // A signature missing eiw: build from the constant-domain preset.
        let sig = LogicPreset::new(FrameClass::K).signature(&decls()).unwrap();
        let ast = ModalAst::forall("x", Sort::Indiv, ModalAst::atom("p"));
        assert_eq!(
            embed(&ast, &preset, &sig),
            Err(EmbedError::MissingExistencePredicate)
        );
    }

    #[test]
    fn frame_axioms_per_preset() {
        let kt = LogicPreset::new(FrameClass::Kt);
        let axs = frame_axioms(&kt);
        assert_eq!(axs.len(), 1);
        let rel_ty = HolType::arrow(HolType::World, HolType::world_pred());
        let expected = HolTerm::forall(
            "w",
            HolType::World,
            HolTerm::app2(
                HolTerm::cst("r", rel_ty),
                HolTerm::var("w", HolType::World),
                HolTerm::var("w", HolType::World),
            ),
        );
        assert!(alpha_eq(&axs[0], &expected));

        assert_eq!(frame_axioms(&LogicPreset::new(FrameClass::S4)).len(), 2);
        assert!(frame_axioms(&LogicPreset::new(FrameClass::K)).is_empty());
        assert!(frame_axioms(&LogicPreset::new(FrameClass::S5Universal)).is_empty());
    }

    #[test]
    fn free_quantification_ranges_over_existents() {
        let d = decls();
        let sig = free_signature(&d).unwrap();
        let ast = ModalAst::FreeForall(
            "x".into(),
            Box::new(ModalAst::ExistsPred(crate::syntax::TermAst::Var("x".into()))),
        );
        let t = beta_eta_normalize(&embed_free(&ast, &sig).unwrap()).unwrap();
        assert_eq!(render_term(&t), "forall x:mu. E x -> E x");
        assert_eq!(typecheck(&t, &sig).unwrap(), HolType::Bool);
    }

    #[test]
    fn alc_value_restriction_is_a_box() {
        let c = AlcConcept::all(
            "s",
            AlcConcept::and(AlcConcept::atomic("A"), AlcConcept::atomic("B")),
        );
        assert_eq!(
            translate_alc(&c),
            ModalAst::boxed("s", ModalAst::and(ModalAst::atom("A"), ModalAst::atom("B")))
        );
        let sub = subsumption(&AlcConcept::atomic("A"), &AlcConcept::atomic("A"));
        assert_eq!(
            sub,
            ModalAst::implies(ModalAst::atom("A"), ModalAst::atom("A"))
        );
    }
}
