//! Classical embedding of the free-logic fragment: quantifiers range over
//! existents via the existence predicate `E`, atoms stay classical, and
//! formulas land at type `o` with no world lifting. Atoms whose arguments
//! denote non-existents may still be true (positive free logic); there is no
//! inner/outer-domain star element.

use super::EmbedError;
use crate::kernel::{HolTerm, HolType, KernelError, Signature};
use crate::syntax::{Declarations, ModalAst, TermAst};

/// Name of the classical existence predicate.
pub const EXISTENCE: &str = "E";

/// Signature for free-logic problems: classically lifted constants plus `E`.
pub fn free_signature(decls: &Declarations) -> Result<Signature, KernelError> {
    let mut sig = Signature::new();
    for (name, sort) in &decls.consts {
        sig.declare(name, sort.lift_classical())?;
    }
    sig.declare(EXISTENCE, HolType::arrow(HolType::Indiv, HolType::Bool))?;
    Ok(sig)
}

fn lift_term(
    t: &TermAst,
    sig: &Signature,
    scope: &[(String, HolType)],
) -> Result<HolTerm, EmbedError> {
    match t {
        TermAst::Var(n) => scope
            .iter()
            .rev()
            .find(|(v, _)| v == n)
            .map(|(v, ty)| HolTerm::var(v.clone(), ty.clone()))
            .ok_or_else(|| EmbedError::SortError(format!("unbound variable `{}`", n))),
        TermAst::Const(n) => sig
            .lookup(n)
            .map(|ty| HolTerm::cst(n.clone(), ty.clone()))
            .ok_or_else(|| EmbedError::SortError(format!("undeclared constant `{}`", n))),
        TermAst::App(f, a) => Ok(HolTerm::app(
            lift_term(f, sig, scope)?,
            lift_term(a, sig, scope)?,
        )),
    }
}

/// Embeds a non-modal free-logic formula as a classical term of type `o`.
pub fn embed_free(ast: &ModalAst, sig: &Signature) -> Result<HolTerm, EmbedError> {
    let mut scope = Vec::new();
    go(ast, sig, &mut scope)
}

fn existence_atom(t: HolTerm) -> HolTerm {
    HolTerm::app(
        HolTerm::cst(EXISTENCE, HolType::arrow(HolType::Indiv, HolType::Bool)),
        t,
    )
}

fn go(
    ast: &ModalAst,
    sig: &Signature,
    scope: &mut Vec<(String, HolType)>,
) -> Result<HolTerm, EmbedError> {
    match ast {
        ModalAst::Top => Ok(HolTerm::truth()),
        ModalAst::Bottom => Ok(HolTerm::falsity()),
        ModalAst::Atom(head, args) => {
            let head_term = if scope.iter().any(|(v, _)| v == head) {
                TermAst::Var(head.clone())
            } else {
                TermAst::Const(head.clone())
            };
            let mut t = lift_term(&head_term, sig, scope)?;
            for a in args {
                t = HolTerm::app(t, lift_term(a, sig, scope)?);
            }
            match t.type_of() {
                Ok(HolType::Bool) => Ok(t),
                Ok(ty) => Err(EmbedError::SortError(format!(
                    "atom `{}` has classical type `{}`, expected `o`",
                    head, ty
                ))),
                Err(e) => Err(EmbedError::SortError(e.to_string())),
            }
        }
        ModalAst::ExistsPred(t) => Ok(existence_atom(lift_term(t, sig, scope)?)),
        ModalAst::Not(f) => Ok(HolTerm::neg(go(f, sig, scope)?)),
        ModalAst::And(f, g) => Ok(HolTerm::conj(go(f, sig, scope)?, go(g, sig, scope)?)),
        ModalAst::Or(f, g) => Ok(HolTerm::disj(go(f, sig, scope)?, go(g, sig, scope)?)),
        ModalAst::Implies(f, g) => Ok(HolTerm::implies(go(f, sig, scope)?, go(g, sig, scope)?)),
        ModalAst::Iff(f, g) => Ok(HolTerm::equiv(go(f, sig, scope)?, go(g, sig, scope)?)),
        ModalAst::FreeForall(v, f) => {
            scope.push((v.clone(), HolType::Indiv));
            let body = go(f, sig, scope);
            scope.pop();
            Ok(HolTerm::forall(
                v.clone(),
                HolType::Indiv,
                HolTerm::implies(
                    existence_atom(HolTerm::var(v.clone(), HolType::Indiv)),
                    body?,
                ),
            ))
        }
        ModalAst::FreeExists(v, f) => {
            scope.push((v.clone(), HolType::Indiv));
            let body = go(f, sig, scope);
            scope.pop();
            Ok(HolTerm::exists(
                v.clone(),
                HolType::Indiv,
                HolTerm::conj(
                    existence_atom(HolTerm::var(v.clone(), HolType::Indiv)),
                    body?,
                ),
            ))
        }
        ModalAst::Box_(..)
        | ModalAst::Dia(..)
        | ModalAst::CommonKnows(..)
        | ModalAst::Forall(..)
        | ModalAst::Exists(..) => Err(EmbedError::UnsupportedConnective(
            "free-logic embedding covers the non-modal fragment with free binders only".into(),
        )),
    }
}
