//! The equational theory: each object-logic connective is equated with a
//! world-lifted λ-term, constants and variables are handled by type-lifting
//! alone, and quantifiers expand type-indexed instances. The table is finite
//! and non-recursive; `embed` composes schema applications and leaves
//! unfolding to β/η-normalization in the kernel.

use super::preset::{DomainCondition, Grounding, LogicPreset, EIW};
use super::EmbedError;
use crate::kernel::{HolTerm, HolType, Signature};
use crate::syntax::{ModalAst, Sort, TermAst};

fn wp() -> HolType {
    HolType::world_pred()
}

/// `\f. \w. ~(f w)`
fn lifted_not() -> HolTerm {
    HolTerm::lam(
        "f",
        wp(),
        HolTerm::lam(
            "w",
            HolType::World,
            HolTerm::neg(HolTerm::app(
                HolTerm::var("f", wp()),
                HolTerm::var("w", HolType::World),
            )),
        ),
    )
}

/// `\f. \g. \w. f w <op> g w`
fn lifted_binop(op: fn(HolTerm, HolTerm) -> HolTerm) -> HolTerm {
    HolTerm::lam(
        "f",
        wp(),
        HolTerm::lam(
            "g",
            wp(),
            HolTerm::lam(
                "w",
                HolType::World,
                op(
                    HolTerm::app(HolTerm::var("f", wp()), HolTerm::var("w", HolType::World)),
                    HolTerm::app(HolTerm::var("g", wp()), HolTerm::var("w", HolType::World)),
                ),
            ),
        ),
    )
}

/// `\f. \w. forall v:i. r w v -> f v`
fn lifted_box_rel(rel: &str) -> HolTerm {
    let rel_ty = HolType::arrow(HolType::World, wp());
    HolTerm::lam(
        "f",
        wp(),
        HolTerm::lam(
            "w",
            HolType::World,
            HolTerm::forall(
                "v",
                HolType::World,
                HolTerm::implies(
                    HolTerm::app2(
                        HolTerm::cst(rel, rel_ty),
                        HolTerm::var("w", HolType::World),
                        HolTerm::var("v", HolType::World),
                    ),
                    HolTerm::app(HolTerm::var("f", wp()), HolTerm::var("v", HolType::World)),
                ),
            ),
        ),
    )
}

/// `\f. \w. forall v:i. f v` — the universal-accessibility box.
fn lifted_box_universal() -> HolTerm {
    HolTerm::lam(
        "f",
        wp(),
        HolTerm::lam(
            "w",
            HolType::World,
            HolTerm::forall(
                "v",
                HolType::World,
                HolTerm::app(HolTerm::var("f", wp()), HolTerm::var("v", HolType::World)),
            ),
        ),
    )
}

/// `\f. \w. exists v:i. r w v & f v`
fn lifted_dia_rel(rel: &str) -> HolTerm {
    let rel_ty = HolType::arrow(HolType::World, wp());
    HolTerm::lam(
        "f",
        wp(),
        HolTerm::lam(
            "w",
            HolType::World,
            HolTerm::exists(
                "v",
                HolType::World,
                HolTerm::conj(
                    HolTerm::app2(
                        HolTerm::cst(rel, rel_ty),
                        HolTerm::var("w", HolType::World),
                        HolTerm::var("v", HolType::World),
                    ),
                    HolTerm::app(HolTerm::var("f", wp()), HolTerm::var("v", HolType::World)),
                ),
            ),
        ),
    )
}

fn lifted_dia_universal() -> HolTerm {
    HolTerm::lam(
        "f",
        wp(),
        HolTerm::lam(
            "w",
            HolType::World,
            HolTerm::exists(
                "v",
                HolType::World,
                HolTerm::app(HolTerm::var("f", wp()), HolTerm::var("v", HolType::World)),
            ),
        ),
    )
}

/// `\w. true` and `\w. false`
fn lifted_const(b: bool) -> HolTerm {
    HolTerm::lam(
        "w",
        HolType::World,
        if b { HolTerm::truth() } else { HolTerm::falsity() },
    )
}

/// Possibilist quantifier instance at lifted sort `alpha`:
/// `\h:(alpha -> (i->o)). \w. forall x:alpha. h x w`
fn quant_possibilist(alpha: &HolType, universal: bool) -> HolTerm {
    let hty = HolType::arrow(alpha.clone(), wp());
    let body = HolTerm::app2(
        HolTerm::var("h", hty.clone()),
        HolTerm::var("x", alpha.clone()),
        HolTerm::var("w", HolType::World),
    );
    let quant = if universal {
        HolTerm::forall("x", alpha.clone(), body)
    } else {
        HolTerm::exists("x", alpha.clone(), body)
    };
    HolTerm::lam("h", hty, HolTerm::lam("w", HolType::World, quant))
}

/// Actualist quantifier instance at sort `mu`, guarded by the existence
/// predicate: `\h. \w. forall x:mu. eiw x w -> h x w` (dual for exists).
fn quant_actualist(universal: bool) -> HolTerm {
    let alpha = HolType::Indiv;
    let hty = HolType::arrow(alpha.clone(), wp());
    let eiw_ty = HolType::arrow(HolType::Indiv, wp());
    let guard = HolTerm::app2(
        HolTerm::cst(EIW, eiw_ty),
        HolTerm::var("x", alpha.clone()),
        HolTerm::var("w", HolType::World),
    );
    let applied = HolTerm::app2(
        HolTerm::var("h", hty.clone()),
        HolTerm::var("x", alpha.clone()),
        HolTerm::var("w", HolType::World),
    );
    let quant = if universal {
        HolTerm::forall("x", alpha, HolTerm::implies(guard, applied))
    } else {
        HolTerm::exists("x", alpha, HolTerm::conj(guard, applied))
    };
    HolTerm::lam("h", hty, HolTerm::lam("w", HolType::World, quant))
}

/// Type-lifts an atom-argument term: constants and variables keep their
/// names, with sorts replaced by lifted types.
fn lift_term(t: &TermAst, sig: &Signature, scope: &[(String, HolType)]) -> Result<HolTerm, EmbedError> {
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

/// Embeds an object-logic formula as a world predicate of type `i -> o`.
pub fn embed(ast: &ModalAst, preset: &LogicPreset, sig: &Signature) -> Result<HolTerm, EmbedError> {
    let mut scope = Vec::new();
    embed_scoped(ast, preset, sig, &mut scope)
}

fn embed_scoped(
    ast: &ModalAst,
    preset: &LogicPreset,
    sig: &Signature,
    scope: &mut Vec<(String, HolType)>,
) -> Result<HolTerm, EmbedError> {
    match ast {
        ModalAst::Top => Ok(lifted_const(true)),
        ModalAst::Bottom => Ok(lifted_const(false)),
        ModalAst::Atom(head, args) => {
            let head_term = lift_term(&head_as_term(head, scope), sig, scope)?;
            let mut t = head_term;
            for a in args {
                t = HolTerm::app(t, lift_term(a, sig, scope)?);
            }
            match t.type_of() {
                Ok(ty) if ty == wp() => Ok(t),
                Ok(ty) => Err(EmbedError::SortError(format!(
                    "atom `{}` lifts to `{}`, expected `i->o`",
                    head, ty
                ))),
                Err(e) => Err(EmbedError::SortError(e.to_string())),
            }
        }
        ModalAst::Not(f) => Ok(HolTerm::app(
            lifted_not(),
            embed_scoped(f, preset, sig, scope)?,
        )),
        ModalAst::And(f, g) => Ok(HolTerm::app2(
            lifted_binop(HolTerm::conj),
            embed_scoped(f, preset, sig, scope)?,
            embed_scoped(g, preset, sig, scope)?,
        )),
        ModalAst::Or(f, g) => Ok(HolTerm::app2(
            lifted_binop(HolTerm::disj),
            embed_scoped(f, preset, sig, scope)?,
            embed_scoped(g, preset, sig, scope)?,
        )),
        ModalAst::Implies(f, g) => Ok(HolTerm::app2(
            lifted_binop(HolTerm::implies),
            embed_scoped(f, preset, sig, scope)?,
            embed_scoped(g, preset, sig, scope)?,
        )),
        ModalAst::Iff(f, g) => Ok(HolTerm::app2(
            lifted_binop(HolTerm::equiv),
            embed_scoped(f, preset, sig, scope)?,
            embed_scoped(g, preset, sig, scope)?,
        )),
        ModalAst::Box_(idx, f) => {
            let schema = if preset.frame.eliminates_accessibility() {
                lifted_box_universal()
            } else {
                lifted_box_rel(&LogicPreset::accessibility_const(idx))
            };
            Ok(HolTerm::app(schema, embed_scoped(f, preset, sig, scope)?))
        }
        ModalAst::Dia(idx, f) => {
            let schema = if preset.frame.eliminates_accessibility() {
                lifted_dia_universal()
            } else {
                lifted_dia_rel(&LogicPreset::accessibility_const(idx))
            };
            Ok(HolTerm::app(schema, embed_scoped(f, preset, sig, scope)?))
        }
        ModalAst::Forall(v, sort, f) | ModalAst::Exists(v, sort, f) => {
            let universal = matches!(ast, ModalAst::Forall(..));
            let alpha = sort.lift();
            let schema = if *sort == Sort::Indiv && preset.domains == DomainCondition::Varying {
                if !sig.contains(EIW) {
                    return Err(EmbedError::MissingExistencePredicate);
                }
                quant_actualist(universal)
            } else {
                // Higher sorts are always possibilist.
                quant_possibilist(&alpha, universal)
            };
            scope.push((v.clone(), alpha.clone()));
            let body = embed_scoped(f, preset, sig, scope);
            scope.pop();
            Ok(HolTerm::app(schema, HolTerm::lam(v.clone(), alpha, body?)))
        }
        ModalAst::FreeForall(..) | ModalAst::FreeExists(..) | ModalAst::ExistsPred(_) => Err(
            EmbedError::UnsupportedConnective("free-logic constructs embed classically".into()),
        ),
        ModalAst::CommonKnows(..) => Err(EmbedError::UnsupportedConnective(
            "common knowledge has no embedding equation; it is evaluated semantically".into(),
        )),
    }
}

fn head_as_term(head: &str, scope: &[(String, HolType)]) -> TermAst {
    if scope.iter().any(|(v, _)| v == head) {
        TermAst::Var(head.to_string())
    } else {
        TermAst::Const(head.to_string())
    }
}

/// Grounds a world predicate into a closed formula of type `o`.
pub fn ground(term: &HolTerm, preset: &LogicPreset) -> Result<HolTerm, EmbedError> {
    let ty = term.type_of().map_err(|e| EmbedError::SortError(e.to_string()))?;
    if ty != wp() {
        return Err(EmbedError::SortError(format!(
            "grounding expects `i->o`, found `{}`",
            ty
        )));
    }
    match &preset.grounding {
        Grounding::Global => Ok(HolTerm::forall(
            "w",
            HolType::World,
            HolTerm::app(term.clone(), HolTerm::var("w", HolType::World)),
        )),
        Grounding::Actual(w0) => Ok(HolTerm::app(
            term.clone(),
            HolTerm::cst(w0.clone(), HolType::World),
        )),
    }
}

/// Closed frame-condition formulas for every flagged condition and every
/// modality index. Empty when the preset eliminates the relation.
pub fn frame_axioms(preset: &LogicPreset) -> Vec<HolTerm> {
    if preset.frame.eliminates_accessibility() {
        return Vec::new();
    }
    let flags = preset.frame.flags();
    let rel_ty = HolType::arrow(HolType::World, wp());
    let mut axioms = Vec::new();
    let w = || HolTerm::var("w", HolType::World);
    let v = || HolTerm::var("v", HolType::World);
    let u = || HolTerm::var("u", HolType::World);
    for idx in &preset.indices {
        let r = HolTerm::cst(LogicPreset::accessibility_const(idx), rel_ty.clone());
        let rwv = |a: HolTerm, b: HolTerm| HolTerm::app2(r.clone(), a, b);
        if flags.reflexive {
            axioms.push(HolTerm::forall("w", HolType::World, rwv(w(), w())));
        }
        if flags.symmetric {
            axioms.push(HolTerm::forall(
                "w",
                HolType::World,
                HolTerm::forall(
                    "v",
                    HolType::World,
                    HolTerm::implies(rwv(w(), v()), rwv(v(), w())),
                ),
            ));
        }
        if flags.transitive {
            axioms.push(HolTerm::forall(
                "w",
                HolType::World,
                HolTerm::forall(
                    "v",
                    HolType::World,
                    HolTerm::forall(
                        "u",
                        HolType::World,
                        HolTerm::implies(
                            HolTerm::conj(rwv(w(), v()), rwv(v(), u())),
                            rwv(w(), u()),
                        ),
                    ),
                ),
            ));
        }
        if flags.euclidean {
            axioms.push(HolTerm::forall(
                "w",
                HolType::World,
                HolTerm::forall(
                    "v",
                    HolType::World,
                    HolTerm::forall(
                        "u",
                        HolType::World,
                        HolTerm::implies(
                            HolTerm::conj(rwv(w(), v()), rwv(w(), u())),
                            rwv(v(), u()),
                        ),
                    ),
                ),
            ));
        }
        if flags.universal {
            axioms.push(HolTerm::forall(
                "w",
                HolType::World,
                HolTerm::forall("v", HolType::World, rwv(w(), v())),
            ));
        }
    }
    axioms
}
