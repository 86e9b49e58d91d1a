//! Canonical text rendering of terms, used by golden tests and the `embed`
//! subcommand. The grammar (documented in the README) is stable:
//!
//! ```text
//! term  := binder | iff
//! binder:= "\" x ":" type "." term
//!        | ("forall" | "exists") x ":" type "." term      (sugared quantifier)
//! iff   := imp ("<->" iff)?
//! imp   := or ("->" imp)?
//! or    := and ("|" and)*
//! and   := cmp ("&" cmp)*
//! cmp   := neg ("=" neg)?
//! neg   := "~" neg | app
//! app   := atom atom*
//! atom  := name | "(" term ")"
//! ```
//!
//! Binder bodies extend as far right as possible; application is
//! left-associative; parentheses appear only where the grammar requires them.

use std::fmt::Write;

use super::term::HolTerm;

const PREC_BINDER: u8 = 0;
const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_EQ: u8 = 5;
const PREC_NOT: u8 = 6;
const PREC_APP: u8 = 7;
const PREC_ATOM: u8 = 8;

/// Renders a term in the canonical grammar.
pub fn render_term(term: &HolTerm) -> String {
    let mut out = String::new();
    render(term, PREC_BINDER, &mut out);
    out
}

fn binop_symbol(name: &str) -> Option<(&'static str, u8, bool)> {
    // (symbol, precedence, right-associative)
    match name {
        "iff" => Some(("<->", PREC_IFF, true)),
        "imp" => Some(("->", PREC_IMP, true)),
        "or" => Some(("|", PREC_OR, false)),
        "and" => Some(("&", PREC_AND, false)),
        "eq" => Some(("=", PREC_EQ, false)),
        _ => None,
    }
}

fn render(term: &HolTerm, min_prec: u8, out: &mut String) {
    match term {
        HolTerm::Const(name, _) => out.push_str(name),
        HolTerm::Var(name, _) => out.push_str(name),
        HolTerm::Lam(name, ty, body) => {
            parenthesized(min_prec > PREC_BINDER, out, |out| {
                let _ = write!(out, "\\{}:{}. ", name, ty);
                render(body, PREC_BINDER, out);
            });
        }
        HolTerm::App(..) => render_app(term, min_prec, out),
    }
}

fn render_app(term: &HolTerm, min_prec: u8, out: &mut String) {
    let (head, args) = term.spine();

    if let HolTerm::Const(name, _) = head {
        // Quantifier sugar: forall (\x:t. b) prints as a binder.
        if (name == "forall" || name == "exists") && args.len() == 1 {
            if let HolTerm::Lam(x, ty, body) = args[0] {
                parenthesized(min_prec > PREC_BINDER, out, |out| {
                    let _ = write!(out, "{} {}:{}. ", name, x, ty);
                    render(body, PREC_BINDER, out);
                });
                return;
            }
        }
        if name == "not" && args.len() == 1 {
            parenthesized(min_prec > PREC_NOT, out, |out| {
                out.push('~');
                render(args[0], PREC_NOT, out);
            });
            return;
        }
        if let Some((sym, prec, right)) = binop_symbol(name) {
            if args.len() == 2 {
                parenthesized(min_prec > prec, out, |out| {
                    let (lp, rp) = if right {
                        (prec + 1, prec)
                    } else {
                        (prec, prec + 1)
                    };
                    render(args[0], lp, out);
                    let _ = write!(out, " {} ", sym);
                    render(args[1], rp, out);
                });
                return;
            }
        }
    }

    parenthesized(min_prec > PREC_APP, out, |out| {
        render(head, PREC_APP, out);
        for arg in args {
            out.push(' ');
            render(arg, PREC_ATOM, out);
        }
    });
}

fn parenthesized(needed: bool, out: &mut String, body: impl FnOnce(&mut String)) {
    if needed {
        out.push('(');
    }
    body(out);
    if needed {
        out.push(')');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::types::HolType;
    use HolType::World;

    fn p() -> HolTerm {
        HolTerm::cst("p", HolType::world_pred())
    }

    #[test]
    fn lifted_conjunction_form() {
        let w = HolTerm::var("w", World);
        let t = HolTerm::lam(
            "w",
            World,
            HolTerm::conj(
                HolTerm::app(p(), w.clone()),
                HolTerm::app(HolTerm::cst("q", HolType::world_pred()), w),
            ),
        );
        assert_eq!(render_term(&t), "\\w:i. p w & q w");
    }

    #[test]
    fn quantifier_sugar_and_implication() {
        // forall v:i. r w v -> p v
        let r = HolTerm::cst(
            "r",
            HolType::arrow(World, HolType::world_pred()),
        );
        let body = HolTerm::implies(
            HolTerm::app2(r, HolTerm::var("w", World), HolTerm::var("v", World)),
            HolTerm::app(p(), HolTerm::var("v", World)),
        );
        let t = HolTerm::forall("v", World, body);
        assert_eq!(render_term(&t), "forall v:i. r w v -> p v");
    }

    #[test]
    fn application_parenthesizes_complex_arguments() {
        let f = HolTerm::cst(
            "f",
            HolType::arrow(HolType::arrow(World, World), World),
        );
        let id = HolTerm::lam("x", World, HolTerm::var("x", World));
        let t = HolTerm::app(f, id);
        assert_eq!(render_term(&t), "f (\\x:i. x)");
    }

    #[test]
    fn right_associative_implication_omits_parens() {
        let a = HolTerm::cst("a", HolType::Bool);
        let b = HolTerm::cst("b", HolType::Bool);
        let c = HolTerm::cst("c", HolType::Bool);
        let t = HolTerm::implies(a.clone(), HolTerm::implies(b.clone(), c.clone()));
        assert_eq!(render_term(&t), "a -> b -> c");
        let u = HolTerm::implies(HolTerm::implies(a, b), c);
        assert_eq!(render_term(&u), "(a -> b) -> c");
    }
}
