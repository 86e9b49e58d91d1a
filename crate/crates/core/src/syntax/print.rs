//! Pretty-printer for surface formulas. `parse_formula(print_formula(ast))`
//! is structurally equal to `ast` for every well-formed tree.

use super::ast::{ModalAst, TermAst, DEFAULT_INDEX};

const PREC_BINDER: u8 = 0;
const PREC_IFF: u8 = 1;
const PREC_IMP: u8 = 2;
const PREC_OR: u8 = 3;
const PREC_AND: u8 = 4;
const PREC_UNARY: u8 = 5;

pub fn print_formula(ast: &ModalAst) -> String {
    let mut out = String::new();
    go(ast, PREC_BINDER, &mut out);
    out
}

fn print_term(t: &TermAst, out: &mut String) {
    match t {
        TermAst::Var(n) | TermAst::Const(n) => out.push_str(n),
        TermAst::App(..) => {
            let (head, args) = t.head_and_args();
            print_term(head, out);
            for a in args {
                out.push(' ');
                print_term_arg(a, out);
            }
        }
    }
}

fn print_term_arg(t: &TermAst, out: &mut String) {
    if matches!(t, TermAst::App(..)) {
        out.push('(');
        print_term(t, out);
        out.push(')');
    } else {
        print_term(t, out);
    }
}

fn paren(needed: bool, out: &mut String, body: impl FnOnce(&mut String)) {
    if needed {
        out.push('(');
    }
    body(out);
    if needed {
        out.push(')');
    }
}

fn go(ast: &ModalAst, min_prec: u8, out: &mut String) {
    match ast {
        ModalAst::Top => out.push_str("top"),
        ModalAst::Bottom => out.push_str("bot"),
        ModalAst::Atom(head, args) => {
            out.push_str(head);
            for a in args {
                out.push(' ');
                print_term_arg(a, out);
            }
        }
        ModalAst::ExistsPred(t) => {
            out.push_str("E ");
            print_term_arg(t, out);
        }
        ModalAst::Not(f) => paren(min_prec > PREC_UNARY, out, |out| {
            out.push_str("not ");
            go(f, PREC_UNARY, out);
        }),
        ModalAst::Box_(idx, f) => paren(min_prec > PREC_UNARY, out, |out| {
            if idx == DEFAULT_INDEX {
                out.push_str("box ");
            } else {
                out.push('[');
                out.push_str(idx);
                out.push_str("] ");
            }
            go(f, PREC_UNARY, out);
        }),
        ModalAst::Dia(idx, f) => paren(min_prec > PREC_UNARY, out, |out| {
            if idx == DEFAULT_INDEX {
                out.push_str("dia ");
            } else {
                out.push('<');
                out.push_str(idx);
                out.push_str("> ");
            }
            go(f, PREC_UNARY, out);
        }),
        ModalAst::CommonKnows(indices, f) => paren(min_prec > PREC_UNARY, out, |out| {
            out.push_str("C{");
            out.push_str(&indices.join(","));
            out.push_str("} ");
            go(f, PREC_UNARY, out);
        }),
        ModalAst::And(f, g) => paren(min_prec > PREC_AND, out, |out| {
            go(f, PREC_AND, out);
            out.push_str(" & ");
            go(g, PREC_AND + 1, out);
        }),
        ModalAst::Or(f, g) => paren(min_prec > PREC_OR, out, |out| {
            go(f, PREC_OR, out);
            out.push_str(" | ");
            go(g, PREC_OR + 1, out);
        }),
        ModalAst::Implies(f, g) => paren(min_prec > PREC_IMP, out, |out| {
            go(f, PREC_IMP + 1, out);
            out.push_str(" -> ");
            go(g, PREC_IMP, out);
        }),
        ModalAst::Iff(f, g) => paren(min_prec > PREC_IFF, out, |out| {
            go(f, PREC_IFF + 1, out);
            out.push_str(" <-> ");
            go(g, PREC_IFF, out);
        }),
        ModalAst::Forall(v, s, f) => paren(min_prec > PREC_BINDER, out, |out| {
            out.push_str(&format!("forall ({}: {}). ", v, s));
            go(f, PREC_BINDER, out);
        }),
        ModalAst::Exists(v, s, f) => paren(min_prec > PREC_BINDER, out, |out| {
            out.push_str(&format!("exists ({}: {}). ", v, s));
            go(f, PREC_BINDER, out);
        }),
        ModalAst::FreeForall(v, f) => paren(min_prec > PREC_BINDER, out, |out| {
            out.push_str(&format!("all_free {}. ", v));
            go(f, PREC_BINDER, out);
        }),
        ModalAst::FreeExists(v, f) => paren(min_prec > PREC_BINDER, out, |out| {
            out.push_str(&format!("some_free {}. ", v));
            go(f, PREC_BINDER, out);
        }),
    }
}
