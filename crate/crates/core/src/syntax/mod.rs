//! Surface syntax for the object logics: formula and problem-file parsers,
//! and the canonical pretty-printer.

mod ast;
mod parse;
mod print;
mod problem;

pub use ast::{Declarations, Definition, ModalAst, Sort, TermAst, DEFAULT_INDEX};
pub use parse::{parse_formula, parse_problem};
pub use print::print_formula;
pub use problem::{LogicKind, ProblemFile};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown symbol `{name}` at {line}:{col}")]
    UnknownSymbol { name: String, line: usize, col: usize },
    #[error("`{name}` at {line}:{col} is not applied to a full argument list of sort prop")]
    ArityMismatch { name: String, line: usize, col: usize },
    #[error("sort mismatch at {line}:{col}: expected `{expected}`, found `{found}`")]
    SortMismatch {
        expected: String,
        found: String,
        line: usize,
        col: usize,
    },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("missing or unknown `logic` declaration")]
    UndeclaredLogic,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decls_pq() -> Declarations {
        let mut d = Declarations::new();
        d.consts.push(("p".into(), Sort::Prop));
        d.consts.push(("q".into(), Sort::Prop));
        d.consts
            .push(("P".into(), Sort::fun(Sort::Indiv, Sort::Prop)));
        d.consts.push(("c".into(), Sort::Indiv));
        d
    }

    #[test]
    fn parses_default_box() {
        let d = decls_pq();
        let ast = parse_formula("box p -> p", &d).unwrap();
        assert_eq!(
            ast,
            ModalAst::implies(ModalAst::boxed("r", ModalAst::atom("p")), ModalAst::atom("p"))
        );
    }

    #[test]
    fn parses_sorted_quantifier_with_modal_body() {
        let d = decls_pq();
        let ast = parse_formula("forall (x: indiv). box (P x)", &d).unwrap();
        assert_eq!(
            ast,
            ModalAst::forall(
                "x",
                Sort::Indiv,
                ModalAst::boxed(
                    "r",
                    ModalAst::Atom("P".into(), vec![TermAst::Var("x".into())])
                )
            )
        );
    }

    #[test]
    fn parses_indexed_box_against_declared_indices() {
        let mut d = decls_pq();
        d.indices = vec!["a".into(), "b".into(), "c".into()];
        let ast = parse_formula("[a](p & q)", &d).unwrap();
        assert_eq!(
            ast,
            ModalAst::boxed("a", ModalAst::and(ModalAst::atom("p"), ModalAst::atom("q")))
        );
        assert!(matches!(
            parse_formula("[z] p", &d),
            Err(ParseError::UnknownSymbol { .. })
        ));
    }

    #[test]
    fn epistemic_sugar_desugars_to_box() {
        let mut d = decls_pq();
        d.indices = vec!["a".into(), "b".into()];
        let ast = parse_formula("K_a p", &d).unwrap();
        assert_eq!(ast, ModalAst::boxed("a", ModalAst::atom("p")));
        let ck = parse_formula("C p", &d).unwrap();
        assert_eq!(
            ck,
            ModalAst::CommonKnows(vec!["a".into(), "b".into()], Box::new(ModalAst::atom("p")))
        );
    }

    #[test]
    fn free_logic_surface_forms() {
        let d = decls_pq();
        let ast = parse_formula("all_free x. E x", &d).unwrap();
        assert_eq!(
            ast,
            ModalAst::FreeForall(
                "x".into(),
                Box::new(ModalAst::ExistsPred(TermAst::Var("x".into())))
            )
        );
        assert_eq!(print_formula(&ast), "all_free x. E x");
    }

    #[test]
    fn print_examples() {
        assert_eq!(
            print_formula(&ModalAst::boxed("r", ModalAst::atom("p"))),
            "box p"
        );
        let nested = ModalAst::implies(
            ModalAst::atom("p"),
            ModalAst::implies(ModalAst::atom("q"), ModalAst::atom("p")),
        );
        assert_eq!(print_formula(&nested), "p -> q -> p");
        let d = decls_pq();
        assert_eq!(parse_formula(&print_formula(&nested), &d).unwrap(), nested);
    }

    #[test]
    fn unknown_symbol_is_reported() {
        let d = decls_pq();
        assert!(matches!(
            parse_formula("mystery", &d),
            Err(ParseError::UnknownSymbol { .. })
        ));
    }

    #[test]
    fn under_applied_head_is_an_arity_error() {
        let d = decls_pq();
        assert!(matches!(
            parse_formula("P & q", &d),
            Err(ParseError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn minimal_problem_file() {
        let text = "logic S5\nconst p : prop\nconjecture t: box p -> p\n";
        let pf = parse_problem(text).unwrap();
        assert!(matches!(pf.logic, LogicKind::Modal(_)));
        assert_eq!(pf.conjectures.len(), 1);
    }

    #[test]
    fn problem_file_errors() {
        assert!(matches!(
            parse_problem("logic Z9\nconjecture t: top\n"),
            Err(ParseError::UndeclaredLogic)
        ));
        assert!(matches!(
            parse_problem("logic K\nconjecture t: p\n"),
            Err(ParseError::UnknownSymbol { .. })
        ));
        assert!(matches!(
            parse_problem("logic K\nconst p : prop\nconst p : prop\n"),
            Err(ParseError::DuplicateName(_))
        ));
    }
}
