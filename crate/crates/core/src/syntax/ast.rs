use std::collections::BTreeMap;

use crate::kernel::HolType;

/// Surface sorts of the object logics. `prop` is the sort of formulas; the
/// embedding lifts it to the world-predicate type `i -> o`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Sort {
    Indiv,
    Prop,
    Fun(Box<Sort>, Box<Sort>),
}

impl Sort {
    pub fn fun(dom: Sort, cod: Sort) -> Sort {
        Sort::Fun(Box::new(dom), Box::new(cod))
    }

    /// Type-lifting into the target logic: `prop` becomes `i -> o`, `indiv`
    /// becomes `mu`, and function sorts lift pointwise.
    pub fn lift(&self) -> HolType {
        match self {
            Sort::Indiv => HolType::Indiv,
            Sort::Prop => HolType::world_pred(),
            Sort::Fun(a, b) => HolType::arrow(a.lift(), b.lift()),
        }
    }

    /// Non-modal reading used by the free-logic fragment: `prop` is plain `o`.
    pub fn lift_classical(&self) -> HolType {
        match self {
            Sort::Indiv => HolType::Indiv,
            Sort::Prop => HolType::Bool,
            Sort::Fun(a, b) => HolType::arrow(a.lift_classical(), b.lift_classical()),
        }
    }
}

impl std::fmt::Display for Sort {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sort::Indiv => write!(f, "indiv"),
            Sort::Prop => write!(f, "prop"),
            Sort::Fun(a, b) => {
                if matches!(**a, Sort::Fun(..)) {
                    write!(f, "({}) -> {}", a, b)
                } else {
                    write!(f, "{} -> {}", a, b)
                }
            }
        }
    }
}

/// First-order-style terms appearing as atom arguments: variables, declared
/// constants, and curried applications of either.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermAst {
    Var(String),
    Const(String),
    App(Box<TermAst>, Box<TermAst>),
}

impl TermAst {
    pub fn app(f: TermAst, a: TermAst) -> TermAst {
        TermAst::App(Box::new(f), Box::new(a))
    }

    pub fn head_and_args(&self) -> (&TermAst, Vec<&TermAst>) {
        let mut head = self;
        let mut args = Vec::new();
        while let TermAst::App(f, a) = head {
            args.push(a.as_ref());
            head = f;
        }
        args.reverse();
        (head, args)
    }
}

/// Surface syntax of object-logic formulas: quantified multi-modal formulas
/// with epistemic and free-logic constructs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ModalAst {
    Top,
    Bottom,
    Atom(String, Vec<TermAst>),
    Not(Box<ModalAst>),
    And(Box<ModalAst>, Box<ModalAst>),
    Or(Box<ModalAst>, Box<ModalAst>),
    Implies(Box<ModalAst>, Box<ModalAst>),
    Iff(Box<ModalAst>, Box<ModalAst>),
    Box_(String, Box<ModalAst>),
    Dia(String, Box<ModalAst>),
    Forall(String, Sort, Box<ModalAst>),
    Exists(String, Sort, Box<ModalAst>),
    FreeForall(String, Box<ModalAst>),
    FreeExists(String, Box<ModalAst>),
    ExistsPred(TermAst),
    CommonKnows(Vec<String>, Box<ModalAst>),
}

impl ModalAst {
    pub fn atom(name: impl Into<String>) -> ModalAst {
        ModalAst::Atom(name.into(), Vec::new())
    }

    pub fn not(f: ModalAst) -> ModalAst {
        ModalAst::Not(Box::new(f))
    }

    pub fn and(f: ModalAst, g: ModalAst) -> ModalAst {
        ModalAst::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: ModalAst, g: ModalAst) -> ModalAst {
        ModalAst::Or(Box::new(f), Box::new(g))
    }

    pub fn implies(f: ModalAst, g: ModalAst) -> ModalAst {
        ModalAst::Implies(Box::new(f), Box::new(g))
    }

    pub fn iff(f: ModalAst, g: ModalAst) -> ModalAst {
        ModalAst::Iff(Box::new(f), Box::new(g))
    }

    pub fn boxed(idx: impl Into<String>, f: ModalAst) -> ModalAst {
        ModalAst::Box_(idx.into(), Box::new(f))
    }

    pub fn dia(idx: impl Into<String>, f: ModalAst) -> ModalAst {
        ModalAst::Dia(idx.into(), Box::new(f))
    }

    pub fn forall(v: impl Into<String>, sort: Sort, f: ModalAst) -> ModalAst {
        ModalAst::Forall(v.into(), sort, Box::new(f))
    }

    pub fn exists(v: impl Into<String>, sort: Sort, f: ModalAst) -> ModalAst {
        ModalAst::Exists(v.into(), sort, Box::new(f))
    }

    /// True when the formula is purely propositional multi-modal: no
    /// quantifiers, no free-logic constructs, no common knowledge, and all
    /// atoms nullary.
    pub fn is_propositional(&self) -> bool {
        match self {
            ModalAst::Top | ModalAst::Bottom => true,
            ModalAst::Atom(_, args) => args.is_empty(),
            ModalAst::Not(f) | ModalAst::Box_(_, f) | ModalAst::Dia(_, f) => f.is_propositional(),
            ModalAst::And(f, g)
            | ModalAst::Or(f, g)
            | ModalAst::Implies(f, g)
            | ModalAst::Iff(f, g) => f.is_propositional() && g.is_propositional(),
            ModalAst::Forall(..)
            | ModalAst::Exists(..)
            | ModalAst::FreeForall(..)
            | ModalAst::FreeExists(..)
            | ModalAst::ExistsPred(_)
            | ModalAst::CommonKnows(..) => false,
        }
    }

    /// Number of modal-operator occurrences, used for the small-model bound.
    pub fn modal_operator_count(&self) -> usize {
        match self {
            ModalAst::Top | ModalAst::Bottom | ModalAst::Atom(..) | ModalAst::ExistsPred(_) => 0,
            ModalAst::Not(f)
            | ModalAst::Forall(_, _, f)
            | ModalAst::Exists(_, _, f)
            | ModalAst::FreeForall(_, f)
            | ModalAst::FreeExists(_, f) => f.modal_operator_count(),
            ModalAst::Box_(_, f) | ModalAst::Dia(_, f) | ModalAst::CommonKnows(_, f) => {
                1 + f.modal_operator_count()
            }
            ModalAst::And(f, g)
            | ModalAst::Or(f, g)
            | ModalAst::Implies(f, g)
            | ModalAst::Iff(f, g) => f.modal_operator_count() + g.modal_operator_count(),
        }
    }

    /// Names of constants occurring in atom and term positions.
    pub fn constants(&self, acc: &mut std::collections::BTreeSet<String>) {
        fn term_consts(t: &TermAst, acc: &mut std::collections::BTreeSet<String>) {
            match t {
                TermAst::Var(_) => {}
                TermAst::Const(c) => {
                    acc.insert(c.clone());
                }
                TermAst::App(f, a) => {
                    term_consts(f, acc);
                    term_consts(a, acc);
                }
            }
        }
        match self {
            ModalAst::Top | ModalAst::Bottom => {}
            ModalAst::Atom(head, args) => {
                acc.insert(head.clone());
                for a in args {
                    term_consts(a, acc);
                }
            }
            ModalAst::ExistsPred(t) => term_consts(t, acc),
            ModalAst::Not(f)
            | ModalAst::Box_(_, f)
            | ModalAst::Dia(_, f)
            | ModalAst::CommonKnows(_, f)
            | ModalAst::FreeForall(_, f)
            | ModalAst::FreeExists(_, f) => f.constants(acc),
            ModalAst::Forall(v, _, f) | ModalAst::Exists(v, _, f) => {
                let mut inner = std::collections::BTreeSet::new();
                f.constants(&mut inner);
                inner.remove(v); // bound heads resolve as variables, not constants
                acc.extend(inner);
            }
            ModalAst::And(f, g)
            | ModalAst::Or(f, g)
            | ModalAst::Implies(f, g)
            | ModalAst::Iff(f, g) => {
                f.constants(acc);
                g.constants(acc);
            }
        }
    }
}

/// A named abbreviation: `define name (p1: s1) ... := body`. The body is a
/// `prop`-sorted formula over the parameters; models interpret the name by
/// evaluating the body pointwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Definition {
    pub name: String,
    pub params: Vec<(String, Sort)>,
    pub body: ModalAst,
}

impl Definition {
    pub fn sort(&self) -> Sort {
        self.params
            .iter()
            .rev()
            .fold(Sort::Prop, |acc, (_, s)| Sort::fun(s.clone(), acc))
    }
}

/// Symbol table for parsing and sort-checking formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Declarations {
    pub consts: Vec<(String, Sort)>,
    pub indices: Vec<String>,
    pub defines: Vec<Definition>,
}

/// The modality index used when `box`/`dia` appear without an explicit index.
pub const DEFAULT_INDEX: &str = "r";

impl Declarations {
    pub fn new() -> Declarations {
        Declarations {
            consts: Vec::new(),
            indices: vec![DEFAULT_INDEX.to_string()],
            defines: Vec::new(),
        }
    }

    pub fn sort_of(&self, name: &str) -> Option<Sort> {
        if let Some((_, s)) = self.consts.iter().find(|(n, _)| n == name) {
            return Some(s.clone());
        }
        self.defines
            .iter()
            .find(|d| d.name == name)
            .map(|d| d.sort())
    }

    pub fn is_defined(&self, name: &str) -> bool {
        self.defines.iter().any(|d| d.name == name)
    }

    pub fn has_index(&self, idx: &str) -> bool {
        self.indices.iter().any(|i| i == idx)
    }

    /// Constants and definitions as an ordered map, definitions last.
    pub fn all_symbols(&self) -> BTreeMap<String, Sort> {
        let mut m = BTreeMap::new();
        for (n, s) in &self.consts {
            m.insert(n.clone(), s.clone());
        }
        for d in &self.defines {
            m.insert(d.name.clone(), d.sort());
        }
        m
    }
}
