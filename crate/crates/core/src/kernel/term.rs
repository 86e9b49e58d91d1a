use std::collections::BTreeSet;

use super::types::HolType;
use super::KernelError;

/// Terms of the simply typed λ-calculus. Binders carry their domain type;
/// variables carry their type annotation so every term synthesizes a type
/// without inference.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum HolTerm {
    Const(String, HolType),
    Var(String, HolType),
    App(Box<HolTerm>, Box<HolTerm>),
    Lam(String, HolType, Box<HolTerm>),
}

/// Names of the fixed logical constants. User signatures may not shadow these.
pub const RESERVED: &[&str] = &[
    "true", "false", "not", "and", "or", "imp", "iff", "eq", "forall", "exists",
];

impl HolTerm {
    pub fn cst(name: impl Into<String>, ty: HolType) -> HolTerm {
        HolTerm::Const(name.into(), ty)
    }

    pub fn var(name: impl Into<String>, ty: HolType) -> HolTerm {
        HolTerm::Var(name.into(), ty)
    }

    pub fn app(f: HolTerm, a: HolTerm) -> HolTerm {
        HolTerm::App(Box::new(f), Box::new(a))
    }

    pub fn app2(f: HolTerm, a: HolTerm, b: HolTerm) -> HolTerm {
        HolTerm::app(HolTerm::app(f, a), b)
    }

    pub fn lam(name: impl Into<String>, ty: HolType, body: HolTerm) -> HolTerm {
        HolTerm::Lam(name.into(), ty, Box::new(body))
    }

    // Builders for the logical constants at their instance types.

    pub fn truth() -> HolTerm {
        HolTerm::cst("true", HolType::Bool)
    }

    pub fn falsity() -> HolTerm {
        HolTerm::cst("false", HolType::Bool)
    }

    pub fn neg(a: HolTerm) -> HolTerm {
        let ty = HolType::arrow(HolType::Bool, HolType::Bool);
        HolTerm::app(HolTerm::cst("not", ty), a)
    }

    fn binop(name: &str, a: HolTerm, b: HolTerm) -> HolTerm {
        let ty = HolType::arrow(
            HolType::Bool,
            HolType::arrow(HolType::Bool, HolType::Bool),
        );
        HolTerm::app2(HolTerm::cst(name, ty), a, b)
    }

    pub fn conj(a: HolTerm, b: HolTerm) -> HolTerm {
        HolTerm::binop("and", a, b)
    }

    pub fn disj(a: HolTerm, b: HolTerm) -> HolTerm {
        HolTerm::binop("or", a, b)
    }

    pub fn implies(a: HolTerm, b: HolTerm) -> HolTerm {
        HolTerm::binop("imp", a, b)
    }

    pub fn equiv(a: HolTerm, b: HolTerm) -> HolTerm {
        HolTerm::binop("iff", a, b)
    }

    pub fn equality(ty: HolType, a: HolTerm, b: HolTerm) -> HolTerm {
        let cty = HolType::arrow(ty.clone(), HolType::arrow(ty, HolType::Bool));
        HolTerm::app2(HolTerm::cst("eq", cty), a, b)
    }

    /// `forall (\x:ty. body)` — the per-type universal quantifier instance.
    pub fn forall(var: impl Into<String>, ty: HolType, body: HolTerm) -> HolTerm {
        let qty = HolType::arrow(HolType::arrow(ty.clone(), HolType::Bool), HolType::Bool);
        HolTerm::app(HolTerm::cst("forall", qty), HolTerm::lam(var, ty, body))
    }

    pub fn exists(var: impl Into<String>, ty: HolType, body: HolTerm) -> HolTerm {
        let qty = HolType::arrow(HolType::arrow(ty.clone(), HolType::Bool), HolType::Bool);
        HolTerm::app(HolTerm::cst("exists", qty), HolTerm::lam(var, ty, body))
    }

    /// Synthesizes the type from annotations. Fails on ill-formed applications.
    pub fn type_of(&self) -> Result<HolType, KernelError> {
        match self {
            HolTerm::Const(_, ty) | HolTerm::Var(_, ty) => Ok(ty.clone()),
            HolTerm::Lam(_, ty, body) => Ok(HolType::arrow(ty.clone(), body.type_of()?)),
            HolTerm::App(f, a) => {
                let fty = f.type_of()?;
                let aty = a.type_of()?;
                match fty.as_arrow() {
                    Some((dom, cod)) if *dom == aty => Ok(cod.clone()),
                    Some((dom, _)) => Err(KernelError::TypeMismatch {
                        at: "application argument".into(),
                        expected: dom.clone(),
                        found: aty,
                    }),
                    None => Err(KernelError::TypeMismatch {
                        at: "application head".into(),
                        expected: HolType::arrow(aty, HolType::TypeVar("b".into())),
                        found: fty,
                    }),
                }
            }
        }
    }

    /// Names of free variables.
    pub fn free_vars(&self) -> BTreeSet<String> {
        fn go(t: &HolTerm, bound: &mut Vec<String>, acc: &mut BTreeSet<String>) {
            match t {
                HolTerm::Const(..) => {}
                HolTerm::Var(n, _) => {
                    if !bound.iter().any(|b| b == n) {
                        acc.insert(n.clone());
                    }
                }
                HolTerm::App(f, a) => {
                    go(f, bound, acc);
                    go(a, bound, acc);
                }
                HolTerm::Lam(n, _, b) => {
                    bound.push(n.clone());
                    go(b, bound, acc);
                    bound.pop();
                }
            }
        }
        let mut acc = BTreeSet::new();
        go(self, &mut Vec::new(), &mut acc);
        acc
    }

    /// Every variable name occurring anywhere, bound or free. Used when
    /// picking fresh names.
    pub fn all_names(&self) -> BTreeSet<String> {
        fn go(t: &HolTerm, acc: &mut BTreeSet<String>) {
            match t {
                HolTerm::Const(..) => {}
                HolTerm::Var(n, _) => {
                    acc.insert(n.clone());
                }
                HolTerm::App(f, a) => {
                    go(f, acc);
                    go(a, acc);
                }
                HolTerm::Lam(n, _, b) => {
                    acc.insert(n.clone());
                    go(b, acc);
                }
            }
        }
        let mut acc = BTreeSet::new();
        go(self, &mut acc);
        acc
    }

    /// Peels a left-nested application into `(head, args)`.
    pub fn spine(&self) -> (&HolTerm, Vec<&HolTerm>) {
        let mut head = self;
        let mut args = Vec::new();
        while let HolTerm::App(f, a) = head {
            args.push(a.as_ref());
            head = f;
        }
        args.reverse();
        (head, args)
    }
}
