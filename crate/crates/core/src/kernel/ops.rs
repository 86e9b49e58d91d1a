//! Typing judgment, capture-avoiding substitution, β/η-normalization, and
//! α-equivalence.

use super::sig::{logical_instance_ok, Signature};
use super::term::{HolTerm, RESERVED};
use super::types::HolType;
use super::KernelError;

/// Derives the unique type of a well-formed term, validating constants
/// against the signature and binder/occurrence consistency.
pub fn typecheck(term: &HolTerm, sig: &Signature) -> Result<HolType, KernelError> {
    fn go(
        term: &HolTerm,
        sig: &Signature,
        bound: &mut Vec<(String, HolType)>,
    ) -> Result<HolType, KernelError> {
        match term {
            HolTerm::Const(name, ty) => {
                if RESERVED.contains(&name.as_str()) {
                    if logical_instance_ok(name, ty) {
                        Ok(ty.clone())
                    } else {
                        Err(KernelError::BadLogicalInstance {
                            name: name.clone(),
                            ty: ty.clone(),
                        })
                    }
                } else {
                    match sig.lookup(name) {
                        Some(declared) if declared == ty => Ok(ty.clone()),
                        Some(declared) => Err(KernelError::TypeMismatch {
                            at: format!("constant {}", name),
                            expected: declared.clone(),
                            found: ty.clone(),
                        }),
                        None => Err(KernelError::UnboundConstant(name.clone())),
                    }
                }
            }
            HolTerm::Var(name, ty) => {
                match bound.iter().rev().find(|(n, _)| n == name) {
                    Some((_, bty)) if bty == ty => Ok(ty.clone()),
                    Some((_, bty)) => Err(KernelError::TypeMismatch {
                        at: format!("variable {}", name),
                        expected: bty.clone(),
                        found: ty.clone(),
                    }),
                    // Free variables carry their own annotation.
                    None => Ok(ty.clone()),
                }
            }
            HolTerm::App(f, a) => {
                let fty = go(f, sig, bound)?;
                let aty = go(a, sig, bound)?;
                match fty.as_arrow() {
                    Some((dom, cod)) if *dom == aty => Ok(cod.clone()),
                    Some((dom, _)) => Err(KernelError::TypeMismatch {
                        at: "application argument".into(),
                        expected: dom.clone(),
                        found: aty,
                    }),
                    None => Err(KernelError::TypeMismatch {
                        at: "application head".into(),
                        expected: HolType::arrow(aty, HolType::TypeVar("_".into())),
                        found: fty,
                    }),
                }
            }
            HolTerm::Lam(name, ty, body) => {
                bound.push((name.clone(), ty.clone()));
                let bty = go(body, sig, bound);
                bound.pop();
                Ok(HolType::arrow(ty.clone(), bty?))
            }
        }
    }
    go(term, sig, &mut Vec::new())
}

fn fresh_name(base: &str, avoid: &dyn Fn(&str) -> bool) -> String {
    let mut candidate = format!("{}'", base);
    while avoid(&candidate) {
        candidate.push('\'');
    }
    candidate
}

fn rename_bound(body: &HolTerm, from: &str, to: &str, ty: &HolType) -> HolTerm {
    // `to` is fresh for every name in `body`, so plain replacement is safe.
    match body {
        HolTerm::Const(..) => body.clone(),
        HolTerm::Var(n, t) => {
            if n == from && t == ty {
                HolTerm::Var(to.to_string(), t.clone())
            } else {
                body.clone()
            }
        }
        HolTerm::App(f, a) => HolTerm::app(
            rename_bound(f, from, to, ty),
            rename_bound(a, from, to, ty),
        ),
        HolTerm::Lam(n, t, b) => {
            if n == from {
                body.clone()
            } else {
                HolTerm::lam(n.clone(), t.clone(), rename_bound(b, from, to, ty))
            }
        }
    }
}

/// Capture-avoiding substitution of `replacement` for free occurrences of
/// `var`. Bound variables are renamed with primed suffixes where needed.
pub fn substitute(
    term: &HolTerm,
    var: &str,
    replacement: &HolTerm,
) -> Result<HolTerm, KernelError> {
    let rty = replacement.type_of()?;
    let fv_repl = replacement.free_vars();

    fn go(
        term: &HolTerm,
        var: &str,
        replacement: &HolTerm,
        rty: &HolType,
        fv_repl: &std::collections::BTreeSet<String>,
    ) -> Result<HolTerm, KernelError> {
        match term {
            HolTerm::Const(..) => Ok(term.clone()),
            HolTerm::Var(n, ty) => {
                if n == var {
                    if ty != rty {
                        return Err(KernelError::TypeMismatch {
                            at: format!("substitution for {}", var),
                            expected: ty.clone(),
                            found: rty.clone(),
                        });
                    }
                    Ok(replacement.clone())
                } else {
                    Ok(term.clone())
                }
            }
            HolTerm::App(f, a) => Ok(HolTerm::app(
                go(f, var, replacement, rty, fv_repl)?,
                go(a, var, replacement, rty, fv_repl)?,
            )),
            HolTerm::Lam(n, ty, body) => {
                if n == var {
                    return Ok(term.clone());
                }
                if fv_repl.contains(n) && body.free_vars().contains(var) {
                    let body_names = body.all_names();
                    let fresh = fresh_name(n, &|c| {
                        body_names.contains(c) || fv_repl.contains(c) || c == var
                    });
                    let renamed = rename_bound(body, n, &fresh, ty);
                    Ok(HolTerm::lam(
                        fresh,
                        ty.clone(),
                        go(&renamed, var, replacement, rty, fv_repl)?,
                    ))
                } else {
                    Ok(HolTerm::lam(
                        n.clone(),
                        ty.clone(),
                        go(body, var, replacement, rty, fv_repl)?,
                    ))
                }
            }
        }
    }
    go(term, var, replacement, &rty, &fv_repl)
}

fn beta(term: &HolTerm) -> Result<HolTerm, KernelError> {
    match term {
        HolTerm::Const(..) | HolTerm::Var(..) => Ok(term.clone()),
        HolTerm::Lam(n, ty, body) => Ok(HolTerm::lam(n.clone(), ty.clone(), beta(body)?)),
        HolTerm::App(f, a) => {
            let f = beta(f)?;
            let a = beta(a)?;
            if let HolTerm::Lam(n, _, body) = f {
                beta(&substitute(&body, &n, &a)?)
            } else {
                Ok(HolTerm::app(f, a))
            }
        }
    }
}

fn eta(term: &HolTerm) -> HolTerm {
    match term {
        HolTerm::Const(..) | HolTerm::Var(..) => term.clone(),
        HolTerm::App(f, a) => HolTerm::app(eta(f), eta(a)),
        HolTerm::Lam(n, ty, body) => {
            let body = eta(body);
            if let HolTerm::App(f, a) = &body {
                if matches!(a.as_ref(), HolTerm::Var(an, aty) if an == n && aty == ty)
                    && !f.free_vars().contains(n)
                {
                    return eta(f);
                }
            }
            HolTerm::lam(n.clone(), ty.clone(), body)
        }
    }
}

/// β-normal, η-contracted form. Terminates on every well-typed term; the
/// result is the canonical representative compared by [`alpha_eq`].
pub fn beta_eta_normalize(term: &HolTerm) -> Result<HolTerm, KernelError> {
    Ok(eta(&beta(term)?))
}

/// Equality up to renaming of bound variables.
pub fn alpha_eq(t1: &HolTerm, t2: &HolTerm) -> bool {
    fn go(t1: &HolTerm, t2: &HolTerm, b1: &mut Vec<String>, b2: &mut Vec<String>) -> bool {
        match (t1, t2) {
            (HolTerm::Const(n1, ty1), HolTerm::Const(n2, ty2)) => n1 == n2 && ty1 == ty2,
            (HolTerm::Var(n1, ty1), HolTerm::Var(n2, ty2)) => {
                let d1 = b1.iter().rev().position(|b| b == n1);
                let d2 = b2.iter().rev().position(|b| b == n2);
                match (d1, d2) {
                    (Some(i), Some(j)) => i == j && ty1 == ty2,
                    (None, None) => n1 == n2 && ty1 == ty2,
                    _ => false,
                }
            }
            (HolTerm::App(f1, a1), HolTerm::App(f2, a2)) => {
                go(f1, f2, b1, b2) && go(a1, a2, b1, b2)
            }
            (HolTerm::Lam(n1, ty1, bd1), HolTerm::Lam(n2, ty2, bd2)) => {
                if ty1 != ty2 {
                    return false;
                }
                b1.push(n1.clone());
                b2.push(n2.clone());
                let r = go(bd1, bd2, b1, b2);
                b1.pop();
                b2.pop();
                r
            }
            _ => false,
        }
    }
    go(t1, t2, &mut Vec::new(), &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use HolType::{Bool, Indiv, World};

    fn w(n: &str) -> HolTerm {
        HolTerm::var(n, World)
    }

    #[test]
    fn typecheck_identity_on_worlds() {
        let t = HolTerm::lam("x", World, w("x"));
        let ty = typecheck(&t, &Signature::new()).unwrap();
        assert_eq!(ty, HolType::arrow(World, World));
    }

    #[test]
    fn typecheck_rejects_arrow_domain_violation() {
        let mut sig = Signature::new();
        sig.declare("p", HolType::world_pred()).unwrap();
        sig.declare("c", Indiv).unwrap();
        let t = HolTerm::app(
            HolTerm::cst("p", HolType::world_pred()),
            HolTerm::cst("c", Indiv),
        );
        assert!(matches!(
            typecheck(&t, &sig),
            Err(KernelError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn typecheck_rejects_unknown_constant() {
        let t = HolTerm::cst("mystery", Bool);
        assert!(matches!(
            typecheck(&t, &Signature::new()),
            Err(KernelError::UnboundConstant(_))
        ));
    }

    #[test]
    fn substitute_renames_captured_binder() {
        // (\y. x)[x := y]  ==>  \y'. y
        let t = HolTerm::lam("y", World, w("x"));
        let r = substitute(&t, "x", &w("y")).unwrap();
        assert_eq!(r, HolTerm::lam("y'", World, w("y")));
    }

    #[test]
    fn substitute_free_occurrence() {
        let r = substitute(&w("x"), "x", &HolTerm::cst("c", World)).unwrap();
        assert_eq!(r, HolTerm::cst("c", World));
    }

    #[test]
    fn substitute_ignores_shadowed_variable() {
        let t = HolTerm::lam("x", World, w("x"));
        let r = substitute(&t, "x", &HolTerm::cst("c", World)).unwrap();
        assert_eq!(r, t);
    }

    #[test]
    fn beta_step() {
        let t = HolTerm::app(
            HolTerm::lam("x", World, w("x")),
            HolTerm::cst("c", World),
        );
        assert_eq!(
            beta_eta_normalize(&t).unwrap(),
            HolTerm::cst("c", World)
        );
    }

    #[test]
    fn eta_step() {
        let f = HolTerm::cst("f", HolType::arrow(World, World));
        let t = HolTerm::lam("x", World, HolTerm::app(f.clone(), w("x")));
        assert_eq!(beta_eta_normalize(&t).unwrap(), f);
    }

    #[test]
    fn alpha_eq_on_binders() {
        let a = HolTerm::lam("x", World, w("x"));
        let b = HolTerm::lam("y", World, w("y"));
        assert!(alpha_eq(&a, &b));
        let c = HolTerm::lam("x", World, HolTerm::cst("c", World));
        assert!(!alpha_eq(&a, &c));
    }

    #[test]
    fn normalize_fixpoint_on_normal_forms() {
        let t = HolTerm::lam(
            "x",
            World,
            HolTerm::conj(
                HolTerm::app(HolTerm::cst("p", HolType::world_pred()), w("x")),
                HolTerm::truth(),
            ),
        );
        let n1 = beta_eta_normalize(&t).unwrap();
        let n2 = beta_eta_normalize(&n1).unwrap();
        assert!(alpha_eq(&n1, &n2));
    }
}
