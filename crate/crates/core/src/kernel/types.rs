use std::fmt;

/// Simple types of the target logic: truth values `o`, worlds `i`,
/// individuals `mu`, and function types.
///
/// `TypeVar` only occurs inside polymorphic embedding schemas before they are
/// instantiated at a concrete sort; fully instantiated types never contain it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum HolType {
    Bool,
    World,
    Indiv,
    Arrow(Box<HolType>, Box<HolType>),
    TypeVar(String),
}

impl HolType {
    pub fn arrow(dom: HolType, cod: HolType) -> HolType {
        HolType::Arrow(Box::new(dom), Box::new(cod))
    }

    /// The world-predicate type `i -> o` that lifted formulas inhabit.
    pub fn world_pred() -> HolType {
        HolType::arrow(HolType::World, HolType::Bool)
    }

    pub fn is_ground(&self) -> bool {
        match self {
            HolType::Bool | HolType::World | HolType::Indiv => true,
            HolType::Arrow(a, b) => a.is_ground() && b.is_ground(),
            HolType::TypeVar(_) => false,
        }
    }

    /// Splits `a -> b` into `(a, b)`.
    pub fn as_arrow(&self) -> Option<(&HolType, &HolType)> {
        match self {
            HolType::Arrow(a, b) => Some((a, b)),
            _ => None,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, in_domain: bool) -> fmt::Result {
        match self {
            HolType::Bool => write!(f, "o"),
            HolType::World => write!(f, "i"),
            HolType::Indiv => write!(f, "mu"),
            HolType::TypeVar(n) => write!(f, "'{}", n),
            HolType::Arrow(a, b) => {
                if in_domain {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, true)?;
                write!(f, "->")?;
                b.fmt_prec(f, false)?;
                if in_domain {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for HolType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_display_is_right_associative() {
        let t = HolType::arrow(
            HolType::World,
            HolType::arrow(HolType::World, HolType::Bool),
        );
        assert_eq!(t.to_string(), "i->i->o");
        let u = HolType::arrow(HolType::world_pred(), HolType::Bool);
        assert_eq!(u.to_string(), "(i->o)->o");
    }

    #[test]
    fn groundness() {
        assert!(HolType::world_pred().is_ground());
        assert!(!HolType::arrow(HolType::TypeVar("a".into()), HolType::Bool).is_ground());
    }
}
