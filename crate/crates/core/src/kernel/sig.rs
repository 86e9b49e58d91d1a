use std::collections::BTreeMap;

use super::term::RESERVED;
use super::types::HolType;
use super::KernelError;

/// Declared constants of a problem. The logical constants are reserved and
/// cannot be redeclared.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    consts: BTreeMap<String, HolType>,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn declare(&mut self, name: impl Into<String>, ty: HolType) -> Result<(), KernelError> {
        let name = name.into();
        if RESERVED.contains(&name.as_str()) {
            return Err(KernelError::ReservedName(name));
        }
        if self.consts.contains_key(&name) {
            return Err(KernelError::DuplicateConstant(name));
        }
        self.consts.insert(name, ty);
        Ok(())
    }

    pub fn lookup(&self, name: &str) -> Option<&HolType> {
        self.consts.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.consts.contains_key(name)
    }

    /// Declared constants in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&String, &HolType)> {
        self.consts.iter()
    }
}

/// Checks that a reserved constant is used at a legal instance type.
pub fn logical_instance_ok(name: &str, ty: &HolType) -> bool {
    use HolType::*;
    match name {
        "true" | "false" => *ty == Bool,
        "not" => *ty == HolType::arrow(Bool, Bool),
        "and" | "or" | "imp" | "iff" => *ty == HolType::arrow(Bool, HolType::arrow(Bool, Bool)),
        "eq" => matches!(
            ty.as_arrow(),
            Some((a, rest)) if matches!(rest.as_arrow(), Some((b, r)) if a == b && *r == Bool)
        ),
        "forall" | "exists" => matches!(
            ty.as_arrow(),
            Some((p, r)) if *r == Bool && matches!(p.as_arrow(), Some((_, pb)) if *pb == Bool)
        ),
        _ => false,
    }
}
