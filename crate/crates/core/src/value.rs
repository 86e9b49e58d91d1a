//! Finite semantic values shared by the Kripke-model valuations and the HOL
//! model evaluator: elements of the carriers of `o`, `i`, `mu`, and full
//! finite function spaces, represented extensionally as tables.

use std::fmt;

use crate::kernel::HolType;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ValueError {
    #[error("carrier of `{0}` exceeds the configured capacity")]
    CarrierTooLarge(HolType),
    #[error("type `{0}` has no finite carrier")]
    NoCarrier(HolType),
}

/// An element of a type's carrier. Functions are finite tables indexed by the
/// ordinal of the argument; equality is pointwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Bool(bool),
    World(usize),
    Indiv(usize),
    Fun(FunValue),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FunValue {
    pub dom: HolType,
    pub table: Vec<Value>,
}

impl Value {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_world(&self) -> Option<usize> {
        match self {
            Value::World(w) => Some(*w),
            _ => None,
        }
    }

    pub fn as_indiv(&self) -> Option<usize> {
        match self {
            Value::Indiv(d) => Some(*d),
            _ => None,
        }
    }

    pub fn as_fun(&self) -> Option<&FunValue> {
        match self {
            Value::Fun(f) => Some(f),
            _ => None,
        }
    }
}

/// Carrier sizes for the base types; all function-space sizes derive from
/// these as `|b|^|a|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Carriers {
    pub worlds: usize,
    pub indivs: usize,
}

/// Cap on materialized table sizes; spaces beyond this are reported as
/// errors rather than allocated.
pub const MAX_CARRIER: u128 = 1 << 24;

impl Carriers {
    pub fn new(worlds: usize, indivs: usize) -> Carriers {
        Carriers { worlds, indivs }
    }

    /// Number of elements in the carrier of `ty`, or `None` on overflow.
    pub fn size(&self, ty: &HolType) -> Option<u128> {
        match ty {
            HolType::Bool => Some(2),
            HolType::World => Some(self.worlds as u128),
            HolType::Indiv => Some(self.indivs as u128),
            HolType::Arrow(a, b) => {
                let sa = self.size(a)?;
                let sb = self.size(b)?;
                checked_pow(sb, sa)
            }
            HolType::TypeVar(_) => None,
        }
    }

    fn size_checked(&self, ty: &HolType) -> Result<usize, ValueError> {
        match self.size(ty) {
            Some(n) if n <= MAX_CARRIER => Ok(n as usize),
            Some(_) => Err(ValueError::CarrierTooLarge(ty.clone())),
            None => Err(ValueError::NoCarrier(ty.clone())),
        }
    }

    /// The `k`-th element of the carrier of `ty`. Function tables enumerate
    /// lexicographically with the entry at argument ordinal 0 most
    /// significant, so ordinal 0 is the everywhere-minimal function.
    pub fn value_of_ordinal(&self, ty: &HolType, k: u128) -> Result<Value, ValueError> {
        match ty {
            HolType::Bool => Ok(Value::Bool(k == 1)),
            HolType::World => Ok(Value::World(k as usize)),
            HolType::Indiv => Ok(Value::Indiv(k as usize)),
            HolType::Arrow(a, b) => {
                let na = self.size_checked(a)?;
                let nb = self.size(b).ok_or_else(|| ValueError::NoCarrier(ty.clone()))?;
                let mut table = Vec::with_capacity(na);
                let mut rem = k;
                let mut place = checked_pow(nb, na as u128)
                    .ok_or_else(|| ValueError::CarrierTooLarge(ty.clone()))?;
                for _ in 0..na {
                    place /= nb;
                    let digit = rem / place;
                    rem %= place;
                    table.push(self.value_of_ordinal(b, digit)?);
                }
                Ok(Value::Fun(FunValue {
                    dom: (**a).clone(),
                    table,
                }))
            }
            HolType::TypeVar(_) => Err(ValueError::NoCarrier(ty.clone())),
        }
    }

    /// Inverse of [`Carriers::value_of_ordinal`].
    pub fn ordinal_of_value(&self, ty: &HolType, v: &Value) -> Result<u128, ValueError> {
        match (ty, v) {
            (HolType::Bool, Value::Bool(b)) => Ok(*b as u128),
            (HolType::World, Value::World(w)) => Ok(*w as u128),
            (HolType::Indiv, Value::Indiv(d)) => Ok(*d as u128),
            (HolType::Arrow(a, b), Value::Fun(f)) => {
                let nb = self.size(b).ok_or_else(|| ValueError::NoCarrier(ty.clone()))?;
                let mut k: u128 = 0;
                let _ = a;
                for entry in &f.table {
                    k = k * nb + self.ordinal_of_value(b, entry)?;
                }
                Ok(k)
            }
            _ => Err(ValueError::NoCarrier(ty.clone())),
        }
    }

    /// Applies a function value to an argument by ordinal lookup.
    pub fn apply(&self, f: &FunValue, arg: &Value) -> Result<Value, ValueError> {
        let idx = self.ordinal_of_value(&f.dom, arg)? as usize;
        Ok(f.table[idx].clone())
    }

    /// All elements of the carrier of `ty`, in ordinal order.
    pub fn enumerate(&self, ty: &HolType) -> Result<Vec<Value>, ValueError> {
        let n = self.size_checked(ty)?;
        (0..n as u128)
            .map(|k| self.value_of_ordinal(ty, k))
            .collect()
    }
}

fn checked_pow(base: u128, exp: u128) -> Option<u128> {
    match base {
        0 => return Some(if exp == 0 { 1 } else { 0 }),
        1 => return Some(1),
        _ if exp > 127 => return None,
        _ => {}
    }
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > (1 << 100) {
            return None;
        }
    }
    Some(acc)
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{}", b),
            Value::World(w) => write!(f, "w{}", w),
            Value::Indiv(d) => write!(f, "i{}", d),
            Value::Fun(fun) => {
                // World-set sugar for predicates on worlds and individuals.
                if fun.table.iter().all(|v| matches!(v, Value::Bool(_))) {
                    let prefix = match fun.dom {
                        HolType::World => Some("w"),
                        HolType::Indiv => Some("i"),
                        _ => None,
                    };
                    if let Some(prefix) = prefix {
                        let members: Vec<String> = fun
                            .table
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| matches!(v, Value::Bool(true)))
                            .map(|(k, _)| format!("{}{}", prefix, k))
                            .collect();
                        return write!(f, "{{{}}}", members.join(","));
                    }
                }
                let entries: Vec<String> = fun
                    .table
                    .iter()
                    .enumerate()
                    .map(|(k, v)| format!("{}:{}", k, v))
                    .collect();
                write!(f, "[{}]", entries.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::HolType;

    #[test]
    fn function_space_sizes() {
        let c = Carriers::new(2, 3);
        assert_eq!(c.size(&HolType::world_pred()), Some(4));
        let p = HolType::arrow(HolType::Indiv, HolType::Bool);
        assert_eq!(c.size(&p), Some(8));
        let nested = HolType::arrow(HolType::Indiv, HolType::world_pred());
        assert_eq!(c.size(&nested), Some(64)); // (2^2)^3
    }

    #[test]
    fn ordinal_roundtrip() {
        let c = Carriers::new(3, 2);
        let ty = HolType::arrow(HolType::Indiv, HolType::world_pred());
        let n = c.size(&ty).unwrap();
        for k in 0..n {
            let v = c.value_of_ordinal(&ty, k).unwrap();
            assert_eq!(c.ordinal_of_value(&ty, &v).unwrap(), k);
        }
    }

    #[test]
    fn apply_reads_the_table() {
        let c = Carriers::new(2, 2);
        let ty = HolType::world_pred();
        // ordinal 1 = {w1}: table [false, true]
        let v = c.value_of_ordinal(&ty, 1).unwrap();
        let f = v.as_fun().unwrap();
        assert_eq!(c.apply(f, &Value::World(0)).unwrap(), Value::Bool(false));
        assert_eq!(c.apply(f, &Value::World(1)).unwrap(), Value::Bool(true));
    }
}
