use crate::kernel::{HolType, KernelError, Signature};
use crate::syntax::Declarations;

/// Frame conditions on an accessibility relation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FrameFlags {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub euclidean: bool,
    pub universal: bool,
}

/// The modal-logic zoo entries the toolkit supports. `S5Universal` is the
/// formulation where the box quantifies over all worlds and the accessibility
/// constant is eliminated; `S5Equiv` keeps the relation and constrains it to
/// an equivalence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameClass {
    K,
    Kb,
    Kt,
    S4,
    S5Universal,
    S5Equiv,
    Custom(FrameFlags),
}

impl FrameClass {
    pub fn flags(&self) -> FrameFlags {
        match self {
            FrameClass::K => FrameFlags::default(),
            FrameClass::Kb => FrameFlags {
                symmetric: true,
                ..Default::default()
            },
            FrameClass::Kt => FrameFlags {
                reflexive: true,
                ..Default::default()
            },
            FrameClass::S4 => FrameFlags {
                reflexive: true,
                transitive: true,
                ..Default::default()
            },
            FrameClass::S5Universal => FrameFlags {
                reflexive: true,
                symmetric: true,
                transitive: true,
                euclidean: true,
                universal: true,
            },
            FrameClass::S5Equiv => FrameFlags {
                reflexive: true,
                symmetric: true,
                transitive: true,
                ..Default::default()
            },
            FrameClass::Custom(flags) => *flags,
        }
    }

    /// True when box/diamond quantify over all worlds directly.
    pub fn eliminates_accessibility(&self) -> bool {
        matches!(self, FrameClass::S5Universal)
    }

    pub fn name(&self) -> String {
        match self {
            FrameClass::K => "K".into(),
            FrameClass::Kb => "KB".into(),
            FrameClass::Kt => "KT".into(),
            FrameClass::S4 => "S4".into(),
            FrameClass::S5Universal => "S5".into(),
            FrameClass::S5Equiv => "S5equiv".into(),
            FrameClass::Custom(f) => {
                let mut parts = Vec::new();
                if f.reflexive {
                    parts.push("reflexive");
                }
                if f.symmetric {
                    parts.push("symmetric");
                }
                if f.transitive {
                    parts.push("transitive");
                }
                if f.euclidean {
                    parts.push("euclidean");
                }
                if f.universal {
                    parts.push("universal");
                }
                format!("custom({})", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainCondition {
    Constant,
    Varying,
}

/// How a world predicate becomes a closed truth claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grounding {
    Global,
    Actual(String),
}

/// A fully selected object logic: frame class, domain condition, modality
/// index set, and grounding mode.
#[derive(Clone, Debug, PartialEq)]
pub struct LogicPreset {
    pub frame: FrameClass,
    pub domains: DomainCondition,
    pub indices: Vec<String>,
    pub grounding: Grounding,
}

/// Name of the existence predicate guarding actualist quantifiers.
pub const EIW: &str = "eiw";

impl LogicPreset {
    pub fn new(frame: FrameClass) -> LogicPreset {
        LogicPreset {
            frame,
            domains: DomainCondition::Constant,
            indices: vec![crate::syntax::DEFAULT_INDEX.to_string()],
            grounding: Grounding::Global,
        }
    }

    pub fn with_domains(mut self, domains: DomainCondition) -> LogicPreset {
        self.domains = domains;
        self
    }

    pub fn with_indices(mut self, indices: Vec<String>) -> LogicPreset {
        self.indices = indices;
        self
    }

    pub fn with_grounding(mut self, grounding: Grounding) -> LogicPreset {
        self.grounding = grounding;
        self
    }

    /// Name of the accessibility constant for a modality index.
    pub fn accessibility_const(idx: &str) -> String {
        if idx == crate::syntax::DEFAULT_INDEX {
            "r".to_string()
        } else {
            format!("r_{}", idx)
        }
    }

    /// Builds the target-logic signature for this preset over the given
    /// declarations: lifted user constants, accessibility constants (unless
    /// eliminated), the existence predicate under varying domains, and the
    /// actual-world constant under actual grounding.
    pub fn signature(&self, decls: &Declarations) -> Result<Signature, KernelError> {
        let mut sig = Signature::new();
        for (name, sort) in &decls.consts {
            sig.declare(name, sort.lift())?;
        }
        for def in &decls.defines {
            sig.declare(&def.name, def.sort().lift())?;
        }
        if !self.frame.eliminates_accessibility() {
            let rel_ty = HolType::arrow(HolType::World, HolType::world_pred());
            for idx in &self.indices {
                sig.declare(Self::accessibility_const(idx), rel_ty.clone())?;
            }
        }
        if self.domains == DomainCondition::Varying {
            sig.declare(
                EIW,
                HolType::arrow(HolType::Indiv, HolType::world_pred()),
            )?;
        }
        if let Grounding::Actual(w) = &self.grounding {
            sig.declare(w, HolType::World)?;
        }
        Ok(sig)
    }
}
