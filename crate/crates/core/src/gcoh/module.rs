//! Coefficient modules with trivial action.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::GcohError;
use crate::zlin::{AbelianGroup, Divisible, GroupValue};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleDescriptor {
    FinitelyGenerated { group: AbelianGroup },
    /// `k*` for an algebraically closed field of the given characteristic.
    UnitsOfField { characteristic: u64 },
    /// `Pic^0` of a smooth projective curve of genus `genus`.
    PicardZero { genus: u32, characteristic: u64 },
}

impl ModuleDescriptor {
    pub fn integers() -> Self {
        Self::fg(AbelianGroup::free(1))
    }

    pub fn fg(group: AbelianGroup) -> Self {
        ModuleDescriptor::FinitelyGenerated { group }
    }

    pub fn cyclic(m: u64) -> Self {
        Self::fg(AbelianGroup::cyclic(m))
    }

    pub fn units(characteristic: u64) -> Self {
        ModuleDescriptor::UnitsOfField { characteristic }
    }

    pub fn picard_zero(genus: u32, characteristic: u64) -> Self {
        ModuleDescriptor::PicardZero {
            genus,
            characteristic,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ModuleDescriptor::FinitelyGenerated { .. } => 0,
            ModuleDescriptor::UnitsOfField { characteristic }
            | ModuleDescriptor::PicardZero { characteristic, .. } => *characteristic,
        }
    }

    pub fn is_divisible(&self) -> bool {
        !matches!(self, ModuleDescriptor::FinitelyGenerated { .. })
    }

    /// Rejects `n` divisible by the characteristic of a symbolic module.
    pub fn check_tame(&self, n: u64) -> Result<(), GcohError> {
        let p = self.characteristic();
        if self.is_divisible() && p > 0 && n % p == 0 && n > 1 {
            return Err(GcohError::Wild { order: n, characteristic: p });
        }
        Ok(())
    }

    pub fn value(&self) -> GroupValue {
        match self {
            ModuleDescriptor::FinitelyGenerated { group } => GroupValue::exact(group.clone()),
            ModuleDescriptor::UnitsOfField { .. } => GroupValue::divisible(Divisible::Units),
            ModuleDescriptor::PicardZero { genus, .. } => {
                GroupValue::divisible(Divisible::Picard0 { genus: *genus })
            }
        }
    }

    /// `M[n]`.
    pub fn torsion(&self, n: u64) -> AbelianGroup {
        self.value().torsion_of(&BigInt::from(n))
    }

    /// `M / nM`.
    pub fn mod_multiples(&self, n: u64) -> AbelianGroup {
        self.value().mod_multiples(&BigInt::from(n))
    }

    /// Multiplicity of the dimension shift `H^r(G, M) = H^{r+1}(G, Z)^k` for
    /// divisible modules.
    pub fn shift_multiplicity(&self) -> Option<usize> {
        match self {
            ModuleDescriptor::FinitelyGenerated { .. } => None,
            ModuleDescriptor::UnitsOfField { .. } => Some(1),
            ModuleDescriptor::PicardZero { genus, .. } => Some(2 * *genus as usize),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ModuleDescriptor::FinitelyGenerated { group } => group.is_trivial(),
            ModuleDescriptor::PicardZero { genus, .. } => genus.is_zero(),
            ModuleDescriptor::UnitsOfField { .. } => false,
        }
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
