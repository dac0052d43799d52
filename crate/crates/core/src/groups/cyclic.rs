use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residue class `value mod modulus` in `Z_Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicElement {
    value: usize,
    modulus: usize,
}

impl CyclicElement {
    pub fn new(value: usize, modulus: usize) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Malformed("cyclic modulus must be positive".into()));
        }
        if value >= modulus {
            return Err(Error::LabelOutOfRange {
                label: value,
                size: modulus,
            });
        }
        Ok(Self { value, modulus })
    }

    /// Reduces an arbitrary integer into `[0, modulus)`.
    pub fn reduce(value: i64, modulus: usize) -> Self {
        let m = modulus as i64;
        Self {
            value: value.rem_euclid(m) as usize,
            modulus,
        }
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn modulus(self) -> usize {
        self.modulus
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::SizeMismatch {
                expected: self.modulus,
                got: other.modulus,
            });
        }
        Ok(Self {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        })
    }
}

impl std::ops::Neg for CyclicElement {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for CyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = CyclicElement::new(3, 4).unwrap();
        let b = CyclicElement::new(2, 4).unwrap();
        assert_eq!(a.checked_add(b).unwrap().value(), 1);
        assert_eq!((-a).value(), 1);
        assert_eq!((-CyclicElement::new(0, 4).unwrap()).value(), 0);
        assert_eq!(CyclicElement::reduce(-1, 256).value(), 255);
        assert!(CyclicElement::new(4, 4).is_err());
        assert!(a.checked_add(CyclicElement::new(0, 5).unwrap()).is_err());
    }
}
