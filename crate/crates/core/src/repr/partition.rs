use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::factorial;

/// Integer partition `λ ⊢ N`: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of column `c` (number of rows longer than `c`).
    pub fn column_length(&self, c: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > c).count()
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.column_length(col) - row - 1;
        arm + leg + 1
    }

    /// Degree of the irreducible representation labelled by `self`, via the hook length formula.
    pub fn hook_dimension(&self) -> usize {
        let hooks: u128 = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .map(|(r, c)| self.hook_length(r, c) as u128)
            .product();
        (factorial(self.size()) as u128 / hooks) as usize
    }

    /// Rows whose last cell can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&r| r + 1 == self.parts.len() || self.parts[r] > self.parts[r + 1])
            .collect()
    }

    pub(crate) fn without_corner(&self, row: usize) -> Option<Self> {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        if parts.is_empty() {
            None
        } else {
            Some(Self { parts })
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_sign(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1,…,1)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn extend(
        remaining: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn hook_dimension(lambda: &Partition) -> usize {
    lambda.hook_dimension()
}
