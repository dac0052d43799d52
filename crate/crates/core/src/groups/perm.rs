use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of `S_N` in one-line notation: `images[x] = g(x)`.
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical element order used everywhere (it coincides with [`rank`](Self::rank)).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// The permutation interchanging `i` and `j`; the identity when `i == j`.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        for label in [i, j] {
            if label >= n {
                return Err(Error::LabelOutOfRange { label, size: n });
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Self { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                got: other.size(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Self { images }
    }

    /// Lexicographic rank among all permutations of the same size (Lehmer code).
    pub fn rank(&self) -> usize {
        let n = self.size();
        let mut rank = 0;
        for i in 0..n {
            let smaller_after = self.images[i + 1..]
                .iter()
                .filter(|&&y| y < self.images[i])
                .count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }

    /// Inverse of [`rank`](Self::rank). `rank` must be below `n!`.
    pub fn unrank(n: usize, mut rank: usize) -> Self {
        let mut digits = vec![0; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let images = digits.into_iter().map(|d| pool.remove(d)).collect();
        Self { images }
    }

    /// Positions `k` of adjacent swaps `s_k = (k k+1)` such that
    /// `self · s_{b1} · s_{b2} ⋯ s_{bm} = 1` (bubble sort of the image sequence).
    /// Equivalently `self = s_{bm} ⋯ s_{b1}`.
    pub fn bubble_sort_swaps(&self) -> Vec<usize> {
        let mut work = self.images.clone();
        let mut swaps = Vec::new();
        let n = work.len();
        for pass in 0..n {
            let mut swapped = false;
            for k in 0..n.saturating_sub(1 + pass) {
                if work[k] > work[k + 1] {
                    work.swap(k, k + 1);
                    swaps.push(k);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        swaps
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i32 {
        if self.bubble_sort_swaps().len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle notation with 0-based symbols, e.g. `(0 2)(1 3)`; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.size()];
        let mut out = String::new();
        for start in 0..self.size() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            out.push('(');
            out.push_str(&body.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

pub fn compose(g: &Permutation, h: &Permutation) -> Result<Permutation> {
    g.compose(h)
}

pub fn transposition(i: usize, j: usize, n: usize) -> Result<Permutation> {
    Permutation::transposition(i, j, n)
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
