use serde::Serialize;

use super::FourierLabel;
use crate::error::{Error, Result};
use crate::groups::Group;
use crate::repr::{partitions, IrrepLabel, Partition, MAX_IRREP_DEGREE_N};

/// Enumeration of the Fourier labels of a group without materializing the
/// representations: irreps in complete-set order, then row, then column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelLayout {
    group: Group,
    young: Option<YoungLayout>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct YoungLayout {
    shapes: Vec<Partition>,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
}

impl LabelLayout {
    pub fn new(group: Group) -> Result<Self> {
        let young = match group.validated()? {
            Group::Cyclic { .. } => None,
            Group::Symmetric { n } if n <= MAX_IRREP_DEGREE_N => {
                let shapes = partitions(n);
                let degrees: Vec<usize> = shapes.iter().map(Partition::hook_dimension).collect();
                let offsets = degrees
                    .iter()
                    .scan(0, |acc, d| {
                        let start = *acc;
                        *acc += d * d;
                        Some(start)
                    })
                    .collect();
                Some(YoungLayout {
                    shapes,
                    degrees,
                    offsets,
                })
            }
            Group::Symmetric { n } => {
                return Err(Error::TooLarge {
                    what: "irrep set for S_N, N",
                    size: n,
                    cap: MAX_IRREP_DEGREE_N,
                })
            }
        };
        Ok(Self { group, young })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// Number of labels, always `|G|`.
    pub fn len(&self) -> usize {
        self.group.order()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn num_irreps(&self) -> usize {
        self.young
            .as_ref()
            .map_or(self.group.order(), |y| y.shapes.len())
    }

    pub fn degree(&self, irrep: usize) -> usize {
        self.young.as_ref().map_or(1, |y| y.degrees[irrep])
    }

    pub fn irrep_label(&self, irrep: usize) -> IrrepLabel {
        match &self.young {
            Some(y) => IrrepLabel::Partition(y.shapes[irrep].clone()),
            None => IrrepLabel::Frequency(irrep),
        }
    }

    pub fn offset(&self, irrep: usize) -> usize {
        self.young.as_ref().map_or(irrep, |y| y.offsets[irrep])
    }

    pub fn position(&self, label: FourierLabel) -> usize {
        self.offset(label.irrep) + label.row * self.degree(label.irrep) + label.col
    }

    pub fn label_at(&self, pos: usize) -> FourierLabel {
        match &self.young {
            None => FourierLabel {
                irrep: pos,
                row: 0,
                col: 0,
            },
            Some(y) => {
                let irrep = y.offsets.partition_point(|&o| o <= pos) - 1;
                let local = pos - y.offsets[irrep];
                let d = y.degrees[irrep];
                FourierLabel {
                    irrep,
                    row: local / d,
                    col: local % d,
                }
            }
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = FourierLabel> + '_ {
        (0..self.len()).map(|pos| self.label_at(pos))
    }

    /// Serialized form of a label: irrep name plus 1-based `i`, `j`.
    pub fn describe(&self, label: FourierLabel) -> LabelName {
        LabelName {
            irrep: self.irrep_label(label.irrep),
            i: label.row + 1,
            j: label.col + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelName {
    pub irrep: IrrepLabel,
    pub i: usize,
    pub j: usize,
}
