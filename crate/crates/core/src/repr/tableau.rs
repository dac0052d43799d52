use std::fmt;

use serde::Serialize;

use super::partition::Partition;

/// Standard Young tableau with entries `1..=N`, rows and columns strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates shape and the increasing-rows/columns condition.
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return None;
                }
                seen[e] = true;
            }
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok =
            (1..rows.len()).all(|r| rows[r].iter().enumerate().all(|(c, &e)| rows[r - 1][c] < e));
        (rows_ok && cols_ok).then_some(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `(row, col)` of entry `e` (1-based entry, 0-based coordinates).
    pub fn position(&self, e: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == e) {
                return (r, c);
            }
        }
        panic!("entry {e} not in tableau");
    }

    /// Content `col − row` of the cell holding `e`.
    pub fn content(&self, e: usize) -> isize {
        let (r, c) = self.position(e);
        c as isize - r as isize
    }

    /// Tableau with entries `a` and `b` interchanged; `None` if the result is not standard.
    pub fn swap_entries(&self, a: usize, b: usize) -> Option<Self> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&e| {
                        if e == a {
                            b
                        } else if e == b {
                            a
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Standard tableaux of shape `lambda` in last-letter order: grouped by the row
/// holding `N`, lowest row first, then recursively by the position of `N−1`, and so on.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    let n = lambda.size();
    let mut corners = lambda.removable_rows();
    corners.reverse();
    let mut out = Vec::new();
    for row in corners {
        match lambda.without_corner(row) {
            None => out.push(StandardTableau {
                shape: lambda.clone(),
                rows: vec![vec![n]],
            }),
            Some(smaller) => {
                for t in standard_tableaux(&smaller) {
                    let mut rows = t.rows;
                    if row == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[row].push(n);
                    out.push(StandardTableau {
                        shape: lambda.clone(),
                        rows,
                    });
                }
            }
        }
    }
    out
}
