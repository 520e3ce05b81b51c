//! Tropical matrices and the tropical determinant (permanent).

use std::fmt;

use crate::error::{Result, TropError};
use crate::scalar::TropScalar;

/// Largest square dimension accepted by [`TropMatrix::trop_det`] by default.
pub const DEFAULT_MAX_DET_N: usize = 8;

/// Rectangular row-major grid of tropical scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropScalar>,
}

/// Result of a permanent evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permanent {
    pub value: TropScalar,
    /// Number of permutations attaining `value`.
    pub optimal_count: u64,
    /// Exactly one optimal permutation and a finite value.
    pub regular: bool,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TropScalar>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(TropError::MalformedMatrix);
        }
        Ok(TropMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(TropError::MalformedMatrix);
        }
        TropMatrix::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        TropMatrix::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| TropScalar::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &TropScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[TropScalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        TropMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The square matrix left after deleting column `col`.
    pub fn without_column(&self, col: usize) -> TropMatrix {
        let entries = (0..self.rows)
            .flat_map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(move |(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
            })
            .collect();
        TropMatrix {
            rows: self.rows,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Tropical determinant with the default dimension bound.
    pub fn trop_det(&self) -> Result<Permanent> {
        self.trop_det_bounded(DEFAULT_MAX_DET_N)
    }

    /// Tropical determinant by enumeration of every permutation.
    pub fn trop_det_bounded(&self, max_n: usize) -> Result<Permanent> {
        if self.rows != self.cols {
            return Err(TropError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > max_n {
            return Err(TropError::DimensionTooLarge { n: self.rows, max: max_n });
        }
        let mut search = PermanentSearch {
            matrix: self,
            best: TropScalar::NegInf,
            count: 0,
        };
        search.descend(0, 0, &TropScalar::zero());
        let regular = search.count == 1 && search.best.is_finite();
        Ok(Permanent {
            value: search.best,
            optimal_count: search.count,
            regular,
        })
    }
}

struct PermanentSearch<'a> {
    matrix: &'a TropMatrix,
    best: TropScalar,
    count: u64,
}

impl PermanentSearch<'_> {
    fn descend(&mut self, row: usize, used: u64, acc: &TropScalar) {
        let n = self.matrix.rows;
        if row == n {
            match acc.cmp(&self.best) {
                std::cmp::Ordering::Greater => {
                    self.best = acc.clone();
                    self.count = 1;
                }
                std::cmp::Ordering::Equal => self.count += 1,
                std::cmp::Ordering::Less => {}
            }
            return;
        }
        for col in 0..n {
            if used & (1 << col) == 0 {
                let next = acc.odot(self.matrix.get(row, col));
                self.descend(row + 1, used | (1 << col), &next);
            }
        }
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}
