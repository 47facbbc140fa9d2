//! Cell subsets of the generic `m x n` matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::Cell;

/// Which rectangle-closure properties a block has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Diagonality {
    Diagonal,
    AntiDiagonal,
    Both,
    Neither,
}

impl Diagonality {
    pub fn is_diagonal(self) -> bool {
        matches!(self, Diagonality::Diagonal | Diagonality::Both)
    }

    pub fn is_anti_diagonal(self) -> bool {
        matches!(self, Diagonality::AntiDiagonal | Diagonality::Both)
    }
}

impl fmt::Display for Diagonality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Diagonality::Diagonal => "diagonal",
            Diagonality::AntiDiagonal => "anti_diagonal",
            Diagonality::Both => "both",
            Diagonality::Neither => "neither",
        })
    }
}

/// A subset of the cells of an `m x n` generic matrix.
///
/// The diagonality flags are computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    rows: usize,
    cols: usize,
    mask: Vec<bool>,
    cells: Vec<Cell>,
    diagonality: Diagonality,
}

impl Block {
    pub fn from_cells<I: IntoIterator<Item = Cell>>(rows: usize, cols: usize, cells: I) -> Result<Self> {
        let mut mask = vec![false; rows * cols];
        for c in cells {
            if c.row == 0 || c.col == 0 || c.row > rows || c.col > cols {
                return Err(Error::OutOfRange {
                    row: c.row,
                    col: c.col,
                    rows,
                    cols,
                });
            }
            mask[(c.row - 1) * cols + (c.col - 1)] = true;
        }
        Ok(Self::from_mask(rows, cols, mask))
    }

    /// Builds a block from a membership predicate over all cells.
    pub fn from_fn(rows: usize, cols: usize, mut member: impl FnMut(Cell) -> bool) -> Self {
        let mut mask = vec![false; rows * cols];
        for i in 1..=rows {
            for j in 1..=cols {
                mask[(i - 1) * cols + (j - 1)] = member(Cell::new(i, j));
            }
        }
        Self::from_mask(rows, cols, mask)
    }

    fn from_mask(rows: usize, cols: usize, mask: Vec<bool>) -> Self {
        let cells = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| Cell::new(i, j)))
            .filter(|c| mask[(c.row - 1) * cols + (c.col - 1)])
            .collect();
        let mut b = Block {
            rows,
            cols,
            mask,
            cells,
            diagonality: Diagonality::Neither,
        };
        b.diagonality = b.compute_diagonality();
        b
    }

    /// The northwest `p x q` submatrix `X_{pq}` inside an `rows x cols` matrix.
    pub fn northwest(rows: usize, cols: usize, p: usize, q: usize) -> Self {
        Self::from_fn(rows, cols, |c| c.row <= p && c.col <= q)
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_| true)
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_| false)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    #[inline]
    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1
            && c.col >= 1
            && c.row <= self.rows
            && c.col <= self.cols
            && self.mask[(c.row - 1) * self.cols + (c.col - 1)]
    }

    pub fn diagonality(&self) -> Diagonality {
        self.diagonality
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonality.is_diagonal()
    }

    pub fn is_anti_diagonal(&self) -> bool {
        self.diagonality.is_anti_diagonal()
    }

    pub fn intersection(&self, other: &Block) -> Block {
        Block::from_fn(self.rows, self.cols, |c| self.contains(c) && other.contains(c))
    }

    pub fn is_disjoint(&self, other: &Block) -> bool {
        self.cells.iter().all(|&c| !other.contains(c))
    }

    /// Distinct row indices occurring in the block.
    pub fn occupied_rows(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.cells.iter().map(|c| c.row).collect();
        v.dedup();
        v
    }

    fn rect_inside(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> bool {
        (r0..=r1).all(|i| (c0..=c1).all(|j| self.contains(Cell::new(i, j))))
    }

    /// Closure scans in both orientations. Diagonal: NW and SE corners in the
    /// block force the whole rectangle. Anti-diagonal: NE and SW corners.
    fn compute_diagonality(&self) -> Diagonality {
        let mut diag = true;
        let mut anti = true;
        for (k, &a) in self.cells.iter().enumerate() {
            for &b in &self.cells[k + 1..] {
                // cells are row-major sorted, so a.row <= b.row
                let (c0, c1) = (a.col.min(b.col), a.col.max(b.col));
                if !self.rect_inside(a.row, b.row, c0, c1) {
                    if a.col <= b.col {
                        diag = false;
                    }
                    if a.col >= b.col {
                        anti = false;
                    }
                }
                if !diag && !anti {
                    return Diagonality::Neither;
                }
            }
        }
        match (diag, anti) {
            (true, true) => Diagonality::Both,
            (true, false) => Diagonality::Diagonal,
            (false, true) => Diagonality::AntiDiagonal,
            (false, false) => Diagonality::Neither,
        }
    }

    /// ASCII picture, `#` for member cells.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                s.push(if self.contains(Cell::new(i, j)) { '#' } else { '.' });
            }
            s.push('\n');
        }
        s
    }
}

/// Rectangle-closure classification of a block.
pub fn check_diagonality(block: &Block) -> Diagonality {
    block.diagonality()
}
