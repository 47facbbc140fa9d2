//! Cells of the generic matrix and terms (monomials) over them.
//!
//! A [`Term`] is stored as the sorted multiset of its variables. Terms coming
//! from minors are squarefree with one variable per row, so the sorted cell
//! list is exactly the two-row array: first row `f(t)` strictly increasing,
//! second row `s(t)` the column indices. General monomials (powers appear in
//! S-polynomials) use the same storage with repeated cells.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A variable `x[row,col]` of the generic matrix, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((row, col): (usize, usize)) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.row, c.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// A monomial in the matrix variables, kept in canonical (row, col) order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Cell>", into = "Vec<Cell>")]
pub struct Term(Vec<Cell>);

impl From<Vec<Cell>> for Term {
    fn from(cells: Vec<Cell>) -> Self {
        Term::from_cells(cells)
    }
}

impl From<Term> for Vec<Cell> {
    fn from(t: Term) -> Self {
        t.0
    }
}

impl FromIterator<Cell> for Term {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Term::from_cells(iter.into_iter().collect())
    }
}

impl Term {
    /// The constant term 1.
    pub fn one() -> Self {
        Term(Vec::new())
    }

    pub fn from_cells(mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        Term(cells)
    }

    /// Builds a term from `(row, col)` pairs.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        pairs.iter().map(|&p| Cell::from(p)).collect()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// First row `f(t)` of the two-row array.
    pub fn rows(&self) -> Vec<usize> {
        self.0.iter().map(|c| c.row).collect()
    }

    /// Second row `s(t)` of the two-row array.
    pub fn columns(&self) -> Vec<usize> {
        self.0.iter().map(|c| c.col).collect()
    }

    /// True when the term is a product of variables from pairwise distinct
    /// rows and columns, i.e. it has a two-row array representation.
    pub fn is_two_row_array(&self) -> bool {
        let rows_ok = self.0.windows(2).all(|w| w[0].row < w[1].row);
        let mut cols = self.columns();
        cols.sort_unstable();
        rows_ok && cols.windows(2).all(|w| w[0] < w[1])
    }

    pub fn contains_var(&self, cell: Cell) -> bool {
        self.0.binary_search(&cell).is_ok()
    }

    /// Multiset inclusion: `self | other`.
    pub fn divides(&self, other: &Term) -> bool {
        let mut it = other.0.iter();
        'outer: for c in &self.0 {
            for d in it.by_ref() {
                match d.cmp(c) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn mul(&self, other: &Term) -> Term {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] <= other.0[j] {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Term(out)
    }

    /// `self / divisor`, or `None` when the divisor does not divide.
    pub fn div(&self, divisor: &Term) -> Option<Term> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &c in &self.0 {
            if j < divisor.0.len() && divisor.0[j] == c {
                j += 1;
            } else if j < divisor.0.len() && divisor.0[j] < c {
                return None;
            } else {
                out.push(c);
            }
        }
        (j == divisor.0.len()).then_some(Term(out))
    }

    /// Greatest common divisor as multisets.
    pub fn gcd(&self, other: &Term) -> Term {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Term(out)
    }

    pub fn lcm(&self, other: &Term) -> Term {
        let g = self.gcd(other);
        self.mul(other).div(&g).expect("gcd divides the product")
    }

    pub fn is_coprime(&self, other: &Term) -> bool {
        self.gcd(other).is_one()
    }

    /// Distinct variables of the term.
    pub fn support(&self) -> Vec<Cell> {
        let mut v = self.0.clone();
        v.dedup();
        v
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
