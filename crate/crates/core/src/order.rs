//! Variable orders on the generic matrix and the lexicographic term orders
//! they induce.
//!
//! Eight scanning orders are built in. The anti-diagonal ones start at a
//! north-east or south-west corner, the diagonal ones at north-west or
//! south-east:
//!
//! | name | greatest | scan                              |
//! |------|----------|-----------------------------------|
//! | NEW  | `x[1,n]` | rows top to bottom, each westward  |
//! | NES  | `x[1,n]` | columns right to left, each south  |
//! | SWE  | `x[m,1]` | rows bottom to top, each eastward  |
//! | SWN  | `x[m,1]` | columns left to right, each north  |
//! | NWE  | `x[1,1]` | rows top to bottom, each eastward  |
//! | NWS  | `x[1,1]` | columns left to right, each south  |
//! | SEW  | `x[m,n]` | rows bottom to top, each westward  |
//! | SEN  | `x[m,n]` | columns right to left, each north  |

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{Cell, Term};

/// Whether every minor's leading term is its anti-diagonal or diagonal product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    AntiDiagonal,
    Diagonal,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::AntiDiagonal => "anti-diagonal",
            OrderKind::Diagonal => "diagonal",
        })
    }
}

/// The built-in scanning variable orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scan {
    New,
    Nes,
    Swe,
    Swn,
    Nwe,
    Nws,
    Sew,
    Sen,
}

impl Scan {
    pub const ALL: [Scan; 8] = [
        Scan::New,
        Scan::Nes,
        Scan::Swe,
        Scan::Swn,
        Scan::Nwe,
        Scan::Nws,
        Scan::Sew,
        Scan::Sen,
    ];
    pub const ANTI_DIAGONAL: [Scan; 4] = [Scan::New, Scan::Nes, Scan::Swe, Scan::Swn];
    pub const DIAGONAL: [Scan; 4] = [Scan::Nwe, Scan::Nws, Scan::Sew, Scan::Sen];

    pub fn kind(self) -> OrderKind {
        match self {
            Scan::New | Scan::Nes | Scan::Swe | Scan::Swn => OrderKind::AntiDiagonal,
            _ => OrderKind::Diagonal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scan::New => "new",
            Scan::Nes => "nes",
            Scan::Swe => "swe",
            Scan::Swn => "swn",
            Scan::Nwe => "nwe",
            Scan::Nws => "nws",
            Scan::Sew => "sew",
            Scan::Sen => "sen",
        }
    }

    /// Position of `c` in the scan, 0 for the greatest variable.
    fn position(self, m: usize, n: usize, c: Cell) -> usize {
        let (i, j) = (c.row, c.col);
        match self {
            Scan::New => (i - 1) * n + (n - j),
            Scan::Nes => (n - j) * m + (i - 1),
            Scan::Swe => (m - i) * n + (j - 1),
            Scan::Swn => (j - 1) * m + (m - i),
            Scan::Nwe => (i - 1) * n + (j - 1),
            Scan::Nws => (j - 1) * m + (i - 1),
            Scan::Sew => (m - i) * n + (n - j),
            Scan::Sen => (n - j) * m + (m - i),
        }
    }
}

impl fmt::Display for Scan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scan::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown order '{s}', expected one of new|nes|swe|swn|nwe|nws|sew|sen")))
    }
}

/// A total order on the `m * n` variables, stored as a rank table
/// (larger rank = greater variable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableOrder {
    rows: usize,
    cols: usize,
    rank: Vec<u32>,
    by_rank: Vec<Cell>,
}

impl VariableOrder {
    pub fn scanning(scan: Scan, rows: usize, cols: usize) -> Self {
        let total = rows * cols;
        let mut greatest_first = vec![Cell::new(0, 0); total];
        for i in 1..=rows {
            for j in 1..=cols {
                let c = Cell::new(i, j);
                greatest_first[scan.position(rows, cols, c)] = c;
            }
        }
        Self::from_greatest_first(rows, cols, greatest_first).expect("scan is a bijection")
    }

    /// Builds an order from all cells listed greatest first.
    pub fn from_greatest_first(rows: usize, cols: usize, cells: Vec<Cell>) -> Result<Self> {
        let total = rows * cols;
        if cells.len() != total {
            return Err(Error::Precondition(format!(
                "variable order lists {} cells, expected {total}",
                cells.len()
            )));
        }
        let mut rank = vec![u32::MAX; total];
        for (pos, c) in cells.iter().enumerate() {
            if c.row == 0 || c.col == 0 || c.row > rows || c.col > cols {
                return Err(Error::OutOfRange {
                    row: c.row,
                    col: c.col,
                    rows,
                    cols,
                });
            }
            let slot = &mut rank[(c.row - 1) * cols + (c.col - 1)];
            if *slot != u32::MAX {
                return Err(Error::Precondition(format!("variable {c} listed twice")));
            }
            *slot = (total - 1 - pos) as u32;
        }
        let mut by_rank = cells;
        by_rank.reverse();
        Ok(VariableOrder {
            rows,
            cols,
            rank,
            by_rank,
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn rank(&self, c: Cell) -> u32 {
        self.rank[(c.row - 1) * self.cols + (c.col - 1)]
    }

    pub fn try_rank(&self, c: Cell) -> Result<u32> {
        if c.row == 0 || c.col == 0 || c.row > self.rows || c.col > self.cols {
            return Err(Error::OutOfRange {
                row: c.row,
                col: c.col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank(c))
    }

    #[inline]
    pub fn cell_of_rank(&self, r: u32) -> Cell {
        self.by_rank[r as usize]
    }

    pub fn greatest(&self) -> Cell {
        *self.by_rank.last().expect("non-empty matrix")
    }
}

/// Exhaustive square-submatrix scans are used up to this size.
pub const CORNER_SCAN_EXHAUSTIVE_MAX: usize = 10;

/// Checks that the greatest variable of every square submatrix sits at one of
/// the two corners matching `kind` (NE/SW for anti-diagonal, NW/SE for
/// diagonal).
///
/// Up to 10x10 every square submatrix is enumerated. Beyond that only 2x2
/// submatrices are scanned: any violating submatrix contains a violating 2x2
/// one built from its greatest variable and a corner.
pub fn check_corner_property(vars: &VariableOrder, kind: OrderKind) -> bool {
    let (m, n) = vars.dims();
    if m <= CORNER_SCAN_EXHAUSTIVE_MAX && n <= CORNER_SCAN_EXHAUSTIVE_MAX {
        corner_property_exhaustive(vars, kind)
    } else {
        corner_property_2x2(vars, kind)
    }
}

fn corner_ok(kind: OrderKind, rows: &[usize], cols: &[usize], best: Cell) -> bool {
    let (top, bottom) = (rows[0], *rows.last().unwrap());
    let (left, right) = (cols[0], *cols.last().unwrap());
    match kind {
        OrderKind::AntiDiagonal => best == Cell::new(top, right) || best == Cell::new(bottom, left),
        OrderKind::Diagonal => best == Cell::new(top, left) || best == Cell::new(bottom, right),
    }
}

pub(crate) fn corner_property_exhaustive(vars: &VariableOrder, kind: OrderKind) -> bool {
    let (m, n) = vars.dims();
    for s in 2..=m.min(n) {
        let row_sets: Vec<Vec<usize>> = (1..=m).combinations(s).collect();
        let col_sets: Vec<Vec<usize>> = (1..=n).combinations(s).collect();
        for rs in &row_sets {
            for cs in &col_sets {
                let best = rs
                    .iter()
                    .flat_map(|&i| cs.iter().map(move |&j| Cell::new(i, j)))
                    .max_by_key(|&c| vars.rank(c))
                    .unwrap();
                if !corner_ok(kind, rs, cs, best) {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn corner_property_2x2(vars: &VariableOrder, kind: OrderKind) -> bool {
    let (m, n) = vars.dims();
    for i in 1..=m {
        for k in i + 1..=m {
            for j in 1..=n {
                for l in j + 1..=n {
                    let cells = [Cell::new(i, j), Cell::new(i, l), Cell::new(k, j), Cell::new(k, l)];
                    let best = *cells.iter().max_by_key(|&&c| vars.rank(c)).unwrap();
                    if !corner_ok(kind, &[i, k], &[j, l], best) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A lexicographic term order induced by a variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    scan: Option<Scan>,
    vars: Arc<VariableOrder>,
}

/// Sort key of a term: variable ranks in descending order. Comparing keys as
/// sequences (a proper prefix is smaller) is exactly the lexicographic order.
pub type TermKey = Vec<u32>;

impl TermOrder {
    pub fn scanning(scan: Scan, rows: usize, cols: usize) -> Self {
        TermOrder {
            kind: scan.kind(),
            scan: Some(scan),
            vars: Arc::new(VariableOrder::scanning(scan, rows, cols)),
        }
    }

    /// Scanning order on the square `n x n` matrix used for `S_n`.
    pub fn square(scan: Scan, n: usize) -> Self {
        Self::scanning(scan, n, n)
    }

    /// A user-supplied variable order. It is accepted only if it passes the
    /// corner check for `kind`.
    pub fn custom(kind: OrderKind, vars: VariableOrder) -> Result<Self> {
        if !check_corner_property(&vars, kind) {
            return Err(Error::Precondition(format!(
                "variable order does not induce a lexicographic {kind} term order"
            )));
        }
        Ok(TermOrder {
            kind,
            scan: None,
            vars: Arc::new(vars),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn scan(&self) -> Option<Scan> {
        self.scan
    }

    pub fn vars(&self) -> &VariableOrder {
        &self.vars
    }

    pub fn dims(&self) -> (usize, usize) {
        self.vars.dims()
    }

    pub fn name(&self) -> String {
        self.scan.map_or_else(|| format!("custom {}", self.kind), |s| s.name().to_string())
    }

    pub fn var_compare(&self, a: Cell, b: Cell) -> Result<Ordering> {
        Ok(self.vars.try_rank(a)?.cmp(&self.vars.try_rank(b)?))
    }

    pub fn key(&self, t: &Term) -> TermKey {
        let mut k: Vec<u32> = t.cells().iter().map(|&c| self.vars.rank(c)).collect();
        k.sort_unstable_by(|a, b| b.cmp(a));
        k
    }

    pub fn term_from_key(&self, key: &[u32]) -> Term {
        key.iter().map(|&r| self.vars.cell_of_rank(r)).collect()
    }

    /// Lexicographic comparison: decided at the greatest variable whose
    /// exponents differ.
    pub fn term_compare(&self, a: &Term, b: &Term) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Greatest variable occurring in `t`.
    pub fn greatest_var(&self, t: &Term) -> Option<Cell> {
        t.cells().iter().copied().max_by_key(|&c| self.vars.rank(c))
    }

    /// True when every cell of `t` lies inside the order's matrix.
    pub fn covers(&self, t: &Term) -> bool {
        let (m, n) = self.dims();
        t.cells().iter().all(|c| c.row >= 1 && c.col >= 1 && c.row <= m && c.col <= n)
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
