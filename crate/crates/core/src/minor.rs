//! Minors of the generic matrix, their expansions and leading terms, and the
//! length test for divisibility by a minor inside a block.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::block::Block;
use crate::error::{Error, Result};
use crate::order::{OrderKind, TermOrder};
use crate::poly::Polynomial;
use crate::term::{Cell, Term};

/// A minor given by strictly increasing row and column index lists of equal
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MinorRepr", into = "MinorRepr")]
pub struct Minor {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct MinorRepr {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl TryFrom<MinorRepr> for Minor {
    type Error = Error;

    fn try_from(r: MinorRepr) -> Result<Self> {
        Minor::new(r.rows, r.cols)
    }
}

impl From<Minor> for MinorRepr {
    fn from(m: Minor) -> Self {
        MinorRepr {
            rows: m.rows,
            cols: m.cols,
        }
    }
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.first().is_none_or(|&x| x >= 1) && v.windows(2).all(|w| w[0] < w[1])
}

impl Minor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::InvalidMinor(format!(
                "need equally many rows and columns, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        if !strictly_increasing(&rows) || !strictly_increasing(&cols) {
            return Err(Error::InvalidMinor(format!(
                "indices must be 1-based and strictly increasing: {rows:?} {cols:?}"
            )));
        }
        Ok(Minor { rows, cols })
    }

    /// The `r x r` contiguous minor with top-left cell `(i, j)`.
    pub fn contiguous(i: usize, j: usize, r: usize) -> Self {
        Minor {
            rows: (i..i + r).collect(),
            cols: (j..j + r).collect(),
        }
    }

    pub fn cell(c: Cell) -> Self {
        Minor {
            rows: vec![c.row],
            cols: vec![c.col],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// True when all indices fit an `m x n` matrix.
    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.rows.last().is_some_and(|&r| r <= m) && self.cols.last().is_some_and(|&c| c <= n)
    }

    /// All cells of the submatrix, row-major.
    pub fn grid(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .flat_map(move |&i| self.cols.iter().map(move |&j| Cell::new(i, j)))
    }

    pub fn inside(&self, b: &Block) -> bool {
        self.grid().all(|c| b.contains(c))
    }
}

impl fmt::Display for Minor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}},{{{}}})", self.rows.iter().join(","), self.cols.iter().join(","))
    }
}

impl FromStr for Minor {
    type Err = Error;

    /// Parses `({1,2},{3,4})`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a minor like ({{1,2}},{{3,4}}), got '{s}'"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once("},{").ok_or_else(bad)?;
        let a = a.strip_prefix('{').ok_or_else(bad)?;
        let b = b.strip_suffix('}').ok_or_else(bad)?;
        let parse = |x: &str| -> Result<Vec<usize>> {
            x.split(',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        Minor::new(parse(a)?, parse(b)?)
    }
}

/// Sign of a permutation of `0..r` given as a slice.
fn permutation_sign(p: &[usize]) -> i32 {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Calls `f(sign, term)` for each of the `r!` terms of the minor.
pub fn for_each_minor_term(m: &Minor, mut f: impl FnMut(i32, Term)) {
    let r = m.size();
    for sigma in (0..r).permutations(r) {
        let cells = (0..r).map(|k| Cell::new(m.rows[k], m.cols[sigma[k]])).collect();
        f(permutation_sign(&sigma), Term::from_cells(cells));
    }
}

/// The determinant of `X[rows, cols]` as a polynomial with `r!` terms.
pub fn expand_minor(m: &Minor) -> Polynomial {
    let mut out = Vec::with_capacity((1..=m.size()).product());
    for_each_minor_term(m, |s, t| out.push((t, BigInt::from(s))));
    Polynomial::from_distinct_terms(out)
}

/// Coefficient of `t` in the expansion of `m`, or `None` if `t` is not a term
/// of `m`.
pub fn term_sign(m: &Minor, t: &Term) -> Option<i32> {
    if t.degree() != m.size() || t.rows() != m.rows {
        return None;
    }
    let mut sigma = Vec::with_capacity(m.size());
    for c in t.cells() {
        sigma.push(m.cols.binary_search(&c.col).ok()?);
    }
    let mut seen = sigma.clone();
    seen.sort_unstable();
    seen.dedup();
    (seen.len() == sigma.len()).then(|| permutation_sign(&sigma))
}

/// Product of the anti-diagonal or diagonal entries.
pub fn leading_term_of_kind(m: &Minor, kind: OrderKind) -> Term {
    let r = m.size();
    let cells = (0..r)
        .map(|k| match kind {
            OrderKind::AntiDiagonal => Cell::new(m.rows[k], m.cols[r - 1 - k]),
            OrderKind::Diagonal => Cell::new(m.rows[k], m.cols[k]),
        })
        .collect();
    Term::from_cells(cells)
}

pub fn leading_term(m: &Minor, ord: &TermOrder) -> Term {
    leading_term_of_kind(m, ord.kind())
}

/// `+1` for diagonal, `(-1)^{r(r-1)/2}` for anti-diagonal.
pub fn leading_coefficient_of_kind(m: &Minor, kind: OrderKind) -> i32 {
    let r = m.size();
    match kind {
        OrderKind::Diagonal => 1,
        OrderKind::AntiDiagonal => {
            if (r * (r - 1) / 2).is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    }
}

/// Both index sets of `m2` are contained in those of `m1`.
pub fn contains(m1: &Minor, m2: &Minor) -> bool {
    is_subset(&m2.rows, &m1.rows) && is_subset(&m2.cols, &m1.cols)
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Rows and columns of `m1` not used by `m2`. `m2` must be strictly smaller
/// and contained in `m1`.
pub fn complement(m1: &Minor, m2: &Minor) -> Result<Minor> {
    if !contains(m1, m2) || m2.size() >= m1.size() {
        return Err(Error::NotContained {
            outer: m1.to_string(),
            inner: m2.to_string(),
        });
    }
    let rows = m1.rows.iter().copied().filter(|x| m2.rows.binary_search(x).is_err()).collect();
    let cols = m1.cols.iter().copied().filter(|x| m2.cols.binary_search(x).is_err()).collect();
    Minor::new(rows, cols)
}

/// Keeps the cells of `t` that lie in `b`.
pub fn term_intersect_block(t: &Term, b: &Block) -> Term {
    t.cells().iter().copied().filter(|&c| b.contains(c)).collect()
}

/// Length of the longest strictly increasing subsequence, by patience sorting.
pub fn longest_increasing(seq: &[usize]) -> usize {
    let mut piles: Vec<usize> = Vec::new();
    for &x in seq {
        let k = piles.partition_point(|&top| top < x);
        if k == piles.len() {
            piles.push(x);
        } else {
            piles[k] = x;
        }
    }
    piles.len()
}

pub fn longest_decreasing(seq: &[usize]) -> usize {
    let rev: Vec<usize> = seq.iter().rev().copied().collect();
    longest_increasing(&rev)
}

/// Anti-diagonal (longest decreasing) or diagonal (longest increasing) length
/// of the column sequence of `t` restricted to `b`.
pub fn term_length(t: &Term, b: &Block, kind: OrderKind) -> usize {
    let s = term_intersect_block(t, b).columns();
    match kind {
        OrderKind::AntiDiagonal => longest_decreasing(&s),
        OrderKind::Diagonal => longest_increasing(&s),
    }
}

fn check_block_kind(b: &Block, kind: OrderKind) -> Result<()> {
    match kind {
        OrderKind::AntiDiagonal if !b.is_anti_diagonal() => Err(Error::KindMismatch("anti-diagonal")),
        OrderKind::Diagonal if !b.is_diagonal() => Err(Error::KindMismatch("diagonal")),
        _ => Ok(()),
    }
}

/// Whether some `r`-minor inside `b` has a leading term dividing `t`, decided
/// by the length of `t` in `b`. The block must be of the matching kind.
pub fn divisible_by_block_minor(t: &Term, b: &Block, r: usize, kind: OrderKind) -> Result<bool> {
    check_block_kind(b, kind)?;
    let ans = r == 0 || term_length(t, b, kind) >= r;
    #[cfg(debug_assertions)]
    if term_intersect_block(t, b).degree() <= 12 {
        debug_assert_eq!(
            ans,
            r == 0 || block_minor_witness_exhaustive(t, b, r, kind).is_some(),
            "length test disagrees with witness search for {t}"
        );
    }
    Ok(ans)
}

/// Searches all `r`-subsets of the cells of `t` for a minor inside `b` whose
/// leading term (of the given kind) is that subset. Works for any block.
pub fn block_minor_witness_exhaustive(t: &Term, b: &Block, r: usize, kind: OrderKind) -> Option<Minor> {
    let cells: Vec<Cell> = term_intersect_block(t, b).support();
    cells.into_iter().combinations(r).find_map(|sub| {
        // sub is row-major sorted
        let rows: Vec<usize> = sub.iter().map(|c| c.row).collect();
        let cols: Vec<usize> = sub.iter().map(|c| c.col).collect();
        let rows_ok = rows.windows(2).all(|w| w[0] < w[1]);
        let cols_ok = match kind {
            OrderKind::Diagonal => cols.windows(2).all(|w| w[0] < w[1]),
            OrderKind::AntiDiagonal => cols.windows(2).all(|w| w[0] > w[1]),
        };
        if !rows_ok || !cols_ok {
            return None;
        }
        let mut sorted = cols;
        sorted.sort_unstable();
        let m = Minor::new(rows, sorted).ok()?;
        m.inside(b).then_some(m)
    })
}
