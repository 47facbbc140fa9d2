//! Blockwise determinantal ideals, one- and two-sided ladders, sufficient
//! Gröbner criteria for unions of block generators, and the correspondence
//! between one-sided ladder data and vexillary permutations.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::block::Block;
use crate::error::{Error, Result};
use crate::minor::{self, Minor};
use crate::order::{OrderKind, TermOrder};
use crate::permutation::{self, Permutation};
use crate::poly::Polynomial;
use crate::term::Cell;

/// Largest block side accepted by [`criterion_rowcolumn`].
pub const ROWCOLUMN_MAX_SIDE: usize = 12;
/// Largest permutation size searched by [`ladder_to_vexillary`].
pub const VEXILLARY_SEARCH_MAX_N: usize = 8;

/// All `r`-minors whose grid lies inside `b`, ordered by rows then columns.
pub fn block_minors(b: &Block, r: usize) -> Vec<Minor> {
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    let (rows, cols) = b.dims();
    let row_cols: Vec<Vec<usize>> = (1..=rows)
        .map(|i| (1..=cols).filter(|&j| b.contains(Cell::new(i, j))).collect())
        .collect();
    let mut chosen = Vec::with_capacity(r);
    walk_rows(&row_cols, r, 1, (1..=cols).collect(), &mut chosen, &mut out);
    out
}

fn walk_rows(
    row_cols: &[Vec<usize>],
    r: usize,
    next: usize,
    common: Vec<usize>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Minor>,
) {
    if chosen.len() == r {
        for cs in common.into_iter().combinations(r) {
            out.push(Minor::new(chosen.clone(), cs).expect("sorted distinct indices"));
        }
        return;
    }
    for i in next..=row_cols.len() {
        if row_cols.len() + 1 - i < r - chosen.len() {
            break;
        }
        let c: Vec<usize> = common.iter().copied().filter(|j| row_cols[i - 1].binary_search(j).is_ok()).collect();
        if c.len() < r {
            continue;
        }
        chosen.push(i);
        walk_rows(row_cols, r, i + 1, c, chosen, out);
        chosen.pop();
    }
}

/// Blocks with the minor size attached to each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockwiseIdealSpec {
    pub blocks: Vec<Block>,
    pub sizes: Vec<usize>,
}

impl BlockwiseIdealSpec {
    pub fn new(blocks: Vec<Block>, sizes: Vec<usize>) -> Result<Self> {
        if blocks.len() != sizes.len() {
            return Err(Error::Precondition(format!(
                "{} blocks but {} sizes",
                blocks.len(),
                sizes.len()
            )));
        }
        if let Some(i) = sizes.iter().position(|&r| r == 0) {
            return Err(Error::Precondition(format!("size {} is zero", i + 1)));
        }
        if blocks.iter().map(Block::dims).unique().count() > 1 {
            return Err(Error::Precondition("blocks live in matrices of different shapes".into()));
        }
        Ok(Self { blocks, sizes })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn dims(&self) -> Option<(usize, usize)> {
        self.blocks.first().map(Block::dims)
    }

    /// Generators per block.
    pub fn generators(&self) -> Vec<Vec<Minor>> {
        self.blocks.iter().zip(&self.sizes).map(|(b, &r)| block_minors(b, r)).collect()
    }

    /// Union of all generators without repeats, in block order.
    pub fn all_generators(&self) -> Vec<Minor> {
        self.generators().into_iter().flatten().unique().collect()
    }

    pub fn generator_polys(&self) -> Vec<Polynomial> {
        self.all_generators().iter().map(minor::expand_minor).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        self.blocks.iter().all(Block::is_diagonal)
    }

    pub fn is_anti_diagonal(&self) -> bool {
        self.blocks.iter().all(Block::is_anti_diagonal)
    }
}

/// Data `(a_i, b_i, r_i)` of a one-sided ladder ideal in an `m x n` matrix:
/// the `r_i`-minors of the northwest rectangles `X_{a_i b_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneSidedSpec {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub r: Vec<usize>,
    pub m: usize,
    pub n: usize,
}

impl OneSidedSpec {
    pub fn new(a: Vec<usize>, b: Vec<usize>, r: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        let s = Self { a, b, r, m, n };
        s.validate()?;
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.a.len();
        if k == 0 || self.b.len() != k || self.r.len() != k {
            return Err(Error::InvalidLadder(format!(
                "need equally long nonempty a, b, r (got {}, {}, {})",
                k,
                self.b.len(),
                self.r.len()
            )));
        }
        if self.a[0] < 1 || self.a[k - 1] > self.m || self.a.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::CornerMonotonicity(format!("a = {:?}, m = {}", self.a, self.m)));
        }
        if self.b[k - 1] < 1 || self.b[0] > self.n || self.b.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::CornerMonotonicity(format!("b = {:?}, n = {}", self.b, self.n)));
        }
        let da: Vec<i64> = self.a.iter().zip(&self.r).map(|(&a, &r)| a as i64 - r as i64).collect();
        let db: Vec<i64> = self.b.iter().zip(&self.r).map(|(&b, &r)| b as i64 - r as i64).collect();
        if self.r.contains(&0) || da[0] < 0 || da.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::SizeStaircase(format!("a - r = {da:?}")));
        }
        if db[k - 1] < 0 || db.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::SizeStaircase(format!("b - r = {db:?}")));
        }
        Ok(())
    }

    /// Smallest `n` with a vexillary `w` in `S_n` realizing the data:
    /// `max_i (a_i + b_i - r_i + 1)`. Never larger than `a_k + b_1`.
    pub fn min_size(&self) -> usize {
        (0..self.len()).map(|i| self.a[i] + self.b[i] + 1 - self.r[i]).max().unwrap_or(0)
    }

    pub fn to_blockwise(&self) -> BlockwiseIdealSpec {
        BlockwiseIdealSpec {
            blocks: self
                .a
                .iter()
                .zip(&self.b)
                .map(|(&a, &b)| Block::northwest(self.m, self.n, a, b))
                .collect(),
            sizes: self.r.clone(),
        }
    }

    /// The ladder region covered by the rectangles.
    pub fn ladder(&self) -> Result<Ladder> {
        let lower: Vec<(usize, usize)> = self.a.iter().copied().zip(self.b.iter().copied()).collect();
        Ladder::from_block(&Ladder::new_unchecked(self.m, self.n, lower, vec![(1, 1)]).block())
    }
}

/// Validated blockwise spec of a one-sided ladder ideal.
pub fn one_sided_ideal(a: &[usize], b: &[usize], r: &[usize], m: usize, n: usize) -> Result<BlockwiseIdealSpec> {
    Ok(OneSidedSpec::new(a.to_vec(), b.to_vec(), r.to_vec(), m, n)?.to_blockwise())
}

/// All vexillary `w` in `S_n` whose essential set with ranks is exactly
/// `{(a_i, b_i, r_i - 1)}`.
pub fn vexillary_matches(spec: &OneSidedSpec, n: usize) -> Result<Vec<Permutation>> {
    spec.validate()?;
    let need = spec.min_size();
    if n < need {
        return Err(Error::Precondition(format!("n = {n} is below max(a_i + b_i - r_i + 1) = {need}")));
    }
    if n > VEXILLARY_SEARCH_MAX_N {
        return Err(Error::ScaleGuard {
            what: "permutation size for the vexillary search",
            value: n,
            limit: VEXILLARY_SEARCH_MAX_N,
        });
    }
    let mut target: Vec<(usize, usize, usize)> = (0..spec.len()).map(|i| (spec.a[i], spec.b[i], spec.r[i] - 1)).collect();
    target.sort_unstable();
    target.dedup();
    let mut out = Vec::new();
    for w in (1..=n).permutations(n) {
        let w = Permutation::new(w).expect("a permutation");
        let ranks_ok = target
            .iter()
            .all(|&(p, q, k)| permutation::rank_nw(&w, p, q).map(|x| x == k).unwrap_or(false));
        if !ranks_ok || !permutation::is_vexillary(&w) {
            continue;
        }
        let mut ess: Vec<(usize, usize, usize)> =
            permutation::essential_set(&w).iter().map(|e| (e.p, e.q, e.rank)).collect();
        ess.sort_unstable();
        if ess == target {
            out.push(w);
        }
    }
    Ok(out)
}

/// The vexillary permutation in `S_n` attached to a one-sided spec, found by
/// search (`n <= 8`). Any `n >= a_k + b_1` works, and so does any `n` down to
/// [`OneSidedSpec::min_size`].
pub fn ladder_to_vexillary(spec: &OneSidedSpec, n: usize) -> Result<Permutation> {
    let found = vexillary_matches(spec, n)?;
    debug_assert!(found.len() <= 1, "several vexillary matches: {found:?}");
    found.into_iter().next().ok_or(Error::NoVexillaryMatch(n))
}

/// One-sided data read off the essential set of a vexillary permutation.
pub fn vexillary_to_one_sided(w: &Permutation) -> Result<OneSidedSpec> {
    if !permutation::is_vexillary(w) {
        return Err(Error::Precondition(format!("{w} is not vexillary")));
    }
    let mut ess = permutation::essential_set(w);
    if ess.is_empty() {
        return Err(Error::Precondition("the identity has an empty essential set".into()));
    }
    ess.sort_by(|x, y| x.p.cmp(&y.p).then(y.q.cmp(&x.q)));
    OneSidedSpec::new(
        ess.iter().map(|e| e.p).collect(),
        ess.iter().map(|e| e.q).collect(),
        ess.iter().map(|e| e.rank + 1).collect(),
        w.len(),
        w.len(),
    )
}

/// A ladder in an `m x n` matrix given by lower corners `(a_i, b_i)` and
/// upper corners `(c_j, d_j)`. Its cells are the `x_{pq}` lying northwest of
/// some lower corner and southeast of some upper corner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ladder {
    pub m: usize,
    pub n: usize,
    pub lower: Vec<(usize, usize)>,
    pub upper: Vec<(usize, usize)>,
}

fn check_corners(kind: &str, v: &[(usize, usize)], m: usize, n: usize) -> Result<()> {
    if v.is_empty() {
        return Err(Error::InvalidLadder(format!("no {kind} corners")));
    }
    if let Some(&(p, q)) = v.iter().find(|&&(p, q)| p == 0 || q == 0 || p > m || q > n) {
        return Err(Error::OutOfRange { row: p, col: q, rows: m, cols: n });
    }
    if v.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 < w[1].1) {
        return Err(Error::InvalidLadder(format!(
            "{kind} corners {v:?} need strictly increasing rows and non-increasing columns"
        )));
    }
    Ok(())
}

impl Ladder {
    pub fn new(m: usize, n: usize, lower: Vec<(usize, usize)>, upper: Vec<(usize, usize)>) -> Result<Self> {
        check_corners("lower", &lower, m, n)?;
        check_corners("upper", &upper, m, n)?;
        let l = Self::new_unchecked(m, n, lower, upper);
        for (i, &(c, d)) in l.upper.iter().enumerate() {
            if !l.lower.iter().any(|&(a, b)| c <= a && d <= b) {
                return Err(Error::InvalidLadder(format!(
                    "upper corner {} ({c},{d}) is not northwest of any lower corner",
                    i + 1
                )));
            }
        }
        Ok(l)
    }

    fn new_unchecked(m: usize, n: usize, lower: Vec<(usize, usize)>, upper: Vec<(usize, usize)>) -> Self {
        Self { m, n, lower, upper }
    }

    /// One-sided ladder: the single upper corner `(1,1)`.
    pub fn one_sided(m: usize, n: usize, lower: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(m, n, lower, vec![(1, 1)])
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.lower.iter().any(|&(a, b)| c.row <= a && c.col <= b)
            && self.upper.iter().any(|&(u, v)| u <= c.row && v <= c.col)
    }

    pub fn block(&self) -> Block {
        Block::from_fn(self.m, self.n, |c| self.contains(c))
    }

    /// Part `i` (0-based): cells of the ladder southeast of upper corner `i`.
    pub fn part(&self, i: usize) -> Block {
        let (c, d) = self.upper[i];
        Block::from_fn(self.m, self.n, |x| self.contains(x) && x.row >= c && x.col >= d)
    }

    pub fn parts(&self) -> Vec<Block> {
        (0..self.upper.len()).map(|i| self.part(i)).collect()
    }

    /// Blockwise spec with the parts as blocks.
    pub fn blockwise(&self, r: &[usize]) -> Result<BlockwiseIdealSpec> {
        if r.len() != self.upper.len() {
            return Err(Error::InvalidLadder(format!(
                "{} sizes for {} upper corners",
                r.len(),
                self.upper.len()
            )));
        }
        BlockwiseIdealSpec::new(self.parts(), r.to_vec())
    }

    /// Recovers the irredundant corners of a diagonal block. Fails if the
    /// block is empty or is not the ladder spanned by those corners.
    pub fn from_block(b: &Block) -> Result<Self> {
        let (m, n) = b.dims();
        let cells = b.cells();
        let lower: Vec<(usize, usize)> = cells
            .iter()
            .filter(|c| !cells.iter().any(|d| d != *c && d.row >= c.row && d.col >= c.col))
            .map(|c| (c.row, c.col))
            .collect();
        let upper: Vec<(usize, usize)> = cells
            .iter()
            .filter(|c| !cells.iter().any(|d| d != *c && d.row <= c.row && d.col <= c.col))
            .map(|c| (c.row, c.col))
            .collect();
        let l = Self::new(m, n, lower, upper)?;
        if &l.block() != b {
            return Err(Error::InvalidLadder("block is not a ladder".into()));
        }
        Ok(l)
    }
}

fn full_rows_in(g: &Minor, b: &Block) -> usize {
    g.rows().iter().filter(|&&i| g.cols().iter().all(|&j| b.contains(Cell::new(i, j)))).count()
}

fn full_cols_in(g: &Minor, b: &Block) -> usize {
    g.cols().iter().filter(|&&j| g.rows().iter().all(|&i| b.contains(Cell::new(i, j)))).count()
}

/// Generators of the two-sided ladder ideal, grouped by part. Group `i` holds
/// the `r_i`-minors of part `i` with at most `r_j - 1` full columns in part
/// `j` for `j < i` and at most `r_j - 1` full rows in part `j` for `j > i`.
/// A minor lying in several parts of equal size is kept in the first of them
/// only: the row cap is not applied against later parts of the same size.
pub fn two_sided_generators(l: &Ladder, r: &[usize]) -> Result<Vec<Vec<Minor>>> {
    let spec = l.blockwise(r)?;
    let parts = &spec.blocks;
    Ok((0..parts.len())
        .map(|i| {
            block_minors(&parts[i], r[i])
                .into_iter()
                .filter(|g| {
                    (0..parts.len()).all(|j| match j.cmp(&i) {
                        std::cmp::Ordering::Less => full_cols_in(g, &parts[j]) < r[j],
                        std::cmp::Ordering::Greater => r[j] == r[i] || full_rows_in(g, &parts[j]) < r[j],
                        std::cmp::Ordering::Equal => true,
                    })
                })
                .collect()
        })
        .collect())
}

/// First offending pair found by a criterion. Block indices are 0-based;
/// minors are absent for block-level criteria.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub block_i: usize,
    pub block_j: usize,
    pub minor_i: Option<Minor>,
    pub minor_j: Option<Minor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub holds: bool,
    pub violation: Option<PairViolation>,
}

impl CriterionReport {
    fn from_violation(violation: Option<PairViolation>) -> Self {
        Self {
            holds: violation.is_none(),
            violation,
        }
    }
}

/// Pairwise disjoint blocks.
pub fn criterion_disjoint_blocks(spec: &BlockwiseIdealSpec) -> bool {
    criterion_disjoint_blocks_report(spec).holds
}

pub fn criterion_disjoint_blocks_report(spec: &BlockwiseIdealSpec) -> CriterionReport {
    let v = (0..spec.len())
        .tuple_combinations()
        .find(|&(i, j)| !spec.blocks[i].is_disjoint(&spec.blocks[j]))
        .map(|(i, j)| PairViolation {
            block_i: i,
            block_j: j,
            minor_i: None,
            minor_j: None,
        });
    CriterionReport::from_violation(v)
}

fn check_kind(spec: &BlockwiseIdealSpec, kind: OrderKind) -> Result<()> {
    match kind {
        OrderKind::Diagonal if !spec.is_diagonal() => Err(Error::KindMismatch("diagonal")),
        OrderKind::AntiDiagonal if !spec.is_anti_diagonal() => Err(Error::KindMismatch("anti-diagonal")),
        _ => Ok(()),
    }
}

/// Leading terms of generators from different blocks never share a variable.
pub fn criterion_disjoint_leading_vars(spec: &BlockwiseIdealSpec, ord: &TermOrder) -> Result<bool> {
    Ok(criterion_disjoint_leading_vars_report(spec, ord)?.holds)
}

pub fn criterion_disjoint_leading_vars_report(spec: &BlockwiseIdealSpec, ord: &TermOrder) -> Result<CriterionReport> {
    check_kind(spec, ord.kind())?;
    let gens = spec.generators();
    let lts: Vec<Vec<Vec<Cell>>> = gens
        .iter()
        .map(|g| g.iter().map(|m| minor::leading_term_of_kind(m, ord.kind()).support()).collect())
        .collect();
    for (i, j) in (0..spec.len()).tuple_combinations() {
        for (x, sx) in lts[i].iter().enumerate() {
            if let Some(y) = lts[j].iter().position(|sy| sx.iter().any(|c| sy.contains(c))) {
                return Ok(CriterionReport::from_violation(Some(PairViolation {
                    block_i: i,
                    block_j: j,
                    minor_i: Some(gens[i][x].clone()),
                    minor_j: Some(gens[j][y].clone()),
                })));
            }
        }
    }
    Ok(CriterionReport::from_violation(None))
}

/// `g` has at least `r` full rows or full columns inside `b`.
pub fn attends_block(g: &Minor, b: &Block, r: usize) -> bool {
    full_rows_in(g, b) >= r || full_cols_in(g, b) >= r
}

/// For every ordered pair of generators from blocks `i != j` with
/// `r_j <= r_i`: the one from block `i` attends `B_j`, or the two leading
/// terms are coprime. Pairs of equal size are checked as well.
pub fn criterion_attend_or_lcm(spec: &BlockwiseIdealSpec, ord: &TermOrder) -> bool {
    criterion_attend_or_lcm_report(spec, ord).holds
}

pub fn criterion_attend_or_lcm_report(spec: &BlockwiseIdealSpec, ord: &TermOrder) -> CriterionReport {
    let gens = spec.generators();
    let lts: Vec<Vec<_>> = gens
        .iter()
        .map(|g| g.iter().map(|m| minor::leading_term(m, ord)).collect())
        .collect();
    for i in 0..spec.len() {
        for j in (0..spec.len()).filter(|&j| j != i && spec.sizes[j] <= spec.sizes[i]) {
            for (x, gi) in gens[i].iter().enumerate() {
                if attends_block(gi, &spec.blocks[j], spec.sizes[j]) {
                    continue;
                }
                if let Some(y) = lts[j].iter().position(|t| !t.is_coprime(&lts[i][x])) {
                    return CriterionReport::from_violation(Some(PairViolation {
                        block_i: i,
                        block_j: j,
                        minor_i: Some(gi.clone()),
                        minor_j: Some(gens[j][y].clone()),
                    }));
                }
            }
        }
    }
    CriterionReport::from_violation(None)
}

fn span(v: &[usize]) -> (usize, usize) {
    (v[0], v[v.len() - 1])
}

/// Row/column witness search for every pair of generators from different
/// blocks. Needs diagonal blocks of side at most [`ROWCOLUMN_MAX_SIDE`].
pub fn criterion_rowcolumn(spec: &BlockwiseIdealSpec) -> Result<bool> {
    Ok(criterion_rowcolumn_report(spec)?.holds)
}

pub fn criterion_rowcolumn_report(spec: &BlockwiseIdealSpec) -> Result<CriterionReport> {
    if let Some((m, n)) = spec.dims() {
        if m.max(n) > ROWCOLUMN_MAX_SIDE {
            return Err(Error::ScaleGuard {
                what: "matrix side for the row/column criterion",
                value: m.max(n),
                limit: ROWCOLUMN_MAX_SIDE,
            });
        }
    }
    check_kind(spec, OrderKind::Diagonal)?;
    let gens = spec.generators();
    for (i, j) in (0..spec.len()).tuple_combinations() {
        let (bi, bj) = (&spec.blocks[i], &spec.blocks[j]);
        let meet = bi.intersection(bj);
        let mut corner_memo: HashMap<(usize, usize), bool> = HashMap::new();
        let mut far_memo: HashMap<(usize, usize, usize, usize), bool> = HashMap::new();
        for gi in &gens[i] {
            let (ri0, ri1) = span(gi.rows());
            let (ci0, ci1) = span(gi.cols());
            for gj in &gens[j] {
                let (rj0, rj1) = span(gj.rows());
                let (cj0, cj1) = span(gj.cols());
                let (r0, c0) = (ri0.min(rj0), ci0.min(cj0));
                let near = *corner_memo
                    .entry((r0, c0))
                    .or_insert_with(|| meet.cells().iter().any(|x| x.row <= r0 && x.col <= c0));
                let far = near
                    && *far_memo
                        .entry((ri1, ci1, rj1, cj1))
                        .or_insert_with(|| far_witness(bi, (ri1, ci1), bj, (rj1, cj1)));
                if !far {
                    return Ok(CriterionReport::from_violation(Some(PairViolation {
                        block_i: i,
                        block_j: j,
                        minor_i: Some(gi.clone()),
                        minor_j: Some(gj.clone()),
                    })));
                }
            }
        }
    }
    Ok(CriterionReport::from_violation(None))
}

/// Cells `x_{ab}` of `bi` southeast of `si` and `x_{ãb̃}` of `bj` southeast
/// of `sj` that are not strictly comparable.
fn far_witness(bi: &Block, si: (usize, usize), bj: &Block, sj: (usize, usize)) -> bool {
    let se = |b: &Block, (r, c): (usize, usize)| -> Vec<Cell> {
        b.cells().iter().copied().filter(|x| x.row >= r && x.col >= c).collect()
    };
    let (xi, xj) = (se(bi, si), se(bj, sj));
    xi.iter().any(|p| {
        xj.iter()
            .any(|q| (p.row >= q.row && p.col <= q.col) || (p.row <= q.row && p.col >= q.col))
    })
}

/// Every generator `g` meets each block of a different size in fewer rows or
/// fewer columns than that block's size.
pub fn few_rows_in_other_blocks(spec: &BlockwiseIdealSpec, g: &[Minor]) -> bool {
    g.iter().all(|m| {
        spec.blocks.iter().zip(&spec.sizes).filter(|&(_, &r)| r != m.size()).all(|(b, &r)| {
            let cells: Vec<Cell> = m.grid().filter(|&c| b.contains(c)).collect();
            let rows = cells.iter().map(|c| c.row).unique().count();
            let cols = cells.iter().map(|c| c.col).unique().count();
            rows < r || cols < r
        })
    })
}

/// Ladder input: corner lists plus sizes, optional matrix shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderFile {
    pub lower: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub upper: Vec<(usize, usize)>,
    pub r: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl LadderFile {
    pub fn dims(&self) -> (usize, usize) {
        let m = self.m.unwrap_or_else(|| self.lower.iter().chain(&self.upper).map(|c| c.0).max().unwrap_or(0));
        let n = self.n.unwrap_or_else(|| self.lower.iter().chain(&self.upper).map(|c| c.1).max().unwrap_or(0));
        (m, n)
    }

    /// No upper corners, or only `(1,1)`.
    pub fn is_one_sided(&self) -> bool {
        self.upper.is_empty() || self.upper == [(1, 1)]
    }

    pub fn one_sided(&self) -> Result<OneSidedSpec> {
        if !self.is_one_sided() {
            return Err(Error::InvalidLadder("spec has upper corners other than (1,1)".into()));
        }
        let (m, n) = self.dims();
        OneSidedSpec::new(
            self.lower.iter().map(|c| c.0).collect(),
            self.lower.iter().map(|c| c.1).collect(),
            self.r.clone(),
            m,
            n,
        )
    }

    pub fn ladder(&self) -> Result<Ladder> {
        let (m, n) = self.dims();
        let upper = if self.upper.is_empty() { vec![(1, 1)] } else { self.upper.clone() };
        Ladder::new(m, n, self.lower.clone(), upper)
    }

    /// Blockwise reading: the rectangles for one-sided data, the ladder
    /// parts otherwise.
    pub fn blockwise(&self) -> Result<BlockwiseIdealSpec> {
        if self.is_one_sided() {
            Ok(self.one_sided()?.to_blockwise())
        } else {
            self.ladder()?.blockwise(&self.r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::Diagonality;
    use crate::oracle;
    use crate::order::Scan;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn fig3_left() -> Ladder {
        Ladder::new(
            9,
            9,
            vec![(1, 9), (2, 8), (5, 7), (6, 5), (8, 4), (9, 1)],
            vec![(1, 6), (3, 4), (4, 2), (6, 1)],
        )
        .unwrap()
    }

    fn fig3_right() -> Ladder {
        Ladder::one_sided(9, 9, vec![(1, 9), (2, 8), (5, 7), (6, 5), (8, 4), (9, 1)]).unwrap()
    }

    /// Minors of a union of northwest rectangles by inclusion-exclusion.
    fn count_by_rectangles(corners: &[(usize, usize)], r: usize) -> i64 {
        let mut total = 0i64;
        for k in 1..=corners.len() {
            for s in corners.iter().combinations(k) {
                let a = s.iter().map(|c| c.0).min().unwrap();
                let b = s.iter().map(|c| c.1).min().unwrap();
                let c = (binom(a, r) * binom(b, r)) as i64;
                total += if k % 2 == 1 { c } else { -c };
            }
        }
        total
    }

    #[test]
    fn rectangle_and_cell_counts() {
        for (p, q, r) in [(3, 4, 2), (5, 5, 3), (2, 6, 1), (4, 4, 5)] {
            let b = Block::northwest(6, 6, p, q);
            assert_eq!(block_minors(&b, r).len(), binom(p, r) * binom(q, r));
        }
        let single = Block::from_cells(4, 4, [Cell::new(2, 3)]).unwrap();
        assert_eq!(block_minors(&single, 1), vec![Minor::cell(Cell::new(2, 3))]);
        assert!(block_minors(&single, 2).is_empty());
    }

    #[test]
    fn one_sided_count_matches_inclusion_exclusion() {
        let l = fig3_right();
        for r in 1..=4 {
            let n = block_minors(&l.block(), r).len() as i64;
            assert_eq!(n, count_by_rectangles(&l.lower, r), "r = {r}");
        }
    }

    #[test]
    fn block_minors_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let b = Block::from_fn(5, 5, |_| rng.gen_bool(0.7));
            for r in 1..=3 {
                let brute: Vec<Minor> = (1..=5)
                    .combinations(r)
                    .flat_map(|rs| (1..=5).combinations(r).map(move |cs| Minor::new(rs.clone(), cs).unwrap()))
                    .filter(|m| m.inside(&b))
                    .collect();
                assert_eq!(block_minors(&b, r), brute);
            }
        }
    }

    #[test]
    fn ladders_are_diagonal_only() {
        assert_eq!(fig3_left().block().diagonality(), Diagonality::Diagonal);
        assert_eq!(fig3_right().block().diagonality(), Diagonality::Diagonal);
        for p in fig3_left().parts() {
            assert!(p.is_diagonal());
        }
    }

    #[test]
    fn corners_round_trip() {
        for l in [fig3_left(), fig3_right()] {
            assert_eq!(Ladder::from_block(&l.block()).unwrap(), l);
        }
        let l_shape = Block::from_cells(3, 3, [Cell::new(1, 1), Cell::new(1, 2), Cell::new(2, 1)]).unwrap();
        assert_eq!(Ladder::from_block(&l_shape).unwrap().lower, vec![(1, 2), (2, 1)]);
        let gap = Block::from_cells(3, 3, [Cell::new(1, 1), Cell::new(3, 3)]).unwrap();
        assert!(Ladder::from_block(&gap).is_err());
    }

    #[test]
    fn ladder_cells_follow_definition() {
        let l = fig3_left();
        let b = l.block();
        assert!(b.contains(Cell::new(1, 6)) && b.contains(Cell::new(1, 9)));
        assert!(!b.contains(Cell::new(1, 5)) && !b.contains(Cell::new(2, 9)));
        assert!(!b.contains(Cell::new(5, 1)) && b.contains(Cell::new(9, 1)));
        let union: Vec<Cell> = l.parts().iter().flat_map(|p| p.cells().to_vec()).unique().sorted().collect();
        assert_eq!(union, b.cells().to_vec());
    }

    #[test]
    fn bad_ladders() {
        assert!(Ladder::new(4, 4, vec![(2, 2), (1, 3)], vec![(1, 1)]).is_err());
        assert!(Ladder::new(4, 4, vec![(1, 2), (2, 3)], vec![(1, 1)]).is_err());
        assert!(Ladder::new(4, 4, vec![(2, 2)], vec![(3, 3)]).is_err());
        assert!(Ladder::new(4, 4, vec![(5, 2)], vec![(1, 1)]).is_err());
    }

    #[test]
    fn one_sided_validation() {
        let s = one_sided_ideal(&[3], &[4], &[2], 5, 5).unwrap();
        assert_eq!(s.generators()[0].len(), 3 * 6);
        assert!(matches!(one_sided_ideal(&[1], &[4], &[2], 5, 5), Err(Error::SizeStaircase(_))));
        assert!(one_sided_ideal(&[2], &[4], &[2], 5, 5).is_ok());
        assert!(matches!(one_sided_ideal(&[3, 2], &[4, 2], &[1, 1], 5, 5), Err(Error::CornerMonotonicity(_))));
        assert!(matches!(one_sided_ideal(&[2, 3], &[2, 4], &[1, 1], 5, 5), Err(Error::CornerMonotonicity(_))));
        assert!(matches!(one_sided_ideal(&[2, 3], &[4, 2], &[1, 2], 5, 5), Err(Error::SizeStaircase(_))));
        assert!(one_sided_ideal(&[2, 4], &[4, 2], &[1, 2], 5, 5).is_ok());
    }

    #[test]
    fn vexillary_small_cases() {
        let s = OneSidedSpec::new(vec![1], vec![1], vec![1], 1, 1).unwrap();
        assert_eq!(ladder_to_vexillary(&s, 2).unwrap(), "21".parse().unwrap());
        assert!(matches!(ladder_to_vexillary(&s, 1), Err(Error::Precondition(_))));
        let s = OneSidedSpec::new(vec![3], vec![3], vec![3], 3, 3).unwrap();
        assert_eq!(s.min_size(), 4);
        assert_eq!(ladder_to_vexillary(&s, 4).unwrap(), "1243".parse().unwrap());
        let found = vexillary_matches(&s, 6).unwrap();
        assert_eq!(found.len(), 1);
        let w = &found[0];
        let ess = permutation::essential_set(w);
        assert_eq!(ess.len(), 1);
        assert_eq!((ess[0].p, ess[0].q, ess[0].rank), (3, 3, 2));
        assert_eq!(vexillary_to_one_sided(w).unwrap().r, vec![3]);
        assert!(vexillary_to_one_sided(&"2143".parse().unwrap()).is_err());
    }

    fn brute_two_sided(l: &Ladder, r: &[usize]) -> Vec<Vec<Minor>> {
        let parts = l.parts();
        (0..parts.len())
            .map(|i| {
                (1..=l.m)
                    .combinations(r[i])
                    .flat_map(|rs| (1..=l.n).combinations(r[i]).map(move |cs| Minor::new(rs.clone(), cs).unwrap()))
                    .filter(|g| g.grid().all(|c| parts[i].contains(c)))
                    .filter(|g| {
                        (0..parts.len()).filter(|&j| j != i).all(|j| {
                            let whole_cols =
                                g.cols().iter().filter(|&&q| g.rows().iter().all(|&p| parts[j].contains(Cell::new(p, q))));
                            let whole_rows =
                                g.rows().iter().filter(|&&p| g.cols().iter().all(|&q| parts[j].contains(Cell::new(p, q))));
                            if j < i {
                                whole_cols.count() < r[j]
                            } else {
                                r[j] == r[i] || whole_rows.count() < r[j]
                            }
                        })
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn two_sided_small() {
        let l = Ladder::new(4, 4, vec![(2, 4), (4, 3)], vec![(1, 2), (2, 1)]).unwrap();
        for r in [[1, 1], [2, 1], [1, 2], [2, 2]] {
            let g = two_sided_generators(&l, &r).unwrap();
            assert_eq!(g, brute_two_sided(&l, &r));
        }
        let g = two_sided_generators(&l, &[1, 1]).unwrap();
        let all: Vec<Minor> = g.concat();
        assert_eq!(all.len(), l.block().len());
        assert!(two_sided_generators(&l, &[5, 1]).unwrap()[0].is_empty());
        assert!(two_sided_generators(&l, &[1]).is_err());
    }

    #[test]
    fn single_upper_corner_gives_all_minors() {
        let l = fig3_right();
        let g = two_sided_generators(&l, &[2]).unwrap();
        assert_eq!(g, vec![block_minors(&l.block(), 2)]);
    }

    #[test]
    fn two_sided_basis_on_a_fixed_ladder() {
        let l = Ladder::new(5, 5, vec![(2, 5), (4, 4), (5, 2)], vec![(1, 3), (2, 1)]).unwrap();
        let ord = TermOrder::square(Scan::Nwe, 5);
        for r in [[1, 1], [2, 1], [1, 2], [2, 2]] {
            let g: Vec<Polynomial> = two_sided_generators(&l, &r).unwrap().concat().iter().map(minor::expand_minor).collect();
            assert!(oracle::is_groebner(&g, &ord).unwrap(), "r = {r:?}");
            assert!(oracle::is_reduced_gb(&g, &ord), "r = {r:?}");
            for m in l.blockwise(&r).unwrap().all_generators() {
                assert!(oracle::normal_form(&minor::expand_minor(&m), &g, &ord).unwrap().is_zero());
            }
        }
    }

    fn rect(m: usize, r0: usize, r1: usize, c0: usize, c1: usize) -> Block {
        Block::from_fn(m, m, |c| (r0..=r1).contains(&c.row) && (c0..=c1).contains(&c.col))
    }

    #[test]
    fn disjointness_criteria() {
        let ord = TermOrder::square(Scan::Nwe, 5);
        let spec = BlockwiseIdealSpec::new(vec![rect(5, 1, 2, 1, 2), rect(5, 3, 5, 3, 5)], vec![1, 2]).unwrap();
        assert!(criterion_disjoint_blocks(&spec));
        assert!(criterion_disjoint_leading_vars(&spec, &ord).unwrap());
        let spec = BlockwiseIdealSpec::new(vec![rect(5, 1, 3, 1, 3), rect(5, 2, 4, 2, 4)], vec![1, 1]).unwrap();
        let rep = criterion_disjoint_blocks_report(&spec);
        assert!(!rep.holds);
        assert_eq!(rep.violation.unwrap().block_j, 1);
        assert!(!criterion_disjoint_leading_vars(&spec, &ord).unwrap());
        let nested = BlockwiseIdealSpec::new(vec![fig3_right().block(), fig3_left().block()], vec![2, 2]).unwrap();
        assert!(!criterion_disjoint_blocks(&nested));
    }

    #[test]
    fn shared_non_leading_cells() {
        // 2-minors of rows {1,2} x cols {2,3} lead with x12*x23; the single
        // cell block {x13} shares x13 with the non-leading term only
        let ord = TermOrder::square(Scan::Nwe, 3);
        let a = rect(3, 1, 2, 2, 3);
        let b = Block::from_cells(3, 3, [Cell::new(1, 3)]).unwrap();
        let spec = BlockwiseIdealSpec::new(vec![a, b], vec![2, 1]).unwrap();
        assert!(!criterion_disjoint_blocks(&spec));
        assert!(criterion_disjoint_leading_vars(&spec, &ord).unwrap());
        assert!(oracle::is_groebner(&spec.generator_polys(), &ord).unwrap());
    }

    #[test]
    fn kind_mismatch() {
        let anti = Block::from_fn(3, 3, |c| c.row <= c.col);
        let spec = BlockwiseIdealSpec::new(vec![anti], vec![1]).unwrap();
        assert!(matches!(
            criterion_disjoint_leading_vars(&spec, &TermOrder::square(Scan::Nwe, 3)),
            Err(Error::KindMismatch(_))
        ));
        assert!(criterion_disjoint_leading_vars(&spec, &TermOrder::square(Scan::New, 3)).is_ok());
    }

    #[test]
    fn attend_criterion() {
        let ord = TermOrder::square(Scan::Nwe, 4);
        // Fulton blocks of 2143
        let spec = BlockwiseIdealSpec::new(vec![Block::northwest(4, 4, 1, 1), Block::northwest(4, 4, 3, 3)], vec![1, 3]).unwrap();
        let rep = criterion_attend_or_lcm_report(&spec, &ord);
        assert!(!rep.holds);
        let v = rep.violation.unwrap();
        assert_eq!((v.block_i, v.block_j), (1, 0));
        assert!(!oracle::is_groebner(&spec.generator_polys(), &ord).unwrap());
        // every 2-minor of X_{33} has a full row or column in X_{13}
        let spec = BlockwiseIdealSpec::new(vec![Block::northwest(4, 4, 1, 3), Block::northwest(4, 4, 3, 3)], vec![1, 2]).unwrap();
        assert!(criterion_attend_or_lcm(&spec, &ord));
        let spec = BlockwiseIdealSpec::new(vec![rect(4, 1, 1, 1, 1), rect(4, 3, 4, 3, 4)], vec![1, 2]).unwrap();
        assert!(criterion_attend_or_lcm(&spec, &ord));
    }

    #[test]
    fn equal_sizes_need_the_lcm_clause() {
        let ord = TermOrder::square(Scan::Nwe, 3);
        let spec = BlockwiseIdealSpec::new(vec![rect(3, 1, 2, 1, 2), rect(3, 2, 3, 2, 3)], vec![2, 2]).unwrap();
        assert!(!criterion_attend_or_lcm(&spec, &ord));
        assert!(!oracle::is_groebner(&spec.generator_polys(), &ord).unwrap());
    }

    #[test]
    fn rowcolumn_criterion() {
        let single = BlockwiseIdealSpec::new(vec![Block::northwest(4, 4, 3, 3)], vec![2]).unwrap();
        assert!(criterion_rowcolumn(&single).unwrap());
        // two one-sided ladders with the upper corner (1,1) and incomparable
        // lower corners
        let l1 = Ladder::one_sided(6, 6, vec![(2, 6), (5, 3)]).unwrap().block();
        let l2 = Ladder::one_sided(6, 6, vec![(4, 4), (6, 1)]).unwrap().block();
        let spec = BlockwiseIdealSpec::new(vec![l1, l2], vec![2, 1]).unwrap();
        assert!(criterion_rowcolumn(&spec).unwrap());
        let ord = TermOrder::square(Scan::Nwe, 6);
        assert!(oracle::is_groebner(&spec.generator_polys(), &ord).unwrap());
        let apart = BlockwiseIdealSpec::new(vec![rect(4, 1, 2, 1, 2), rect(4, 3, 4, 3, 4)], vec![1, 1]).unwrap();
        assert!(!criterion_rowcolumn(&apart).unwrap());
        let big = BlockwiseIdealSpec::new(vec![Block::northwest(13, 13, 2, 2)], vec![1]).unwrap();
        assert!(matches!(criterion_rowcolumn(&big), Err(Error::ScaleGuard { .. })));
    }

    #[test]
    fn criteria_are_sound_on_random_specs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ord = TermOrder::square(Scan::Nwe, 6);
        let mut certified = 0;
        for _ in 0..120 {
            let k = rng.gen_range(2..=3);
            let mut blocks = Vec::new();
            let mut sizes = Vec::new();
            for _ in 0..k {
                let r0 = rng.gen_range(1..=6);
                let c0 = rng.gen_range(1..=6);
                let r1 = rng.gen_range(r0..=(r0 + 3).min(6));
                let c1 = rng.gen_range(c0..=(c0 + 3).min(6));
                let s = rng.gen_range(1..=3).min(r1 - r0 + 1).min(c1 - c0 + 1);
                blocks.push(rect(6, r0, r1, c0, c1));
                sizes.push(s);
            }
            let spec = BlockwiseIdealSpec::new(blocks, sizes).unwrap();
            let claims = [
                criterion_disjoint_blocks(&spec),
                criterion_disjoint_leading_vars(&spec, &ord).unwrap(),
                criterion_attend_or_lcm(&spec, &ord),
                criterion_rowcolumn(&spec).unwrap(),
            ];
            if claims.iter().any(|&c| c) {
                certified += 1;
                let g = spec.generator_polys();
                let gb = oracle::groebner_report_with_limits(&g, &ord, (400, 64)).unwrap();
                assert!(gb.is_groebner(), "{claims:?} {:?}", spec.sizes);
            }
        }
        assert!(certified > 20);
    }

    #[test]
    fn few_rows_condition_on_two_sided_output() {
        let l = Ladder::new(5, 5, vec![(2, 5), (4, 4), (5, 2)], vec![(1, 3), (2, 1)]).unwrap();
        let ord = TermOrder::square(Scan::Nwe, 5);
        for r in [[1, 2], [2, 1]] {
            let spec = l.blockwise(&r).unwrap();
            let g = two_sided_generators(&l, &r).unwrap().concat();
            if few_rows_in_other_blocks(&spec, &g) {
                let p: Vec<Polynomial> = g.iter().map(minor::expand_minor).collect();
                assert!(oracle::is_reduced_gb(&p, &ord));
            }
        }
    }

    #[test]
    fn ladder_file_json() {
        let f: LadderFile = serde_json::from_str(r#"{"lower":[[2,4],[4,3]],"upper":[[1,2],[2,1]],"r":[1,1]}"#).unwrap();
        assert_eq!(f.dims(), (4, 4));
        assert!(!f.is_one_sided());
        assert_eq!(f.blockwise().unwrap().len(), 2);
        let back: LadderFile = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
        let f: LadderFile = serde_json::from_str(r#"{"lower":[[3,3]],"r":[2],"m":5,"n":5}"#).unwrap();
        assert_eq!(f.one_sided().unwrap().to_blockwise().generators()[0].len(), 9);
    }
}
