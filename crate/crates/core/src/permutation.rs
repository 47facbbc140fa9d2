//! Permutations in one-line notation, Rothe diagrams and essential sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[1..n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    w: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(w: Vec<usize>) -> Result<Self> {
        Permutation::new(w)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.w
    }
}

/// A box of the essential set together with the rank of the permutation
/// matrix restricted to its northwest rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EssentialBox {
    pub p: usize,
    pub q: usize,
    pub rank: usize,
}

impl fmt::Display for EssentialBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) rank {}", self.p, self.q, self.rank)
    }
}

impl Permutation {
    pub fn new(w: Vec<usize>) -> Result<Self> {
        let n = w.len();
        let mut seen = vec![false; n + 1];
        for &v in &w {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { w })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { w: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.w
    }

    /// `w(i)`, 1-based.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.w[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.w.len()];
        for (i, &v) in self.w.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { w: inv }
    }

    pub fn inversions(&self) -> usize {
        let w = &self.w;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// All permutations of `[1..n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (1..=n)
            .permutations(n)
            .map(|w| Permutation { w })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.len() <= 9 {
            for v in &self.w {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "[")?;
            for (k, v) in self.w.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `2143` (single digits), `[10,9,2,...]`, `10,9,2` and
    /// whitespace-separated values.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(t);
        let has_sep = inner.contains(',') || inner.split_whitespace().count() > 1;
        let values: Vec<usize> = if has_sep {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry '{x}'"))))
                .collect::<Result<_>>()?
        } else {
            if inner.is_empty() {
                return Ok(Permutation { w: Vec::new() });
            }
            inner
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation digit '{c}'")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

/// Boxes `(i, j)` with `j < w(i)` and `w^{-1}(j) > i`, sorted by `(i, j)`.
pub fn rothe_diagram(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.len();
    let inv = w.inverse();
    let mut d = Vec::new();
    for i in 1..=n {
        for j in 1..w.at(i) {
            if inv.at(j) > i {
                d.push((i, j));
            }
        }
    }
    d
}

fn in_diagram(w: &Permutation, inv: &Permutation, i: usize, j: usize) -> bool {
    i >= 1 && j >= 1 && i <= w.len() && j <= w.len() && j < w.at(i) && inv.at(j) > i
}

/// `#{ i <= p : w(i) <= q }`.
pub fn rank_nw(w: &Permutation, p: usize, q: usize) -> Result<usize> {
    let n = w.len();
    if p == 0 || q == 0 || p > n || q > n {
        return Err(Error::OutOfRange {
            row: p,
            col: q,
            rows: n,
            cols: n,
        });
    }
    Ok(w.w[..p].iter().filter(|&&v| v <= q).count())
}

/// Diagram boxes with no diagram box directly east or south, sorted by
/// `(p, q)`.
pub fn essential_set(w: &Permutation) -> Vec<EssentialBox> {
    let inv = w.inverse();
    rothe_diagram(w)
        .into_iter()
        .filter(|&(p, q)| !in_diagram(w, &inv, p, q + 1) && !in_diagram(w, &inv, p + 1, q))
        .map(|(p, q)| EssentialBox {
            p,
            q,
            rank: w.w[..p].iter().filter(|&&v| v <= q).count(),
        })
        .collect()
}

/// 2143 pattern scan: `i<j<k<l` with `w_j < w_i < w_l < w_k`.
pub fn contains_2143(w: &Permutation) -> bool {
    let v = &w.w;
    let n = v.len();
    // fix j < k, then look for i < j and l > k
    for j in 1..n {
        for k in j + 1..n {
            if v[k] < v[j] {
                continue;
            }
            // need i < j with v[j] < v[i], and l > k with v[i] < v[l] < v[k]
            for i in 0..j {
                if v[i] <= v[j] || v[i] >= v[k] {
                    continue;
                }
                if v[k + 1..].iter().any(|&x| v[i] < x && x < v[k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// No two essential boxes with `p < p'` and `q < q'`.
pub fn vexillary_by_essential_set(w: &Permutation) -> bool {
    let ess = essential_set(w);
    !ess.iter()
        .any(|a| ess.iter().any(|b| a.p < b.p && a.q < b.q))
}

/// 2143-avoidance. Debug builds also run the essential-set test and require
/// agreement.
pub fn is_vexillary(w: &Permutation) -> bool {
    let by_pattern = !contains_2143(w);
    debug_assert_eq!(by_pattern, vexillary_by_essential_set(w), "vexillary tests disagree on {w}");
    by_pattern
}
