//! Sparse polynomials with exact integer coefficients.
//!
//! Text format: terms joined by ` + ` / ` - `, each term an optional integer
//! coefficient followed by `x[i,j]` factors joined by `*`, for example
//! `-x[1,2]*x[2,1]*x[3,3] + 2*x[1,1]`. The zero polynomial prints as `0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::TermOrder;
use crate::term::{Cell, Term};

/// Map from canonical terms to nonzero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Term, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Term::one())
    }

    pub fn monomial(c: impl Into<BigInt>, t: Term) -> Self {
        let mut p = Self::zero();
        p.add_term(t, c.into());
        p
    }

    /// Sums the given terms; repeated terms are combined.
    pub fn from_terms<I: IntoIterator<Item = (Term, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (t, c) in it {
            p.add_term(t, c);
        }
        p
    }

    /// Terms known to be pairwise distinct and nonzero.
    pub(crate) fn from_distinct_terms(v: Vec<(Term, BigInt)>) -> Self {
        let terms: BTreeMap<Term, BigInt> = v.into_iter().collect();
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Term, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Term, BigInt> {
        self.terms
    }

    pub fn coefficient(&self, t: &Term) -> Option<&BigInt> {
        self.terms.get(t)
    }

    pub fn contains_term(&self, t: &Term) -> bool {
        self.terms.contains_key(t)
    }

    pub fn add_term(&mut self, t: Term, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (t, c) in &other.terms {
            p.add_term(t.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (t, c) in &other.terms {
            p.add_term(t.clone(), -c);
        }
        p
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    pub fn mul_term(&self, u: &Term) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(u), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (t, c) in &self.terms {
            for (u, d) in &other.terms {
                p.add_term(t.mul(u), c * d);
            }
        }
        p
    }

    /// Drops every term in `remove`, keeping the other coefficients.
    pub fn without_terms(&self, remove: &std::collections::HashSet<Term>) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| !remove.contains(*t))
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Term) -> bool) {
        self.terms.retain(|t, _| keep(t));
    }

    /// Distinct variables occurring in the polynomial.
    pub fn variables(&self) -> BTreeSet<Cell> {
        self.terms.keys().flat_map(|t| t.cells().iter().copied()).collect()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(Term::degree).max().unwrap_or(0)
    }

    /// Leading term and coefficient, `None` for zero.
    pub fn leading(&self, ord: &TermOrder) -> Option<(Term, BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.term_compare(a.0, b.0))
            .map(|(t, c)| (t.clone(), c.clone()))
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Result<Term> {
        self.leading(ord).map(|x| x.0).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coefficient(&self, ord: &TermOrder) -> Result<BigInt> {
        self.leading(ord).map(|x| x.1).ok_or(Error::ZeroPolynomial)
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_desc(&self, ord: &TermOrder) -> Vec<(&Term, &BigInt)> {
        let mut v: Vec<(Vec<u32>, (&Term, &BigInt))> = self.terms.iter().map(|x| (ord.key(x.0), x)).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v.into_iter().map(|x| x.1).collect()
    }

    /// Canonical text with terms descending under `ord`.
    pub fn to_text(&self, ord: &TermOrder) -> String {
        format_terms(self.sorted_desc(ord))
    }

    /// Parses the text format.
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

fn format_terms<'a>(terms: impl IntoIterator<Item = (&'a Term, &'a BigInt)>) -> String {
    let mut out = String::new();
    for (k, (t, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if t.is_one() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push('*');
            }
            out.push_str(&t.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().rev()))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src == "0" {
            return Ok(Polynomial::zero());
        }
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split at top-level signs; signs inside brackets do not occur
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in src.chars().enumerate() {
            if ch == '+' || ch == '-' {
                if k > 0 {
                    if cur.is_empty() {
                        return Err(Error::Parse(format!("dangling sign in '{s}'")));
                    }
                    chunks.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in '{s}'")));
        }
        chunks.push((neg, cur));
        let mut p = Polynomial::zero();
        for (neg, body) in chunks {
            let (c, t) = parse_term(&body)?;
            p.add_term(t, if neg { -c } else { c });
        }
        Ok(p)
    }
}

fn parse_term(body: &str) -> Result<(BigInt, Term)> {
    let mut coeff = BigInt::one();
    let mut cells = Vec::new();
    for (k, factor) in body.split('*').enumerate() {
        if let Some(idx) = factor.strip_prefix("x[").and_then(|r| r.strip_suffix(']')) {
            let (i, j) = idx
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad variable '{factor}'")))?;
            let i: usize = i.parse().map_err(|_| Error::Parse(format!("bad row in '{factor}'")))?;
            let j: usize = j.parse().map_err(|_| Error::Parse(format!("bad column in '{factor}'")))?;
            if i == 0 || j == 0 {
                return Err(Error::Parse(format!("indices are 1-based in '{factor}'")));
            }
            cells.push(Cell::new(i, j));
        } else if k == 0 {
            coeff = factor
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient '{factor}'")))?;
        } else {
            return Err(Error::Parse(format!("bad factor '{factor}'")));
        }
    }
    Ok((coeff, Term::from_cells(cells)))
}

/// JSON coefficient: a number when it fits in `i64`, else a decimal string.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonCoeff {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    c: JsonCoeff,
    t: Term,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<JsonTerm> = self
            .terms
            .iter()
            .rev()
            .map(|(t, c)| JsonTerm {
                c: c.to_i64().map_or_else(|| JsonCoeff::Big(c.to_string()), JsonCoeff::Small),
                t: t.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<JsonTerm>::deserialize(d)?;
        let mut p = Polynomial::zero();
        for jt in v {
            let c = match jt.c {
                JsonCoeff::Small(x) => BigInt::from(x),
                JsonCoeff::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom)?,
            };
            p.add_term(jt.t, c);
        }
        Ok(p)
    }
}
