//! W-characteristic sets of reduced lexicographic Gröbner bases, normality
//! and the initial non-membership half of the strong-pair property.
//!
//! Only the necessary condition `ini(C_i)` not in `<G>` is checked. Computing
//! the saturation of the triangular set is out of reach here.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::term::{Cell, Term};

/// Polynomials with strictly increasing leading variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularSet {
    pub polys: Vec<Polynomial>,
    pub leading_vars: Vec<Cell>,
}

impl TriangularSet {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// Greatest variable occurring in `p`.
pub fn leading_variable(p: &Polynomial, ord: &TermOrder) -> Option<Cell> {
    p.variables().into_iter().max_by_key(|&c| ord.vars().rank(c))
}

/// Coefficient of the highest power of the leading variable, as a polynomial
/// in the remaining variables.
pub fn initial_of(p: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let Some(lv) = leading_variable(p, ord) else {
        return Ok(p.clone());
    };
    let power = |t: &Term| t.cells().iter().filter(|&&c| c == lv).count();
    let top = p.terms().map(|(t, _)| power(t)).max().unwrap_or(0);
    let lv_pow = Term::from_cells(vec![lv; top]);
    Ok(Polynomial::from_terms(
        p.terms()
            .filter(|(t, _)| power(t) == top)
            .map(|(t, c)| (t.div(&lv_pow).expect("contains the power"), c.clone())),
    ))
}

/// Lexicographic comparison of whole polynomials: term lists descending,
/// compared elementwise, a proper prefix being smaller.
pub fn poly_compare(a: &Polynomial, b: &Polynomial, ord: &TermOrder) -> Ordering {
    let ka: Vec<Vec<u32>> = a.sorted_desc(ord).into_iter().map(|(t, _)| ord.key(t)).collect();
    let kb: Vec<Vec<u32>> = b.sorted_desc(ord).into_iter().map(|(t, _)| ord.key(t)).collect();
    ka.cmp(&kb)
}

/// Picks, for each leading variable present in `g`, the lexicographically
/// smallest element, and lists them by increasing leading variable.
/// `g` must pass the reduced audit.
pub fn w_characteristic_set(g: &[Polynomial], ord: &TermOrder) -> Result<TriangularSet> {
    if let Some(v) = oracle::reduced_violation(g, ord) {
        return Err(Error::Precondition(format!("input is not a reduced basis: {v:?}")));
    }
    let mut best: BTreeMap<u32, &Polynomial> = BTreeMap::new();
    for p in g {
        let lv = leading_variable(p, ord).expect("nonzero after audit");
        let r = ord.vars().rank(lv);
        best.entry(r)
            .and_modify(|cur| {
                if poly_compare(p, cur, ord) == Ordering::Less {
                    *cur = p;
                }
            })
            .or_insert(p);
    }
    Ok(TriangularSet {
        leading_vars: best.keys().map(|&r| ord.vars().cell_of_rank(r)).collect(),
        polys: best.into_values().cloned().collect(),
    })
}

/// Pairs `(i, v)` where the initial of element `i` involves the leading
/// variable `v` of the set.
pub fn normality_violations(c: &TriangularSet, ord: &TermOrder) -> Result<Vec<(usize, Cell)>> {
    let mut out = Vec::new();
    for (i, p) in c.polys.iter().enumerate() {
        let vars = initial_of(p, ord)?.variables();
        for lv in &c.leading_vars {
            if vars.contains(lv) {
                out.push((i, *lv));
            }
        }
    }
    Ok(out)
}

/// No initial involves any leading variable of the set.
pub fn is_normal(c: &TriangularSet, ord: &TermOrder) -> Result<bool> {
    Ok(normality_violations(c, ord)?.is_empty())
}

/// Index of the first element whose initial lies in `<g>`, if any.
pub fn strong_pair_failure(g: &[Polynomial], c: &TriangularSet, ord: &TermOrder) -> Result<Option<usize>> {
    for (i, p) in c.polys.iter().enumerate() {
        let ini = initial_of(p, ord)?;
        if oracle::normal_form(&ini, g, ord)?.is_zero() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Every initial of the characteristic set has a nonzero normal form modulo
/// the reduced basis `g`.
pub fn strong_pair_partial_check(g: &[Polynomial], c: &TriangularSet, ord: &TermOrder) -> Result<bool> {
    Ok(strong_pair_failure(g, c, ord)?.is_none())
}
