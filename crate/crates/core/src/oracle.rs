//! Classical reduction machinery used to cross-check the combinatorial
//! constructions: division by unit-leading polynomials, normal forms,
//! S-polynomials, a Buchberger criterion check, minimal and reduced audits,
//! inter-reduction, and the generalized Laplace expansion.
//!
//! Internally each polynomial is re-keyed by [`TermOrder::key`], so the
//! leading term is the last map entry.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::minor::{self, Minor};
use crate::order::{TermKey, TermOrder};
use crate::poly::Polynomial;
use crate::term::Term;

/// Default limit on the number of polynomials handed to [`is_groebner`].
pub const DEFAULT_MAX_POLYS: usize = 128;
/// Default limit on the number of distinct variables.
pub const DEFAULT_MAX_VARS: usize = 64;

/// Active scale limits `(polys, vars)`. `DETGB_MAX_SCALE` may hold one number
/// for both or `polys,vars`.
pub fn scale_limits() -> (usize, usize) {
    let Ok(v) = std::env::var("DETGB_MAX_SCALE") else {
        return (DEFAULT_MAX_POLYS, DEFAULT_MAX_VARS);
    };
    let parts: Vec<Option<usize>> = v.split(',').map(|x| x.trim().parse().ok()).collect();
    match parts.as_slice() {
        [Some(a)] => (*a, *a),
        [Some(a), Some(b)] => (*a, *b),
        _ => (DEFAULT_MAX_POLYS, DEFAULT_MAX_VARS),
    }
}

fn check_scale(g: &[Polynomial], (max_polys, max_vars): (usize, usize)) -> Result<()> {
    if g.len() > max_polys {
        return Err(Error::ScaleGuard {
            what: "polynomials",
            value: g.len(),
            limit: max_polys,
        });
    }
    let vars = g.iter().flat_map(|p| p.variables()).unique().count();
    if vars > max_vars {
        return Err(Error::ScaleGuard {
            what: "variables",
            value: vars,
            limit: max_vars,
        });
    }
    Ok(())
}

// Keys are rank lists sorted descending.

fn key_divides(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] > x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn key_div(b: &[u32], a: &[u32]) -> TermKey {
    let mut out = Vec::with_capacity(b.len() - a.len());
    let mut j = 0;
    for &x in b {
        if j < a.len() && a[j] == x {
            j += 1;
        } else {
            out.push(x);
        }
    }
    out
}

fn key_mul(a: &[u32], b: &[u32]) -> TermKey {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn key_lcm(a: &[u32], b: &[u32]) -> TermKey {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn key_coprime(a: &[u32], b: &[u32]) -> bool {
    !a.iter().any(|x| b.contains(x))
}

/// A polynomial keyed for one fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct OPoly(BTreeMap<TermKey, BigInt>);

impl OPoly {
    fn new(p: &Polynomial, ord: &TermOrder) -> Self {
        OPoly(p.terms().map(|(t, c)| (ord.key(t), c.clone())).collect())
    }

    fn to_poly(&self, ord: &TermOrder) -> Polynomial {
        Polynomial::from_terms(self.0.iter().map(|(k, c)| (ord.term_from_key(k), c.clone())))
    }

    fn lead(&self) -> Option<(&TermKey, &BigInt)> {
        self.0.last_key_value()
    }

    fn add_term(&mut self, k: TermKey, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.0.entry(k) {
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

    /// `self -= factor * mono * g`, skipping g's leading term when `skip_lead`.
    fn sub_multiple(&mut self, factor: &BigInt, mono: &[u32], g: &OPoly, skip_lead: bool) {
        let n = if skip_lead { g.0.len() - 1 } else { g.0.len() };
        for (k, c) in g.0.iter().take(n) {
            self.add_term(key_mul(mono, k), -(factor * c));
        }
    }
}

fn unit_lead(g: &OPoly, ord: &TermOrder) -> Result<()> {
    match g.lead() {
        None => Err(Error::ZeroPolynomial),
        Some((_, c)) if c.abs().is_one() => Ok(()),
        Some((k, c)) => Err(Error::NonUnitLeadingCoefficient(format!(
            "{c} (leading term {})",
            ord.term_from_key(k)
        ))),
    }
}

/// One reduction step of `p` by `q` at the term `t`:
/// `p - (c_t / lc(q)) * (t / lt(q)) * q`.
pub fn reduce_once(p: &Polynomial, q: &Polynomial, t: &Term, ord: &TermOrder) -> Result<Polynomial> {
    let (lt_q, lc_q) = q.leading(ord).ok_or(Error::ZeroPolynomial)?;
    if !lc_q.abs().is_one() {
        return Err(Error::NonUnitLeadingCoefficient(lc_q.to_string()));
    }
    let c = p.coefficient(t).ok_or_else(|| Error::TermNotPresent(t.to_string()))?;
    let mono = t.div(&lt_q).ok_or_else(|| Error::NotDivisible(t.to_string()))?;
    let factor = c * &lc_q;
    Ok(p.sub(&q.mul_term(&mono).scale(&factor)))
}

fn nf_keyed(mut p: OPoly, g: &[OPoly], top_only: bool) -> OPoly {
    let mut rest = BTreeMap::new();
    while let Some((t, c)) = p.0.pop_last() {
        match g.iter().find(|gi| key_divides(gi.lead().unwrap().0, &t)) {
            Some(gi) => {
                let (lt, lc) = gi.lead().unwrap();
                let mono = key_div(&t, lt);
                let factor = &c * lc;
                p.sub_multiple(&factor, &mono, gi, true);
            }
            None => {
                rest.insert(t, c);
                if top_only {
                    break;
                }
            }
        }
    }
    rest.append(&mut p.0);
    OPoly(rest)
}

fn prepare(g: &[Polynomial], ord: &TermOrder) -> Result<Vec<OPoly>> {
    let keyed: Vec<OPoly> = g.iter().filter(|p| !p.is_zero()).map(|p| OPoly::new(p, ord)).collect();
    for k in &keyed {
        unit_lead(k, ord)?;
    }
    Ok(keyed)
}

/// Fully reduced normal form of `p` modulo `g`. Zero divisors are ignored.
pub fn normal_form(p: &Polynomial, g: &[Polynomial], ord: &TermOrder) -> Result<Polynomial> {
    let keyed = prepare(g, ord)?;
    Ok(nf_keyed(OPoly::new(p, ord), &keyed, false).to_poly(ord))
}

fn s_poly_keyed(f: &OPoly, g: &OPoly) -> OPoly {
    let (ltf, lcf) = f.lead().unwrap();
    let (ltg, lcg) = g.lead().unwrap();
    let l = key_lcm(ltf, ltg);
    // lcg * (l/ltf) * f - lcf * (l/ltg) * g
    let mut s = OPoly(BTreeMap::new());
    let mf = key_div(&l, ltf);
    let mg = key_div(&l, ltg);
    s.sub_multiple(&-lcg, &mf, f, false);
    s.sub_multiple(lcf, &mg, g, false);
    s
}

/// `lc(g) * (L / lt(f)) * f - lc(f) * (L / lt(g)) * g` with `L` the lcm of the
/// leading terms. Fraction-free, so it also works for non-unit coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(s_poly_keyed(&OPoly::new(f, ord), &OPoly::new(g, ord)).to_poly(ord))
}

/// Outcome of the S-pair check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerReport {
    pub pairs_total: usize,
    pub pairs_skipped_coprime: usize,
    /// First pair (by index) whose S-polynomial does not reduce to zero.
    pub failure: Option<(usize, usize)>,
}

impl GroebnerReport {
    pub fn is_groebner(&self) -> bool {
        self.failure.is_none()
    }
}

/// S-pair check with the product criterion. Every leading coefficient must be
/// a unit and the input must pass the scale guard.
pub fn groebner_report(g: &[Polynomial], ord: &TermOrder) -> Result<GroebnerReport> {
    groebner_report_with_limits(g, ord, scale_limits())
}

/// [`groebner_report`] with explicit `(polys, vars)` limits instead of the
/// environment.
pub fn groebner_report_with_limits(g: &[Polynomial], ord: &TermOrder, limits: (usize, usize)) -> Result<GroebnerReport> {
    check_scale(g, limits)?;
    let keyed = prepare(g, ord)?;
    let pairs: Vec<(usize, usize)> = (0..keyed.len()).tuple_combinations().collect();
    let coprime = |&(i, j): &(usize, usize)| key_coprime(keyed[i].lead().unwrap().0, keyed[j].lead().unwrap().0);
    let skipped = pairs.iter().filter(|p| coprime(p)).count();
    let failure = pairs.par_iter().filter(|p| !coprime(p)).find_first(|&&(i, j)| {
        let s = s_poly_keyed(&keyed[i], &keyed[j]);
        !nf_keyed(s, &keyed, true).0.is_empty()
    });
    Ok(GroebnerReport {
        pairs_total: pairs.len(),
        pairs_skipped_coprime: skipped,
        failure: failure.copied(),
    })
}

pub fn is_groebner(g: &[Polynomial], ord: &TermOrder) -> Result<bool> {
    Ok(groebner_report(g, ord)?.is_groebner())
}

/// A reason a set fails the minimal or reduced audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditViolation {
    ZeroElement(usize),
    NonUnitLeadingCoefficient(usize),
    /// `lt(g_divisor)` divides `term` of `g_target`.
    Divisible {
        target: usize,
        divisor: usize,
        term: Term,
    },
}

impl std::fmt::Display for AuditViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AuditViolation::ZeroElement(i) => write!(f, "element {} is zero", i + 1),
            AuditViolation::NonUnitLeadingCoefficient(i) => write!(f, "element {} has a non-unit leading coefficient", i + 1),
            AuditViolation::Divisible { target, divisor, term } => write!(
                f,
                "leading term of element {} divides the term {term} of element {}",
                divisor + 1,
                target + 1
            ),
        }
    }
}

fn audit(g: &[Polynomial], ord: &TermOrder, all_terms: bool) -> Option<AuditViolation> {
    let mut leads = Vec::with_capacity(g.len());
    for (i, p) in g.iter().enumerate() {
        match p.leading(ord) {
            None => return Some(AuditViolation::ZeroElement(i)),
            Some((t, c)) => {
                if !c.abs().is_one() {
                    return Some(AuditViolation::NonUnitLeadingCoefficient(i));
                }
                leads.push(t);
            }
        }
    }
    for (i, p) in g.iter().enumerate() {
        for (j, lt) in leads.iter().enumerate() {
            if i == j {
                continue;
            }
            let hit = if all_terms {
                p.terms().map(|(t, _)| t).find(|t| lt.divides(t)).cloned()
            } else {
                lt.divides(&leads[i]).then(|| leads[i].clone())
            };
            if let Some(term) = hit {
                return Some(AuditViolation::Divisible {
                    target: i,
                    divisor: j,
                    term,
                });
            }
        }
    }
    None
}

/// First violation of minimality: no leading term divides another's, and
/// leading coefficients are `+-1`. Gröbner-ness is the caller's concern.
pub fn minimal_violation(g: &[Polynomial], ord: &TermOrder) -> Option<AuditViolation> {
    audit(g, ord, false)
}

/// First violation of reducedness: no term of any element is divisible by
/// another element's leading term, and leading coefficients are `+-1`.
pub fn reduced_violation(g: &[Polynomial], ord: &TermOrder) -> Option<AuditViolation> {
    audit(g, ord, true)
}

pub fn is_minimal_gb(g: &[Polynomial], ord: &TermOrder) -> bool {
    minimal_violation(g, ord).is_none()
}

pub fn is_reduced_gb(g: &[Polynomial], ord: &TermOrder) -> bool {
    reduced_violation(g, ord).is_none()
}

/// Replaces each element by its normal form modulo the others. For a minimal
/// Gröbner basis this yields the reduced one. Output is sorted by leading term,
/// descending.
pub fn inter_reduce(g: &[Polynomial], ord: &TermOrder) -> Result<Vec<Polynomial>> {
    let keyed = prepare(g, ord)?;
    let mut out: Vec<OPoly> = (0..keyed.len())
        .into_par_iter()
        .map(|i| {
            let others: Vec<OPoly> = keyed
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            nf_keyed(keyed[i].clone(), &others, false)
        })
        .collect();
    out.retain(|p| !p.0.is_empty());
    out.sort_by(|a, b| b.lead().unwrap().0.cmp(a.lead().unwrap().0));
    Ok(out.into_iter().map(|p| p.to_poly(ord)).collect())
}

/// One summand of a Laplace expansion: `sign * det(sub) * det(complement)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplaceSummand {
    pub sign: i32,
    pub sub: Minor,
    pub complement: Option<Minor>,
}

/// Expansion of `m` along the given rows. The sign exponent is the sum of the
/// positions (1-based, within `m`) of the chosen rows and columns.
pub fn laplace_expand(m: &Minor, rows: &[usize]) -> Result<Vec<LaplaceSummand>> {
    if rows.is_empty() || !rows.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidMinor(format!("row subset {rows:?} must be nonempty and increasing")));
    }
    let row_pos: Vec<usize> = rows
        .iter()
        .map(|r| {
            m.rows()
                .binary_search(r)
                .map(|p| p + 1)
                .map_err(|_| Error::InvalidMinor(format!("row {r} not in {m}")))
        })
        .collect::<Result<_>>()?;
    let row_sum: usize = row_pos.iter().sum();
    let k = rows.len();
    let mut out = Vec::new();
    for col_pos in (0..m.size()).combinations(k) {
        let cols: Vec<usize> = col_pos.iter().map(|&p| m.cols()[p]).collect();
        let col_sum: usize = col_pos.iter().map(|p| p + 1).sum();
        let sub = Minor::new(rows.to_vec(), cols)?;
        let comp = if k == m.size() {
            None
        } else {
            Some(minor::complement(m, &sub)?)
        };
        out.push(LaplaceSummand {
            sign: if (row_sum + col_sum).is_multiple_of(2) { 1 } else { -1 },
            sub,
            complement: comp,
        });
    }
    Ok(out)
}

/// Sum of the Laplace summands, expanded.
pub fn laplace_sum(summands: &[LaplaceSummand]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for s in summands {
        let mut p = minor::expand_minor(&s.sub);
        if let Some(c) = &s.complement {
            p = p.mul(&minor::expand_minor(c));
        }
        acc = acc.add(&p.scale(&BigInt::from(s.sign)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::expand_minor;
    use crate::order::Scan;

    fn mn(rows: &[usize], cols: &[usize]) -> Minor {
        Minor::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn key_helpers() {
        assert!(key_divides(&[5, 2], &[7, 5, 3, 2]));
        assert!(!key_divides(&[5, 5], &[7, 5, 3]));
        assert_eq!(key_div(&[7, 5, 3, 2], &[5, 2]), vec![7, 3]);
        assert_eq!(key_mul(&[7, 3], &[5, 3]), vec![7, 5, 3, 3]);
        assert_eq!(key_lcm(&[7, 3], &[5, 3]), vec![7, 5, 3]);
        assert!(key_coprime(&[7, 3], &[5, 2]));
    }

    #[test]
    fn reduce_once_examples() {
        let ord = TermOrder::square(Scan::New, 4);
        let t = Term::from_pairs(&[(1, 1), (2, 2)]);
        let r = reduce_once(&Polynomial::monomial(1, t.clone()), &p("x[1,1]"), &t, &ord).unwrap();
        assert!(r.is_zero());
        assert!(reduce_once(&p("x[1,2]"), &p("x[1,1]"), &Term::from_pairs(&[(1, 2)]), &ord).is_err());
        assert_eq!(
            reduce_once(&p("x[1,2]"), &p("2*x[1,2]"), &Term::from_pairs(&[(1, 2)]), &ord),
            Err(Error::NonUnitLeadingCoefficient("2".into()))
        );
        // 4-minor reduced by a contained 2-minor at one of its terms
        let m1 = expand_minor(&mn(&[1, 2, 3, 4], &[1, 2, 3, 4]));
        let m2 = expand_minor(&mn(&[2, 3], &[1, 2]));
        let t = Term::from_pairs(&[(1, 3), (2, 2), (3, 1), (4, 4)]);
        let r = reduce_once(&m1, &m2, &t, &ord).unwrap();
        assert_eq!(r.len(), m1.len() - 2);
        assert!(!r.contains_term(&t));
        assert!(!r.contains_term(&Term::from_pairs(&[(1, 3), (2, 1), (3, 2), (4, 4)])));
    }

    #[test]
    fn reduce_once_decreases_reduced_term() {
        let ord = TermOrder::square(Scan::New, 4);
        let m1 = expand_minor(&mn(&[1, 2, 3], &[1, 2, 3]));
        let m2 = expand_minor(&mn(&[1, 2], &[1, 2]));
        let lt2 = m2.leading_term(&ord).unwrap();
        for (t, _) in m1.terms() {
            if lt2.divides(t) {
                let r = reduce_once(&m1, &m2, t, &ord).unwrap();
                assert!(!r.contains_term(t));
                for (u, _) in r.terms() {
                    if !m1.contains_term(u) {
                        assert_eq!(ord.term_compare(u, t), std::cmp::Ordering::Less);
                    }
                }
            }
        }
    }

    #[test]
    fn normal_form_2143_cubic() {
        let ord = TermOrder::square(Scan::New, 4);
        let cubic = expand_minor(&mn(&[1, 2, 3], &[1, 2, 3]));
        let nf = normal_form(&cubic, &[p("x[1,1]")], &ord).unwrap();
        let want = p("-x[1,2]*x[2,1]*x[3,3] + x[1,2]*x[2,3]*x[3,1] + x[1,3]*x[2,1]*x[3,2] - x[1,3]*x[2,2]*x[3,1]");
        assert_eq!(nf, want);
        assert_eq!(normal_form(&want, &[p("x[1,1]")], &ord).unwrap(), want);
        assert!(normal_form(&cubic, std::slice::from_ref(&cubic), &ord).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_basics() {
        let ord = TermOrder::square(Scan::New, 3);
        let f = expand_minor(&mn(&[1, 2], &[1, 2]));
        assert!(s_polynomial(&f, &f, &ord).unwrap().is_zero());
        let g = expand_minor(&mn(&[1, 2], &[2, 3]));
        // definition-level recomputation
        let (ltf, lcf) = f.leading(&ord).unwrap();
        let (ltg, lcg) = g.leading(&ord).unwrap();
        let l = ltf.lcm(&ltg);
        let want = f
            .mul_term(&l.div(&ltf).unwrap())
            .scale(&lcg)
            .sub(&g.mul_term(&l.div(&ltg).unwrap()).scale(&lcf));
        assert_eq!(s_polynomial(&f, &g, &ord).unwrap(), want);
        // coprime leading terms reduce to zero
        let h = expand_minor(&mn(&[3], &[3]));
        let s = s_polynomial(&f, &h, &ord).unwrap();
        assert!(normal_form(&s, &[f, h], &ord).unwrap().is_zero());
    }

    #[test]
    fn groebner_examples() {
        let fulton = vec![p("x[1,1]"), expand_minor(&mn(&[1, 2, 3], &[1, 2, 3]))];
        assert!(is_groebner(&fulton, &TermOrder::square(Scan::New, 4)).unwrap());
        assert!(!is_groebner(&fulton, &TermOrder::square(Scan::Nwe, 4)).unwrap());
        assert!(is_groebner(&fulton[1..], &TermOrder::square(Scan::Nwe, 4)).unwrap());
        let all2: Vec<Polynomial> = (1..=3)
            .combinations(2)
            .cartesian_product((1..=3).combinations(2))
            .map(|(r, c)| expand_minor(&Minor::new(r, c).unwrap()))
            .collect();
        assert!(is_groebner(&all2, &TermOrder::square(Scan::Swe, 3)).unwrap());
    }

    #[test]
    fn minimal_and_reduced_audits() {
        let ord = TermOrder::square(Scan::New, 4);
        let elusive = vec![p("x[1,1]"), expand_minor(&mn(&[1, 2, 3], &[1, 2, 3]))];
        assert!(is_minimal_gb(&elusive, &ord));
        assert!(!is_reduced_gb(&elusive, &ord));
        assert!(matches!(
            reduced_violation(&elusive, &ord),
            Some(AuditViolation::Divisible { target: 1, divisor: 0, .. })
        ));
        let red = inter_reduce(&elusive, &ord).unwrap();
        assert!(is_reduced_gb(&red, &ord));
        assert_eq!(inter_reduce(&red, &ord).unwrap(), red);
        let mut rev = elusive.clone();
        rev.reverse();
        assert_eq!(inter_reduce(&rev, &ord).unwrap(), red);
        assert_eq!(
            minimal_violation(&[p("2*x[1,1]")], &ord),
            Some(AuditViolation::NonUnitLeadingCoefficient(0))
        );
    }

    #[test]
    fn scale_guard_trips() {
        let ord = TermOrder::square(Scan::New, 20);
        let many: Vec<Polynomial> = (1..=20)
            .cartesian_product(1..=20)
            .map(|(i, j)| Polynomial::monomial(1, Term::from_pairs(&[(i, j)])))
            .collect();
        assert!(matches!(is_groebner(&many, &ord), Err(Error::ScaleGuard { .. })));
    }

    #[test]
    fn laplace_small_cases() {
        let m = mn(&[1, 2], &[3, 5]);
        let full = laplace_expand(&m, &[1, 2]).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].sign, 1);
        let split = laplace_expand(&m, &[1]).unwrap();
        assert_eq!(split.len(), 2);
        assert_eq!(laplace_sum(&split), expand_minor(&m));
        let big = mn(&[1, 2, 3, 4], &[1, 2, 3, 4]);
        let s = laplace_expand(&big, &[2, 3]).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(laplace_sum(&s), expand_minor(&big));
        assert!(laplace_expand(&big, &[5]).is_err());
    }

    #[test]
    fn laplace_identity_exhaustive_5x5() {
        for r in 1..=4 {
            for rows in (1..=5).combinations(r) {
                for cols in (1..=5).combinations(r).step_by(2) {
                    let m = Minor::new(rows.clone(), cols).unwrap();
                    let e = expand_minor(&m);
                    for k in 1..=r {
                        for sub in rows.iter().copied().combinations(k) {
                            assert_eq!(laplace_sum(&laplace_expand(&m, &sub).unwrap()), e, "{m} {sub:?}");
                        }
                    }
                }
            }
        }
    }
}
