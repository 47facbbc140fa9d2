//! Fulton generators, elusive minors and the removed-term construction of the
//! reduced Gröbner basis of a Schubert determinantal ideal.

use std::cmp::Ordering;
use std::collections::HashSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minor::{self, Minor};
use crate::order::{OrderKind, TermOrder};
use crate::permutation::{essential_set, is_vexillary, rank_nw, rothe_diagram, EssentialBox, Permutation};
use crate::poly::Polynomial;
use crate::term::Term;

/// A minor of size `rank + 1` drawn from the northwest rectangle of an
/// essential box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FultonGenerator {
    pub minor: Minor,
    pub ess: EssentialBox,
}

/// All `(rank+1)`-minors of `X_{pq}` for each essential box, ordered by box,
/// then rows, then columns. A minor drawn from two boxes appears twice.
pub fn fulton_generators(w: &Permutation) -> Vec<FultonGenerator> {
    let mut out = Vec::new();
    for b in essential_set(w) {
        let r = b.rank + 1;
        for rows in (1..=b.p).combinations(r) {
            for cols in (1..=b.q).combinations(r) {
                out.push(FultonGenerator {
                    minor: Minor::new(rows.clone(), cols).expect("valid combination"),
                    ess: b,
                });
            }
        }
    }
    out
}

/// Whether a generator of size `r_m` attends the rectangle of `b`: it meets
/// `X_{b.p, b.q}` in at least `b.rank + 1` full rows or full columns.
pub fn attends(m: &Minor, b: &EssentialBox, r_m: usize) -> bool {
    let rt = b.rank + 1;
    let rows_in = m.rows().iter().filter(|&&i| i <= b.p).count();
    let cols_in = m.cols().iter().filter(|&&j| j <= b.q).count();
    (rows_in >= rt && cols_in == r_m) || (rows_in == r_m && cols_in >= rt)
}

/// Fulton generators attending no essential rectangle of strictly smaller
/// rank. Repeated minors are kept once, with the first box they came from.
pub fn elusive_minors(w: &Permutation) -> Vec<FultonGenerator> {
    let ess = essential_set(w);
    let mut seen = HashSet::new();
    fulton_generators(w)
        .into_iter()
        .filter(|f| {
            let r = f.minor.size();
            ess.iter()
                .filter(|b| b.rank < f.ess.rank)
                .all(|b| !attends(&f.minor, b, r))
        })
        .filter(|f| seen.insert(f.minor.clone()))
        .collect()
}

/// `([p-r..p], [q-r..q])` with `r = rank_nw(w, p, q)`.
pub fn corner_minor(w: &Permutation, p: usize, q: usize) -> Result<Minor> {
    if !rothe_diagram(w).contains(&(p, q)) {
        return Err(Error::NotInDiagram { p, q });
    }
    let r = rank_nw(w, p, q)?;
    Minor::new((p - r..=p).collect(), (q - r..=q).collect())
}

fn larger_entry_is_smaller(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// The order `<_r`: degree, then rows, then columns, where at the first
/// differing position the larger index gives the smaller minor.
pub fn order_r_compare(a: &Minor, b: &Minor) -> Ordering {
    a.size()
        .cmp(&b.size())
        .then_with(|| larger_entry_is_smaller(a.rows(), b.rows()))
        .then_with(|| larger_entry_is_smaller(a.cols(), b.cols()))
}

fn check_strictly_inside(m1: &Minor, m2: &Minor) -> Result<()> {
    if !minor::contains(m1, m2) || m2.size() >= m1.size() {
        return Err(Error::NotContained {
            outer: m1.to_string(),
            inner: m2.to_string(),
        });
    }
    Ok(())
}

/// Terms of the product of `m2` and its complement in `m1`.
pub fn rterm(m1: &Minor, m2: &Minor) -> Result<HashSet<Term>> {
    check_strictly_inside(m1, m2)?;
    let comp = minor::complement(m1, m2)?;
    let a = minor::expand_minor(m2);
    let b = minor::expand_minor(&comp);
    Ok(a.terms()
        .flat_map(|(t, _)| b.terms().map(move |(u, _)| t.mul(u)))
        .collect())
}

/// Union of `rterm(m, x)` over `x` in `ms`.
pub fn rterm_set(m: &Minor, ms: &[Minor]) -> Result<HashSet<Term>> {
    let mut out = HashSet::new();
    for x in ms {
        out.extend(rterm(m, x)?);
    }
    Ok(out)
}

/// A term of an enclosing minor lies in `rterm(_, m2)` exactly when it sends
/// the rows of `m2` onto the columns of `m2`.
pub fn in_rterm(m2: &Minor, t: &Term) -> bool {
    let mut hit = 0;
    for c in t.cells() {
        if m2.rows().binary_search(&c.row).is_ok() {
            if m2.cols().binary_search(&c.col).is_err() {
                return false;
            }
            hit += 1;
        }
    }
    hit == m2.size()
}

/// Elusive minors strictly contained in `m`.
pub fn contained_elusive(m: &Minor, elusive: &[Minor]) -> Vec<Minor> {
    elusive
        .iter()
        .filter(|e| e.size() < m.size() && minor::contains(m, e))
        .cloned()
        .collect()
}

/// The expansion of `m` with every removed term of `e_m` deleted; surviving
/// coefficients are unchanged.
pub fn reduce_elusive(m: &Minor, e_m: &[Minor]) -> Result<Polynomial> {
    for e in e_m {
        check_strictly_inside(m, e)?;
    }
    let mut p = minor::expand_minor(m);
    if !e_m.is_empty() {
        p.retain(|t| !e_m.iter().any(|e| in_rterm(e, t)));
    }
    Ok(p)
}

/// One element of the reduced basis together with the elusive minor it came
/// from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedBasisElement {
    pub source: Minor,
    pub poly: Polynomial,
}

/// The reduced Gröbner basis of `I_w`, sorted by leading term descending.
///
/// Anti-diagonal orders work for every `w`. Diagonal orders are accepted only
/// for vexillary `w`, where the elusive minors are already reduced.
pub fn reduced_gb_schubert(w: &Permutation, ord: &TermOrder) -> Result<Vec<ReducedBasisElement>> {
    let n = w.len();
    let (rows, cols) = ord.dims();
    if rows < n || cols < n {
        return Err(Error::Precondition(format!(
            "term order is on a {rows}x{cols} matrix, permutation needs {n}x{n}"
        )));
    }
    let vex = is_vexillary(w);
    if ord.kind() == OrderKind::Diagonal && !vex {
        return Err(Error::Unsupported(format!(
            "{w} is not vexillary, so the elusive minors are not a Gröbner basis under a diagonal order; use an anti-diagonal order"
        )));
    }
    let elusive: Vec<Minor> = elusive_minors(w).into_iter().map(|f| f.minor).collect();
    let mut out: Vec<(Vec<u32>, ReducedBasisElement)> = elusive
        .par_iter()
        .map(|m| {
            let poly = if vex {
                minor::expand_minor(m)
            } else {
                reduce_elusive(m, &contained_elusive(m, &elusive))?
            };
            let key = ord.key(&minor::leading_term(m, ord));
            Ok((key, ReducedBasisElement { source: m.clone(), poly }))
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out.into_iter().map(|x| x.1).collect())
}

/// Just the polynomials of [`reduced_gb_schubert`].
pub fn reduced_gb_polys(w: &Permutation, ord: &TermOrder) -> Result<Vec<Polynomial>> {
    Ok(reduced_gb_schubert(w, ord)?.into_iter().map(|e| e.poly).collect())
}

/// Counts reported by the CLI.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertStats {
    pub essential: usize,
    pub fulton: usize,
    pub elusive: usize,
    pub removed_terms: usize,
}

pub fn stats(w: &Permutation) -> SchubertStats {
    let elusive: Vec<Minor> = elusive_minors(w).into_iter().map(|f| f.minor).collect();
    let removed = elusive
        .iter()
        .map(|m| {
            let e_m = contained_elusive(m, &elusive);
            let mut k = 0;
            if !e_m.is_empty() {
                minor::for_each_minor_term(m, |_, t| {
                    if e_m.iter().any(|e| in_rterm(e, &t)) {
                        k += 1;
                    }
                });
            }
            k
        })
        .sum();
    SchubertStats {
        essential: essential_set(w).len(),
        fulton: fulton_generators(w).len(),
        elusive: elusive.len(),
        removed_terms: removed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::expand_minor;
    use crate::order::Scan;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn mn(rows: &[usize], cols: &[usize]) -> Minor {
        Minor::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn minors(v: Vec<FultonGenerator>) -> Vec<Minor> {
        v.into_iter().map(|f| f.minor).collect()
    }

    #[test]
    fn fulton_2143() {
        let f = minors(fulton_generators(&perm("2143")));
        assert_eq!(f, vec![mn(&[1], &[1]), mn(&[1, 2, 3], &[1, 2, 3])]);
        assert_eq!(minors(elusive_minors(&perm("2143"))), f);
        assert!(fulton_generators(&Permutation::identity(4)).is_empty());
        assert!(elusive_minors(&Permutation::identity(4)).is_empty());
    }

    #[test]
    fn fulton_1453276_counts() {
        let f = fulton_generators(&perm("1453276"));
        assert_eq!(f.len(), 16);
        let degrees: Vec<usize> = f.iter().map(|g| g.minor.size()).dedup().collect();
        assert_eq!(degrees, vec![2, 6]);
        let e = minors(elusive_minors(&perm("1453276")));
        assert!(e.contains(&mn(&[3, 4], &[1, 2])));
        assert!(e.contains(&mn(&[1, 2, 3, 4, 5, 6], &[1, 2, 3, 4, 5, 6])));
    }

    #[test]
    fn attend_examples() {
        let b = EssentialBox { p: 2, q: 8, rank: 0 };
        assert!(attends(&mn(&[2, 3, 5], &[2, 4, 6]), &b, 3));
        assert!(!attends(&mn(&[3, 4, 5], &[3, 5, 6]), &b, 3));
        let big = EssentialBox { p: 9, q: 9, rank: 4 };
        assert!(!attends(&mn(&[2, 3, 5], &[2, 4, 6]), &big, 3));
    }

    #[test]
    fn elusive_count_91() {
        let w = Permutation::new(vec![1, 9, 4, 2, 7, 6, 3, 5, 10, 8]).unwrap();
        assert_eq!(elusive_minors(&w).len(), 91);
    }

    #[test]
    fn corner_minors() {
        assert_eq!(corner_minor(&perm("2143"), 1, 1).unwrap(), mn(&[1], &[1]));
        assert_eq!(corner_minor(&perm("2143"), 3, 3).unwrap(), mn(&[1, 2, 3], &[1, 2, 3]));
        let six: Vec<usize> = (1..=6).collect();
        assert_eq!(corner_minor(&perm("1453276"), 6, 6).unwrap(), mn(&six, &six));
        assert_eq!(corner_minor(&perm("2143"), 2, 2), Err(Error::NotInDiagram { p: 2, q: 2 }));
    }

    #[test]
    fn corner_minors_are_elusive_on_s5() {
        for w in Permutation::all(5) {
            let ess = essential_set(&w);
            for (p, q) in rothe_diagram(&w) {
                let m = corner_minor(&w, p, q).unwrap();
                let r = m.size() - 1;
                // elusive with respect to every essential box of smaller rank
                assert!(
                    ess.iter().filter(|b| b.rank < r).all(|b| !attends(&m, b, m.size())),
                    "{w} ({p},{q})"
                );
            }
        }
    }

    #[test]
    fn order_r_examples() {
        assert_eq!(order_r_compare(&mn(&[1], &[1]), &mn(&[1, 2, 3], &[1, 2, 3])), Ordering::Less);
        assert_eq!(order_r_compare(&mn(&[3, 4], &[1, 2]), &mn(&[2, 4], &[1, 2])), Ordering::Less);
        assert_eq!(order_r_compare(&mn(&[2, 4], &[1, 2]), &mn(&[3, 4], &[1, 2])), Ordering::Greater);
        assert_eq!(order_r_compare(&mn(&[2, 4], &[1, 3]), &mn(&[2, 4], &[1, 3])), Ordering::Equal);
        assert_eq!(order_r_compare(&mn(&[2, 4], &[1, 3]), &mn(&[2, 4], &[1, 2])), Ordering::Less);
    }

    #[test]
    fn rterm_examples() {
        let m1 = mn(&[1, 2, 3, 4], &[1, 2, 3, 4]);
        let m2 = mn(&[2, 3], &[1, 2]);
        let r = rterm(&m1, &m2).unwrap();
        let want: HashSet<Term> = [
            [(2, 1), (3, 2), (1, 3), (4, 4)],
            [(2, 1), (3, 2), (1, 4), (4, 3)],
            [(2, 2), (3, 1), (1, 3), (4, 4)],
            [(2, 2), (3, 1), (1, 4), (4, 3)],
        ]
        .iter()
        .map(|c| Term::from_pairs(c))
        .collect();
        assert_eq!(r, want);
        assert!(rterm(&m2, &m1).is_err());
        assert!(rterm(&m1, &m1).is_err());
        assert_eq!(rterm(&mn(&[1, 2], &[1, 2]), &mn(&[1], &[2])).unwrap().len(), 1);
        assert!(rterm_set(&m1, &[]).unwrap().is_empty());
        let cubic = mn(&[1, 2, 3], &[1, 2, 3]);
        let s = rterm_set(&cubic, &[mn(&[1], &[1])]).unwrap();
        let want: HashSet<Term> = [
            Term::from_pairs(&[(1, 1), (2, 2), (3, 3)]),
            Term::from_pairs(&[(1, 1), (2, 3), (3, 2)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(s, want);
    }

    #[test]
    fn rterm_sizes_and_predicate() {
        let m1 = mn(&[1, 2, 3, 4], &[1, 2, 4, 5]);
        for k in 1..4 {
            for rows in m1.rows().iter().copied().combinations(k) {
                for cols in m1.cols().iter().copied().combinations(k) {
                    let m2 = Minor::new(rows.clone(), cols).unwrap();
                    let r = rterm(&m1, &m2).unwrap();
                    let fact = |x: usize| (1..=x).product::<usize>();
                    assert_eq!(r.len(), fact(k) * fact(4 - k));
                    for (t, _) in expand_minor(&m1).terms() {
                        assert_eq!(r.contains(t), in_rterm(&m2, t));
                    }
                }
            }
        }
    }

    #[test]
    fn reduce_elusive_2143() {
        let cubic = mn(&[1, 2, 3], &[1, 2, 3]);
        let p = reduce_elusive(&cubic, &[mn(&[1], &[1])]).unwrap();
        let want: Polynomial =
            "-x[1,2]*x[2,1]*x[3,3] + x[1,2]*x[2,3]*x[3,1] + x[1,3]*x[2,1]*x[3,2] - x[1,3]*x[2,2]*x[3,1]"
                .parse()
                .unwrap();
        assert_eq!(p, want);
        assert_eq!(reduce_elusive(&cubic, &[]).unwrap(), expand_minor(&cubic));
        assert!(reduce_elusive(&mn(&[1], &[1]), &[cubic]).is_err());
    }

    #[test]
    fn reduced_basis_2143() {
        let w = perm("2143");
        let ord = TermOrder::square(Scan::New, 4);
        let g = reduced_gb_schubert(&w, &ord).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].source, mn(&[1, 2, 3], &[1, 2, 3]));
        assert_eq!(g[0].poly.len(), 4);
        assert_eq!(g[1].poly.to_text(&ord), "x[1,1]");
        assert!(matches!(
            reduced_gb_schubert(&w, &TermOrder::square(Scan::Nwe, 4)),
            Err(Error::Unsupported(_))
        ));
        assert!(reduced_gb_schubert(&Permutation::identity(3), &TermOrder::square(Scan::New, 3))
            .unwrap()
            .is_empty());
        assert!(reduced_gb_schubert(&w, &TermOrder::square(Scan::New, 3)).is_err());
    }

    #[test]
    fn vexillary_output_is_expanded_elusive() {
        let w = Permutation::new(vec![10, 9, 2, 3, 8, 6, 5, 7, 4, 1]).unwrap();
        let e = minors(elusive_minors(&w));
        for scan in [Scan::New, Scan::Sen] {
            let g = reduced_gb_schubert(&w, &TermOrder::square(scan, 10)).unwrap();
            assert_eq!(g.len(), e.len());
            for el in &g {
                assert_eq!(el.poly, expand_minor(&el.source));
            }
        }
    }

    #[test]
    fn elusive_sources_match_fulton_sources_on_s4() {
        for w in Permutation::all(4) {
            let fulton = minors(fulton_generators(&w));
            let elusive = minors(elusive_minors(&w));
            for m in &elusive {
                let f_m: Vec<Minor> = fulton
                    .iter()
                    .filter(|f| f.size() < m.size() && minor::contains(m, f))
                    .cloned()
                    .collect();
                let e_m = contained_elusive(m, &elusive);
                assert_eq!(rterm_set(m, &f_m).unwrap(), rterm_set(m, &e_m).unwrap(), "{w} {m}");
            }
        }
    }

    #[test]
    fn same_rows_or_cols_have_disjoint_rterms() {
        let m = mn(&[1, 2, 3, 4, 5], &[1, 2, 3, 4, 5]);
        for k in 1..=3 {
            let subs: Vec<Minor> = (1..=5)
                .combinations(k)
                .cartesian_product((1..=5).combinations(k))
                .map(|(r, c)| Minor::new(r, c).unwrap())
                .collect();
            for (a, b) in subs.iter().tuple_combinations() {
                if a.rows() == b.rows() || a.cols() == b.cols() {
                    let ra = rterm(&m, a).unwrap();
                    let rb = rterm(&m, b).unwrap();
                    assert!(ra.is_disjoint(&rb), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn stats_2143() {
        let s = stats(&perm("2143"));
        assert_eq!(
            s,
            SchubertStats {
                essential: 2,
                fulton: 2,
                elusive: 2,
                removed_terms: 2
            }
        );
    }
}
