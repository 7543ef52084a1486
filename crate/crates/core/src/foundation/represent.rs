//! Hyperplane representations over pastures and brute-force counts of them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::pasture::{FiniteField, PastureElement, PasturePresentation};
use crate::set::ElementSet;

use super::cross::Pencils;
use super::incidence::{Entry, IncidenceGraph};

/// Values `phi_H(e)`: one row per hyperplane in sorted order, one column
/// per element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFamily {
    pub rows: Vec<Vec<PastureElement>>,
}

impl RepresentationFamily {
    /// Multiplies row `H` by `a[H]` and column `e` by `t[e]`.
    pub fn rescale(&self, p: &PasturePresentation, a: &[PastureElement], t: &[PastureElement]) -> Result<Self> {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            for (e, x) in row.iter_mut().enumerate() {
                *x = p.mul(&p.mul(x, &a[i])?, &t[e])?;
            }
        }
        Ok(RepresentationFamily { rows })
    }
}

fn check_support(hyperplanes: &[ElementSet], n: usize, phi: &RepresentationFamily) -> Result<()> {
    if phi.rows.len() != hyperplanes.len() {
        return Err(Error::SupportMismatch { row: phi.rows.len(), col: 0 });
    }
    for (i, row) in phi.rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::SupportMismatch { row: i, col: row.len() });
        }
        for (e, x) in row.iter().enumerate() {
            if x.is_zero() != hyperplanes[i].contains(e) {
                return Err(Error::SupportMismatch { row: i, col: e });
            }
        }
    }
    Ok(())
}

/// Checks one modular triple at column `e`: with `c = -phi2(e1)/phi3(e1)`
/// and `a = -phi2(e3)/phi1(e3)`, the sum `a phi1(e) + phi2(e) + c phi3(e)`
/// must be null.
fn triple_holds_at(
    p: &PasturePresentation,
    rows: [&[PastureElement]; 3],
    e1: usize,
    e3: usize,
    e: usize,
) -> Result<bool> {
    let [r1, r2, r3] = rows;
    let c = p.neg(&p.mul(&r2[e1], &p.inv(&r3[e1])?)?)?;
    let a = p.neg(&p.mul(&r2[e3], &p.inv(&r1[e3])?)?)?;
    p.nullset_contains(&p.mul(&a, &r1[e])?, &r2[e], &p.mul(&c, &r3[e])?)
}

/// Whether `phi` is a `P`-representation of `M`: every modular triple of
/// distinct hyperplanes is linearly dependent.
pub fn is_representation(m: &Matroid, p: &PasturePresentation, phi: &RepresentationFamily) -> Result<bool> {
    let pencils = Pencils::new(m);
    check_support(&pencils.hyperplanes, m.n(), phi)?;
    for x in phi.rows.iter().flatten() {
        if !p.owns(x) {
            return Err(Error::ForeignElement);
        }
    }
    for ([h1, h2, h3], l) in pencils.triples(false) {
        let e1 = pencils.hyperplanes[h1].difference(l).min().unwrap();
        let e3 = pencils.hyperplanes[h3].difference(l).min().unwrap();
        let rows = [&phi.rows[h1][..], &phi.rows[h2][..], &phi.rows[h3][..]];
        for e in 0..m.n() {
            if !triple_holds_at(p, rows, e1, e3, e)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restricts a representation of `M` to the deletion `M \ A`. For each
/// hyperplane `H'` of the deletion the first hyperplane `H` of `M` with
/// `H - A = H'` is used, and the columns of `A` are dropped.
pub fn restrict_to_deletion(m: &Matroid, phi: &RepresentationFamily, a: ElementSet) -> Result<(Matroid, RepresentationFamily)> {
    let spec = crate::matroid::MinorSpec { contract: ElementSet::EMPTY, delete: a };
    let (minor, labels) = m.minor(&spec)?;
    let mut hyperplanes = m.hyperplanes();
    hyperplanes.sort();
    let mut small = minor.hyperplanes();
    small.sort();
    let mut rows = Vec::new();
    for h in &small {
        // `labels[i]` is the element of `M` that became element `i`.
        let lifted = ElementSet::from_elements(h.iter().map(|i| labels[i]));
        let idx = hyperplanes
            .iter()
            .position(|big| big.difference(a) == lifted)
            .ok_or_else(|| Error::Inconsistent(format!("no hyperplane of M restricts to {}", lifted.label())))?;
        rows.push(labels.iter().map(|&e| phi.rows[idx][e].clone()).collect());
    }
    Ok((minor, RepresentationFamily { rows }))
}

/// Counts the fillings of the free entries of the initial matrix by units
/// of `p` that give a representation, checking each triple condition as
/// soon as its entries are filled.
pub fn brute_force_count(m: &Matroid, p: &PasturePresentation) -> Result<u64> {
    if !p.group().is_finite() {
        return Err(Error::InfiniteTarget);
    }
    let units: Vec<PastureElement> = p.group().elements().into_iter().map(PastureElement::Unit).collect();
    let graph = IncidenceGraph::new(m);
    let a = graph.initial_matrix();
    let pencils = Pencils::new(m);
    let n = m.n();
    // (triple, anchors, column) checks, keyed by the last variable they read.
    let mut checks: Vec<Vec<([usize; 3], usize, usize, usize)>> = vec![Vec::new(); a.var_count()];
    let mut static_checks = Vec::new();
    for ([h1, h2, h3], l) in pencils.triples(false) {
        let e1 = pencils.hyperplanes[h1].difference(l).min().unwrap();
        let e3 = pencils.hyperplanes[h3].difference(l).min().unwrap();
        for e in 0..n {
            let last = [h1, h2, h3]
                .iter()
                .flat_map(|&h| [e1, e3, e].map(|c| a.entry(h, c)))
                .filter_map(|x| if let Entry::Var(v) = x { Some(v) } else { None })
                .max();
            match last {
                Some(v) => checks[v].push(([h1, h2, h3], e1, e3, e)),
                None => static_checks.push(([h1, h2, h3], e1, e3, e)),
            }
        }
    }
    let one = p.one();
    let mut rows: Vec<Vec<PastureElement>> = a
        .entries
        .iter()
        .map(|r| r.iter().map(|x| if *x == Entry::Zero { PastureElement::Zero } else { one.clone() }).collect())
        .collect();
    let holds = |rows: &Vec<Vec<PastureElement>>, c: &([usize; 3], usize, usize, usize)| -> bool {
        let ([h1, h2, h3], e1, e3, e) = *c;
        triple_holds_at(p, [&rows[h1], &rows[h2], &rows[h3]], e1, e3, e).expect("values lie in the pasture")
    };
    if !static_checks.iter().all(|c| holds(&rows, c)) {
        return Ok(0);
    }
    fn walk(
        k: usize,
        a: &super::incidence::InitialMatrix,
        units: &[PastureElement],
        checks: &[Vec<([usize; 3], usize, usize, usize)>],
        rows: &mut Vec<Vec<PastureElement>>,
        holds: &dyn Fn(&Vec<Vec<PastureElement>>, &([usize; 3], usize, usize, usize)) -> bool,
    ) -> u64 {
        if k == a.var_count() {
            return 1;
        }
        let (h, e) = a.vars[k];
        let mut total = 0;
        for u in units {
            rows[h][e] = u.clone();
            if checks[k].iter().all(|c| holds(rows, c)) {
                total += walk(k + 1, a, units, checks, rows, holds);
            }
        }
        total
    }
    Ok(walk(0, &a, &units, &checks, &mut rows, &holds))
}

/// Rank of a small matrix over `GF(q)`.
fn field_rank(f: &FiniteField, mut rows: Vec<Vec<usize>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = f.neg(f.mul(rows[r][c], inv));
                for j in 0..cols {
                    let t = f.mul(factor, rows[rank][j]);
                    rows[r][j] = f.add(rows[r][j], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Counts fillings of the initial matrix over `GF(q)` whose rows, for every
/// modular triple, span a space of dimension at most two. Partial fillings
/// are pruned when the filled columns of some triple already have rank 3.
pub fn field_brute_force_count(m: &Matroid, q: usize) -> Result<u64> {
    let f = FiniteField::new(q)?;
    let graph = IncidenceGraph::new(m);
    let a = graph.initial_matrix();
    let pencils = Pencils::new(m);
    let n = m.n();
    let triples: Vec<[usize; 3]> = pencils.triples(false).into_iter().map(|(t, _)| t).collect();
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); pencils.hyperplanes.len()];
    for (k, t) in triples.iter().enumerate() {
        for &h in t {
            by_row[h].push(k);
        }
    }
    // 0 marks an unfilled variable; filled entries are field units.
    let mut vals: Vec<Vec<usize>> =
        a.entries.iter().map(|r| r.iter().map(|x| if *x == Entry::One { 1 } else { 0 }).collect()).collect();
    let mut filled: Vec<Vec<bool>> = a.entries.iter().map(|r| r.iter().map(|x| *x != Entry::Var(usize::MAX) && !matches!(x, Entry::Var(_))).collect()).collect();
    let dependent = |vals: &Vec<Vec<usize>>, filled: &Vec<Vec<bool>>, t: &[usize; 3]| -> bool {
        let cols: Vec<usize> = (0..n).filter(|&e| t.iter().all(|&h| filled[h][e])).collect();
        let rows = t.iter().map(|&h| cols.iter().map(|&e| vals[h][e]).collect()).collect();
        field_rank(&f, rows) <= 2
    };
    if !triples.iter().all(|t| dependent(&vals, &filled, t)) {
        return Ok(0);
    }
    fn walk(
        k: usize,
        a: &super::incidence::InitialMatrix,
        q: usize,
        triples: &[[usize; 3]],
        by_row: &[Vec<usize>],
        vals: &mut Vec<Vec<usize>>,
        filled: &mut Vec<Vec<bool>>,
        dependent: &dyn Fn(&Vec<Vec<usize>>, &Vec<Vec<bool>>, &[usize; 3]) -> bool,
    ) -> u64 {
        if k == a.var_count() {
            return 1;
        }
        let (h, e) = a.vars[k];
        filled[h][e] = true;
        let mut total = 0;
        for u in 1..q {
            vals[h][e] = u;
            if by_row[h].iter().all(|&t| dependent(vals, filled, &triples[t])) {
                total += walk(k + 1, a, q, triples, by_row, vals, filled, dependent);
            }
        }
        vals[h][e] = 0;
        filled[h][e] = false;
        total
    }
    Ok(walk(0, &a, q, &triples, &by_row, &mut vals, &mut filled, &dependent))
}
