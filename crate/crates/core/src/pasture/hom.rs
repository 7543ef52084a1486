//! Morphisms between presented pastures.
//!
//! A morphism is fixed by the images of the generators. The images must
//! satisfy every multiplicative relation, with `eps` sent to `-1`, and send
//! every three-term relation into the null set of the target.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

use super::group::hermite_normal_form;
use super::named;
use super::presentation::{PastureElement, PasturePresentation};

/// Images of the generators of the source, in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PastureMorphism {
    pub images: Vec<Vec<i64>>,
}

impl PastureMorphism {
    /// The image of a word over `(g_1, ..., g_m, eps)`.
    pub fn apply_word(&self, target: &PasturePresentation, word: &[i64]) -> Vec<i64> {
        let g = target.group();
        let m = self.images.len();
        let m1 = target.canonical_form().minus_one.clone();
        let mut acc = g.pow(&m1, word[m]);
        for (x, &e) in self.images.iter().zip(word) {
            acc = g.op(&acc, &g.pow(x, e));
        }
        acc
    }

    /// The image of an element of the source.
    pub fn apply(&self, source: &PasturePresentation, target: &PasturePresentation, a: &PastureElement) -> Result<PastureElement> {
        if !source.owns(a) {
            return Err(Error::ForeignElement);
        }
        match a {
            PastureElement::Zero => Ok(PastureElement::Zero),
            unit => Ok(PastureElement::Unit(self.apply_word(target, &source.word_of(unit)?))),
        }
    }
}

fn signed_word(negative: bool, exps: &[i64]) -> Vec<i64> {
    let mut w = exps.to_vec();
    w.push(negative as i64);
    w
}

/// Whether `images` define a morphism `source -> target`. The target may be
/// infinite.
pub fn is_morphism(source: &PasturePresentation, target: &PasturePresentation, images: &[Vec<i64>]) -> bool {
    let g = target.group();
    if images.len() != source.generator_count() || images.iter().any(|x| !g.contains(x)) {
        return false;
    }
    let f = PastureMorphism { images: images.to_vec() };
    if !source.lattice_rows().iter().all(|r| g.is_identity(&f.apply_word(target, r))) {
        return false;
    }
    source.triples().iter().all(|t| {
        let [a, b, c] = t.clone().map(|(neg, e)| PastureElement::Unit(f.apply_word(target, &signed_word(neg, &e))));
        target.nullset_contains(&a, &b, &c).expect("images lie in the target")
    })
}

/// A relation in table form: each term is a sign exponent and a list of
/// (generator, exponent) pairs, exponents reduced modulo the target exponent.
type Term = (usize, Vec<(usize, usize)>);

/// Backtracking search over generator images. Target units are replaced by
/// indices and the group law by lookup tables. Generators are assigned in a
/// greedy order that closes relations as early as possible.
struct Search {
    n: usize,
    mul: Vec<usize>,
    pow: Vec<usize>,
    exp: usize,
    inv: Vec<usize>,
    minus: usize,
    identity: usize,
    /// `null[x * n + y]` holds when `x + y + 1` lies in the null set.
    null: Vec<bool>,
    order: Vec<usize>,
    /// Lattice rows closed at each step, as (own exponent, rest of the row).
    rows_at: Vec<Vec<(usize, Term)>>,
    triples_at: Vec<Vec<[Term; 3]>>,
    units: Vec<Vec<i64>>,
    images: Vec<usize>,
}

fn gens_of(t: &Term) -> impl Iterator<Item = usize> + '_ {
    t.1.iter().map(|&(i, _)| i)
}

impl Search {
    fn new(source: &PasturePresentation, target: &PasturePresentation) -> Result<Option<Self>> {
        if !target.group().is_finite() {
            return Err(Error::InfiniteTarget);
        }
        let m = source.generator_count();
        let g = target.group();
        let exp = g.exponent() as usize;
        let units = g.elements();
        let n = units.len();
        let index: HashMap<Vec<i64>, usize> = units.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = index[&g.op(&units[a], &units[b])];
            }
        }
        let identity = index[&g.identity()];
        let mut pow = vec![identity; n * exp];
        for a in 0..n {
            for e in 1..exp {
                pow[a * exp + e] = mul[pow[a * exp + e - 1] * n + a];
            }
        }
        let inv: Vec<usize> = (0..n).map(|a| pow[a * exp + exp - 1]).collect();
        let minus = index[&target.canonical_form().minus_one];
        let one = target.one();
        let mut null = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (PastureElement::Unit(units[x].clone()), PastureElement::Unit(units[y].clone()));
                null[x * n + y] = target.nullset_contains(&a, &b, &one)?;
            }
        }
        let reduce = |x: i64| x.rem_euclid(exp as i64) as usize;
        let term = |neg: bool, e: &[i64]| -> Term {
            let parts = (0..m).filter(|&i| reduce(e[i]) != 0).map(|i| (i, reduce(e[i]))).collect();
            (reduce(neg as i64), parts)
        };

        let big: Vec<Vec<BigInt>> =
            source.lattice_rows().iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut rows: Vec<Term> = Vec::new();
        for row in hermite_normal_form(&big, m + 1) {
            // Exponents only matter modulo the exponent of the target group.
            let r: Vec<i64> = row.iter().map(|x| (x % BigInt::from(exp)).to_i64().unwrap()).collect();
            let t = (reduce(r[m]), term(false, &r).1);
            if t.1.is_empty() {
                if pow[minus * exp + t.0] != identity {
                    return Ok(None);
                }
            } else {
                rows.push(t);
            }
        }
        let mut triples: Vec<[Term; 3]> = Vec::new();
        for t in source.triples() {
            let tt = t.clone().map(|(neg, e)| term(neg, &e));
            if tt.iter().all(|x| x.1.is_empty()) {
                let v = tt.clone().map(|x| pow[minus * exp + x.0]);
                if !null[mul[v[0] * n + inv[v[2]]] * n + mul[v[1] * n + inv[v[2]]]] {
                    return Ok(None);
                }
            } else {
                triples.push(tt);
            }
        }

        // Support of every relation, rows first.
        let supports: Vec<Vec<usize>> = rows
            .iter()
            .map(|r| gens_of(r).collect())
            .chain(triples.iter().map(|t| {
                let mut s: Vec<usize> = t.iter().flat_map(gens_of).collect();
                s.sort_unstable();
                s.dedup();
                s
            }))
            .collect();
        let order = greedy_order(m, &supports);
        let mut step = vec![0; m];
        for (k, &i) in order.iter().enumerate() {
            step[i] = k;
        }
        let last = |s: &[usize]| s.iter().map(|&i| step[i]).max().unwrap();
        let mut rows_at = vec![Vec::new(); m];
        for (r, s) in rows.into_iter().zip(&supports) {
            let k = last(s);
            let j = order[k];
            let own = r.1.iter().find(|&&(i, _)| i == j).unwrap().1;
            let rest = (r.0, r.1.into_iter().filter(|&(i, _)| i != j).collect());
            rows_at[k].push((own, rest));
        }
        let mut triples_at = vec![Vec::new(); m];
        let offset = supports.len() - triples.len();
        for (t, s) in triples.into_iter().zip(&supports[offset..]) {
            triples_at[last(s)].push(t);
        }
        Ok(Some(Search {
            n,
            mul,
            pow,
            exp,
            inv,
            minus,
            identity,
            null,
            order,
            rows_at,
            triples_at,
            units,
            images: vec![identity; m],
        }))
    }

    fn value(&self, t: &Term) -> usize {
        let mut acc = self.pow[self.minus * self.exp + t.0];
        for &(i, e) in &t.1 {
            acc = self.mul[acc * self.n + self.pow[self.images[i] * self.exp + e]];
        }
        acc
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<i64>]) -> bool) -> bool {
        if k == self.order.len() {
            let images: Vec<Vec<i64>> = self.images.iter().map(|&i| self.units[i].clone()).collect();
            return visit(&images);
        }
        let j = self.order[k];
        let rests: Vec<(usize, usize)> = self.rows_at[k].iter().map(|(own, rest)| (*own, self.value(rest))).collect();
        for x in 0..self.n {
            if !rests.iter().all(|&(own, v)| self.mul[self.pow[x * self.exp + own] * self.n + v] == self.identity) {
                continue;
            }
            self.images[j] = x;
            let ok = self.triples_at[k].iter().all(|t| {
                let [a, b, c] = [0, 1, 2].map(|i| self.value(&t[i]));
                let ci = self.inv[c];
                self.null[self.mul[a * self.n + ci] * self.n + self.mul[b * self.n + ci]]
            });
            if ok && !self.run(k + 1, visit) {
                return false;
            }
        }
        true
    }
}

/// Orders the generators so that each step closes as many relations as
/// possible. Ties go to the generator sharing the most relations with those
/// already placed, then to the one in the most relations overall.
fn greedy_order(m: usize, supports: &[Vec<usize>]) -> Vec<usize> {
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let total: Vec<usize> = (0..m).map(|j| supports.iter().filter(|s| s.contains(&j)).count()).collect();
    while order.len() < m {
        let score = |j: usize| {
            let mut closed = 0;
            let mut touching = 0;
            for s in supports.iter().filter(|s| s.contains(&j)) {
                let outside = s.iter().filter(|&&i| i != j && !placed[i]).count();
                closed += (outside == 0) as usize;
                touching += (outside < s.len() - 1) as usize;
            }
            (closed, touching, total[j], std::cmp::Reverse(j))
        };
        let j = (0..m).filter(|&j| !placed[j]).max_by_key(|&j| score(j)).unwrap();
        placed[j] = true;
        order.push(j);
    }
    order
}

/// Visits every morphism `source -> target` until `visit` returns false.
/// The target must have a finite unit group.
pub fn hom_for_each(
    source: &PasturePresentation,
    target: &PasturePresentation,
    visit: &mut dyn FnMut(&[Vec<i64>]) -> bool,
) -> Result<()> {
    if let Some(mut s) = Search::new(source, target)? {
        s.run(0, visit);
    }
    Ok(())
}

pub fn hom_count(source: &PasturePresentation, target: &PasturePresentation) -> Result<u64> {
    let mut n = 0u64;
    hom_for_each(source, target, &mut |_| {
        n += 1;
        true
    })?;
    Ok(n)
}

pub fn hom_enumerate(source: &PasturePresentation, target: &PasturePresentation) -> Result<Vec<PastureMorphism>> {
    let mut out = Vec::new();
    hom_for_each(source, target, &mut |x| {
        out.push(PastureMorphism { images: x.to_vec() });
        true
    })?;
    out.sort();
    Ok(out)
}

pub fn hom_exists(source: &PasturePresentation, target: &PasturePresentation) -> Result<bool> {
    let mut found = false;
    hom_for_each(source, target, &mut |_| {
        found = true;
        false
    })?;
    Ok(found)
}

/// Hom counts into the panel targets, in the order of [`named::PANEL`].
pub fn fingerprint(p: &PasturePresentation) -> Vec<u64> {
    named::panel().iter().map(|t| hom_count(p, t).expect("panel targets are finite")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::named::{by_name, FiniteField};

    fn count(s: &str, t: &str) -> u64 {
        hom_count(&by_name(s).unwrap(), &by_name(t).unwrap()).unwrap()
    }

    /// Pairs (x, y) of field units with x + y = 1.
    fn field_solutions(q: usize) -> u64 {
        let f = FiniteField::new(q).unwrap();
        let mut n = 0;
        for x in f.units() {
            for y in f.units() {
                n += (f.add(x, y) == 1) as u64;
            }
        }
        n
    }

    #[test]
    fn near_regular_into_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            assert_eq!(count("U", &format!("F{q}")), field_solutions(q), "F{q}");
        }
        assert_eq!(count("U", "F3"), 1);
        assert_eq!(count("U", "F4"), 2);
        assert_eq!(count("U", "F5"), 3);
        assert_eq!(count("U", "F8"), 6);
    }

    #[test]
    fn fields_into_fields() {
        assert_eq!(count("F2", "F3"), 0);
        assert_eq!(count("F3", "F2"), 0);
        assert_eq!(count("F2", "F4"), 1);
        assert_eq!(count("F2", "F8"), 1);
        assert_eq!(count("F3", "F9"), 1);
        // Field automorphisms: Frobenius.
        assert_eq!(count("F4", "F4"), 2);
        assert_eq!(count("F8", "F8"), 3);
        assert_eq!(count("F9", "F9"), 2);
        assert_eq!(count("F1±", "F5"), 1);
        assert_eq!(count("F1±", "K"), 1);
    }

    #[test]
    fn tensor_counts_multiply() {
        let u = by_name("U").unwrap();
        let uu = u.tensor(&u);
        assert_eq!(hom_count(&uu, &by_name("F5").unwrap()).unwrap(), 9);
        let d = by_name("D").unwrap();
        let h = by_name("H").unwrap();
        let dh = d.tensor(&h);
        for t in named::panel() {
            assert_eq!(hom_count(&dh, &t).unwrap(), hom_count(&d, &t).unwrap() * hom_count(&h, &t).unwrap());
        }
    }

    #[test]
    fn infinite_target() {
        assert_eq!(hom_count(&by_name("F2").unwrap(), &by_name("U").unwrap()), Err(Error::InfiniteTarget));
    }

    #[test]
    fn enumerated_maps_are_morphisms() {
        let (u, f7) = (by_name("U").unwrap(), by_name("F7").unwrap());
        let maps = hom_enumerate(&u, &f7).unwrap();
        assert_eq!(maps.len() as u64, field_solutions(7));
        for f in &maps {
            assert!(is_morphism(&u, &f7, &f.images));
        }
        // Brute force over all image pairs agrees.
        let units = f7.group().elements();
        let mut n = 0;
        for x in &units {
            for y in &units {
                n += is_morphism(&u, &f7, &[x.clone(), y.clone()]) as usize;
            }
        }
        assert_eq!(n, maps.len());
    }

    #[test]
    fn panel_fingerprints() {
        assert_eq!(fingerprint(&by_name("F2").unwrap()), vec![1, 0, 1, 0, 0, 1, 1, 0]);
        assert_eq!(fingerprint(&by_name("F3").unwrap()), vec![0, 1, 0, 0, 0, 0, 1, 0]);
        assert_eq!(fingerprint(&by_name("F1±").unwrap()), vec![1; 8]);
    }
}
