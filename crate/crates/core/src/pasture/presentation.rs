//! Pastures presented by generators and relations.
//!
//! The null set of a presentation is the closure of the listed three-term
//! relations under permutation and unit scaling, together with the trivial
//! relations `0` and `a - a`. A listed relation with exactly two nonzero terms
//! says that one term is the additive inverse of the other, so it is turned
//! into a multiplicative relation before the unit group is computed.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::group::{hermite_normal_form, quotient, Quotient, UnitGroup};

/// A term of an additive relation: zero or a signed monomial in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    Zero,
    Unit { negative: bool, exps: Vec<i64> },
}

impl Term {
    pub fn monomial(negative: bool, exps: Vec<i64>) -> Term {
        Term::Unit { negative, exps }
    }

    pub fn constant(m: usize, negative: bool) -> Term {
        Term::Unit { negative, exps: vec![0; m] }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Term::Zero)
    }
}

/// An element of a presented pasture, in canonical unit-group coordinates.
///
/// The sign is part of the unit: `-1` has its own coordinates, which are all
/// zero exactly when `-1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PastureElement {
    Zero,
    Unit(Vec<i64>),
}

impl PastureElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, PastureElement::Zero)
    }

    pub fn coords(&self) -> Option<&[i64]> {
        match self {
            PastureElement::Zero => None,
            PastureElement::Unit(c) => Some(c),
        }
    }
}

/// Unit group, coordinates of `-1` and one representative per orbit of
/// three-term relations. Two presentations over the same generators with the
/// same relation lattice and null set have equal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub group: UnitGroup,
    pub minus_one: Vec<i64>,
    /// Pairs `(u, v)` with `1 + u + v` in the null set, one per orbit, sorted.
    pub orbits: Vec<(Vec<i64>, Vec<i64>)>,
}

/// A pasture `<F1±(g_1, ..., g_m) | S>`.
#[derive(Clone, Debug)]
pub struct PasturePresentation {
    label: Option<String>,
    names: Vec<String>,
    /// Multiplicative relations as given, over `(g_1, ..., g_m, eps)`.
    mul: Vec<Vec<i64>>,
    /// Additive relations as given.
    add: Vec<[Term; 3]>,
    /// Relation lattice generators actually used: `mul`, `eps^2` and the
    /// two-term additive relations.
    lattice: Vec<Vec<i64>>,
    /// Three-term relations as signed monomials.
    triples: Vec<[(bool, Vec<i64>); 3]>,
    quotient: Quotient,
    orbit_keys: HashSet<(Vec<i64>, Vec<i64>)>,
    form: CanonicalForm,
}

fn sorted_pair(a: Vec<i64>, b: Vec<i64>) -> (Vec<i64>, Vec<i64>) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl PasturePresentation {
    /// Builds and canonicalizes a presentation. `mul` rows have length
    /// `m + 1`, the last entry being the exponent of `eps = -1`.
    pub fn new(names: Vec<String>, mul: Vec<Vec<i64>>, add: Vec<[Term; 3]>) -> Result<Self> {
        let m = names.len();
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty() || !seen.insert(n.as_str()) {
                return Err(Error::MalformedRelation(format!("bad or repeated generator name `{n}`")));
            }
        }
        for row in &mul {
            if row.len() != m + 1 {
                return Err(Error::MalformedRelation(format!("exponent vector of length {} for {m} generators", row.len())));
            }
        }
        let eps = |k: i64| {
            let mut v = vec![0; m + 1];
            v[m] = k;
            v
        };
        let mut lattice = mul.clone();
        lattice.push(eps(2));
        let mut triples = Vec::new();
        for rel in &add {
            for t in rel {
                if let Term::Unit { exps, .. } = t {
                    if exps.len() != m {
                        return Err(Error::MalformedRelation(format!("term of length {} for {m} generators", exps.len())));
                    }
                }
            }
            let units: Vec<(bool, Vec<i64>)> = rel
                .iter()
                .filter_map(|t| match t {
                    Term::Zero => None,
                    Term::Unit { negative, exps } => Some((*negative, exps.clone())),
                })
                .collect();
            match units.len() {
                0 => {}
                1 => return Err(Error::IllegalAdditiveRelation(format_relation(&names, rel))),
                2 => {
                    // a + b in N means b = -a, that is b / a * eps = 1.
                    let (na, a) = &units[0];
                    let (nb, b) = &units[1];
                    let mut row: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
                    row.push(*nb as i64 - *na as i64 + 1);
                    lattice.push(row);
                }
                _ => triples.push([units[0].clone(), units[1].clone(), units[2].clone()]),
            }
        }
        let quotient = quotient(m + 1, &lattice)?;
        let minus_one = quotient.images[m].clone();
        let mut p = PasturePresentation {
            label: None,
            names,
            mul,
            add,
            lattice,
            triples,
            quotient,
            orbit_keys: HashSet::new(),
            form: CanonicalForm { group: UnitGroup::trivial(), minus_one: vec![], orbits: vec![] },
        };
        let mut orbits: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for t in p.triples.clone() {
            let [a, b, c] = t.map(|(neg, exps)| p.unit_coords(neg, &exps));
            let g = &p.quotient.group;
            let d = |x: &Vec<i64>, y: &Vec<i64>| g.op(x, &g.inv(y));
            let keys = [sorted_pair(d(&b, &a), d(&c, &a)), sorted_pair(d(&a, &b), d(&c, &b)), sorted_pair(d(&a, &c), d(&b, &c))];
            orbits.push(keys.iter().min().unwrap().clone());
            p.orbit_keys.extend(keys);
        }
        orbits.sort();
        orbits.dedup();
        p.form = CanonicalForm { group: p.quotient.group.clone(), minus_one, orbits };
        p.verify_unique_inverses()?;
        Ok(p)
    }

    /// Like [`PasturePresentation::new`], after eliminating every generator
    /// that some multiplicative relation expresses through the others. The
    /// surviving generators keep their names.
    pub fn new_simplified(names: Vec<String>, mul: Vec<Vec<i64>>, add: Vec<[Term; 3]>) -> Result<Self> {
        let m = names.len();
        if let Some(row) = mul.iter().find(|r| r.len() != m + 1) {
            return Err(Error::MalformedRelation(format!("exponent vector of length {} for {m} generators", row.len())));
        }
        let sparse = |v: &[i64]| -> BTreeMap<usize, i64> { v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, *x)).collect() };
        let mut rows: Vec<BTreeMap<usize, i64>> = mul.iter().map(|r| sparse(r)).collect();
        let mut terms: Vec<Option<BTreeMap<usize, i64>>> = Vec::new();
        for rel in &add {
            for t in rel {
                terms.push(match t {
                    Term::Zero => None,
                    Term::Unit { negative, exps } => {
                        if exps.len() != m {
                            return Err(Error::MalformedRelation(format!("term of length {} for {m} generators", exps.len())));
                        }
                        let mut w = sparse(exps);
                        if *negative {
                            w.insert(m, 1);
                        }
                        Some(w)
                    }
                });
            }
        }
        // `target += k * by`, dropping zero entries.
        let axpy = |target: &mut BTreeMap<usize, i64>, k: i64, by: &BTreeMap<usize, i64>| {
            for (&i, &x) in by {
                let e = target.entry(i).or_insert(0);
                *e += k * x;
                if *e == 0 {
                    target.remove(&i);
                }
            }
        };
        let mut gone = vec![false; m];
        loop {
            // The sparsest row with a unit coefficient on some generator.
            let pick = rows
                .iter()
                .enumerate()
                .filter_map(|(r, row)| row.iter().find(|(&i, x)| i < m && x.abs() == 1).map(|(&i, _)| (row.len(), r, i)))
                .min();
            let Some((_, r, j)) = pick else { break };
            let pivot = rows.swap_remove(r);
            // g_j^c * rest = 1 gives g_j = rest^(-c) when c = +-1.
            let c = pivot[&j];
            let mut rest = pivot;
            rest.remove(&j);
            for w in rows.iter_mut().chain(terms.iter_mut().flatten()) {
                if let Some(x) = w.remove(&j) {
                    axpy(w, -c * x, &rest);
                }
            }
            gone[j] = true;
        }
        let keep: Vec<usize> = (0..m).filter(|&i| !gone[i]).collect();
        let dense = |w: &BTreeMap<usize, i64>| -> Vec<i64> { keep.iter().map(|i| w.get(i).copied().unwrap_or(0)).collect() };
        let mut seen = HashSet::new();
        let mut new_mul = Vec::new();
        for row in rows.iter().filter(|r| !r.is_empty()) {
            let mut v = dense(row);
            v.push(row.get(&m).copied().unwrap_or(0));
            if seen.insert(v.clone()) {
                new_mul.push(v);
            }
        }
        let new_add = terms
            .chunks(3)
            .map(|ch| {
                [0, 1, 2].map(|i| match &ch[i] {
                    None => Term::Zero,
                    Some(w) => Term::monomial(w.get(&m).copied().unwrap_or(0).rem_euclid(2) == 1, dense(w)),
                })
            })
            .collect();
        let new_names = keep.iter().map(|&i| names[i].clone()).collect();
        PasturePresentation::new(new_names, new_mul, new_add)
    }

    /// Parses the text format with `gens:`, `mul:` and `add:` lines.
    ///
    /// ```
    /// use matroid_tutte::pasture::PasturePresentation;
    /// let u = PasturePresentation::parse("gens: x y\nadd: x + y - 1").unwrap();
    /// assert_eq!(u.group().free_rank, 2);
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut mul_lines = Vec::new();
        let mut add_lines = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line.split_once(':').ok_or_else(|| Error::Parse(format!("missing `:` in `{line}`")))?;
            match key.trim() {
                "gens" => names.extend(rest.split_whitespace().map(str::to_string)),
                "mul" => mul_lines.push(rest.trim().to_string()),
                "add" => add_lines.push(rest.trim().to_string()),
                other => return Err(Error::Parse(format!("unknown section `{other}`"))),
            }
        }
        let mut mul = Vec::new();
        for l in &mul_lines {
            let (lhs, rhs) = l.split_once('=').ok_or_else(|| Error::Parse(format!("missing `=` in `{l}`")))?;
            let (nl, el) = parse_signed_monomial(lhs, &names)?;
            let (nr, er) = parse_signed_monomial(rhs, &names)?;
            let mut row: Vec<i64> = el.iter().zip(&er).map(|(a, b)| a - b).collect();
            row.push(nl as i64 - nr as i64);
            mul.push(row);
        }
        let mut add = Vec::new();
        for l in &add_lines {
            let terms = split_terms(l);
            if terms.is_empty() || terms.len() > 3 {
                return Err(Error::MalformedRelation(format!("`{l}` must have one to three terms")));
            }
            let mut rel = [Term::Zero, Term::Zero, Term::Zero];
            for (i, t) in terms.iter().enumerate() {
                if t.trim_start_matches(['+', '-']).trim() == "0" {
                    continue;
                }
                let (neg, exps) = parse_signed_monomial(t, &names)?;
                rel[i] = Term::monomial(neg, exps);
            }
            add.push(rel);
        }
        PasturePresentation::new(names, mul, add)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn multiplicative_relations(&self) -> &[Vec<i64>] {
        &self.mul
    }

    pub fn additive_relations(&self) -> &[[Term; 3]] {
        &self.add
    }

    /// Relation lattice rows including `eps^2` and the two-term relations.
    pub fn lattice_rows(&self) -> &[Vec<i64>] {
        &self.lattice
    }

    /// Three-term relations as signed monomials over the generators.
    pub fn triples(&self) -> &[[(bool, Vec<i64>); 3]] {
        &self.triples
    }

    pub fn group(&self) -> &UnitGroup {
        &self.quotient.group
    }

    pub fn canonical_form(&self) -> &CanonicalForm {
        &self.form
    }

    /// Whether the relations force `-1 = 1`.
    pub fn minus_one_is_one(&self) -> bool {
        self.group().is_identity(&self.form.minus_one)
    }

    fn unit_coords(&self, negative: bool, exps: &[i64]) -> Vec<i64> {
        let mut full = exps.to_vec();
        full.push(negative as i64);
        self.quotient.image(&full)
    }

    /// The element `±g^exps`.
    pub fn element(&self, negative: bool, exps: &[i64]) -> Result<PastureElement> {
        if exps.len() != self.names.len() {
            return Err(Error::ForeignElement);
        }
        Ok(PastureElement::Unit(self.unit_coords(negative, exps)))
    }

    /// Exponents over `(g_1, ..., g_m, eps)` of a word representing the unit `a`.
    pub fn word_of(&self, a: &PastureElement) -> Result<Vec<i64>> {
        self.check(a)?;
        match a {
            PastureElement::Zero => Err(Error::ForeignElement),
            PastureElement::Unit(c) => Ok(self.quotient.preimage(c)),
        }
    }

    /// Image of a word over `(g_1, ..., g_m, eps)`.
    pub fn eval_word(&self, word: &[i64]) -> PastureElement {
        PastureElement::Unit(self.quotient.image(word))
    }

    pub fn generator(&self, i: usize) -> PastureElement {
        PastureElement::Unit(self.quotient.images[i].clone())
    }

    pub fn generator_by_name(&self, name: &str) -> Result<PastureElement> {
        let i = self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(self.generator(i))
    }

    pub fn one(&self) -> PastureElement {
        PastureElement::Unit(self.group().identity())
    }

    pub fn minus_one(&self) -> PastureElement {
        PastureElement::Unit(self.form.minus_one.clone())
    }

    /// Whether `a` is a valid element of this pasture.
    pub fn owns(&self, a: &PastureElement) -> bool {
        match a {
            PastureElement::Zero => true,
            PastureElement::Unit(c) => self.group().contains(c),
        }
    }

    fn check(&self, a: &PastureElement) -> Result<()> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(Error::ForeignElement)
        }
    }

    pub fn mul(&self, a: &PastureElement, b: &PastureElement) -> Result<PastureElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (PastureElement::Unit(x), PastureElement::Unit(y)) => PastureElement::Unit(self.group().op(x, y)),
            _ => PastureElement::Zero,
        })
    }

    pub fn inv(&self, a: &PastureElement) -> Result<PastureElement> {
        self.check(a)?;
        match a {
            PastureElement::Zero => Err(Error::MalformedRelation("zero has no inverse".to_string())),
            PastureElement::Unit(x) => Ok(PastureElement::Unit(self.group().inv(x))),
        }
    }

    pub fn pow(&self, a: &PastureElement, k: i64) -> Result<PastureElement> {
        self.check(a)?;
        match a {
            PastureElement::Zero if k > 0 => Ok(PastureElement::Zero),
            PastureElement::Zero => Err(Error::MalformedRelation("zero has no inverse".to_string())),
            PastureElement::Unit(x) => Ok(PastureElement::Unit(self.group().pow(x, k))),
        }
    }

    pub fn neg(&self, a: &PastureElement) -> Result<PastureElement> {
        self.mul(a, &self.minus_one())
    }

    /// Membership of `a + b + c` in the null set.
    pub fn nullset_contains(&self, a: &PastureElement, b: &PastureElement, c: &PastureElement) -> Result<bool> {
        for x in [a, b, c] {
            self.check(x)?;
        }
        let units: Vec<&Vec<i64>> = [a, b, c].into_iter().filter_map(|x| match x {
            PastureElement::Zero => None,
            PastureElement::Unit(v) => Some(v),
        })
        .collect();
        let g = self.group();
        Ok(match units.len() {
            0 => true,
            1 => false,
            2 => *units[1] == g.op(units[0], &self.form.minus_one),
            _ => {
                let ia = g.inv(units[0]);
                self.orbit_keys.contains(&sorted_pair(g.op(units[1], &ia), g.op(units[2], &ia)))
            }
        })
    }

    /// Checks that every probed unit has exactly one additive inverse: all
    /// units when the group is small and finite, otherwise the generators,
    /// `1` and `-1`.
    fn verify_unique_inverses(&self) -> Result<()> {
        let g = self.group();
        let probes: Vec<Vec<i64>> = match g.order() {
            Some(n) if n <= 4096 => g.elements(),
            _ => {
                let mut v: Vec<Vec<i64>> = self.quotient.images.clone();
                v.push(g.identity());
                v
            }
        };
        let finite = g.order().is_some_and(|n| n <= 4096);
        let mut candidates: Vec<Vec<i64>> = if finite {
            g.elements()
        } else {
            probes.iter().flat_map(|p| [p.clone(), g.op(p, &self.form.minus_one)]).collect()
        };
        candidates.sort();
        candidates.dedup();
        for a in &probes {
            let ea = PastureElement::Unit(a.clone());
            let mut count = 0;
            for b in &candidates {
                if self.nullset_contains(&ea, &PastureElement::Unit(b.clone()), &PastureElement::Zero)? {
                    count += 1;
                }
            }
            if count != 1 {
                return Err(Error::Inconsistent(format!("element {a:?} has {count} additive inverses")));
            }
        }
        Ok(())
    }

    /// All pairs `(z, t)` of units with `z + t - 1` in the null set.
    pub fn fundamental_pairs(&self) -> Vec<(PastureElement, PastureElement)> {
        let g = self.group();
        let m1 = &self.form.minus_one;
        let mut out: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for (u, v) in &self.form.orbits {
            // 1 + u + v in N; each term in turn plays the role of -1.
            let terms = [g.identity(), u.clone(), v.clone()];
            for k in 0..3 {
                let others: Vec<&Vec<i64>> = (0..3).filter(|&i| i != k).map(|i| &terms[i]).collect();
                // Scale by s with s * terms[k] = -1.
                let s = g.op(m1, &g.inv(&terms[k]));
                let z = g.op(others[0], &s);
                let t = g.op(others[1], &s);
                out.push((z.clone(), t.clone()));
                out.push((t, z));
            }
        }
        out.sort();
        out.dedup();
        out.into_iter().map(|(z, t)| (PastureElement::Unit(z), PastureElement::Unit(t))).collect()
    }

    /// The distinct first components of [`Self::fundamental_pairs`].
    pub fn fundamental_elements(&self) -> Vec<PastureElement> {
        let mut v: Vec<PastureElement> = self.fundamental_pairs().into_iter().map(|(z, _)| z).collect();
        v.sort();
        v.dedup();
        v
    }

    /// The same generators with extra multiplicative and additive relations.
    pub fn with_relations(&self, mul: Vec<Vec<i64>>, add: Vec<[Term; 3]>) -> Result<Self> {
        let mut all_mul = self.mul.clone();
        all_mul.extend(mul);
        let mut all_add = self.add.clone();
        all_add.extend(add);
        PasturePresentation::new(self.names.clone(), all_mul, all_add)
    }

    /// Tensor product: generators side by side with the two signs identified.
    pub fn tensor(&self, other: &PasturePresentation) -> PasturePresentation {
        let (m, k) = (self.names.len(), other.names.len());
        let mut names = self.names.clone();
        for n in &other.names {
            let mut n2 = n.clone();
            while names.contains(&n2) {
                n2.push('\'');
            }
            names.push(n2);
        }
        let place = |exps: &[i64], offset: usize| {
            let mut v = vec![0; m + k];
            v[offset..offset + exps.len()].copy_from_slice(exps);
            v
        };
        let mut mul = Vec::new();
        for r in &self.mul {
            let mut v = place(&r[..m], 0);
            v.push(r[m]);
            mul.push(v);
        }
        for r in &other.mul {
            let mut v = place(&r[..k], m);
            v.push(r[k]);
            mul.push(v);
        }
        let lift = |rel: &[Term; 3], offset: usize| {
            rel.clone().map(|t| match t {
                Term::Zero => Term::Zero,
                Term::Unit { negative, exps } => Term::Unit { negative, exps: place(&exps, offset) },
            })
        };
        let mut add: Vec<[Term; 3]> = self.add.iter().map(|r| lift(r, 0)).collect();
        add.extend(other.add.iter().map(|r| lift(r, m)));
        let mut p = PasturePresentation::new(names, mul, add).expect("a tensor of valid presentations is valid");
        if let (Some(a), Some(b)) = (&self.label, &other.label) {
            p.label = Some(format!("{a} ⊗ {b}"));
        }
        p
    }

    /// The same generators with the relation lattice in Hermite normal form
    /// and one additive relation per orbit of the null set.
    pub fn canonical_presentation(&self) -> PasturePresentation {
        let m = self.names.len();
        let big: Vec<Vec<BigInt>> = self.lattice.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mul: Vec<Vec<i64>> = hermite_normal_form(&big, m + 1)
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("relation entries fit in i64")).collect())
            .collect();
        let term = |c: &Vec<i64>| {
            let w = self.quotient.preimage(c);
            Term::monomial(w[m].rem_euclid(2) == 1, w[..m].to_vec())
        };
        let add = self.form.orbits.iter().map(|(u, v)| [Term::constant(m, false), term(u), term(v)]).collect();
        let mut p = PasturePresentation::new(self.names.clone(), mul, add).expect("canonical data is consistent");
        p.label = self.label.clone();
        p
    }

    /// The text format accepted by [`Self::parse`].
    pub fn to_text(&self) -> String {
        let m = self.names.len();
        let mut s = format!("gens: {}\n", self.names.join(" "));
        for r in &self.mul {
            let lhs = monomial_text(&self.names, &r[..m]);
            let sign = if r[m].rem_euclid(2) == 1 { "-1" } else { "1" };
            s.push_str(&format!("mul: {lhs} = {sign}\n"));
        }
        for rel in &self.add {
            s.push_str(&format!("add: {}\n", format_relation(&self.names, rel)));
        }
        s
    }

    /// Human-readable element in canonical coordinates `c1, c2, ...`.
    pub fn format_element(&self, a: &PastureElement) -> String {
        match a {
            PastureElement::Zero => "0".to_string(),
            PastureElement::Unit(c) if self.group().is_identity(c) => "1".to_string(),
            PastureElement::Unit(c) if *c == self.form.minus_one => "-1".to_string(),
            PastureElement::Unit(c) => {
                let names: Vec<String> = (1..=c.len()).map(|i| format!("c{i}")).collect();
                monomial_text(&names, c)
            }
        }
    }
}

impl fmt::Display for PasturePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            writeln!(f, "# {l}")?;
        }
        write!(f, "{}", self.to_text())
    }
}

fn monomial_text(names: &[String], exps: &[i64]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e != 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn format_relation(names: &[String], rel: &[Term; 3]) -> String {
    let mut out = String::new();
    for t in rel {
        let (neg, body) = match t {
            Term::Zero => (false, "0".to_string()),
            Term::Unit { negative, exps } => (*negative, monomial_text(names, exps)),
        };
        if out.is_empty() {
            out = if neg { format!("-{body}") } else { body };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

/// Splits `x + y - 1` into `["x", "+y", "-1"]`, keeping `^-1` exponents intact.
fn split_terms(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut prev = ' ';
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        if (ch == '+' || ch == '-') && prev != '^' && !cur.is_empty() && cur != "-" && cur != "+" {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = ch;
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_signed_monomial(s: &str, names: &[String]) -> Result<(bool, Vec<i64>)> {
    let mut s = s.trim().replace(' ', "");
    let mut negative = false;
    while let Some(c) = s.chars().next().filter(|c| *c == '+' || *c == '-') {
        negative ^= c == '-';
        s.remove(0);
    }
    let mut exps = vec![0i64; names.len()];
    if s.is_empty() {
        return Err(Error::Parse("empty monomial".to_string()));
    }
    for factor in s.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        if base == "1" {
            continue;
        }
        let i = names.iter().position(|n| n == base).ok_or_else(|| Error::UnknownGenerator(base.to_string()))?;
        exps[i] += exp;
    }
    Ok((negative, exps))
}
