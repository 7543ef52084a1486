//! Multiplicative relations from modular triples and additive relations
//! from modular quadruples, written in the variables of the initial matrix.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::pasture::{PasturePresentation, Term};
use crate::set::ElementSet;

use super::cross::Pencils;
use super::incidence::{Entry, InitialMatrix};

/// `x[H1,a2] x[H2,a3] x[H3,a1] / (x[H1,a3] x[H2,a1] x[H3,a2]) = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRelation {
    pub hyperplanes: [usize; 3],
    pub elements: [usize; 3],
}

/// `x[H1,a3] x[H2,a4] / (x[H1,a4] x[H2,a3]) + x[H1,a2] x[H3,a4] / (x[H1,a4] x[H3,a2]) - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleRelation {
    pub hyperplanes: [usize; 4],
    pub elements: [usize; 4],
}

/// Both kinds of relation, for every choice of elements `a_i` in `H_i - L`.
/// With `paranoid` set, every ordering of the hyperplanes is included;
/// otherwise only the sorted one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSet {
    pub triples: Vec<TripleRelation>,
    pub quadruples: Vec<QuadrupleRelation>,
}

fn choices(hyperplanes: &[ElementSet], idx: &[usize], l: ElementSet) -> Vec<Vec<usize>> {
    let pools: Vec<Vec<usize>> = idx.iter().map(|&i| hyperplanes[i].difference(l).to_vec()).collect();
    let mut out = vec![vec![]];
    for pool in pools {
        out = out.into_iter().flat_map(|pre| pool.iter().map(move |&e| [pre.clone(), vec![e]].concat())).collect();
    }
    out
}

pub fn generate_relations(pencils: &Pencils, paranoid: bool) -> RelationSet {
    let hs = &pencils.hyperplanes;
    let mut set = RelationSet::default();
    for (t, l) in pencils.triples(paranoid) {
        for e in choices(hs, &t, l) {
            set.triples.push(TripleRelation { hyperplanes: t, elements: [e[0], e[1], e[2]] });
        }
    }
    for (q, l) in pencils.quadruples(paranoid) {
        for e in choices(hs, &q, l) {
            set.quadruples.push(QuadrupleRelation { hyperplanes: q, elements: [e[0], e[1], e[2], e[3]] });
        }
    }
    set
}

/// Exponent vector of a signed product of matrix entries, with a trailing
/// zero for the sign generator.
pub(crate) fn entry_word(a: &InitialMatrix, factors: &[(usize, usize, i64)]) -> Vec<i64> {
    let mut w = vec![0; a.var_count() + 1];
    for &(h, e, k) in factors {
        match a.entry(h, e) {
            Entry::Var(v) => w[v] += k,
            Entry::One => {}
            Entry::Zero => panic!("entry ({h}, {e}) is zero"),
        }
    }
    w
}

impl TripleRelation {
    pub fn word(&self, a: &InitialMatrix) -> Vec<i64> {
        let [h1, h2, h3] = self.hyperplanes;
        let [a1, a2, a3] = self.elements;
        entry_word(a, &[(h1, a2, 1), (h2, a3, 1), (h3, a1, 1), (h1, a3, -1), (h2, a1, -1), (h3, a2, -1)])
    }
}

impl QuadrupleRelation {
    pub fn words(&self, a: &InitialMatrix) -> [Vec<i64>; 2] {
        let [h1, h2, h3, _] = self.hyperplanes;
        let [_, a2, a3, a4] = self.elements;
        [
            entry_word(a, &[(h1, a3, 1), (h2, a4, 1), (h1, a4, -1), (h2, a3, -1)]),
            entry_word(a, &[(h1, a2, 1), (h3, a4, 1), (h1, a4, -1), (h3, a2, -1)]),
        ]
    }
}

/// The presentation on the free variables with relations `rels`.
pub fn incidence_presentation(a: &InitialMatrix, rels: &RelationSet) -> Result<PasturePresentation> {
    let m = a.var_count();
    let mul = rels
        .triples
        .iter()
        .map(|t| {
            let mut w = t.word(a);
            // word = -1, that is word * eps = 1.
            w[m] = 1;
            w
        })
        .collect();
    let add = rels
        .quadruples
        .iter()
        .map(|q| {
            let [u, v] = q.words(a);
            [Term::monomial(false, u[..m].to_vec()), Term::monomial(false, v[..m].to_vec()), Term::constant(m, true)]
        })
        .collect();
    PasturePresentation::new(a.var_names(), mul, add)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::incidence::initial_matrix;
    use crate::matroid::catalog;

    #[test]
    fn counts() {
        let u24 = Pencils::new(&catalog::uniform(2, 4));
        let r = generate_relations(&u24, false);
        assert_eq!((r.triples.len(), r.quadruples.len()), (4, 1));
        let u23 = Pencils::new(&catalog::uniform(2, 3));
        assert_eq!(generate_relations(&u23, false).triples.len(), 1);
        // Fano lines have two points off each hyperplane: 2^3 choices per triple.
        let f7 = Pencils::new(&catalog::fano());
        assert_eq!(generate_relations(&f7, false).triples.len(), 7 * 8);
        let f7 = Pencils::new(&catalog::fano());
        assert!(generate_relations(&f7, true).quadruples.is_empty());
        // Paranoid mode on U2,4: 24 orderings of each triple, 24 of the quadruple.
        let p = generate_relations(&u24, true);
        assert_eq!((p.triples.len(), p.quadruples.len()), (24, 24));
    }

    /// The incidence presentation of U2,4 has the unit group of U.
    #[test]
    fn near_regular_group() {
        let m = catalog::uniform(2, 4);
        let (g, a) = initial_matrix(&m);
        let p = incidence_presentation(&a, &generate_relations(&Pencils::new(&m), false)).unwrap();
        assert_eq!(g.forest.len(), 7);
        assert_eq!(p.group().to_string(), "Z/2 x Z^2");
        assert_eq!(p.canonical_form().orbits.len(), 1);
    }
}
