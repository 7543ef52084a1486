//! Recognition of elementary Tutte paths of types 1 to 9.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matroid::minors::search_upper_sublattices;
use crate::matroid::{catalog, Matroid};
use crate::set::ElementSet;

use super::{Constellation, TuttePath};

/// A template subconstellation carrying one elementary path type.
#[derive(Clone, Debug)]
pub struct ElementaryTemplate {
    pub ty: u8,
    pub kind: u8,
    pub base: Matroid,
    /// Flats of the base lattice that must lie in the cut (all others must not).
    pub cut: Vec<ElementSet>,
    /// The closed path, without repeating its first term.
    pub cycle: Vec<ElementSet>,
    /// Corank-2 flats of the base that must stay decomposable and unmarked in
    /// the ambient constellation.
    pub decomposable: Vec<ElementSet>,
    pub extended_type: &'static str,
}

fn one(s: &str) -> ElementSet {
    ElementSet::from_elements(s.chars().map(|c| c.to_digit(10).expect("digit") as usize - 1))
}

fn ones(v: &[&str]) -> Vec<ElementSet> {
    v.iter().map(|s| one(s)).collect()
}

/// The nine templates. Labels are one-based as in the usual drawings.
pub fn templates() -> Vec<ElementaryTemplate> {
    let u23 = catalog::uniform(2, 3);
    let u34 = catalog::uniform(3, 4);
    let t = |ty, kind, base: &Matroid, cut: &[&str], cycle: &[&str], dec: &[&str], ext| ElementaryTemplate {
        ty,
        kind,
        base: base.clone(),
        cut: ones(cut),
        cycle: ones(cycle),
        decomposable: ones(dec),
        extended_type: ext,
    };
    vec![
        t(1, 1, &u23, &["123"], &["1", "2"], &[], "U2,4"),
        t(2, 1, &u23, &["3", "123"], &["1", "2"], &[], "U~2,3"),
        t(3, 2, &u23, &["123"], &["1", "2", "3"], &[], "U2,4"),
        t(4, 2, &u34, &["1234"], &["12", "13", "23"], &[], "U3,5"),
        t(5, 2, &u34, &["14", "1234"], &["12", "13", "23"], &[], "C5"),
        t(6, 2, &u34, &["4", "14", "24", "34", "1234"], &["12", "13", "23"], &[], "U~3,4"),
        t(7, 3, &u34, &["23", "14", "1234"], &["12", "24", "34", "13"], &[], "MK4-"),
        t(8, 2, &catalog::mk4(), &["14", "25", "36", "123456"], &["126", "135", "234"], &[], "F7"),
        t(
            9,
            4,
            &catalog::mk23(),
            &["123", "156", "246", "345", "123456"],
            &["1245", "126", "1346", "456"],
            &["14", "25", "36"],
            "F7*",
        ),
    ]
}

/// Result of matching a closed path against the templates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: u8,
    pub ty: u8,
    pub extended_type: String,
    /// Bottom flat of the matched sublattice.
    pub bottom: ElementSet,
    /// Covers spanning the matched sublattice, ordered along the template atoms.
    pub covers: Vec<ElementSet>,
    /// Every type with at least one matching sublattice, ascending.
    pub matching_types: Vec<u8>,
}

fn same_cycle(a: &[ElementSet], b: &[ElementSet]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let k = a.len();
    (0..k).any(|r| {
        (0..k).all(|i| a[i] == b[(i + r) % k]) || (0..k).all(|i| a[i] == b[(r + k - i) % k])
    })
}

fn match_template(tau: &Constellation, cycle: &[ElementSet], t: &ElementaryTemplate) -> Option<(ElementSet, Vec<ElementSet>)> {
    let m = tau.matroid();
    let lm = m.lattice();
    let carrier = cycle.iter().copied().reduce(|a, b| a.intersection(b))?;
    let base_flats = t.base.lattice().flats().to_vec();
    let mut found = None;
    search_upper_sublattices(m, &t.base, true, |b| b.is_subset(carrier), |bottom, covers| {
        let image = |x: ElementSet| x.iter().fold(bottom, |acc, i| lm.join(acc, covers[i]));
        let mapped: Vec<ElementSet> = t.cycle.iter().map(|h| image(*h)).collect();
        if !same_cycle(&mapped, cycle) {
            return true;
        }
        let cut_ok = base_flats.iter().all(|&x| tau.cut().contains(image(x)) == t.cut.contains(&x));
        let dec_ok = t.decomposable.iter().all(|&l| !tau.is_edge_flat(image(l)));
        if cut_ok && dec_ok {
            found = Some((bottom, covers.to_vec()));
            false
        } else {
            true
        }
    });
    found
}

/// Matches a closed Tutte path off the cut against the templates.
///
/// Returns `None` when no template fits. Several templates can fit the same
/// path (for instance `(1,2,1)` through a corank-2 flat on four or more
/// hyperplanes, some in the cut and some not); the lowest type is reported
/// and all fitting types are listed.
pub fn classify_elementary(tau: &Constellation, path: &TuttePath) -> Result<Option<Classification>> {
    path.validate_closed_off_cut(tau)?;
    let cycle = &path.terms[..path.terms.len() - 1];
    let mut best: Option<Classification> = None;
    let mut matching = Vec::new();
    for t in templates() {
        if t.cycle.len() != cycle.len() {
            continue;
        }
        if let Some((bottom, covers)) = match_template(tau, cycle, &t) {
            matching.push(t.ty);
            if best.is_none() {
                best = Some(Classification {
                    kind: t.kind,
                    ty: t.ty,
                    extended_type: t.extended_type.to_string(),
                    bottom,
                    covers,
                    matching_types: Vec::new(),
                });
            }
        }
    }
    Ok(best.map(|mut c| {
        c.matching_types = matching;
        c
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::{complete_linear_subclass, extend_by_cut, ModularCut};
    use crate::error::Error;
    use crate::matroid::lattice::MarkedAtomLattice;

    fn path(v: &[&str]) -> TuttePath {
        TuttePath::new(v.iter().map(|s| one(s)).collect())
    }

    #[test]
    fn extended_types_match_extensions() {
        for t in templates() {
            let cut = ModularCut::validate(&t.base, t.cut.iter().copied()).unwrap();
            let ext = extend_by_cut(&t.base, &cut).unwrap();
            let named = catalog::by_name(t.extended_type).unwrap();
            if named.is_simple() {
                let a = MarkedAtomLattice::new(&ext.lattice().atomize().0, vec![]);
                let b = MarkedAtomLattice::new(named.lattice(), vec![]);
                assert!(ext.is_simple() && a.is_isomorphic(&b), "type {}", t.ty);
            } else {
                assert!(ext.isomorphism_to(&named).is_some(), "type {}", t.ty);
            }
        }
    }

    #[test]
    fn templates_match_themselves() {
        for t in templates() {
            let cut = ModularCut::validate(&t.base, t.cut.iter().copied()).unwrap();
            let tau = Constellation::with_cut(t.base.clone(), cut);
            let mut terms = t.cycle.clone();
            terms.push(t.cycle[0]);
            let c = classify_elementary(&tau, &TuttePath::new(terms)).unwrap().unwrap();
            assert_eq!(c.ty, t.ty);
            assert_eq!(c.kind, t.kind);
        }
    }

    #[test]
    fn type3_in_u24() {
        let tau = Constellation::trivial(catalog::uniform(2, 4));
        let c = classify_elementary(&tau, &path(&["1", "2", "3", "1"])).unwrap().unwrap();
        assert_eq!((c.ty, c.kind, c.extended_type.as_str()), (3, 2, "U2,4"));
    }

    #[test]
    fn type2_in_u23() {
        let u23 = catalog::uniform(2, 3);
        let cut = ModularCut::principal(&u23, one("3")).unwrap();
        let tau = Constellation::with_cut(u23, cut);
        let c = classify_elementary(&tau, &path(&["1", "2", "1"])).unwrap().unwrap();
        assert_eq!((c.ty, c.extended_type.as_str()), (2, "U~2,3"));
        assert_eq!(c.matching_types, vec![2]);
    }

    #[test]
    fn type7_kind3() {
        let u34 = catalog::uniform(3, 4);
        let cut = complete_linear_subclass(&u34, &[one("23"), one("14")]).unwrap();
        let tau = Constellation::with_cut(u34, cut);
        let c = classify_elementary(&tau, &path(&["12", "13", "34", "24", "12"])).unwrap().unwrap();
        assert_eq!((c.kind, c.ty), (3, 7));
    }

    #[test]
    fn ties_are_reported() {
        // In U2,5 with the principal cut at point 5, the path (1,2,1) sits in
        // sublattices {1,2,3} (type 1) and {1,2,5} (type 2).
        let u25 = catalog::uniform(2, 5);
        let cut = ModularCut::principal(&u25, one("5")).unwrap();
        let tau = Constellation::with_cut(u25, cut);
        let c = classify_elementary(&tau, &path(&["1", "2", "1"])).unwrap().unwrap();
        assert_eq!(c.ty, 1);
        assert_eq!(c.matching_types, vec![1, 2]);
    }

    #[test]
    fn non_elementary_and_invalid() {
        let tau = Constellation::trivial(catalog::uniform(3, 4));
        // A closed path of length 4 around a vertex of the octahedron is not a template.
        let p = path(&["12", "13", "14", "12"]);
        let c = classify_elementary(&tau, &p).unwrap();
        assert_eq!(c.unwrap().ty, 3);
        let bad = path(&["12", "34", "12"]);
        assert!(matches!(classify_elementary(&tau, &bad), Err(Error::InvalidPath(_))));
        let open = path(&["12", "13"]);
        assert!(matches!(classify_elementary(&tau, &open), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn type9_needs_decomposable_flats() {
        let t = &templates()[8];
        let cut = ModularCut::validate(&t.base, t.cut.iter().copied()).unwrap();
        let p = path(&["1245", "126", "1346", "456", "1245"]);
        let plain = Constellation::with_cut(t.base.clone(), cut.clone());
        assert_eq!(classify_elementary(&plain, &p).unwrap().unwrap().ty, 9);
        // Marking one of 14, 25, 36 makes the square split into two triangles.
        let marked = Constellation::new(t.base.clone(), cut, vec![one("14")]).unwrap();
        assert!(classify_elementary(&marked, &p).unwrap().is_none());
    }

    #[test]
    fn fano_type8() {
        // The Fano plane minus a point, with the cut of the removed point.
        let (m, cut) = crate::constellation::cut_of_extension(&catalog::fano(), 6).unwrap();
        let tau = Constellation::with_cut(m.clone(), cut);
        // Three-point lines of F7 \ 7 through no cut flat: 135, 146, 236, 245.
        let c = classify_elementary(&tau, &path(&["135", "146", "236", "135"]));
        // 135 ∩ 146 = 1, 146 ∩ 236 = 6, 236 ∩ 135 = 3: a triangle of lines.
        let c = c.unwrap().unwrap();
        assert!(c.matching_types.contains(&8));
    }
}
