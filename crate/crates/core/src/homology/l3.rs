//! Recursive search for classes of marked constellations whose relative
//! order complex has nonvanishing second homology.
//!
//! The starting list omits classes 2c and 2d. Those two are put back when
//! their own relative complex has nonzero `H_1`. Other classes with nonzero
//! `H_1` and vanishing `H_2` are reported beside the list, not added to it.
//!
//! Classes are processed by atom count. A proper upper sublattice always has
//! fewer atoms than the lattice it sits in, so when a class with `k` atoms is
//! examined every class it could contain has already been decided.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::constellation::{all_modular_cuts, Constellation};
use crate::error::{Error, Result};
use crate::matroid::catalog;
use crate::matroid::lattice::MarkedAtomLattice;
use crate::set::ElementSet;

use super::complex::{HomologyGroup, SimplicialComplex};
use super::sigma::{all_sublattices, marked_key, ClassId, Subconstellation};

/// Largest atom count accepted by [`search_l3`].
pub const MAX_L3_ATOMS: usize = 5;

/// A class in the list, with the group that justified adding it.
#[derive(Clone, Debug)]
pub struct L3Class {
    /// `0`, `1`, `2a`, ... for named classes, `new-<k>` for other added
    /// classes and `h1-<k>` for classes reported beside the list.
    pub id: String,
    pub constellation: Constellation,
    pub atoms: usize,
    pub key: Vec<u64>,
    /// `H_1` and `H_2` of the relative complex; absent for the starting classes.
    pub h1: Option<HomologyGroup>,
    pub h2: Option<HomologyGroup>,
}

/// Serializable summary of a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct L3Summary {
    pub id: String,
    pub atoms: usize,
    pub lattice_type: String,
    pub cut: Vec<ElementSet>,
    pub marks: Vec<ElementSet>,
    pub h1: Option<String>,
    pub h2: Option<String>,
}

impl L3Class {
    pub fn summary(&self) -> L3Summary {
        let m = self.constellation.matroid();
        L3Summary {
            id: self.id.clone(),
            atoms: self.atoms,
            lattice_type: lattice_type_name(m),
            cut: self.constellation.cut().hyperplanes(m).into_iter().chain([m.ground()]).collect(),
            marks: self.constellation.marks().to_vec(),
            h1: self.h1.as_ref().map(|h| h.to_string()),
            h2: self.h2.as_ref().map(|h| h.to_string()),
        }
    }
}

fn lattice_key(m: &crate::matroid::Matroid) -> Vec<u64> {
    MarkedAtomLattice::new(&m.lattice().atomize().0, vec![]).canonical_key()
}

/// A catalog name for the simple matroid with this lattice, when one is known.
pub fn lattice_type_name(m: &crate::matroid::Matroid) -> String {
    let key = lattice_key(m);
    let mut names: Vec<String> = Vec::new();
    for n in 0..=6 {
        for r in 0..=n {
            names.push(format!("U{r},{n}"));
        }
    }
    for extra in ["U2,3+U1,1", "U2,3+U1,1+U1,1", "U2,4+U1,1", "U3,4+U1,1", "U2,3+U2,3", "C5", "MK4-", "MK4", "MK23", "F7"] {
        names.push(extra.to_string());
    }
    for name in names {
        let cand = catalog::by_name(&name).expect("catalog name");
        if cand.n() == key[0] as usize && lattice_key(&cand) == key {
            return name;
        }
    }
    format!("rank {} on {} atoms", m.rank(), key[0])
}

/// One marked constellation per isomorphism class with exactly `atoms` atoms,
/// ordered by number of flats and then canonical key.
pub fn marked_constellations(atoms: usize) -> Vec<(Vec<u64>, Constellation)> {
    let mut seen: HashMap<Vec<u64>, Constellation> = HashMap::new();
    for m in catalog::simple_matroids(atoms) {
        let lm = m.lattice();
        let decomposable: Vec<ElementSet> = lm
            .flats()
            .iter()
            .copied()
            .filter(|&f| lm.corank_of(f) == Some(2) && lm.hyperplanes_above(f).len() == 2)
            .collect();
        for cut in all_modular_cuts(&m) {
            let free: Vec<ElementSet> = decomposable.iter().copied().filter(|f| !cut.contains(*f)).collect();
            for mask in 0u64..(1u64 << free.len()) {
                let marks = (0..free.len()).filter(|i| mask >> i & 1 == 1).map(|i| free[i]).collect();
                let tau = Constellation::new(m.clone(), cut.clone(), marks).expect("marks are admissible");
                seen.entry(marked_key(&tau)).or_insert(tau);
            }
        }
    }
    let mut out: Vec<(Vec<u64>, Constellation)> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.1.matroid().lattice().len(), &a.0).cmp(&(b.1.matroid().lattice().len(), &b.0)));
    out
}

/// The order complex of the proper subconstellations of `tau` whose class
/// key lies in `listed`.
pub fn sigma_below(tau: &Constellation, listed: &HashSet<Vec<u64>>) -> (SimplicialComplex, Vec<Subconstellation>) {
    let m = tau.matroid();
    let total = m.lattice().upper_covers(m.lattice().bottom()).len();
    let mut vertices: Vec<Subconstellation> = Vec::new();
    for sub in all_sublattices(m) {
        if sub.atoms() >= total {
            continue;
        }
        if listed.contains(&sub.marked(tau).canonical_key()) {
            vertices.push(sub);
        }
    }
    let labels = vertices.iter().map(|s| s.label()).collect();
    let flats: Vec<Vec<ElementSet>> = vertices.iter().map(|s| s.flats()).collect();
    let complex = SimplicialComplex::order_complex(labels, |i, j| {
        flats[i].len() < flats[j].len() && flats[i].iter().all(|f| flats[j].binary_search(f).is_ok())
    });
    (complex, vertices)
}

/// Outcome of [`search_l3`].
#[derive(Clone, Debug)]
pub struct L3Search {
    /// The starting classes followed by every class added, in search order.
    pub classes: Vec<L3Class>,
    /// Classes with nonzero `H_1` and zero `H_2` that were not added.
    pub first_homology_only: Vec<L3Class>,
}

/// Runs the search over all marked constellations with at most `max_atoms`
/// atoms, starting from classes 0, 1, 2a and 2b.
pub fn search_l3(max_atoms: usize) -> Result<L3Search> {
    if max_atoms > MAX_L3_ATOMS {
        return Err(Error::TooManyAtoms(max_atoms));
    }
    let named: HashMap<Vec<u64>, ClassId> = ClassId::ALL.iter().map(|c| (marked_key(&c.template()), *c)).collect();
    let mut list: Vec<L3Class> = [ClassId::C0, ClassId::C1, ClassId::C2a, ClassId::C2b]
        .into_iter()
        .map(|c| {
            let t = c.template();
            L3Class { id: c.name().to_string(), atoms: t.matroid().n(), key: marked_key(&t), constellation: t, h1: None, h2: None }
        })
        .collect();
    let mut listed: HashSet<Vec<u64>> = list.iter().map(|c| c.key.clone()).collect();
    let readmit = [marked_key(&ClassId::C2c.template()), marked_key(&ClassId::C2d.template())];
    let mut fresh = 0;
    let mut first_homology_only: Vec<L3Class> = Vec::new();
    for atoms in 0..=max_atoms {
        // Classes with the same atom count cannot contain one another, so
        // they are all judged against the list as it stood before this round.
        let before = listed.clone();
        for (key, tau) in marked_constellations(atoms) {
            if before.contains(&key) {
                continue;
            }
            let (complex, _) = sigma_below(&tau, &before);
            let h1 = complex.homology_or_zero(1);
            let h2 = complex.homology_or_zero(2);
            if h2.is_zero() && !(h1.is_zero() || readmit.contains(&key)) {
                let id = format!("h1-{}", first_homology_only.len() + 1);
                first_homology_only.push(L3Class { id, constellation: tau, atoms, key, h1: Some(h1), h2: Some(h2) });
                continue;
            }
            if h2.is_zero() && h1.is_zero() {
                continue;
            }
            let id = match named.get(&key) {
                Some(c) => c.name().to_string(),
                None => {
                    fresh += 1;
                    format!("new-{fresh}")
                }
            };
            listed.insert(key.clone());
            list.push(L3Class { id, constellation: tau, atoms, key, h1: Some(h1), h2: Some(h2) });
        }
    }
    Ok(L3Search { classes: list, first_homology_only })
}
