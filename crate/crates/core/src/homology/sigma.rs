//! Subconstellations, their classes, and the order complexes built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constellation::{Constellation, ModularCut};
use crate::matroid::lattice::{FlatLattice, MarkedAtomLattice};
use crate::matroid::minors::{generated_sublattice, witness_spec};
use crate::matroid::{catalog, Matroid, MinorSpec};
use crate::set::{k_subsets, ElementSet};

use super::complex::SimplicialComplex;

/// An upper sublattice of `Λ_τ`, given by its bottom and the covers of the bottom it uses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subconstellation {
    pub bottom: ElementSet,
    pub covers: Vec<ElementSet>,
    /// `(atom mask, flat)` for every flat, sorted by mask.
    pub members: Vec<(ElementSet, ElementSet)>,
    pub spec: MinorSpec,
}

impl Subconstellation {
    fn new(m: &Matroid, bottom: ElementSet, covers: Vec<ElementSet>) -> Self {
        let members = generated_sublattice(m.lattice(), bottom, &covers);
        let spec = witness_spec(m, bottom, &covers);
        Subconstellation { bottom, covers, members, spec }
    }

    /// The flats of the sublattice, sorted.
    pub fn flats(&self) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = self.members.iter().map(|(_, f)| *f).collect();
        v.sort();
        v
    }

    pub fn atoms(&self) -> usize {
        self.covers.len()
    }

    /// Label `Λ\J/I` of a minor realizing the sublattice.
    pub fn label(&self) -> String {
        self.spec.label()
    }

    pub fn is_contained_in(&self, other: &Subconstellation) -> bool {
        let theirs = other.flats();
        self.members.iter().all(|(_, f)| theirs.binary_search(f).is_ok())
    }

    /// The marked structure induced by `tau`: cut `Γ ∩ Λσ`, and as marks the
    /// corank-2 flats that are decomposable in the sublattice, lie off the
    /// cut, and are marked or indecomposable in `tau`.
    pub fn marked(&self, tau: &Constellation) -> MarkedAtomLattice {
        let lm = tau.matroid().lattice();
        let lattice = FlatLattice::from_flats(ElementSet::full(self.atoms()), self.members.iter().map(|(m, _)| *m));
        let mut gamma = Vec::new();
        let mut theta = Vec::new();
        for &(mask, f) in &self.members {
            if tau.cut().contains(f) {
                gamma.push(mask);
                continue;
            }
            if lm.corank_of(f) == Some(2) {
                let above =
                    self.members.iter().filter(|(_, g)| lm.corank_of(*g) == Some(1) && f.is_subset(*g)).count();
                if above == 2 && tau.is_edge_flat(f) {
                    theta.push(mask);
                }
            }
        }
        MarkedAtomLattice::new(&lattice, vec![gamma, theta])
    }
}

/// All upper sublattices of `Λ_M` with `atoms` atoms and rank `rank`.
pub fn sublattices_of_shape(m: &Matroid, rank: usize, atoms: usize) -> Vec<Subconstellation> {
    let lm = m.lattice();
    if rank > m.rank() {
        return Vec::new();
    }
    let top = m.ground();
    let mut out = Vec::new();
    for bottom in lm.flats_of_rank(m.rank() - rank) {
        let covers = lm.upper_covers(bottom);
        for pick in k_subsets(covers.len(), atoms) {
            let chosen: Vec<ElementSet> = pick.iter().map(|i| covers[i]).collect();
            if chosen.iter().fold(bottom, |acc, c| lm.join(acc, *c)) == top {
                out.push(Subconstellation::new(m, bottom, chosen));
            }
        }
    }
    out
}

/// Every upper sublattice of `Λ_M`, including `Λ_M` itself and `{E}`.
pub fn all_sublattices(m: &Matroid) -> Vec<Subconstellation> {
    let lm = m.lattice();
    let mut out = Vec::new();
    for rank in 0..=m.rank() {
        let most = lm.flats_of_rank(m.rank() - rank).iter().map(|b| lm.upper_covers(*b).len()).max().unwrap_or(0);
        for atoms in rank..=most {
            out.extend(sublattices_of_shape(m, rank, atoms));
        }
    }
    out
}

/// The whole lattice of `tau` as a marked atom lattice.
pub fn marked_lattice(tau: &Constellation) -> MarkedAtomLattice {
    let m = tau.matroid();
    let lm = m.lattice();
    let bottom = lm.bottom();
    Subconstellation::new(m, bottom, lm.upper_covers(bottom)).marked(tau)
}

/// Canonical key of the isomorphism class of a marked constellation.
pub fn marked_key(tau: &Constellation) -> Vec<u64> {
    marked_lattice(tau).canonical_key()
}

/// Named classes of subconstellations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassId {
    C0,
    C1,
    C2a,
    C2b,
    C2c,
    C2d,
    C3a,
    C3b,
    C3c,
    C3d,
}

impl ClassId {
    pub const ALL: [ClassId; 10] = [
        ClassId::C0,
        ClassId::C1,
        ClassId::C2a,
        ClassId::C2b,
        ClassId::C2c,
        ClassId::C2d,
        ClassId::C3a,
        ClassId::C3b,
        ClassId::C3c,
        ClassId::C3d,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::C0 => "0",
            ClassId::C1 => "1",
            ClassId::C2a => "2a",
            ClassId::C2b => "2b",
            ClassId::C2c => "2c",
            ClassId::C2d => "2d",
            ClassId::C3a => "3a",
            ClassId::C3b => "3b",
            ClassId::C3c => "3c",
            ClassId::C3d => "3d",
        }
    }

    pub fn from_name(s: &str) -> Option<ClassId> {
        ClassId::ALL.into_iter().find(|c| c.name() == s)
    }

    /// A representative marked constellation. Element labels are zero-based.
    pub fn template(self) -> Constellation {
        let e = |v: &[usize]| ElementSet::from_elements(v.iter().copied());
        let build = |m: Matroid, cut: Vec<ElementSet>, marks: Vec<ElementSet>| {
            let cut = ModularCut::validate(&m, cut).expect("template cut");
            Constellation::new(m, cut, marks).expect("template marks")
        };
        match self {
            ClassId::C0 => Constellation::trivial(catalog::uniform(1, 1)),
            ClassId::C1 => {
                let m = catalog::uniform(2, 2);
                build(m.clone(), vec![m.ground()], vec![ElementSet::EMPTY])
            }
            ClassId::C2a => Constellation::trivial(catalog::uniform(2, 3)),
            ClassId::C2b => {
                let m = catalog::uniform(3, 3);
                build(m.clone(), vec![m.ground()], vec![e(&[0]), e(&[1]), e(&[2])])
            }
            ClassId::C2c => {
                let m = catalog::uniform(3, 4);
                build(m.clone(), vec![e(&[0, 1]), e(&[2, 3]), m.ground()], vec![])
            }
            ClassId::C2d => {
                let m = catalog::mk23();
                let cut = vec![e(&[0, 1, 2]), e(&[0, 4, 5]), e(&[1, 3, 5]), e(&[2, 3, 4]), m.ground()];
                build(m, cut, vec![])
            }
            ClassId::C3a => Constellation::trivial(catalog::uniform(2, 4)),
            ClassId::C3b => {
                let m = catalog::uniform(2, 3).direct_sum(&catalog::uniform(1, 1)).expect("small sum");
                build(m.clone(), vec![m.ground()], vec![e(&[0]), e(&[1]), e(&[2])])
            }
            ClassId::C3c => Constellation::trivial(catalog::uniform(3, 4)),
            ClassId::C3d => {
                let m = catalog::uniform(4, 4);
                let marks = k_subsets(4, 2);
                build(m.clone(), vec![m.ground()], marks)
            }
        }
    }

    /// The extra condition on the ambient lattice for classes 2c and 2d: any
    /// two hyperplanes of the cut meet in a flat of corank 3.
    fn ambient_condition(self, tau: &Constellation, sub: &Subconstellation) -> bool {
        if !matches!(self, ClassId::C2c | ClassId::C2d) {
            return true;
        }
        let lm = tau.matroid().lattice();
        let hyps: Vec<ElementSet> = sub
            .members
            .iter()
            .map(|(_, f)| *f)
            .filter(|f| lm.corank_of(*f) == Some(1) && tau.cut().contains(*f))
            .collect();
        hyps.iter().enumerate().all(|(i, a)| hyps[i + 1..].iter().all(|b| lm.corank_of(a.intersection(*b)) == Some(3)))
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// An order complex together with the subconstellation behind each vertex.
#[derive(Clone, Debug)]
pub struct SigmaComplex {
    pub complex: SimplicialComplex,
    pub vertices: Vec<(ClassId, Subconstellation)>,
}

/// The classes admitted at levels 0, 1 and 2.
pub fn level_classes(level: u8) -> &'static [ClassId] {
    match level {
        0 => &[ClassId::C0],
        1 => &[ClassId::C0, ClassId::C1],
        _ => &[ClassId::C0, ClassId::C1, ClassId::C2a, ClassId::C2b, ClassId::C2c, ClassId::C2d],
    }
}

/// The order complex of the subconstellations of `tau` of the given classes.
///
/// Classes 2c and 2d also require their cut hyperplanes to meet pairwise in
/// corank-3 flats of `Λ_τ`.
pub fn sigma_complex_of_classes(tau: &Constellation, classes: &[ClassId]) -> SigmaComplex {
    let m = tau.matroid();
    let mut vertices: Vec<(ClassId, Subconstellation)> = Vec::new();
    for &class in classes {
        let t = class.template();
        let target = marked_lattice(&t);
        for sub in sublattices_of_shape(m, t.matroid().rank(), target.atoms) {
            if sub.members.len() != target.flats.len() {
                continue;
            }
            if sub.marked(tau).is_isomorphic(&target) && class.ambient_condition(tau, &sub) {
                vertices.push((class, sub));
            }
        }
    }
    let labels = vertices.iter().map(|(_, s)| s.label()).collect();
    let flats: Vec<Vec<ElementSet>> = vertices.iter().map(|(_, s)| s.flats()).collect();
    let complex = SimplicialComplex::order_complex(labels, |i, j| {
        flats[i].len() < flats[j].len() && flats[i].iter().all(|f| flats[j].binary_search(f).is_ok())
    });
    SigmaComplex { complex, vertices }
}

/// `Σ_0`, `Σ_1` or `Σ_2` of `tau`.
pub fn sigma_complex(tau: &Constellation, level: u8) -> SigmaComplex {
    sigma_complex_of_classes(tau, level_classes(level.min(2)))
}
