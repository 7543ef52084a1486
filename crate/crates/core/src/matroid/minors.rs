//! Embedded minors and upper sublattices.
//!
//! An upper sublattice of `Λ_M` is described by a flat `B` together with a set
//! `A` of upper covers of `B` whose join is `E`; it consists of the joins of
//! `B` with subsets of `A`. Choosing a basis `I` of `B` and one representative
//! of each cover gives an embedded minor `M/I\J` whose lattice is that sublattice.

use serde::{Deserialize, Serialize};

use crate::set::{k_subsets, ElementSet};

use super::lattice::{FlatLattice, MarkedAtomLattice};
use super::Matroid;

/// Contraction set `I` and deletion set `J` of an embedded minor `M/I\J`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorSpec {
    pub contract: ElementSet,
    pub delete: ElementSet,
}

impl MinorSpec {
    /// Label in the form `Λ\J/I`, omitting empty parts.
    pub fn label(&self) -> String {
        let mut s = "Λ".to_string();
        if !self.delete.is_empty() {
            s.push('\\');
            s.push_str(&self.delete.label());
        }
        if !self.contract.is_empty() {
            s.push('/');
            s.push_str(&self.contract.label());
        }
        s
    }
}

/// An upper sublattice of `Λ_M` identified with `Λ_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeEmbedding {
    /// Bottom flat `B`.
    pub bottom: ElementSet,
    /// Covers of `B`; entry `i` is the image of the `i`-th atom of `Λ_N`.
    pub covers: Vec<ElementSet>,
    /// Images of the flats of `Λ_N`, in the order of `N.lattice().flats()`.
    pub image: Vec<ElementSet>,
    /// A minor realizing the sublattice.
    pub spec: MinorSpec,
}

/// The flats of the upper sublattice generated by `bottom` and `covers`,
/// as atom masks over cover indices paired with the flats themselves.
pub(crate) fn generated_sublattice(
    lattice: &FlatLattice,
    bottom: ElementSet,
    covers: &[ElementSet],
) -> Vec<(ElementSet, ElementSet)> {
    let k = covers.len();
    let mut joins: Vec<ElementSet> = vec![bottom; 1 << k];
    for s in 1usize..1 << k {
        let low = s.trailing_zeros() as usize;
        let rest = joins[s & (s - 1)];
        joins[s] = lattice.join(rest, covers[low]);
    }
    let mut out: Vec<(ElementSet, ElementSet)> = joins
        .into_iter()
        .map(|f| {
            let mask = super::lattice::atom_mask(covers, f);
            (mask, f)
        })
        .collect();
    out.sort_by_key(|(m, _)| m.0);
    out.dedup();
    out
}

/// A minor whose lattice is the sublattice spanned by `bottom` and `covers`.
pub(crate) fn witness_spec(m: &Matroid, bottom: ElementSet, covers: &[ElementSet]) -> MinorSpec {
    let i = m.basis_of(bottom);
    let reps = covers.iter().fold(ElementSet::EMPTY, |acc, c| acc.with(c.difference(bottom).min().expect("cover is larger")));
    MinorSpec { contract: i, delete: m.ground().difference(i.union(reps)) }
}

/// All upper sublattices of `Λ_M` isomorphic to `Λ_N` for simple `N`.
///
/// Each sublattice is reported once, with the first isomorphism found. When
/// `N = M` the identity embedding comes first.
pub fn upper_sublattices_of_type(m: &Matroid, n: &Matroid) -> Vec<SublatticeEmbedding> {
    let mut out = Vec::new();
    visit_upper_sublattices(m, n, |e| {
        out.push(e);
        true
    });
    out
}

pub(crate) fn visit_upper_sublattices<F: FnMut(SublatticeEmbedding) -> bool>(m: &Matroid, n: &Matroid, mut visit: F) {
    let lm = m.lattice();
    let ln = n.lattice();
    let (_, n_atoms) = ln.atomize();
    search_upper_sublattices(m, n, false, |_| true, |bottom, ordered| {
        let image = ln
            .flats()
            .iter()
            .map(|&f| {
                let mask = super::lattice::atom_mask(&n_atoms, f);
                mask.iter().fold(bottom, |acc, i| lm.join(acc, ordered[i]))
            })
            .collect();
        let spec = witness_spec(m, bottom, ordered);
        visit(SublatticeEmbedding { bottom, covers: ordered.to_vec(), image, spec })
    });
}

/// Core search over pairs `(B, A)` whose generated sublattice is isomorphic
/// to `Λ_N`. The callback receives `B` and the covers ordered along the atoms
/// of `Λ_N`; with `all_isos` every isomorphism is reported, otherwise only the
/// first per sublattice. Returning false stops the search.
pub(crate) fn search_upper_sublattices<B, F>(m: &Matroid, n: &Matroid, all_isos: bool, bottom_ok: B, mut visit: F)
where
    B: Fn(ElementSet) -> bool,
    F: FnMut(ElementSet, &[ElementSet]) -> bool,
{
    if n.rank() > m.rank() {
        return;
    }
    let lm = m.lattice();
    let (n_atoms_lattice, n_atoms) = n.lattice().atomize();
    let target = MarkedAtomLattice::new(&n_atoms_lattice, vec![]);
    let a = n_atoms.len();
    let top = m.ground();
    for bottom in lm.flats_of_rank(m.rank() - n.rank()) {
        if !bottom_ok(bottom) {
            continue;
        }
        let covers = lm.upper_covers(bottom);
        if covers.len() < a {
            continue;
        }
        for pick in k_subsets(covers.len(), a) {
            let chosen: Vec<ElementSet> = pick.iter().map(|i| covers[i]).collect();
            let join = chosen.iter().fold(bottom, |acc, c| lm.join(acc, *c));
            if join != top {
                continue;
            }
            let sub = generated_sublattice(lm, bottom, &chosen);
            if sub.len() != n_atoms_lattice.len() {
                continue;
            }
            let cand = FlatLattice::from_flats(ElementSet::full(a), sub.iter().map(|(mask, _)| *mask));
            let cand = MarkedAtomLattice::new(&cand, vec![]);
            let mut stop = false;
            target.for_each_isomorphism(&cand, |perm| {
                let ordered: Vec<ElementSet> = perm.iter().map(|&j| chosen[j]).collect();
                if !visit(bottom, &ordered) {
                    stop = true;
                    return false;
                }
                all_isos
            });
            if stop {
                return;
            }
        }
    }
}

/// Searches for an embedded minor of `M` isomorphic to `N`.
///
/// For simple `N` the search runs over upper sublattices; otherwise every
/// pair `(I, J)` of the right sizes is tried and compared element by element.
pub fn has_minor(m: &Matroid, n: &Matroid) -> Option<MinorSpec> {
    if n.rank() > m.rank() || n.n() > m.n() || n.n() - n.rank() > m.n() - m.rank() {
        return None;
    }
    if n.is_simple() {
        let mut found = None;
        visit_upper_sublattices(m, n, |e| {
            found = Some(e.spec);
            false
        });
        return found;
    }
    let ci = m.rank() - n.rank();
    let dj = m.n() - m.rank() - (n.n() - n.rank());
    for i in k_subsets(m.n(), ci) {
        if !m.is_independent(i) {
            continue;
        }
        let rest: Vec<usize> = m.ground().difference(i).to_vec();
        for jj in k_subsets(rest.len(), dj) {
            let j = jj.map(&rest);
            let spec = MinorSpec { contract: i, delete: j };
            let Ok((minor, _)) = m.minor(&spec) else { continue };
            if minor.isomorphism_to(n).is_some() {
                return Some(spec);
            }
        }
    }
    None
}
