//! Modular cuts, linear subclasses and single-element extensions.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, MinorSpec};
use crate::set::{k_subsets, ElementSet};

/// A modular cut of the lattice of flats of a matroid, stored as the full
/// set of its member flats.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModularCut {
    flats: BTreeSet<ElementSet>,
}

impl ModularCut {
    /// Checks the two defining conditions and returns the cut.
    pub fn validate(m: &Matroid, flats: impl IntoIterator<Item = ElementSet>) -> Result<ModularCut> {
        let set: BTreeSet<ElementSet> = flats.into_iter().collect();
        let l = m.lattice();
        for &f in &set {
            if !l.contains(f) {
                return Err(Error::NotAFlat(f));
            }
        }
        for &f in &set {
            for g in l.upper_covers(f) {
                if !set.contains(&g) {
                    return Err(Error::InvalidCut(format!("not upward closed: {f:?} in the cut but {g:?} is not")));
                }
            }
        }
        for &a in &set {
            for &b in &set {
                if a < b && l.is_modular_pair(a, b) && !set.contains(&a.intersection(b)) {
                    return Err(Error::InvalidCut(format!(
                        "modular pair {a:?}, {b:?} has meet {:?} outside the cut",
                        a.intersection(b)
                    )));
                }
            }
        }
        Ok(ModularCut { flats: set })
    }

    /// Builds a cut without validation; used where the family is a cut by construction.
    pub(crate) fn from_trusted(flats: impl IntoIterator<Item = ElementSet>) -> ModularCut {
        ModularCut { flats: flats.into_iter().collect() }
    }

    /// The trivial cut `{E}`.
    pub fn trivial(m: &Matroid) -> ModularCut {
        ModularCut::from_trusted([m.ground()])
    }

    /// All flats containing `f0`.
    pub fn principal(m: &Matroid, f0: ElementSet) -> Result<ModularCut> {
        if !m.is_flat(f0) {
            return Err(Error::NotAFlat(f0));
        }
        Ok(ModularCut::from_trusted(m.lattice().flats_above(f0)))
    }

    pub fn contains(&self, f: ElementSet) -> bool {
        self.flats.contains(&f)
    }

    pub fn flats(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.flats.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<ElementSet> {
        self.flats.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// The hyperplanes in the cut, i.e. the associated linear subclass.
    pub fn hyperplanes(&self, m: &Matroid) -> Vec<ElementSet> {
        m.hyperplanes().into_iter().filter(|h| self.contains(*h)).collect()
    }

    /// Whether the cut is `{F : F ⊇ F0}` for some flat `F0`.
    pub fn is_principal(&self) -> bool {
        match self.flats.iter().copied().reduce(|a, b| a.intersection(b)) {
            Some(bottom) => self.flats.contains(&bottom),
            None => false,
        }
    }
}

/// Checks the linear-subclass condition: two members meeting in a corank-2
/// flat force every hyperplane through that flat to be a member.
pub fn check_linear_subclass(m: &Matroid, hyperplanes: &[ElementSet]) -> Result<()> {
    let all = m.hyperplanes();
    for h in hyperplanes {
        if !all.contains(h) {
            return Err(Error::NotAHyperplane(*h));
        }
    }
    if m.rank() < 2 {
        return Ok(());
    }
    for line in m.lattice().flats_of_rank(m.rank() - 2) {
        let through: Vec<ElementSet> = all.iter().copied().filter(|h| line.is_subset(*h)).collect();
        let chosen = through.iter().filter(|h| hyperplanes.contains(h)).count();
        if chosen >= 2 && chosen < through.len() {
            return Err(Error::NotLinearSubclass(format!(
                "{chosen} of the {} hyperplanes through {line:?} are members",
                through.len()
            )));
        }
    }
    Ok(())
}

/// The unique nonempty modular cut whose hyperplanes are the given linear
/// subclass: a flat is a member iff every hyperplane above it is.
pub fn complete_linear_subclass(m: &Matroid, hyperplanes: &[ElementSet]) -> Result<ModularCut> {
    check_linear_subclass(m, hyperplanes)?;
    let all = m.hyperplanes();
    let flats = m.lattice().flats().iter().copied().filter(|&f| {
        all.iter().filter(|h| f.is_subset(**h)).all(|h| hyperplanes.contains(h))
    });
    Ok(ModularCut::from_trusted(flats))
}

/// Every linear subclass, found by backtracking over the hyperplanes.
pub fn linear_subclasses(m: &Matroid) -> Vec<Vec<ElementSet>> {
    let hyps = m.hyperplanes();
    let index: HashMap<ElementSet, usize> = hyps.iter().enumerate().map(|(i, h)| (*h, i)).collect();
    let lines: Vec<Vec<usize>> = if m.rank() >= 2 {
        m.lattice()
            .flats_of_rank(m.rank() - 2)
            .into_iter()
            .map(|l| hyps.iter().filter(|h| l.is_subset(**h)).map(|h| index[h]).collect::<Vec<_>>())
            .filter(|v: &Vec<usize>| v.len() >= 3)
            .collect()
    } else {
        Vec::new()
    };
    let mut lines_of: Vec<Vec<usize>> = vec![Vec::new(); hyps.len()];
    for (li, l) in lines.iter().enumerate() {
        for &h in l {
            lines_of[h].push(li);
        }
    }
    // state: 0 undecided, 1 in, 2 out
    let mut state = vec![0u8; hyps.len()];
    let mut out = Vec::new();
    fn consistent(line: &[usize], state: &[u8]) -> bool {
        let inn = line.iter().filter(|&&h| state[h] == 1).count();
        let outn = line.iter().filter(|&&h| state[h] == 2).count();
        !(inn >= 2 && outn >= 1)
    }
    fn rec(
        i: usize,
        hyps: &[ElementSet],
        lines: &[Vec<usize>],
        lines_of: &[Vec<usize>],
        state: &mut Vec<u8>,
        out: &mut Vec<Vec<ElementSet>>,
    ) {
        if i == hyps.len() {
            out.push((0..hyps.len()).filter(|&h| state[h] == 1).map(|h| hyps[h]).collect());
            return;
        }
        for choice in [2u8, 1u8] {
            state[i] = choice;
            if lines_of[i].iter().all(|&l| consistent(&lines[l], state)) {
                rec(i + 1, hyps, lines, lines_of, state, out);
            }
        }
        state[i] = 0;
    }
    rec(0, &hyps, &lines, &lines_of, &mut state, &mut out);
    out
}

/// All nonempty modular cuts.
pub fn all_modular_cuts(m: &Matroid) -> Vec<ModularCut> {
    linear_subclasses(m)
        .into_iter()
        .map(|ls| complete_linear_subclass(m, &ls).expect("enumerated subclasses are valid"))
        .collect()
}

/// The single-element extension by a new element `n` lying in exactly the
/// flats of the cut: `Y + a` is a basis for independent `(r-1)`-sets `Y`
/// whose closure is not in the cut.
pub fn extend_by_cut(m: &Matroid, cut: &ModularCut) -> Result<Matroid> {
    if cut.is_empty() {
        return Err(Error::EmptyCut);
    }
    let a = m.n();
    if a + 1 > crate::set::MAX_ELEMENTS {
        return Err(Error::GroundSetTooLarge(a + 1));
    }
    let mut bases: Vec<ElementSet> = m.bases().to_vec();
    if m.rank() > 0 {
        for y in k_subsets(m.n(), m.rank() - 1) {
            if m.is_independent(y) && !cut.contains(m.closure_unchecked(y)) {
                bases.push(y.with(a));
            }
        }
    }
    Ok(Matroid::from_bases_trusted(a + 1, bases))
}

/// The modular cut of `M̂ \ a` recording the flats whose closure in `M̂`
/// contains `a`. Returns the deletion (relabeled contiguously) and the cut.
pub fn cut_of_extension(mhat: &Matroid, a: usize) -> Result<(Matroid, ModularCut)> {
    if a >= mhat.n() {
        return Err(Error::ElementOutOfRange { element: a, n: mhat.n() });
    }
    if mhat.is_coloop(a) {
        return Err(Error::Coloop(a));
    }
    let (m, map) = mhat.minor(&MinorSpec { contract: ElementSet::EMPTY, delete: ElementSet::singleton(a) })?;
    let flats = m.lattice().flats().iter().copied().filter(|f| {
        let old = f.map(&map);
        mhat.closure_unchecked(old).contains(a)
    });
    let flats: Vec<ElementSet> = flats.collect();
    Ok((m, ModularCut::from_trusted(flats)))
}
