//! Ranked lattices of flats and isomorphism of their atom representations.

use std::collections::{HashMap, HashSet};

use crate::set::ElementSet;

use super::Matroid;

/// A geometric lattice stored as the family of its flats.
///
/// Flats are kept sorted by rank and then by element sets. The same type
/// serves for lattices of matroids and for abstract atom lattices, where the
/// ground set is a set of atom indices and the bottom flat is empty.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    ground: ElementSet,
    rank: usize,
    flats: Vec<ElementSet>,
    ranks: Vec<usize>,
    index: HashMap<ElementSet, usize>,
    by_rank: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl FlatLattice {
    /// Bottom-up construction: the flats of rank `k + 1` are the closures
    /// of `F + e` for flats `F` of rank `k` and elements `e` outside `F`.
    pub fn of_matroid(m: &Matroid) -> FlatLattice {
        let ground = m.ground();
        let bottom = m.closure_unchecked(ElementSet::EMPTY);
        let mut levels: Vec<Vec<ElementSet>> = vec![vec![bottom]];
        let mut cover_pairs: Vec<(ElementSet, ElementSet)> = Vec::new();
        for k in 0..m.rank() {
            let mut next: Vec<ElementSet> = Vec::new();
            let mut seen = HashSet::new();
            for &f in &levels[k] {
                let mut done = f;
                for e in ground.difference(f).iter() {
                    if done.contains(e) {
                        continue;
                    }
                    let g = m.closure_unchecked(f.with(e));
                    done = done.union(g);
                    cover_pairs.push((f, g));
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
            next.sort();
            levels.push(next);
        }
        FlatLattice::assemble(ground, levels, Some(cover_pairs))
    }

    /// Builds a lattice from an explicit family of flats that is closed under
    /// intersection and contains `ground`. Ranks are lengths of longest chains
    /// from the bottom.
    pub fn from_flats(ground: ElementSet, flats: impl IntoIterator<Item = ElementSet>) -> FlatLattice {
        let mut list: Vec<ElementSet> = flats.into_iter().collect();
        list.sort_by_key(|f| (f.len(), *f));
        list.dedup();
        let mut rank_of: HashMap<ElementSet, usize> = HashMap::new();
        for (i, &f) in list.iter().enumerate() {
            let r = list[..i]
                .iter()
                .filter(|g| g.is_subset(f) && **g != f)
                .map(|g| rank_of[g] + 1)
                .max()
                .unwrap_or(0);
            rank_of.insert(f, r);
        }
        let top = rank_of.values().copied().max().unwrap_or(0);
        let mut levels: Vec<Vec<ElementSet>> = vec![Vec::new(); top + 1];
        for f in list {
            levels[rank_of[&f]].push(f);
        }
        for l in &mut levels {
            l.sort();
        }
        FlatLattice::assemble(ground, levels, None)
    }

    fn assemble(
        ground: ElementSet,
        levels: Vec<Vec<ElementSet>>,
        cover_pairs: Option<Vec<(ElementSet, ElementSet)>>,
    ) -> FlatLattice {
        let rank = levels.len() - 1;
        let mut flats = Vec::new();
        let mut ranks = Vec::new();
        let mut by_rank = Vec::new();
        for (k, level) in levels.into_iter().enumerate() {
            let mut idx = Vec::new();
            for f in level {
                idx.push(flats.len());
                flats.push(f);
                ranks.push(k);
            }
            by_rank.push(idx);
        }
        let index: HashMap<ElementSet, usize> = flats.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut upper = vec![Vec::new(); flats.len()];
        match cover_pairs {
            Some(pairs) => {
                for (f, g) in pairs {
                    upper[index[&f]].push(index[&g]);
                }
                for u in &mut upper {
                    u.sort();
                    u.dedup();
                }
            }
            None => {
                for (i, f) in flats.iter().enumerate() {
                    if ranks[i] == rank {
                        continue;
                    }
                    for &j in &by_rank[ranks[i] + 1] {
                        if f.is_subset(flats[j]) {
                            upper[i].push(j);
                        }
                    }
                }
            }
        }
        FlatLattice { ground, rank, flats, ranks, index, by_rank, upper }
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// All flats, by rank and then by element sets.
    pub fn flats(&self) -> &[ElementSet] {
        &self.flats
    }

    pub fn index_of(&self, f: ElementSet) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn contains(&self, f: ElementSet) -> bool {
        self.index.contains_key(&f)
    }

    pub fn rank_of(&self, f: ElementSet) -> Option<usize> {
        self.index_of(f).map(|i| self.ranks[i])
    }

    pub fn corank_of(&self, f: ElementSet) -> Option<usize> {
        self.rank_of(f).map(|r| self.rank - r)
    }

    pub fn flats_of_rank(&self, k: usize) -> Vec<ElementSet> {
        self.by_rank.get(k).map(|v| v.iter().map(|&i| self.flats[i]).collect()).unwrap_or_default()
    }

    pub fn bottom(&self) -> ElementSet {
        self.flats[0]
    }

    pub fn top(&self) -> ElementSet {
        *self.flats.last().expect("lattice has a top")
    }

    pub fn atoms(&self) -> Vec<ElementSet> {
        self.flats_of_rank(1)
    }

    pub fn hyperplanes(&self) -> Vec<ElementSet> {
        if self.rank == 0 {
            Vec::new()
        } else {
            self.flats_of_rank(self.rank - 1)
        }
    }

    pub fn meet(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        a.intersection(b)
    }

    /// Least flat containing both arguments.
    pub fn join(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        self.closure(a.union(b))
    }

    /// Least flat containing `s`, found by scanning upward through the ranks.
    pub fn closure(&self, s: ElementSet) -> ElementSet {
        self.flats.iter().copied().find(|f| s.is_subset(*f)).unwrap_or(self.ground)
    }

    pub fn upper_covers(&self, f: ElementSet) -> Vec<ElementSet> {
        self.index_of(f).map(|i| self.upper[i].iter().map(|&j| self.flats[j]).collect()).unwrap_or_default()
    }

    /// Flats containing `f`, including `f` itself.
    pub fn flats_above(&self, f: ElementSet) -> Vec<ElementSet> {
        self.flats.iter().copied().filter(|g| f.is_subset(*g)).collect()
    }

    pub fn hyperplanes_above(&self, f: ElementSet) -> Vec<ElementSet> {
        self.hyperplanes().into_iter().filter(|h| f.is_subset(*h)).collect()
    }

    /// `rk(a) + rk(b) = rk(a ∧ b) + rk(a ∨ b)`.
    pub fn is_modular_pair(&self, a: ElementSet, b: ElementSet) -> bool {
        let r = |f| self.rank_of(f).expect("flat of this lattice");
        r(a) + r(b) == r(self.meet(a, b)) + r(self.join(a, b))
    }

    /// Exhaustive check that the lattice is atomistic and semimodular.
    pub fn is_geometric(&self) -> bool {
        let atoms = self.atoms();
        let atomistic = self.flats.iter().all(|&f| {
            let below = atoms.iter().filter(|a| a.is_subset(f)).fold(self.bottom(), |x, a| x.union(*a));
            self.closure(below) == f
        });
        let rank = |f| self.rank_of(f).unwrap_or(usize::MAX);
        let semimodular = self.flats.iter().all(|&a| {
            self.flats.iter().all(|&b| rank(a) + rank(b) >= rank(self.meet(a, b)) + rank(self.join(a, b)))
        });
        let meets_closed = self.flats.iter().all(|&a| self.flats.iter().all(|&b| self.contains(a.intersection(b))));
        atomistic && semimodular && meets_closed
    }

    /// Replaces every flat by the set of atoms below it.
    ///
    /// The result lives on the ground set `{0, .., #atoms − 1}` and has the
    /// empty set as bottom. The second component lists the atoms in index order.
    pub fn atomize(&self) -> (FlatLattice, Vec<ElementSet>) {
        let atoms = self.atoms();
        let masks = self.flats.iter().map(|&f| atom_mask(&atoms, f));
        (FlatLattice::from_flats(ElementSet::full(atoms.len()), masks), atoms)
    }
}

/// Indices of the atoms contained in `f`.
pub fn atom_mask(atoms: &[ElementSet], f: ElementSet) -> ElementSet {
    let mut m = ElementSet::EMPTY;
    for (i, a) in atoms.iter().enumerate() {
        if a.is_subset(f) {
            m.insert(i);
        }
    }
    m
}

/// An atom lattice together with distinguished families of flats (for
/// example a modular cut and a set of marks) to be preserved by isomorphisms.
#[derive(Clone, Debug)]
pub struct MarkedAtomLattice {
    pub atoms: usize,
    pub flats: Vec<ElementSet>,
    pub marks: Vec<Vec<ElementSet>>,
}

impl MarkedAtomLattice {
    pub fn new(lattice: &FlatLattice, marks: Vec<Vec<ElementSet>>) -> Self {
        MarkedAtomLattice { atoms: lattice.ground().len(), flats: lattice.flats().to_vec(), marks }
    }

    fn signature(&self) -> (usize, usize, Vec<usize>) {
        (self.atoms, self.flats.len(), self.marks.iter().map(|m| m.len()).collect())
    }

    /// Per-atom invariant: counts of containing flats by size and per mark family.
    fn atom_degrees(&self) -> Vec<Vec<usize>> {
        (0..self.atoms)
            .map(|a| {
                let mut d = vec![0usize; self.atoms + 1];
                for f in &self.flats {
                    if f.contains(a) {
                        d[f.len()] += 1;
                    }
                }
                for fam in &self.marks {
                    d.push(fam.iter().filter(|f| f.contains(a)).count());
                }
                d
            })
            .collect()
    }

    /// Calls `visit` with every atom bijection carrying flats onto flats and each
    /// mark family onto the corresponding family. Stops early when `visit` returns false.
    pub fn for_each_isomorphism<F: FnMut(&[usize]) -> bool>(&self, other: &MarkedAtomLattice, mut visit: F) {
        if self.signature() != other.signature() {
            return;
        }
        let da = self.atom_degrees();
        let db = other.atom_degrees();
        let target_flats: HashSet<ElementSet> = other.flats.iter().copied().collect();
        let target_marks: Vec<HashSet<ElementSet>> =
            other.marks.iter().map(|m| m.iter().copied().collect()).collect();
        // Flats whose largest atom is i are checked once atom i is placed.
        let mut checks: Vec<Vec<(ElementSet, Vec<bool>)>> = vec![Vec::new(); self.atoms];
        let mark_sets: Vec<HashSet<ElementSet>> = self.marks.iter().map(|m| m.iter().copied().collect()).collect();
        for &f in &self.flats {
            if let Some(top) = f.max() {
                let member = mark_sets.iter().map(|s| s.contains(&f)).collect();
                checks[top].push((f, member));
            }
        }
        let mut perm = vec![usize::MAX; self.atoms];
        let mut used = ElementSet::EMPTY;
        let mut stop = false;
        #[allow(clippy::too_many_arguments)]
        fn rec<F: FnMut(&[usize]) -> bool>(
            i: usize,
            n: usize,
            da: &[Vec<usize>],
            db: &[Vec<usize>],
            checks: &[Vec<(ElementSet, Vec<bool>)>],
            tf: &HashSet<ElementSet>,
            tm: &[HashSet<ElementSet>],
            perm: &mut Vec<usize>,
            used: &mut ElementSet,
            stop: &mut bool,
            visit: &mut F,
        ) {
            if *stop {
                return;
            }
            if i == n {
                if !visit(perm) {
                    *stop = true;
                }
                return;
            }
            for j in 0..n {
                if used.contains(j) || da[i] != db[j] {
                    continue;
                }
                perm[i] = j;
                let ok = checks[i].iter().all(|(f, member)| {
                    let g = f.map(perm);
                    tf.contains(&g) && member.iter().zip(tm).all(|(&m, s)| s.contains(&g) == m)
                });
                if ok {
                    used.insert(j);
                    rec(i + 1, n, da, db, checks, tf, tm, perm, used, stop, visit);
                    used.remove(j);
                    if *stop {
                        return;
                    }
                }
            }
            perm[i] = usize::MAX;
        }
        rec(
            0,
            self.atoms,
            &da,
            &db,
            &checks,
            &target_flats,
            &target_marks,
            &mut perm,
            &mut used,
            &mut stop,
            &mut visit,
        );
    }

    pub fn isomorphism_to(&self, other: &MarkedAtomLattice) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each_isomorphism(other, |p| {
            found = Some(p.to_vec());
            false
        });
        found
    }

    pub fn is_isomorphic(&self, other: &MarkedAtomLattice) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// The lexicographically least encoding over all atom relabelings:
    /// sorted flat bit patterns followed by each sorted mark family.
    pub fn canonical_key(&self) -> Vec<u64> {
        let n = self.atoms;
        let mut best: Option<Vec<u64>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        let encode = |perm: &[usize]| -> Vec<u64> {
            let mut out: Vec<u64> = self.flats.iter().map(|f| f.map(perm).0).collect();
            out.sort_unstable();
            for fam in &self.marks {
                out.push(u64::MAX);
                let mut v: Vec<u64> = fam.iter().map(|f| f.map(perm).0).collect();
                v.sort_unstable();
                out.extend(v);
            }
            out
        };
        // Heap's algorithm over all permutations.
        let mut c = vec![0usize; n];
        let consider = |perm: &[usize], best: &mut Option<Vec<u64>>| {
            let e = encode(perm);
            if best.as_ref().is_none_or(|b| e < *b) {
                *best = Some(e);
            }
        };
        consider(&perm, &mut best);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                consider(&perm, &mut best);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        let mut key = vec![n as u64];
        key.extend(best.unwrap_or_default());
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::catalog;

    fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_elements(v.iter().copied())
    }

    #[test]
    fn fano_lattice_shape() {
        let l = catalog::fano().lattice().clone();
        assert_eq!(l.rank(), 3);
        assert_eq!(l.len(), 1 + 7 + 7 + 1);
        assert!(l.is_geometric());
        assert_eq!(l.join(set(&[0]), set(&[1])), set(&[0, 1, 6]));
        assert_eq!(l.upper_covers(ElementSet::EMPTY).len(), 7);
        assert_eq!(l.upper_covers(set(&[0])).len(), 3);
    }

    #[test]
    fn catalog_lattices_are_geometric() {
        for name in catalog::small_catalog_names() {
            let m = catalog::by_name(&name).unwrap();
            assert!(m.lattice().is_geometric(), "{name}");
        }
    }

    #[test]
    fn from_flats_matches_matroid_construction() {
        let m = catalog::mk4();
        let l = m.lattice();
        let l2 = FlatLattice::from_flats(m.ground(), l.flats().iter().copied());
        assert_eq!(l.flats(), l2.flats());
        for &f in l.flats() {
            assert_eq!(l.upper_covers(f), l2.upper_covers(f));
        }
    }

    #[test]
    fn parallel_class_atomizes() {
        let m = catalog::by_name("U~2,3").unwrap();
        let (a, atoms) = m.lattice().atomize();
        assert_eq!(atoms.len(), 3);
        assert_eq!(a.len(), 5);
        let u23 = catalog::uniform(2, 3);
        let ma = MarkedAtomLattice::new(&a, vec![]);
        let mb = MarkedAtomLattice::new(u23.lattice(), vec![]);
        assert!(ma.is_isomorphic(&mb));
    }

    #[test]
    fn isomorphism_respects_marks() {
        let l = catalog::uniform(2, 3).lattice().clone();
        let a = MarkedAtomLattice::new(&l, vec![vec![set(&[0])]]);
        let b = MarkedAtomLattice::new(&l, vec![vec![set(&[2])]]);
        let p = a.isomorphism_to(&b).unwrap();
        assert_eq!(p[0], 2);
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = MarkedAtomLattice::new(&l, vec![vec![set(&[0, 1, 2])]]);
        assert!(!a.is_isomorphic(&c));
        assert_ne!(a.canonical_key(), c.canonical_key());
    }

    #[test]
    fn automorphism_counts() {
        let count = |m: &Matroid| {
            let a = MarkedAtomLattice::new(m.lattice(), vec![]);
            let mut k = 0;
            a.for_each_isomorphism(&a, |_| {
                k += 1;
                true
            });
            k
        };
        assert_eq!(count(&catalog::fano()), 168);
        assert_eq!(count(&catalog::uniform(2, 4)), 24);
        assert_eq!(count(&catalog::mk4()), 24);
    }

    #[test]
    fn fano_minus_point_is_mk4() {
        let (m, _) = catalog::fano()
            .minor(&crate::matroid::MinorSpec { contract: ElementSet::EMPTY, delete: set(&[6]) })
            .unwrap();
        let a = MarkedAtomLattice::new(m.lattice(), vec![]);
        let b = MarkedAtomLattice::new(catalog::mk4().lattice(), vec![]);
        assert!(a.is_isomorphic(&b));
        // Oracle: M(K4) has 4 three-point lines and 3 two-point lines.
        let sizes = |m: &Matroid| {
            let mut v: Vec<usize> = m.hyperplanes().iter().map(|h| h.len()).collect();
            v.sort();
            v
        };
        assert_eq!(sizes(&m), vec![2, 2, 2, 3, 3, 3, 3]);
    }
}
