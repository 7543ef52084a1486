//! Matroids given by explicit basis lists.
//!
//! Ranks and closures are derived from the basis family, the lattice of
//! flats is built bottom up and cached, and minors, duals and direct sums
//! produce new basis lists.

pub mod catalog;
pub mod format;
pub mod lattice;
pub mod minors;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{k_subsets, ElementSet, MAX_ELEMENTS};

pub use lattice::FlatLattice;
pub use minors::{has_minor, upper_sublattices_of_type, MinorSpec, SublatticeEmbedding};

/// A flat together with its rank and corank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Flat {
    pub elements: ElementSet,
    pub rank: usize,
    pub corank: usize,
}

/// A matroid on `{0, .., n-1}` stored by its bases.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<ElementSet>,
    basis_set: HashSet<ElementSet>,
    name: Option<String>,
    lattice: OnceLock<FlatLattice>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases.len())
            .finish()
    }
}

impl Matroid {
    /// Validates a basis family and builds the matroid.
    ///
    /// Duplicate bases are merged. The exchange axiom is checked on every
    /// ordered pair of distinct bases; the first failure is reported with
    /// its witness.
    pub fn from_bases<I>(n: usize, bases: I) -> Result<Matroid>
    where
        I: IntoIterator<Item = ElementSet>,
    {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut list: Vec<ElementSet> = bases.into_iter().collect();
        if list.is_empty() {
            return Err(Error::EmptyBasisList);
        }
        let ground = ElementSet::full(n);
        for b in &list {
            if !b.is_subset(ground) {
                let element = b.difference(ground).min().unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
        }
        let r = list[0].len();
        if let Some(other) = list.iter().find(|b| b.len() != r) {
            return Err(Error::UnequalBasisSizes { first: list[0], other: *other });
        }
        list.sort();
        list.dedup();
        let m = Matroid::from_bases_trusted(n, list);
        m.check_exchange()?;
        Ok(m)
    }

    /// Builds a matroid from a basis family that is already known to be valid.
    pub(crate) fn from_bases_trusted(n: usize, mut bases: Vec<ElementSet>) -> Matroid {
        bases.sort();
        bases.dedup();
        let rank = bases.first().map(|b| b.len()).unwrap_or(0);
        let basis_set = bases.iter().copied().collect();
        Matroid { n, rank, bases, basis_set, name: None, lattice: OnceLock::new() }
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                for e in b1.difference(b2).iter() {
                    let ok = b2
                        .difference(b1)
                        .iter()
                        .any(|f| self.is_basis(b1.without(e).with(f)));
                    if !ok {
                        return Err(Error::ExchangeViolation { b1, b2, e });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Name if present, otherwise a short structural description.
    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("M(n={}, r={}, {} bases)", self.n, self.rank, self.bases.len()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn is_basis(&self, s: ElementSet) -> bool {
        self.basis_set.contains(&s)
    }

    fn check_range(&self, s: ElementSet) -> Result<()> {
        if s.is_subset(self.ground()) {
            Ok(())
        } else {
            let element = s.difference(self.ground()).min().unwrap_or(0);
            Err(Error::ElementOutOfRange { element, n: self.n })
        }
    }

    /// Rank as the largest overlap with a basis.
    pub fn rank_of(&self, s: ElementSet) -> usize {
        self.bases.iter().map(|b| b.intersection(s).len()).max().unwrap_or(0)
    }

    /// Rank computed by greedily growing an independent subset of `s`.
    pub fn rank_greedy(&self, s: ElementSet) -> usize {
        let mut indep = ElementSet::EMPTY;
        for e in s.iter() {
            let t = indep.with(e);
            if self.is_independent(t) {
                indep = t;
            }
        }
        indep.len()
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        self.bases.iter().any(|b| s.is_subset(*b))
    }

    /// Lexicographically least maximal independent subset of `s`.
    pub fn basis_of(&self, s: ElementSet) -> ElementSet {
        let mut indep = ElementSet::EMPTY;
        for e in s.iter() {
            let t = indep.with(e);
            if self.is_independent(t) {
                indep = t;
            }
        }
        indep
    }

    /// The smallest flat containing `s`.
    pub fn closure(&self, s: ElementSet) -> Result<ElementSet> {
        self.check_range(s)?;
        Ok(self.closure_unchecked(s))
    }

    pub(crate) fn closure_unchecked(&self, s: ElementSet) -> ElementSet {
        let r = self.rank_of(s);
        let mut out = s;
        for e in self.ground().difference(s).iter() {
            if self.rank_of(s.with(e)) == r {
                out.insert(e);
            }
        }
        out
    }

    pub fn is_flat(&self, s: ElementSet) -> bool {
        s.is_subset(self.ground()) && self.closure_unchecked(s) == s
    }

    pub fn flat(&self, s: ElementSet) -> Result<Flat> {
        if !self.is_flat(s) {
            return Err(Error::NotAFlat(s));
        }
        let rank = self.rank_of(s);
        Ok(Flat { elements: s, rank, corank: self.rank - rank })
    }

    /// The lattice of flats, computed on first use.
    pub fn lattice(&self) -> &FlatLattice {
        self.lattice.get_or_init(|| FlatLattice::of_matroid(self))
    }

    /// All flats of corank `d`, sorted by element sets.
    pub fn flats_of_corank(&self, d: usize) -> Result<Vec<Flat>> {
        if d > self.rank {
            return Err(Error::CorankOutOfRange { d, r: self.rank });
        }
        let rank = self.rank - d;
        Ok(self
            .lattice()
            .flats_of_rank(rank)
            .into_iter()
            .map(|elements| Flat { elements, rank, corank: d })
            .collect())
    }

    /// Hyperplanes sorted by element sets.
    pub fn hyperplanes(&self) -> Vec<ElementSet> {
        if self.rank == 0 {
            return Vec::new();
        }
        self.lattice().flats_of_rank(self.rank - 1)
    }

    pub fn loops(&self) -> ElementSet {
        let union = self.bases.iter().fold(ElementSet::EMPTY, |a, b| a.union(*b));
        self.ground().difference(union)
    }

    pub fn coloops(&self) -> ElementSet {
        self.bases.iter().fold(self.ground(), |a, b| a.intersection(*b))
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.coloops().contains(e)
    }

    /// No loops and no parallel pairs.
    pub fn is_simple(&self) -> bool {
        self.loops().is_empty() && k_subsets(self.n, 2).into_iter().all(|p| self.is_independent(p))
    }

    /// The dual matroid: bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        let mut m = Matroid::from_bases_trusted(self.n, self.bases.iter().map(|b| g.difference(*b)).collect());
        if let Some(name) = &self.name {
            m.name = Some(if let Some(stripped) = name.strip_suffix('*') {
                stripped.to_string()
            } else {
                format!("{name}*")
            });
        }
        m
    }

    /// Direct sum; the elements of `other` are shifted by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for b1 in &self.bases {
            for b2 in &other.bases {
                bases.push(ElementSet(b1.0 | b2.0 << self.n));
            }
        }
        let mut m = Matroid::from_bases_trusted(n, bases);
        if let (Some(a), Some(b)) = (&self.name, &other.name) {
            m.name = Some(format!("{a}+{b}"));
        }
        Ok(m)
    }

    /// Relabels elements by `perm` (element `e` becomes `perm[e]`).
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        let mut m = Matroid::from_bases_trusted(self.n, self.bases.iter().map(|b| b.map(perm)).collect());
        m.name = self.name.clone();
        m
    }

    /// All circuits (minimal dependent sets).
    pub fn circuits(&self) -> Vec<ElementSet> {
        let mut out = Vec::new();
        for size in 1..=self.rank + 1 {
            for c in k_subsets(self.n, size) {
                if self.is_independent(c) {
                    continue;
                }
                if c.iter().all(|e| self.is_independent(c.without(e))) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Connected components: classes of the relation "some circuit contains
    /// both elements", with loops and coloops as singleton classes.
    pub fn components(&self) -> Vec<ElementSet> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for c in self.circuits() {
            let v = c.to_vec();
            for w in v.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut comps: Vec<ElementSet> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            match root_of[r] {
                Some(i) => comps[i].insert(e),
                None => {
                    root_of[r] = Some(comps.len());
                    comps.push(ElementSet::singleton(e));
                }
            }
        }
        comps
    }

    /// True iff the matroid is not a nontrivial direct sum; the empty matroid counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connectivity together with the component partition.
    pub fn connectivity(&self) -> (bool, Vec<ElementSet>) {
        let comps = self.components();
        (comps.len() <= 1, comps)
    }

    /// The contraction `M/F` of a flat, on the ground set `E − F`.
    pub fn contract_flat(&self, f: ElementSet) -> Result<Matroid> {
        if !self.is_flat(f) {
            return Err(Error::NotAFlat(f));
        }
        let i = self.basis_of(f);
        let spec = MinorSpec { contract: i, delete: f.difference(i) };
        Ok(self.minor(&spec)?.0)
    }

    /// A flat is indecomposable iff the contraction `M/F` is connected.
    pub fn is_indecomposable_flat(&self, f: ElementSet) -> Result<bool> {
        Ok(self.contract_flat(f)?.is_connected())
    }

    /// Number of hyperplanes containing `f`.
    pub fn hyperplanes_above(&self, f: ElementSet) -> usize {
        self.hyperplanes().iter().filter(|h| f.is_subset(**h)).count()
    }

    /// Embedded minor `M/I\J`, relabeled onto `{0, .., n − |I| − |J| − 1}`.
    /// Returns the minor and the map from new labels to old labels.
    pub fn minor(&self, spec: &MinorSpec) -> Result<(Matroid, Vec<usize>)> {
        self.check_range(spec.contract)?;
        self.check_range(spec.delete)?;
        if !spec.contract.is_disjoint(spec.delete) {
            return Err(Error::OverlappingMinor { contract: spec.contract, delete: spec.delete });
        }
        if !self.is_independent(spec.contract) {
            return Err(Error::DependentContraction(spec.contract));
        }
        if self.rank_of(self.ground().difference(spec.delete)) != self.rank {
            return Err(Error::NotCoindependent(spec.delete));
        }
        let keep: Vec<usize> = self.ground().difference(spec.contract.union(spec.delete)).to_vec();
        let mut new_label = vec![usize::MAX; self.n];
        for (i, &e) in keep.iter().enumerate() {
            new_label[e] = i;
        }
        let bases = self
            .bases
            .iter()
            .filter(|b| spec.contract.is_subset(**b) && b.is_disjoint(spec.delete))
            .map(|b| b.difference(spec.contract).map(&new_label))
            .collect();
        Ok((Matroid::from_bases_trusted(keep.len(), bases), keep))
    }

    pub fn delete(&self, j: ElementSet) -> Result<Matroid> {
        Ok(self.minor(&MinorSpec { contract: ElementSet::EMPTY, delete: j })?.0)
    }

    pub fn contract(&self, i: ElementSet) -> Result<Matroid> {
        Ok(self.minor(&MinorSpec { contract: i, delete: ElementSet::EMPTY })?.0)
    }

    /// An element bijection `perm` with `perm(B)` a basis of `other` for every basis `B`.
    pub fn isomorphism_to(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.n != other.n || self.rank != other.rank || self.bases.len() != other.bases.len() {
            return None;
        }
        let deg = |m: &Matroid| -> Vec<usize> {
            (0..m.n).map(|e| m.bases.iter().filter(|b| b.contains(e)).count()).collect()
        };
        let (da, db) = (deg(self), deg(other));
        let mut perm = vec![usize::MAX; self.n];
        let mut used = ElementSet::EMPTY;
        fn rec(
            a: &Matroid,
            b: &Matroid,
            da: &[usize],
            db: &[usize],
            i: usize,
            perm: &mut Vec<usize>,
            used: &mut ElementSet,
        ) -> bool {
            if i == a.n {
                return a.bases.iter().all(|x| b.is_basis(x.map(perm)));
            }
            for j in 0..b.n {
                if used.contains(j) || da[i] != db[j] {
                    continue;
                }
                perm[i] = j;
                used.insert(j);
                // Bases within the assigned prefix must map to independent sets.
                let prefix = ElementSet::full(i + 1);
                let ok = a.bases.iter().all(|x| {
                    let part = x.intersection(prefix);
                    b.is_independent(part.map(perm))
                });
                if ok && rec(a, b, da, db, i + 1, perm, used) {
                    return true;
                }
                used.remove(j);
            }
            perm[i] = usize::MAX;
            false
        }
        if rec(self, other, &da, &db, 0, &mut perm, &mut used) {
            Some(perm)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::catalog;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> ElementSet {
        ElementSet::from_elements(v.iter().copied())
    }

    #[test]
    fn uniform_from_bases() {
        let m = Matroid::from_bases(4, k_subsets(4, 2)).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.bases().len(), 6);
    }

    #[test]
    fn c5_from_bases() {
        let bases: Vec<_> = k_subsets(5, 3).into_iter().filter(|b| *b != set(&[0, 1, 2])).collect();
        let m = Matroid::from_bases(5, bases).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bases().len(), 9);
        assert_eq!(m.closure(set(&[0, 1])).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn unequal_sizes_rejected() {
        let err = Matroid::from_bases(3, [set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]).unwrap_err();
        assert!(matches!(err, Error::UnequalBasisSizes { .. }));
    }

    #[test]
    fn exchange_violation_reported() {
        // {0,1} and {2,3} alone violate exchange.
        let err = Matroid::from_bases(4, [set(&[0, 1]), set(&[2, 3])]).unwrap_err();
        assert!(matches!(err, Error::ExchangeViolation { .. }));
    }

    #[test]
    fn out_of_range_rejected() {
        let err = Matroid::from_bases(2, [set(&[0, 3])]).unwrap_err();
        assert_eq!(err, Error::ElementOutOfRange { element: 3, n: 2 });
        let m = catalog::uniform(2, 4);
        assert!(m.closure(set(&[7])).is_err());
    }

    #[test]
    fn fano_closure_and_hyperplanes() {
        let f7 = catalog::fano();
        // {1,2} -> {1,2,7} in one-based labels.
        assert_eq!(f7.closure(set(&[0, 1])).unwrap(), set(&[0, 1, 6]));
        let hyp: Vec<String> = f7
            .flats_of_corank(1)
            .unwrap()
            .iter()
            .map(|f| f.elements.iter().map(|e| (e + 1).to_string()).collect())
            .collect();
        assert_eq!(hyp, vec!["127", "135", "146", "236", "245", "347", "567"]);
    }

    #[test]
    fn c5_dual_closure_and_hyperplanes() {
        let c5d = catalog::c5().dual();
        assert_eq!(c5d.closure(set(&[3])).unwrap(), set(&[3, 4]));
        let hyp: Vec<ElementSet> = c5d.hyperplanes();
        assert_eq!(hyp, vec![set(&[0]), set(&[1]), set(&[2]), set(&[3, 4])]);
    }

    #[test]
    fn mk4_hyperplanes() {
        let m = catalog::mk4();
        let mut hyp: Vec<String> = m
            .hyperplanes()
            .iter()
            .map(|h| h.iter().map(|e| (e + 1).to_string()).collect())
            .collect();
        hyp.sort();
        let mut expect = vec!["126", "135", "234", "14", "25", "36", "456"];
        expect.sort();
        assert_eq!(hyp, expect);
    }

    #[test]
    fn corank_out_of_range() {
        assert!(matches!(
            catalog::uniform(2, 4).flats_of_corank(3),
            Err(Error::CorankOutOfRange { d: 3, r: 2 })
        ));
    }

    #[test]
    fn uniform_hyperplanes_are_singletons() {
        let u = catalog::uniform(2, 4);
        let h: Vec<_> = u.flats_of_corank(1).unwrap().into_iter().map(|f| f.elements).collect();
        assert_eq!(h, (0..4).map(ElementSet::singleton).collect::<Vec<_>>());
    }

    #[test]
    fn minors_and_duals() {
        let u35 = catalog::uniform(3, 5);
        let (m, map) = u35.minor(&MinorSpec { contract: ElementSet::EMPTY, delete: set(&[4]) }).unwrap();
        assert_eq!(m, catalog::uniform(3, 4));
        assert_eq!(map, vec![0, 1, 2, 3]);
        let id = u35.minor(&MinorSpec::default()).unwrap().0;
        assert_eq!(id, u35);
        assert_eq!(catalog::uniform(2, 5).dual(), catalog::uniform(3, 5));
        let f7 = catalog::fano();
        assert_eq!(f7.dual().dual(), f7);
        assert!(matches!(
            u35.minor(&MinorSpec { contract: set(&[0, 1, 2, 3]), delete: ElementSet::EMPTY }),
            Err(Error::DependentContraction(_))
        ));
        let u22 = catalog::uniform(2, 2);
        assert!(matches!(
            u22.minor(&MinorSpec { contract: ElementSet::EMPTY, delete: set(&[0]) }),
            Err(Error::NotCoindependent(_))
        ));
    }

    #[test]
    fn connectivity_examples() {
        assert!(catalog::uniform(2, 4).is_connected());
        let s = catalog::uniform(2, 3).direct_sum(&catalog::uniform(1, 1)).unwrap();
        let (conn, comps) = s.connectivity();
        assert!(!conn);
        assert_eq!(comps, vec![set(&[0, 1, 2]), set(&[3])]);
        assert!(catalog::fano().is_connected());
    }

    #[test]
    fn indecomposable_flats() {
        let u24 = catalog::uniform(2, 4);
        assert!(u24.is_indecomposable_flat(ElementSet::EMPTY).unwrap());
        // In U3,4 (three-point-free) a corank-2 flat {0} lies in 3 hyperplanes.
        let u34 = catalog::uniform(3, 4);
        assert!(u34.is_indecomposable_flat(set(&[0])).unwrap());
        // U2,3 + U1,1: the corank-2 flat {} ... take U2,2: the empty flat lies in 2 hyperplanes.
        let u22 = catalog::uniform(2, 2);
        assert!(!u22.is_indecomposable_flat(ElementSet::EMPTY).unwrap());
        let k23 = catalog::mk23();
        // {1,4} one-based -> {0,3}.
        assert!(!k23.is_indecomposable_flat(set(&[0, 3])).unwrap());
        assert!(k23.is_indecomposable_flat(set(&[0, 1])).unwrap());
        assert!(k23.is_indecomposable_flat(set(&[0, 5])).is_ok());
        assert!(k23.is_indecomposable_flat(set(&[0, 1, 2, 3])).is_err());
    }

    #[test]
    fn ground_and_hyperplanes_indecomposable_for_connected() {
        for name in ["U2,4", "F7", "C5", "MK4", "MK23", "U3,5"] {
            let m = catalog::by_name(name).unwrap();
            assert!(m.is_connected());
            assert!(m.is_indecomposable_flat(m.closure(ElementSet::EMPTY).unwrap()).unwrap());
            assert!(m.is_indecomposable_flat(m.ground()).unwrap());
            for h in m.hyperplanes() {
                assert!(m.is_indecomposable_flat(h).unwrap(), "{name} {h:?}");
            }
        }
    }

    #[test]
    fn corank_two_criterion_agrees() {
        for name in catalog::small_catalog_names() {
            let m = catalog::by_name(&name).unwrap();
            if m.rank() < 2 {
                continue;
            }
            for f in m.flats_of_corank(2).unwrap() {
                let by_contraction = m.is_indecomposable_flat(f.elements).unwrap();
                let by_count = m.hyperplanes_above(f.elements) >= 3;
                assert_eq!(by_contraction, by_count, "{name} {:?}", f.elements);
            }
        }
    }

    #[test]
    fn isomorphism_between_relabelings() {
        let f7 = catalog::fano();
        let perm = vec![3, 5, 0, 6, 1, 4, 2];
        let g = f7.relabel(&perm);
        let p = f7.isomorphism_to(&g).unwrap();
        assert!(f7.bases().iter().all(|b| g.is_basis(b.map(&p))));
        assert!(catalog::uniform(2, 4).isomorphism_to(&catalog::uniform(2, 3).direct_sum(&catalog::uniform(0, 1)).unwrap()).is_none());
    }

    fn arb_catalog() -> impl Strategy<Value = Matroid> {
        let names = catalog::small_catalog_names();
        (0..names.len()).prop_map(move |i| catalog::by_name(&names[i]).unwrap())
    }

    proptest! {
        #[test]
        fn rank_routes_agree(m in arb_catalog(), bits in 0u64..256) {
            let s = ElementSet(bits).intersection(m.ground());
            prop_assert_eq!(m.rank_of(s), m.rank_greedy(s));
        }

        #[test]
        fn closure_is_idempotent_and_extensive(m in arb_catalog(), bits in 0u64..256) {
            let s = ElementSet(bits).intersection(m.ground());
            let c = m.closure(s).unwrap();
            prop_assert!(s.is_subset(c));
            prop_assert_eq!(m.closure(c).unwrap(), c);
            prop_assert_eq!(m.rank_of(c), m.rank_of(s));
        }

        #[test]
        fn dual_is_involution(m in arb_catalog()) {
            prop_assert_eq!(m.dual().dual(), m);
        }

        #[test]
        fn minor_of_dual_is_dual_of_complementary_minor(m in arb_catalog(), pick in 0u64..256, split in 0u64..256) {
            // Choose I independent in M and J coindependent, then check (M/I\J)* = M*/J\I.
            let g = m.ground();
            let cand = ElementSet(pick).intersection(g);
            let i = m.basis_of(cand.intersection(ElementSet(split)));
            let rest = cand.difference(i);
            let dual = m.dual();
            let j = dual.basis_of(rest);
            let spec = MinorSpec { contract: i, delete: j };
            let cospec = MinorSpec { contract: j, delete: i };
            let a = m.minor(&spec).unwrap().0.dual();
            let b = dual.minor(&cospec).unwrap().0;
            prop_assert_eq!(a, b);
        }
    }
}
