//! Finite simplicial complexes and their integral homology.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::smith::{smith_normal_form, IntegerMatrix};

/// A simplicial complex on labelled vertices `0..labels.len()`.
///
/// Faces are stored as sorted vertex lists, closed under taking subsets,
/// grouped by dimension. The empty face is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// The downward closure of the given faces.
    pub fn from_facets(labels: Vec<String>, facets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            assert!(f.iter().all(|&v| v < labels.len()), "vertex out of range");
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                all.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
            }
        }
        for v in 0..labels.len() {
            all.insert(vec![v]);
        }
        Self::from_closed(labels, all)
    }

    fn from_closed(labels: Vec<String>, all: BTreeSet<Vec<usize>>) -> Self {
        let dim = all.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut faces = vec![Vec::new(); dim];
        for f in all {
            faces[f.len() - 1].push(f);
        }
        SimplicialComplex { labels, faces }
    }

    /// The order complex of a finite poset: faces are the chains.
    ///
    /// `less(i, j)` must be a strict partial order on `0..labels.len()`.
    pub fn order_complex(labels: Vec<String>, less: impl Fn(usize, usize) -> bool) -> Self {
        let n = labels.len();
        let above: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| less(i, j)).collect()).collect();
        let mut all = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty chain");
            for &j in &above[last] {
                let mut c = chain.clone();
                c.push(j);
                stack.push(c);
            }
            let mut sorted = chain;
            sorted.sort_unstable();
            all.insert(sorted);
        }
        Self::from_closed(labels, all)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Dimension, with `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Faces of dimension `k`, each a sorted vertex list.
    pub fn faces(&self, k: usize) -> &[Vec<usize>] {
        self.faces.get(k).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Face counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|v| v.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// The boundary map from `k`-faces to `(k-1)`-faces, with rows indexed by
    /// `(k-1)`-faces and columns by `k`-faces. Sign `(-1)^i` for dropping the
    /// `i`-th vertex in the global vertex order.
    pub fn boundary(&self, k: usize) -> IntegerMatrix {
        if k == 0 {
            return IntegerMatrix::zeros(0, self.faces(0).len());
        }
        let lower = self.faces(k - 1);
        let upper = self.faces(k);
        let index: HashMap<&[usize], usize> = lower.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let mut m = IntegerMatrix::zeros(lower.len(), upper.len());
        for (j, f) in upper.iter().enumerate() {
            for i in 0..f.len() {
                let mut g = f.clone();
                g.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(index[g.as_slice()], j, sign);
            }
        }
        m
    }

    /// `H_k(K, Z)` for `0 <= k <= dim K`.
    pub fn homology(&self, k: usize) -> Result<HomologyGroup> {
        if k as isize > self.dim() {
            return Err(Error::DegreeOutOfRange { k, dim: self.dim() });
        }
        Ok(self.homology_unchecked(k))
    }

    /// `H_k(K, Z)` for every `k`, reading groups above the dimension as zero.
    pub fn homology_or_zero(&self, k: usize) -> HomologyGroup {
        if k as isize > self.dim() {
            return HomologyGroup { degree: k, rank: 0, torsion: Vec::new() };
        }
        self.homology_unchecked(k)
    }

    /// All groups `H_0 .. H_dim`.
    pub fn homology_all(&self) -> Vec<HomologyGroup> {
        let d = self.faces.len();
        let snfs: Vec<Vec<BigInt>> = (0..=d).map(|k| smith_normal_form(&self.boundary(k))).collect();
        (0..d).map(|k| group_from(k, self.faces(k).len(), &snfs[k], &snfs[k + 1])).collect()
    }

    fn homology_unchecked(&self, k: usize) -> HomologyGroup {
        let dk = smith_normal_form(&self.boundary(k));
        let dk1 = smith_normal_form(&self.boundary(k + 1));
        group_from(k, self.faces(k).len(), &dk, &dk1)
    }

    /// The complex with vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabeled(&self, perm: &[usize]) -> SimplicialComplex {
        let mut labels = vec![String::new(); self.labels.len()];
        for (v, l) in self.labels.iter().enumerate() {
            labels[perm[v]] = l.clone();
        }
        let all: BTreeSet<Vec<usize>> = self
            .faces
            .iter()
            .flatten()
            .map(|f| {
                let mut g: Vec<usize> = f.iter().map(|&v| perm[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        Self::from_closed(labels, all)
    }

    /// One face per line, vertices given by label.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for level in &self.faces {
            for f in level {
                let names: Vec<&str> = f.iter().map(|&v| self.labels[v].as_str()).collect();
                out.push_str(&names.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

fn group_from(k: usize, ck: usize, dk: &[BigInt], dk1: &[BigInt]) -> HomologyGroup {
    let rank = ck - dk.len() - dk1.len();
    let torsion = dk1.iter().filter(|d| !d.is_one()).cloned().collect();
    HomologyGroup { degree: k, rank, torsion }
}

/// `Z^rank ⊕ Z/d1 ⊕ Z/d2 ⊕ ...` in degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// True for the free group of the given rank.
    pub fn is_free_of_rank(&self, r: usize) -> bool {
        self.rank == r && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
