//! Tutte constellations: a matroid with a modular cut and optional marks on
//! decomposable corank-2 flats, together with Tutte graphs and Tutte paths.

pub mod classify;
pub mod cut;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

pub use classify::{classify_elementary, Classification, ElementaryTemplate};
pub use cut::{
    all_modular_cuts, check_linear_subclass, complete_linear_subclass, cut_of_extension, extend_by_cut,
    linear_subclasses, ModularCut,
};

/// A matroid with a modular cut `Γ` and marks `Θ`.
#[derive(Clone, Debug)]
pub struct Constellation {
    matroid: Matroid,
    cut: ModularCut,
    marks: Vec<ElementSet>,
}

impl Constellation {
    /// Marks must be decomposable corank-2 flats outside the cut.
    pub fn new(matroid: Matroid, cut: ModularCut, marks: Vec<ElementSet>) -> Result<Self> {
        let mut marks = marks;
        marks.sort();
        marks.dedup();
        for &l in &marks {
            if matroid.lattice().corank_of(l) != Some(2) {
                return Err(Error::InvalidMarks(format!("{l:?} is not a corank-2 flat")));
            }
            if cut.contains(l) {
                return Err(Error::InvalidMarks(format!("{l:?} lies in the cut")));
            }
            if matroid.hyperplanes_above(l) >= 3 {
                return Err(Error::InvalidMarks(format!("{l:?} is indecomposable")));
            }
        }
        Ok(Constellation { matroid, cut, marks })
    }

    /// The constellation `(Λ_M, {E})` without marks.
    pub fn trivial(matroid: Matroid) -> Self {
        let cut = ModularCut::trivial(&matroid);
        Constellation { matroid, cut, marks: Vec::new() }
    }

    pub fn with_cut(matroid: Matroid, cut: ModularCut) -> Self {
        Constellation { matroid, cut, marks: Vec::new() }
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn cut(&self) -> &ModularCut {
        &self.cut
    }

    pub fn marks(&self) -> &[ElementSet] {
        &self.marks
    }

    pub fn is_marked(&self, l: ElementSet) -> bool {
        self.marks.contains(&l)
    }

    /// A corank-2 flat may join two consecutive path terms iff it lies in at
    /// least three hyperplanes or carries a mark.
    pub fn is_edge_flat(&self, l: ElementSet) -> bool {
        let lat = self.matroid.lattice();
        lat.corank_of(l) == Some(2) && (lat.hyperplanes_above(l).len() >= 3 || self.is_marked(l))
    }

    /// Hyperplanes not in the cut.
    pub fn free_hyperplanes(&self) -> Vec<ElementSet> {
        self.matroid.hyperplanes().into_iter().filter(|h| !self.cut.contains(*h)).collect()
    }
}

/// Hyperplanes off the cut, joined when they meet in an admissible corank-2 flat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteGraph {
    pub vertices: Vec<ElementSet>,
    /// Edges `(i, j, H_i ∩ H_j)` with `i < j`.
    pub edges: Vec<(usize, usize, ElementSet)>,
}

impl TutteGraph {
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b, _)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect();
        v.sort();
        v
    }

    /// Connected components as sorted vertex index lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        q.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// At most one component; the graph without vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub fn tutte_graph(tau: &Constellation) -> TutteGraph {
    let vertices = tau.free_hyperplanes();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let l = vertices[i].intersection(vertices[j]);
            if tau.is_edge_flat(l) {
                edges.push((i, j, l));
            }
        }
    }
    TutteGraph { vertices, edges }
}

/// A sequence of hyperplanes in which consecutive terms meet in admissible corank-2 flats.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TuttePath {
    pub terms: Vec<ElementSet>,
}

impl TuttePath {
    pub fn new(terms: Vec<ElementSet>) -> Self {
        TuttePath { terms }
    }

    pub fn is_closed(&self) -> bool {
        self.terms.len() >= 2 && self.terms.first() == self.terms.last() || self.terms.len() == 1
    }

    pub fn is_off(&self, cut: &ModularCut) -> bool {
        self.terms.iter().all(|h| !cut.contains(*h))
    }

    pub fn is_on(&self, f: ElementSet) -> bool {
        self.terms.iter().all(|h| f.is_subset(*h))
    }

    /// Intersection of all terms.
    pub fn carrier(&self) -> ElementSet {
        self.terms.iter().copied().reduce(|a, b| a.intersection(b)).unwrap_or(ElementSet::EMPTY)
    }

    /// Checks the Tutte-path conditions in `tau`.
    pub fn validate(&self, tau: &Constellation) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::InvalidPath("empty path".into()));
        }
        let hyps = tau.matroid().hyperplanes();
        for h in &self.terms {
            if !hyps.contains(h) {
                return Err(Error::NotAHyperplane(*h));
            }
        }
        for w in self.terms.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidPath(format!("repeated consecutive term {:?}", w[0])));
            }
            let l = w[0].intersection(w[1]);
            if !tau.is_edge_flat(l) {
                return Err(Error::InvalidPath(format!("{:?} and {:?} meet in the inadmissible flat {l:?}", w[0], w[1])));
            }
        }
        Ok(())
    }

    /// Validates a closed path off the cut.
    pub fn validate_closed_off_cut(&self, tau: &Constellation) -> Result<()> {
        self.validate(tau)?;
        if !self.is_closed() {
            return Err(Error::InvalidPath("path is not closed".into()));
        }
        if let Some(h) = self.terms.iter().find(|h| tau.cut().contains(**h)) {
            return Err(Error::InvalidPath(format!("term {h:?} lies in the cut")));
        }
        Ok(())
    }
}

/// A shortest Tutte path on `f` from `x` to `y` avoiding the cut.
pub fn find_tutte_path(tau: &Constellation, f: ElementSet, x: ElementSet, y: ElementSet) -> Result<TuttePath> {
    let m = tau.matroid();
    if !m.is_flat(f) {
        return Err(Error::NotAFlat(f));
    }
    if f == m.ground() {
        return Err(Error::FlatIsGroundSet);
    }
    if !m.is_indecomposable_flat(f)? {
        return Err(Error::DecomposableFlat(f));
    }
    let hyps = m.hyperplanes();
    for h in [x, y] {
        if !hyps.contains(&h) {
            return Err(Error::NotAHyperplane(h));
        }
        if !f.is_subset(h) {
            return Err(Error::NotOnFlat { hyperplane: h, flat: f });
        }
        if tau.cut().contains(h) {
            return Err(Error::EndpointInCut(h));
        }
    }
    if x == y {
        return Ok(TuttePath::new(vec![x]));
    }
    let verts: Vec<ElementSet> =
        hyps.into_iter().filter(|h| f.is_subset(*h) && !tau.cut().contains(*h)).collect();
    let idx = |h: ElementSet| verts.iter().position(|v| *v == h).expect("vertex");
    let (s, t) = (idx(x), idx(y));
    let mut prev = vec![usize::MAX; verts.len()];
    prev[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        if v == t {
            break;
        }
        for w in 0..verts.len() {
            if prev[w] == usize::MAX && w != v && tau.is_edge_flat(verts[v].intersection(verts[w])) {
                prev[w] = v;
                q.push_back(w);
            }
        }
    }
    if prev[t] == usize::MAX {
        return Err(Error::PathTheoremViolated { from: x, to: y });
    }
    let mut path = vec![verts[t]];
    let mut v = t;
    while v != s {
        v = prev[v];
        path.push(verts[v]);
    }
    path.reverse();
    Ok(TuttePath::new(path))
}
