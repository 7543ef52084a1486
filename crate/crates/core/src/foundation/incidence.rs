//! The hyperplane incidence graph, a spanning forest and the initial matrix.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Bipartite graph on hyperplanes and elements with an edge `(H, e)` when
/// `e` is not in `H`, together with a spanning forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceGraph {
    pub n: usize,
    /// Hyperplanes in sorted order; rows of the initial matrix.
    pub hyperplanes: Vec<ElementSet>,
    /// Edges `(hyperplane index, element)`, row by row.
    pub edges: Vec<(usize, usize)>,
    /// Edges of the spanning forest, sorted.
    pub forest: Vec<(usize, usize)>,
    pub components: usize,
}

/// An entry of the initial matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Entry {
    /// `e` lies on `H`.
    Zero,
    /// A forest edge.
    One,
    /// A free variable, numbered from zero in row-major order.
    Var(usize),
}

/// Rows indexed by hyperplanes, columns by elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialMatrix {
    pub entries: Vec<Vec<Entry>>,
    /// Position `(row, column)` of each variable.
    pub vars: Vec<(usize, usize)>,
}

impl InitialMatrix {
    pub fn var_count(&self) -> usize {
        self.vars.len()
    }

    pub fn entry(&self, h: usize, e: usize) -> Entry {
        self.entries[h][e]
    }

    /// Variable names `x1, x2, ...`.
    pub fn var_names(&self) -> Vec<String> {
        (1..=self.vars.len()).map(|i| format!("x{i}")).collect()
    }
}

impl IncidenceGraph {
    /// The graph with the deterministic breadth-first forest.
    pub fn new(m: &Matroid) -> Self {
        let h = m.hyperplanes().len();
        let order_h: Vec<usize> = (0..h).collect();
        let order_e: Vec<usize> = (0..m.n()).collect();
        Self::with_orders(m, &order_h, &order_e)
    }

    /// The graph with a forest grown breadth-first, where roots and
    /// neighbors are visited in the given priority orders (lists of
    /// hyperplane indices and of elements, most preferred first).
    pub fn with_orders(m: &Matroid, order_h: &[usize], order_e: &[usize]) -> Self {
        let mut hyperplanes = m.hyperplanes();
        hyperplanes.sort();
        let n = m.n();
        let nh = hyperplanes.len();
        assert_eq!(order_h.len(), nh, "hyperplane order must be a permutation");
        assert_eq!(order_e.len(), n, "element order must be a permutation");
        let mut edges = Vec::new();
        for (i, hp) in hyperplanes.iter().enumerate() {
            for e in 0..n {
                if !hp.contains(e) {
                    edges.push((i, e));
                }
            }
        }
        let mut seen_h = vec![false; nh];
        let mut seen_e = vec![false; n];
        let mut forest = Vec::new();
        let mut components = 0;
        #[derive(Clone, Copy)]
        enum V {
            H(usize),
            E(usize),
        }
        for &root in order_e {
            if seen_e[root] {
                continue;
            }
            components += 1;
            seen_e[root] = true;
            let mut queue = VecDeque::from([V::E(root)]);
            while let Some(v) = queue.pop_front() {
                match v {
                    V::E(e) => {
                        for &i in order_h {
                            if !seen_h[i] && !hyperplanes[i].contains(e) {
                                seen_h[i] = true;
                                forest.push((i, e));
                                queue.push_back(V::H(i));
                            }
                        }
                    }
                    V::H(i) => {
                        for &e in order_e {
                            if !seen_e[e] && !hyperplanes[i].contains(e) {
                                seen_e[e] = true;
                                forest.push((i, e));
                                queue.push_back(V::E(e));
                            }
                        }
                    }
                }
            }
        }
        // Every hyperplane misses some element, so no hyperplane is isolated.
        debug_assert!(seen_h.iter().all(|&s| s));
        forest.sort();
        IncidenceGraph { n, hyperplanes, edges, forest, components }
    }

    pub fn initial_matrix(&self) -> InitialMatrix {
        let mut entries = vec![vec![Entry::Zero; self.n]; self.hyperplanes.len()];
        let mut vars = Vec::new();
        for &(i, e) in &self.edges {
            entries[i][e] = if self.forest.binary_search(&(i, e)).is_ok() {
                Entry::One
            } else {
                vars.push((i, e));
                Entry::Var(vars.len() - 1)
            };
        }
        InitialMatrix { entries, vars }
    }

    pub fn index_of(&self, h: ElementSet) -> Option<usize> {
        self.hyperplanes.binary_search(&h).ok()
    }
}

/// Graph and initial matrix for the deterministic forest.
pub fn initial_matrix(m: &Matroid) -> (IncidenceGraph, InitialMatrix) {
    let g = IncidenceGraph::new(m);
    let a = g.initial_matrix();
    (g, a)
}

impl fmt::Display for InitialMatrix {
    /// One row per hyperplane; `0`, `1` or the variable name.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match x {
                        Entry::Zero => "0".to_string(),
                        Entry::One => "1".to_string(),
                        Entry::Var(k) => format!("x{}", k + 1),
                    })
                    .collect()
            })
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", padded.join(" "))?;
        }
        Ok(())
    }
}
