//! Tuples of hyperplanes around corank-2 flats, and the modular triples and
//! quadruples that give the relations of the incidence presentation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// A 4-tuple of hyperplanes, by index into the sorted hyperplane list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrossRatioIndex(pub [usize; 4]);

impl CrossRatioIndex {
    /// The images under the symmetries `(12)(34)`, `(13)(24)` and `(14)(23)`,
    /// starting with the tuple itself.
    pub fn sigma_orbit(self) -> [CrossRatioIndex; 4] {
        let [a, b, c, d] = self.0;
        [self, CrossRatioIndex([b, a, d, c]), CrossRatioIndex([c, d, a, b]), CrossRatioIndex([d, c, b, a])]
    }

    /// `(H1, H2, H4, H3)`, whose cross-ratio is the inverse.
    pub fn swapped(self) -> CrossRatioIndex {
        let [a, b, c, d] = self.0;
        CrossRatioIndex([a, b, d, c])
    }

    pub fn label(&self, hyperplanes: &[ElementSet]) -> String {
        let names: Vec<String> = self.0.iter().map(|&i| hyperplanes[i].label()).collect();
        format!("[{} {}|{} {}]", names[0], names[1], names[2], names[3])
    }
}

impl fmt::Display for CrossRatioIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "[H{a} H{b}|H{c} H{d}]")
    }
}

/// A member of `Θ_M` with its corank-2 flat.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaTuple {
    pub index: CrossRatioIndex,
    pub flat: ElementSet,
    pub nondegenerate: bool,
}

/// Corank-2 flats, each with the indices of the hyperplanes above it.
#[derive(Clone, Debug)]
pub struct Pencils {
    pub hyperplanes: Vec<ElementSet>,
    pub pencils: Vec<(ElementSet, Vec<usize>)>,
}

impl Pencils {
    pub fn new(m: &Matroid) -> Self {
        let mut hyperplanes = m.hyperplanes();
        hyperplanes.sort();
        let pencils = if m.rank() < 2 {
            Vec::new()
        } else {
            let mut flats: Vec<ElementSet> =
                m.flats_of_corank(2).expect("rank at least two").into_iter().map(|f| f.elements).collect();
            flats.sort();
            flats
                .into_iter()
                .map(|l| {
                    let above = (0..hyperplanes.len()).filter(|&i| l.is_subset(hyperplanes[i])).collect();
                    (l, above)
                })
                .collect()
        };
        Pencils { hyperplanes, pencils }
    }

    /// The common flat of a tuple in `Θ_M`, or an error naming the tuple.
    pub fn check_theta(&self, m: &Matroid, idx: CrossRatioIndex) -> Result<ElementSet> {
        let bad = || Error::NotACrossRatio(idx.to_string());
        if idx.0.iter().any(|&i| i >= self.hyperplanes.len()) {
            return Err(bad());
        }
        let h = idx.0.map(|i| self.hyperplanes[i]);
        let l = h.iter().fold(m.ground(), |acc, x| acc.intersection(*x));
        if m.rank() < 2 || m.rank_of(l) != m.rank() - 2 {
            return Err(bad());
        }
        for i in 0..2 {
            for j in 2..4 {
                if h[i].intersection(h[j]) != l {
                    return Err(bad());
                }
            }
        }
        Ok(l)
    }

    /// All of `Θ_M`, pencil by pencil, tuples in lexicographic order.
    pub fn theta(&self) -> Vec<ThetaTuple> {
        let mut out = Vec::new();
        for (l, above) in &self.pencils {
            for &a in above {
                for &b in above {
                    for &c in above {
                        if c == a || c == b {
                            continue;
                        }
                        for &d in above {
                            if d == a || d == b {
                                continue;
                            }
                            let nondegenerate = a != b && c != d;
                            out.push(ThetaTuple { index: CrossRatioIndex([a, b, c, d]), flat: *l, nondegenerate });
                        }
                    }
                }
            }
        }
        out
    }

    /// Modular triples of distinct hyperplanes: sorted index triples, or
    /// every ordering when `all_orders` is set.
    pub fn triples(&self, all_orders: bool) -> Vec<([usize; 3], ElementSet)> {
        let mut out = Vec::new();
        for (l, above) in &self.pencils {
            for &a in above {
                for &b in above {
                    for &c in above {
                        if a == b || a == c || b == c {
                            continue;
                        }
                        if all_orders || (a < b && b < c) {
                            out.push(([a, b, c], *l));
                        }
                    }
                }
            }
        }
        out
    }

    /// Modular quadruples of distinct hyperplanes, sorted or in every order.
    pub fn quadruples(&self, all_orders: bool) -> Vec<([usize; 4], ElementSet)> {
        let mut out = Vec::new();
        for t in self.theta() {
            let [a, b, c, d] = t.index.0;
            if t.nondegenerate && a != c && a != d && b != c && b != d
                && (all_orders || (a < b && b < c && c < d)) {
                    out.push((t.index.0, t.flat));
                }
        }
        out
    }
}

/// Orders tuples by the component they live in and then by the hyperplanes
/// restricted to that component. Adding other components to the matroid
/// does not change the relative order of two tuples.
pub fn component_key(
    hyperplanes: &[ElementSet],
    components: &[ElementSet],
    t: &ThetaTuple,
    ground: ElementSet,
) -> (usize, [ElementSet; 4]) {
    let outside = ground.difference(t.flat);
    let comp = components
        .iter()
        .copied()
        .find(|c| outside.intersection(*c) == outside)
        .or_else(|| components.iter().copied().find(|c| !outside.intersection(*c).is_empty()))
        .unwrap_or(ground);
    (comp.min().unwrap_or(0), t.index.0.map(|i| hyperplanes[i].intersection(comp)))
}
