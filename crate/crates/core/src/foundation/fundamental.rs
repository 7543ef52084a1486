//! The presentation of the foundation on all tuples of `Θ_M`, and a check of
//! its relations against the foundation computed from the initial matrix.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matroid::{catalog, has_minor, Matroid};
use crate::pasture::{PastureElement, PasturePresentation, Term};
use crate::set::ElementSet;

use super::cross::{CrossRatioIndex, Pencils};
use super::{foundation_unclassified, FoundationReport};

/// One instance of a relation between universal cross-ratios.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    /// `-1 = 1`.
    Minus,
    /// The four tuples of a symmetry orbit have equal cross-ratios.
    Sigma([CrossRatioIndex; 4]),
    /// A degenerate tuple has cross-ratio 1.
    Degenerate(CrossRatioIndex),
    /// `<H1 H2|H4 H3> = <H1 H2|H3 H4>^-1`.
    Inverse(CrossRatioIndex, CrossRatioIndex),
    /// A product of three cross-ratios equal to `-1` or `1`.
    Product { kind: &'static str, tuples: [CrossRatioIndex; 3], minus: bool },
    /// `<H1 H2|H3 H4> + <H1 H3|H2 H4> = 1`.
    Plucker(CrossRatioIndex, CrossRatioIndex),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Minus => "R-",
            Instance::Sigma(_) => "Rsigma",
            Instance::Degenerate(_) => "R0",
            Instance::Inverse(..) => "R1",
            Instance::Product { kind, .. } => kind,
            Instance::Plucker(..) => "R+",
        }
    }

    pub fn label(&self, hs: &[ElementSet]) -> String {
        let l = |t: &CrossRatioIndex| t.label(hs);
        match self {
            Instance::Minus => "-1 = 1".into(),
            Instance::Sigma(ts) => ts.iter().map(l).collect::<Vec<_>>().join(" = "),
            Instance::Degenerate(t) => format!("{} = 1", l(t)),
            Instance::Inverse(a, b) => format!("{} * {} = 1", l(a), l(b)),
            Instance::Product { tuples, minus, .. } => {
                let rhs = if *minus { "-1" } else { "1" };
                format!("{} = {rhs}", tuples.iter().map(l).collect::<Vec<_>>().join(" * "))
            }
            Instance::Plucker(a, b) => format!("{} + {} = 1", l(a), l(b)),
        }
    }
}

fn distinct(v: &[usize]) -> bool {
    v.iter().enumerate().all(|(i, a)| !v[..i].contains(a))
}

/// Every relation instance, kind by kind.
pub fn instances(m: &Matroid, pencils: &Pencils) -> Vec<Instance> {
    let mut out = Vec::new();
    let has = |name: &str| has_minor(m, &catalog::by_name(name).expect("catalog name")).is_some();
    if has("F7") || has("F7*") {
        out.push(Instance::Minus);
    }
    for t in pencils.theta() {
        if !t.nondegenerate {
            out.push(Instance::Degenerate(t.index));
            continue;
        }
        let [a, b, c, d] = t.index.0;
        let x = |p: [usize; 4]| CrossRatioIndex(p);
        out.push(Instance::Sigma(t.index.sigma_orbit()));
        out.push(Instance::Inverse(x([a, b, d, c]), t.index));
        out.push(Instance::Product { kind: "R2", tuples: [t.index, x([a, c, d, b]), x([a, d, b, c])], minus: true });
        out.push(Instance::Plucker(t.index, x([a, c, b, d])));
    }
    for (_, above) in &pencils.pencils {
        for &a in above {
            for &b in above {
                for &c in above {
                    for &d in above {
                        for &e in above {
                            if distinct(&[a, b, c, d, e]) {
                                let x = |p: [usize; 4]| CrossRatioIndex(p);
                                out.push(Instance::Product {
                                    kind: "R3",
                                    tuples: [x([a, b, c, d]), x([a, b, d, e]), x([a, b, e, c])],
                                    minus: false,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out.extend(r4_instances(m, pencils));
    out
}

/// Instances over corank-3 flats `L` and five distinct atoms above `L`,
/// with `H_ij` the hyperplane spanned by atoms `i` and `j`.
fn r4_instances(m: &Matroid, pencils: &Pencils) -> Vec<Instance> {
    let mut out = Vec::new();
    if m.rank() < 3 {
        return out;
    }
    let hs = &pencils.hyperplanes;
    let mut flats: Vec<ElementSet> = m.flats_of_corank(3).expect("rank at least three").into_iter().map(|f| f.elements).collect();
    flats.sort();
    for l in flats {
        let atoms: Vec<ElementSet> = pencils.pencils.iter().map(|(f, _)| *f).filter(|f| l.is_subset(*f)).collect();
        let k = atoms.len();
        if k < 5 {
            continue;
        }
        let mut join = vec![vec![None; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    let h = m.closure(atoms[i].union(atoms[j])).expect("in range");
                    join[i][j] = hs.binary_search(&h).ok();
                }
            }
        }
        let theta = |t: [usize; 4]| {
            let sets = t.map(|i| hs[i]);
            let meet = sets.iter().fold(m.ground(), |acc, s| acc.intersection(*s));
            m.rank_of(meet) + 2 == m.rank() && (0..2).all(|i| (2..4).all(|j| sets[i].intersection(sets[j]) == meet))
        };
        for p in permutations5(k) {
            let h = |i: usize, j: usize| join[p[i - 1]][p[j - 1]];
            let Some(t1) = [h(1, 3), h(2, 3), h(3, 4), h(3, 5)].into_iter().collect::<Option<Vec<_>>>() else { continue };
            let Some(t2) = [h(1, 4), h(2, 4), h(4, 5), h(3, 4)].into_iter().collect::<Option<Vec<_>>>() else { continue };
            let Some(t3) = [h(1, 5), h(2, 5), h(3, 5), h(4, 5)].into_iter().collect::<Option<Vec<_>>>() else { continue };
            let ts = [t1, t2, t3].map(|v| [v[0], v[1], v[2], v[3]]);
            if !ts.iter().all(|t| theta(*t)) {
                continue;
            }
            let meet = ts.iter().flatten().fold(m.ground(), |acc, &i| acc.intersection(hs[i]));
            if meet != l {
                continue;
            }
            out.push(Instance::Product { kind: "R4", tuples: ts.map(CrossRatioIndex), minus: false });
        }
    }
    out
}

fn permutations5(k: usize) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for d in 0..k {
                    for e in 0..k {
                        if distinct(&[a, b, c, d, e]) {
                            out.push([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The pasture on one generator per symmetry orbit of `Θ_M` with every
/// relation instance.
pub fn fundamental_presentation(m: &Matroid) -> Result<PasturePresentation> {
    let pencils = Pencils::new(m);
    let mut gens: BTreeMap<CrossRatioIndex, usize> = BTreeMap::new();
    for t in pencils.theta() {
        let rep = *t.index.sigma_orbit().iter().min().unwrap();
        gens.insert(rep, 0);
    }
    for (i, v) in gens.values_mut().enumerate() {
        *v = i;
    }
    let k = gens.len();
    let gen = |t: &CrossRatioIndex| gens[t.sigma_orbit().iter().min().unwrap()];
    let unit = |ts: &[&CrossRatioIndex], sign: i64| {
        let mut w = vec![0; k + 1];
        for t in ts {
            w[gen(t)] += 1;
        }
        w[k] = sign;
        w
    };
    let mut mul: Vec<Vec<i64>> = Vec::new();
    let mut seen = HashSet::new();
    let mut add = Vec::new();
    for inst in instances(m, &pencils) {
        let row = match &inst {
            Instance::Minus => unit(&[], 1),
            // One generator per orbit: these hold by construction.
            Instance::Sigma(_) => continue,
            Instance::Degenerate(t) => unit(&[t], 0),
            Instance::Inverse(a, b) => unit(&[a, b], 0),
            Instance::Product { tuples, minus, .. } => unit(&tuples.iter().collect::<Vec<_>>(), *minus as i64),
            Instance::Plucker(a, b) => {
                let e = |t: &CrossRatioIndex| {
                    let mut w = vec![0; k];
                    w[gen(t)] = 1;
                    Term::monomial(false, w)
                };
                add.push([e(a), e(b), Term::constant(k, true)]);
                continue;
            }
        };
        if seen.insert(row.clone()) {
            mul.push(row);
        }
    }
    let names = (1..=k).map(|i| format!("t{i}")).collect();
    Ok(PasturePresentation::new_simplified(names, mul, add)?.with_label(format!("fundamental {}", m.display_name())))
}

/// The outcome of one relation instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub kind: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// `(kind, passed, total)` per relation kind, in a fixed order.
    pub fn summary(&self) -> Vec<(String, usize, usize)> {
        let order = ["R-", "Rsigma", "R0", "R1", "R2", "R3", "R4", "R+", "row-exchange"];
        order
            .iter()
            .map(|k| {
                let of_kind: Vec<&RelationCheck> = self.checks.iter().filter(|c| c.kind == *k).collect();
                (k.to_string(), of_kind.iter().filter(|c| c.pass).count(), of_kind.len())
            })
            .collect()
    }
}

fn holds(f: &FoundationReport, inst: &Instance) -> Result<bool> {
    let p = &f.presentation;
    let x = |t: &CrossRatioIndex| f.cross_ratio(*t);
    Ok(match inst {
        Instance::Minus => p.minus_one_is_one(),
        Instance::Sigma(ts) => {
            let v = x(&ts[0])?;
            ts.iter().map(x).collect::<Result<Vec<_>>>()?.iter().all(|w| *w == v)
        }
        Instance::Degenerate(t) => x(t)? == p.one(),
        Instance::Inverse(a, b) => p.mul(&x(a)?, &x(b)?)? == p.one(),
        Instance::Product { tuples, minus, .. } => {
            let mut acc = p.one();
            for t in tuples {
                acc = p.mul(&acc, &x(t)?)?;
            }
            acc == if *minus { p.minus_one() } else { p.one() }
        }
        Instance::Plucker(a, b) => p.nullset_contains(&x(a)?, &x(b)?, &p.minus_one())?,
    })
}

/// Evaluates every relation instance, and the row exchange identity
/// `<H1 H2|e3 e4> = <H3 H4|e1 e2>` for every choice of `e_i` in `H_i - L`,
/// inside the foundation.
pub fn check_r_relations(m: &Matroid) -> Result<RelationReport> {
    let f = foundation_unclassified(m)?;
    let hs = f.hyperplanes().to_vec();
    let mut checks = Vec::new();
    for inst in instances(m, f.pencils()) {
        checks.push(RelationCheck { kind: inst.kind().into(), instance: inst.label(&hs), pass: holds(&f, &inst)? });
    }
    for (t, _) in f.cross_ratios.iter().filter(|(t, _)| t.nondegenerate) {
        let [h1, h2, h3, h4] = t.index.0;
        let pool = |h: usize| hs[h].difference(t.flat).to_vec();
        for e1 in pool(h1) {
            for e2 in pool(h2) {
                for e3 in pool(h3) {
                    for e4 in pool(h4) {
                        let lhs = f.element_cross_ratio(h1, h2, e3, e4)?;
                        let rhs = f.element_cross_ratio(h3, h4, e1, e2)?;
                        let pass = lhs == rhs && lhs != PastureElement::Zero;
                        checks.push(RelationCheck {
                            kind: "row-exchange".into(),
                            instance: format!("{} with e = ({e1}, {e2}, {e3}, {e4})", t.index.label(&hs)),
                            pass,
                        });
                    }
                }
            }
        }
    }
    Ok(RelationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::{fingerprint, recognize, Structure};

    #[test]
    fn fundamental_u24_is_u() {
        let p = fundamental_presentation(&catalog::uniform(2, 4)).unwrap();
        assert_eq!(recognize(&p), Structure::Named("U".into()));
    }

    #[test]
    fn fundamental_fano_is_f2() {
        let p = fundamental_presentation(&catalog::fano()).unwrap();
        assert!(p.minus_one_is_one());
        assert_eq!(recognize(&p), Structure::Named("F2".into()));
    }

    #[test]
    fn fundamental_u25_fingerprint() {
        let m = catalog::uniform(2, 5);
        let p = fundamental_presentation(&m).unwrap();
        let f = foundation_unclassified(&m).unwrap();
        assert_eq!(fingerprint(&p), fingerprint(&f.presentation));
    }

    #[test]
    fn relations_hold() {
        for name in ["U2,4", "U2,5", "F7", "C5", "U3,5"] {
            let r = check_r_relations(&catalog::by_name(name).unwrap()).unwrap();
            assert!(r.all_pass(), "{name}: {:?}", r.checks.iter().find(|c| !c.pass));
        }
        let r = check_r_relations(&catalog::uniform(2, 5)).unwrap();
        let r3 = r.summary().into_iter().find(|s| s.0 == "R3").unwrap();
        assert!(r3.2 > 0 && r3.1 == r3.2);
    }

    #[test]
    fn r4_needs_rank_three() {
        let pencils = Pencils::new(&catalog::uniform(2, 5));
        assert!(r4_instances(&catalog::uniform(2, 5), &pencils).is_empty());
        let m = catalog::uniform(3, 6);
        let n = r4_instances(&m, &Pencils::new(&m)).len();
        assert!(n > 0);
    }
}
