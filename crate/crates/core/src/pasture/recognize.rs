//! Recognition of pastures as named pastures or tensor products of them,
//! automorphisms, and quotients by groups of automorphisms.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::group::{quotient, UnitGroup};
use super::hom::{fingerprint, is_morphism, PastureMorphism};
use super::named::by_name;
use super::presentation::{PastureElement, PasturePresentation};

/// Tensor factors a recognized pasture may be built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    F2,
    F3,
    H,
    D,
    U,
}

impl Factor {
    pub const ALL: [Factor; 5] = [Factor::F2, Factor::F3, Factor::H, Factor::D, Factor::U];

    pub fn name(self) -> &'static str {
        match self {
            Factor::F2 => "F2",
            Factor::F3 => "F3",
            Factor::H => "H",
            Factor::D => "D",
            Factor::U => "U",
        }
    }

    pub fn presentation(self) -> PasturePresentation {
        by_name(self.name()).expect("factor names resolve")
    }
}

/// Outcome of [`recognize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Structure {
    /// `F1±`, `F2`, `F3`, `H`, `D`, `U` or `V`.
    Named(String),
    /// A tensor product of at least two factors, sorted.
    Tensor(Vec<Factor>),
    Unrecognized,
}

impl Structure {
    pub fn is_recognized(&self) -> bool {
        !matches!(self, Structure::Unrecognized)
    }

    /// The factors, with a named single factor as a one-element list and
    /// `F1±` as the empty list. `None` for `V` and unrecognized pastures.
    pub fn factors(&self) -> Option<Vec<Factor>> {
        match self {
            Structure::Tensor(v) => Some(v.clone()),
            Structure::Named(n) if n == "F1±" => Some(vec![]),
            Structure::Named(n) => Factor::ALL.iter().find(|f| f.name() == n).map(|f| vec![*f]),
            Structure::Unrecognized => None,
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Named(n) => write!(f, "{n}"),
            Structure::Tensor(v) => {
                let names: Vec<&str> = v.iter().map(|x| x.name()).collect();
                write!(f, "{}", names.join(" ⊗ "))
            }
            Structure::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

/// The invariants compared during recognition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub group: UnitGroup,
    pub orbits: usize,
    pub fundamental_pairs: usize,
    pub fingerprint: Vec<u64>,
}

fn invariants(p: &PasturePresentation) -> (UnitGroup, usize, usize) {
    (p.group().clone(), p.canonical_form().orbits.len(), p.fundamental_pairs().len())
}

pub fn signature(p: &PasturePresentation) -> Signature {
    let (group, orbits, fundamental_pairs) = invariants(p);
    Signature { group, orbits, fundamental_pairs, fingerprint: fingerprint(p) }
}

/// Largest number of tensor factors considered.
pub const MAX_FACTORS: usize = 6;

/// A candidate structure with its signature.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub structure: Structure,
    pub signature: Signature,
}

fn structure_of(factors: &[Factor]) -> Structure {
    match factors {
        [] => Structure::Named("F1±".into()),
        [f] => Structure::Named(f.name().into()),
        _ => Structure::Tensor(factors.to_vec()),
    }
}

/// Every candidate: `V`, and the sorted factor multisets with at most one
/// `F2`, at most one `F3` and at most [`MAX_FACTORS`] factors.
pub fn candidates() -> &'static [Candidate] {
    static CANDIDATES: OnceLock<Vec<Candidate>> = OnceLock::new();
    CANDIDATES.get_or_init(|| {
        let prints: Vec<Vec<u64>> = Factor::ALL.iter().map(|f| fingerprint(&f.presentation())).collect();
        let mut out = Vec::new();
        let v = by_name("V").expect("V resolves");
        out.push(Candidate { structure: Structure::Named("V".into()), signature: signature(&v) });
        for f2 in 0..=1 {
            for f3 in 0..=1 {
                for h in 0..=MAX_FACTORS {
                    for d in 0..=MAX_FACTORS {
                        for u in 0..=MAX_FACTORS {
                            if f2 + f3 + h + d + u > MAX_FACTORS {
                                continue;
                            }
                            let counts = [f2, f3, h, d, u];
                            let factors: Vec<Factor> =
                                Factor::ALL.iter().zip(counts).flat_map(|(f, c)| std::iter::repeat_n(*f, c)).collect();
                            let mut p = by_name("F1±").expect("F1± resolves");
                            let mut print = vec![1u64; prints[0].len()];
                            for f in &factors {
                                p = p.tensor(&f.presentation());
                                let i = Factor::ALL.iter().position(|x| x == f).unwrap();
                                for (a, b) in print.iter_mut().zip(&prints[i]) {
                                    *a *= b;
                                }
                            }
                            let (group, orbits, fundamental_pairs) = invariants(&p);
                            out.push(Candidate {
                                structure: structure_of(&factors),
                                signature: Signature { group, orbits, fundamental_pairs, fingerprint: print },
                            });
                        }
                    }
                }
            }
        }
        out
    })
}

/// Names the pasture when exactly one candidate shares its signature.
pub fn recognize(p: &PasturePresentation) -> Structure {
    let (group, orbits, pairs) = invariants(p);
    let pre: Vec<&Candidate> = candidates()
        .iter()
        .filter(|c| c.signature.group == group && c.signature.orbits == orbits && c.signature.fundamental_pairs == pairs)
        .collect();
    if pre.is_empty() {
        return Structure::Unrecognized;
    }
    let print = fingerprint(p);
    let hits: Vec<&&Candidate> = pre.iter().filter(|c| c.signature.fingerprint == print).collect();
    match hits.as_slice() {
        [c] => c.structure.clone(),
        _ => Structure::Unrecognized,
    }
}

/// Composition `f ∘ g` of endomorphisms of `p`.
pub fn compose(p: &PasturePresentation, f: &PastureMorphism, g: &PastureMorphism) -> PastureMorphism {
    let images = g.images.iter().map(|x| f.apply_word(p, &p.quotient_preimage(x))).collect();
    PastureMorphism { images }
}

/// Whether the images of the generators, with `-1`, generate the units.
pub fn is_surjective(p: &PasturePresentation, f: &PastureMorphism) -> bool {
    let g = p.group();
    let k = g.dim();
    let mut rows: Vec<Vec<i64>> = f.images.clone();
    rows.push(p.canonical_form().minus_one.clone());
    for (i, &t) in g.torsion.iter().enumerate() {
        let mut r = vec![0; k];
        r[i] = t;
        rows.push(r);
    }
    quotient(k, &rows).map(|q| q.group.dim() == 0).unwrap_or(false)
}

/// All automorphisms, found by sending each generator to a fundamental
/// element. Fails when some generator is not fundamental and the unit group
/// is infinite.
pub fn automorphisms(p: &PasturePresentation) -> Result<Vec<PastureMorphism>> {
    let fundamental: BTreeSet<Vec<i64>> =
        p.fundamental_elements().into_iter().filter_map(|e| e.coords().map(|c| c.to_vec())).collect();
    let mut choices: Vec<Vec<Vec<i64>>> = Vec::new();
    for i in 0..p.generator_count() {
        let x = p.generator(i);
        let c = x.coords().unwrap().to_vec();
        if fundamental.contains(&c) {
            choices.push(fundamental.iter().cloned().collect());
        } else if p.group().is_finite() {
            choices.push(p.group().elements());
        } else {
            return Err(Error::InfiniteTarget);
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn walk(
        p: &PasturePresentation,
        choices: &[Vec<Vec<i64>>],
        current: &mut Vec<Vec<i64>>,
        out: &mut Vec<PastureMorphism>,
    ) {
        if current.len() == choices.len() {
            if is_morphism(p, p, current) {
                let f = PastureMorphism { images: current.clone() };
                if is_surjective(p, &f) {
                    out.push(f);
                }
            }
            return;
        }
        for c in &choices[current.len()] {
            current.push(c.clone());
            walk(p, choices, current, out);
            current.pop();
        }
    }
    walk(p, &choices, &mut current, &mut out);
    out.sort();
    Ok(out)
}

/// The pasture with `x = s(x)` imposed for every generator `x` and every `s`
/// in `autos`.
pub fn quotient_by(p: &PasturePresentation, autos: &[PastureMorphism]) -> Result<PasturePresentation> {
    let m = p.generator_count();
    let mut rows = Vec::new();
    for s in autos {
        for (i, x) in s.images.iter().enumerate() {
            let mut w = p.quotient_preimage(x);
            w[i] -= 1;
            rows.push(w);
        }
    }
    debug_assert!(rows.iter().all(|r| r.len() == m + 1));
    let q = p.canonical_presentation().with_relations(rows, vec![])?;
    Ok(match p.label() {
        Some(l) => q.with_label(format!("{l}/G")),
        None => q,
    })
}

/// Subgroups of the group generated by `autos`, closed under composition.
/// Each subgroup is listed as sorted indices into the closure, which is
/// returned first.
pub fn subgroups(p: &PasturePresentation, autos: &[PastureMorphism]) -> (Vec<PastureMorphism>, Vec<Vec<usize>>) {
    let mut all: Vec<PastureMorphism> = autos.to_vec();
    loop {
        let mut grew = false;
        for i in 0..all.len() {
            for j in 0..all.len() {
                let c = compose(p, &all[i], &all[j]);
                if !all.contains(&c) {
                    all.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    all.sort();
    let close = |seed: &[usize]| -> Vec<usize> {
        let mut set: BTreeSet<usize> = seed.iter().copied().collect();
        set.insert(all.iter().position(|f| is_identity_map(p, f)).expect("the identity is an automorphism"));
        loop {
            let cur: Vec<usize> = set.iter().copied().collect();
            let mut grew = false;
            for &a in &cur {
                for &b in &cur {
                    let c = compose(p, &all[a], &all[b]);
                    let k = all.iter().position(|f| *f == c).unwrap();
                    grew |= set.insert(k);
                }
            }
            if !grew {
                return set.into_iter().collect();
            }
        }
    };
    let mut subs: BTreeSet<Vec<usize>> = BTreeSet::new();
    let n = all.len();
    for a in 0..n {
        for b in a..n {
            subs.insert(close(&[a, b]));
        }
    }
    (all, subs.into_iter().collect())
}

fn is_identity_map(p: &PasturePresentation, f: &PastureMorphism) -> bool {
    f.images.iter().enumerate().all(|(i, x)| p.generator(i) == PastureElement::Unit(x.clone()))
}

impl PasturePresentation {
    /// A word over `(g_1, ..., g_m, eps)` for unit coordinates `c`.
    pub fn quotient_preimage(&self, c: &[i64]) -> Vec<i64> {
        self.word_of(&PastureElement::Unit(c.to_vec())).expect("coordinates of a unit")
    }
}
