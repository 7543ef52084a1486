//! Foundations of matroids.
//!
//! The foundation is first presented on the free entries of the initial
//! matrix, with one relation per modular triple and per modular quadruple of
//! hyperplanes. It is then re-presented on a set of universal cross-ratios
//! that generates the unit group together with `-1`. The cross-ratios are
//! taken in an order that depends only on the matroid, so the second
//! presentation does not depend on the spanning forest.

pub mod cross;
pub mod fundamental;
pub mod incidence;
pub mod relations;
pub mod represent;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{catalog, has_minor, Matroid};
use crate::pasture::group::{kernel_lattice, quotient, Quotient};
use crate::pasture::{
    by_name, hom_count, hom_exists, recognize, Factor, PastureElement, PastureMorphism, PasturePresentation,
    Structure, Term,
};
use crate::set::ElementSet;

pub use cross::{CrossRatioIndex, Pencils, ThetaTuple};
pub use fundamental::{check_r_relations, fundamental_presentation, RelationCheck, RelationReport};
pub use incidence::{initial_matrix, Entry, IncidenceGraph, InitialMatrix};
pub use relations::{generate_relations, incidence_presentation, QuadrupleRelation, RelationSet, TripleRelation};
pub use represent::{
    brute_force_count, field_brute_force_count, is_representation, restrict_to_deletion, RepresentationFamily,
};

/// How to build a foundation.
#[derive(Clone, Debug, Default)]
pub struct FoundationOptions {
    /// Priority orders (hyperplane indices, elements) for the spanning forest.
    pub forest_orders: Option<(Vec<usize>, Vec<usize>)>,
    /// Generate every ordering and element choice of each relation.
    pub paranoid: bool,
    /// Compute classification flags.
    pub classify: bool,
}

/// Classification of a matroid read off its foundation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub regular: bool,
    pub binary: bool,
    pub ternary: bool,
    pub wlum: bool,
    pub orientable: bool,
    /// Only decided for wlum matroids.
    pub dyadic: Option<bool>,
    /// `(m, p)`: the numbers of `D` and `U` factors, for wlum matroids.
    pub dressian: Option<(usize, usize)>,
    /// Tensor factors other than `D` and `U` (point factors of the Dressian).
    pub point_factors: Vec<Factor>,
    /// The lineality dimension of the Dressian.
    pub lineality: String,
}

/// The side of each classification that comes from excluded minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedMinorFlags {
    /// No `U2,4` minor.
    pub binary: bool,
    /// No `U2,4`, `F7` or `F7*` minor.
    pub regular: bool,
    /// No `U2,5`, `U3,5`, `F7` or `F7*` minor.
    pub ternary: bool,
    /// No `U2,5` or `U3,5` minor.
    pub wlum: bool,
}

pub fn excluded_minor_flags(m: &Matroid) -> ExcludedMinorFlags {
    let has = |name: &str| has_minor(m, &catalog::by_name(name).expect("catalog name")).is_some();
    let (u24, u25, u35, f7, f7d) = (has("U2,4"), has("U2,5"), has("U3,5"), has("F7"), has("F7*"));
    ExcludedMinorFlags {
        binary: !u24,
        regular: !(u24 || f7 || f7d),
        ternary: !(u25 || u35 || f7 || f7d),
        wlum: !(u25 || u35),
    }
}

/// Everything computed about the foundation of a matroid.
#[derive(Clone, Debug)]
pub struct FoundationReport {
    pub graph: IncidenceGraph,
    pub matrix: InitialMatrix,
    pub relations: RelationSet,
    /// Presentation on the free entries of the initial matrix.
    pub incidence: PasturePresentation,
    /// Presentation on the cross-ratios in [`Self::generators`].
    pub presentation: PasturePresentation,
    pub generators: Vec<CrossRatioIndex>,
    /// Every tuple of `Θ_M` with its universal cross-ratio.
    pub cross_ratios: Vec<(ThetaTuple, PastureElement)>,
    pub structure: Structure,
    pub flags: Option<Flags>,
    pencils: Pencils,
    /// Unit group of the incidence presentation with the images of the
    /// chosen cross-ratios and of `-1`.
    selection: Quotient,
    lookup: HashMap<CrossRatioIndex, usize>,
}

/// The foundation with the default forest, classified.
pub fn foundation(m: &Matroid) -> Result<FoundationReport> {
    FoundationReport::build(m, &FoundationOptions { classify: true, ..Default::default() })
}

/// The foundation without classification flags.
pub fn foundation_unclassified(m: &Matroid) -> Result<FoundationReport> {
    FoundationReport::build(m, &FoundationOptions::default())
}

pub fn classify(m: &Matroid) -> Result<Flags> {
    Ok(foundation(m)?.flags.expect("classification requested"))
}

/// Representation counts over a finite pasture by two independent routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationCount {
    /// Morphisms from the foundation.
    pub hom: u64,
    /// Fillings of the initial matrix that pass the representation test.
    pub brute_force: u64,
}

/// Counts representations of `m` over `p` both ways; a disagreement is an
/// [`Error::Inconsistent`].
pub fn count_representations(m: &Matroid, p: &PasturePresentation) -> Result<RepresentationCount> {
    let hom = foundation_unclassified(m)?.count_representations(p)?;
    let brute_force = brute_force_count(m, p)?;
    if hom != brute_force {
        return Err(Error::Inconsistent(format!(
            "{}: {hom} morphisms from the foundation but {brute_force} representations by enumeration",
            m.display_name()
        )));
    }
    Ok(RepresentationCount { hom, brute_force })
}

fn cross_word(a: &InitialMatrix, hyperplanes: &[ElementSet], t: &ThetaTuple) -> Vec<i64> {
    let [h1, h2, h3, h4] = t.index.0;
    let x = hyperplanes[h3].difference(t.flat).min().expect("H3 strictly contains L");
    let y = hyperplanes[h4].difference(t.flat).min().expect("H4 strictly contains L");
    relations::entry_word(a, &[(h1, x, 1), (h2, y, 1), (h1, y, -1), (h2, x, -1)])
}

/// A word of at most two generators, each with exponent `±1`, and a sign
/// whose image is `target`.
fn short_word(q: &Quotient, target: &[i64]) -> Option<Vec<i64>> {
    let g = &q.group;
    let k = q.images.len() - 1;
    let signs = [g.identity(), q.images[k].clone()];
    let word = |pairs: &[(usize, i64)], sign: usize| {
        let mut w = vec![0; k + 1];
        for &(i, e) in pairs {
            w[i] += e;
        }
        w[k] = sign as i64;
        w
    };
    for (s, sv) in signs.iter().enumerate() {
        if g.op(sv, &g.identity()) == target {
            return Some(word(&[], s));
        }
    }
    let powers: Vec<[Vec<i64>; 2]> = q.images[..k].iter().map(|x| [x.clone(), g.inv(x)]).collect();
    for i in 0..k {
        for (a, xa) in [1i64, -1].iter().zip(&powers[i]) {
            for (s, sv) in signs.iter().enumerate() {
                if g.op(sv, xa) == target {
                    return Some(word(&[(i, *a)], s));
                }
            }
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for (a, xa) in [1i64, -1].iter().zip(&powers[i]) {
                for (b, xb) in [1i64, -1].iter().zip(&powers[j]) {
                    let xy = g.op(xa, xb);
                    for (s, sv) in signs.iter().enumerate() {
                        if g.op(sv, &xy) == target {
                            return Some(word(&[(i, *a), (j, *b)], s));
                        }
                    }
                }
            }
        }
    }
    None
}

impl FoundationReport {
    pub fn build(m: &Matroid, opts: &FoundationOptions) -> Result<Self> {
        let graph = match &opts.forest_orders {
            Some((oh, oe)) => IncidenceGraph::with_orders(m, oh, oe),
            None => IncidenceGraph::new(m),
        };
        let matrix = graph.initial_matrix();
        let pencils = Pencils::new(m);
        let rels = generate_relations(&pencils, opts.paranoid);
        let incidence = incidence_presentation(&matrix, &rels)?;
        let g = incidence.group().clone();
        let minus = incidence.canonical_form().minus_one.clone();
        let image = |t: &ThetaTuple| incidence.eval_word(&cross_word(&matrix, &pencils.hyperplanes, t));
        let coords = |x: PastureElement| x.coords().expect("cross-ratios are units").to_vec();

        // One representative per orbit of the symmetries, in intrinsic order.
        let theta = pencils.theta();
        let by_index: HashMap<CrossRatioIndex, &ThetaTuple> = theta.iter().map(|t| (t.index, t)).collect();
        let components = m.components();
        let key = |t: &ThetaTuple| cross::component_key(&pencils.hyperplanes, &components, t, m.ground());
        let mut reps: Vec<&ThetaTuple> = theta
            .iter()
            .filter(|t| t.nondegenerate)
            .filter(|t| {
                let k = key(t);
                t.index.sigma_orbit().iter().all(|o| key(by_index[o]) >= k)
            })
            .collect();
        reps.sort_by_key(|t| key(t));
        reps.dedup_by_key(|t| key(t));

        // Greedy choice of generators: keep a cross-ratio when it is not yet
        // in the subgroup generated by the kept ones and -1.
        let torsion_rows = |extra: &[Vec<i64>]| {
            let mut rows = extra.to_vec();
            for (i, &t) in g.torsion.iter().enumerate() {
                let mut r = vec![0; g.dim()];
                r[i] = t;
                rows.push(r);
            }
            rows
        };
        let mut chosen: Vec<CrossRatioIndex> = Vec::new();
        let mut images: Vec<Vec<i64>> = Vec::new();
        let mut span = quotient(g.dim(), &torsion_rows(std::slice::from_ref(&minus)))?;
        for t in &reps {
            if span.group.order() == Some(1) {
                break;
            }
            let c = coords(image(t));
            if span.group.is_identity(&span.image(&c)) {
                continue;
            }
            chosen.push(t.index);
            images.push(c);
            let mut rows = images.clone();
            rows.push(minus.clone());
            span = quotient(g.dim(), &torsion_rows(&rows))?;
        }
        if span.group.order() != Some(1) {
            return Err(Error::Inconsistent("the universal cross-ratios and -1 do not generate the unit group".into()));
        }

        let k = chosen.len();
        let mut sel_images = images.clone();
        sel_images.push(minus.clone());
        let mul = kernel_lattice(&g, &sel_images);
        let selection = Quotient { group: g.clone(), images: sel_images };
        let term = |c: &Vec<i64>| {
            let w = short_word(&selection, c).unwrap_or_else(|| selection.preimage(c));
            Term::monomial(w[k].rem_euclid(2) == 1, w[..k].to_vec())
        };
        // The additive relations are the Plücker relations of all tuples,
        // each written with a short word where one exists. They span the
        // same null set as one relation per orbit, and the sparse words let
        // morphism searches prune early.
        let mut seen = BTreeSet::new();
        let mut add = Vec::new();
        for t in theta.iter().filter(|t| t.nondegenerate) {
            let [a, b, c, d] = t.index.0;
            let partner = by_index[&CrossRatioIndex([a, c, b, d])];
            let (u, v) = (coords(image(t)), coords(image(partner)));
            if seen.insert(if u <= v { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) }) {
                add.push([term(&u), term(&v), Term::constant(k, true)]);
            }
        }
        let names = (1..=k).map(|i| format!("c{i}")).collect();
        let presentation = PasturePresentation::new(names, mul, add)?.with_label(m.display_name());
        if presentation.group() != incidence.group()
            || presentation.canonical_form().orbits.len() != incidence.canonical_form().orbits.len()
        {
            return Err(Error::Inconsistent("cross-ratio presentation differs from the incidence presentation".into()));
        }

        let inc_values: Vec<Option<PastureElement>> =
            theta.iter().map(|t| if t.nondegenerate { Some(image(t)) } else { None }).collect();
        let mut report = FoundationReport {
            graph,
            matrix,
            relations: rels,
            incidence,
            presentation,
            generators: chosen,
            cross_ratios: Vec::new(),
            structure: Structure::Unrecognized,
            flags: None,
            pencils,
            selection,
            lookup: HashMap::new(),
        };
        let table: Vec<(ThetaTuple, PastureElement)> = theta
            .iter()
            .zip(&inc_values)
            .map(|(t, x)| {
                let v = match x {
                    Some(x) => report.to_foundation(x),
                    None => report.presentation.one(),
                };
                (*t, v)
            })
            .collect();
        report.lookup = table.iter().enumerate().map(|(i, (t, _))| (t.index, i)).collect();
        report.cross_ratios = table;
        report.structure = recognize(&report.presentation);
        if opts.classify {
            report.flags = Some(report.classify(m)?);
        }
        Ok(report)
    }

    pub fn hyperplanes(&self) -> &[ElementSet] {
        &self.pencils.hyperplanes
    }

    pub fn pencils(&self) -> &Pencils {
        &self.pencils
    }

    /// Carries an element of the incidence presentation to the foundation.
    pub fn to_foundation(&self, x: &PastureElement) -> PastureElement {
        match x {
            PastureElement::Zero => PastureElement::Zero,
            PastureElement::Unit(c) => self.presentation.eval_word(&self.selection.preimage(c)),
        }
    }

    /// The universal hyperplane function value `x[H, e]` in the foundation.
    pub fn entry(&self, h: usize, e: usize) -> PastureElement {
        match self.matrix.entry(h, e) {
            Entry::Zero => PastureElement::Zero,
            _ => self.to_foundation(&self.incidence.eval_word(&relations::entry_word(&self.matrix, &[(h, e, 1)]))),
        }
    }

    /// The universal cross-ratio `<H1 H2 | H3 H4>`, read from the table.
    pub fn cross_ratio(&self, idx: CrossRatioIndex) -> Result<PastureElement> {
        self.lookup
            .get(&idx)
            .map(|&i| self.cross_ratios[i].1.clone())
            .ok_or_else(|| Error::NotACrossRatio(idx.to_string()))
    }

    /// `x[H1,a] x[H2,b] / (x[H1,b] x[H2,a])` computed from matrix entries,
    /// for `H1 ∩ H2` of corank 2 and `a, b` outside `H1 ∪ H2`.
    pub fn element_cross_ratio(&self, h1: usize, h2: usize, a: usize, b: usize) -> Result<PastureElement> {
        let hs = &self.pencils.hyperplanes;
        let bad = || Error::NotACrossRatio(format!("(H{h1}, H{h2}, {a}, {b})"));
        if h1 >= hs.len() || h2 >= hs.len() || a >= self.graph.n || b >= self.graph.n {
            return Err(bad());
        }
        let l = hs[h1].intersection(hs[h2]);
        if !self.pencils.pencils.iter().any(|(f, _)| *f == l) {
            return Err(bad());
        }
        let union = hs[h1].union(hs[h2]);
        if union.contains(a) || union.contains(b) {
            return Err(bad());
        }
        let w = relations::entry_word(&self.matrix, &[(h1, a, 1), (h2, b, 1), (h1, b, -1), (h2, a, -1)]);
        Ok(self.to_foundation(&self.incidence.eval_word(&w)))
    }

    /// Whether the unit group is generated by all universal cross-ratios and
    /// `-1`, checked by a lattice span computation in the incidence group.
    pub fn generated_by_cross_ratios(&self) -> Result<bool> {
        let g = self.incidence.group();
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (t, _) in self.cross_ratios.iter().filter(|(t, _)| t.nondegenerate) {
            let w = cross_word(&self.matrix, &self.pencils.hyperplanes, t);
            rows.push(self.incidence.eval_word(&w).coords().unwrap().to_vec());
        }
        rows.push(self.incidence.canonical_form().minus_one.clone());
        for (i, &t) in g.torsion.iter().enumerate() {
            let mut r = vec![0; g.dim()];
            r[i] = t;
            rows.push(r);
        }
        Ok(quotient(g.dim(), &rows)?.group.order() == Some(1))
    }

    /// The representation `f(x[H, e])` induced by a morphism out of the
    /// foundation.
    pub fn representation_from(&self, target: &PasturePresentation, f: &PastureMorphism) -> Result<RepresentationFamily> {
        let mut rows = Vec::new();
        for h in 0..self.pencils.hyperplanes.len() {
            let mut row = Vec::new();
            for e in 0..self.graph.n {
                row.push(f.apply(&self.presentation, target, &self.entry(h, e))?);
            }
            rows.push(row);
        }
        Ok(RepresentationFamily { rows })
    }

    /// Classification flags, each cross-checked where a second route exists.
    pub fn classify(&self, m: &Matroid) -> Result<Flags> {
        let f = &self.presentation;
        let factors = self.structure.factors();
        let regular = factors.as_ref().is_some_and(|v| v.is_empty());
        let binary = factors.as_ref().is_some_and(|v| v.iter().all(|x| *x == Factor::F2));
        let ternary = hom_exists(f, &by_name("F3")?)?;
        let orientable = hom_exists(f, &by_name("S")?)?;
        if binary != hom_exists(f, &by_name("F2")?)? {
            return Err(Error::Inconsistent(format!("binary flag of {} disagrees with Hom(F_M, F2)", m.display_name())));
        }
        if regular != (binary && ternary) {
            return Err(Error::Inconsistent(format!("regular flag of {} is not binary and ternary", m.display_name())));
        }
        let ex = excluded_minor_flags(m);
        if (ex.binary, ex.regular, ex.ternary) != (binary, regular, ternary) {
            return Err(Error::Inconsistent(format!(
                "flags of {} disagree with excluded minors: foundation {:?}, minors {:?}",
                m.display_name(),
                (binary, regular, ternary),
                (ex.binary, ex.regular, ex.ternary)
            )));
        }
        let wlum = ex.wlum;
        if wlum && factors.is_none() {
            return Err(Error::Inconsistent(format!("{} is wlum but its foundation is not a tensor of factors", m.display_name())));
        }
        if !wlum && factors.is_some() {
            return Err(Error::Inconsistent(format!("{} has a large uniform minor but factors as {}", m.display_name(), self.structure)));
        }
        let (dyadic, dressian, point_factors) = match (&factors, wlum) {
            (Some(v), true) => {
                let d = v.iter().filter(|x| **x == Factor::D).count();
                let u = v.iter().filter(|x| **x == Factor::U).count();
                let points: Vec<Factor> = v.iter().copied().filter(|x| !matches!(x, Factor::D | Factor::U)).collect();
                (Some(points.is_empty()), Some((d, u)), points)
            }
            _ => (None, None, Vec::new()),
        };
        Ok(Flags { regular, binary, ternary, wlum, orientable, dyadic, dressian, point_factors, lineality: "not computed".into() })
    }

    /// `|Hom(F_M, P)|`.
    pub fn count_representations(&self, p: &PasturePresentation) -> Result<u64> {
        hom_count(&self.presentation, p)
    }

    /// Structured text with sections `matrix`, `presentation`,
    /// `cross-ratios`, `recognized` and `flags`.
    pub fn to_text(&self) -> String {
        let hs = &self.pencils.hyperplanes;
        let mut s = String::new();
        let _ = writeln!(s, "[matrix]");
        let width = hs.iter().map(|h| h.label().len()).max().unwrap_or(0);
        for (i, line) in self.matrix.to_string().lines().enumerate() {
            let _ = writeln!(s, "{:>width$} | {line}", hs[i].label());
        }
        let _ = writeln!(s, "[presentation]");
        s.push_str(&self.presentation.to_text());
        let _ = writeln!(s, "unit group: {}", self.presentation.group());
        for (i, g) in self.generators.iter().enumerate() {
            let _ = writeln!(s, "c{} = {}", i + 1, g.label(hs));
        }
        let _ = writeln!(s, "[cross-ratios]");
        for (t, v) in self.cross_ratios.iter().filter(|(t, _)| t.nondegenerate) {
            let _ = writeln!(s, "{} = {}", t.index.label(hs), self.presentation.format_element(v));
        }
        let degenerate = self.cross_ratios.iter().filter(|(t, _)| !t.nondegenerate).count();
        let _ = writeln!(s, "degenerate tuples: {degenerate} (all equal to 1)");
        let _ = writeln!(s, "[recognized]");
        let _ = writeln!(s, "{}", self.structure);
        if let Some(f) = &self.flags {
            let _ = writeln!(s, "[flags]");
            let _ = writeln!(s, "regular: {}", f.regular);
            let _ = writeln!(s, "binary: {}", f.binary);
            let _ = writeln!(s, "ternary: {}", f.ternary);
            let _ = writeln!(s, "wlum: {}", f.wlum);
            let _ = writeln!(s, "orientable: {}", f.orientable);
            let opt = |b: Option<bool>| b.map_or("undecided".to_string(), |x| x.to_string());
            let _ = writeln!(s, "dyadic: {}", opt(f.dyadic));
            match f.dressian {
                Some((m, p)) => {
                    let pts: Vec<&str> = f.point_factors.iter().map(|x| x.name()).collect();
                    let _ = writeln!(s, "dressian: m = {m}, p = {p}, points = [{}], n = {}", pts.join(", "), f.lineality);
                }
                None => {
                    let _ = writeln!(s, "dressian: undecided");
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::{fingerprint, hom_enumerate};

    fn found(name: &str) -> FoundationReport {
        foundation(&catalog::by_name(name).unwrap()).unwrap()
    }

    fn named(s: &str) -> Structure {
        Structure::Named(s.to_string())
    }

    #[test]
    fn small_foundations() {
        assert_eq!(found("U2,4").structure, named("U"));
        assert_eq!(found("F7").structure, named("F2"));
        assert_eq!(found("U2,3").structure, named("F1±"));
        assert_eq!(found("MK4").structure, named("F1±"));
        assert_eq!(found("U2,5").structure, named("V"));
    }

    #[test]
    fn fano_cross_ratios_are_trivial() {
        let f = found("F7");
        assert!(f.cross_ratios.iter().all(|(t, v)| !t.nondegenerate && *v == f.presentation.one()));
        assert!(f.generators.is_empty());
        assert!(f.presentation.minus_one_is_one());
    }

    /// In `U2,4` the tuple `(H0, H1, H2, H3)` and the tuple with the middle
    /// hyperplanes swapped sum to one.
    #[test]
    fn plucker_in_u24() {
        let f = found("U2,4");
        let x = f.cross_ratio(CrossRatioIndex([0, 1, 2, 3])).unwrap();
        let y = f.cross_ratio(CrossRatioIndex([0, 2, 1, 3])).unwrap();
        let p = &f.presentation;
        assert!(p.nullset_contains(&x, &y, &p.minus_one()).unwrap());
        assert_eq!(f.cross_ratio(CrossRatioIndex([0, 0, 2, 3])).unwrap(), p.one());
        assert!(f.cross_ratio(CrossRatioIndex([0, 1, 1, 3])).is_err());
    }

    #[test]
    fn element_form_matches_tuple_form() {
        for name in ["U2,4", "U2,5", "U3,5", "C5"] {
            let f = found(name);
            let hs = f.hyperplanes();
            for (t, v) in f.cross_ratios.iter().filter(|(t, _)| t.nondegenerate) {
                let [h1, h2, h3, h4] = t.index.0;
                for a in hs[h3].difference(t.flat).iter() {
                    for b in hs[h4].difference(t.flat).iter() {
                        assert_eq!(&f.element_cross_ratio(h1, h2, a, b).unwrap(), v, "{name} {}", t.index);
                    }
                }
            }
        }
    }

    #[test]
    fn flags() {
        let f7 = found("F7").flags.unwrap();
        assert!(f7.binary && !f7.regular && !f7.ternary);
        let u24 = found("U2,4").flags.unwrap();
        assert!(u24.ternary && u24.wlum && !u24.binary);
        assert_eq!(u24.dressian, Some((0, 1)));
        assert!(found("MK4").flags.unwrap().regular);
        let u25 = found("U2,5").flags.unwrap();
        assert!(!u25.wlum && u25.dressian.is_none());
    }

    #[test]
    fn both_counting_routes() {
        let f5 = by_name("F5").unwrap();
        let c = count_representations(&catalog::by_name("U2,4").unwrap(), &f5).unwrap();
        assert_eq!(c, RepresentationCount { hom: 3, brute_force: 3 });
        let f3 = by_name("F3").unwrap();
        assert_eq!(count_representations(&catalog::by_name("F7").unwrap(), &f3).unwrap().hom, 0);
        let u = by_name("U").unwrap();
        assert_eq!(count_representations(&catalog::by_name("U2,4").unwrap(), &u), Err(Error::InfiniteTarget));
    }

    #[test]
    fn universal_representation_is_a_representation() {
        for (name, target) in [("U2,4", "F5"), ("F7", "F2"), ("C5", "F4"), ("U3,5", "F4")] {
            let m = catalog::by_name(name).unwrap();
            let f = foundation_unclassified(&m).unwrap();
            let p = by_name(target).unwrap();
            let homs = hom_enumerate(&f.presentation, &p).unwrap();
            assert!(!homs.is_empty(), "{name}");
            for h in homs {
                let phi = f.representation_from(&p, &h).unwrap();
                assert!(is_representation(&m, &p, &phi).unwrap(), "{name} over {target}");
            }
        }
    }

    #[test]
    fn paranoid_mode_agrees() {
        for name in ["U2,4", "C5", "F7", "U2,5"] {
            let m = catalog::by_name(name).unwrap();
            let a = foundation_unclassified(&m).unwrap();
            let b = FoundationReport::build(&m, &FoundationOptions { paranoid: true, ..Default::default() }).unwrap();
            assert_eq!(a.presentation.canonical_form(), b.presentation.canonical_form(), "{name}");
            assert_eq!(fingerprint(&a.presentation), fingerprint(&b.presentation));
        }
    }

    #[test]
    fn text_report_sections() {
        let t = found("U2,4").to_text();
        for sec in ["[matrix]", "[presentation]", "[cross-ratios]", "[recognized]", "[flags]"] {
            assert!(t.contains(sec), "{sec}");
        }
        assert!(t.contains("\nU\n"));
    }
}
