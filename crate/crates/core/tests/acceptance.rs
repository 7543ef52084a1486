//! Acceptance suite: one line per criterion, then a nonzero exit status if
//! any criterion failed.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use matroid_tutte::catalog;
use matroid_tutte::constellation::{all_modular_cuts, cut_of_extension, extend_by_cut, tutte_graph, Constellation, ModularCut};
use matroid_tutte::foundation::{
    check_r_relations, excluded_minor_flags, field_brute_force_count, foundation, foundation_unclassified,
    fundamental_presentation, FoundationOptions, FoundationReport,
};
use matroid_tutte::homology::{search_l3, sigma_complex, sigma_complex_of_classes, ClassId};
use matroid_tutte::pasture::recognize::subgroups;
use matroid_tutte::pasture::{
    automorphisms, by_name, finite_field, fingerprint, hom_count, hom_exists, quotient_by, recognize, Factor,
    PastureMorphism, PasturePresentation, Structure,
};
use matroid_tutte::{Matroid, Result};

/// Wall-clock limits, one per timed criterion.
const FOUNDATION_ORACLE_LIMIT: Duration = Duration::from_secs(5);
const BRUTE_FORCE_LIMIT: Duration = Duration::from_secs(60);
const PATH_LIMIT: Duration = Duration::from_secs(10);
const HOMOTOPY_LIMIT: Duration = Duration::from_secs(120);
const L3_LIMIT: Duration = Duration::from_secs(300);

/// Fields up to order eight.
const FIELDS: [usize; 6] = [2, 3, 4, 5, 7, 8];

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn m(name: &str) -> Matroid {
    catalog::by_name(name).expect("catalog name")
}

fn named(s: &str) -> Structure {
    Structure::Named(s.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:.1?}, limit {limit:?}"))
}

fn foundation_of(name: &str) -> std::result::Result<FoundationReport, String> {
    ok(foundation(&m(name)))
}

/// Cuts used for the path and homotopy certificates: the trivial cut and the
/// principal cut of every flat strictly between the closure of the empty set
/// and the ground set.
fn certificate_cuts(mt: &Matroid) -> Vec<(String, ModularCut)> {
    let lm = mt.lattice();
    let mut cuts = vec![("trivial".to_string(), ModularCut::trivial(mt))];
    for &f in lm.flats() {
        if f != lm.bottom() && f != lm.top() {
            cuts.push((format!("principal {f}"), ModularCut::principal(mt, f).expect("flat")));
        }
    }
    cuts
}

fn criterion_1() -> Outcome {
    let timed = |name: &str| -> std::result::Result<FoundationReport, String> {
        let t = Instant::now();
        let f = foundation_of(name)?;
        within(t, FOUNDATION_ORACLE_LIMIT, &format!("foundation({name})"))?;
        Ok(f)
    };
    let f2 = by_name("F2").unwrap();
    let f1 = by_name("F1±").unwrap();
    let v = by_name("V").unwrap();
    for name in ["U2,4", "C5"] {
        let s = timed(name)?.structure;
        ensure(s == named("U"), || format!("foundation({name}) recognized as {s}"))?;
    }
    for name in ["U2,5", "U3,5"] {
        let f = timed(name)?;
        ensure(f.structure == named("V"), || format!("foundation({name}) recognized as {}", f.structure))?;
        ensure(fingerprint(&f.presentation) == fingerprint(&v), || format!("fingerprint of foundation({name}) differs from V"))?;
    }
    for (name, want) in [("F7", &f2), ("F7*", &f2), ("U2,3", &f1), ("MK4", &f1)] {
        let f = timed(name)?;
        ensure(f.presentation.canonical_form() == want.canonical_form(), || {
            format!("canonical form of foundation({name}) is {:?}", f.presentation.canonical_form())
        })?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let u = foundation_of("U2,4")?;
    for (q, want) in [(3, 1), (4, 2), (5, 3), (8, 6)] {
        let n = ok(hom_count(&u.presentation, &finite_field(q).unwrap()))?;
        ensure(n == want, || format!("|Hom(F_U2,4, F{q})| = {n}, expected {want}"))?;
    }
    let t = Instant::now();
    for name in catalog::full_catalog_names() {
        let mt = m(&name);
        let f = ok(foundation_unclassified(&mt))?;
        let mut hom = Vec::new();
        for q in FIELDS {
            let h = ok(f.count_representations(&finite_field(q).unwrap()))?;
            let b = ok(field_brute_force_count(&mt, q))?;
            ensure(h == b, || format!("{name} over F{q}: Hom count {h}, brute force {b}"))?;
            hom.push(h);
        }
        let (h4, h5, h8) = (hom[2], hom[3], hom[5]);
        if hom[1] > 0 {
            ensure(h8 == h4 * h5, || format!("{name}: |Hom(F_M, F8)| = {h8} but F4 x F5 gives {h4} x {h5}"))?;
        }
    }
    within(t, BRUTE_FORCE_LIMIT, "counting over the catalog")
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    for name in catalog::connected_catalog_names() {
        let mt = m(&name);
        for (label, cut) in certificate_cuts(&mt) {
            let tau = Constellation::with_cut(mt.clone(), cut);
            ensure(tutte_graph(&tau).is_connected(), || format!("{name}, {label}: Tutte graph disconnected"))?;
            let h0 = sigma_complex(&tau, 1).complex.homology_or_zero(0);
            ensure(h0.is_free_of_rank(1), || format!("{name}, {label}: H0 of level-1 complex is {h0}"))?;
        }
    }
    within(t, PATH_LIMIT, "path certificates")?;
    let sum = Constellation::trivial(m("U2,3+U2,3"));
    let h0 = sigma_complex(&sum, 1).complex.homology_or_zero(0);
    ensure(h0.is_free_of_rank(2), || format!("U2,3+U2,3: H0 is {h0}, expected Z^2"))
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    for name in ["U2,4", "U2,5", "U3,4", "C5", "MK4", "MK23", "F7"] {
        let mt = m(name);
        for (label, cut) in certificate_cuts(&mt) {
            let tau = Constellation::with_cut(mt.clone(), cut);
            let h1 = sigma_complex(&tau, 2).complex.homology_or_zero(1);
            ensure(h1.is_zero(), || format!("{name}, {label}: H1 of level-2 complex is {h1}"))?;
        }
    }
    within(t, HOMOTOPY_LIMIT, "homotopy certificates")?;
    let classes = [ClassId::C0, ClassId::C1, ClassId::C2a, ClassId::C2b, ClassId::C2c];
    let h1 = sigma_complex_of_classes(&ClassId::C2d.template(), &classes).complex.homology_or_zero(1);
    ensure(h1.to_string() == "Z/2", || format!("class 2d without 2d: H1 is {h1}, expected Z/2"))
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let three = ok(search_l3(3))?;
    let ids: Vec<&str> = three.classes.iter().map(|c| c.id.as_str()).collect();
    ensure(ids == ["0", "1", "2a", "2b"], || format!("search_l3(3) lists {ids:?}"))?;
    let four = ok(search_l3(4))?;
    within(t, L3_LIMIT, "search_l3")?;
    let mut added: Vec<&str> = four.classes[4..].iter().map(|c| c.id.as_str()).collect();
    added.sort();
    ensure(added == ["2c", "3a", "3b", "3c", "3d"], || format!("search_l3(4) adds {added:?}"))?;
    for c in &four.classes[4..] {
        let (h1, h2) = (c.h1.as_ref().unwrap(), c.h2.as_ref().unwrap());
        if c.id == "2c" {
            // 2c enters on its first homology; its relative complex is a circle.
            ensure(h1.is_free_of_rank(1) && h2.is_zero(), || format!("class 2c: H1 = {h1}, H2 = {h2}"))?;
        } else {
            ensure(h2.is_free_of_rank(1), || format!("class {}: H2 = {h2}, expected Z", c.id))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let names = catalog::full_catalog_names();
    ensure(names.len() >= 15, || format!("catalog has only {} matroids", names.len()))?;
    let (f2, f3) = (by_name("F2").unwrap(), by_name("F3").unwrap());
    let mut disagreements = Vec::new();
    for name in names {
        let mt = m(&name);
        let f = ok(foundation_unclassified(&mt))?;
        let factors = f.structure.factors();
        let regular = factors.as_ref().is_some_and(|v| v.is_empty());
        let binary = ok(hom_exists(&f.presentation, &f2))?;
        let ternary = ok(hom_exists(&f.presentation, &f3))?;
        let x = excluded_minor_flags(&mt);
        for (what, a, b) in [("binary", binary, x.binary), ("regular", regular, x.regular), ("ternary", ternary, x.ternary)] {
            if a != b {
                disagreements.push(format!("{name} {what}: foundation {a}, minors {b}"));
            }
        }
    }
    ensure(disagreements.is_empty(), || disagreements.join("; "))
}

fn criterion_7() -> Outcome {
    for name in catalog::full_catalog_names() {
        let mt = m(&name);
        let report = ok(check_r_relations(&mt))?;
        ensure(report.all_pass(), || format!("{name}: relation check failed: {:?}", report.summary()))?;
        let f = ok(foundation_unclassified(&mt))?;
        let fu = ok(fundamental_presentation(&mt))?;
        let (a, b) = (fingerprint(&fu), fingerprint(&f.presentation));
        ensure(a == b, || format!("{name}: fundamental fingerprint {a:?}, foundation {b:?}"))?;
        ensure(ok(f.generated_by_cross_ratios())?, || format!("{name}: cross-ratios and -1 do not span"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for name in catalog::full_catalog_names() {
        let mt = m(&name);
        let base = ok(foundation_unclassified(&mt))?;
        // A second forest: reversed priorities, then rotations of them. The
        // incidence graph has a single spanning forest when it has no cycle.
        let nh = mt.hyperplanes().len();
        let has_cycle = base.graph.edges.len() > base.graph.forest.len();
        let mut other = None;
        for k in 0..nh.max(1) {
            let mut oh: Vec<usize> = (0..nh).rev().collect();
            let mut oe: Vec<usize> = (0..mt.n()).rev().collect();
            oh.rotate_left(k);
            oe.rotate_left(k % mt.n().max(1));
            let opts = FoundationOptions { forest_orders: Some((oh, oe)), ..Default::default() };
            let f = ok(FoundationReport::build(&mt, &opts))?;
            if f.graph.forest != base.graph.forest || !has_cycle {
                other = Some(f);
                break;
            }
        }
        let other = other.ok_or_else(|| format!("{name}: no second spanning forest found"))?;
        ensure(other.presentation.canonical_form() == base.presentation.canonical_form(), || {
            format!("{name}: foundation depends on the forest")
        })?;
        let dual = ok(foundation_unclassified(&mt.dual()))?;
        ensure(fingerprint(&dual.presentation) == fingerprint(&base.presentation), || format!("{name}: dual fingerprint differs"))?;
        ensure(dual.presentation.group() == base.presentation.group(), || format!("{name}: dual unit group differs"))?;
    }
    for (a, b) in [("U2,4", "U2,4"), ("U2,4", "F7"), ("C5", "U2,5"), ("U2,3", "U3,5"), ("MK4", "F7*")] {
        let s = ok(m(a).direct_sum(&m(b)))?;
        let lhs = ok(foundation_unclassified(&s))?.presentation;
        let rhs = foundation_of(a)?.presentation.tensor(&foundation_of(b)?.presentation);
        ensure(lhs.canonical_form() == rhs.canonical_form(), || format!("foundation({a}+{b}) is not the tensor product"))?;
    }
    let mut small: Vec<Matroid> = catalog::full_catalog_names().iter().map(|n| m(n)).filter(|x| x.n() <= 5).collect();
    for n in 0..=5 {
        small.extend(catalog::simple_matroids(n));
    }
    for mt in &small {
        for cut in all_modular_cuts(mt) {
            let ext = ok(extend_by_cut(mt, &cut))?;
            let (back, cut2) = ok(cut_of_extension(&ext, mt.n()))?;
            ensure(back.bases() == mt.bases() && cut2.to_vec() == cut.to_vec(), || {
                format!("{}: round trip fails for cut {:?}", mt.display_name(), cut.to_vec())
            })?;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let u = by_name("U").unwrap();
    let n = u.fundamental_elements().len();
    ensure(n == 6, || format!("U has {n} fundamental elements"))?;
    let autos = ok(automorphisms(&u))?;
    ensure(autos.len() == 6, || format!("|Aut(U)| = {}", autos.len()))?;
    let (all, subs) = subgroups(&u, &autos);
    let mut seen = HashSet::new();
    for s in &subs {
        let maps: Vec<PastureMorphism> = s.iter().map(|&i| all[i].clone()).collect();
        let q = ok(quotient_by(&u, &maps))?;
        let want = match s.len() {
            1 => "U",
            2 => "D",
            3 => "H",
            _ => "F3",
        };
        let got = recognize(&q);
        ensure(got == named(want), || format!("quotient by a subgroup of order {} recognized as {got}", s.len()))?;
        seen.insert(want);
    }
    ensure(seen.len() == 4, || format!("quotients reached only {seen:?}"))?;
    let names = ["F1±", "F2", "F3", "H", "D", "U"];
    let panel: Vec<PasturePresentation> = matroid_tutte::pasture::named::panel();
    for a in names {
        for b in names {
            let (pa, pb) = (by_name(a).unwrap(), by_name(b).unwrap());
            let t = pa.tensor(&pb);
            for q in &panel {
                let lhs = ok(hom_count(&t, q))?;
                let rhs = ok(hom_count(&pa, q))? * ok(hom_count(&pb, q))?;
                ensure(lhs == rhs, || format!("Hom({a} x {b}, Q) = {lhs}, product {rhs}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    for name in catalog::full_catalog_names() {
        let mt = m(&name);
        let flags = ok(foundation(&mt))?.flags.expect("classified");
        if !flags.wlum || !flags.orientable {
            continue;
        }
        let f = foundation_of(&name)?;
        let factors = f.structure.factors().ok_or_else(|| format!("{name}: wlum but not a tensor of factors"))?;
        ensure(factors.iter().all(|x| matches!(x, Factor::D | Factor::U)), || {
            format!("{name}: orientable with factors {factors:?}")
        })?;
    }
    let u24 = foundation_of("U2,4")?.flags.expect("classified");
    ensure(u24.dressian == Some((0, 1)), || format!("U2,4 Dressian shape {:?}", u24.dressian))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("foundation oracles", criterion_1),
        ("realization counts", criterion_2),
        ("path-theorem certificates", criterion_3),
        ("homotopy-theorem certificates", criterion_4),
        ("higher-homotopy search", criterion_5),
        ("excluded-minor cross-validation", criterion_6),
        ("relation suite", criterion_7),
        ("structural invariants", criterion_8),
        ("pasture algebra", criterion_9),
        ("orientations and Dressian shape", criterion_10),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {title} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
