//! Representation counts checked against point configurations.
//!
//! Over a field, morphisms from the foundation of a simple matroid count its
//! representations up to projective equivalence. When the matroid has a frame
//! (a set of `r + 1` points, any `r` of them independent), fixing the frame at
//! the standard points leaves no freedom, so the count equals the number of
//! placements of the remaining points in projective space with exactly the
//! right dependencies. The oracle below enumerates those placements with
//! plain modular arithmetic.

use matroid_tutte::catalog;
use matroid_tutte::foundation::foundation_unclassified;
use matroid_tutte::pasture::{finite_field, hom_count};
use matroid_tutte::{ElementSet, Matroid};

const PRIMES: [i64; 4] = [2, 3, 5, 7];

/// Points of the projective space of dimension `r - 1` over `F_p`, each with
/// its first nonzero coordinate equal to one.
fn projective_points(r: usize, p: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for lead in 0..r {
        let free = r - lead - 1;
        for code in 0..p.pow(free as u32) {
            let mut v = vec![0; r];
            v[lead] = 1;
            let mut c = code;
            for x in v.iter_mut().skip(lead + 1) {
                *x = c % p;
                c /= p;
            }
            out.push(v);
        }
    }
    out
}

fn det_mod(rows: &[&Vec<i64>], p: i64) -> i64 {
    let d = match rows.len() {
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        3 => {
            let [a, b, c] = [rows[0], rows[1], rows[2]];
            a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
        }
        _ => unreachable!("rank two or three"),
    };
    d.rem_euclid(p)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
}

fn frame(m: &Matroid) -> Option<Vec<usize>> {
    let r = m.rank();
    subsets(m.n(), r + 1)
        .into_iter()
        .find(|f| subsets(r + 1, r).iter().all(|s| m.is_basis(ElementSet::from_elements(s.iter().map(|&i| f[i])))))
}

/// Projective classes of `F_p`-representations of a simple matroid of rank
/// two or three with a frame.
fn configurations(m: &Matroid, p: i64) -> u64 {
    let r = m.rank();
    let f = frame(m).expect("matroid has a frame");
    let mut placed: Vec<Option<Vec<i64>>> = vec![None; m.n()];
    for (k, &e) in f.iter().enumerate() {
        placed[e] = Some(if k < r { (0..r).map(|i| (i == k) as i64).collect() } else { vec![1; r] });
    }
    let rest: Vec<usize> = (0..m.n()).filter(|e| !f.contains(e)).collect();
    let points = projective_points(r, p);
    let bases = subsets(m.n(), r);
    place(m, p, &points, &bases, &rest, &mut placed)
}

fn place(m: &Matroid, p: i64, points: &[Vec<i64>], bases: &[Vec<usize>], rest: &[usize], placed: &mut [Option<Vec<i64>>]) -> u64 {
    let Some((&e, tail)) = rest.split_first() else { return 1 };
    let mut count = 0;
    for pt in points {
        placed[e] = Some(pt.clone());
        // Every r-subset through e whose points are all placed must be
        // independent exactly when it is a basis.
        let consistent = bases.iter().filter(|s| s.contains(&e) && s.iter().all(|&x| placed[x].is_some())).all(|s| {
            let rows: Vec<&Vec<i64>> = s.iter().map(|&x| placed[x].as_ref().unwrap()).collect();
            (det_mod(&rows, p) != 0) == m.is_basis(ElementSet::from_elements(s.iter().copied()))
        });
        if consistent {
            count += place(m, p, points, bases, tail, placed);
        }
    }
    placed[e] = None;
    count
}

fn oracle_names() -> Vec<String> {
    catalog::full_catalog_names()
        .into_iter()
        .filter(|n| {
            let m = catalog::by_name(n).unwrap();
            (2..=3).contains(&m.rank()) && m.is_simple() && m.is_connected() && frame(&m).is_some()
        })
        .collect()
}

/// Oracle counts over F2, F3, F5, F7.
const FROZEN: &[(&str, [u64; 4])] = &[
    ("U2,3", [1, 1, 1, 1]),
    ("U2,4", [0, 1, 3, 5]),
    ("U2,5", [0, 0, 6, 20]),
    ("U2,6", [0, 0, 6, 60]),
    ("U3,4", [1, 1, 1, 1]),
    ("U3,5", [0, 0, 6, 20]),
    ("U3,6", [0, 0, 6, 140]),
    ("C5", [0, 1, 3, 5]),
    ("F7", [1, 0, 0, 0]),
    ("MK4", [1, 1, 1, 1]),
    ("MK4-", [1, 1, 1, 1]),
];

#[test]
fn oracle_matches_frozen_table() {
    let names: Vec<&str> = FROZEN.iter().map(|(n, _)| *n).collect();
    assert_eq!(oracle_names(), names);
    for (name, want) in FROZEN {
        let m = catalog::by_name(name).unwrap();
        let got: Vec<u64> = PRIMES.iter().map(|&p| configurations(&m, p)).collect();
        assert_eq!(got, want, "{name}");
    }
}

#[test]
fn configuration_counts_match_morphism_counts() {
    for name in oracle_names() {
        let m = catalog::by_name(&name).unwrap();
        let f = foundation_unclassified(&m).unwrap();
        let counts: Vec<u64> = PRIMES.iter().map(|&p| configurations(&m, p)).collect();
        for (i, &p) in PRIMES.iter().enumerate() {
            let h = hom_count(&f.presentation, &finite_field(p as usize).unwrap()).unwrap();
            assert_eq!(h, counts[i], "{name} over F{p}");
        }
    }
}
