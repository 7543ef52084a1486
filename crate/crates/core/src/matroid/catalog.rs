//! Named matroids.
//!
//! Elements are 0-based. Where a standard one-based labeling exists, element
//! `i` here is element `i + 1` there; for example the Fano lines below are
//! written one-based.

use crate::error::{Error, Result};
use crate::set::{k_subsets, ElementSet};

use super::lattice::MarkedAtomLattice;
use super::Matroid;

fn one_based(v: &[usize]) -> ElementSet {
    ElementSet::from_elements(v.iter().map(|e| e - 1))
}

fn excluding(n: usize, r: usize, dependent: &[ElementSet]) -> Vec<ElementSet> {
    k_subsets(n, r).into_iter().filter(|b| !dependent.iter().any(|d| d.is_subset(*b))).collect()
}

/// The uniform matroid `U_{r,n}`.
pub fn uniform(r: usize, n: usize) -> Matroid {
    assert!(r <= n, "uniform matroid needs r <= n");
    Matroid::from_bases_trusted(n, k_subsets(n, r)).with_name(format!("U{r},{n}"))
}

/// The Fano plane with lines 127, 135, 146, 236, 245, 347, 567.
pub fn fano() -> Matroid {
    let lines: Vec<ElementSet> = [[1, 2, 7], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5], [3, 4, 7], [5, 6, 7]]
        .iter()
        .map(|l| one_based(l))
        .collect();
    Matroid::from_bases_trusted(7, excluding(7, 3, &lines)).with_name("F7")
}

/// `M(K4)` with three-point lines 126, 135, 234, 456.
pub fn mk4() -> Matroid {
    let lines: Vec<ElementSet> = [[1, 2, 6], [1, 3, 5], [2, 3, 4], [4, 5, 6]].iter().map(|l| one_based(l)).collect();
    Matroid::from_bases_trusted(6, excluding(6, 3, &lines)).with_name("MK4")
}

/// `M(K4⁻)`: `U_{3,4}` extended by a point on the lines 23 and 14.
pub fn mk4_minus() -> Matroid {
    let lines = [one_based(&[2, 3, 5]), one_based(&[1, 4, 5])];
    Matroid::from_bases_trusted(5, excluding(5, 3, &lines)).with_name("MK4-")
}

/// `M(K_{2,3})`: series pairs (1,4), (2,5), (3,6) over `U_{1,3}`.
pub fn mk23() -> Matroid {
    let circuits = [one_based(&[1, 2, 4, 5]), one_based(&[1, 3, 4, 6]), one_based(&[2, 3, 5, 6])];
    Matroid::from_bases_trusted(6, excluding(6, 4, &circuits)).with_name("MK23")
}

/// `C5`: rank 3 on five points with the single three-point line 123.
pub fn c5() -> Matroid {
    Matroid::from_bases_trusted(5, excluding(5, 3, &[one_based(&[1, 2, 3])])).with_name("C5")
}

/// `U_{2,3}` with a parallel copy of element 3.
pub fn u23_parallel() -> Matroid {
    Matroid::from_bases_trusted(4, excluding(4, 2, &[one_based(&[3, 4])])).with_name("U~2,3")
}

/// `U_{3,4}` with a parallel copy of element 4.
pub fn u34_parallel() -> Matroid {
    Matroid::from_bases_trusted(5, excluding(5, 3, &[one_based(&[4, 5])])).with_name("U~3,4")
}

fn parse_uniform(s: &str) -> Option<(usize, usize)> {
    let body = s.strip_prefix('U')?;
    let (r, n) = body.split_once(',')?;
    let (r, n) = (r.trim().parse().ok()?, n.trim().parse().ok()?);
    (r <= n && n <= 16).then_some((r, n))
}

/// Resolves a catalog name. Accepted forms: `U{r},{n}`, `F7`, `C5`, `MK4`,
/// `MK4-`, `MK23`, `U~2,3`, `U~3,4`, a trailing `*` for the dual, and
/// `A+B` for direct sums.
pub fn by_name(name: &str) -> Result<Matroid> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('+') {
        return by_name(a)?.direct_sum(&by_name(b)?);
    }
    if let Some(base) = name.strip_suffix('*') {
        return Ok(by_name(base)?.dual());
    }
    let normalized = name.replace('Ũ', "U~");
    let m = match normalized.as_str() {
        "F7" => fano(),
        "C5" => c5(),
        "MK4" => mk4(),
        "MK4-" => mk4_minus(),
        "MK23" => mk23(),
        "U~2,3" => u23_parallel(),
        "U~3,4" => u34_parallel(),
        other => match parse_uniform(other) {
            Some((r, n)) => uniform(r, n),
            None => return Err(Error::UnknownName(name.to_string())),
        },
    };
    Ok(m)
}

/// Small matroids used throughout the test suites.
pub fn small_catalog_names() -> Vec<String> {
    [
        "U1,2", "U2,3", "U2,4", "U2,5", "U3,4", "U3,5", "U3,6", "C5", "C5*", "F7", "F7*", "MK4", "MK4-", "MK23",
        "U~2,3", "U~3,4",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

/// Connected named matroids (no parallel extensions), used for certificates.
pub fn connected_catalog_names() -> Vec<String> {
    ["U1,2", "U2,3", "U2,4", "U2,5", "U3,4", "U3,5", "U2,6", "U4,6", "C5", "C5*", "F7", "F7*", "MK4", "MK4-", "MK23"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Every catalog name together with duals and the small extensions.
pub fn full_catalog_names() -> Vec<String> {
    let mut v: Vec<String> = [
        "U1,2", "U1,3", "U2,3", "U2,4", "U2,5", "U2,6", "U3,4", "U3,5", "U3,6", "U4,6", "U4,7", "C5", "C5*", "F7",
        "F7*", "MK4", "MK4-", "MK4-*", "MK23", "MK23*", "U~2,3", "U~2,3*", "U~3,4", "U~3,4*", "U2,3+U2,3",
        "U2,4+U1,2", "MK4+U1,2",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    v.dedup();
    v
}

/// Simple matroids on `n <= 5` elements, one per isomorphism class of the
/// lattice of flats, ordered by rank and then by canonical key.
///
/// Every family of `r`-subsets is tried as a basis family.
pub fn simple_matroids(n: usize) -> Vec<Matroid> {
    assert!(n <= 5, "exhaustive enumeration is limited to five elements");
    let mut out: Vec<(usize, Vec<u64>, Matroid)> = Vec::new();
    for r in 0..=n {
        let candidates = k_subsets(n, r);
        let k = candidates.len();
        for mask in 1u64..(1u64 << k) {
            let bases = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]);
            let Ok(m) = Matroid::from_bases(n, bases) else { continue };
            if !m.is_simple() {
                continue;
            }
            let key = MarkedAtomLattice::new(m.lattice(), vec![]).canonical_key();
            if !out.iter().any(|(rr, kk, _)| *rr == r && *kk == key) {
                out.push((r, key, m));
            }
        }
    }
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    out.into_iter().map(|(_, _, m)| m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_matroid_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| simple_matroids(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4, 9]);
    }

    #[test]
    fn names_resolve_and_validate() {
        for name in full_catalog_names() {
            let m = by_name(&name).unwrap();
            let again = Matroid::from_bases(m.n(), m.bases().iter().copied()).unwrap();
            assert_eq!(again, m, "{name}");
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(fano().bases().len(), 28);
        assert_eq!(mk4().bases().len(), 16);
        assert_eq!(mk23().bases().len(), 12);
        assert_eq!(c5().bases().len(), 9);
        assert_eq!(mk4_minus().bases().len(), 8);
        assert_eq!(by_name("U2,4").unwrap(), uniform(2, 4));
        assert_eq!(by_name("F7*").unwrap().rank(), 4);
        assert_eq!(by_name("F7*").unwrap().name(), Some("F7*"));
        assert!(by_name("nonsense").is_err());
        assert!(by_name("U5,3").is_err());
    }

    #[test]
    fn mk23_hyperplanes() {
        let labels: Vec<String> = mk23()
            .hyperplanes()
            .iter()
            .map(|h| h.iter().map(|e| (e + 1).to_string()).collect())
            .collect();
        let mut got = labels.clone();
        got.sort();
        let mut expect: Vec<String> =
            ["1245", "1346", "2356", "123", "126", "135", "156", "234", "345", "246", "456"].iter().map(|s| s.to_string()).collect();
        expect.sort();
        assert_eq!(got, expect);
    }
}
