//! Finitely generated abelian groups given by generators and relations.
//!
//! The relation lattice is first brought to Hermite normal form, so the
//! coordinates computed below depend only on the lattice and the order of
//! the generators, not on how the relations happened to be listed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::homology::smith::{column_form, to_i64, IntegerMatrix};

/// `Z/t_1 x ... x Z/t_k x Z^r` with `1 < t_1 | t_2 | ... | t_k`.
///
/// Elements are coordinate vectors with the torsion components first,
/// each reduced into `0..t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnitGroup {
    pub torsion: Vec<i64>,
    pub free_rank: usize,
}

impl UnitGroup {
    pub fn trivial() -> Self {
        UnitGroup { torsion: vec![], free_rank: 0 }
    }

    pub fn cyclic(n: i64) -> Self {
        if n <= 1 {
            Self::trivial()
        } else {
            UnitGroup { torsion: vec![n], free_rank: 0 }
        }
    }

    /// Number of coordinates of an element.
    pub fn dim(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, if finite.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion.iter().map(|&t| t as u64).product())
    }

    /// Least common multiple of the torsion moduli; the exponent of a finite group.
    pub fn exponent(&self) -> i64 {
        self.torsion.iter().fold(1, |a, &t| a.lcm(&t))
    }

    pub fn identity(&self) -> Vec<i64> {
        vec![0; self.dim()]
    }

    pub fn reduce(&self, x: &mut [i64]) {
        for (c, &t) in x.iter_mut().zip(&self.torsion) {
            *c = c.rem_euclid(t);
        }
    }

    pub fn op(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.reduce(&mut v);
        v
    }

    pub fn inv(&self, a: &[i64]) -> Vec<i64> {
        self.pow(a, -1)
    }

    pub fn pow(&self, a: &[i64], k: i64) -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| x * k).collect();
        self.reduce(&mut v);
        v
    }

    pub fn is_identity(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// Whether `a` is a well-formed, reduced coordinate vector.
    pub fn contains(&self, a: &[i64]) -> bool {
        a.len() == self.dim() && a.iter().zip(&self.torsion).all(|(&x, &t)| (0..t).contains(&x))
    }

    /// Every element of a finite group, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        assert!(self.is_finite(), "cannot list an infinite group");
        let mut out = vec![vec![]];
        for &t in &self.torsion {
            out = out.into_iter().flat_map(|p: Vec<i64>| (0..t).map(move |c| [p.clone(), vec![c]].concat())).collect();
        }
        out
    }
}

impl std::fmt::Display for UnitGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// The quotient `Z^n / L` together with the image of every standard generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub group: UnitGroup,
    pub images: Vec<Vec<i64>>,
}

impl Quotient {
    /// Image of an exponent vector over the original generators.
    pub fn image(&self, exps: &[i64]) -> Vec<i64> {
        let mut v = self.group.identity();
        for (g, &e) in exps.iter().enumerate() {
            if e != 0 {
                for (c, x) in v.iter_mut().zip(&self.images[g]) {
                    *c += e * x;
                }
            }
        }
        self.group.reduce(&mut v);
        v
    }

    /// An exponent vector over the generators whose image is `target`.
    /// Every element has one because the generators map onto the group.
    pub fn preimage(&self, target: &[i64]) -> Vec<i64> {
        let n = self.images.len();
        let d = self.group.dim();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (g, img) in self.images.iter().enumerate() {
            let mut r: Vec<BigInt> = img.iter().map(|&x| BigInt::from(x)).collect();
            r.extend((0..n).map(|j| BigInt::from((j == g) as i64)));
            rows.push(r);
        }
        for (i, &t) in self.group.torsion.iter().enumerate() {
            let mut r = vec![BigInt::zero(); d + n];
            r[i] = BigInt::from(t);
            rows.push(r);
        }
        let h = hermite_normal_form(&rows, d + n);
        let mut rest: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
        let mut word = vec![BigInt::zero(); n];
        for row in &h {
            let Some(k) = (0..d).find(|&k| !row[k].is_zero()) else { break };
            let (q, r) = rest[k].div_rem(&row[k]);
            assert!(r.is_zero(), "generators do not map onto the group");
            for j in 0..d {
                rest[j] -= &q * &row[j];
            }
            for j in 0..n {
                word[j] += &q * &row[d + j];
            }
        }
        assert!(rest.iter().all(Zero::is_zero), "generators do not map onto the group");
        word.iter().map(|x| to_i64(x).expect("word exponents fit in i64")).collect()
    }
}

/// A basis of the relation lattice of `images`: all exponent vectors `w`
/// with `sum_j w_j * images[j] = 0` in `group`.
pub fn kernel_lattice(group: &UnitGroup, images: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = images.len();
    let d = group.dim();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (g, img) in images.iter().enumerate() {
        let mut r: Vec<BigInt> = img.iter().map(|&x| BigInt::from(x)).collect();
        r.extend((0..n).map(|j| BigInt::from((j == g) as i64)));
        rows.push(r);
    }
    for (i, &t) in group.torsion.iter().enumerate() {
        let mut r = vec![BigInt::zero(); d + n];
        r[i] = BigInt::from(t);
        rows.push(r);
    }
    hermite_normal_form(&rows, d + n)
        .into_iter()
        .filter(|r| r[..d].iter().all(Zero::is_zero))
        .map(|r| r[d..].iter().map(|x| to_i64(x).expect("relation entries fit in i64")).collect())
        .collect()
}

/// Row-style Hermite normal form: the nonzero rows of the result form the
/// unique echelon basis of the row lattice with positive pivots and entries
/// above each pivot reduced into `0..pivot`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..cols {
        // Euclid on column c among the remaining rows.
        loop {
            let nz: Vec<usize> = (0..a.len()).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by(|&&i, &&j| a[i][c].abs().cmp(&a[j][c].abs())).unwrap();
            for &i in &nz {
                if i != p {
                    let q = a[i][c].div_floor(&a[p][c]);
                    let pivot_row = a[p].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
        }
        if let Some(p) = (0..a.len()).find(|&i| !a[i][c].is_zero()) {
            let mut row = a.remove(p);
            if row[c].is_negative() {
                row.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(row);
        }
        a.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // Reduce entries above pivots.
    for i in 0..out.len() {
        let c = out[i].iter().position(|x| !x.is_zero()).unwrap();
        for k in 0..i {
            let q = out[k][c].div_floor(&out[i][c]);
            if !q.is_zero() {
                let pivot_row = out[i].clone();
                for (x, y) in out[k].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
    }
    out
}

/// Computes `Z^n / L` where `L` is spanned by `relations` (each of length `n`).
pub fn quotient(n: usize, relations: &[Vec<i64>]) -> Result<Quotient> {
    let big: Vec<Vec<BigInt>> = relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let hnf = hermite_normal_form(&big, n);
    let mut m = IntegerMatrix::zeros(0, n);
    for row in &hnf {
        m.push_row(row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())));
    }
    let form = column_form(&m);
    // Keep nontrivial columns: torsion by increasing modulus, then free ones.
    let mut keep: Vec<(BigInt, usize)> =
        form.diag.iter().enumerate().filter(|(_, d)| !d.is_one()).map(|(k, d)| (d.clone(), k)).collect();
    keep.sort_by(|a, b| match (a.0.is_zero(), b.0.is_zero()) {
        (false, true) => std::cmp::Ordering::Less,
        (true, false) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    });
    let mut torsion = Vec::new();
    let mut free_rank = 0;
    for (d, _) in &keep {
        if d.is_zero() {
            free_rank += 1;
        } else {
            torsion.push(to_i64(d)?);
        }
    }
    let group = UnitGroup { torsion, free_rank };
    let mut images = vec![vec![0i64; group.dim()]; n];
    for (slot, (_, k)) in keep.iter().enumerate() {
        for (g, coef) in &form.v[*k] {
            images[*g][slot] = to_i64(coef)?;
        }
    }
    for img in &mut images {
        group.reduce(img);
    }
    let mut q = Quotient { group, images };
    normalize(&mut q);
    Ok(q)
}

/// Puts the coordinate system into a normal form that does not depend on
/// the Smith transform: the free block of the generator images is brought
/// to Hermite form, each torsion block is reduced against it, and each
/// torsion coordinate is rescaled by the unit giving the least images.
///
/// Automorphisms mixing two torsion coordinates are not normalized.
fn normalize(q: &mut Quotient) {
    let n = q.images.len();
    let t = q.group.torsion.len();
    let r = q.group.free_rank;
    if r > 0 {
        let free_t: Vec<Vec<BigInt>> = (0..r).map(|j| (0..n).map(|g| BigInt::from(q.images[g][t + j])).collect()).collect();
        let h = hermite_normal_form(&free_t, n);
        debug_assert_eq!(h.len(), r);
        for (j, row) in h.iter().enumerate() {
            for g in 0..n {
                q.images[g][t + j] = to_i64(&row[g]).expect("free coordinates fit in i64");
            }
        }
    }
    let pivots: Vec<usize> = (0..r).map(|j| (0..n).find(|&g| q.images[g][t + j] != 0).expect("free column is nonzero")).collect();
    for i in 0..t {
        let modulus = q.group.torsion[i];
        let mut best: Option<Vec<i64>> = None;
        for u in (1..modulus).filter(|u| u.gcd(&modulus) == 1) {
            let mut col: Vec<i64> = (0..n).map(|g| (q.images[g][i] * u).rem_euclid(modulus)).collect();
            for (j, &p) in pivots.iter().enumerate() {
                let h = q.images[p][t + j];
                let c = (0..modulus).min_by_key(|c| ((col[p] + c * h).rem_euclid(modulus), *c)).unwrap();
                if c != 0 {
                    for (g, x) in col.iter_mut().enumerate() {
                        *x = (*x + c * q.images[g][t + j]).rem_euclid(modulus);
                    }
                }
            }
            if best.as_ref().is_none_or(|b| col < *b) {
                best = Some(col);
            }
        }
        if let Some(col) = best {
            for (g, x) in col.into_iter().enumerate() {
                q.images[g][i] = x;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn hermite_examples() {
        let h = hermite_normal_form(&big(&[vec![2, 4], vec![6, 8]]), 2);
        assert_eq!(h, big(&[vec![2, 0], vec![0, 4]]));
        let h = hermite_normal_form(&big(&[vec![0, 3], vec![0, 6], vec![0, 0]]), 2);
        assert_eq!(h, big(&[vec![0, 3]]));
    }

    #[test]
    fn quotient_examples() {
        // Z^2 / <(2, 0), (0, 3)> = Z/6 after the normal form merges the factors.
        let q = quotient(2, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(q.group, UnitGroup::cyclic(6));
        assert_eq!(q.image(&[1, 1]).len(), 1);
        // Z^3 / <(1, -1, 0)> = Z^2 with the first two generators identified.
        let q = quotient(3, &[vec![1, -1, 0]]).unwrap();
        assert_eq!(q.group, UnitGroup { torsion: vec![], free_rank: 2 });
        assert_eq!(q.images[0], q.images[1]);
        assert_ne!(q.images[0], q.images[2]);
        assert_eq!(format!("{}", quotient(2, &[vec![0, 2]]).unwrap().group), "Z/2 x Z");
    }

    #[test]
    fn lattice_not_listing_decides() {
        let a = quotient(3, &[vec![2, 0, 0], vec![1, 1, 0], vec![0, 0, 4]]).unwrap();
        let b = quotient(3, &[vec![1, 1, 0], vec![0, 0, 4], vec![2, 0, 0], vec![3, 1, 4]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_of_generator_images() {
        // Z/6 generated by 2 and 3.
        let g = UnitGroup::cyclic(6);
        let k = kernel_lattice(&g, &[vec![2], vec![3]]);
        let q = quotient(2, &k).unwrap();
        assert_eq!(q.group, g);
        for row in &k {
            assert!(g.is_identity(&g.op(&g.pow(&[2], row[0]), &g.pow(&[3], row[1]))));
        }
    }

    #[test]
    fn preimages_map_back() {
        let q = quotient(3, &[vec![2, 0, 1], vec![0, 3, -1], vec![0, 0, 2]]).unwrap();
        for target in [q.images[0].clone(), q.group.op(&q.images[1], &q.images[2]), q.group.identity()] {
            let w = q.preimage(&target);
            assert_eq!(q.image(&w), target);
        }
    }

    #[test]
    fn finite_elements() {
        let g = UnitGroup { torsion: vec![2, 4], free_rank: 0 };
        let e = g.elements();
        assert_eq!(e.len(), 8);
        assert_eq!(g.order(), Some(8));
        assert_eq!(g.exponent(), 4);
        assert!(e.iter().all(|x| g.contains(x)));
    }

    proptest::proptest! {
        #[test]
        fn generators_satisfy_relations(seed in proptest::collection::vec(-5i64..6, 9)) {
            let rels: Vec<Vec<i64>> = seed.chunks(3).map(|c| c.to_vec()).collect();
            let q = quotient(3, &rels).unwrap();
            for r in &rels {
                proptest::prop_assert!(q.group.is_identity(&q.image(r)));
            }
            // The order of the quotient agrees with |det| when the relations have full rank.
            let det = rels[0][0] * (rels[1][1] * rels[2][2] - rels[1][2] * rels[2][1])
                - rels[0][1] * (rels[1][0] * rels[2][2] - rels[1][2] * rels[2][0])
                + rels[0][2] * (rels[1][0] * rels[2][1] - rels[1][1] * rels[2][0]);
            if det != 0 {
                proptest::prop_assert_eq!(q.group.order(), Some(det.unsigned_abs()));
            } else {
                proptest::prop_assert!(q.group.free_rank > 0);
            }
        }
    }
}
