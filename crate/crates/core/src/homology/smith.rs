//! Smith normal form over the integers.
//!
//! A sparse pass first eliminates pivots equal to ±1, choosing the pivot of
//! least fill-in cost; the remaining block is reduced densely with pivots of
//! least absolute value. Arithmetic runs in `i64` with overflow checks and is
//! repeated with big integers if any operation overflows.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A sparse integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = IntegerMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let v = v.into();
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.data[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.data[i].iter().map(|(j, v)| (*j, v))
    }

    /// Appends a row given as sparse `(column, value)` pairs; repeated columns add up.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, BigInt)>) {
        let mut row = BTreeMap::new();
        for (j, v) in entries {
            assert!(j < self.cols, "column out of range");
            let e: &mut BigInt = row.entry(j).or_default();
            *e += v;
        }
        row.retain(|_, v: &mut BigInt| !v.is_zero());
        self.data.push(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                t.data[*j].insert(i, v.clone());
            }
        }
        t
    }

    /// Returns a copy with rows and columns permuted: row `i` moves to `rp[i]`, column `j` to `cp[j]`.
    pub fn permuted(&self, rp: &[usize], cp: &[usize]) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.rows, self.cols);
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                t.data[rp[i]].insert(cp[*j], v.clone());
            }
        }
        t
    }
}

/// Column normal form: `U A V = D` with `V` unimodular.
///
/// `diag[k]` is the `k`-th diagonal entry of `D` for every column `k`
/// (zero for columns outside the rank), and `v[k]` is column `k` of `V`
/// as sparse `(original column, coefficient)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnForm {
    pub diag: Vec<BigInt>,
    pub v: Vec<BTreeMap<usize, BigInt>>,
}

/// Nonzero diagonal entries `d1 | d2 | ...` of the Smith form.
pub fn smith_normal_form(a: &IntegerMatrix) -> Vec<BigInt> {
    let (diag, _) = run(a, false);
    let mut d: Vec<BigInt> = diag.into_iter().filter(|x| !x.is_zero()).collect();
    d.sort();
    d
}

/// Rank of the matrix over the rationals.
pub fn rank(a: &IntegerMatrix) -> usize {
    smith_normal_form(a).len()
}

/// Diagonal together with the column transform.
pub fn column_form(a: &IntegerMatrix) -> ColumnForm {
    let (diag, v) = run(a, true);
    ColumnForm { diag, v: v.expect("transform requested") }
}

type Transform = Option<Vec<BTreeMap<usize, BigInt>>>;

fn run(a: &IntegerMatrix, track: bool) -> (Vec<BigInt>, Transform) {
    let small: Option<Vec<BTreeMap<usize, i64>>> = a
        .data
        .iter()
        .map(|r| r.iter().map(|(j, v)| v.to_i64().map(|x| (*j, x))).collect::<Option<BTreeMap<_, _>>>())
        .collect();
    if let Some(rows) = small {
        if let Some((d, v)) = Engine::<i64>::new(rows, a.cols, track).solve() {
            let d = d.into_iter().map(BigInt::from).collect();
            let v = v.map(|cols| {
                cols.into_iter().map(|c| c.into_iter().map(|(k, x)| (k, BigInt::from(x))).collect()).collect()
            });
            return (d, v);
        }
    }
    Engine::<BigInt>::new(a.data.clone(), a.cols, track).solve().expect("big integers do not overflow")
}

/// Integer operations needed by the elimination, with overflow detection.
trait Num: Clone + Debug + Ord + Zero + One + Signed + Integer + CheckedAdd + CheckedSub + CheckedMul {}
impl<T: Clone + Debug + Ord + Zero + One + Signed + Integer + CheckedAdd + CheckedSub + CheckedMul> Num for T {}

/// `a - q * b`, or `None` on overflow.
fn sub_mul<T: Num>(a: &T, q: &T, b: &T) -> Option<T> {
    a.checked_sub(&q.checked_mul(b)?)
}

struct Engine<T: Num> {
    rows: Vec<BTreeMap<usize, T>>,
    col_rows: Vec<BTreeSet<usize>>,
    cols: usize,
    v: Option<Vec<BTreeMap<usize, T>>>,
    row_alive: Vec<bool>,
    col_alive: Vec<bool>,
    /// Columns eliminated with a unit pivot, in order.
    unit_cols: Vec<usize>,
}

impl<T: Num> Engine<T> {
    fn new(rows: Vec<BTreeMap<usize, T>>, cols: usize, track: bool) -> Self {
        let mut col_rows = vec![BTreeSet::new(); cols];
        for (i, r) in rows.iter().enumerate() {
            for j in r.keys() {
                col_rows[*j].insert(i);
            }
        }
        let v = track.then(|| (0..cols).map(|k| BTreeMap::from([(k, T::one())])).collect());
        let nrows = rows.len();
        Engine { rows, col_rows, cols, v, row_alive: vec![true; nrows], col_alive: vec![true; cols], unit_cols: Vec::new() }
    }

    fn solve(mut self) -> Option<(Vec<T>, Option<Vec<BTreeMap<usize, T>>>)> {
        self.presolve()?;
        self.dense()
    }

    /// Adds `k` times column `src` to column `dst` (matrix and transform).
    fn col_axpy(&mut self, dst: usize, k: &T, src: usize) -> Option<()> {
        let rows: Vec<usize> = self.col_rows[src].iter().copied().collect();
        for i in rows {
            let s = self.rows[i][&src].clone();
            let cur = self.rows[i].get(&dst).cloned().unwrap_or_else(T::zero);
            let new = cur.checked_add(&k.checked_mul(&s)?)?;
            if new.is_zero() {
                self.rows[i].remove(&dst);
                self.col_rows[dst].remove(&i);
            } else {
                self.rows[i].insert(dst, new);
                self.col_rows[dst].insert(i);
            }
        }
        if let Some(v) = &mut self.v {
            let srcv: Vec<(usize, T)> = v[src].iter().map(|(a, b)| (*a, b.clone())).collect();
            for (g, s) in srcv {
                let cur = v[dst].get(&g).cloned().unwrap_or_else(T::zero);
                let new = cur.checked_add(&k.checked_mul(&s)?)?;
                if new.is_zero() {
                    v[dst].remove(&g);
                } else {
                    v[dst].insert(g, new);
                }
            }
        }
        Some(())
    }

    fn presolve(&mut self) -> Option<()> {
        loop {
            let mut best: Option<(usize, usize, usize)> = None; // cost, col, row
            for (i, r) in self.rows.iter().enumerate() {
                if !self.row_alive[i] {
                    continue;
                }
                for (j, x) in r {
                    if x.abs().is_one() {
                        let cost = (r.len() - 1) * (self.col_rows[*j].len() - 1);
                        let key = (cost, *j, i);
                        if best.is_none_or(|b| key < b) {
                            best = Some(key);
                        }
                    }
                }
            }
            let Some((_, c, r)) = best else { return Some(()) };
            let s = self.rows[r][&c].clone();
            let others: Vec<(usize, T)> =
                self.rows[r].iter().filter(|(j, _)| **j != c).map(|(j, x)| (*j, x.clone())).collect();
            for (j, x) in others {
                let k = T::zero().checked_sub(&x.checked_mul(&s)?)?;
                self.col_axpy(j, &k, c)?;
            }
            let rows: Vec<usize> = self.col_rows[c].iter().copied().collect();
            for i in rows {
                self.rows[i].remove(&c);
            }
            self.col_rows[c].clear();
            self.rows[r].clear();
            self.row_alive[r] = false;
            self.col_alive[c] = false;
            if let Some(v) = &mut self.v {
                // A pivot of -1 is made positive by negating the column.
                if s.is_negative() {
                    for x in v[c].values_mut() {
                        *x = T::zero().checked_sub(x)?;
                    }
                }
            }
            self.unit_cols.push(c);
        }
    }

    fn dense(self) -> Option<(Vec<T>, Option<Vec<BTreeMap<usize, T>>>)> {
        let live_rows: Vec<usize> = (0..self.rows.len()).filter(|&i| self.row_alive[i] && !self.rows[i].is_empty()).collect();
        let live_cols: Vec<usize> = (0..self.cols).filter(|&j| self.col_alive[j]).collect();
        let pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(k, j)| (*j, k)).collect();
        let (m, n) = (live_rows.len(), live_cols.len());
        let mut a = vec![vec![T::zero(); n]; m];
        for (ri, &i) in live_rows.iter().enumerate() {
            for (j, x) in &self.rows[i] {
                a[ri][pos[j]] = x.clone();
            }
        }
        let mut v: Option<Vec<BTreeMap<usize, T>>> =
            self.v.as_ref().map(|v| live_cols.iter().map(|&j| v[j].clone()).collect());
        let mut t = 0;
        while t < m.min(n) {
            // Pivot of least absolute value; ties by column, then row.
            let mut piv: Option<(T, usize, usize)> = None;
            for j in t..n {
                for (i, row) in a.iter().enumerate().skip(t) {
                    let x = &row[j];
                    if !x.is_zero() {
                        let ab = x.abs();
                        if piv.as_ref().is_none_or(|(b, _, _)| ab < *b) {
                            piv = Some((ab, j, i));
                        }
                    }
                }
            }
            let Some((_, pj, pi)) = piv else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                if let Some(v) = &mut v {
                    v.swap(t, pj);
                }
            }
            loop {
                let p = a[t][t].clone();
                let mut dirty = false;
                for i in t + 1..m {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = a[i][t].div_floor(&p);
                    for j in t..n {
                        let nv = sub_mul(&a[i][j], &q, &a[t][j])?;
                        a[i][j] = nv;
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = a[t][j].div_floor(&p);
                    for row in a.iter_mut().skip(t) {
                        let nv = sub_mul(&row[j], &q, &row[t])?;
                        row[j] = nv;
                    }
                    if let Some(v) = &mut v {
                        let src: Vec<(usize, T)> = v[t].iter().map(|(g, x)| (*g, x.clone())).collect();
                        for (g, x) in src {
                            let cur = v[j].get(&g).cloned().unwrap_or_else(T::zero);
                            let nv = sub_mul(&cur, &q, &x)?;
                            if nv.is_zero() {
                                v[j].remove(&g);
                            } else {
                                v[j].insert(g, nv);
                            }
                        }
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    // Move the smallest remaining entry of row/column t to the pivot.
                    let mut best: Option<(T, bool, usize)> = None;
                    for i in t + 1..m {
                        if !a[i][t].is_zero() {
                            let ab = a[i][t].abs();
                            if best.as_ref().is_none_or(|(b, _, _)| ab < *b) {
                                best = Some((ab, true, i));
                            }
                        }
                    }
                    for j in t + 1..n {
                        if !a[t][j].is_zero() {
                            let ab = a[t][j].abs();
                            if best.as_ref().is_none_or(|(b, _, _)| ab < *b) {
                                best = Some((ab, false, j));
                            }
                        }
                    }
                    if let Some((ab, is_row, k)) = best {
                        if ab < a[t][t].abs() {
                            if is_row {
                                a.swap(t, k);
                            } else {
                                for row in a.iter_mut() {
                                    row.swap(t, k);
                                }
                                if let Some(v) = &mut v {
                                    v.swap(t, k);
                                }
                            }
                        }
                    }
                    continue;
                }
                // Divisibility: fold a row with an entry not divisible by the pivot into row t.
                let p = a[t][t].clone();
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        for j in t..n {
                            let nv = a[t][j].checked_add(&a[i][j])?;
                            a[t][j] = nv;
                        }
                    }
                    None => break,
                }
            }
            if a[t][t].is_negative() {
                for row in a.iter_mut() {
                    row[t] = T::zero().checked_sub(&row[t])?;
                }
                if let Some(v) = &mut v {
                    for x in v[t].values_mut() {
                        *x = T::zero().checked_sub(x)?;
                    }
                }
            }
            t += 1;
        }
        // Assemble: unit pivots first, then the dense diagonal, then zero columns.
        let mut diag = Vec::with_capacity(self.cols);
        let mut vout = self.v.as_ref().map(|_| Vec::with_capacity(self.cols));
        for &c in &self.unit_cols {
            diag.push(T::one());
            if let (Some(out), Some(vv)) = (&mut vout, &self.v) {
                out.push(vv[c].clone());
            }
        }
        for k in 0..n {
            diag.push(if k < m { a[k][k].clone() } else { T::zero() });
            if let (Some(out), Some(vv)) = (&mut vout, &v) {
                out.push(vv[k].clone());
            }
        }
        Some((diag, vout))
    }
}

/// Converts a big integer to `i64`, reporting overflow as a domain error.
pub fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(format!("{x} does not fit in 64 bits")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Oracle: the k-th determinantal divisor is the gcd of all k-minors, and
    /// the invariant factors are successive quotients.
    fn det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| *x).collect()).collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            total += s * m[0][c] * det(&minor);
        }
        total
    }

    fn oracle(m: &[Vec<i64>]) -> Vec<i64> {
        let rows = m.len();
        let cols = m.first().map(|r| r.len()).unwrap_or(0);
        let mut divisors = vec![1i64];
        for k in 1..=rows.min(cols) {
            let mut g = 0i64;
            for rs in crate::set::k_subsets(rows, k) {
                for cs in crate::set::k_subsets(cols, k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|i| cs.iter().map(|j| m[i][j]).collect()).collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if g == 0 {
                break;
            }
            divisors.push(g);
        }
        divisors.windows(2).map(|w| w[1] / w[0]).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(smith_normal_form(&IntegerMatrix::from_dense(&[vec![1, 0], vec![0, 1]])), d(&[1, 1]));
        assert_eq!(smith_normal_form(&IntegerMatrix::from_dense(&[vec![2, 4], vec![6, 8]])), d(&[2, 4]));
        assert_eq!(oracle(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert!(smith_normal_form(&IntegerMatrix::zeros(3, 2)).is_empty());
        assert_eq!(smith_normal_form(&IntegerMatrix::from_dense(&[vec![2, 0], vec![0, 3]])), d(&[1, 6]));
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX / 2;
        let m = IntegerMatrix::from_dense(&[vec![big, big - 1], vec![big - 1, big - 3]]);
        let s = smith_normal_form(&m);
        let det = BigInt::from(big) * BigInt::from(big - 3) - BigInt::from(big - 1) * BigInt::from(big - 1);
        assert_eq!(s.iter().product::<BigInt>(), det.abs());
    }

    fn apply_v(a: &IntegerMatrix, f: &ColumnForm) -> Vec<Vec<BigInt>> {
        // Returns A V as a dense matrix.
        (0..a.rows())
            .map(|i| {
                f.v.iter()
                    .map(|col| col.iter().map(|(g, x)| a.get(i, *g) * x).sum::<BigInt>())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn column_transform_is_consistent() {
        let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16], vec![1, 0, 1]];
        let a = IntegerMatrix::from_dense(&rows);
        let f = column_form(&a);
        let av = apply_v(&a, &f);
        // The row lattice of A V has the same invariants, and V is invertible over Z.
        let m = IntegerMatrix::from_dense(
            &av.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect::<Vec<_>>(),
        );
        assert_eq!(smith_normal_form(&m), smith_normal_form(&a));
        let vd: Vec<Vec<i64>> = (0..3)
            .map(|g| f.v.iter().map(|c| c.get(&g).map(|x| x.to_i64().unwrap()).unwrap_or(0)).collect())
            .collect();
        assert_eq!(det(&vd).abs(), 1);
    }

    proptest! {
        #[test]
        fn matches_determinantal_oracle(rows in 1usize..4, cols in 1usize..4, seed in proptest::collection::vec(-6i64..7, 16)) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            let got = smith_normal_form(&IntegerMatrix::from_dense(&m));
            let want: Vec<BigInt> = oracle(&m).into_iter().map(BigInt::from).collect();
            prop_assert_eq!(got.clone(), want);
            for w in got.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
        }

        #[test]
        fn invariant_under_permutation(seed in proptest::collection::vec(-4i64..5, 12), shift in 0usize..3) {
            let m: Vec<Vec<i64>> = (0..3).map(|i| (0..4).map(|j| seed[i * 4 + j]).collect()).collect();
            let a = IntegerMatrix::from_dense(&m);
            let rp: Vec<usize> = (0..3).map(|i| (i + shift) % 3).collect();
            let cp: Vec<usize> = (0..4).map(|j| (j + shift + 1) % 4).collect();
            prop_assert_eq!(smith_normal_form(&a), smith_normal_form(&a.permuted(&rp, &cp)));
        }

        #[test]
        fn column_form_preserves_row_lattice(seed in proptest::collection::vec(-5i64..6, 12)) {
            let m: Vec<Vec<i64>> = (0..3).map(|i| (0..4).map(|j| seed[i * 4 + j]).collect()).collect();
            let a = IntegerMatrix::from_dense(&m);
            let f = column_form(&a);
            let nz: Vec<BigInt> = f.diag.iter().filter(|x| !x.is_zero()).cloned().collect();
            let mut nz_sorted = nz.clone();
            nz_sorted.sort();
            prop_assert_eq!(nz_sorted, smith_normal_form(&a));
        }
    }
}
