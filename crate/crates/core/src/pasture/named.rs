//! Named pastures and small finite fields.

use crate::error::{Error, Result};

use super::presentation::PasturePresentation;

/// Arithmetic in `GF(q)` for `q` in {2, 3, 4, 5, 7, 8, 9}.
///
/// Elements are `0..q`, read as base-`p` digit vectors of polynomials
/// modulo a fixed irreducible polynomial.
#[derive(Clone, Debug)]
pub struct FiniteField {
    q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        // Characteristic, degree and the lower coefficients of a monic
        // irreducible polynomial x^k + c_{k-1} x^{k-1} + ... + c_0.
        let (p, k, low): (usize, usize, Vec<usize>) = match q {
            2 | 3 | 5 | 7 => (q, 1, vec![0]),
            4 => (2, 2, vec![1, 1]),
            8 => (2, 3, vec![1, 1, 0]),
            9 => (3, 2, vec![1, 0]),
            _ => return Err(Error::UnknownName(format!("F{q}"))),
        };
        let digits = |mut x: usize| {
            let mut d = vec![0; k];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let number = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![vec![0; q]; q];
        let mut mul = vec![vec![0; q]; q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = number(&s);
                if k == 1 {
                    mul[a][b] = a * b % p;
                    continue;
                }
                let mut prod = vec![0; 2 * k - 1];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // Reduce x^d for d >= k using x^k = -(c_{k-1} x^{k-1} + ... + c_0).
                for d in (k..prod.len()).rev() {
                    let c = prod[d];
                    if c != 0 {
                        prod[d] = 0;
                        for (i, &l) in low.iter().enumerate() {
                            prod[d - k + i] = (prod[d - k + i] + (p - l) * c) % p;
                        }
                    }
                }
                mul[a][b] = number(&prod[..k]);
            }
        }
        Ok(FiniteField { q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add[a][b] == 0).unwrap()
    }

    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero is not invertible");
        (1..self.q).find(|&b| self.mul[a][b] == 1).unwrap()
    }

    pub fn units(&self) -> impl Iterator<Item = usize> {
        1..self.q
    }

    /// The least element of multiplicative order `q - 1`.
    pub fn primitive(&self) -> usize {
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .unwrap()
    }

    /// `g^k` for the primitive element `g`, listed for `k = 0..q-1`.
    pub fn powers(&self) -> Vec<usize> {
        let g = self.primitive();
        let mut v = vec![1];
        for _ in 1..self.q - 1 {
            v.push(self.mul(*v.last().unwrap(), g));
        }
        v
    }
}

/// `GF(q)` as a pasture on one generator `g`, a primitive element. The null
/// set lists every relation `1 + g^i + g^j = 0` of the field.
pub fn finite_field(q: usize) -> Result<PasturePresentation> {
    let f = FiniteField::new(q)?;
    let pw = f.powers();
    let n = (q - 1) as i64;
    let log = |a: usize| pw.iter().position(|&x| x == a).unwrap() as i64;
    let mut text = format!("gens: g\nmul: g^{n} = 1\n");
    let minus = log(f.neg(1));
    text.push_str(&format!("mul: g^{minus} = -1\n"));
    for i in 0..q - 1 {
        for j in i..q - 1 {
            if f.add(f.add(1, pw[i]), pw[j]) == 0 {
                text.push_str(&format!("add: 1 + g^{i} + g^{j}\n"));
            }
        }
    }
    Ok(PasturePresentation::parse(&text)?.with_label(format!("F{q}")))
}

/// Text of every named presentation other than the finite fields.
fn named_text(name: &str) -> Option<(&'static str, &'static str)> {
    Some(match name {
        "F1±" | "F1pm" | "F1" => ("F1±", "gens:"),
        "K" | "𝕂" => ("K", "gens:\nmul: 1 = -1\nadd: 1 + 1 + 1"),
        "S" | "𝕊" => ("S", "gens:\nadd: 1 + 1 - 1"),
        "F2" | "𝔽₂" => ("F2", "gens:\nadd: 1 + 1"),
        "F3" | "𝔽₃" => ("F3", "gens:\nadd: 1 + 1 + 1"),
        "U" | "𝕌" => ("U", "gens: x y\nadd: x + y - 1"),
        "D" | "𝔻" => ("D", "gens: z\nadd: z - 1 - 1"),
        "H" | "ℍ" => ("H", "gens: z\nadd: z^3 + 1\nadd: z^2 - z + 1"),
        "V" | "𝕍" => (
            "V",
            "gens: x1 x2 x3 x4 x5\n\
             add: x1 + x5*x2 - 1\n\
             add: x2 + x1*x3 - 1\n\
             add: x3 + x2*x4 - 1\n\
             add: x4 + x3*x5 - 1\n\
             add: x5 + x4*x1 - 1",
        ),
        _ => return None,
    })
}

/// Resolves a named pasture: `F1±`, `K`, `S`, `F2`, `F3`, `U`, `D`, `H`,
/// `V`, or `F<q>` / `GF(<q>)` for a field with at most nine elements.
pub fn by_name(name: &str) -> Result<PasturePresentation> {
    let name = name.trim();
    if let Some((label, text)) = named_text(name) {
        return Ok(PasturePresentation::parse(text)?.with_label(label));
    }
    let q = name
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| name.strip_prefix('F'))
        .and_then(|s| s.parse::<usize>().ok());
    match q {
        Some(q) => finite_field(q),
        None => Err(Error::UnknownName(name.to_string())),
    }
}

/// The targets used for Hom-count fingerprints.
pub const PANEL: [&str; 8] = ["F2", "F3", "F4", "F5", "F7", "F8", "K", "S"];

pub fn panel() -> Vec<PasturePresentation> {
    PANEL.iter().map(|n| by_name(n).expect("panel names resolve")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pasture::presentation::PastureElement;
    use crate::pasture::UnitGroup;

    #[test]
    fn field_tables() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
            for a in f.units() {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            assert_eq!(f.powers().len(), q - 1);
        }
    }

    /// The presented null set of `GF(q)` agrees with the field's own sums.
    #[test]
    fn field_null_sets_are_extensional() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            let p = finite_field(q).unwrap();
            assert_eq!(p.group(), &UnitGroup::cyclic(q as i64 - 1));
            let pw = f.powers();
            let elem = |a: usize| {
                if a == 0 {
                    PastureElement::Zero
                } else {
                    let k = pw.iter().position(|&x| x == a).unwrap() as i64;
                    p.pow(&p.generator(0), k).unwrap()
                }
            };
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        let want = f.add(f.add(a, b), c) == 0;
                        assert_eq!(p.nullset_contains(&elem(a), &elem(b), &elem(c)).unwrap(), want, "F{q}: {a}+{b}+{c}");
                    }
                }
            }
        }
    }

    #[test]
    fn small_fields_match_their_named_forms() {
        for q in [2, 3] {
            let named = by_name(&format!("F{q}")).unwrap();
            let field = finite_field(q).unwrap();
            assert_eq!(named.group(), field.group());
            assert_eq!(named.canonical_form().orbits.len(), field.canonical_form().orbits.len());
            assert_eq!(named.minus_one_is_one(), field.minus_one_is_one());
        }
    }

    #[test]
    fn named_unit_groups() {
        let g = |n: &str| by_name(n).unwrap().group().to_string();
        assert_eq!(g("F1±"), "Z/2");
        assert_eq!(g("F2"), "1");
        assert_eq!(g("F3"), "Z/2");
        assert_eq!(g("K"), "1");
        assert_eq!(g("S"), "Z/2");
        assert_eq!(g("U"), "Z/2 x Z^2");
        assert_eq!(g("D"), "Z/2 x Z");
        assert_eq!(g("H"), "Z/6");
        assert_eq!(g("V"), "Z/2 x Z^5");
        assert_eq!(g("GF(9)"), "Z/8");
        assert!(by_name("F6").is_err());
        assert!(by_name("Q").is_err());
    }

    #[test]
    fn f3_null_set() {
        let p = by_name("F3").unwrap();
        let (one, m1) = (p.one(), p.minus_one());
        assert!(p.nullset_contains(&one, &one, &one).unwrap());
        assert!(p.nullset_contains(&m1, &m1, &m1).unwrap());
        assert!(p.nullset_contains(&one, &m1, &PastureElement::Zero).unwrap());
        assert!(!p.nullset_contains(&one, &one, &m1).unwrap());
        assert!(!p.nullset_contains(&one, &one, &PastureElement::Zero).unwrap());
    }
}
