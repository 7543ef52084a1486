//! Plain-text formats for matroids and flat lists.
//!
//! A matroid file has a header line `n r` followed by one basis per line as
//! space-separated 0-based indices. A flat list has one flat per line, with
//! `E` standing for the ground set. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::set::ElementSet;

use super::Matroid;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_indices(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("line {lineno}: bad index `{t}`"))))
        .collect()
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| Error::Parse("empty matroid file".into()))?;
    let h = parse_indices(header, ln)?;
    if h.len() != 2 {
        return Err(Error::Parse(format!("line {ln}: expected `n r`")));
    }
    let (n, r) = (h[0], h[1]);
    let mut bases = Vec::new();
    for (ln, l) in lines {
        let idx = parse_indices(l, ln)?;
        if let Some(&e) = idx.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        bases.push(ElementSet::from_elements(idx));
    }
    let m = Matroid::from_bases(n, bases)?;
    if m.rank() != r {
        return Err(Error::Parse(format!("header rank {r} but bases have size {}", m.rank())));
    }
    Ok(m)
}

pub fn matroid_to_text(m: &Matroid) -> String {
    let mut out = format!("{} {}\n", m.n(), m.rank());
    for b in m.bases() {
        out.push_str(&b.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

/// Parses a flat list over a ground set of size `n`.
pub fn parse_flat_list(text: &str, n: usize) -> Result<Vec<ElementSet>> {
    let mut out = Vec::new();
    for (ln, l) in content_lines(text) {
        if l == "E" {
            out.push(ElementSet::full(n));
            continue;
        }
        if l == "-" || l == "∅" {
            out.push(ElementSet::EMPTY);
            continue;
        }
        let idx = parse_indices(l, ln)?;
        if let Some(&e) = idx.iter().find(|&&e| e >= n) {
            return Err(Error::ElementOutOfRange { element: e, n });
        }
        out.push(ElementSet::from_elements(idx));
    }
    Ok(out)
}

pub fn flat_list_to_text(flats: &[ElementSet], n: usize) -> String {
    let mut out = String::new();
    for f in flats {
        if *f == ElementSet::full(n) && n > 0 {
            out.push('E');
        } else if f.is_empty() {
            out.push('-');
        } else {
            out.push_str(&f.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::catalog;

    #[test]
    fn matroid_round_trip() {
        for name in catalog::small_catalog_names() {
            let m = catalog::by_name(&name).unwrap();
            let back = parse_matroid(&matroid_to_text(&m)).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matroid(""), Err(Error::Parse(_))));
        assert!(matches!(parse_matroid("3 2\n0 x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_matroid("3 2\n0 5\n"), Err(Error::ElementOutOfRange { element: 5, n: 3 })));
        assert!(matches!(parse_matroid("3 1\n0 1\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn flat_lists() {
        let text = "# a cut\n1 2\nE\n";
        let f = parse_flat_list(text, 4).unwrap();
        assert_eq!(f, vec![ElementSet::from_elements([1, 2]), ElementSet::full(4)]);
        assert_eq!(parse_flat_list(&flat_list_to_text(&f, 4), 4).unwrap(), f);
    }
}
