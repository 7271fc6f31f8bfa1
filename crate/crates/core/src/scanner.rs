//! Forbidden-submatrix test for relaxations.
//!
//! The relaxation of the circuit-hyperplane in block form is
//! GF(4)-representable exactly when neither the interior `A` nor its
//! transpose contains, after permuting rows and columns, one of fifteen small
//! templates over `{0, x, y, z}` with `x, y, z` distinct nonzero values.

use std::fmt;
use std::sync::OnceLock;

use crate::gf4::{Gf4, Gf4Matrix};
use crate::relaxation::{ReducedRepresentation, RelaxationVerdict, Witness};

/// Template rows separated by `/`; cells are `0`, `x`, `y` or `z`.
const CATALOG: [(&str, &str); 15] = [
    ("P01", "xyz"),
    ("P02", "xy/0x"),
    ("P03", "xy/yx"),
    ("P04", "xy/zx"),
    ("P05", "xx/yz"),
    ("P06", "xx0/x0x"),
    ("P07", "xx0/x0y"),
    ("P08", "xx0/y0y"),
    ("P09", "xy0/x0y"),
    ("P10", "x00/0yz"),
    ("P11", "x00/0x0/00x"),
    ("P12", "x00/0x0/00y"),
    ("P13", "x00/0y0/00z"),
    ("P14", "xyx/yy0/x00"),
    ("P15", "xyx/yy0/x0z"),
];

/// A cell of a template: `None` is a forced zero, `Some(k)` the `k`-th symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternTemplate {
    pub id: &'static str,
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Option<u8>>,
    pub symbols: Vec<char>,
}

const SYMBOLS: [char; 3] = ['x', 'y', 'z'];

impl PatternTemplate {
    fn parse(id: &'static str, text: &str) -> PatternTemplate {
        let rows: Vec<&str> = text.split('/').collect();
        let cols = rows[0].len();
        let cells: Vec<Option<u8>> = rows
            .iter()
            .flat_map(|r| r.chars())
            .map(|ch| SYMBOLS.iter().position(|&s| s == ch).map(|k| k as u8))
            .collect();
        let used = cells.iter().flatten().map(|&k| k as usize + 1).max().unwrap_or(0);
        PatternTemplate { id, rows: rows.len(), cols, cells, symbols: SYMBOLS[..used].to_vec() }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u8> {
        self.cells[i * self.cols + j]
    }

    /// Every matrix obtained by substituting distinct nonzero values.
    pub fn instantiations(&self) -> Vec<Gf4Matrix> {
        injections(self.symbols.len())
            .into_iter()
            .map(|vals| {
                Gf4Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).map_or(Gf4::ZERO, |k| vals[k as usize]))
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).map_or('0', |k| SYMBOLS[k as usize])).collect::<String>())
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// Injective maps from `k` symbols into the nonzero elements, in
/// lexicographic order of values.
fn injections(k: usize) -> Vec<Vec<Gf4>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(k: usize, cur: &mut Vec<Gf4>, out: &mut Vec<Vec<Gf4>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in Gf4::NONZERO {
            if !cur.contains(&v) {
                cur.push(v);
                go(k, cur, out);
                cur.pop();
            }
        }
    }
    go(k, &mut cur, &mut out);
    out
}

/// The fifteen templates in listing order.
pub fn pattern_catalog() -> Vec<PatternTemplate> {
    CATALOG.iter().map(|&(id, text)| PatternTemplate::parse(id, text)).collect()
}

/// A minimal non-representable interior with no template occurrence. It is
/// kept out of [`pattern_catalog`]; see `scan_with`.
pub const UNLISTED: (&str, &str) = ("U01", "xy0/x0z");

/// The fifteen templates followed by [`UNLISTED`].
pub fn extended_catalog() -> Vec<PatternTemplate> {
    CATALOG.iter().chain([&UNLISTED]).map(|&(id, text)| PatternTemplate::parse(id, text)).collect()
}

pub fn unlisted_template() -> &'static PatternTemplate {
    static CELL: OnceLock<PatternTemplate> = OnceLock::new();
    CELL.get_or_init(|| PatternTemplate::parse(UNLISTED.0, UNLISTED.1))
}

fn cached_catalog() -> &'static [PatternTemplate] {
    static CELL: OnceLock<Vec<PatternTemplate>> = OnceLock::new();
    CELL.get_or_init(pattern_catalog)
}

/// A template occurrence. Indices are 0-based into `A` (or into `Aᵀ` when
/// `transposed`), listed in template order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanMatch {
    pub pattern: &'static str,
    pub transposed: bool,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub assignment: Vec<(char, Gf4)>,
}

impl fmt::Display for ScanMatch {
    /// `P04 A rows=2,5 cols=1,3 x=1 y=w z=v`, with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{} {} rows={} cols={}",
            self.pattern,
            if self.transposed { "AT" } else { "A" },
            join(&self.rows),
            join(&self.cols)
        )?;
        for (s, v) in &self.assignment {
            write!(f, " {s}={v}")?;
        }
        Ok(())
    }
}

/// Ordered selections of `k` distinct indices from `0..n`, lexicographic.
fn arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !cur.contains(&i) {
                cur.push(i);
                go(n, k, cur, out);
                cur.pop();
            }
        }
    }
    go(n, k, &mut cur, &mut out);
    out
}

/// Reads the symbol values off a selection, if it instantiates the template.
fn match_at(t: &PatternTemplate, get: &dyn Fn(usize, usize) -> Gf4, rows: &[usize], cols: &[usize]) -> Option<Vec<Gf4>> {
    let mut vals = [Gf4::ZERO; 3];
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            let v = get(r, c);
            match t.get(i, j) {
                None if !v.is_zero() => return None,
                None => {}
                Some(_) if v.is_zero() => return None,
                Some(k) => {
                    let slot = &mut vals[k as usize];
                    if slot.is_zero() {
                        *slot = v;
                    } else if *slot != v {
                        return None;
                    }
                }
            }
        }
    }
    let used = &vals[..t.symbols.len()];
    let distinct = (0..used.len()).all(|a| (a + 1..used.len()).all(|b| used[a] != used[b]));
    distinct.then(|| used.to_vec())
}

/// Least occurrence of a template in `A` or `Aᵀ`, ordered by pattern,
/// orientation (`A` first), row tuple and column tuple.
pub fn scan(a: &Gf4Matrix) -> Option<ScanMatch> {
    scan_with(a, cached_catalog())
}

/// [`scan`] against an arbitrary template list, in list order.
pub fn scan_with(a: &Gf4Matrix, catalog: &[PatternTemplate]) -> Option<ScanMatch> {
    for t in catalog {
        for transposed in [false, true] {
            let (n_rows, n_cols) = if transposed { (a.cols(), a.rows()) } else { (a.rows(), a.cols()) };
            if t.rows > n_rows || t.cols > n_cols {
                continue;
            }
            let get = |i: usize, j: usize| if transposed { a.get(j, i) } else { a.get(i, j) };
            let col_choices = arrangements(n_cols, t.cols);
            for rows in arrangements(n_rows, t.rows) {
                for cols in &col_choices {
                    if let Some(vals) = match_at(t, &get, &rows, cols) {
                        return Some(ScanMatch {
                            pattern: t.id,
                            transposed,
                            rows,
                            cols: cols.clone(),
                            assignment: t.symbols.iter().copied().zip(vals).collect(),
                        });
                    }
                }
            }
        }
    }
    None
}

/// Representable exactly when the interior has no template occurrence.
pub fn verdict(rr: &ReducedRepresentation) -> RelaxationVerdict {
    verdict_for_interior(&rr.a)
}

pub fn verdict_for_interior(a: &Gf4Matrix) -> RelaxationVerdict {
    match scan(a) {
        Some(m) => RelaxationVerdict { representable: false, witness: Witness::Match(m) },
        None => RelaxationVerdict { representable: true, witness: Witness::None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(s: &str) -> Gf4Matrix {
        Gf4Matrix::parse_compact(s).unwrap()
    }

    #[test]
    fn catalog_has_fifteen_templates_in_order() {
        let cat = pattern_catalog();
        assert_eq!(cat.len(), 15);
        for (i, t) in cat.iter().enumerate() {
            assert_eq!(t.id, format!("P{:02}", i + 1));
            assert!(t.cells.iter().flatten().all(|&k| (k as usize) < t.symbols.len()));
            assert_eq!(t.to_text(), CATALOG[i].1);
        }
        assert_eq!(cat[0].instantiations().len(), 6);
        assert_eq!(cat[10].instantiations().len(), 3);
    }

    #[test]
    fn scan_examples() {
        let m = scan(&mat("1wv")).unwrap();
        assert_eq!((m.pattern, m.transposed), ("P01", false));
        let m = scan(&mat("1w/01")).unwrap();
        assert_eq!(m.pattern, "P02");
        assert_eq!(m.assignment, vec![('x', Gf4::ONE), ('y', Gf4::OMEGA)]);
        assert_eq!(m.to_string(), "P02 A rows=1,2 cols=1,2 x=1 y=w");
        assert!(scan(&mat("111/111/111")).is_none());
        assert!(scan(&mat("1")).is_none());
    }

    #[test]
    fn every_instantiation_is_found_as_itself() {
        for t in pattern_catalog() {
            for inst in t.instantiations() {
                let m = scan(&inst).expect("template occurs in its own instantiation");
                assert!(m.pattern <= t.id);
            }
        }
    }

    #[test]
    fn transposed_orientation_is_reported() {
        let m = scan(&mat("1/w/v")).unwrap();
        assert_eq!((m.pattern, m.transposed), ("P01", true));
        assert_eq!(m.to_string(), "P01 AT rows=1 cols=1,2,3 x=1 y=w z=v");
    }
}
