//! Small named matroids.
//!
//! Labels:
//! * `P6`: `1 … 6`, the only triangle is `{1,2,3}`.
//! * `F7-`, `F7=`: `1 … 7`. The Fano lines are `124 235 346 457 561 672 713`;
//!   `F7-` relaxes `713` and `F7=` additionally relaxes `124`.
//! * `P8`, `P8-`: `1 … 8` from the ternary representation `[I₄ | D]`, where
//!   `D` has rows `(0,1,1,−1) (1,0,1,1) (1,1,0,1) (−1,1,1,0)`; `P8-` relaxes
//!   the first circuit-hyperplane of the disjoint pair.
//! * `X8`: `s1 … s4 c1 … c4`; `S = {s1,…,s4}` is the 4-point segment and
//!   `C = {c1,…,c4}` the 4-point cosegment.
//! * `Y8`: `X8` with the Y-Δ exchange applied to the allowable triad `{c1,c2,c4}`.
//! * `M7,1`: `1 2 3 4 5 6 7` where `{1,2,3}` is the triangle onto whose
//!   `(1,3,2)` wheels are glued; `3` is the one element off the remnants of
//!   the two 4-point lines of `Y8`, and `1`, `2` lie on one remnant each.
//! * `M9,9`: `1 … 9`, columns of a fixed GF(4) matrix. Its triangles
//!   `{1,2,5} {1,4,9} {3,8,9} {6,7,8}` form a chain.
//!
//! Parametrised names are also accepted: `U2,5`, `W4` (wheel), `Whirl4`,
//! `Theta3`.

use super::{delta_y, labels, nabla_y, parallel_extension_labelled, theta, uniform, wheel, whirl};
use super::theta::integer_column_matroid;
use crate::error::{Error, Result};
use crate::gf4::Gf4Matrix;
use crate::matroid::bits::{self, elements};
use crate::matroid::{Matroid, Subset};
use crate::relaxation::relax;

/// Names understood by [`named`] without parameters.
pub const NAMED: [&str; 9] = ["P6", "F7-", "F7=", "P8", "P8-", "X8", "Y8", "M7,1", "M9,9"];

const FANO_LINES: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn line_mask(line: &[usize]) -> Subset {
    line.iter().fold(0, |acc, &p| acc | 1 << (p - 1))
}

/// Rank-3 matroid on `1..=n` whose nontrivial lines are exactly `lines`.
fn rank3_with_lines(n: usize, lines: &[Subset]) -> Result<Matroid> {
    let bases = bits::combinations(n, 3).filter(|&t| !lines.iter().any(|&l| t & l == t)).collect();
    Matroid::from_bases(numbered(n), bases)
}

fn fano() -> Result<Matroid> {
    let lines: Vec<Subset> = FANO_LINES.iter().map(|l| line_mask(l)).collect();
    rank3_with_lines(7, &lines)
}

fn p8() -> Matroid {
    let d: [[i64; 4]; 4] = [[0, 1, 1, -1], [1, 0, 1, 1], [1, 1, 0, 1], [-1, 1, 1, 0]];
    let columns: Vec<Vec<i64>> = (0..4)
        .map(|j| (0..4).map(|i| (i == j) as i64).collect())
        .chain((0..4).map(|j| (0..4).map(|i| d[i][j]).collect()))
        .collect();
    integer_column_matroid(&columns, numbered(8), Some(3))
}

/// The unique pair of disjoint circuit-hyperplanes of `P8`, in index order.
pub(crate) fn disjoint_circuit_hyperplanes(m: &Matroid) -> Vec<(Subset, Subset)> {
    let chs = m.circuit_hyperplanes();
    let mut out = Vec::new();
    for (i, &x) in chs.iter().enumerate() {
        for &y in &chs[i + 1..] {
            if x & y == 0 {
                out.push((x, y));
            }
        }
    }
    out
}

fn x8() -> Result<Matroid> {
    let u = uniform(2, 5)?.with_labels(labels(&["c1", "c2", "c3", "c4", "s4"]))?;
    let mut m = u;
    for i in 1..=3 {
        m = parallel_extension_labelled(&m, &format!("c{i}"), &[format!("s{i}")])?;
    }
    let d = delta_y(&m, &["c1", "c2", "c3", "c4"])?;
    d.reordered(&["s1", "s2", "s3", "s4", "c1", "c2", "c3", "c4"])
}

fn y8() -> Result<Matroid> {
    nabla_y(&x8()?, &["c1", "c2", "c4"])
}

/// 4-element segments of `m`.
pub(crate) fn four_point_lines(m: &Matroid) -> Vec<Subset> {
    bits::combinations(m.size(), 4).filter(|&s| super::is_segment(m, s)).collect()
}

fn m71() -> Result<Matroid> {
    let y = y8()?;
    let lines = four_point_lines(&y);
    let [l1, l2] = lines[..] else {
        return Err(Error::Verification(format!("Y8 has {} four-point lines, expected 2", lines.len())));
    };
    let common = l1 & l2;
    if bits::size(common) != 1 {
        return Err(Error::Verification("the four-point lines of Y8 do not meet in one point".into()));
    }
    let m = y.delete(common);
    // Positions in m after deleting the common point.
    let kept: Vec<usize> = elements(y.ground() & !common).collect();
    let shift = |s: Subset| bits::compress(s, &kept);
    let (l1, l2) = (shift(l1 & !common), shift(l2 & !common));
    let off = m.ground() & !(l1 | l2);
    if bits::size(off) != 1 {
        return Err(Error::Verification("M7,1 should have exactly one point off both lines".into()));
    }
    let three = off.trailing_zeros() as usize;
    let tri = m
        .triangles()
        .into_iter()
        .find(|&t| t >> three & 1 == 1)
        .ok_or_else(|| Error::Verification("no triangle through the off-line point".into()))?;
    let one = (tri & l2).trailing_zeros() as usize;
    let two = (tri & l1).trailing_zeros() as usize;
    let mut names: Vec<String> = vec![String::new(); m.size()];
    names[one] = "1".into();
    names[two] = "2".into();
    names[three] = "3".into();
    for (e, name) in elements(m.ground() & !tri).zip(4..) {
        names[e] = name.to_string();
    }
    let renamed = m.with_labels(names)?;
    renamed.reordered(&numbered(7))
}

/// `[I | D]` for `M9,9`, top row first. `D` is the reduced representation
/// of the catalog member identified as `M9,9` (see `catalog::m99_candidates`).
const M99_MATRIX: &str = "100011111/01001wv00/001001110/0001001ww";

fn m99() -> Result<Matroid> {
    let a = Gf4Matrix::parse_compact(M99_MATRIX)?;
    Matroid::column_matroid(&a)?.with_labels(numbered(9))
}

/// Builds a named matroid; see the module documentation for labels.
pub fn named(name: &str) -> Result<Matroid> {
    let name = name.trim();
    match name {
        "P6" => rank3_with_lines(6, &[0b111]),
        "F7" => fano(),
        "F7-" => relax(&fano()?, line_mask(&FANO_LINES[6])),
        "F7=" => relax(&named("F7-")?, line_mask(&FANO_LINES[0])),
        "P8" => Ok(p8()),
        "P8-" => {
            let p = p8();
            let pairs = disjoint_circuit_hyperplanes(&p);
            let &[(x, _)] = &pairs[..] else {
                return Err(Error::Verification(format!("P8 has {} disjoint circuit-hyperplane pairs", pairs.len())));
            };
            relax(&p, x)
        }
        "X8" => x8(),
        "Y8" => y8(),
        "M7,1" => m71(),
        "M9,9" => m99(),
        _ => parametrised(name),
    }
}

fn parametrised(name: &str) -> Result<Matroid> {
    let unknown = || Error::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if let Some(rest) = name.strip_prefix("Whirl") {
        return whirl(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix("Theta") {
        return theta(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix('W') {
        return wheel(num(rest)?);
    }
    if let Some((r, n)) = name.strip_prefix('U').and_then(|rest| rest.split_once(',')) {
        return uniform(num(r)?, num(n)?);
    }
    Err(unknown())
}
