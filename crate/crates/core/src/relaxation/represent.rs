//! Exhaustive GF(4)-representability search for an explicit matroid.
//!
//! Relative to the first basis `B`, the zero pattern of a reduced
//! representation `D` is forced: `D[b, c] ≠ 0` iff `(B − b) ∪ c` is a basis.
//! Row and column scaling lets a spanning forest of the support be fixed to
//! ones; the remaining support cells range over the nonzero elements, and
//! the search is complete up to that scaling.

use std::collections::VecDeque;

use super::search::{Cell, CellSearch};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::matroid::bits::{self, elements};
use crate::matroid::{Matroid, Subset};

/// Largest ground set searched by default.
pub const DEFAULT_SCALE_BOUND: usize = 12;

/// A reduced representation `D` with `M[I|D] = m` (rows labelled by the
/// first basis, columns by the other elements), or `None` if `m` is not
/// GF(4)-representable.
pub fn representable_gf4(m: &Matroid) -> Result<Option<Gf4Matrix>> {
    representable_gf4_with_bound(m, DEFAULT_SCALE_BOUND)
}

pub fn representable_gf4_with_bound(m: &Matroid, bound: usize) -> Result<Option<Gf4Matrix>> {
    if m.size() > bound {
        return Err(Error::UnsupportedScale { elements: m.size(), bound });
    }
    let b: Subset = m.bases()[0];
    let rows: Vec<usize> = elements(b).collect();
    let cols: Vec<usize> = elements(m.ground() & !b).collect();
    let (r, c) = (rows.len(), cols.len());
    let support = |i: usize, j: usize| m.is_basis((b & !(1 << rows[i])) | 1 << cols[j]);

    // spanning forest of the bipartite support graph; vertices 0..r are rows
    let mut tree = vec![false; r * c];
    let mut seen = vec![false; r + c];
    for start in 0..r + c {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let neighbours: Vec<(usize, usize, usize)> = if v < r {
                (0..c).filter(|&j| support(v, j)).map(|j| (r + j, v, j)).collect()
            } else {
                (0..r).filter(|&i| support(i, v - r)).map(|i| (i, i, v - r)).collect()
            };
            for (w, i, j) in neighbours {
                if !seen[w] {
                    seen[w] = true;
                    tree[i * c + j] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let cells: Vec<Cell> = (0..r * c)
        .map(|idx| {
            let (i, j) = (idx / c, idx % c);
            if !support(i, j) {
                Cell::Fixed(Gf4::ZERO)
            } else if tree[idx] {
                Cell::Fixed(Gf4::ONE)
            } else {
                Cell::Free(Gf4::NONZERO.to_vec())
            }
        })
        .collect();
    let mut search = CellSearch::new(r, c, cells, |rm, km| {
        m.is_basis((b & !bits::expand(rm, &rows)) | bits::expand(km, &cols))
    });
    let Some(d) = search.solve(true).pop() else {
        return Ok(None);
    };
    let row_names = rows.iter().map(|&e| m.label(e).to_string()).collect();
    let col_names = cols.iter().map(|&e| m.label(e).to_string()).collect();
    let d = d.with_labels(row_names, col_names)?;
    if !Matroid::from_gf4_matrix(&d)?.same_labelled(m) {
        return Err(Error::Verification("representation witness does not reproduce the matroid".into()));
    }
    Ok(Some(d))
}

/// Reduced form of a full representation (`r × n`, column `i` representing
/// element `i` of `m`) with respect to `basis`: rows labelled by the basis
/// elements in order, columns by the others.
pub fn reduced_form(full: &Gf4Matrix, m: &Matroid, basis: Subset) -> Result<Gf4Matrix> {
    if !m.is_basis(basis) {
        return Err(Error::Precondition(format!("{} is not a basis", m.format_set(basis))));
    }
    let rows = full.rows();
    let mut w: Vec<Vec<Gf4>> = (0..rows).map(|i| full.row(i).to_vec()).collect();
    let basis_elems: Vec<usize> = elements(basis).collect();
    let mut used = vec![false; rows];
    let mut row_of = Vec::with_capacity(basis_elems.len());
    for &bcol in &basis_elems {
        let p = (0..rows)
            .find(|&i| !used[i] && !w[i][bcol].is_zero())
            .ok_or_else(|| Error::Verification("matrix columns of a basis are dependent".into()))?;
        used[p] = true;
        let inv = w[p][bcol].inverse()?;
        for v in &mut w[p] {
            *v *= inv;
        }
        for i in 0..rows {
            if i != p && !w[i][bcol].is_zero() {
                let f = w[i][bcol];
                let pivot = w[p].clone();
                for (cell, v) in w[i].iter_mut().zip(pivot) {
                    *cell += f * v;
                }
            }
        }
        row_of.push(p);
    }
    let others: Vec<usize> = elements(m.ground() & !basis).collect();
    Gf4Matrix::from_fn(basis_elems.len(), others.len(), |i, j| w[row_of[i]][others[j]]).with_labels(
        basis_elems.iter().map(|&e| m.label(e).to_string()).collect(),
        others.iter().map(|&e| m.label(e).to_string()).collect(),
    )
}
