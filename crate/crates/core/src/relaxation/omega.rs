//! Direct search for a block-form representation of a relaxation.

use super::search::{Cell, CellSearch};
use super::{ReducedRepresentation, RelaxationVerdict, Witness};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::matroid::bits;

/// Values tried for the interior `A'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    /// `A'` is zero off the support of `A` and takes values in `{1, ω}` on it.
    Restricted,
    /// Every cell of `A'` ranges over all of GF(4).
    Full,
}

/// Interiors `A'` such that `[[A', 1], [1ᵀ, corner]]` represents the
/// relaxation, with rows and columns as in `rr.c`.
pub fn omega_corner_solutions(rr: &ReducedRepresentation, space: SearchSpace, corner: Gf4, first_only: bool) -> Vec<Gf4Matrix> {
    let relaxed = rr.relaxed();
    let rows = rr.row_elements();
    let cols = rr.col_elements();
    let (p, q) = (rr.a.rows(), rr.a.cols());
    let row_mask = bits::from_elements(rows.iter().copied());
    let cells: Vec<Cell> = (0..(p + 1) * (q + 1))
        .map(|idx| {
            let (i, j) = (idx / (q + 1), idx % (q + 1));
            match (i < p, j < q) {
                (true, true) => match space {
                    SearchSpace::Full => Cell::Free(Gf4::ALL.to_vec()),
                    SearchSpace::Restricted if rr.a.get(i, j).is_zero() => Cell::Fixed(Gf4::ZERO),
                    SearchSpace::Restricted => Cell::Free(vec![Gf4::ONE, Gf4::OMEGA]),
                },
                (false, false) => Cell::Fixed(corner),
                _ => Cell::Fixed(Gf4::ONE),
            }
        })
        .collect();
    let mut search = CellSearch::new(p + 1, q + 1, cells, |rm, km| {
        relaxed.is_basis((row_mask & !bits::expand(rm, &rows)) | bits::expand(km, &cols))
    });
    let interior_rows: Vec<usize> = (0..p).collect();
    let interior_cols: Vec<usize> = (0..q).collect();
    search
        .solve(first_only)
        .into_iter()
        .map(|c| {
            c.submatrix(&interior_rows, &interior_cols)
                .expect("indices in range")
                .with_labels(rr.a.row_labels().unwrap().to_vec(), rr.a.col_labels().unwrap().to_vec())
                .expect("labels are unique")
        })
        .collect()
}

/// The ω-corner oracle: is there an `A'` over `{1, ω}` on the support of `A`
/// giving a block-form representation of the relaxation with corner `ω`?
pub fn omega_corner_search(rr: &ReducedRepresentation) -> RelaxationVerdict {
    match omega_corner_solutions(rr, SearchSpace::Restricted, Gf4::OMEGA, true).pop() {
        Some(a2) => RelaxationVerdict { representable: true, witness: Witness::Matrix(rr.bordered(&a2, Gf4::OMEGA)) },
        None => RelaxationVerdict { representable: false, witness: Witness::None },
    }
}
