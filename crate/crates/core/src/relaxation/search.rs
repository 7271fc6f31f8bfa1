//! Backtracking search for a matrix `D` over GF(4) such that `M[I|D]` has a
//! prescribed basis family.
//!
//! A square submatrix `D[R,K]` is nonsingular exactly when `(B − R) ∪ K` is a
//! basis, where `B` labels the rows. Cells are assigned in a fixed order and
//! each submatrix is checked as soon as its last free cell is assigned.

use crate::gf4::{det_in_place, Gf4, Gf4Matrix};
use crate::matroid::bits::{self, elements};

#[derive(Debug, Clone, Copy)]
struct Check {
    rows: u32,
    cols: u32,
    nonsingular: bool,
}

pub(crate) struct CellSearch {
    rows: usize,
    cols: usize,
    values: Vec<Gf4>,
    free: Vec<usize>,
    domains: Vec<Vec<Gf4>>,
    upfront: Vec<Check>,
    after: Vec<Vec<Check>>,
}

/// What a cell may hold.
pub(crate) enum Cell {
    Fixed(Gf4),
    Free(Vec<Gf4>),
}

impl CellSearch {
    /// `cells` is row-major; free cells are assigned in row-major order.
    /// `nonsingular(R, K)` gives the required status of `D[R,K]`.
    pub(crate) fn new(rows: usize, cols: usize, cells: Vec<Cell>, nonsingular: impl Fn(u32, u32) -> bool) -> CellSearch {
        assert_eq!(cells.len(), rows * cols);
        let mut values = vec![Gf4::ZERO; rows * cols];
        let mut free = Vec::new();
        let mut domains = Vec::new();
        let mut order = vec![usize::MAX; rows * cols];
        for (idx, cell) in cells.into_iter().enumerate() {
            match cell {
                Cell::Fixed(v) => values[idx] = v,
                Cell::Free(d) => {
                    order[idx] = free.len();
                    free.push(idx);
                    domains.push(d);
                }
            }
        }
        let mut upfront = Vec::new();
        let mut after = vec![Vec::new(); free.len()];
        for k in 1..=rows.min(cols) {
            for r in bits::combinations(rows, k) {
                for c in bits::combinations(cols, k) {
                    let check = Check { rows: r, cols: c, nonsingular: nonsingular(r, c) };
                    let last = elements(r)
                        .flat_map(|i| elements(c).map(move |j| i * cols + j))
                        .filter_map(|idx| (order[idx] != usize::MAX).then_some(order[idx]))
                        .max();
                    match last {
                        Some(l) => after[l].push(check),
                        None => upfront.push(check),
                    }
                }
            }
        }
        CellSearch { rows, cols, values, free, domains, upfront, after }
    }

    fn holds(&self, check: &Check, buf: &mut [Gf4]) -> bool {
        let k = bits::size(check.rows);
        let mut t = 0;
        for i in elements(check.rows) {
            for j in elements(check.cols) {
                buf[t] = self.values[i * self.cols + j];
                t += 1;
            }
        }
        !det_in_place(&mut buf[..k * k], k).is_zero() == check.nonsingular
    }

    /// All solutions, or only the first when `first_only`.
    pub(crate) fn solve(&mut self, first_only: bool) -> Vec<Gf4Matrix> {
        let mut buf = vec![Gf4::ZERO; 64];
        let mut out = Vec::new();
        if self.upfront.iter().all(|c| self.holds(c, &mut buf)) {
            self.descend(0, first_only, &mut buf, &mut out);
        }
        out
    }

    fn descend(&mut self, k: usize, first_only: bool, buf: &mut [Gf4], out: &mut Vec<Gf4Matrix>) -> bool {
        if k == self.free.len() {
            out.push(Gf4Matrix::from_vec(self.rows, self.cols, self.values.clone()));
            return first_only;
        }
        let idx = self.free[k];
        for vi in 0..self.domains[k].len() {
            self.values[idx] = self.domains[k][vi];
            let ok = self.after[k].iter().all(|c| self.holds(c, buf));
            if ok && self.descend(k + 1, first_only, buf, out) {
                return true;
            }
        }
        self.values[idx] = Gf4::ZERO;
        false
    }
}
