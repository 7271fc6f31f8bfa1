//! Entrywise relations between the interior `A` of a relaxable block form and
//! the interior `A'` of a block-form representation (corner `ω`) of its
//! relaxation.

use crate::gf4::{Gf4, Gf4Matrix};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub pairs: usize,
    /// `A_ij = 0` iff `A'_ij = 0`.
    pub zero_pattern: usize,
    /// No entry of `A'` equals `ω + 1`.
    pub no_omega_plus_one: usize,
    /// `A_ij = A_ik` iff `A'_ij = A'_ik`, and the same within columns.
    pub equality_transfer: usize,
    /// For a diagonal 2×2 submatrix `[a 0; 0 b]` with image `[x 0; 0 y]`:
    /// `a = b` iff `x ≠ y`.
    pub diagonal: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn merge(&mut self, other: LemmaReport) {
        self.pairs += other.pairs;
        self.zero_pattern += other.zero_pattern;
        self.no_omega_plus_one += other.no_omega_plus_one;
        self.equality_transfer += other.equality_transfer;
        self.diagonal += other.diagonal;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every relation on one pair; counts are numbers of checked instances.
pub fn check_micro_lemmas(a: &Gf4Matrix, a2: &Gf4Matrix) -> LemmaReport {
    let mut r = LemmaReport { pairs: 1, ..LemmaReport::default() };
    let (p, q) = (a.rows(), a.cols());
    let tag = || format!("A={} A'={}", a.compact(), a2.compact());
    if (a2.rows(), a2.cols()) != (p, q) {
        r.failures.push(format!("shape mismatch: {}", tag()));
        return r;
    }
    for i in 0..p {
        for j in 0..q {
            r.zero_pattern += 1;
            if a.get(i, j).is_zero() != a2.get(i, j).is_zero() {
                r.failures.push(format!("zero pattern differs at ({},{}): {}", i + 1, j + 1, tag()));
            }
            r.no_omega_plus_one += 1;
            if a2.get(i, j) == Gf4::OMEGA + Gf4::ONE {
                r.failures.push(format!("entry ω+1 at ({},{}): {}", i + 1, j + 1, tag()));
            }
        }
    }
    let nonzero = |m: &Gf4Matrix, i: usize, j: usize| !m.get(i, j).is_zero();
    // rows: cells (i,j), (i,k) both nonzero
    for i in 0..p {
        for j in 0..q {
            for k in j + 1..q {
                if nonzero(a, i, j) && nonzero(a, i, k) {
                    r.equality_transfer += 1;
                    if (a.get(i, j) == a.get(i, k)) != (a2.get(i, j) == a2.get(i, k)) {
                        r.failures.push(format!("row equality not transferred in row {}: {}", i + 1, tag()));
                    }
                }
            }
        }
    }
    for j in 0..q {
        for i in 0..p {
            for k in i + 1..p {
                if nonzero(a, i, j) && nonzero(a, k, j) {
                    r.equality_transfer += 1;
                    if (a.get(i, j) == a.get(k, j)) != (a2.get(i, j) == a2.get(k, j)) {
                        r.failures.push(format!("column equality not transferred in column {}: {}", j + 1, tag()));
                    }
                }
            }
        }
    }
    for i in 0..p {
        for k in i + 1..p {
            for j in 0..q {
                for l in 0..q {
                    if j == l {
                        continue;
                    }
                    let diagonal = nonzero(a, i, j) && nonzero(a, k, l) && !nonzero(a, i, l) && !nonzero(a, k, j);
                    let image = nonzero(a2, i, j) && nonzero(a2, k, l) && !nonzero(a2, i, l) && !nonzero(a2, k, j);
                    if !(diagonal && image) {
                        continue;
                    }
                    r.diagonal += 1;
                    if (a.get(i, j) == a.get(k, l)) == (a2.get(i, j) == a2.get(k, l)) {
                        r.failures.push(format!(
                            "diagonal rows {},{} cols {},{}: {}",
                            i + 1,
                            k + 1,
                            j + 1,
                            l + 1,
                            tag()
                        ));
                    }
                }
            }
        }
    }
    r
}
