//! `Θ_k` from an explicit rational configuration.
//!
//! `B` is the standard basis of `ℚ^k`. The line `L` through `p = (1,…,1)` and
//! `q = (1, 2, 4, …, 2^{k−1})` meets the hyperplane spanned by `B − b_i` in
//! `a_i = q_i·p − q`, whose `i`-th coordinate vanishes. The matroid is the
//! column matroid of `[a_1 … a_k | b_1 … b_k]`.

use crate::error::{Error, Result};
use crate::matroid::bits::{self, elements};
use crate::matroid::Matroid;

/// Exact determinant of a square integer matrix (Bareiss elimination).
pub(crate) fn integer_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Column matroid of an integer matrix whose columns are given, over ℚ
/// (`modulus = None`) or over the prime field `GF(p)`.
pub(crate) fn integer_column_matroid(columns: &[Vec<i64>], names: Vec<String>, modulus: Option<i128>) -> Matroid {
    let rows = columns.first().map_or(0, Vec::len);
    let n = columns.len();
    let nonzero = |d: i128| match modulus {
        Some(p) => d.rem_euclid(p) != 0,
        None => d != 0,
    };
    // the rank is the size of a largest nonvanishing minor
    let minor = |cols: &[usize], row_set: &[usize]| -> i128 {
        integer_det(row_set.iter().map(|&r| cols.iter().map(|&c| columns[c][r] as i128).collect()).collect())
    };
    let rank = (0..=rows.min(n))
        .rev()
        .find(|&k| {
            bits::combinations(n, k).any(|s| {
                let cols: Vec<usize> = elements(s).collect();
                bits::combinations(rows, k).any(|rs| nonzero(minor(&cols, &elements(rs).collect::<Vec<_>>())))
            })
        })
        .unwrap_or(0);
    let bases = bits::combinations(n, rank)
        .filter(|&s| {
            let cols: Vec<usize> = elements(s).collect();
            bits::combinations(rows, rank).any(|rs| nonzero(minor(&cols, &elements(rs).collect::<Vec<_>>())))
        })
        .collect();
    Matroid::from_bases_unchecked(names, bases)
}

/// `Θ_k` for any `k ≥ 2`, elements `a1 … ak b1 … bk`.
pub(crate) fn theta_any(k: usize) -> Matroid {
    let q: Vec<i64> = (0..k).map(|i| 1 << i).collect();
    let mut columns: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| q[i] - q[j]).collect()).collect();
    columns.extend((0..k).map(|i| (0..k).map(|j| (i == j) as i64).collect()));
    let names: Vec<String> = (1..=k).map(|i| format!("a{i}")).chain((1..=k).map(|i| format!("b{i}"))).collect();
    integer_column_matroid(&columns, names, None)
}

/// `Θ_k` for `k ∈ {3, 4}` with elements `a1 … ak b1 … bk`; `A = {a_i}` is a
/// modular `k`-point line and `B = {b_i}` a basis.
pub fn theta(k: usize) -> Result<Matroid> {
    if !(3..=4).contains(&k) {
        return Err(Error::Precondition(format!("Θ_k is provided for k ∈ {{3,4}}, not {k}")));
    }
    Ok(theta_any(k))
}

#[cfg(test)]
mod tests {
    use super::super::labels;
    use super::*;

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 0], vec![1, 3, 4], vec![0, 5, -2]];
        // 2(3·−2 − 4·5) + 1(1·−2 − 0) = −52 − 2
        assert_eq!(integer_det(m), -54);
        assert_eq!(integer_det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(integer_det(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn theta_shapes() {
        for k in 2..=4 {
            let t = theta_any(k);
            assert_eq!(t.size(), 2 * k);
            assert_eq!(t.rank(), k);
            let b = t.mask_of(&labels(&(1..=k).map(|i| format!("b{i}")).collect::<Vec<_>>())).unwrap();
            assert!(t.is_basis(b));
        }
        assert_eq!(theta_any(4).num_bases(), 49);
        assert!(theta(5).is_err());
    }
}
