//! Generalized parallel connection along a modular flat.

use crate::error::{Error, Result};
use crate::matroid::bits::{self, elements};
use crate::matroid::{Matroid, Subset, MAX_ELEMENTS};

/// `A` is a flat of `m` and `r(A) + r(F) = r(A ∪ F) + r(A ∩ F)` for every flat `F`.
pub fn is_modular_flat(m: &Matroid, a: Subset) -> bool {
    if !m.is_flat(a) {
        return false;
    }
    let ra = m.rank_of(a);
    m.flats().into_iter().all(|f| ra + m.rank_of(f) == m.rank_of(a | f) + m.rank_of(a & f))
}

/// `P_A(m1, m2)` where `A = E(m1) ∩ E(m2)` (by label) spans a modular flat
/// of `m1` and both matroids agree on `A`.
///
/// The flats of the result are the sets whose traces on `E(m1)` and `E(m2)`
/// are flats; a flat `F` has rank `r1(F ∩ E1) + r2(F ∩ E2) − r(F ∩ A)`.
/// Elements of `m1` come first, then those of `m2 − A` in their order.
pub fn generalized_parallel_connection(m1: &Matroid, m2: &Matroid) -> Result<Matroid> {
    let n1 = m1.size();
    let shared: Vec<(usize, usize)> = (0..m2.size())
        .filter_map(|j| m1.index_of(m2.label(j)).ok().map(|i| (i, j)))
        .collect();
    let a1: Subset = shared.iter().fold(0, |acc, &(i, _)| acc | 1 << i);
    let a2: Subset = shared.iter().fold(0, |acc, &(_, j)| acc | 1 << j);
    if !m1.restrict(a1).same_labelled(&m2.restrict(a2)) {
        return Err(Error::Precondition("the two matroids differ on their common elements".into()));
    }
    if !is_modular_flat(m1, m1.closure(a1)) {
        return Err(Error::Precondition(format!("{} does not span a modular flat", m1.format_set(a1))));
    }
    let rest2: Vec<usize> = (0..m2.size()).filter(|&j| a2 >> j & 1 == 0).collect();
    let n = n1 + rest2.len();
    if n > MAX_ELEMENTS {
        return Err(Error::UnsupportedScale { elements: n, bound: MAX_ELEMENTS });
    }
    // position in the combined ground set of each element of m2
    let mut pos2 = vec![0usize; m2.size()];
    for &(i, j) in &shared {
        pos2[j] = i;
    }
    for (k, &j) in rest2.iter().enumerate() {
        pos2[j] = n1 + k;
    }
    let e1 = bits::full(n1);
    let to2 = |s: Subset| -> Subset {
        (0..m2.size()).filter(|&j| s >> pos2[j] & 1 == 1).fold(0, |acc, j| acc | 1 << j)
    };
    let from2 = |t: Subset| -> Subset { elements(t).fold(0, |acc, j| acc | 1 << pos2[j]) };

    let flat_rank = |f: Subset| -> usize {
        let t1 = f & e1;
        m1.rank_of(t1) + m2.rank_of(to2(f)) - m1.rank_of(t1 & a1)
    };
    let ranks: Vec<u8> = (0..1u32 << n)
        .map(|s| {
            let mut cur = s;
            loop {
                let next = cur | m1.closure(cur & e1) | from2(m2.closure(to2(cur)));
                if next == cur {
                    break;
                }
                cur = next;
            }
            flat_rank(cur) as u8
        })
        .collect();
    let labels: Vec<String> = m1
        .labels()
        .iter()
        .cloned()
        .chain(rest2.iter().map(|&j| m2.label(j).to_string()))
        .collect();
    Ok(Matroid::from_rank_table_unchecked(labels, ranks))
}
