//! Named matroids and the construction calculus: uniform matroids, wheels and
//! whirls, `Θ_k`, generalized parallel connection, generalized Δ-Y and Y-Δ
//! exchanges, wheel gluing, series/parallel extensions and path sequences.

mod delta;
mod gpc;
mod named;
mod path;
mod theta;

pub use delta::{check_delta_identities, delta_y, glue_wheel, nabla_y, DeltaIdentityReport};
pub use gpc::{generalized_parallel_connection, is_modular_flat};
pub use named::{named, NAMED};
pub use path::{
    enumerate_path_sequences, parse_path_spec, run_path_sequence, Axis, DescribedMatroid, Extension, PathSequenceStep,
    PathState,
};
pub use theta::theta;

use crate::error::{Error, Result};
use crate::matroid::bits::{self, elements};
use crate::matroid::{Matroid, Subset, MAX_ELEMENTS};
use crate::relaxation::relax;

pub(crate) fn labels<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// `U_{r,n}` on elements `0..n`.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::Precondition(format!("U_{{{r},{n}}} needs r ≤ n")));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::UnsupportedScale { elements: n, bound: MAX_ELEMENTS });
    }
    Ok(Matroid::from_bases_unchecked(crate::matroid::default_labels(n), bits::combinations(n, r).collect()))
}

/// `U_{r,n}` with the given element names.
pub fn uniform_labelled<S: AsRef<str>>(r: usize, names: &[S]) -> Result<Matroid> {
    uniform(r, names.len())?.with_labels(labels(names))
}

/// Cycle matroid of a multigraph on `vertices` vertices. Edge `i` is named
/// `names[i]`.
pub fn graphic<S: AsRef<str>>(vertices: usize, edges: &[(usize, usize)], names: &[S]) -> Result<Matroid> {
    if edges.len() != names.len() {
        return Err(Error::Precondition("one name per edge".into()));
    }
    if edges.iter().any(|&(u, v)| u >= vertices || v >= vertices) {
        return Err(Error::Precondition("edge endpoint out of range".into()));
    }
    let m = edges.len();
    if m > MAX_ELEMENTS {
        return Err(Error::UnsupportedScale { elements: m, bound: MAX_ELEMENTS });
    }
    let ranks = (0..1u32 << m)
        .map(|s| {
            let mut parent: Vec<usize> = (0..vertices).collect();
            let mut rank = 0;
            for e in elements(s) {
                let (a, b) = (find(&mut parent, edges[e].0), find(&mut parent, edges[e].1));
                if a != b {
                    parent[a] = b;
                    rank += 1;
                }
            }
            rank
        })
        .collect();
    crate::matroid::check_unique_labels(&labels(names))?;
    Ok(Matroid::from_rank_table_unchecked(labels(names), ranks))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Spoke and rim names of the `r`-spoked wheel, interleaved
/// `s1 t1 s2 t2 …`; triangle `i` is `{s_i, t_i, s_{i+1}}`.
pub fn wheel_labels(r: usize) -> Vec<String> {
    (1..=r).flat_map(|i| [format!("s{i}"), format!("t{i}")]).collect()
}

/// Cycle matroid of the wheel with `r` spokes. Hub is vertex 0, rim vertex
/// `i` is `i`; spoke `s_i` joins the hub to rim vertex `i`, and rim edge
/// `t_i` joins rim vertices `i` and `i+1`.
pub fn wheel(r: usize) -> Result<Matroid> {
    if r < 2 {
        return Err(Error::Precondition("a wheel needs at least two spokes".into()));
    }
    let edges: Vec<(usize, usize)> = (1..=r).flat_map(|i| [(0, i), (i, i % r + 1)]).collect();
    graphic(r + 1, &edges, &wheel_labels(r))
}

/// The rim `{t_1, …, t_r}` of [`wheel`]`(r)`.
pub fn rim(m: &Matroid, r: usize) -> Result<Subset> {
    let names: Vec<String> = (1..=r).map(|i| format!("t{i}")).collect();
    m.mask_of(&names)
}

/// The rank-`r` whirl: the wheel with its rim relaxed.
pub fn whirl(r: usize) -> Result<Matroid> {
    let w = wheel(r)?;
    let x = rim(&w, r)?;
    relax(&w, x)
}

/// Does `a` form a segment: at least three elements, every 3-subset a triangle?
pub fn is_segment(m: &Matroid, a: Subset) -> bool {
    bits::size(a) >= 3 && bits::combinations_in(a, 3).all(|t| m.is_circuit(t))
}

pub fn is_cosegment(m: &Matroid, a: Subset) -> bool {
    bits::size(a) >= 3
        && bits::combinations_in(a, 3)
            .all(|t| m.dual_rank_of(t) == 2 && elements(t).all(|e| m.dual_rank_of(t & !(1 << e)) == 2))
}

pub fn is_coindependent(m: &Matroid, a: Subset) -> bool {
    m.dual_rank_of(a) == bits::size(a)
}

/// A label not used by `m` and not in `taken`, derived from `stem`.
pub(crate) fn fresh_label(m: &Matroid, taken: &[String], stem: &str) -> String {
    let mut cand = stem.to_string();
    while m.index_of(&cand).is_ok() || taken.contains(&cand) {
        cand.push('\'');
    }
    cand
}

/// Adds new elements parallel to `element`, named by `new`.
pub fn parallel_extension_labelled<S: AsRef<str>>(m: &Matroid, element: &str, new: &[S]) -> Result<Matroid> {
    let e = m.index_of(element)?;
    let n = m.size();
    let total = n + new.len();
    if total > MAX_ELEMENTS {
        return Err(Error::UnsupportedScale { elements: total, bound: MAX_ELEMENTS });
    }
    let mut names: Vec<String> = m.labels().to_vec();
    names.extend(labels(new));
    crate::matroid::check_unique_labels(&names)?;
    let low = bits::full(n);
    let ranks = (0..1u32 << total)
        .map(|s| {
            let base = s & low;
            let mapped = if s >> n != 0 { base | 1 << e } else { base };
            m.rank_of(mapped) as u8
        })
        .collect();
    Ok(Matroid::from_rank_table_unchecked(names, ranks))
}

/// Adds `count` elements parallel to `element`, named `element'`, `element''`, ….
pub fn parallel_extension(m: &Matroid, element: &str, count: usize) -> Result<Matroid> {
    let mut names: Vec<String> = Vec::new();
    for _ in 0..count {
        let l = fresh_label(m, &names, &format!("{element}'"));
        names.push(l);
    }
    parallel_extension_labelled(m, element, &names)
}

/// Adds elements in series with `element`: the dual of a parallel extension.
pub fn series_extension_labelled<S: AsRef<str>>(m: &Matroid, element: &str, new: &[S]) -> Result<Matroid> {
    Ok(parallel_extension_labelled(&m.dual(), element, new)?.dual())
}

pub fn series_extension(m: &Matroid, element: &str, count: usize) -> Result<Matroid> {
    Ok(parallel_extension(&m.dual(), element, count)?.dual())
}

#[cfg(test)]
mod tests;
