//! Minor testing and fragility.
//!
//! Every minor of `M` can be written `M / C \ D` with `C` independent and `D`
//! coindependent, so a search for an `N`-minor picks an independent `C` of
//! size `r(M) − r(N)` and then a set `K` of `|E(N)|` elements spanning `M/C`,
//! comparing `M/C|K` with `N`. Uniform targets are recognised directly from
//! the rank function; other targets by basis count and canonical key.

use crate::constructions::uniform;
use crate::error::{Error, Result};
use crate::matroid::bits::{self, elements, size};
use crate::matroid::{CanonicalKey, Matroid, Subset};

/// `M / contract \ delete` is isomorphic to the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorWitness {
    pub contract: Subset,
    pub delete: Subset,
}

/// A target matroid with the data the search needs precomputed.
#[derive(Debug, Clone)]
pub struct Target {
    pub matroid: Matroid,
    uniform: bool,
    key: CanonicalKey,
}

impl Target {
    pub fn new(matroid: Matroid) -> Target {
        let full = bits::combinations(matroid.size(), matroid.rank()).count();
        let uniform = matroid.num_bases() == full;
        let key = matroid.canonical_key();
        Target { matroid, uniform, key }
    }
}

/// `{U_{2,4}}`.
pub fn u24_family() -> Vec<Target> {
    vec![Target::new(uniform(2, 4).expect("valid parameters"))]
}

/// `{U_{2,5}, U_{3,5}}`.
pub fn u25_u35_family() -> Vec<Target> {
    vec![
        Target::new(uniform(2, 5).expect("valid parameters")),
        Target::new(uniform(3, 5).expect("valid parameters")),
    ]
}

pub fn has_minor(m: &Matroid, n: &Matroid) -> Option<MinorWitness> {
    find_minor(m, &Target::new(n.clone()))
}

pub fn has_any_minor(m: &Matroid, targets: &[Target]) -> bool {
    targets.iter().any(|t| find_minor(m, t).is_some())
}

/// Searches for a minor of `m` isomorphic to `t`.
pub fn find_minor(m: &Matroid, t: &Target) -> Option<MinorWitness> {
    let n = &t.matroid;
    if n.size() > m.size() || n.rank() > m.rank() || n.corank() > m.corank() {
        return None;
    }
    let c_size = m.rank() - n.rank();
    let k = n.size();
    let s = n.rank();
    let g = m.ground();
    for c in bits::combinations(m.size(), c_size) {
        if !m.is_independent(c) {
            continue;
        }
        let rest = g & !c;
        let found = if t.uniform {
            general_position_set(m, c, rest, s, k)
        } else {
            matching_restriction(m, c, rest, t)
        };
        if let Some(keep) = found {
            return Some(MinorWitness { contract: c, delete: rest & !keep });
        }
    }
    None
}

/// A `k`-subset `K` of `rest` all of whose `s`-subsets are bases of `M/C`,
/// i.e. `M/C|K ≅ U_{s,k}`.
fn general_position_set(m: &Matroid, c: Subset, rest: Subset, s: usize, k: usize) -> Option<Subset> {
    let rc = m.rank_of(c);
    let cand: Vec<usize> = elements(rest).collect();
    // every chosen element must be a non-loop of M/C unless s = 0
    let indep = |t: Subset| m.rank_of(t | c) - rc == size(t).min(s);
    fn grow(
        cand: &[usize],
        from: usize,
        chosen: Subset,
        k: usize,
        s: usize,
        indep: &dyn Fn(Subset) -> bool,
    ) -> Option<Subset> {
        if size(chosen) == k {
            return Some(chosen);
        }
        for i in from..cand.len() {
            if cand.len() - i < k - size(chosen) {
                break;
            }
            let e = cand[i];
            // every subset of size ≤ s containing e stays independent
            let ok = bits::subsets(chosen).filter(|&t| size(t) < s.max(1)).all(|t| indep(t | 1 << e));
            if ok {
                if let Some(found) = grow(cand, i + 1, chosen | 1 << e, k, s, indep) {
                    return Some(found);
                }
            }
        }
        None
    }
    grow(&cand, 0, 0, k, s, &indep)
}

fn matching_restriction(m: &Matroid, c: Subset, rest: Subset, t: &Target) -> Option<Subset> {
    let n = &t.matroid;
    let rc = m.rank_of(c);
    let s = n.rank();
    bits::combinations_in(rest, n.size()).find(|&keep| {
        if m.rank_of(keep | c) - rc != s {
            return false;
        }
        let bases = bits::combinations_in(keep, s).filter(|&b| m.rank_of(b | c) - rc == s).count();
        bases == n.num_bases() && m.minor(c, rest & !keep).canonical_key() == t.key
    })
}

/// Per-element deletability/contractibility with respect to a target family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragilityReport {
    /// `M \ e` has a target minor.
    pub deletable: Vec<bool>,
    /// `M / e` has a target minor.
    pub contractible: Vec<bool>,
    pub has_minor: bool,
    pub is_fragile: bool,
}

impl FragilityReport {
    pub fn nondeletable(&self, e: usize) -> bool {
        !self.deletable[e]
    }

    pub fn noncontractible(&self, e: usize) -> bool {
        !self.contractible[e]
    }

    /// The report of the dual matroid against the dual family.
    pub fn dual(&self) -> FragilityReport {
        FragilityReport {
            deletable: self.contractible.clone(),
            contractible: self.deletable.clone(),
            has_minor: self.has_minor,
            is_fragile: self.is_fragile,
        }
    }

    /// The report after reordering elements: old `e` becomes `perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> FragilityReport {
        let mut deletable = vec![false; perm.len()];
        let mut contractible = vec![false; perm.len()];
        for (e, &p) in perm.iter().enumerate() {
            deletable[p] = self.deletable[e];
            contractible[p] = self.contractible[e];
        }
        FragilityReport { deletable, contractible, has_minor: self.has_minor, is_fragile: self.is_fragile }
    }

    pub fn nondeletable_set(&self) -> Subset {
        (0..self.deletable.len()).filter(|&e| !self.deletable[e]).fold(0, |a, e| a | 1 << e)
    }

    pub fn noncontractible_set(&self) -> Subset {
        (0..self.contractible.len()).filter(|&e| !self.contractible[e]).fold(0, |a, e| a | 1 << e)
    }
}

pub fn fragility_report(m: &Matroid, targets: &[Target]) -> FragilityReport {
    let has = has_any_minor(m, targets);
    let n = m.size();
    let (deletable, contractible): (Vec<bool>, Vec<bool>) = if has {
        (0..n)
            .map(|e| (has_any_minor(&m.delete(1 << e), targets), has_any_minor(&m.contract(1 << e), targets)))
            .unzip()
    } else {
        (vec![false; n], vec![false; n])
    };
    let is_fragile = has && (0..n).all(|e| !(deletable[e] && contractible[e]));
    FragilityReport { deletable, contractible, has_minor: has, is_fragile }
}

/// Segments (every 3-subset a triangle) that are coindependent and contain a
/// nondeletable element. Empty when `m` has no target minor.
pub fn allowable_segments(m: &Matroid, report: &FragilityReport) -> Vec<Subset> {
    if !report.has_minor {
        return Vec::new();
    }
    let nondel = report.nondeletable_set();
    (0..=m.ground())
        .filter(|&s| {
            size(s) >= 3
                && s & nondel != 0
                && m.rank_of(s) == 2
                && crate::constructions::is_coindependent(m, s)
                && crate::constructions::is_segment(m, s)
        })
        .collect()
}

/// Allowable segments of the dual.
pub fn allowable_cosegments(m: &Matroid, report: &FragilityReport) -> Vec<Subset> {
    allowable_segments(&m.dual(), &report.dual())
}

/// Every element of the basis `x` is nondeletable and every element outside
/// it is noncontractible.
pub fn check_nondeletable_basis(m: &Matroid, report: &FragilityReport, x: Subset) -> Result<bool> {
    if !m.is_basis(x) {
        return Err(Error::Precondition(format!("{} is not a basis", m.format_set(x))));
    }
    Ok(elements(x).all(|e| report.nondeletable(e))
        && elements(m.ground() & !x).all(|e| report.noncontractible(e)))
}

#[cfg(test)]
mod tests;
