//! Matroids on at most [`MAX_ELEMENTS`] labelled elements, stored as an
//! explicit basis family together with the full rank table.

pub mod bits;
mod connectivity;
mod io;
mod iso;
mod sums;

pub use connectivity::SeparationReport;
pub use iso::{CanonicalForm, CanonicalKey};

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};
use crate::gf4::{det_in_place, Gf4, Gf4Matrix};
use bits::{elements, size};

/// A subset of the ground set; bit `i` stands for element `i`.
pub type Subset = u32;

/// Largest supported ground set. Rank tables have `2^n` entries.
pub const MAX_ELEMENTS: usize = 16;

static VALIDATION: AtomicBool = AtomicBool::new(false);

/// Turns on re-validation of the matroid axioms for every internally
/// constructed matroid. Off by default; the public constructors that take
/// untrusted input always validate.
pub fn set_validation(on: bool) {
    VALIDATION.store(on, Ordering::Relaxed);
}

pub fn validation_enabled() -> bool {
    VALIDATION.load(Ordering::Relaxed)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    labels: Vec<String>,
    rank: usize,
    /// Sorted ascending by mask.
    bases: Vec<Subset>,
    ranks: Vec<u8>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

pub(crate) fn check_unique_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_ELEMENTS {
        return Err(Error::UnsupportedScale { elements: labels.len(), bound: MAX_ELEMENTS });
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Rank table from a basis family: mark every subset of a basis as
/// independent, then take maxima over single-element deletions.
fn rank_table(n: usize, bases: &[Subset]) -> Vec<u8> {
    let total = 1usize << n;
    let mut indep = vec![false; total];
    for &b in bases {
        indep[b as usize] = true;
    }
    for s in (0..total).rev() {
        if indep[s] {
            continue;
        }
        let mut rest = !s & (total - 1);
        while rest != 0 {
            let e = rest & rest.wrapping_neg();
            if indep[s | e] {
                indep[s] = true;
                break;
            }
            rest &= rest - 1;
        }
    }
    let mut ranks = vec![0u8; total];
    for s in 1..total {
        ranks[s] = if indep[s] {
            s.count_ones() as u8
        } else {
            let mut best = 0;
            let mut rest = s;
            while rest != 0 {
                let e = rest & rest.wrapping_neg();
                best = best.max(ranks[s ^ e]);
                rest &= rest - 1;
            }
            best
        };
    }
    ranks
}

/// Checks the rank axioms in local form: `r(∅) = 0`, unit increase, and
/// `r(S+e) + r(S+f) ≥ r(S+e+f) + r(S)`.
fn check_rank_axioms(n: usize, ranks: &[u8]) -> std::result::Result<(), String> {
    if ranks[0] != 0 {
        return Err("empty set has nonzero rank".into());
    }
    let total = 1usize << n;
    for s in 0..total {
        let rs = ranks[s];
        for e in 0..n {
            if s >> e & 1 == 1 {
                continue;
            }
            let se = s | 1 << e;
            let d = ranks[se].wrapping_sub(rs);
            if d > 1 {
                return Err(format!("rank jumps by more than one adding {e} to {s:#b}"));
            }
            for f in e + 1..n {
                if s >> f & 1 == 1 {
                    continue;
                }
                let sf = s | 1 << f;
                if (ranks[se] as u32 + ranks[sf] as u32) < (ranks[se | 1 << f] as u32 + rs as u32) {
                    return Err(format!(
                        "submodularity fails at {s:#b} with elements {e} and {f}"
                    ));
                }
            }
        }
    }
    Ok(())
}

impl Matroid {
    /// Builds a matroid from a basis family, checking the basis axioms.
    pub fn from_bases(labels: Vec<String>, mut bases: Vec<Subset>) -> Result<Matroid> {
        check_unique_labels(&labels)?;
        let n = labels.len();
        bases.sort_unstable();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return Err(Error::NotAMatroid("no bases".into()));
        };
        let rank = size(first);
        if let Some(&b) = bases.iter().find(|&&b| b >> n != 0) {
            return Err(Error::NotAMatroid(format!("basis {b:#b} leaves the ground set")));
        }
        if bases.iter().any(|&b| size(b) != rank) {
            return Err(Error::NotAMatroid("bases of different sizes".into()));
        }
        let ranks = rank_table(n, &bases);
        // a downward-closed family is a matroid iff its max-subset rank is submodular
        check_rank_axioms(n, &ranks).map_err(|m| Error::NotAMatroid(format!("basis exchange fails: {m}")))?;
        Ok(Matroid { labels, rank, bases, ranks })
    }

    /// Builds a matroid from a rank function, checking the rank axioms.
    pub fn from_rank_fn(labels: Vec<String>, mut rank: impl FnMut(Subset) -> usize) -> Result<Matroid> {
        check_unique_labels(&labels)?;
        let n = labels.len();
        let ranks: Vec<u8> = (0..1u32 << n).map(|s| rank(s) as u8).collect();
        check_rank_axioms(n, &ranks).map_err(Error::NotAMatroid)?;
        let r = ranks[(1usize << n) - 1] as usize;
        let bases = bases_from_ranks(n, r, &ranks);
        Ok(Matroid { labels, rank: r, bases, ranks })
    }

    /// Internal constructor for basis families known to be matroids.
    pub(crate) fn from_bases_unchecked(labels: Vec<String>, mut bases: Vec<Subset>) -> Matroid {
        bases.sort_unstable();
        bases.dedup();
        let n = labels.len();
        debug_assert!(n <= MAX_ELEMENTS);
        let rank = bases.first().map_or(0, |&b| size(b));
        let ranks = rank_table(n, &bases);
        let m = Matroid { labels, rank, bases, ranks };
        m.revalidate();
        m
    }

    /// Internal constructor from a rank table known to satisfy the axioms.
    pub(crate) fn from_rank_table_unchecked(labels: Vec<String>, ranks: Vec<u8>) -> Matroid {
        let n = labels.len();
        debug_assert_eq!(ranks.len(), 1 << n);
        let rank = ranks[(1usize << n) - 1] as usize;
        let bases = bases_from_ranks(n, rank, &ranks);
        let m = Matroid { labels, rank, bases, ranks };
        m.revalidate();
        m
    }

    fn revalidate(&self) {
        if validation_enabled() {
            if let Err(msg) = self.validate() {
                panic!("internal construction produced a non-matroid: {msg}");
            }
        }
    }

    /// Re-checks the matroid axioms and that the rank table agrees with
    /// the basis family.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.size();
        check_rank_axioms(n, &self.ranks)?;
        if rank_table(n, &self.bases) != self.ranks {
            return Err("rank table disagrees with bases".into());
        }
        if bases_from_ranks(n, self.rank, &self.ranks) != self.bases {
            return Err("basis family is not the set of maximal independent sets".into());
        }
        Ok(())
    }

    /// Brute-force basis exchange check, independent of the rank table.
    pub fn satisfies_basis_exchange(&self) -> bool {
        let set: HashSet<Subset> = self.bases.iter().copied().collect();
        self.bases.iter().all(|&b1| {
            self.bases.iter().all(|&b2| {
                elements(b1 & !b2).all(|x| {
                    elements(b2 & !b1).any(|y| set.contains(&(b1 ^ (1 << x) | (1 << y))))
                })
            })
        })
    }

    /// The matroid on zero elements.
    pub fn empty() -> Matroid {
        Matroid { labels: Vec::new(), rank: 0, bases: vec![0], ranks: vec![0] }
    }

    /// `M[I | a]`: rows of `a` label the identity part, columns the rest.
    /// Labels come from the matrix, defaulting to row index / rows + column index.
    pub fn from_gf4_matrix(a: &Gf4Matrix) -> Result<Matroid> {
        let p = a.rows();
        let q = a.cols();
        let labels: Vec<String> =
            (0..p).map(|i| a.row_label(i)).chain((0..q).map(|j| a.col_label(j))).collect();
        check_unique_labels(&labels)?;
        let n = p + q;
        let row_mask = bits::full(p);
        let mut buf = vec![Gf4::ZERO; p * p];
        let mut bases = Vec::new();
        for s in bits::combinations(n, p) {
            let missing_rows: Vec<usize> = elements(row_mask & !s).collect();
            let cols: Vec<usize> = elements(s >> p).collect();
            let k = cols.len();
            for (i, &r) in missing_rows.iter().enumerate() {
                for (j, &c) in cols.iter().enumerate() {
                    buf[i * k + j] = a.get(r, c);
                }
            }
            if k == 0 || !det_in_place(&mut buf[..k * k], k).is_zero() {
                bases.push(s);
            }
        }
        Ok(Matroid::from_bases_unchecked(labels, bases))
    }

    /// The column matroid of `a`. Column labels name the elements.
    pub fn column_matroid(a: &Gf4Matrix) -> Result<Matroid> {
        let n = a.cols();
        let labels: Vec<String> = match a.col_labels() {
            Some(l) => l.to_vec(),
            None => default_labels(n),
        };
        check_unique_labels(&labels)?;
        let r = a.rank();
        let bases: Vec<Subset> = bits::combinations(n, r)
            .filter(|&s| {
                let cols: Vec<usize> = elements(s).collect();
                let all_rows: Vec<usize> = (0..a.rows()).collect();
                a.submatrix(&all_rows, &cols).map(|m| m.rank() == r).unwrap_or(false)
            })
            .collect();
        Ok(Matroid::from_bases_unchecked(labels, bases))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.size() - self.rank
    }

    pub fn ground(&self) -> Subset {
        bits::full(self.size())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        labels.iter().try_fold(0, |acc, l| Ok(acc | 1 << self.index_of(l.as_ref())?))
    }

    pub fn labels_of(&self, s: Subset) -> Vec<&str> {
        elements(s).map(|e| self.label(e)).collect()
    }

    /// `{a,b,c}` style rendering of a subset.
    pub fn format_set(&self, s: Subset) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    /// The full rank table indexed by subset.
    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    #[inline]
    pub fn rank_of(&self, s: Subset) -> usize {
        self.ranks[s as usize] as usize
    }

    /// Rank in the dual matroid.
    #[inline]
    pub fn dual_rank_of(&self, s: Subset) -> usize {
        size(s) + self.rank_of(self.ground() & !s) - self.rank
    }

    pub fn is_independent(&self, s: Subset) -> bool {
        self.rank_of(s) == size(s)
    }

    pub fn is_basis(&self, s: Subset) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    pub fn is_spanning(&self, s: Subset) -> bool {
        self.rank_of(s) == self.rank
    }

    pub fn is_circuit(&self, s: Subset) -> bool {
        let k = size(s);
        k > 0 && self.rank_of(s) == k - 1 && elements(s).all(|e| self.rank_of(s & !(1 << e)) == k - 1)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(1 << e) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.ground() & !(1 << e)) < self.rank
    }

    pub fn loops(&self) -> Subset {
        self.closure(0)
    }

    pub fn coloops(&self) -> Subset {
        (0..self.size()).filter(|&e| self.is_coloop(e)).fold(0, |a, e| a | 1 << e)
    }

    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank_of(s);
        (0..self.size()).filter(|&e| self.rank_of(s | 1 << e) == r).fold(s, |a, e| a | 1 << e)
    }

    /// Closure in the dual matroid.
    pub fn coclosure(&self, s: Subset) -> Subset {
        let rest = self.ground() & !s;
        let r = self.rank_of(rest);
        elements(rest).filter(|&e| self.rank_of(rest & !(1 << e)) < r).fold(s, |a, e| a | 1 << e)
    }

    /// Smallest set containing `s` closed under both closure and coclosure.
    pub fn full_closure(&self, s: Subset) -> Subset {
        let mut cur = s;
        loop {
            let next = self.coclosure(self.closure(cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    pub fn flats(&self) -> Vec<Subset> {
        (0..=self.ground()).filter(|&s| self.is_flat(s)).collect()
    }

    pub fn hyperplanes(&self) -> Vec<Subset> {
        if self.rank == 0 {
            return Vec::new();
        }
        (0..=self.ground()).filter(|&s| self.rank_of(s) + 1 == self.rank && self.is_flat(s)).collect()
    }

    pub fn circuits(&self) -> Vec<Subset> {
        (1..=self.ground()).filter(|&s| self.is_circuit(s)).collect()
    }

    pub fn cocircuits(&self) -> Vec<Subset> {
        let g = self.ground();
        let mut out: Vec<Subset> = self.hyperplanes().into_iter().map(|h| g & !h).collect();
        out.sort_unstable();
        out
    }

    pub fn is_circuit_hyperplane(&self, s: Subset) -> bool {
        self.rank > 0 && size(s) == self.rank && self.rank_of(s) + 1 == self.rank && self.is_circuit(s) && self.is_flat(s)
    }

    pub fn circuit_hyperplanes(&self) -> Vec<Subset> {
        if self.rank == 0 {
            return Vec::new();
        }
        bits::combinations(self.size(), self.rank).filter(|&s| self.is_circuit_hyperplane(s)).collect()
    }

    /// Circuits of size three.
    pub fn triangles(&self) -> Vec<Subset> {
        bits::combinations(self.size(), 3).filter(|&s| self.is_circuit(s)).collect()
    }

    /// Cocircuits of size three.
    pub fn triads(&self) -> Vec<Subset> {
        bits::combinations(self.size(), 3)
            .filter(|&s| {
                self.dual_rank_of(s) == 2 && elements(s).all(|e| self.dual_rank_of(s & !(1 << e)) == 2)
            })
            .collect()
    }

    pub fn dual(&self) -> Matroid {
        let g = self.ground();
        let n = self.size();
        let ranks = (0..1u32 << n).map(|s| self.dual_rank_of(s) as u8).collect();
        let mut bases: Vec<Subset> = self.bases.iter().map(|&b| g & !b).collect();
        bases.sort_unstable();
        Matroid { labels: self.labels.clone(), rank: n - self.rank, bases, ranks }
    }

    /// Contract `contract` and delete `delete` (disjoint sets).
    pub fn minor(&self, contract: Subset, delete: Subset) -> Matroid {
        assert_eq!(contract & delete, 0, "contract and delete sets overlap");
        let keep: Vec<usize> = elements(self.ground() & !contract & !delete).collect();
        let rc = self.rank_of(contract) as u8;
        let ranks: Vec<u8> = (0..1u32 << keep.len())
            .map(|s| self.ranks[(bits::expand(s, &keep) | contract) as usize] - rc)
            .collect();
        let labels = keep.iter().map(|&e| self.labels[e].clone()).collect();
        let n = keep.len();
        let rank = ranks[(1usize << n) - 1] as usize;
        let bases = bases_from_ranks(n, rank, &ranks);
        Matroid { labels, rank, bases, ranks }
    }

    pub fn delete(&self, s: Subset) -> Matroid {
        self.minor(0, s)
    }

    pub fn contract(&self, s: Subset) -> Matroid {
        self.minor(s, 0)
    }

    pub fn restrict(&self, s: Subset) -> Matroid {
        self.minor(0, self.ground() & !s)
    }

    pub fn delete_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        Ok(self.delete(self.mask_of(labels)?))
    }

    pub fn contract_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Matroid> {
        Ok(self.contract(self.mask_of(labels)?))
    }

    /// Same matroid with new element names.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Matroid> {
        if labels.len() != self.size() {
            return Err(Error::Precondition(format!(
                "expected {} labels, got {}",
                self.size(),
                labels.len()
            )));
        }
        check_unique_labels(&labels)?;
        Ok(Matroid { labels, ..self.clone() })
    }

    /// Renames the listed elements; the rest keep their labels.
    pub fn rename(&self, pairs: &[(&str, &str)]) -> Result<Matroid> {
        let mut labels = self.labels.clone();
        for &(from, to) in pairs {
            labels[self.index_of(from)?] = to.to_string();
        }
        self.with_labels(labels)
    }

    /// Reorders the ground set: old element `e` becomes element `perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> Matroid {
        let n = self.size();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for (e, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[e].clone();
        }
        let mut bases: Vec<Subset> = self.bases.iter().map(|&b| bits::permute(b, perm)).collect();
        bases.sort_unstable();
        let mut ranks = vec![0u8; 1 << n];
        for s in 0..1u32 << n {
            ranks[bits::permute(s, perm) as usize] = self.ranks[s as usize];
        }
        Matroid { labels, rank: self.rank, bases, ranks }
    }

    /// Reorders elements so that labels appear in the given order.
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Matroid> {
        if order.len() != self.size() {
            return Err(Error::Precondition("ordering must list every element once".into()));
        }
        let mut perm = vec![usize::MAX; self.size()];
        for (pos, l) in order.iter().enumerate() {
            let e = self.index_of(l.as_ref())?;
            if perm[e] != usize::MAX {
                return Err(Error::DuplicateLabel(l.as_ref().to_string()));
            }
            perm[e] = pos;
        }
        Ok(self.permuted(&perm))
    }

    /// True when both matroids have the same labelled basis family,
    /// regardless of element order.
    pub fn same_labelled(&self, other: &Matroid) -> bool {
        if self.size() != other.size() || self.rank != other.rank {
            return false;
        }
        let Ok(perm) = self.labels.iter().map(|l| other.index_of(l)).collect::<Result<Vec<_>>>() else {
            return false;
        };
        let mut mapped: Vec<Subset> = self.bases.iter().map(|&b| bits::permute(b, &perm)).collect();
        mapped.sort_unstable();
        mapped == other.bases
    }
}

fn bases_from_ranks(n: usize, rank: usize, ranks: &[u8]) -> Vec<Subset> {
    bits::combinations(n, rank).filter(|&s| ranks[s as usize] as usize == rank).collect()
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matroid(n={}, r={}, labels=[{}], bases=[", self.size(), self.rank, self.labels.join(","))?;
        for (i, &b) in self.bases.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.format_set(b))?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests;
