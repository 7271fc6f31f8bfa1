//! Isomorph-free generation of the class of 3-connected,
//! `{U_{2,5}, U_{3,5}}`-fragile, GF(4)-representable matroids with no
//! `{P8-, F7=, (F7=)*}`-minor, plus sweeps and checks over small
//! relaxations.
//!
//! Members are grown one element at a time from `U_{2,5}` and `U_{3,5}`.
//! Each entry carries a reduced representation `D` with `M = M[I|D]`; an
//! extension appends a column to `D` and a coextension appends a row. Since
//! 3-connected GF(4)-representable matroids have essentially one
//! representation up to scaling and field automorphisms, extending a single
//! representation reaches every extension in the class.

mod lemmas;
mod structure;
mod sweep;

pub use lemmas::{check_micro_lemmas, LemmaReport};
pub use structure::{structure_candidates, verify_structure_theorem, Outcome, StructureCandidates, StructureReport};
pub use sweep::{interior, run_sweep, sweep_instance, FragilityClass, SweepContext, SweepOptions, SweepRecord, SweepSummary};

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::constructions::{check_delta_identities, is_coindependent, is_segment, named, uniform, DeltaIdentityReport};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::matroid::{bits, CanonicalKey, Matroid};
use crate::minors::{fragility_report, has_any_minor, u24_family, u25_u35_family, Target};

/// Targets used to classify catalog members.
#[derive(Debug, Clone)]
pub struct ClassFilter {
    pub fragile: Vec<Target>,
    pub u24: Vec<Target>,
    pub bad: Vec<Target>,
    pub xy8: Vec<Target>,
    /// Also reject members with an `{X8, Y8, Y8*}`-minor.
    pub exclude_xy8: bool,
}

impl ClassFilter {
    pub fn new() -> Result<ClassFilter> {
        let f7 = named("F7=")?;
        let y8 = named("Y8")?;
        Ok(ClassFilter {
            fragile: u25_u35_family(),
            u24: u24_family(),
            bad: vec![Target::new(named("P8-")?), Target::new(f7.dual()), Target::new(f7)],
            xy8: vec![Target::new(named("X8")?), Target::new(y8.dual()), Target::new(y8)],
            exclude_xy8: false,
        })
    }

    /// The subclass with no `{X8, Y8, Y8*}`-minor.
    pub fn without_xy8() -> Result<ClassFilter> {
        Ok(ClassFilter { exclude_xy8: true, ..ClassFilter::new()? })
    }

    /// Fragile with respect to `{U_{2,5}, U_{3,5}}` and free of the bad minors.
    /// 3-connectivity and representability are checked by the caller.
    pub fn admits(&self, m: &Matroid) -> bool {
        fragility_report(m, &self.fragile).is_fragile
            && !has_any_minor(m, &self.bad)
            && !(self.exclude_xy8 && has_any_minor(m, &self.xy8))
    }

    pub fn flags(&self, m: &Matroid, representable: bool) -> Flags {
        Flags {
            three_connected: m.is_3_connected(),
            gf4_representable: representable,
            fragile_u25_u35: fragility_report(m, &self.fragile).is_fragile,
            fragile_u24: fragility_report(m, &self.u24).is_fragile,
            bad_minor: has_any_minor(m, &self.bad),
            xy8_minor: has_any_minor(m, &self.xy8),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Flags {
    pub three_connected: bool,
    pub gf4_representable: bool,
    pub fragile_u25_u35: bool,
    pub fragile_u24: bool,
    pub bad_minor: bool,
    pub xy8_minor: bool,
}

impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.three_connected, "3conn"),
            (self.gf4_representable, "gf4"),
            (self.fragile_u25_u35, "frag25"),
            (self.fragile_u24, "frag24"),
            (self.bad_minor, "bad"),
            (self.xy8_minor, "xy8"),
        ];
        let on: Vec<&str> = names.iter().filter(|(b, _)| *b).map(|&(_, n)| n).collect();
        f.write_str(if on.is_empty() { "-" } else { "" })?;
        f.write_str(&on.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Operation {
    Seed,
    /// New column of `D`, in compact form.
    Extension(String),
    /// New row of `D`, in compact form.
    Coextension(String),
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Seed => f.write_str("seed"),
            Operation::Extension(c) => write!(f, "ext:{c}"),
            Operation::Coextension(r) => write!(f, "coext:{r}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: CanonicalKey,
    pub matroid: Matroid,
    /// `D` with `matroid = M[I|D]`.
    pub representation: Gf4Matrix,
    pub flags: Flags,
    pub parent: Option<CanonicalKey>,
    pub operation: Operation,
}

impl CatalogEntry {
    /// One line: key, size, rank, bases (hex masks), flags, provenance.
    pub fn to_line(&self) -> String {
        let bases: Vec<String> = self.matroid.bases().iter().map(|b| format!("{b:x}")).collect();
        format!(
            "key={} n={} r={} bases={} D={} flags={} parent={} op={}",
            self.key,
            self.matroid.size(),
            self.matroid.rank(),
            bases.join(","),
            self.representation.compact(),
            self.flags,
            self.parent.as_ref().map_or_else(|| "-".to_string(), CanonicalKey::to_hex),
            self.operation
        )
    }
}

/// Vectors of length `k` whose first nonzero entry is 1.
pub(crate) fn projective_points(k: usize) -> Vec<Vec<Gf4>> {
    let mut out = Vec::new();
    let total = 4usize.pow(k as u32);
    for code in 1..total {
        let v: Vec<Gf4> = (0..k).map(|i| Gf4::ALL[(code >> (2 * (k - 1 - i))) & 3]).collect();
        if v.iter().find(|x| !x.is_zero()) == Some(&Gf4::ONE) {
            out.push(v);
        }
    }
    out
}

/// Single-element extensions and coextensions of `M[I|D]`, as
/// `(new D, operation)`; zero vectors are skipped.
pub(crate) fn one_element_growths(d: &Gf4Matrix) -> Vec<(Gf4Matrix, Operation)> {
    let (r, k) = (d.rows(), d.cols());
    let mut out = Vec::new();
    for v in projective_points(r) {
        let col = Gf4Matrix::from_fn(r, 1, |i, _| v[i]);
        let grown = d.hconcat(&col).expect("row counts agree");
        out.push((grown, Operation::Extension(v.iter().map(|x| x.token()).collect())));
    }
    for u in projective_points(k) {
        let grown = Gf4Matrix::from_fn(r + 1, k, |i, j| if i < r { d.get(i, j) } else { u[j] });
        out.push((grown, Operation::Coextension(u.iter().map(|x| x.token()).collect())));
    }
    out
}

/// The catalog, sorted by size and then canonical key.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, key: &CanonicalKey) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| &e.key == key)
    }

    pub fn contains_isomorph(&self, m: &Matroid) -> bool {
        let key = m.canonical_key();
        self.entries.iter().any(|e| e.key == key)
    }

    pub fn of_size(&self, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.matroid.size() == n)
    }

    pub fn to_text(&self) -> String {
        self.entries.iter().map(|e| e.to_line() + "\n").collect()
    }
}

fn seed_matrix(r: usize) -> Gf4Matrix {
    // U_{2,5}: rows (1 1 1), (1 ω ω²); U_{3,5} is its transpose
    let d = Gf4Matrix::from_rows(&[vec![Gf4::ONE; 3], vec![Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2]])
        .expect("rows have equal length");
    if r == 2 {
        d
    } else {
        d.transpose()
    }
}

/// Generates every class member with at most `max_elements` elements.
pub fn generate_catalog(max_elements: usize) -> Result<Catalog> {
    if max_elements > 12 {
        return Err(Error::UnsupportedScale { elements: max_elements, bound: 12 });
    }
    let filter = ClassFilter::new()?;
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut level: Vec<CatalogEntry> = Vec::new();
    if max_elements >= 5 {
        for r in [2, 3] {
            let d = seed_matrix(r);
            let m = Matroid::from_gf4_matrix(&d)?;
            debug_assert!(m.is_isomorphic(&uniform(r, 5)?));
            let flags = filter.flags(&m, true);
            level.push(CatalogEntry {
                key: m.canonical_key(),
                matroid: m,
                representation: d,
                flags,
                parent: None,
                operation: Operation::Seed,
            });
        }
        level.sort_by(|a, b| a.key.cmp(&b.key));
    }
    for _ in 5..max_elements {
        let next = grow_level(&level, &filter)?;
        entries.append(&mut level);
        level = next;
    }
    entries.append(&mut level);
    Ok(Catalog { entries })
}

struct Candidate {
    key: CanonicalKey,
    matroid: Matroid,
    d: Gf4Matrix,
    parent: CanonicalKey,
    operation: Operation,
}

/// 3-connected one-element growths of the given entries, one per
/// isomorphism class (the first by parent key and operation), before
/// class filtering.
fn growth_candidates(level: &[CatalogEntry]) -> Result<Vec<Candidate>> {
    let raw: Vec<Candidate> = level
        .par_iter()
        .map(|entry| -> Result<Vec<Candidate>> {
            let mut out = Vec::new();
            for (d, operation) in one_element_growths(&entry.representation) {
                let m = Matroid::from_gf4_matrix(&d)?;
                if !m.is_3_connected() {
                    continue;
                }
                out.push(Candidate { key: m.canonical_key(), matroid: m, d, parent: entry.key.clone(), operation });
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut best: BTreeMap<CanonicalKey, Candidate> = BTreeMap::new();
    for c in raw {
        match best.get(&c.key) {
            Some(old) if (&old.parent, &old.operation) <= (&c.parent, &c.operation) => {}
            _ => {
                best.insert(c.key.clone(), c);
            }
        }
    }
    Ok(best.into_values().collect())
}

fn grow_level(level: &[CatalogEntry], filter: &ClassFilter) -> Result<Vec<CatalogEntry>> {
    let candidates = growth_candidates(level)?;
    let entries: Vec<CatalogEntry> = candidates
        .into_par_iter()
        .filter(|c| filter.admits(&c.matroid))
        .map(|c| {
            let flags = filter.flags(&c.matroid, true);
            CatalogEntry { key: c.key, matroid: c.matroid, representation: c.d, flags, parent: Some(c.parent), operation: c.operation }
        })
        .collect();
    Ok(entries)
}

/// No 3-connected single-element extension or coextension of the entry
/// stays in the class. Entries without an `{X8, Y8, Y8*}`-minor are checked
/// against the subclass that also excludes those minors; the others against
/// the full class.
pub fn splitter_check(entry: &CatalogEntry) -> Result<bool> {
    let filter = if entry.flags.xy8_minor { ClassFilter::new()? } else { ClassFilter::without_xy8()? };
    splitter_check_with(entry, &filter)
}

pub fn splitter_check_with(entry: &CatalogEntry, filter: &ClassFilter) -> Result<bool> {
    let candidates = growth_candidates(std::slice::from_ref(entry))?;
    Ok(!candidates.par_iter().any(|c| filter.admits(&c.matroid)))
}

/// Rank-4, 9-element members with no `{X8, Y8, Y8*}`-minor that are
/// splitters for the subclass with no such minor. Every catalog member of
/// this size has a growth in the full class.
pub fn m99_candidates(catalog: &Catalog) -> Result<Vec<&CatalogEntry>> {
    let filter = ClassFilter::without_xy8()?;
    let mut out = Vec::new();
    for e in catalog.of_size(9) {
        if e.matroid.rank() == 4 && !e.flags.xy8_minor && splitter_check_with(e, &filter)? {
            out.push(e);
        }
    }
    Ok(out)
}

/// Runs [`check_delta_identities`] on every coindependent 3- or 4-element
/// segment of every entry with at most `max_elements` elements, and on the
/// duals (so that `Δ` and `∇` are both exercised).
pub fn check_catalog_delta_identities(catalog: &Catalog, max_elements: usize) -> Result<DeltaIdentityReport> {
    let instances: Vec<(Matroid, Vec<String>)> = catalog
        .entries
        .iter()
        .filter(|e| e.matroid.size() <= max_elements)
        .flat_map(|e| [e.matroid.clone(), e.matroid.dual()])
        .flat_map(|m| {
            let segs: Vec<Vec<String>> = (3..=4)
                .flat_map(|k| bits::combinations(m.size(), k).collect::<Vec<_>>())
                .filter(|&s| is_segment(&m, s) && is_coindependent(&m, s))
                .map(|s| m.labels_of(s).into_iter().map(str::to_string).collect())
                .collect();
            segs.into_iter().map(move |s| (m.clone(), s))
        })
        .collect();
    let reports: Vec<(String, DeltaIdentityReport)> = instances
        .par_iter()
        .map(|(m, seg)| {
            let names: Vec<&str> = seg.iter().map(String::as_str).collect();
            Ok((format!("{} on {{{}}}", m.canonical_key(), seg.join(",")), check_delta_identities(m, &names)?))
        })
        .collect::<Result<_>>()?;
    let mut total = DeltaIdentityReport::default();
    for (what, r) in reports {
        total.checked += r.checked;
        total.failures.extend(r.failures.into_iter().map(|f| format!("{what}: {f}")));
    }
    Ok(total)
}
