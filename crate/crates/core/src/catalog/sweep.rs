//! Exhaustive (or sampled) sweeps over interiors `A`: build `M` from the
//! bordered matrix, relax `X`, and compare the scanner with both oracles.
//! Properties of the relaxation that only depend on its isomorphism class
//! are cached by canonical key.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::lemmas::{check_micro_lemmas, LemmaReport};
use super::structure::{structure_candidates, Outcome, StructureCandidates, StructureReport};
use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::matroid::{CanonicalKey, Matroid};
use crate::minors::{check_nondeletable_basis, fragility_report, has_any_minor, u24_family, u25_u35_family, FragilityReport};
use crate::relaxation::{build_reduced_representation, omega_corner_search, omega_corner_solutions, representable_gf4, SearchSpace, Witness};
use crate::scanner::{self, ScanMatch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FragilityClass {
    U24,
    U25U35,
    No,
    /// `M` is not connected or `M'` is not 3-connected.
    NotApplicable,
}

impl fmt::Display for FragilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FragilityClass::U24 => "u24",
            FragilityClass::U25U35 => "u25u35",
            FragilityClass::No => "no",
            FragilityClass::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Match 3-connected relaxations against the structure theorem.
    pub structure: bool,
    /// Enumerate every full-space `A'` and check the entrywise relations.
    pub lemmas: bool,
    /// Keep the one-line record of every instance.
    pub keep_lines: bool,
    /// Sample this many uniformly random interiors instead of all of them.
    pub sample: Option<(usize, u64)>,
    /// Bound for structure candidates; defaults to the instance size.
    pub structure_bound: Option<usize>,
}


/// Per-instance verdicts and derived properties.
#[derive(Debug, Clone)]
pub struct SweepRecord {
    pub a: Gf4Matrix,
    pub scan: Option<ScanMatch>,
    /// No listed template occurs but [`scanner::UNLISTED`] does.
    pub unlisted: bool,
    pub omega: bool,
    /// Interior `A'` found by the ω-corner oracle.
    pub omega_witness: Option<Gf4Matrix>,
    pub generic: bool,
    /// Ordering of the elements of `M'` with every prefix 3-separating.
    pub pw3: Option<Vec<usize>>,
    pub m_connected: bool,
    pub relaxed_3_connected: bool,
    pub fragility: FragilityClass,
    /// `X` is a basis of nondeletable elements whose complement is
    /// noncontractible; set when `fragility` is applicable.
    pub basis_structure: Option<bool>,
    /// `M'` has a `U_{2,4}`-minor; set when `M` is connected.
    pub relaxed_nonbinary: Option<bool>,
    pub outcomes: Option<Vec<Outcome>>,
    pub lemmas: Option<LemmaReport>,
}

impl SweepRecord {
    pub fn agrees(&self) -> bool {
        self.scan.is_none() == self.omega && self.omega == self.generic
    }

    /// `A=<tokens>|scan=<P..|ok>|omega=<ok|no>|generic=<ok|no>|pw3=<y|n>|fragile=<class>`.
    pub fn to_line(&self) -> String {
        let ok = |b: bool| if b { "ok" } else { "no" };
        format!(
            "A={}|scan={}|omega={}|generic={}|pw3={}|fragile={}",
            self.a.compact(),
            self.scan.as_ref().map_or("ok", |m| m.pattern),
            ok(self.omega),
            ok(self.generic),
            if self.pw3.is_some() { "y" } else { "n" },
            self.fragility
        )
    }
}

/// Class-level properties of a relaxation, in canonical positions.
#[derive(Debug, Clone)]
struct Derived {
    generic: bool,
    pw3: Option<Vec<usize>>,
    three_connected: bool,
    nonbinary: bool,
    /// Families `M'` is fragile for, `U_{2,4}` first; `None` unless 3-connected.
    fragility: Option<Vec<(FragilityClass, FragilityReport)>>,
    outcomes: Option<Vec<Outcome>>,
}

/// Shared state for one sweep.
pub struct SweepContext {
    cache: Mutex<HashMap<CanonicalKey, Arc<Derived>>>,
    structure: Option<StructureCandidates>,
    lemmas: bool,
}

impl SweepContext {
    pub fn new(options: &SweepOptions, max_elements: usize) -> Result<SweepContext> {
        let structure = if options.structure {
            Some(structure_candidates(options.structure_bound.unwrap_or(max_elements))?)
        } else {
            None
        };
        Ok(SweepContext { cache: Mutex::new(HashMap::new()), structure, lemmas: options.lemmas })
    }

    fn derive(&self, relaxed: &Matroid, key: &CanonicalKey, labelling: &[usize]) -> Result<Arc<Derived>> {
        if let Some(d) = self.cache.lock().expect("cache lock").get(key) {
            return Ok(Arc::clone(d));
        }
        let generic = representable_gf4(relaxed)?.is_some();
        let pw3 = relaxed.path_width_3_ordering().map(|o| o.iter().map(|&e| labelling[e]).collect());
        let three_connected = relaxed.is_3_connected();
        let nonbinary = has_any_minor(relaxed, &u24_family());
        let fragility = three_connected.then(|| {
            [(FragilityClass::U24, u24_family()), (FragilityClass::U25U35, u25_u35_family())]
                .into_iter()
                .map(|(class, family)| (class, fragility_report(relaxed, &family)))
                .filter(|(_, report)| report.is_fragile)
                .map(|(class, report)| (class, report.permuted(labelling)))
                .collect::<Vec<_>>()
        });
        let outcomes = match &self.structure {
            Some(c) if three_connected && generic => Some(c.classify_key(key)),
            _ => None,
        };
        let d = Arc::new(Derived { generic, pw3, three_connected, nonbinary, fragility, outcomes });
        self.cache.lock().expect("cache lock").insert(key.clone(), Arc::clone(&d));
        Ok(d)
    }
}

/// Runs every check on one interior.
pub fn sweep_instance(a: &Gf4Matrix, ctx: &SweepContext) -> Result<SweepRecord> {
    let (m, rr) = build_reduced_representation(a)?;
    let relaxed = rr.relaxed();
    let scan = scanner::scan(&rr.a);
    let unlisted = scan.is_none() && scanner::scan_with(&rr.a, std::slice::from_ref(scanner::unlisted_template())).is_some();
    let omega_verdict = omega_corner_search(&rr);
    let omega_witness = match &omega_verdict.witness {
        Witness::Matrix(c) => {
            let (p, q) = (rr.a.rows(), rr.a.cols());
            Some(c.submatrix(&(0..p).collect::<Vec<_>>(), &(0..q).collect::<Vec<_>>())?)
        }
        _ => None,
    };
    let form = relaxed.canonical_form();
    let d = ctx.derive(&relaxed, &form.key, &form.labelling)?;
    let mut inverse = vec![0; form.labelling.len()];
    for (e, &p) in form.labelling.iter().enumerate() {
        inverse[p] = e;
    }
    let pw3 = d.pw3.as_ref().map(|o| o.iter().map(|&p| inverse[p]).collect::<Vec<_>>());
    if let Some(order) = &pw3 {
        if !relaxed.is_path_width_3_witness(order) {
            return Err(Error::Verification(format!("path-width witness rejected for A={}", a.compact())));
        }
    }
    let m_connected = m.is_connected();
    // U_{2,5} is fragile for both families; report the first one whose flags
    // give X the nondeletable-basis structure.
    let (fragility, basis_structure) = match (&d.fragility, m_connected) {
        (Some(fragile), true) => {
            let mut verdicts = Vec::with_capacity(fragile.len());
            for (class, report) in fragile {
                verdicts.push((*class, check_nondeletable_basis(&relaxed, &report.permuted(&inverse), rr.x)?));
            }
            match verdicts.iter().find(|v| v.1).or(verdicts.first()) {
                Some(&(class, ok)) => (class, Some(ok)),
                None => (FragilityClass::No, Some(false)),
            }
        }
        _ => (FragilityClass::NotApplicable, None),
    };
    let outcomes = if m_connected { d.outcomes.clone() } else { None };
    let lemmas = if ctx.lemmas && d.generic {
        let mut report = LemmaReport::default();
        for a2 in omega_corner_solutions(&rr, SearchSpace::Full, Gf4::OMEGA, false) {
            report.merge(check_micro_lemmas(&rr.a.clone().without_labels(), &a2.without_labels()));
        }
        Some(report)
    } else {
        None
    };
    Ok(SweepRecord {
        a: a.clone(),
        scan,
        unlisted,
        omega: omega_verdict.representable,
        omega_witness,
        generic: d.generic,
        pw3,
        m_connected,
        relaxed_3_connected: d.three_connected,
        fragility,
        basis_structure,
        relaxed_nonbinary: m_connected.then_some(d.nonbinary),
        outcomes,
        lemmas,
    })
}

/// Aggregate results of a sweep over one shape.
#[derive(Debug, Clone, Default)]
pub struct SweepSummary {
    pub rows: usize,
    pub cols: usize,
    pub total: usize,
    pub agreement: usize,
    pub representable: usize,
    pub disagreements: Vec<String>,
    /// Disagreements not accounted for by [`scanner::UNLISTED`].
    pub unexplained: Vec<String>,
    /// Representable relaxations without a path-width-3 ordering.
    pub pw3_failures: Vec<String>,
    /// Pairs with `M` connected and `M'` 3-connected and GF(4)-representable.
    /// Non-representable relaxations without a path-width-3 ordering.
    pub pw3_missing_nonrepresentable: usize,
    pub fragility_checked: usize,
    pub fragility_failures: Vec<String>,
    pub nonbinary_failures: Vec<String>,
    pub structure: StructureReport,
    pub lemmas: LemmaReport,
    /// Records with `M` connected and `M'` 3-connected but not representable.
    pub nonrepresentable_pairs: usize,
    pub lines: Vec<String>,
    pub distinct_relaxations: usize,
}

impl SweepSummary {
    fn absorb(&mut self, r: &SweepRecord, options: &SweepOptions) {
        let line = r.to_line();
        self.total += 1;
        if r.agrees() {
            self.agreement += 1;
        } else {
            if !(r.unlisted && !r.omega && !r.generic) {
                self.unexplained.push(line.clone());
            }
            self.disagreements.push(line.clone());
        }
        if r.generic {
            self.representable += 1;
        }
        if r.pw3.is_none() {
            if r.generic {
                self.pw3_failures.push(line.clone());
            } else {
                self.pw3_missing_nonrepresentable += 1;
            }
        }
        if r.m_connected && r.relaxed_nonbinary == Some(false) {
            self.nonbinary_failures.push(line.clone());
        }
        if r.fragility != FragilityClass::NotApplicable {
            if r.generic {
                self.fragility_checked += 1;
                if r.fragility == FragilityClass::No || r.basis_structure != Some(true) {
                    self.fragility_failures.push(line.clone());
                }
            } else {
                self.nonrepresentable_pairs += 1;
            }
        }
        if let Some(outcomes) = &r.outcomes {
            self.structure.record(&r.a.compact(), outcomes);
        }
        if let Some(l) = &r.lemmas {
            self.lemmas.merge(l.clone());
        }
        if options.keep_lines {
            self.lines.push(line);
        }
    }

    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Interior number `code` of shape `rows × cols`, two bits per entry in
/// row-major order with the first entry most significant.
pub fn interior(rows: usize, cols: usize, code: u64) -> Gf4Matrix {
    let n = rows * cols;
    Gf4Matrix::from_fn(rows, cols, |i, j| Gf4::ALL[((code >> (2 * (n - 1 - (i * cols + j)))) & 3) as usize])
}

/// Sweeps all `4^(rows·cols)` interiors of the given shape, or a random
/// sample of them.
pub fn run_sweep(rows: usize, cols: usize, options: &SweepOptions) -> Result<SweepSummary> {
    if rows == 0 || cols == 0 || rows * cols > 16 {
        return Err(Error::Precondition(format!("unsupported interior shape {rows}x{cols}")));
    }
    let ctx = SweepContext::new(options, rows + cols + 2)?;
    let codes: Vec<u64> = match options.sample {
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bound = 1u64 << (2 * rows * cols);
            (0..count).map(|_| rng.gen_range(0..bound)).collect()
        }
        None => (0..1u64 << (2 * rows * cols)).collect(),
    };
    let records: Vec<Result<SweepRecord>> =
        codes.par_iter().map(|&code| sweep_instance(&interior(rows, cols, code), &ctx)).collect();
    let mut summary = SweepSummary { rows, cols, ..SweepSummary::default() };
    for r in records {
        summary.absorb(&r?, options);
    }
    summary.distinct_relaxations = ctx.cache.lock().expect("cache lock").len();
    Ok(summary)
}
