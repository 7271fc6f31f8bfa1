//! Matching 3-connected relaxations against the outcomes of the structure
//! theorem: whirls, `M9,9` and its dual, wheels glued onto `U_{2,5}` or
//! `M7,1`, and path sequences.

use std::collections::BTreeMap;
use std::fmt;

use crate::constructions::{enumerate_path_sequences, glue_wheel, named, uniform_labelled, whirl};
use crate::error::Result;
use crate::matroid::{CanonicalKey, Matroid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    /// (a) a whirl.
    Whirl,
    /// (b) `M9,9` or its dual.
    M99,
    /// (c) wheels glued onto `(a,c,b)` and `(a,d,b)` of `U_{2,5}`, up to duality.
    GlueU25Fan,
    /// (d) wheels glued onto `(a,b,c)` and `(c,d,e)` of `U_{2,5}`, up to duality.
    GlueU25Chain,
    /// (e) a wheel glued onto `(1,3,2)` of `M7,1`, up to duality.
    GlueM71,
    /// (f) described by a path sequence.
    PathSequence,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Whirl => "(a) whirl",
            Outcome::M99 => "(b) M9,9",
            Outcome::GlueU25Fan => "(c) U2,5 with wheels on (a,c,b),(a,d,b)",
            Outcome::GlueU25Chain => "(d) U2,5 with wheels on (a,b,c),(c,d,e)",
            Outcome::GlueM71 => "(e) M7,1 with a wheel on (1,3,2)",
            Outcome::PathSequence => "(f) path sequence",
        })
    }
}

/// Every candidate matroid with at most `max_elements` elements, by key.
#[derive(Debug, Clone, Default)]
pub struct StructureCandidates {
    pub max_elements: usize,
    pub by_key: BTreeMap<CanonicalKey, Vec<Outcome>>,
}

impl StructureCandidates {
    fn add(&mut self, m: &Matroid, outcome: Outcome, with_dual: bool) {
        if m.size() > self.max_elements {
            return;
        }
        let mut keys = vec![m.canonical_key()];
        if with_dual {
            keys.push(m.dual().canonical_key());
        }
        for key in keys {
            let list = self.by_key.entry(key).or_default();
            if !list.contains(&outcome) {
                list.push(outcome);
                list.sort();
            }
        }
    }

    /// Outcomes matched by `m`, in listing order.
    pub fn classify(&self, m: &Matroid) -> Vec<Outcome> {
        self.classify_key(&m.canonical_key())
    }

    pub fn classify_key(&self, key: &CanonicalKey) -> Vec<Outcome> {
        self.by_key.get(key).cloned().unwrap_or_default()
    }
}

/// Subsets of `triple` positions containing the middle one, optionally
/// excluding the two ends.
fn delete_sets(ends_allowed: bool) -> Vec<Vec<usize>> {
    if ends_allowed {
        vec![vec![1], vec![0, 1], vec![1, 2], vec![0, 1, 2]]
    } else {
        vec![vec![1]]
    }
}

/// Largest wheel that keeps the glued matroid within `bound` elements.
fn wheel_sizes(base: usize, deleted: usize, bound: usize) -> impl Iterator<Item = usize> {
    (3..).take_while(move |&r| base + 2 * r - 3 - deleted <= bound)
}

/// All matroids obtained by gluing wheels onto the listed triangles in
/// order (each possibly skipped); an end of a triangle is deleted only if it
/// does not occur in a later glued triangle.
fn glue_sequences(m: &Matroid, triangles: &[[&str; 3]], bound: usize, out: &mut Vec<Matroid>) -> Result<()> {
    out.push(m.clone());
    for (i, t) in triangles.iter().enumerate() {
        let later: Vec<&str> = triangles[i + 1..].iter().flatten().copied().collect();
        for x_pos in delete_sets(true) {
            let x: Vec<&str> = x_pos.iter().map(|&p| t[p]).collect();
            if x.iter().any(|e| *e != t[1] && later.contains(e)) {
                continue;
            }
            for r in wheel_sizes(m.size(), x.len(), bound) {
                let glued = glue_wheel(m, *t, r, &x)?;
                glue_sequences(&glued, &triangles[i + 1..], bound, out)?;
            }
        }
    }
    Ok(())
}

pub fn structure_candidates(max_elements: usize) -> Result<StructureCandidates> {
    let mut c = StructureCandidates { max_elements, ..StructureCandidates::default() };
    for r in (2..).take_while(|r| 2 * r <= max_elements) {
        c.add(&whirl(r)?, Outcome::Whirl, false);
    }
    c.add(&named("M9,9")?, Outcome::M99, true);
    let u25 = uniform_labelled(2, &["a", "b", "c", "d", "e"])?;
    for (triangles, outcome) in [
        ([["a", "c", "b"], ["a", "d", "b"]], Outcome::GlueU25Fan),
        ([["a", "b", "c"], ["c", "d", "e"]], Outcome::GlueU25Chain),
    ] {
        let mut found = Vec::new();
        glue_sequences(&u25, &triangles, max_elements, &mut found)?;
        for m in &found {
            c.add(m, outcome, true);
        }
    }
    let mut found = Vec::new();
    glue_sequences(&named("M7,1")?, &[["1", "3", "2"]], max_elements, &mut found)?;
    for m in &found {
        c.add(m, Outcome::GlueM71, true);
    }
    for d in enumerate_path_sequences(max_elements)? {
        c.add(&d.matroid, Outcome::PathSequence, false);
    }
    Ok(c)
}

/// Tally of structure-theorem matches over a sweep.
#[derive(Debug, Clone, Default)]
pub struct StructureReport {
    pub checked: usize,
    /// Instances whose first matching outcome is the key.
    pub first_match: BTreeMap<Outcome, usize>,
    /// Instances matching more than one outcome.
    pub multiple: usize,
    pub unmatched: Vec<String>,
}

impl StructureReport {
    pub fn record(&mut self, a: &str, outcomes: &[Outcome]) {
        self.checked += 1;
        match outcomes.first() {
            Some(o) => *self.first_match.entry(*o).or_default() += 1,
            None => self.unmatched.push(a.to_string()),
        }
        if outcomes.len() > 1 {
            self.multiple += 1;
        }
    }

    pub fn merge(&mut self, other: StructureReport) {
        self.checked += other.checked;
        for (k, v) in other.first_match {
            *self.first_match.entry(k).or_default() += v;
        }
        self.multiple += other.multiple;
        self.unmatched.extend(other.unmatched);
    }

    pub fn passed(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// Runs the exhaustive sweep over every interior shape `p × q` with
/// `p, q ≤ 3` and `p + q + 2 ≤ max_elements`, matching each pair with `M`
/// connected and `M'` 3-connected and GF(4)-representable.
pub fn verify_structure_theorem(max_elements: usize) -> Result<StructureReport> {
    let options = super::SweepOptions { structure: true, lemmas: false, ..super::SweepOptions::default() };
    let mut report = StructureReport::default();
    for p in 1..=3 {
        for q in 1..=3 {
            if p + q + 2 > max_elements {
                continue;
            }
            let summary = super::run_sweep(p, q, &options)?;
            report.merge(summary.structure);
        }
    }
    Ok(report)
}
