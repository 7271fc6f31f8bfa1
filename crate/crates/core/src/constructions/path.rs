//! Path sequences: `X8` followed by Δ-∇-steps and wheel gluings along the two
//! distinguished 4-element sets `S` and `C`.
//!
//! Text form, one step per line (`#` starts a comment):
//!
//! ```text
//! dn S 2            # one parallel/series copy on each of the first 2 eligible elements of S
//! dn C 1,0,2,0      # copies per element of C, in label order
//! gw C r=4 X=ab     # glue a 4-wheel onto the first allowable triple in C, deleting a and b
//! gw S r=3 X=b T=s1,s2,s3
//! ```

use std::collections::BTreeMap;
use std::fmt;

use super::{
    glue_wheel, is_coindependent, is_cosegment, is_segment, named, parallel_extension, series_extension,
};
use super::{delta_y, nabla_y};
use crate::error::{Error, Result};
use crate::matroid::bits;
use crate::matroid::{CanonicalKey, Matroid, Subset};
use crate::minors::{fragility_report, u25_u35_family, FragilityReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    S,
    C,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::S => "S",
            Axis::C => "C",
        })
    }
}

/// How many new elements a Δ-∇-step attaches.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extension {
    /// One copy on each of the first `k` eligible elements of the axis.
    Count(usize),
    /// Copies per element of the axis, in label order.
    PerElement(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathSequenceStep {
    /// Allowable parallel (segment) or series (cosegment) extension along the
    /// axis, then Δ-Y (segment) or Y-Δ (cosegment) on it.
    DeltaNabla { axis: Axis, extension: Extension },
    /// Glue an `r`-wheel onto an allowable triangle (or, dually, triad)
    /// `(a, b, c)` inside the axis and delete the positions in `delete`
    /// (`0 = a`, `1 = b`, `2 = c`). `triple = None` picks the first
    /// allowable triple.
    GlueWheel { axis: Axis, triple: Option<[String; 3]>, r: usize, delete: Vec<usize> },
}

impl fmt::Display for PathSequenceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathSequenceStep::DeltaNabla { axis, extension: Extension::Count(k) } => write!(f, "dn {axis} {k}"),
            PathSequenceStep::DeltaNabla { axis, extension: Extension::PerElement(v) } => {
                write!(f, "dn {axis} {}", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            }
            PathSequenceStep::GlueWheel { axis, triple, r, delete } => {
                let x: String = delete.iter().map(|&p| (b'a' + p as u8) as char).collect();
                write!(f, "gw {axis} r={r} X={x}")?;
                if let Some(t) = triple {
                    write!(f, " T={}", t.join(","))?;
                }
                Ok(())
            }
        }
    }
}

/// A matroid in a path sequence together with the labels of `S` and `C`.
/// Elements deleted by wheel gluing drop out of the label lists.
#[derive(Debug, Clone)]
pub struct PathState {
    pub matroid: Matroid,
    pub s: Vec<String>,
    pub c: Vec<String>,
}

/// Whether an axis currently behaves as a segment or a cosegment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    Segment,
    Cosegment,
}

impl PathState {
    /// `X8` with `S = {s1,…,s4}` and `C = {c1,…,c4}`.
    pub fn start() -> Result<PathState> {
        let m = named("X8")?;
        let s = (1..=4).map(|i| format!("s{i}")).collect();
        let c = (1..=4).map(|i| format!("c{i}")).collect();
        Ok(PathState { matroid: m, s, c })
    }

    pub fn axis_labels(&self, axis: Axis) -> &[String] {
        match axis {
            Axis::S => &self.s,
            Axis::C => &self.c,
        }
    }

    /// The axis as a set, if all four of its elements are still present.
    pub fn axis_mask(&self, axis: Axis) -> Option<Subset> {
        let names = self.axis_labels(axis);
        (names.len() == 4).then(|| self.matroid.mask_of(names).ok()).flatten()
    }

    /// 3-separating with full closure equal to the ground set.
    pub fn is_path_generating(&self, a: Subset) -> bool {
        let m = &self.matroid;
        m.lambda(a) <= 2 && m.full_closure(a) == m.ground()
    }

    /// Colors for canonical forms: `S` is 1, `C` is 2, everything else 0.
    pub fn colors(&self) -> Vec<u32> {
        let mut colors = vec![0; self.matroid.size()];
        for (names, color) in [(&self.s, 1), (&self.c, 2)] {
            for l in names {
                if let Ok(e) = self.matroid.index_of(l) {
                    colors[e] = color;
                }
            }
        }
        colors
    }

    pub fn colored_key(&self) -> CanonicalKey {
        self.matroid.canonical_form_colored(&self.colors()).key
    }

    fn shape(&self, a: Subset) -> Option<Shape> {
        let m = &self.matroid;
        if is_segment(m, a) && m.rank_of(a) == 2 {
            Some(Shape::Segment)
        } else if is_cosegment(m, a) && m.dual_rank_of(a) == 2 {
            Some(Shape::Cosegment)
        } else {
            None
        }
    }

    /// The axis as a path-generating allowable segment or cosegment.
    fn usable_axis(&self, axis: Axis, report: &FragilityReport) -> Result<(Subset, Shape)> {
        let a = self.axis_mask(axis).ok_or_else(|| Error::Precondition(format!("{axis} no longer has four elements")))?;
        if !self.is_path_generating(a) {
            return Err(Error::Precondition(format!("{axis} is not path-generating")));
        }
        let shape = self.shape(a).ok_or_else(|| Error::Precondition(format!("{axis} is neither a segment nor a cosegment")))?;
        let m = &self.matroid;
        let ok = match shape {
            Shape::Segment => is_coindependent(m, a) && a & report.nondeletable_set() != 0,
            Shape::Cosegment => m.rank_of(a) == bits::size(a) && a & report.noncontractible_set() != 0,
        };
        if !ok {
            return Err(Error::Precondition(format!("{axis} is not allowable")));
        }
        Ok((a, shape))
    }

    fn report(&self) -> FragilityReport {
        fragility_report(&self.matroid, &u25_u35_family())
    }

    /// Elements of the axis that may receive copies: deletable ones for a
    /// segment, contractible ones for a cosegment.
    fn eligible(&self, axis: Axis, shape: Shape, report: &FragilityReport) -> Vec<bool> {
        self.axis_labels(axis)
            .iter()
            .map(|l| {
                let e = self.matroid.index_of(l).expect("axis labels are present");
                match shape {
                    Shape::Segment => report.deletable[e],
                    Shape::Cosegment => report.contractible[e],
                }
            })
            .collect()
    }

    /// Allowable triples `(a, b, c)` inside the axis with `b` nondeletable
    /// (segment) or noncontractible (cosegment) and `a` before `c`.
    fn allowable_triples(&self, a: Subset, shape: Shape, report: &FragilityReport) -> Vec<[usize; 3]> {
        let m = &self.matroid;
        let order: Vec<usize> = self.axis_labels_indices(a);
        let mut out = Vec::new();
        for t in bits::combinations_in(a, 3) {
            let (allowable, special) = match shape {
                Shape::Segment => (m.is_circuit(t) && is_coindependent(m, t), report.nondeletable_set()),
                Shape::Cosegment => (m.dual().is_circuit(t) && m.rank_of(t) == 3, report.noncontractible_set()),
            };
            if !allowable || t & special == 0 {
                continue;
            }
            let members: Vec<usize> = order.iter().copied().filter(|&e| t >> e & 1 == 1).collect();
            for &b in &members {
                if special >> b & 1 == 0 {
                    continue;
                }
                let rest: Vec<usize> = members.iter().copied().filter(|&e| e != b).collect();
                out.push([rest[0], b, rest[1]]);
            }
        }
        out
    }

    fn axis_labels_indices(&self, a: Subset) -> Vec<usize> {
        self.s
            .iter()
            .chain(&self.c)
            .filter_map(|l| self.matroid.index_of(l).ok())
            .filter(|&e| a >> e & 1 == 1)
            .collect()
    }

    /// Applies one step, checking its preconditions.
    pub fn apply(&self, step: &PathSequenceStep) -> Result<PathState> {
        let report = self.report();
        let m = &self.matroid;
        match step {
            PathSequenceStep::DeltaNabla { axis, extension } => {
                let (_, shape) = self.usable_axis(*axis, &report)?;
                let eligible = self.eligible(*axis, shape, &report);
                let copies: Vec<usize> = match extension {
                    Extension::PerElement(v) => {
                        if v.len() != 4 {
                            return Err(Error::Precondition("a copy count is needed for each of the four elements".into()));
                        }
                        v.clone()
                    }
                    Extension::Count(k) => {
                        let mut left = *k;
                        eligible
                            .iter()
                            .map(|&ok| {
                                let take = usize::from(ok && left > 0);
                                left -= take;
                                take
                            })
                            .collect()
                    }
                };
                if copies.iter().sum::<usize>() == 0 {
                    return Err(Error::Precondition("a Δ-∇-step needs a nonempty extension".into()));
                }
                if copies.iter().zip(&eligible).any(|(&k, &ok)| k > 0 && !ok) {
                    return Err(Error::Precondition("the extension is not allowable".into()));
                }
                if let Extension::Count(k) = extension {
                    if copies.iter().sum::<usize>() < *k {
                        return Err(Error::Precondition(format!("{axis} has fewer than {k} eligible elements")));
                    }
                }
                let names = self.axis_labels(*axis).to_vec();
                let mut ext = m.clone();
                for (l, &k) in names.iter().zip(&copies) {
                    if k > 0 {
                        ext = match shape {
                            Shape::Segment => parallel_extension(&ext, l, k)?,
                            Shape::Cosegment => series_extension(&ext, l, k)?,
                        };
                    }
                }
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                let next = match shape {
                    Shape::Segment => delta_y(&ext, &refs)?,
                    Shape::Cosegment => nabla_y(&ext, &refs)?,
                };
                Ok(PathState { matroid: next, s: self.s.clone(), c: self.c.clone() })
            }
            PathSequenceStep::GlueWheel { axis, triple, r, delete } => {
                let (a, shape) = self.usable_axis(*axis, &report)?;
                let triples = self.allowable_triples(a, shape, &report);
                let chosen: [usize; 3] = match triple {
                    None => *triples.first().ok_or_else(|| Error::Precondition(format!("{axis} has no allowable triple")))?,
                    Some(names) => {
                        let t = [m.index_of(&names[0])?, m.index_of(&names[1])?, m.index_of(&names[2])?];
                        let mirrored = [t[2], t[1], t[0]];
                        if !triples.contains(&t) && !triples.contains(&mirrored) {
                            return Err(Error::Precondition(format!("({}) is not an allowable triple of {axis}", names.join(","))));
                        }
                        t
                    }
                };
                if !delete.contains(&1) || delete.iter().any(|&p| p > 2) {
                    return Err(Error::Precondition("the deleted set must contain b and lie in the triple".into()));
                }
                let t_names: [&str; 3] = [m.label(chosen[0]), m.label(chosen[1]), m.label(chosen[2])];
                let x: Vec<&str> = delete.iter().map(|&p| t_names[p]).collect();
                let next = match shape {
                    Shape::Segment => glue_wheel(m, t_names, *r, &x)?,
                    Shape::Cosegment => glue_wheel(&m.dual(), t_names, *r, &x)?.dual(),
                };
                let keep = |v: &[String]| v.iter().filter(|l| !x.contains(&l.as_str())).cloned().collect();
                Ok(PathState { matroid: next, s: keep(&self.s), c: keep(&self.c) })
            }
        }
    }

    /// Every step applicable to this state whose result has at most
    /// `max_elements` elements, with explicit parameters.
    pub fn successors(&self, max_elements: usize) -> Vec<PathSequenceStep> {
        let n = self.matroid.size();
        let report = self.report();
        let mut out = Vec::new();
        for axis in [Axis::S, Axis::C] {
            let Ok((a, shape)) = self.usable_axis(axis, &report) else { continue };
            let eligible = self.eligible(axis, shape, &report);
            let budget = max_elements.saturating_sub(n);
            for copies in copy_vectors(&eligible, budget) {
                out.push(PathSequenceStep::DeltaNabla { axis, extension: Extension::PerElement(copies) });
            }
            for t in self.allowable_triples(a, shape, &report) {
                let names: [String; 3] = t.map(|e| self.matroid.label(e).to_string());
                for delete in [vec![1], vec![0, 1], vec![1, 2], vec![0, 1, 2]] {
                    for r in 3.. {
                        if n + 2 * r - 3 - delete.len() > max_elements {
                            break;
                        }
                        out.push(PathSequenceStep::GlueWheel { axis, triple: Some(names.clone()), r, delete: delete.clone() });
                    }
                }
            }
        }
        out
    }
}

/// Nonzero copy vectors supported on eligible positions with total at most `budget`.
fn copy_vectors(eligible: &[bool], budget: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; eligible.len()];
    fn go(i: usize, left: usize, eligible: &[bool], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == eligible.len() {
            if cur.iter().any(|&k| k > 0) {
                out.push(cur.clone());
            }
            return;
        }
        let top = if eligible[i] { left } else { 0 };
        for k in 0..=top {
            cur[i] = k;
            go(i + 1, left - k, eligible, cur, out);
        }
        cur[i] = 0;
    }
    go(0, budget, eligible, &mut cur, &mut out);
    out
}

/// The matroid described by the sequence of steps starting from `X8`.
pub fn run_path_sequence(steps: &[PathSequenceStep]) -> Result<PathState> {
    let mut state = PathState::start()?;
    for step in steps {
        state = state.apply(step)?;
    }
    Ok(state)
}

/// A matroid reached by a path sequence, with one sequence reaching it.
#[derive(Debug, Clone)]
pub struct DescribedMatroid {
    pub key: CanonicalKey,
    pub matroid: Matroid,
    pub steps: Vec<PathSequenceStep>,
}

/// All matroids with at most `max_elements` elements described by a path
/// sequence, one per isomorphism class, sorted by canonical key.
pub fn enumerate_path_sequences(max_elements: usize) -> Result<Vec<DescribedMatroid>> {
    if max_elements < 8 {
        return Ok(Vec::new());
    }
    let start = PathState::start()?;
    let mut seen_states: BTreeMap<CanonicalKey, ()> = BTreeMap::new();
    let mut described: BTreeMap<CanonicalKey, DescribedMatroid> = BTreeMap::new();
    let mut frontier = vec![(start, Vec::new())];
    while let Some((state, steps)) = frontier.pop() {
        if seen_states.insert(state.colored_key(), ()).is_some() {
            continue;
        }
        let key = state.matroid.canonical_key();
        described
            .entry(key.clone())
            .or_insert_with(|| DescribedMatroid { key, matroid: state.matroid.clone(), steps: steps.clone() });
        for step in state.successors(max_elements) {
            // successors() only lists steps whose preconditions hold
            let next = state.apply(&step)?;
            let mut path = steps.clone();
            path.push(step);
            frontier.push((next, path));
        }
    }
    Ok(described.into_values().collect())
}

/// Parses the line-oriented step format described in the module docs.
pub fn parse_path_spec(text: &str) -> Result<Vec<PathSequenceStep>> {
    let mut steps = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |column: usize, message: &str| Error::Parse { line: lineno + 1, column, message: message.to_string() };
        let words: Vec<&str> = line.split_whitespace().collect();
        let axis = match words.get(1) {
            Some(&"S") => Axis::S,
            Some(&"C") => Axis::C,
            _ => return Err(err(2, "expected axis S or C")),
        };
        match words[0] {
            "dn" => {
                let arg = words.get(2).ok_or_else(|| err(3, "missing copy count"))?;
                let extension = if arg.contains(',') {
                    let v: std::result::Result<Vec<usize>, _> = arg.split(',').map(str::parse).collect();
                    Extension::PerElement(v.map_err(|_| err(3, "bad copy list"))?)
                } else {
                    Extension::Count(arg.parse().map_err(|_| err(3, "bad copy count"))?)
                };
                if words.len() > 3 {
                    return Err(err(4, "unexpected trailing input"));
                }
                steps.push(PathSequenceStep::DeltaNabla { axis, extension });
            }
            "gw" => {
                let (mut r, mut delete, mut triple) = (None, None, None);
                for (i, w) in words.iter().enumerate().skip(2) {
                    let (k, v) = w.split_once('=').ok_or_else(|| err(i + 1, "expected key=value"))?;
                    match k {
                        "r" => r = Some(v.parse::<usize>().map_err(|_| err(i + 1, "bad wheel size"))?),
                        "X" => {
                            let mut pos: Vec<usize> = Vec::new();
                            for ch in v.chars() {
                                let p = match ch {
                                    'a' => 0,
                                    'b' => 1,
                                    'c' => 2,
                                    _ => return Err(err(i + 1, "X uses the letters a, b, c")),
                                };
                                if !pos.contains(&p) {
                                    pos.push(p);
                                }
                            }
                            pos.sort_unstable();
                            delete = Some(pos);
                        }
                        "T" => {
                            let names: Vec<String> = v.split(',').map(str::to_string).collect();
                            let t: [String; 3] = names.try_into().map_err(|_| err(i + 1, "T names three elements"))?;
                            triple = Some(t);
                        }
                        _ => return Err(err(i + 1, "unknown key")),
                    }
                }
                let r = r.ok_or_else(|| err(3, "missing r="))?;
                let delete = delete.unwrap_or_else(|| vec![1]);
                if !delete.contains(&1) {
                    return Err(err(3, "X must contain b"));
                }
                steps.push(PathSequenceStep::GlueWheel { axis, triple, r, delete });
            }
            _ => return Err(err(1, "expected dn or gw")),
        }
    }
    Ok(steps)
}
