//! Isomorphism testing and canonical forms.
//!
//! Elements are first coloured by pair invariants (how many bases and
//! circuits contain a given pair), the colouring is refined to a stable
//! ordered partition, and the remaining ties are broken by an
//! individualization-refinement search. The canonical image is the least
//! sorted basis list over all leaves; automorphisms discovered at leaves
//! prune sibling branches.

use std::fmt;

use super::bits::{self, elements, size};
use super::{Matroid, Subset};

/// Bytes that are equal for two matroids exactly when they are isomorphic
/// (as coloured matroids, for the coloured variant).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonicalKey> {
        if !s.len().is_multiple_of(2) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalKey)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `labelling[e]` is the canonical position of element `e`.
    pub labelling: Vec<usize>,
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    labelling: Vec<usize>,
    image: Vec<Subset>,
    path: Vec<usize>,
}

struct Search<'a> {
    m: &'a Matroid,
    n: usize,
    weight: Vec<u64>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Matroid {
    pub fn canonical_form(&self) -> CanonicalForm {
        self.canonical_form_colored(&vec![0; self.size()])
    }

    /// Canonical form of the matroid with element colours that every
    /// isomorphism must preserve.
    pub fn canonical_form_colored(&self, colors: &[u32]) -> CanonicalForm {
        assert_eq!(colors.len(), self.size());
        let n = self.size();
        let (weight, diag) = pair_invariants(self);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (colors[a], &diag[a]).cmp(&(colors[b], &diag[b])));
        let cells: Cells = order
            .chunk_by(|&a, &b| colors[a] == colors[b] && diag[a] == diag[b])
            .map(|c| c.to_vec())
            .collect();
        let mut search = Search {
            m: self,
            n,
            weight,
            first: None,
            best: None,
            generators: Vec::new(),
            path: Vec::new(),
        };
        search.run(cells);
        let best = search.best.expect("search reaches at least one leaf");

        let mut sorted_colors = colors.to_vec();
        sorted_colors.sort_unstable();
        let mut key = Vec::with_capacity(2 + 4 * n + 2 * best.image.len());
        key.push(n as u8);
        key.push(self.rank() as u8);
        if colors.iter().any(|&c| c != 0) {
            for c in sorted_colors {
                key.extend_from_slice(&c.to_be_bytes());
            }
        }
        for b in &best.image {
            key.extend_from_slice(&(*b as u16).to_be_bytes());
        }
        CanonicalForm { key: CanonicalKey(key), labelling: best.labelling }
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonical_form().key
    }

    /// The matroid relabelled into canonical element order.
    pub fn canonical_matroid(&self) -> Matroid {
        self.permuted(&self.canonical_form().labelling)
    }

    /// A bijection `map` (element `e` of `self` to `map[e]` of `other`)
    /// carrying bases onto bases, if one exists.
    pub fn isomorphism(&self, other: &Matroid) -> Option<Vec<usize>> {
        if self.size() != other.size() || self.rank() != other.rank() || self.num_bases() != other.num_bases() {
            return None;
        }
        let a = self.canonical_form();
        let b = other.canonical_form();
        if a.key != b.key {
            return None;
        }
        let mut inv = vec![0; other.size()];
        for (e, &p) in b.labelling.iter().enumerate() {
            inv[p] = e;
        }
        let map: Vec<usize> = a.labelling.iter().map(|&p| inv[p]).collect();
        debug_assert!(self.is_isomorphism(other, &map));
        Some(map)
    }

    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Checks that `map` carries the bases of `self` exactly onto those of `other`.
    pub fn is_isomorphism(&self, other: &Matroid, map: &[usize]) -> bool {
        if self.size() != other.size() || map.len() != self.size() || self.num_bases() != other.num_bases() {
            return false;
        }
        let mut seen = 0u32;
        for &p in map {
            if p >= other.size() || seen >> p & 1 == 1 {
                return false;
            }
            seen |= 1 << p;
        }
        self.bases().iter().all(|&b| other.is_basis(bits::permute(b, map)))
    }
}

/// Pair weights `w(e,f)` (bases and circuits containing both) and per-element
/// invariants (bases containing `e`, circuits through `e` by size).
fn pair_invariants(m: &Matroid) -> (Vec<u64>, Vec<Vec<u32>>) {
    let n = m.size();
    let mut pb = vec![0u32; n * n];
    let mut pc = vec![0u32; n * n];
    let mut diag = vec![vec![0u32; n + 2]; n];
    for &b in m.bases() {
        let els: Vec<usize> = elements(b).collect();
        for &e in &els {
            diag[e][0] += 1;
            for &f in &els {
                pb[e * n + f] += 1;
            }
        }
    }
    for c in m.circuits() {
        let k = size(c);
        let els: Vec<usize> = elements(c).collect();
        for &e in &els {
            diag[e][k + 1] += 1;
            for &f in &els {
                pc[e * n + f] += 1;
            }
        }
    }
    let weight = pb.iter().zip(&pc).map(|(&b, &c)| (b as u64) << 32 | c as u64).collect();
    (weight, diag)
}

impl Search<'_> {
    fn run(&mut self, cells: Cells) {
        self.search(cells);
    }

    /// Splits cells by the multiset of (cell, weight) pairs to other elements
    /// until stable. Split order is by signature, so the result is invariant.
    fn refine(&self, mut cells: Cells) -> Cells {
        let n = self.n;
        let mut cell_of = vec![0u32; n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &e in c {
                    cell_of[e] = i as u32;
                }
            }
            let mut next: Cells = Vec::with_capacity(n);
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sigs: Vec<(Vec<(u32, u64)>, usize)> = c
                    .iter()
                    .map(|&e| {
                        let mut sig: Vec<(u32, u64)> = (0..n)
                            .filter(|&f| f != e)
                            .map(|f| (cell_of[f], self.weight[e * n + f]))
                            .collect();
                        sig.sort_unstable();
                        (sig, e)
                    })
                    .collect();
                sigs.sort_unstable();
                for group in sigs.chunk_by(|a, b| a.0 == b.0) {
                    next.push(group.iter().map(|(_, e)| *e).collect());
                }
            }
            let done = next.len() == cells.len();
            cells = next;
            if done {
                return cells;
            }
        }
    }

    /// Returns `Some(level)` to abandon every branch below depth `level`.
    fn search(&mut self, cells: Cells) -> Option<usize> {
        let cells = self.refine(cells);
        let level = self.path.len();
        if cells.len() == self.n {
            return self.leaf(&cells);
        }
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() {
                let orbit = self.orbit_rep(v);
                if explored.iter().any(|&w| self.orbit_rep(w) == orbit) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&x| x != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            self.path.push(v);
            let jump = self.search(child);
            self.path.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells) -> Option<usize> {
        let mut labelling = vec![0; self.n];
        for (i, c) in cells.iter().enumerate() {
            labelling[c[0]] = i;
        }
        let mut image: Vec<Subset> = self.m.bases().iter().map(|&b| bits::permute(b, &labelling)).collect();
        image.sort_unstable();
        let Some(first) = &self.first else {
            let leaf = Leaf { labelling, image, path: self.path.clone() };
            self.best = Some(Leaf { labelling: leaf.labelling.clone(), image: leaf.image.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if image == first.image {
            let gen = automorphism(&first.labelling, &labelling);
            let diverge = first.path.iter().zip(&self.path).position(|(a, b)| a != b).unwrap_or(self.path.len());
            self.generators.push(gen);
            return Some(diverge);
        }
        let best = self.best.as_mut().expect("best is set with first");
        if image == best.image {
            let gen = automorphism(&best.labelling, &labelling);
            self.generators.push(gen);
        } else if image < best.image {
            *best = Leaf { labelling, image, path: self.path.clone() };
        }
        None
    }

    /// Orbit representative of `v` under the stored automorphisms that fix
    /// the current path pointwise.
    fn orbit_rep(&self, v: usize) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if self.path.iter().any(|&x| g[x] != x) {
                continue;
            }
            for (x, &y) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        find(&mut parent, v)
    }
}

/// The element map `σ` with `lab_b ∘ σ = lab_a`, i.e. `σ = lab_b⁻¹ ∘ lab_a`.
fn automorphism(lab_a: &[usize], lab_b: &[usize]) -> Vec<usize> {
    let mut inv_b = vec![0; lab_b.len()];
    for (e, &p) in lab_b.iter().enumerate() {
        inv_b[p] = e;
    }
    lab_a.iter().map(|&p| inv_b[p]).collect()
}
