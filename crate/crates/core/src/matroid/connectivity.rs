//! Connectivity function, separations, series/parallel classes and path width.

use super::bits::{self, size};
use super::{Matroid, Subset};

/// A `k`-separation `(side, E − side)` witnessed by its connectivity value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationReport {
    pub side: Subset,
    pub lambda: usize,
    pub order: usize,
}

impl Matroid {
    /// `λ(S) = r(S) + r(E − S) − r(M)`.
    #[inline]
    pub fn lambda(&self, s: Subset) -> usize {
        self.rank_of(s) + self.rank_of(self.ground() & !s) - self.rank()
    }

    pub fn is_3_separating(&self, s: Subset) -> bool {
        self.lambda(s) <= 2
    }

    /// A separation of the smallest order `k ≤ max_order`, if any: a set `S`
    /// with `|S|, |E − S| ≥ k` and `λ(S) ≤ k − 1`.
    pub fn find_separation(&self, max_order: usize) -> Option<SeparationReport> {
        let n = self.size();
        let g = self.ground();
        for k in 1..=max_order {
            if 2 * k > n {
                break;
            }
            // fixing element 0 on the chosen side halves the search
            for s in (0..=g).filter(|s| s & 1 == 1) {
                let sz = size(s);
                if sz >= k && n - sz >= k && self.lambda(s) < k {
                    return Some(SeparationReport { side: s, lambda: self.lambda(s), order: k });
                }
            }
        }
        None
    }

    /// No `k`-separation for any `k < n`.
    pub fn is_n_connected(&self, n: usize) -> bool {
        n <= 1 || self.find_separation(n - 1).is_none()
    }

    pub fn is_connected(&self) -> bool {
        self.is_n_connected(2)
    }

    pub fn is_3_connected(&self) -> bool {
        self.is_n_connected(3)
    }

    /// Connected components as a partition of the ground set.
    pub fn components(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = Vec::new();
        let mut rest = self.ground();
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            // the component of e is the smallest separator containing it
            let comp = bits::subsets(rest & !(1 << e))
                .map(|s| s | 1 << e)
                .filter(|&s| self.rank_of(s) + self.rank_of(self.ground() & !s) == self.rank())
                .min_by_key(|&s| size(s))
                .expect("the remaining set is a separator");
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Maximal sets of pairwise parallel non-loop elements, including
    /// singleton classes.
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let loops = self.loops();
        classes(self.size(), loops, |e, f| self.rank_of(1 << e | 1 << f) == 1)
    }

    /// Maximal sets of pairwise series non-coloop elements, including
    /// singleton classes.
    pub fn series_classes(&self) -> Vec<Subset> {
        let coloops = self.coloops();
        classes(self.size(), coloops, |e, f| self.dual_rank_of(1 << e | 1 << f) == 1)
    }

    /// Connected, and every 2-separation has a parallel class or a series
    /// class as one of its sides.
    pub fn is_3connected_up_to_sp(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let n = self.size();
        if n < 4 {
            return true;
        }
        let special: Vec<Subset> = self
            .parallel_classes()
            .into_iter()
            .chain(self.series_classes())
            .filter(|&c| size(c) >= 2)
            .collect();
        let g = self.ground();
        (0..=g).filter(|s| s & 1 == 1).all(|s| {
            let sz = size(s);
            if sz < 2 || n - sz < 2 || self.lambda(s) > 1 {
                return true;
            }
            special.contains(&s) || special.contains(&(g & !s))
        })
    }

    /// An ordering whose every prefix is 3-separating, if one exists.
    pub fn path_width_3_ordering(&self) -> Option<Vec<usize>> {
        let n = self.size();
        let total = 1usize << n;
        // parent[s] = element added last on some valid route to s
        let mut parent = vec![u8::MAX; total];
        let mut reached = vec![false; total];
        reached[0] = true;
        for s in 0..total {
            if !reached[s] {
                continue;
            }
            for e in 0..n {
                let t = s | 1 << e;
                if t != s && !reached[t] && self.lambda(t as Subset) <= 2 {
                    reached[t] = true;
                    parent[t] = e as u8;
                }
            }
        }
        if !reached[total - 1] {
            return None;
        }
        let mut order = Vec::with_capacity(n);
        let mut cur = total - 1;
        while cur != 0 {
            let e = parent[cur] as usize;
            order.push(e);
            cur &= !(1 << e);
        }
        order.reverse();
        Some(order)
    }

    pub fn has_path_width_3(&self) -> bool {
        self.path_width_3_ordering().is_some()
    }

    /// Checks that every prefix of `order` is 3-separating.
    pub fn is_path_width_3_witness(&self, order: &[usize]) -> bool {
        if order.len() != self.size() || bits::from_elements(order.iter().copied()) != self.ground() {
            return false;
        }
        let mut prefix = 0;
        order.iter().all(|&e| {
            prefix |= 1 << e;
            self.lambda(prefix) <= 2
        })
    }
}

fn classes(n: usize, excluded: Subset, related: impl Fn(usize, usize) -> bool) -> Vec<Subset> {
    let mut out = Vec::new();
    let mut seen = excluded;
    for e in 0..n {
        if seen >> e & 1 == 1 {
            continue;
        }
        let class = (e + 1..n)
            .filter(|&f| excluded >> f & 1 == 0 && related(e, f))
            .fold(1 << e, |acc, f| acc | 1 << f);
        seen |= class;
        out.push(class);
    }
    out
}
