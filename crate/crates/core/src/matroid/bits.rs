//! Helpers for subsets of a ground set encoded as bitmasks.

use super::Subset;

#[inline]
pub fn size(s: Subset) -> usize {
    s.count_ones() as usize
}

#[inline]
pub fn full(n: usize) -> Subset {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn singleton(e: usize) -> Subset {
    1 << e
}

#[inline]
pub fn contains(s: Subset, e: usize) -> bool {
    s >> e & 1 == 1
}

/// Elements of `s` in increasing order.
pub fn elements(s: Subset) -> Elements {
    Elements(s)
}

pub struct Elements(Subset);

impl Iterator for Elements {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub fn from_elements(elems: impl IntoIterator<Item = usize>) -> Subset {
    elems.into_iter().fold(0, |acc, e| acc | 1 << e)
}

/// All `k`-subsets of `{0..n}` in increasing numeric order (Gosper's hack).
pub fn combinations(n: usize, k: usize) -> Combinations {
    let limit = 1u64 << n;
    let start = if k > n { limit } else { (1u64 << k) - 1 };
    Combinations { next: start, limit, k }
}

pub struct Combinations {
    next: u64,
    limit: u64,
    k: usize,
}

impl Iterator for Combinations {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        if self.next >= self.limit {
            return None;
        }
        let cur = self.next;
        if self.k == 0 {
            self.next = self.limit;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            self.next = (((r ^ cur) >> 2) / c) | r;
        }
        Some(cur as Subset)
    }
}

/// All `k`-subsets of the set `within`.
pub fn combinations_in(within: Subset, k: usize) -> impl Iterator<Item = Subset> {
    let positions: Vec<usize> = elements(within).collect();
    combinations(positions.len(), k).map(move |c| expand(c, &positions))
}

/// All subsets of `s`, including the empty set and `s` itself.
pub fn subsets(s: Subset) -> impl Iterator<Item = Subset> {
    let mut cur = Some(0u32);
    std::iter::from_fn(move || {
        let out = cur?;
        cur = if out == s { None } else { Some((out.wrapping_sub(s)) & s) };
        Some(out)
    })
}

/// Maps bit `i` of `packed` to bit `positions[i]`.
#[inline]
pub fn expand(packed: Subset, positions: &[usize]) -> Subset {
    let mut out = 0;
    let mut p = packed;
    while p != 0 {
        let i = p.trailing_zeros() as usize;
        out |= 1 << positions[i];
        p &= p - 1;
    }
    out
}

/// Inverse of [`expand`]: packs the bits of `s` found at `positions`.
#[inline]
pub fn compress(s: Subset, positions: &[usize]) -> Subset {
    positions
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &p)| if contains(s, p) { acc | 1 << i } else { acc })
}

/// Image of `s` under the element map `perm` (element `e` goes to `perm[e]`).
#[inline]
pub fn permute(s: Subset, perm: &[usize]) -> Subset {
    let mut out = 0;
    let mut p = s;
    while p != 0 {
        let e = p.trailing_zeros() as usize;
        out |= 1 << perm[e];
        p &= p - 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_count_and_order() {
        let all: Vec<_> = combinations(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|&s| size(s) == 2));
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(combinations(16, 8).count(), 12870);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = 0b10110;
        let subs: Vec<_> = subsets(s).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|&t| t & !s == 0));
        assert_eq!(subsets(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn expand_compress_inverse() {
        let pos = [1, 4, 5, 9];
        for packed in 0..16 {
            assert_eq!(compress(expand(packed, &pos), &pos), packed);
        }
        assert_eq!(combinations_in(0b1011, 2).count(), 3);
    }
}
