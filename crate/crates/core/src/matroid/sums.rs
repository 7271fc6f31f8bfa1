//! Direct sums and 2-sums.

use super::bits::{self, elements};
use super::{Matroid, Subset};
use crate::error::{Error, Result};

fn disjoint_labels(m1: &Matroid, m2: &Matroid, shared: Option<&str>) -> Result<()> {
    for l in m2.labels() {
        if Some(l.as_str()) != shared && m1.index_of(l).is_ok() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Ground sets and basepoint positions for a 2-sum: elements of `m1 − p`
/// come first, then `m2 − p`.
struct TwoSumLayout {
    p1: usize,
    p2: usize,
    keep1: Vec<usize>,
    keep2: Vec<usize>,
    labels: Vec<String>,
}

fn layout(m1: &Matroid, m2: &Matroid, p: &str) -> Result<TwoSumLayout> {
    let p1 = m1.index_of(p)?;
    let p2 = m2.index_of(p)?;
    disjoint_labels(m1, m2, Some(p))?;
    if m1.size() < 2 || m2.size() < 2 {
        return Err(Error::Precondition("2-sum parts need at least two elements".into()));
    }
    for (m, i) in [(m1, p1), (m2, p2)] {
        if m.is_loop(i) || m.is_coloop(i) {
            return Err(Error::Precondition(format!("basepoint {p} is a loop or coloop of a part")));
        }
    }
    let keep1: Vec<usize> = (0..m1.size()).filter(|&e| e != p1).collect();
    let keep2: Vec<usize> = (0..m2.size()).filter(|&e| e != p2).collect();
    let labels = keep1
        .iter()
        .map(|&e| m1.label(e).to_string())
        .chain(keep2.iter().map(|&e| m2.label(e).to_string()))
        .collect();
    Ok(TwoSumLayout { p1, p2, keep1, keep2, labels })
}

impl Matroid {
    /// Direct sum; elements of `self` come first. Labels must be disjoint.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        disjoint_labels(self, other, None)?;
        let n1 = self.size();
        let labels: Vec<String> = self.labels().iter().chain(other.labels()).cloned().collect();
        if labels.len() > super::MAX_ELEMENTS {
            return Err(Error::UnsupportedScale { elements: labels.len(), bound: super::MAX_ELEMENTS });
        }
        let bases = self
            .bases()
            .iter()
            .flat_map(|&b1| other.bases().iter().map(move |&b2| b1 | b2 << n1))
            .collect();
        Ok(Matroid::from_bases_unchecked(labels, bases))
    }

    /// 2-sum along the shared element `p`, via the rank formula
    /// `r(A₁ ∪ A₂) = r₁(A₁) + r₂(A₂) − θ(A₁, A₂) + θ(∅, ∅)`.
    pub fn two_sum(&self, other: &Matroid, p: &str) -> Result<Matroid> {
        let lay = layout(self, other, p)?;
        let n1 = lay.keep1.len();
        let n = n1 + lay.keep2.len();
        if n > super::MAX_ELEMENTS {
            return Err(Error::UnsupportedScale { elements: n, bound: super::MAX_ELEMENTS });
        }
        let theta = |x: Subset, y: Subset| -> i32 {
            let in1 = self.rank_of(x | 1 << lay.p1) == self.rank_of(x);
            let in2 = other.rank_of(y | 1 << lay.p2) == other.rank_of(y);
            (in1 && in2) as i32
        };
        let t0 = theta(0, 0);
        let ranks = (0..1u32 << n)
            .map(|s| {
                let x = bits::expand(s & bits::full(n1), &lay.keep1);
                let y = bits::expand(s >> n1, &lay.keep2);
                (self.rank_of(x) as i32 + other.rank_of(y) as i32 - theta(x, y) + t0) as u8
            })
            .collect();
        Ok(Matroid::from_rank_table_unchecked(lay.labels, ranks))
    }

    /// Circuits of the 2-sum assembled clause by clause: circuits of each part
    /// avoiding `p`, plus `(C ∪ D) − p` for circuits `C ∋ p`, `D ∋ p`.
    /// Indexed like [`Matroid::two_sum`].
    pub fn two_sum_circuits(&self, other: &Matroid, p: &str) -> Result<Vec<Subset>> {
        let lay = layout(self, other, p)?;
        let n1 = lay.keep1.len();
        let c1 = self.circuits();
        let c2 = other.circuits();
        let mut out = Vec::new();
        for &c in c1.iter().filter(|&&c| c >> lay.p1 & 1 == 0) {
            out.push(bits::compress(c, &lay.keep1));
        }
        for &d in c2.iter().filter(|&&d| d >> lay.p2 & 1 == 0) {
            out.push(bits::compress(d, &lay.keep2) << n1);
        }
        for &c in c1.iter().filter(|&&c| c >> lay.p1 & 1 == 1) {
            for &d in c2.iter().filter(|&&d| d >> lay.p2 & 1 == 1) {
                out.push(bits::compress(c, &lay.keep1) | bits::compress(d, &lay.keep2) << n1);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Rank function determined by a circuit family: the size of a largest
    /// subset containing no circuit.
    pub fn rank_from_circuits(n: usize, circuits: &[Subset], s: Subset) -> usize {
        bits::subsets(s)
            .filter(|&t| circuits.iter().all(|&c| c & !t != 0))
            .map(|t| elements(t).count())
            .max()
            .unwrap_or(0)
            .min(n)
    }
}
