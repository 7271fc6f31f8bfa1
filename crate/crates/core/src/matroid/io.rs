//! Plain-text matroid format.
//!
//! ```text
//! # optional comments
//! # labels a b c d
//! 4 2
//! 0 1
//! 0 2
//! ```
//!
//! The first non-comment line is `n r`; every following line lists one basis
//! as sorted 0-based element indices. A rank-0 matroid has a single empty
//! basis line. A `# labels` comment, when present, names the elements.

use std::fmt::Write as _;

use super::{default_labels, Matroid};
use crate::error::{Error, Result};

impl Matroid {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.labels() != default_labels(self.size()).as_slice() {
            let _ = writeln!(out, "# labels {}", self.labels().join(" "));
        }
        let _ = writeln!(out, "{} {}", self.size(), self.rank());
        let mut rows: Vec<Vec<usize>> = self.bases().iter().map(|&b| super::bits::elements(b).collect()).collect();
        rows.sort();
        for row in rows {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Parses the text format, validating the basis axioms.
    pub fn from_text(text: &str) -> Result<Matroid> {
        let mut labels: Option<Vec<String>> = None;
        let mut header: Option<(usize, usize)> = None;
        let mut bases = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line_no = ln + 1;
            let trimmed = line.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(rest) = comment.trim().strip_prefix("labels") {
                    labels = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                continue;
            }
            let parse_err = |column: usize, message: String| Error::Parse { line: line_no, column, message };
            let mut nums = Vec::new();
            let mut column = 1;
            for tok in trimmed.split_whitespace() {
                column = line.find(tok).map_or(column, |c| c + 1);
                let v: usize = tok.parse().map_err(|_| parse_err(column, format!("expected an integer, found \"{tok}\"")))?;
                nums.push((v, column));
            }
            match header {
                None => {
                    if nums.is_empty() {
                        continue;
                    }
                    if nums.len() != 2 {
                        return Err(parse_err(1, "header must be \"n r\"".into()));
                    }
                    if nums[0].0 > super::MAX_ELEMENTS {
                        return Err(Error::UnsupportedScale { elements: nums[0].0, bound: super::MAX_ELEMENTS });
                    }
                    header = Some((nums[0].0, nums[1].0));
                }
                Some((n, r)) => {
                    if nums.is_empty() && r != 0 {
                        continue;
                    }
                    if nums.len() != r {
                        return Err(parse_err(1, format!("basis has {} elements, rank is {r}", nums.len())));
                    }
                    let mut mask = 0u32;
                    for &(v, col) in &nums {
                        if v >= n {
                            return Err(parse_err(col, format!("element {v} out of range")));
                        }
                        if mask >> v & 1 == 1 {
                            return Err(parse_err(col, format!("element {v} repeated")));
                        }
                        mask |= 1 << v;
                    }
                    bases.push(mask);
                }
            }
        }
        let Some((n, r)) = header else {
            return Err(Error::Parse { line: 1, column: 1, message: "missing \"n r\" header".into() });
        };
        if r == 0 && bases.is_empty() {
            bases.push(0);
        }
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(Error::Parse { line: 1, column: 1, message: format!("{} labels for {n} elements", labels.len()) });
        }
        Matroid::from_bases(labels, bases)
    }
}
