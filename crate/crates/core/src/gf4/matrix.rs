use std::fmt;
use std::str::FromStr;

use super::{det_in_place, Gf4};
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(4) with optional element labels on each axis.
///
/// Values are never mutated after construction; every transform returns a new
/// matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, vec![Gf4::ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Gf4::ONE } else { Gf4::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gf4) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_vec(rows, cols, data)
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Gf4>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has the wrong length");
        Gf4Matrix { rows, cols, data, row_labels: None, col_labels: None }
    }

    pub fn from_rows(rows: &[Vec<Gf4>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Parse {
                line: i + 1,
                column: r.len().min(cols) + 1,
                message: format!("ragged row: expected {cols} entries, found {}", r.len()),
            });
        }
        Ok(Self::from_vec(rows.len(), cols, rows.concat()))
    }

    /// Attaches element labels. Labels must be unique per axis.
    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != self.rows || col_labels.len() != self.cols {
            return Err(Error::Precondition(format!(
                "label counts {}x{} do not match a {}x{} matrix",
                row_labels.len(),
                col_labels.len(),
                self.rows,
                self.cols
            )));
        }
        check_unique(&row_labels)?;
        check_unique(&col_labels)?;
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.row_labels = None;
        self.col_labels = None;
        self
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Gf4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Gf4> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[Gf4] {
        &self.data
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    /// Row label `i`, defaulting to the decimal index.
    pub fn row_label(&self, i: usize) -> String {
        self.row_labels.as_ref().map_or_else(|| i.to_string(), |l| l[i].clone())
    }

    /// Column label `j`, defaulting to `rows + j`.
    pub fn col_label(&self, j: usize) -> String {
        self.col_labels.as_ref().map_or_else(|| (self.rows + j).to_string(), |l| l[j].clone())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i));
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    /// Applies `f` entrywise, keeping labels.
    pub fn map(&self, f: impl Fn(Gf4) -> Gf4) -> Self {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|v| *v = f(*v));
        out
    }

    /// Entrywise Frobenius automorphism (ω ↔ ω²).
    pub fn conjugate(&self) -> Self {
        self.map(Gf4::frobenius)
    }

    pub fn scale_row(&self, i: usize, c: Gf4) -> Self {
        let mut out = self.clone();
        for j in 0..self.cols {
            out.data[i * self.cols + j] *= c;
        }
        out
    }

    pub fn scale_col(&self, j: usize, c: Gf4) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.data[i * self.cols + j] *= c;
        }
        out
    }

    pub fn mul(&self, rhs: &Gf4Matrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Precondition(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Gf4::ZERO, |acc, k| acc + self.get(i, k) * rhs.get(k, j))
        }))
    }

    /// Horizontal concatenation `[self | rhs]`. Column labels are kept only
    /// when both sides carry them.
    pub fn hconcat(&self, rhs: &Gf4Matrix) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::Precondition("row counts differ".into()));
        }
        let cols = self.cols + rhs.cols;
        let mut out = Self::from_fn(self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                rhs.get(i, j - self.cols)
            }
        });
        if let (Some(a), Some(b)) = (&self.col_labels, &rhs.col_labels) {
            let labels: Vec<String> = a.iter().chain(b).cloned().collect();
            check_unique(&labels)?;
            out.col_labels = Some(labels);
            out.row_labels = self.row_labels.clone().or_else(|| rhs.row_labels.clone());
        }
        Ok(out)
    }

    pub fn determinant(&self) -> Result<Gf4> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut buf = self.data.clone();
        Ok(det_in_place(&mut buf, self.rows))
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn row_echelon(&self) -> (Gf4Matrix, Vec<usize>) {
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..cols {
                    m.swap(p * cols + k, r * cols + k);
                }
            }
            let inv = m[r * cols + c].inv_or_zero();
            for k in 0..cols {
                m[r * cols + k] *= inv;
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = m[i * cols + c];
                if f.is_zero() {
                    continue;
                }
                for k in 0..cols {
                    let v = m[r * cols + k];
                    m[i * cols + k] += f * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut out = Gf4Matrix::from_vec(rows, cols, m);
        out.col_labels = self.col_labels.clone();
        (out, pivots)
    }

    /// Selects rows and columns in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        check_indices(rows, self.rows)?;
        check_indices(cols, self.cols)?;
        let mut out = Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]));
        if let Some(l) = &self.row_labels {
            out.row_labels = Some(rows.iter().map(|&i| l[i].clone()).collect());
        }
        if let Some(l) = &self.col_labels {
            out.col_labels = Some(cols.iter().map(|&j| l[j].clone()).collect());
        }
        Ok(out)
    }

    /// Text form: one row per line, tokens `0 1 w v` separated by spaces.
    pub fn format(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|v| v.token().to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    /// Compact single-line form used in sweep records: rows as token strings joined by `/`.
    pub fn compact(&self) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.token()).collect::<String>())
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn parse_compact(s: &str) -> Result<Self> {
        let text: Vec<String> = s
            .split('/')
            .filter(|r| !r.is_empty())
            .map(|r| r.chars().map(|c| c.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        Self::parse(&text.join("\n"))
    }

    /// Parses the text form. Blank lines are ignored, so `""` is the 0×0 matrix.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<Gf4>> = Vec::new();
        let mut width: Option<usize> = None;
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            let mut col = 0;
            for (pos, token) in tokens_with_columns(line) {
                col += 1;
                let v = Gf4::from_token(token).ok_or_else(|| Error::Parse {
                    line: lineno + 1,
                    column: pos + 1,
                    message: format!("unknown token {token:?}"),
                })?;
                row.push(v);
            }
            match width {
                None => width = Some(col),
                Some(w) if w != col => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        column: line.len() + 1,
                        message: format!("ragged row: expected {w} entries, found {col}"),
                    })
                }
                _ => {}
            }
            rows.push(row);
        }
        Self::from_rows(&rows)
    }
}

fn tokens_with_columns(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
}

fn check_indices(idx: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    for &i in idx {
        if i >= len {
            return Err(Error::IndexOutOfRange { index: i, len });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::DuplicateIndex(i));
        }
    }
    Ok(())
}

pub(crate) fn check_unique(labels: &[String]) -> Result<()> {
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::DuplicateLabel(w[0].clone())),
        None => Ok(()),
    }
}

impl FromStr for Gf4Matrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Matrix[{}]", self.compact())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const W: Gf4 = Gf4::OMEGA;
    const V: Gf4 = Gf4::OMEGA2;
    const O: Gf4 = Gf4::ZERO;
    const I: Gf4 = Gf4::ONE;

    fn m(rows: &[&[Gf4]]) -> Gf4Matrix {
        Gf4Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn matrix_strategy(max: usize) -> impl Strategy<Value = Gf4Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0u8..4, r * c).prop_map(move |v| {
                Gf4Matrix::from_vec(r, c, v.into_iter().map(Gf4::from_code).collect())
            })
        })
    }

    fn square_strategy(max: usize) -> impl Strategy<Value = Gf4Matrix> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(0u8..4, n * n).prop_map(move |v| {
                Gf4Matrix::from_vec(n, n, v.into_iter().map(Gf4::from_code).collect())
            })
        })
    }

    fn fixed_square(n: usize) -> impl Strategy<Value = Gf4Matrix> {
        proptest::collection::vec(0u8..4, n * n)
            .prop_map(move |v| Gf4Matrix::from_vec(n, n, v.into_iter().map(Gf4::from_code).collect()))
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(Gf4Matrix::identity(2).determinant().unwrap(), I);
        assert_eq!(m(&[&[W, I], &[I, W]]).determinant().unwrap(), W);
        assert_eq!(m(&[&[I, I], &[I, I]]).determinant().unwrap(), O);
        assert!(matches!(
            Gf4Matrix::zeros(2, 3).determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf4Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Gf4Matrix::identity(3).rank(), 3);
        assert_eq!(m(&[&[I, W], &[W, V]]).rank(), 1);
    }

    #[test]
    fn submatrix_examples() {
        let id = Gf4Matrix::identity(3);
        assert_eq!(id.submatrix(&[2, 0], &[0, 2]).unwrap(), m(&[&[O, I], &[I, O]]));
        assert_eq!(id.submatrix(&[0, 1, 2], &[0, 1, 2]).unwrap(), id);
        let row = m(&[&[I, W, V]]);
        assert_eq!(row.submatrix(&[0], &[2, 1]).unwrap(), m(&[&[V, W]]));
        assert!(matches!(id.submatrix(&[3], &[0]), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(id.submatrix(&[0, 0], &[0]), Err(Error::DuplicateIndex(0))));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Gf4Matrix::parse("1 w\n0 v").unwrap(), m(&[&[I, W], &[O, V]]));
        let empty = Gf4Matrix::parse("").unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 0));
        match Gf4Matrix::parse("1 x") {
            Err(Error::Parse { line: 1, column: 3, message }) => assert!(message.contains("\"x\"")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Gf4Matrix::parse("1 1\n1"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn compact_round_trip() {
        let a = m(&[&[I, W, O], &[V, O, I]]);
        assert_eq!(a.compact(), "1w0/v01");
        assert_eq!(Gf4Matrix::parse_compact("1w0/v01").unwrap(), a);
    }

    #[test]
    fn duplicate_labels_rejected() {
        let r = Gf4Matrix::identity(2).with_labels(vec!["a".into(), "a".into()], vec!["b".into(), "c".into()]);
        assert!(matches!(r, Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn row_scaling_multiplies_determinant_exhaustive_2x2() {
        for code in 0..256u32 {
            let a = Gf4Matrix::from_fn(2, 2, |i, j| Gf4::from_code((code >> (2 * (2 * i + j))) as u8));
            let d = a.determinant().unwrap();
            for c in Gf4::NONZERO {
                for row in 0..2 {
                    assert_eq!(a.scale_row(row, c).determinant().unwrap(), c * d);
                }
            }
        }
    }

    #[test]
    fn det_nonzero_iff_full_rank_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let n = rng.gen_range(1..=5);
            let a = Gf4Matrix::from_fn(n, n, |_, _| Gf4::from_code(rng.gen_range(0..4)));
            assert_eq!(!a.determinant().unwrap().is_zero(), a.rank() == n, "{a:?}");
        }
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(a in matrix_strategy(6)) {
            prop_assert_eq!(Gf4Matrix::parse(&a.format()).unwrap(), a);
        }

        #[test]
        fn determinant_transpose_invariant(a in square_strategy(5)) {
            prop_assert_eq!(a.determinant().unwrap(), a.transpose().determinant().unwrap());
        }

        #[test]
        fn determinant_multiplicative_3x3(a in fixed_square(3), b in fixed_square(3)) {
            let ab = a.mul(&b).unwrap();
            prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        }
    }
}
