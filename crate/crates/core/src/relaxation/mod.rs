//! Circuit-hyperplane relaxation, bordered reduced representations, and two
//! independent GF(4)-representability searches.
//!
//! For a circuit-hyperplane `X` of `M = M[I|C]`, elements `e ∈ X` and
//! `f ∉ X` with `(X − e) ∪ f` a basis, the reduced representation is scaled
//! to the block form
//!
//! ```text
//!            (E−X)−f   e
//!   X − e  [    A      1 ]
//!   f      [   1ᵀ      0 ]
//! ```
//!
//! and a representation of the relaxation, if one exists, can be taken to
//! have the same shape with interior `A'` and corner `ω`.

mod omega;
mod represent;
pub(crate) mod search;

pub use omega::{omega_corner_search, omega_corner_solutions, SearchSpace};
pub use represent::{representable_gf4, representable_gf4_with_bound, reduced_form, DEFAULT_SCALE_BOUND};

use crate::error::{Error, Result};
use crate::gf4::{Gf4, Gf4Matrix};
use crate::matroid::bits::{self, elements};
use crate::matroid::{Matroid, Subset};
use crate::scanner::{self, ScanMatch};

/// Declares the circuit-hyperplane `x` to be a basis.
pub fn relax(m: &Matroid, x: Subset) -> Result<Matroid> {
    if !m.is_circuit_hyperplane(x) {
        return Err(Error::NotCircuitHyperplane(m.format_set(x)));
    }
    let mut ranks = m.rank_table().to_vec();
    // only X itself changes rank: its supersets already span
    ranks[x as usize] += 1;
    Ok(Matroid::from_rank_table_unchecked(m.labels().to_vec(), ranks))
}

/// Bordered reduced representation of `M` with respect to the circuit-hyperplane `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedRepresentation {
    pub matroid: Matroid,
    pub x: Subset,
    pub e: usize,
    pub f: usize,
    /// Rows `X − e`, columns `(E − X) − f`, labelled by element names.
    pub a: Gf4Matrix,
    /// Rows `(X − e), f`; columns `((E − X) − f), e`.
    pub c: Gf4Matrix,
}

impl ReducedRepresentation {
    /// Element indices of the rows of `C`: `X − e` in order, then `f`.
    pub fn row_elements(&self) -> Vec<usize> {
        let mut rows = self.element_indices(self.a.row_labels());
        rows.push(self.f);
        rows
    }

    /// Element indices of the columns of `C`: `(E − X) − f` in order, then `e`.
    pub fn col_elements(&self) -> Vec<usize> {
        let mut cols = self.element_indices(self.a.col_labels());
        cols.push(self.e);
        cols
    }

    fn element_indices(&self, labels: Option<&[String]>) -> Vec<usize> {
        labels
            .expect("interior matrices carry labels")
            .iter()
            .map(|l| self.matroid.index_of(l).expect("labels name elements"))
            .collect()
    }

    /// The relaxed matroid `M'`.
    pub fn relaxed(&self) -> Matroid {
        relax(&self.matroid, self.x).expect("X is a circuit-hyperplane by construction")
    }

    /// `C'` with interior `a2` and the given corner.
    pub fn bordered(&self, a2: &Gf4Matrix, corner: Gf4) -> Gf4Matrix {
        border(a2, corner).with_labels(self.c.row_labels().unwrap().to_vec(), self.c.col_labels().unwrap().to_vec()).expect("labels are unique")
    }

    /// Checks the structural invariants of the block form.
    pub fn validate(&self) -> Result<()> {
        let basis = (self.x & !(1 << self.e)) | 1 << self.f;
        if !self.matroid.is_basis(basis) {
            return Err(Error::Verification("(X − e) ∪ f is not a basis".into()));
        }
        let p = self.a.rows();
        let q = self.a.cols();
        let ones_ok = (0..p).all(|i| self.c.get(i, q) == Gf4::ONE) && (0..q).all(|j| self.c.get(p, j) == Gf4::ONE);
        if !ones_ok || !self.c.get(p, q).is_zero() {
            return Err(Error::Verification("border is not all ones with a zero corner".into()));
        }
        if !Matroid::from_gf4_matrix(&self.c)?.same_labelled(&self.matroid) {
            return Err(Error::Verification("M[I|C] differs from the matroid".into()));
        }
        if !self.matroid.is_circuit_hyperplane(self.x) {
            return Err(Error::Verification("X is not a circuit-hyperplane".into()));
        }
        Ok(())
    }
}

/// `[[a, 1], [1ᵀ, corner]]`.
fn border(a: &Gf4Matrix, corner: Gf4) -> Gf4Matrix {
    let (p, q) = (a.rows(), a.cols());
    Gf4Matrix::from_fn(p + 1, q + 1, |i, j| match (i < p, j < q) {
        (true, true) => a.get(i, j),
        (false, false) => corner,
        _ => Gf4::ONE,
    })
}

fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Builds `M = M[I|C]` from an interior `A` (`p × q`, `p, q ≥ 1`). Unlabelled
/// interiors get rows `x1 … xp` and columns `y1 … yq`; the border elements
/// are `e` (column) and `f` (row). Element order is `x…, f, y…, e`.
pub fn build_reduced_representation(a: &Gf4Matrix) -> Result<(Matroid, ReducedRepresentation)> {
    let (p, q) = (a.rows(), a.cols());
    if p == 0 || q == 0 {
        return Err(Error::Precondition("the interior needs at least one row and one column".into()));
    }
    let row_names = a.row_labels().map_or_else(|| default_names("x", p), <[String]>::to_vec);
    let col_names = a.col_labels().map_or_else(|| default_names("y", q), <[String]>::to_vec);
    let a = a.clone().with_labels(row_names.clone(), col_names.clone())?;
    let mut c_rows = row_names;
    c_rows.push(fresh(&c_rows, &col_names, "f"));
    let mut c_cols = col_names;
    c_cols.push(fresh(&c_rows, &c_cols, "e"));
    let c = border(&a, Gf4::ZERO).with_labels(c_rows, c_cols)?;
    let m = Matroid::from_gf4_matrix(&c)?;
    let e = p + 1 + q;
    let f = p;
    let x = bits::full(p) | 1 << e;
    let rr = ReducedRepresentation { matroid: m.clone(), x, e, f, a, c };
    debug_assert!(rr.validate().is_ok());
    if !m.is_circuit_hyperplane(x) {
        return Err(Error::Verification("bordered construction did not give a circuit-hyperplane".into()));
    }
    Ok((m, rr))
}

fn fresh(a: &[String], b: &[String], stem: &str) -> String {
    let mut s = stem.to_string();
    while a.contains(&s) || b.contains(&s) {
        s.push('\'');
    }
    s
}

/// Scales a reduced representation with respect to the basis `(X − e) ∪ f`
/// into block form. `c_raw` has rows labelled by that basis and columns by
/// the remaining elements; `e` must label a column and `f` a row.
pub fn normalize_to_block_form(c_raw: &Gf4Matrix, e: &str, f: &str) -> Result<ReducedRepresentation> {
    let (Some(rl), Some(cl)) = (c_raw.row_labels(), c_raw.col_labels()) else {
        return Err(Error::Precondition("the reduced representation must be labelled".into()));
    };
    let fi = rl.iter().position(|l| l == f).ok_or_else(|| Error::UnknownElement(f.to_string()))?;
    let ej = cl.iter().position(|l| l == e).ok_or_else(|| Error::UnknownElement(e.to_string()))?;
    let rows: Vec<usize> = (0..c_raw.rows()).filter(|&i| i != fi).chain([fi]).collect();
    let cols: Vec<usize> = (0..c_raw.cols()).filter(|&j| j != ej).chain([ej]).collect();
    let mut c = c_raw.submatrix(&rows, &cols)?;
    let (p, q) = (c.rows() - 1, c.cols() - 1);
    for i in 0..p {
        let v = c.get(i, q);
        if v.is_zero() {
            return Err(Error::Precondition("column e vanishes on X − e: the basis or X is invalid".into()));
        }
        c = c.scale_row(i, v.inverse()?);
    }
    for j in 0..q {
        let v = c.get(p, j);
        if v.is_zero() {
            return Err(Error::Precondition("row f vanishes off X: the basis or X is invalid".into()));
        }
        c = c.scale_col(j, v.inverse()?);
    }
    if !c.get(p, q).is_zero() {
        return Err(Error::Precondition("X is not a circuit-hyperplane: the corner is nonzero".into()));
    }
    let c_rows = c.row_labels().unwrap().to_vec();
    let c_cols = c.col_labels().unwrap().to_vec();
    let a = c
        .submatrix(&(0..p).collect::<Vec<_>>(), &(0..q).collect::<Vec<_>>())?
        .with_labels(c_rows[..p].to_vec(), c_cols[..q].to_vec())?;
    let m = Matroid::from_gf4_matrix(&c)?;
    let x = bits::full(p) | 1 << (p + 1 + q);
    let rr = ReducedRepresentation { e: m.size() - 1, f: p, x, matroid: m, a, c };
    rr.validate()?;
    Ok(rr)
}

/// Outcome of deciding whether a relaxation is GF(4)-representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelaxationVerdict {
    pub representable: bool,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A representation of the relaxation in block form with corner `ω`.
    Matrix(Gf4Matrix),
    /// A forbidden submatrix of the interior.
    Match(ScanMatch),
    None,
}

/// Verdicts for one circuit-hyperplane.
#[derive(Debug, Clone)]
pub struct PipelineEntry {
    pub x: Subset,
    pub rr: ReducedRepresentation,
    pub scanner: RelaxationVerdict,
    pub omega: Option<RelaxationVerdict>,
    pub generic: Option<bool>,
}

/// Decides, for every circuit-hyperplane of the GF(4)-representable `m`,
/// whether its relaxation is GF(4)-representable. The scanner always runs;
/// `with_oracles` adds both exhaustive searches.
pub fn relaxation_pipeline(m: &Matroid, with_oracles: bool) -> Result<Vec<PipelineEntry>> {
    let witness = representable_gf4(m)?.ok_or(Error::NotRepresentable)?;
    let full = Gf4Matrix::identity(witness.rows()).hconcat(&witness.clone().without_labels())?;
    // columns of `full` follow `witness` rows then columns; map to elements
    let order: Vec<usize> = witness
        .row_labels()
        .unwrap()
        .iter()
        .chain(witness.col_labels().unwrap())
        .map(|l| m.index_of(l))
        .collect::<Result<_>>()?;
    let mut by_element = vec![0; m.size()];
    for (col, &e) in order.iter().enumerate() {
        by_element[e] = col;
    }
    let full = full.submatrix(&(0..full.rows()).collect::<Vec<_>>(), &by_element)?;
    let mut out = Vec::new();
    for x in m.circuit_hyperplanes() {
        let (e, f) = elements(x)
            .flat_map(|e| elements(m.ground() & !x).map(move |f| (e, f)))
            .find(|&(e, f)| m.is_basis((x & !(1 << e)) | 1 << f))
            .expect("a circuit-hyperplane has such a pair");
        let basis = (x & !(1 << e)) | 1 << f;
        let c_raw = reduced_form(&full, m, basis)?;
        let rr = normalize_to_block_form(&c_raw, m.label(e), m.label(f))?;
        let scanner = scanner::verdict(&rr);
        let (omega, generic) = if with_oracles {
            let relaxed = rr.relaxed();
            (Some(omega_corner_search(&rr)), Some(representable_gf4(&relaxed)?.is_some()))
        } else {
            (None, None)
        };
        out.push(PipelineEntry { x, rr, scanner, omega, generic });
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
