//! Generalized Δ-Y and Y-Δ exchanges, and gluing wheels onto triangles.

use super::gpc::generalized_parallel_connection;
use super::theta::theta_any;
use super::{fresh_label, is_coindependent, labels, uniform_labelled, wheel};
use crate::error::{Error, Result};
use crate::matroid::bits::{self, elements};
use crate::matroid::{Matroid, Subset};

fn indices(m: &Matroid, names: &[&str]) -> Result<Vec<usize>> {
    let idx: Vec<usize> = names.iter().map(|l| m.index_of(l)).collect::<Result<_>>()?;
    let mask = bits::from_elements(idx.iter().copied());
    if bits::size(mask) != idx.len() {
        return Err(Error::Precondition("repeated element".into()));
    }
    Ok(idx)
}

/// `Δ_A(m)` for an ordered set `A` of any size `k ≥ 2` whose restriction is
/// `U_{2,k}` and which is coindependent.
pub(crate) fn delta_any(m: &Matroid, a: &[usize]) -> Result<Matroid> {
    let k = a.len();
    let a_mask = bits::from_elements(a.iter().copied());
    if k < 2 || m.rank_of(a_mask) != 2 || a.iter().any(|&e| m.rank_of(1 << e) != 1) || bits::combinations_in(a_mask, 2).any(|p| m.rank_of(p) != 2) {
        return Err(Error::Precondition(format!("{} is not a segment", m.format_set(a_mask))));
    }
    if !is_coindependent(m, a_mask) {
        return Err(Error::Precondition(format!("{} is not coindependent", m.format_set(a_mask))));
    }
    let a_names: Vec<String> = a.iter().map(|&e| m.label(e).to_string()).collect();
    let mut temp: Vec<String> = Vec::new();
    for i in 1..=k {
        let l = fresh_label(m, &temp, &format!("_b{i}"));
        temp.push(l);
    }
    let th = theta_any(k).with_labels(a_names.iter().chain(&temp).cloned().collect())?;
    let p = generalized_parallel_connection(&th, m)?;
    let d = p.delete(bits::full(k));
    let pairs: Vec<(&str, &str)> = temp.iter().map(String::as_str).zip(a_names.iter().map(String::as_str)).collect();
    d.rename(&pairs)?.reordered(m.labels())
}

/// Generalized Δ-Y exchange on the coindependent segment `a` (3 or 4
/// elements). `Θ_k`'s `b_i` takes the name of `a[i]`; the result keeps the
/// element order of `m`.
pub fn delta_y(m: &Matroid, a: &[&str]) -> Result<Matroid> {
    if !(3..=4).contains(&a.len()) {
        return Err(Error::Precondition("Δ-Y needs a segment of 3 or 4 elements".into()));
    }
    delta_any(m, &indices(m, a)?)
}

/// Generalized Y-Δ exchange on the independent cosegment `a`: `(Δ_A(m*))*`.
pub fn nabla_y(m: &Matroid, a: &[&str]) -> Result<Matroid> {
    Ok(delta_y(&m.dual(), a)?.dual())
}

/// Glues an `r`-wheel onto the ordered triangle `(a, b, c)` and deletes `x`.
///
/// The wheel is relabelled so that `a = s1`, `b = t1`, `c = s2`; its other
/// elements get fresh names derived from `s3, t2, …`. The result is
/// `P_T(N, m) \ X` with the elements of `m` first, in their original order.
pub fn glue_wheel(m: &Matroid, triple: [&str; 3], r: usize, x: &[&str]) -> Result<Matroid> {
    let [a, b, c] = triple;
    let t = m.mask_of(&triple)?;
    if bits::size(t) != 3 || !m.is_circuit(t) {
        return Err(Error::Precondition(format!("{} is not a triangle", m.format_set(t))));
    }
    if r < 3 {
        return Err(Error::Precondition("wheels glued on have at least three spokes".into()));
    }
    if !x.contains(&b) || x.iter().any(|e| !triple.contains(e)) {
        return Err(Error::Precondition("the deleted set must contain b and lie in the triangle".into()));
    }
    let w = wheel(r)?;
    let mut names: Vec<String> = Vec::with_capacity(w.size());
    let mut fresh: Vec<String> = Vec::new();
    for l in w.labels() {
        let name = match l.as_str() {
            "s1" => a.to_string(),
            "t1" => b.to_string(),
            "s2" => c.to_string(),
            other => {
                let f = fresh_label(m, &fresh, other);
                fresh.push(f.clone());
                f
            }
        };
        names.push(name);
    }
    let n = w.with_labels(names)?;
    let p = generalized_parallel_connection(&n, m)?;
    let glued = p.delete(p.mask_of(x)?);
    let order: Vec<&str> =
        m.labels().iter().map(String::as_str).filter(|l| !x.contains(l)).chain(fresh.iter().map(String::as_str)).collect();
    glued.reordered(&order)
}

/// Outcome of checking the Δ-Y identities on one instance.
#[derive(Debug, Clone, Default)]
pub struct DeltaIdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl DeltaIdentityReport {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// Checks, for the coindependent segment `a` of `m`, that
/// * `Δ_A(M)/x = Δ_{A−x}(M\x)` for `x ∈ A`,
/// * `Δ_A(M)\x = Δ_A(M\x)` for `x ∉ A` with `A` coindependent in `M\x`,
/// * `Δ_A(M)/x = Δ_A(M/x)` for `x ∉ cl(A)`,
/// * `Δ_A(M)/x` is the 2-sum of `U_{k−1,k+1}` on `A ∪ p` with
///   `M/x\(A−a)` (`a` renamed `p`) for `x ∈ cl(A) − A`,
/// * `∇_A(Δ_A(M)) = M`.
///
/// Equalities are of labelled matroids.
pub fn check_delta_identities(m: &Matroid, a: &[&str]) -> Result<DeltaIdentityReport> {
    let idx = indices(m, a)?;
    let d = delta_any(m, &idx)?;
    let a_mask: Subset = bits::from_elements(idx.iter().copied());
    let k = idx.len();
    let mut report = DeltaIdentityReport::default();
    let name = |e: usize| m.label(e).to_string();

    let back = nabla_any(&d, a)?;
    report.check(back.same_labelled(m), || format!("∇Δ ≠ id on {}", m.format_set(a_mask)));

    for (pos, &x) in idx.iter().enumerate() {
        if k < 3 {
            break;
        }
        let lhs = d.contract(1 << d.index_of(&name(x))?);
        let mx = m.delete(1 << x);
        let rest: Vec<usize> =
            idx.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, &e)| mx.index_of(m.label(e))).collect::<Result<_>>()?;
        let rhs = delta_any(&mx, &rest)?;
        report.check(lhs.same_labelled(&rhs), || format!("Δ_A(M)/{} ≠ Δ_(A−x)(M\\x)", name(x)));
    }

    let cl_a = m.closure(a_mask);
    for x in elements(m.ground() & !a_mask) {
        let dx = d.index_of(&name(x))?;
        let mx = m.delete(1 << x);
        let a_in_mx = mx.mask_of(a)?;
        if is_coindependent(&mx, a_in_mx) {
            let rhs = delta_any(&mx, &indices(&mx, a)?)?;
            report.check(d.delete(1 << dx).same_labelled(&rhs), || format!("Δ_A(M)\\{} ≠ Δ_A(M\\x)", name(x)));
        }
        if cl_a >> x & 1 == 0 {
            let mc = m.contract(1 << x);
            let rhs = delta_any(&mc, &indices(&mc, a)?)?;
            report.check(d.contract(1 << dx).same_labelled(&rhs), || format!("Δ_A(M)/{} ≠ Δ_A(M/x)", name(x)));
        } else {
            let lhs = d.contract(1 << dx);
            let keep = idx[0];
            let drop = a_mask & !(1 << keep);
            let base = m.minor(1 << x, drop);
            let p = fresh_label(m, &[], "p");
            let base = base.rename(&[(m.label(keep), p.as_str())])?;
            let mut u_names = labels(a);
            u_names.push(p.clone());
            let u = uniform_labelled(k - 1, &u_names)?;
            // x parallel to an element of A leaves no 2-sum to compare against
            let pi = base.index_of(&p)?;
            if base.is_loop(pi) || base.is_coloop(pi) {
                continue;
            }
            match u.two_sum(&base, &p) {
                Ok(rhs) => report.check(lhs.same_labelled(&rhs), || format!("Δ_A(M)/{} is not the 2-sum", name(x))),
                Err(e) => report.failures.push(format!("2-sum for {} undefined: {e}", name(x))),
            }
        }
    }
    Ok(report)
}

fn nabla_any(m: &Matroid, a: &[&str]) -> Result<Matroid> {
    let dual = m.dual();
    Ok(delta_any(&dual, &indices(&dual, a)?)?.dual())
}
