use super::*;
use crate::constructions::{graphic, uniform, uniform_labelled, wheel, whirl};
use proptest::prelude::*;

fn k4() -> Matroid {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    graphic(4, &edges, &["a", "b", "c", "d", "e", "f"]).unwrap()
}

fn mat(s: &str) -> Gf4Matrix {
    Gf4Matrix::parse_compact(s).unwrap()
}

/// Rank as the largest intersection with a basis.
fn rank_by_bases(m: &Matroid, s: Subset) -> usize {
    m.bases().iter().map(|&b| size(b & s)).max().unwrap_or(0)
}

/// Minimal sets not contained in any basis.
fn circuits_by_bases(m: &Matroid) -> Vec<Subset> {
    let dependent = |s: Subset| !m.bases().iter().any(|&b| s & b == s);
    let mut out: Vec<Subset> = (0..=m.ground())
        .filter(|&s| dependent(s) && elements(s).all(|e| !dependent(s & !(1 << e))))
        .collect();
    out.sort_unstable();
    out
}

fn random_matroid() -> impl Strategy<Value = Matroid> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u8..4, r * c)))
        .prop_map(|(r, c, cells)| {
            let a = Gf4Matrix::from_vec(r, c, cells.into_iter().map(|v| Gf4::ALL[v as usize]).collect());
            Matroid::from_gf4_matrix(&a).unwrap()
        })
}

#[test]
fn from_gf4_matrix_examples() {
    let m = Matroid::from_gf4_matrix(&mat("1/1")).unwrap();
    assert_eq!((m.size(), m.rank(), m.num_bases()), (3, 2, 3));
    let m = Matroid::from_gf4_matrix(&mat("11/1w")).unwrap();
    assert!(m.is_isomorphic(&uniform(2, 4).unwrap()));
    let m = Matroid::from_gf4_matrix(&mat("11/11")).unwrap();
    assert_eq!((m.size(), m.rank(), m.num_bases()), (4, 2, 5));
}

#[test]
fn from_bases_rejects_exchange_violations() {
    let labels = default_labels(4);
    assert!(matches!(Matroid::from_bases(labels.clone(), vec![0b0011, 0b1100]), Err(Error::NotAMatroid(_))));
    assert!(Matroid::from_bases(labels, vec![0b0011, 0b0101, 0b0110]).is_ok());
}

#[test]
fn closure_examples() {
    let u = uniform(2, 4).unwrap();
    assert_eq!(u.closure(0b0001), 0b0001);
    assert_eq!(u.closure(0b0011), u.ground());
    let k = k4();
    let tri = k.mask_of(&["a", "b", "d"]).unwrap();
    assert!(k.is_circuit(tri));
    assert_eq!(k.closure(tri), tri);
    assert_eq!(k.full_closure(k.ground()), k.ground());
    assert_eq!(k.num_bases(), 16);
}

#[test]
fn circuit_hyperplane_examples() {
    let k = k4();
    let ch = k.circuit_hyperplanes();
    assert_eq!(ch.len(), 4);
    assert!(ch.iter().all(|&c| size(c) == 3));
    assert!(uniform(2, 4).unwrap().circuit_hyperplanes().is_empty());
    let cocircuits = uniform(2, 5).unwrap().cocircuits();
    assert_eq!(cocircuits.len(), 5);
    assert!(cocircuits.iter().all(|&c| size(c) == 4));
}

#[test]
fn duality_and_minor_examples() {
    assert!(uniform(2, 5).unwrap().dual().is_isomorphic(&uniform(3, 5).unwrap()));
    let c = uniform(2, 4).unwrap().contract(0b0001);
    assert!(c.is_isomorphic(&uniform(1, 3).unwrap()));
    let empty = uniform(2, 4).unwrap().delete(0b1111);
    assert_eq!((empty.size(), empty.rank(), empty.num_bases()), (0, 0, 1));
}

#[test]
fn connectivity_examples() {
    let u24 = uniform_labelled(2, &["a", "b", "c", "p"]).unwrap();
    let v24 = uniform_labelled(2, &["d", "e", "f", "p"]).unwrap();
    assert!(u24.is_3_connected());
    let s = u24.two_sum(&v24, "p").unwrap();
    assert_eq!((s.size(), s.rank()), (6, 3));
    assert!(!s.is_3_connected());
    let sep = s.find_separation(2).unwrap();
    assert_eq!(sep.order, 2);
    assert!(sep.side == s.mask_of(&["a", "b", "c"]).unwrap() || sep.side == s.mask_of(&["d", "e", "f"]).unwrap());
    let u12a = uniform_labelled(1, &["a", "b"]).unwrap();
    let u12b = uniform_labelled(1, &["c", "d"]).unwrap();
    let d = u12a.direct_sum(&u12b).unwrap();
    assert_eq!((d.size(), d.rank(), d.num_bases()), (4, 2, 4));
    assert!(!d.is_connected());
    assert_eq!(d.components().len(), 2);
}

#[test]
fn two_sum_rejects_coloop_basepoint() {
    let a = Matroid::from_bases(vec!["p".into(), "x".into()], vec![0b11]).unwrap();
    let b = uniform_labelled(2, &["p", "y", "z"]).unwrap();
    assert!(matches!(a.two_sum(&b, "p"), Err(Error::Precondition(_))));
}

#[test]
fn three_connected_up_to_series_parallel() {
    let u24 = uniform_labelled(2, &["a", "b", "c", "d"]).unwrap();
    let m = crate::constructions::parallel_extension(&u24, "a", 1).unwrap();
    assert!(!m.is_3_connected());
    assert!(m.is_3connected_up_to_sp());
    let u24b = uniform_labelled(2, &["d", "e", "f", "p"]).unwrap();
    let u24a = uniform_labelled(2, &["a", "b", "c", "p"]).unwrap();
    assert!(!u24a.two_sum(&u24b, "p").unwrap().is_3connected_up_to_sp());
}

#[test]
fn path_width_examples() {
    for n in 2..=10 {
        let u = uniform(2, n).unwrap();
        let order = u.path_width_3_ordering().unwrap();
        assert!(u.is_path_width_3_witness(&order));
    }
    let w = whirl(3).unwrap();
    assert!(w.is_path_width_3_witness(&w.path_width_3_ordering().unwrap()));
    // every 3-subset of U_{4,8} has λ = 3, so no ordering works
    assert!(!uniform(4, 8).unwrap().has_path_width_3());
}

#[test]
fn isomorphism_examples() {
    let u = uniform(2, 4).unwrap();
    assert!(u.is_isomorphic(&u.dual()));
    let w = whirl(3).unwrap();
    assert_eq!(w.num_bases(), 17);
    assert!(!k4().is_isomorphic(&w));
    assert!(k4().is_isomorphic(&wheel(3).unwrap()));
    let map = k4().isomorphism(&wheel(3).unwrap()).unwrap();
    assert!(k4().is_isomorphism(&wheel(3).unwrap(), &map));
}

#[test]
fn text_round_trip_with_labels() {
    let k = k4();
    let back = Matroid::from_text(&k.to_text()).unwrap();
    assert!(back.same_labelled(&k));
    assert_eq!(back.labels(), k.labels());
    let plain = "# a comment\n3 1\n0\n1\n2\n";
    let m = Matroid::from_text(plain).unwrap();
    assert!(m.is_isomorphic(&uniform(1, 3).unwrap()));
    assert!(matches!(Matroid::from_text("3 1\n0\n5\n"), Err(Error::Parse { line: 3, .. })));
    assert!(matches!(Matroid::from_text("4 2\n0 1\n2 3\n"), Err(Error::NotAMatroid(_))));
    let rank0 = Matroid::from_text("2 0\n").unwrap();
    assert_eq!(rank0.num_bases(), 1);
}

#[test]
fn two_sum_rank_formula_matches_circuits_exhaustively() {
    let mut parts = Vec::new();
    for n in 2..=5 {
        for r in 1..n {
            parts.push(uniform(r, n).unwrap());
        }
    }
    parts.push(Matroid::from_gf4_matrix(&mat("11/11")).unwrap());
    parts.push(Matroid::from_gf4_matrix(&mat("110/011")).unwrap());
    let name = |m: &Matroid, prefix: &str| -> Matroid {
        let mut names: Vec<String> = (1..m.size()).map(|i| format!("{prefix}{i}")).collect();
        names.insert(0, "p".into());
        m.with_labels(names).unwrap()
    };
    let mut checked = 0;
    for a in &parts {
        for b in &parts {
            let (a, b) = (name(a, "a"), name(b, "b"));
            let Ok(sum) = a.two_sum(&b, "p") else { continue };
            let circuits = a.two_sum_circuits(&b, "p").unwrap();
            assert_eq!(circuits, sum.circuits());
            for s in 0..=sum.ground() {
                assert_eq!(Matroid::rank_from_circuits(sum.size(), &circuits, s), sum.rank_of(s));
            }
            checked += 1;
        }
    }
    assert!(checked > 50);
}

proptest! {
    #[test]
    fn rank_table_agrees_with_bases(m in random_matroid()) {
        for s in 0..=m.ground() {
            prop_assert_eq!(m.rank_of(s), rank_by_bases(&m, s));
        }
        prop_assert!(m.satisfies_basis_exchange());
    }

    #[test]
    fn circuits_agree_with_bases(m in random_matroid()) {
        prop_assert_eq!(m.circuits(), circuits_by_bases(&m));
        prop_assert_eq!(m.dual().circuits(), m.cocircuits());
    }

    #[test]
    fn dual_is_an_involution_and_lambda_is_self_dual(m in random_matroid()) {
        let d = m.dual();
        prop_assert!(d.dual().same_labelled(&m));
        for s in 0..=m.ground() {
            prop_assert_eq!(m.lambda(s), d.lambda(s));
            prop_assert_eq!(m.lambda(s), m.lambda(m.ground() & !s));
        }
    }

    #[test]
    fn contraction_is_dual_of_deletion(m in random_matroid(), pick in any::<u32>()) {
        let s = pick & m.ground();
        prop_assert!(m.contract(s).same_labelled(&m.dual().delete(s).dual()));
    }

    #[test]
    fn closure_matches_definition(m in random_matroid()) {
        for s in 0..=m.ground() {
            let by_def = (0..m.size()).filter(|&e| m.rank_of(s | 1 << e) == m.rank_of(s)).fold(0, |a, e| a | 1 << e);
            prop_assert_eq!(m.closure(s), by_def);
        }
    }

    #[test]
    fn relabelled_copies_are_isomorphic(m in random_matroid(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..m.size()).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let p = m.permuted(&perm);
        prop_assert!(m.is_isomorphic(&p));
        prop_assert_eq!(m.canonical_key(), p.canonical_key());
        let map = m.isomorphism(&p).unwrap();
        prop_assert!(m.is_isomorphism(&p, &map));
    }
}
