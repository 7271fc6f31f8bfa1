use super::*;
use crate::constructions::{named, rim, uniform, wheel, whirl};
use proptest::prelude::*;

fn mat(s: &str) -> Gf4Matrix {
    Gf4Matrix::parse_compact(s).unwrap()
}

/// Tries every reduced matrix relative to the first basis.
fn representable_by_brute_force(m: &Matroid) -> bool {
    let b = m.bases()[0];
    let rows: Vec<usize> = elements(b).collect();
    let cols: Vec<usize> = elements(m.ground() & !b).collect();
    let cells = rows.len() * cols.len();
    assert!(cells <= 10, "too many cells for exhaustive search");
    let names = |v: &[usize]| v.iter().map(|&e| m.label(e).to_string()).collect::<Vec<_>>();
    (0..1u64 << (2 * cells)).any(|code| {
        let d = Gf4Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            Gf4::ALL[(code >> (2 * (i * cols.len() + j)) & 3) as usize]
        })
        .with_labels(names(&rows), names(&cols))
        .unwrap();
        Matroid::from_gf4_matrix(&d).unwrap().same_labelled(m)
    })
}

fn interior_strategy(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Gf4Matrix> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u8..4, r * c)))
        .prop_map(|(r, c, cells)| Gf4Matrix::from_vec(r, c, cells.into_iter().map(|v| Gf4::ALL[v as usize]).collect()))
}

#[test]
fn relaxing_the_rim_of_a_wheel_gives_the_whirl() {
    for r in 3..=4 {
        let w = wheel(r).unwrap();
        let relaxed = relax(&w, rim(&w, r).unwrap()).unwrap();
        assert!(relaxed.is_isomorphic(&whirl(r).unwrap()));
        assert_eq!(relaxed.num_bases(), w.num_bases() + 1);
    }
    assert_eq!(whirl(3).unwrap().num_bases(), 17);
}

#[test]
fn relax_rejects_other_sets() {
    let w = wheel(3).unwrap();
    let spokes = w.ground() & !rim(&w, 3).unwrap();
    assert!(matches!(relax(&w, spokes), Err(Error::NotCircuitHyperplane(_))));
    let p6 = named("P6").unwrap();
    assert!(relax(&p6, 0b111).unwrap().is_isomorphic(&uniform(3, 6).unwrap()));
    assert!(relax(&p6, 0b1011).is_err());
}

#[test]
fn bordered_construction_examples() {
    let (m, rr) = build_reduced_representation(&mat("w")).unwrap();
    assert_eq!(m.labels(), ["x1", "f", "y1", "e"]);
    assert_eq!(m.format_set(rr.x), "{x1,e}");
    assert!(rr.relaxed().is_isomorphic(&uniform(2, 4).unwrap()));
    rr.validate().unwrap();

    let (_, rr) = build_reduced_representation(&mat("1wv")).unwrap();
    assert!(rr.relaxed().is_isomorphic(&uniform(2, 6).unwrap()));
    assert_eq!(rr.row_elements(), vec![0, 1]);
    assert_eq!(rr.col_elements(), vec![2, 3, 4, 5]);
    assert_eq!(rr.bordered(&rr.a, Gf4::ZERO), rr.c);

    assert!(build_reduced_representation(&Gf4Matrix::zeros(0, 2)).is_err());
}

#[test]
fn normalization_recovers_the_block_form() {
    let (m, rr) = build_reduced_representation(&mat("1w/0v")).unwrap();
    // scale rows and columns of C arbitrarily, then normalize again
    let scaled = rr.c.scale_row(0, Gf4::OMEGA).scale_row(2, Gf4::OMEGA2).scale_col(1, Gf4::OMEGA).scale_col(2, Gf4::OMEGA2);
    let back = normalize_to_block_form(&scaled, "e", "f").unwrap();
    // the border fixes the interior up to one global nonzero factor
    assert!(Gf4::NONZERO.iter().any(|&s| back.a.map(|v| v * s).without_labels() == rr.a.clone().without_labels()));
    assert_ne!(back.c, rr.c);
    assert!(back.matroid.same_labelled(&m));
    assert!(normalize_to_block_form(&scaled, "y1", "f").is_err());
    assert!(normalize_to_block_form(&scaled, "e", "nope").is_err());
}

#[test]
fn omega_corner_examples() {
    let (_, rr) = build_reduced_representation(&mat("1")).unwrap();
    let v = omega_corner_search(&rr);
    assert!(v.representable);
    let Witness::Matrix(c2) = v.witness else { panic!("expected a matrix witness") };
    assert!(Matroid::from_gf4_matrix(&c2).unwrap().same_labelled(&rr.relaxed()));
    assert_eq!(c2.get(1, 1), Gf4::OMEGA);

    let (_, rr) = build_reduced_representation(&mat("1wv")).unwrap();
    assert!(!omega_corner_search(&rr).representable);
    assert!(omega_corner_solutions(&rr, SearchSpace::Full, Gf4::OMEGA, false).is_empty());
}

#[test]
fn generic_search_examples() {
    assert!(representable_gf4(&uniform(2, 5).unwrap()).unwrap().is_some());
    assert!(representable_gf4(&uniform(2, 6).unwrap()).unwrap().is_none());
    assert!(representable_gf4(&whirl(3).unwrap()).unwrap().is_some());
    assert!(representable_gf4(&named("P6").unwrap()).unwrap().is_none());
    assert!(matches!(representable_gf4_with_bound(&uniform(2, 6).unwrap(), 5), Err(Error::UnsupportedScale { .. })));
}

#[test]
fn generic_search_matches_brute_force_on_small_matroids() {
    let mut checked = 0;
    for n in 2..=6 {
        for r in 1..n {
            let u = uniform(r, n).unwrap();
            if r * (n - r) <= 9 {
                assert_eq!(representable_gf4(&u).unwrap().is_some(), representable_by_brute_force(&u), "U{r},{n}");
                checked += 1;
            }
        }
    }
    for name in ["P6", "Whirl3", "W3"] {
        let m = named(name).unwrap();
        assert_eq!(representable_gf4(&m).unwrap().is_some(), representable_by_brute_force(&m), "{name}");
        checked += 1;
    }
    assert!(checked > 10);
}

#[test]
fn pipeline_on_the_wheel_and_x8() {
    let entries = relaxation_pipeline(&wheel(3).unwrap(), true).unwrap();
    assert_eq!(entries.len(), 4);
    for e in &entries {
        assert!(e.scanner.representable);
        assert!(e.omega.as_ref().unwrap().representable);
        assert_eq!(e.generic, Some(true));
    }
    let x8 = named("X8").unwrap();
    for e in relaxation_pipeline(&x8, true).unwrap() {
        e.rr.validate().unwrap();
        assert_eq!(Some(e.scanner.representable), e.generic);
        assert_eq!(e.omega.unwrap().representable, e.scanner.representable);
    }
    assert!(matches!(relaxation_pipeline(&named("P6").unwrap(), false), Err(Error::NotRepresentable)));
}

#[test]
fn verdicts_agree_on_every_small_interior() {
    for (rows, cols) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)] {
        for code in 0..1u32 << (2 * rows * cols) {
            let a = Gf4Matrix::from_fn(rows, cols, |i, j| Gf4::ALL[(code >> (2 * (i * cols + j)) & 3) as usize]);
            let (_, rr) = build_reduced_representation(&a).unwrap();
            let scan = scanner::verdict(&rr).representable;
            let generic = representable_gf4(&rr.relaxed()).unwrap().is_some();
            assert_eq!(scan, generic, "{}", a.compact());
            assert_eq!(omega_corner_search(&rr).representable, generic, "{}", a.compact());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relaxation_adds_exactly_the_relaxed_basis(a in interior_strategy(3, 3)) {
        let (m, rr) = build_reduced_representation(&a).unwrap();
        prop_assert!(rr.validate().is_ok());
        let relaxed = rr.relaxed();
        prop_assert_eq!(relaxed.num_bases(), m.num_bases() + 1);
        prop_assert!(relaxed.is_basis(rr.x));
        prop_assert!(relaxed.satisfies_basis_exchange());
    }

    #[test]
    fn relaxation_commutes_with_duality(a in interior_strategy(3, 3)) {
        let (m, rr) = build_reduced_representation(&a).unwrap();
        let complement = m.ground() & !rr.x;
        prop_assert!(m.dual().is_circuit_hyperplane(complement));
        prop_assert!(relax(&m.dual(), complement).unwrap().same_labelled(&rr.relaxed().dual()));
    }

    #[test]
    fn relaxation_commutes_with_minors(a in interior_strategy(3, 3)) {
        let (m, rr) = build_reduced_representation(&a).unwrap();
        let relaxed = rr.relaxed();
        for e in elements(m.ground()) {
            let bit = 1 << e;
            let (del, con) = (m.delete(bit), m.contract(bit));
            let x_del = bits::compress(rr.x & !bit, &elements(m.ground() & !bit).collect::<Vec<_>>());
            if rr.x & bit == 0 && del.is_circuit_hyperplane(x_del) {
                prop_assert!(relax(&del, x_del).unwrap().same_labelled(&relaxed.delete(bit)));
            }
            if rr.x & bit != 0 && con.is_circuit_hyperplane(x_del) {
                prop_assert!(relax(&con, x_del).unwrap().same_labelled(&relaxed.contract(bit)));
            }
        }
    }

    #[test]
    fn scanner_matches_are_real_occurrences(a in interior_strategy(3, 4)) {
        if let Some(hit) = scanner::scan(&a) {
            let src = if hit.transposed { a.transpose() } else { a.clone() };
            let t = scanner::pattern_catalog().into_iter().find(|t| t.id == hit.pattern).unwrap();
            let sub = src.submatrix(&hit.rows, &hit.cols).unwrap();
            prop_assert!(t.instantiations().contains(&sub));
        }
    }
}
