use super::*;
use crate::minors::{fragility_report, u25_u35_family};
use crate::relaxation::representable_gf4;

fn k4() -> Matroid {
    graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &["a", "b", "c", "d", "e", "f"]).unwrap()
}

#[test]
fn uniform_and_wheels() {
    let u = uniform(2, 5).unwrap();
    assert_eq!((u.size(), u.rank(), u.num_bases()), (5, 2, 10));
    assert!(uniform(3, 2).is_err());
    for r in 3..=5 {
        let w = wheel(r).unwrap();
        assert_eq!((w.size(), w.rank()), (2 * r, r));
        assert!(w.is_circuit_hyperplane(rim(&w, r).unwrap()));
        let wh = whirl(r).unwrap();
        assert_eq!(wh.num_bases(), w.num_bases() + 1);
        assert!(wh.is_3_connected());
    }
}

#[test]
fn theta3_is_k4_and_a_is_a_modular_segment() {
    for k in 3..=4 {
        let t = theta(k).unwrap();
        let names: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
        let a = t.mask_of(&names).unwrap();
        assert!(is_segment(&t, a));
        assert!(is_modular_flat(&t, a));
    }
    assert!(theta(3).unwrap().is_isomorphic(&k4()));
}

#[test]
fn delta_on_k4_gives_k23() {
    let k = k4();
    // {a, b, d} is the triangle on vertices 0, 1, 2
    let d = delta_y(&k, &["a", "b", "d"]).unwrap();
    let k23 = graphic(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], &["1", "2", "3", "4", "5", "6"]).unwrap();
    assert!(d.is_isomorphic(&k23));
    assert!(nabla_y(&d, &["a", "b", "d"]).unwrap().same_labelled(&k));
}

#[test]
fn delta_requires_a_coindependent_segment() {
    let k = k4();
    assert!(delta_y(&k, &["a", "b", "c"]).is_err());
    assert!(delta_y(&uniform_labelled(2, &["a", "b", "c"]).unwrap(), &["a", "b", "c"]).is_err());
}

#[test]
fn delta_identities_on_small_instances() {
    let u = uniform_labelled(2, &["a", "b", "c", "d"]).unwrap();
    let u = parallel_extension(&u, "a", 1).unwrap();
    let m = series_extension(&u, "d", 1).unwrap();
    for seg in [["a", "b", "c"], ["a'", "b", "c"]] {
        let report = check_delta_identities(&m, &seg).unwrap();
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        assert!(report.checked > 3);
    }
    let report = check_delta_identities(&k4(), &["a", "b", "d"]).unwrap();
    assert!(report.failures.is_empty(), "{:?}", report.failures);
    // d and e lie in cl(A) − A, exercising the 2-sum identity
    let line = uniform_labelled(2, &["a", "b", "c", "d", "e"]).unwrap();
    let ext = series_extension(&line, "e", 1).unwrap();
    for seg in [&["a", "b", "c"][..], &["a", "b", "c", "d"][..]] {
        for m in [&line, &ext] {
            if let Ok(report) = check_delta_identities(m, seg) {
                assert!(report.failures.is_empty(), "{:?}", report.failures);
            }
        }
    }
    assert!(check_delta_identities(&ext, &["a", "b", "c"]).unwrap().checked >= 5);
    let six = uniform_labelled(2, &["a", "b", "c", "d", "e", "f"]).unwrap();
    let report = check_delta_identities(&six, &["a", "b", "c", "d"]).unwrap();
    assert!(report.failures.is_empty(), "{:?}", report.failures);
}

#[test]
fn generalized_parallel_connection_of_two_k4s() {
    let k = k4();
    let other = graphic(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)], &["a", "b", "d", "x", "y", "z"]).unwrap();
    let p = generalized_parallel_connection(&k, &other).unwrap();
    let k5_minus = graphic(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)],
        &["a", "b", "c", "d", "e", "f", "x", "y", "z"],
    )
    .unwrap();
    assert!(p.same_labelled(&k5_minus));
}

#[test]
fn glue_wheel_rank_arithmetic() {
    let u = uniform_labelled(2, &["a", "b", "c", "d", "e"]).unwrap();
    for r in 3..=5 {
        for x in [vec!["b"], vec!["a", "b"], vec!["a", "b", "c"]] {
            let g = glue_wheel(&u, ["a", "b", "c"], r, &x).unwrap();
            assert_eq!(g.rank(), u.rank() + r - 2);
            assert_eq!(g.size(), u.size() + 2 * r - 3 - x.len());
        }
    }
    assert!(glue_wheel(&u, ["a", "b", "c"], 3, &["a"]).is_err());
}

#[test]
fn parallel_and_series_extensions() {
    let u = uniform_labelled(2, &["a", "b", "c", "d"]).unwrap();
    let p = parallel_extension(&u, "a", 1).unwrap();
    assert_eq!((p.size(), p.rank()), (5, 2));
    assert_eq!(p.parallel_classes().iter().filter(|c| bits::size(**c) == 2).count(), 1);
    let s = series_extension(&u, "a", 2).unwrap();
    assert!(s.same_labelled(&parallel_extension(&u.dual(), "a", 2).unwrap().dual()));
    assert_eq!(s.rank(), 4);
}

#[test]
fn named_matroids() {
    let f7m = named("F7-").unwrap();
    assert_eq!((f7m.size(), f7m.rank()), (7, 3));
    assert!(representable_gf4(&f7m).unwrap().is_none());
    assert!(representable_gf4(&named("F7=").unwrap()).unwrap().is_some());
    assert!(representable_gf4(&named("P6").unwrap()).unwrap().is_none());
    assert!(representable_gf4(&named("P8").unwrap()).unwrap().is_none());
    assert!(representable_gf4(&named("P8-").unwrap()).unwrap().is_some());
    assert!(named("Q9").is_err());
    assert!(named("Whirl3").unwrap().is_isomorphic(&whirl(3).unwrap()));
    assert!(named("U2,5").unwrap().is_isomorphic(&uniform(2, 5).unwrap()));
}

#[test]
fn x8_facts() {
    let x8 = named("X8").unwrap();
    assert_eq!((x8.size(), x8.rank(), x8.num_bases()), (8, 4, 50));
    assert!(x8.is_isomorphic(&x8.dual()));
    assert!(is_segment(&x8, x8.mask_of(&["s1", "s2", "s3", "s4"]).unwrap()));
    assert!(is_cosegment(&x8, x8.mask_of(&["c1", "c2", "c3", "c4"]).unwrap()));
    let report = fragility_report(&x8, &u25_u35_family());
    assert!(report.is_fragile);
    assert!(representable_gf4(&x8).unwrap().is_some());
}

#[test]
fn y8_is_unique_over_allowable_triads() {
    let x8 = named("X8").unwrap();
    let y8 = named("Y8").unwrap();
    assert_eq!((y8.size(), y8.rank(), y8.num_bases()), (8, 3, 46));
    let report = fragility_report(&x8, &u25_u35_family());
    let noncontractible = report.noncontractible_set();
    let allowable: Vec<Subset> = x8
        .triads()
        .into_iter()
        .filter(|&t| x8.is_independent(t) && t & noncontractible != 0)
        .collect();
    assert_eq!(allowable.len(), 3);
    for t in allowable {
        let names: Vec<&str> = x8.labels_of(t);
        assert!(nabla_y(&x8, &names).unwrap().is_isomorphic(&y8));
    }
}

#[test]
fn m71_and_m99() {
    let m71 = named("M7,1").unwrap();
    assert_eq!((m71.size(), m71.rank(), m71.num_bases()), (7, 3, 31));
    assert!(m71.is_circuit(m71.mask_of(&["1", "2", "3"]).unwrap()));
    // the remnants of the two 4-point lines of Y8 are the only disjoint
    // triangles, and 3 is the one element on neither
    let tris = m71.triangles();
    let disjoint: Vec<Subset> =
        tris.iter().flat_map(|&t| tris.iter().filter(move |&&u| t < u && t & u == 0).map(move |&u| t | u)).collect();
    assert_eq!(disjoint.len(), 1);
    assert_eq!(m71.ground() & !disjoint[0], 1 << m71.index_of("3").unwrap());
    let m99 = named("M9,9").unwrap();
    assert_eq!((m99.size(), m99.rank()), (9, 4));
    assert!(m99.is_3_connected());
    assert_eq!(m99.triangles().len(), 4);
    assert!(fragility_report(&m99, &u25_u35_family()).is_fragile);
}

#[test]
fn path_sequence_steps() {
    let x8 = run_path_sequence(&[]).unwrap();
    assert!(x8.matroid.same_labelled(&named("X8").unwrap()));
    let one = run_path_sequence(&parse_path_spec("dn S 1").unwrap()).unwrap();
    assert_eq!(one.matroid.size(), 9);
    let steps = parse_path_spec("# two steps\ndn C 1,0,0,0\ngw S r=3 X=b\n").unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0].to_string(), "dn C 1,0,0,0");
    assert_eq!(steps[1].to_string(), "gw S r=3 X=b");
    assert!(parse_path_spec("dn Q 1").is_err());
    assert!(parse_path_spec("gw S r=3 X=a").is_err());
}

#[test]
fn enumerated_path_sequences_are_fragile_and_representable() {
    let described = enumerate_path_sequences(10).unwrap();
    assert!(described.iter().any(|d| d.matroid.size() == 9));
    let family = u25_u35_family();
    for d in &described {
        assert!(d.matroid.size() <= 10);
        assert!(fragility_report(&d.matroid, &family).is_fragile, "{:?}", d.steps);
        assert!(representable_gf4(&d.matroid).unwrap().is_some(), "{:?}", d.steps);
        let replay = run_path_sequence(&d.steps).unwrap();
        assert!(replay.matroid.is_isomorphic(&d.matroid));
    }
}
