use super::*;
use crate::constructions::{graphic, named, rim, uniform, wheel, whirl};
use crate::gf4::{Gf4, Gf4Matrix};
use proptest::prelude::*;

fn k4() -> Matroid {
    graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &["a", "b", "c", "d", "e", "f"]).unwrap()
}

/// Tries every disjoint pair `(C, D)`.
fn minor_by_brute_force(m: &Matroid, n: &Matroid) -> bool {
    let g = m.ground();
    bits::subsets(g).any(|c| {
        bits::subsets(g & !c).any(|d| {
            size(g & !(c | d)) == n.size() && m.minor(c, d).is_isomorphic(n)
        })
    })
}

fn random_matroid() -> impl Strategy<Value = Matroid> {
    (1usize..=3, 2usize..=4)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(0u8..4, r * c)))
        .prop_map(|(r, c, cells)| {
            let a = Gf4Matrix::from_vec(r, c, cells.into_iter().map(|v| Gf4::ALL[v as usize]).collect());
            Matroid::from_gf4_matrix(&a).unwrap()
        })
}

#[test]
fn minor_examples() {
    let u25 = uniform(2, 5).unwrap();
    let u24 = uniform(2, 4).unwrap();
    let w = has_minor(&u25, &u24).unwrap();
    assert!(u25.minor(w.contract, w.delete).is_isomorphic(&u24));
    assert!(has_minor(&k4(), &u24).is_none());
    assert!(has_minor(&whirl(3).unwrap(), &u24).is_some());
    assert!(has_minor(&u24, &u25).is_none());
    assert!(has_minor(&wheel(4).unwrap(), &k4()).is_some());
    assert!(has_any_minor(&named("X8").unwrap(), &u25_u35_family()));
}

#[test]
fn fragility_examples() {
    let w3 = whirl(3).unwrap();
    let r = fragility_report(&w3, &u24_family());
    assert!(r.has_minor && r.is_fragile);
    // spokes are nondeletable and the rim is noncontractible, or the reverse
    let rim_mask = rim(&w3, 3).unwrap();
    assert!(check_nondeletable_basis(&w3, &r, rim_mask).unwrap() || check_nondeletable_basis(&w3, &r, w3.ground() & !rim_mask).unwrap());

    let u36 = uniform(3, 6).unwrap();
    let r = fragility_report(&u36, &u25_u35_family());
    assert!(r.has_minor && !r.is_fragile);
    assert!(!check_nondeletable_basis(&u36, &r, 0b111).unwrap());

    let r = fragility_report(&k4(), &u24_family());
    assert!(!r.has_minor && !r.is_fragile);
    assert!(allowable_segments(&k4(), &r).is_empty());

    assert!(check_nondeletable_basis(&u36, &r_for(&u36), 0b11).is_err());
}

fn r_for(m: &Matroid) -> FragilityReport {
    fragility_report(m, &u25_u35_family())
}

#[test]
fn u24_itself_has_no_allowable_segments() {
    let u = uniform(2, 4).unwrap();
    let r = fragility_report(&u, &u24_family());
    assert!(r.is_fragile);
    // U_{2,4} is a segment but its complement is empty, so not coindependent
    assert!(allowable_segments(&u, &r).is_empty());
}

#[test]
fn x8_segment_and_cosegment_are_allowable() {
    let x8 = named("X8").unwrap();
    let r = r_for(&x8);
    let s = x8.mask_of(&["s1", "s2", "s3", "s4"]).unwrap();
    let c = x8.mask_of(&["c1", "c2", "c3", "c4"]).unwrap();
    assert!(allowable_segments(&x8, &r).contains(&s));
    assert!(allowable_cosegments(&x8, &r).contains(&c));
}

#[test]
fn report_dual_matches_report_of_dual() {
    for name in ["X8", "Y8", "M7,1", "P8-"] {
        let m = named(name).unwrap();
        let r = r_for(&m);
        assert_eq!(fragility_report(&m.dual(), &u25_u35_family()), r.dual(), "{name}");
    }
}

#[test]
fn permuted_report_matches_report_of_permuted() {
    let m = named("M7,1").unwrap();
    let perm = [3, 0, 6, 1, 5, 2, 4];
    let p = m.permuted(&perm);
    assert_eq!(r_for(&p), r_for(&m).permuted(&perm));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn uniform_minor_search_matches_brute_force(m in random_matroid(), r in 1usize..=2, extra in 1usize..=3) {
        let n = uniform(r, r + extra).unwrap();
        prop_assert_eq!(has_minor(&m, &n).is_some(), minor_by_brute_force(&m, &n));
    }

    #[test]
    fn nonuniform_minor_search_matches_brute_force(m in random_matroid()) {
        let k4 = k4();
        let p = Matroid::from_gf4_matrix(&Gf4Matrix::parse_compact("11/10").unwrap()).unwrap();
        for n in [&k4, &p] {
            let found = has_minor(&m, n);
            prop_assert_eq!(found.is_some(), minor_by_brute_force(&m, n));
            if let Some(w) = found {
                prop_assert!(m.minor(w.contract, w.delete).is_isomorphic(n));
            }
        }
    }

    #[test]
    fn fragility_is_self_dual(m in random_matroid()) {
        let r = fragility_report(&m, &u24_family());
        prop_assert_eq!(fragility_report(&m.dual(), &u24_family()), r.dual());
    }
}
