use cubeset::cube_theory::*;
use proptest::prelude::*;

fn map(m: usize, n: usize, f: impl Fn(&[u8]) -> Vec<u8>) -> CubeMap {
    CubeMap::from_coords(m, n, f)
}

#[test]
fn generator_formulas() {
    let f = generator(Theory::EMPTY, GeneratorKind::Face, 1, 1, Some(0)).unwrap();
    assert_eq!((f.dom(), f.cod(), f.table()), (0, 1, &[0][..]));
    let g = generator(Theory::MEET, GeneratorKind::Connection, 1, 1, Some(1)).unwrap();
    assert_eq!(g, map(2, 1, |a| vec![a[0] & a[1]]));
    let rho = generator(Theory::new([Symbol::Rho]), GeneratorKind::Reversal, 1, 1, None).unwrap();
    assert_eq!(rho, map(1, 1, |a| vec![1 - a[0]]));
    assert!(generator(Theory::EMPTY, GeneratorKind::Connection, 1, 1, Some(1)).is_err());
}

#[test]
fn composition_identities() {
    for n in 1..=3 {
        for e in 0..=1 {
            assert!(projection(n - 1, 1).after(&face(n, 1, e)).unwrap().is_identity());
        }
    }
    assert!(connection(1, 1, 1).after(&face(2, 1, 1)).unwrap().is_identity());
    let f = connection(1, 1, 1);
    assert_eq!(CubeMap::identity(1).after(&f).unwrap(), f);
    assert!(CubeMap::identity(2).tensor(&CubeMap::identity(1)).is_identity());
    assert_eq!(face(1, 1, 0).tensor(&CubeMap::identity(1)), face(2, 1, 0));
    assert!(f.after(&CubeMap::identity(1)).is_err());
}

#[test]
fn hom_counts() {
    assert_eq!(enumerate_hom(Theory::EMPTY, 1, 1).unwrap().len(), 3);
    assert_eq!(enumerate_hom(Theory::POSET, 2, 1).unwrap().len(), 6);
    for t in Theory::all() {
        for n in 0..=3 {
            assert_eq!(enumerate_hom(t, 0, n).unwrap().len(), 1 << n, "{t}");
        }
    }
    // Dedekind numbers 3, 6, 20 give the monotone counts at n = 1.
    assert_eq!(enumerate_hom(Theory::POSET, 3, 1).unwrap().len(), 20);
    assert_eq!(enumerate_hom(Theory::FULL, 2, 2).unwrap().len(), 256);
}

#[test]
fn membership() {
    assert!(!is_member(Theory::EMPTY, &map(1, 1, |a| vec![1 - a[0]])).unwrap());
    assert!(is_member(Theory::POSET, &map(2, 1, |a| vec![a[0] | a[1]])).unwrap());
    assert!(!is_member(Theory::MEET, &map(2, 1, |a| vec![a[0] | a[1]])).unwrap());
    for t in Theory::all() {
        for n in 1..=3 {
            for i in 1..=n {
                for e in 0..=1 {
                    assert!(is_member(t, &face(n, i, e)).unwrap());
                }
            }
        }
    }
}

#[test]
fn fixed_coordinates_and_activity() {
    assert_eq!(fixed_coordinates(&face(2, 2, 1)), vec![(2, 1)]);
    assert!(fixed_coordinates(&projection(1, 1)).is_empty());
    assert_eq!(fixed_coordinates(&map(2, 2, |a| vec![a[1], 1])), vec![(2, 1)]);
    assert!(is_active(&connection(1, 1, 1)));
    assert!(!is_active(&face(1, 1, 0)));
    let hom = enumerate_hom(Theory::POSET, 2, 2).unwrap();
    for f in hom.maps() {
        assert_eq!(is_active(f), f.apply(0) == 0 && f.apply(3) == 3, "{f:?}");
    }
}

#[test]
fn active_face_factorizations() {
    let g = connection(1, 1, 1);
    let (kappa, psi) = active_face_factor(&g);
    assert!(kappa.is_empty() && psi == g);

    let (kappa, psi) = active_face_factor(&map(2, 2, |a| vec![a[1], 1]));
    assert_eq!(kappa.entries(), &[(2, 1)]);
    assert_eq!(psi, projection(1, 1));

    let f = face(2, 2, 1).after(&face(1, 1, 0)).unwrap();
    let (kappa, psi) = active_face_factor(&f);
    assert_eq!(kappa.entries(), &[(2, 1), (1, 0)]);
    assert!(psi.is_identity() && psi.dom() == 0);
}

#[test]
fn eilenberg_zilber_factorizations() {
    let g = connection(1, 1, 1);
    let (kappa, mu) = ez_factor(Theory::MEET, &g).unwrap();
    assert!(kappa.is_empty() && mu == g);

    let zero = map(1, 1, |_| vec![0]);
    let (kappa, mu) = ez_factor(Theory::EMPTY, &zero).unwrap();
    assert_eq!(kappa.entries(), &[(1, 0)]);
    assert_eq!(mu, projection(0, 1));

    let (kappa, mu) = ez_factor(Theory::MEET, &CubeMap::identity(2)).unwrap();
    assert!(kappa.is_empty() && mu.is_identity());

    assert!(is_degeneracy(Theory::EMPTY, &projection(1, 2)).unwrap());
    assert!(is_degeneracy(Theory::MEET, &connection(2, 1, 1)).unwrap());
    assert!(!is_degeneracy(Theory::MEET, &face(2, 1, 0)).unwrap());
}

#[test]
fn json_round_trip() {
    let f = map(2, 2, |a| vec![a[1], 1]);
    let v = serde_json::to_value(&f).unwrap();
    assert_eq!(v, serde_json::json!({"m": 2, "n": 2, "table": ["01", "11", "01", "11"]}));
    assert_eq!(serde_json::from_value::<CubeMap>(v).unwrap(), f);
    let t: Theory = serde_json::from_str(r#"["sigma","meet"]"#).unwrap();
    assert_eq!(serde_json::to_string(&t).unwrap(), r#"["meet","sigma"]"#);
    assert!(serde_json::from_str::<CubeMap>(r#"{"m":1,"n":1,"table":["0"]}"#).is_err());
}

fn any_map() -> impl Strategy<Value = CubeMap> {
    (0usize..=3, 0usize..=3).prop_flat_map(|(m, n)| {
        prop::collection::vec(0u32..1 << n, 1 << m).prop_map(move |t| CubeMap::new(m, n, t).unwrap())
    })
}

proptest! {
    #[test]
    fn tensor_is_injective_on_pairs(f in any_map(), g in any_map(), f2 in any_map(), g2 in any_map()) {
        let same_shape = (f.dom(), f.cod(), g.dom(), g.cod()) == (f2.dom(), f2.cod(), g2.dom(), g2.cod());
        if same_shape && f.tensor(&g) == f2.tensor(&g2) {
            prop_assert!(f == f2 && g == g2);
        }
    }

    #[test]
    fn factorization_round_trips(f in any_map()) {
        let (kappa, psi) = active_face_factor(&f);
        prop_assert_eq!(kappa.to_map().after(&psi).unwrap(), f);
        prop_assert!(is_active(&psi));
        prop_assert!(kappa.entries().windows(2).all(|w| w[0].0 > w[1].0));
    }

    #[test]
    fn composition_is_associative(f in any_map(), g in any_map(), h in any_map()) {
        if f.cod() == g.dom() && g.cod() == h.dom() {
            let left = h.after(&g).unwrap().after(&f).unwrap();
            let right = h.after(&g.after(&f).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
