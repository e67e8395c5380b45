use cubeset::cube_theory::{connection, face, CubeMap, Theory};
use cubeset::cubical_set::*;

fn map(m: usize, n: usize, f: impl Fn(&[u8]) -> Vec<u8>) -> CubeMap {
    CubeMap::from_coords(m, n, f)
}

fn index(x: &CubicalSet, f: &CubeMap) -> usize {
    x.find(f.dom(), &CubeLabel::Map { map: f.clone() }).expect("cube of the representable")
}

#[test]
fn representable_counts() {
    assert_eq!(representable(Theory::POSET, 1, 2).unwrap().count(2), 6);
    assert_eq!(representable(Theory::EMPTY, 1, 1).unwrap().counts(), vec![2, 3]);
    for t in [Theory::EMPTY, Theory::MEET, Theory::POSET] {
        assert_eq!(representable(t, 0, 3).unwrap().counts(), vec![1; 4]);
    }
    let x = representable(Theory::MEET, 2, 2).unwrap();
    x.check_functoriality(2).unwrap();
}

#[test]
fn boundaries_and_open_boxes() {
    let bd = boundary(Theory::EMPTY, 2, 2).unwrap();
    assert_eq!(bd.nondegenerate_counts().unwrap(), vec![4, 4, 0]);
    let ob = open_box(Theory::EMPTY, 2, 1, 0, 2).unwrap();
    let amb = ob.ambient().clone();
    for (i, e, inside) in [(1, 1, true), (2, 0, true), (2, 1, true), (1, 0, false)] {
        assert_eq!(ob.contains(1, index(&amb, &face(2, i, e))), inside, "∂_{{{i},{e}}}");
    }
    assert!(ob.is_subset_of(&bd));
}

#[test]
fn generated_subcomplexes() {
    let x = representable(Theory::MEET, 2, 2).unwrap();
    let all: Vec<CubeRef> = (0..=2).flat_map(|d| (0..x.count(d)).map(move |i| (d, i))).collect();
    assert_eq!(subcomplex_generated(&x, &all).unwrap().counts(), x.counts());
    let v = subcomplex_generated(&x, &[(0, 0)]).unwrap();
    assert_eq!(v.counts(), vec![1, 1, 1]);
    let edge = face(2, 1, 0);
    let s = subcomplex_generated(&x, &[(1, index(&x, &edge))]).unwrap();
    assert_eq!(s.count(0), 2);
}

#[test]
fn products() {
    let i = representable(Theory::MEET, 1, 2).unwrap();
    let c = cartesian_product(&i, &i).unwrap();
    assert_eq!(c.set.count(0), 4);
    assert_eq!(c.set.count(1), 9);
    let point = representable(Theory::MEET, 0, 2).unwrap();
    assert_eq!(cartesian_product(&i, &point).unwrap().set.counts(), i.counts());
    let g = geometric_product(&i, &i).unwrap();
    assert_eq!(g.set.counts(), representable(Theory::MEET, 2, 2).unwrap().counts());
    assert_eq!(geometric_product(&i, &point).unwrap().set.counts(), i.counts());
}

#[test]
fn degeneracy() {
    let x = representable(Theory::MEET, 1, 2).unwrap();
    let g = connection(1, 1, 1);
    let gi = index(&x, &g);
    assert!(x.is_degenerate(2, gi).unwrap());
    let ((d, y), mu) = x.ez_cube_factor(2, gi).unwrap();
    assert_eq!((d, mu), (1, g));
    assert_eq!(x.label(d, y), &CubeLabel::Map { map: CubeMap::identity(1) });
    for v in 0..x.count(0) {
        assert!(!x.is_degenerate(0, v).unwrap());
    }
}

#[test]
fn restriction() {
    let p = representable(Theory::POSET, 1, 2).unwrap();
    assert_eq!(restrict(&p, Theory::POSET).unwrap().counts(), p.counts());
    let r = restrict(&p, Theory::MEET).unwrap();
    assert_eq!(r.counts(), p.counts());
    let join = map(2, 1, |a| vec![a[0] | a[1]]);
    assert!(!r.is_degenerate(2, index(&r, &join)).unwrap());
    assert!(p.is_degenerate(2, index(&p, &join)).unwrap());
}
