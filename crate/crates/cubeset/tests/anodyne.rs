use cubeset::anodyne::*;
use cubeset::comparison::cartesian_image_direct;
use cubeset::cube_theory::{CubeMap, Symbol, Theory};
use cubeset::cubical_set::subcomplex_generated;
use cubeset::decomposition::Flavor;

use SubcomplexSpec::{Cartesian, Full, Unit};

fn req(a: Theory, b: Theory, n: usize, source: SubcomplexSpec, target: SubcomplexSpec) -> CertifyRequest {
    CertifyRequest { theory_a: a, theory_b: b, n, truncation: 3, source, target, flavor: Flavor::Meet }
}

fn certified(r: &CertifyRequest) -> FillingCertificate {
    let c = certify(r).unwrap();
    let report = verify(&c.certificate);
    assert!(report.passed(), "{r:?}: {report:?}");
    c.certificate
}

#[test]
fn unit_inclusions_are_inner_anodyne() {
    for n in 1..=2 {
        let cert = certified(&req(Theory::MEET, Theory::POSET, n, Unit, Full));
        assert!(cert.all_inner, "n = {n}");
        assert!(!cert.steps.is_empty());
    }
}

#[test]
fn unit_inclusions_with_symmetries() {
    let b = Theory::MEET.with(Symbol::Sigma);
    for n in 1..=2 {
        let cert = certified(&req(Theory::MEET, b, n, Unit, Full));
        assert!(cert.all_inner);
    }
}

#[test]
fn cartesian_chain() {
    let lower = certified(&req(Theory::MEET, Theory::POSET, 2, Unit, Cartesian(1, 1)));
    let upper = certified(&req(Theory::MEET, Theory::POSET, 2, Cartesian(1, 1), Full));
    assert!(lower.all_inner && upper.all_inner);
    // Step counts of the generator, frozen as regression values.
    let whole = certified(&req(Theory::MEET, Theory::POSET, 2, Unit, Full));
    assert_eq!(
        (lower.steps.len(), upper.steps.len(), whole.steps.len()),
        (LOWER_STEPS, UPPER_STEPS, WHOLE_STEPS)
    );
}

#[test]
fn three_dimensional_cartesian_chain() {
    let lower = certify(&req(Theory::MEET, Theory::POSET, 3, Unit, Cartesian(1, 2))).unwrap();
    let upper = certify(&req(Theory::MEET, Theory::POSET, 3, Cartesian(1, 2), Full)).unwrap();
    for c in [&lower, &upper] {
        assert!(c.certificate.all_inner);
        assert!(verify(&c.certificate).passed());
    }
    assert_eq!((lower.certificate.steps.len(), upper.certificate.steps.len()), (23, 122));
}

const LOWER_STEPS: usize = 5;
const UPPER_STEPS: usize = 11;
const WHOLE_STEPS: usize = 16;

#[test]
fn decomposition_closed_examples() {
    let amb = Ambient::new(Theory::MEET, Theory::POSET, 2, 3).unwrap();
    for spec in [Unit, Full, Cartesian(1, 1)] {
        let s = amb.subcomplex(spec).unwrap();
        assert_eq!(is_decomposition_closed(&amb, &s, Flavor::Meet).unwrap(), None, "{spec}");
    }
    // The cartesian subcomplex is the image computed by pairing maps.
    let direct = cartesian_image_direct(Theory::MEET, Theory::POSET, 1, 1, 3).unwrap();
    assert_eq!(direct.counts(), amb.subcomplex(Cartesian(1, 1)).unwrap().counts());
    assert!(is_decomposition_closed(&amb, &amb.subcomplex(Unit).unwrap(), Flavor::Join).is_err());
}

#[test]
fn a_join_without_its_decomposition_is_not_closed() {
    let amb = Ambient::new(Theory::MEET, Theory::POSET, 1, 3).unwrap();
    let unit = amb.subcomplex(Unit).unwrap();
    let join = CubeMap::from_coords(2, 1, |a| vec![a[0] | a[1]]);
    let mut seeds: Vec<(usize, usize)> = (0..=3).flat_map(|d| unit.members(d).into_iter().map(move |x| (d, x))).collect();
    seeds.push((2, amb.cube(&join).unwrap()));
    let s = subcomplex_generated(&amb.set, &seeds).unwrap();
    let v = is_decomposition_closed(&amb, &s, Flavor::Meet).unwrap();
    match v {
        Some(ClosureViolation::MissingDecomposition { kappa, phi, k }) => {
            assert!(kappa.is_empty());
            assert_eq!((phi, k), (join, 0));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn join_flavor_mirrors() {
    let r = CertifyRequest {
        theory_a: Theory::JOIN,
        theory_b: Theory::POSET,
        n: 1,
        truncation: 3,
        source: Unit,
        target: Full,
        flavor: Flavor::Join,
    };
    let cert = certified(&r);
    assert!(cert.all_inner);
    assert!(cert.steps.iter().all(|s| s.missing_face.1 == 0));
    let meet = CubeMap::from_coords(2, 1, |a| vec![a[0] & a[1]]);
    assert!(cert.steps.iter().any(|s| s.phi == meet));
}

#[test]
fn every_single_field_mutation_is_rejected() {
    for r in [
        req(Theory::MEET, Theory::POSET, 1, Unit, Full),
        req(Theory::MEET, Theory::POSET, 2, Cartesian(1, 1), Full),
    ] {
        let cert = certified(&r);
        let v = serde_json::to_value(&cert).unwrap();
        assert!(verify_json(&v.to_string()).passed());
        let mut count = 0;
        for (name, m) in single_field_mutations(&cert) {
            let report = verify_json(&m.to_string());
            assert!(!report.passed(), "mutation `{name}` was accepted");
            count += 1;
        }
        assert!(count >= 10 * cert.steps.len());
    }
}

#[test]
fn perturbed_kappa_fails_check_a() {
    let cert = certified(&req(Theory::MEET, Theory::POSET, 2, Unit, Full));
    let si = cert.steps.iter().position(|s| !s.kappa.is_empty()).unwrap();
    let mut bad = cert.clone();
    bad.steps[si].kappa.reverse();
    bad.steps[si].kappa.push((0, 0));
    let report = verify(&bad);
    assert_eq!(report.failure.unwrap().check, Check::A);
}

#[test]
fn reordered_dependent_steps_fail_check_b() {
    let cert = certified(&req(Theory::MEET, Theory::POSET, 2, Unit, Full));
    // Moving a later filling ahead of one that supplies a face of it.
    let n = cert.steps.len();
    let failing = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).find(|&(a, b)| {
        let mut bad = cert.clone();
        let moved = bad.steps.remove(b);
        bad.steps.insert(a, moved);
        verify(&bad).failure.is_some_and(|f| f.check == Check::B)
    });
    assert!(failing.is_some());
}

#[test]
fn malformed_input() {
    assert_eq!(verify_json("not json").outcome.exit_code(), 2);
    assert_eq!(verify_json("{}").outcome, Outcome::Malformed);
    let cert = certified(&req(Theory::MEET, Theory::POSET, 1, Unit, Full));
    let mut v = serde_json::to_value(&cert).unwrap();
    v["source"] = serde_json::json!("sideways");
    assert_eq!(verify_json(&v.to_string()).outcome, Outcome::Malformed);
}

#[test]
fn certificate_json_shape() {
    let cert = certified(&req(Theory::MEET, Theory::POSET, 1, Unit, Full));
    let v = serde_json::to_value(&cert).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in ["theoryA", "theoryB", "flavor", "n", "truncation", "source", "target", "steps", "allInner"] {
        assert!(keys.contains(&k), "{k}");
    }
    let step = &v["steps"][0];
    for k in ["i", "j", "k", "kappa", "phi", "missingFace", "inner"] {
        assert!(step.get(k).is_some(), "{k}");
    }
    assert_eq!(step["missingFace"][1], 1);
    let back: FillingCertificate = serde_json::from_value(v).unwrap();
    assert_eq!(back, cert);
}

#[test]
fn certification_is_deterministic() {
    let r = req(Theory::MEET, Theory::POSET, 2, Unit, Full);
    let a = serde_json::to_string(&certify(&r).unwrap().certificate).unwrap();
    let b = serde_json::to_string(&certify(&r).unwrap().certificate).unwrap();
    assert_eq!(a, b);
}
