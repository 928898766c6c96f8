mod common;

use common::is_shelling;
use matroid_ears::complex::{Manifold, Shelling};
use matroid_ears::complexes::{omega_gamma, stellohedron_boundary, BasisSphere};
use matroid_ears::ear::{sphere_shelling, weak_order_shelling};
use matroid_ears::enumeration::binomial_eulerian;
use matroid_ears::{Error, Face, Limits, SimplicialComplex};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = (1..=n).map(|i| vec![i, i % n + 1]).collect();
    let refs: Vec<&[usize]> = edges.iter().map(Vec::as_slice).collect();
    SimplicialComplex::from_element_facets(&refs)
}

fn face_of(c: &SimplicialComplex, pair: [usize; 2]) -> Face {
    let f = SimplicialComplex::from_element_facets(&[&pair]);
    let face = f.facets()[0].clone();
    assert!(c.is_facet(&face));
    face
}

#[test]
fn cycle_shellings() {
    let c = cycle(5);
    let good: Vec<Face> = [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]
        .iter()
        .map(|p| face_of(&c, *p))
        .collect();
    assert!(c.verify_shelling(&good).unwrap().is_valid());
    let antipodal: Vec<Face> = [[1, 2], [3, 4], [2, 3], [4, 5], [1, 5]]
        .iter()
        .map(|p| face_of(&c, *p))
        .collect();
    assert_eq!(
        c.verify_shelling(&antipodal).unwrap(),
        Shelling::Invalid { position: 2 }
    );
    let cert = c.ball_or_sphere(&good).unwrap();
    assert_eq!(cert.kind, Manifold::Sphere);
    assert!(cert.boundary.is_void());
    assert!(matches!(
        c.verify_shelling(&good[..4]),
        Err(Error::NotAPermutation)
    ));
    // a path is a ball with two boundary points
    let path = SimplicialComplex::from_element_facets(&[&[1, 2], &[2, 3]]);
    let order = path.facets().to_vec();
    let cert = path.ball_or_sphere(&order).unwrap();
    assert_eq!(cert.kind, Manifold::Ball);
    assert_eq!(cert.boundary.facet_count(), 2);
}

#[test]
fn stellohedron_h_is_the_binomial_eulerian_polynomial() {
    for d in 1..=5 {
        let omega = stellohedron_boundary(d).unwrap();
        assert_eq!(
            omega.h_polynomial(&lim()).unwrap(),
            binomial_eulerian(d),
            "d = {d}"
        );
        assert!(omega
            .pseudomanifold_certificate()
            .unwrap()
            .boundary_ridges
            .is_empty());
    }
    assert_eq!(stellohedron_boundary(2).unwrap().facet_count(), 5);
    assert!(stellohedron_boundary(0).is_err());
}

#[test]
fn omega_of_whole_sphere_is_everything_but_the_element_facet() {
    for d in 2..=4 {
        let sphere = BasisSphere::boolean(d);
        let glued = omega_gamma(d, &sphere.sd()).unwrap();
        let omega = sphere.omega();
        assert_eq!(glued.facet_count() + 1, omega.facet_count());
        assert!(!glued.is_facet(&sphere.element_facet()));
        assert!(glued.is_subcomplex_of(&omega));
    }
}

#[test]
fn library_shellings_pass_the_brute_force_check() {
    for d in 1..=4 {
        let sphere = BasisSphere::boolean(d);
        let order = sphere_shelling(&sphere).unwrap();
        assert!(is_shelling(&order), "Ω, d = {d}");
        assert!(is_shelling(&weak_order_shelling(&sphere)), "sd, d = {d}");
    }
}

fn shuffled(facets: &[Face], keys: &[u32]) -> Vec<Face> {
    let mut idx: Vec<usize> = (0..facets.len()).collect();
    idx.sort_by_key(|&i| {
        keys[i % keys.len()]
            .wrapping_mul(2654435761)
            .wrapping_add(i as u32)
    });
    idx.into_iter().map(|i| facets[i].clone()).collect()
}

proptest! {
    #[test]
    fn dehn_sommerville_for_stellohedra(d in 1usize..=6) {
        let h = stellohedron_boundary(d).unwrap().h_polynomial(&lim()).unwrap();
        prop_assert_eq!(h.reversed(d).unwrap(), h);
    }

    #[test]
    fn shelling_prefixes_are_shellings(d in 1usize..=4, cut in 0.0f64..1.0) {
        let order = sphere_shelling(&BasisSphere::boolean(d)).unwrap();
        let k = ((order.len() as f64 * cut) as usize).max(1);
        let prefix = &order[..k];
        let sub = SimplicialComplex::from_faces(prefix.iter().cloned());
        prop_assert!(sub.verify_shelling(prefix).unwrap().is_valid());
        let cert = sub.ball_or_sphere(prefix).unwrap();
        prop_assert_eq!(cert.kind, if k == order.len() { Manifold::Sphere } else { Manifold::Ball });
    }

    #[test]
    fn verify_shelling_agrees_with_brute_force(d in 2usize..=3, keys in prop::collection::vec(any::<u32>(), 1..40)) {
        let omega = stellohedron_boundary(d).unwrap();
        let order = shuffled(omega.facets(), &keys);
        let verdict = omega.verify_shelling(&order).unwrap();
        prop_assert_eq!(verdict.is_valid(), is_shelling(&order));
        if let Shelling::Valid { .. } = verdict {
            prop_assert_eq!(verdict.h_polynomial().unwrap(), omega.h_polynomial(&lim()).unwrap());
        }
    }

    #[test]
    fn cycle_orders_agree_with_brute_force(n in 3usize..=8, keys in prop::collection::vec(any::<u32>(), 1..10)) {
        let c = cycle(n);
        let order = shuffled(c.facets(), &keys);
        prop_assert_eq!(c.verify_shelling(&order).unwrap().is_valid(), is_shelling(&order));
    }
}
