//! The boundary of the stellohedron: a shelling, its h-vector, and the binomial
//! Eulerian polynomial it equals.

use matroid_ears::complexes::{stellohedron_boundary, BasisSphere};
use matroid_ears::ear::sphere_shelling;
use matroid_ears::enumeration::binomial_eulerian;

fn main() -> matroid_ears::Result<()> {
    for d in 1..=5 {
        let omega = stellohedron_boundary(d)?;
        let order = sphere_shelling(&BasisSphere::boolean(d))?;
        let verdict = omega.verify_shelling(&order)?;
        let h = verdict.h_polynomial().expect("valid shelling");
        println!(
            "d = {d}: {} facets, h = {}, binomial Eulerian = {}",
            omega.facet_count(),
            h,
            binomial_eulerian(d)
        );
    }
    Ok(())
}
