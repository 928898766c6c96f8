//! A convex ear decomposition of the augmented Bergman complex, one ear per basis.

use matroid_ears::ear::{build_ced, verify_ced};
use matroid_ears::{corpus, Limits, Matroid};

fn main() -> matroid_ears::Result<()> {
    let limits = Limits::default();
    for (name, m) in [("U(2,3)", Matroid::uniform(2, 3)?), ("M(K4)", corpus::k4())] {
        let ced = build_ced(&m, &limits)?;
        let report = verify_ced(&ced.complex, &ced.ears, &limits)?;
        println!(
            "{name}: {} ears, verified = {}",
            ced.ears.len(),
            report.passed()
        );
        for ear in &ced.ears {
            let grouped = match &ear.gamma_order {
                None => "-".to_string(),
                Some(Ok(_)) => "shelling".to_string(),
                Some(Err(e)) => format!("not a shelling ({e})"),
            };
            println!(
                "  ear {:>2} basis {:?} nbc={} facets={} {:?}  grouped order: {grouped}",
                ear.index,
                ear.basis,
                ear.nbc,
                ear.complex.facet_count(),
                ear.kind
            );
        }
    }
    Ok(())
}
