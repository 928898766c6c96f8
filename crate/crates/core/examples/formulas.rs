//! f- and h-vectors of augmented Bergman complexes, by formula and by enumeration.

use matroid_ears::complexes::augmented_bergman_complex;
use matroid_ears::enumeration::{f_augmented_via_prop23, h_augmented_via_prop24, h_independence};
use matroid_ears::{corpus, Limits};

fn main() -> matroid_ears::Result<()> {
    let limits = Limits::default();
    let mut all = corpus::small_explicit();
    all.extend(corpus::uniform(3, 5));
    for nm in all {
        let m = &nm.matroid;
        let f = f_augmented_via_prop23(m, &limits)?;
        let h = h_augmented_via_prop24(m, &limits)?;
        let enumerated = augmented_bergman_complex(m, &limits)?.f_polynomial(&limits)?;
        let agree = if enumerated == f { "ok" } else { "MISMATCH" };
        println!(
            "{:<10} f = {:?}  h = {:?}  independence h = {:?}  [{agree}]",
            nm.name,
            f.to_decimal_strings(),
            h.to_decimal_strings(),
            h_independence(m, &limits)?.to_decimal_strings()
        );
    }
    Ok(())
}
