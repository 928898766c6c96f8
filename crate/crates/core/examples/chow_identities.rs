//! Chow Hilbert series from Feichtner–Yuzvinsky bases and the identities relating
//! them to h-vectors of uniform matroids.

use matroid_ears::chow::{augmented_chow_hilbert, chow_hilbert, verify_thm51, verify_thm52};
use matroid_ears::{corpus, Limits, Matroid};

fn main() -> matroid_ears::Result<()> {
    let limits = Limits::default();
    for (name, m) in [
        ("U(3,4)", Matroid::uniform(3, 4)?),
        ("M(K4)", corpus::k4()),
        ("Fano", corpus::fano()),
    ] {
        let chow = chow_hilbert(&m, &limits)?;
        let aug = augmented_chow_hilbert(&m, &limits)?;
        println!(
            "{name}: H = {}   augmented H = {}",
            chow.polynomial, aug.polynomial
        );
    }
    let mut failures = 0;
    for d in 0..=5 {
        for n in d..=30 {
            if d >= 1 && !verify_thm51(d, n)?.holds {
                failures += 1;
            }
            if !verify_thm52(d, n)?.holds {
                failures += 1;
            }
        }
    }
    println!("identities for d <= 5, n <= 30: {failures} failures");
    let c = verify_thm52(5, 83)?;
    println!("U(5,83): {} = {}", c.lhs, c.rhs);
    Ok(())
}
