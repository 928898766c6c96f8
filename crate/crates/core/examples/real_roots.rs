//! Exact real-root counts by Sturm sequences.

use matroid_ears::analysis::{is_real_rooted, real_root_count, real_root_count_with_multiplicity};
use matroid_ears::enumeration::{binomial_eulerian, eulerian, h_augmented_uniform};
use matroid_ears::Polynomial;

fn main() -> matroid_ears::Result<()> {
    let mut samples = vec![
        (
            "(x+1)^2 (x^2+1)".to_string(),
            Polynomial::from_i64s(&[1, 2, 2, 2, 1]),
        ),
        ("A_6".to_string(), eulerian(6)),
        ("binomial A_6".to_string(), binomial_eulerian(6)),
    ];
    for n in [5, 20, 83] {
        samples.push((format!("h(U(5,{n}))"), h_augmented_uniform(5, n)?));
    }
    for (name, p) in samples {
        println!(
            "{name:<16} deg {}  distinct real roots {}  with multiplicity {}  real-rooted {}",
            p.degree().unwrap_or(0),
            real_root_count(&p),
            real_root_count_with_multiplicity(&p),
            is_real_rooted(&p)
        );
    }
    Ok(())
}
