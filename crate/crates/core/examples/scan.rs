//! Scans uniform matroids for failures of log-concavity and unimodality.

use matroid_ears::analysis::{scan_uniform, Predicate, Target};

fn main() -> matroid_ears::Result<()> {
    let predicates = [
        Predicate::LogConcave(Target::F),
        Predicate::Unimodal(Target::H),
        Predicate::TopHeavy,
    ];
    let rows = scan_uniform(1..=5, 1..=200, &predicates)?;
    for row in rows.iter().take(10) {
        println!(
            "U({},{}) {}: {}",
            row.d,
            row.n,
            row.predicate,
            row.verdict.detail().unwrap_or("")
        );
    }
    println!("{} rows in total", rows.len());
    Ok(())
}
