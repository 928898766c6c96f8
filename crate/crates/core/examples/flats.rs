//! Lattice of flats, circuits and nbc bases of the graphic matroid of K4.

use matroid_ears::{corpus, Limits};

fn main() -> matroid_ears::Result<()> {
    let m = corpus::k4();
    let limits = Limits::default();
    let lattice = m.flat_lattice(&limits)?;
    println!(
        "M(K4): rank {}, {} elements, {} bases",
        m.rank(),
        m.n(),
        m.basis_count()
    );
    for (r, level) in lattice.levels().iter().enumerate() {
        let flats: Vec<_> = level.iter().map(|f| f.elements().to_vec()).collect();
        println!("  rank {r}: {flats:?}");
    }
    println!("circuits: {:?}", m.circuits(&limits)?);
    println!("nbc bases: {:?}", m.nbc_bases(&limits)?);
    let minor = m.contraction(&[1])?;
    println!(
        "M/1 has rank {} on {} elements",
        minor.matroid.rank(),
        minor.matroid.n()
    );
    Ok(())
}
