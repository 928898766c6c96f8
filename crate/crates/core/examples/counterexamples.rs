//! Uniform matroids whose augmented Bergman complexes have a non-log-concave
//! f-vector and a non-unimodal h-vector.

use matroid_ears::analysis::{
    check_2cm_chain, check_top_heavy, log_concavity_failures, non_unimodal_witness,
};
use matroid_ears::enumeration::{f_augmented_uniform, h_augmented_uniform};

fn main() -> matroid_ears::Result<()> {
    let f = f_augmented_uniform(4, 189)?;
    println!("f(U(4,189)) = {:?}", f.to_decimal_strings());
    for x in log_concavity_failures(&f)? {
        println!(
            "  f_{}^2 = {} < {} = f_{} f_{}",
            x.index,
            x.square,
            x.product,
            x.index - 1,
            x.index + 1
        );
    }

    let h = h_augmented_uniform(5, 83)?;
    println!("h(U(5,83)) = {:?}", h.to_decimal_strings());
    if let Some((i, j)) = non_unimodal_witness(&h)? {
        println!(
            "  h_{i} = {} > h_{j} = {} < h_{} = {}",
            h.coeff(i),
            h.coeff(j),
            j + 1,
            h.coeff(j + 1)
        );
    }
    println!("  top-heavy: {}", check_top_heavy(&h, 5)?.label());
    println!("  2-CM chain: {}", check_2cm_chain(&h, 5)?.label());
    Ok(())
}
