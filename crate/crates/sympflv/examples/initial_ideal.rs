//! Weighted initial ideals: push a degree point to its tropical weight
//! vector, run Buchberger under that weight order, and inspect the
//! binomial initial ideal and its graded dimensions.
//!
//! Run with: cargo run --example initial_ideal

use sympflv::fflv::weyl_dim_u64;
use sympflv::groebner::{
    groebner_basis, initial_forms, standard_monomials, Caps, WeightOrder,
};
use sympflv::plucker::{IndexTuple, PlueckerRing};
use sympflv::trop::{trop_to_json, tropical_point, SignConvention};
use sympflv::verify::recorded_degree_point;

fn main() -> sympflv::Result<()> {
    let n = 2;
    let ring = PlueckerRing::new(n);
    let d = recorded_degree_point();
    let weights = tropical_point(&d, &ring, SignConvention::Min)?;
    println!("tropical weight vector: {}", trop_to_json(&weights, &ring));

    let gens = ring.ideal_generators()?;
    let order = WeightOrder::new(weights.clone());
    let basis = groebner_basis(&gens, &order, Caps::default())?;
    println!("\nweighted basis of {} elements; initial forms:", basis.len());
    let inits = initial_forms(&basis, &weights)?;
    for form in &inits {
        assert!(form.num_terms() <= 2, "toric initial ideals are binomial");
        println!("  {form}");
    }

    println!("\nstandard monomial counts match the Weyl dimensions:");
    let groups: Vec<usize> = ring.tuples().iter().map(IndexTuple::len).collect();
    for mults in [[1, 0], [0, 1], [1, 1], [2, 1]] {
        let count = standard_monomials(&basis, &order, &groups, &mults).len();
        let dim = weyl_dim_u64(n, &mults)?;
        println!("  lambda = {mults:?}: {count} standard monomials, dimension {dim}");
        assert_eq!(count as u64, dim);
    }
    Ok(())
}
