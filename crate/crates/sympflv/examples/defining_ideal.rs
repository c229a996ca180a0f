//! The defining ideal of the embedded flag variety: quadratic exchange
//! relations, the linear relations from non-reverse-admissible pairs, and
//! the rank-2 generator catalogue.
//!
//! Run with: cargo run --example defining_ideal

use sympflv::plucker::{IndexTuple, PlueckerRing};

fn main() -> sympflv::Result<()> {
    let n = 2;
    let ring = PlueckerRing::new(n);
    println!("coordinate tuples at rank {n}:");
    let names: Vec<String> = ring.tuples().iter().map(|t| t.name(n)).collect();
    println!("  {}", names.join("  "));

    println!("\na quadratic exchange relation, swap depth 1:");
    let l = IndexTuple::from_signed(&[1, 2], n)?;
    let j = IndexTuple::from_signed(&[-2, -1], n)?;
    println!("  L = ({}), J = ({}):  {}", l.name(n), j.name(n), ring.quad_relation(&l, &j, 1)?);

    println!("\nreverse-admissibility of diagonal pairs:");
    for (i1, i2) in [(vec![1], vec![1]), (vec![2], vec![2])] {
        println!(
            "  I1 = {i1:?}, I2 = {i2:?}: {}",
            ring.is_reverse_admissible(&i1, &i2)?
        );
    }
    println!("the failing pair contributes the linear relation:");
    println!("  {}", ring.linear_relation(&[1], &[1])?.expect("linear relation"));

    println!("\nfull generator list at rank 2:");
    for g in ring.ideal_generators()? {
        println!("  {g}");
    }

    let ring3 = PlueckerRing::new(3);
    let gens3 = ring3.ideal_generators()?;
    println!("\nrank 3: {} generators over {} coordinates", gens3.len(), ring3.tuples().len());
    println!("first linear relation: {}", ring3.linear_relation(&[1], &[1])?.expect("exists"));
    Ok(())
}
