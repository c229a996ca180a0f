//! The birational chart: a product of root-vector exponentials whose
//! minors give one polynomial per coordinate tuple, all annihilating the
//! defining ideal.
//!
//! Run with: cargo run --example chart_polynomials

use sympflv::chart::Chart;

fn main() -> sympflv::Result<()> {
    let n = 2;
    let chart = Chart::new(n)?;

    println!("exponential factors, in order:");
    for (i, b) in chart.sequence().iter().enumerate() {
        println!("  t{} -> root {}", i + 1, b.key());
    }

    println!("\ncoordinate polynomials:");
    for j in chart.ring().tuples() {
        println!("  p[{}] = {}", j.name(n), chart.coordinate(&j.clone()));
    }

    println!("\nthe minor route and the wedge-action route agree:");
    for j in chart.ring().tuples() {
        assert_eq!(chart.coordinate(j), chart.coordinate_via_wedge(j));
    }
    println!("  checked all {} coordinates", chart.ring().tuples().len());

    println!("\nthe coordinate map kills every generator of the defining ideal:");
    for g in chart.ring().ideal_generators()? {
        let image = chart.coordinate_map(&g)?;
        assert!(image.is_zero());
        println!("  phi({g}) = 0");
    }

    println!("\nvaluation points (minimal exponents) of the size-2 coordinates:");
    for j in chart.ring().tuples().iter().filter(|j| j.len() == 2) {
        println!("  {} -> {:?}", j.name(n), chart.valuation_point(j)?);
    }
    Ok(())
}
