//! Degenerating the chart: at a degree point inside the cone, every
//! coordinate polynomial collapses to its initial monomial, and new
//! relations appear in the kernel of the degenerate map.
//!
//! Run with: cargo run --example degenerate_chart

use sympflv::chart::Chart;
use sympflv::degree::{degree_to_json, interior_points};
use sympflv::verify::{recorded_degenerate_relations, recorded_degree_point};

fn main() -> sympflv::Result<()> {
    let n = 2;
    let chart = Chart::new(n)?;
    let d = recorded_degree_point();
    println!("degree point: {}", degree_to_json(&d, n));

    println!("\ndegenerate images of the coordinates:");
    for (j, img) in chart.ring().tuples().iter().zip(chart.degenerate_images(&d)?) {
        println!("  {} -> {img}", j.name(n));
    }

    println!("\nrelations of the degenerate kernel at this point:");
    for r in recorded_degenerate_relations(chart.ring())? {
        let image = chart.degenerate_map(&r, &d)?;
        assert!(image.is_zero());
        let survives = !chart.coordinate_map(&r)?.is_zero();
        println!(
            "  {r}  (undegenerate image {})",
            if survives { "nonzero" } else { "zero" }
        );
    }

    println!("\nat sampled interior points the images stay monomial:");
    for d in interior_points(n, 3, 9)? {
        let all_monomial = chart
            .degenerate_images(&d)?
            .iter()
            .all(|p| p.is_monomial() && !p.is_zero());
        println!("  {} -> all monomial: {all_monomial}", degree_to_json(&d, n));
        assert!(all_monomial);
    }
    Ok(())
}
