//! Semistandard fillings and the explicit bijection with lattice points:
//! strips, standardization, and the column-wise valuation map with its
//! inverse.
//!
//! Run with: cargo run --example tableaux_bijection

use sympflv::fflv::{lattice_points, point_to_json};
use sympflv::plucker::IndexTuple;
use sympflv::tableaux::{enumerate, from_point, strip_of};

fn main() -> sympflv::Result<()> {
    let n = 2;

    println!("single-column strips at rank {n} (length 2):");
    for signed in [[1, 2], [1, -2], [2, -2], [2, -1], [-2, -1]] {
        let j = IndexTuple::from_signed(&signed, n)?;
        let strip = strip_of(&j, n);
        let fixed = strip.standardized();
        let point = strip.lattice_point()?;
        println!(
            "  tuple ({}) -> strip {:?}, standardized {:?}, point {}",
            j.name(n),
            strip.columns()[0].iter().map(|l| l.signed(n)).collect::<Vec<_>>(),
            fixed.columns()[0].iter().map(|l| l.signed(n)).collect::<Vec<_>>(),
            point_to_json(&point, n),
        );
    }

    let mults = [1, 1];
    println!("\nall fillings of shape {mults:?} and their lattice points:");
    let fillings = enumerate(n, &mults)?;
    for t in &fillings {
        let p = t.lattice_point()?;
        let back = from_point(n, &mults, &p)?;
        assert_eq!(back, *t, "the bijection inverts");
        println!("{t}\n  -> {}\n", point_to_json(&p, n));
    }
    let points = lattice_points(n, &mults)?;
    println!(
        "{} fillings, {} lattice points — a bijection with explicit inverse",
        fillings.len(),
        points.len()
    );
    assert_eq!(fillings.len(), points.len());
    Ok(())
}
