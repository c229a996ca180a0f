//! Enumerate the lattice points of marked-path polytopes and compare the
//! count with the Weyl dimension formula, including a Minkowski-sum check.
//!
//! Run with: cargo run --example lattice_points

use sympflv::fflv::{
    fflv_polytope, lattice_points, minkowski_check, weyl_dim_u64,
};
use sympflv::lie::positive_roots;

fn main() -> sympflv::Result<()> {
    let n = 2;
    println!("positive roots of rank {n}, in reading order:");
    for b in positive_roots(n) {
        println!("  {}", b.key());
    }

    for mults in [[1, 0], [0, 1], [1, 1], [2, 1]] {
        let polytope = fflv_polytope(n, &mults)?;
        let points = lattice_points(n, &mults)?;
        let dim = weyl_dim_u64(n, &mults)?;
        println!(
            "\nweight {mults:?}: polytope with {} rows, {} lattice points, Weyl dimension {dim}",
            polytope.rows.len(),
            points.len(),
        );
        for p in &points {
            println!("  {p:?}");
        }
        assert_eq!(points.len() as u64, dim);
    }

    println!("\nMinkowski sums at rank 3: S(a) + S(b) = S(a + b)");
    for (a, b) in [([1, 0, 0], [0, 1, 0]), ([0, 1, 0], [0, 0, 1]), ([1, 0, 1], [0, 1, 0])] {
        let ok = minkowski_check(3, &a, &b)?;
        println!("  {a:?} + {b:?}: {}", if ok { "exact" } else { "FAILS" });
        assert!(ok);
    }
    Ok(())
}
