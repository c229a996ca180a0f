//! The simplicial cone of weighted PBW degrees: facets, lineality,
//! interior points, and the certified derived inequalities.
//!
//! Run with: cargo run --example degree_cone

use sympflv::cone::Position;
use sympflv::degree::{
    degree_cone, degree_to_json, derived_rows, facet_combination, facet_rows, interior_points,
    lineality_basis,
};
use sympflv::rat::format_rat;

fn main() -> sympflv::Result<()> {
    for n in 2..=3usize {
        println!("== rank {n} ==");
        let cone = degree_cone(n);
        println!("facets ({} = n(n-1), so the cone is simplicial):", cone.rows.len());
        for (id, row) in facet_rows(n) {
            let coeffs: Vec<String> = row.coeffs.iter().map(format_rat).collect();
            println!("  {id}: {coeffs:?} . d >= 0");
        }
        println!("lineality space dimension: {}", lineality_basis(n).len());

        let strict = cone.strict_point()?;
        println!("strict interior point: {}", degree_to_json(&strict, n));
        assert_eq!(cone.membership(&strict), Position::Interior);

        let sampled = interior_points(n, 2, 42)?;
        for d in &sampled {
            assert_eq!(cone.membership(d), Position::Interior);
        }
        println!("sampled {} more interior points (seed 42)", sampled.len());

        let derived = derived_rows(n);
        println!("derived inequalities: {}", derived.len());
        for (id, row) in derived.iter().take(4) {
            let combo = facet_combination(n, row).expect("nonnegative certificate");
            let combo: Vec<String> = combo.iter().map(format_rat).collect();
            println!("  {id} = facets . {combo:?}");
        }
        println!("  ... every derived row has such a nonnegative certificate\n");
        for (_, row) in &derived {
            assert!(facet_combination(n, row).is_some());
        }
    }
    Ok(())
}
