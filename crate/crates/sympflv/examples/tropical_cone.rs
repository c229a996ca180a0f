//! The tropical cone: image of the degree cone under the weight map,
//! described by kernel equalities and transported facet inequalities,
//! with exchange-relation certificates of its maximality.
//!
//! Run with: cargo run --example tropical_cone

use sympflv::degree::{facet_rows, interior_points};
use sympflv::plucker::PlueckerRing;
use sympflv::rat::format_rat;
use sympflv::trop::{
    facet_certificate, facet_relation, image_equalities, image_inequalities, trop_to_json,
    tropical_cone, tropical_point, violating_point, SignConvention,
};
use sympflv::verify::recorded_degree_point;

fn main() -> sympflv::Result<()> {
    let n = 2;
    let ring = PlueckerRing::new(n);

    let d = recorded_degree_point();
    let v = tropical_point(&d, &ring, SignConvention::Min)?;
    println!("tropical image of the recorded degree point:");
    println!("  {}", trop_to_json(&v, &ring));

    let eqs = image_equalities(&ring);
    println!("\nimage equalities ({} = #tuples - n^2):", eqs.len());
    for row in &eqs {
        let pretty: Vec<String> = row.coeffs.iter().map(format_rat).collect();
        println!("  {pretty:?} . s = 0");
    }

    println!("\ntransported facet inequalities:");
    for (id, row) in image_inequalities(&ring, SignConvention::Min) {
        let pretty: Vec<String> = row.coeffs.iter().map(format_rat).collect();
        println!("  image of {id}: {pretty:?} . s >= 0");
    }

    let cone = tropical_cone(&ring, SignConvention::Min);
    for d in interior_points(n, 3, 5)? {
        assert!(cone.contains(&tropical_point(&d, &ring, SignConvention::Min)?));
    }
    println!("\nsampled interior images all satisfy the cone description");

    println!("\nmaximality certificates (one exchange relation per facet):");
    for (id, _) in facet_rows(n) {
        let relation = facet_relation(id, &ring)?;
        let bad = violating_point(id, &ring, SignConvention::Min)?;
        let init = relation.initial_form(&bad)?;
        assert_eq!(init, facet_certificate(id, &ring)?);
        println!("  {id}: relation {relation}");
        println!("      initial form at a violating point: {init} (a monomial)");
    }
    Ok(())
}
