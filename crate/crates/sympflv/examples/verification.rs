//! Run the orchestrated verification suites programmatically and inspect
//! the machine-readable report.
//!
//! Run with: cargo run --example verification

use sympflv::verify::{all_passed, report_json, verify, Level, Status};

fn main() -> sympflv::Result<()> {
    let (level, n, seed) = (Level::Quick, 2, 7);
    let reports = verify(level, n, seed)?;
    for r in &reports {
        println!(
            "{:<7} {:<22} {:>5} ms",
            r.status.label(),
            r.suite,
            r.elapsed.as_millis()
        );
        if r.status != Status::Pass {
            println!("        {}", r.witness);
        }
    }
    assert!(all_passed(&reports));

    let doc = report_json(level, n, seed, &reports);
    println!("\nwitness of the tropical-cone suite:");
    println!(
        "{}",
        serde_json::to_string_pretty(&doc["reports"][10]["witness"]).expect("serializable")
    );
    Ok(())
}
