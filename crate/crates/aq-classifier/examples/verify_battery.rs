//! Run the whole invariant battery programmatically and summarize.
//!
//! Run with `cargo run --release --example verify_battery -- 8` (default
//! m-max 6; larger bounds are noticeably slower in debug builds).

use aq_classifier::verify::{all_passed, verify_range};

fn main() {
    let m_max: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let outcomes = verify_range(m_max, 3);
    for o in &outcomes {
        println!("{o}");
    }
    println!();
    if all_passed(&outcomes) {
        println!("all {} checks passed", outcomes.len());
    } else {
        let failed = outcomes.iter().filter(|o| !o.passed).count();
        println!("{failed} of {} checks failed", outcomes.len());
        std::process::exit(1);
    }
}
