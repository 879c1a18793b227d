//! Enumerate every realizable (I, F) pair for one m and compare the count
//! with the closed form.
//!
//! Run with `cargo run --example enumerate_all_classes -- 5` (default m=5).

use aq_classifier::{build_root_data, counts_closed_form, enumerate_classes};

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let data = build_root_data(m).expect("m must be at least 1");
    let classes = enumerate_classes(&data);
    let counts = counts_closed_form(m).unwrap();

    println!("m = {m}: {} classes (closed form says {})", classes.len(), counts.total);
    println!();
    for (i, class) in classes.iter().enumerate() {
        let ideal: Vec<String> = class.ideal_roots(&data).iter().map(|r| r.to_string()).collect();
        let filter: Vec<String> = class.filter_roots(&data).iter().map(|r| r.to_string()).collect();
        println!(
            "#{i:<3} R- = {}  R+ = {}  I = {{{}}}  F = {{{}}}",
            class.r_minus(),
            class.r_plus(),
            ideal.join(", "),
            filter.join(", "),
        );
    }

    // every witness re-induces its own class; show one
    let sample = &classes[classes.len() / 2];
    let reinduced = aq_classifier::induced_class(&data, &sample.witness).unwrap();
    assert_eq!(reinduced.pair_key(), sample.pair_key());
    let witness: Vec<String> = sample.witness.0.iter().map(|r| r.to_string()).collect();
    println!();
    println!(
        "sample witness c = ({}) re-induces class #{}",
        witness.join(", "),
        classes.len() / 2
    );
}
