//! Discrete-range classes: which pairs qualify, their Blattner parameters,
//! and the lowest K-types.
//!
//! Run with `cargo run --example discrete_series -- 4` (default m=4).

use aq_classifier::classify::{
    blattner, is_discrete, is_holomorphic_ds, lowest_k_type, lowest_k_type_is_compact_dominant,
};
use aq_classifier::{build_root_data, counts_closed_form, enumerate_classes};

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let data = build_root_data(m).expect("m must be at least 1");
    let classes = enumerate_classes(&data);
    let counts = counts_closed_form(m).unwrap();

    let discrete: Vec<_> = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| is_discrete(&data, c))
        .collect();
    println!(
        "m = {m}: {} of {} classes are in the discrete range (closed form: {})",
        discrete.len(),
        classes.len(),
        counts.discrete
    );
    println!();

    for (i, class) in &discrete {
        let mu = lowest_k_type(&data, class);
        let lambda = blattner(&data, class).unwrap();
        assert_eq!(mu.coeffs, lambda.coeffs);
        assert!(lowest_k_type_is_compact_dominant(&data, class));
        let tag = if is_holomorphic_ds(&data, class) {
            if class.filter.is_empty() { "  (anti-holomorphic)" } else { "  (holomorphic)" }
        } else {
            ""
        };
        println!(
            "#{i:<3} R+ = {}, R- = {}  Blattner = {:?}{tag}",
            class.r_plus(),
            class.r_minus(),
            lambda.coeffs,
        );
    }

    println!();
    println!("note: for m = 2 all discrete classes count as (anti)holomorphic");
}
