//! Bigraded Poincaré polynomials for every class of one m, with the
//! Betti numbers of the compact dual and the p - q = R+ - R- law.
//!
//! Run with `cargo run --example poincare_polynomials -- 6` (default m=6).

use aq_classifier::cohomology::{betti_from_ideals, identify_yq, poincare_two_var};
use aq_classifier::{build_root_data, enumerate_classes};

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let data = build_root_data(m).expect("m must be at least 1");
    let classes = enumerate_classes(&data);

    println!("m = {m}: {} classes", classes.len());
    for (i, class) in classes.iter().enumerate() {
        let poly = poincare_two_var(&data, class);
        let betti = betti_from_ideals(&data, class);
        let y = identify_yq(&data, class).unwrap();

        // each (p, q) with a nonzero coefficient satisfies the bigrading law
        let shift = class.r_plus() as i64 - class.r_minus() as i64;
        for (p, q, _) in poly.triples() {
            assert_eq!(p as i64 - q as i64, shift);
        }

        let betti_str: Vec<String> = betti.iter().map(|b| b.to_string()).collect();
        println!(
            "#{i:<3} Y = {:<24} betti = [{}]  P(x,t) = {poly}",
            y.name(),
            betti_str.join(", "),
        );
    }

    // total dimension across all classes, split by degree parity
    let total: u64 = classes
        .iter()
        .map(|c| poincare_two_var(&data, c).total_dim())
        .sum();
    println!();
    println!("sum of all cohomology dimensions: {total}");
}
