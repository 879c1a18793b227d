//! Walk the root data for small m: family, simple roots, and the poset of
//! noncompact positive roots.
//!
//! Run with `cargo run --example root_data_tour`.

use aq_classifier::build_root_data;
use aq_classifier::roots::Family;

fn main() {
    for m in 1..=6 {
        let data = build_root_data(m).unwrap();
        let family = match data.family {
            Family::B => "B",
            Family::D => "D",
        };
        println!("m = {m}: type {family}{}, rank {}", data.l, data.l);
        println!("  positive roots: {} ({} compact, {} noncompact)",
            data.positive.len(),
            data.compact_pos.len(),
            data.noncompact_pos.len());

        print!("  noncompact chain/poset:");
        for root in &data.noncompact_pos {
            print!("  {root}");
        }
        println!();

        // cover relations of the noncompact poset
        print!("  covers:");
        for cover in data.hasse() {
            print!(
                "  {} -> {}",
                data.noncompact_pos[cover.lower], data.noncompact_pos[cover.upper]
            );
        }
        println!();

        // duality flips the poset; the fixed points sit in the middle
        let fixed: Vec<String> = (0..data.nc_len())
            .filter(|&k| data.dual_index(k) == k)
            .map(|k| data.noncompact_pos[k].to_string())
            .collect();
        println!("  self-dual roots: {}", if fixed.is_empty() { "none".to_string() } else { fixed.join(", ") });
        println!();
    }
}
