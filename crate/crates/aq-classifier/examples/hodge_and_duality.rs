//! Hodge types (R+, R-) across all classes, the closed-form description of
//! the attained set, and the duality pairing I <-> F.
//!
//! Run with `cargo run --example hodge_and_duality -- 5` (default m=5).

use std::collections::BTreeSet;

use aq_classifier::classify::{dual_pair, hodge_type, hodge_type_set_closed_form};
use aq_classifier::{build_root_data, enumerate_classes};

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let data = build_root_data(m).expect("m must be at least 1");
    let classes = enumerate_classes(&data);
    let n = data.nc_len();

    let attained: BTreeSet<(usize, usize)> = classes.iter().map(hodge_type).collect();
    let closed = hodge_type_set_closed_form(&data);
    assert_eq!(attained, closed);

    println!("m = {m}: {} classes, {} distinct Hodge types", classes.len(), attained.len());
    println!();

    // triangle picture: row p, column q, * when (p, q) is attained
    println!("attained (R+, R-) pairs, R+ down, R- across:");
    for p in 0..=n {
        let mut row = String::new();
        for q in 0..=n {
            row.push(if attained.contains(&(p, q)) { '*' } else { '.' });
            row.push(' ');
        }
        println!("  {row}");
    }
    println!();

    // duality swaps the two components of the Hodge type
    for (i, class) in classes.iter().enumerate() {
        let (di, df) = dual_pair(&data, class);
        let dual_key = (di.into_iter().collect::<Vec<_>>(), df.into_iter().collect::<Vec<_>>());
        let j = classes.iter().position(|c| c.pair_key() == dual_key).unwrap();
        let (p, q) = hodge_type(class);
        let (dp, dq) = hodge_type(&classes[j]);
        assert_eq!((p, q), (dq, dp));
        if i < j {
            println!("class #{i} (type ({p},{q})) is dual to class #{j} (type ({dp},{dq}))");
        } else if i == j {
            println!("class #{i} (type ({p},{q})) is self-dual");
        }
    }
}
