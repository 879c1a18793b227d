//! The same records in all four output encodings: JSON, CSV, LaTeX, text.
//!
//! Run with `cargo run --example export_formats`.

use aq_classifier::record::{
    build_records, document, from_csv, from_json, to_csv, to_json, to_latex, to_text,
};
use aq_classifier::build_root_data;

fn main() {
    let m = 2;
    let data = build_root_data(m).unwrap();
    let records = build_records(&data).unwrap();

    let json = to_json(&document(m, records.clone()));
    let csv = to_csv(&records);

    // the encodings are lossless and agree with each other
    assert_eq!(from_json(&json).unwrap().classes, records);
    assert_eq!(from_csv(&csv).unwrap(), records);

    println!("=== text ===");
    print!("{}", to_text(&records));
    println!();

    println!("=== json (first record) ===");
    let doc = from_json(&json).unwrap();
    println!("{}", serde_json::to_string_pretty(&doc.classes[0]).unwrap());
    println!();

    println!("=== csv ===");
    print!("{csv}");
    println!();

    println!("=== latex ===");
    print!("{}", to_latex(&data, &records).unwrap());
}
