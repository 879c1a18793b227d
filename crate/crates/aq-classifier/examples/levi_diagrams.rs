//! Simple roots Φq of the parabolic's positive system, the marked subset Γ,
//! the Levi diagram components, and the identified compact dual Y.
//!
//! Run with `cargo run --example levi_diagrams -- 6` (default m=6).

use aq_classifier::cohomology::{identify_yq_from_phi, phi_q_and_gamma};
use aq_classifier::{build_root_data, enumerate_classes};

fn main() {
    let m: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let data = build_root_data(m).expect("m must be at least 1");
    let classes = enumerate_classes(&data);
    println!("m = {m}: {} classes", classes.len());
    println!();

    for (i, class) in classes.iter().enumerate() {
        let phi = phi_q_and_gamma(&data, class).unwrap();
        let y = identify_yq_from_phi(&data, class, &phi).unwrap();

        let fmt = |roots: &[aq_classifier::roots::Root]| -> String {
            let parts: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            if parts.is_empty() { "{}".to_string() } else { format!("{{{}}}", parts.join(", ")) }
        };

        println!("#{i:<3} Phi_q = {}", fmt(&phi.phi_q));
        println!("     Gamma = {}", fmt(&phi.gamma));
        for comp in &phi.components {
            let marks: Vec<String> = comp
                .iter()
                .map(|r| {
                    let tag = if data.is_noncompact(r) { "*" } else { "" };
                    format!("{r}{tag}")
                })
                .collect();
            println!("     Levi component: {{{}}}", marks.join(", "));
        }
        println!("     Y = {} (complex dim {})", y.name(), y.complex_dim());
    }
    println!();
    println!("(* marks a noncompact root; edges within a component follow the diagram)");
}
