//! Exact feasibility by hand: build sign systems for chosen (I, F) pairs
//! and inspect the solver's witnesses, including an unrealizable pair.
//!
//! Run with `cargo run --example feasibility_witness`.

use std::collections::BTreeSet;

use aq_classifier::feasibility::{feasible_witness, LinearSystem};
use aq_classifier::parabolic::realizability_system;
use aq_classifier::build_root_data;

fn show(label: &str, sys: &LinearSystem) {
    match feasible_witness(sys) {
        Some(c) => {
            let parts: Vec<String> = c.0.iter().map(|r| r.to_string()).collect();
            println!("{label}: witness c = ({})", parts.join(", "));
        }
        None => println!("{label}: infeasible"),
    }
}

fn main() {
    // a raw system, no root theory involved: c1 > 0 together with c1 < 0
    let mut sys = LinearSystem::new(1);
    sys.require_positive(vec![1]);
    sys.require_negative(vec![1]);
    show("raw {c1 > 0, c1 < 0}", &sys);

    let data = build_root_data(3).unwrap();

    // realizable: F = all noncompact positive roots
    let all: BTreeSet<usize> = (0..data.nc_len()).collect();
    let sys = realizability_system(&data, &BTreeSet::new(), &all).unwrap();
    show("m=3, I empty, F = everything", &sys);

    // unrealizable: I = {phi1} alone; the poset forces a contradiction
    // between the strict and zero rows once dominance is added
    let ideal: BTreeSet<usize> = [0].into_iter().collect();
    let sys = realizability_system(&data, &ideal, &BTreeSet::new()).unwrap();
    show("m=3, I = {phi1}, F empty", &sys);

    // same shape one level up is realizable
    let ideal: BTreeSet<usize> = [0, 1].into_iter().collect();
    let sys = realizability_system(&data, &ideal, &BTreeSet::new()).unwrap();
    show("m=3, I = {phi1, phi1+phi2}, F empty", &sys);

    // witnesses scale: twice a witness is still a witness
    let witness = feasible_witness(&sys).unwrap();
    let doubled = aq_classifier::roots::CVector(
        witness.0.iter().map(|r| r * num_rational::BigRational::from_integer(2.into())).collect(),
    );
    assert!(sys.is_satisfied_by(&doubled));
    println!("doubling the last witness still satisfies the system");
}
