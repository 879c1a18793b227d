//! Per-class attributes: closed-form counts, the discrete-series and
//! holomorphic flags, Hodge types, lowest K-types and Blattner parameters,
//! and the order-reversing duality on classes.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::parabolic::ParabolicClass;
use crate::roots::{rank_for_m, Family, HermitianRootData, Root};

/// Closed-form totals for a given m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub total: u64,
    pub discrete: u64,
    pub holomorphic: u64,
}

/// Counts of classes, discrete classes, and holomorphic/antiholomorphic
/// discrete classes, without enumerating anything.
pub fn counts_closed_form(m: u32) -> Result<Counts, Error> {
    let (family, l) = rank_for_m(m)?;
    let l = l as u64;
    let total = match family {
        Family::B => l * (l + 2),
        Family::D => l * l + 4 * l - 3,
    };
    Ok(Counts {
        total,
        discrete: 2 * l,
        holomorphic: if m == 2 { 4 } else { 2 },
    })
}

/// A class is in the discrete range exactly when no noncompact root pairs
/// to zero: I ∪ F covers all of Δn+.
pub fn is_discrete(data: &HermitianRootData, class: &ParabolicClass) -> bool {
    class.ideal.len() + class.filter.len() == data.nc_len()
}

/// Holomorphic or antiholomorphic discrete range: discrete with F empty or
/// full. For m = 2 every discrete class qualifies.
pub fn is_holomorphic_ds(data: &HermitianRootData, class: &ParabolicClass) -> bool {
    if !is_discrete(data, class) {
        return false;
    }
    if data.m == 2 {
        return true;
    }
    class.filter.is_empty() || class.filter.len() == data.nc_len()
}

/// Hodge bidegree (R_+, R_-) = (|F|, |I|).
pub fn hodge_type(class: &ParabolicClass) -> (usize, usize) {
    (class.r_plus(), class.r_minus())
}

/// The set of Hodge types predicted in closed form: the pairs with
/// i + j <= |Δn+| that are either diagonal (i = j) or have
/// max(i, j) >= L, where L = l for the odd family and l - 1 for the
/// even one.
///
/// Every diagonal pair (i, i) with 2i <= |Δn+| belongs to the set, and
/// for L <= 2 the condition max(i, j) >= L is interchangeable with
/// i + j >= L; for larger rank only the max form matches the class
/// enumeration (the apparent extra off-diagonal pairs with large sum but
/// small max, such as (2, 1) at m = 5, are unrealizable).
pub fn hodge_type_set_closed_form(data: &HermitianRootData) -> BTreeSet<(usize, usize)> {
    let n = data.nc_len();
    let lower = match data.family {
        Family::B => data.l,
        Family::D => data.l - 1,
    };
    let mut out = BTreeSet::new();
    for i in 0..=n {
        for j in 0..=n - i {
            if i == j || i.max(j) >= lower {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Lowest K-type parameter μ = Σ_{β ∈ F} β - Σ_{β ∈ I} β, in simple-root
/// coordinates.
pub fn lowest_k_type(data: &HermitianRootData, class: &ParabolicClass) -> Root {
    let mut acc = Root::zero(data.l);
    for &i in &class.filter {
        acc = acc.add(&data.noncompact_pos[i]);
    }
    for &i in &class.ideal {
        acc = acc.sub(&data.noncompact_pos[i]);
    }
    acc
}

/// Blattner parameter of a discrete-range class; errors otherwise.
pub fn blattner(data: &HermitianRootData, class: &ParabolicClass) -> Result<Root, Error> {
    if !is_discrete(data, class) {
        return Err(Error::NotDiscrete);
    }
    Ok(lowest_k_type(data, class))
}

/// μ is dominant for the compact simple roots: ⟨μ, φj∨⟩ >= 0 for every
/// simple root φj that is compact.
pub fn lowest_k_type_is_compact_dominant(
    data: &HermitianRootData,
    class: &ParabolicClass,
) -> bool {
    let mu = lowest_k_type(data, class);
    (0..data.l)
        .filter(|&j| {
            let mut simple = Root::zero(data.l);
            simple.coeffs[j] = 1;
            !data.is_noncompact(&simple)
        })
        .all(|j| {
            (0..data.l)
                .map(|i| mu.coeffs[i] * data.cartan[i][j])
                .sum::<i64>()
                >= 0
        })
}

/// The dual class pair under the order-reversing involution
/// σ(k) = n - 1 - k: (I, F) maps to (σ(F), σ(I)).
pub fn dual_pair(
    data: &HermitianRootData,
    class: &ParabolicClass,
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let ideal = class.filter.iter().map(|&k| data.dual_index(k)).collect();
    let filter = class.ideal.iter().map(|&k| data.dual_index(k)).collect();
    (ideal, filter)
}
