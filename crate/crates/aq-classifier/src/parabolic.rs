//! Sign classes of dominant rational vectors on the noncompact positive
//! roots: the pairs (I, F) with I a down-set (pairings < 0), F an up-set
//! (pairings > 0), I ∩ F = ∅, realized by at least one dominant λ.
//!
//! Realizability of a candidate pair is decided exactly by the
//! Fourier-Motzkin solver; enumeration walks every disjoint
//! (down-set, up-set) pair of the poset. A brute-force integer grid scan
//! provides an independent oracle over the same output type.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::Error;
use crate::feasibility::{feasible_witness, LinearSystem};
use crate::roots::{pairing, CVector, HermitianRootData, Root};

/// A realizable class, keyed by canonical indices into
/// `HermitianRootData::noncompact_pos`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicClass {
    pub m: u32,
    /// I: the down-set of roots with negative pairing.
    pub ideal: BTreeSet<usize>,
    /// F: the up-set of roots with positive pairing.
    pub filter: BTreeSet<usize>,
    /// A dominant vector realizing the sign pattern.
    pub witness: CVector,
}

impl ParabolicClass {
    /// R_+ = |F|.
    pub fn r_plus(&self) -> usize {
        self.filter.len()
    }

    /// R_- = |I|.
    pub fn r_minus(&self) -> usize {
        self.ideal.len()
    }

    pub fn ideal_roots<'a>(&self, data: &'a HermitianRootData) -> Vec<&'a Root> {
        self.ideal.iter().map(|&i| &data.noncompact_pos[i]).collect()
    }

    pub fn filter_roots<'a>(&self, data: &'a HermitianRootData) -> Vec<&'a Root> {
        self.filter.iter().map(|&i| &data.noncompact_pos[i]).collect()
    }

    /// Complement N = Δn+ \ (I ∪ F): the roots with pairing zero.
    pub fn zero_indices(&self, data: &HermitianRootData) -> Vec<usize> {
        (0..data.nc_len())
            .filter(|i| !self.ideal.contains(i) && !self.filter.contains(i))
            .collect()
    }

    /// Canonical sort/identity key.
    pub fn pair_key(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.ideal.iter().copied().collect(),
            self.filter.iter().copied().collect(),
        )
    }
}

/// Indices of the coordinates constrained to be nonnegative by dominance:
/// all but the first for m != 2, none for m = 2.
pub fn dominance_nonneg_vars(data: &HermitianRootData) -> BTreeSet<usize> {
    if data.m == 2 {
        BTreeSet::new()
    } else {
        (1..data.l).collect()
    }
}

/// The homogeneous sign system expressing that a dominant λ realizes the
/// pair (ideal, filter): negative on I, positive on F, zero on the rest.
///
/// Rejects pairs that are not (down-set, up-set) or not disjoint.
pub fn realizability_system(
    data: &HermitianRootData,
    ideal: &BTreeSet<usize>,
    filter: &BTreeSet<usize>,
) -> Result<LinearSystem, Error> {
    let n = data.nc_len();
    if let Some(&bad) = ideal.iter().chain(filter.iter()).find(|&&i| i >= n) {
        return Err(Error::Inconsistent(format!("index {bad} out of range")));
    }
    for &j in ideal {
        for i in 0..n {
            if data.leq_nc(i, j) && !ideal.contains(&i) {
                return Err(Error::NotDownSet);
            }
        }
    }
    for &i in filter {
        for j in 0..n {
            if data.leq_nc(i, j) && !filter.contains(&j) {
                return Err(Error::NotUpSet);
            }
        }
    }
    if ideal.intersection(filter).next().is_some() {
        return Err(Error::Overlapping);
    }

    let mut sys = LinearSystem::new(data.l);
    for (i, root) in data.noncompact_pos.iter().enumerate() {
        let row = root.coeffs.clone();
        if filter.contains(&i) {
            sys.require_positive(row);
        } else if ideal.contains(&i) {
            sys.require_negative(row);
        } else {
            sys.require_zero(row);
        }
    }
    for j in dominance_nonneg_vars(data) {
        sys.require_nonneg_var(j);
    }
    Ok(sys)
}

/// The class induced by a dominant vector c; the witness is c itself.
///
/// Errors on a rank mismatch or when c violates dominance.
pub fn induced_class(data: &HermitianRootData, c: &CVector) -> Result<ParabolicClass, Error> {
    if c.len() != data.l {
        return Err(Error::LengthMismatch { expected: data.l, got: c.len() });
    }
    for j in dominance_nonneg_vars(data) {
        if c.0[j] < num_rational::BigRational::zero() {
            return Err(Error::NotDominant { index: j });
        }
    }
    let mut ideal = BTreeSet::new();
    let mut filter = BTreeSet::new();
    for (i, root) in data.noncompact_pos.iter().enumerate() {
        let v = pairing(c, root);
        if v > num_rational::BigRational::zero() {
            filter.insert(i);
        } else if v < num_rational::BigRational::zero() {
            ideal.insert(i);
        }
    }
    // Dominance forces the up-set/down-set structure; keep it checked.
    debug_assert!(realizability_system(data, &ideal, &filter).is_ok());
    Ok(ParabolicClass { m: data.m, ideal, filter, witness: c.clone() })
}

/// Every realizable class, in canonical order
/// (|I|, |F|, members of I, members of F).
pub fn enumerate_classes(data: &HermitianRootData) -> Vec<ParabolicClass> {
    let mut out = Vec::new();
    for ideal in data.nc_down_sets() {
        for filter in data.nc_up_sets() {
            if ideal.intersection(&filter).next().is_some() {
                continue;
            }
            let sys = realizability_system(data, &ideal, &filter)
                .expect("candidate pairs are valid by construction");
            if let Some(witness) = feasible_witness(&sys) {
                out.push(ParabolicClass {
                    m: data.m,
                    ideal: ideal.clone(),
                    filter,
                    witness,
                });
            }
        }
    }
    out.sort_by_key(|c| {
        (
            c.ideal.len(),
            c.filter.len(),
            c.ideal.iter().copied().collect::<Vec<_>>(),
            c.filter.iter().copied().collect::<Vec<_>>(),
        )
    });
    out
}

/// The set of pair keys of a class list.
pub fn pair_set(classes: &[ParabolicClass]) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    classes.iter().map(ParabolicClass::pair_key).collect()
}

/// Independent oracle: induce classes from every dominant integer vector in
/// the box |c1| <= radius, 0 <= cj <= radius (for m = 2: |cj| <= radius on
/// both coordinates), and collect the distinct pairs.
pub fn grid_oracle(
    data: &HermitianRootData,
    radius: i64,
) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    assert!(radius >= 0);
    let l = data.l;
    let lows: Vec<i64> = (0..l)
        .map(|j| if j == 0 || data.m == 2 { -radius } else { 0 })
        .collect();
    let mut current = lows.clone();
    let mut out = BTreeSet::new();
    loop {
        let c = CVector::from_integers(&current);
        let class = induced_class(data, &c).expect("grid points are dominant");
        out.insert(class.pair_key());
        // Odometer step.
        let mut j = 0;
        loop {
            if j == l {
                return out;
            }
            current[j] += 1;
            if current[j] <= radius {
                break;
            }
            current[j] = lows[j];
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_data;

    /// Totals proved by the closed-form count; frozen here so enumeration is
    /// pinned independently of the classify module.
    const TOTALS: [usize; 12] = [3, 9, 8, 18, 15, 29, 24, 42, 35, 57, 48, 74];

    #[test]
    fn enumeration_totals() {
        for m in 1..=12u32 {
            let data = build_root_data(m).unwrap();
            assert_eq!(
                enumerate_classes(&data).len(),
                TOTALS[(m - 1) as usize],
                "m={m}"
            );
        }
    }

    #[test]
    fn m3_class_list_is_frozen() {
        let data = build_root_data(3).unwrap();
        let keys: Vec<(Vec<usize>, Vec<usize>)> =
            enumerate_classes(&data).iter().map(ParabolicClass::pair_key).collect();
        let expect: Vec<(Vec<usize>, Vec<usize>)> = vec![
            (vec![], vec![]),
            (vec![], vec![1, 2]),
            (vec![], vec![0, 1, 2]),
            (vec![0], vec![2]),
            (vec![0], vec![1, 2]),
            (vec![0, 1], vec![]),
            (vec![0, 1], vec![2]),
            (vec![0, 1, 2], vec![]),
        ];
        assert_eq!(keys, expect);
    }

    #[test]
    fn m2_class_list_is_frozen() {
        let data = build_root_data(2).unwrap();
        let keys: Vec<(Vec<usize>, Vec<usize>)> =
            enumerate_classes(&data).iter().map(ParabolicClass::pair_key).collect();
        let expect: Vec<(Vec<usize>, Vec<usize>)> = vec![
            (vec![], vec![]),
            (vec![], vec![0]),
            (vec![], vec![1]),
            (vec![], vec![0, 1]),
            (vec![0], vec![]),
            (vec![1], vec![]),
            (vec![0], vec![1]),
            (vec![1], vec![0]),
            (vec![0, 1], vec![]),
        ];
        assert_eq!(keys, expect);
    }

    #[test]
    fn witnesses_satisfy_their_systems_and_reinduce() {
        for m in [1u32, 2, 3, 4, 5, 6] {
            let data = build_root_data(m).unwrap();
            for class in enumerate_classes(&data) {
                let sys = realizability_system(&data, &class.ideal, &class.filter).unwrap();
                assert!(sys.is_satisfied_by(&class.witness), "m={m}");
                let again = induced_class(&data, &class.witness).unwrap();
                assert_eq!(again.pair_key(), class.pair_key(), "m={m}");
            }
        }
    }

    #[test]
    fn induced_examples() {
        let d3 = build_root_data(3).unwrap();
        let c = CVector::from_integers(&[1, 0]);
        let class = induced_class(&d3, &c).unwrap();
        assert_eq!(class.pair_key(), (vec![], vec![0, 1, 2]));
        let zero = induced_class(&d3, &CVector::from_integers(&[0, 0])).unwrap();
        assert_eq!(zero.pair_key(), (vec![], vec![]));

        let d2 = build_root_data(2).unwrap();
        let c = CVector::from_integers(&[-1, -1]);
        let class = induced_class(&d2, &c).unwrap();
        assert_eq!(class.pair_key(), (vec![0, 1], vec![]));
    }

    #[test]
    fn induced_rejects_non_dominant() {
        let d3 = build_root_data(3).unwrap();
        let c = CVector::from_integers(&[0, -1]);
        assert_eq!(
            induced_class(&d3, &c).unwrap_err(),
            Error::NotDominant { index: 1 }
        );
        let short = CVector::from_integers(&[1]);
        assert!(matches!(
            induced_class(&d3, &short).unwrap_err(),
            Error::LengthMismatch { .. }
        ));
    }

    #[test]
    fn realizability_rejects_malformed_pairs() {
        let data = build_root_data(3).unwrap();
        assert_eq!(
            realizability_system(&data, &BTreeSet::from([1]), &BTreeSet::new()).unwrap_err(),
            Error::NotDownSet
        );
        assert_eq!(
            realizability_system(&data, &BTreeSet::new(), &BTreeSet::from([0])).unwrap_err(),
            Error::NotUpSet
        );
        assert_eq!(
            realizability_system(&data, &BTreeSet::from([0]), &BTreeSet::from([0, 1, 2]))
                .unwrap_err(),
            Error::Overlapping
        );
    }

    #[test]
    fn grid_oracle_matches_enumeration_small() {
        for m in [1u32, 2, 3, 4, 5] {
            let data = build_root_data(m).unwrap();
            let enumerated = pair_set(&enumerate_classes(&data));
            assert_eq!(grid_oracle(&data, 3), enumerated, "m={m}");
        }
    }

    #[test]
    fn grid_radius_one_suffices_for_m2() {
        let data = build_root_data(2).unwrap();
        assert_eq!(grid_oracle(&data, 1).len(), 9);
    }
}
