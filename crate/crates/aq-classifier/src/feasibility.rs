//! Exact feasibility of homogeneous linear sign systems over Q.
//!
//! Systems mix strict rows (r·c > 0 or < 0), equality rows (r·c = 0) and
//! nonnegative variables (c_j >= 0). Solving is by Gaussian substitution of
//! the equalities followed by Fourier-Motzkin elimination, entirely over
//! exact integers/rationals, with a fixed deterministic pivot and
//! back-substitution policy:
//!
//! * equalities are consumed first, pivoting on their highest-index variable;
//! * inequality variables are eliminated from the highest index down;
//! * back-substitution picks the midpoint of a two-sided interval, bound±1
//!   for a one-sided interval, and 0 for an unconstrained variable.
//!
//! Every witness is re-checked against the original constraints before being
//! returned.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::roots::CVector;

/// Which way a derived inequality row binds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Rel {
    /// r · c >= 0
    Weak,
    /// r · c > 0
    Strict,
}

/// A homogeneous sign system over variables c_0..c_{n_vars-1}.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub n_vars: usize,
    /// Rows r with r · c > 0.
    pub strict_pos: Vec<Vec<i64>>,
    /// Rows r with r · c < 0.
    pub strict_neg: Vec<Vec<i64>>,
    /// Rows r with r · c = 0.
    pub zero: Vec<Vec<i64>>,
    /// Variables constrained to c_j >= 0.
    pub nonneg_vars: BTreeSet<usize>,
}

impl LinearSystem {
    pub fn new(n_vars: usize) -> Self {
        LinearSystem { n_vars, ..Default::default() }
    }

    fn check_row(&self, row: &[i64]) {
        assert_eq!(row.len(), self.n_vars, "row length must match n_vars");
    }

    pub fn require_positive(&mut self, row: Vec<i64>) {
        self.check_row(&row);
        self.strict_pos.push(row);
    }

    pub fn require_negative(&mut self, row: Vec<i64>) {
        self.check_row(&row);
        self.strict_neg.push(row);
    }

    pub fn require_zero(&mut self, row: Vec<i64>) {
        self.check_row(&row);
        self.zero.push(row);
    }

    pub fn require_nonneg_var(&mut self, j: usize) {
        assert!(j < self.n_vars);
        self.nonneg_vars.insert(j);
    }

    /// Exact check of every constraint against a candidate point.
    pub fn is_satisfied_by(&self, c: &CVector) -> bool {
        if c.len() != self.n_vars {
            return false;
        }
        let dot = |row: &[i64]| -> BigRational {
            let mut acc = BigRational::zero();
            for (a, cj) in row.iter().zip(&c.0) {
                if *a != 0 {
                    acc += BigRational::from(BigInt::from(*a)) * cj;
                }
            }
            acc
        };
        self.strict_pos.iter().all(|r| dot(r).is_positive())
            && self.strict_neg.iter().all(|r| dot(r).is_negative())
            && self.zero.iter().all(|r| dot(r).is_zero())
            && self.nonneg_vars.iter().all(|&j| !c.0[j].is_negative())
    }
}

type IntRow = Vec<BigInt>;

fn to_bigint(row: &[i64]) -> IntRow {
    row.iter().map(|&a| BigInt::from(a)).collect()
}

fn is_zero_row(row: &IntRow) -> bool {
    row.iter().all(Zero::is_zero)
}

/// Divides a row by the gcd of its entries (sign preserved).
fn reduce(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for a in row.iter() {
        g = g.gcd(a);
    }
    if g > BigInt::from(1) {
        for a in row.iter_mut() {
            *a = &*a / &g;
        }
    }
}

/// row scaled positively so that the pivot column of `eq` cancels.
fn cancel_with_eq(row: &IntRow, eq: &IntRow, p: usize) -> IntRow {
    let a = &eq[p];
    debug_assert!(!a.is_zero());
    let scale = a.abs();
    let mult = if a.is_negative() { row[p].clone() } else { -row[p].clone() };
    let mut out: IntRow = row
        .iter()
        .zip(eq)
        .map(|(r, e)| r * &scale + e * &mult)
        .collect();
    debug_assert!(out[p].is_zero());
    reduce(&mut out);
    out
}

/// Positive combination of a lower row (coeff > 0 at k) and an upper row
/// (coeff < 0 at k) eliminating variable k.
fn combine(pos: &IntRow, neg: &IntRow, k: usize) -> IntRow {
    let a = pos[k].clone();
    let b = neg[k].abs();
    debug_assert!(a.is_positive() && b.is_positive());
    let mut out: IntRow = pos
        .iter()
        .zip(neg)
        .map(|(p, n)| p * &b + n * &a)
        .collect();
    debug_assert!(out[k].is_zero());
    reduce(&mut out);
    out
}

/// Inserts a row into a deduplicated map; `Strict` wins over `Weak`.
/// Returns false if the row is the impossible 0 > 0.
fn insert_row(map: &mut BTreeMap<IntRow, Rel>, mut row: IntRow, rel: Rel) -> bool {
    if is_zero_row(&row) {
        return rel != Rel::Strict;
    }
    reduce(&mut row);
    let entry = map.entry(row).or_insert(rel);
    if rel == Rel::Strict {
        *entry = Rel::Strict;
    }
    true
}

/// Deterministic exact witness for a feasible system, or None.
pub fn feasible_witness(sys: &LinearSystem) -> Option<CVector> {
    let n = sys.n_vars;

    let mut eqs: Vec<IntRow> = sys.zero.iter().map(|r| to_bigint(r)).collect();
    let mut ineqs: BTreeMap<IntRow, Rel> = BTreeMap::new();
    {
        let mut ok = true;
        for r in &sys.strict_pos {
            ok &= insert_row(&mut ineqs, to_bigint(r), Rel::Strict);
        }
        for r in &sys.strict_neg {
            let neg: IntRow = r.iter().map(|&a| BigInt::from(-a)).collect();
            ok &= insert_row(&mut ineqs, neg, Rel::Strict);
        }
        for &j in &sys.nonneg_vars {
            let mut unit = vec![BigInt::zero(); n];
            unit[j] = BigInt::from(1);
            ok &= insert_row(&mut ineqs, unit, Rel::Weak);
        }
        if !ok {
            return None;
        }
    }

    // Phase 1: Gaussian substitution of equalities, highest-index pivot.
    let mut eliminated = vec![false; n];
    let mut subs: Vec<(usize, Vec<BigRational>)> = Vec::new();
    while let Some(pos) = eqs.iter().position(|r| !is_zero_row(r)) {
        let eq = eqs.remove(pos);
        let p = (0..n).rev().find(|&j| !eq[j].is_zero()).expect("nonzero row");
        let a = BigRational::from(eq[p].clone());
        let expr: Vec<BigRational> = (0..n)
            .map(|j| {
                if j == p {
                    BigRational::zero()
                } else {
                    -BigRational::from(eq[j].clone()) / &a
                }
            })
            .collect();
        subs.push((p, expr));
        eliminated[p] = true;
        for row in eqs.iter_mut() {
            if !row[p].is_zero() {
                *row = cancel_with_eq(row, &eq, p);
            }
        }
        let old = std::mem::take(&mut ineqs);
        for (row, rel) in old {
            let new_row = if row[p].is_zero() { row } else { cancel_with_eq(&row, &eq, p) };
            if !insert_row(&mut ineqs, new_row, rel) {
                return None;
            }
        }
    }

    // Phase 2: Fourier-Motzkin elimination, highest variable first.
    let free_vars: Vec<usize> = (0..n).filter(|&j| !eliminated[j]).collect();
    let mut stages: Vec<(usize, Vec<(IntRow, Rel)>)> = Vec::new();
    let mut rows: Vec<(IntRow, Rel)> = ineqs.into_iter().collect();
    for &k in free_vars.iter().rev() {
        stages.push((k, rows.clone()));
        let mut next: BTreeMap<IntRow, Rel> = BTreeMap::new();
        let mut lowers: Vec<&(IntRow, Rel)> = Vec::new();
        let mut uppers: Vec<&(IntRow, Rel)> = Vec::new();
        for item in &rows {
            match item.0[k].sign() {
                num_bigint::Sign::Plus => lowers.push(item),
                num_bigint::Sign::Minus => uppers.push(item),
                num_bigint::Sign::NoSign => {
                    if !insert_row(&mut next, item.0.clone(), item.1) {
                        return None;
                    }
                }
            }
        }
        for (lo, lo_rel) in &lowers {
            for (hi, hi_rel) in &uppers {
                let rel = if *lo_rel == Rel::Strict || *hi_rel == Rel::Strict {
                    Rel::Strict
                } else {
                    Rel::Weak
                };
                if !insert_row(&mut next, combine(lo, hi, k), rel) {
                    return None;
                }
            }
        }
        rows = next.into_iter().collect();
    }
    debug_assert!(rows.is_empty(), "all variables eliminated");

    // Phase 3: back-substitution in reverse elimination order.
    let mut value: Vec<Option<BigRational>> = vec![None; n];
    for (k, stage_rows) in stages.iter().rev() {
        let mut lower: Option<(BigRational, Rel)> = None;
        let mut upper: Option<(BigRational, Rel)> = None;
        for (row, rel) in stage_rows {
            let a = &row[*k];
            if a.is_zero() {
                continue;
            }
            let mut rest = BigRational::zero();
            for (j, coeff) in row.iter().enumerate() {
                if j != *k && !coeff.is_zero() {
                    let vj = value[j].as_ref().expect("later variables already assigned");
                    rest += BigRational::from(coeff.clone()) * vj;
                }
            }
            let bound = -rest / BigRational::from(a.clone());
            let slot = if a.is_positive() { &mut lower } else { &mut upper };
            let better = match (&slot, a.is_positive()) {
                (None, _) => true,
                (Some((b, r)), true) => bound > *b || (bound == *b && *r == Rel::Weak && *rel == Rel::Strict),
                (Some((b, r)), false) => bound < *b || (bound == *b && *r == Rel::Weak && *rel == Rel::Strict),
            };
            if better {
                *slot = Some((bound, *rel));
            }
        }
        let one = BigRational::from(BigInt::from(1));
        let two = BigRational::from(BigInt::from(2));
        let v = match (lower, upper) {
            (None, None) => BigRational::zero(),
            (Some((b, _)), None) => b + one,
            (None, Some((b, _))) => b - one,
            (Some((lo, lr)), Some((hi, hr))) => {
                if lo < hi {
                    (lo + hi) / two
                } else if lo == hi && lr == Rel::Weak && hr == Rel::Weak {
                    lo
                } else {
                    unreachable!("empty interval for a system certified feasible");
                }
            }
        };
        value[*k] = Some(v);
    }
    for (p, expr) in subs.iter().rev() {
        let mut v = BigRational::zero();
        for (j, coeff) in expr.iter().enumerate() {
            if !coeff.is_zero() {
                v += coeff * value[j].as_ref().expect("substituted variables resolve in reverse");
            }
        }
        value[*p] = Some(v);
    }

    let witness = CVector(value.into_iter().map(|v| v.expect("every variable assigned")).collect());
    assert!(
        sys.is_satisfied_by(&witness),
        "witness must satisfy the original system exactly"
    );
    Some(witness)
}

/// Witness of `sys` with as many of the `relaxable` variables pinned to zero
/// as a greedy ascending-index pass allows.
///
/// Signals misuse if `sys` itself is infeasible.
pub fn minimal_support_witness(
    sys: &LinearSystem,
    relaxable: &BTreeSet<usize>,
) -> Result<CVector, Error> {
    if feasible_witness(sys).is_none() {
        return Err(Error::Infeasible);
    }
    let mut aug = sys.clone();
    for &j in relaxable {
        assert!(j < sys.n_vars);
        let mut unit = vec![0i64; sys.n_vars];
        unit[j] = 1;
        aug.zero.push(unit);
        if feasible_witness(&aug).is_none() {
            aug.zero.pop();
        }
    }
    Ok(feasible_witness(&aug).expect("greedy augmentation preserves feasibility"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn single_positive_variable() {
        let mut sys = LinearSystem::new(1);
        sys.require_positive(vec![1]);
        let w = feasible_witness(&sys).unwrap();
        assert_eq!(w.0, vec![rat(1, 1)]);
    }

    #[test]
    fn mixed_signs_two_vars() {
        let mut sys = LinearSystem::new(2);
        sys.require_positive(vec![1, 0]);
        sys.require_negative(vec![0, 1]);
        let w = feasible_witness(&sys).unwrap();
        assert_eq!(w.0, vec![rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn forced_equalities_can_contradict() {
        // c1 < 0, c1 + c2 = 0, c1 + 2 c2 = 0, c2 >= 0 has no solution.
        let mut sys = LinearSystem::new(2);
        sys.require_negative(vec![1, 0]);
        sys.require_zero(vec![1, 1]);
        sys.require_zero(vec![1, 2]);
        sys.require_nonneg_var(1);
        assert!(feasible_witness(&sys).is_none());
    }

    #[test]
    fn equality_substitution_path() {
        let mut sys = LinearSystem::new(2);
        sys.require_zero(vec![1, 2]);
        sys.require_negative(vec![1, 0]);
        sys.require_nonneg_var(1);
        let w = feasible_witness(&sys).unwrap();
        assert_eq!(w.0, vec![rat(-1, 1), rat(1, 2)]);
    }

    #[test]
    fn two_sided_interval_takes_midpoint() {
        // c2 > 0, c1 > c2, c1 < 3 c2.
        let mut sys = LinearSystem::new(2);
        sys.require_positive(vec![0, 1]);
        sys.require_positive(vec![1, -1]);
        sys.require_positive(vec![-1, 3]);
        let w = feasible_witness(&sys).unwrap();
        assert_eq!(w.0, vec![rat(1, 1), rat(2, 3)]);
        assert!(sys.is_satisfied_by(&w));
    }

    #[test]
    fn pure_upper_bound_steps_down() {
        let mut sys = LinearSystem::new(1);
        sys.require_negative(vec![2]);
        let w = feasible_witness(&sys).unwrap();
        assert_eq!(w.0, vec![rat(-1, 1)]);
    }

    #[test]
    fn unconstrained_variables_default_to_zero() {
        let sys = LinearSystem::new(3);
        let w = feasible_witness(&sys).unwrap();
        assert_eq!(w.0, vec![rat(0, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn strict_and_weak_opposites_are_infeasible() {
        // c1 > 0 and -c1 >= 0.
        let mut sys = LinearSystem::new(1);
        sys.require_positive(vec![1]);
        sys.require_negative(vec![1]);
        assert!(feasible_witness(&sys).is_none());
    }

    #[test]
    fn minimal_support_zeroes_relaxable_vars() {
        let mut sys = LinearSystem::new(2);
        sys.require_positive(vec![1, 0]);
        let w = minimal_support_witness(&sys, &BTreeSet::from([1])).unwrap();
        assert_eq!(w.0, vec![rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn minimal_support_keeps_needed_vars() {
        // c1 < 0 < c1 + c2 forces c2 > 0 even though it is relaxable.
        let mut sys = LinearSystem::new(2);
        sys.require_negative(vec![1, 0]);
        sys.require_positive(vec![1, 1]);
        sys.require_nonneg_var(1);
        let w = minimal_support_witness(&sys, &BTreeSet::from([1])).unwrap();
        assert!(w.0[1].is_positive());
        assert!(sys.is_satisfied_by(&w));
    }

    #[test]
    fn minimal_support_rejects_infeasible_input() {
        let mut sys = LinearSystem::new(1);
        sys.require_positive(vec![1]);
        sys.require_negative(vec![1]);
        assert_eq!(
            minimal_support_witness(&sys, &BTreeSet::new()).unwrap_err(),
            Error::Infeasible
        );
    }

    #[test]
    fn scaling_rows_preserves_feasibility_and_validity() {
        let mut sys = LinearSystem::new(3);
        sys.require_positive(vec![2, -1, 0]);
        sys.require_negative(vec![0, 1, -3]);
        sys.require_zero(vec![1, 1, 1]);
        let w1 = feasible_witness(&sys).unwrap();
        assert!(sys.is_satisfied_by(&w1));
        let mut scaled = sys.clone();
        for r in scaled
            .strict_pos
            .iter_mut()
            .chain(scaled.strict_neg.iter_mut())
            .chain(scaled.zero.iter_mut())
        {
            for a in r.iter_mut() {
                *a *= 7;
            }
        }
        let w2 = feasible_witness(&scaled).unwrap();
        assert_eq!(w1, w2);
    }
}
