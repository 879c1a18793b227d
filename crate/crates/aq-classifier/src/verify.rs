//! Self-verification: every computed quantity is checked against an
//! independent route (closed-form counts, integer grid scan, brute-force
//! subset enumeration, hard-coded reference tables), exactly and with zero
//! tolerance.

use std::collections::BTreeSet;
use std::fmt;

use crate::classify::{
    blattner, counts_closed_form, dual_pair, hodge_type, hodge_type_set_closed_form,
    is_discrete, is_holomorphic_ds, lowest_k_type_is_compact_dominant,
};
use crate::cohomology::{betti_from_ideals, identify_yq, phi_q_and_gamma, poincare_two_var};
use crate::parabolic::{enumerate_classes, grid_oracle, pair_set, ParabolicClass};
use crate::reference::reference_rows;
use crate::roots::{build_root_data, HermitianRootData};

/// Result of one named check for one m.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub m: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn ok(m: u32, name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome { m, name, passed: true, detail: detail.into() }
    }

    fn fail(m: u32, name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome { m, name, passed: false, detail: detail.into() }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "m={} {}: {}", self.m, self.name, status)
        } else {
            write!(f, "m={} {}: {} ({})", self.m, self.name, status, self.detail)
        }
    }
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

/// Grid radius from AQ_GRID_RADIUS, defaulting to 3.
pub fn radius_from_env() -> i64 {
    std::env::var("AQ_GRID_RADIUS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(3)
}

/// Enumeration size vs the closed-form total.
pub fn check_counts(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    let counts = counts_closed_form(data.m).expect("m >= 1");
    if classes.len() as u64 == counts.total {
        CheckOutcome::ok(data.m, "counts", format!("{} classes", classes.len()))
    } else {
        CheckOutcome::fail(
            data.m,
            "counts",
            format!("enumerated {} vs closed form {}", classes.len(), counts.total),
        )
    }
}

/// Discrete and holomorphic totals, and the cover property of discrete
/// classes.
pub fn check_discrete(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    let counts = counts_closed_form(data.m).expect("m >= 1");
    let n = data.nc_len();
    let discrete: Vec<&ParabolicClass> =
        classes.iter().filter(|c| is_discrete(data, c)).collect();
    let holo = classes.iter().filter(|c| is_holomorphic_ds(data, c)).count();
    if discrete.len() as u64 != counts.discrete {
        return CheckOutcome::fail(
            data.m,
            "discrete-series",
            format!("{} discrete vs closed form {}", discrete.len(), counts.discrete),
        );
    }
    if holo as u64 != counts.holomorphic {
        return CheckOutcome::fail(
            data.m,
            "discrete-series",
            format!("{holo} holomorphic vs closed form {}", counts.holomorphic),
        );
    }
    for c in &discrete {
        if c.r_plus() + c.r_minus() != n {
            return CheckOutcome::fail(
                data.m,
                "discrete-series",
                format!("discrete class {:?} has R+ + R- != |Δn+|", c.pair_key()),
            );
        }
    }
    CheckOutcome::ok(
        data.m,
        "discrete-series",
        format!("{} discrete, {holo} holomorphic", discrete.len()),
    )
}

/// Pair set from the exact solver vs the integer grid scan.
pub fn check_grid(
    data: &HermitianRootData,
    classes: &[ParabolicClass],
    radius: i64,
) -> CheckOutcome {
    let enumerated = pair_set(classes);
    let grid = grid_oracle(data, radius);
    if enumerated == grid {
        CheckOutcome::ok(data.m, "grid-oracle", format!("radius {radius}"))
    } else {
        let missing: Vec<_> = enumerated.difference(&grid).collect();
        let extra: Vec<_> = grid.difference(&enumerated).collect();
        CheckOutcome::fail(
            data.m,
            "grid-oracle",
            format!("radius {radius}: {} missing, {} extra", missing.len(), extra.len()),
        )
    }
}

/// Observed Hodge types vs the closed-form set.
pub fn check_hodge(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    let observed: BTreeSet<(usize, usize)> = classes.iter().map(hodge_type).collect();
    let expected = hodge_type_set_closed_form(data);
    if observed == expected {
        CheckOutcome::ok(data.m, "hodge-set", format!("{} types", observed.len()))
    } else {
        CheckOutcome::fail(
            data.m,
            "hodge-set",
            format!("observed {} types, closed form {}", observed.len(), expected.len()),
        )
    }
}

/// The dual of every class is a class, duality is an involution, and it
/// swaps Hodge components.
pub fn check_duality(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    let keys = pair_set(classes);
    for class in classes {
        let (di, df) = dual_pair(data, class);
        let key = (
            di.iter().copied().collect::<Vec<_>>(),
            df.iter().copied().collect::<Vec<_>>(),
        );
        if !keys.contains(&key) {
            return CheckOutcome::fail(
                data.m,
                "duality",
                format!("dual of {:?} is not a class", class.pair_key()),
            );
        }
        let dual = ParabolicClass {
            m: data.m,
            ideal: di,
            filter: df,
            witness: class.witness.clone(),
        };
        let (ddi, ddf) = dual_pair(data, &dual);
        if ddi != class.ideal || ddf != class.filter {
            return CheckOutcome::fail(data.m, "duality", "not an involution".to_string());
        }
        if hodge_type(&dual) != (class.r_minus(), class.r_plus()) {
            return CheckOutcome::fail(
                data.m,
                "duality",
                "Hodge type does not swap".to_string(),
            );
        }
    }
    CheckOutcome::ok(data.m, "duality", "")
}

/// Bigrading law p - q = R+ - R- on every monomial, exponent lower bounds,
/// and palindromic Betti numbers.
pub fn check_bigrading(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    for class in classes {
        let p = poincare_two_var(data, class);
        let shift = class.r_plus() as i64 - class.r_minus() as i64;
        for (x, t, _) in p.triples() {
            if x as i64 - t as i64 != shift
                || (x as usize) < class.r_plus()
                || (t as usize) < class.r_minus()
            {
                return CheckOutcome::fail(
                    data.m,
                    "bigrading",
                    format!("term ({x},{t}) of {:?}", class.pair_key()),
                );
            }
        }
        let betti = betti_from_ideals(data, class);
        let mut rev = betti.clone();
        rev.reverse();
        if betti != rev {
            return CheckOutcome::fail(
                data.m,
                "bigrading",
                format!("Betti numbers of {:?} not palindromic", class.pair_key()),
            );
        }
    }
    CheckOutcome::ok(data.m, "bigrading", "")
}

/// Order-ideal counts vs direct bitmask enumeration of down-closed subsets.
pub fn check_betti_brute_force(
    data: &HermitianRootData,
    classes: &[ParabolicClass],
) -> CheckOutcome {
    for class in classes {
        let n = class.zero_indices(data);
        let k = n.len();
        if k > 15 {
            continue;
        }
        let mut counts = vec![0u64; k + 1];
        for mask in 0u32..(1 << k) {
            let mut closed = true;
            'outer: for (q, &gq) in n.iter().enumerate() {
                if mask & (1 << q) == 0 {
                    continue;
                }
                for (p, &gp) in n.iter().enumerate() {
                    if data.leq_nc(gp, gq) && mask & (1 << p) == 0 {
                        closed = false;
                        break 'outer;
                    }
                }
            }
            if closed {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        if counts != betti_from_ideals(data, class) {
            return CheckOutcome::fail(
                data.m,
                "betti-brute-force",
                format!("class {:?}", class.pair_key()),
            );
        }
    }
    CheckOutcome::ok(data.m, "betti-brute-force", "")
}

/// Stored witnesses satisfy their own sign systems and re-induce the pair.
pub fn check_witnesses(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    for class in classes {
        let sys = match crate::parabolic::realizability_system(data, &class.ideal, &class.filter)
        {
            Ok(sys) => sys,
            Err(e) => {
                return CheckOutcome::fail(
                    data.m,
                    "witnesses",
                    format!("invalid pair {:?}: {e}", class.pair_key()),
                )
            }
        };
        if !sys.is_satisfied_by(&class.witness) {
            return CheckOutcome::fail(
                data.m,
                "witnesses",
                format!("witness violates system for {:?}", class.pair_key()),
            );
        }
        match crate::parabolic::induced_class(data, &class.witness) {
            Ok(again) if again.pair_key() == class.pair_key() => {}
            _ => {
                return CheckOutcome::fail(
                    data.m,
                    "witnesses",
                    format!("witness does not re-induce {:?}", class.pair_key()),
                )
            }
        }
    }
    CheckOutcome::ok(data.m, "witnesses", "")
}

/// Computed names, |Γ| and polynomials vs the hard-coded reference rows.
pub fn check_tables(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    let Some(rows) = reference_rows(data.m) else {
        return CheckOutcome::ok(data.m, "tables", "no reference rows");
    };
    if rows.len() != classes.len() {
        return CheckOutcome::fail(
            data.m,
            "tables",
            format!("{} reference rows vs {} classes", rows.len(), classes.len()),
        );
    }
    let mut matched = vec![false; classes.len()];
    for row in &rows {
        let to_key = |roots: &[Vec<i64>]| -> Option<Vec<usize>> {
            let mut idx = Vec::new();
            for coeffs in roots {
                idx.push(data.nc_index(&crate::roots::Root::new(coeffs.clone()))?);
            }
            idx.sort_unstable();
            Some(idx)
        };
        let (Some(ikey), Some(fkey)) = (to_key(&row.ideal), to_key(&row.filter)) else {
            return CheckOutcome::fail(
                data.m,
                "tables",
                "reference row mentions an unknown root".to_string(),
            );
        };
        let Some(pos) = classes
            .iter()
            .position(|c| c.pair_key() == (ikey.clone(), fkey.clone()))
        else {
            return CheckOutcome::fail(
                data.m,
                "tables",
                format!("reference pair ({ikey:?}, {fkey:?}) not enumerated"),
            );
        };
        if matched[pos] {
            return CheckOutcome::fail(
                data.m,
                "tables",
                format!("reference pair ({ikey:?}, {fkey:?}) duplicated"),
            );
        }
        matched[pos] = true;
        let class = &classes[pos];
        let name = match identify_yq(data, class) {
            Ok(y) => y.name(),
            Err(e) => {
                return CheckOutcome::fail(
                    data.m,
                    "tables",
                    format!("identification failed for ({ikey:?}, {fkey:?}): {e}"),
                )
            }
        };
        if name != row.y_name {
            return CheckOutcome::fail(
                data.m,
                "tables",
                format!("({ikey:?}, {fkey:?}): computed {name}, table {}", row.y_name),
            );
        }
        let gamma = match phi_q_and_gamma(data, class) {
            Ok(phi) => phi.gamma.len(),
            Err(e) => {
                return CheckOutcome::fail(data.m, "tables", format!("Γ failed: {e}"));
            }
        };
        if gamma != row.gamma_size {
            return CheckOutcome::fail(
                data.m,
                "tables",
                format!("({ikey:?}, {fkey:?}): |Γ| {gamma} vs table {}", row.gamma_size),
            );
        }
        let poly = poincare_two_var(data, class).triples();
        if poly != row.terms {
            return CheckOutcome::fail(
                data.m,
                "tables",
                format!(
                    "({ikey:?}, {fkey:?}): polynomial {poly:?} vs table {:?}",
                    row.terms
                ),
            );
        }
    }
    if matched.iter().all(|&v| v) {
        CheckOutcome::ok(data.m, "tables", format!("{} rows", rows.len()))
    } else {
        CheckOutcome::fail(data.m, "tables", "some classes unmatched".to_string())
    }
}

/// Lowest K-types are compact-dominant; Blattner is defined exactly on the
/// discrete range.
pub fn check_k_types(data: &HermitianRootData, classes: &[ParabolicClass]) -> CheckOutcome {
    for class in classes {
        if !lowest_k_type_is_compact_dominant(data, class) {
            return CheckOutcome::fail(
                data.m,
                "k-type-dominance",
                format!("{:?}", class.pair_key()),
            );
        }
        if blattner(data, class).is_ok() != is_discrete(data, class) {
            return CheckOutcome::fail(
                data.m,
                "k-type-dominance",
                format!("Blattner domain mismatch for {:?}", class.pair_key()),
            );
        }
    }
    CheckOutcome::ok(data.m, "k-type-dominance", "")
}

/// Run the whole battery for one m.
pub fn verify_m(m: u32, radius: i64) -> Vec<CheckOutcome> {
    let data = match build_root_data(m) {
        Ok(d) => d,
        Err(e) => {
            return vec![CheckOutcome::fail(m, "root-data", format!("{e}"))];
        }
    };
    let classes = enumerate_classes(&data);
    vec![
        check_counts(&data, &classes),
        check_discrete(&data, &classes),
        check_grid(&data, &classes, radius),
        check_hodge(&data, &classes),
        check_duality(&data, &classes),
        check_bigrading(&data, &classes),
        check_betti_brute_force(&data, &classes),
        check_witnesses(&data, &classes),
        check_tables(&data, &classes),
        check_k_types(&data, &classes),
    ]
}

/// Run the battery for every m in 1..=m_max.
pub fn verify_range(m_max: u32, radius: i64) -> Vec<CheckOutcome> {
    (1..=m_max).flat_map(|m| verify_m(m, radius)).collect()
}
