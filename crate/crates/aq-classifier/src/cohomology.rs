//! Bigraded Poincaré polynomials and compact duals.
//!
//! For a class (I, F) put N = Δn+ \ (I ∪ F). The cohomology is carried by
//! the compact dual Y of the Levi factor; its Betti numbers b_j equal the
//! number of order ideals of N of size j, and the two-variable polynomial is
//! x^{R+} t^{R-} Σ_j b_j (xt)^j.
//!
//! Independently of that count, the positive system
//! Δq+ = Δk+ ∪ (-I) ∪ (Δn+ \ I) has simple roots Φq (the indecomposable
//! members); a minimal-support dominant witness λ* splits Φq into Γ
//! (positive pairing, central directions) and the Levi diagram Φq \ Γ,
//! whose marked (noncompact) components identify Y by name.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::Error;
use crate::feasibility::minimal_support_witness;
use crate::parabolic::{dominance_nonneg_vars, realizability_system, ParabolicClass};
use crate::poset::down_set_size_counts;
use crate::roots::{pairing, HermitianRootData, Root};

/// Polynomial in x, t with nonnegative integer coefficients, stored sparsely
/// by exponent pair (p, q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedPoly {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BigradedPoly {
    pub fn from_triples<I: IntoIterator<Item = (u32, u32, u64)>>(triples: I) -> Self {
        let mut terms = BTreeMap::new();
        for (p, q, c) in triples {
            if c > 0 {
                *terms.entry((p, q)).or_insert(0) += c;
            }
        }
        BigradedPoly { terms }
    }

    /// Terms as (p, q, coefficient), ascending in (p, q).
    pub fn triples(&self) -> Vec<(u32, u32, u64)> {
        self.terms.iter().map(|(&(p, q), &c)| (p, q, c)).collect()
    }

    pub fn coeff(&self, p: u32, q: u32) -> u64 {
        self.terms.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Sum of all coefficients (the total cohomology dimension).
    pub fn total_dim(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Collapse to the single-variable polynomial in t via r = p + q.
    pub fn one_variable(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for (&(p, q), &c) in &self.terms {
            *out.entry(p + q).or_insert(0) += c;
        }
        out
    }

    pub fn one_variable_string(&self) -> String {
        let parts: Vec<String> = self
            .one_variable()
            .iter()
            .map(|(&r, &c)| {
                let mut factors = Vec::new();
                if c != 1 || r == 0 {
                    factors.push(c.to_string());
                }
                if r > 0 {
                    factors.push(monomial("t", r));
                }
                factors.join("*")
            })
            .collect();
        parts.join(" + ")
    }

    /// LaTeX form, ascending, e.g. `1+2xt+x^{2}t^{2}`.
    pub fn latex(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(p, q), &c)| {
                let mut s = String::new();
                if c != 1 || (p == 0 && q == 0) {
                    s.push_str(&c.to_string());
                }
                if p > 0 {
                    s.push_str(&latex_monomial("x", p));
                }
                if q > 0 {
                    s.push_str(&latex_monomial("t", q));
                }
                s
            })
            .collect();
        parts.join("+")
    }
}

fn monomial(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

fn latex_monomial(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{{{e}}}")
    }
}

/// Plain-text form, ascending, e.g. `1 + 2*x*t + x^2*t^2`.
impl std::fmt::Display for BigradedPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(p, q), &c)| {
                let mut factors = Vec::new();
                if c != 1 || (p == 0 && q == 0) {
                    factors.push(c.to_string());
                }
                if p > 0 {
                    factors.push(monomial("x", p));
                }
                if q > 0 {
                    factors.push(monomial("t", q));
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Canonical indices of N = Δn+ \ (I ∪ F), ascending.
pub fn levi_noncompact_indices(data: &HermitianRootData, class: &ParabolicClass) -> Vec<usize> {
    class.zero_indices(data)
}

/// Betti numbers b_0..b_|N| of the compact dual: b_j counts the order
/// ideals of N of size j.
pub fn betti_from_ideals(data: &HermitianRootData, class: &ParabolicClass) -> Vec<u64> {
    let n = levi_noncompact_indices(data, class);
    down_set_size_counts(&n, &|a, b| data.leq_nc(a, b))
}

/// P(x, t) = x^{R+} t^{R-} Σ_j b_j (xt)^j.
pub fn poincare_two_var(data: &HermitianRootData, class: &ParabolicClass) -> BigradedPoly {
    let rp = class.r_plus() as u32;
    let rm = class.r_minus() as u32;
    let betti = betti_from_ideals(data, class);
    BigradedPoly::from_triples(
        betti
            .into_iter()
            .enumerate()
            .map(|(j, b)| (rp + j as u32, rm + j as u32, b)),
    )
}

/// Simple roots of Δq+ split by the minimal-support witness, plus the Levi
/// diagram components.
#[derive(Clone, Debug)]
pub struct PhiQData {
    /// Φq: indecomposable members of Δq+, by (height, coeffs) order.
    pub phi_q: Vec<Root>,
    /// Γ: members of Φq pairing positively with the witness.
    pub gamma: Vec<Root>,
    /// Φq \ Γ, same order.
    pub levi: Vec<Root>,
    /// Connected components of the Levi diagram (edges: nonzero inner
    /// product), each a list of roots.
    pub components: Vec<Vec<Root>>,
    /// The minimal-support dominant witness used for the split.
    pub witness: crate::roots::CVector,
}

fn canonical_root_sort(roots: &mut [Root]) {
    roots.sort_by(|a, b| {
        (a.height(), &b.coeffs).cmp(&(b.height(), &a.coeffs))
    });
}

/// Compute Φq, Γ and the Levi diagram for a realizable class.
pub fn phi_q_and_gamma(
    data: &HermitianRootData,
    class: &ParabolicClass,
) -> Result<PhiQData, Error> {
    let mut delta_q: Vec<Root> = Vec::new();
    for r in &data.compact_pos {
        delta_q.push(r.clone());
    }
    for (i, r) in data.noncompact_pos.iter().enumerate() {
        if class.ideal.contains(&i) {
            delta_q.push(r.neg());
        } else {
            delta_q.push(r.clone());
        }
    }
    let member: BTreeSet<Vec<i64>> = delta_q.iter().map(|r| r.coeffs.clone()).collect();
    let mut phi_q: Vec<Root> = delta_q
        .iter()
        .filter(|alpha| {
            !delta_q.iter().any(|beta| {
                let gamma = alpha.sub(beta);
                gamma.coeffs != beta.coeffs && member.contains(&gamma.coeffs)
            })
        })
        .cloned()
        .collect();
    canonical_root_sort(&mut phi_q);

    let sys = realizability_system(data, &class.ideal, &class.filter)?;
    let witness = minimal_support_witness(&sys, &dominance_nonneg_vars(data))?;

    let mut gamma = Vec::new();
    let mut levi = Vec::new();
    for root in &phi_q {
        let v = pairing(&witness, root);
        // A dominant witness cannot pair negatively with a simple root of
        // the positive system it defines.
        assert!(
            v >= num_rational::BigRational::zero(),
            "witness pairs negatively with a member of Phi_q"
        );
        if v > num_rational::BigRational::zero() {
            gamma.push(root.clone());
        } else {
            levi.push(root.clone());
        }
    }

    let components = connected_components(data, &levi);
    Ok(PhiQData { phi_q, gamma, levi, components, witness })
}

fn connected_components(data: &HermitianRootData, vertices: &[Root]) -> Vec<Vec<Root>> {
    let n = vertices.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen[start] = true;
        while let Some(i) = stack.pop() {
            comp.push(i);
            for j in 0..n {
                if !seen[j] && data.ip2(&vertices[i], &vertices[j]) != 0 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        comp.sort();
        out.push(comp.into_iter().map(|i| vertices[i].clone()).collect());
    }
    out
}

/// The possible compact duals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YqKind {
    /// Zero-dimensional Y.
    Singleton,
    /// Complex projective space SU(k)/S(U(1) x U(k-1)), dimension k - 1.
    Projective { k: usize },
    /// Complex quadric of dimension d: SO(d+2)/(SO(2) x SO(d)).
    Quadric { d: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YqDescriptor {
    pub kind: YqKind,
}

impl YqDescriptor {
    pub fn complex_dim(&self) -> usize {
        match self.kind {
            YqKind::Singleton => 0,
            YqKind::Projective { k } => k - 1,
            YqKind::Quadric { d } => d,
        }
    }

    /// ASCII name as printed in reports.
    pub fn name(&self) -> String {
        match self.kind {
            YqKind::Singleton => "singleton".to_string(),
            YqKind::Projective { k } => {
                format!("SU({k})/S(U(1)xU({}))", k - 1)
            }
            YqKind::Quadric { d } => {
                if d % 2 == 1 {
                    let k = d.div_ceil(2);
                    format!("SO({})/(SO(2)xSO({}))", 2 * k + 1, 2 * k - 1)
                } else {
                    let k = (d + 2) / 2;
                    format!("SO({})/(SO(2)xSO({}))", 2 * k, 2 * k - 2)
                }
            }
        }
    }

    /// Closed-form Betti numbers b_0..b_d of Y.
    pub fn betti(&self) -> Vec<u64> {
        match self.kind {
            YqKind::Singleton => vec![1],
            YqKind::Projective { k } => vec![1; k],
            YqKind::Quadric { d } => {
                let mut b = vec![1; d + 1];
                if d % 2 == 0 && d > 0 {
                    b[d / 2] = 2;
                }
                b
            }
        }
    }
}

/// Identify Y from the marked Levi diagram and cross-check its dimension
/// against |N|; any shape outside the taxonomy or a dimension mismatch is
/// reported as an inconsistency.
pub fn identify_yq(
    data: &HermitianRootData,
    class: &ParabolicClass,
) -> Result<YqDescriptor, Error> {
    let phi = phi_q_and_gamma(data, class)?;
    identify_yq_from_phi(data, class, &phi)
}

/// As [`identify_yq`], reusing an already computed [`PhiQData`].
pub fn identify_yq_from_phi(
    data: &HermitianRootData,
    class: &ParabolicClass,
    phi: &PhiQData,
) -> Result<YqDescriptor, Error> {
    let n_len = levi_noncompact_indices(data, class).len();
    let marked: Vec<&Vec<Root>> = phi
        .components
        .iter()
        .filter(|comp| comp.iter().any(|r| data.is_noncompact(r)))
        .collect();

    let fail = |msg: String| Err(Error::Inconsistent(msg));

    let descriptor = match marked.len() {
        0 => {
            if n_len != 0 {
                return fail(format!("no marked Levi component but |N| = {n_len}"));
            }
            YqDescriptor { kind: YqKind::Singleton }
        }
        2 => {
            // Two Hermitian factors only arise as SO(2)xSO(2)-type pieces:
            // each component must be a single noncompact vertex.
            if marked.iter().any(|c| c.len() != 1) || n_len != 2 {
                return fail("two marked components must be singletons with |N| = 2".into());
            }
            YqDescriptor { kind: YqKind::Quadric { d: 2 } }
        }
        1 => {
            let comp = marked[0];
            let c = comp.len();
            let noncompact: Vec<&Root> =
                comp.iter().filter(|r| data.is_noncompact(r)).collect();
            if noncompact.len() != 1 {
                return fail(format!(
                    "marked component has {} noncompact vertices",
                    noncompact.len()
                ));
            }
            let v = noncompact[0];
            let kind = if c == 1 {
                // ip2 is twice the squared length: 2 for short, 4 for long.
                match data.ip2(v, v) {
                    2 => YqKind::Quadric { d: 1 },
                    4 => YqKind::Projective { k: 2 },
                    other => {
                        return fail(format!("vertex of doubled squared length {other}"));
                    }
                }
            } else {
                let degree = |r: &Root| {
                    comp.iter()
                        .filter(|s| s.coeffs != r.coeffs && data.ip2(r, s) != 0)
                        .count()
                };
                let has_double_edge = comp.iter().enumerate().any(|(i, a)| {
                    comp.iter().skip(i + 1).any(|b| {
                        data.ip2(a, b) != 0
                            && data.cartan_pairing(a, b) * data.cartan_pairing(b, a) == 2
                    })
                });
                let has_fork = comp.iter().any(|r| degree(r) >= 3);
                if has_double_edge {
                    YqKind::Quadric { d: 2 * c - 1 }
                } else if has_fork {
                    YqKind::Quadric { d: 2 * c - 2 }
                } else if degree(v) <= 1 {
                    // Chain marked at an end: projective space.
                    YqKind::Projective { k: c + 1 }
                } else if c == 3 {
                    // Plain 3-chain marked in the middle: the rank-3 even
                    // quadric (the diagram coincidence A3 = D3).
                    YqKind::Quadric { d: 4 }
                } else {
                    return fail(format!(
                        "chain of size {c} marked at an interior vertex"
                    ));
                }
            };
            let descriptor = YqDescriptor { kind };
            if descriptor.complex_dim() != n_len {
                return fail(format!(
                    "Levi shape gives dim {} but |N| = {n_len}",
                    descriptor.complex_dim()
                ));
            }
            descriptor
        }
        k => return fail(format!("{k} marked Levi components")),
    };
    Ok(descriptor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::enumerate_classes;
    use crate::roots::build_root_data;

    fn class_by_key(
        data: &HermitianRootData,
        ideal: &[usize],
        filter: &[usize],
    ) -> ParabolicClass {
        enumerate_classes(data)
            .into_iter()
            .find(|c| c.pair_key() == (ideal.to_vec(), filter.to_vec()))
            .expect("class exists")
    }

    #[test]
    fn poly_rendering() {
        let p = BigradedPoly::from_triples([(0, 0, 1), (1, 1, 2), (2, 2, 1)]);
        assert_eq!(p.to_string(), "1 + 2*x*t + x^2*t^2");
        assert_eq!(p.latex(), "1+2xt+x^{2}t^{2}");
        assert_eq!(p.one_variable_string(), "1 + 2*t^2 + t^4");
        let q = BigradedPoly::from_triples([(3, 1, 1), (4, 2, 1)]);
        assert_eq!(q.to_string(), "x^3*t + x^4*t^2");
        assert_eq!(q.total_dim(), 2);
        let single = BigradedPoly::from_triples([(0, 5, 1)]);
        assert_eq!(single.to_string(), "t^5");
    }

    #[test]
    fn trivial_class_betti_small() {
        let cases: [(u32, &[u64]); 4] = [
            (2, &[1, 2, 1]),
            (4, &[1, 1, 2, 1, 1]),
            (5, &[1, 1, 1, 1, 1, 1]),
            (6, &[1, 1, 1, 2, 1, 1, 1]),
        ];
        for (m, expect) in cases {
            let data = build_root_data(m).unwrap();
            let trivial = class_by_key(&data, &[], &[]);
            assert_eq!(betti_from_ideals(&data, &trivial), expect, "m={m}");
        }
    }

    #[test]
    fn two_variable_polynomial_examples() {
        let d2 = build_root_data(2).unwrap();
        let trivial = class_by_key(&d2, &[], &[]);
        assert_eq!(
            poincare_two_var(&d2, &trivial).to_string(),
            "1 + 2*x*t + x^2*t^2"
        );

        let d5 = build_root_data(5).unwrap();
        let c = class_by_key(&d5, &[0], &[2, 3, 4]);
        let p = poincare_two_var(&d5, &c);
        assert_eq!(p.triples(), vec![(3, 1, 1), (4, 2, 1)]);
    }

    #[test]
    fn bigrading_law_holds() {
        for m in 1..=8u32 {
            let data = build_root_data(m).unwrap();
            for class in enumerate_classes(&data) {
                let p = poincare_two_var(&data, &class);
                let shift = class.r_plus() as i64 - class.r_minus() as i64;
                for (x, t, _) in p.triples() {
                    assert_eq!(x as i64 - t as i64, shift);
                    assert!(x as usize >= class.r_plus());
                    assert!(t as usize >= class.r_minus());
                }
                assert_eq!(
                    p.total_dim(),
                    betti_from_ideals(&data, &class).iter().sum::<u64>()
                );
            }
        }
    }

    #[test]
    fn phi_q_and_gamma_examples() {
        let d3 = build_root_data(3).unwrap();
        let trivial = class_by_key(&d3, &[], &[]);
        let phi = phi_q_and_gamma(&d3, &trivial).unwrap();
        let coeffs: Vec<Vec<i64>> = phi.phi_q.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![1, 0], vec![0, 1]]);
        assert!(phi.gamma.is_empty());
        assert_eq!(phi.components.len(), 1);

        let su2 = class_by_key(&d3, &[], &[1, 2]);
        let phi = phi_q_and_gamma(&d3, &su2).unwrap();
        let gamma: Vec<Vec<i64>> = phi.gamma.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(gamma, vec![vec![0, 1]]);
        let levi: Vec<Vec<i64>> = phi.levi.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(levi, vec![vec![1, 0]]);

        // Mixed discrete class: Phi_q = {-(φ1), φ1+φ2}, both central.
        let disc = class_by_key(&d3, &[0], &[1, 2]);
        let phi = phi_q_and_gamma(&d3, &disc).unwrap();
        let coeffs: Vec<Vec<i64>> = phi.phi_q.iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![-1, 0], vec![1, 1]]);
        assert_eq!(phi.gamma.len(), 2);
        assert!(phi.levi.is_empty());
    }

    #[test]
    fn identify_named_examples() {
        let expect: [(u32, &[usize], &[usize], &str); 8] = [
            (1, &[], &[], "SO(3)/(SO(2)xSO(1))"),
            (2, &[], &[], "SO(4)/(SO(2)xSO(2))"),
            (3, &[], &[], "SO(5)/(SO(2)xSO(3))"),
            (4, &[], &[], "SO(6)/(SO(2)xSO(4))"),
            (5, &[], &[], "SO(7)/(SO(2)xSO(5))"),
            (6, &[], &[], "SO(8)/(SO(2)xSO(6))"),
            (3, &[0], &[2], "SO(3)/(SO(2)xSO(1))"),
            (5, &[], &[2, 3, 4], "SU(3)/S(U(1)xU(2))"),
        ];
        for (m, ideal, filter, name) in expect {
            let data = build_root_data(m).unwrap();
            let class = class_by_key(&data, ideal, filter);
            let y = identify_yq(&data, &class).unwrap();
            assert_eq!(y.name(), name, "m={m} {ideal:?} {filter:?}");
        }
    }

    #[test]
    fn identify_two_component_case() {
        let d6 = build_root_data(6).unwrap();
        let class = class_by_key(&d6, &[0, 1], &[4, 5]);
        let y = identify_yq(&d6, &class).unwrap();
        assert_eq!(y.kind, YqKind::Quadric { d: 2 });
        assert_eq!(y.name(), "SO(4)/(SO(2)xSO(2))");
    }

    #[test]
    fn descriptor_betti_closed_forms() {
        assert_eq!(YqDescriptor { kind: YqKind::Singleton }.betti(), vec![1]);
        assert_eq!(
            YqDescriptor { kind: YqKind::Projective { k: 3 } }.betti(),
            vec![1, 1, 1]
        );
        assert_eq!(
            YqDescriptor { kind: YqKind::Quadric { d: 5 } }.betti(),
            vec![1, 1, 1, 1, 1, 1]
        );
        assert_eq!(
            YqDescriptor { kind: YqKind::Quadric { d: 4 } }.betti(),
            vec![1, 1, 2, 1, 1]
        );
    }

    #[test]
    fn order_ideal_betti_matches_descriptor_betti() {
        for m in 1..=9u32 {
            let data = build_root_data(m).unwrap();
            for class in enumerate_classes(&data) {
                let via_ideals = betti_from_ideals(&data, &class);
                let y = identify_yq(&data, &class).unwrap();
                assert_eq!(
                    via_ideals,
                    y.betti(),
                    "m={m} class {:?}",
                    class.pair_key()
                );
            }
        }
    }

    #[test]
    fn gamma_sizes_for_m2() {
        let data = build_root_data(2).unwrap();
        let sizes: Vec<(Vec<usize>, Vec<usize>, usize)> = enumerate_classes(&data)
            .iter()
            .map(|c| {
                let phi = phi_q_and_gamma(&data, c).unwrap();
                let key = c.pair_key();
                (key.0, key.1, phi.gamma.len())
            })
            .collect();
        let expect = vec![
            (vec![], vec![], 0),
            (vec![], vec![0], 1),
            (vec![], vec![1], 1),
            (vec![], vec![0, 1], 2),
            (vec![0], vec![], 1),
            (vec![1], vec![], 1),
            (vec![0], vec![1], 2),
            (vec![1], vec![0], 2),
            (vec![0, 1], vec![], 2),
        ];
        assert_eq!(sizes, expect);
    }
}
