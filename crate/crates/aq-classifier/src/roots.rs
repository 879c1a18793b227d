//! Root data for g = so(m+2, C) with the holomorphic positive system of
//! SO0(2, m): simple roots φ1..φl, the compact/noncompact split, and the
//! partial order on the noncompact positive roots.
//!
//! Conventions fixed here and relied on everywhere else:
//! * m odd: type B with l = (m+1)/2; m even: type D with l = (m+2)/2
//!   (m = 2 gives D2 = A1 x A1).
//! * φ1 is the noncompact end of the diagram; a positive root is noncompact
//!   exactly when its φ1-coefficient is 1, except for m = 2 where both simple
//!   roots are noncompact and the compact system is empty.
//! * The noncompact positive roots are kept in a canonical linear extension
//!   of their order (coefficientwise comparison): ascending height, and for
//!   the one incomparable D-pair the root containing φ(l-1) precedes the one
//!   containing φl.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;
use crate::poset;

/// Ambient simple Lie type of so(m+2, C).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// so(2l+1, C), m odd.
    B,
    /// so(2l, C), m even.
    D,
}

/// A root (or weight) written in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn zero(l: usize) -> Self {
        Root { coeffs: vec![0; l] }
    }

    /// Sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Root) -> Root {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Root) -> Root {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coeffs.iter().map(|a| -a).collect())
    }

    /// Rendering in φ-notation, e.g. "φ1+2φ2" or "-(φ1+φ2)".
    pub fn phi_string(&self) -> String {
        fmt_phi(&self.coeffs, "φ", "", "")
    }

    /// LaTeX rendering, e.g. "\phi_{1}+2\phi_{2}".
    pub fn latex_string(&self) -> String {
        fmt_phi(&self.coeffs, "\\phi_{", "}", "")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.phi_string())
    }
}

fn fmt_phi(coeffs: &[i64], open: &str, close: &str, times: &str) -> String {
    if coeffs.iter().all(|&c| c == 0) {
        return "0".to_string();
    }
    let render = |cs: &[i64]| -> String {
        let mut out = String::new();
        for (j, &c) in cs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            if c != 1 {
                out.push_str(&c.to_string());
                out.push_str(times);
            }
            out.push_str(open);
            out.push_str(&(j + 1).to_string());
            out.push_str(close);
        }
        out
    };
    if coeffs.iter().all(|&c| c <= 0) {
        let pos: Vec<i64> = coeffs.iter().map(|&c| -c).collect();
        format!("-({})", render(&pos))
    } else {
        render(coeffs)
    }
}

/// Coefficientwise comparison: β ≤ γ in the root order.
pub fn leq(beta: &Root, gamma: &Root) -> bool {
    assert_eq!(beta.coeffs.len(), gamma.coeffs.len());
    beta.coeffs.iter().zip(&gamma.coeffs).all(|(b, g)| b <= g)
}

/// A rational coordinate vector c = (c1, ..., cl) describing
/// λ = Σ cj ωj / <ωj, φj-normalization>; only the pairings <λ, root> matter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CVector(pub Vec<BigRational>);

impl CVector {
    pub fn from_integers(v: &[i64]) -> Self {
        CVector(
            v.iter()
                .map(|&a| BigRational::from(BigInt::from(a)))
                .collect(),
        )
    }

    pub fn zero(l: usize) -> Self {
        CVector(vec![BigRational::zero(); l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// <λ_c, β> = Σ_j c_j n_j(β) for β = Σ_j n_j(β) φ_j.
///
/// The pairing is normalized so that dominance and the induced sign data read
/// directly off the coordinates; any global positive scale is irrelevant.
pub fn pairing(c: &CVector, beta: &Root) -> BigRational {
    assert_eq!(c.len(), beta.coeffs.len(), "rank mismatch in pairing");
    let mut acc = BigRational::zero();
    for (cj, nj) in c.0.iter().zip(&beta.coeffs) {
        acc += cj * BigRational::from(BigInt::from(*nj));
    }
    acc
}

/// (family, l) for SO0(2, m).
pub fn rank_for_m(m: u32) -> Result<(Family, usize), Error> {
    match m {
        0 => Err(Error::InvalidRank(0)),
        m if m % 2 == 1 => Ok((Family::B, (m.div_ceil(2)) as usize)),
        m => Ok((Family::D, ((m + 2) / 2) as usize)),
    }
}

/// Cartan matrix `C[i][j]` = <φ_{i+1}, φ_{j+1}-covector>.
pub fn cartan_matrix(family: Family, l: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    match family {
        Family::B => {
            for i in 0..l.saturating_sub(1) {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            if l >= 2 {
                // φl is the short root: long-into-short pairing is -2.
                c[l - 2][l - 1] = -2;
                c[l - 1][l - 2] = -1;
            }
        }
        Family::D => {
            assert!(l >= 2);
            for i in 0..l.saturating_sub(3) {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            if l >= 3 {
                // Fork: φ(l-1) and φl both attach to φ(l-2).
                c[l - 3][l - 2] = -1;
                c[l - 2][l - 3] = -1;
                c[l - 3][l - 1] = -1;
                c[l - 1][l - 3] = -1;
            }
            // l == 2: no edges (A1 x A1).
        }
    }
    c
}

/// All positive roots generated from a Cartan matrix by root-string closure,
/// sorted by ascending height (ties: larger coefficient vector first).
pub fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Root> {
    let l = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..l {
        let mut e = vec![0i64; l];
        e[i] = 1;
        known.insert(e.clone());
        frontier.push(e);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..l {
                // Depth of the φ_{i+1}-string below β.
                let mut p = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = beta.iter().enumerate().map(|(j, &n)| n * cartan[j][i]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Root> = known.into_iter().map(Root::new).collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then(b.coeffs.cmp(&a.coeffs)));
    roots
}

/// A cover β_lower < β_upper in the noncompact order; the difference is the
/// compact simple root φ_{label+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub label: usize,
}

/// The full root datum for SO0(2, m).
#[derive(Clone, Debug)]
pub struct HermitianRootData {
    pub m: u32,
    pub family: Family,
    pub l: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Doubled symmetrized form: `gram2[i][j]` = 2 (φ_{i+1}, φ_{j+1}),
    /// normalized so a long root has squared length 2.
    pub gram2: Vec<Vec<i64>>,
    pub positive: Vec<Root>,
    pub compact_pos: Vec<Root>,
    /// Canonical linear extension of the noncompact positive poset.
    pub noncompact_pos: Vec<Root>,
    covers: Vec<Cover>,
    leq_nc: Vec<Vec<bool>>,
    all_roots: BTreeSet<Vec<i64>>,
}

/// Builds the root datum for SO0(2, m). Fails only for m = 0.
pub fn build_root_data(m: u32) -> Result<HermitianRootData, Error> {
    let (family, l) = rank_for_m(m)?;
    let cartan = cartan_matrix(family, l);
    let positive = positive_roots_from_cartan(&cartan);

    let gram2 = {
        let mut g = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                // 2(φi,φj) = C[i][j] * (φj,φj); (φj,φj) = 2 except the short
                // B-root, where it is 1.
                let short_j = family == Family::B && j == l - 1;
                g[i][j] = cartan[i][j] * if short_j { 1 } else { 2 };
            }
        }
        for (i, row) in g.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, g[j][i], "symmetrized form must be symmetric");
            }
        }
        g
    };

    let is_noncompact = |r: &Root| -> bool {
        if m == 2 {
            true
        } else {
            r.coeffs[0] == 1
        }
    };
    let compact_pos: Vec<Root> = positive.iter().filter(|r| !is_noncompact(r)).cloned().collect();
    let noncompact_pos: Vec<Root> = positive.iter().filter(|r| is_noncompact(r)).cloned().collect();

    let n = noncompact_pos.len();
    let mut leq_nc = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq_nc[i][j] = leq(&noncompact_pos[i], &noncompact_pos[j]);
        }
    }
    // The canonical listing must be a linear extension; the order-reversing
    // index map k -> n-1-k must be an anti-automorphism.
    for i in 0..n {
        for j in 0..n {
            if leq_nc[i][j] {
                assert!(i <= j || i == j, "canonical order is a linear extension");
            }
            assert_eq!(
                leq_nc[i][j],
                leq_nc[n - 1 - j][n - 1 - i],
                "canonical order must be self-dual under reversal"
            );
        }
    }

    let compact_simple_labels: Vec<(usize, Vec<i64>)> = (0..l)
        .filter(|&j| {
            let mut e = vec![0i64; l];
            e[j] = 1;
            compact_pos.iter().any(|r| r.coeffs == e)
        })
        .map(|j| {
            let mut e = vec![0i64; l];
            e[j] = 1;
            (j, e)
        })
        .collect();

    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq_nc[i][j] {
                continue;
            }
            let intermediate =
                (0..n).any(|k| k != i && k != j && leq_nc[i][k] && leq_nc[k][j]);
            if intermediate {
                continue;
            }
            let diff = noncompact_pos[j].sub(&noncompact_pos[i]);
            let label = compact_simple_labels
                .iter()
                .find(|(_, e)| *e == diff.coeffs)
                .map(|(idx, _)| *idx)
                .expect("every cover differs by a compact simple root");
            covers.push(Cover { lower: i, upper: j, label });
        }
    }
    covers.sort_by_key(|c| (c.lower, c.upper));

    let mut all_roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    for r in &positive {
        all_roots.insert(r.coeffs.clone());
        all_roots.insert(r.neg().coeffs);
    }

    Ok(HermitianRootData {
        m,
        family,
        l,
        cartan,
        gram2,
        positive,
        compact_pos,
        noncompact_pos,
        covers,
        leq_nc,
        all_roots,
    })
}

impl HermitianRootData {
    /// Number of noncompact positive roots.
    pub fn nc_len(&self) -> usize {
        self.noncompact_pos.len()
    }

    /// Order test between noncompact positive roots, by canonical index.
    pub fn leq_nc(&self, i: usize, j: usize) -> bool {
        self.leq_nc[i][j]
    }

    /// Hasse diagram (covers) of the noncompact positive poset.
    pub fn hasse(&self) -> &[Cover] {
        &self.covers
    }

    /// Canonical index of a noncompact positive root.
    pub fn nc_index(&self, root: &Root) -> Option<usize> {
        self.noncompact_pos.iter().position(|r| r == root)
    }

    /// The order-reversing involution on canonical indices.
    pub fn dual_index(&self, k: usize) -> usize {
        self.nc_len() - 1 - k
    }

    /// Membership of a coefficient vector in the full root set Δ.
    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        self.all_roots.contains(coeffs)
    }

    /// Whether ±root lies in the noncompact part.
    pub fn is_noncompact(&self, root: &Root) -> bool {
        if self.m == 2 {
            true
        } else {
            root.coeffs[0].abs() == 1
        }
    }

    /// Doubled invariant form 2(α, β) on arbitrary integer vectors.
    pub fn ip2(&self, a: &Root, b: &Root) -> i64 {
        let mut acc = 0i64;
        for (i, &na) in a.coeffs.iter().enumerate() {
            if na == 0 {
                continue;
            }
            for (j, &nb) in b.coeffs.iter().enumerate() {
                if nb != 0 {
                    acc += na * nb * self.gram2[i][j];
                }
            }
        }
        acc
    }

    /// Integer Cartan pairing <a, b-covector> = 2(a,b)/(b,b) for a root b.
    pub fn cartan_pairing(&self, a: &Root, b: &Root) -> i64 {
        let num = 2 * self.ip2(a, b);
        let den = self.ip2(b, b);
        assert!(den > 0, "cartan_pairing needs a nonzero root on the right");
        assert_eq!(num % den, 0, "cartan pairing of roots must be an integer");
        num / den
    }

    /// All down-sets of the noncompact positive poset, canonical order.
    pub fn nc_down_sets(&self) -> Vec<BTreeSet<usize>> {
        let n = self.nc_len();
        poset::down_sets(n, &|a, b| self.leq_nc[a][b])
    }

    /// All up-sets of the noncompact positive poset, canonical order.
    pub fn nc_up_sets(&self) -> Vec<BTreeSet<usize>> {
        let n = self.nc_len();
        poset::up_sets(n, &|a, b| self.leq_nc[a][b])
    }

    /// Down-closure of a set of canonical indices.
    pub fn down_closure(&self, indices: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &j in indices {
            for i in 0..self.nc_len() {
                if self.leq_nc[i][j] {
                    out.insert(i);
                }
            }
        }
        out
    }

    /// Up-closure of a set of canonical indices.
    pub fn up_closure(&self, indices: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &i in indices {
            for j in 0..self.nc_len() {
                if self.leq_nc[i][j] {
                    out.insert(j);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(data: &HermitianRootData) -> Vec<Vec<i64>> {
        data.noncompact_pos.iter().map(|r| r.coeffs.clone()).collect()
    }

    #[test]
    fn rejects_m_zero() {
        assert_eq!(build_root_data(0).unwrap_err(), Error::InvalidRank(0));
    }

    #[test]
    fn family_and_rank() {
        assert_eq!(rank_for_m(1).unwrap(), (Family::B, 1));
        assert_eq!(rank_for_m(2).unwrap(), (Family::D, 2));
        assert_eq!(rank_for_m(3).unwrap(), (Family::B, 2));
        assert_eq!(rank_for_m(4).unwrap(), (Family::D, 3));
        assert_eq!(rank_for_m(9).unwrap(), (Family::B, 5));
        assert_eq!(rank_for_m(12).unwrap(), (Family::D, 7));
    }

    #[test]
    fn positive_root_counts() {
        for m in 1..=12u32 {
            let data = build_root_data(m).unwrap();
            let expect = match data.family {
                Family::B => data.l * data.l,
                Family::D => data.l * (data.l - 1),
            };
            assert_eq!(data.positive.len(), expect, "m={m}");
            let nc_expect = match data.family {
                Family::B => 2 * data.l - 1,
                Family::D => 2 * data.l - 2,
            };
            assert_eq!(data.nc_len(), nc_expect, "m={m}");
        }
    }

    #[test]
    fn small_noncompact_lists_are_frozen() {
        assert_eq!(vecs(&build_root_data(1).unwrap()), vec![vec![1]]);
        assert_eq!(
            vecs(&build_root_data(2).unwrap()),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert_eq!(
            vecs(&build_root_data(3).unwrap()),
            vec![vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        assert_eq!(
            vecs(&build_root_data(4).unwrap()),
            vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]]
        );
        assert_eq!(
            vecs(&build_root_data(5).unwrap()),
            vec![
                vec![1, 0, 0],
                vec![1, 1, 0],
                vec![1, 1, 1],
                vec![1, 1, 2],
                vec![1, 2, 2]
            ]
        );
        assert_eq!(
            vecs(&build_root_data(6).unwrap()),
            vec![
                vec![1, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![1, 1, 1, 0],
                vec![1, 1, 0, 1],
                vec![1, 1, 1, 1],
                vec![1, 2, 1, 1]
            ]
        );
    }

    #[test]
    fn compact_side_is_the_complement() {
        // For m != 2 the compact positive roots are exactly those with
        // φ1-coefficient zero; m = 2 has no compact roots at all.
        let d3 = build_root_data(3).unwrap();
        assert_eq!(
            d3.compact_pos.iter().map(|r| r.coeffs.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1]]
        );
        let d2 = build_root_data(2).unwrap();
        assert!(d2.compact_pos.is_empty());
        let d4 = build_root_data(4).unwrap();
        assert_eq!(d4.compact_pos.len(), 2);
    }

    #[test]
    fn hasse_chain_for_odd_m() {
        let data = build_root_data(5).unwrap();
        let covers: Vec<(usize, usize, usize)> =
            data.hasse().iter().map(|c| (c.lower, c.upper, c.label)).collect();
        assert_eq!(covers, vec![(0, 1, 1), (1, 2, 2), (2, 3, 2), (3, 4, 1)]);
    }

    #[test]
    fn hasse_diamond_for_even_m() {
        let data = build_root_data(4).unwrap();
        let covers: Vec<(usize, usize, usize)> =
            data.hasse().iter().map(|c| (c.lower, c.upper, c.label)).collect();
        assert_eq!(covers, vec![(0, 1, 1), (0, 2, 2), (1, 3, 2), (2, 3, 1)]);
    }

    #[test]
    fn d2_is_an_antichain() {
        let data = build_root_data(2).unwrap();
        assert!(data.hasse().is_empty());
        assert!(!data.leq_nc(0, 1));
        assert!(!data.leq_nc(1, 0));
    }

    #[test]
    fn incomparable_pair_counts() {
        for m in 1..=12u32 {
            let data = build_root_data(m).unwrap();
            let n = data.nc_len();
            let incomparable = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !data.leq_nc(i, j) && !data.leq_nc(j, i))
                .count();
            let expect = if data.family == Family::D { 1 } else { 0 };
            assert_eq!(incomparable, expect, "m={m}");
        }
    }

    #[test]
    fn pairing_examples() {
        let d3 = build_root_data(3).unwrap();
        let c = CVector::from_integers(&[1, 0]);
        assert_eq!(
            pairing(&c, &d3.noncompact_pos[2]),
            BigRational::from(BigInt::from(1))
        );
        let d5 = build_root_data(5).unwrap();
        let c = CVector::from_integers(&[-1, 1, 0]);
        assert_eq!(
            pairing(&c, &d5.noncompact_pos[0]),
            BigRational::from(BigInt::from(-1))
        );
    }

    #[test]
    fn b2_lengths_and_cartan_pairings() {
        let data = build_root_data(3).unwrap();
        let short = Root::new(vec![1, 1]); // e1 in the usual realization
        let long = Root::new(vec![1, 2]); // e1+e2
        assert_eq!(data.ip2(&short, &short), 2);
        assert_eq!(data.ip2(&long, &long), 4);
        assert_eq!(data.cartan_pairing(&long, &short), 2);
        assert_eq!(data.cartan_pairing(&short, &long), 1);
    }

    #[test]
    fn b1_root_is_short() {
        let data = build_root_data(1).unwrap();
        assert_eq!(data.ip2(&data.noncompact_pos[0], &data.noncompact_pos[0]), 2);
    }

    #[test]
    fn root_membership() {
        let data = build_root_data(3).unwrap();
        assert!(data.is_root(&[1, 2]));
        assert!(data.is_root(&[-1, -1]));
        assert!(!data.is_root(&[0, 2]));
        assert!(!data.is_root(&[2, 2]));
    }

    #[test]
    fn closures() {
        let data = build_root_data(4).unwrap();
        assert_eq!(
            data.down_closure(&BTreeSet::from([3])),
            BTreeSet::from([0, 1, 2, 3])
        );
        assert_eq!(
            data.up_closure(&BTreeSet::from([1])),
            BTreeSet::from([1, 3])
        );
        assert_eq!(data.dual_index(1), 2);
    }

    #[test]
    fn phi_rendering() {
        assert_eq!(Root::new(vec![1, 2]).phi_string(), "φ1+2φ2");
        assert_eq!(Root::new(vec![-1, -1]).phi_string(), "-(φ1+φ2)");
        assert_eq!(Root::new(vec![0, 0]).phi_string(), "0");
        assert_eq!(Root::new(vec![1, 0, 1]).latex_string(), "\\phi_{1}+\\phi_{3}");
    }
}
