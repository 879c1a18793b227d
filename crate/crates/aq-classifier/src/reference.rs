//! Hard-coded reference rows for m = 2..=9: the expected (I, F) pair, the
//! compact dual's name, |Γ|, and the full two-variable polynomial for every
//! class, generated from the published closed-form row families. The root
//! lists here are written out independently of the rootsys module so the
//! regression has no shared code path with the computation it checks.

/// One expected class row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceRow {
    /// I as explicit coefficient vectors over the simple roots.
    pub ideal: Vec<Vec<i64>>,
    /// F as explicit coefficient vectors.
    pub filter: Vec<Vec<i64>>,
    pub y_name: String,
    pub gamma_size: usize,
    /// (p, q, coefficient) triples, ascending.
    pub terms: Vec<(u32, u32, u64)>,
}

/// Reference rows for 2 <= m <= 9; `None` outside that range.
pub fn reference_rows(m: u32) -> Option<Vec<ReferenceRow>> {
    match m {
        2 => Some(delta2_rows()),
        3 | 5 | 7 | 9 => Some(b_rows(m.div_ceil(2) as usize)),
        4 | 6 | 8 => Some(d_rows(((m + 2) / 2) as usize)),
        _ => None,
    }
}

fn su_name(k: usize) -> String {
    assert!(k >= 2);
    format!("SU({k})/S(U(1)xU({}))", k - 1)
}

fn so_odd_name(k: usize) -> String {
    assert!(k >= 1);
    format!("SO({})/(SO(2)xSO({}))", 2 * k + 1, 2 * k - 1)
}

fn so_even_name(k: usize) -> String {
    assert!(k >= 2);
    format!("SO({})/(SO(2)xSO({}))", 2 * k, 2 * k - 2)
}

/// (p0+k, q0+k) for k in 0..len, all coefficients 1.
fn run(p0: usize, q0: usize, len: usize) -> Vec<(u32, u32, u64)> {
    (0..len)
        .map(|k| ((p0 + k) as u32, (q0 + k) as u32, 1))
        .collect()
}

/// Same as [`run`] with coefficient 2 at offset `mid`.
fn run_mid2(p0: usize, q0: usize, len: usize, mid: usize) -> Vec<(u32, u32, u64)> {
    let mut terms = run(p0, q0, len);
    terms[mid].2 = 2;
    terms
}

fn row(
    ideal: Vec<Vec<i64>>,
    filter: Vec<Vec<i64>>,
    y_name: String,
    gamma_size: usize,
    terms: Vec<(u32, u32, u64)>,
) -> ReferenceRow {
    ReferenceRow { ideal, filter, y_name, gamma_size, terms }
}

// Odd case: Δn+ in ascending order is
//   chain(1), ..., chain(l), dbl(l), dbl(l-1), ..., dbl(2)
// with chain(i) = φ1+...+φi and dbl(j) = φ1+...+φ_{j-1}+2φj+...+2φl.

fn b_chain(l: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; l];
    for c in v.iter_mut().take(i) {
        *c = 1;
    }
    v
}

fn b_dbl(l: usize, j: usize) -> Vec<i64> {
    assert!((2..=l).contains(&j));
    let mut v = vec![1; l];
    for c in v.iter_mut().take(l).skip(j - 1) {
        *c = 2;
    }
    v
}

fn b_list(l: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (1..=l).map(|i| b_chain(l, i)).collect();
    for j in (2..=l).rev() {
        out.push(b_dbl(l, j));
    }
    out
}

fn prefix(list: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    list[..k].to_vec()
}

fn suffix(list: &[Vec<i64>], from: usize) -> Vec<Vec<i64>> {
    list[from..].to_vec()
}

fn b_rows(l: usize) -> Vec<ReferenceRow> {
    assert!(l >= 2);
    let list = b_list(l);
    // {β >= chain(i)} is the suffix from position i-1; {β <= chain(i)} the
    // prefix of length i; dbl(j) sits at position 2l-j.
    let above_chain = |i: usize| suffix(&list, i - 1);
    let below_chain = |i: usize| prefix(&list, i);
    let above_dbl = |j: usize| suffix(&list, 2 * l - j);
    let below_dbl = |i: usize| prefix(&list, 2 * l - i + 1);
    let mut rows = Vec::new();

    // I empty.
    rows.push(row(vec![], above_chain(1), "singleton".into(), 1, vec![
        ((2 * l - 1) as u32, 0, 1),
    ]));
    for i in 2..=l {
        rows.push(row(vec![], above_chain(i), su_name(i), 1, run(2 * l - i, 0, i)));
    }
    rows.push(row(vec![], vec![], so_odd_name(l), 0, run(0, 0, 2 * l)));

    // I = {β <= chain(i)}, 1 <= i <= l-1.
    for i in 1..=l - 1 {
        rows.push(row(
            below_chain(i),
            above_chain(i + 1),
            "singleton".into(),
            2,
            vec![((2 * l - 1 - i) as u32, i as u32, 1)],
        ));
        for j in i + 2..=l {
            rows.push(row(
                below_chain(i),
                above_chain(j),
                su_name(j - i),
                2,
                run(2 * l - j, i, j - i),
            ));
        }
        rows.push(row(
            below_chain(i),
            above_dbl(i + 1),
            so_odd_name(l - i),
            1,
            run(i, i, 2 * (l - i)),
        ));
    }

    // I = {β <= chain(l)}.
    rows.push(row(below_chain(l), above_dbl(l), "singleton".into(), 2, vec![
        ((l - 1) as u32, l as u32, 1),
    ]));
    for j in 2..=l - 1 {
        rows.push(row(
            below_chain(l),
            above_dbl(j),
            su_name(l - j + 1),
            2,
            run(j - 1, l, l - j + 1),
        ));
    }
    rows.push(row(below_chain(l), vec![], su_name(l), 1, run(0, l, l)));

    // I = {β <= dbl(i)}, 3 <= i <= l.
    for i in 3..=l {
        rows.push(row(
            below_dbl(i),
            above_dbl(i - 1),
            "singleton".into(),
            2,
            vec![((i - 2) as u32, (2 * l - i + 1) as u32, 1)],
        ));
        for j in 2..=i - 2 {
            rows.push(row(
                below_dbl(i),
                above_dbl(j),
                su_name(i - j),
                2,
                run(j - 1, 2 * l - i + 1, i - j),
            ));
        }
        rows.push(row(
            below_dbl(i),
            vec![],
            su_name(i - 1),
            1,
            run(0, 2 * l - i + 1, i - 1),
        ));
    }

    // I full.
    rows.push(row(below_dbl(2), vec![], "singleton".into(), 1, vec![
        (0, (2 * l - 1) as u32, 1),
    ]));

    assert_eq!(rows.len(), l * (l + 2));
    rows
}

// Even case (l >= 3): Δn+ ascending is
//   chain(1), ..., chain(l-2), ξ1, ξ2, full, dbl(l-2), ..., dbl(2)
// with ξ1 = chain(l-2)+φ_{l-1}, ξ2 = chain(l-2)+φ_l, full = φ1+...+φl and
// dbl(j) = φ1+...+φ_{j-1}+2φj+...+2φ_{l-2}+φ_{l-1}+φl.

fn d_chain(l: usize, i: usize) -> Vec<i64> {
    assert!(i <= l - 2);
    b_chain(l, i)
}

fn d_xi(l: usize, a: usize) -> Vec<i64> {
    let mut v = d_chain(l, l - 2);
    match a {
        1 => v[l - 2] = 1,
        2 => v[l - 1] = 1,
        _ => unreachable!(),
    }
    v
}

fn d_full(l: usize) -> Vec<i64> {
    vec![1; l]
}

fn d_dbl(l: usize, j: usize) -> Vec<i64> {
    assert!((2..=l - 2).contains(&j));
    let mut v = vec![1; l];
    for c in v.iter_mut().take(l - 2).skip(j - 1) {
        *c = 2;
    }
    v
}

fn d_list(l: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (1..=l - 2).map(|i| d_chain(l, i)).collect();
    out.push(d_xi(l, 1));
    out.push(d_xi(l, 2));
    out.push(d_full(l));
    for j in (2..=l - 2).rev() {
        out.push(d_dbl(l, j));
    }
    out
}

fn d_rows(l: usize) -> Vec<ReferenceRow> {
    assert!(l >= 3);
    let list = d_list(l);
    let above_chain = |i: usize| suffix(&list, i - 1);
    let below_chain = |i: usize| prefix(&list, i);
    // {β >= ξa} is ξa together with everything from full upward.
    let above_xi = |a: usize| {
        let mut f = vec![d_xi(l, a)];
        f.extend(suffix(&list, l));
        f
    };
    let below_xi = |a: usize| {
        let mut f = prefix(&list, l - 2);
        f.push(d_xi(l, a));
        f
    };
    let above_both_xi = || suffix(&list, l - 2);
    let below_both_xi = || prefix(&list, l);
    let above_full = || suffix(&list, l);
    let below_full = || prefix(&list, l + 1);
    // dbl(j) sits at position 2l-1-j.
    let above_dbl = |j: usize| suffix(&list, 2 * l - 1 - j);
    let below_dbl = |i: usize| prefix(&list, 2 * l - i);
    let mut rows = Vec::new();

    // I empty.
    rows.push(row(vec![], above_chain(1), "singleton".into(), 1, vec![
        ((2 * l - 2) as u32, 0, 1),
    ]));
    for i in 2..=l - 2 {
        rows.push(row(vec![], above_chain(i), su_name(i), 1, run(2 * l - 1 - i, 0, i)));
    }
    for a in 1..=2 {
        rows.push(row(vec![], above_xi(a), su_name(l), 1, run(l - 1, 0, l)));
    }
    rows.push(row(vec![], above_both_xi(), su_name(l - 1), 2, run(l, 0, l - 1)));
    rows.push(row(
        vec![],
        vec![],
        so_even_name(l),
        0,
        run_mid2(0, 0, 2 * l - 1, l - 1),
    ));

    // I = {β <= chain(i)}, 1 <= i <= l-3.
    for i in 1..=l.saturating_sub(3) {
        rows.push(row(
            below_chain(i),
            above_chain(i + 1),
            "singleton".into(),
            2,
            vec![((2 * l - 2 - i) as u32, i as u32, 1)],
        ));
        for j in i + 2..=l - 2 {
            rows.push(row(
                below_chain(i),
                above_chain(j),
                su_name(j - i),
                2,
                run(2 * l - 1 - j, i, j - i),
            ));
        }
        for a in 1..=2 {
            rows.push(row(
                below_chain(i),
                above_xi(a),
                su_name(l - i),
                2,
                run(l - 1, i, l - i),
            ));
        }
        rows.push(row(
            below_chain(i),
            above_both_xi(),
            su_name(l - 1 - i),
            3,
            run(l, i, l - 1 - i),
        ));
        rows.push(row(
            below_chain(i),
            above_dbl(i + 1),
            so_even_name(l - i),
            1,
            run_mid2(i, i, 2 * (l - i) - 1, l - 1 - i),
        ));
    }

    // I = {β <= chain(l-2)}.
    rows.push(row(
        below_chain(l - 2),
        above_both_xi(),
        "singleton".into(),
        3,
        vec![(l as u32, (l - 2) as u32, 1)],
    ));
    for a in 1..=2 {
        rows.push(row(below_chain(l - 2), above_xi(a), su_name(2), 2, vec![
            ((l - 1) as u32, (l - 2) as u32, 1),
            (l as u32, (l - 1) as u32, 1),
        ]));
    }
    rows.push(row(
        below_chain(l - 2),
        above_full(),
        so_even_name(2),
        1,
        run_mid2(l - 2, l - 2, 3, 1),
    ));

    // I = {β <= ξa}, a = 1, 2.
    for a in 1..=2 {
        let other = 3 - a;
        rows.push(row(below_xi(a), above_xi(other), "singleton".into(), 2, vec![
            ((l - 1) as u32, (l - 1) as u32, 1),
        ]));
        rows.push(row(below_xi(a), above_full(), su_name(2), 2, vec![
            ((l - 2) as u32, (l - 1) as u32, 1),
            ((l - 1) as u32, l as u32, 1),
        ]));
        for j in 2..=l - 2 {
            rows.push(row(
                below_xi(a),
                above_dbl(j),
                su_name(l - j + 1),
                2,
                run(j - 1, l - 1, l - j + 1),
            ));
        }
        rows.push(row(below_xi(a), vec![], su_name(l), 1, run(0, l - 1, l)));
    }

    // I = {β <= ξ1 or ξ2}.
    rows.push(row(below_both_xi(), above_full(), "singleton".into(), 3, vec![
        ((l - 2) as u32, l as u32, 1),
    ]));
    for j in 2..=l - 2 {
        rows.push(row(
            below_both_xi(),
            above_dbl(j),
            su_name(l - j),
            3,
            run(j - 1, l, l - j),
        ));
    }
    rows.push(row(below_both_xi(), vec![], su_name(l - 1), 2, run(0, l, l - 1)));

    // I = {β <= full}, only for l >= 4.
    if l >= 4 {
        rows.push(row(
            below_full(),
            above_dbl(l - 2),
            "singleton".into(),
            2,
            vec![((l - 3) as u32, (l + 1) as u32, 1)],
        ));
        for j in 2..=l - 3 {
            rows.push(row(
                below_full(),
                above_dbl(j),
                su_name(l - 1 - j),
                2,
                run(j - 1, l + 1, l - 1 - j),
            ));
        }
        rows.push(row(below_full(), vec![], su_name(l - 2), 1, run(0, l + 1, l - 2)));
    }

    // I = {β <= dbl(i)}, 3 <= i <= l-2.
    for i in 3..=l.saturating_sub(2) {
        rows.push(row(
            below_dbl(i),
            above_dbl(i - 1),
            "singleton".into(),
            2,
            vec![((i - 2) as u32, (2 * l - i) as u32, 1)],
        ));
        for j in 2..=i - 2 {
            rows.push(row(
                below_dbl(i),
                above_dbl(j),
                su_name(i - j),
                2,
                run(j - 1, 2 * l - i, i - j),
            ));
        }
        rows.push(row(below_dbl(i), vec![], su_name(i - 1), 1, run(0, 2 * l - i, i - 1)));
    }

    // I full.
    rows.push(row(below_dbl(2), vec![], "singleton".into(), 1, vec![
        (0, (2 * l - 2) as u32, 1),
    ]));

    assert_eq!(rows.len(), l * l + 4 * l - 3);
    rows
}

// m = 2: Δn+ = {φ1, φ2}, an antichain.

fn delta2_rows() -> Vec<ReferenceRow> {
    let p1 = vec![1, 0];
    let p2 = vec![0, 1];
    vec![
        row(vec![], vec![], so_even_name(2), 0, vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]),
        row(vec![], vec![p1.clone()], su_name(2), 1, vec![(1, 0, 1), (2, 1, 1)]),
        row(vec![], vec![p2.clone()], su_name(2), 1, vec![(1, 0, 1), (2, 1, 1)]),
        row(vec![], vec![p1.clone(), p2.clone()], "singleton".into(), 2, vec![(2, 0, 1)]),
        row(vec![p1.clone()], vec![], su_name(2), 1, vec![(0, 1, 1), (1, 2, 1)]),
        row(vec![p2.clone()], vec![], su_name(2), 1, vec![(0, 1, 1), (1, 2, 1)]),
        row(vec![p1.clone()], vec![p2.clone()], "singleton".into(), 2, vec![(1, 1, 1)]),
        row(vec![p2.clone()], vec![p1.clone()], "singleton".into(), 2, vec![(1, 1, 1)]),
        row(vec![p1, p2], vec![], "singleton".into(), 2, vec![(0, 2, 1)]),
    ]
}
