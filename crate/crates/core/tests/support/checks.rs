//! Checks shared by the per-topic integration tests and the acceptance
//! runner. Each panics with a message on the first mismatch.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use pretzel_core::knot::PretzelKnot;
use pretzel_core::lens::{lens_d, lens_d_via_plumbing};
use pretzel_core::linalg::{inverse, IntMatrix};
use pretzel_core::obstruction::alexander::{alternating_poly, presentation};
use pretzel_core::obstruction::{
    compute_z, congruence_filter, decompose_ell, greene_search, nakanishi_test, seifert_matrix, symmetry_obstruction,
    AlexanderStatus, CrossingSign, GreeneConstraints, SymmetryOutcome,
};
use pretzel_core::plumbing::{pretzel_unit_covector, FormData};
use pretzel_core::{d_invariants, pretzel_plumbing, CharCovector, PlumbingGraph};

use super::{big, box_d_invariants, corpus, form, ClassKeyer};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn scaled(v: &[BigRational], by: i64) -> Vec<BigRational> {
    v.iter().map(|x| x * BigRational::from(BigInt::from(by))).collect()
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

fn sigma_graph(k: i64, m: i64) -> PlumbingGraph {
    pretzel_plumbing(&PretzelKnot::new(k, -k, 2 * m).unwrap()).unwrap()
}

pub const LENS_25: [i64; 13] = [0, -2, -8, -18, -32, -50, -72, -48, -28, -12, 0, 8, 12];
pub const SIGMA_25: [i64; 13] = [0, 22, -12, -2, 2, 0, 42, 28, 8, -18, 0, 12, 18];
pub const SIGMA_25_BY_22: [i64; 13] = [0, -2, 42, -18, 18, 0, 28, 2, 22, -12, 0, 8, 12];
pub const SIDES_SIGMA: [i64; 7] = [-12, -10, 42, -6, -4, -2, 0];
pub const SIDES_LENS: [i64; 7] = [-12, -10, -8, -6, -4, -2, 0];

/// The worked `k = 5` example: both tables, the relabelling by 22, the
/// two sides of the symmetry equation, and `Z(2) = 2`.
pub fn worked_example() {
    let dl = lens_d(25).unwrap();
    assert_eq!(scaled(&dl, 25)[..13], ints(&LENS_25)[..], "lens table");

    let g = sigma_graph(5, 1);
    let t = d_invariants(&g).unwrap();
    let unit = t.form().class_of(&pretzel_unit_covector(&g)).unwrap();
    let table = t.label_by_unit(&unit).unwrap();
    assert_eq!(scaled(table.values(), 25)[..13], ints(&SIGMA_25)[..], "Σ table");

    let by22 = table.relabel(22);
    assert_eq!(scaled(by22.values(), 25)[..13], ints(&SIGMA_25_BY_22)[..], "relabelled Σ table");

    let s = 6;
    for i in 0..=s {
        let lhs = (by22.d(i) - by22.d(2 * s - i)) * rat(25, 1);
        let rhs = (&dl[i as usize] - &dl[(2 * s - i) as usize]) * rat(25, 1);
        assert_eq!(lhs, rat(SIDES_SIGMA[i as usize], 1), "Σ side, i = {i}");
        assert_eq!(rhs, rat(SIDES_LENS[i as usize], 1), "L side, i = {i}");
    }
    assert_eq!(compute_z(2, 22, &table, &dl).unwrap(), rat(2, 1), "Z(2)");
}

/// `−EEᵗ = Q ⊕ R_n`, recomputed with plain integers.
pub fn recomposes(e: &IntMatrix, q: &[Vec<i64>], n: i64) -> bool {
    let e = e.to_i64_rows().unwrap();
    let r = q.len();
    let mut want = vec![vec![0i64; r + 2]; r + 2];
    for i in 0..r {
        want[i][..r].copy_from_slice(&q[i]);
    }
    want[r][r] = -n;
    want[r][r + 1] = 1;
    want[r + 1][r] = 1;
    want[r + 1][r + 1] = -2;
    (0..r + 2).all(|i| (0..r + 2).all(|j| -e[i].iter().zip(&e[j]).map(|(a, b)| a * b).sum::<i64>() == want[i][j]))
}

/// Lattice embeddings for `P(k, −k−2, 2m)`: none for `k ≥ 3`, one for `k = 1`.
pub fn greene_minus_two() {
    let run = |k: i64, m: i64| {
        let knot = PretzelKnot::new(k, -k - 2, 2 * m).unwrap();
        let g = pretzel_plumbing(&knot).unwrap();
        let q = g.intersection_form();
        let n = (knot.determinant() + 1) / 2;
        let c = GreeneConstraints::new(q.rows(), n, CrossingSign::NegativeCase).unwrap();
        (greene_search(&q, n, &c).unwrap(), form(g.weights(), g.edges()), n)
    };
    for k in [3, 5, 7, 9] {
        for m in 1..=3 {
            assert!(run(k, m).0.is_none(), "P({k},{},{}) has an embedding", -k - 2, 2 * m);
        }
    }
    for m in 1..=5 {
        let (cert, q, n) = run(1, m);
        let cert = cert.unwrap_or_else(|| panic!("P(1,-3,{}) has no embedding", 2 * m));
        assert!(recomposes(&cert.e, &q, n), "P(1,-3,{}): certificate does not recompose", 2 * m);
        cert.verify(&IntMatrix::from_rows(&q).unwrap(), n).unwrap();
    }
}

/// The Alexander module, the positive-crossing embedding test and the
/// symmetry test on `P(k, −k, 2m)`.
pub fn family_zero_obstructions() {
    for k in [3, 5, 7] {
        for m in 1..=4 {
            let v = nakanishi_test(&seifert_matrix(k, m).unwrap()).unwrap();
            assert_eq!(v.status == AlexanderStatus::UnknottingAtLeast2, m >= 2, "Alexander k={k} m={m}");
        }
    }
    for k in [3, 5, 7] {
        let g = sigma_graph(k, 1);
        let q = g.intersection_form();
        let n = (k * k + 1) / 2;
        let c = GreeneConstraints::new(q.rows(), n, CrossingSign::PositiveCase).unwrap();
        assert!(greene_search(&q, n, &c).unwrap().is_none(), "P({k},-{k},2) has an embedding");
    }
    for k in [5, 7, 9] {
        let out = symmetry_obstruction(&sigma_graph(k, 1), k * k).unwrap();
        assert_eq!(out, SymmetryOutcome::FailsAllUnits, "symmetry k={k}");
    }
    match symmetry_obstruction(&sigma_graph(3, 1), 9).unwrap() {
        SymmetryOutcome::PassesWith(v) => assert!(!v.is_empty()),
        other => panic!("symmetry k=3: {other:?}"),
    }
}

/// Pushing-down correction terms equal box maximisation on every corpus
/// graph, class by class.
pub fn oracle_equivalence() {
    for (name, g) in corpus() {
        let table = d_invariants(&g).unwrap();
        let oracle = box_d_invariants(&g);
        let keyer = ClassKeyer::new(&form(g.weights(), g.edges()));
        assert!(keyer.order() <= 81, "{name}: corpus bound");
        assert_eq!(oracle.len() as i64, keyer.order(), "{name}: box misses classes");
        assert_eq!(table.len(), oracle.len(), "{name}: class count");
        let mut seen = BTreeSet::new();
        for (m, d) in table.iter() {
            let key = keyer.key(&m.covector.0);
            assert!(seen.insert(key.clone()), "{name}: class {} listed twice", m.covector);
            assert_eq!(d, &big(&oracle[&key]), "{name}: class of {}", m.covector);
        }
    }
}

/// Entries of `k² Q⁻¹`, vertices `1 … k+2` with `v_k` trivalent and
/// `v_{k+2}` the leaf.
pub fn c_entry(k: i64, i: i64, j: i64) -> i64 {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    match (i, j) {
        (i, j) if j < k => -i * (k * k - j * k + 2 * j),
        (i, j) if j == k => -2 * i * k,
        (i, j) if j == k + 1 && i <= k => -i * k,
        (i, j) if i == k + 1 && j == k + 1 => -k * k,
        (i, j) if j == k + 2 && i <= k => -2 * i,
        (i, j) if i == k + 1 && j == k + 2 => -k,
        _ => -(k + 2),
    }
}

pub fn inverse_matches_closed_form() {
    for k in [3, 5, 7, 9] {
        let inv = inverse(&sigma_graph(k, 1).intersection_form()).unwrap();
        let n = (k + 2) as usize;
        for i in 0..n {
            for j in 0..n {
                let want = rat(c_entry(k, i as i64 + 1, j as i64 + 1), k * k);
                assert_eq!(inv[(i, j)], want, "k = {k}, entry ({}, {})", i + 1, j + 1);
            }
        }
    }
}

/// `(0, …, 2 at v_i, …, 0, j)`; `i = 0` leaves out the 2.
pub fn k1(k: i64, i: i64, j: i64) -> CharCovector {
    let mut v = vec![0; (k + 2) as usize];
    if i > 0 {
        v[(i - 1) as usize] = 2;
    }
    v[(k + 1) as usize] = j;
    CharCovector(v)
}

pub fn covector_squares_match_closed_form() {
    for k in [3, 5, 7, 9] {
        let f = FormData::new(&sigma_graph(k, 1)).unwrap();
        for i in 0..=k + 1 {
            for j in (2 - k..=k).step_by(2) {
                let want = if i <= k {
                    rat(-(4 * i * (k * k - i * k + 2 * i) + (k + 2) * j * j + 8 * i * j), k * k)
                } else {
                    rat(-(4 * k * k + (k + 2) * j * j + 4 * k * j), k * k)
                };
                assert_eq!(f.square(&k1(k, i, j)), want, "k = {k}, i = {i}, j = {j}");
            }
        }
        let mut k21 = vec![0; (k + 2) as usize];
        k21[0] = 2;
        k21[(k + 1) as usize] = k - 2;
        let mut k22 = vec![0; (k + 2) as usize];
        k22[k as usize] = 2;
        k22[(k + 1) as usize] = k - 2;
        assert_eq!(f.square(&CharCovector(k21)), rat(-(k + 2), 1), "k = {k}, first K²");
        assert_eq!(
            f.square(&CharCovector(k22)),
            rat(-(k * k * k + 6 * k * k - 12 * k + 8), k * k),
            "k = {k}, second K²"
        );
    }
}

pub fn lens_closed_form_matches_plumbing() {
    for d in [9, 25, 49, 81] {
        assert_eq!(lens_d(d).unwrap(), lens_d_via_plumbing(d).unwrap(), "D = {d}");
    }
}

pub fn det_m_k_is_alternating_polynomial() {
    for k in [3usize, 5, 7] {
        let rows: Vec<Vec<i64>> = (0..k - 1).map(|i| (0..k - 1).map(|j| (j <= i) as i64).collect()).collect();
        let m = presentation(&IntMatrix::from_rows(&rows).unwrap()).unwrap();
        assert_eq!(m.det().unwrap(), alternating_poly(k), "k = {k}");
    }
}

pub fn closed_forms() {
    inverse_matches_closed_form();
    covector_squares_match_closed_form();
    lens_closed_form_matches_plumbing();
    det_m_k_is_alternating_polynomial();
}

fn negate(k: &CharCovector) -> CharCovector {
    CharCovector(k.0.iter().map(|x| -x).collect())
}

/// Every chain with `len ≤ 3` and weights in `−5 … −2`.
pub fn small_chains() -> Vec<PlumbingGraph> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..3 {
        frontier = frontier.into_iter().flat_map(|w| (-5..=-2).map(move |x| [w.clone(), vec![x]].concat())).collect();
        for w in &frontier {
            let edges = (1..w.len()).map(|i| (i - 1, i)).collect();
            out.push(PlumbingGraph::new(w.clone(), edges).unwrap());
        }
    }
    out
}

/// Conjugation symmetry and class count on the corpus and small chains.
pub fn table_invariants() {
    let graphs = corpus().into_iter().map(|(_, g)| g).chain(small_chains());
    for g in graphs {
        let t = d_invariants(&g).unwrap();
        let keyer = ClassKeyer::new(&form(g.weights(), g.edges()));
        assert_eq!(t.len() as i64, keyer.order(), "{}: class count", g.to_text());
        for (m, d) in t.iter() {
            assert_eq!(t.d_of(&negate(&m.covector)).unwrap(), d, "{}: conjugate of {}", g.to_text(), m.covector);
        }
        if let Ok(unit) = t.unit_class() {
            assert!(t.label_by_unit(unit).unwrap().is_conjugation_symmetric());
        }
    }
}

pub fn exchange_identities() {
    for k in [3, 5, 7] {
        let f = FormData::new(&sigma_graph(k, 1)).unwrap();
        for j in -3 * k..=3 * k {
            // the 2 stays on v_1 … v_k, the arm through the trivalent vertex
            for b in -k..=0 {
                assert!(f.class_equal(&k1(k, 0, j + k * b), &k1(k, -b, j + 2 * b)), "(A) k={k} J={j} B={b}");
            }
            for i in 0..k {
                assert!(f.class_equal(&k1(k, i, j), &k1(k, i + 1, j + k - 2)), "(B) k={k} I={i} J={j}");
            }
            for i in 0..=k + 1 {
                assert!(f.class_equal(&k1(k, i, j), &k1(k, i, j + k * k)), "(C) k={k} I={i} J={j}");
            }
        }
    }
}

pub fn zero_class_correction_terms() {
    for k in [3, 5] {
        for m in [1, 2] {
            let t = d_invariants(&sigma_graph(k, m)).unwrap();
            assert!(t.d_of_class(t.zero_class().unwrap()).is_zero(), "P({k},-{k},{})", 2 * m);
            let g = pretzel_plumbing(&PretzelKnot::new(k, -k - 2, 2 * m).unwrap()).unwrap();
            let t = d_invariants(&g).unwrap();
            assert_eq!(t.d_of_class(t.zero_class().unwrap()), &rat(-1, 2), "P({k},{},{})", -k - 2, 2 * m);
        }
    }
}

pub fn structural_invariants() {
    table_invariants();
    exchange_identities();
    assert_eq!(congruence_filter(5), vec![3, 22]);
    assert_eq!(decompose_ell(22, 5).unwrap(), (4, 2, 0));
    zero_class_correction_terms();
}

/// Units outside the congruence filter already fail `Z(0) ∈ ℤ`.
pub fn congruence_filter_is_necessary(k: i64) {
    let d = k * k;
    let g = sigma_graph(k, 1);
    let t = d_invariants(&g).unwrap();
    let unit = t.form().class_of(&pretzel_unit_covector(&g)).unwrap();
    let labelled = t.label_by_unit(&unit).unwrap();
    let dl = lens_d(d).unwrap();
    let filter = congruence_filter(k);
    for ell in (1..d).filter(|l| l.gcd(&k) == 1 && !filter.contains(l)) {
        let z0 = compute_z(0, ell, &labelled, &dl).unwrap();
        assert!(!z0.is_integer(), "k={k} ℓ={ell}: Z(0) = {z0}");
    }
}
