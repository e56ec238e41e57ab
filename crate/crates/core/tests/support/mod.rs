//! Independent oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls into the engine beyond reading a graph's weights and
//! edges: inverses, class keys, squares and embeddings are recomputed from
//! scratch with small exact arithmetic.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod checks;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use pretzel_core::knot::PretzelKnot;
use pretzel_core::plumbing::{lens_plumbing, pretzel_plumbing};
use pretzel_core::PlumbingGraph;

pub type Q128 = Ratio<i128>;

pub fn big(x: &Q128) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

pub fn form(weights: &[i64], edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let n = weights.len();
    let mut q = vec![vec![0; n]; n];
    for (i, &w) in weights.iter().enumerate() {
        q[i][i] = w;
    }
    for &(a, b) in edges {
        q[a][b] = 1;
        q[b][a] = 1;
    }
    q
}

/// Gauss–Jordan inverse over ℚ; `None` if singular.
pub fn inverse(q: &[Vec<i64>]) -> Option<Vec<Vec<Q128>>> {
    let n = q.len();
    let mut a: Vec<Vec<Q128>> = q
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q128> = row.iter().map(|&x| Q128::from_integer(x as i128)).collect();
            r.extend((0..n).map(|j| Q128::from_integer((i == j) as i128)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c] != Q128::from_integer(0))?;
        a.swap(c, p);
        let piv = a[c][c];
        for x in a[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c && a[r][c] != Q128::from_integer(0) {
                let f = a[r][c];
                for j in 0..2 * n {
                    let v = a[c][j] * f;
                    a[r][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det(q: &[Vec<i64>]) -> i128 {
    let n = q.len();
    let mut a: Vec<Vec<Q128>> = q.iter().map(|r| r.iter().map(|&x| Q128::from_integer(x as i128)).collect()).collect();
    let mut d = Q128::from_integer(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| a[r][c] != Q128::from_integer(0)) else {
            return 0;
        };
        if p != c {
            a.swap(c, p);
            d = -d;
        }
        d *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for j in c..n {
                let v = a[c][j] * f;
                a[r][j] -= v;
            }
        }
    }
    assert!(d.is_integer());
    d.to_integer()
}

/// `K Q⁻¹ Kᵗ`.
pub fn square(inv: &[Vec<Q128>], k: &[i64]) -> Q128 {
    let mut s = Q128::from_integer(0);
    for (i, &ki) in k.iter().enumerate() {
        for (j, &kj) in k.iter().enumerate() {
            s += inv[i][j] * Q128::from_integer((ki * kj) as i128);
        }
    }
    s
}

/// `(a − b) Q⁻¹ ∈ ℤⁿ`.
pub fn same_class(inv: &[Vec<Q128>], a: &[i64], b: &[i64]) -> bool {
    let n = a.len();
    (0..n).all(|j| {
        let mut s = Q128::from_integer(0);
        for i in 0..n {
            s += inv[i][j] * Q128::from_integer((a[i] - b[i]) as i128);
        }
        s.is_integer()
    })
}

/// Spinᶜ classes: characteristic `K ~ K'` iff `(K − K')/2 ∈ Im(Q)`, keyed by
/// `((K − w)/2) · adj(Q) mod D`.
pub struct ClassKeyer {
    adj: Vec<Vec<i128>>,
    weights: Vec<i64>,
    order: i128,
}

impl ClassKeyer {
    pub fn new(q: &[Vec<i64>]) -> Self {
        let d = det(q);
        let inv = inverse(q).expect("non-singular form");
        let adj = inv.iter().map(|r| r.iter().map(|x| (x * Q128::from_integer(d)).to_integer()).collect()).collect();
        let weights = (0..q.len()).map(|i| q[i][i]).collect();
        ClassKeyer { adj, weights, order: d.abs() }
    }

    pub fn order(&self) -> i64 {
        self.order as i64
    }

    pub fn key(&self, k: &[i64]) -> Vec<i64> {
        let n = k.len();
        let half: Vec<i128> = k
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| {
                assert_eq!((x - w) % 2, 0, "not characteristic");
                ((x - w) / 2) as i128
            })
            .collect();
        (0..n)
            .map(|j| {
                let s: i128 = (0..n).map(|i| half[i] * self.adj[i][j]).sum();
                s.rem_euclid(self.order) as i64
            })
            .collect()
    }
}

/// Maximum of `K Q⁻¹ Kᵗ` per class over every characteristic covector with
/// `w(v) ≤ K_v ≤ −w(v)`.
pub fn box_maximize(weights: &[i64], edges: &[(usize, usize)]) -> BTreeMap<Vec<i64>, Q128> {
    let q = form(weights, edges);
    let inv = inverse(&q).expect("non-singular form");
    let keyer = ClassKeyer::new(&q);
    let mut best: BTreeMap<Vec<i64>, Q128> = BTreeMap::new();
    let mut k: Vec<i64> = weights.to_vec();
    loop {
        let sq = square(&inv, &k);
        best.entry(keyer.key(&k)).and_modify(|b| *b = (*b).max(sq)).or_insert(sq);
        let mut i = 0;
        loop {
            if i == k.len() {
                return best;
            }
            if k[i] + 2 <= -weights[i] {
                k[i] += 2;
                break;
            }
            k[i] = weights[i];
            i += 1;
        }
    }
}

/// `d = (max K² + N) / 4` per class key.
pub fn box_d_invariants(g: &PlumbingGraph) -> BTreeMap<Vec<i64>, Q128> {
    let n = g.len() as i128;
    box_maximize(g.weights(), g.edges())
        .into_iter()
        .map(|(key, sq)| (key, (sq + Q128::from_integer(n)) / Q128::from_integer(4)))
        .collect()
}

/// Non-negative, `x₃ ≤ 1`, and every entry strictly between the first and the
/// last at most one more than the sum of its predecessors.
pub fn changemaker_literal(x: &[i64]) -> bool {
    if x.iter().any(|&v| v < 0) || x.first().is_some_and(|&v| v > 1) {
        return false;
    }
    let mut sum = 0;
    for (i, &v) in x.iter().enumerate() {
        if i > 0 && i + 1 < x.len() && v > sum + 1 {
            return false;
        }
        sum += v;
    }
    true
}

fn vectors_of_norm(dim: usize, norm: i64) -> Vec<Vec<i64>> {
    fn rec(dim: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == dim {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut a = 0i64;
        while a * a <= left {
            for s in if a == 0 { vec![0] } else { vec![a, -a] } {
                cur.push(s);
                rec(dim, left - a * a, cur, out);
                cur.pop();
            }
            a += 1;
        }
    }
    let mut out = Vec::new();
    rec(dim, norm, &mut Vec::new(), &mut out);
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exhaustive search for `E` with `−EEᵗ = Q ⊕ R_n` in the normal form:
/// rows `0..r` free, row `r` = `(x_{r+2}, …, x₃, 1, 0)`, row `r+1` =
/// `(0, …, 0, −1, 1)`, leading `r × r` block unimodular. No symmetry is
/// exploited.
pub fn naive_embedding_exists(q: &[Vec<i64>], n: i64) -> bool {
    let r = q.len();
    let dim = r + 2;
    let mut last = vec![0; dim];
    last[r] = -1;
    last[r + 1] = 1;
    let mut by_norm: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    for i in 0..r {
        by_norm.entry(-q[i][i]).or_insert_with(|| vectors_of_norm(dim, -q[i][i]));
    }
    for xs in vectors_of_norm(r, n - 1) {
        if !changemaker_literal(&xs) {
            continue;
        }
        let mut xrow = vec![0; dim];
        for (j, &v) in xs.iter().enumerate() {
            xrow[r - 1 - j] = v;
        }
        xrow[r] = 1;
        let mut rows: Vec<Vec<i64>> = Vec::new();
        if fill(q, &by_norm, &xrow, &last, &mut rows) {
            return true;
        }
    }
    false
}

fn fill(
    q: &[Vec<i64>],
    by_norm: &BTreeMap<i64, Vec<Vec<i64>>>,
    xrow: &[i64],
    last: &[i64],
    rows: &mut Vec<Vec<i64>>,
) -> bool {
    let r = q.len();
    let i = rows.len();
    if i == r {
        let block: Vec<Vec<i64>> = rows.iter().map(|v| v[..r].to_vec()).collect();
        return det(&block).abs() == 1;
    }
    for v in &by_norm[&-q[i][i]] {
        if dot(v, xrow) != 0 || dot(v, last) != 0 {
            continue;
        }
        if (0..i).any(|j| dot(v, &rows[j]) != -q[i][j]) {
            continue;
        }
        rows.push(v.clone());
        if fill(q, by_norm, xrow, last, rows) {
            return true;
        }
        rows.pop();
    }
    false
}

fn star(center: i64, legs: &[&[i64]]) -> PlumbingGraph {
    let mut weights = vec![center];
    let mut edges = Vec::new();
    for leg in legs {
        let mut prev = 0;
        for &w in leg.iter() {
            weights.push(w);
            edges.push((prev, weights.len() - 1));
            prev = weights.len() - 1;
        }
    }
    PlumbingGraph::new(weights, edges).expect("definite star")
}

fn pretzel(p: i64, q: i64, r: i64) -> (String, PlumbingGraph) {
    let k = PretzelKnot::new(p, q, r).unwrap();
    (format!("Sigma({k})"), pretzel_plumbing(&k).unwrap())
}

/// Plumbings with `|det Q| ≤ 81` used for oracle comparisons.
pub fn corpus() -> Vec<(String, PlumbingGraph)> {
    let mut out = Vec::new();
    for k in [3, 5, 7, 9] {
        out.push(pretzel(k, -k, 2));
    }
    for (k, m) in [(1, 1), (1, 2), (1, 3), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)] {
        out.push(pretzel(k, -k - 2, 2 * m));
    }
    out.push(pretzel(3, -3, 4));
    out.push(pretzel(5, -5, 4));
    for n in 1..=41 {
        out.push((format!("R_{n}"), lens_plumbing(n).unwrap()));
    }
    for w in 1..=9 {
        out.push((format!("single({})", -w), PlumbingGraph::new(vec![-w], vec![]).unwrap()));
    }
    out.push(("D4".into(), star(-2, &[&[-2], &[-2], &[-2]])));
    out.push(("E6".into(), star(-2, &[&[-2], &[-2, -2], &[-2, -2]])));
    out.push(("E8".into(), star(-2, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]])));
    out.push(("star(-3;-2,-3,-4)".into(), star(-3, &[&[-2], &[-3], &[-4]])));
    out.push(("star(-2;-3,-3,-5)".into(), star(-2, &[&[-3], &[-3], &[-5]])));
    out.push(("star(-1;-2,-3,-7)".into(), star(-1, &[&[-2], &[-3], &[-7]])));
    out.push(("star(-1;-5,-5.-4,-2.-4)".into(), star(-1, &[&[-5], &[-5, -4], &[-2, -4]])));
    out.push(("chain(-3,-1,-4)".into(), PlumbingGraph::new(vec![-3, -1, -4], vec![(0, 1), (1, 2)]).unwrap()));
    out
}
