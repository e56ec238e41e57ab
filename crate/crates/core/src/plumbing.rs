//! Negative-definite plumbing trees, Spinᶜ classes on their boundaries, and
//! correction terms via the pushing-down algorithm.
//!
//! Covectors are written in the Hom-dual basis, i.e. as the list of
//! evaluations `⟨K, [S_v]⟩`. The square of `K` is `K Q⁻¹ Kᵗ`, and
//! `d(Y, t) = (max square over the class + N) / 4` for trees with at most one
//! overweight vertex.
//!
//! Two characteristic covectors lie in the same class when `(K₁ − K₂) Q⁻¹` is
//! integral. With `adj(Q) = det(Q) · Q⁻¹` that is `(K₁ − K₂) adj(Q) ≡ 0 (mod D)`,
//! `D = |det Q|`, so `K adj(Q) mod D` is a complete class invariant (the
//! class key) and class addition is addition of keys.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::PretzelKnot;
use crate::linalg::{self, IntMatrix};

/// Hirzebruch–Jung expansion `a/b = a₁ − 1/(a₂ − 1/(…))`, every `aᵢ >= 2`.
pub fn hj_chain(a: i64, b: i64) -> Result<Vec<i64>> {
    if b < 1 || a <= b || a.gcd(&b) != 1 {
        return Err(Error::ContinuedFraction { num: a, den: b });
    }
    let (mut a, mut b) = (a, b);
    let mut out = Vec::new();
    while b > 0 {
        let c = Integer::div_ceil(&a, &b);
        out.push(c);
        (a, b) = (b, c * b - a);
    }
    Ok(out)
}

/// Weighted tree with a fixed vertex order `v₁ … v_N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlumbingGraph {
    weights: Vec<i64>,
    /// 0-based vertex pairs.
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    /// Validates that the graph is a tree with at most one overweight vertex
    /// and a negative-definite intersection form.
    pub fn new(weights: Vec<i64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = PlumbingGraph { weights, edges };
        g.check_tree()?;
        let bad = g.overweight_vertices();
        if bad.len() > 1 {
            return Err(Error::InvalidGraph(format!("{} overweight vertices (at most one supported)", bad.len())));
        }
        if !linalg::sylvester_negdef(&g.intersection_form()) {
            return Err(Error::NotNegativeDefinite);
        }
        Ok(g)
    }

    fn check_tree(&self) -> Result<()> {
        let n = self.weights.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        if self.edges.len() != n - 1 {
            return Err(Error::InvalidGraph(format!("{} vertices but {} edges; not a tree", n, self.edges.len())));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidGraph(format!("bad edge ({}, {})", a + 1, b + 1)));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidGraph("graph has a cycle".into()));
            }
            parent[ra] = rb;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Vertices with `w(v) > −deg(v)`.
    pub fn overweight_vertices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.weights[v] > -(self.degree(v) as i64)).collect()
    }

    /// Weights on the diagonal, 1 for each edge.
    pub fn intersection_form(&self) -> IntMatrix {
        let n = self.len();
        let mut q = IntMatrix::zeros(n, n);
        for (v, &w) in self.weights.iter().enumerate() {
            q[(v, v)] = BigInt::from(w);
        }
        for &(a, b) in &self.edges {
            q[(a, b)] = BigInt::from(1);
            q[(b, a)] = BigInt::from(1);
        }
        q
    }

    /// Parses the line format `v <index> <weight>` / `e <i> <j>` (1-based).
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut verts: BTreeMap<usize, i64> = BTreeMap::new();
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let nums: Vec<i64> = fields[1..]
                .iter()
                .map(|s| s.parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("expected integers"))?;
            match (fields[0], nums.as_slice()) {
                ("v", &[idx, w]) => {
                    if idx < 1 {
                        return Err(err("vertex indices start at 1"));
                    }
                    if verts.insert(idx as usize, w).is_some() {
                        return Err(err("duplicate vertex"));
                    }
                }
                ("e", &[a, b]) => {
                    if a < 1 || b < 1 {
                        return Err(err("vertex indices start at 1"));
                    }
                    edges.push((a as usize - 1, b as usize - 1));
                }
                _ => return Err(err("expected `v <index> <weight>` or `e <i> <j>`")),
            }
        }
        let n = verts.len();
        if verts.keys().copied().ne(1..=n) {
            return Err(Error::InvalidGraph("vertex indices must be exactly 1..N".into()));
        }
        PlumbingGraph::new(verts.into_values().collect(), edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, w) in self.weights.iter().enumerate() {
            s.push_str(&format!("v {} {}\n", i + 1, w));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("e {} {}\n", a + 1, b + 1));
        }
        s
    }
}

/// The tree for `P(p, q, 2m)`, `p > 0 > q` odd, `m > 0`: a `−2` chain
/// `v₁ … v_{p+2m−1}` made of the two arms `p/(p−1)` and `2m/(2m−1)` joined
/// at `v_p`, plus a leaf `v_{p+2m}` of weight `q` attached to `v_p`.
pub fn pretzel_plumbing(k: &PretzelKnot) -> Result<PlumbingGraph> {
    let (p, q, r) = (k.p(), k.q(), k.r());
    if p <= 0 || q >= 0 || p % 2 == 0 || q % 2 == 0 || r <= 0 || r % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "{k}: plumbing needs normalized P(p,q,2m) with p > 0 > q odd and m > 0"
        )));
    }
    let m = r / 2;
    let left_arm = if p > 1 { hj_chain(p, p - 1)? } else { Vec::new() };
    let right_arm = hj_chain(2 * m, 2 * m - 1)?;
    let mut weights: Vec<i64> = left_arm.iter().map(|a| -a).collect();
    weights.push(-2);
    weights.extend(right_arm.iter().map(|a| -a));
    let chain = weights.len();
    weights.push(q);
    let mut edges: Vec<(usize, usize)> = (0..chain - 1).map(|i| (i, i + 1)).collect();
    edges.push(((p - 1) as usize, chain));
    PlumbingGraph::new(weights, edges)
}

/// The two-vertex tree `(−n) - (−2)` with form `R_n`.
pub fn lens_plumbing(n: i64) -> Result<PlumbingGraph> {
    PlumbingGraph::new(vec![-n, -2], vec![(0, 1)])
}

/// `K¹_{1,−1}` on the pretzel tree: 2 on `v₁`, −1 on the leaf, 0 elsewhere.
pub fn pretzel_unit_covector(g: &PlumbingGraph) -> CharCovector {
    let mut v = vec![0; g.len()];
    v[0] = 2;
    *v.last_mut().expect("non-empty graph") = -1;
    CharCovector(v)
}

/// Evaluations `⟨K, [S_v]⟩` of a covector, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharCovector(pub Vec<i64>);

impl CharCovector {
    pub fn is_characteristic(&self, g: &PlumbingGraph) -> bool {
        self.0.len() == g.len() && self.0.iter().zip(g.weights()).all(|(k, w)| (k - w).rem_euclid(2) == 0)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for CharCovector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A Spinᶜ structure on the boundary: characteristic covectors modulo
/// `2·Im(Q)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinClass {
    key: Vec<i64>,
    c1: Vec<i64>,
    representative: CharCovector,
}

impl SpinClass {
    pub fn representative(&self) -> &CharCovector {
        &self.representative
    }

    /// `((K − w)/2) · adj(Q) mod D`; equal exactly for equal classes.
    pub fn key(&self) -> &[i64] {
        &self.key
    }

    /// Image `K · adj(Q) mod D` of the covector in `coker(Q)`.
    pub fn c1(&self) -> &[i64] {
        &self.c1
    }

    /// Whether `K Q⁻¹` is integral.
    pub fn is_zero(&self) -> bool {
        self.c1.iter().all(|&x| x == 0)
    }
}

impl PartialEq for SpinClass {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for SpinClass {}

/// Integer data of `Q` needed for class arithmetic in the hot loops.
#[derive(Debug, Clone)]
pub struct FormData {
    graph: PlumbingGraph,
    rows: Vec<Vec<i64>>,
    adj: Vec<Vec<i64>>,
    det: i64,
    order: i64,
}

impl FormData {
    pub fn new(graph: &PlumbingGraph) -> Result<Self> {
        let q = graph.intersection_form();
        let (adj, det) = linalg::adjugate(&q)?;
        let adj = adj.to_i64_rows().ok_or(Error::Overflow("adjugate of Q"))?;
        let det = det.to_i64().ok_or(Error::Overflow("det Q"))?;
        Ok(FormData { graph: graph.clone(), rows: q.to_i64_rows().expect("small weights"), adj, det, order: det.abs() })
    }

    pub fn graph(&self) -> &PlumbingGraph {
        &self.graph
    }

    /// `D = |det Q|`, the number of classes.
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    /// Class key of a characteristic covector, see [`SpinClass::key`].
    pub fn key(&self, k: &[i64]) -> Vec<i64> {
        let half: Vec<i64> = k.iter().zip(self.graph.weights()).map(|(x, w)| (x - w).div_euclid(2)).collect();
        self.c1_key(&half)
    }

    /// `K · adj(Q) mod D`, entries in `[0, D)`, for any integer covector.
    pub fn c1_key(&self, k: &[i64]) -> Vec<i64> {
        let n = self.rows.len();
        let d = self.order as i128;
        (0..n)
            .map(|j| {
                let s: i128 = (0..n).map(|i| k[i] as i128 * self.adj[i][j] as i128).sum();
                s.rem_euclid(d) as i64
            })
            .collect()
    }

    /// `K adj(Q) Kᵗ`; the square is this divided by `det Q`.
    fn square_numer(&self, k: &[i64]) -> i128 {
        let n = self.rows.len();
        let mut total = 0i128;
        for i in 0..n {
            if k[i] == 0 {
                continue;
            }
            let row: i128 = (0..n).map(|j| self.adj[i][j] as i128 * k[j] as i128).sum();
            total += k[i] as i128 * row;
        }
        total
    }

    /// `K Q⁻¹ Kᵗ`, exact.
    pub fn square(&self, k: &CharCovector) -> BigRational {
        BigRational::new(BigInt::from(self.square_numer(&k.0)), BigInt::from(self.det))
    }

    pub fn class_of(&self, k: &CharCovector) -> Result<SpinClass> {
        if !k.is_characteristic(&self.graph) {
            return Err(Error::Unsupported(format!("{k} is not characteristic")));
        }
        Ok(self.class_unchecked(k.0.clone()))
    }

    fn class_unchecked(&self, k: Vec<i64>) -> SpinClass {
        SpinClass { key: self.key(&k), c1: self.c1_key(&k), representative: CharCovector(k) }
    }

    /// Whether `(K₁ − K₂) Q⁻¹` is integral, i.e. equal images in `coker(Q)`.
    /// For odd `D` and characteristic covectors this is class equality.
    pub fn class_equal(&self, a: &CharCovector, b: &CharCovector) -> bool {
        self.c1_key(&a.0) == self.c1_key(&b.0)
    }

    fn add_keys(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| (x + y).rem_euclid(self.order)).collect()
    }

    fn scale_key(&self, a: &[i64], t: i64) -> Vec<i64> {
        a.iter().map(|&x| ((x as i128 * t as i128).rem_euclid(self.order as i128)) as i64).collect()
    }

    /// Additive order of the image of a class in `coker(Q)`.
    pub fn class_order(&self, c: &SpinClass) -> i64 {
        let mut acc = c.c1.clone();
        let mut t = 1;
        while acc.iter().any(|&x| x != 0) {
            acc = self.add_keys(&acc, &c.c1);
            t += 1;
        }
        t
    }

    /// Upper bound on the length of a pushing-down path from `k`. A push
    /// preserves `K²`, and `|K|² ≤ λ|K²|` with `λ = max(|w| + deg)` bounding
    /// the spectrum of `−Q`, so the path stays in a box of side `2R + 1`.
    fn path_bound(&self, k: &[i64]) -> usize {
        let g = &self.graph;
        let lambda = (0..g.len()).map(|v| g.weights()[v].unsigned_abs() + g.degree(v) as u64).max().unwrap_or(1);
        let r2 = lambda as u128 * self.square_numer(k).unsigned_abs() / self.det.unsigned_abs() as u128;
        let side = 2 * r2.isqrt() + 1;
        (0..g.len())
            .try_fold(1u128, |acc, _| acc.checked_mul(side))
            .map_or(usize::MAX, |b| b.min(usize::MAX as u128) as usize)
    }

    /// Follows the pushing-down path from `start`. Returns whether it is
    /// maximising; pushes at the lowest-index eligible vertex.
    fn follow_path(&self, start: &[i64]) -> Result<bool> {
        let w = self.graph.weights();
        let bound = self.path_bound(start);
        let mut k = start.to_vec();
        for _ in 0..=bound {
            if k.iter().zip(w).any(|(x, w)| *x > -w) {
                return Ok(false);
            }
            match k.iter().zip(w).position(|(x, w)| *x == -w) {
                None => return Ok(true),
                Some(v) => {
                    for (kj, qj) in k.iter_mut().zip(&self.rows[v]) {
                        *kj += 2 * qj;
                    }
                }
            }
        }
        Err(Error::Internal(format!(
            "pushing-down path from {} exceeded {} steps",
            CharCovector(start.to_vec()),
            bound
        )))
    }
}

/// A class with its square-maximising covector.
#[derive(Debug, Clone)]
pub struct Maximizer {
    pub class: SpinClass,
    pub covector: CharCovector,
    pub square: BigRational,
}

/// Enumerates covectors with `w(v) + 2 ≤ K(v) ≤ −w(v)`, keeps those that
/// start a maximising path, and returns the best square in each class.
///
/// Output is sorted by maximiser covector and independent of worker count.
pub fn enumerate_maximizers(form: &FormData) -> Result<Vec<Maximizer>> {
    let w = form.graph.weights();
    let n = w.len();
    // each vertex has −w(v) admissible start values
    let radices: Vec<u64> = w.iter().map(|&x| (-x) as u64).collect();
    let total = radices.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r)).ok_or(Error::Overflow("start box size"))?;

    let survivors: Vec<Vec<i64>> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut k = vec![0i64; n];
            for v in 0..n {
                let r = radices[v];
                k[v] = w[v] + 2 + 2 * (idx % r) as i64;
                idx /= r;
            }
            form.follow_path(&k).map(|ok| ok.then_some(k))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;

    let mut best: BTreeMap<Vec<i64>, (i128, Vec<i64>)> = BTreeMap::new();
    for k in survivors {
        let key = form.key(&k);
        // square = sq / det, so orient sq by the sign of det
        let sq = form.square_numer(&k) * form.det.signum() as i128;
        let better = |cur: &(i128, Vec<i64>)| sq > cur.0 || (sq == cur.0 && k < cur.1);
        match best.get(&key) {
            Some(cur) if !better(cur) => {}
            _ => {
                best.insert(key, (sq, k));
            }
        }
    }
    if best.len() as i64 != form.order {
        return Err(Error::Internal(format!(
            "found {} classes with maximising paths, expected |det Q| = {}",
            best.len(),
            form.order
        )));
    }
    let mut out: Vec<Maximizer> = best
        .into_iter()
        .map(|(_, (sq, k))| Maximizer {
            class: form.class_unchecked(k.clone()),
            covector: CharCovector(k),
            square: BigRational::new(BigInt::from(sq), BigInt::from(form.order)),
        })
        .collect();
    out.sort_by(|a, b| a.covector.cmp(&b.covector));
    Ok(out)
}

/// Correction terms of every class (unlabeled).
#[derive(Debug, Clone)]
pub struct DInvariants {
    form: FormData,
    entries: Vec<(Maximizer, BigRational)>,
    by_key: HashMap<Vec<i64>, usize>,
    /// Present when distinct classes have distinct images in `coker(Q)`,
    /// which holds for odd `D`.
    by_c1: Option<HashMap<Vec<i64>, usize>>,
}

pub fn d_invariants(graph: &PlumbingGraph) -> Result<DInvariants> {
    let form = FormData::new(graph)?;
    let maxes = enumerate_maximizers(&form)?;
    let nverts = BigRational::from(BigInt::from(graph.len()));
    let four = BigRational::from(BigInt::from(4));
    let entries: Vec<(Maximizer, BigRational)> = maxes
        .into_iter()
        .map(|m| {
            let d = (&m.square + &nverts) / &four;
            (m, d)
        })
        .collect();
    let by_key = entries.iter().enumerate().map(|(i, (m, _))| (m.class.key.clone(), i)).collect();
    let by_c1: HashMap<Vec<i64>, usize> =
        entries.iter().enumerate().map(|(i, (m, _))| (m.class.c1.clone(), i)).collect();
    let by_c1 = (by_c1.len() == entries.len()).then_some(by_c1);
    Ok(DInvariants { form, entries, by_key, by_c1 })
}

impl DInvariants {
    pub fn form(&self) -> &FormData {
        &self.form
    }

    pub fn order(&self) -> i64 {
        self.form.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Classes with their maximiser and correction term, sorted by maximiser.
    pub fn iter(&self) -> impl Iterator<Item = (&Maximizer, &BigRational)> {
        self.entries.iter().map(|(m, d)| (m, d))
    }

    fn entry_for_key(&self, key: &[i64]) -> &(Maximizer, BigRational) {
        &self.entries[self.by_key[key]]
    }

    fn entry_for(&self, k: &CharCovector) -> Result<&(Maximizer, BigRational)> {
        if !k.is_characteristic(&self.form.graph) {
            return Err(Error::Unsupported(format!("{k} is not characteristic")));
        }
        Ok(self.entry_for_key(&self.form.key(&k.0)))
    }

    /// The enumerated class containing the characteristic covector `k`.
    pub fn class_of(&self, k: &CharCovector) -> Result<&SpinClass> {
        Ok(&self.entry_for(k)?.0.class)
    }

    pub fn d_of(&self, k: &CharCovector) -> Result<&BigRational> {
        Ok(&self.entry_for(k)?.1)
    }

    pub fn maximizer_of(&self, c: &SpinClass) -> &Maximizer {
        &self.entry_for_key(&c.key).0
    }

    pub fn d_of_class(&self, c: &SpinClass) -> &BigRational {
        &self.entry_for_key(&c.key).1
    }

    /// The first class, in maximiser order, of covectors with `K Q⁻¹`
    /// integral. Unique when `D` is odd.
    pub fn zero_class(&self) -> Result<&SpinClass> {
        self.entries
            .iter()
            .map(|(m, _)| &m.class)
            .find(|c| c.is_zero())
            .ok_or_else(|| Error::Unsupported("no characteristic covector lies in Im(Q)".into()))
    }

    /// First class, in maximiser order, whose image has additive order `D`.
    pub fn unit_class(&self) -> Result<&SpinClass> {
        if self.by_c1.is_none() {
            return Err(Error::Unsupported("classes are not determined by their image in coker(Q)".into()));
        }
        self.entries
            .iter()
            .map(|(m, _)| &m.class)
            .find(|c| self.form.class_order(c) == self.form.order)
            .ok_or_else(|| Error::Unsupported("coker(Q) is not cyclic".into()))
    }

    /// Labels classes by `φ(i) = [i·g]`.
    pub fn label_by_unit(&self, g: &SpinClass) -> Result<DInvariantTable> {
        let by_c1 = self
            .by_c1
            .as_ref()
            .ok_or_else(|| Error::Unsupported("classes are not determined by their image in coker(Q)".into()))?;
        let ord = self.form.class_order(g);
        if ord != self.form.order {
            return Err(Error::Unsupported(format!(
                "class {} has order {}, not {}",
                g.representative, ord, self.form.order
            )));
        }
        let mut labels = Vec::with_capacity(self.form.order as usize);
        let mut d = Vec::with_capacity(self.form.order as usize);
        for i in 0..self.form.order {
            let (m, dv) = &self.entries[by_c1[&self.form.scale_key(&g.c1, i)]];
            labels.push(m.class.clone());
            d.push(dv.clone());
        }
        Ok(DInvariantTable { unit: self.maximizer_of(g).class.clone(), labels, d })
    }
}

/// Correction terms indexed by `ℤ/D` through a chosen unit.
#[derive(Debug, Clone)]
pub struct DInvariantTable {
    unit: SpinClass,
    labels: Vec<SpinClass>,
    d: Vec<BigRational>,
}

impl DInvariantTable {
    pub fn order(&self) -> i64 {
        self.d.len() as i64
    }

    pub fn unit(&self) -> &SpinClass {
        &self.unit
    }

    /// `d(φ(i))`, index taken mod `D`.
    pub fn d(&self, i: i64) -> &BigRational {
        &self.d[i.rem_euclid(self.order()) as usize]
    }

    pub fn label(&self, i: i64) -> &SpinClass {
        &self.labels[i.rem_euclid(self.order()) as usize]
    }

    pub fn values(&self) -> &[BigRational] {
        &self.d
    }

    /// The table for the labelling `i ↦ φ(ℓ i)`.
    pub fn relabel(&self, ell: i64) -> DInvariantTable {
        let n = self.order();
        DInvariantTable {
            unit: self.label(ell).clone(),
            labels: (0..n).map(|i| self.label(i * ell).clone()).collect(),
            d: (0..n).map(|i| self.d(i * ell).clone()).collect(),
        }
    }

    /// `d(i) = d(−i)` for all `i`.
    pub fn is_conjugation_symmetric(&self) -> bool {
        (0..self.order()).all(|i| self.d(i) == self.d(-i))
    }
}
