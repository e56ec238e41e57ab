//! Search for an integral `A` with `−AAᵗ = Q_K ⊕ R_n` in the normal form of
//! Greene's theorem: last two rows `(x_{r+2}, …, x₃, 1, 0)` and
//! `(0, …, 0, −1, 1)`, `x` non-negative with `x₃ ≤ 1` and
//! `xᵢ ≤ x₃ + … + x_{i−1} + 1` for `3 < i < r + 2`, and the `r × r` block
//! on the non-special columns unimodular.
//!
//! Orthogonality to the last row forces each of the first `r` rows to carry
//! one value `c` in both special columns, so a row is `(u, c, c)` with
//! `|u|² + 2c² = −Q_ii`. Orthogonality to the `x` row gives `B x = −c` for
//! `B = (u_i)`, so once `B` is known and unimodular, `x` is determined.
//! The search therefore enumerates only the rows `(u_i, c_i)`.
//!
//! Signed permutations of the non-special columns preserve every constraint,
//! so columns never touched by an earlier row are filled canonically:
//! positive, non-increasing, packed to the left. `B` must be invertible
//! modulo every prime, which prunes dependent partial row sets early.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

/// Which of `±Σ(K)` bounds the plumbing in the gluing argument. The algebra
/// of the search is the same; the tag records which hypothesis was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossingSign {
    NegativeCase,
    PositiveCase,
}

impl fmt::Display for CrossingSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossingSign::NegativeCase => "negative",
            CrossingSign::PositiveCase => "positive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreeneConstraints {
    pub r: usize,
    pub n: i64,
    pub crossing_sign: CrossingSign,
}

impl GreeneConstraints {
    pub fn new(r: usize, n: i64, crossing_sign: CrossingSign) -> Result<Self> {
        if n < 1 {
            return Err(Error::Unsupported(format!("R_n needs n >= 1, got {n}")));
        }
        Ok(GreeneConstraints { r, n, crossing_sign })
    }
}

/// An `(r+2) × (r+2)` matrix in the normal form described above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub e: IntMatrix,
}

impl EmbeddingCertificate {
    /// `(x₃, …, x_{r+2})`.
    pub fn x_values(&self) -> Vec<i64> {
        let r = self.e.rows() - 2;
        (0..r).rev().map(|j| self.e[(r, j)].to_i64().expect("small entries")).collect()
    }

    /// Checks every defining property by direct computation.
    pub fn verify(&self, q: &IntMatrix, n: i64) -> Result<()> {
        let r = q.rows();
        let e = &self.e;
        let fail = |msg: &str| Err(Error::Internal(format!("invalid certificate: {msg}")));
        if e.rows() != r + 2 || e.cols() != r + 2 {
            return fail("wrong size");
        }
        let rn = IntMatrix::from_rows(&[vec![-n, 1], vec![1, -2]])?;
        if e.mul(&e.transpose())?.neg() != q.direct_sum(&rn) {
            return fail("-EE^t differs from Q + R_n");
        }
        let int = |i: usize, j: usize| e[(i, j)].to_i64().unwrap_or(i64::MAX);
        if (0..r).any(|j| int(r + 1, j) != 0) || int(r + 1, r) != -1 || int(r + 1, r + 1) != 1 {
            return fail("last row shape");
        }
        if int(r, r) != 1 || int(r, r + 1) != 0 {
            return fail("x row shape");
        }
        let x = self.x_values();
        if !changemaker(&x) {
            return fail("x violates the monotonicity condition");
        }
        let block = e.submatrix(0..r, 0..r);
        if !linalg::det(&block)?.abs().is_one() {
            return fail("leading block not unimodular");
        }
        Ok(())
    }
}

/// `x = (x₃, …, x_{r+2})`: non-negative, `x₃ ≤ 1`, and
/// `xᵢ ≤ x₃ + … + x_{i−1} + 1` for `3 < i < r + 2`.
pub fn changemaker(x: &[i64]) -> bool {
    if x.iter().any(|&v| v < 0) {
        return false;
    }
    if x.first().is_some_and(|&v| v > 1) {
        return false;
    }
    let mut sum = 0i64;
    for (idx, &v) in x.iter().enumerate() {
        // the last entry, x_{r+2}, is unconstrained
        if idx > 0 && idx + 1 < x.len() && v > sum + 1 {
            return false;
        }
        sum += v;
    }
    true
}

/// Work counters of one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub complete_bases: u64,
}

pub fn greene_search(q: &IntMatrix, n: i64, c: &GreeneConstraints) -> Result<Option<EmbeddingCertificate>> {
    greene_search_with_stats(q, n, c).map(|(cert, _)| cert)
}

pub fn greene_search_with_stats(
    q: &IntMatrix,
    n: i64,
    c: &GreeneConstraints,
) -> Result<(Option<EmbeddingCertificate>, SearchStats)> {
    let r = q.rows();
    if !q.is_square() || !q.is_symmetric() {
        return Err(Error::Dimension("Q_K must be square and symmetric".into()));
    }
    if c.r != r || c.n != n {
        return Err(Error::Dimension(format!("constraints (r={}, n={}) do not match Q_K (r={r}, n={n})", c.r, c.n)));
    }
    if !linalg::sylvester_negdef(q) {
        return Err(Error::NotNegativeDefinite);
    }
    let det = linalg::det(q)?.abs();
    if det != BigInt::from(2 * n - 1) {
        return Err(Error::Dimension(format!("|det Q_K| = {det} but 2n - 1 = {}", 2 * n - 1)));
    }
    let qv = q.to_i64_rows().ok_or(Error::Overflow("Q_K entries"))?;
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&i| -qv[i][i]);
    let mut s = Search {
        r,
        n,
        q: &qv,
        order,
        rows: Vec::with_capacity(r),
        used: 0,
        echelons: PRIMES.iter().map(|&p| ModEchelon::new(p, r)).collect(),
        stats: SearchStats::default(),
    };
    let cert = s.descend()?;
    if let Some(cert) = &cert {
        cert.verify(q, n)?;
    }
    Ok((cert, s.stats))
}

const PRIMES: [u64; 3] = [2, 3, 1_000_000_007];

/// Incremental row echelon form over `𝔽_p`.
#[derive(Debug, Clone)]
struct ModEchelon {
    p: u64,
    width: usize,
    basis: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    fn new(p: u64, width: usize) -> Self {
        ModEchelon { p, width, basis: Vec::new() }
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat
        let (mut base, mut e, mut acc) = (a % self.p, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            e >>= 1;
        }
        acc
    }

    /// Reduced, normalised row if `v` is independent of the basis.
    fn reduce(&self, v: &[i64]) -> Option<(usize, Vec<u64>)> {
        let p = self.p;
        let mut w: Vec<u64> = v.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        for (piv, row) in &self.basis {
            let f = w[*piv];
            if f == 0 {
                continue;
            }
            for j in 0..self.width {
                let sub = (f as u128 * row[j] as u128 % p as u128) as u64;
                w[j] = (w[j] + p - sub) % p;
            }
        }
        let piv = w.iter().position(|&x| x != 0)?;
        let inv = self.inv(w[piv]);
        for x in w.iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        Some((piv, w))
    }
}

struct Row {
    u: Vec<i64>,
    c: i64,
    /// `suffix[j] = Σ_{j' ≥ j} u[j']²`
    suffix: Vec<i64>,
}

struct Search<'a> {
    r: usize,
    n: i64,
    q: &'a [Vec<i64>],
    order: Vec<usize>,
    rows: Vec<Row>,
    /// Columns `0..used` have been touched by some row.
    used: usize,
    echelons: Vec<ModEchelon>,
    stats: SearchStats,
}

fn isqrt(x: i64) -> i64 {
    if x <= 0 {
        return 0;
    }
    let mut s = (x as f64).sqrt() as i64;
    while s * s > x {
        s -= 1;
    }
    while (s + 1) * (s + 1) <= x {
        s += 1;
    }
    s
}

/// Non-increasing positive `a` with `Σ a² = total`, at most `slots` parts,
/// each at most `cap`.
fn square_partitions(total: i64, slots: usize, cap: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if total == 0 {
        out.push(prefix.clone());
        return;
    }
    if slots == 0 {
        return;
    }
    let top = isqrt(total).min(cap);
    for a in (1..=top).rev() {
        // the remaining parts are at most `a`
        if (slots as i64) * a * a < total {
            break;
        }
        prefix.push(a);
        square_partitions(total - a * a, slots - 1, a, prefix, out);
        prefix.pop();
    }
}

impl Search<'_> {
    /// Candidate `(u, c)` for the next vertex in placement order.
    fn candidates(&self) -> Vec<(Vec<i64>, i64)> {
        let t = self.rows.len();
        let v = self.order[t];
        let norm = -self.q[v][v];
        let cmax = isqrt(norm / 2);
        let mut out = Vec::new();
        for c in -cmax..=cmax {
            let rem = norm - 2 * c * c;
            let targets: Vec<i64> = (0..t).map(|s| -self.q[v][self.order[s]] - 2 * c * self.rows[s].c).collect();
            let mut partial = vec![0i64; t];
            let mut u = vec![0i64; self.r];
            self.fill_used(0, rem, &targets, &mut partial, &mut u, c, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_used(
        &self,
        j: usize,
        rem: i64,
        targets: &[i64],
        partial: &mut [i64],
        u: &mut Vec<i64>,
        c: i64,
        out: &mut Vec<(Vec<i64>, i64)>,
    ) {
        if j == self.used {
            if partial != targets {
                return;
            }
            let mut parts = Vec::new();
            square_partitions(rem, self.r - self.used, i64::MAX, &mut Vec::new(), &mut parts);
            for p in parts {
                let mut full = u.clone();
                full[self.used..self.used + p.len()].copy_from_slice(&p);
                out.push((full, c));
            }
            return;
        }
        let b = isqrt(rem);
        for a in -b..=b {
            let nrem = rem - a * a;
            let mut ok = true;
            for (s, row) in self.rows.iter().enumerate() {
                partial[s] += a * row.u[j];
            }
            for (s, row) in self.rows.iter().enumerate() {
                let gap = (targets[s] - partial[s]) as i128;
                if gap * gap > nrem as i128 * row.suffix[j + 1] as i128 {
                    ok = false;
                    break;
                }
            }
            if ok {
                u[j] = a;
                self.fill_used(j + 1, nrem, targets, partial, u, c, out);
                u[j] = 0;
            }
            for (s, row) in self.rows.iter().enumerate() {
                partial[s] -= a * row.u[j];
            }
        }
    }

    /// Depth-first over placement order; stops at the first success.
    fn descend(&mut self) -> Result<Option<EmbeddingCertificate>> {
        self.stats.nodes += 1;
        if self.rows.len() == self.r {
            self.stats.complete_bases += 1;
            return Ok(self.finish()?.map(|x| self.certificate(&x)));
        }
        for (u, c) in self.candidates() {
            let mut reduced = Vec::with_capacity(self.echelons.len());
            for ech in &self.echelons {
                match ech.reduce(&u) {
                    Some(row) => reduced.push(row),
                    None => break,
                }
            }
            if reduced.len() < self.echelons.len() {
                continue;
            }
            for (ech, row) in self.echelons.iter_mut().zip(reduced) {
                ech.basis.push(row);
            }
            let mut suffix = vec![0i64; self.r + 1];
            for j in (0..self.r).rev() {
                suffix[j] = suffix[j + 1] + u[j] * u[j];
            }
            let prev_used = self.used;
            self.used = self.used.max(u.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1));
            self.rows.push(Row { u, c, suffix });

            let found = self.descend()?;

            self.rows.pop();
            self.used = prev_used;
            for ech in self.echelons.iter_mut() {
                ech.basis.pop();
            }
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// With all rows placed: `B` unimodular, `x = −B⁻¹c`, `|x|² = n − 1`,
    /// and the sorted `|x|` must satisfy the monotonicity condition.
    fn finish(&self) -> Result<Option<Vec<i64>>> {
        let r = self.r;
        if r == 0 {
            return Ok((self.n == 1).then(Vec::new));
        }
        let b = IntMatrix::from_rows(&self.rows.iter().map(|row| row.u.clone()).collect::<Vec<_>>())?;
        let (adj, det) = linalg::adjugate(&b)?;
        if !det.abs().is_one() {
            return Ok(None);
        }
        // B x = −c  ⇒  x = −det · adj(B) c
        let cvec: Vec<BigInt> = self.rows.iter().map(|row| BigInt::from(row.c)).collect();
        let x: Vec<i64> = (0..r)
            .map(|i| {
                let s: BigInt = (0..r).map(|j| &adj[(i, j)] * &cvec[j]).sum();
                (-&det * s).to_i64().ok_or(Error::Overflow("Greene x vector"))
            })
            .collect::<Result<_>>()?;
        let norm: i128 = x.iter().map(|&v| v as i128 * v as i128).sum();
        if norm != (self.n - 1) as i128 {
            return Ok(None);
        }
        let mut mags: Vec<i64> = x.iter().map(|v| v.abs()).collect();
        mags.sort_unstable();
        Ok(changemaker(&mags).then_some(x))
    }

    /// Permutes and flips the non-special columns so the `x` row reads
    /// `(x_{r+2}, …, x₃)` with `x₃ ≤ … ≤ x_{r+2}`, rows in vertex order.
    fn certificate(&self, x: &[i64]) -> EmbeddingCertificate {
        let r = self.r;
        let mut cols: Vec<usize> = (0..r).collect();
        cols.sort_by(|&a, &b| x[b].abs().cmp(&x[a].abs()).then(a.cmp(&b)));
        let sign = |j: usize| if x[j] < 0 { -1 } else { 1 };
        let mut e = IntMatrix::zeros(r + 2, r + 2);
        for (t, row) in self.rows.iter().enumerate() {
            let v = self.order[t];
            for (newj, &oldj) in cols.iter().enumerate() {
                e[(v, newj)] = BigInt::from(sign(oldj) * row.u[oldj]);
            }
            e[(v, r)] = BigInt::from(row.c);
            e[(v, r + 1)] = BigInt::from(row.c);
        }
        for (newj, &oldj) in cols.iter().enumerate() {
            e[(r, newj)] = BigInt::from(x[oldj].abs());
        }
        e[(r, r)] = BigInt::from(1);
        e[(r + 1, r)] = BigInt::from(-1);
        e[(r + 1, r + 1)] = BigInt::from(1);
        EmbeddingCertificate { e }
    }
}
