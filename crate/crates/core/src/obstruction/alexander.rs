//! Nakanishi's bound from the second elementary ideal of the Alexander module.
//!
//! The ideal `A₂ ⊂ ℤ[t, t⁻¹]` is generated by the codimension-one minors of
//! `tV − Vᵗ`. When some generator `f` has leading and trailing coefficients
//! `±1`, `ℤ[t, t⁻¹]/(f)` is the free ℤ-module on `1, t, …, t^{deg f − 1}`,
//! and `ℤ[t, t⁻¹]/A₂` is the cokernel of the stacked multiplication matrices
//! of the other generators there.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, smith_normal_form_with_transform, IntMatrix};
use crate::poly::{Poly, PolyMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlexanderStatus {
    NoObstruction,
    UnknottingAtLeast2,
    Indeterminate,
}

impl fmt::Display for AlexanderStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlexanderStatus::NoObstruction => "NoObstruction",
            AlexanderStatus::UnknottingAtLeast2 => "UnknottingAtLeast2",
            AlexanderStatus::Indeterminate => "Indeterminate",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderVerdict {
    pub status: AlexanderStatus,
    /// Distinct non-zero minors, up to units.
    pub generators: Vec<Poly>,
    /// The unit-extreme generator used to build the finite model.
    pub pivot: Option<Poly>,
    /// Invariant factors `≠ 1` of `ℤ[t, t⁻¹]/A₂` as an abelian group.
    pub quotient: Vec<BigInt>,
}

/// Seifert matrix of `P(k, −k, 2m)`:
/// rows `[X, 0, 0, 0]`, `[0, −X, 0, 0]`, `[1, −1, 0, 0]`, `[0, 0, 1, m]`
/// with `X` the `(k−1) × (k−1)` lower-triangular matrix of ones.
pub fn seifert_matrix(k: i64, m: i64) -> Result<IntMatrix> {
    if k < 1 || k % 2 == 0 || m < 1 {
        return Err(Error::Unsupported(format!("Seifert matrix needs odd k >= 1 and m >= 1, got k={k}, m={m}")));
    }
    let b = (k - 1) as usize;
    let n = 2 * b + 2;
    let mut v = IntMatrix::zeros(n, n);
    for i in 0..b {
        for j in 0..=i {
            v[(i, j)] = BigInt::from(1);
            v[(b + i, b + j)] = BigInt::from(-1);
        }
        v[(2 * b, i)] = BigInt::from(1);
        v[(2 * b, b + i)] = BigInt::from(-1);
    }
    v[(2 * b + 1, 2 * b)] = BigInt::from(1);
    v[(2 * b + 1, 2 * b + 1)] = BigInt::from(m);
    Ok(v)
}

/// `tV − Vᵗ`.
pub fn presentation(v: &IntMatrix) -> Result<PolyMatrix> {
    if !v.is_square() {
        return Err(Error::Dimension("Seifert matrix must be square".into()));
    }
    let n = v.rows();
    let rows =
        (0..n).map(|i| (0..n).map(|j| Poly::new(vec![-v[(j, i)].clone(), v[(i, j)].clone()])).collect()).collect();
    PolyMatrix::from_rows(rows)
}

/// `P_k(t) = Σ_{i<k} (−1)^i t^{k−1−i}`.
pub fn alternating_poly(k: usize) -> Poly {
    Poly::new((0..k).map(|d| BigInt::from(if (k - 1 - d).is_multiple_of(2) { 1 } else { -1 })).collect())
}

/// Sign-normalised (positive leading coefficient) with powers of `t` removed.
fn unit_normal(p: &Poly) -> Poly {
    let s = p.strip_t_powers();
    match s.leading() {
        Some(l) if l < &BigInt::from(0) => -&s,
        _ => s,
    }
}

/// The `(n−1)`-minors of `tV − Vᵗ`, non-zero and distinct up to units,
/// in row-major order of first appearance.
pub fn codim_one_minors(v: &IntMatrix) -> Result<Vec<Poly>> {
    let a = presentation(v)?;
    let n = a.size();
    if n == 0 {
        return Ok(Vec::new());
    }
    let dets: Vec<Poly> =
        (0..n * n).into_par_iter().map(|idx| a.minor_matrix(idx / n, idx % n).det()).collect::<Result<_>>()?;
    let mut out: Vec<Poly> = Vec::new();
    for d in dets {
        if d.is_zero() {
            continue;
        }
        let u = unit_normal(&d);
        if !out.contains(&u) {
            out.push(u);
        }
    }
    Ok(out)
}

/// Columns `g·tʲ mod f`, `j < deg f`, for every generator `g`.
fn multiplication_matrix(f: &Poly, gens: &[Poly]) -> Result<IntMatrix> {
    let d = f.degree().unwrap_or(0);
    let mut m = IntMatrix::zeros(d, d * gens.len());
    for (gi, g) in gens.iter().enumerate() {
        let mut cur = g.rem_monic(f)?;
        let t = Poly::monomial(1, 1);
        for j in 0..d {
            for i in 0..d {
                m[(i, gi * d + j)] = cur.coeff(i);
            }
            cur = (&cur * &t).rem_monic(f)?;
        }
    }
    Ok(m)
}

/// Whether `h` lies in the ideal `(f, gens)` of `ℤ[t, t⁻¹]`, for `f` with
/// unit extreme coefficients.
pub fn ideal_contains(f: &Poly, gens: &[Poly], h: &Poly) -> Result<bool> {
    if !f.has_unit_extremes() {
        return Err(Error::Unsupported("ideal membership needs a unit-extreme generator".into()));
    }
    let d = f.degree().unwrap_or(0);
    if d == 0 {
        return Ok(true);
    }
    let m = multiplication_matrix(f, gens)?;
    let snf = smith_normal_form_with_transform(&m);
    let target = h.strip_t_powers().rem_monic(f)?;
    let v: Vec<BigInt> = (0..d).map(|i| target.coeff(i)).collect();
    snf.column_span_contains(&v)
}

pub fn nakanishi_test(v: &IntMatrix) -> Result<AlexanderVerdict> {
    let generators = codim_one_minors(v)?;
    let pivot = generators.iter().filter(|g| g.has_unit_extremes()).min_by_key(|g| g.degree().unwrap_or(0)).cloned();
    let Some(f) = pivot else {
        return Ok(AlexanderVerdict {
            status: AlexanderStatus::Indeterminate,
            generators,
            pivot: None,
            quotient: Vec::new(),
        });
    };
    let quotient = if f.degree() == Some(0) {
        Vec::new()
    } else {
        let m = multiplication_matrix(&f, &generators)?;
        let snf = smith_normal_form(&m);
        let mut q = snf.torsion();
        q.extend(std::iter::repeat_n(BigInt::from(0), snf.free_rank()));
        q
    };
    let status = if quotient.is_empty() { AlexanderStatus::NoObstruction } else { AlexanderStatus::UnknottingAtLeast2 };
    Ok(AlexanderVerdict { status, generators, pivot: Some(f), quotient })
}
