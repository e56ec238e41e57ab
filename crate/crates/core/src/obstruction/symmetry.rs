//! The correction-term symmetry test for `D = k² ≡ 1 (mod 4)`.
//!
//! If `Σ` is half-integral surgery on a knot, some labelling `i ↦ φ(iℓ)` of
//! its classes makes
//! `Z(i) = d(Σ, φ(iℓ)) − d(Σ, φ(2sℓ − iℓ)) − d(L, ψ(i)) + d(L, ψ(2s − i))`
//! vanish for `i = 0 … s`, `D = 4s + 1`.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lens;
use crate::plumbing::{self, DInvariantTable, PlumbingGraph};

/// Units `ℓ mod k²` with `ℓ² ≡ 6k + 4`.
pub fn congruence_filter(k: i64) -> Vec<i64> {
    let d = k * k;
    let target = (6 * k + 4).rem_euclid(d);
    (0..d).filter(|&l| l.gcd(&k) == 1 && (l * l) % d == target).collect()
}

/// `(a, r, A)` with `ℓ = ak + r`, `r` even (replacing `ℓ` by `−ℓ` if needed)
/// and `r² = Ak + 4`.
pub fn decompose_ell(ell: i64, k: i64) -> Result<(i64, i64, i64)> {
    let d = k * k;
    if k < 3 || k % 2 == 0 || ell.gcd(&k) != 1 {
        return Err(Error::Unsupported(format!("decompose needs odd k >= 3 and a unit, got ({ell}, {k})")));
    }
    let mut l = ell.rem_euclid(d);
    if (l % k) % 2 != 0 {
        l = (d - l) % d;
    }
    let r = l % k;
    let a = (l - r) / k;
    if (r * r - 4) % k != 0 {
        return Err(Error::Unsupported(format!("{ell} fails the congruence mod {d}")));
    }
    let big_a = (r * r - 4) / k;
    if (big_a + 2 * a * r - 6).rem_euclid(k) != 0 {
        return Err(Error::Internal(format!("A + 2ar ≢ 6 (mod {k}) for ℓ = {ell}")));
    }
    // 0 ≤ r − A < k/4 + 1; the bound needs k ≥ 5
    if k >= 5 && !(r - big_a >= 0 && 4 * (r - big_a) < k + 4) {
        return Err(Error::Internal(format!("r − A out of range for ℓ = {ell}, k = {k}")));
    }
    Ok((a, r, big_a))
}

/// `Z(i)` for the labelled `Σ` table and the lens table `d(L, ψ(·))`.
pub fn compute_z(i: i64, ell: i64, d_sigma: &DInvariantTable, d_lens: &[BigRational]) -> Result<BigRational> {
    let d = d_sigma.order();
    if d_lens.len() as i64 != d {
        return Err(Error::Dimension(format!("tables of orders {d} and {}", d_lens.len())));
    }
    if d % 4 != 1 {
        return Err(Error::Unsupported(format!("order {d} is not 1 mod 4")));
    }
    let s = (d - 1) / 4;
    let dl = |j: i64| &d_lens[j.rem_euclid(d) as usize];
    Ok(d_sigma.d(i * ell) - d_sigma.d(2 * s * ell - i * ell) - dl(i) + dl(2 * s - i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymmetryOutcome {
    /// Units `ℓ` (in `0 … D−1`) for which every `Z(i)` vanishes.
    PassesWith(Vec<i64>),
    FailsAllUnits,
    /// `d(Σ, 0) ≠ d(L, ψ(0))`, so the test does not apply.
    NotApplicable,
}

impl SymmetryOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SymmetryOutcome::PassesWith(_) => "PassesWith",
            SymmetryOutcome::FailsAllUnits => "FailsAllUnits",
            SymmetryOutcome::NotApplicable => "NotApplicable",
        }
    }
}

/// Units passing the full `Z` test for a labelled table.
pub fn passing_units(d_sigma: &DInvariantTable, d_lens: &[BigRational]) -> Result<Vec<i64>> {
    let d = d_sigma.order();
    let s = (d - 1) / 4;
    let units: Vec<i64> = (0..d).filter(|l| l.gcd(&d) == 1).collect();
    let results: Vec<Option<i64>> = units
        .par_iter()
        .map(|&l| {
            for i in 0..=s {
                if !compute_z(i, l, d_sigma, d_lens)?.is_zero() {
                    return Ok(None);
                }
            }
            Ok(Some(l))
        })
        .collect::<Result<_>>()?;
    Ok(results.into_iter().flatten().collect())
}

/// Runs the test on the plumbing `g` bounding `Σ`, with `|det Q| = d`.
/// Classes are labelled through `unit_class`.
pub fn symmetry_obstruction(g: &PlumbingGraph, d: i64) -> Result<SymmetryOutcome> {
    let table = plumbing::d_invariants(g)?;
    symmetry_obstruction_with_unit(&table, d, table.unit_class()?.clone())
}

/// As [`symmetry_obstruction`], labelling by a chosen class of order `D`.
pub fn symmetry_obstruction_with_unit(
    table: &plumbing::DInvariants,
    d: i64,
    unit: plumbing::SpinClass,
) -> Result<SymmetryOutcome> {
    if table.order() != d {
        return Err(Error::Dimension(format!("|det Q| = {} but D = {d}", table.order())));
    }
    let d_lens = lens::lens_d(d)?;
    if table.d_of_class(table.zero_class()?) != &d_lens[0] {
        return Ok(SymmetryOutcome::NotApplicable);
    }
    let labelled = table.label_by_unit(&unit)?;
    let passing = passing_units(&labelled, &d_lens)?;
    Ok(if passing.is_empty() { SymmetryOutcome::FailsAllUnits } else { SymmetryOutcome::PassesWith(passing) })
}
