//! The lens space `L(D, 2)`, `D = 2n − 1 ≡ 1 (mod 4)`, bounded by the
//! two-vertex plumbing with form `R_n = [[−n, 1], [1, −2]]`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::plumbing::{self, CharCovector};

/// Labelling `ψ : ℤ/D → coker(R_n)` by explicit covectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensLabeling {
    pub order: i64,
    pub n: i64,
    pub s: i64,
    psi: Vec<CharCovector>,
}

impl LensLabeling {
    /// `ψ(i)`, index taken mod `D`.
    pub fn psi(&self, i: i64) -> &CharCovector {
        &self.psi[i.rem_euclid(self.order) as usize]
    }

    pub fn covectors(&self) -> &[CharCovector] {
        &self.psi
    }
}

fn check_order(d: i64) -> Result<()> {
    if d < 1 || d % 4 != 1 {
        return Err(Error::Unsupported(format!("lens space L({d},2): only D ≡ 1 (mod 4) is labelled")));
    }
    Ok(())
}

pub fn lens_labels(d: i64) -> Result<LensLabeling> {
    check_order(d)?;
    let s = (d - 1) / 4;
    let psi = (0..d)
        .map(|i| {
            let v = if i <= s {
                vec![2 * i - 1, 2]
            } else if i <= 3 * s + 1 {
                vec![2 * i - 4 * s - 1, 0]
            } else {
                vec![2 * i - 8 * s - 3, 2]
            };
            CharCovector(v)
        })
        .collect();
    Ok(LensLabeling { order: d, n: (d + 1) / 2, s, psi })
}

/// `d(L, ψ(i))` for `i = 0 … D−1`, closed form.
pub fn lens_d(d: i64) -> Result<Vec<BigRational>> {
    check_order(d)?;
    let s = (d - 1) / 4;
    let big = |x: i64| BigInt::from(x);
    Ok((0..d)
        .map(|i| {
            if i <= s {
                BigRational::new(big(-2 * i * i), big(d))
            } else if i <= 3 * s + 1 {
                let t = 2 * i - d;
                BigRational::new(big(-(t * t - d)), big(2 * d))
            } else {
                BigRational::new(big(-2 * (d - i) * (d - i)), big(d))
            }
        })
        .collect())
}

/// `d(L, ψ(i))` computed by the plumbing engine on `R_n`, classes matched
/// through `ψ`.
pub fn lens_d_via_plumbing(d: i64) -> Result<Vec<BigRational>> {
    let labels = lens_labels(d)?;
    let table = plumbing::d_invariants(&plumbing::lens_plumbing(labels.n)?)?;
    labels.psi.iter().map(|k| table.d_of(k).cloned()).collect()
}
