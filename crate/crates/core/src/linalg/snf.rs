use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Smith normal form: `U · M · V = diag(d₁, d₂, …)` with `d₁ | d₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Invariant factors, non-negative, length `min(rows, cols)`; zeros trail.
    pub diagonal: Vec<BigInt>,
    pub rows: usize,
    pub cols: usize,
    /// Left unimodular transform, when requested.
    pub left: Option<IntMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// True when the cokernel `ℤ^rows / im(M)` is the zero group.
    pub fn cokernel_is_trivial(&self) -> bool {
        self.rank() == self.rows && self.diagonal.iter().all(|d| d.is_one())
    }

    /// Nontrivial torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }

    pub fn free_rank(&self) -> usize {
        self.rows - self.rank()
    }

    /// Whether `v` lies in the ℤ-span of the columns of the decomposed matrix.
    /// Requires the left transform.
    pub fn column_span_contains(&self, v: &[BigInt]) -> Result<bool> {
        let u = self.left.as_ref().ok_or_else(|| Error::Internal("Smith form computed without transform".into()))?;
        if v.len() != self.rows {
            return Err(Error::Dimension("membership vector".into()));
        }
        let uv: Vec<BigInt> = (0..self.rows).map(|i| u.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect();
        let rank = self.rank();
        Ok(uv.iter().enumerate().all(|(i, x)| if i < rank { x.is_multiple_of(&self.diagonal[i]) } else { x.is_zero() }))
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    reduce(m, false)
}

pub fn smith_normal_form_with_transform(m: &IntMatrix) -> SmithForm {
    reduce(m, true)
}

fn reduce(m: &IntMatrix, track: bool) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut u: Option<Vec<Vec<BigInt>>> = track.then(|| IntMatrix::identity(rows).to_rows());
    let steps = rows.min(cols);

    for t in 0..steps {
        loop {
            // smallest non-zero pivot in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap(t, pi);
            }
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(&mut a, i, t, &q);
                if let Some(u) = u.as_mut() {
                    row_axpy(u, i, t, &q);
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    row_axpy(&mut a, t, i, &BigInt::from(-1));
                    if let Some(u) = u.as_mut() {
                        row_axpy(u, t, i, &BigInt::from(-1));
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_mut() {
                for x in u[t].iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }

    SmithForm {
        diagonal: (0..steps).map(|i| a[i][i].clone()).collect(),
        rows,
        cols,
        left: u.map(|u| IntMatrix::from_rows(&u).expect("square transform")),
    }
}

/// `row[dst] -= q * row[src]`
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let src_row = a[src].clone();
    for (x, s) in a[dst].iter_mut().zip(src_row.iter()) {
        *x -= q * s;
    }
}
