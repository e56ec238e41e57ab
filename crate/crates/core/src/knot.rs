//! Pretzel knots, their Goeritz forms and signatures.
//!
//! The standard diagram of `P(p, q, r)` with `r` even has a two-region
//! Goeritz form `[[p + r, -p], [-p, p + q]]`. The Gordon–Litherland
//! correction for that diagram is `μ = p + q`: with `p > 0 > q` and
//! `n = p + q`, this is the only linear choice that reproduces all five
//! rows of the signature case table
//!
//! | n  | det G | σ  |
//! |----|-------|----|
//! | -2 |       | 2  |
//! | 0  |       | 0  |
//! | 2  | < 0   | -2 |
//! | 2  | > 0   | 0  |
//! | 4  | > 0   | -2 |
//!
//! (each row gives `sgn G − σ = n`). For same-sign `p, q` it also gives
//! `|μ| = |p| + |q|`, the crossing count of the two odd columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted absolute value of a twist parameter.
pub const PARAM_LIMIT: i64 = 1_000_000;

/// The pretzel knot `P(p, q, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PretzelKnot {
    p: i64,
    q: i64,
    r: i64,
}

impl PretzelKnot {
    /// Validates parity (all odd, or exactly one even) and the parameter bound.
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        if [p, q, r].iter().any(|x| x.abs() > PARAM_LIMIT) {
            return Err(Error::InvalidKnot(format!("P({p},{q},{r}): parameters must satisfy |x| <= {PARAM_LIMIT}")));
        }
        let evens = [p, q, r].iter().filter(|x| *x % 2 == 0).count();
        if evens > 1 {
            return Err(Error::InvalidKnot(format!("P({p},{q},{r}) has {evens} even parameters and is a link")));
        }
        Ok(PretzelKnot { p, q, r })
    }

    pub fn params(&self) -> [i64; 3] {
        [self.p, self.q, self.r]
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn reflection(&self) -> PretzelKnot {
        PretzelKnot { p: -self.p, q: -self.q, r: -self.r }
    }

    pub fn is_all_odd(&self) -> bool {
        self.params().iter().all(|x| x % 2 != 0)
    }

    /// Some parameter is `±1`, so the double branched cover is a lens space.
    pub fn is_two_bridge(&self) -> bool {
        self.params().iter().any(|x| x.abs() == 1)
    }

    /// `det K = |pq + pr + qr|`.
    pub fn determinant(&self) -> i64 {
        let (p, q, r) = (self.p as i128, self.q as i128, self.r as i128);
        (p * q + p * r + q * r).unsigned_abs() as i64
    }

    /// Two-bridge knots are trivial exactly when their determinant is 1.
    pub fn is_unknot(&self) -> bool {
        self.is_two_bridge() && self.determinant() == 1
    }
}

impl fmt::Display for PretzelKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{},{})", self.p, self.q, self.r)
    }
}

/// Permutes (and reflects, when one parameter is even) into the canonical form.
///
/// All-odd triples are sorted descending. Otherwise the even parameter is
/// moved last and made non-negative by reflecting, and the odd parameters are
/// sorted descending. The flag records whether a reflection happened.
pub fn normalize(k: &PretzelKnot) -> (PretzelKnot, bool) {
    if k.is_all_odd() {
        let mut v = k.params();
        v.sort_unstable_by(|a, b| b.cmp(a));
        return (PretzelKnot { p: v[0], q: v[1], r: v[2] }, false);
    }
    let params = k.params();
    let even_at = params.iter().position(|x| x % 2 == 0).expect("one even parameter");
    let reflected = params[even_at] < 0;
    let sign = if reflected { -1 } else { 1 };
    let mut odd: Vec<i64> = params.iter().enumerate().filter(|(i, _)| *i != even_at).map(|(_, x)| sign * x).collect();
    odd.sort_unstable_by(|a, b| b.cmp(a));
    (PretzelKnot { p: odd[0], q: odd[1], r: sign * params[even_at] }, reflected)
}

/// Goeritz form of the standard checkerboard diagram, region order (X₁, X₂).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzForm {
    pub entries: [[i64; 2]; 2],
}

impl GoeritzForm {
    pub fn det(&self) -> i64 {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.entries[0][0] + self.entries[1][1]
    }

    /// Signature of the symmetric form from determinant and trace signs.
    pub fn signature(&self) -> i64 {
        let (d, t) = (self.det(), self.trace());
        match d.signum() {
            1 => 2 * t.signum(),
            -1 => 0,
            // rank one (or zero): the sign of the surviving eigenvalue
            _ => t.signum(),
        }
    }
}

fn even_last(k: &PretzelKnot) -> Result<(i64, i64, i64)> {
    if k.is_all_odd() {
        return Err(Error::Unsupported(format!("{k} has no even parameter")));
    }
    let v = k.params();
    Ok(match v.iter().position(|x| x % 2 == 0).expect("one even parameter") {
        0 => (v[1], v[2], v[0]),
        1 => (v[0], v[2], v[1]),
        _ => (v[0], v[1], v[2]),
    })
}

/// `[[p + r, -p], [-p, p + q]]` with the even parameter taken as `r`.
pub fn goeritz(k: &PretzelKnot) -> Result<GoeritzForm> {
    let (p, q, r) = even_last(k)?;
    Ok(GoeritzForm { entries: [[p + r, -p], [-p, p + q]] })
}

/// `σ(K) = sgn G(K) − μ(K)` with `μ = p + q` (see the module docs).
pub fn signature(k: &PretzelKnot) -> Result<i64> {
    let (p, q, _) = even_last(k)?;
    Ok(goeritz(k)?.signature() - (p + q))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    /// `|σ| = 4`: `n = -4`, or `n = 4` with negative Goeritz determinant.
    RuledOut4,
    Case1,
    Case2,
    Case3a,
    Case3b,
    Case4,
    /// `|n| >= 6`, so `|σ| >= 4` as well. Not one of the five table rows.
    RuledOutLarge,
}

impl CaseLabel {
    pub fn is_ruled_out(&self) -> bool {
        matches!(self, CaseLabel::RuledOut4 | CaseLabel::RuledOutLarge)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::RuledOut4 => "RuledOut4",
            CaseLabel::Case1 => "Case1",
            CaseLabel::Case2 => "Case2",
            CaseLabel::Case3a => "Case3a",
            CaseLabel::Case3b => "Case3b",
            CaseLabel::Case4 => "Case4",
            CaseLabel::RuledOutLarge => "RuledOutLarge",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureCase {
    pub label: CaseLabel,
    /// `p + q`
    pub n: i64,
    pub det_g: i64,
    pub sigma: i64,
}

/// Places a normalized `P(p, q, 2m)` with `p > 0 > q`, `m > 0` in the case table.
pub fn case_classify(k: &PretzelKnot) -> Result<SignatureCase> {
    let (p, q, r) = (k.p, k.q, k.r);
    if r <= 0 || r % 2 != 0 || p <= 0 || q >= 0 {
        return Err(Error::Unsupported(format!("{k} is not of the normalized form P(p,q,2m) with p > 0 > q, m > 0")));
    }
    let n = p + q;
    let det_g = goeritz(k)?.det();
    let sigma = signature(k)?;
    let label = match n {
        -2 => CaseLabel::Case1,
        0 => CaseLabel::Case2,
        2 if det_g < 0 => CaseLabel::Case3a,
        2 => CaseLabel::Case3b,
        4 if det_g > 0 => CaseLabel::Case4,
        -4 | 4 => CaseLabel::RuledOut4,
        _ => CaseLabel::RuledOutLarge,
    };
    Ok(SignatureCase { label, n, det_g, sigma })
}

/// Unknotting number one criterion for all-odd pretzels: one of the pairs
/// `{1,1}`, `{-1,-1}`, `{3,-1}`, `{-3,1}` is a sub-multiset of `{p,q,r}`.
pub fn u1_all_odd(p: i64, q: i64, r: i64) -> bool {
    let v = [p, q, r];
    let has_pair = |a: i64, b: i64| (0..3).any(|i| v[i] == a && (0..3).any(|j| j != i && v[j] == b));
    has_pair(1, 1) || has_pair(-1, -1) || has_pair(3, -1) || has_pair(-3, 1)
}

/// `P(p, q, 0) = T(p,2) # T(q,2)` has unknotting number one iff `pq = ±3`.
pub fn u1_r_zero(p: i64, q: i64) -> bool {
    (p * q).abs() == 3
}
