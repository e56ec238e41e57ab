//! Combines the knot-level criteria and the three obstructions into a verdict.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::alexander::{nakanishi_test, seifert_matrix, AlexanderVerdict};
use super::greene::{greene_search, CrossingSign, EmbeddingCertificate, GreeneConstraints};
use super::symmetry::{symmetry_obstruction, SymmetryOutcome};
use crate::error::Result;
use crate::knot::{self, CaseLabel, PretzelKnot, SignatureCase};
use crate::plumbing::{self, pretzel_plumbing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    UnknotOne,
    NotUnknotOne,
    Undetermined,
    TwoBridgeDeferred,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::UnknotOne => "UnknotOne",
            Verdict::NotUnknotOne => "NotUnknotOne",
            Verdict::Undetermined => "Undetermined",
            Verdict::TwoBridgeDeferred => "TwoBridgeDeferred",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreeneResult {
    pub sign: CrossingSign,
    pub certificate: Option<EmbeddingCertificate>,
}

impl GreeneResult {
    pub fn found(&self) -> bool {
        self.certificate.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub knot: PretzelKnot,
    /// Canonical representative (see [`knot::normalize`]).
    pub normalized: PretzelKnot,
    pub reflected: bool,
    pub determinant: i64,
    /// `None` for all-odd knots.
    pub sigma: Option<i64>,
    pub signature_case: Option<SignatureCase>,
    pub alexander: Option<AlexanderVerdict>,
    pub greene: Vec<GreeneResult>,
    pub symmetry: Option<SymmetryOutcome>,
    pub known_result: Option<String>,
    pub verdict: Verdict,
    /// Which rule decided, and the assumptions it used.
    pub notes: Vec<String>,
}

impl ObstructionReport {
    fn new(k: &PretzelKnot) -> Self {
        let (normalized, reflected) = knot::normalize(k);
        ObstructionReport {
            knot: *k,
            normalized,
            reflected,
            determinant: k.determinant(),
            sigma: knot::signature(&normalized).ok(),
            signature_case: None,
            alexander: None,
            greene: Vec::new(),
            symmetry: None,
            known_result: None,
            verdict: Verdict::Undetermined,
            notes: Vec::new(),
        }
    }

    fn decide(mut self, v: Verdict, note: impl Into<String>) -> Self {
        self.verdict = v;
        self.notes.push(note.into());
        self
    }

    /// `p + q` of the normalized form, when one parameter is even.
    pub fn family(&self) -> Option<i64> {
        (!self.normalized.is_all_odd()).then(|| self.normalized.p() + self.normalized.q())
    }
}

const LSPACE_NOTE: &str = "assumes the double branched cover is an L-space";

/// A parameter `x` can lose one crossing, becoming `x − 2·sgn(x)`; if that
/// gives a trivial knot, one crossing change unknots `k`.
fn explicit_unknotting(k: &PretzelKnot) -> Option<PretzelKnot> {
    let v = k.params();
    (0..3).find_map(|i| {
        if v[i] == 0 {
            return None;
        }
        let mut w = v;
        w[i] -= 2 * w[i].signum();
        let c = PretzelKnot::new(w[0], w[1], w[2]).ok()?;
        c.is_unknot().then_some(c)
    })
}

fn zero_class_d(g: &plumbing::PlumbingGraph) -> Result<BigRational> {
    let t = plumbing::d_invariants(g)?;
    Ok(t.d_of_class(t.zero_class()?).clone())
}

pub fn classify(k: &PretzelKnot) -> Result<ObstructionReport> {
    let mut rep = ObstructionReport::new(k);
    let [p, q, r] = k.params();

    if k.is_unknot() {
        return Ok(rep.decide(Verdict::NotUnknotOne, "trivial knot (unknotting number 0)"));
    }
    if k.is_all_odd() {
        let yes = knot::u1_all_odd(p, q, r);
        rep.known_result = Some("all-odd criterion".into());
        let v = if yes { Verdict::UnknotOne } else { Verdict::NotUnknotOne };
        return Ok(rep.decide(v, "decided by the all-odd pair criterion"));
    }
    if let Some(i) = k.params().iter().position(|&x| x == 0) {
        let others: Vec<i64> = (0..3).filter(|&j| j != i).map(|j| k.params()[j]).collect();
        rep.known_result = Some("connected sum of torus knots".into());
        let v = if knot::u1_r_zero(others[0], others[1]) { Verdict::UnknotOne } else { Verdict::NotUnknotOne };
        return Ok(rep.decide(v, "r = 0: u = 1 exactly when pq = ±3"));
    }

    let nk = rep.normalized;
    let sigma = knot::signature(&nk)?;
    if sigma.abs() >= 4 {
        return Ok(rep.decide(Verdict::NotUnknotOne, format!("|σ| = {} >= 4", sigma.abs())));
    }
    if let Some(c) = explicit_unknotting(&nk) {
        return Ok(rep.decide(Verdict::UnknotOne, format!("one crossing change gives {c}, a trivial knot")));
    }
    if nk.is_two_bridge() {
        return Ok(rep.decide(Verdict::TwoBridgeDeferred, "two-bridge knot, not treated here"));
    }
    let (p, q, r) = (nk.p(), nk.q(), nk.r());
    if !(p > 0 && q < 0) {
        return Ok(rep.decide(Verdict::Undetermined, "odd parameters of equal sign with |σ| < 4"));
    }
    let case = knot::case_classify(&nk)?;
    rep.signature_case = Some(case);

    match case.label {
        CaseLabel::Case1 => {
            let g = pretzel_plumbing(&nk)?;
            let d = nk.determinant();
            let n = (d + 1) / 2;
            let d_sigma = zero_class_d(&g)?;
            let d_lens = zero_class_d(&plumbing::lens_plumbing(n)?)?;
            if d_sigma != -d_lens.clone() {
                return Ok(rep.decide(
                    Verdict::Undetermined,
                    format!("d(Σ,0) = {d_sigma} is not -d(L,0) = {}; embedding test not applicable", -d_lens),
                ));
            }
            let q_k = g.intersection_form();
            let c = GreeneConstraints::new(q_k.rows(), n, CrossingSign::NegativeCase)?;
            let cert = greene_search(&q_k, n, &c)?;
            let found = cert.is_some();
            rep.greene.push(GreeneResult { sign: CrossingSign::NegativeCase, certificate: cert });
            rep.notes.push(LSPACE_NOTE.into());
            if found {
                Ok(rep.decide(Verdict::Undetermined, "lattice embedding exists; no obstruction"))
            } else {
                Ok(rep.decide(Verdict::NotUnknotOne, "σ = 2 and no lattice embedding of Q ⊕ R_n"))
            }
        }
        CaseLabel::Case2 => {
            let m = r / 2;
            let alex = nakanishi_test(&seifert_matrix(p, m)?)?;
            let obstructed = alex.status == super::alexander::AlexanderStatus::UnknottingAtLeast2;
            rep.alexander = Some(alex);
            if obstructed {
                return Ok(rep.decide(Verdict::NotUnknotOne, "second elementary ideal is proper"));
            }
            if m != 1 {
                return Ok(rep.decide(Verdict::Undetermined, "Alexander module gives no obstruction"));
            }
            let g = pretzel_plumbing(&nk)?;
            let d = nk.determinant();
            let n = (d + 1) / 2;
            rep.notes.push(LSPACE_NOTE.into());

            let d_sigma = zero_class_d(&g)?;
            let d_lens = crate::lens::lens_d(d)?[0].clone();
            let positive_blocked = if d_sigma == -&d_lens {
                let q_k = g.intersection_form();
                let c = GreeneConstraints::new(q_k.rows(), n, CrossingSign::PositiveCase)?;
                let cert = greene_search(&q_k, n, &c)?;
                let absent = cert.is_none();
                rep.greene.push(GreeneResult { sign: CrossingSign::PositiveCase, certificate: cert });
                absent
            } else {
                false
            };
            let sym = symmetry_obstruction(&g, d)?;
            let negative_blocked = sym == SymmetryOutcome::FailsAllUnits;
            rep.symmetry = Some(sym);
            if positive_blocked && negative_blocked {
                Ok(rep.decide(
                    Verdict::NotUnknotOne,
                    "positive crossing: no lattice embedding; negative crossing: d-invariant symmetry fails for every unit",
                ))
            } else {
                Ok(rep.decide(Verdict::Undetermined, "some crossing-sign scenario is unobstructed"))
            }
        }
        CaseLabel::Case3a | CaseLabel::Case3b | CaseLabel::Case4 => {
            Ok(rep.decide(Verdict::Undetermined, format!("p + q = {}: no applicable obstruction", case.n)))
        }
        CaseLabel::RuledOut4 | CaseLabel::RuledOutLarge => {
            Ok(rep.decide(Verdict::NotUnknotOne, format!("{}: |σ| >= 4", case.label)))
        }
    }
}
