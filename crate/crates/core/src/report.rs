//! Serializable records for classification results and correction-term tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::knot::PretzelKnot;
use crate::lens;
use crate::obstruction::{ObstructionReport, SymmetryOutcome, Verdict};
use crate::plumbing::{self, PlumbingGraph};

pub const SCHEMA_VERSION: &str = "1";

pub const CSV_HEADER: [&str; 10] =
    ["p", "q", "r", "family", "sigma", "detK", "alexander", "greene", "symmetry", "verdict"];

/// Reduced `a/b` with `b > 0`; integers without a denominator.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// One classified knot, flattened for output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub normalized: [i64; 3],
    /// `p + q` of the normalized form; absent for all-odd knots.
    pub family: Option<i64>,
    pub sigma: Option<i64>,
    #[serde(rename = "detK")]
    pub det_k: i64,
    pub case: Option<String>,
    pub alexander: Option<String>,
    pub greene: Option<String>,
    pub symmetry: Option<String>,
    pub verdict: Verdict,
    pub provenance: Vec<String>,
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl ReportRecord {
    pub fn from_report(rep: &ObstructionReport) -> Self {
        let [p, q, r] = rep.knot.params();
        let greene = (!rep.greene.is_empty()).then(|| {
            rep.greene
                .iter()
                .map(|g| format!("{}:{}", g.sign, if g.found() { "found" } else { "absent" }))
                .collect::<Vec<_>>()
                .join(";")
        });
        let symmetry = rep.symmetry.as_ref().map(|s| match s {
            SymmetryOutcome::PassesWith(ls) => {
                format!("PassesWith[{}]", ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            }
            other => other.label().to_string(),
        });
        let mut provenance = rep.notes.clone();
        if let Some(k) = &rep.known_result {
            provenance.insert(0, format!("known result: {k}"));
        }
        ReportRecord {
            p,
            q,
            r,
            normalized: rep.normalized.params(),
            family: rep.family(),
            sigma: rep.sigma,
            det_k: rep.determinant,
            case: rep.signature_case.map(|c| c.label.to_string()),
            alexander: rep.alexander.as_ref().map(|a| a.status.to_string()),
            greene,
            symmetry,
            verdict: rep.verdict,
            provenance,
        }
    }

    pub fn csv_row(&self) -> [String; 10] {
        [
            self.p.to_string(),
            self.q.to_string(),
            self.r.to_string(),
            opt(&self.family),
            opt(&self.sigma),
            self.det_k.to_string(),
            opt(&self.alexander),
            opt(&self.greene),
            opt(&self.symmetry),
            self.verdict.to_string(),
        ]
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let [a, b, c] = self.normalized;
        let _ = writeln!(s, "knot:       P({},{},{})", self.p, self.q, self.r);
        let _ = writeln!(s, "normalized: P({a},{b},{c})");
        let _ = writeln!(s, "detK:       {}", self.det_k);
        let _ = writeln!(s, "sigma:      {}", opt(&self.sigma));
        let _ = writeln!(s, "family:     {}", opt(&self.family));
        let _ = writeln!(s, "case:       {}", opt(&self.case));
        let _ = writeln!(s, "alexander:  {}", opt(&self.alexander));
        let _ = writeln!(s, "greene:     {}", opt(&self.greene));
        let _ = writeln!(s, "symmetry:   {}", opt(&self.symmetry));
        let _ = writeln!(s, "verdict:    {}", self.verdict);
        for note in &self.provenance {
            let _ = writeln!(s, "note:       {note}");
        }
        s
    }
}

/// Verdict counts in a fixed order.
pub fn summarize(records: &[ReportRecord]) -> BTreeMap<Verdict, usize> {
    let mut m = BTreeMap::new();
    for v in [Verdict::UnknotOne, Verdict::NotUnknotOne, Verdict::Undetermined, Verdict::TwoBridgeDeferred] {
        m.insert(v, 0);
    }
    for r in records {
        *m.entry(r.verdict).or_default() += 1;
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DinvRow {
    pub i: i64,
    /// Covector representing the class.
    pub label: String,
    /// Exact value, multiplied by the scale if one was given.
    pub d: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DinvReport {
    pub target: String,
    pub order: i64,
    pub scale: Option<i64>,
    /// Whether rows are indexed by a cyclic labelling; otherwise by
    /// enumeration order.
    pub labelled: bool,
    pub rows: Vec<DinvRow>,
}

fn scaled(x: &BigRational, scale: Option<i64>) -> String {
    match scale {
        Some(s) => format_rational(&(x * BigRational::from(BigInt::from(s)))),
        None => format_rational(x),
    }
}

impl DinvReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# {} order={} scale={}", self.target, self.order, opt(&self.scale));
        for row in &self.rows {
            let _ = writeln!(s, "{}\t{}\t{}", row.i, row.label, row.d);
        }
        s
    }

    pub fn values(&self) -> Vec<&str> {
        self.rows.iter().map(|r| r.d.as_str()).collect()
    }
}

/// `d(L(D,2), ψ(i))`, `D ≡ 1 (mod 4)`.
pub fn dinv_lens(d: i64, scale: Option<i64>) -> Result<DinvReport> {
    let labels = lens::lens_labels(d)?;
    let values = lens::lens_d(d)?;
    let rows = values
        .iter()
        .enumerate()
        .map(|(i, v)| DinvRow { i: i as i64, label: labels.psi(i as i64).to_string(), d: scaled(v, scale) })
        .collect();
    Ok(DinvReport { target: format!("L({d},2)"), order: d, scale, labelled: true, rows })
}

/// `d(Σ(P(k,−k,2m)), φ(i))` with `φ(1) = (2, 0, …, 0, −1)`.
pub fn dinv_pretzel(k: i64, m: i64, scale: Option<i64>) -> Result<DinvReport> {
    let knot = PretzelKnot::new(k, -k, 2 * m)?;
    let g = plumbing::pretzel_plumbing(&knot)?;
    let table = plumbing::d_invariants(&g)?;
    let unit = table.form().class_of(&plumbing::pretzel_unit_covector(&g))?;
    let labelled = table.label_by_unit(&unit)?;
    let rows = (0..labelled.order())
        .map(|i| DinvRow {
            i,
            label: table.maximizer_of(labelled.label(i)).covector.to_string(),
            d: scaled(labelled.d(i), scale),
        })
        .collect();
    Ok(DinvReport { target: format!("Sigma({knot})"), order: labelled.order(), scale, labelled: true, rows })
}

/// Correction terms of the boundary of a plumbing, labelled through
/// `unit_class` when the class group is cyclic.
pub fn dinv_plumbing(g: &PlumbingGraph, scale: Option<i64>) -> Result<DinvReport> {
    let table = plumbing::d_invariants(g)?;
    let target = format!("plumbing on {} vertices", g.len());
    if let Ok(unit) = table.unit_class() {
        let labelled = table.label_by_unit(unit)?;
        let rows = (0..labelled.order())
            .map(|i| DinvRow {
                i,
                label: table.maximizer_of(labelled.label(i)).covector.to_string(),
                d: scaled(labelled.d(i), scale),
            })
            .collect();
        return Ok(DinvReport { target, order: table.order(), scale, labelled: true, rows });
    }
    let rows = table
        .iter()
        .enumerate()
        .map(|(i, (m, d))| DinvRow { i: i as i64, label: m.covector.to_string(), d: scaled(d, scale) })
        .collect();
    Ok(DinvReport { target, order: table.order(), scale, labelled: false, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::classify;

    #[test]
    fn rationals() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(format_rational(&r(-2, 4)), "-1/2");
        assert_eq!(format_rational(&r(6, 3)), "2");
        assert_eq!(format_rational(&r(3, -9)), "-1/3");
        assert_eq!(format_rational(&r(0, 5)), "0");
    }

    #[test]
    fn record_round_trip() {
        let rep = classify(&PretzelKnot::new(5, -5, 2).unwrap()).unwrap();
        let rec = ReportRecord::from_report(&rep);
        let json = serde_json::to_string(&rec).unwrap();
        let back: ReportRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert_eq!(rec.csv_row()[8], "FailsAllUnits");
        assert_eq!(rec.csv_row()[9], "NotUnknotOne");
    }

    #[test]
    fn lens_prefix() {
        let rep = dinv_lens(25, Some(25)).unwrap();
        assert_eq!(rep.values()[..7], ["0", "-2", "-8", "-18", "-32", "-50", "-72"]);
    }

    #[test]
    fn pretzel_prefix() {
        let rep = dinv_pretzel(5, 1, Some(25)).unwrap();
        assert_eq!(rep.values()[..7], ["0", "22", "-12", "-2", "2", "0", "42"]);
        assert!(rep.labelled);
    }
}
