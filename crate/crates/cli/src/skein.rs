//! Skein-triple and semicontinuity reports.

use std::fmt::Write;

use hvs_core::skein::{check_semicontinuity, check_signature_skein, validate_triple};
use hvs_core::{Hypothesis, LinkAnalysis, Order, Real, SemicontinuityVerdict, SkeinAnalysis, SkeinTriple, Verdict, Zeta};
use serde::{Deserialize, Serialize};

use crate::format::{ExactMatrix, Int};
use crate::input::LinkRecord;
use crate::report::{Provenance, Status};

/// Default sample points of the signature skein bounds.
pub const DEFAULT_ZETAS: [(i64, i64); 6] = [(1, 2), (1, 3), (1, 4), (1, 6), (2, 5), (3, 8)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Infinite {
    #[serde(rename = "inf")]
    Inf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderEntry {
    Finite(usize),
    Infinite(Infinite),
}

impl From<Order> for OrderEntry {
    fn from(o: Order) -> Self {
        match o {
            Order::Finite(k) => OrderEntry::Finite(k),
            Order::Infinite => OrderEntry::Infinite(Infinite::Inf),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    /// Irreducible factor f; orders d_k = ord_f Δ_k.
    pub factor: Vec<Int>,
    pub at_one: bool,
    pub plus: Vec<OrderEntry>,
    pub minus: Vec<OrderEntry>,
    pub zero: Vec<OrderEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub rule: String,
    pub at: String,
    pub index: usize,
    pub holds: bool,
    /// False for bounds reported but not required to hold.
    pub binding: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl From<&Verdict> for VerdictEntry {
    fn from(v: &Verdict) -> Self {
        VerdictEntry {
            rule: v.rule.to_string(),
            at: v.at.clone(),
            index: v.index,
            holds: v.holds,
            binding: v.binding,
            detail: v.detail.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleMatrices {
    pub plus: ExactMatrix,
    pub minus: ExactMatrix,
    pub zero: ExactMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// S₊ − S₋ at the corner.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<TripleMatrices>,
    pub tables: Vec<TableEntry>,
    pub verdicts: Vec<VerdictEntry>,
    pub checked: usize,
    pub violations: usize,
    pub non_binding_failures: usize,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemicontinuityOut {
    pub status: Status,
    pub l1: String,
    pub l2: String,
    pub hypothesis: String,
    pub x: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg2: Option<usize>,
    /// "holds", "violated", "hypotheses-not-met", "refused" or "error".
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inside1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inside2: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count_identity: Option<bool>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SkeinReport {
    Triple(TripleReport),
    Semicontinuity(SemicontinuityOut),
}

impl SkeinReport {
    pub fn status(&self) -> Status {
        match self {
            SkeinReport::Triple(t) => t.status,
            SkeinReport::Semicontinuity(s) => s.status,
        }
    }
}

pub fn parse_hypothesis(s: &str) -> Result<Hypothesis, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "a" => Ok(Hypothesis::A),
        "b" => Ok(Hypothesis::B),
        "c" => Ok(Hypothesis::C),
        _ => Err(format!("invalid hypothesis {:?}; expected a, b or c", s)),
    }
}

fn failed_triple(status: Status, msg: String, precision: usize) -> TripleReport {
    TripleReport {
        status,
        error: Some(msg),
        n: None,
        corner: None,
        matrices: None,
        tables: Vec::new(),
        verdicts: Vec::new(),
        checked: 0,
        violations: 0,
        non_binding_failures: 0,
        provenance: Provenance::new(precision, precision),
    }
}

fn triple_verdicts(t: &SkeinTriple, zetas: &[Zeta], precision: usize) -> hvs_core::Result<(SkeinAnalysis, Vec<Verdict>)> {
    let a = SkeinAnalysis::new(t)?;
    let mut all = a.check_all();
    all.extend(check_signature_skein(t, zetas, precision)?);
    all.extend(a.check_tower_against_jordan(precision)?);
    Ok((a, all))
}

/// Checks a triple; `minus` and `zero` default to the matrices derived from S₊.
pub fn check_triple(
    plus: &LinkRecord,
    minus: Option<&LinkRecord>,
    zero: Option<&LinkRecord>,
    zetas: &[(i64, i64)],
    precision: usize,
) -> TripleReport {
    let sp = plus.seifert_matrix();
    let triple = match (minus, zero) {
        (Some(m), Some(z)) => validate_triple(&sp, &m.seifert_matrix(), &z.seifert_matrix()),
        (None, None) => SkeinTriple::from_plus(&sp),
        _ => return failed_triple(Status::InputError, "give both S₋ and S₀ or neither".into(), precision),
    };
    let t = match triple {
        Ok(t) => t,
        Err(e) => return failed_triple(Status::of_error(&e), e.to_string(), precision),
    };
    let zs: Vec<Zeta> = zetas.iter().map(|&(a, b)| Zeta::root_of_unity(a, b).expect("validated turn")).collect();
    let (a, verdicts) = match triple_verdicts(&t, &zs, precision) {
        Ok(x) => x,
        Err(e) => return failed_triple(Status::of_error(&e), e.to_string(), precision),
    };
    let violations = verdicts.iter().filter(|v| v.is_violation()).count();
    let non_binding_failures = verdicts.iter().filter(|v| !v.binding && !v.holds).count();
    TripleReport {
        status: if violations > 0 { Status::CheckFailed } else { Status::Ok },
        error: None,
        n: Some(t.n()),
        corner: Some(t.corner),
        matrices: Some(TripleMatrices {
            plus: ExactMatrix(t.plus.matrix().clone()),
            minus: ExactMatrix(t.minus.matrix().clone()),
            zero: ExactMatrix(t.zero.matrix().clone()),
        }),
        tables: a
            .tables
            .iter()
            .map(|d| TableEntry {
                factor: d.factor.primitive_integer().into_iter().map(Int).collect(),
                at_one: d.at_one(),
                plus: d.plus.iter().map(|&o| o.into()).collect(),
                minus: d.minus.iter().map(|&o| o.into()).collect(),
                zero: d.zero.iter().map(|&o| o.into()).collect(),
            })
            .collect(),
        checked: verdicts.len(),
        violations,
        non_binding_failures,
        verdicts: verdicts.iter().map(VerdictEntry::from).collect(),
        provenance: Provenance::new(precision, precision),
    }
}

pub fn check_pair(l1: &LinkRecord, l2: &LinkRecord, hypothesis: Hypothesis, x: &Real, precision: usize) -> SemicontinuityOut {
    let mut out = SemicontinuityOut {
        status: Status::Ok,
        l1: l1.name.clone(),
        l2: l2.name.clone(),
        hypothesis: hypothesis.to_string(),
        x: x.render(crate::report::DECIMAL_DIGITS),
        deg1: None,
        deg2: None,
        verdict: "error".into(),
        inside1: None,
        inside2: None,
        reason: None,
        count_identity: None,
        provenance: Provenance::new(precision, precision),
    };
    let analyses = LinkAnalysis::run(&l1.seifert_matrix(), precision)
        .and_then(|a| LinkAnalysis::run(&l2.seifert_matrix(), precision).map(|b| (a, b)));
    let (a1, a2) = match analyses {
        Ok(x) => x,
        Err(e) => {
            out.status = Status::of_error(&e);
            out.reason = Some(e.to_string());
            return out;
        }
    };
    let r = check_semicontinuity(&a1, &a2, hypothesis, x);
    out.deg1 = Some(r.deg1);
    out.deg2 = Some(r.deg2);
    out.count_identity = r.count_identity;
    match r.verdict {
        SemicontinuityVerdict::Holds { inside1, inside2 } => {
            out.verdict = "holds".into();
            out.inside1 = Some(inside1);
            out.inside2 = Some(inside2);
        }
        SemicontinuityVerdict::Violated { inside1, inside2 } => {
            out.status = Status::CheckFailed;
            out.verdict = "violated".into();
            out.inside1 = Some(inside1);
            out.inside2 = Some(inside2);
        }
        SemicontinuityVerdict::HypothesesNotMet(reason) => {
            out.verdict = "hypotheses-not-met".into();
            out.reason = Some(reason);
        }
        SemicontinuityVerdict::Refused { reason, .. } => {
            out.status = Status::InputError;
            out.verdict = "refused".into();
            out.reason = Some(reason);
        }
    }
    if out.count_identity == Some(false) {
        out.status = out.status.max(Status::CheckFailed);
    }
    out
}

fn orders(seq: &[OrderEntry]) -> String {
    let v: Vec<String> = seq
        .iter()
        .map(|o| match o {
            OrderEntry::Finite(k) => k.to_string(),
            OrderEntry::Infinite(_) => "inf".into(),
        })
        .collect();
    v.join(" ")
}

pub fn render_text(r: &SkeinReport) -> String {
    let mut s = String::new();
    match r {
        SkeinReport::Triple(t) => {
            let _ = writeln!(s, "== skein triple ==");
            if let Some(e) = &t.error {
                let _ = writeln!(s, "error ({:?}): {}", t.status, e);
                return s;
            }
            let _ = writeln!(s, "n = {}, corner S₊ − S₋ = {}", t.n.unwrap_or(0), t.corner.unwrap_or(0));
            for d in &t.tables {
                let _ = writeln!(s, "d_k for {}:", crate::report::poly_text(&d.factor));
                let _ = writeln!(s, "  L+: {}", orders(&d.plus));
                let _ = writeln!(s, "  L-: {}", orders(&d.minus));
                let _ = writeln!(s, "  L0: {}", orders(&d.zero));
            }
            let _ = writeln!(
                s,
                "{} checks, {} violations, {} non-binding failures",
                t.checked, t.violations, t.non_binding_failures
            );
            for v in t.verdicts.iter().filter(|v| !v.holds) {
                let tag = if v.binding { "VIOLATED" } else { "non-binding" };
                let _ = writeln!(s, "  {} {} at {} (k = {}): {}", tag, v.rule, v.at, v.index, v.detail);
            }
        }
        SkeinReport::Semicontinuity(p) => {
            let _ = writeln!(s, "== semicontinuity: {} vs {} ==", p.l1, p.l2);
            let _ = writeln!(s, "hypothesis ({}), x = {}", p.hypothesis, crate::report::shorten(&p.x, 12));
            if let (Some(d1), Some(d2)) = (p.deg1, p.deg2) {
                let _ = writeln!(s, "deg Δ₁ = {}, deg Δ₂ = {}", d1, d2);
            }
            let _ = write!(s, "verdict: {}", p.verdict);
            if let (Some(a), Some(b)) = (p.inside1, p.inside2) {
                let _ = write!(s, " (#ESp₁ ∩ H_x = {}, #ESp₂ ∩ H_x = {})", a, b);
            }
            if let Some(reason) = &p.reason {
                let _ = write!(s, ": {}", reason);
            }
            let _ = writeln!(s);
            if let Some(c) = p.count_identity {
                let _ = writeln!(s, "count identity: {}", if c { "holds" } else { "FAILS" });
            }
        }
    }
    s
}
