//! Invariant reports: construction, JSON shape and text rendering.

use std::collections::BTreeMap;
use std::fmt::Write;

use hvs_core::algebra::roots::CircleStatus;
use hvs_core::pipeline::zeta_sweep;
use hvs_core::{EigenInfo, EigenKey, Error, LinkAnalysis, Real, Zeta};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::format::Int;
use crate::input::LinkRecord;

pub const DECIMAL_DIGITS: usize = 64;
pub const FORMAT_VERSION: u32 = 1;
/// Sample count used by `--check-all` on top of any requested points.
pub const CHECK_SWEEP: usize = 24;

/// Outcome of one record, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    CheckFailed,
    Indeterminate,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::InputError => 2,
            Status::Indeterminate => 3,
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::Indeterminate { .. } => Status::Indeterminate,
            Error::Consistency(_) => Status::CheckFailed,
            Error::Dimension(_) | Error::Domain(_) | Error::InvalidTriple(_) => Status::InputError,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    Seifert,
    Monodromy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub format: u32,
    pub precision_bits: usize,
    pub working_precision_bits: usize,
    pub decimal_digits: usize,
    pub comparison_tolerance: String,
}

impl Provenance {
    pub fn new(precision: usize, working: usize) -> Self {
        Provenance {
            tool: "hvs".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            format: FORMAT_VERSION,
            precision_bits: precision,
            working_precision_bits: working,
            decimal_digits: DECIMAL_DIGITS,
            comparison_tolerance: "2^-64 relative; roots certified by disjoint isolating discs".into(),
        }
    }
}

/// Irreducible factor over Q (coefficients lowest degree first), root index
/// and decimal value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub factor: Vec<Int>,
    pub index: usize,
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueEntry {
    pub eigenvalue: Eigenvalue,
    /// "unit-circle", "inside" or "outside".
    pub location: String,
    /// arg λ / 2π in [0, 1).
    pub turn: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_of_unity_order: Option<u64>,
    /// Jordan block size and number of blocks of that size.
    pub jordan_blocks: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNumberEntry {
    /// "p" on the unit circle, "q" inside it.
    pub kind: String,
    pub eigenvalue: Eigenvalue,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<i64>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub alpha: String,
    pub exact: bool,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedPoint {
    pub re: String,
    pub im: String,
    pub exact: bool,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    /// ζ = e^{2πi·turn}.
    pub turn: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nullity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alexander {
    /// Index of the first nonzero polynomial.
    pub m0: usize,
    /// Δ₀, Δ₁, … up to the first unit, integer-primitive, lowest degree first.
    pub polynomials: Vec<Vec<Int>>,
    pub nakanishi_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub route: Route,
    pub dimension: usize,
    pub s0_dim: usize,
    pub eigenvalues: Vec<EigenvalueEntry>,
    pub h_numbers: Vec<HNumberEntry>,
    pub spectrum: Vec<SpectrumPoint>,
    pub extended_spectrum: Vec<ExtendedPoint>,
    pub signatures: Vec<SignatureEntry>,
    pub alexander: Alexander,
    /// Violated necessary conditions for algebraicity.
    pub obstructions: Vec<String>,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub precision: usize,
    /// Requested ζ as turns a/b.
    pub zetas: Vec<(i64, i64)>,
    pub sweep: Option<usize>,
    pub check_all: bool,
    pub from_monodromy: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            precision: hvs_core::DEFAULT_PRECISION,
            zetas: Vec::new(),
            sweep: None,
            check_all: false,
            from_monodromy: false,
        }
    }
}

/// Parses "a/b" as the turn of ζ = e^{2πi·a/b}; ζ = 1 is rejected.
pub fn parse_zeta(s: &str) -> Result<(i64, i64), String> {
    let bad = || format!("invalid ζ {:?}; expected a/b with b > 0 and b not dividing a", s);
    let (a, b) = s.split_once('/').ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if b <= 0 || a % b == 0 {
        return Err(bad());
    }
    Ok((a, b))
}

fn location(s: CircleStatus) -> String {
    match s {
        CircleStatus::On => "unit-circle",
        CircleStatus::Inside => "inside",
        CircleStatus::Outside => "outside",
        CircleStatus::Undecided => "undecided",
    }
    .into()
}

fn descriptor(key: &EigenKey, info: Option<&EigenInfo>) -> Eigenvalue {
    Eigenvalue {
        factor: key.factor.iter().cloned().map(Int).collect(),
        index: key.index,
        decimal: info.map(|i| i.value.to_decimal(DECIMAL_DIGITS)).unwrap_or_default(),
    }
}

fn render_real(x: &Real) -> String {
    x.render(DECIMAL_DIGITS)
}

fn signature_entry(a: &LinkAnalysis, z: &Zeta) -> (SignatureEntry, Option<Error>) {
    let turn = render_real(&z.turn);
    match a.signature(z) {
        Ok(s) => (
            SignatureEntry { turn, sigma: Some(s.sigma), nullity: Some(s.nullity), exact: Some(s.exact), error: None },
            None,
        ),
        Err(e) => (
            SignatureEntry { turn, sigma: None, nullity: None, exact: None, error: Some(e.to_string()) },
            Some(e),
        ),
    }
}

/// Sample points for the cross-checks.
fn check_zetas(a: &LinkAnalysis, listed: &[Zeta], check_all: bool) -> Vec<Zeta> {
    let mut out = listed.to_vec();
    if check_all {
        out.extend(zeta_sweep(CHECK_SWEEP, &a.jordan));
        for info in a.h.classes.values() {
            if info.unity_order.is_some() && info.turn.is_exact() && !info.turn.is_integer() {
                out.push(Zeta::from_turn(info.turn.clone()));
            }
        }
    }
    out
}

fn components_check(record: &LinkRecord) -> Option<CheckEntry> {
    let c = record.components?.get() as usize;
    let s = &record.seifert.0;
    let nullity = s.rows() - (s - &s.transpose()).rank();
    let passed = nullity + 1 == c;
    Some(CheckEntry {
        name: "components = 1 + nullity of S − Sᵀ".into(),
        passed,
        detail: if passed { String::new() } else { format!("{} components declared, nullity {}", c, nullity) },
    })
}

fn analyse(record: &LinkRecord, opts: &ReportOptions) -> Result<(LinkAnalysis, Route), (Status, String)> {
    if opts.from_monodromy {
        let (h, v) = record.monodromy_pair().map_err(|e| (Status::InputError, e))?;
        LinkAnalysis::from_monodromy(&h, &v, opts.precision)
            .map(|a| (a, Route::Monodromy))
            .map_err(|e| (Status::of_error(&e), e.to_string()))
    } else {
        LinkAnalysis::run(&record.seifert_matrix(), opts.precision)
            .map(|a| (a, Route::Seifert))
            .map_err(|e| (Status::of_error(&e), e.to_string()))
    }
}

pub fn build(record: &LinkRecord, opts: &ReportOptions) -> InvariantReport {
    let (a, route) = match analyse(record, opts) {
        Ok(x) => x,
        Err((status, msg)) => {
            return InvariantReport {
                name: record.name.clone(),
                status,
                error: Some(msg),
                invariants: None,
                provenance: Provenance::new(opts.precision, opts.precision),
            }
        }
    };
    let mut status = Status::Ok;
    let mut errors = Vec::new();

    let mut eigenvalues = Vec::new();
    for f in &a.jordan.factors {
        for info in &f.roots {
            eigenvalues.push(EigenvalueEntry {
                eigenvalue: descriptor(&info.key, Some(info)),
                location: location(info.status),
                turn: render_real(&info.turn),
                root_of_unity_order: info.unity_order,
                jordan_blocks: f.partition.sizes.iter().map(|(&k, &c)| (k, c)).collect(),
            });
        }
    }
    let mut h_numbers = Vec::new();
    for ((key, k, u), &count) in &a.h.p {
        h_numbers.push(HNumberEntry {
            kind: "p".into(),
            eigenvalue: descriptor(key, a.h.classes.get(key)),
            k: *k,
            u: Some(u.value()),
            count,
        });
    }
    for ((key, k), &count) in &a.h.q {
        h_numbers.push(HNumberEntry {
            kind: "q".into(),
            eigenvalue: descriptor(key, a.h.classes.get(key)),
            k: *k,
            u: None,
            count,
        });
    }
    let spectrum = a
        .spectrum
        .sp
        .iter()
        .map(|(x, m)| SpectrumPoint { alpha: render_real(x), exact: x.is_exact(), multiplicity: *m })
        .collect();
    let extended_spectrum = a
        .spectrum
        .isp
        .iter()
        .map(|(x, y, m)| ExtendedPoint {
            re: render_real(x),
            im: render_real(y),
            exact: x.is_exact() && y.is_exact(),
            multiplicity: *m,
        })
        .collect();

    let mut listed: Vec<Zeta> = opts
        .zetas
        .iter()
        .map(|&(p, q)| Zeta::root_of_unity(p, q).expect("validated turn"))
        .collect();
    if let Some(n) = opts.sweep {
        listed.extend(zeta_sweep(n, &a.jordan));
    }
    let mut signatures = Vec::new();
    for z in &listed {
        let (entry, err) = signature_entry(&a, z);
        if let Some(e) = err {
            status = status.max(Status::of_error(&e));
            errors.push(e.to_string());
        }
        signatures.push(entry);
    }

    let mut checks: Vec<CheckEntry> = a
        .cross_checks(&check_zetas(&a, &listed, opts.check_all))
        .into_iter()
        .map(|c| CheckEntry { name: c.name, passed: c.passed, detail: c.detail })
        .collect();
    if route == Route::Seifert {
        checks.extend(components_check(record));
    }
    if checks.iter().any(|c| !c.passed) {
        status = status.max(Status::CheckFailed);
    }

    let alexander = Alexander {
        m0: a.tower.m0,
        polynomials: a
            .tower
            .polys
            .iter()
            .map(|p| if p.is_zero() { Vec::new() } else { p.int_coeffs().into_iter().map(Int).collect() })
            .collect(),
        nakanishi_index: a.nakanishi,
    };
    InvariantReport {
        name: record.name.clone(),
        status,
        error: if errors.is_empty() { None } else { Some(errors.join("; ")) },
        invariants: Some(Invariants {
            route,
            dimension: a.hvs.dim(),
            s0_dim: a.s0_dim,
            eigenvalues,
            h_numbers,
            spectrum,
            extended_spectrum,
            signatures,
            alexander,
            obstructions: a.obstructions.iter().map(|o| o.to_string()).collect(),
            checks,
        }),
        provenance: Provenance::new(opts.precision, a.precision),
    }
}

/// Cuts every run of fractional digits to `digits`.
pub fn shorten(decimal: &str, digits: usize) -> String {
    let mut out = String::new();
    let mut frac: Option<usize> = None;
    for c in decimal.chars() {
        match (c.is_ascii_digit(), frac) {
            (true, Some(n)) => {
                if n < digits {
                    out.push(c);
                }
                frac = Some(n + 1);
            }
            _ => {
                frac = if c == '.' { Some(0) } else { None };
                out.push(c);
            }
        }
    }
    out
}

pub fn poly_text(coeffs: &[Int]) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.0.is_zero() {
            continue;
        }
        let neg = c.0 < num_bigint::BigInt::zero();
        let mag = if neg { -c.0.clone() } else { c.0.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag == num_bigint::BigInt::from(1);
        match i {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !unit {
                    out.push_str(&mag.to_string());
                }
                out.push('t');
                if i > 1 {
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
    }
    out
}

fn sign_text(u: i64) -> &'static str {
    if u > 0 {
        "+1"
    } else {
        "-1"
    }
}

/// Human-readable rendering of one report.
pub fn render_text(r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "== {} ==", r.name);
    let Some(inv) = &r.invariants else {
        let _ = writeln!(s, "error ({:?}): {}", r.status, r.error.as_deref().unwrap_or(""));
        return s;
    };
    let route = match inv.route {
        Route::Seifert => "Seifert matrix",
        Route::Monodromy => "monodromy",
    };
    let _ = writeln!(s, "dimension {}, dim S0 = {}, from the {}", inv.dimension, inv.s0_dim, route);
    let mut labels: BTreeMap<(Vec<Int>, usize), String> = BTreeMap::new();
    let _ = writeln!(s, "eigenvalues:");
    if inv.eigenvalues.is_empty() {
        let _ = writeln!(s, "  none");
    }
    for (i, e) in inv.eigenvalues.iter().enumerate() {
        let label = format!("λ{}", i + 1);
        labels.insert((e.eigenvalue.factor.clone(), e.eigenvalue.index), label.clone());
        let blocks: Vec<String> = e.jordan_blocks.iter().map(|(k, c)| format!("{}x{}", c, k)).collect();
        let order = e.root_of_unity_order.map(|n| format!(", order {}", n)).unwrap_or_default();
        let _ = writeln!(
            s,
            "  {} = {}  factor {}, {}, turn {}{}, blocks {}",
            label,
            shorten(&e.eigenvalue.decimal, 12),
            poly_text(&e.eigenvalue.factor),
            e.location,
            shorten(&e.turn, 12),
            order,
            blocks.join(" ")
        );
    }
    let _ = writeln!(s, "H-numbers:");
    if inv.h_numbers.is_empty() {
        let _ = writeln!(s, "  none");
    }
    for h in &inv.h_numbers {
        let label = labels
            .get(&(h.eigenvalue.factor.clone(), h.eigenvalue.index))
            .cloned()
            .unwrap_or_else(|| format!("[{}]", poly_text(&h.eigenvalue.factor)));
        match h.u {
            Some(u) => {
                let _ = writeln!(s, "  p^{}_{}({}) = {}", h.k, label, sign_text(u), h.count);
            }
            None => {
                let _ = writeln!(s, "  q^{}_{} = {}", h.k, label, h.count);
            }
        }
    }
    let sp: Vec<String> = inv
        .spectrum
        .iter()
        .map(|p| {
            let a = shorten(&p.alpha, 12);
            if p.multiplicity == 1 {
                a
            } else {
                format!("{} (x{})", a, p.multiplicity)
            }
        })
        .collect();
    let _ = writeln!(s, "Sp: {{{}}}", sp.join(", "));
    let isp: Vec<String> = inv
        .extended_spectrum
        .iter()
        .map(|p| {
            let z = format!("{} {}i", shorten(&p.re, 12), {
                let im = shorten(&p.im, 12);
                match im.strip_prefix('-') {
                    Some(m) => format!("- {}", m),
                    None => format!("+ {}", im),
                }
            });
            if p.multiplicity == 1 {
                z
            } else {
                format!("{} (x{})", z, p.multiplicity)
            }
        })
        .collect();
    let _ = writeln!(s, "ISp: {{{}}}", isp.join(", "));
    if !inv.signatures.is_empty() {
        let _ = writeln!(s, "signatures:");
        for g in &inv.signatures {
            match (&g.error, g.sigma, g.nullity) {
                (None, Some(sigma), Some(n)) => {
                    let _ = writeln!(s, "  ζ = exp(2πi·{}): σ = {}, n = {}", shorten(&g.turn, 12), sigma, n);
                }
                (err, _, _) => {
                    let _ = writeln!(s, "  ζ = exp(2πi·{}): {}", shorten(&g.turn, 12), err.as_deref().unwrap_or("unavailable"));
                }
            }
        }
    }
    let _ = writeln!(s, "Alexander polynomials (m0 = {}):", inv.alexander.m0);
    for (i, p) in inv.alexander.polynomials.iter().enumerate() {
        let _ = writeln!(s, "  Δ{} = {}", i, poly_text(p));
    }
    let _ = writeln!(s, "Nakanishi index: {}", inv.alexander.nakanishi_index);
    if inv.obstructions.is_empty() {
        let _ = writeln!(s, "algebraicity obstructions: none");
    } else {
        let _ = writeln!(s, "algebraicity obstructions: {}", inv.obstructions.join("; "));
    }
    let passed = inv.checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(s, "checks: {}/{} passed", passed, inv.checks.len());
    for c in inv.checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(s, "  FAILED {}: {}", c.name, c.detail);
    }
    if let Some(e) = &r.error {
        let _ = writeln!(s, "errors: {}", e);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_severity() {
        let indeterminate = Error::Indeterminate { precision: 64, what: "x".into() };
        assert_eq!(Status::of_error(&indeterminate).exit_code(), 3);
        assert_eq!(Status::of_error(&Error::Domain("x".into())).exit_code(), 2);
        assert_eq!(Status::of_error(&Error::Consistency("x".into())).exit_code(), 1);
        assert_eq!(Status::Ok.max(Status::CheckFailed).max(Status::Indeterminate), Status::Indeterminate);
        assert_eq!(Status::Indeterminate.max(Status::InputError).exit_code(), 2);
    }

    #[test]
    fn zeta_parsing() {
        assert_eq!(parse_zeta("3/8"), Ok((3, 8)));
        assert!(parse_zeta("4/2").is_err());
        assert!(parse_zeta("1/-2").is_err());
        assert!(parse_zeta("x").is_err());
    }

    #[test]
    fn text_helpers() {
        let c: Vec<Int> = [1, -4, 0, 1].iter().map(|&x| Int(x.into())).collect();
        assert_eq!(poly_text(&c), "1 - 4t + t^3");
        assert_eq!(shorten("0.123456 - 1.500000i", 2), "0.12 - 1.50i");
    }
}
