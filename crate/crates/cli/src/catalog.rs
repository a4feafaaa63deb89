//! Built-in link records.

use std::num::NonZeroU32;

use hvs_core::{RatMatrix, SeifertMatrix};

use crate::format::ExactMatrix;
use crate::input::LinkRecord;

const TREFOIL: [[i64; 2]; 2] = [[-1, 0], [-1, -1]];
const FIGURE_EIGHT: [[i64; 2]; 2] = [[1, 1], [0, -1]];
const EIGHT_TWENTY: [[i64; 4]; 4] = [[-1, -1, -1, -1], [0, 0, -1, -1], [0, -1, 0, -1], [0, 0, -1, 0]];

const TEN_99: [[i64; 8]; 8] = [
    [-1, -1, 0, 0, 0, 0, -1, 0],
    [0, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, 0, 0, 0, -1, 0],
    [-1, 0, -1, 1, 0, 1, 0, 0],
    [-1, -1, -1, 1, 1, 1, -1, 1],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, -1, 0, 0, 0, 0, -1, 0],
    [-1, -1, -1, 1, 0, 1, -1, 1],
];

const H_10_99: [[i64; 8]; 8] = [
    [0, 0, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [2, 1, 2, -1, 0, -1, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, -1],
    [-1, -1, -1, 1, 1, 1, -1, 1],
    [1, 0, 1, -1, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, -1, 0, 0, 0],
];

const TWELVE_N106: [[i64; 8]; 8] = [
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [-1, -1, 0, -1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 1, 1],
];

const H_12N106: [[i64; 8]; 8] = [
    [0, -1, 0, 0, 0, 0, 0, 0],
    [1, 1, -1, 0, -1, -1, -1, -1],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, -1, 1, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [-1, -1, 0, -1, 1, 1, 1, 1],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [1, 1, 0, 1, 0, -1, 0, 0],
];

// Standard table matrices of the mirror images; the records store −Sᵀ.
const TWELVE_N508_MIRROR: [[i64; 8]; 8] = [
    [-1, 0, 0, 0, 0, 0, 0, 0],
    [-1, -1, 0, 0, 0, 0, 0, 0],
    [-1, -1, 1, -1, 1, 0, -1, 0],
    [0, 0, 0, -1, 0, 0, -1, 0],
    [0, 0, 0, -1, 1, 0, -1, 0],
    [-1, -1, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 1, 0, -1, 1, -1],
];

const TWELVE_N604_MIRROR: [[i64; 8]; 8] = [
    [-1, 0, -1, -1, -1, -1, 0, -1],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 1, 0, -1, 0, -1, 1, -1],
    [0, 0, -1, 0, -1, -1, 0, -1],
    [0, 1, -1, -1, 0, -1, 1, -1],
    [0, 1, 0, -1, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, -1, 0, -1, -1, 0, 0],
];

const TWELVE_N666_MIRROR: [[i64; 10]; 10] = [
    [1, 0, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, -1, 0, 0, 0, 0, 0, 0, 0],
    [1, -1, -1, 0, 0, 0, -1, 1, 0, 0],
    [1, -1, -1, 1, 0, 0, -1, 1, 1, 0],
    [1, -1, -1, 1, 1, 0, -1, 1, 1, 1],
    [0, -1, -1, 0, 0, 0, -1, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, -1, 1, 0, 0],
    [1, -1, -1, 1, 0, 0, -1, 1, 0, 0],
    [1, -1, -1, 1, 1, 0, -1, 1, 1, 0],
];

const TORUS_DEFAULTS: [(usize, usize); 3] = [(2, 3), (2, 5), (3, 4)];

fn record<R: AsRef<[i64]>>(name: &str, rows: &[R], components: u32, tags: &[&str]) -> LinkRecord {
    let mut r = LinkRecord::new(name, &RatMatrix::from_ints(rows));
    r.components = NonZeroU32::new(components);
    r.tags = tags.iter().map(|t| t.to_string()).collect();
    r
}

fn mirrored<R: AsRef<[i64]>>(name: &str, rows: &[R]) -> LinkRecord {
    let s = SeifertMatrix::from_ints(rows).mirror();
    let mut r = LinkRecord::new(name, s.matrix());
    r.components = NonZeroU32::new(1);
    r.tags = vec!["knot".into(), "mirrored-table".into()];
    r
}

fn with_monodromy<R: AsRef<[i64]>>(mut r: LinkRecord, h: &[R]) -> LinkRecord {
    r.monodromy = Some(ExactMatrix(RatMatrix::from_ints(h)));
    r
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Seifert matrix record of the (p, q) torus link.
pub fn torus(p: usize, q: usize) -> Result<LinkRecord, String> {
    let s = SeifertMatrix::torus(p, q).map_err(|e| e.to_string())?;
    let mut r = LinkRecord::new(format!("T({},{})", p, q), s.matrix());
    let c = gcd(p, q);
    r.components = NonZeroU32::new(c as u32);
    r.tags = vec![if c == 1 { "knot" } else { "link" }.into(), "torus".into()];
    Ok(r)
}

pub fn all() -> Vec<LinkRecord> {
    let mut out = vec![
        record("trefoil", &TREFOIL, 1, &["knot"]),
        record("figure-eight", &FIGURE_EIGHT, 1, &["knot"]),
        record("8_20", &EIGHT_TWENTY, 1, &["knot"]),
    ];
    for n in [-2, -1, 1, 2] {
        out.push(record(&format!("twist({})", n), &[[n]], 2, &["link", "twist"]));
    }
    out.push(with_monodromy(record("10_99", &TEN_99, 1, &["knot"]), &H_10_99));
    out.push(with_monodromy(record("12n106", &TWELVE_N106, 1, &["knot"]), &H_12N106));
    out.push(mirrored("12n508", &TWELVE_N508_MIRROR));
    out.push(mirrored("12n604", &TWELVE_N604_MIRROR));
    out.push(mirrored("12n666", &TWELVE_N666_MIRROR));
    for (p, q) in TORUS_DEFAULTS {
        out.push(torus(p, q).expect("valid torus parameters"));
    }
    out
}

/// Parses "p,q" torus parameters.
pub fn parse_torus(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("invalid torus parameters {:?}; expected p,q", s);
    let (p, q) = s.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

/// A catalog entry by name; `T(p,q)` builds any torus link.
pub fn lookup(name: &str) -> Result<LinkRecord, String> {
    if let Some(args) = name.strip_prefix("T(").and_then(|s| s.strip_suffix(')')) {
        let (p, q) = parse_torus(args)?;
        return torus(p, q);
    }
    all()
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| format!("no catalog entry named {:?}", name))
}
