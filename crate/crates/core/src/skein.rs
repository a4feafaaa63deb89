//! Crossing changes: order tables d_k of the higher Alexander polynomials of a
//! skein triple, the inequalities between them, signature and P_N bounds, and
//! semicontinuity of the extended spectrum.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::polymat::{determinantal_divisor, invariant_factors, PolyMatrix};
use crate::algebra::{squarefree_factor_q, RatMatrix, RatPoly, Real};
use crate::error::{Error, Result};
use crate::invariants::{
    alexander_tower, nakanishi_from_tower, tower_matches_jordan, tristram_levine_direct, AlexanderTower, Order, Zeta,
};
use crate::jordan::jordan_of_matrix;
use crate::pipeline::LinkAnalysis;
use crate::seifert::{build_hvs, split_degenerate, SeifertMatrix};
use crate::spectra::halfplane_count;

/// S₊ and S₋ of size n+1 differing only at the corner, S₀ their leading n×n block.
#[derive(Clone, Debug)]
pub struct SkeinTriple {
    pub plus: SeifertMatrix,
    pub minus: SeifertMatrix,
    pub zero: SeifertMatrix,
    /// (S₊ − S₋) at the corner, ±1.
    pub corner: i64,
}

impl SkeinTriple {
    pub fn n(&self) -> usize {
        self.zero.dim()
    }

    /// The triple with S₋ = S₊ − E and S₀ the leading block of S₊.
    pub fn from_plus(plus: &SeifertMatrix) -> Result<Self> {
        let m = plus.dim();
        if m == 0 {
            return Err(Error::InvalidTriple("S₊ must have positive size".into()));
        }
        let minus = plus.matrix() - &corner(m);
        let zero = plus.matrix().leading(m - 1);
        validate_triple(plus, &SeifertMatrix::new(minus)?, &SeifertMatrix::new(zero)?)
    }
}

pub fn validate_triple(sp: &SeifertMatrix, sm: &SeifertMatrix, s0: &SeifertMatrix) -> Result<SkeinTriple> {
    let m = sp.dim();
    if m == 0 || sm.dim() != m || s0.dim() + 1 != m {
        return Err(Error::InvalidTriple(format!(
            "sizes {}, {}, {} are not n+1, n+1, n",
            sp.dim(),
            sm.dim(),
            s0.dim()
        )));
    }
    let d = sp.matrix() - sm.matrix();
    let mut corner = 0;
    for i in 0..m {
        for j in 0..m {
            let v = &d[(i, j)];
            if v.is_zero() {
                continue;
            }
            if (i, j) != (m - 1, m - 1) {
                return Err(Error::InvalidTriple(format!("S₊ − S₋ has entry {} at ({}, {})", v, i + 1, j + 1)));
            }
            if !v.is_integer() || !v.abs().is_one() {
                return Err(Error::InvalidTriple(format!("S₊ − S₋ has corner entry {}, expected ±1", v)));
            }
            corner = if v.is_positive() { 1 } else { -1 };
        }
    }
    if corner == 0 {
        return Err(Error::InvalidTriple("S₊ − S₋ vanishes".into()));
    }
    for i in 0..m - 1 {
        for j in 0..m - 1 {
            if s0.matrix()[(i, j)] != sp.matrix()[(i, j)] {
                return Err(Error::InvalidTriple(format!(
                    "S₀ has {} at ({}, {}) where S₊ has {}",
                    s0.matrix()[(i, j)],
                    i + 1,
                    j + 1,
                    sp.matrix()[(i, j)]
                )));
            }
        }
    }
    Ok(SkeinTriple { plus: sp.clone(), minus: sm.clone(), zero: s0.clone(), corner })
}

/// d_k^* = ord_{f} Δ_k^{H_*} for k = 0..=n+2, for one irreducible factor f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkTable {
    pub factor: RatPoly,
    pub plus: Vec<Order>,
    pub minus: Vec<Order>,
    pub zero: Vec<Order>,
}

impl DkTable {
    /// λ = 1, where the corner term (1 − t) vanishes.
    pub fn at_one(&self) -> bool {
        self.factor == RatPoly::from_ints(&[-1, 1])
    }

    /// P_N = number of Jordan blocks of size ≥ N, read off the finite gaps.
    pub fn p_n(seq: &[Order], n: usize) -> usize {
        seq.windows(2)
            .filter(|w| match (w[0], w[1]) {
                (Order::Finite(a), Order::Finite(b)) => a >= b + n,
                _ => false,
            })
            .count()
    }

    /// Largest finite gap d_k − d_{k+1}.
    pub fn max_gap(seq: &[Order]) -> usize {
        seq.windows(2)
            .filter_map(|w| match (w[0], w[1]) {
                (Order::Finite(a), Order::Finite(b)) => a.checked_sub(b),
                _ => None,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        [&self.plus, &self.minus, &self.zero].iter().all(|s| s.iter().all(|&d| d == Order::Finite(0)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// d_k ≥ d_{k+1}
    Monotone,
    /// d_k^0 ≥ d_{k+1}^±
    Simple,
    /// d_k^± ≥ d_{k+1}^0
    SecondOne,
    /// d_k^± ≥ d_{k+1}^∓ for λ ≠ 1
    ThirdOne,
    /// d_k^± ≥ min(d_{k+1}^∓ + 1, d_k^∓) for λ = 1
    FourthOne,
    /// |P_N^+ − P_N^-| ≤ 2N, ≤ 1 for N = 1
    PnBound,
    /// |n_Q(K₊) − n_Q(K₋)| ≤ 1
    Nakanishi,
    /// |σ± − σ₀| + |n± − n₀| ≤ 1
    SignatureSkein,
    /// d_k from the tower equals I(k − m₀) from the Jordan data
    TowerJordan,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Monotone => "monotone",
            Rule::Simple => "d0_k >= d±_{k+1}",
            Rule::SecondOne => "d±_k >= d0_{k+1}",
            Rule::ThirdOne => "d±_k >= d∓_{k+1}",
            Rule::FourthOne => "d±_k >= min(d∓_{k+1}+1, d∓_k)",
            Rule::PnBound => "P_N bound",
            Rule::Nakanishi => "Nakanishi bound",
            Rule::SignatureSkein => "signature skein bound",
            Rule::TowerJordan => "tower against Jordan data",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub rule: Rule,
    /// Irreducible factor or sample point the check refers to.
    pub at: String,
    pub index: usize,
    pub holds: bool,
    /// False for checks outside the range where the bound is proved; a
    /// failure there is reported but is not an error.
    pub binding: bool,
    pub detail: String,
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        self.binding && !self.holds
    }
}

/// Towers of the three pencils and the order tables at every relevant factor.
#[derive(Clone, Debug)]
pub struct SkeinAnalysis {
    pub triple: SkeinTriple,
    pub plus: AlexanderTower,
    pub minus: AlexanderTower,
    pub zero: AlexanderTower,
    pub tables: Vec<DkTable>,
}

impl SkeinAnalysis {
    /// Tables at t − 1 and at every irreducible factor (other than t) of the
    /// first nonzero Alexander polynomials.
    pub fn new(triple: &SkeinTriple) -> Result<Self> {
        let plus = alexander_tower(&triple.plus);
        let minus = alexander_tower(&triple.minus);
        let zero = alexander_tower(&triple.zero);
        let mut factors = vec![RatPoly::from_ints(&[-1, 1])];
        for t in [&plus, &minus, &zero] {
            for (f, _) in squarefree_factor_q(t.first_nonzero().poly())? {
                if f != RatPoly::t() && !factors.contains(&f) {
                    factors.push(f);
                }
            }
        }
        let mut out = SkeinAnalysis { triple: triple.clone(), plus, minus, zero, tables: Vec::new() };
        out.tables = factors.iter().map(|f| out.table(f)).collect();
        Ok(out)
    }

    pub fn table(&self, f: &RatPoly) -> DkTable {
        let len = self.triple.n() + 3;
        let seq = |t: &AlexanderTower| (0..len).map(|k| t.order(k, f)).collect::<Vec<_>>();
        DkTable { factor: f.clone(), plus: seq(&self.plus), minus: seq(&self.minus), zero: seq(&self.zero) }
    }

    pub fn both_knots(&self) -> bool {
        self.triple.plus.looks_like_knot() && self.triple.minus.looks_like_knot()
    }

    /// All order-table, P_N and Nakanishi checks.
    pub fn check_all(&self) -> Vec<Verdict> {
        let mut out = Vec::new();
        for t in &self.tables {
            out.extend(check_dk_inequalities(t));
            out.extend(check_pn_bounds(t));
        }
        if let Some(v) = self.check_nakanishi() {
            out.push(v);
        }
        out
    }

    /// Orders from each tower against the Jordan data of the corresponding monodromy.
    pub fn check_tower_against_jordan(&self, precision: usize) -> Result<Vec<Verdict>> {
        let mut out = Vec::new();
        for (name, s, tower) in [
            ("+", &self.triple.plus, &self.plus),
            ("-", &self.triple.minus, &self.minus),
            ("0", &self.triple.zero, &self.zero),
        ] {
            let hvs = build_hvs(&split_degenerate(s));
            let jordan = jordan_of_matrix(&hvs.h, precision)?;
            let v = tower_matches_jordan(tower, &jordan);
            out.push(Verdict {
                rule: Rule::TowerJordan,
                at: name.into(),
                index: 0,
                holds: v.is_empty(),
                binding: true,
                detail: v.join("; "),
            });
        }
        Ok(out)
    }

    /// The bound on n_Q when both S₊ and S₋ are knot Seifert matrices.
    pub fn check_nakanishi(&self) -> Option<Verdict> {
        if !self.both_knots() {
            return None;
        }
        let (a, b) = (nakanishi_from_tower(&self.plus), nakanishi_from_tower(&self.minus));
        Some(Verdict {
            rule: Rule::Nakanishi,
            at: "knots".into(),
            index: 0,
            holds: a.abs_diff(b) <= 1,
            binding: true,
            detail: format!("n_Q(K₊) = {}, n_Q(K₋) = {}", a, b),
        })
    }
}

fn verdict(rule: Rule, t: &DkTable, k: usize, lhs: Order, rhs: Order, what: &str) -> Verdict {
    Verdict {
        rule,
        at: t.factor.to_string(),
        index: k,
        holds: lhs >= rhs,
        binding: true,
        detail: format!("{}: {} >= {}", what, lhs, rhs),
    }
}

pub fn check_dk_inequalities(t: &DkTable) -> Vec<Verdict> {
    let mut out = Vec::new();
    let len = t.plus.len().min(t.minus.len()).min(t.zero.len());
    for k in 0..len - 1 {
        for (name, s) in [("+", &t.plus), ("-", &t.minus), ("0", &t.zero)] {
            out.push(verdict(Rule::Monotone, t, k, s[k], s[k + 1], &format!("d{}_{} vs d{}_{}", name, k, name, k + 1)));
        }
        for (name, s, o) in [("+", &t.plus, &t.minus), ("-", &t.minus, &t.plus)] {
            out.push(verdict(Rule::Simple, t, k, t.zero[k], s[k + 1], &format!("d0_{} vs d{}_{}", k, name, k + 1)));
            out.push(verdict(Rule::SecondOne, t, k, s[k], t.zero[k + 1], &format!("d{}_{} vs d0_{}", name, k, k + 1)));
            if t.at_one() {
                let rhs = (o[k + 1] + 1).min(o[k]);
                out.push(verdict(Rule::FourthOne, t, k, s[k], rhs, &format!("d{}_{}", name, k)));
            } else {
                out.push(verdict(Rule::ThirdOne, t, k, s[k], o[k + 1], &format!("d{}_{}", name, k)));
            }
        }
    }
    out
}

/// |P_N^+ − P_N^-| against 2N (N ≥ 2) and 1 (N = 1), for N up to one past the
/// largest block. The bound is proved for λ ≠ 1; at λ = 1 it is reported as
/// non-binding.
pub fn check_pn_bounds(t: &DkTable) -> Vec<Verdict> {
    let top = DkTable::max_gap(&t.plus).max(DkTable::max_gap(&t.minus)) + 1;
    (1..=top)
        .map(|n| {
            let (a, b) = (DkTable::p_n(&t.plus, n), DkTable::p_n(&t.minus, n));
            let bound = if n == 1 { 1 } else { 2 * n };
            Verdict {
                rule: Rule::PnBound,
                at: t.factor.to_string(),
                index: n,
                holds: a.abs_diff(b) <= bound,
                binding: !t.at_one(),
                detail: format!("P{}+ = {}, P{}- = {}, bound {}", n, a, n, b, bound),
            }
        })
        .collect()
}

/// |σ± − σ₀| + |n± − n₀| ≤ 1 at every sample, by the direct route.
pub fn check_signature_skein(triple: &SkeinTriple, zetas: &[Zeta], precision: usize) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for z in zetas {
        let s0 = tristram_levine_direct(&triple.zero, z, precision)?;
        for (name, s) in [("+", &triple.plus), ("-", &triple.minus)] {
            let v = tristram_levine_direct(s, z, precision)?;
            let lhs = (v.sigma - s0.sigma).unsigned_abs() as usize + v.nullity.abs_diff(s0.nullity);
            out.push(Verdict {
                rule: Rule::SignatureSkein,
                at: z.to_string(),
                index: 0,
                holds: lhs <= 1,
                binding: true,
                detail: format!(
                    "σ{} = {}, n{} = {}, σ0 = {}, n0 = {}",
                    name, v.sigma, name, v.nullity, s0.sigma, s0.nullity
                ),
            });
        }
    }
    Ok(out)
}

/// ord_f det H and the minimum of ord_f det H^{i,j} over i, for column j.
pub fn laplace_orders(h: &PolyMatrix, j: usize, f: &RatPoly) -> (Order, Order) {
    let m = h.rows();
    let det = |a: &PolyMatrix| {
        let e = invariant_factors(a);
        determinantal_divisor(&e, a.rows())
    };
    let whole = Order::of(&det(h), f);
    let cols: Vec<usize> = (0..m).filter(|&c| c != j).collect();
    let minors = (0..m)
        .map(|i| {
            let rows: Vec<usize> = (0..m).filter(|&r| r != i).collect();
            Order::of(&det(&h.submatrix(&rows, &cols)), f)
        })
        .min()
        .unwrap_or(Order::Finite(0));
    (whole, minors)
}

/// Caller-asserted relation between L₁ and L₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// L₁ from L₂ by changing a negative crossing to a positive one, deg Δ₁ ≥ deg Δ₂.
    A,
    /// L₁ from L₂ by one crossing change, deg Δ₁ > deg Δ₂.
    B,
    /// L₁ from L₂ by a hyperbolic transformation, deg Δ₁ > deg Δ₂.
    C,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::A => "a",
            Hypothesis::B => "b",
            Hypothesis::C => "c",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemicontinuityVerdict {
    Holds { inside1: usize, inside2: usize },
    Violated { inside1: usize, inside2: usize },
    HypothesesNotMet(String),
    Refused { x: String, reason: String },
}

#[derive(Clone, Debug)]
pub struct SemicontinuityReport {
    pub hypothesis: Hypothesis,
    pub x: Real,
    pub deg1: usize,
    pub deg2: usize,
    pub verdict: SemicontinuityVerdict,
    /// a₁ − a₂ = ½(deg Δ₁ − deg Δ₂ − σ₁ + σ₂), when both signatures are known.
    pub count_identity: Option<bool>,
}

pub fn check_semicontinuity(l1: &LinkAnalysis, l2: &LinkAnalysis, hypothesis: Hypothesis, x: &Real) -> SemicontinuityReport {
    let (deg1, deg2) = (l1.alexander_degree(), l2.alexander_degree());
    let report = |verdict, count_identity| SemicontinuityReport {
        hypothesis,
        x: x.clone(),
        deg1,
        deg2,
        verdict,
        count_identity,
    };
    let refuse = |reason: &str| {
        report(SemicontinuityVerdict::Refused { x: x.render(20), reason: reason.into() }, None)
    };
    if x.try_cmp(&Real::int(0)) != Some(Ordering::Greater) || x.try_cmp(&Real::int(1)) != Some(Ordering::Less) {
        return refuse("x must lie in (0, 1)");
    }
    let (c1, c2) = (halfplane_count(&l1.spectrum, x), halfplane_count(&l2.spectrum, x));
    if c1.boundary || c2.boundary {
        return refuse("the boundary of H_x meets an extended spectrum");
    }
    let degrees_ok = match hypothesis {
        Hypothesis::A => deg1 >= deg2,
        Hypothesis::B | Hypothesis::C => deg1 > deg2,
    };
    if !degrees_ok {
        let rel = if hypothesis == Hypothesis::A { ">=" } else { ">" };
        return report(
            SemicontinuityVerdict::HypothesesNotMet(format!("deg Δ₁ = {} is not {} deg Δ₂ = {}", deg1, rel, deg2)),
            None,
        );
    }
    let zeta = Zeta::from_turn(x.clone());
    let identity = match (l1.signature(&zeta), l2.signature(&zeta)) {
        (Ok(s1), Ok(s2)) => {
            let lhs = 2 * (c1.inside as i64 - c2.inside as i64);
            Some(lhs == deg1 as i64 - deg2 as i64 - s1.sigma + s2.sigma)
        }
        _ => None,
    };
    let (inside1, inside2) = (c1.inside, c2.inside);
    let verdict = if inside1 >= inside2 {
        SemicontinuityVerdict::Holds { inside1, inside2 }
    } else {
        SemicontinuityVerdict::Violated { inside1, inside2 }
    };
    report(verdict, identity)
}

/// Corner matrix E with a single 1 at (m, m).
pub fn corner(m: usize) -> RatMatrix {
    let mut e = RatMatrix::zeros(m, m);
    if m > 0 {
        e[(m - 1, m - 1)] = num_rational::BigRational::one();
    }
    e
}
