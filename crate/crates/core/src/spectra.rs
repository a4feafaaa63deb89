//! Mod-2 spectrum, extended spectrum and half-plane counts.

use std::cmp::Ordering;

use num_rational::BigRational;

use crate::algebra::Real;
use crate::classify::HNumbers;
use crate::jordan::EigenInfo;

/// Sp as (α, s(α)) with α ∈ (0, 2]; ISp as (x, y, multiplicity), x ∈ (0, 2].
#[derive(Clone, Debug, Default)]
pub struct SpectrumData {
    pub sp: Vec<(Real, usize)>,
    pub isp: Vec<(Real, Real, usize)>,
}

fn push(list: &mut Vec<(Real, usize)>, a: Real, c: usize) {
    if c == 0 {
        return;
    }
    if let Some(entry) = list.iter_mut().find(|(b, _)| b.try_cmp(&a) == Some(Ordering::Equal)) {
        entry.1 += c;
    } else {
        list.push((a, c));
    }
}

fn push_imag(list: &mut Vec<(Real, Real, usize)>, x: Real, y: Real, c: usize) {
    if let Some(entry) = list
        .iter_mut()
        .find(|(a, b, _)| a.try_cmp(&x) == Some(Ordering::Equal) && b.try_cmp(&y) == Some(Ordering::Equal))
    {
        entry.2 += c;
    } else {
        list.push((x, y, c));
    }
}

fn sort_key(a: &Real, b: &Real) -> Ordering {
    a.try_cmp(b).unwrap_or_else(|| a.to_f64().total_cmp(&b.to_f64()))
}

/// x ∈ (0, 1] with e^{2πix} = λ/|λ|.
fn unit_turn(info: &EigenInfo) -> Real {
    if info.turn.try_cmp(&Real::int(0)) == Some(Ordering::Equal) {
        Real::int(1)
    } else {
        info.turn.clone()
    }
}

pub fn spectrum(hn: &HNumbers) -> SpectrumData {
    let mut sd = SpectrumData::default();
    for ((key, k, u), &c) in &hn.p {
        let Some(info) = hn.classes.get(key) else { continue };
        let x = unit_turn(info);
        // lifts α = x (v = +1) and α = x + 1 (v = −1); λ = 1 lifts to 1 (v = −1) and 2 (v = +1)
        let lifts = if key.is_one() {
            [(Real::int(1), -1i64), (Real::int(2), 1)]
        } else {
            [(x.clone(), 1), (x.affine(1, 1), -1)]
        };
        for (alpha, v) in lifts {
            let k = *k as i64;
            let mult = if k % 2 == 1 { (k - u.value() * v) / 2 } else { k / 2 };
            push(&mut sd.sp, alpha, mult as usize * c);
        }
    }
    for ((key, k), &c) in &hn.q {
        let Some(info) = hn.classes.get(key) else { continue };
        let x = unit_turn(info);
        let y = info.log_modulus_turn();
        push_imag(&mut sd.isp, x.clone(), y.clone(), k * c);
        push_imag(&mut sd.isp, x.affine(1, 1), y.affine(0, -1), k * c);
    }
    sd.sp.sort_by(|a, b| sort_key(&a.0, &b.0));
    sd.isp.sort_by(|a, b| sort_key(&a.0, &b.0).then_with(|| sort_key(&a.1, &b.1)));
    sd
}

impl SpectrumData {
    pub fn sp_len(&self) -> usize {
        self.sp.iter().map(|(_, c)| c).sum()
    }

    pub fn isp_len(&self) -> usize {
        self.isp.iter().map(|(_, _, c)| c).sum()
    }

    /// #ESp = #Sp + #ISp.
    pub fn len(&self) -> usize {
        self.sp_len() + self.isp_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Multiplicity of α in Sp.
    pub fn s(&self, alpha: &BigRational) -> usize {
        self.sp
            .iter()
            .filter(|(a, _)| a.cmp_rational(alpha) == Some(Ordering::Equal))
            .map(|(_, c)| c)
            .sum()
    }

    /// Exact rational elements of Sp with multiplicity, in order.
    pub fn rational_sp(&self) -> Vec<(BigRational, usize)> {
        self.sp
            .iter()
            .filter_map(|(a, c)| match a {
                Real::Exact(q) => Some((q.clone(), *c)),
                Real::Approx(_) => None,
            })
            .collect()
    }
}

/// Counts in H_x = (x, x+1) × iℝ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfplaneCount {
    pub inside: usize,
    pub outside: usize,
    /// Some element lies on ∂H_x, or is too close to decide.
    pub boundary: bool,
    pub sp_inside: usize,
    pub sp_outside: usize,
    pub isp_inside: usize,
    pub isp_outside: usize,
}

fn position(a: &Real, lo: &Real, hi: &Real) -> Option<bool> {
    let l = a.try_cmp(lo)?;
    let h = a.try_cmp(hi)?;
    if l == Ordering::Equal || h == Ordering::Equal {
        return None;
    }
    Some(l == Ordering::Greater && h == Ordering::Less)
}

pub fn halfplane_count(sd: &SpectrumData, x: &Real) -> HalfplaneCount {
    let hi = x.affine(1, 1);
    let mut out = HalfplaneCount {
        inside: 0,
        outside: 0,
        boundary: false,
        sp_inside: 0,
        sp_outside: 0,
        isp_inside: 0,
        isp_outside: 0,
    };
    for (a, c) in &sd.sp {
        match position(a, x, &hi) {
            None => out.boundary = true,
            Some(true) => out.sp_inside += c,
            Some(false) => out.sp_outside += c,
        }
    }
    for (a, _, c) in &sd.isp {
        match position(a, x, &hi) {
            None => out.boundary = true,
            Some(true) => out.isp_inside += c,
            Some(false) => out.isp_outside += c,
        }
    }
    out.inside = out.sp_inside + out.isp_inside;
    out.outside = out.sp_outside + out.isp_outside;
    out
}

/// Violations of the symmetry α ↔ 2−α on Sp∖ℤ and z ↔ 2−z on ISp. Points of
/// ISp with integer real part come from positive real eigenvalues, whose
/// reflection leaves the strip (0, 2], and are skipped.
pub fn symmetry_check(sd: &SpectrumData) -> Vec<String> {
    let mut out = Vec::new();
    for (a, c) in &sd.sp {
        if a.is_integer() {
            continue;
        }
        let r = a.affine(2, -1);
        let partner: usize = sd.sp.iter().filter(|(b, _)| b.close_to(&r)).map(|(_, c)| c).sum();
        if partner != *c {
            out.push(format!("Sp: s({}) = {} but s(2 - {}) = {}", a.render(12), c, a.render(12), partner));
        }
    }
    for (x, y, c) in &sd.isp {
        if x.is_integer() {
            continue;
        }
        let rx = x.affine(2, -1);
        let ry = y.affine(0, -1);
        let partner: usize =
            sd.isp.iter().filter(|(a, b, _)| a.close_to(&rx) && b.close_to(&ry)).map(|(_, _, c)| c).sum();
        if partner != *c {
            out.push(format!(
                "ISp: {} + {}i has multiplicity {} but its reflection has {}",
                x.render(12),
                y.render(12),
                c,
                partner
            ));
        }
    }
    out
}

/// σ(e^{2πix}) = #Sp∖H_x − #Sp∩H_x, or `None` when an element lies on ∂H_x.
pub fn signature_from_spectrum(sd: &SpectrumData, x: &Real) -> Option<i64> {
    let c = halfplane_count(sd, x);
    (!c.boundary).then(|| c.sp_outside as i64 - c.sp_inside as i64)
}

/// The same count over the whole extended spectrum.
pub fn signature_from_extended(sd: &SpectrumData, x: &Real) -> Option<i64> {
    let c = halfplane_count(sd, x);
    (!c.boundary).then(|| c.outside as i64 - c.inside as i64)
}
