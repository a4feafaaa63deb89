//! Exact Jordan partitions of the monodromy and certified eigenvalue data.

use std::collections::BTreeMap;
use std::fmt;

use astro_float::BigFloat;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::bigcomplex::{bf_cmp, RM};
use crate::algebra::roots::{isolate_escalating, CertifiedRoot, CircleStatus};
use crate::algebra::{squarefree_factor_q, BigComplex, RatMatrix, RatPoly, Real};
use crate::error::{Error, Result};
use crate::seifert::VariationStructure;

/// Basis-independent eigenvalue key: irreducible factor (integer-primitive
/// coefficients, lowest degree first) and root index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenKey {
    pub factor: Vec<BigInt>,
    pub index: usize,
}

impl EigenKey {
    pub fn new(factor: &RatPoly, index: usize) -> Self {
        EigenKey { factor: factor.primitive_integer(), index }
    }

    pub fn factor_poly(&self) -> RatPoly {
        RatPoly::from_bigints(&self.factor)
    }

    pub fn is_one(&self) -> bool {
        self.factor == [BigInt::from(-1), BigInt::from(1)]
    }

    pub fn is_minus_one(&self) -> bool {
        self.factor == [BigInt::from(1), BigInt::from(1)]
    }
}

impl fmt::Display for EigenKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.factor.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]#{}", c.join(","), self.index)
    }
}

/// Certified description of one eigenvalue.
#[derive(Clone, Debug)]
pub struct EigenInfo {
    pub key: EigenKey,
    pub value: BigComplex,
    pub radius: BigFloat,
    pub status: CircleStatus,
    /// arg/2π in [0, 1), exact for roots of unity and real eigenvalues.
    pub turn: Real,
    /// n with λ a primitive n-th root of unity.
    pub unity_order: Option<u64>,
    /// Key of λ̄.
    pub conj: EigenKey,
    /// Key of 1/λ̄ (equal to `key` on the unit circle).
    pub reflect: EigenKey,
    pub precision: usize,
}

impl EigenInfo {
    /// 64-digit decimal rendering of the eigenvalue.
    pub fn decimal(&self) -> String {
        self.value.to_decimal(64)
    }

    /// −ln|λ|/2π.
    pub fn log_modulus_turn(&self) -> Real {
        let p = self.value.precision() + 16;
        let two_pi = crate::algebra::bigcomplex::bf_pi(p).mul(&BigFloat::from_word(2, p), p, RM);
        Real::Approx(self.value.ln_abs().neg().div(&two_pi, p, RM))
    }
}

/// Block counts s_k and the kernel-dimension sequence of one primary component.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JordanPartition {
    /// k ↦ number of Jordan blocks of size k at each root of the factor.
    pub sizes: BTreeMap<usize, usize>,
    /// dimker[j] = dim ker f(h)^j / deg f, starting at j = 0.
    pub dimker: Vec<usize>,
}

impl JordanPartition {
    pub fn from_dimker(dimker: Vec<usize>) -> Result<Self> {
        let at = |j: usize| dimker.get(j).copied().unwrap_or(*dimker.last().unwrap_or(&0));
        let mut sizes = BTreeMap::new();
        for k in 1..dimker.len() {
            let s = 2 * at(k) as i64 - at(k - 1) as i64 - at(k + 1) as i64;
            if s < 0 {
                return Err(Error::Consistency("kernel dimensions are not concave".into()));
            }
            if s > 0 {
                sizes.insert(k, s as usize);
            }
        }
        Ok(JordanPartition { sizes, dimker })
    }

    pub fn s(&self, k: usize) -> usize {
        self.sizes.get(&k).copied().unwrap_or(0)
    }

    /// Θ in ascending order.
    pub fn theta(&self) -> Vec<usize> {
        self.sizes.iter().flat_map(|(&k, &c)| std::iter::repeat(k).take(c)).collect()
    }

    /// Number of Jordan blocks r(λ).
    pub fn blocks(&self) -> usize {
        self.sizes.values().sum()
    }

    pub fn max_size(&self) -> usize {
        self.sizes.keys().next_back().copied().unwrap_or(0)
    }

    /// Σ k·s_k, the algebraic multiplicity at one root.
    pub fn total(&self) -> usize {
        self.sizes.iter().map(|(k, c)| k * c).sum()
    }

    /// I(n): sum of the r − n smallest block sizes.
    pub fn i_of(&self, n: usize) -> usize {
        let th = self.theta();
        th.iter().take(th.len().saturating_sub(n)).sum()
    }

    /// P_N = #{θ ∈ Θ : θ ≥ N}.
    pub fn p_n(&self, n: usize) -> usize {
        self.sizes.range(n..).map(|(_, c)| c).sum()
    }
}

#[derive(Clone, Debug)]
pub struct FactorJordan {
    pub factor: RatPoly,
    /// Multiplicity of the factor in the characteristic polynomial.
    pub multiplicity: usize,
    pub partition: JordanPartition,
    pub roots: Vec<EigenInfo>,
    pub precision: usize,
}

#[derive(Clone, Debug, Default)]
pub struct JordanData {
    pub dim: usize,
    pub factors: Vec<FactorJordan>,
}

impl JordanData {
    pub fn factor(&self, f: &RatPoly) -> Option<&FactorJordan> {
        let key = f.primitive_integer();
        self.factors.iter().find(|fj| fj.factor.primitive_integer() == key)
    }

    pub fn info(&self, key: &EigenKey) -> Option<&EigenInfo> {
        self.factors.iter().flat_map(|f| f.roots.iter()).find(|r| &r.key == key)
    }

    pub fn partition_of(&self, key: &EigenKey) -> Option<&JordanPartition> {
        self.factor(&key.factor_poly()).map(|f| &f.partition)
    }

    /// Highest precision used to certify any eigenvalue.
    pub fn precision(&self) -> usize {
        self.factors.iter().map(|f| f.precision).max().unwrap_or(0)
    }
}

pub fn jordan_partition(v: &VariationStructure, precision: usize) -> Result<JordanData> {
    jordan_of_matrix(&v.h, precision)
}

/// Jordan data of a rational matrix: exact partitions from ranks of f(h)^j,
/// eigenvalue placement certified at `precision` bits or higher.
pub fn jordan_of_matrix(h: &RatMatrix, precision: usize) -> Result<JordanData> {
    let n = h.rows();
    let chi = h.charpoly()?;
    let mut factors = Vec::new();
    if n == 0 {
        return Ok(JordanData { dim: 0, factors: Vec::new() });
    }
    for (f, mult) in squarefree_factor_q(&chi)? {
        let deg = f.degree().unwrap_or(1);
        let a = f.eval_matrix(h);
        let target = deg * mult;
        let mut dimker = vec![0usize];
        let mut power = RatMatrix::identity(n);
        loop {
            power = &power * &a;
            let nullity = n - power.rank();
            if nullity % deg != 0 {
                return Err(Error::Consistency(format!("kernel of f(h)^j not a multiple of deg f = {}", deg)));
            }
            dimker.push(nullity / deg);
            if nullity == target {
                break;
            }
            if dimker.len() > n + 1 {
                return Err(Error::Consistency("primary component does not stabilize".into()));
            }
        }
        let partition = JordanPartition::from_dimker(dimker)?;
        if partition.total() != mult {
            return Err(Error::Consistency("Jordan block sizes do not add up to the multiplicity".into()));
        }
        let (roots, used) = isolate_escalating(&f, precision)?;
        factors.push((f, mult, partition, roots, used));
    }
    let all_roots: Vec<(RatPoly, Vec<CertifiedRoot>)> =
        factors.iter().map(|(f, _, _, r, _)| (f.clone(), r.clone())).collect();
    let mut out = Vec::with_capacity(factors.len());
    for (f, multiplicity, partition, roots, used) in factors {
        let order = unity_order(&f, &roots);
        let infos = roots
            .iter()
            .map(|r| describe(r, &f, order, &all_roots, used))
            .collect::<Result<Vec<_>>>()?;
        out.push(FactorJordan { factor: f, multiplicity, partition, roots: infos, precision: used });
    }
    Ok(JordanData { dim: n, factors: out })
}

fn describe(
    r: &CertifiedRoot,
    f: &RatPoly,
    order: Option<u64>,
    all: &[(RatPoly, Vec<CertifiedRoot>)],
    precision: usize,
) -> Result<EigenInfo> {
    let key = EigenKey::new(f, r.index);
    let turn = if let Some(n) = order {
        let t = r.value.turn();
        let nf = BigFloat::from_word(n as _, t.precision().unwrap_or(128));
        let j = crate::algebra::bigcomplex::bf_to_f64(&t.mul(&nf, 128, RM)).round() as i64 % n as i64;
        Real::Exact(BigRational::new(j.into(), BigInt::from(n)))
    } else if r.is_real {
        if r.value.re.is_negative() {
            Real::Exact(BigRational::new(1.into(), 2.into()))
        } else {
            Real::int(0)
        }
    } else {
        Real::Approx(r.value.turn())
    };
    let conj = nearest(all, f, &r.value.conj()).unwrap_or_else(|| key.clone());
    let reflect = if r.status == CircleStatus::On {
        key.clone()
    } else {
        let rf = f.reversed().normalized_integer();
        nearest(all, &rf, &r.value.conj().recip())
            .ok_or_else(|| Error::Consistency(format!("no reciprocal partner for a root of {}", f)))?
    };
    Ok(EigenInfo {
        key,
        value: r.value.clone(),
        radius: r.radius.clone(),
        status: r.status,
        turn,
        unity_order: order,
        conj,
        reflect,
        precision,
    })
}

fn nearest(all: &[(RatPoly, Vec<CertifiedRoot>)], f: &RatPoly, z: &BigComplex) -> Option<EigenKey> {
    let key = f.primitive_integer();
    let (g, roots) = all.iter().find(|(g, _)| g.primitive_integer() == key)?;
    let best = roots.iter().min_by(|a, b| bf_cmp(&a.value.sub(z).abs(), &b.value.sub(z).abs()))?;
    Some(EigenKey::new(g, best.index))
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// t^e mod f.
fn t_pow_mod(e: u64, f: &RatPoly) -> RatPoly {
    let mut result = RatPoly::one().rem(f);
    let mut base = RatPoly::t().rem(f);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = (&result * &base).rem(f);
        }
        base = (&base * &base).rem(f);
        e >>= 1;
    }
    result
}

/// Order n when f is the n-th cyclotomic polynomial. By Kronecker a monic
/// integer polynomial with all roots on the unit circle has only roots of unity.
pub fn unity_order(f: &RatPoly, roots: &[CertifiedRoot]) -> Option<u64> {
    let ints = f.primitive_integer();
    if !ints.last().map_or(false, |c| c.is_one()) || roots.iter().any(|r| r.status != CircleStatus::On) {
        return None;
    }
    let d = f.degree()? as u64;
    let one = RatPoly::one();
    (1..=2 * d * d + 2).find(|&n| euler_phi(n) == d && t_pow_mod(n, f) == one)
}

/// Cyclotomic polynomial Φ_n.
pub fn cyclotomic(n: u64) -> RatPoly {
    let mut p = &RatPoly::monomial(BigRational::one(), n as usize) - &RatPoly::one();
    for d in 1..n {
        if n % d == 0 {
            p = p.div_exact(&cyclotomic(d)).expect("cyclotomic divisibility");
        }
    }
    p
}

/// Confirms that partitions agree at λ, λ̄ and 1/λ̄ and that every class has
/// its partners. Returns the list of violations.
pub fn eigen_pairing_check(data: &JordanData) -> Vec<String> {
    let mut out = Vec::new();
    for fj in &data.factors {
        for r in &fj.roots {
            if data.info(&r.conj).is_none() {
                out.push(format!("{}: conjugate class missing", r.key));
            }
            let Some(partner) = data.info(&r.reflect) else {
                out.push(format!("{}: reciprocal class missing", r.key));
                continue;
            };
            if !partner.value.conj().recip().approx_eq(&r.value, &tolerance(r)) {
                out.push(format!("{}: reciprocal partner is not 1/λ̄", r.key));
            }
            let pf = data.partition_of(&r.reflect);
            if pf != Some(&fj.partition) {
                out.push(format!("{}: partition differs from that of 1/λ̄", r.key));
            }
            let cj = data.info(&r.conj);
            if let Some(c) = cj {
                if !c.value.approx_eq(&r.value.conj(), &tolerance(r)) {
                    out.push(format!("{}: conjugate partner is not λ̄", r.key));
                }
            }
        }
    }
    out
}

fn tolerance(r: &EigenInfo) -> BigFloat {
    crate::algebra::bigcomplex::bf_pow2(-(r.precision as i32) / 2, 64)
}

impl fmt::Display for EigenInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.turn {
            Real::Exact(q) if self.status == CircleStatus::On => write!(f, "exp(2πi·{})", q),
            _ => write!(f, "{}", self.value.to_decimal(12)),
        }
    }
}

/// Turn as a float, for display.
pub fn turn_f64(info: &EigenInfo) -> f64 {
    info.turn.to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_h() -> RatMatrix {
        RatMatrix::from_ints(&[[0, -1], [1, 1]])
    }

    #[test]
    fn trefoil_classes() {
        let j = jordan_of_matrix(&trefoil_h(), 256).unwrap();
        assert_eq!(j.factors.len(), 1);
        let f = &j.factors[0];
        assert_eq!(f.partition.s(1), 1);
        assert_eq!(f.roots.len(), 2);
        assert!(f.roots.iter().all(|r| r.status == CircleStatus::On));
        assert_eq!(f.roots[0].unity_order, Some(6));
        assert_eq!(f.roots[0].turn.render(0), "1/6");
        assert_eq!(f.roots[1].turn.render(0), "5/6");
        assert_eq!(f.roots[0].conj, f.roots[1].key);
        assert!(eigen_pairing_check(&j).is_empty());
    }

    #[test]
    fn eight_twenty_blocks() {
        let s = RatMatrix::from_ints(&[[-1, -1, -1, -1], [0, 0, -1, -1], [0, -1, 0, -1], [0, 0, -1, 0]]);
        let h = &s.transpose().inverse().unwrap() * &s;
        let j = jordan_of_matrix(&h, 256).unwrap();
        assert_eq!(j.factors.len(), 1);
        assert_eq!(j.factors[0].partition.s(2), 1);
        assert_eq!(j.factors[0].partition.s(1), 0);
    }

    #[test]
    fn reciprocal_real_pair() {
        // companion matrix of (t−2)(t−1/2) = t² − 5/2 t + 1
        let h = RatMatrix::from_rows(vec![
            vec![BigRational::from_integer(0.into()), BigRational::from_integer((-1).into())],
            vec![BigRational::from_integer(1.into()), BigRational::new(5.into(), 2.into())],
        ])
        .unwrap();
        let j = jordan_of_matrix(&h, 256).unwrap();
        assert_eq!(j.factors.len(), 2);
        let statuses: Vec<CircleStatus> = j.factors.iter().map(|f| f.roots[0].status).collect();
        assert!(statuses.contains(&CircleStatus::Inside) && statuses.contains(&CircleStatus::Outside));
        assert!(eigen_pairing_check(&j).is_empty());
    }

    #[test]
    fn partition_arithmetic() {
        let p = JordanPartition::from_dimker(vec![0, 2, 3, 4, 4]).unwrap();
        assert_eq!(p.theta(), vec![1, 3]);
        assert_eq!(p.i_of(0), 4);
        assert_eq!(p.i_of(1), 1);
        assert_eq!(p.i_of(2), 0);
        assert_eq!(p.p_n(2), 1);
        assert_eq!(p.blocks(), 2);
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(6), RatPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), RatPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(36), 12);
    }
}
