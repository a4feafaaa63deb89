//! End-to-end analysis of one link and the cross-route consistency checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::RatMatrix;
use crate::classify::{algebraicity_obstructions, equivariant_signatures, h_numbers, EquivariantSignature, HNumbers, Obstruction};
use crate::error::Result;
use crate::invariants::{
    alexander_tower, monodromy_tower, nakanishi_from_jordan, nakanishi_from_tower, tower_matches_jordan,
    tristram_levine_direct, tristram_levine_from_h, AlexanderTower, SignatureSample, Zeta,
};
use crate::jordan::{eigen_pairing_check, jordan_of_matrix, JordanData};
use crate::seifert::{build_hvs, split_degenerate, SeifertMatrix, VariationStructure};
use crate::spectra::{signature_from_extended, spectrum, symmetry_check, SpectrumData};

pub const DEFAULT_PRECISION: usize = 256;

#[derive(Clone, Debug)]
pub struct LinkAnalysis {
    /// Absent when the structure was given by its monodromy.
    pub seifert: Option<SeifertMatrix>,
    pub s0_dim: usize,
    pub hvs: VariationStructure,
    pub jordan: JordanData,
    pub eqsig: Vec<EquivariantSignature>,
    pub h: HNumbers,
    pub spectrum: SpectrumData,
    /// Tower of S − tSᵀ, or of h − tI in monodromy mode.
    pub tower: AlexanderTower,
    pub nakanishi: usize,
    pub obstructions: Vec<Obstruction>,
    pub precision: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn from_violations(name: &str, v: Vec<String>) -> Self {
        CheckOutcome { name: name.into(), passed: v.is_empty(), detail: v.join("; ") }
    }

    fn equal<T: PartialEq + std::fmt::Debug>(name: &str, a: T, b: T) -> Self {
        let passed = a == b;
        CheckOutcome {
            name: name.into(),
            passed,
            detail: if passed { String::new() } else { format!("{:?} vs {:?}", a, b) },
        }
    }
}

impl LinkAnalysis {
    pub fn run(s: &SeifertMatrix, precision: usize) -> Result<Self> {
        let split = split_degenerate(s);
        let hvs = build_hvs(&split);
        let mut out = Self::analyse(hvs, split.s0_dim, alexander_tower(s), precision)?;
        out.seifert = Some(s.clone());
        Ok(out)
    }

    /// Stage-isolated entry from a monodromy and variation matrix.
    pub fn from_monodromy(h: &RatMatrix, v: &RatMatrix, precision: usize) -> Result<Self> {
        let hvs = VariationStructure::from_monodromy(h, v)?;
        let tower = monodromy_tower(&hvs.h);
        Self::analyse(hvs, 0, tower, precision)
    }

    fn analyse(hvs: VariationStructure, s0_dim: usize, tower: AlexanderTower, precision: usize) -> Result<Self> {
        let jordan = jordan_of_matrix(&hvs.h, precision)?;
        let eqsig = equivariant_signatures(&hvs, &jordan, precision)?;
        let h = h_numbers(s0_dim, &jordan, &eqsig)?;
        let spectrum = spectrum(&h);
        let nakanishi = nakanishi_from_tower(&tower);
        let obstructions = algebraicity_obstructions(&h);
        let precision = jordan.precision().max(precision);
        Ok(LinkAnalysis {
            seifert: None,
            s0_dim,
            hvs,
            jordan,
            eqsig,
            h,
            spectrum,
            tower,
            nakanishi,
            obstructions,
            precision,
        })
    }

    pub fn is_knot(&self) -> bool {
        self.seifert.as_ref().map_or(false, |s| s.looks_like_knot())
    }

    /// Tristram–Levine signature by the direct route when a Seifert matrix
    /// is known, otherwise from the H-numbers.
    pub fn signature(&self, zeta: &Zeta) -> Result<SignatureSample> {
        match &self.seifert {
            Some(s) => tristram_levine_direct(s, zeta, self.precision),
            None => tristram_levine_from_h(&self.h, zeta),
        }
    }

    /// Degree of the first nonzero Alexander polynomial.
    pub fn alexander_degree(&self) -> usize {
        self.tower.first_nonzero().degree().unwrap_or(0)
    }

    /// Every internal consistency check; `zetas` are the sample points for the
    /// signature comparisons.
    pub fn cross_checks(&self, zetas: &[Zeta]) -> Vec<CheckOutcome> {
        let mut out = vec![
            CheckOutcome::from_violations("variation structure axioms", self.hvs.verify().err().map(|e| e.to_string()).into_iter().collect()),
            CheckOutcome::from_violations("eigenvalue pairing", eigen_pairing_check(&self.jordan)),
            CheckOutcome::from_violations("H-number symmetry", self.h.symmetry_violations()),
            CheckOutcome::from_violations("spectrum symmetry", symmetry_check(&self.spectrum)),
            CheckOutcome::equal("#ESp = deg of first nonzero Alexander polynomial", self.spectrum.len(), self.alexander_degree()),
            CheckOutcome::from_violations("Alexander tower against Jordan data", tower_matches_jordan(&self.tower, &self.jordan)),
            CheckOutcome::equal("m0 = dim S0", self.tower.m0, self.s0_dim),
            CheckOutcome::equal("Nakanishi index by tower and Jordan data", self.nakanishi, nakanishi_from_jordan(&self.jordan, self.s0_dim).0),
        ];
        if self.is_knot() {
            let one = self.h.p.iter().filter(|((l, _, _), _)| l.is_one()).map(|(_, c)| c).sum::<usize>();
            let delta1 = self.tower.delta(0).eval(&BigRational::from_integer(BigInt::from(1)));
            let mut v = Vec::new();
            if one != 0 {
                v.push(format!("{} blocks at eigenvalue 1", one));
            }
            if delta1.is_zero() {
                v.push("Δ0(1) = 0".into());
            }
            out.push(CheckOutcome::from_violations("knot has no eigenvalue 1", v));
        }
        let mut route = Vec::new();
        let mut csig = Vec::new();
        for z in zetas {
            let table = tristram_levine_from_h(&self.h, z);
            if let Some(s) = &self.seifert {
                match (tristram_levine_direct(s, z, self.precision), &table) {
                    (Ok(d), Ok(t)) if (d.sigma, d.nullity) == (t.sigma, t.nullity) => {}
                    (Ok(d), Ok(t)) => route.push(format!(
                        "at {}: direct ({}, {}) table ({}, {})",
                        z, d.sigma, d.nullity, t.sigma, t.nullity
                    )),
                    (Err(e), _) => route.push(format!("at {}: {}", z, e)),
                    (_, Err(e)) => route.push(format!("at {}: {}", z, e)),
                }
            }
            if let (Ok(t), Some(e)) = (&table, signature_from_extended(&self.spectrum, &z.turn)) {
                if t.sigma != e {
                    csig.push(format!("at {}: σ = {} but the half-plane count gives {}", z, t.sigma, e));
                }
            }
        }
        if self.seifert.is_some() {
            out.push(CheckOutcome::from_violations("direct and H-number signatures agree", route));
        }
        out.push(CheckOutcome::from_violations("signature from the extended spectrum", csig));
        out
    }
}

/// Points e^{2πi·j/(n+1)}, j = 1..n, nudged off the eigenvalue arguments.
pub fn zeta_sweep(n: usize, jordan: &JordanData) -> Vec<Zeta> {
    let turns: Vec<f64> = jordan.factors.iter().flat_map(|f| f.roots.iter().map(crate::jordan::turn_f64)).collect();
    let mut out = Vec::with_capacity(n);
    for j in 1..=n {
        let mut den = (n + 1) as i64;
        let mut num = j as i64;
        // refine the grid until the sample avoids every eigenvalue argument
        while turns.iter().any(|t| (t - num as f64 / den as f64).abs() < 1e-9) {
            num = 2 * num + 1;
            den *= 2;
        }
        out.push(Zeta::root_of_unity(num, den).expect("nonzero denominator"));
    }
    out
}
