pub mod algebra;
pub mod classify;
pub mod error;
pub mod invariants;
pub mod jordan;
pub mod pipeline;
pub mod seifert;
pub mod skein;
pub mod spectra;

pub use error::{Error, Result};
pub use algebra::{LaurentPoly, RatMatrix, RatPoly, Real};
pub use classify::{HNumbers, Obstruction, Sign};
pub use invariants::{AlexanderTower, Order, SignatureSample, Zeta};
pub use jordan::{EigenInfo, EigenKey, JordanData};
pub use pipeline::{CheckOutcome, LinkAnalysis, DEFAULT_PRECISION};
pub use seifert::{SeifertMatrix, VariationStructure};
pub use skein::{Hypothesis, SemicontinuityReport, SemicontinuityVerdict, SkeinAnalysis, SkeinTriple, Verdict};
pub use spectra::SpectrumData;
