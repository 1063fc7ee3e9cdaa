//! The four closed-form scale-degree generators.
//!
//! Each generator maps a degree index z ∈ 1..=23 to an exact interval
//! ratio via three floor brackets
//!
//! ```text
//! A = ⌊(z + 2 − s)/4 + g² − g⌋
//! B = ⌊(z − 1 − s)/2 + g⌋
//! C = ⌊(z − s)/4 − g²⌋
//! ```
//!
//! where `s` is a per-generator index shift and `g` is a step function
//! that is 0 below its break index and −1/2 from it onward. The
//! bracket values combine linearly into prime exponents over 2, 3, 5
//! (and 7 for the variants that use it).

use crate::analysis::EXPERIMENTAL_REFERENCE;
use crate::indicator::PROFILE;
use crate::ratio::{PrimeExponents, Ratio};
use core::fmt;

/// Degree index z ∈ 1..=23, unison through octave.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ShrutiIndex(u8);

impl ShrutiIndex {
    pub const MIN: ShrutiIndex = ShrutiIndex(1);
    pub const MAX: ShrutiIndex = ShrutiIndex(23);

    pub fn new(z: u8) -> Option<ShrutiIndex> {
        (1..=23).contains(&z).then_some(ShrutiIndex(z))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// All 23 degrees in ascending order.
    pub fn all() -> impl DoubleEndedIterator<Item = ShrutiIndex> {
        (1..=23).map(ShrutiIndex)
    }
}

impl fmt::Display for ShrutiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Selector over the five degree-value sources.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DistributionKind {
    WesternCompilation,
    Deval,
    NagojiRow,
    Generalized,
    /// Decimal values measured from recorded performances; has no
    /// exact ratio form.
    ExperimentalReference,
}

impl DistributionKind {
    /// The four generator-backed distributions.
    pub const MODELS: [DistributionKind; 4] = [
        DistributionKind::WesternCompilation,
        DistributionKind::Deval,
        DistributionKind::NagojiRow,
        DistributionKind::Generalized,
    ];

    /// Exact ratio at degree `z`; `None` for the experimental reference.
    pub fn ratio(self, z: ShrutiIndex) -> Option<Ratio> {
        match self {
            DistributionKind::WesternCompilation => Some(western_compilation(z)),
            DistributionKind::Deval => Some(deval(z)),
            DistributionKind::NagojiRow => Some(nagoji_row(z)),
            DistributionKind::Generalized => Some(generalized(z)),
            DistributionKind::ExperimentalReference => None,
        }
    }

    /// Degree value as a float; the experimental reference reads its
    /// measured table.
    pub fn value(self, z: ShrutiIndex) -> f64 {
        match self.ratio(z) {
            Some(r) => r.to_f64(),
            None => EXPERIMENTAL_REFERENCE[z.get() as usize - 1],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DistributionKind::WesternCompilation => "western-compilation",
            DistributionKind::Deval => "deval",
            DistributionKind::NagojiRow => "nagoji-row",
            DistributionKind::Generalized => "generalized",
            DistributionKind::ExperimentalReference => "experimental",
        }
    }
}

/// Floor toward negative infinity, not truncation.
fn floor_div(num: i64, den: i64) -> i64 {
    num.div_euclid(den)
}

/// The A, B, C floor brackets for index `z` with shift `s`.
///
/// With g = −1/2 the fractional g-terms (g² − g = 3/4, g = −1/2,
/// −g² = −1/4) fold into the bracket numerators exactly.
fn bracket_terms(z: i64, shift: i64, g_negative: bool) -> (i64, i64, i64) {
    if g_negative {
        (
            floor_div(z + 2 - shift + 3, 4),
            floor_div(z - 1 - shift - 1, 2),
            floor_div(z - shift - 1, 4),
        )
    } else {
        (
            floor_div(z + 2 - shift, 4),
            floor_div(z - 1 - shift, 2),
            floor_div(z - shift, 4),
        )
    }
}

fn base_exponents(z: i64, shift: i64, g_negative: bool) -> PrimeExponents {
    let (a, b, c) = bracket_terms(z, shift, g_negative);
    PrimeExponents::new(
        (8 * a - 4 * b - 3 * c) as i32,
        (4 * b - 5 * a - c) as i32,
        (2 * c - b) as i32,
        0,
    )
}

/// First historical distribution: pure 5-limit ratios, step break at
/// 13 with a single index shift at z = 13.
pub fn western_compilation(z: ShrutiIndex) -> Ratio {
    let zi = z.get() as i64;
    let g_neg = z.get() >= PROFILE.g1_break;
    let shift = PROFILE.h_support.contains(z) as i64;
    base_exponents(zi, shift, g_neg).to_ratio()
}

/// Second historical distribution: 7-limit, shifts at 11 and 13, and
/// correction terms on the degrees in the k and t supports.
pub fn deval(z: ShrutiIndex) -> Ratio {
    let zi = z.get() as i64;
    let g_neg = z.get() >= PROFILE.g1_break;
    let shift = PROFILE.h1_support.contains(z) as i64;
    let k = PROFILE.k_support.contains(z) as i32;
    let t = PROFILE.t_support.contains(z) as i32;
    let base = base_exponents(zi, shift, g_neg);
    PrimeExponents::new(
        base.e2 - 10 * k + 4 * t,
        base.e3 + 6 * k - 4 * t,
        base.e5 - k + t,
        k,
    )
    .to_ratio()
}

/// Third historical distribution: 5-limit, step break at 14, signed
/// correction p on five degrees.
pub fn nagoji_row(z: ShrutiIndex) -> Ratio {
    let zi = z.get() as i64;
    let g_neg = z.get() >= PROFILE.g_break;
    let p = PROFILE.p_signed_support.sign(z);
    let base = base_exponents(zi, 0, g_neg);
    PrimeExponents::new(base.e2 - 11 * p, base.e3 + 4 * p, base.e5 + 2 * p, 0).to_ratio()
}

/// The two addends of [`generalized`], exposed for cross-checking.
///
/// The second addend is half the plain bracket pipeline with the step
/// break at 14; for every z except 13 that equals half the first
/// historical distribution.
pub fn generalized_terms(z: ShrutiIndex) -> (Ratio, Ratio) {
    let zi = z.get() as i64;
    let g_neg = z.get() >= PROFILE.g_break;

    let psi = PROFILE.psi_support.contains(z) as i64;
    let alpha = PROFILE.alpha_signed_support.sign(z);
    let beta = PROFILE.beta_support.contains(z) as i32;
    let gamma = PROFILE.gamma_support.contains(z) as i32;

    let shifted = base_exponents(zi, psi, g_neg);
    // The γ correction adds +7 to the 2-exponent, which lands degree
    // 21 at 263/144 ≈ 1.826.
    let first = PrimeExponents::new(
        shifted.e2 - 11 * alpha + 6 * beta + 7 * gamma - 1,
        shifted.e3 + 4 * alpha - 2 * beta - 3 * gamma,
        shifted.e5 + 2 * alpha - gamma,
        -beta,
    )
    .to_ratio();

    let plain = base_exponents(zi, 0, g_neg);
    let second =
        PrimeExponents::new(plain.e2 - 1, plain.e3, plain.e5, 0).to_ratio();

    (first, second)
}

/// Blended distribution: the sum of two half-weight bracket pipelines,
/// one shifted by Ψ and corrected by α, β, γ. Closest of the four to
/// the experimental reference.
pub fn generalized(z: ShrutiIndex) -> Ratio {
    let (first, second) = generalized_terms(z);
    first + second
}
