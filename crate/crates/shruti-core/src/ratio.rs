//! Exact positive rationals and cents arithmetic.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

/// An exact positive rational, always stored reduced.
///
/// The universal value type for musical intervals in this crate. All
/// arithmetic is exact integer arithmetic; an overflow of the 64-bit
/// components is a defect and panics rather than degrading to floats.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };
    pub const OCTAVE: Ratio = Ratio { num: 2, den: 1 };

    /// Builds a reduced ratio. Panics if either component is zero.
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(num > 0 && den > 0, "ratio components must be positive");
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numer(self) -> u64 {
        self.num
    }

    pub fn denom(self) -> u64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Interval size in cents: 1200 · log₂(self).
    pub fn cents(self) -> f64 {
        1200.0 * libm::log2(self.to_f64())
    }
}

impl Mul for Ratio {
    type Output = Ratio;

    fn mul(self, rhs: Ratio) -> Ratio {
        // Cross-reduce first so in-range products stay far from overflow.
        let g1 = gcd(self.num, rhs.den);
        let g2 = gcd(rhs.num, self.den);
        let num = (self.num / g1)
            .checked_mul(rhs.num / g2)
            .expect("ratio numerator overflowed 64 bits");
        let den = (self.den / g2)
            .checked_mul(rhs.den / g1)
            .expect("ratio denominator overflowed 64 bits");
        Ratio::new(num, den)
    }
}

impl Add for Ratio {
    type Output = Ratio;

    fn add(self, rhs: Ratio) -> Ratio {
        let den = (self.den / gcd(self.den, rhs.den))
            .checked_mul(rhs.den)
            .expect("ratio denominator overflowed 64 bits");
        let left = self
            .num
            .checked_mul(den / self.den)
            .expect("ratio numerator overflowed 64 bits");
        let right = rhs
            .num
            .checked_mul(den / rhs.den)
            .expect("ratio numerator overflowed 64 bits");
        Ratio::new(left + right, den)
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ratio({}/{})", self.num, self.den)
    }
}

impl From<Ratio> for f64 {
    fn from(r: Ratio) -> f64 {
        r.to_f64()
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Signed exponents over the primes 2, 3, 5, 7.
///
/// Every interval produced by the generator functions is a product
/// 2^e2 · 3^e3 · 5^e5 · 7^e7; this is the form the closed-form
/// exponent pipelines emit before reduction to a [`Ratio`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PrimeExponents {
    pub e2: i32,
    pub e3: i32,
    pub e5: i32,
    pub e7: i32,
}

impl PrimeExponents {
    pub fn new(e2: i32, e3: i32, e5: i32, e7: i32) -> PrimeExponents {
        PrimeExponents { e2, e3, e5, e7 }
    }

    /// Expands to the exact ratio 2^e2 · 3^e3 · 5^e5 · 7^e7.
    pub fn to_ratio(self) -> Ratio {
        // In-scope exponents are small; these bounds keep every product
        // comfortably inside u64.
        debug_assert!(self.e2.unsigned_abs() <= 16);
        debug_assert!(self.e3.unsigned_abs() <= 8);
        debug_assert!(self.e5.unsigned_abs() <= 4);
        debug_assert!(self.e7.unsigned_abs() <= 1);
        let mut num = 1u64;
        let mut den = 1u64;
        for (base, exp) in [(2, self.e2), (3, self.e3), (5, self.e5), (7, self.e7)] {
            let pow = (base as u64)
                .checked_pow(exp.unsigned_abs())
                .expect("prime power overflowed 64 bits");
            if exp >= 0 {
                num = num.checked_mul(pow).expect("numerator overflowed 64 bits");
            } else {
                den = den.checked_mul(pow).expect("denominator overflowed 64 bits");
            }
        }
        Ratio::new(num, den)
    }
}

/// Error for cents conversions fed a non-positive value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonPositiveError;

impl fmt::Display for NonPositiveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("cents conversion requires a positive value")
    }
}

/// Converts a frequency ratio to cents: 1200 · log₂(value).
pub fn ratio_to_cents(value: impl Into<f64>) -> Result<f64, NonPositiveError> {
    let v = value.into();
    if v > 0.0 && v.is_finite() {
        Ok(1200.0 * libm::log2(v))
    } else {
        Err(NonPositiveError)
    }
}

/// Absolute cents distance between two positive values. Symmetric, and
/// zero exactly when the values are equal.
pub fn diff_cents(a: impl Into<f64>, b: impl Into<f64>) -> Result<f64, NonPositiveError> {
    Ok(libm::fabs(ratio_to_cents(a)? - ratio_to_cents(b)?))
}
