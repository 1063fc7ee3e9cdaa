//! Indicator functions and support-set enumeration.
//!
//! Each generator function is driven by a handful of integer-valued
//! switches: a half-step function `g` that turns on at a break index,
//! single-index shifts, and supports defined by floor-bracket sequences
//! over n = 1, 2, 3, … The enumerated supports are frozen in
//! [`PROFILE`]; the `enumerate_*` functions recompute them from their
//! defining sequences and serve as the independent oracle in tests.

use crate::generator::ShrutiIndex;

/// Hard bound for support enumeration; every defining sequence is
/// nondecreasing past its last in-range hit well before n = 16.
const ENUM_LIMIT: u64 = 16;

/// Step function: 0 below the break index, −1/2 from it onward.
/// Returned as an exact (numerator, denominator) pair.
pub fn g_step(z: ShrutiIndex, first_negative_index: u8) -> (i8, u8) {
    debug_assert!(matches!(first_negative_index, 13 | 14));
    if z.get() < first_negative_index {
        (0, 1)
    } else {
        (-1, 2)
    }
}

/// A set of degree indices, stored as a bitmask over 1..=23.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub const fn of(indices: &[u8]) -> IndexSet {
        let mut bits = 0u32;
        let mut i = 0;
        while i < indices.len() {
            bits |= 1 << indices[i];
            i += 1;
        }
        IndexSet(bits)
    }

    fn insert(&mut self, z: u8) {
        self.0 |= 1 << z;
    }

    pub fn contains(self, z: ShrutiIndex) -> bool {
        self.0 & (1 << z.get()) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = ShrutiIndex> {
        ShrutiIndex::all().filter(move |z| self.contains(*z))
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// A set of degree indices each carrying a sign of +1 or −1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignedSet {
    plus: IndexSet,
    minus: IndexSet,
}

impl SignedSet {
    pub const fn of(plus: &[u8], minus: &[u8]) -> SignedSet {
        SignedSet {
            plus: IndexSet::of(plus),
            minus: IndexSet::of(minus),
        }
    }

    /// +1, −1, or 0 for indices outside the support.
    pub fn sign(self, z: ShrutiIndex) -> i32 {
        if self.plus.contains(z) {
            1
        } else if self.minus.contains(z) {
            -1
        } else {
            0
        }
    }
}

/// The complete switch table for all four generator functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndicatorProfile {
    /// Break index of the step function used by the first two generators.
    pub g1_break: u8,
    /// Break index of the step function used by the other two.
    pub g_break: u8,
    pub h_support: IndexSet,
    pub h1_support: IndexSet,
    pub t_support: IndexSet,
    pub beta_support: IndexSet,
    pub gamma_support: IndexSet,
    pub k_support: IndexSet,
    pub psi_support: IndexSet,
    pub p_signed_support: SignedSet,
    pub alpha_signed_support: SignedSet,
}

/// Frozen switch table. Tests assert the enumerated fields equal the
/// output of the corresponding `enumerate_*` oracle exactly.
pub const PROFILE: IndicatorProfile = IndicatorProfile {
    g1_break: 13,
    g_break: 14,
    h_support: IndexSet::of(&[13]),
    h1_support: IndexSet::of(&[11, 13]),
    t_support: IndexSet::of(&[10]),
    beta_support: IndexSet::of(&[5]),
    gamma_support: IndexSet::of(&[21]),
    k_support: IndexSet::of(&[2, 10, 15]),
    psi_support: IndexSet::of(&[8, 17, 19, 20]),
    p_signed_support: SignedSet::of(&[2, 15], &[9, 13, 22]),
    alpha_signed_support: SignedSet::of(&[2], &[22]),
};

fn collect_in_range(values: impl Iterator<Item = u64>) -> IndexSet {
    let mut set = IndexSet::EMPTY;
    for v in values {
        if (1..=23).contains(&v) {
            set.insert(v as u8);
        }
    }
    set
}

/// Sign by the parity of ⌊z/7⌋: +1 when zero or even, −1 when odd.
fn seventh_parity_sign(z: u8) -> i32 {
    if (z / 7).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn attach_signs(set: IndexSet) -> SignedSet {
    let mut signed = SignedSet::default();
    for z in set.iter() {
        if seventh_parity_sign(z.get()) > 0 {
            signed.plus.insert(z.get());
        } else {
            signed.minus.insert(z.get());
        }
    }
    signed
}

/// Support of k: values 2^(1−⌊(n−1)/2⌋) · 3^⌊(n−1)/2⌋ · 5^⌊n/2⌋ in range.
pub fn enumerate_k_support() -> IndexSet {
    collect_in_range((1..=ENUM_LIMIT).map(|n| {
        let e3 = (n - 1) / 2;
        let e5 = n / 2;
        // 2-exponent is 1 − ⌊(n−1)/2⌋, negative from n = 5 on; those
        // values are fractional and cannot hit an integer index.
        if e3 > 1 {
            u64::MAX
        } else {
            2u64.pow(1 - e3 as u32) * 3u64.pow(e3 as u32) * 5u64.pow(e5 as u32)
        }
    }))
}

/// Signed support of p: indices 2 + 7⌊(n+1)/3⌋ + 4⌊n/3⌋ + 2⌊(n−1)/3⌋.
pub fn enumerate_p_support() -> SignedSet {
    attach_signs(collect_in_range(
        (1..=ENUM_LIMIT).map(|n| 2 + 7 * ((n + 1) / 3) + 4 * (n / 3) + 2 * ((n - 1) / 3)),
    ))
}

/// Support of Ψ: indices 8 + 9⌊(n+1)/3⌋ + 2⌊n/3⌋ + ⌊(n−1)/3⌋.
pub fn enumerate_psi_support() -> IndexSet {
    collect_in_range((1..=ENUM_LIMIT).map(|n| 8 + 9 * ((n + 1) / 3) + 2 * (n / 3) + ((n - 1) / 3)))
}

/// Signed support of α: indices of the form 20n − 18.
pub fn enumerate_alpha_support() -> SignedSet {
    attach_signs(collect_in_range((1..=ENUM_LIMIT).map(|n| 20 * n - 18)))
}

/// p indicator: ±1 on its enumerated support, 0 elsewhere.
pub fn p_value(z: ShrutiIndex) -> i32 {
    enumerate_p_support().sign(z)
}

/// (Ψ, α) indicators evaluated from their enumerated supports.
pub fn psi_alpha_values(z: ShrutiIndex) -> (i32, i32) {
    let psi = enumerate_psi_support().contains(z) as i32;
    let alpha = enumerate_alpha_support().sign(z);
    (psi, alpha)
}
