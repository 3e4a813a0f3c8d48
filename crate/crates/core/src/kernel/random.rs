use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LinearChange, Poly, Scalar};
use crate::{Error, Result};

/// Coefficients of generic combinations are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 9999;

/// Entries of random coordinate changes are drawn from `[-99, 99]`.
const CHANGE_BOUND: i64 = 99;

/// Master seed of every randomized computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Default for Seed {
    fn default() -> Self {
        Seed(0x5EED)
    }
}

impl Seed {
    /// Seed of an independent run derived from this one.
    pub fn run(self, index: u64) -> Seed {
        // splitmix64 step keeps runs decorrelated without sharing streams
        let mut z = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index + 1));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Seed(z ^ (z >> 31))
    }

    pub fn stream(self, index: u64) -> Stream {
        Stream::new(self, index)
    }
}

/// Deterministic pseudorandom sub-stream `(seed, index)`.
pub struct Stream {
    rng: ChaCha8Rng,
}

impl Stream {
    pub fn new(seed: Seed, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
        rng.set_stream(index);
        Stream { rng }
    }

    pub fn int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn scalar(&mut self, bound: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(self.int(bound)))
    }

    /// `k` integers in `[-bound, bound]`, not all zero.
    pub fn nonzero_vector(&mut self, k: usize, bound: i64) -> Vec<i64> {
        loop {
            let v: Vec<i64> = (0..k).map(|_| self.int(bound)).collect();
            if v.iter().any(|&c| c != 0) {
                return v;
            }
        }
    }

    /// Generic combination of `forms` with coefficients in `[-bound, bound]`.
    pub fn combination(&mut self, forms: &[Poly], bound: i64) -> Poly {
        let coeffs = self.nonzero_vector(forms.len(), bound);
        let mut acc = Poly::zero(forms[0].nvars());
        for (f, c) in forms.iter().zip(coeffs) {
            if c != 0 {
                acc = &acc + &f.scale(&Scalar::from_integer(c.into()));
            }
        }
        acc
    }

    /// A random linear form in `nvars` variables with every coefficient drawn.
    pub fn linear_form(&mut self, nvars: usize, bound: i64) -> Poly {
        let coeffs: Vec<Scalar> =
            self.nonzero_vector(nvars, bound).into_iter().map(|c| Scalar::from_integer(c.into())).collect();
        Poly::from_linear_coefficients(&coeffs)
    }
}

/// `Σ aᵢ·formᵢ` with integer `aᵢ ∈ [−9999, 9999]`, not all zero, determined
/// by `(seed, stream_index)`.
pub fn random_linear_combination(forms: &[Poly], seed: Seed, stream_index: u64) -> Result<Poly> {
    let first = forms.first().ok_or(Error::EmptyForms)?;
    for f in forms {
        if f.nvars() != first.nvars() {
            return Err(Error::RingMismatch(first.nvars(), f.nvars()));
        }
        if !f.is_linear_form() {
            return Err(Error::NotLinear(alloc::format!("{}", f)));
        }
    }
    let mut stream = seed.stream(stream_index);
    loop {
        let h = stream.combination(forms, COEFF_BOUND);
        if !h.is_zero() {
            return Ok(h);
        }
    }
}

/// Invertible integer coordinate change with entries in `[-99, 99]`, resampled
/// until the determinant is nonzero.
pub fn random_coordinate_change(nvars: usize, seed: Seed) -> LinearChange {
    let mut stream = seed.stream(u64::MAX);
    loop {
        let m: Vec<Vec<Scalar>> =
            (0..nvars).map(|_| (0..nvars).map(|_| stream.scalar(CHANGE_BOUND)).collect()).collect();
        if let Ok(change) = LinearChange::from_matrix(m) {
            return change;
        }
    }
}
