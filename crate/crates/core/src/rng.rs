//! Deterministic randomness.
//!
//! Every stream is a ChaCha8 generator whose 32-byte key is expanded from a
//! 64-bit seed with SplitMix64. Derived seeds come from [`derive_seed`], which
//! folds the components through the SplitMix64 finalizer (strings are first
//! hashed with 64-bit FNV-1a). Uniform integers use Lemire's widening-multiply
//! rejection method and normals use the Box-Muller cosine branch, so the
//! streams depend only on this file and the ChaCha8 block function.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

/// Component of a derived seed.
#[derive(Debug, Clone, Copy)]
pub enum SeedPart<'a> {
    Str(&'a str),
    Int(u64),
}

/// `hash64(master, parts...)`: each part is absorbed with
/// `h = splitmix64(h ^ value)`.
pub fn derive_seed(master: u64, parts: &[SeedPart<'_>]) -> u64 {
    let mut h = splitmix64(master);
    for part in parts {
        let v = match *part {
            SeedPart::Str(s) => fnv1a64(s.as_bytes()),
            SeedPart::Int(i) => i,
        };
        h = splitmix64(h ^ v);
    }
    h
}

#[derive(Debug, Clone)]
pub struct DetRng(ChaCha8Rng);

impl DetRng {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        let mut state = seed;
        for chunk in key.chunks_exact_mut(8) {
            state = splitmix64(state);
            chunk.copy_from_slice(&state.to_le_bytes());
        }
        DetRng(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `0..n`. `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let threshold = n.wrapping_neg() % n;
        loop {
            let m = (self.next_u64() as u128) * (n as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo) as u64 + 1) as usize
    }

    /// Standard normal deviate.
    pub fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.uniform();
        let u2 = self.uniform();
        libm::sqrt(-2.0 * libm::log(u1)) * libm::cos(core::f64::consts::TAU * u2)
    }
}
