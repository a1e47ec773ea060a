//! Deterministic randomness.
//!
//! All stochastic choices in the crate derive from a `(seed, label, index)`
//! triple hashed into a ChaCha8 stream. Nothing keeps RNG state across steps,
//! so resuming a run from a checkpoint replays the exact same randomness.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use sha2::{Digest, Sha256};

use crate::scalar::Scalar;

/// Derive an independent RNG stream from a base seed and a purpose label.
///
/// Identical `(seed, label, index)` always yields an identical stream; any
/// change to either input decorrelates the stream completely.
pub fn stream(seed: u64, label: &str, index: u64) -> ChaCha8Rng {
    let mut hasher = Sha256::new();
    hasher.update(seed.to_le_bytes());
    hasher.update(label.as_bytes());
    hasher.update(index.to_le_bytes());
    let digest = hasher.finalize();
    let mut key = [0u8; 32];
    key.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(key)
}

/// Uniform sample in [0, 1) with 53 bits of entropy.
pub fn uniform<F: Scalar>(rng: &mut ChaCha8Rng) -> F {
    let bits = rng.next_u64() >> 11;
    F::from_f64_lit(bits as f64 * (1.0 / (1u64 << 53) as f64))
}

/// Uniform integer in [0, n). Rejection-sampled, unbiased.
pub fn uniform_usize(rng: &mut ChaCha8Rng, n: usize) -> usize {
    assert!(n > 0, "uniform_usize requires n > 0");
    let n = n as u64;
    let zone = u64::MAX - (u64::MAX % n);
    loop {
        let v = rng.next_u64();
        if v < zone {
            return (v % n) as usize;
        }
    }
}

/// Standard normal via Box-Muller on the crate's own uniforms.
pub fn normal<F: Scalar>(rng: &mut ChaCha8Rng) -> F {
    loop {
        let u1: f64 = uniform::<f64>(rng);
        let u2: f64 = uniform::<f64>(rng);
        if u1 > 0.0 {
            let r = (-2.0 * u1.ln()).sqrt();
            return F::from_f64_lit(r * (2.0 * std::f64::consts::PI * u2).cos());
        }
    }
}

/// In-place Fisher-Yates shuffle.
pub fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = uniform_usize(rng, i + 1);
        items.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u64> = (0..8).map(|_| stream(7, "x", 3).next_u64()).collect();
        let b: Vec<u64> = (0..8).map(|_| stream(7, "x", 3).next_u64()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn streams_decorrelate_on_label() {
        assert_ne!(stream(7, "a", 0).next_u64(), stream(7, "b", 0).next_u64());
        assert_ne!(stream(7, "a", 0).next_u64(), stream(8, "a", 0).next_u64());
        assert_ne!(stream(7, "a", 0).next_u64(), stream(7, "a", 1).next_u64());
    }

    #[test]
    fn normal_moments_are_sane() {
        let mut rng = stream(11, "normal", 0);
        let n = 20_000;
        let samples: Vec<f64> = (0..n).map(|_| normal::<f64>(&mut rng)).collect();
        let mean = samples.iter().sum::<f64>() / n as f64;
        let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.03, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }

    #[test]
    fn uniform_usize_is_unbiased_over_small_range() {
        let mut rng = stream(3, "u", 0);
        let mut counts = [0usize; 5];
        for _ in 0..50_000 {
            counts[uniform_usize(&mut rng, 5)] += 1;
        }
        for c in counts {
            assert!((c as f64 - 10_000.0).abs() < 500.0, "count {c}");
        }
    }
}
