//! Independent stochastic check: draw angles uniformly from (0, π)³, reject
//! until the sum is below π (acceptance probability 1/6), and count how often
//! the strong triangle inequality holds.
//!
//! The generator is pinned to ChaCha8 seeded with `seed_from_u64`, and
//! accepted samples are produced in fixed chunks of 2¹⁶, chunk `i` drawing
//! from stream `i` of the seed. Tallies are integers summed in chunk order,
//! so the estimate is byte-for-byte reproducible at any thread count.

use crate::hyptrig::{self, AngleTriple};
use crate::map_range;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{FRAC_PI_2, PI};

const CHUNK: u64 = 1 << 16;

#[derive(Clone, Copy, Debug)]
pub struct McEstimate {
    pub p_hat: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    /// Success fraction among samples with γ < π/2 (γ ≥ π/2 always fails).
    pub conditional_p_hat: f64,
    pub conditional_std_error: f64,
    /// Successes with γ ≥ π/2; provably zero, reported as a self-check.
    pub obtuse_successes: u64,
}

/// One rejection-sampling proposal: three independent uniforms on (0, π),
/// kept only if they form a valid triple.
pub fn propose_triple<R: Rng>(rng: &mut R) -> Option<AngleTriple> {
    let alpha = PI * rng.gen::<f64>();
    let beta = PI * rng.gen::<f64>();
    let gamma = PI * rng.gen::<f64>();
    AngleTriple::new(alpha, beta, gamma).ok()
}

/// Draws proposals until one is accepted.
pub fn sample_triple<R: Rng>(rng: &mut R) -> AngleTriple {
    loop {
        if let Some(t) = propose_triple(rng) {
            return t;
        }
    }
}

#[derive(Clone, Copy, Default)]
struct Tally {
    successes: u64,
    obtuse_successes: u64,
    conditional_successes: u64,
    conditional_total: u64,
}

fn tally_chunk(rng: &mut ChaCha8Rng, count: u64) -> Tally {
    let mut t = Tally::default();
    for _ in 0..count {
        let angles = sample_triple(rng);
        let holds = hyptrig::sti_holds(angles);
        if holds {
            t.successes += 1;
        }
        if angles.gamma() < FRAC_PI_2 {
            t.conditional_total += 1;
            if holds {
                t.conditional_successes += 1;
            }
        } else if holds {
            t.obtuse_successes += 1;
        }
    }
    t
}

fn binomial_std_error(p: f64, n: u64) -> f64 {
    (p * (1.0 - p) / n as f64).sqrt()
}

pub fn estimate(samples: u64, seed: u64) -> McEstimate {
    assert!(samples >= 1, "need at least one sample");
    let chunks = samples.div_ceil(CHUNK);
    let tallies: Vec<Tally> = map_range(chunks as usize, |i| {
        let start = i as u64 * CHUNK;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        tally_chunk(&mut rng, CHUNK.min(samples - start))
    });
    let mut total = Tally::default();
    for t in tallies {
        total.successes += t.successes;
        total.obtuse_successes += t.obtuse_successes;
        total.conditional_successes += t.conditional_successes;
        total.conditional_total += t.conditional_total;
    }
    let p_hat = total.successes as f64 / samples as f64;
    let (conditional_p_hat, conditional_std_error) = if total.conditional_total > 0 {
        let p = total.conditional_successes as f64 / total.conditional_total as f64;
        (p, binomial_std_error(p, total.conditional_total))
    } else {
        (0.0, 0.0)
    };
    McEstimate {
        p_hat,
        std_error: binomial_std_error(p_hat, samples),
        samples,
        seed,
        conditional_p_hat,
        conditional_std_error,
        obtuse_successes: total.obtuse_successes,
    }
}
