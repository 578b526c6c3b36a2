//! Minimal deterministic pseudo-random stream for restart seeding and tests.
//!
//! xorshift64* (Marsaglia's xorshift with the 13/7/17 shift triple, output
//! multiplied by 2685821657736338717). The algorithm is pinned here so that
//! identical seeds give identical graphs on every platform and in every
//! future build; reports that embed a seed stay reproducible.

/// xorshift64* stream. State must be nonzero; a zero seed is remapped to a
/// fixed odd constant.
#[derive(Clone, Debug)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> XorShift64Star {
        XorShift64Star {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in `0..bound` by rejection from the top 32 bits; `bound >= 1`.
    #[inline]
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound >= 1);
        // rejection zone keeps the draw exactly uniform
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}
