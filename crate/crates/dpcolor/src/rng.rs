//! Deterministic pseudo-random generator used by every randomized operation.
//!
//! The generator is splitmix64 (Steele, Lea, Flood: "Fast splittable
//! pseudorandom number generators"). It is seeded from a single `u64`, has no
//! platform- or version-dependent behavior, and is cheap enough to reseed per
//! edge. Same seed, same stream, everywhere.

/// splitmix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Derives an independent stream for a keyed subobject (e.g. one edge of
    /// a graph), so per-edge output does not depend on iteration order.
    pub fn derive(seed: u64, key: &[u64]) -> Self {
        let mut mixer = SplitMix64::new(seed);
        let mut state = mixer.next_u64();
        for &k in key {
            state ^= SplitMix64::new(k.wrapping_add(0x9e37_79b9_7f4a_7c15)).next_u64();
            state = SplitMix64::new(state).next_u64();
        }
        SplitMix64 { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` via rejection sampling. `bound` must be
    /// nonzero.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "next_below: bound must be nonzero");
        // Reject the final partial block so every residue is equally likely.
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let raw = self.next_u64();
            if raw < zone {
                return raw % bound;
            }
        }
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }

    /// Picks one element of a nonempty slice.
    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.next_below(items.len() as u64) as usize]
    }
}
