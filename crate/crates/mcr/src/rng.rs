//! Pinned pseudo-random number generation.
//!
//! Wall shuffles, actor seed streams, and policy sampling all have to replay
//! bit-identically across builds and platforms, so this module pins a small,
//! fully specified generator instead of depending on an external RNG crate
//! whose algorithms may change between versions.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood; the public-domain
//! reference implementation by Sebastiano Vigna):
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output = z ^ (z >> 31)
//! ```
//!
//! Bounded sampling uses Lemire's multiply-shift method with rejection, and
//! shuffling is a Fisher–Yates pass from the high index down. Both procedures
//! are spelled out on the corresponding methods; together with the generator
//! above they make every shuffle a pure function of the 64-bit seed.

/// SplitMix64 generator state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Next 64 raw bits.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[0, n)` via Lemire's multiply-shift with
    /// rejection: draw `x`, form the 128-bit product `x * n`; if the low
    /// 64 bits fall below `(-n) mod n` the draw is rejected, otherwise the
    /// high 64 bits are the result.
    ///
    /// Panics if `n == 0`.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "next_below(0)");
        loop {
            let x = self.next_u64();
            let m = (x as u128) * (n as u128);
            let lo = m as u64;
            if lo < n {
                let threshold = n.wrapping_neg() % n;
                if lo < threshold {
                    continue;
                }
            }
            return (m >> 64) as u64;
        }
    }

    /// Uniform float in `[0, 1)` built from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal sample (Box–Muller, using two `next_f64` draws).
    pub fn next_normal(&mut self) -> f64 {
        let mut u1 = self.next_f64();
        while u1 <= 0.0 {
            u1 = self.next_f64();
        }
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// In-place Fisher–Yates shuffle: for `i` from `len-1` down to `1`,
    /// swap `slice[i]` with `slice[next_below(i + 1)]`.
    pub fn shuffle<T>(&mut self, slice: &mut [T]) {
        for i in (1..slice.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            slice.swap(i, j);
        }
    }
}

/// Derives an independent child seed for stream `index` of a base seed.
///
/// Defined as the first SplitMix64 output of
/// `base ^ (index + 1) * 0x9E3779B97F4A7C15`, which keeps per-actor and
/// per-seat streams decorrelated while remaining reproducible.
pub fn substream(base: u64, index: u64) -> u64 {
    SplitMix64::new(base ^ (index.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15)).next_u64()
}
