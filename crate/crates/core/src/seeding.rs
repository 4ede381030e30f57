//! Deterministic seed derivation and RNG construction.
//!
//! Every randomized stage draws from a ChaCha8 stream derived from the
//! top-level run seed plus a purpose label (and usually a region or tree
//! index). Derivation is a SplitMix64 chain over the label bytes, so the
//! stage seeds are stable across platforms and independent of execution
//! order. Parallel and serial runs consume identical streams.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 step; the standard finalizer used to expand seed material.
#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a child seed from a parent seed and a purpose label.
///
/// Mixes the label bytes into a SplitMix64 chain keyed by the parent seed.
pub fn derive_seed(parent: u64, label: &str) -> u64 {
    let mut state = parent ^ 0x6a09_e667_f3bc_c908;
    let mut out = splitmix64(&mut state);
    for chunk in label.as_bytes().chunks(8) {
        let mut word = [0u8; 8];
        word[..chunk.len()].copy_from_slice(chunk);
        state ^= u64::from_le_bytes(word);
        out = splitmix64(&mut state);
    }
    out
}

/// RNG for a derived stream: `seed` selects the key, `stream` the ChaCha
/// stream counter. Used to split one seed into independent substreams
/// (e.g. one per tree) without sequential dependence.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Convenience for the common single-stream case.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    stream_rng(seed, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn derive_is_stable_and_label_sensitive() {
        let a = derive_seed(42, "split/regionA");
        let b = derive_seed(42, "split/regionA");
        let c = derive_seed(42, "split/regionB");
        let d = derive_seed(43, "split/regionA");
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn streams_are_independent_of_draw_order() {
        let mut r0 = stream_rng(7, 0);
        let mut r1 = stream_rng(7, 1);
        let a0: u64 = r0.random();
        let a1: u64 = r1.random();
        // Re-create in the opposite order; draws must not change.
        let mut r1b = stream_rng(7, 1);
        let mut r0b = stream_rng(7, 0);
        assert_eq!(a1, r1b.random::<u64>());
        assert_eq!(a0, r0b.random::<u64>());
    }
}
