use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A deterministic random stream identified by `(master_seed, stream_id)`.
///
/// Streams with distinct ids are statistically independent, and re-deriving
/// the same pair always reproduces the same draw sequence, so any single run
/// of a campaign can be replayed in isolation. Backed by ChaCha8, whose
/// 64-bit stream counter gives 2⁶⁴ independent streams per seed.
#[derive(Clone, Debug)]
pub struct RngStream {
    master_seed: u64,
    stream_id: u64,
    rng: ChaCha8Rng,
}

/// Derives the stream for `(master_seed, stream_id)`.
pub fn derive_stream(master_seed: u64, stream_id: u64) -> RngStream {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(stream_id);
    RngStream { master_seed, stream_id, rng }
}

impl RngStream {
    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// The `(master_seed, stream_id)` pair that reproduces this stream.
    pub fn seed_pair(&self) -> (u64, u64) {
        (self.master_seed, self.stream_id)
    }

    /// Draws a Bernoulli(p) variate. Requires 0 ≤ p ≤ 1.
    pub fn gen_bool(&mut self, p: f64) -> bool {
        rand::Rng::gen_bool(&mut self.rng, p)
    }

    /// Derives a fresh child stream family: consumes one draw from this
    /// stream to obtain a new master seed whose ids the caller may then
    /// enumerate without colliding with any other stream.
    pub fn derive_child(&mut self, stream_id: u64) -> RngStream {
        derive_stream(self.next_u64(), stream_id)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_pair_reproduces_identical_output() {
        let a: Vec<u64> = (0..64).map(|_| derive_stream(42, 0).next_u64()).collect();
        let mut s = derive_stream(42, 0);
        let first = s.next_u64();
        assert!(a.iter().all(|&v| v == first));
        assert_eq!(derive_stream(42, 0).next_u64(), derive_stream(42, 0).next_u64());
    }

    #[test]
    fn distinct_stream_ids_differ() {
        let mut a = derive_stream(42, 0);
        let mut b = derive_stream(42, 1);
        let differs = (0..10_000).any(|_| a.next_u64() != b.next_u64());
        assert!(differs);
    }

    #[test]
    fn derivation_is_independent_of_other_streams() {
        let mut fresh = derive_stream(42, 7);
        let expected: Vec<u64> = (0..16).map(|_| fresh.next_u64()).collect();

        let mut unrelated = derive_stream(42, 3);
        for _ in 0..1000 {
            unrelated.next_u64();
        }
        let mut rederived = derive_stream(42, 7);
        let got: Vec<u64> = (0..16).map(|_| rederived.next_u64()).collect();
        assert_eq!(expected, got);
    }

    #[test]
    fn seed_pair_is_recorded() {
        let s = derive_stream(5, 9);
        assert_eq!(s.seed_pair(), (5, 9));
    }
}
