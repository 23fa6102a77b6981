use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed for every stochastic choice a solver makes. Identical seed and inputs
/// give bit-identical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Deterministic child seed mixed from this seed and `parts`.
    pub fn derive(self, parts: &[u64]) -> RngSeed {
        let mut h = splitmix64(self.0);
        for &p in parts {
            h = splitmix64(h ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        }
        RngSeed(h)
    }
}

impl From<u64> for RngSeed {
    fn from(v: u64) -> Self {
        RngSeed(v)
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
