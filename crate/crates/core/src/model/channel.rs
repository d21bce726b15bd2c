//! Block-fading channel realizations.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::config::NetworkConfig;

/// Per-slot, per-device channel power gains over a horizon.
///
/// `gains[t][n] = fading[t][n] * d_n^(-beta)` with the fading factor drawn
/// i.i.d. Exponential(1). Regenerating with the same seed reproduces the
/// gains bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRealization {
    pub gains: Vec<Vec<f64>>,
    pub fading: Vec<Vec<f64>>,
}

impl ChannelRealization {
    pub fn horizon(&self) -> usize {
        self.gains.len()
    }

    pub fn n_devices(&self) -> usize {
        self.gains.first().map_or(0, Vec::len)
    }

    pub fn max_gain(&self) -> f64 {
        self.gains
            .iter()
            .flatten()
            .copied()
            .fold(0.0f64, f64::max)
    }

    pub fn slot(&self, t: usize) -> &[f64] {
        &self.gains[t]
    }
}

/// Seeded RNG used across the crate. ChaCha keeps streams portable and
/// reproducible regardless of platform.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One Exponential(1) draw via inversion; strictly positive.
pub fn exp1<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.gen();
        if u > 0.0 {
            return -u.ln();
        }
    }
}

/// Draw a channel realization for the configured horizon and device set.
pub fn sample_channels<R: Rng>(config: &NetworkConfig, rng: &mut R) -> ChannelRealization {
    let mut gains = Vec::with_capacity(config.horizon_t);
    let mut fading = Vec::with_capacity(config.horizon_t);
    for _ in 0..config.horizon_t {
        let mut g = Vec::with_capacity(config.n_devices);
        let mut f = Vec::with_capacity(config.n_devices);
        for n in 0..config.n_devices {
            let theta = exp1(rng);
            f.push(theta);
            g.push(theta * config.distances[n].powf(-config.pathloss_beta));
        }
        gains.push(g);
        fading.push(f);
    }
    ChannelRealization { gains, fading }
}

/// Convenience: channels drawn from the config's own seed.
pub fn sample_channels_seeded(config: &NetworkConfig, seed: u64) -> ChannelRealization {
    sample_channels(config, &mut rng_from_seed(seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pathloss_identity_case() {
        // theta = 1, d = 1, beta = 2 -> g = 1
        assert!((1.0f64 * 1.0f64.powf(-2.0) - 1.0).abs() < 1e-15);
        // theta = 1, d = 5, beta = 2 -> g = 0.04
        assert!((1.0f64 * 5.0f64.powf(-2.0) - 0.04).abs() < 1e-15);
    }

    #[test]
    fn gains_follow_distance_law() {
        let mut cfg = NetworkConfig::default();
        cfg.distances = vec![1.0, 5.0];
        let ch = sample_channels_seeded(&cfg, 7);
        for t in 0..cfg.horizon_t {
            assert!((ch.gains[t][0] - ch.fading[t][0]).abs() < 1e-15);
            assert!((ch.gains[t][1] - ch.fading[t][1] * 0.04).abs() < 1e-15);
            assert!(ch.gains[t][0] > 0.0 && ch.gains[t][1] > 0.0);
        }
    }

    #[test]
    fn exponential_mean_close_to_one() {
        let mut rng = rng_from_seed(123);
        let draws = 1_000_000usize;
        let mean: f64 = (0..draws).map(|_| exp1(&mut rng)).sum::<f64>() / draws as f64;
        assert!((0.99..=1.01).contains(&mean), "mean {mean}");
    }

    #[test]
    fn same_seed_bit_identical() {
        let cfg = NetworkConfig::default();
        let a = sample_channels_seeded(&cfg, 42);
        let b = sample_channels_seeded(&cfg, 42);
        for (ra, rb) in a.gains.iter().zip(&b.gains) {
            for (x, y) in ra.iter().zip(rb) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }
}
