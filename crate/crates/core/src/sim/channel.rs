use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};

/// An Eb/N0 operating point for unit-energy BPSK at a given code rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelPoint {
    pub ebno_db: f64,
    pub rate: f64,
    pub noise_sigma: f64,
}

impl ChannelPoint {
    /// `σ = sqrt(1 / (2·R·10^(Eb/N0 / 10)))`
    pub fn new(ebno_db: f64, rate: f64) -> Result<Self> {
        if !(rate > 0.0 && rate <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "code rate {rate} not in (0, 1]"
            )));
        }
        let noise_sigma = (1.0 / (2.0 * rate * 10f64.powf(ebno_db / 10.0))).sqrt();
        if !(noise_sigma > 0.0 && noise_sigma.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "Eb/N0 {ebno_db} dB gives noise sigma {noise_sigma}"
            )));
        }
        Ok(ChannelPoint {
            ebno_db,
            rate,
            noise_sigma,
        })
    }

    /// A point with an explicit noise level, mainly for tests.
    pub fn with_sigma(noise_sigma: f64) -> Self {
        ChannelPoint {
            ebno_db: f64::NAN,
            rate: 1.0,
            noise_sigma,
        }
    }
}

/// Maps bit `b` to `1 − 2b`, adds N(0, σ²) noise and returns `2y/σ²`.
pub fn transmit<R: Rng + ?Sized>(codeword: &[u8], point: &ChannelPoint, rng: &mut R) -> Vec<f64> {
    let sigma = point.noise_sigma;
    let noise = Normal::new(0.0, sigma).expect("sigma is positive and finite");
    let scale = 2.0 / (sigma * sigma);
    codeword
        .iter()
        .map(|&b| {
            let x = 1.0 - 2.0 * f64::from(b & 1);
            scale * (x + noise.sample(rng))
        })
        .collect()
}

/// Gaussian tail `Q(x) = erfc(x/√2)/2`.
pub fn q_function(x: f64) -> f64 {
    0.5 * erfc(x / std::f64::consts::SQRT_2)
}

/// Analytic BER of uncoded BPSK, `Q(sqrt(2·Eb/N0))`.
pub fn uncoded_bpsk_reference(ebno_db: f64) -> f64 {
    if ebno_db == f64::INFINITY {
        return 0.0;
    }
    if ebno_db == f64::NEG_INFINITY {
        return 0.5;
    }
    q_function((2.0 * 10f64.powf(ebno_db / 10.0)).sqrt())
}
