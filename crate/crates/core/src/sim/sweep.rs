//! Monte-Carlo BER/BLER sweeps.
//!
//! Blocks are simulated in fixed-size batches. Each block draws from its own
//! ChaCha8 stream seeded from `(seed, point, block)`, and the stop rule is
//! evaluated only between batches, so a report depends on the seed and
//! configuration alone, never on thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::channel::{transmit, ChannelPoint};
use super::decoder::{BpDecoder, DecoderParams};
use crate::code::systematic_form;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

pub const RNG_ALGORITHM: &str =
    "ChaCha8 (rand_chacha), per-block seed = splitmix64(seed, point, block)";

const BATCH: u64 = 256;

/// Encodes messages as `m·G`.
#[derive(Debug, Clone)]
pub struct Encoder {
    generator: BitMatrix,
}

impl Encoder {
    pub fn new(generator: BitMatrix) -> Self {
        Encoder { generator }
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        if message.len() != self.k() {
            return Err(Error::DimensionMismatch(format!(
                "message of length {} for a code of dimension {}",
                message.len(),
                self.k()
            )));
        }
        let mut word = vec![0u64; self.n().div_ceil(64)];
        for (t, &b) in message.iter().enumerate() {
            if b & 1 == 1 {
                for (w, x) in word.iter_mut().zip(self.generator.row_words(t)) {
                    *w ^= x;
                }
            }
        }
        Ok((0..self.n())
            .map(|j| (word[j / 64] >> (j % 64) & 1) as u8)
            .collect())
    }
}

/// A code prepared for simulation: its decoder, a systematic encoder and
/// the information positions used for error counting.
#[derive(Debug, Clone)]
pub struct SimCode {
    decoder: BpDecoder,
    encoder: Encoder,
    info_positions: Vec<usize>,
}

impl SimCode {
    /// Requires `h` to have full row rank.
    pub fn from_check(h: &BitMatrix) -> Result<Self> {
        let sys = systematic_form(h)?;
        Ok(SimCode {
            decoder: BpDecoder::new(h),
            encoder: Encoder::new(sys.generator),
            info_positions: sys.info_positions,
        })
    }

    /// Uncoded transmission of `n` bits per block: no checks, hard decisions.
    pub fn uncoded(n: usize) -> Self {
        SimCode::from_check(&BitMatrix::zeros(0, n)).expect("empty check matrix has full rank")
    }

    pub fn n(&self) -> usize {
        self.decoder.n()
    }

    pub fn k(&self) -> usize {
        self.info_positions.len()
    }

    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n() as f64
    }

    pub fn encoder(&self) -> &Encoder {
        &self.encoder
    }

    pub fn decoder(&self) -> &BpDecoder {
        &self.decoder
    }

    pub fn info_positions(&self) -> &[usize] {
        &self.info_positions
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StopRule {
    pub min_block_errors: u64,
    pub max_blocks: u64,
    pub max_bits: u64,
}

impl Default for StopRule {
    fn default() -> Self {
        StopRule {
            min_block_errors: 100,
            max_blocks: u64::MAX,
            max_bits: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Transmit the all-zero codeword (valid for linear codes on a symmetric channel).
    AllZero,
    /// Encode a fresh uniformly random message per block.
    RandomMessages,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointStats {
    pub ebno_db: f64,
    pub noise_sigma: f64,
    pub bits: u64,
    pub bit_errors: u64,
    pub ber: f64,
    pub blocks: u64,
    pub block_errors: u64,
    pub bler: f64,
    pub avg_iters: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub rng_algorithm: String,
    pub rng_seed: u64,
    pub n: usize,
    pub k: usize,
    pub decoder: DecoderParams,
    pub stop_rule: StopRule,
    pub mode: Mode,
    pub points: Vec<PointStats>,
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    bits: u64,
    bit_errors: u64,
    blocks: u64,
    block_errors: u64,
    iterations: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            bits: self.bits + o.bits,
            bit_errors: self.bit_errors + o.bit_errors,
            blocks: self.blocks + o.blocks,
            block_errors: self.block_errors + o.block_errors,
            iterations: self.iterations + o.iterations,
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

pub fn block_seed(seed: u64, point: u64, block: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(seed) ^ point) ^ block)
}

fn simulate_block(
    code: &SimCode,
    point: &ChannelPoint,
    params: &DecoderParams,
    mode: Mode,
    seed: u64,
) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = code.k();
    let (message, codeword) = match mode {
        Mode::AllZero => (vec![0u8; k], vec![0u8; code.n()]),
        Mode::RandomMessages => {
            let m: Vec<u8> = (0..k).map(|_| rng.random::<bool>() as u8).collect();
            let c = code.encoder.encode(&m).expect("message length matches");
            (m, c)
        }
    };
    let llr = transmit(&codeword, point, &mut rng);
    let out = code.decoder.decode(&llr, params);
    let errors = code
        .info_positions
        .iter()
        .zip(&message)
        .filter(|(&p, &b)| out.bits[p] != b)
        .count() as u64;
    Tally {
        bits: k as u64,
        bit_errors: errors,
        blocks: 1,
        block_errors: (errors > 0) as u64,
        iterations: out.iterations as u64,
    }
}

pub fn run_ber_sweep(
    code: &SimCode,
    ebno_db: &[f64],
    params: &DecoderParams,
    stop: &StopRule,
    mode: Mode,
    seed: u64,
) -> Result<SimulationReport> {
    params.validate()?;
    if code.k() == 0 {
        return Err(Error::InvalidConfig("code has dimension 0".into()));
    }
    if stop.max_blocks == 0 || stop.max_bits == 0 {
        return Err(Error::InvalidConfig("stop rule allows no blocks".into()));
    }
    let mut points = Vec::with_capacity(ebno_db.len());
    for (pi, &db) in ebno_db.iter().enumerate() {
        let point = ChannelPoint::new(db, code.rate())?;
        let mut tally = Tally::default();
        loop {
            let remaining_blocks = stop.max_blocks - tally.blocks;
            let remaining_bits =
                (stop.max_bits - tally.bits.min(stop.max_bits)).div_ceil(code.k() as u64);
            let batch = BATCH.min(remaining_blocks).min(remaining_bits);
            if batch == 0 {
                break;
            }
            let start = tally.blocks;
            let t = (start..start + batch)
                .into_par_iter()
                .map(|b| simulate_block(code, &point, params, mode, block_seed(seed, pi as u64, b)))
                .collect::<Vec<_>>()
                .into_iter()
                .fold(Tally::default(), Tally::merge);
            tally = tally.merge(t);
            if tally.block_errors >= stop.min_block_errors
                || tally.blocks >= stop.max_blocks
                || tally.bits >= stop.max_bits
            {
                break;
            }
        }
        let ratio = |a: u64, b: u64| if b == 0 { 0.0 } else { a as f64 / b as f64 };
        points.push(PointStats {
            ebno_db: db,
            noise_sigma: point.noise_sigma,
            bits: tally.bits,
            bit_errors: tally.bit_errors,
            ber: ratio(tally.bit_errors, tally.bits),
            blocks: tally.blocks,
            block_errors: tally.block_errors,
            bler: ratio(tally.block_errors, tally.blocks),
            avg_iters: ratio(tally.iterations, tally.blocks),
        });
    }
    Ok(SimulationReport {
        rng_algorithm: RNG_ALGORITHM.to_string(),
        rng_seed: seed,
        n: code.n(),
        k: code.k(),
        decoder: *params,
        stop_rule: *stop,
        mode,
        points,
    })
}

/// Binomial standard error of an error-rate estimate, `sqrt(p(1 − p)/N)`.
pub fn binomial_std_error(p: f64, trials: u64) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}
