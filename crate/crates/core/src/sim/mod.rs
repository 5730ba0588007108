//! BPSK over AWGN with belief-propagation decoding.

pub mod channel;
pub mod decoder;
pub mod sweep;

pub use channel::{q_function, transmit, uncoded_bpsk_reference, ChannelPoint};
pub use decoder::{BpAlgorithm, BpDecoder, DecodeResult, DecoderParams};
pub use sweep::{
    binomial_std_error, block_seed, run_ber_sweep, Encoder, Mode, PointStats, SimCode,
    SimulationReport, StopRule, RNG_ALGORITHM,
};
