//! LDPC codes from units in the group algebra GF(2)G.
//!
//! The pipeline: pick a sparse element `v` of GF(2)G ([`ring`]), certify
//! that its matrix has no 4-cycles from its differences alone ([`cycles`]),
//! invert it and select rows to obtain generator and check matrices
//! ([`code`]), then measure BER over BPSK/AWGN with belief propagation
//! ([`sim`]).

pub mod alist;
pub mod code;
pub mod cycles;
pub mod error;
pub mod gf2;
pub mod group;
pub mod report;
pub mod ring;
pub mod search;
pub mod sim;
pub mod text;

pub use code::{build_code, CheckMatrix, Code, Selection};
pub use cycles::{brute_force_four_cycle, certify_girth_gt4, difference_collection, Certification};
pub use error::{Error, Result};
pub use gf2::BitMatrix;
pub use group::{GroupElement, GroupSpec};
pub use ring::GroupRingElement;
pub use text::parse_element;
