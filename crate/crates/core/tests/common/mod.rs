#![allow(dead_code)]

use grldpc::{parse_element, GroupRingElement, GroupSpec};
use rand::seq::index::sample;
use rand::Rng;

pub fn fixture(name: &str) -> GroupRingElement {
    let path = format!("{}/fixtures/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    parse_element(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub const FIXTURES: [&str; 10] = [
    "c12_repeats",
    "c13_repeats",
    "c15_difference_free",
    "c24x4_w8",
    "c24x4_unit_w7",
    "c126x4_w9",
    "c204x4_w9",
    "staircase_216x648",
    "staircase_324x1296",
    "staircase_384x1152",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Cyclic,
    Product,
    Dihedral,
}

/// A group of the given kind with order in `4..=64`.
pub fn random_group<R: Rng>(kind: Kind, rng: &mut R) -> GroupSpec {
    match kind {
        Kind::Cyclic => GroupSpec::Cyclic(rng.random_range(4..=64)),
        Kind::Product => loop {
            let n = rng.random_range(2..=32);
            let m = rng.random_range(2..=8);
            if n * m <= 64 {
                break GroupSpec::Product(n, m);
            }
        },
        Kind::Dihedral => GroupSpec::Dihedral(rng.random_range(2..=32)),
    }
}

/// Random element with support size in `2..=8` (capped by the group order).
pub fn random_element<R: Rng>(spec: GroupSpec, rng: &mut R) -> GroupRingElement {
    let size = rng.random_range(2..=8.min(spec.order()));
    GroupRingElement::from_indices(spec, sample(rng, spec.order(), size).into_vec()).unwrap()
}
