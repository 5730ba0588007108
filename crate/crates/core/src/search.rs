//! Seeded random search for sparse elements with girth > 4.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_rational::Ratio;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cycles::certify_girth_gt4;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::ring::GroupRingElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub group: GroupSpec,
    pub support_sizes: RangeInclusive<usize>,
    /// Number of random supports drawn. Repeated draws are tested once.
    pub max_candidates: usize,
    pub seed: u64,
    /// Keep only candidates that are units.
    pub require_unit: bool,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = (*self.support_sizes.start(), *self.support_sizes.end());
        if lo < 2 || lo > hi {
            return Err(Error::InvalidConfig(format!(
                "support sizes {lo}..={hi}: need 2 <= min <= max"
            )));
        }
        if hi > self.group.order() {
            return Err(Error::InvalidConfig(format!(
                "support size {hi} exceeds group order {}",
                self.group.order()
            )));
        }
        if self.max_candidates == 0 {
            return Err(Error::InvalidConfig("max_candidates must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    #[serde(serialize_with = "as_text")]
    pub element: GroupRingElement,
    pub certified: bool,
    /// `None` when the unit test was skipped (uncertified and not required).
    pub unit: Option<bool>,
    #[serde(serialize_with = "as_fraction")]
    pub density: Ratio<usize>,
}

fn as_text<S: serde::Serializer>(
    e: &GroupRingElement,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(e)
}

fn as_fraction<S: serde::Serializer>(
    r: &Ratio<usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// Draws supports with ChaCha8 seeded from `cfg.seed`, certifies each and
/// tests certified ones for invertibility. Sorted with certified units
/// first, then certified non-units, then the rest, each by density and
/// then support.
pub fn search_units(cfg: &SearchConfig) -> Result<Vec<Candidate>> {
    cfg.validate()?;
    let order = cfg.group.order();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..cfg.max_candidates {
        let size = rng.random_range(cfg.support_sizes.clone());
        let mut support = sample(&mut rng, order, size).into_vec();
        support.sort_unstable();
        if !seen.insert(support.clone()) {
            continue;
        }
        let element = GroupRingElement::from_indices(cfg.group, support)?;
        let certified = certify_girth_gt4(&element).is_certified();
        let unit = (certified || cfg.require_unit).then(|| element.is_unit());
        if cfg.require_unit && unit != Some(true) {
            continue;
        }
        let density = element.density();
        out.push(Candidate {
            element,
            certified,
            unit,
            density,
        });
    }
    out.sort_by(|a, b| {
        let rank = |c: &Candidate| match (c.certified, c.unit) {
            (true, Some(true)) => 0,
            (true, _) => 1,
            _ => 2,
        };
        rank(a)
            .cmp(&rank(b))
            .then(a.density.cmp(&b.density))
            .then_with(|| a.element.support().cmp(b.element.support()))
    });
    Ok(out)
}
