//! Unit-derived codes.
//!
//! From a unit `v` with inverse `u`, choosing a row set `R` of φ(u) gives the
//! generator `G = φ(u)[R, :]`. Deleting the same columns from φ(v) and
//! transposing gives the check matrix `H = φ(v)[:, C]ᵀ` with `C` the
//! complement of `R`. Since `φ(u)φ(v) = I`, `G·Hᵀ = I[R, C] = 0`.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cycles::{brute_force_four_cycle, conflict_free_columns, Witness};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::ring::GroupRingElement;
use crate::text::parse_element;

/// How the generator rows (equivalently, the deleted check columns) were chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Selection {
    /// Delete `count` columns spread evenly: `⌊i·n/count⌋` for `i < count`.
    Interleaved {
        count: usize,
    },
    /// `count` columns drawn uniformly with a seeded ChaCha8 generator.
    Random {
        count: usize,
        seed: u64,
    },
    Explicit {
        rows: Vec<usize>,
    },
    /// Keep the greedy conflict-free columns of φ(v), delete the rest.
    ConflictAvoiding,
}

impl Selection {
    /// Resolves to the sorted list of deleted columns for a group of order `n`.
    pub fn resolve(&self, v: &GroupRingElement) -> Result<Vec<usize>> {
        let n = v.spec().order();
        let check_count = |count: usize| {
            if count == 0 || count >= n {
                Err(Error::DegenerateSelection {
                    selected: count,
                    order: n,
                })
            } else {
                Ok(())
            }
        };
        match self {
            Selection::Interleaved { count } => {
                check_count(*count)?;
                Ok(interleaved(n, *count))
            }
            Selection::Random { count, seed } => {
                check_count(*count)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut rows = sample(&mut rng, n, *count).into_vec();
                rows.sort_unstable();
                Ok(rows)
            }
            Selection::Explicit { rows } => {
                let mut rows = rows.clone();
                rows.sort_unstable();
                rows.dedup();
                if let Some(&bad) = rows.iter().find(|&&r| r >= n) {
                    return Err(Error::IndexOutOfRange {
                        index: bad,
                        order: n,
                    });
                }
                Ok(rows)
            }
            Selection::ConflictAvoiding => {
                let keep = conflict_free_columns(v);
                Ok(complement(n, &keep))
            }
        }
    }
}

/// `⌊i·n/count⌋` for `i < count`; every other index when `count = n/2`.
pub fn interleaved(n: usize, count: usize) -> Vec<usize> {
    (0..count).map(|i| i * n / count).collect()
}

pub fn complement(n: usize, sorted: &[usize]) -> Vec<usize> {
    let mut mark = vec![false; n];
    for &i in sorted {
        mark[i] = true;
    }
    (0..n).filter(|&i| !mark[i]).collect()
}

/// Enough to regenerate a check matrix row by row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Origin {
    pub group: String,
    pub element: String,
    pub selection: Selection,
    /// Size of an appended dual-diagonal block, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub staircase: Option<usize>,
}

impl Origin {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn element(&self) -> Result<GroupRingElement> {
        let v = parse_element(&self.element)?;
        if v.spec().to_string() != self.group {
            return Err(Error::Parse(format!(
                "origin group {} does not match element group {}",
                self.group,
                v.spec()
            )));
        }
        Ok(v)
    }

    /// Columns of φ(v) that survive deletion, i.e. the check rows in order.
    pub fn kept_columns(&self) -> Result<Vec<usize>> {
        let v = self.element()?;
        let deleted = self.selection.resolve(&v)?;
        Ok(complement(v.spec().order(), &deleted))
    }

    /// Row `i` of the check matrix as ascending column indices, computed
    /// without materializing any matrix.
    pub fn check_row(&self, i: usize) -> Result<Vec<usize>> {
        let v = self.element()?;
        let kept = self.kept_columns()?;
        self.row_from(&v, &kept, i)
    }

    fn row_from(&self, v: &GroupRingElement, kept: &[usize], i: usize) -> Result<Vec<usize>> {
        let &c = kept.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            order: kept.len(),
        })?;
        let mut row = v.matrix_col(c);
        if self.staircase.is_some() {
            let base = v.spec().order();
            if i > 0 {
                row.push(base + i - 1);
            }
            row.push(base + i);
        }
        Ok(row)
    }

    pub fn regenerate(&self) -> Result<CheckMatrix> {
        let v = self.element()?;
        let kept = self.kept_columns()?;
        if let Some(m) = self.staircase {
            if m != kept.len() {
                return Err(Error::DimensionMismatch(format!(
                    "staircase of size {m} against {} check rows",
                    kept.len()
                )));
            }
        }
        let cols = v.spec().order() + self.staircase.unwrap_or(0);
        let supports = (0..kept.len())
            .map(|i| self.row_from(&v, &kept, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(CheckMatrix {
            bits: BitMatrix::from_row_supports(cols, supports),
            origin: Some(self.clone()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    pub bits: BitMatrix,
    pub origin: Option<Origin>,
}

impl CheckMatrix {
    pub fn from_bits(bits: BitMatrix) -> Self {
        CheckMatrix { bits, origin: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub bits: BitMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeDesign {
    pub v: GroupRingElement,
    pub u: GroupRingElement,
    pub selected_rows: Vec<usize>,
}

impl CodeDesign {
    pub fn n(&self) -> usize {
        self.v.spec().order()
    }

    pub fn k(&self) -> usize {
        self.selected_rows.len()
    }

    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n() as f64
    }
}

#[derive(Debug, Clone)]
pub struct Code {
    pub design: CodeDesign,
    pub generator: GeneratorMatrix,
    pub check: CheckMatrix,
}

/// Check matrix `φ(v)[:, kept]ᵀ`; needs no inverse.
pub fn check_from_columns(v: &GroupRingElement, kept: &[usize]) -> Result<BitMatrix> {
    let n = v.spec().order();
    if let Some(&bad) = kept.iter().find(|&&c| c >= n) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            order: n,
        });
    }
    Ok(BitMatrix::from_row_supports(
        n,
        kept.iter().map(|&c| v.matrix_col(c)),
    ))
}

pub fn build_code(v: &GroupRingElement, selection: &Selection) -> Result<Code> {
    let n = v.spec().order();
    let selected = selection.resolve(v)?;
    if selected.is_empty() || selected.len() >= n {
        return Err(Error::DegenerateSelection {
            selected: selected.len(),
            order: n,
        });
    }
    let u = v.try_invert()?;
    let generator = u.to_matrix().bits().select_rows(&selected);
    let kept = complement(n, &selected);
    let check = check_from_columns(v, &kept)?;
    let origin = Origin {
        group: v.spec().to_string(),
        element: v.to_string(),
        selection: match selection {
            Selection::Explicit { .. } => Selection::Explicit {
                rows: selected.clone(),
            },
            other => other.clone(),
        },
        staircase: None,
    };
    Ok(Code {
        design: CodeDesign {
            v: v.clone(),
            u,
            selected_rows: selected,
        },
        generator: GeneratorMatrix { bits: generator },
        check: CheckMatrix {
            bits: check,
            origin: Some(origin),
        },
    })
}

pub fn girth_check(h: &CheckMatrix) -> Option<Witness> {
    brute_force_four_cycle(&h.bits)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityStats {
    pub rows: usize,
    pub cols: usize,
    pub ones: usize,
    /// weight -> number of rows with that weight
    pub row_weights: BTreeMap<usize, usize>,
    pub col_weights: BTreeMap<usize, usize>,
    pub max_row_weight: usize,
    pub max_col_weight: usize,
    pub density: f64,
}

pub fn density_stats(h: &CheckMatrix) -> DensityStats {
    let b = &h.bits;
    let mut row_weights = BTreeMap::new();
    for i in 0..b.rows() {
        *row_weights.entry(b.row_weight(i)).or_insert(0) += 1;
    }
    let mut col_weights = BTreeMap::new();
    for w in b.col_weights() {
        *col_weights.entry(w).or_insert(0) += 1;
    }
    let ones = b.weight();
    let cells = b.rows() * b.cols();
    DensityStats {
        rows: b.rows(),
        cols: b.cols(),
        ones,
        max_row_weight: row_weights.keys().next_back().copied().unwrap_or(0),
        max_col_weight: col_weights.keys().next_back().copied().unwrap_or(0),
        row_weights,
        col_weights,
        density: if cells == 0 {
            0.0
        } else {
            ones as f64 / cells as f64
        },
    }
}

/// The `m × m` dual-diagonal block: ones at `(i, i)` and `(i, i − 1)`.
pub fn staircase(m: usize) -> BitMatrix {
    let mut s = BitMatrix::zeros(m, m);
    for i in 0..m {
        s.set(i, i, true);
        if i > 0 {
            s.set(i, i - 1, true);
        }
    }
    s
}

/// `[A | S]` for an `m × (n_total − m)` matrix `A`.
pub fn staircase_augment(a: &BitMatrix, n_total: usize) -> Result<BitMatrix> {
    let m = a.rows();
    if m == 0 || a.cols() + m != n_total {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{}, expected {m}x{} for total length {n_total}",
            m,
            a.cols(),
            n_total.saturating_sub(m)
        )));
    }
    Ok(a.hstack(&staircase(m)))
}

/// Staircase-augmented check matrix whose left part is the `m` surviving
/// columns of φ(v) under the interleaved deletion pattern.
pub fn staircase_code(v: &GroupRingElement, m: usize) -> Result<CheckMatrix> {
    let order = v.spec().order();
    if m == 0 || m >= order {
        return Err(Error::DegenerateSelection { selected: m, order });
    }
    let origin = Origin {
        group: v.spec().to_string(),
        element: v.to_string(),
        selection: Selection::Interleaved { count: order - m },
        staircase: Some(m),
    };
    let a = check_from_columns(v, &origin.kept_columns()?)?;
    Ok(CheckMatrix {
        bits: staircase_augment(&a, order + m)?,
        origin: Some(origin),
    })
}

/// A check matrix reduced to `[P | I]` up to a column permutation, with a
/// matching dense generator.
#[derive(Debug, Clone)]
pub struct Systematic {
    /// Column order putting `H` in `[P | I]` form: information columns first.
    pub permutation: Vec<usize>,
    pub h: BitMatrix,
    /// `k × n` generator in the original column order; row `t` carries a
    /// one at `info_positions[t]` and zeros at the other information positions.
    pub generator: BitMatrix,
    pub info_positions: Vec<usize>,
}

pub fn systematic_form(h: &BitMatrix) -> Result<Systematic> {
    let (m, n) = (h.rows(), h.cols());
    let mut r = h.clone();
    let pivots = r.rref_in_place();
    if pivots.len() < m {
        return Err(Error::RankDeficient {
            rank: pivots.len(),
            rows: m,
        });
    }
    let info_positions = complement(n, &pivots);
    let permutation: Vec<usize> = info_positions.iter().chain(&pivots).copied().collect();
    let mut generator = BitMatrix::zeros(info_positions.len(), n);
    for (t, &f) in info_positions.iter().enumerate() {
        generator.set(t, f, true);
        for (i, &p) in pivots.iter().enumerate() {
            if r.get(i, f) {
                generator.set(t, p, true);
            }
        }
    }
    Ok(Systematic {
        h: r.select_cols(&permutation),
        permutation,
        generator,
        info_positions,
    })
}
