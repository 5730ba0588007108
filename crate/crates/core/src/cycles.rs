//! Collections of group differences and 4-cycle detection.
//!
//! For a support `S`, the difference collection is the multiset of
//! `s·t⁻¹` over ordered pairs of distinct `s, t ∈ S`. The matrix φ(v) has a
//! 4-cycle in its Tanner graph exactly when this multiset has a repeat.
//! [`brute_force_four_cycle`] checks the same property straight from the
//! matrix and shares no code with the difference machinery.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::gf2::{and_popcount, BitMatrix};
use crate::group::{GroupElement, GroupSpec};
use crate::ring::GroupRingElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceCollection {
    spec: GroupSpec,
    counts: BTreeMap<GroupElement, usize>,
}

impl DifferenceCollection {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn counts(&self) -> &BTreeMap<GroupElement, usize> {
        &self.counts
    }

    pub fn multiplicity(&self, x: GroupElement) -> usize {
        self.counts.get(&x).copied().unwrap_or(0)
    }

    /// Total multiplicity, `r(r − 1)` for a support of size `r`.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// The multiset as listing indices, ascending, with repeats.
    pub fn sorted_indices(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|(x, &c)| std::iter::repeat_n(x.index(), c))
            .collect()
    }

    /// Elements occurring more than once.
    pub fn repeated(&self) -> Vec<GroupElement> {
        self.counts
            .iter()
            .filter(|(_, &c)| c > 1)
            .map(|(&x, _)| x)
            .collect()
    }

    pub fn has_repeats(&self) -> bool {
        self.counts.values().any(|&c| c > 1)
    }
}

pub fn difference_collection(v: &GroupRingElement) -> DifferenceCollection {
    let spec = v.spec();
    let mut counts = BTreeMap::new();
    for &s in v.support() {
        for &t in v.support() {
            if s != t {
                let d = spec.mul_index(s, spec.inv_index(t));
                *counts
                    .entry(spec.element_at(d).expect("in range"))
                    .or_insert(0) += 1;
            }
        }
    }
    DifferenceCollection { spec, counts }
}

pub fn has_repeats(d: &DifferenceCollection) -> bool {
    d.has_repeats()
}

/// Support elements `(m, r, p, q)` with `m·r⁻¹ = p·q⁻¹`, `(m, r) ≠ (p, q)`.
/// Entries may repeat when three support elements are involved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Quadruple {
    pub m: GroupElement,
    pub r: GroupElement,
    pub p: GroupElement,
    pub q: GroupElement,
}

impl Quadruple {
    /// The shared difference `m·r⁻¹`.
    pub fn difference(&self, spec: GroupSpec) -> GroupElement {
        spec.difference(self.m, self.r).expect("in range")
    }

    /// Rows `y` and `y·δ` of φ(v) share two columns for each returned `δ`.
    pub fn shifts(&self, spec: GroupSpec) -> [GroupElement; 2] {
        let d = self.difference(spec);
        [d, spec.inverse(d).expect("in range")]
    }

    pub fn verifies(&self, spec: GroupSpec) -> bool {
        spec.difference(self.m, self.r).ok() == spec.difference(self.p, self.q).ok()
            && (self.m, self.r) != (self.p, self.q)
            && self.m != self.r
            && self.p != self.q
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictReport {
    pub quadruples: Vec<Quadruple>,
    pub forbidden_shifts: BTreeSet<GroupElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    Certified,
    Conflicts(ConflictReport),
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified)
    }
}

/// Decides whether φ(v) is free of 4-cycles. On failure every conflicting
/// quadruple is listed, each unordered pair of ordered pairs once.
pub fn certify_girth_gt4(v: &GroupRingElement) -> Certification {
    let spec = v.spec();
    let mut by_diff: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &s in v.support() {
        for &t in v.support() {
            if s != t {
                let d = spec.mul_index(s, spec.inv_index(t));
                by_diff.entry(d).or_default().push((s, t));
            }
        }
    }
    let el = |i: usize| spec.element_at(i).expect("in range");
    let mut quadruples = Vec::new();
    let mut forbidden_shifts = BTreeSet::new();
    for (&d, pairs) in &by_diff {
        if pairs.len() < 2 {
            continue;
        }
        forbidden_shifts.insert(el(d));
        forbidden_shifts.insert(el(spec.inv_index(d)));
        for (a, &(m, r)) in pairs.iter().enumerate() {
            for &(p, q) in &pairs[a + 1..] {
                quadruples.push(Quadruple {
                    m: el(m),
                    r: el(r),
                    p: el(p),
                    q: el(q),
                });
            }
        }
    }
    if quadruples.is_empty() {
        Certification::Certified
    } else {
        Certification::Conflicts(ConflictReport {
            quadruples,
            forbidden_shifts,
        })
    }
}

/// Two rows and two columns whose four entries are all one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

/// Scans column pairs for two shared nonzero rows.
pub fn brute_force_four_cycle(m: &BitMatrix) -> Option<Witness> {
    let t = m.transpose();
    for k in 0..t.rows() {
        let ck = t.row_words(k);
        for l in k + 1..t.rows() {
            if and_popcount(ck, t.row_words(l)) >= 2 {
                let mut shared = (0..m.rows()).filter(|&i| t.get(k, i) && t.get(l, i));
                let i = shared.next().expect("two shared rows");
                let j = shared.next().expect("two shared rows");
                return Some(Witness {
                    rows: (i, j),
                    cols: (k, l),
                });
            }
        }
    }
    None
}

/// Greedy selection of rows of φ(v), in ascending order, so that no two
/// chosen rows differ by a forbidden shift. The chosen rows are 4-cycle free.
pub fn conflict_free_rows(v: &GroupRingElement, report: Option<&ConflictReport>) -> Vec<usize> {
    let spec = v.spec();
    let n = spec.order();
    let Some(report) = report else {
        return (0..n).collect();
    };
    let shifts: Vec<usize> = report.forbidden_shifts.iter().map(|s| s.index()).collect();
    let mut chosen = vec![false; n];
    let mut rows = Vec::new();
    for y in 0..n {
        if shifts.iter().all(|&d| !chosen[spec.mul_index(y, d)]) {
            chosen[y] = true;
            rows.push(y);
        }
    }
    rows
}

/// Columns of φ(v) that can be kept together without a 4-cycle. Columns of
/// φ(v) are rows of φ(v*), so this is [`conflict_free_rows`] on `v*`.
pub fn conflict_free_columns(v: &GroupRingElement) -> Vec<usize> {
    let star = v.involution();
    match certify_girth_gt4(&star) {
        Certification::Certified => (0..v.spec().order()).collect(),
        Certification::Conflicts(report) => conflict_free_rows(&star, Some(&report)),
    }
}
