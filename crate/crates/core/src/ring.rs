//! Sparse elements of the group algebra GF(2)G and their matrix images.
//!
//! The embedding φ sends `v` to the `n × n` matrix whose row `i` is the
//! support indicator of `g_i·v`, i.e. `φ(v)[i][j] = coefficient of g_i⁻¹g_j`.
//! With this convention φ is a ring homomorphism, `φ(v*) = φ(v)ᵀ` for the
//! involution `v* = Σ s⁻¹`, and for abelian groups row `i` is also `v·g_i`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::group::{GroupElement, GroupSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    spec: GroupSpec,
    support: Vec<usize>,
}

impl GroupRingElement {
    pub fn zero(spec: GroupSpec) -> Self {
        GroupRingElement {
            spec,
            support: Vec::new(),
        }
    }

    pub fn one(spec: GroupSpec) -> Self {
        GroupRingElement {
            spec,
            support: vec![0],
        }
    }

    /// Builds an element from listing indices. Repeated indices cancel in pairs,
    /// as they would in a GF(2) sum.
    pub fn from_indices<I: IntoIterator<Item = usize>>(
        spec: GroupSpec,
        indices: I,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for i in indices {
            if i >= spec.order() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    order: spec.order(),
                });
            }
            if !set.insert(i) {
                set.remove(&i);
            }
        }
        Ok(GroupRingElement {
            spec,
            support: set.into_iter().collect(),
        })
    }

    pub fn from_elements<I: IntoIterator<Item = GroupElement>>(
        spec: GroupSpec,
        elements: I,
    ) -> Result<Self> {
        Self::from_indices(spec, elements.into_iter().map(GroupElement::index))
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    /// Strictly increasing listing indices with coefficient 1.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn support_elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.support
            .iter()
            .map(move |&i| self.spec.element_at(i).expect("support is in range"))
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::GroupMismatch(self.spec, other.spec))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let a: BTreeSet<_> = self.support.iter().copied().collect();
        let b: BTreeSet<_> = other.support.iter().copied().collect();
        Ok(GroupRingElement {
            spec: self.spec,
            support: a.symmetric_difference(&b).copied().collect(),
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let mut coeff = vec![false; self.spec.order()];
        for &s in &self.support {
            for &t in &other.support {
                let k = self.spec.mul_index(s, t);
                coeff[k] = !coeff[k];
            }
        }
        Ok(GroupRingElement {
            spec: self.spec,
            support: (0..coeff.len()).filter(|&k| coeff[k]).collect(),
        })
    }

    /// `Σ s⁻¹` over the support; `φ(v*) = φ(v)ᵀ`.
    pub fn involution(&self) -> Self {
        let mut support: Vec<usize> = self
            .support
            .iter()
            .map(|&s| self.spec.inv_index(s))
            .collect();
        support.sort_unstable();
        GroupRingElement {
            spec: self.spec,
            support,
        }
    }

    /// Row `i` of φ(v) as ascending column indices: the support of `g_i·v`.
    pub fn matrix_row(&self, i: usize) -> Vec<usize> {
        let mut row: Vec<usize> = self
            .support
            .iter()
            .map(|&s| self.spec.mul_index(i, s))
            .collect();
        row.sort_unstable();
        row
    }

    /// Column `j` of φ(v) as ascending row indices: `{ g_j·s⁻¹ }`.
    pub fn matrix_col(&self, j: usize) -> Vec<usize> {
        let mut col: Vec<usize> = self
            .support
            .iter()
            .map(|&s| self.spec.mul_index(j, self.spec.inv_index(s)))
            .collect();
        col.sort_unstable();
        col
    }

    pub fn to_matrix(&self) -> RgMatrix {
        let n = self.spec.order();
        let rows: Vec<Vec<usize>> = (0..n).into_par_iter().map(|i| self.matrix_row(i)).collect();
        RgMatrix {
            spec: self.spec,
            bits: BitMatrix::from_row_supports(n, rows),
        }
    }

    /// `|support| / |G|`
    pub fn density(&self) -> Ratio<usize> {
        Ratio::new(self.support.len(), self.spec.order())
    }

    /// Inverse via Gaussian elimination on φ(v), or [`Error::NotAUnit`].
    pub fn try_invert(&self) -> Result<Self> {
        let m = self.to_matrix();
        let inv = m.bits.inverse().ok_or(Error::NotAUnit)?;
        RgMatrix::from_bits(self.spec, inv)?.to_element()
    }

    pub fn is_unit(&self) -> bool {
        self.try_invert().is_ok()
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement({self})")
    }
}

/// The image φ(v) of a group ring element.
#[derive(Clone, PartialEq, Eq)]
pub struct RgMatrix {
    spec: GroupSpec,
    bits: BitMatrix,
}

impl RgMatrix {
    pub fn from_bits(spec: GroupSpec, bits: BitMatrix) -> Result<Self> {
        let n = spec.order();
        if bits.rows() != n || bits.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a group of order {n}",
                bits.rows(),
                bits.cols()
            )));
        }
        Ok(RgMatrix { spec, bits })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    pub fn into_bits(self) -> BitMatrix {
        self.bits
    }

    /// Reads the element off row 0 and checks every other row against it.
    pub fn to_element(&self) -> Result<GroupRingElement> {
        let candidate = GroupRingElement {
            spec: self.spec,
            support: self.bits.row_ones(0).collect(),
        };
        for i in 1..self.spec.order() {
            let expected = candidate.matrix_row(i);
            if !self.bits.row_ones(i).eq(expected.iter().copied()) {
                return Err(Error::NotRgMatrix(format!(
                    "row {i} is not the translate of row 0"
                )));
            }
        }
        Ok(candidate)
    }
}

impl fmt::Debug for RgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RgMatrix over {}: {:?}", self.spec, self.bits)
    }
}

/// `m[i][j] = m[0][(j − i) mod n]`
pub fn is_circulant(m: &BitMatrix) -> bool {
    let n = m.rows();
    n == m.cols() && (0..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(0, (j + n - i) % n)))
}

/// `m[i][j] = m[0][(i + j) mod n]`
pub fn is_reverse_circulant(m: &BitMatrix) -> bool {
    let n = m.rows();
    n == m.cols() && (0..n).all(|i| (0..n).all(|j| m.get(i, j) == m.get(0, (i + j) % n)))
}

fn block(m: &BitMatrix, size: usize, bi: usize, bj: usize) -> BitMatrix {
    let rows: Vec<usize> = (bi * size..(bi + 1) * size).collect();
    let cols: Vec<usize> = (bj * size..(bj + 1) * size).collect();
    m.select_rows(&rows).select_cols(&cols)
}

/// Checks the `[[A, B], [B, A]]` form with `A` circulant and `B` reverse
/// circulant, for `n`-by-`n` blocks.
pub fn is_dihedral_block_form(m: &BitMatrix, n: usize) -> bool {
    if m.rows() != 2 * n || m.cols() != 2 * n {
        return false;
    }
    let (a, b) = (block(m, n, 0, 0), block(m, n, 0, 1));
    is_circulant(&a) && is_reverse_circulant(&b) && block(m, n, 1, 0) == b && block(m, n, 1, 1) == a
}

/// Checks that an `mn × mn` matrix is an `m × m` block circulant whose blocks
/// are `n × n` circulants.
pub fn is_circulant_by_circulant(mat: &BitMatrix, n: usize, m: usize) -> bool {
    if mat.rows() != n * m || mat.cols() != n * m {
        return false;
    }
    let first: Vec<BitMatrix> = (0..m).map(|bj| block(mat, n, 0, bj)).collect();
    first.iter().all(is_circulant)
        && (0..m).all(|bi| (0..m).all(|bj| block(mat, n, bi, bj) == first[(bj + m - bi) % m]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(spec: GroupSpec, idx: &[usize]) -> GroupRingElement {
        GroupRingElement::from_indices(spec, idx.iter().copied()).unwrap()
    }

    /// Polynomial product mod (xⁿ − 1) over GF(2), the direct double loop.
    fn poly_mul_mod(n: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut c = vec![0u8; n];
        for &i in a {
            for &j in b {
                c[(i + j) % n] ^= 1;
            }
        }
        (0..n).filter(|&k| c[k] == 1).collect()
    }

    #[test]
    fn addition_cancels() {
        let c = GroupSpec::Cyclic(5);
        assert_eq!(el(c, &[0, 1]).add(&el(c, &[1, 2])).unwrap(), el(c, &[0, 2]));
        let x = el(c, &[1, 3, 4]);
        assert!(x.add(&x).unwrap().is_zero());
        assert_eq!(el(c, &[0]).add(&el(c, &[1])).unwrap(), el(c, &[0, 1]));
        assert!(matches!(
            x.add(&el(GroupSpec::Cyclic(6), &[0])),
            Err(Error::GroupMismatch(..))
        ));
    }

    #[test]
    fn multiplication_examples() {
        let c15 = GroupSpec::Cyclic(15);
        let x = el(c15, &[0, 1]);
        assert_eq!(x.multiply(&x).unwrap(), el(c15, &[0, 2]));
        assert_eq!(GroupRingElement::one(c15).multiply(&x).unwrap(), x);

        // (1+x+x³)(1+x)(1+x²+x³) = x⁷−1 over GF(2), so the product vanishes.
        let c7 = GroupSpec::Cyclic(7);
        let expected = poly_mul_mod(7, &[0, 1, 3], &[0, 1, 2, 4]);
        assert!(expected.is_empty());
        assert_eq!(
            el(c7, &[0, 1, 3]).multiply(&el(c7, &[0, 1, 2, 4])).unwrap(),
            el(c7, &expected)
        );
    }

    #[test]
    fn matrix_of_one_plus_g_in_c3() {
        let m = el(GroupSpec::Cyclic(3), &[0, 1]).to_matrix();
        assert_eq!(
            m.bits(),
            &BitMatrix::from_rows(&[[1u8, 1, 0], [0, 1, 1], [1, 0, 1]])
        );
        let id = GroupRingElement::one(GroupSpec::Dihedral(4)).to_matrix();
        assert_eq!(id.bits(), &BitMatrix::identity(8));
        assert_eq!(
            id.to_element().unwrap(),
            GroupRingElement::one(GroupSpec::Dihedral(4))
        );
    }

    #[test]
    fn from_matrix_rejects_inconsistent_rows() {
        let v = el(GroupSpec::Cyclic(7), &[0, 1, 3]);
        let mut bits = v.to_matrix().into_bits();
        bits.flip(4, 2);
        let m = RgMatrix::from_bits(GroupSpec::Cyclic(7), bits).unwrap();
        assert!(matches!(m.to_element(), Err(Error::NotRgMatrix(_))));
        assert!(RgMatrix::from_bits(GroupSpec::Cyclic(7), BitMatrix::zeros(6, 7)).is_err());
    }

    #[test]
    fn inversion_examples() {
        let c7 = GroupSpec::Cyclic(7);
        assert_eq!(
            GroupRingElement::one(c7).try_invert().unwrap(),
            GroupRingElement::one(c7)
        );

        // 1 + x + x³ divides x⁷ − 1 over GF(2): a zero divisor.
        assert!(matches!(
            el(c7, &[0, 1, 3]).try_invert(),
            Err(Error::NotAUnit)
        ));
        assert!(matches!(
            el(GroupSpec::Cyclic(2), &[0, 1]).try_invert(),
            Err(Error::NotAUnit)
        ));

        // Brute force over all 2⁷ elements for the inverse of 1 + g + g².
        let v = el(c7, &[0, 1, 2]);
        let oracle: Vec<usize> = (0u32..128)
            .map(|mask| (0..7).filter(|&k| mask >> k & 1 == 1).collect::<Vec<_>>())
            .find(|s| poly_mul_mod(7, &[0, 1, 2], s) == vec![0])
            .unwrap();
        assert_eq!(oracle, vec![0, 2, 3, 5, 6]);
        let u = v.try_invert().unwrap();
        assert_eq!(u.support(), &oracle[..]);
        assert_eq!(u.multiply(&v).unwrap(), GroupRingElement::one(c7));
    }

    #[test]
    fn density_examples() {
        let g = GroupSpec::Product(24, 4);
        assert_eq!(GroupRingElement::one(g).density(), Ratio::new(1, 96));
        assert_eq!(GroupRingElement::zero(g).density(), Ratio::new(0, 96));
        let v = el(g, &[15, 9, 5, 24 + 21, 24 + 4, 48 + 2, 72 + 2, 72 + 12]);
        assert_eq!(v.density(), Ratio::new(1, 12));
    }

    #[test]
    fn dihedral_matrices_have_block_form() {
        let g = GroupSpec::Dihedral(5);
        let v = el(g, &[0, 2, 5 + 1, 5 + 3]);
        assert!(is_dihedral_block_form(v.to_matrix().bits(), 5));
    }

    #[test]
    fn structure_checkers_reject_counterexamples() {
        let m = BitMatrix::from_rows(&[[1u8, 1, 0], [0, 1, 1], [1, 0, 1]]);
        assert!(is_circulant(&m));
        assert!(!is_reverse_circulant(&m));
        let r = BitMatrix::from_rows(&[[1u8, 1, 0], [1, 0, 1], [0, 1, 1]]);
        assert!(is_reverse_circulant(&r));
        assert!(!is_circulant(&r));
    }

    fn any_group() -> impl Strategy<Value = GroupSpec> {
        prop_oneof![
            (1usize..=64).prop_map(GroupSpec::Cyclic),
            (1usize..=16, 1usize..=4).prop_map(|(n, m)| GroupSpec::Product(n, m)),
            (1usize..=32).prop_map(GroupSpec::Dihedral),
        ]
    }

    fn any_element() -> impl Strategy<Value = GroupRingElement> {
        (any_group(), prop::collection::vec(any::<usize>(), 0..10)).prop_map(|(g, raw)| {
            GroupRingElement::from_indices(g, raw.into_iter().map(|r| r % g.order())).unwrap()
        })
    }

    proptest! {
        #[test]
        fn matrix_round_trip(v in any_element()) {
            prop_assert_eq!(v.to_matrix().to_element().unwrap(), v);
        }

        #[test]
        fn involution_is_transpose(v in any_element()) {
            prop_assert_eq!(v.involution().to_matrix().into_bits(), v.to_matrix().into_bits().transpose());
            let m = v.to_matrix();
            for j in 0..v.spec().order().min(8) {
                let col: Vec<usize> = (0..v.spec().order()).filter(|&i| m.bits().get(i, j)).collect();
                prop_assert_eq!(v.matrix_col(j), col);
            }
        }

        #[test]
        fn unit_iff_full_rank(v in any_element()) {
            let n = v.spec().order();
            match v.try_invert() {
                Ok(u) => {
                    prop_assert_eq!(u.multiply(&v).unwrap(), GroupRingElement::one(v.spec()));
                    prop_assert_eq!(v.multiply(&u).unwrap(), GroupRingElement::one(v.spec()));
                    prop_assert_eq!(v.to_matrix().bits().rank(), n);
                }
                Err(_) => prop_assert!(v.to_matrix().bits().rank() < n),
            }
        }

        #[test]
        fn cyclic_matrices_are_circulant(n in 1usize..40, raw in prop::collection::vec(any::<usize>(), 0..6)) {
            let g = GroupSpec::Cyclic(n);
            let v = GroupRingElement::from_indices(g, raw.into_iter().map(|r| r % n)).unwrap();
            let m = v.to_matrix();
            prop_assert!(is_circulant(m.bits()));
            for i in 0..n {
                prop_assert_eq!(m.bits().row_weight(i), v.weight());
            }
            prop_assert!(m.bits().col_weights().iter().all(|&w| w == v.weight()));
        }

        #[test]
        fn product_matrices_are_circulant_by_circulant(n in 1usize..12, m in 1usize..5,
                                                       raw in prop::collection::vec(any::<usize>(), 0..8)) {
            let g = GroupSpec::Product(n, m);
            let v = GroupRingElement::from_indices(g, raw.into_iter().map(|r| r % (n * m))).unwrap();
            prop_assert!(is_circulant_by_circulant(v.to_matrix().bits(), n, m));
        }
    }
}
