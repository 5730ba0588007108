//! Finite groups with a fixed canonical element listing.
//!
//! Elements are indices into that listing:
//!
//! * `Cyclic(n)`: `1, g, g², …, gⁿ⁻¹`, so index `i` is `gⁱ`.
//! * `Product(n, m)` (`C_n × C_m`, `g` of order `n`, `h` of order `m`):
//!   `1, g, …, gⁿ⁻¹, h, hg, …, hgⁿ⁻¹, …, hᵐ⁻¹gⁿ⁻¹`, so index `j·n + i` is `hʲgⁱ`.
//! * `Dihedral(n)` (`D_2n = ⟨a, b | a² = 1, bⁿ = 1, ab = b⁻¹a⟩`):
//!   `1, b, …, bⁿ⁻¹, a, ab, …, abⁿ⁻¹`, so index `k` is `bᵏ` and `n + k` is `abᵏ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupSpec {
    Cyclic(usize),
    Product(usize, usize),
    Dihedral(usize),
}

/// An element of a [`GroupSpec`], identified by its position in the
/// canonical listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement(usize);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn index(self) -> usize {
        self.0
    }
}

impl GroupSpec {
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig(
                "cyclic group order must be >= 1".into(),
            ));
        }
        Ok(GroupSpec::Cyclic(n))
    }

    pub fn product(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidConfig(
                "product factor orders must be >= 1".into(),
            ));
        }
        Ok(GroupSpec::Product(n, m))
    }

    /// `D_2n`, the dihedral group of order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig(
                "dihedral rotation order must be >= 1".into(),
            ));
        }
        Ok(GroupSpec::Dihedral(n))
    }

    pub fn order(&self) -> usize {
        match *self {
            GroupSpec::Cyclic(n) => n,
            GroupSpec::Product(n, m) => n * m,
            GroupSpec::Dihedral(n) => 2 * n,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match *self {
            GroupSpec::Dihedral(n) => n < 3,
            _ => true,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn element_at(&self, i: usize) -> Result<GroupElement> {
        self.check(i)?;
        Ok(GroupElement(i))
    }

    pub fn index_of(&self, x: GroupElement) -> Result<usize> {
        self.check(x.0)?;
        Ok(x.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order()).map(GroupElement)
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                order: self.order(),
            })
        }
    }

    pub fn multiply(&self, x: GroupElement, y: GroupElement) -> Result<GroupElement> {
        self.check(x.0)?;
        self.check(y.0)?;
        Ok(GroupElement(self.mul_index(x.0, y.0)))
    }

    pub fn inverse(&self, x: GroupElement) -> Result<GroupElement> {
        self.check(x.0)?;
        Ok(GroupElement(self.inv_index(x.0)))
    }

    /// `x·y⁻¹`
    pub fn difference(&self, x: GroupElement, y: GroupElement) -> Result<GroupElement> {
        self.check(x.0)?;
        self.check(y.0)?;
        Ok(GroupElement(self.mul_index(x.0, self.inv_index(y.0))))
    }

    /// Product on raw listing indices. Callers guarantee both are in range.
    #[inline]
    pub fn mul_index(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.order() && y < self.order());
        match *self {
            GroupSpec::Cyclic(n) => (x + y) % n,
            GroupSpec::Product(n, m) => {
                let (xi, xj) = (x % n, x / n);
                let (yi, yj) = (y % n, y / n);
                ((xj + yj) % m) * n + (xi + yi) % n
            }
            GroupSpec::Dihedral(n) => {
                let (xr, xk) = (x >= n, x % n);
                let (yr, yk) = (y >= n, y % n);
                // bᵏ·a = a·b⁻ᵏ, so a left rotation is negated when passing a reflection.
                let k = if yr { (yk + n - xk) % n } else { (xk + yk) % n };
                if xr != yr {
                    n + k
                } else {
                    k
                }
            }
        }
    }

    #[inline]
    pub fn inv_index(&self, x: usize) -> usize {
        debug_assert!(x < self.order());
        match *self {
            GroupSpec::Cyclic(n) => (n - x) % n,
            GroupSpec::Product(n, m) => {
                let (i, j) = (x % n, x / n);
                ((m - j) % m) * n + (n - i) % n
            }
            GroupSpec::Dihedral(n) => {
                if x >= n {
                    x
                } else {
                    (n - x) % n
                }
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Cyclic(n) => write!(f, "c{n}"),
            GroupSpec::Product(n, m) => write!(f, "c{n}x{m}"),
            GroupSpec::Dihedral(n) => write!(f, "d{}", 2 * n),
        }
    }
}

/// Parses `c15`, `c24x4` (`C_24 × C_4`) and `d10` (`D_10`, rotations of order 5).
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown group '{s}'"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = s.strip_prefix('c') {
            match rest.split_once('x') {
                Some((n, m)) => GroupSpec::product(num(n)?, num(m)?),
                None => GroupSpec::cyclic(num(rest)?),
            }
        } else if let Some(rest) = s.strip_prefix('d') {
            let order = num(rest)?;
            if order == 0 || order % 2 != 0 {
                return Err(Error::Parse(format!(
                    "dihedral group order must be even and positive, got '{s}'"
                )));
            }
            GroupSpec::dihedral(order / 2)
        } else {
            Err(bad())
        }
    }
}
