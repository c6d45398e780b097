use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::setpart::{Diagram, DiagramShape};

/// Exact coefficient type for diagram sums and dense operators.
pub type Scalar = BigRational;

pub fn scalar(x: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(x))
}

pub fn power_of(n: usize, c: usize) -> Scalar {
    BigRational::from_integer(num_traits::pow(BigInt::from(n), c))
}

/// A finite linear combination of diagrams sharing one shape. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramSum {
    shape: DiagramShape,
    terms: BTreeMap<Diagram, Scalar>,
}

impl DiagramSum {
    pub fn zero(shape: DiagramShape) -> Self {
        DiagramSum {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::term(Scalar::one(), d)
    }

    pub fn term(coefficient: Scalar, d: Diagram) -> Self {
        let mut s = Self::zero(d.shape());
        s.push(coefficient, d);
        s
    }

    pub fn shape(&self) -> DiagramShape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c * d` in place. Panics on a shape mismatch; use [`add`] for
    /// fallible addition of sums.
    ///
    /// [`add`]: DiagramSum::add
    pub(crate) fn push(&mut self, c: Scalar, d: Diagram) {
        assert_eq!(d.shape(), self.shape, "term shape differs from sum shape");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn absorb(&mut self, other: DiagramSum, factor: &Scalar) {
        for (d, c) in other.terms {
            self.push(c * factor, d);
        }
    }

    pub fn add(&self, other: &DiagramSum) -> Result<DiagramSum> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch {
                expected: self.shape,
                found: other.shape,
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.push(c.clone(), d.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Scalar) -> DiagramSum {
        let mut out = Self::zero(self.shape);
        if factor.is_zero() {
            return out;
        }
        for (d, c) in &self.terms {
            out.terms.insert(d.clone(), c * factor);
        }
        out
    }

    /// Rebuilds the sum, merging terms and dropping zeros. Sums built
    /// through this type are already normal; this exists for sums assembled
    /// from raw term lists.
    pub fn normalize(terms: impl IntoIterator<Item = (Scalar, Diagram)>, shape: DiagramShape) -> Result<Self> {
        let mut out = Self::zero(shape);
        for (c, d) in terms {
            if d.shape() != shape {
                return Err(Error::ShapeMismatch {
                    expected: shape,
                    found: d.shape(),
                });
            }
            out.push(c, d);
        }
        Ok(out)
    }

    /// Applies `f` to every diagram, keeping coefficients.
    pub(crate) fn try_map_diagrams(&self, mut f: impl FnMut(&Diagram) -> Result<Diagram>) -> Result<Self> {
        let mut out = Self::zero(self.shape);
        for (d, c) in &self.terms {
            out.push(c.clone(), f(d)?);
        }
        Ok(out)
    }
}
