use num_traits::{ToPrimitive, Zero};

use crate::algebra::{scalar, Scalar};
use crate::error::{Error, Result};
use crate::setpart::DiagramShape;

/// Mixed-radix encoding of index tuples over `[n]` (0-based entries), the
/// leftmost entry most significant. The empty tuple encodes to 0.
pub fn encode_index(n: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * n + i)
}

pub fn decode_index(n: usize, r: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// `n^r`, or an error once it exceeds `cap`.
pub fn checked_power(n: usize, r: usize, cap: u128) -> Result<usize> {
    let needed = (n as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::SizeLimitExceeded { needed, cap });
    }
    Ok(needed as usize)
}

/// Exact `n^l × n^k` matrix in the basis of matrix units, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseOperator {
    n: usize,
    shape: DiagramShape,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl DenseOperator {
    pub fn zeros(n: usize, shape: DiagramShape) -> Self {
        let rows = n.pow(shape.l as u32);
        let cols = n.pow(shape.k as u32);
        DenseOperator {
            n,
            shape,
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_entries(n: usize, shape: DiagramShape, entries: Vec<Scalar>) -> Result<Self> {
        let mut op = Self::zeros(n, shape);
        if entries.len() != op.entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                op.rows,
                op.cols
            )));
        }
        op.entries = entries;
        Ok(op)
    }

    pub fn from_i64(n: usize, shape: DiagramShape, entries: &[i64]) -> Result<Self> {
        Self::from_entries(n, shape, entries.iter().map(|&x| scalar(x)).collect())
    }

    pub fn identity(n: usize, r: usize) -> Self {
        let mut op = Self::zeros(n, DiagramShape::new(r, r));
        for i in 0..op.rows {
            op.set(i, i, scalar(1));
        }
        op
    }

    /// The matrix unit with a single 1 at `(row, col)`.
    pub fn matrix_unit(n: usize, shape: DiagramShape, row: usize, col: usize) -> Self {
        let mut op = Self::zeros(n, shape);
        op.set(row, col, scalar(1));
        op
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> DiagramShape {
        self.shape
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.cols + col] = value;
    }

    pub(crate) fn add_at(&mut self, row: usize, col: usize, value: &Scalar) {
        self.entries[row * self.cols + col] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entries as `i64`, if every entry is an integer in range.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries
            .iter()
            .map(|e| if e.is_integer() { e.numer().to_i64() } else { None })
            .collect()
    }

    pub fn add(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.same_dims(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(DenseOperator {
            entries,
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> DenseOperator {
        DenseOperator {
            entries: self.entries.iter().map(|e| e * c).collect(),
            ..self.clone()
        }
    }

    fn same_dims(&self, other: &DenseOperator) -> Result<()> {
        if self.n != other.n || self.shape != other.shape {
            return Err(Error::DimensionMismatch(format!(
                "n={} {} vs n={} {}",
                self.n, self.shape, other.n, other.shape
            )));
        }
        Ok(())
    }

    /// `self · rhs`; `self` is (l,m), `rhs` is (k,l).
    pub fn matmul(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.n != rhs.n || self.shape.k != rhs.shape.l {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {} by {}",
                self.shape, rhs.shape
            )));
        }
        let mut out = Self::zeros(self.n, DiagramShape::new(rhs.shape.k, self.shape.l));
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(t, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` on the left tensor factor.
    pub fn kron(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(format!("n={} vs n={}", self.n, rhs.n)));
        }
        let shape = DiagramShape::new(self.shape.k + rhs.shape.k, self.shape.l + rhs.shape.l);
        let mut out = Self::zeros(self.n, shape);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, a * b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn to_f64(&self) -> FloatMatrix {
        FloatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.entries.iter().map(|e| e.to_f64().unwrap_or(f64::NAN)).collect(),
        }
    }
}

/// Row-major double-precision matrix, used by the float apply path.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

impl FloatMatrix {
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for n in 1usize..4 {
            for r in 0..4 {
                for idx in 0..n.pow(r as u32) {
                    let t = decode_index(n, r, idx);
                    assert_eq!(encode_index(n, &t), idx);
                }
            }
        }
        assert_eq!(encode_index(3, &[]), 0);
        assert_eq!(encode_index(2, &[1, 0]), 2);
    }

    #[test]
    fn kron_and_matmul_dimensions() {
        let id = DenseOperator::identity(2, 1);
        let k = id.kron(&id).unwrap();
        assert_eq!(k, DenseOperator::identity(2, 2));
        let cap = DenseOperator::from_i64(2, DiagramShape::new(2, 0), &[1, 0, 0, 1]).unwrap();
        let cup = DenseOperator::from_i64(2, DiagramShape::new(0, 2), &[1, 0, 0, 1]).unwrap();
        let loop_value = cap.matmul(&cup).unwrap();
        assert_eq!(loop_value.entries(), &[scalar(2)]);
        assert!(cup.matmul(&id).is_err());
    }

    #[test]
    fn size_cap() {
        assert_eq!(checked_power(4, 3, 100).unwrap(), 64);
        assert!(matches!(
            checked_power(4, 4, 100),
            Err(Error::SizeLimitExceeded { needed: 256, cap: 100 })
        ));
    }
}
