//! Exact rank over the rationals.

use num_traits::Zero;

use crate::algebra::Scalar;
use crate::error::Result;
use crate::functors::dense::checked_power;
use crate::functors::{DenseOperator, MatrixFunctor};
use crate::setpart::DiagramShape;

/// Rank of a list of equal-length vectors, by fraction-free row reduction
/// on a working copy.
pub fn rank_of(vectors: &[Vec<Scalar>]) -> usize {
    let mut rows: Vec<Vec<Scalar>> = vectors.iter().filter(|v| v.iter().any(|x| !x.is_zero())).cloned().collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        let pivot_row: Vec<Scalar> = rows[rank].iter().map(|x| x / &p).collect();
        for r in rank + 1..rows.len() {
            let f = rows[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * y;
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank_of_operators(ops: &[DenseOperator]) -> usize {
    let vectors: Vec<Vec<Scalar>> = ops.iter().map(|m| m.entries().to_vec()).collect();
    rank_of(&vectors)
}

/// Rank of the realized spanning set of `functor` on `shape` at `n`.
/// `cap` bounds `n^(k+l)`.
pub fn spanning_rank(functor: &dyn MatrixFunctor, shape: DiagramShape, n: usize, cap: u128) -> Result<usize> {
    functor.check_dimension(n)?;
    checked_power(n, shape.total(), cap)?;
    let ops = functor
        .spanning_diagrams(shape, n)
        .iter()
        .map(|d| functor.realize_diagram(n, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(rank_of_operators(&ops))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;
    use crate::error::Error;
    use crate::functors::{Phi, Theta};

    #[test]
    fn rank_small() {
        let v = |xs: &[i64]| xs.iter().map(|&x| scalar(x)).collect::<Vec<_>>();
        assert_eq!(rank_of(&[v(&[1, 2]), v(&[2, 4])]), 1);
        assert_eq!(rank_of(&[v(&[0, 1]), v(&[1, 0]), v(&[1, 1])]), 2);
        assert_eq!(rank_of(&[]), 0);
    }

    #[test]
    fn spanning_ranks() {
        let cap = 1 << 20;
        assert_eq!(spanning_rank(&Theta, DiagramShape::new(1, 1), 4, cap).unwrap(), 2);
        assert_eq!(spanning_rank(&Theta, DiagramShape::new(2, 2), 2, cap).unwrap(), 8);
        assert_eq!(spanning_rank(&Phi, DiagramShape::new(2, 2), 1, cap).unwrap(), 1);
        assert!(matches!(
            spanning_rank(&Theta, DiagramShape::new(2, 2), 4, 100),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }
}
