//! Shared evaluation of product-form matrices.
//!
//! Every per-diagram matrix here is a sum over index assignments that
//! factor block by block: each factor offers a list of admissible values
//! for its vertices with a signed weight, and an entry `(I, J)` is the
//! product of the weights chosen. Enumerating factor options directly
//! touches only the nonzero entries.

use crate::algebra::scalar;
use crate::error::Result;
use crate::functors::dense::{checked_power, DenseOperator};
use crate::perm::signed_permutations;
use crate::setpart::DiagramShape;

/// Matrices materialized by a functor are capped at this many entries.
pub const DEFAULT_ENTRY_CAP: u128 = 1 << 28;

/// One factor: the vertices it constrains and the admissible value tuples.
pub(crate) struct Factor {
    pub vertices: Vec<usize>,
    pub options: Vec<(Vec<usize>, i64)>,
}

impl Factor {
    /// All vertices share one value.
    pub fn all_equal(vertices: &[usize], n: usize) -> Factor {
        Factor {
            vertices: vertices.to_vec(),
            options: (0..n).map(|c| (vec![c; vertices.len()], 1)).collect(),
        }
    }

    /// The free vertices take distinct values, weighted by the sign of the
    /// resulting permutation of `[n]`.
    pub fn levi_civita(vertices: &[usize], n: usize) -> Factor {
        debug_assert_eq!(vertices.len(), n);
        Factor {
            vertices: vertices.to_vec(),
            options: signed_permutations(n)
                .into_iter()
                .map(|(p, s)| (p, s as i64))
                .collect(),
        }
    }
}

pub(crate) fn evaluate(n: usize, shape: DiagramShape, factors: &[Factor]) -> Result<DenseOperator> {
    checked_power(n, shape.total(), DEFAULT_ENTRY_CAP)?;
    let mut op = DenseOperator::zeros(n, shape);
    // each vertex adds value * stride to its row (top) or column (bottom)
    let stride = |v: usize| -> (bool, usize) {
        if v <= shape.l {
            (true, n.pow((shape.l - v) as u32))
        } else {
            (false, n.pow((shape.k - (v - shape.l)) as u32))
        }
    };
    let compiled: Vec<Vec<(usize, usize, i64)>> = factors
        .iter()
        .map(|f| {
            f.options
                .iter()
                .map(|(vals, w)| {
                    let mut dr = 0;
                    let mut dc = 0;
                    for (&v, &x) in f.vertices.iter().zip(vals) {
                        match stride(v) {
                            (true, s) => dr += x * s,
                            (false, s) => dc += x * s,
                        }
                    }
                    (dr, dc, *w)
                })
                .collect()
        })
        .collect();

    let mut acc: Vec<i64> = vec![0; op.rows() * op.cols()];
    let cols = op.cols();
    fn walk(compiled: &[Vec<(usize, usize, i64)>], at: usize, row: usize, col: usize, w: i64, cols: usize, acc: &mut [i64]) {
        if at == compiled.len() {
            acc[row * cols + col] += w;
            return;
        }
        for &(dr, dc, fw) in &compiled[at] {
            walk(compiled, at + 1, row + dr, col + dc, w * fw, cols, acc);
        }
    }
    walk(&compiled, 0, 0, 0, 1, cols, &mut acc);
    for (i, &x) in acc.iter().enumerate() {
        if x != 0 {
            op.set(i / cols, i % cols, scalar(x));
        }
    }
    Ok(op)
}
