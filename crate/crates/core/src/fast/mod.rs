//! Applying `Θ(d)` without forming its matrix.
//!
//! A partition diagram factors as `σ_top ∘ (s_1 ⊗ … ⊗ s_b) ∘ σ_bottom`
//! where the `σ` are permutation diagrams and each `s_i` is a spider: one
//! block with `a_i` bottom legs and `b_i` top legs, laid out in contiguous
//! intervals so the middle factor is planar.

mod bench;
mod vector;

pub use bench::{bench, BenchReport};
pub use vector::{apply_dense, format_vector, parse_vector, Mode, TensorVector, Values};

use std::ops::AddAssign;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::functors::dense::checked_power;
use crate::functors::{DenseOperator, DEFAULT_ENTRY_CAP};
use crate::setpart::{make_diagram, Diagram, DiagramShape};

/// A permutation of tensor axes: output axis `p` is input axis `map[p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxisPermutation {
    map: Vec<usize>,
}

impl AxisPermutation {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &p in &map {
            if p >= map.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!("{map:?} is not a permutation")));
            }
        }
        Ok(AxisPermutation { map })
    }

    pub fn identity(r: usize) -> Self {
        AxisPermutation { map: (0..r).collect() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (p, &q) in self.map.iter().enumerate() {
            inv[q] = p;
        }
        AxisPermutation { map: inv }
    }

    pub fn apply_tuple<T: Clone>(&self, tuple: &[T]) -> Vec<T> {
        assert_eq!(tuple.len(), self.map.len());
        self.map.iter().map(|&q| tuple[q].clone()).collect()
    }

    /// For every encoded output index, the encoded input index it reads.
    pub fn gather_table(&self, n: usize) -> Vec<usize> {
        let r = self.map.len();
        let len = n.pow(r as u32);
        // input stride of the axis feeding each output axis
        let strides: Vec<usize> = self.map.iter().map(|&q| n.pow((r - 1 - q) as u32)).collect();
        let mut table = vec![0; len];
        let mut digits = vec![0usize; r];
        let mut src = 0usize;
        for slot in table.iter_mut() {
            *slot = src;
            // odometer increment, last axis fastest
            for p in (0..r).rev() {
                digits[p] += 1;
                src += strides[p];
                if digits[p] < n {
                    break;
                }
                src -= n * strides[p];
                digits[p] = 0;
            }
        }
        table
    }

    /// The permutation diagram on `r` strands with top `p` joined to bottom `map[p]`.
    pub fn to_diagram(&self) -> Diagram {
        Diagram::permutation(&self.map).expect("validated permutation")
    }
}

/// A single block with `a` bottom legs and `b` top legs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpiderBlock {
    pub a: usize,
    pub b: usize,
}

impl SpiderBlock {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a + b == 0 {
            return Err(Error::InvalidArgument("a spider needs at least one leg".into()));
        }
        Ok(SpiderBlock { a, b })
    }

    pub fn diagram(&self) -> Diagram {
        make_diagram(DiagramShape::new(self.a, self.b), vec![(1..=self.a + self.b).collect()]).unwrap()
    }
}

/// The all-equal `n^b × n^a` matrix of a spider.
pub fn spider_realize(n: usize, s: SpiderBlock) -> DenseOperator {
    let mut m = DenseOperator::zeros(n, DiagramShape::new(s.a, s.b));
    for c in 0..n {
        m.set(diagonal(n, s.b, c), diagonal(n, s.a, c), crate::algebra::scalar(1));
    }
    m
}

/// Encoded index of `(c, c, …, c)` of length `r`.
fn diagonal(n: usize, r: usize, c: usize) -> usize {
    (0..r).fold(0, |acc, _| acc * n + c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredOperator {
    n: usize,
    shape: DiagramShape,
    top_perm: AxisPermutation,
    spiders: Vec<SpiderBlock>,
    bottom_perm: AxisPermutation,
    top_gather: Vec<usize>,
    bottom_gather: Vec<usize>,
}

/// Factors `d` with blocks taken in ascending least vertex.
pub fn planarize(d: &Diagram, n: usize) -> Result<FactoredOperator> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let shape = d.shape();
    checked_power(n, shape.k.max(shape.l), DEFAULT_ENTRY_CAP)?;
    let mut spiders = Vec::new();
    let mut bottom_map = Vec::with_capacity(shape.k);
    let mut top_slot = vec![0; shape.l];
    let mut next_top = 0;
    for block in d.blocks() {
        let (top, bottom): (Vec<usize>, Vec<usize>) = block.iter().partition(|&&v| shape.is_top(v));
        for &v in &top {
            top_slot[v - 1] = next_top;
            next_top += 1;
        }
        bottom_map.extend(bottom.iter().map(|&v| v - shape.l - 1));
        spiders.push(SpiderBlock {
            a: bottom.len(),
            b: top.len(),
        });
    }
    FactoredOperator::new(
        n,
        AxisPermutation::new(top_slot)?,
        spiders,
        AxisPermutation::new(bottom_map)?,
    )
}

impl FactoredOperator {
    pub fn new(
        n: usize,
        top_perm: AxisPermutation,
        spiders: Vec<SpiderBlock>,
        bottom_perm: AxisPermutation,
    ) -> Result<Self> {
        let k: usize = spiders.iter().map(|s| s.a).sum();
        let l: usize = spiders.iter().map(|s| s.b).sum();
        if k != bottom_perm.len() || l != top_perm.len() {
            return Err(Error::DimensionMismatch(format!(
                "spiders have {k} bottom and {l} top legs, permutations act on {} and {}",
                bottom_perm.len(),
                top_perm.len()
            )));
        }
        Ok(FactoredOperator {
            n,
            shape: DiagramShape::new(k, l),
            top_gather: top_perm.gather_table(n),
            bottom_gather: bottom_perm.gather_table(n),
            top_perm,
            spiders,
            bottom_perm,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> DiagramShape {
        self.shape
    }

    pub fn top_perm(&self) -> &AxisPermutation {
        &self.top_perm
    }

    pub fn bottom_perm(&self) -> &AxisPermutation {
        &self.bottom_perm
    }

    pub fn spiders(&self) -> &[SpiderBlock] {
        &self.spiders
    }

    /// The middle factor `s_1 ⊗ … ⊗ s_b` as a single diagram.
    pub fn planar_diagram(&self) -> Diagram {
        let (mut top, mut bottom) = (0, 0);
        let blocks = self
            .spiders
            .iter()
            .map(|s| {
                let mut b: Vec<usize> = (top + 1..=top + s.b).collect();
                b.extend((bottom + 1..=bottom + s.a).map(|j| self.shape.l + j));
                top += s.b;
                bottom += s.a;
                b
            })
            .collect();
        make_diagram(self.shape, blocks).unwrap()
    }

    pub fn top_diagram(&self) -> Diagram {
        self.top_perm.to_diagram()
    }

    pub fn bottom_diagram(&self) -> Diagram {
        self.bottom_perm.to_diagram()
    }

    /// `Θ(σ_top) · (⊗ spider matrices) · Θ(σ_bottom)`, computed densely.
    pub fn to_dense(&self) -> Result<DenseOperator> {
        let theta = |d: &Diagram| crate::functors::MatrixFunctor::realize_diagram(&crate::functors::Theta, self.n, d);
        let mut middle = DenseOperator::identity(self.n, 0);
        for s in &self.spiders {
            middle = middle.kron(&spider_realize(self.n, *s))?;
        }
        theta(&self.top_diagram())?.matmul(&middle)?.matmul(&theta(&self.bottom_diagram())?)
    }

    /// Spider indices in application order: those that do not grow the
    /// tensor first, then the rest, each group left to right.
    fn schedule(&self) -> impl Iterator<Item = usize> + '_ {
        let shrinking = (0..self.spiders.len()).filter(|&i| self.spiders[i].a >= self.spiders[i].b);
        let growing = (0..self.spiders.len()).filter(|&i| self.spiders[i].a < self.spiders[i].b);
        shrinking.chain(growing)
    }

    fn apply_values<T>(&self, input: &[T]) -> Vec<T>
    where
        T: Clone + Zero + for<'a> AddAssign<&'a T>,
    {
        let n = self.n;
        let mut cur: Vec<T> = self.bottom_gather.iter().map(|&i| input[i].clone()).collect();
        // current leg count of every spider segment
        let mut legs: Vec<usize> = self.spiders.iter().map(|s| s.a).collect();
        for i in self.schedule() {
            let SpiderBlock { a, b } = self.spiders[i];
            let before: usize = legs[..i].iter().sum();
            let after: usize = legs[i + 1..].iter().sum();
            let p_len = n.pow(before as u32);
            let q_len = n.pow(after as u32);
            let in_mid = n.pow(a as u32);
            let out_mid = n.pow(b as u32);
            let mut next = vec![T::zero(); p_len * out_mid * q_len];
            let diag_in: Vec<usize> = (0..n).map(|c| diagonal(n, a, c)).collect();
            let diag_out: Vec<usize> = (0..n).map(|c| diagonal(n, b, c)).collect();
            for p in 0..p_len {
                let src = p * in_mid * q_len;
                let dst = p * out_mid * q_len;
                if b == 0 {
                    for &di in &diag_in {
                        let from = src + di * q_len;
                        for (o, x) in next[dst..dst + q_len].iter_mut().zip(&cur[from..from + q_len]) {
                            *o += x;
                        }
                    }
                } else if a == 0 {
                    for &dout in &diag_out {
                        let to = dst + dout * q_len;
                        next[to..to + q_len].clone_from_slice(&cur[src..src + q_len]);
                    }
                } else {
                    for (&di, &dout) in diag_in.iter().zip(&diag_out) {
                        let from = src + di * q_len;
                        let to = dst + dout * q_len;
                        next[to..to + q_len].clone_from_slice(&cur[from..from + q_len]);
                    }
                }
            }
            legs[i] = b;
            cur = next;
        }
        self.top_gather.iter().map(|&i| cur[i].clone()).collect()
    }
}

/// `Θ(d) v` through the factorization.
pub fn apply_fast(op: &FactoredOperator, v: &TensorVector) -> Result<TensorVector> {
    if v.n() != op.n || v.order() != op.shape.k {
        return Err(Error::DimensionMismatch(format!(
            "operator n={} {} cannot act on a vector with n={} order={}",
            op.n,
            op.shape,
            v.n(),
            v.order()
        )));
    }
    let values = match v.values() {
        Values::Exact(x) => Values::Exact(op.apply_values(x)),
        Values::Float(x) => Values::Float(op.apply_values(x)),
    };
    TensorVector::new(op.n, op.shape.l, values)
}

/// True when every block of `d` is a contiguous interval of top vertices
/// together with a contiguous interval of bottom vertices, and blocks
/// appear in the same left-to-right order on both rows.
pub fn is_planar(d: &Diagram) -> bool {
    let shape = d.shape();
    let (mut top, mut bottom) = (0, shape.l);
    for block in d.blocks() {
        for &v in block {
            if shape.is_top(v) {
                if v != top + 1 {
                    return false;
                }
                top = v;
            } else {
                if v != bottom + 1 {
                    return false;
                }
                bottom = v;
            }
        }
    }
    true
}
