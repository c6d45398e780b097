//! Group elements, tensor-power actions and the equivariance residual.

mod samplers;

pub use samplers::{symplectic_form, GroupSampler, OrthSampler, SamplerRegistry, SpecOrthSampler, SymSampler, SympSampler};

use std::fmt;

use nalgebra::DMatrix;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::fast::{apply_dense, Mode, TensorVector, Values};
use crate::functors::DenseOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Sym,
    Orth,
    Symp,
    SpecOrth,
}

impl GroupTag {
    pub fn name(self) -> &'static str {
        match self {
            GroupTag::Sym => "sym",
            GroupTag::Orth => "orth",
            GroupTag::Symp => "symp",
            GroupTag::SpecOrth => "so",
        }
    }

    pub fn from_name(name: &str) -> Result<GroupTag> {
        match name {
            "sym" | "s" => Ok(GroupTag::Sym),
            "orth" | "o" => Ok(GroupTag::Orth),
            "symp" | "sp" => Ok(GroupTag::Symp),
            "so" | "specorth" => Ok(GroupTag::SpecOrth),
            _ => Err(Error::Unknown {
                what: "group",
                name: name.into(),
            }),
        }
    }

    /// Name of the functor whose image is this group's equivariant maps.
    pub fn functor_name(self) -> &'static str {
        match self {
            GroupTag::Sym => "theta",
            GroupTag::Orth => "phi",
            GroupTag::Symp => "x_sp",
            GroupTag::SpecOrth => "psi",
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    /// `g e_a = e_{perm[a]}`.
    Permutation(Vec<usize>),
    Float(DMatrix<f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    tag: GroupTag,
    n: usize,
    repr: Repr,
}

impl GroupElement {
    /// The permutation matrix `e_a ↦ e_{perm[a]}` (0-based).
    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(GroupElement {
            tag: GroupTag::Sym,
            n,
            repr: Repr::Permutation(perm),
        })
    }

    /// A float element; membership is not checked here, see [`GroupElement::defect`].
    pub fn from_matrix(tag: GroupTag, matrix: DMatrix<f64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("group element must be square".into()));
        }
        let n = matrix.nrows();
        Ok(GroupElement {
            tag,
            n,
            repr: Repr::Float(matrix),
        })
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.repr, Repr::Permutation(_))
    }

    pub fn as_permutation(&self) -> Option<&[usize]> {
        match &self.repr {
            Repr::Permutation(p) => Some(p),
            Repr::Float(_) => None,
        }
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        match &self.repr {
            Repr::Float(m) => m.clone(),
            Repr::Permutation(p) => DMatrix::from_fn(self.n, self.n, |i, j| if p[j] == i { 1.0 } else { 0.0 }),
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("n={} vs n={}", self.n, other.n)));
        }
        if let (Repr::Permutation(p), Repr::Permutation(q)) = (&self.repr, &other.repr) {
            return GroupElement::permutation(q.iter().map(|&a| p[a]).collect());
        }
        let tag = if self.tag == other.tag { self.tag } else { GroupTag::Orth };
        GroupElement::from_matrix(tag, self.matrix() * other.matrix())
    }

    /// Max-norm distance from satisfying the defining relations of the tag.
    pub fn defect(&self) -> f64 {
        let g = self.matrix();
        let n = self.n;
        let max = |m: DMatrix<f64>| m.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        match self.tag {
            GroupTag::Sym => {
                let ok = g.iter().all(|&x| x == 0.0 || x == 1.0)
                    && g.row_iter().all(|r| r.sum() == 1.0)
                    && g.column_iter().all(|c| c.sum() == 1.0);
                if ok {
                    0.0
                } else {
                    f64::INFINITY
                }
            }
            GroupTag::Orth => max(g.transpose() * &g - DMatrix::identity(n, n)),
            GroupTag::SpecOrth => max(g.transpose() * &g - DMatrix::identity(n, n)).max((g.determinant() - 1.0).abs()),
            GroupTag::Symp => {
                let j = symplectic_form(n).unwrap_or_else(|_| DMatrix::zeros(n, n));
                max(g.transpose() * &j * &g - j)
            }
        }
    }
}

/// `ρ_k(g) v`, acting with `g` on each tensor axis in turn.
pub fn rho_apply(g: &GroupElement, k: usize, v: &TensorVector) -> Result<TensorVector> {
    if v.n() != g.n() || v.order() != k {
        return Err(Error::DimensionMismatch(format!(
            "element with n={} on order {k} cannot act on a vector with n={} order={}",
            g.n(),
            v.n(),
            v.order()
        )));
    }
    let n = g.n();
    match (&g.repr, v.values()) {
        (Repr::Permutation(p), Values::Exact(x)) => {
            Ok(TensorVector::exact(n, k, permute_entries(p, k, x)).expect("length preserved"))
        }
        (Repr::Permutation(p), Values::Float(x)) => {
            Ok(TensorVector::float(n, k, permute_entries(p, k, x)).expect("length preserved"))
        }
        (Repr::Float(m), Values::Float(x)) => {
            let mut cur = x.clone();
            let mut next = vec![0.0; cur.len()];
            for axis in 0..k {
                let stride = n.pow((k - 1 - axis) as u32);
                let outer = cur.len() / (stride * n);
                for o in 0..outer {
                    for s in 0..stride {
                        let base = o * stride * n + s;
                        for i in 0..n {
                            let mut acc = 0.0;
                            for a in 0..n {
                                acc += m[(i, a)] * cur[base + a * stride];
                            }
                            next[base + i * stride] = acc;
                        }
                    }
                }
                std::mem::swap(&mut cur, &mut next);
            }
            TensorVector::float(n, k, cur)
        }
        (Repr::Float(_), Values::Exact(_)) => Err(Error::ModeMismatch(
            "a float group element needs a float vector".into(),
        )),
    }
}

fn permute_entries<T: Clone>(p: &[usize], k: usize, x: &[T]) -> Vec<T> {
    let n = p.len();
    let mut out = x.to_vec();
    let mut digits = vec![0usize; k];
    for (idx, val) in x.iter().enumerate() {
        let mut rest = idx;
        for d in digits.iter_mut().rev() {
            *d = rest % n;
            rest /= n;
        }
        let target = digits.iter().fold(0, |acc, &d| acc * n + p[d]);
        out[target] = val.clone();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    /// `‖ρ_l(g)·M − M·ρ_k(g)‖_max`.
    pub value: f64,
    /// Both sides were computed in exact arithmetic.
    pub exact: bool,
}

impl Residual {
    pub fn passes(&self, tol: f64) -> bool {
        if self.exact {
            self.value == 0.0
        } else {
            self.value < tol
        }
    }
}

/// Compares `ρ_l(g)·M` against `M·ρ_k(g)` column by column.
pub fn check_equivariance(g: &GroupElement, m: &DenseOperator) -> Result<Residual> {
    if g.n() != m.n() {
        return Err(Error::DimensionMismatch(format!("element n={} vs matrix n={}", g.n(), m.n())));
    }
    let (k, l) = (m.shape().k, m.shape().l);
    let n = m.n();
    let mode = if g.is_exact() { Mode::Exact } else { Mode::Float };
    let float_m = (mode == Mode::Float).then(|| m.to_f64());
    let column = |j: usize| -> TensorVector {
        match &float_m {
            Some(f) => TensorVector::float(n, l, (0..f.rows).map(|r| f.data[r * f.cols + j]).collect()).unwrap(),
            None => TensorVector::exact(n, l, (0..m.rows()).map(|r| m.get(r, j).clone()).collect()).unwrap(),
        }
    };
    let apply = |v: &TensorVector| -> Result<TensorVector> {
        match &float_m {
            Some(f) => TensorVector::float(n, l, f.matvec(v.as_float().unwrap())),
            None => apply_dense(m, v),
        }
    };
    let mut worst = 0.0f64;
    let mut exact_worst = Scalar::zero();
    for j in 0..m.cols() {
        let lhs = rho_apply(g, l, &column(j))?;
        let moved = rho_apply(g, k, &TensorVector::basis(n, k, j, mode))?;
        let rhs = apply(&moved)?;
        match (lhs.values(), rhs.values()) {
            (Values::Exact(a), Values::Exact(b)) => {
                for (x, y) in a.iter().zip(b) {
                    let d = (x - y).abs();
                    if d > exact_worst {
                        exact_worst = d;
                    }
                }
            }
            _ => worst = worst.max(lhs.max_abs_diff(&rhs)?),
        }
    }
    Ok(Residual {
        value: if g.is_exact() { exact_worst.to_f64().unwrap_or(f64::INFINITY) } else { worst },
        exact: g.is_exact(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar;

    #[test]
    fn rho_examples() {
        let swap = GroupElement::permutation(vec![1, 0, 2]).unwrap();
        // e_1 ⊗ e_2 -> e_2 ⊗ e_1 (0-based: index 0*3+1 -> 1*3+0)
        let v = TensorVector::basis(3, 2, 1, Mode::Exact);
        let out = rho_apply(&swap, 2, &v).unwrap();
        assert_eq!(out, TensorVector::basis(3, 2, 3, Mode::Exact));
        let id = GroupElement::permutation(vec![0, 1, 2]).unwrap();
        let w = TensorVector::exact(3, 1, vec![scalar(1), scalar(2), scalar(3)]).unwrap();
        assert_eq!(rho_apply(&id, 1, &w).unwrap(), w);
        let g = GroupElement::from_matrix(
            GroupTag::Orth,
            DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]),
        )
        .unwrap();
        let x = TensorVector::float(2, 1, vec![1.0, 2.0]).unwrap();
        assert_eq!(rho_apply(&g, 1, &x).unwrap().as_float().unwrap(), &[-2.0, 1.0]);
        assert!(matches!(rho_apply(&g, 1, &w), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn permutation_product() {
        let a = GroupElement::permutation(vec![1, 2, 0]).unwrap();
        let b = GroupElement::permutation(vec![1, 0, 2]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.matrix(), a.matrix() * b.matrix());
        assert_eq!(ab.defect(), 0.0);
    }

    #[test]
    fn identity_is_equivariant() {
        let g = GroupElement::permutation(vec![2, 0, 1]).unwrap();
        let r = check_equivariance(&g, &DenseOperator::identity(3, 2)).unwrap();
        assert!(r.exact && r.value == 0.0);
    }
}
