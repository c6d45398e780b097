//! Functors from the diagram categories to equivariant matrices.
//!
//! Each functor is a [`MatrixFunctor`] registered by name in a
//! [`FunctorRegistry`]:
//!
//! | name    | group | source category |
//! |---------|-------|-----------------|
//! | `theta` | S_n   | P(n)            |
//! | `phi`   | O(n)  | B(n)            |
//! | `x_sp`  | Sp(n) | B(n), n even    |
//! | `psi`   | SO(n) | BG(n)           |

pub mod dense;
pub mod emit;
mod kernel;
pub mod rank;

pub use dense::{decode_index, encode_index, DenseOperator, FloatMatrix};
pub use kernel::DEFAULT_ENTRY_CAP;

use crate::algebra::{CategoryContext, ContextKind, DiagramSum};
use crate::error::{Error, Result};
use crate::groups::GroupTag;
use crate::setpart::{
    classify_bg, enumerate_bg, enumerate_brauer, enumerate_partition_diagrams, Diagram, DiagramKind, DiagramShape,
};
use kernel::{evaluate, Factor};

pub trait MatrixFunctor: Send + Sync {
    fn name(&self) -> &'static str;

    fn group(&self) -> GroupTag;

    fn context_kind(&self) -> ContextKind;

    fn check_dimension(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        Ok(())
    }

    fn context(&self, n: usize) -> Result<CategoryContext> {
        self.check_dimension(n)?;
        CategoryContext::new(self.context_kind(), n)
    }

    /// The matrix of a single diagram.
    fn realize_diagram(&self, n: usize, d: &Diagram) -> Result<DenseOperator>;

    /// The spanning diagrams whose images span the equivariant maps.
    fn spanning_diagrams(&self, shape: DiagramShape, n: usize) -> Vec<Diagram>;
}

fn require_brauer(functor: &str, d: &Diagram) -> Result<()> {
    if let Some(b) = d.blocks().iter().find(|b| b.len() != 2) {
        let _ = functor;
        return Err(Error::NotBrauer { size: b.len() });
    }
    Ok(())
}

fn delta_factors(d: &Diagram, n: usize) -> Vec<Factor> {
    d.blocks().iter().map(|b| Factor::all_equal(b, n)).collect()
}

/// S_n: `E_π`, with entry 1 exactly when the index assignment is constant
/// on every block.
#[derive(Debug, Default, Clone, Copy)]
pub struct Theta;

impl MatrixFunctor for Theta {
    fn name(&self) -> &'static str {
        "theta"
    }

    fn group(&self) -> GroupTag {
        GroupTag::Sym
    }

    fn context_kind(&self) -> ContextKind {
        ContextKind::Partition
    }

    fn realize_diagram(&self, n: usize, d: &Diagram) -> Result<DenseOperator> {
        self.check_dimension(n)?;
        evaluate(n, d.shape(), &delta_factors(d, n))
    }

    fn spanning_diagrams(&self, shape: DiagramShape, _n: usize) -> Vec<Diagram> {
        enumerate_partition_diagrams(shape)
    }
}

/// O(n): `E_β`, the restriction of `E_π` to Brauer diagrams.
#[derive(Debug, Default, Clone, Copy)]
pub struct Phi;

impl MatrixFunctor for Phi {
    fn name(&self) -> &'static str {
        "phi"
    }

    fn group(&self) -> GroupTag {
        GroupTag::Orth
    }

    fn context_kind(&self) -> ContextKind {
        ContextKind::Brauer
    }

    fn realize_diagram(&self, n: usize, d: &Diagram) -> Result<DenseOperator> {
        self.check_dimension(n)?;
        require_brauer(self.name(), d)?;
        evaluate(n, d.shape(), &delta_factors(d, n))
    }

    fn spanning_diagrams(&self, shape: DiagramShape, _n: usize) -> Vec<Diagram> {
        enumerate_brauer(shape)
    }
}

/// Index position of the symplectic label, in the order 1, 1′, 2, 2′, ….
///
/// Position `2p` is the label `p+1` and `2p+1` is `(p+1)′`.
pub fn symplectic_label(position: usize) -> String {
    let base = position / 2 + 1;
    if position % 2 == 0 {
        base.to_string()
    } else {
        format!("{base}'")
    }
}

/// The symplectic form on positions: ε(p, p′) = 1, ε(p′, p) = −1, else 0.
pub fn epsilon(a: usize, b: usize) -> i64 {
    if a % 2 == 0 && b == a + 1 {
        1
    } else if a % 2 == 1 && b + 1 == a {
        -1
    } else {
        0
    }
}

/// Sp(n), n = 2m: `F_β`. Pairs across rows contribute δ, pairs within a row
/// contribute ε read left to right (lower label first).
#[derive(Debug, Default, Clone, Copy)]
pub struct XSp;

impl MatrixFunctor for XSp {
    fn name(&self) -> &'static str {
        "x_sp"
    }

    fn group(&self) -> GroupTag {
        GroupTag::Symp
    }

    fn context_kind(&self) -> ContextKind {
        ContextKind::Brauer
    }

    fn check_dimension(&self, n: usize) -> Result<()> {
        if n == 0 || n % 2 == 1 {
            return Err(Error::OddDimension { n });
        }
        Ok(())
    }

    fn realize_diagram(&self, n: usize, d: &Diagram) -> Result<DenseOperator> {
        self.check_dimension(n)?;
        require_brauer(self.name(), d)?;
        let shape = d.shape();
        let factors: Vec<Factor> = d
            .blocks()
            .iter()
            .map(|b| {
                if shape.is_top(b[0]) == shape.is_top(b[1]) {
                    let options = (0..n)
                        .flat_map(|a| (0..n).map(move |c| (a, c)))
                        .filter_map(|(a, c)| match epsilon(a, c) {
                            0 => None,
                            w => Some((vec![a, c], w)),
                        })
                        .collect();
                    Factor {
                        vertices: b.clone(),
                        options,
                    }
                } else {
                    Factor::all_equal(b, n)
                }
            })
            .collect();
        evaluate(n, shape, &factors)
    }

    fn spanning_diagrams(&self, shape: DiagramShape, _n: usize) -> Vec<Diagram> {
        enumerate_brauer(shape)
    }
}

/// SO(n): `E_β` on Brauer diagrams and `H_α` on (l+k)\n diagrams, where the
/// free indices (top row then bottom row, left to right) are weighted by
/// the sign of the permutation of `[n]` they spell.
#[derive(Debug, Default, Clone, Copy)]
pub struct Psi;

impl MatrixFunctor for Psi {
    fn name(&self) -> &'static str {
        "psi"
    }

    fn group(&self) -> GroupTag {
        GroupTag::SpecOrth
    }

    fn context_kind(&self) -> ContextKind {
        ContextKind::BrauerGrood
    }

    fn realize_diagram(&self, n: usize, d: &Diagram) -> Result<DenseOperator> {
        self.check_dimension(n)?;
        let plain = d.untagged();
        if plain.is_brauer() {
            return evaluate(n, d.shape(), &delta_factors(d, n));
        }
        if let DiagramKind::BrauerGrood(m) = d.kind() {
            if m != n {
                return Err(Error::KindMismatch {
                    functor: self.name().into(),
                    reason: format!("(l+k)\\{m} diagram evaluated at n={n}"),
                });
            }
        }
        let tagged = classify_bg(&plain, n).map_err(|e| Error::KindMismatch {
            functor: self.name().into(),
            reason: e.to_string(),
        })?;
        let mut factors: Vec<Factor> = tagged
            .blocks()
            .iter()
            .filter(|b| b.len() == 2)
            .map(|b| Factor::all_equal(b, n))
            .collect();
        factors.push(Factor::levi_civita(&tagged.free_vertices(), n));
        evaluate(n, d.shape(), &factors)
    }

    fn spanning_diagrams(&self, shape: DiagramShape, n: usize) -> Vec<Diagram> {
        let mut all = enumerate_brauer(shape);
        all.extend(enumerate_bg(shape, n));
        all
    }
}

/// Name-indexed collection of functors.
pub struct FunctorRegistry {
    functors: Vec<Box<dyn MatrixFunctor>>,
}

impl Default for FunctorRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl FunctorRegistry {
    pub fn empty() -> Self {
        FunctorRegistry { functors: Vec::new() }
    }

    /// Registry holding `theta`, `phi`, `x_sp` and `psi`.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Theta));
        r.register(Box::new(Phi));
        r.register(Box::new(XSp));
        r.register(Box::new(Psi));
        r
    }

    /// Adds a functor, replacing any existing one with the same name.
    pub fn register(&mut self, functor: Box<dyn MatrixFunctor>) {
        self.functors.retain(|f| f.name() != functor.name());
        self.functors.push(functor);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MatrixFunctor> {
        self.functors
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::Unknown {
                what: "functor",
                name: name.into(),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.functors.iter().map(|f| f.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn MatrixFunctor> {
        self.functors.iter().map(|f| f.as_ref())
    }
}

/// Linear extension of a functor to diagram sums.
pub fn realize(functor: &dyn MatrixFunctor, n: usize, s: &DiagramSum) -> Result<DenseOperator> {
    functor.check_dimension(n)?;
    let mut out = DenseOperator::zeros(n, s.shape());
    for (d, c) in s.terms() {
        let m = functor.realize_diagram(n, d)?;
        out = out.add(&m.scale(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpart::make_diagram;

    fn diag(k: usize, l: usize, blocks: Vec<Vec<usize>>) -> Diagram {
        make_diagram(DiagramShape::new(k, l), blocks).unwrap()
    }

    fn ints(op: &DenseOperator) -> Vec<i64> {
        op.to_i64().unwrap()
    }

    #[test]
    fn theta_examples() {
        let id = Theta.realize_diagram(4, &diag(1, 1, vec![vec![1, 2]])).unwrap();
        assert_eq!(id, DenseOperator::identity(4, 1));
        let ones = Theta.realize_diagram(4, &diag(1, 1, vec![vec![1], vec![2]])).unwrap();
        assert_eq!(ints(&ones), vec![1; 16]);
        let discrete = Theta
            .realize_diagram(2, &diag(2, 2, vec![vec![1], vec![2], vec![3], vec![4]]))
            .unwrap();
        assert_eq!(ints(&discrete), vec![1; 16]);
    }

    #[test]
    fn phi_examples() {
        let id = Phi.realize_diagram(2, &diag(2, 2, vec![vec![1, 3], vec![2, 4]])).unwrap();
        assert_eq!(id, DenseOperator::identity(2, 2));
        let swap = Phi.realize_diagram(2, &diag(2, 2, vec![vec![1, 4], vec![2, 3]])).unwrap();
        // swap e_a ⊗ e_b -> e_b ⊗ e_a
        #[rustfmt::skip]
        let expected = vec![
            1, 0, 0, 0,
            0, 0, 1, 0,
            0, 1, 0, 0,
            0, 0, 0, 1,
        ];
        assert_eq!(ints(&swap), expected);
        let cup = Phi.realize_diagram(3, &diag(0, 2, vec![vec![1, 2]])).unwrap();
        assert_eq!(ints(&cup), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let not_brauer = Phi.realize_diagram(2, &diag(1, 1, vec![vec![1], vec![2]]));
        assert_eq!(not_brauer, Err(Error::NotBrauer { size: 1 }));
    }

    #[test]
    fn x_sp_rejects_odd_dimension() {
        let d = diag(1, 1, vec![vec![1, 2]]);
        assert_eq!(XSp.realize_diagram(3, &d), Err(Error::OddDimension { n: 3 }));
        assert!(XSp.realize_diagram(4, &d).is_ok());
    }

    #[test]
    fn psi_evaluates_zero_on_repeated_free_index() {
        let d = diag(2, 2, vec![vec![1, 2], vec![3], vec![4]]);
        let m = Psi.realize_diagram(2, &d).unwrap();
        // j1 = j2 columns vanish
        for row in 0..4 {
            assert_eq!(*m.get(row, 0), crate::algebra::scalar(0));
            assert_eq!(*m.get(row, 3), crate::algebra::scalar(0));
        }
    }

    #[test]
    fn psi_rejects_wrong_free_count() {
        let d = crate::setpart::classify_bg(&diag(2, 1, vec![vec![1], vec![2, 3]]), 1).unwrap();
        assert!(matches!(Psi.realize_diagram(3, &d), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn registry_lookup() {
        let r = FunctorRegistry::standard();
        assert_eq!(r.names(), vec!["theta", "phi", "x_sp", "psi"]);
        assert_eq!(r.get("psi").unwrap().group(), GroupTag::SpecOrth);
        assert!(matches!(r.get("omega"), Err(Error::Unknown { .. })));
    }

    #[test]
    fn entries_are_signs() {
        let r = FunctorRegistry::standard();
        for f in r.iter() {
            let n = 2;
            for d in f.spanning_diagrams(DiagramShape::new(2, 2), n) {
                let m = f.realize_diagram(n, &d).unwrap();
                assert!(ints(&m).iter().all(|x| (-1..=1).contains(x)), "{} {}", f.name(), d);
            }
        }
    }
}
