mod common;

use common::{d, s4_golden, so2_golden, sp2_golden};
use diagcat::algebra::{compose, tensor, CategoryContext, DiagramSum};
use diagcat::functors::{realize, rank::spanning_rank, DenseOperator, FunctorRegistry, MatrixFunctor, Phi, Psi, Theta, XSp};
use diagcat::setpart::{classify_bg, enumerate_bg, enumerate_brauer, Diagram, DiagramShape};
use diagcat::Error;

#[test]
fn golden_s4() {
    for (text, want) in s4_golden() {
        assert_eq!(Theta.realize_diagram(4, &d(text)).unwrap().to_i64().unwrap(), want, "{text}");
    }
}

#[test]
fn golden_sp2() {
    let all = enumerate_brauer(DiagramShape::new(2, 2));
    assert_eq!(all.len(), 3);
    for (text, want) in sp2_golden() {
        assert!(all.contains(&d(text)));
        assert_eq!(XSp.realize_diagram(2, &d(text)).unwrap().to_i64().unwrap(), want, "{text}");
    }
}

#[test]
fn golden_so2() {
    let all = enumerate_bg(DiagramShape::new(2, 2), 2);
    assert_eq!(all.len(), 6);
    for (text, want) in so2_golden() {
        let dg = classify_bg(&d(text), 2).unwrap();
        assert!(all.contains(&dg));
        assert_eq!(Psi.realize_diagram(2, &dg).unwrap().to_i64().unwrap(), want, "{text}");
    }
}

#[test]
fn identities_map_to_identities() {
    let reg = FunctorRegistry::standard();
    for f in reg.iter() {
        for r in 0..=3 {
            let n = 2;
            assert_eq!(f.realize_diagram(n, &Diagram::identity(r)).unwrap(), DenseOperator::identity(n, r), "{}", f.name());
        }
    }
}

#[test]
fn realize_is_linear() {
    let a = d("P[1->1]: {1,2}");
    let b = d("P[1->1]: {1}/{2}");
    let s = DiagramSum::from_diagram(a.clone()).add(&DiagramSum::term(diagcat::algebra::scalar(-3), b.clone())).unwrap();
    let m = realize(&Theta, 3, &s).unwrap();
    let want = Theta
        .realize_diagram(3, &a)
        .unwrap()
        .add(&Theta.realize_diagram(3, &b).unwrap().scale(&diagcat::algebra::scalar(-3)))
        .unwrap();
    assert_eq!(m, want);
}

#[test]
fn spanning_ranks() {
    let cap = 1 << 24;
    assert_eq!(spanning_rank(&Theta, DiagramShape::new(1, 1), 4, cap).unwrap(), 2);
    assert_eq!(spanning_rank(&Theta, DiagramShape::new(2, 2), 2, cap).unwrap(), 8);
    assert_eq!(spanning_rank(&Phi, DiagramShape::new(2, 2), 1, cap).unwrap(), 1);
    // the spanning set for SO(2) on (2,2) is dependent: 3 + 6 diagrams
    let so = spanning_rank(&Psi, DiagramShape::new(2, 2), 2, cap).unwrap();
    assert!(so <= 9);
}

#[test]
fn x_sp_is_monoidal_on_cup_and_cap() {
    let ctx = CategoryContext::brauer(2).unwrap();
    let cup = DiagramSum::from_diagram(d("P[0->2]: {1,2}"));
    let cap = DiagramSum::from_diagram(d("P[2->0]: {1,2}"));
    let t = tensor(&ctx, &cup, &cap).unwrap();
    let lhs = realize(&XSp, 2, &t).unwrap();
    let rhs = realize(&XSp, 2, &cup).unwrap().kron(&realize(&XSp, 2, &cap).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    // closing a loop gives n
    let lp = compose(&ctx, &cap, &cup).unwrap();
    assert_eq!(realize(&XSp, 2, &lp).unwrap(), realize(&XSp, 2, &cap).unwrap().matmul(&realize(&XSp, 2, &cup).unwrap()).unwrap());
}

/// With δ across rows and ε within a row, the zig-zag identity of the
/// Brauer category goes to `J² = -1`.
#[test]
fn x_sp_zigzag_is_minus_identity() {
    let ctx = CategoryContext::brauer(2).unwrap();
    let cup_id = DiagramSum::from_diagram(d("P[1->3]: {1,2}/{3,4}"));
    let id_cap = DiagramSum::from_diagram(d("P[3->1]: {1,2}/{3,4}"));
    let zig = compose(&ctx, &id_cap, &cup_id).unwrap();
    assert_eq!(zig, DiagramSum::from_diagram(Diagram::identity(1)));
    let image = realize(&XSp, 2, &id_cap).unwrap().matmul(&realize(&XSp, 2, &cup_id).unwrap()).unwrap();
    assert_eq!(image, DenseOperator::identity(2, 1).scale(&diagcat::algebra::scalar(-1)));
}

#[test]
fn kind_errors() {
    assert_eq!(XSp.realize_diagram(3, &Diagram::identity(1)), Err(Error::OddDimension { n: 3 }));
    assert!(matches!(Phi.realize_diagram(2, &d("P[1->1]: {1}/{2}")), Err(Error::NotBrauer { .. })));
    let bg2 = classify_bg(&d("P[2->2]: {1,2}/{3}/{4}"), 2).unwrap();
    assert!(matches!(Psi.realize_diagram(3, &bg2), Err(Error::KindMismatch { .. })));
}
