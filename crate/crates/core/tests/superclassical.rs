use std::sync::Arc;

use supergrade::homspaces::GModule;
use supergrade::lie::LieSuperalgebra;
use supergrade::superclassical::{bracket, casimir_matrix, star_product, supertrace, BlockShape, ClassicalAlgebra, ClassicalKind, SuperMatrix};
use supergrade::{Field, Rational};

type M = SuperMatrix<Rational>;

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn shape(p: usize, q: usize) -> BlockShape {
    BlockShape::new(p, q).unwrap()
}

fn e(s: BlockShape, i: usize, j: usize) -> M {
    M::unit(s, i - 1, j - 1)
}

fn diag(s: BlockShape, d: &[i64]) -> M {
    let mut m = M::zero(s);
    for (i, &v) in d.iter().enumerate() {
        m.set(i, i, q(v));
    }
    m
}

#[test]
fn dimensions() {
    let dim = |k, p, qq| ClassicalAlgebra::<Rational>::new(k, shape(p, qq)).unwrap().dim();
    assert_eq!(dim(ClassicalKind::Sl, 2, 1), 8);
    assert_eq!(dim(ClassicalKind::Psl, 2, 2), 14);
    assert_eq!(dim(ClassicalKind::Gl, 1, 1), 4);
    assert!(ClassicalAlgebra::<Rational>::new(ClassicalKind::Psl, shape(2, 1)).is_err());
    assert!(BlockShape::new(0, 1).is_err());
}

#[test]
fn supertrace_examples() {
    let s = shape(2, 1);
    assert_eq!(supertrace(&M::identity(s)), q(1));
    assert_eq!(supertrace(&e(s, 1, 1)), q(1));
    assert_eq!(supertrace(&e(s, 3, 3)), q(-1));
    assert_eq!(supertrace(&e(s, 1, 2).mul(&e(s, 2, 1)).unwrap()), q(1));
}

#[test]
fn bracket_examples() {
    let s = shape(2, 1);
    let x = e(s, 1, 2);
    assert!(bracket(&x, &x).unwrap().is_zero());
    assert_eq!(bracket(&e(s, 1, 3), &e(s, 3, 1)).unwrap(), diag(s, &[1, 0, 1]));
    assert_eq!(bracket(&e(s, 1, 2), &e(s, 2, 1)).unwrap(), diag(s, &[1, -1, 0]));
}

#[test]
fn star_examples() {
    let s = shape(2, 1);
    assert_eq!(star_product(&e(s, 1, 2), &e(s, 2, 1), 1, 0).unwrap(), diag(s, &[-1, -1, -2]));
    assert_eq!(star_product(&e(s, 1, 3), &e(s, 3, 1), 1, 0).unwrap(), diag(s, &[-1, -2, -3]));
    let g = ClassicalAlgebra::<Rational>::type_a(1, 0).unwrap();
    for x in g.basis() {
        for y in g.basis() {
            let xy = star_product(x, y, 1, 0).unwrap();
            assert_eq!(supertrace(&xy), q(0));
            let sign = Rational::sign_of(x.parity().unwrap() * y.parity().unwrap());
            assert_eq!(xy, star_product(y, x, 1, 0).unwrap().scale(&sign));
        }
    }
    assert!(star_product(&e(shape(2, 2), 1, 2), &e(shape(2, 2), 2, 1), 1, 1).is_err());
}

#[test]
fn supertrace_is_supersymmetric_and_invariant() {
    let g = ClassicalAlgebra::<Rational>::type_a(1, 0).unwrap();
    let b = g.basis();
    for x in b {
        for y in b {
            let s = Rational::sign_of(x.parity().unwrap() * y.parity().unwrap());
            assert_eq!(supertrace(&x.mul(y).unwrap()), s * supertrace(&y.mul(x).unwrap()));
            for z in b {
                let l = supertrace(&bracket(x, y).unwrap().mul(z).unwrap());
                let r = supertrace(&x.mul(&bracket(y, z).unwrap()).unwrap());
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn classical_algebras_satisfy_jacobi() {
    for (k, p, qq) in [
        (ClassicalKind::Gl, 2, 1),
        (ClassicalKind::Sl, 2, 1),
        (ClassicalKind::Sl, 3, 2),
        (ClassicalKind::Psl, 2, 2),
    ] {
        let g = ClassicalAlgebra::<Rational>::new(k, shape(p, qq)).unwrap();
        assert!(LieSuperalgebra::from_classical(&g).jacobi_holds(), "{k} {p} {qq}");
    }
}

#[test]
fn casimir_examples() {
    let g = Arc::new(ClassicalAlgebra::<Rational>::type_a(1, 0).unwrap());
    let adj = GModule::adjoint(g.clone());
    let c = casimir_matrix(&g, &adj).unwrap();
    assert_eq!(c, supergrade::linalg::Matrix::identity(8));
    for a in adj.actions() {
        assert_eq!(c.mul(a).unwrap(), a.mul(&c).unwrap());
    }
    assert!(casimir_matrix(&g, &GModule::trivial(g.clone(), 3, 1)).unwrap().is_zero());
    let psl = Arc::new(ClassicalAlgebra::<Rational>::type_a(1, 1).unwrap());
    assert!(casimir_matrix(&psl, &GModule::adjoint(psl.clone())).unwrap().is_zero());
    let g31 = Arc::new(ClassicalAlgebra::<Rational>::type_a(3, 1).unwrap());
    let c = casimir_matrix(&g31, &GModule::adjoint(g31.clone())).unwrap();
    assert_eq!(c, supergrade::linalg::Matrix::identity(g31.dim()).scale(&q(2)));
}
