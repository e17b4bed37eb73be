use std::sync::Arc;

use supergrade::assembly::matrix_sl_a;
use supergrade::coordalg::dual_numbers;
use supergrade::homspaces::GModule;
use supergrade::lie::{Embedding, GradedAlgebra, LieSuperalgebra};
use supergrade::roots::{
    cartan_matrix, check_root_graded, kac_weight_closure, root_system, weight_decompose, weight_dimensions, Weight,
};
use supergrade::superclassical::{BlockShape, ClassicalAlgebra, ClassicalKind};
use supergrade::{Field, Rational};

fn shape(p: usize, q: usize) -> BlockShape {
    BlockShape::new(p, q).unwrap()
}

fn sl(p: usize, q: usize) -> Arc<ClassicalAlgebra<Rational>> {
    Arc::new(ClassicalAlgebra::new(ClassicalKind::Sl, shape(p, q)).unwrap())
}

#[test]
fn root_counts() {
    for (p, q) in [(2, 1), (3, 2), (3, 1), (4, 2)] {
        let rs = root_system(shape(p, q));
        assert_eq!(rs.even_roots.len(), p * (p - 1) + q * (q - 1));
        assert_eq!(rs.odd_roots.len(), 2 * p * q);
        assert_eq!(rs.simple_roots.len(), p + q - 1);
        assert_eq!(rs.even_roots.len() + rs.odd_roots.len() + p + q - 1, sl(p, q).dim());
    }
}

#[test]
fn weight_evaluation() {
    let s = shape(2, 1);
    let g = sl(2, 1);
    let w = Weight::epsilon(s, 0).sub(&Weight::delta(s, 0));
    // h1 = diag(1, -1, 0), h2 = diag(0, 1, 1)
    let h = &g.basis()[g.cartan_indices()[1]];
    assert_eq!(w.eval(h), Rational::from_i64(-1));
    assert_eq!(w.to_string(), "e1-d1");
}

#[test]
fn cartan_examples() {
    let c = cartan_matrix::<Rational>(&root_system(shape(2, 1)));
    let q = Rational::from_i64;
    assert_eq!(c.entries(), &[q(2), q(-1), q(-1), q(0)]);
    let c = cartan_matrix::<Rational>(&root_system(shape(3, 1)));
    assert_eq!(c[(2, 2)], q(0));
    assert_eq!((c[(0, 0)].clone(), c[(0, 1)].clone(), c[(1, 0)].clone(), c[(1, 1)].clone()), (q(2), q(-1), q(-1), q(2)));
    let c = cartan_matrix::<Rational>(&root_system(shape(3, 2)));
    assert_eq!(c[(2, 2)], q(0));
}

#[test]
fn adjoint_weights_are_roots() {
    for (p, q) in [(2, 1), (3, 2), (3, 1)] {
        let g = sl(p, q);
        let spaces = weight_decompose(&GModule::adjoint(g.clone())).unwrap();
        let rs = root_system(g.shape());
        let total: usize = spaces.iter().map(|s| s.vectors.len()).sum();
        assert_eq!(total, g.dim());
        for s in &spaces {
            if s.weight.normalized().is_zero() {
                assert_eq!(s.vectors.len(), p + q - 1);
                assert_eq!(s.parity, 0);
            } else {
                assert_eq!(s.vectors.len(), 1);
                assert_eq!(s.parity == 1, rs.odd_roots.iter().any(|r| r.normalized() == s.weight.normalized()));
                assert!(rs.contains(&s.weight));
            }
        }
        assert_eq!(weight_dimensions(&spaces).len(), rs.even_roots.len() + rs.odd_roots.len() + 1);
    }
}

#[test]
fn odd_root_space_is_spanned_by_e13() {
    let g = sl(2, 1);
    let s = g.shape();
    let spaces = weight_decompose(&GModule::adjoint(g.clone())).unwrap();
    let mu = Weight::epsilon(s, 0).sub(&Weight::delta(s, 0));
    let sp = spaces.iter().find(|x| x.weight.normalized() == mu.normalized()).unwrap();
    let mut e13 = vec![Rational::from_i64(0); 8];
    e13[g.unit_index(0, 2)] = Rational::from_i64(1);
    assert_eq!(sp.vectors.len(), 1);
    let v = &sp.vectors[0];
    let c = v[g.unit_index(0, 2)].clone();
    assert_eq!(*v, e13.iter().map(|x| x.clone() * c.clone()).collect::<Vec<_>>());
}

#[test]
fn trivial_module_has_weight_zero() {
    let g = sl(2, 1);
    let spaces = weight_decompose(&GModule::trivial(g.clone(), 3, 0)).unwrap();
    assert_eq!(spaces.len(), 1);
    assert!(spaces[0].weight.normalized().is_zero());
}

#[test]
fn root_gradedness() {
    let l = matrix_sl_a(3, 2, &dual_numbers::<Rational>().unwrap()).unwrap();
    assert!(check_root_graded(&l.algebra, &l.embedding).unwrap().passes());

    for (p, q) in [(2, 1), (3, 2)] {
        let g = GradedAlgebra::classical(sl(p, q));
        assert!(check_root_graded(&g.algebra, &g.embedding).unwrap().passes());
    }

    let gl = ClassicalAlgebra::<Rational>::new(ClassicalKind::Gl, shape(3, 2)).unwrap();
    let g = sl(3, 2);
    let images = g.basis().iter().map(|x| gl.coords(x).unwrap()).collect();
    let emb = Embedding::new(g, images).unwrap();
    let r = check_root_graded(&LieSuperalgebra::from_classical(&gl), &emb).unwrap();
    assert!(r.embedding_valid && r.weights_in_roots);
    assert!(!r.zero_space_generated);
    assert!(!r.passes());
}

#[test]
fn kac_closure_examples() {
    let s = shape(2, 1);
    let odd = Weight::epsilon(s, 0).sub(&Weight::delta(s, 0));
    assert!(kac_weight_closure(s, &odd).unwrap());
    let even = Weight::epsilon(s, 0).sub(&Weight::epsilon(s, 1)).scale(2);
    assert!(!kac_weight_closure(s, &even).unwrap());
    assert!(kac_weight_closure(s, &Weight::zero(s)).unwrap());
    assert!(kac_weight_closure(shape(4, 3), &Weight::zero(shape(4, 3))).is_err());
}
