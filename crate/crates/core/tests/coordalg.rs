use supergrade::coordalg::{dual_numbers, grassmann, group_algebra, matrix_super, AssocSuperalgebra, Builtin};
use supergrade::linalg::{is_zero_vec, Matrix};
use supergrade::lie::LieSuperalgebra;
use supergrade::{Check, Error, Field, Rational};

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn all_builtins() -> Vec<AssocSuperalgebra<Rational>> {
    ["ground_field", "dual_numbers", "group_algebra:3", "grassmann:2", "grassmann:3", "matrix_super:1,1", "matrix_super:2,1", "truncated_poly:3"]
        .iter()
        .map(|s| s.parse::<Builtin>().unwrap().build().unwrap())
        .collect()
}

#[test]
fn builder_examples() {
    let g = grassmann::<Rational>(2).unwrap();
    assert_eq!(g.parity(), &[0, 1, 1, 0]);
    assert!(is_zero_vec(&g.product_basis_dense(1, 1)));
    let d = dual_numbers::<Rational>().unwrap();
    assert_eq!(d.parity(), &[0, 0]);
    assert!(is_zero_vec(&d.product_basis_dense(1, 1)));
    let m = matrix_super::<Rational>(1, 1).unwrap();
    assert_eq!(m.dim(), 4);
    assert_eq!(m.parity().iter().filter(|&&p| p == 1).count(), 2);
    assert_eq!(group_algebra::<Rational>(2).unwrap().dim(), 2);
    assert!("matrix_super:1".parse::<Builtin>().is_err());
    assert_eq!("grassmann:2".parse::<Builtin>().unwrap().to_string(), "grassmann:2");
}

#[test]
fn associativity_examples() {
    assert!(grassmann::<Rational>(3).unwrap().check_associative().holds());
    assert!(matrix_super::<Rational>(1, 1).unwrap().check_associative().holds());
    let quads = vec![
        (0, 0, 0, q(1)),
        (0, 1, 1, q(1)),
        (0, 2, 2, q(1)),
        (1, 0, 1, q(1)),
        (2, 0, 2, q(1)),
        (1, 1, 2, q(1)),
        (2, 1, 1, q(1)),
    ];
    let a = AssocSuperalgebra::from_quadruples(vec![0, 0, 0], &quads, vec![q(1), q(0), q(0)]).unwrap();
    assert_eq!(a.check_associative().witness().unwrap().triple, (1, 1, 1));
}

#[test]
fn supercommutativity_examples() {
    for k in 0..=4 {
        assert!(grassmann::<Rational>(k).unwrap().check_supercommutative().holds());
    }
    assert!(dual_numbers::<Rational>().unwrap().check_supercommutative().holds());
    assert_eq!(matrix_super::<Rational>(1, 1).unwrap().check_supercommutative(), Check::Fails((0, 1)));
}

#[test]
fn commutator_examples() {
    let c = matrix_super::<Rational>(1, 1).unwrap().commutator_subspace();
    assert_eq!((c.dim(), c.ad_dim()), (3, 2));
    assert_eq!(grassmann::<Rational>(2).unwrap().commutator_subspace().dim(), 0);
    assert_eq!("ground_field".parse::<Builtin>().unwrap().build::<Rational>().unwrap().commutator_subspace().dim(), 0);
}

#[test]
fn derivation_examples() {
    for a in all_builtins() {
        for i in 0..a.dim() {
            let x = a.basis_vector(i);
            assert!(a.check_superderivation(&a.ad_matrix(&x), a.parity()[i]).holds());
        }
    }
    let d = dual_numbers::<Rational>().unwrap();
    assert!(!d.check_superderivation(&Matrix::identity(2), 0).holds());
    let g = grassmann::<Rational>(2).unwrap();
    let mut dth = Matrix::zeros(4, 4);
    dth[(0, 1)] = q(1);
    dth[(2, 3)] = q(1);
    assert!(g.check_superderivation(&dth, 1).holds());
}

#[test]
fn product_identities() {
    for a in all_builtins() {
        let n = a.dim();
        let half = Rational::from_ratio(1, 2);
        for i in 0..n {
            let two_a: Vec<Rational> = a.basis_vector(i).iter().map(|x| x * q(2)).collect();
            assert_eq!(a.circle(a.unit(), &a.basis_vector(i)), two_a);
            assert!(is_zero_vec(&a.bracket(a.unit(), &a.basis_vector(i))));
            for j in 0..n {
                let s = Rational::sign_of(a.parity()[i] * a.parity()[j]);
                let c1 = a.circle_basis(i, j);
                let c2: Vec<Rational> = a.circle_basis(j, i).iter().map(|x| x * &s).collect();
                assert_eq!(c1, c2);
                let b1 = a.bracket_basis(i, j);
                let b2: Vec<Rational> = a.bracket_basis(j, i).iter().map(|x| -(x * &s)).collect();
                assert_eq!(b1, b2);
                let rebuilt: Vec<Rational> = c1.iter().zip(&b1).map(|(x, y)| (x + y) * &half).collect();
                assert_eq!(rebuilt, a.product_basis_dense(i, j));
            }
        }
        let lie = LieSuperalgebra::from_fn(a.parity().to_vec(), |i, j| a.bracket_basis(i, j)).unwrap();
        assert!(lie.jacobi_holds());
    }
}

#[test]
fn construction_rejects_bad_tables() {
    let bad = AssocSuperalgebra::from_quadruples(vec![0, 1], &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (1, 1, 1, q(1))], vec![q(1), q(0)]);
    assert_eq!(bad.unwrap_err(), Error::ParityViolation { i: 1, j: 1, k: 1 });
    let bad = AssocSuperalgebra::from_quadruples(vec![0], &[(0, 0, 0, q(1))], vec![q(2)]);
    assert!(matches!(bad, Err(Error::UnitAxiom(_))));
}
