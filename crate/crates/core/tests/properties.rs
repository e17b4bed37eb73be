use proptest::prelude::*;
use supergrade::coordalg::Builtin;
use supergrade::linalg::{is_zero_vec, Matrix};
use supergrade::{Field, Rational};

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..4, r * c)))
}

fn to_matrix(r: usize, c: usize, v: &[i64]) -> Matrix<Rational> {
    Matrix::from_fn(r, c, |i, j| Rational::from_i64(v[i * c + j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_is_annihilated((r, c, v) in small_matrix()) {
        let m = to_matrix(r, c, &v);
        let ker = m.kernel_basis();
        prop_assert_eq!(ker.len() + m.rank(), c);
        for k in &ker {
            prop_assert!(is_zero_vec(&m.mul_vec(k).unwrap()));
        }
    }

    #[test]
    fn rref_is_idempotent((r, c, v) in small_matrix()) {
        let (e, piv) = to_matrix(r, c, &v).rref();
        let (e2, piv2) = e.rref();
        prop_assert_eq!(e, e2);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn solve_recovers_consistent_systems((r, c, v) in small_matrix(), x in prop::collection::vec(-3i64..4, 4)) {
        let m = to_matrix(r, c, &v);
        let x: Vec<Rational> = x[..c].iter().map(|&t| Rational::from_i64(t)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("consistent");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn grassmann_bracket_vanishes(a in prop::collection::vec(-3i64..4, 8), b in prop::collection::vec(-3i64..4, 8)) {
        let g = "grassmann:3".parse::<Builtin>().unwrap().build::<Rational>().unwrap();
        let x: Vec<Rational> = a.iter().map(|&t| Rational::from_i64(t)).collect();
        let y: Vec<Rational> = b.iter().map(|&t| Rational::from_i64(t)).collect();
        let even = |v: &[Rational]| -> Vec<Rational> {
            v.iter().enumerate().map(|(i, t)| if g.parity()[i] == 0 { t.clone() } else { Rational::from_i64(0) }).collect()
        };
        prop_assert!(is_zero_vec(&g.bracket(&even(&x), &y)));
    }
}
