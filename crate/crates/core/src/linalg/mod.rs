//! Exact scalars and the dense/sparse elimination kernels everything else
//! is built on.

mod field;
mod matrix;
mod sparse;

pub use field::Field;
pub use matrix::{axpy, dot, is_zero_vec, Matrix, MatrixDoc};
pub use sparse::{SparseEchelon, SparseRow};

/// Coordinates of `v` in the row space of a reduced row-echelon basis.
///
/// For an RREF basis the coordinates are simply the entries of `v` at the
/// pivot columns; the result is checked by re-expansion.
pub fn rref_coordinates<F: Field>(basis: &Matrix<F>, pivots: &[usize], v: &[F]) -> Option<Vec<F>> {
    let coords: Vec<F> = pivots.iter().map(|&p| v[p].clone()).collect();
    let mut rebuilt = vec![F::zero(); v.len()];
    for (k, c) in coords.iter().enumerate() {
        axpy(&mut rebuilt, c, basis.row(k));
    }
    if rebuilt.as_slice() == v {
        Some(coords)
    } else {
        None
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn small_matrix() -> impl Strategy<Value = Matrix<Rational>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::from_vec(r, c, v.into_iter().map(Rational::from_i64).collect()).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), m.cols());
            for k in m.kernel_basis() {
                prop_assert!(is_zero_vec(&m.mul_vec(&k).unwrap()));
            }
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let (r, p) = m.rref();
            let (rr, pp) = r.rref();
            prop_assert_eq!(r, rr);
            prop_assert_eq!(p, pp);
        }

        #[test]
        fn solve_resubstitutes(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 6)) {
            let x0: Vec<Rational> = seed.iter().take(m.cols()).map(|&v| Rational::from_i64(v)).collect();
            let b = m.mul_vec(&x0).unwrap();
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        }
    }
}
