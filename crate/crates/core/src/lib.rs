//! Exact-arithmetic construction and verification of Lie superalgebras
//! graded by the root systems of type `A(m,n)`.

pub mod assembly;
pub mod check;
pub mod coordalg;
pub mod document;
pub mod error;
pub mod homspaces;
pub mod lie;
pub mod linalg;
pub mod roots;
pub mod suite;
pub mod superclassical;

use num_rational::BigRational;

pub use check::Check;
pub use error::{Error, Result};
pub use linalg::Field;

/// The scalar field used by the concrete aliases below.
pub type Rational = BigRational;
pub type RatMatrix = linalg::Matrix<Rational>;
pub type RatSuperMatrix = superclassical::SuperMatrix<Rational>;
pub type RatClassical = superclassical::ClassicalAlgebra<Rational>;
pub type RatLie = lie::LieSuperalgebra<Rational>;
pub type RatModule = homspaces::GModule<Rational>;
