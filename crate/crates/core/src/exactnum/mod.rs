//! Exact scalars, homogeneous polynomials in two variables, 2×2 matrices and
//! dense linear algebra.

pub mod linalg;
pub mod mat2;
pub mod poly;
pub mod scalar;

pub use linalg::DenseMat;
pub use mat2::Mat2;
pub use poly::HomPoly;
pub use scalar::{GaussExt, NoRadical, Radical, Scalar, Sqrt2, Sqrt5};
