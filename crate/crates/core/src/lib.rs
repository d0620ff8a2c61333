//! Exact comultiplication on Borel-Weil realizations of SU(2) representations,
//! and the graded rings of modular forms it induces.
//!
//! * [`exactnum`]: exact scalars, homogeneous polynomials in `(a, c)`, dense
//!   elimination.
//! * [`borelweil`]: section spaces `H_n`, Haar inner products, highest-weight
//!   vectors, the multiplication map and its adjoint comultiplication.
//! * [`invariantforms`]: invariants of finite subgroups of SU(2) and the two
//!   routes to their product.
//! * [`qforms`]: level-one holomorphic modular forms as exact q-expansions.
//!
//! All routines are generic over [`Scalar`]; the aliases below fix the fields
//! actually used.

pub mod borelweil;
pub mod error;
pub mod exactnum;
pub mod invariantforms;
pub mod qforms;

pub use error::{Error, ParseScalarError, Result};
pub use exactnum::{DenseMat, GaussExt, HomPoly, Mat2, NoRadical, Radical, Scalar, Sqrt2, Sqrt5};

/// ℚ.
pub type Rational = num_rational::BigRational;
/// ℚ(i): cyclic groups of order ≤ 6, Q8, the binary tetrahedral group.
pub type GaussRational = GaussExt<NoRadical>;
/// ℚ(i, √2): the binary octahedral group.
pub type GaussSqrt2 = GaussExt<Sqrt2>;
/// ℚ(i, √5): the binary icosahedral group.
pub type GaussSqrt5 = GaussExt<Sqrt5>;

pub type Poly = HomPoly<GaussRational>;
pub type SU2Element = Mat2<GaussRational>;
pub type QMatrix = DenseMat<Rational>;
