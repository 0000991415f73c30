//! Exact computation of the wiggle map for two-generator words in `SL(2)`:
//! associated polynomials, trace polynomials, double-commutator
//! factorizations, certificates of non-triviality and explicit witnesses.

pub mod aberth;
pub mod certify;
pub mod error;
pub mod json;
pub mod laurent;
pub mod mat2;
pub mod poly;
pub mod qpoly;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod wiggle;
pub mod witness;
pub mod words;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use mat2::Mat2;
pub use poly::Poly;
pub use ring::{ExactDiv, Field, Ring};

/// Arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;
/// `ℚ[λ^±1, μ^±1]`.
pub type Laurent = LaurentPoly<Rat>;
/// `ℚ[λ^±1, μ^±1][t]`.
pub type TPoly = Poly<Laurent>;
/// `ℚ[t]`.
pub type QPoly = Poly<Rat>;
/// Gaussian rationals, used for approximate witnesses.
pub type CRat = num_complex::Complex<Rat>;
