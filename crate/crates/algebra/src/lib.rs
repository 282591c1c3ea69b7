//! Exact arithmetic kernel: rationals, simple algebraic extensions,
//! univariate and multivariate polynomials, rational functions and
//! reduction modulo triangular relation systems.
//!
//! All structures are generic over [`Field`]; the aliases below fix the
//! common instantiations over `Q`.

pub mod error;
pub mod ext;
pub mod field;
pub mod json;
pub mod multi;
pub mod poly;
pub mod quotient;
pub mod ratfunc;
pub mod roots;

pub use error::{AlgebraError, Result};
pub use ext::{AlgExt, ExtContext};
pub use field::{parse_rational, rat, Field};
pub use multi::{substitute_fracs, MultiFrac, MultiPoly, PolyRing};
pub use poly::{Poly, SquarefreeDecomposition};
pub use quotient::{QuotientContext, Relation};
pub use ratfunc::RationalFunction;

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;
pub type QPoly = Poly<Rational>;
pub type QFunc = RationalFunction<Rational>;
pub type NumberField = AlgExt<Rational>;
pub type QMultiPoly = MultiPoly<Rational>;
