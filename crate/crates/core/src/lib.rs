//! Counting real and complex solutions of zero-dimensional polynomial systems
//! over the rationals from signatures of trace forms.
//!
//! The pipeline: parse a system ([`poly`]), compute a Gröbner basis and the
//! quotient algebra ([`groebner`]), build (generalized) trace forms
//! ([`traceform`]), take their signatures ([`quadform`]) and read off counts
//! ([`count`]). [`oracle`] recomputes the same numbers with Sturm sequences.

pub mod arith;
pub mod cli;
pub mod count;
pub mod error;
pub mod groebner;
pub mod oracle;
pub mod poly;
pub mod quadform;
pub mod traceform;

pub use arith::Rational;
pub use count::{count_real_points, hermite_count, shape_basis, sign_condition_counts};
pub use error::{Error, ParseError, Result};
pub use groebner::{buchberger, GroebnerBasis, QuotientAlgebra};
pub use oracle::oracle_count_system;
pub use poly::{MonomialOrder, Polynomial, UniPoly, VarContext};
pub use quadform::{FormType, SymMatrix};
