//! Sparse multivariate polynomials over exact coefficients, ranked
//! lexicographic orders, multivariate division and S-polynomials.

mod coeff;
mod division;
mod monomial;
mod order;
mod polynomial;

pub use coeff::{is_prime_u64, rational, Coeff, Fp, Rational};
pub use division::{reduce, s_polynomial, DivisorSet, Reduction};

pub use monomial::{Monomial, VarId};
pub use order::{MonoKey, OrderSpec};
pub use polynomial::{parse_polynomial, render_monomial, Polynomial, Term, VarNames};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("variable {0} is not ranked by the order")]
    UnrankedVariable(VarId),
    #[error("ranking is not a permutation of 0..n")]
    BadRanking,
    #[error("{0}")]
    Parse(String),
}
