//! Exact multivariate polynomial arithmetic.

mod field;
mod monomial;
mod parse;
mod polynomial;

pub use field::{Coeff, Field};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder, MAX_VARS};
pub use parse::{parse_poly, parse_poly_list};
pub use polynomial::{Polynomial, Ring, Term};
