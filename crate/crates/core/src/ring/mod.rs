//! Exact multivariate polynomial arithmetic over the rationals, term orders
//! (global, local and block/elimination), and the text front-end.

mod monomial;
mod order;
mod parse;
mod poly;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, print_polynomial};
pub use poly::{coeff_int, coeff_ratio, Coeff, Polynomial};
