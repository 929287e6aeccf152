//! Exact computer-algebra kernel for delta-ring calculus on polynomial rings:
//! coefficient domains and sparse polynomials, Groebner engines over fields
//! and over the integers, delta-stabilization of ideals, characteristic-p
//! verification primitives, prism hypothesis checkers, and symbolic
//! perfectoid-tower emitters.

pub mod coeff;
pub mod charp;
pub mod context;
pub mod delta;
pub mod error;
pub mod groebner;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod prism;
pub mod tower;

pub use coeff::{Coeff, CoefficientDomain};
pub use context::RingContext;
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::Polynomial;
