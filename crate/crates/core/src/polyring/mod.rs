//! Exact sparse polynomials over the rationals and prime fields.

pub mod field;
pub mod linear;
pub mod monomial;
pub mod order;
mod parse;
pub mod poly;

pub use field::{rat, Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use linear::{parse_linear_form, LinearForm};
pub use monomial::{monomials_of_degree, Binomials, Monomial, MAX_VARS};
pub use order::{mono_compare, ModuleKind, ModuleOrder, MonomialOrder, SchreyerData};
pub use poly::{Poly, Ring};
