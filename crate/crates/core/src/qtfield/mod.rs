//! Coefficient field: integer Laurent polynomials in `u, v, s, z` and their
//! fractions.
//!
//! `u = t^{1/2}`, `v = q^{1/2}`, `s = q^m` for a symbolic `m`, `z = Y^{-2}`.

mod cyclo;
mod monomial;
mod parse;
mod poly;
mod scalar;

pub use cyclo::{euler_phi, psi_coeffs, Atom};
pub use monomial::{Monomial, Var};
pub use poly::{Poly, Substitution};
pub use scalar::{scalar_arith, ArithOp, Scalar};
