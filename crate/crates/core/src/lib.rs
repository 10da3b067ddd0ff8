//! Exact symbolic calculus for the rank-one double affine Hecke algebra.
//!
//! Coefficients live in a field of fractions of Laurent polynomials in
//! `u = t^{1/2}`, `v = q^{1/2}`, `s = q^m` and `z = Y^{-2}`. On top of that
//! sit the polynomial representation, the electronic (`E_n`) and bosonic
//! (`P_n`) Macdonald polynomials, the intertwiner ladder, the universal
//! coefficients `A`, `B`, `C`, `D`, `K`, and product expansions checked
//! against brute-force multiplication.

pub mod coeffs;
pub mod error;
pub mod etacalc;
pub mod laurent;
pub mod macdonald;
pub mod polyrep;
pub mod products;
pub mod qtfield;
pub mod verify;


pub use coeffs::{EvPoint, YFunction};
pub use error::{Error, Result};
pub use etacalc::EtaElement;
pub use products::{Basis, Expansion, Index, Label, MParam, Partition2};
pub use laurent::{LaurentPoly, LaurentPoly2};
pub use polyrep::EVector;
pub use qtfield::{Atom, Monomial, Poly, Scalar, Substitution, Var};
