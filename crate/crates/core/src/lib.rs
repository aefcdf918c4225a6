//! Exact workbench for finite-dimensional Hom-algebras over the rationals.
//!
//! A Hom-algebra is a vector space carrying a bilinear product together with
//! a linear twist `alpha` that is multiplicative over the product. This
//! crate represents such algebras by dense structure-constant tensors over
//! arbitrary-precision rationals and decides their defining identities
//! exactly:
//!
//! - multilinear identities (Hom-associativity, the left and right
//!   Hom-Leibniz laws, Hom-Jacobi, their consequences) are checked on basis
//!   tuples, which suffices by multilinearity;
//! - universally quantified polynomial statements (vanishing of Hom-power
//!   towers, power-associativity criteria) are decided by expanding them on
//!   a generic element with polynomial coordinates;
//! - every failed check comes with a deterministic counterexample witness
//!   and the residual value there.
//!
//! Instances come from a verified built-in [`constructions::catalog`], from
//! twisting untwisted algebras along multiplicative endomorphisms
//! ([`constructions::yau_twist`]), or from the seeded random generator
//! [`constructions::random_hom_leibniz`].

pub mod akivis;
pub mod algebra;
pub mod constructions;
pub mod error;
pub mod format;
pub mod identities;
pub mod linalg;
pub mod poly;
pub mod powers;
pub mod report;
pub mod scalar;
pub mod suite;

pub use akivis::{
    check_hom_akivis_identity, commutator_bracket, derived_bracket_algebra, to_hom_akivis,
    HomAkivisAlgebra,
};
pub use algebra::{zero_structure, HomAlgebra};
pub use error::{Error, Result};
pub use linalg::{Element, Matrix};
pub use poly::{Poly, PolyElement};
pub use report::{CheckReport, Witness};
pub use scalar::Scalar;
