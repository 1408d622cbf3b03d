#![allow(clippy::needless_range_loop)]

//! Structure-constant computer algebra for finite-dimensional weak
//! bialgebras and weak Hopf algebras over exact fields.
//!
//! The crate represents algebras, coalgebras, weak bialgebras (WBAs) and
//! weak Hopf algebras (WHAs) by their structure-constant tensors over the
//! rationals or a prime field, and constructively verifies the theory of
//! weak Doi-Hopf data on desk-scale instances:
//!
//! * weak comodule algebras and module coalgebras with the `(a1)`-`(a3)`,
//!   `(c1)`-`(c3)` axiom groups and their mirrored right/left variants
//!   ([`comodact`]);
//! * weak Doi-Hopf data, their duality (an involution exchanging left and
//!   right data), weak Doi-Hopf modules and the module-level duality
//!   functor ([`doihopf`]);
//! * the weak smash product `A # Ĉ`, its unit, the classical comparison
//!   isomorphisms, and the inverse functors realizing the isomorphism of
//!   the Doi-Hopf module category with the smash module category
//!   ([`smash`]);
//! * induction and coinduction adjoints of the two forgetful functors,
//!   with exact unit/counit, naturality and triangle identities
//!   ([`adjoint`]);
//! * the Drinfel'd double as an amalgamated tensor-product quotient,
//!   Yetter-Drinfel'd modules and their monoidal structure ([`double`]);
//! * integral spaces, the concrete space of Doi-Hopf integral transforms
//!   with its normalization condition, and the example realizations as
//!   centers and commutants ([`integrals`]).
//!
//! All arithmetic is exact ([`kernel`]); every verifier returns a
//! [`report::Report`] with per-axiom witnesses. Built-in instances
//! (groupoid algebras and the four standard Doi-Hopf data) live in
//! [`gallery`].

pub mod adjoint;
pub mod comodact;
pub mod doihopf;
pub mod double;
pub mod gallery;
pub mod hopfcore;
pub mod integrals;
pub mod kernel;
pub mod report;
pub mod smash;

pub use kernel::{FieldSpec, LinMap, Scalar, Subspace, Tensor};
pub use report::Report;
