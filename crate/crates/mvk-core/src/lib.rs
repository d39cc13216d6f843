//! Finite quandle algebra and invariants of multi-virtual links.
//!
//! Links are stored as typed signed Gauss codes. Virtual crossings carry a
//! type label; an operator quandle binds each label to an automorphism and
//! colors the diagram. The crate also provides the operator 2-cocycle
//! invariant, the chromatic bracket and a rewrite engine for the generating
//! moves.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod algebra;
pub mod bracket;
pub mod constructions;
pub mod diagram;
pub mod invariants;
pub mod poly;
pub mod rcliques;

pub use algebra::{MultiplicationTable, PermGroup, Permutation};
pub use diagram::Diagram;
pub use invariants::OperatorQuandle;
pub use poly::LaurentPolynomial;
