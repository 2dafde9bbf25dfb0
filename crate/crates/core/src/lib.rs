//! Covariants of the four-qubit system.
//!
//! The crate builds the 170 fundamental covariants of the binary
//! quadrilinear form `f = sum a[ijkl] x_i y_j z_k t_l` by iterated multiple
//! transvectants, computes the covariant Hilbert series, evaluates
//! covariants on the SLOCC normal forms and checks syzygies and minimality.
//!
//! Module map:
//! - [`algebra`]: exact integers, rationals and Q(i, sqrt 2)
//! - [`poly`]: sparse polynomials over the fixed 28-symbol universe
//! - [`transvect`]: Cayley Omega process and multiple transvectants
//! - [`catalog`]: the generator table, its build and its on-disk cache
//! - [`hilbert`]: characters, multiplicities and series
//! - [`normalforms`]: the nine normal forms and covariant evaluation
//! - [`relations`]: associated forms, sources, syzygies, separation
//! - [`minimality`]: rank certification of the generator counts

pub mod algebra;
pub mod check;
pub mod poly;
pub mod transvect;
pub mod catalog;
pub mod hilbert;
pub mod normalforms;
pub mod relations;
pub mod minimality;
