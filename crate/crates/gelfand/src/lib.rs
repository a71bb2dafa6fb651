//! Exact-arithmetic construction and machine verification of combinatorial
//! Gelfand models.
//!
//! A Gelfand model of a finite-dimensional algebra is a module isomorphic
//! to the multiplicity-free direct sum of all of its simple modules. This
//! crate builds four such models as explicit matrices over exact scalars
//! and verifies their structure:
//!
//! * the signed involution model of the symmetric group algebra, with its
//!   grading by 2-cycle count ([`sn_model`]);
//! * models of semigroup algebras for finite semigroups whose regular
//!   D-class traces are inverse with symmetric-group-sum maximal
//!   subgroups, instantiated for the rook monoid `IS_n` and the uniform
//!   block bijection monoid `F*_n` ([`semigroup`]);
//! * the involution model of the Iwahori-Hecke algebra `H_n(q)` over
//!   `Z[q]` ([`hecke`]);
//! * the involution model of the q-rook monoid algebra `I_n(q)`
//!   ([`qrook`]).
//!
//! All arithmetic is exact: big rationals and integer polynomials in `q`
//! ([`scalars`]). Verification (defining relations, gradings, sign
//! cocycles, commutant dimensions, character inner products) lives in
//! [`verify`]; the `gelfand` binary exposes everything on the command
//! line ([`cli`]).

pub mod cli;
pub mod combinatorics;
pub mod hecke;
pub mod qrook;
pub mod scalars;
pub mod semigroup;
pub mod sn_model;
pub mod verify;
