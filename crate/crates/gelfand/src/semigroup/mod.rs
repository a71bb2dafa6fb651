//! Generic finite-semigroup machinery — Green's relations, idempotents,
//! maximal subgroups, traces and Brandt coordinates — together with the
//! involution Gelfand model for semigroups whose regular D-class traces
//! are inverse semigroups with maximal subgroups isomorphic to direct
//! sums of symmetric groups. Adapters instantiate the construction for
//! the rook monoid `IS_n` and the uniform block bijection monoid `F*_n`;
//! arbitrary semigroups enter through a multiplication-table format.

mod engine;
mod fstar;
mod green;
mod isn;
mod model;
mod table;
mod trace;

pub use engine::{AdapterData, DClassSpec, FiniteSemigroup};
pub use fstar::fstar_adapter;
pub use green::{green_relations, GreenData};
pub use isn::isn_adapter;
pub use model::{ModelCheckFailure, SemigroupModel};
pub use table::{semigroup_from_table_json, TableError};
pub use trace::{brandt_coords, trace_certificate, BrandtCoord, DClassData, TraceCertificate};

use thiserror::Error;

/// Why the Gelfand-model hypotheses fail for a semigroup, with the
/// offending D-class (by representative element index).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypothesisFailure {
    #[error("trace of the D-class of element {dclass_rep} is not an inverse semigroup: element {witness} has {inverse_count} inverses")]
    TraceNotInverse {
        dclass_rep: usize,
        witness: usize,
        inverse_count: usize,
    },
    #[error("D-class of element {dclass_rep}: an L-class contains {count} idempotents instead of exactly one")]
    IdempotentsPerLClass { dclass_rep: usize, count: usize },
    #[error("no maximal-subgroup isomorphism supplied for the D-class of element {dclass_rep} and its group is not trivial")]
    MissingIsoData { dclass_rep: usize },
    #[error("element {element} declared as chosen idempotent is not an idempotent")]
    NotAnIdempotent { element: usize },
    #[error("D-class of element {dclass_rep}: supplied map is not an isomorphism onto the symmetric-group sum: {reason}")]
    BadIso { dclass_rep: usize, reason: String },
    #[error("semigroup multiplication table is not associative: ({a} {b}) {c} != {a} ({b} {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}
