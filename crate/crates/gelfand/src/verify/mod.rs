//! Exact linear algebra and certification: rational Gaussian elimination,
//! null spaces, commutant dimensions, character inner products, and the
//! relation-checking harness shared by the model modules.

mod characters;
mod commutant;
mod matrix;
mod relations;
mod rref;

pub use characters::{character_inner_products, irreducible_class_function, ClassFunction};
pub use commutant::commutant_dim;
pub use matrix::{ColMatrix, ExactMatrix, Ring};
pub use relations::{check_relation, eval_words, GenWord, RelationError, RelationWitness};
pub use rref::{rank, rank_by_minors, rref, RowReducer};

use serde::Serialize;

/// Machine-checkable summary of a multiplicity-freeness certification.
///
/// The verdict is `"gelfand"` exactly when the commutant dimension matches
/// the expected number of simple modules and, when an expected dimension
/// is known, the model dimension matches it too.
#[derive(Clone, Debug, Serialize)]
pub struct GelfandCertificate {
    pub model: String,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutant_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_simple_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_dimension: Option<usize>,
    pub verdict: String,
    /// Omitted from serialized reports when unset so that identical runs
    /// produce byte-identical files.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl GelfandCertificate {
    pub fn evaluate(
        model: impl Into<String>,
        dimension: usize,
        commutant_dimension: Option<usize>,
        expected_simple_count: Option<usize>,
        expected_dimension: Option<usize>,
    ) -> Self {
        let mut failures = Vec::new();
        if let (Some(got), Some(want)) = (commutant_dimension, expected_simple_count) {
            if got != want {
                failures.push(format!("commutant dimension {got} != expected {want}"));
            }
        }
        if let Some(want) = expected_dimension {
            if dimension != want {
                failures.push(format!("dimension {dimension} != expected {want}"));
            }
        }
        let verdict = if failures.is_empty() {
            "gelfand".to_string()
        } else {
            format!("failed: {}", failures.join("; "))
        };
        GelfandCertificate {
            model: model.into(),
            dimension,
            commutant_dimension,
            expected_simple_count,
            expected_dimension,
            verdict,
            timing_ms: None,
        }
    }

    pub fn is_gelfand(&self) -> bool {
        self.verdict == "gelfand"
    }
}
