use std::collections::HashMap;

use serde::Deserialize;
use thiserror::Error;

use crate::combinatorics::Permutation;

use super::engine::{AdapterData, DClassSpec, FiniteSemigroup};
use super::HypothesisFailure;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot parse table file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("table has {got} entries, expected size*size = {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("table entry {value} is not an element index below {size}")]
    BadEntry { value: usize, size: usize },
    #[error("names list has {got} entries, expected {expected}")]
    WrongNames { got: usize, expected: usize },
    #[error("iso image {0:?} is not a permutation")]
    BadIsoImage(Vec<usize>),
    #[error("iso key {0:?} is not an element index")]
    BadIsoKey(String),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisFailure),
}

/// User-supplied semigroup: `{size, table}` row-major over element
/// indices, with optional element names and optional per-D-class model
/// data (chosen idempotent, symmetric-group block sizes, and the group
/// isomorphism as one-line permutations keyed by element index).
#[derive(Deserialize)]
struct TableFile {
    size: usize,
    table: Vec<usize>,
    #[serde(default)]
    names: Option<Vec<String>>,
    #[serde(default)]
    dclasses: Vec<TableDClass>,
}

#[derive(Deserialize)]
struct TableDClass {
    idempotent: usize,
    young_blocks: Vec<usize>,
    #[serde(default)]
    iso: HashMap<String, Vec<usize>>,
}

/// Parses the JSON table format and validates shape and associativity.
pub fn semigroup_from_table_json(
    json: &str,
) -> Result<(FiniteSemigroup, AdapterData), TableError> {
    let file: TableFile = serde_json::from_str(json)?;
    let expected = file.size * file.size;
    if file.table.len() != expected {
        return Err(TableError::WrongLength {
            got: file.table.len(),
            expected,
        });
    }
    if let Some(&value) = file.table.iter().find(|&&v| v >= file.size) {
        return Err(TableError::BadEntry {
            value,
            size: file.size,
        });
    }
    if let Some(names) = &file.names {
        if names.len() != file.size {
            return Err(TableError::WrongNames {
                got: names.len(),
                expected: file.size,
            });
        }
    }
    let s = FiniteSemigroup::from_table(file.size, file.table, file.names);
    s.verify_associativity()?;

    let mut dclasses = Vec::new();
    for spec in file.dclasses {
        let mut iso = HashMap::new();
        for (key, images) in spec.iso {
            let element: usize = key.parse().map_err(|_| TableError::BadIsoKey(key))?;
            let perm = Permutation::from_images(images.clone())
                .map_err(|_| TableError::BadIsoImage(images))?;
            iso.insert(element, perm);
        }
        dclasses.push(DClassSpec {
            idempotent: spec.idempotent,
            young_blocks: spec.young_blocks,
            iso,
        });
    }

    Ok((
        s,
        AdapterData {
            dclasses,
            generators: Vec::new(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::green::green_relations;
    use crate::semigroup::model::SemigroupModel;
    use crate::semigroup::trace::trace_certificate;

    #[test]
    fn left_zero_table_fails_with_trace_diagnosis() {
        let json = r#"{"size": 2, "table": [0, 0, 1, 1]}"#;
        let (s, adapter) = semigroup_from_table_json(json).unwrap();
        let green = green_relations(&s);
        let err = trace_certificate(&s, &green, &adapter).unwrap_err();
        assert!(matches!(err, HypothesisFailure::TraceNotInverse { .. }));
    }

    #[test]
    fn cyclic_group_of_order_two_via_table() {
        let json = r#"{"size": 2, "table": [0, 1, 1, 0], "names": ["e", "g"],
                      "dclasses": [{"idempotent": 0, "young_blocks": [2],
                                    "iso": {"0": [1, 2], "1": [2, 1]}}]}"#;
        let (s, adapter) = semigroup_from_table_json(json).unwrap();
        let model = SemigroupModel::build(s, &adapter).unwrap();
        assert_eq!(model.dimension(), 2);
        assert_eq!(model.check_module_axiom(model.exhaustive_pairs()), None);
        assert!(model.certificate("table", true).is_gelfand());
    }

    #[test]
    fn trivial_groups_need_no_iso_data() {
        // a semilattice: {0, 1} with multiplication min
        let json = r#"{"size": 2, "table": [0, 0, 0, 1]}"#;
        let (s, adapter) = semigroup_from_table_json(json).unwrap();
        let model = SemigroupModel::build(s, &adapter).unwrap();
        assert_eq!(model.dimension(), 2);
        assert_eq!(model.check_module_axiom(model.exhaustive_pairs()), None);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(matches!(
            semigroup_from_table_json(r#"{"size": 2, "table": [0, 0, 1]}"#),
            Err(TableError::WrongLength { .. })
        ));
        assert!(matches!(
            semigroup_from_table_json(r#"{"size": 2, "table": [0, 0, 5, 1]}"#),
            Err(TableError::BadEntry { .. })
        ));
        // non-associative magma
        assert!(matches!(
            semigroup_from_table_json(r#"{"size": 2, "table": [0, 0, 1, 0]}"#),
            Err(TableError::Hypothesis(HypothesisFailure::NotAssociative { .. }))
        ));
    }
}
