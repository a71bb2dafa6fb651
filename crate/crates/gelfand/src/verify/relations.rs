use std::fmt;

use thiserror::Error;

use crate::scalars::QPoly;

use super::matrix::ColMatrix;

/// One term of a relation side: a polynomial coefficient times a word in
/// the generators (the empty word is the identity matrix).
#[derive(Clone, Debug)]
pub struct GenWord {
    pub coeff: QPoly,
    pub word: Vec<usize>,
}

impl GenWord {
    pub fn new(coeff: QPoly, word: Vec<usize>) -> Self {
        GenWord { coeff, word }
    }

    /// A bare word with coefficient 1.
    pub fn word(word: Vec<usize>) -> Self {
        GenWord {
            coeff: QPoly::one(),
            word,
        }
    }

    /// A scalar multiple of the identity.
    pub fn scalar(coeff: QPoly) -> Self {
        GenWord {
            coeff,
            word: Vec::new(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("word references generator {index} but only {count} generators were supplied")]
    MalformedWord { index: usize, count: usize },
    #[error("generator matrices have mismatched dimensions")]
    DimensionMismatch,
}

/// First differing entry of a failed relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWitness {
    pub relation: String,
    pub row: usize,
    pub col: usize,
    pub lhs: QPoly,
    pub rhs: QPoly,
}

impl fmt::Display for RelationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "relation {} fails at entry ({}, {}): {} != {}",
            self.relation, self.row, self.col, self.lhs, self.rhs
        )
    }
}

/// Evaluates a sum of scalar-weighted generator words.
pub fn eval_words(
    mats: &[ColMatrix<QPoly>],
    terms: &[GenWord],
) -> Result<ColMatrix<QPoly>, RelationError> {
    let dim = mats
        .first()
        .map(ColMatrix::dim)
        .ok_or(RelationError::DimensionMismatch)?;
    if mats.iter().any(|m| m.dim() != dim) {
        return Err(RelationError::DimensionMismatch);
    }
    let mut acc = ColMatrix::zero(dim);
    for term in terms {
        let mut prod = ColMatrix::identity(dim);
        for &g in &term.word {
            let mat = mats.get(g).ok_or(RelationError::MalformedWord {
                index: g,
                count: mats.len(),
            })?;
            prod = prod.mul(mat);
        }
        acc = acc.add(&prod.scale(&term.coeff));
    }
    Ok(acc)
}

/// Checks an exact matrix identity between two word expressions.
/// `Ok(None)` means the relation holds; `Ok(Some(witness))` carries the
/// first differing entry in column-major order.
pub fn check_relation(
    name: &str,
    mats: &[ColMatrix<QPoly>],
    lhs: &[GenWord],
    rhs: &[GenWord],
) -> Result<Option<RelationWitness>, RelationError> {
    let left = eval_words(mats, lhs)?;
    let right = eval_words(mats, rhs)?;
    if left == right {
        return Ok(None);
    }
    let dim = left.dim();
    for c in 0..dim {
        for r in 0..dim {
            let lv = left.entry(r, c);
            let rv = right.entry(r, c);
            if lv != rv {
                return Ok(Some(RelationWitness {
                    relation: name.to_string(),
                    row: r,
                    col: c,
                    lhs: lv,
                    rhs: rv,
                }));
            }
        }
    }
    unreachable!("matrices differ but no entry differs");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QPoly;

    fn diag(entries: &[QPoly]) -> ColMatrix<QPoly> {
        let dim = entries.len();
        ColMatrix::from_columns(
            dim,
            entries
                .iter()
                .enumerate()
                .map(|(i, v)| vec![(i, v.clone())])
                .collect(),
        )
    }

    #[test]
    fn quadratic_relation_on_a_diagonal_generator() {
        // (T - q)(T + 1) = 0 i.e. T^2 = (q-1)T + q for T = diag(q, -1)
        let t = diag(&[QPoly::q(), QPoly::constant(-1)]);
        let lhs = [GenWord::word(vec![0, 0])];
        let rhs = [
            GenWord::new(&QPoly::q() - &QPoly::one(), vec![0]),
            GenWord::scalar(QPoly::q()),
        ];
        assert_eq!(check_relation("quadratic", &[t], &lhs, &rhs).unwrap(), None);
    }

    #[test]
    fn corrupted_matrix_yields_witness() {
        let t = diag(&[QPoly::q(), QPoly::constant(-1)]);
        let mut bad = t.clone();
        bad.set_entry(0, 0, QPoly::constant(5));
        let lhs = [GenWord::word(vec![0, 0])];
        let rhs = [
            GenWord::new(&QPoly::q() - &QPoly::one(), vec![0]),
            GenWord::scalar(QPoly::q()),
        ];
        let witness = check_relation("quadratic", &[bad], &lhs, &rhs)
            .unwrap()
            .expect("corruption must be detected");
        assert_eq!((witness.row, witness.col), (0, 0));
        assert_ne!(witness.lhs, witness.rhs);
    }

    #[test]
    fn malformed_word_is_rejected() {
        let t = diag(&[QPoly::q()]);
        let err = check_relation("oops", &[t], &[GenWord::word(vec![3])], &[]).unwrap_err();
        assert_eq!(
            err,
            RelationError::MalformedWord {
                index: 3,
                count: 1
            }
        );
    }
}
