//! The Iwahori-Hecke algebra `H_n(q)` given by generators `T_1..T_{n-1}`
//! with the quadratic, far-commuting and braid relations, acting on the
//! involution span of `S_n` through a four-case formula keyed on whether
//! `i` and `i+1` are moved by the involution. The action matrices live
//! over `Z[q]` and satisfy the defining relations exactly.

use std::collections::HashMap;

use thiserror::Error;

use crate::combinatorics::{
    enumerate_involutions_sn, two_cycle_count, CombinatoricsError, Permutation,
};
use crate::scalars::{QPoly, Rational};
use crate::sn_model::SnModel;
use crate::verify::{check_relation, ColMatrix, GenWord, RelationError, RelationWitness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// `T_i . I_w` for an involution `w` of `S_n`, as a list of
/// `(coefficient, involution)` terms:
///
/// * neither `i` nor `i+1` moved: `q I_w`;
/// * both moved: `-I_w`;
/// * only `i` moved: `I_{s_i w s_i}`;
/// * only `i+1` moved: `q I_{s_i w s_i} + (q-1) I_w`.
pub fn hecke_act(i: usize, w: &Permutation) -> Result<Vec<(QPoly, Permutation)>, ModelError> {
    let n = w.degree();
    if i == 0 || i + 1 > n {
        return Err(ModelError::IndexOutOfRange { index: i, n });
    }
    if !w.is_involution() {
        return Err(CombinatoricsError::NotAnInvolution.into());
    }
    let moved_i = w.apply(i) != i;
    let moved_i1 = w.apply(i + 1) != i + 1;
    let conj = || {
        let s = Permutation::adjacent(n, i);
        s.conjugate(w)
    };
    let q = QPoly::q();
    Ok(match (moved_i, moved_i1) {
        (false, false) => vec![(q, w.clone())],
        (true, true) => vec![(QPoly::constant(-1), w.clone())],
        (true, false) => vec![(QPoly::one(), conj())],
        (false, true) => vec![(q.clone(), conj()), (&q - &QPoly::one(), w.clone())],
    })
}

/// The involution model of `H_n(q)` with its generator matrices over
/// `Z[q]`.
pub struct HeckeModel {
    n: usize,
    basis: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    sectors: Vec<usize>,
    generators: Vec<ColMatrix<QPoly>>,
}

impl HeckeModel {
    pub fn new(n: usize) -> Self {
        let basis = enumerate_involutions_sn(n);
        let index: HashMap<Permutation, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let sectors = basis.iter().map(two_cycle_count).collect();
        let dim = basis.len();
        let generators = (1..n)
            .map(|i| {
                let cols = basis
                    .iter()
                    .map(|w| {
                        hecke_act(i, w)
                            .expect("basis involutions and valid index")
                            .into_iter()
                            .map(|(coeff, image)| (index[&image], coeff))
                            .collect()
                    })
                    .collect();
                ColMatrix::from_columns(dim, cols)
            })
            .collect();
        HeckeModel {
            n,
            basis,
            index,
            sectors,
            generators,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn basis_index(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn sectors(&self) -> &[usize] {
        &self.sectors
    }

    /// Matrix of `T_i`, `1 <= i < n`.
    pub fn generator(&self, i: usize) -> Result<&ColMatrix<QPoly>, ModelError> {
        self.generators
            .get(i.wrapping_sub(1))
            .ok_or(ModelError::IndexOutOfRange { index: i, n: self.n })
    }

    pub fn generators(&self) -> &[ColMatrix<QPoly>] {
        &self.generators
    }

    pub fn generator_matrices(&self) -> Vec<(String, ColMatrix<QPoly>)> {
        self.generators
            .iter()
            .enumerate()
            .map(|(k, m)| (format!("T{}", k + 1), m.clone()))
            .collect()
    }

    /// All defining relation instances for this `n`, as named word pairs
    /// over the generator indices `0..n-1`.
    pub fn relation_instances(&self) -> Vec<(String, Vec<GenWord>, Vec<GenWord>)> {
        relation_instances(self.n)
    }

    /// Checks every defining relation as an exact matrix identity over
    /// `Z[q]`; returns the first failing witness if any.
    pub fn check_relations(&self) -> Result<Option<RelationWitness>, RelationError> {
        if self.generators.is_empty() {
            return Ok(None);
        }
        for (name, lhs, rhs) in self.relation_instances() {
            if let Some(witness) = check_relation(&name, &self.generators, &lhs, &rhs)? {
                return Ok(Some(witness));
            }
        }
        Ok(None)
    }

    /// Structural invariant of each `T_i`: block-diagonal over the orbits
    /// `{w, s_i w s_i}` with blocks of exactly three types, `(q)`, `(-1)`,
    /// and `[[0, q], [1, q-1]]` on pairs ordered moved-`i` first.
    pub fn block_structure_ok(&self) -> bool {
        let q = QPoly::q();
        let qm1 = &q - &QPoly::one();
        for (k, t) in self.generators.iter().enumerate() {
            let i = k + 1;
            let s = Permutation::adjacent(self.n, i);
            for (c, w) in self.basis.iter().enumerate() {
                let image = s.conjugate(w);
                let r = self.index[&image];
                let moved_i = w.apply(i) != i;
                let moved_i1 = w.apply(i + 1) != i + 1;
                let col = t.column(c);
                let ok = match (moved_i, moved_i1) {
                    (false, false) => r == c && col == [(c, q.clone())],
                    // scalar -1 column whether or not s_i fixes w; when it
                    // does not, the orbit carries two 1x1 blocks
                    (true, true) => col == [(c, QPoly::constant(-1))],
                    (true, false) => r != c && col == [(r, QPoly::one())],
                    (false, true) => {
                        let mut expected = vec![(r, q.clone()), (c, qm1.clone())];
                        expected.sort_by_key(|&(row, _)| row);
                        r != c && col == expected
                    }
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Generator matrices specialized at a rational point.
    pub fn specialized_generators(&self, q0: &Rational) -> Vec<ColMatrix<Rational>> {
        self.generators
            .iter()
            .map(|m| m.map(|p| p.specialize(q0)))
            .collect()
    }

    /// Signed permutation matrices of the symmetric group model in the
    /// same basis, for specialization comparisons.
    pub fn sn_generator_matrices(&self) -> Vec<ColMatrix<i64>> {
        let sn = SnModel::new(self.n);
        (1..self.n)
            .map(|i| sn.matrix(&Permutation::adjacent(self.n, i)))
            .collect()
    }
}

/// Named instances of the quadratic, far-commuting and braid relations
/// for all valid indices at a given `n`. Generator `k` in a word means
/// `T_{k+1}`.
pub fn relation_instances(n: usize) -> Vec<(String, Vec<GenWord>, Vec<GenWord>)> {
    let q = QPoly::q();
    let qm1 = &q - &QPoly::one();
    let mut out = Vec::new();
    for i in 1..n {
        // (T_i - q)(T_i + 1) = 0, written T_i^2 = (q-1) T_i + q
        out.push((
            format!("quadratic T{i}"),
            vec![GenWord::word(vec![i - 1, i - 1])],
            vec![
                GenWord::new(qm1.clone(), vec![i - 1]),
                GenWord::scalar(q.clone()),
            ],
        ));
    }
    for i in 1..n {
        for j in (i + 2)..n {
            out.push((
                format!("commuting T{i} T{j}"),
                vec![GenWord::word(vec![i - 1, j - 1])],
                vec![GenWord::word(vec![j - 1, i - 1])],
            ));
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push((
            format!("braid T{i} T{}", i + 1),
            vec![GenWord::word(vec![i - 1, i, i - 1])],
            vec![GenWord::word(vec![i, i - 1, i])],
        ));
    }
    out
}
