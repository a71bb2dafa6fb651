//! The signed involution model of the symmetric group algebra: the group
//! acts on the span of its involutions by twisted conjugation,
//! `pi . I_w = (-1)^{inv_w(pi)} I_{pi w pi^{-1}}`, and the resulting module
//! is a Gelfand model. The span carries a grading by 2-cycle count that
//! the action preserves.

use std::collections::HashMap;

use crate::combinatorics::{
    class_representative, enumerate_involutions_sn, integer_partitions, inv_w, rs_insert,
    two_cycle_count, CombinatoricsError, IntegerPartition, Permutation,
};
use crate::verify::{ClassFunction, ColMatrix};

/// `pi . I_w`: the sign `(-1)^{inv_w(pi)}` together with the conjugated
/// involution `pi w pi^{-1}`. Rejects non-involutions.
pub fn sn_act(
    pi: &Permutation,
    w: &Permutation,
) -> Result<(i64, Permutation), CombinatoricsError> {
    let inversions = inv_w(w, pi)?;
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Ok((sign, pi.conjugate(w)))
}

/// The model of `S_n` on its involution span, with the canonical graded
/// basis and signed permutation matrices.
pub struct SnModel {
    n: usize,
    basis: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    sectors: Vec<usize>,
}

impl SnModel {
    pub fn new(n: usize) -> Self {
        let basis = enumerate_involutions_sn(n);
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        let sectors = basis.iter().map(two_cycle_count).collect();
        SnModel {
            n,
            basis,
            index,
            sectors,
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

    /// 2-cycle count of each basis involution; constant on the contiguous
    /// grading sectors.
    pub fn sectors(&self) -> &[usize] {
        &self.sectors
    }

    /// Signed permutation matrix of `pi` in the canonical basis: the
    /// column of `w` holds `(-1)^{inv_w(pi)}` at the row of
    /// `pi w pi^{-1}`.
    pub fn matrix(&self, pi: &Permutation) -> ColMatrix<i64> {
        assert_eq!(pi.degree(), self.n);
        let cols = self
            .basis
            .iter()
            .map(|w| {
                let (sign, image) = sn_act(pi, w).expect("basis elements are involutions");
                vec![(self.index[&image], sign)]
            })
            .collect();
        ColMatrix::from_columns(self.dimension(), cols)
    }

    /// Matrices of the adjacent transpositions `s_1, ..., s_{n-1}`.
    pub fn generator_matrices(&self) -> Vec<(String, ColMatrix<i64>)> {
        (1..self.n)
            .map(|i| {
                let s = Permutation::adjacent(self.n, i);
                (format!("s{i}"), self.matrix(&s))
            })
            .collect()
    }

    /// The character of the model as a class function, computed by
    /// explicit traces on one representative per cycle type.
    pub fn character(&self) -> ClassFunction {
        integer_partitions(self.n)
            .into_iter()
            .map(|mu| {
                let value = self.class_trace(&mu, None);
                (mu, value)
            })
            .collect()
    }

    /// The character of the sector `V_n^k` spanned by involutions with
    /// exactly `k` 2-cycles.
    pub fn sector_character(&self, k: usize) -> ClassFunction {
        integer_partitions(self.n)
            .into_iter()
            .map(|mu| {
                let value = self.class_trace(&mu, Some(k));
                (mu, value)
            })
            .collect()
    }

    fn class_trace(&self, mu: &IntegerPartition, sector: Option<usize>) -> i64 {
        let rep = class_representative(mu);
        self.basis
            .iter()
            .zip(&self.sectors)
            .filter(|&(_, &s)| sector.is_none_or(|k| s == k))
            .map(|(w, _)| {
                let (sign, image) = sn_act(&rep, w).expect("basis elements are involutions");
                if &image == w {
                    sign
                } else {
                    0
                }
            })
            .sum()
    }

    /// Dimension of the sector `V_n^k`.
    pub fn sector_dimension(&self, k: usize) -> usize {
        self.sectors.iter().filter(|&&s| s == k).count()
    }

    /// The set of Robinson-Schensted shapes of the involutions in sector
    /// `k`.
    pub fn sector_shapes(&self, k: usize) -> Vec<IntegerPartition> {
        let mut shapes: Vec<IntegerPartition> = self
            .basis
            .iter()
            .zip(&self.sectors)
            .filter(|&(_, &s)| s == k)
            .map(|(w, _)| rs_insert(w).0.shape())
            .collect();
        shapes.sort();
        shapes.dedup();
        shapes
    }
}

/// The model of a Young subgroup `S_{n_1} x ... x S_{n_l}` embedded on
/// consecutive blocks of `{1..n}`: the basis is the set of involutions
/// preserving every block, and the action is the restriction of the full
/// model's action. For block-preserving permutations the inversion
/// statistic automatically splits into its blockwise parts, because the
/// 2-cycles of a block-preserving involution never cross blocks.
pub struct YoungModel {
    block_sizes: Vec<usize>,
    n: usize,
    basis: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    block_of: Vec<usize>,
}

impl YoungModel {
    pub fn new(block_sizes: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if block_sizes.iter().any(|&b| b == 0) {
            return Err(CombinatoricsError::InvalidPartition(block_sizes));
        }
        let n: usize = block_sizes.iter().sum();
        let mut block_of = vec![0usize; n + 1];
        let mut start = 1;
        for (b, &size) in block_sizes.iter().enumerate() {
            for x in start..start + size {
                block_of[x] = b;
            }
            start += size;
        }
        let basis: Vec<Permutation> = enumerate_involutions_sn(n)
            .into_iter()
            .filter(|w| (1..=n).all(|x| block_of[w.apply(x)] == block_of[x]))
            .collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Ok(YoungModel {
            block_sizes,
            n,
            basis,
            index,
            block_of,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn is_member(&self, pi: &Permutation) -> bool {
        pi.degree() == self.n
            && (1..=self.n).all(|x| self.block_of[pi.apply(x)] == self.block_of[x])
    }

    /// Restriction of the full action to a block-preserving permutation.
    pub fn act(
        &self,
        pi: &Permutation,
        w: &Permutation,
    ) -> Result<(i64, Permutation), CombinatoricsError> {
        assert!(self.is_member(pi), "permutation must preserve the blocks");
        sn_act(pi, w)
    }

    pub fn matrix(&self, pi: &Permutation) -> ColMatrix<i64> {
        assert!(self.is_member(pi), "permutation must preserve the blocks");
        let cols = self
            .basis
            .iter()
            .map(|w| {
                let (sign, image) = sn_act(pi, w).expect("basis elements are involutions");
                vec![(self.index[&image], sign)]
            })
            .collect();
        ColMatrix::from_columns(self.dimension(), cols)
    }

    /// Adjacent transpositions that stay inside a block; they generate the
    /// Young subgroup.
    pub fn generators(&self) -> Vec<Permutation> {
        (1..self.n)
            .filter(|&i| self.block_of[i] == self.block_of[i + 1])
            .map(|i| Permutation::adjacent(self.n, i))
            .collect()
    }
}
