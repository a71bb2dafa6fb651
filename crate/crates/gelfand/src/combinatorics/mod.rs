//! Core combinatorial objects and formulas: permutations, partial
//! injections, uniform block bijections, integer partitions, involution
//! enumeration, inversion statistics, standard Young tableaux,
//! Murnaghan-Nakayama characters and Robinson-Schensted insertion.

mod blockbij;
mod characters;
mod involutions;
mod partitions;
mod perm;
mod pinj;
mod tableau;

pub use blockbij::SetPartitionBijection;
pub use characters::{class_representative, mn_character};
pub use involutions::{
    enumerate_involutions_isn, enumerate_involutions_sn, two_cycle_count,
};
pub use partitions::{
    class_size, factorial, integer_partitions, syt_count, z_mu, IntegerPartition,
};
pub use perm::{all_permutations, inv_w, inversion_set, pair_set, Permutation};
pub use pinj::PartialInjection;
pub use tableau::{rs_insert, Tableau};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("images {0:?} are not a permutation of 1..=n")]
    NotAPermutation(Vec<usize>),
    #[error("images {0:?} are not an injective partial map on 1..=n")]
    NotInjective(Vec<usize>),
    #[error("permutation is not an involution")]
    NotAnInvolution,
    #[error("partial map is not an involution with dom = im")]
    NotAPartialInvolution,
    #[error("{0:?} is not a weakly decreasing partition of a positive kind")]
    InvalidPartition(Vec<usize>),
    #[error("partitions have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("blocks do not form a set partition of 1..={0}")]
    InvalidBlocks(usize),
    #[error("block map is not uniform (a block and its image differ in size)")]
    NotUniform,
    #[error("partial map is not supported exactly on the given subset")]
    WrongSupport,
}
