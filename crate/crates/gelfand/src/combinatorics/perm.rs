use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partitions::IntegerPartition;
use super::CombinatoricsError;

/// A total permutation of `{1..n}` in one-line notation: `images[i]` is the
/// image of `i + 1`, with values in `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(CombinatoricsError::NotAPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(i j)` inside `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n && i != j);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    /// The adjacent transposition `s_i = (i, i+1)`.
    pub fn adjacent(n: usize, i: usize) -> Self {
        Permutation::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the point `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// `self * w * self^{-1}`.
    pub fn conjugate(&self, w: &Permutation) -> Permutation {
        self.compose(w).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| self.images[v - 1] == i + 1)
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v != i + 1)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition::new(parts).expect("cycle type is a partition")
    }

    /// Parity of the permutation: `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self
            .cycle_type()
            .parts()
            .iter()
            .map(|&c| c - 1)
            .sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// All `n!` permutations of `{1..n}` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if images.len() == n {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// `Inv(pi) = {(i, j) : i < j, pi(i) > pi(j)}`.
pub fn inversion_set(pi: &Permutation) -> BTreeSet<(usize, usize)> {
    let n = pi.degree();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            if pi.apply(i) > pi.apply(j) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// `Pair(w) = {(i, j) : i < j, w(i) = j}`, the 2-cycles of the involution
/// `w`. Rejects non-involutions.
pub fn pair_set(w: &Permutation) -> Result<BTreeSet<(usize, usize)>, CombinatoricsError> {
    if !w.is_involution() {
        return Err(CombinatoricsError::NotAnInvolution);
    }
    let n = w.degree();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let j = w.apply(i);
        if i < j {
            out.insert((i, j));
        }
    }
    Ok(out)
}

/// `inv_w(pi) = |Inv(pi) ∩ Pair(w)|`.
pub fn inv_w(w: &Permutation, pi: &Permutation) -> Result<usize, CombinatoricsError> {
    let pairs = pair_set(w)?;
    Ok(pairs
        .iter()
        .filter(|&&(i, j)| pi.apply(i) > pi.apply(j))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    /// Independent brute-force oracle for the inversion set.
    fn inversions_brute(pi: &Permutation) -> BTreeSet<(usize, usize)> {
        let n = pi.degree();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if i < j && pi.apply(i) > pi.apply(j) {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn inversion_set_examples() {
        assert_eq!(
            inversion_set(&p(&[2, 3, 1])),
            [(1, 3), (2, 3)].into_iter().collect()
        );
        assert!(inversion_set(&Permutation::identity(4)).is_empty());
        assert_eq!(inversion_set(&p(&[2, 1, 3])), [(1, 2)].into_iter().collect());
    }

    #[test]
    fn inversion_set_matches_oracle() {
        for pi in all_permutations(4) {
            assert_eq!(inversion_set(&pi), inversions_brute(&pi));
        }
    }

    #[test]
    fn pair_set_examples() {
        assert!(pair_set(&Permutation::identity(3)).unwrap().is_empty());
        assert_eq!(
            pair_set(&Permutation::transposition(3, 1, 3)).unwrap(),
            [(1, 3)].into_iter().collect()
        );
        // (1 2)(3 4) in S_4
        assert_eq!(
            pair_set(&p(&[2, 1, 4, 3])).unwrap(),
            [(1, 2), (3, 4)].into_iter().collect()
        );
        assert!(pair_set(&p(&[2, 3, 1])).is_err());
    }

    #[test]
    fn inv_w_examples() {
        let s1 = Permutation::adjacent(3, 1);
        let w12 = Permutation::transposition(3, 1, 2);
        assert_eq!(inv_w(&w12, &s1).unwrap(), 1);
        let s2 = Permutation::adjacent(3, 2);
        assert_eq!(inv_w(&w12, &s2).unwrap(), 0);
        assert_eq!(inv_w(&w12, &Permutation::identity(3)).unwrap(), 0);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = p(&[2, 1, 3]);
        let b = p(&[1, 3, 2]);
        // (a * b)(1) = a(b(1)) = a(1) = 2
        assert_eq!(a.compose(&b).images(), &[2, 3, 1]);
        assert_eq!(b.compose(&a).images(), &[3, 1, 2]);
    }

    #[test]
    fn inverse_and_conjugation() {
        let a = p(&[3, 1, 2]);
        assert!(a.compose(&a.inverse()).is_identity());
        let w = Permutation::transposition(3, 1, 2);
        let c = a.conjugate(&w);
        // a maps 1 -> 3, 2 -> 1, so (1 2) conjugates to (3 1)
        assert_eq!(c, Permutation::transposition(3, 1, 3));
    }

    #[test]
    fn cycle_type_and_sign() {
        assert_eq!(p(&[2, 1, 4, 3]).cycle_type().parts(), &[2, 2]);
        assert_eq!(p(&[2, 3, 1, 4]).cycle_type().parts(), &[3, 1]);
        assert_eq!(p(&[2, 1, 3]).sign(), -1);
        assert_eq!(p(&[2, 3, 1]).sign(), 1);
    }

    #[test]
    fn validation_rejects_bad_images() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn degree_zero_is_fine() {
        let e = Permutation::identity(0);
        assert!(e.is_identity());
        assert!(e.is_involution());
        assert_eq!(all_permutations(0).len(), 1);
    }
}
