use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::Permutation;
use super::CombinatoricsError;

/// An injective partial map on `{1..n}`: an element of the symmetric
/// inverse semigroup `IS_n` (the rook monoid). `images[i] = 0` encodes
/// "undefined at `i + 1`"; nonzero entries are pairwise distinct.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartialInjection {
    images: Vec<usize>,
}

impl PartialInjection {
    /// The nowhere-defined map.
    pub fn empty(n: usize) -> Self {
        PartialInjection { images: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        PartialInjection {
            images: (1..=n).collect(),
        }
    }

    /// The identity map `e_A` on the subset `A`.
    pub fn id_on(n: usize, subset: &[usize]) -> Self {
        let mut images = vec![0; n];
        for &x in subset {
            assert!(x >= 1 && x <= n);
            images[x - 1] = x;
        }
        PartialInjection { images }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v > n || (v != 0 && seen[v]) {
                return Err(CombinatoricsError::NotInjective(images));
            }
            if v != 0 {
                seen[v] = true;
            }
        }
        Ok(PartialInjection { images })
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        PartialInjection {
            images: p.images().to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        match self.images[x - 1] {
            0 => None,
            v => Some(v),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&v| v != 0).count()
    }

    pub fn dom(&self) -> BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn im(&self) -> BTreeSet<usize> {
        self.images.iter().copied().filter(|&v| v != 0).collect()
    }

    /// `self * other`: apply `other` first, then `self`; defined where the
    /// composite is defined.
    pub fn compose(&self, other: &PartialInjection) -> PartialInjection {
        assert_eq!(self.degree(), other.degree());
        let images = other
            .images
            .iter()
            .map(|&v| if v == 0 { 0 } else { self.images[v - 1] })
            .collect();
        PartialInjection { images }
    }

    /// The inverse partial map, defined on `im(self)`.
    pub fn inverse(&self) -> PartialInjection {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            if v != 0 {
                images[v - 1] = i + 1;
            }
        }
        PartialInjection { images }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    /// A semigroup involution: `dom(w) = im(w)` and `w ∘ w` is the identity
    /// on the domain.
    pub fn is_involution(&self) -> bool {
        let dom: Vec<usize> = self.dom().into_iter().collect();
        self.compose(self) == PartialInjection::id_on(self.degree(), &dom)
    }

    /// Total maps convert to permutations.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.rank() == self.degree() {
            Permutation::from_images(self.images.clone()).ok()
        } else {
            None
        }
    }

    /// Restriction of a total permutation to the subset `A`, as a partial
    /// map.
    pub fn restriction_of(p: &Permutation, subset: &BTreeSet<usize>) -> Self {
        let n = p.degree();
        let mut images = vec![0; n];
        for &x in subset {
            images[x - 1] = p.apply(x);
        }
        PartialInjection { images }
    }

    /// All elements of `IS_n`, ordered by rank descending and then by the
    /// serialized image array. The identity comes first.
    pub fn enumerate_all(n: usize) -> Vec<PartialInjection> {
        let mut out = Vec::new();
        let mut images = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(
            n: usize,
            images: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<PartialInjection>,
        ) {
            if images.len() == n {
                out.push(PartialInjection {
                    images: images.clone(),
                });
                return;
            }
            for v in 0..=n {
                if v == 0 || !used[v] {
                    if v != 0 {
                        used[v] = true;
                    }
                    images.push(v);
                    rec(n, images, used, out);
                    images.pop();
                    if v != 0 {
                        used[v] = false;
                    }
                }
            }
        }
        rec(n, &mut images, &mut used, &mut out);
        out.sort_by_key(|a| (n - a.rank(), a.images.clone()));
        out
    }
}

impl fmt::Debug for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_counts_match_rank_formula() {
        // |IS_n| = sum_k C(n,k)^2 k!
        assert_eq!(PartialInjection::enumerate_all(1).len(), 2);
        assert_eq!(PartialInjection::enumerate_all(2).len(), 7);
        assert_eq!(PartialInjection::enumerate_all(3).len(), 34);
        assert_eq!(PartialInjection::enumerate_all(4).len(), 209);
    }

    #[test]
    fn identity_is_first_in_enumeration() {
        let all = PartialInjection::enumerate_all(3);
        assert_eq!(all[0], PartialInjection::identity(3));
    }

    #[test]
    fn composition_is_associative() {
        let all = PartialInjection::enumerate_all(2);
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // swap on {1,2} composed after id_{1} has domain {1}
        let swap = PartialInjection::from_images(vec![2, 1]).unwrap();
        let e1 = PartialInjection::id_on(2, &[1]);
        let prod = swap.compose(&e1);
        assert_eq!(prod.images(), &[2, 0]);
        assert_eq!(prod.dom(), [1].into_iter().collect());
        assert_eq!(prod.im(), [2].into_iter().collect());
    }

    #[test]
    fn inverse_round_trips_on_image() {
        let x = PartialInjection::from_images(vec![3, 0, 1, 0]).unwrap();
        let inv = x.inverse();
        let dom: Vec<usize> = x.dom().into_iter().collect();
        assert_eq!(inv.compose(&x), PartialInjection::id_on(4, &dom));
        let im: Vec<usize> = x.im().into_iter().collect();
        assert_eq!(x.compose(&inv), PartialInjection::id_on(4, &im));
    }

    #[test]
    fn involution_requires_dom_equal_im() {
        assert!(PartialInjection::id_on(3, &[1, 3]).is_involution());
        let swap13 = PartialInjection::from_images(vec![3, 0, 1]).unwrap();
        assert!(swap13.is_involution());
        // 1 -> 2 has dom {1}, im {2}
        let shift = PartialInjection::from_images(vec![2, 0]).unwrap();
        assert!(!shift.is_involution());
        assert!(PartialInjection::empty(3).is_involution());
    }

    #[test]
    fn validation_rejects_repeats() {
        assert!(PartialInjection::from_images(vec![1, 1, 0]).is_err());
        assert!(PartialInjection::from_images(vec![4, 0, 0]).is_err());
        assert!(PartialInjection::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn idempotents_are_partial_identities() {
        // brute force: e^2 = e over IS_3 exactly for the identity maps e_A
        let idempotents: Vec<_> = PartialInjection::enumerate_all(3)
            .into_iter()
            .filter(|x| x.is_idempotent())
            .collect();
        assert_eq!(idempotents.len(), 8);
        for e in idempotents {
            let dom: Vec<usize> = e.dom().into_iter().collect();
            assert_eq!(e, PartialInjection::id_on(3, &dom));
        }
    }
}
