use std::fmt;

use serde::{Deserialize, Serialize};

use super::partitions::{integer_partitions, IntegerPartition};
use super::perm::{all_permutations, Permutation};
use super::CombinatoricsError;

/// A uniform block bijection on `{1..n}`: a bijection between the blocks
/// of two set partitions that matches each block with one of the same
/// size. These are the elements of the factorizable monoid `F*_n`.
///
/// `blocks[i]` pairs a domain block with its image block; domain blocks
/// are sorted by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartitionBijection {
    n: usize,
    blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl SetPartitionBijection {
    pub fn new(
        n: usize,
        blocks: Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<Self, CombinatoricsError> {
        let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = blocks;
        for (d, r) in &mut blocks {
            d.sort_unstable();
            r.sort_unstable();
            if d.len() != r.len() {
                return Err(CombinatoricsError::NotUniform);
            }
        }
        blocks.sort();
        let check_partition = |side: &dyn Fn(&(Vec<usize>, Vec<usize>)) -> Vec<usize>| {
            let mut seen = vec![false; n + 1];
            let mut count = 0;
            for b in &blocks {
                for &x in &side(b) {
                    if x == 0 || x > n || seen[x] {
                        return false;
                    }
                    seen[x] = true;
                    count += 1;
                }
            }
            count == n
        };
        if !check_partition(&|b: &(Vec<usize>, Vec<usize>)| b.0.clone())
            || !check_partition(&|b: &(Vec<usize>, Vec<usize>)| b.1.clone())
        {
            return Err(CombinatoricsError::InvalidBlocks(n));
        }
        Ok(SetPartitionBijection { n, blocks })
    }

    /// Identity block map on a given partition.
    pub fn identity_on(n: usize, partition: &[Vec<usize>]) -> Result<Self, CombinatoricsError> {
        SetPartitionBijection::new(
            n,
            partition.iter().map(|b| (b.clone(), b.clone())).collect(),
        )
    }

    /// Identity on the partition into singletons (the monoid identity).
    pub fn identity(n: usize) -> Self {
        let singletons: Vec<Vec<usize>> = (1..=n).map(|x| vec![x]).collect();
        SetPartitionBijection::identity_on(n, &singletons).unwrap()
    }

    /// The unit corresponding to a permutation: singleton blocks mapped
    /// along it.
    pub fn from_permutation(p: &Permutation) -> Self {
        let blocks = (1..=p.degree())
            .map(|x| (vec![x], vec![p.apply(x)]))
            .collect();
        SetPartitionBijection::new(p.degree(), blocks).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.blocks
    }

    pub fn domain_partition(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|(d, _)| d.clone()).collect()
    }

    pub fn image_partition(&self) -> Vec<Vec<usize>> {
        let mut parts: Vec<Vec<usize>> = self.blocks.iter().map(|(_, r)| r.clone()).collect();
        parts.sort();
        parts
    }

    /// Multiset of block sizes, as an integer partition of `n`.
    pub fn type_partition(&self) -> IntegerPartition {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|(d, _)| d.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition::new(sizes).expect("block sizes form a partition")
    }

    /// `self * other`: apply `other` first. Composition glues the diagrams
    /// and reads off the induced uniform block bijection.
    pub fn compose(&self, other: &SetPartitionBijection) -> SetPartitionBijection {
        assert_eq!(self.n, other.n);
        let n = self.n;
        // nodes: 0..n input, n..2n middle, 2n..3n output
        let mut uf = UnionFind::new(3 * n);
        for (d, r) in &other.blocks {
            for w in d.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
            uf.union(d[0] - 1, n + r[0] - 1);
            for w in r.windows(2) {
                uf.union(n + w[0] - 1, n + w[1] - 1);
            }
        }
        for (d, r) in &self.blocks {
            for w in d.windows(2) {
                uf.union(n + w[0] - 1, n + w[1] - 1);
            }
            uf.union(n + d[0] - 1, 2 * n + r[0] - 1);
            for w in r.windows(2) {
                uf.union(2 * n + w[0] - 1, 2 * n + w[1] - 1);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> =
            std::collections::BTreeMap::new();
        for x in 1..=n {
            groups.entry(uf.find(x - 1)).or_default().0.push(x);
            groups.entry(uf.find(2 * n + x - 1)).or_default().1.push(x);
        }
        let blocks: Vec<(Vec<usize>, Vec<usize>)> = groups.into_values().collect();
        // uniform block bijections are closed under this composition
        for (d, r) in &blocks {
            assert!(!d.is_empty() && d.len() == r.len());
        }
        SetPartitionBijection::new(n, blocks).expect("composite is a uniform block bijection")
    }

    pub fn inverse(&self) -> SetPartitionBijection {
        let blocks = self.blocks.iter().map(|(d, r)| (r.clone(), d.clone())).collect();
        SetPartitionBijection::new(self.n, blocks).unwrap()
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    /// All elements of `F*_n`, grouped by block type in reverse-lex
    /// partition order, then ordered by block encoding.
    pub fn enumerate_all(n: usize) -> Vec<SetPartitionBijection> {
        let all_parts = set_partitions(n);
        let types = integer_partitions(n);
        let type_of = |p: &Vec<Vec<usize>>| {
            let mut sizes: Vec<usize> = p.iter().map(|b| b.len()).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            IntegerPartition::new(sizes).unwrap()
        };
        let mut out = Vec::new();
        for ty in &types {
            let of_type: Vec<&Vec<Vec<usize>>> =
                all_parts.iter().filter(|p| &type_of(p) == ty).collect();
            let mut elems = Vec::new();
            for p in &of_type {
                for q in &of_type {
                    for bij in size_preserving_bijections(p, q) {
                        let blocks = bij
                            .into_iter()
                            .map(|(i, j)| (p[i].clone(), q[j].clone()))
                            .collect();
                        elems.push(SetPartitionBijection::new(n, blocks).unwrap());
                    }
                }
            }
            elems.sort();
            out.extend(elems);
        }
        out
    }
}

impl fmt::Debug for SetPartitionBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, r)) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}->{:?}", d, r)?;
        }
        Ok(())
    }
}

impl fmt::Display for SetPartitionBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl Serialize for SetPartitionBijection {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            domain_blocks: Vec<&'a Vec<usize>>,
            image_blocks: Vec<&'a Vec<usize>>,
        }
        Repr {
            n: self.n,
            domain_blocks: self.blocks.iter().map(|(d, _)| d).collect(),
            image_blocks: self.blocks.iter().map(|(_, r)| r).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartitionBijection {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            domain_blocks: Vec<Vec<usize>>,
            image_blocks: Vec<Vec<usize>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.domain_blocks.len() != repr.image_blocks.len() {
            return Err(serde::de::Error::custom("block lists differ in length"));
        }
        SetPartitionBijection::new(
            repr.n,
            repr.domain_blocks
                .into_iter()
                .zip(repr.image_blocks)
                .collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// All set partitions of `{1..n}`, blocks sorted by least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(n: usize, next: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(blocks.clone());
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            rec(n, next + 1, blocks, out);
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        rec(n, next + 1, blocks, out);
        blocks.pop();
    }
    rec(n, 1, &mut blocks, &mut out);
    out
}

/// All bijections `p -> q` matching blocks of equal size, as index pairs.
fn size_preserving_bijections(
    p: &[Vec<usize>],
    q: &[Vec<usize>],
) -> Vec<Vec<(usize, usize)>> {
    let mut sizes: Vec<usize> = p.iter().map(|b| b.len()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let groups: Vec<(Vec<usize>, Vec<usize>)> = sizes
        .iter()
        .map(|&s| {
            let pi: Vec<usize> = (0..p.len()).filter(|&i| p[i].len() == s).collect();
            let qi: Vec<usize> = (0..q.len()).filter(|&i| q[i].len() == s).collect();
            debug_assert_eq!(pi.len(), qi.len());
            (pi, qi)
        })
        .collect();
    let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for (pi, qi) in &groups {
        let perms = all_permutations(pi.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for base in &out {
            for perm in &perms {
                let mut assignment = base.clone();
                for (slot, &pb) in pi.iter().enumerate() {
                    assignment.push((pb, qi[perm.apply(slot + 1) - 1]));
                }
                next.push(assignment);
            }
        }
        out = next;
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_partition_counts_are_bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), b);
        }
    }

    #[test]
    fn element_counts() {
        // |F*_n| = sum over types of N_type^2 * prod m_d!
        assert_eq!(SetPartitionBijection::enumerate_all(1).len(), 1);
        assert_eq!(SetPartitionBijection::enumerate_all(2).len(), 3);
        assert_eq!(SetPartitionBijection::enumerate_all(3).len(), 16);
        assert_eq!(SetPartitionBijection::enumerate_all(4).len(), 131);
    }

    #[test]
    fn composition_is_associative() {
        let all = SetPartitionBijection::enumerate_all(3);
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn identity_is_neutral() {
        let e = SetPartitionBijection::identity(3);
        for x in SetPartitionBijection::enumerate_all(3) {
            assert_eq!(e.compose(&x), x);
            assert_eq!(x.compose(&e), x);
        }
    }

    #[test]
    fn units_compose_like_permutations() {
        for a in all_permutations(3) {
            for b in all_permutations(3) {
                let lhs = SetPartitionBijection::from_permutation(&a)
                    .compose(&SetPartitionBijection::from_permutation(&b));
                let rhs = SetPartitionBijection::from_permutation(&a.compose(&b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn merge_then_permute() {
        // e_{12} composed after the unit (1 3): the domain singleton {3}
        // lands in the merged block {1,2}
        let merge = SetPartitionBijection::identity_on(3, &[vec![1, 2], vec![3]]).unwrap();
        let unit = SetPartitionBijection::from_permutation(&Permutation::transposition(3, 1, 3));
        let prod = merge.compose(&unit);
        assert_eq!(
            prod.blocks(),
            &[(vec![1], vec![3]), (vec![2, 3], vec![1, 2])]
        );
    }

    #[test]
    fn uniformity_is_enforced() {
        assert!(SetPartitionBijection::new(3, vec![(vec![1, 2], vec![3]), (vec![3], vec![1, 2])])
            .is_err());
        assert!(SetPartitionBijection::new(3, vec![(vec![1, 2], vec![1, 3]), (vec![3], vec![2])])
            .is_ok());
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(
            SetPartitionBijection::new(3, vec![(vec![1, 2], vec![1, 2]), (vec![2], vec![3])])
                .is_err()
        );
        assert!(SetPartitionBijection::new(3, vec![(vec![1, 2], vec![1, 2])]).is_err());
    }

    #[test]
    fn idempotents_are_identity_block_maps() {
        for x in SetPartitionBijection::enumerate_all(3) {
            let is_identity_map = x.blocks().iter().all(|(d, r)| d == r);
            assert_eq!(x.is_idempotent(), is_identity_map, "element {x}");
        }
    }

    #[test]
    fn json_round_trip() {
        let x = SetPartitionBijection::new(3, vec![(vec![1, 3], vec![2, 3]), (vec![2], vec![1])])
            .unwrap();
        let s = serde_json::to_string(&x).unwrap();
        let back: SetPartitionBijection = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
