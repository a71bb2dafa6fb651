use std::collections::HashMap;

use crate::combinatorics::{integer_partitions, Permutation, SetPartitionBijection};

use super::engine::{AdapterData, DClassSpec, FiniteSemigroup};

/// The monoid `F*_n` of uniform block bijections on `{1..n}`, with its
/// model data: one D-class per block type `lambda`, chosen idempotent the
/// identity map on the canonical partition with consecutive blocks of
/// weakly decreasing sizes, and the maximal subgroup — block permutations
/// moving blocks within equal-size families — identified with
/// `S_{m_{d_1}} + S_{m_{d_2}} + ...` where `m_d` counts the blocks of
/// size `d`.
pub fn fstar_adapter(n: usize) -> (FiniteSemigroup, AdapterData, Vec<SetPartitionBijection>) {
    let elements = SetPartitionBijection::enumerate_all(n);
    let index: HashMap<&SetPartitionBijection, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let s = FiniteSemigroup::from_elements(&elements, |a, b| a.compose(b), |x| x.to_string());

    let mut dclasses = Vec::new();
    for lambda in integer_partitions(n) {
        // canonical partition: consecutive blocks, sizes descending
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut start = 1;
        for &size in lambda.parts() {
            blocks.push((start..start + size).collect());
            start += size;
        }
        let e = SetPartitionBijection::identity_on(n, &blocks).unwrap();
        let e_idx = index[&e];

        // equal-size families of consecutive blocks; the group permutes
        // blocks inside each family
        let young_blocks: Vec<usize> = lambda
            .multiplicities()
            .iter()
            .map(|&(_, mult)| mult)
            .collect();

        let mut iso = HashMap::new();
        for (i, x) in elements.iter().enumerate() {
            if x.domain_partition() == blocks && x.image_partition() == blocks {
                // block j goes to the block holding its image
                let images: Vec<usize> = x
                    .blocks()
                    .iter()
                    .map(|(_, r)| blocks.iter().position(|b| b == r).unwrap() + 1)
                    .collect();
                let perm = Permutation::from_images(images)
                    .expect("block map of a self-map is a block permutation");
                iso.insert(i, perm);
            }
        }
        dclasses.push(DClassSpec {
            idempotent: e_idx,
            young_blocks,
            iso,
        });
    }

    // monoid generators: the identity, the unit transpositions, and one
    // merging idempotent
    let mut generators = vec![index[&SetPartitionBijection::identity(n)]];
    for i in 1..n {
        let unit = SetPartitionBijection::from_permutation(&Permutation::adjacent(n, i));
        generators.push(index[&unit]);
    }
    if n >= 2 {
        let mut blocks: Vec<Vec<usize>> = vec![vec![1, 2]];
        blocks.extend((3..=n).map(|x| vec![x]));
        let merge = SetPartitionBijection::identity_on(n, &blocks).unwrap();
        generators.push(index[&merge]);
    }
    generators.sort_unstable();
    generators.dedup();

    (
        s,
        AdapterData {
            dclasses,
            generators,
        },
        elements,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::green::green_relations;
    use crate::semigroup::model::SemigroupModel;
    use crate::semigroup::trace::trace_certificate;

    #[test]
    fn element_counts() {
        assert_eq!(fstar_adapter(2).2.len(), 3);
        assert_eq!(fstar_adapter(3).2.len(), 16);
        assert_eq!(fstar_adapter(4).2.len(), 131);
    }

    #[test]
    fn associativity_exhaustive_small() {
        for n in 1..=3 {
            let (s, _, _) = fstar_adapter(n);
            assert!(s.verify_associativity().is_ok());
        }
    }

    #[test]
    fn generators_generate() {
        for n in 1..=4 {
            let (s, adapter, _) = fstar_adapter(n);
            assert!(s.generates(&adapter.generators), "n = {n}");
        }
    }

    #[test]
    fn dclasses_are_block_types() {
        let (s, _, elements) = fstar_adapter(3);
        let green = green_relations(&s);
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let same_d = green.d_class_of[i] == green.d_class_of[j];
                assert_eq!(same_d, x.type_partition() == y.type_partition());
            }
        }
    }

    #[test]
    fn hypotheses_pass_and_groups_have_the_claimed_shape() {
        for n in 2..=3 {
            let (s, adapter, _) = fstar_adapter(n);
            let green = green_relations(&s);
            let cert = trace_certificate(&s, &green, &adapter).unwrap();
            assert_eq!(cert.dclasses.len(), integer_partitions(n).len());
        }
        // n = 2: the singleton-partition class carries S_2, the merged
        // class the trivial group
        let (s, adapter, _) = fstar_adapter(2);
        let green = green_relations(&s);
        let cert = trace_certificate(&s, &green, &adapter).unwrap();
        let mut orders: Vec<usize> = cert.dclasses.iter().map(|d| d.group_order()).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2]);
    }

    #[test]
    fn maximal_subgroup_at_singletons_is_symmetric_group() {
        let (s, adapter, elements) = fstar_adapter(3);
        let green = green_relations(&s);
        let cert = trace_certificate(&s, &green, &adapter).unwrap();
        let singleton_class = cert
            .dclasses
            .iter()
            .find(|d| elements[d.idempotent].type_partition().parts() == [1, 1, 1])
            .unwrap();
        assert_eq!(singleton_class.group_order(), 6);

        // blocks of distinct sizes cannot move: trivial group at {{1,2},{3}}
        let mixed_class = cert
            .dclasses
            .iter()
            .find(|d| elements[d.idempotent].type_partition().parts() == [2, 1])
            .unwrap();
        assert_eq!(mixed_class.group_order(), 1);
        assert_eq!(mixed_class.m, 3);
    }

    #[test]
    fn model_dimensions() {
        for (n, expected) in [(2, 3usize), (3, 8)] {
            let (s, adapter, _) = fstar_adapter(n);
            let model = SemigroupModel::build(s, &adapter).unwrap();
            assert_eq!(model.dimension(), expected, "n = {n}");
            assert_eq!(model.expected_dimension(), expected, "n = {n}");
        }
    }

    #[test]
    fn f3_module_axiom_and_certificate() {
        let (s, adapter, _) = fstar_adapter(3);
        let model = SemigroupModel::build(s, &adapter).unwrap();
        assert_eq!(model.check_module_axiom(model.exhaustive_pairs()), None);
        // simple count: 1 (type (3)) + 1 (type (2,1)) + p(3) (type (1,1,1))
        assert_eq!(model.expected_simple_count(), 5);
        assert_eq!(model.commutant_dimension(), 5);
        assert!(model.certificate("fstar-3", true).is_gelfand());
    }
}
