use std::collections::HashMap;

use crate::combinatorics::{PartialInjection, Permutation};

use super::engine::{AdapterData, DClassSpec, FiniteSemigroup};

/// The symmetric inverse semigroup (rook monoid) `IS_n` of all partial
/// injections on `{1..n}`, with its canonical model data: one D-class per
/// rank `k`, chosen idempotent the identity on `{1..k}`, and the maximal
/// subgroup identified with `S_k` by restriction.
///
/// Elements are enumerated by rank descending and then lexicographically,
/// so the identity has index 0 and the engine's involution basis agrees
/// with the canonical order used by the deformed model.
pub fn isn_adapter(n: usize) -> (FiniteSemigroup, AdapterData, Vec<PartialInjection>) {
    let elements = PartialInjection::enumerate_all(n);
    let index: HashMap<&PartialInjection, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let s = FiniteSemigroup::from_elements(&elements, |a, b| a.compose(b), |x| x.to_string());

    let mut dclasses = Vec::new();
    for k in (0..=n).rev() {
        let subset: Vec<usize> = (1..=k).collect();
        let e = PartialInjection::id_on(n, &subset);
        let e_idx = index[&e];
        // maximal subgroup: all partial maps with dom = im = {1..k};
        // restriction to {1..k} is the isomorphism with S_k
        let mut iso = HashMap::new();
        for (i, x) in elements.iter().enumerate() {
            if x.dom() == subset.iter().copied().collect()
                && x.im() == subset.iter().copied().collect()
            {
                let restricted =
                    Permutation::from_images((1..=k).map(|p| x.apply(p).unwrap()).collect())
                        .expect("restriction of a rank-k element is a permutation");
                iso.insert(i, restricted);
            }
        }
        let young_blocks = if k == 0 { Vec::new() } else { vec![k] };
        dclasses.push(DClassSpec {
            idempotent: e_idx,
            young_blocks,
            iso,
        });
    }

    // monoid generators: the identity, the adjacent transpositions as
    // total maps, and one rank-dropping idempotent
    let mut generators = vec![index[&PartialInjection::identity(n)]];
    for i in 1..n {
        let s_i = PartialInjection::from_permutation(&Permutation::adjacent(n, i));
        generators.push(index[&s_i]);
    }
    if n >= 1 {
        let drop: Vec<usize> = (1..n).collect();
        generators.push(index[&PartialInjection::id_on(n, &drop)]);
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
