use std::collections::HashMap;

use super::engine::FiniteSemigroup;

/// Green's relations of a finite semigroup: class labels per element,
/// the classes themselves, the idempotent list and the J-preorder on
/// D-classes. D and J coincide for finite semigroups; the engine computes
/// classes through principal ideals over `S^1`.
pub struct GreenData {
    pub l_class_of: Vec<usize>,
    pub r_class_of: Vec<usize>,
    pub h_class_of: Vec<usize>,
    pub d_class_of: Vec<usize>,
    pub l_classes: Vec<Vec<usize>>,
    pub r_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    pub d_classes: Vec<Vec<usize>>,
    pub idempotents: Vec<usize>,
    /// `j_leq[c][d]` iff the D-class `c` is J-below-or-equal to `d`.
    j_leq: Vec<Vec<bool>>,
}

pub fn green_relations(s: &FiniteSemigroup) -> GreenData {
    let n = s.size();
    let mut left_ideals: Vec<Vec<bool>> = Vec::with_capacity(n);
    let mut right_ideals: Vec<Vec<bool>> = Vec::with_capacity(n);
    let mut two_sided: Vec<Vec<bool>> = Vec::with_capacity(n);
    for x in 0..n {
        // S^1 x
        let mut l = vec![false; n];
        l[x] = true;
        for s_elem in 0..n {
            l[s.mul(s_elem, x)] = true;
        }
        // x S^1
        let mut r = vec![false; n];
        r[x] = true;
        for s_elem in 0..n {
            r[s.mul(x, s_elem)] = true;
        }
        // S^1 x S^1
        let mut j = l.clone();
        for (y, _) in r.iter().enumerate().filter(|&(_, &v)| v) {
            j[y] = true;
        }
        for s_elem in 0..n {
            let sx = s.mul(s_elem, x);
            for t in 0..n {
                j[s.mul(sx, t)] = true;
            }
        }
        left_ideals.push(l);
        right_ideals.push(r);
        two_sided.push(j);
    }

    let (l_class_of, l_classes) = classify(&left_ideals);
    let (r_class_of, r_classes) = classify(&right_ideals);
    let (d_class_of, d_classes) = classify(&two_sided);

    // H = L ∩ R
    let mut h_key: HashMap<(usize, usize), usize> = HashMap::new();
    let mut h_class_of = vec![0usize; n];
    let mut h_classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let key = (l_class_of[x], r_class_of[x]);
        let id = *h_key.entry(key).or_insert_with(|| {
            h_classes.push(Vec::new());
            h_classes.len() - 1
        });
        h_class_of[x] = id;
        h_classes[id].push(x);
    }

    let idempotents = s.idempotents();

    let class_count = d_classes.len();
    let mut j_leq = vec![vec![false; class_count]; class_count];
    for (c, class) in d_classes.iter().enumerate() {
        let rep = class[0];
        for (d, other) in d_classes.iter().enumerate() {
            // J(rep) ⊆ J(other) iff rep ∈ J(other)
            j_leq[c][d] = two_sided[other[0]][rep];
        }
    }

    GreenData {
        l_class_of,
        r_class_of,
        h_class_of,
        d_class_of,
        l_classes,
        r_classes,
        h_classes,
        d_classes,
        idempotents,
        j_leq,
    }
}

fn classify(ideals: &[Vec<bool>]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut key: HashMap<&[bool], usize> = HashMap::new();
    let mut class_of = vec![0usize; ideals.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (x, ideal) in ideals.iter().enumerate() {
        let id = *key.entry(ideal.as_slice()).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[x] = id;
        classes[id].push(x);
    }
    (class_of, classes)
}

impl GreenData {
    /// J-preorder on elements through their D-classes.
    pub fn j_leq(&self, x: usize, y: usize) -> bool {
        self.j_leq[self.d_class_of[x]][self.d_class_of[y]]
    }

    pub fn j_strictly_below(&self, x: usize, y: usize) -> bool {
        self.j_leq(x, y) && self.d_class_of[x] != self.d_class_of[y]
    }

    pub fn idempotents_in_dclass(&self, d: usize) -> Vec<usize> {
        self.idempotents
            .iter()
            .copied()
            .filter(|&e| self.d_class_of[e] == d)
            .collect()
    }

    /// D-classes containing at least one idempotent.
    pub fn regular_dclasses(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .idempotents
            .iter()
            .map(|&e| self.d_class_of[e])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}
