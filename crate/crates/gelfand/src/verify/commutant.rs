use crate::scalars::Rational;

use super::matrix::ExactMatrix;
use super::rref::RowReducer;

/// Dimension of the commutant `{X : XM = MX for all M}` of a family of
/// square rational matrices, via the null space of the stacked Sylvester
/// system.
///
/// The family is first split along the connected components of the union
/// of the matrices' nonzero patterns (symmetrized). Every matrix is block
/// diagonal with respect to that partition by construction, so the
/// Sylvester system decouples exactly into independent subsystems, one per
/// ordered pair of components; this only exploits sparsity and changes no
/// answer.
pub fn commutant_dim(mats: &[ExactMatrix<Rational>]) -> usize {
    assert!(!mats.is_empty(), "commutant of an empty family is undefined");
    let d = mats[0].rows();
    for m in mats {
        assert_eq!(m.rows(), d);
        assert_eq!(m.cols(), d);
    }
    if d == 0 {
        return 0;
    }

    let components = pattern_components(mats, d);
    let mut comp_indices: Vec<Vec<usize>> = Vec::new();
    let comp_count = components.iter().copied().max().unwrap() + 1;
    comp_indices.resize(comp_count, Vec::new());
    for (i, &c) in components.iter().enumerate() {
        comp_indices[c].push(i);
    }

    let mut total = 0;
    for block_a in &comp_indices {
        for block_b in &comp_indices {
            total += block_nullity(mats, block_a, block_b);
        }
    }
    total
}

/// Connected components of the union of nonzero patterns, symmetrized.
fn pattern_components(mats: &[ExactMatrix<Rational>], d: usize) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for m in mats {
        for r in 0..d {
            for c in 0..d {
                if !m.get(r, c).is_zero() {
                    let a = find(&mut parent, r);
                    let b = find(&mut parent, c);
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut label = vec![usize::MAX; d];
    let mut next = 0;
    for i in 0..d {
        let root = find(&mut parent, i);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        label[i] = label[root];
    }
    label
}

/// Nullity of the subsystem for the unknown block `X[rows_a x cols_b]`:
/// per matrix `M` and position `(r, c)` the equation
/// `sum_k X[r,k] M[k,c] - M[r,k] X[k,c] = 0`.
fn block_nullity(mats: &[ExactMatrix<Rational>], block_a: &[usize], block_b: &[usize]) -> usize {
    let unknowns = block_a.len() * block_b.len();
    let pos_a: std::collections::HashMap<usize, usize> =
        block_a.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let pos_b: std::collections::HashMap<usize, usize> =
        block_b.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let slot = |r: usize, c: usize| pos_a[&r] * block_b.len() + pos_b[&c];

    let mut reducer = RowReducer::new(unknowns);
    for m in mats {
        for &r in block_a {
            for &c in block_b {
                let mut row = vec![Rational::zero(); unknowns];
                let mut nonzero = false;
                for &k in block_b {
                    let coeff = m.get(k, c);
                    if !coeff.is_zero() {
                        let s = slot(r, k);
                        row[s] = &row[s] + coeff;
                        nonzero = true;
                    }
                }
                for &k in block_a {
                    let coeff = m.get(r, k);
                    if !coeff.is_zero() {
                        let s = slot(k, c);
                        row[s] = &row[s] - coeff;
                        nonzero = true;
                    }
                }
                if nonzero {
                    reducer.absorb(row);
                }
            }
        }
    }
    unknowns - reducer.rank()
}
