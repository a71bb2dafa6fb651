use std::collections::HashMap;

use crate::combinatorics::Permutation;

use super::HypothesisFailure;

/// A finite semigroup as an indexed element set with a full
/// multiplication table. `mul(a, b)` is the product `a * b`, with the
/// convention used throughout the crate that the right factor acts
/// first.
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<u32>,
    names: Vec<String>,
    identity: Option<usize>,
}

impl FiniteSemigroup {
    pub fn from_table(size: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Self {
        assert_eq!(table.len(), size * size, "table must be size x size");
        assert!(
            table.iter().all(|&v| v < size),
            "table entries must be element indices"
        );
        let names = names.unwrap_or_else(|| (0..size).map(|i| format!("#{i}")).collect());
        assert_eq!(names.len(), size);
        let table: Vec<u32> = table.into_iter().map(|v| v as u32).collect();
        let mut s = FiniteSemigroup {
            size,
            table,
            names,
            identity: None,
        };
        s.identity = (0..size).find(|&e| {
            (0..size).all(|x| s.mul(e, x) == x && s.mul(x, e) == x)
        });
        s
    }

    /// Builds the table from a multiplication closure on abstract values.
    pub fn from_elements<T, F>(elements: &[T], mul: F, render: impl Fn(&T) -> String) -> Self
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let size = elements.len();
        let mut table = Vec::with_capacity(size * size);
        for a in elements {
            for b in elements {
                let product = mul(a, b);
                let &idx = index
                    .get(&product)
                    .expect("element set must be closed under multiplication");
                table.push(idx);
            }
        }
        let names = elements.iter().map(render).collect();
        FiniteSemigroup::from_table(size, table, Some(names))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.is_idempotent(x)).collect()
    }

    /// The two-sided identity, if the semigroup is a monoid.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    /// Exhaustive associativity check; the adapters are verified this way
    /// at small sizes and their larger tables come from genuinely
    /// associative operations.
    pub fn verify_associativity(&self) -> Result<(), HypothesisFailure> {
        for a in 0..self.size {
            for b in 0..self.size {
                let ab = self.mul(a, b);
                for c in 0..self.size {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(HypothesisFailure::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the given elements generate the whole semigroup (products
    /// of the listed elements, which should include the identity for a
    /// monoid).
    pub fn generates(&self, generators: &[usize]) -> bool {
        let mut reached = vec![false; self.size];
        let mut stack: Vec<usize> = Vec::new();
        for &g in generators {
            if !reached[g] {
                reached[g] = true;
                stack.push(g);
            }
        }
        while let Some(x) = stack.pop() {
            for &g in generators {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reached.iter().all(|&r| r)
    }
}

/// Per-D-class data an adapter supplies: the chosen idempotent, the block
/// sizes of the symmetric-group sum its maximal subgroup is isomorphic
/// to, and the isomorphism itself as an explicit element map onto
/// block-preserving permutations of consecutive blocks.
#[derive(Clone)]
pub struct DClassSpec {
    pub idempotent: usize,
    pub young_blocks: Vec<usize>,
    pub iso: HashMap<usize, Permutation>,
}

/// Everything an adapter supplies beyond the multiplication table.
#[derive(Clone, Default)]
pub struct AdapterData {
    pub dclasses: Vec<DClassSpec>,
    /// A generating set (including the identity for monoids); used for
    /// commutant computations after the module axiom has been verified.
    pub generators: Vec<usize>,
}
