use std::fmt;

use num::{BigInt, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::CombinatoricsError;

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidPartition(parts));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> IntegerPartition {
        if self.parts.is_empty() {
            return IntegerPartition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        IntegerPartition { parts }
    }

    /// Number of odd parts of the conjugate, i.e. odd-length columns of the
    /// Young diagram.
    pub fn odd_column_count(&self) -> usize {
        self.conjugate()
            .parts()
            .iter()
            .filter(|&&c| c % 2 == 1)
            .count()
    }

    /// Multiplicity of each part value, as `(value, multiplicity)` pairs in
    /// decreasing value order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1,...,1)` last.
pub fn integer_partitions(n: usize) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if remaining == 0 {
            out.push(IntegerPartition {
                parts: stack.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            stack.push(first);
            rec(remaining - first, first, stack, out);
            stack.pop();
        }
    }
    rec(n, n.max(1), &mut stack, &mut out);
    out
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Number of standard Young tableaux of shape `lambda`, by the hook-length
/// formula.
pub fn syt_count(lambda: &IntegerPartition) -> u64 {
    let n = lambda.n();
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 1..=row {
            let hook = row - j + conj.parts()[j - 1] - (i + 1) + 1;
            hooks *= BigInt::from(hook);
        }
    }
    let f = factorial(n) / hooks;
    f.to_u64().expect("tableau count fits in u64 at this scale")
}

/// Centralizer size `z_mu = prod_i i^{m_i} m_i!` of the conjugacy class of
/// cycle type `mu`.
pub fn z_mu(mu: &IntegerPartition) -> BigInt {
    let mut acc = BigInt::one();
    for (value, mult) in mu.multiplicities() {
        acc *= BigInt::from(value).pow(mult as u32);
        acc *= factorial(mult);
    }
    acc
}

/// Size of the conjugacy class of cycle type `mu` in `S_n`.
pub fn class_size(mu: &IntegerPartition) -> BigInt {
    let z = z_mu(mu);
    let f = factorial(mu.n());
    debug_assert!((&f % &z).is_zero());
    f / z
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force recursion counting partitions, independent of the
    /// generator's ordering logic.
    fn count_partitions(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=n.min(max)).map(|f| count_partitions(n - f, f)).sum()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(integer_partitions(4).len(), 5);
        assert_eq!(integer_partitions(5).len(), 7);
        assert_eq!(integer_partitions(0).len(), 1);
        for n in 0..=9 {
            assert_eq!(integer_partitions(n).len(), count_partitions(n, n.max(1)));
        }
    }

    #[test]
    fn reverse_lex_order() {
        let parts: Vec<Vec<usize>> = integer_partitions(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn conjugation() {
        let lam = IntegerPartition::new(vec![3, 1]).unwrap();
        assert_eq!(lam.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(lam.odd_column_count(), 2);
    }

    /// Enumerate standard tableaux of a shape directly.
    fn count_syt_brute(lambda: &IntegerPartition) -> u64 {
        fn rec(rows: &mut Vec<usize>, shape: &[usize], placed: usize, n: usize) -> u64 {
            if placed == n {
                return 1;
            }
            let mut total = 0;
            for r in 0..shape.len() {
                let can_grow =
                    rows[r] < shape[r] && (r == 0 || rows[r] < rows[r - 1]);
                if can_grow {
                    rows[r] += 1;
                    total += rec(rows, shape, placed + 1, n);
                    rows[r] -= 1;
                }
            }
            total
        }
        let mut rows = vec![0; lambda.len()];
        rec(&mut rows, lambda.parts(), 0, lambda.n())
    }

    #[test]
    fn hook_length_formula_examples() {
        for n in 1..=6 {
            let single_row = IntegerPartition::new(vec![n]).unwrap();
            assert_eq!(syt_count(&single_row), 1);
        }
        assert_eq!(syt_count(&IntegerPartition::new(vec![2, 2]).unwrap()), 2);
        assert_eq!(syt_count(&IntegerPartition::new(vec![2, 1]).unwrap()), 2);
    }

    #[test]
    fn hook_length_formula_matches_enumeration() {
        for n in 1..=6 {
            for lam in integer_partitions(n) {
                assert_eq!(syt_count(&lam), count_syt_brute(&lam), "shape {lam}");
            }
        }
    }

    #[test]
    fn syt_counts_sum_to_involution_count() {
        // sum over shapes of 4 is the involution count 10 of S_4
        let total: u64 = integer_partitions(4).iter().map(syt_count).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn centralizer_sizes() {
        let mu = IntegerPartition::new(vec![2, 1]).unwrap();
        assert_eq!(z_mu(&mu), BigInt::from(2));
        assert_eq!(class_size(&mu), BigInt::from(3));
        let all_one = IntegerPartition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(class_size(&all_one), BigInt::from(1));
        // class sizes partition n!
        for n in 1..=6 {
            let total: BigInt = integer_partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn rejects_invalid_partitions() {
        assert!(IntegerPartition::new(vec![1, 2]).is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
    }
}
