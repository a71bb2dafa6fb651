use crate::scalars::Rational;

use super::matrix::ExactMatrix;

/// Exact reduced row-echelon form over the rationals; returns the rank and
/// the reduced matrix.
pub fn rref(m: &ExactMatrix<Rational>) -> (usize, ExactMatrix<Rational>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut data: Vec<Vec<Rational>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows).find(|&r| !data[r][col].is_zero()) else {
            continue;
        };
        data.swap(pivot_row, src);
        let inv = data[pivot_row][col].recip().expect("pivot is nonzero");
        for c in col..cols {
            data[pivot_row][c] = &data[pivot_row][c] * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !data[r][col].is_zero() {
                let factor = data[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &data[pivot_row][c];
                    data[r][c] = &data[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    (pivot_row, ExactMatrix::from_rows(data))
}

pub fn rank(m: &ExactMatrix<Rational>) -> usize {
    rref(m).0
}

/// Incremental row-echelon accumulator: rows are absorbed one at a time,
/// which keeps verification memory proportional to the rank rather than
/// to the number of equations.
pub struct RowReducer {
    width: usize,
    // (pivot column, row normalized to a leading 1), kept sorted by pivot
    pivots: Vec<(usize, Vec<Rational>)>,
}

impl RowReducer {
    pub fn new(width: usize) -> Self {
        RowReducer {
            width,
            pivots: Vec::new(),
        }
    }

    /// Reduces `row` against the pivots seen so far; if a nonzero residue
    /// remains it becomes a new pivot. Returns whether the rank grew.
    pub fn absorb(&mut self, mut row: Vec<Rational>) -> bool {
        assert_eq!(row.len(), self.width);
        for (col, pivot_row) in &self.pivots {
            if row[*col].is_zero() {
                continue;
            }
            let factor = row[*col].clone();
            for c in *col..self.width {
                if !pivot_row[c].is_zero() {
                    let delta = &factor * &pivot_row[c];
                    row[c] = &row[c] - &delta;
                }
            }
        }
        let Some(lead) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[lead].recip().expect("leading entry is nonzero");
        for v in row.iter_mut().skip(lead) {
            *v = &*v * &inv;
        }
        let pos = self.pivots.partition_point(|(c, _)| *c < lead);
        self.pivots.insert(pos, (lead, row));
        true
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank oracle by exhaustive minors, for cross-checking `rref` on small
/// matrices.
pub fn rank_by_minors(m: &ExactMatrix<Rational>) -> usize {
    fn det(m: &ExactMatrix<Rational>, rows: &[usize], cols: &[usize]) -> Rational {
        if rows.len() == 1 {
            return m.get(rows[0], cols[0]).clone();
        }
        let mut acc = Rational::zero();
        for (i, &r) in rows.iter().enumerate() {
            let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let minor = det(m, &sub_rows, &cols[1..]);
            let signed = if i % 2 == 0 { minor } else { -minor };
            acc = &acc + &(m.get(r, cols[0]).clone() * signed);
        }
        acc
    }
    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in 0..n {
            for mut rest in combos(n, k - 1) {
                if rest.iter().all(|&x| x > first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
        }
        out
    }
    let max_k = m.rows().min(m.cols());
    for k in (1..=max_k).rev() {
        for rows in combos(m.rows(), k) {
            for cols in combos(m.cols(), k) {
                if !det(m, &rows, &cols).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_full_rank() {
        let (rank, reduced) = rref(&ExactMatrix::<Rational>::identity(4));
        assert_eq!(rank, 4);
        assert_eq!(reduced, ExactMatrix::identity(4));
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn planted_rank_three_factorization() {
        // 5x3 times 3x5 integer matrices have rank exactly 3
        let a = mat(&[&[1, 0, 2], &[0, 1, 1], &[3, 1, 0], &[1, 1, 1], &[2, 0, 1]]);
        let b = mat(&[&[1, 2, 0, 1, 0], &[0, 1, 1, 0, 2], &[1, 0, 1, 1, 1]]);
        let product = a.mul(&b);
        assert_eq!(rank(&product), 3);
    }

    #[test]
    fn rref_matches_minor_oracle_on_small_matrices() {
        let cases: Vec<ExactMatrix<Rational>> = vec![
            mat(&[&[0, 0], &[0, 0]]),
            mat(&[&[1, 2], &[3, 4]]),
            mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]),
            mat(&[&[1, 0, 0, 2], &[0, 1, 1, 0], &[1, 1, 1, 2], &[0, 0, 1, 1]]),
            mat(&[&[2, 3], &[4, 6], &[1, 5]]),
        ];
        for m in &cases {
            assert_eq!(rank(m), rank_by_minors(m));
        }
    }

    #[test]
    fn reducer_agrees_with_rref() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1], &[0, 1, 2]]);
        let mut reducer = RowReducer::new(3);
        for r in 0..m.rows() {
            reducer.absorb(m.row(r).to_vec());
        }
        assert_eq!(reducer.rank(), rank(&m));
    }

    #[test]
    fn rref_produces_reduced_form() {
        let (rank, red) = rref(&mat(&[&[2, 4, 2], &[1, 2, 3]]));
        assert_eq!(rank, 2);
        // leading ones with zeros above and below
        assert_eq!(red.get(0, 0), &Rational::one());
        assert_eq!(red.get(1, 2), &Rational::one());
        assert!(red.get(0, 2).is_zero());
    }
}
