use std::fmt;

use serde::{Deserialize, Serialize};

use super::partitions::IntegerPartition;
use super::perm::Permutation;

/// A Young tableau given as its rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows weakly decrease")
    }

    /// Standard: rows and columns strictly increase and the entries are
    /// exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let n: usize = self.rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for (r, row) in self.rows.iter().enumerate().skip(1) {
            let above = &self.rows[r - 1];
            if row.len() > above.len() {
                return false;
            }
            for (c, &v) in row.iter().enumerate() {
                if above[c] >= v {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Robinson-Schensted row insertion: returns the insertion tableau and the
/// recording tableau, which are standard of the same shape.
pub fn rs_insert(w: &Permutation) -> (Tableau, Tableau) {
    let n = w.degree();
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for step in 1..=n {
        let mut value = w.apply(step);
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![value]);
                q.push(vec![step]);
                break;
            }
            match p[row].iter().position(|&x| x > value) {
                None => {
                    p[row].push(value);
                    q[row].push(step);
                    break;
                }
                Some(col) => {
                    std::mem::swap(&mut p[row][col], &mut value);
                    row += 1;
                }
            }
        }
    }
    (Tableau { rows: p }, Tableau { rows: q })
}
