use std::fmt;

use crate::scalars::{QPoly, Rational};

/// Exact commutative ring scalars that matrices can carry.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// A dense rectangular matrix over an exact scalar ring, row-major.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> ExactMatrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &ExactMatrix<T>) -> ExactMatrix<T> {
        assert_eq!(self.cols, rhs.rows);
        let mut out: ExactMatrix<T> = ExactMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> ExactMatrix<T> {
        let mut out = ExactMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }
}

impl<T: Ring> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A square matrix stored by columns with only the nonzero entries, each
/// column sorted by row index. The model matrices built in this crate have
/// at most two nonzero entries per column, so products and comparisons
/// stay cheap at every size we handle.
#[derive(Clone, PartialEq)]
pub struct ColMatrix<T> {
    dim: usize,
    cols: Vec<Vec<(usize, T)>>,
}

impl<T: Ring> ColMatrix<T> {
    pub fn zero(dim: usize) -> Self {
        ColMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        ColMatrix {
            dim,
            cols: (0..dim).map(|i| vec![(i, T::one())]).collect(),
        }
    }

    pub fn from_columns(dim: usize, cols: Vec<Vec<(usize, T)>>) -> Self {
        assert_eq!(cols.len(), dim);
        let mut m = ColMatrix { dim, cols };
        for col in &mut m.cols {
            col.retain(|(_, v)| !v.is_zero());
            col.sort_by_key(|&(r, _)| r);
            assert!(col.windows(2).all(|w| w[0].0 != w[1].0));
            assert!(col.iter().all(|&(r, _)| r < dim));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &[(usize, T)] {
        &self.cols[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> T {
        self.cols[c]
            .iter()
            .find(|&&(row, _)| row == r)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(T::zero)
    }

    pub fn set_entry(&mut self, r: usize, c: usize, value: T) {
        let col = &mut self.cols[c];
        match col.iter().position(|&(row, _)| row == r) {
            Some(i) => {
                if value.is_zero() {
                    col.remove(i);
                } else {
                    col[i].1 = value;
                }
            }
            None => {
                if !value.is_zero() {
                    let pos = col.partition_point(|&(row, _)| row < r);
                    col.insert(pos, (r, value));
                }
            }
        }
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &ColMatrix<T>) -> ColMatrix<T> {
        assert_eq!(self.dim, rhs.dim);
        let cols = rhs
            .cols
            .iter()
            .map(|rcol| {
                let mut acc: Vec<(usize, T)> = Vec::new();
                for (k, coeff) in rcol {
                    for (row, value) in &self.cols[*k] {
                        let term = coeff.mul(value);
                        if term.is_zero() {
                            continue;
                        }
                        match acc.iter().position(|&(r, _)| r == *row) {
                            Some(i) => acc[i].1 = acc[i].1.add(&term),
                            None => acc.push((*row, term)),
                        }
                    }
                }
                acc.retain(|(_, v)| !v.is_zero());
                acc.sort_by_key(|&(r, _)| r);
                acc
            })
            .collect();
        ColMatrix {
            dim: self.dim,
            cols,
        }
    }

    pub fn add(&self, rhs: &ColMatrix<T>) -> ColMatrix<T> {
        assert_eq!(self.dim, rhs.dim);
        let cols = (0..self.dim)
            .map(|c| {
                let mut acc = self.cols[c].clone();
                for (row, value) in &rhs.cols[c] {
                    match acc.iter().position(|&(r, _)| r == *row) {
                        Some(i) => acc[i].1 = acc[i].1.add(value),
                        None => acc.push((*row, value.clone())),
                    }
                }
                acc.retain(|(_, v)| !v.is_zero());
                acc.sort_by_key(|&(r, _)| r);
                acc
            })
            .collect();
        ColMatrix {
            dim: self.dim,
            cols,
        }
    }

    pub fn scale(&self, factor: &T) -> ColMatrix<T> {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(r, v)| {
                        let scaled = factor.mul(v);
                        (!scaled.is_zero()).then_some((*r, scaled))
                    })
                    .collect()
            })
            .collect();
        ColMatrix {
            dim: self.dim,
            cols,
        }
    }

    pub fn sub(&self, rhs: &ColMatrix<T>) -> ColMatrix<T> {
        self.add(&rhs.scale(&T::one().neg()))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                if *r == c {
                    acc = acc.add(v);
                }
            }
        }
        acc
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ColMatrix<U> {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(r, v)| {
                        let mapped = f(v);
                        (!mapped.is_zero()).then_some((*r, mapped))
                    })
                    .collect()
            })
            .collect();
        ColMatrix {
            dim: self.dim,
            cols,
        }
    }

    pub fn to_dense(&self) -> ExactMatrix<T> {
        let mut out = ExactMatrix::zero(self.dim, self.dim);
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out.set(*r, c, v.clone());
            }
        }
        out
    }

    /// Whether every nonzero entry stays inside one sector of the given
    /// index grading (`sector_of[i]` is the sector of basis index `i`).
    pub fn respects_grading(&self, sector_of: &[usize]) -> bool {
        self.cols.iter().enumerate().all(|(c, col)| {
            col.iter().all(|&(r, _)| sector_of[r] == sector_of[c])
        })
    }
}

impl<T: Ring> fmt::Debug for ColMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_dense().fmt(f)
    }
}
