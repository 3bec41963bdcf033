use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl RepMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn scale(&self, k: i64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Arity("matrix shapes differ".into()));
        }
        Ok(Self { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Arity(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rank(&(0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect::<Vec<_>>())
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let dims = it.next().ok_or_else(|| Error::Parse("empty matrix".into()))?;
        let (r, c) = dims.split_once('x').ok_or_else(|| Error::Parse(format!("bad matrix header `{dims}`")))?;
        let rows: usize = r.parse().map_err(|_| Error::Parse("bad row count".into()))?;
        let cols: usize = c.parse().map_err(|_| Error::Parse("bad column count".into()))?;
        let data: Vec<i64> =
            it.map(|x| x.parse().map_err(|_| Error::Parse(format!("bad entry `{x}`")))).collect::<Result<_>>()?;
        if data.len() != rows * cols {
            return Err(Error::Parse("matrix entry count does not match header".into()));
        }
        Ok(Self { rows, cols, data })
    }
}

impl Mul for &RepMatrix {
    type Output = RepMatrix;
    fn mul(self, rhs: &RepMatrix) -> RepMatrix {
        RepMatrix::mul(self, rhs).expect("matrix shapes")
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f)?;
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rank over the rationals by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().filter(|r| r.iter().any(|&x| x != 0)).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                for x in row.iter_mut().skip(col) {
                    *x = &*x * &pivot_row[col] / &prev;
                }
                continue;
            }
            let factor = row[col].clone();
            for c in col..ncols {
                row[c] = (&row[c] * &pivot_row[col] - &factor * &pivot_row[c]) / &prev;
            }
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank(&[vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![2, 4, 1], vec![1, 2, 0], vec![3, 6, 1]]), 2);
        assert_eq!(rank(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
    }

    #[test]
    fn text_round_trip() {
        let m = RepMatrix { rows: 2, cols: 3, data: vec![1, -2, 0, 4, 5, 6] };
        assert_eq!(RepMatrix::parse(&m.to_string()).unwrap(), m);
    }
}
