use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};

/// Dense square matrix of exact scalars, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct SpinMatrix<S: Scalar> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> SpinMatrix<S> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn scalar(dim: usize, s: S) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = s.clone();
        }
        m
    }

    /// Builds a matrix from rows. Panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1))
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|a| {
                    if a.is_zero() {
                        S::zero()
                    } else {
                        a.clone() * s.clone()
                    }
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let d = self.dim;
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * d + j;
                    let prod = a.clone() * b.clone();
                    out.entries[idx] = std::mem::replace(&mut out.entries[idx], S::zero()) + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.len(),
            });
        }
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.dim, other.dim);
        let d = p * q;
        let mut out = Self::zero(d);
        for i in 0..p {
            for j in 0..p {
                let a = &self.entries[i * p + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..q {
                    for l in 0..q {
                        let b = &other.entries[k * q + l];
                        if !b.is_zero() {
                            out.entries[(i * q + k) * d + j * q + l] = a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        out
    }

    /// Returns `c` when `self = c · Id`.
    pub fn as_scalar_multiple(&self) -> Option<S> {
        let d = self.dim;
        let c = if d == 0 { S::zero() } else { self.entries[0].clone() };
        for i in 0..d {
            for j in 0..d {
                let e = &self.entries[i * d + j];
                if (i == j && *e != c) || (i != j && !e.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SpinMatrix<T> {
        SpinMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl SpinMatrix<GaussianRational> {
    /// Rank by exact Gaussian elimination over `Q(i)`.
    pub fn rank(&self) -> usize {
        let d = self.dim;
        let mut a: Vec<Vec<GaussianRational>> = self.rows().map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for col in 0..d {
            let Some(piv) = (rank..d).find(|&r| !Scalar::is_zero(&a[r][col])) else {
                continue;
            };
            a.swap(rank, piv);
            let inv = a[rank][col].inv().expect("pivot is nonzero");
            for r in 0..d {
                if r == rank || Scalar::is_zero(&a[r][col]) {
                    continue;
                }
                let f = a[r][col].mul_ref(&inv);
                for c in col..d {
                    let delta = f.mul_ref(&a[rank][c]);
                    a[r][c] = a[r][c].clone() - delta;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for SpinMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = SpinMatrix<GaussianRational>;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn kron_of_identities() {
        let i2 = M::identity(2);
        assert_eq!(i2.kron(&i2), M::identity(4));
    }

    #[test]
    fn kron_mixed_product() {
        let a = M::from_rows(vec![vec![g(1, 0), g(0, 1)], vec![g(2, 0), g(0, 0)]]);
        let b = M::from_rows(vec![vec![g(0, 0), g(1, -1)], vec![g(3, 0), g(1, 0)]]);
        let lhs = a.kron(&b).mul(&b.kron(&a)).unwrap();
        let rhs = a.mul(&b).unwrap().kron(&b.mul(&a).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_counts_independent_rows() {
        let m = M::from_rows(vec![
            vec![g(1, 0), g(0, 1), g(0, 0)],
            vec![g(0, 1), g(-1, 0), g(0, 0)],
            vec![g(0, 0), g(0, 0), g(5, 0)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(M::identity(4).rank(), 4);
        assert_eq!(M::zero(3).rank(), 0);
    }

    #[test]
    fn scalar_multiple_detection() {
        assert_eq!(M::scalar(3, g(0, 1)).as_scalar_multiple(), Some(g(0, 1)));
        let m = M::from_rows(vec![vec![g(1, 0), g(1, 0)], vec![g(0, 0), g(1, 0)]]);
        assert_eq!(m.as_scalar_multiple(), None);
    }
}
