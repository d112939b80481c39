//! Integer matrices with exact rank (fraction-free Gaussian elimination) and
//! exact characteristic polynomials (Faddeev–LeVerrier).

use crate::error::{Error, Result};
use crate::exact::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Dense matrix over the integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> IntMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(BigInt::from(f(i, j)));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Ok(IntMatrix::from_fn(r, c, |i, j| rows[i][j]))
    }

    pub fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, n, |i, j| i64::from(i == j))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument("dimension mismatch in matrix product".into()));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    out.data[i * rhs.cols + j] += add;
                }
            }
        }
        Ok(out)
    }

    fn add_diag(&mut self, c: &BigInt) {
        for i in 0..self.rows.min(self.cols) {
            self.data[i * self.cols + i] += c;
        }
    }

    /// Rank over the rationals by Bareiss fraction-free elimination.
    ///
    /// Every intermediate quantity is an integer (a minor of the original
    /// matrix), so the result is exact for any input size.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        let mut prev = BigInt::from(1);
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let (pivot_row, rest) = a.split_at_mut(row + 1);
            let pr = &pivot_row[row];
            for r in rest.iter_mut() {
                for j in (col + 1)..self.cols {
                    let num = &pr[col] * &r[j] - &r[col] * &pr[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    r[j] = q;
                }
                r[col] = BigInt::zero();
            }
            prev = a[row][col].clone();
            row += 1;
            rank += 1;
            if row == self.rows {
                break;
            }
        }
        rank
    }

    /// Characteristic polynomial `det(xI - A)` (monic), by the
    /// Faddeev–LeVerrier recurrence; every division is exact.
    pub fn charpoly(&self) -> Result<IntPolynomial> {
        if !self.is_square() {
            return Err(Error::InvalidArgument("characteristic polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(IntPolynomial::one());
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        let mut m = self.clone();
        let mut c = -m.trace();
        coeffs[n - 1] = c.clone();
        for k in 2..=n {
            let mut t = m;
            t.add_diag(&c);
            m = self.mul(&t)?;
            let tr = m.trace();
            let (q, rem) = tr.div_rem(&BigInt::from(k));
            debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
            c = -q;
            coeffs[n - k] = c.clone();
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }

    /// Determinant, read off the characteristic polynomial:
    /// `det(A) = (-1)^n * charpoly(0)`.
    pub fn det(&self) -> Result<BigInt> {
        let cp = self.charpoly()?;
        let c0 = cp.coeff(0);
        Ok(if self.rows % 2 == 1 { -c0 } else { c0 })
    }
}

/// Fast exact rank for tiny 0/1 adjacency matrices given as row bitmasks.
///
/// Bareiss elimination in `i64`; intermediate entries are minors of a 0/1
/// matrix, bounded by Hadamard's inequality (`n^(n/2) <= 4096` for `n <= 8`),
/// so no overflow is possible for `n <= 16`.
pub(crate) fn rank_adjacency_bitrows(rows: &[u64], n: usize) -> usize {
    debug_assert!(n <= 16 && rows.len() >= n);
    let mut a = [[0i64; 16]; 16];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = (rows[i] >> j & 1) as i64;
        }
    }
    let mut rank = 0;
    let mut row = 0;
    let mut prev = 1i64;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| a[i][col] != 0) else { continue };
        a.swap(row, p);
        for i in (row + 1)..n {
            for j in (col + 1)..n {
                let num = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                debug_assert!(num % prev == 0);
                a[i][j] = num / prev;
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        row += 1;
        rank += 1;
        if row == n {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64_coeffs(cs)
    }

    /// Independent characteristic polynomial oracle: expand `det(xI - A)` by
    /// dynamic programming over column subsets (Laplace along rows).
    fn charpoly_by_expansion(a: &IntMatrix) -> IntPolynomial {
        assert!(a.is_square());
        let n = a.rows();
        // xid[i][j] = entry (i, j) of xI - A as a polynomial.
        let xid: Vec<Vec<IntPolynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut p = IntPolynomial::constant(-a.get(i, j).clone());
                        if i == j {
                            p = &p + &IntPolynomial::monomial(BigInt::one(), 1);
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        // dp[mask] = det of the top-left |mask| rows restricted to columns in mask.
        let mut dp = vec![IntPolynomial::zero(); 1 << n];
        dp[0] = IntPolynomial::one();
        for mask in 1usize..(1 << n) {
            let row = (mask as u32).count_ones() as usize - 1;
            let mut acc = IntPolynomial::zero();
            // Cofactor of entry (row, pos) carries sign (-1)^(row + pos).
            let mut sign = if row % 2 == 0 { 1i64 } else { -1i64 };
            for j in 0..n {
                if mask >> j & 1 == 0 {
                    continue;
                }
                let term = &xid[row][j] * &dp[mask & !(1 << j)];
                if sign > 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
                sign = -sign;
            }
            dp[mask] = acc;
        }
        dp[(1 << n) - 1].clone()
    }

    #[test]
    fn rank_of_small_known_matrices() {
        let k3 = IntMatrix::from_fn(3, 3, |i, j| i64::from(i != j));
        assert_eq!(k3.rank(), 3);
        assert_eq!(IntMatrix::zeros(4, 4).rank(), 0);
        assert_eq!(IntMatrix::identity(5).rank(), 5);
        // Rank-1 outer product.
        let outer = IntMatrix::from_fn(3, 4, |i, j| ((i + 1) * (j + 2)) as i64);
        assert_eq!(outer.rank(), 1);
        // A matrix where naive integer elimination without pivoting stalls.
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn charpoly_of_known_matrices() {
        // K2: x^2 - 1.
        let k2 = IntMatrix::from_fn(2, 2, |i, j| i64::from(i != j));
        assert_eq!(k2.charpoly().unwrap(), poly(&[-1, 0, 1]));
        // K3: x^3 - 3x - 2 = (x-2)(x+1)^2.
        let k3 = IntMatrix::from_fn(3, 3, |i, j| i64::from(i != j));
        assert_eq!(k3.charpoly().unwrap(), poly(&[-2, -3, 0, 1]));
        // Zero matrix: x^n.
        assert_eq!(IntMatrix::zeros(4, 4).charpoly().unwrap(), poly(&[0, 0, 0, 0, 1]));
        // Non-symmetric with known spectrum: [[2, 1], [0, 3]].
        let tri = IntMatrix::from_rows(&[vec![2, 1], vec![0, 3]]).unwrap();
        assert_eq!(tri.charpoly().unwrap(), poly(&[6, -5, 1]));
    }

    #[test]
    fn charpoly_matches_cofactor_expansion_exhaustively_to_n5() {
        // Every 0/1 symmetric matrix with zero diagonal up to order 5.
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..1 << pairs {
                let mut m = IntMatrix::zeros(n, n);
                let mut b = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if mask >> b & 1 == 1 {
                            m.set(i, j, BigInt::one());
                            m.set(j, i, BigInt::one());
                        }
                        b += 1;
                    }
                }
                assert_eq!(m.charpoly().unwrap(), charpoly_by_expansion(&m), "mask {mask} n {n}");
            }
        }
    }

    #[test]
    fn charpoly_matches_cofactor_expansion_on_general_matrices() {
        // Deterministic pseudo-random integer matrices (entries in -5..=5),
        // including non-symmetric ones.
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=6usize {
            for _ in 0..40 {
                let m = IntMatrix::from_fn(n, n, |_, _| (next() % 11) as i64 - 5);
                assert_eq!(m.charpoly().unwrap(), charpoly_by_expansion(&m));
            }
        }
    }

    #[test]
    fn det_from_charpoly() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), BigInt::from(-2));
        let m3 = IntMatrix::from_rows(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).unwrap();
        assert_eq!(m3.det().unwrap(), BigInt::from(30));
    }

    #[test]
    fn bitrow_rank_agrees_with_bigint_rank() {
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..1 << pairs {
                let mut rows = vec![0u64; n];
                let mut b = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        if mask >> b & 1 == 1 {
                            rows[i] |= 1 << j;
                            rows[j] |= 1 << i;
                        }
                        b += 1;
                    }
                }
                let m = IntMatrix::from_fn(n, n, |i, j| (rows[i] >> j & 1) as i64);
                assert_eq!(rank_adjacency_bitrows(&rows, n), m.rank());
            }
        }
    }
}
