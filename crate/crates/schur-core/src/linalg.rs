//! Exact linear algebra kernels: unimodular inverses over Z (modular solve with integral
//! certification), ranks over Q and F_p, and determinants.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Sparse row: sorted (column, value) pairs without zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Outcome of an attempted inversion over Z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseError {
    /// The matrix is singular over Q.
    Singular,
    /// Invertible over Q but the inverse is not integral (|det| != 1).
    NotUnimodular,
}

const BIG_P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Reduce an integer modulo p into [0, p).
pub fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    x.mod_floor(&pb).to_u64().unwrap_or(0)
}

/// Gauss-Jordan inverse of a dense matrix over F_p; None if singular.
pub fn inverse_mod_p(m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut inv: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut r = vec![0u64; n];
            r[i] = 1;
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let ip = powmod(a[col][col], p - 2, p);
        for j in 0..n {
            a[col][j] = mulmod(a[col][j], ip, p);
            inv[col][j] = mulmod(inv[col][j], ip, p);
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..n {
                    if a[col][j] != 0 {
                        a[r][j] = (a[r][j] + p - mulmod(f, a[col][j], p)) % p;
                    }
                    if inv[col][j] != 0 {
                        inv[r][j] = (inv[r][j] + p - mulmod(f, inv[col][j], p)) % p;
                    }
                }
            }
        }
    }
    Some(inv)
}

fn lift(x: u64, p: u64) -> BigInt {
    if x > p / 2 {
        BigInt::from(x) - BigInt::from(p)
    } else {
        BigInt::from(x)
    }
}

fn to_dense(rows: &[SparseRow], n: usize) -> Vec<Vec<BigInt>> {
    let mut d = vec![vec![BigInt::zero(); n]; rows.len()];
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r {
            d[i][*j] = v.clone();
        }
    }
    d
}

/// Multiply sparse matrices (rows of `a` against rows of `b`).
pub fn sparse_mul(a: &[SparseRow], b: &[SparseRow], ncols: usize) -> Vec<SparseRow> {
    let mut out = Vec::with_capacity(a.len());
    let mut acc = vec![BigInt::zero(); ncols];
    let mut touched = vec![false; ncols];
    for row in a {
        let mut cols = Vec::new();
        for (k, v) in row {
            for (j, w) in &b[*k] {
                if !touched[*j] {
                    touched[*j] = true;
                    cols.push(*j);
                }
                acc[*j] += v * w;
            }
        }
        cols.sort_unstable();
        let mut r = Vec::new();
        for j in cols {
            touched[j] = false;
            let v = core::mem::take(&mut acc[j]);
            if !v.is_zero() {
                r.push((j, v));
            }
        }
        out.push(r);
    }
    out
}

fn is_identity(m: &[SparseRow]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
}

/// Exact inverse over Q by Gauss-Jordan on rationals.
pub fn inverse_rational(rows: &[SparseRow], n: usize) -> Option<Vec<Vec<BigRational>>> {
    let mut a: Vec<Vec<BigRational>> = to_dense(rows, n)
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let ip = a[col][col].recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &ip;
            inv[col][j] = &inv[col][j] * &ip;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                    }
                    if !inv[col][j].is_zero() {
                        let t = &f * &inv[col][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
    }
    Some(inv)
}

/// Inverse of a square integer matrix given by sparse rows, certified integral.
///
/// Solves modulo a 61-bit prime and lifts symmetrically. The lift is accepted once `M * N = I`
/// holds over Z; otherwise this falls back to rational elimination.
pub fn unimodular_inverse(rows: &[SparseRow]) -> Result<Vec<SparseRow>, InverseError> {
    let n = rows.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let dense: Vec<Vec<u64>> = to_dense(rows, n)
        .iter()
        .map(|r| r.iter().map(|x| reduce_mod(x, BIG_P)).collect())
        .collect();
    if let Some(inv) = inverse_mod_p(&dense, BIG_P) {
        let cand: Vec<SparseRow> = inv
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j, lift(v, BIG_P)))
                    .collect()
            })
            .collect();
        if is_identity(&sparse_mul(rows, &cand, n)) {
            return Ok(cand);
        }
    }
    let inv = inverse_rational(rows, n).ok_or(InverseError::Singular)?;
    let mut out = Vec::with_capacity(n);
    for r in inv {
        let mut row = Vec::new();
        for (j, v) in r.into_iter().enumerate() {
            if !v.is_integer() {
                return Err(InverseError::NotUnimodular);
            }
            if !v.is_zero() {
                row.push((j, v.to_integer()));
            }
        }
        out.push(row);
    }
    Ok(out)
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rank_rational(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&a[rank][col] * &a[r][j] - &a[r][col] * &a[rank][j]) / &prev;
                a[r][j] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over F_p of an integer matrix (entries reduced first).
pub fn rank_mod_p(m: &[Vec<BigInt>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|x| reduce_mod(x, p)).collect())
        .collect();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let ip = powmod(a[rank][col], p - 2, p);
        for j in col..cols {
            a[rank][j] = mulmod(a[rank][j], ip, p);
        }
        for r in rank + 1..rows {
            let f = a[r][col];
            if f != 0 {
                for j in col..cols {
                    a[r][j] = (a[r][j] + p - mulmod(f, a[rank][j], p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the field of characteristic `p` (0 means Q).
pub fn rank(m: &[Vec<BigInt>], p: u64) -> usize {
    if p == 0 {
        rank_rational(m)
    } else {
        rank_mod_p(m, p)
    }
}

/// Determinant over Z by Bareiss elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Kernel basis (over F_p, p > 0, or Q when p = 0) of v -> v * M for an integer matrix:
/// returns the dimension of the left kernel, computed independently of `rank`.
pub fn left_kernel_dim(m: &[Vec<BigInt>], p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let t: Vec<Vec<BigInt>> = (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect();
    if cols == 0 {
        return rows;
    }
    rows - rank(&t, p)
}

/// Absolute value helper kept for callers that compare magnitudes.
pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
    fn sparse(v: &[&[i64]]) -> Vec<SparseRow> {
        v.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j, BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn inverse_of_unimodular() {
        let m = sparse(&[&[2, 1, 0], &[1, 1, 0], &[5, -3, 1]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert!(is_identity(&sparse_mul(&m, &inv, 3)));
    }

    #[test]
    fn non_unimodular_and_singular() {
        assert_eq!(
            unimodular_inverse(&sparse(&[&[2, 0], &[0, 1]])),
            Err(InverseError::NotUnimodular)
        );
        assert_eq!(
            unimodular_inverse(&sparse(&[&[1, 2], &[2, 4]])),
            Err(InverseError::Singular)
        );
    }

    #[test]
    fn ranks_and_determinants() {
        let m = bi(&[&[2, 0], &[0, 2]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 0);
        assert_eq!(
            determinant(&bi(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]])),
            BigInt::from(1)
        );
        assert_eq!(determinant(&bi(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(left_kernel_dim(&bi(&[&[1, 1], &[1, 1], &[0, 1]]), 0), 1);
    }
}
