//! Exact rank computation: fraction-free (Bareiss) elimination over the
//! integers for rational ranks, and modular Gaussian elimination for prime
//! fields.
//!
//! The Bareiss kernel is generic over the integer scalar. Every intermediate
//! entry is a minor of the input matrix, so a Hadamard bound on the input
//! decides per matrix whether the fixed-width [`crate::NarrowElim`] scalar is
//! safe or the arbitrary-precision [`crate::WideElim`] fallback is required.

use num_integer::Integer;
use num_traits::Signed;

use crate::complex::SparseIntMatrix;
use crate::{NarrowElim, WideElim};

/// Scalar usable by the fraction-free elimination kernel.
pub trait ElimScalar: Integer + Signed + Clone + From<i64> {}
impl<T> ElimScalar for T where T: Integer + Signed + Clone + From<i64> {}

/// Rank by fraction-free Gaussian elimination. All divisions are exact;
/// entries remain minors of the input throughout, which keeps growth bounded
/// by the Hadamard bound.
pub fn bareiss_rank<T: ElimScalar>(mut m: Vec<Vec<T>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut denom: T = T::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // smallest-magnitude nonzero pivot limits intermediate growth
        let mut pivot: Option<usize> = None;
        for r in rank..rows {
            if !m[r][col].is_zero()
                && pivot.is_none_or(|p| m[r][col].abs() < m[p][col].abs())
            {
                pivot = Some(r);
            }
        }
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = m[rank][col].clone() * m[r][c].clone()
                    - m[r][col].clone() * m[rank][c].clone();
                m[r][c] = num / denom.clone();
            }
            m[r][col] = T::zero();
        }
        denom = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// log2 of the Hadamard bound on the minors of `m` (product of the largest
/// `min(rows, cols)` column norms).
fn hadamard_log2(m: &SparseIntMatrix) -> f64 {
    let mut col_bits: Vec<f64> = m
        .cols
        .iter()
        .map(|col| {
            let sq: f64 = col.iter().map(|&(_, v)| (v as f64) * (v as f64)).sum();
            if sq > 0.0 {
                sq.log2() / 2.0
            } else {
                0.0
            }
        })
        .collect();
    col_bits.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
    col_bits.iter().take(m.rows.min(m.cols.len())).sum()
}

/// Rank over the rationals by exact integer elimination. Dispatches to the
/// fixed-width scalar when the Hadamard bound certifies that products of two
/// minors cannot overflow it.
pub fn rank_over_rationals(m: &SparseIntMatrix) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    let bits = hadamard_log2(m);
    if 2.0 * bits + 4.0 < 126.0 {
        let dense: Vec<Vec<NarrowElim>> = m
            .to_dense()
            .into_iter()
            .map(|row| row.into_iter().map(NarrowElim::from).collect())
            .collect();
        bareiss_rank(dense)
    } else {
        let dense: Vec<Vec<WideElim>> = m
            .to_dense()
            .into_iter()
            .map(|row| row.into_iter().map(WideElim::from).collect())
            .collect();
        bareiss_rank(dense)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, a nonzero mod p
    pow_mod(a, p - 2, p)
}

/// Rank over GF(p) by ordinary Gaussian elimination on entries reduced mod p.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64) -> usize {
    assert!(p >= 2 && p < 1 << 31, "modulus out of supported range");
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    let rows = m.rows;
    let cols = m.cols.len();
    let mut a = vec![vec![0u64; cols]; rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, v) in col {
            a[i][j] = v.rem_euclid(p as i64) as u64;
        }
    }
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pv);
        let inv = inv_mod(a[rank][col], p);
        for r in rank + 1..rows {
            if a[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(a[r][col], inv, p);
            for c in col..cols {
                let sub = mul_mod(factor, a[rank][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Deterministic primality by trial division; moduli are small enough that
/// nothing faster is warranted.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
