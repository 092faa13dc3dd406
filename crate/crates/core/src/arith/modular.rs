//! Ranks modulo a 61-bit prime.
//!
//! Reduction mod `p` can only lose rank, so `rank_p(M) ≤ rank_Q(M)`. When the
//! modular rank is already maximal it is the exact rank.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::matrix::Matrix;
use super::rational::Rational;

pub const MODULUS: u64 = (1 << 61) - 1;

fn mod_mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

fn mod_pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mod_mul(r, a);
        }
        a = mod_mul(a, a);
        e >>= 1;
    }
    r
}

/// Image of `q` in `Z/p`, or `None` if `p` divides the denominator.
pub fn rational_mod_p(q: &Rational) -> Option<u64> {
    let m = BigInt::from(MODULUS);
    let reduce = |x: &BigInt| -> u64 {
        let r = ((x % &m) + &m) % &m;
        r.iter_u64_digits().next().unwrap_or(0)
    };
    let d = reduce(q.denom());
    (d != 0).then(|| mod_mul(reduce(q.numer()), mod_pow(d, MODULUS - 2)))
}

/// Rank of a matrix over `Z/p` (rows are consumed).
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    rows.retain(|r| r.iter().any(|&x| x != 0));
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = mod_pow(rows[rank][col], MODULUS - 2);
        for v in rows[rank].iter_mut() {
            *v = mod_mul(*v, inv);
        }
        let pivot_row = core::mem::take(&mut rows[rank]);
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if *p != 0 {
                    *x = (*x + MODULUS - mod_mul(f, *p)) % MODULUS;
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Exact rank of a rational matrix. Tries `Z/p` first and falls back to
/// rational elimination only when the modular rank is not maximal.
pub fn certified_rank(m: &Matrix<Rational>) -> usize {
    let full = m.rows().min(m.cols());
    let rows: Option<Vec<Vec<u64>>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(rational_mod_p).collect()).collect();
    if let Some(rows) = rows {
        if rank_mod_p(rows) == full {
            return full;
        }
    }
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::vec;

    #[test]
    fn agrees_with_exact_rank() {
        let m = Matrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![rat(1, 3), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(certified_rank(&m), 2);
        assert_eq!(certified_rank(&Matrix::identity_like(&int(0), 4)), 4);
        assert_eq!(rational_mod_p(&rat(-1, 2)), Some((MODULUS - 1) / 2));
    }
}
