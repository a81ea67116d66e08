//! Integer determinants from elimination modulo word-size primes.

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};

use super::linalg::Matrix;
use crate::par;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic for `n < 2^32` with bases 2, 7, 61.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 61] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for a in [2, 7, 61] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^31` in decreasing order whose product exceeds `2^bits`.
fn primes_covering(bits: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut covered = 0;
    let mut c = (1u64 << 31) - 1;
    while covered <= bits {
        if is_prime(c) {
            out.push(c);
            covered += 30;
        }
        c -= 2;
    }
    out
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = (x.magnitude() % p).to_u64().expect("residue fits");
    if x.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

fn det_mod(rows: &[Vec<u64>], p: u64) -> u64 {
    let mut a = rows.to_vec();
    let n = a.len();
    let mut det = 1;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = p - det;
        }
        det = mul_mod(det, a[k][k], p);
        let inv = pow_mod(a[k][k], p - 2, p);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest {
            let f = mul_mod(row[k], inv, p);
            if f == 0 {
                continue;
            }
            for j in k..n {
                row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
            }
        }
    }
    det % p
}

/// Bits of the Hadamard bound `∏ ‖row‖`.
fn hadamard_bits(m: &Matrix<BigInt>) -> u64 {
    (0..m.nrows())
        .map(|r| {
            let norm2: BigInt = m.row(r).iter().map(|x| x * x).sum();
            norm2.bits() / 2 + 1
        })
        .sum()
}

/// Exact determinant of an integer matrix: residues modulo enough primes to
/// cover twice the Hadamard bound, combined by the Chinese remainder theorem.
pub fn modular_det(m: &Matrix<BigInt>) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if m.nrows() == 0 {
        return BigInt::from(1);
    }
    let primes = primes_covering(hadamard_bits(m) + 1);
    let residues = par::map(&primes, |&p| {
        let rows: Vec<Vec<u64>> = (0..m.nrows()).map(|r| m.row(r).iter().map(|x| residue(x, p)).collect()).collect();
        det_mod(&rows, p)
    });
    let (mut x, mut modulus) = (BigInt::zero(), BigInt::from(1));
    for (&p, &r) in primes.iter().zip(&residues) {
        let t = (r + p - residue(&x, p)) % p;
        let t = mul_mod(t, pow_mod(residue(&modulus, p), p - 2, p), p);
        x += &modulus * t;
        modulus *= p;
    }
    if &x + &x > modulus {
        x -= modulus;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linalg::bareiss_det;
    use proptest::prelude::*;

    #[test]
    fn primes() {
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        assert!(!is_prime(3_215_031_751));
        assert_eq!(primes_covering(59).len(), 2);
    }

    #[test]
    fn small_cases() {
        let m = Matrix::from_rows(vec![vec![BigInt::from(2), BigInt::from(3)], vec![BigInt::from(5), BigInt::from(7)]]);
        assert_eq!(modular_det(&m), BigInt::from(-1));
        let z = Matrix::from_rows(vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(2), BigInt::from(4)]]);
        assert_eq!(modular_det(&z), BigInt::zero());
    }

    proptest! {
        #[test]
        fn agrees_with_bareiss(n in 1usize..7, seed in proptest::collection::vec(-(1i64 << 40)..(1i64 << 40), 36)) {
            let m = Matrix::from_rows((0..n).map(|r| (0..n).map(|c| BigInt::from(seed[r * 6 + c])).collect()).collect());
            prop_assert_eq!(modular_det(&m), bareiss_det(&m).unwrap());
        }
    }
}
