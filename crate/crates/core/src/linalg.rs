//! Exact matrix rank, over the rationals or a prime field.
//!
//! Homology ranks reduce to integer matrix ranks. Over Q we use Bareiss
//! fraction-free elimination with full pivoting: all intermediate entries are
//! minors of the input, divisions are exact, and big integers rule out
//! overflow. The prime-field path is plain modular elimination.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficient field for homology computations. `Q` is the default; betti
/// numbers can depend on the characteristic, so `Fp` is exposed for
/// experiments.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Field {
    #[default]
    Q,
    Fp(u32),
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Q => write!(f, "0"),
            Field::Fp(p) => write!(f, "{p}"),
        }
    }
}

/// Rank of an integer matrix over the given field. Rows may be empty; all
/// rows must share a length.
pub fn rank(field: Field, rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    debug_assert!(rows.iter().all(|r| r.len() == rows[0].len()));
    match field {
        Field::Q => rank_over_q(rows),
        Field::Fp(p) => rank_mod_p(rows, u64::from(p)),
    }
}

fn rank_over_q(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut prev = BigInt::one();
    let mut k = 0;
    while k < nr.min(nc) {
        // smallest nonzero entry of the trailing submatrix as pivot, to keep
        // the exact-division intermediates small
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                if m[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if m[pi][pj].abs() <= m[i][j].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
        }
        for i in k + 1..nr {
            for j in k + 1..nc {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact: Bareiss invariant
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
        k += 1;
    }
    k
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    debug_assert!(p >= 2);
    let reduce = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| reduce(v)).collect())
        .collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut rank = 0;
    let mut col = 0;
    while rank < nr && col < nc {
        let Some(pivot_row) = (rank..nr).find(|&i| m[i][col] != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = mod_inverse(m[rank][col], p);
        for entry in &mut m[rank][col..] {
            *entry = mulmod(*entry, inv, p);
        }
        for i in 0..nr {
            if i != rank && m[i][col] != 0 {
                let factor = m[i][col];
                let (pivot_slice, row) = if i < rank {
                    let (a, b) = m.split_at_mut(rank);
                    (&b[0][col..], &mut a[i][col..])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[rank][col..], &mut b[0][col..])
                };
                for (entry, &lead) in row.iter_mut().zip(pivot_slice) {
                    let sub = mulmod(factor, lead, p);
                    *entry = (*entry + p - sub) % p;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    powmod(a, p - 2, p)
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test by trial division; fine for CLI validation.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_of_fixed_matrices() {
        assert_eq!(rank(Field::Q, &[]), 0);
        assert_eq!(rank(Field::Q, &[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(Field::Q, &[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank(Field::Q, &[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(
            rank(Field::Q, &[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]),
            2
        );
        // triangle boundary map: rank 2
        let triangle = vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]];
        assert_eq!(rank(Field::Q, &triangle), 2);
    }

    #[test]
    fn characteristic_can_lower_the_rank() {
        assert_eq!(rank(Field::Q, &[vec![2]]), 1);
        assert_eq!(rank(Field::Fp(2), &[vec![2]]), 0);
        assert_eq!(rank(Field::Fp(3), &[vec![2]]), 1);
    }

    #[test]
    fn primality_checks() {
        let primes: Vec<u64> = (0..=30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483649));
    }

    fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-4i64..5, c), r)
        })
    }

    proptest! {
        #[test]
        fn rank_is_bounded_and_transpose_invariant(m in arb_matrix()) {
            let r = rank(Field::Q, &m);
            prop_assert!(r <= m.len().min(m[0].len()));
            let t: Vec<Vec<i64>> = (0..m[0].len())
                .map(|j| m.iter().map(|row| row[j]).collect())
                .collect();
            prop_assert_eq!(rank(Field::Q, &t), r);
        }

        #[test]
        fn modular_rank_never_exceeds_rational_rank(m in arb_matrix()) {
            prop_assert!(rank(Field::Fp(5), &m) <= rank(Field::Q, &m));
            prop_assert!(rank(Field::Fp(2), &m) <= rank(Field::Q, &m));
        }
    }
}
