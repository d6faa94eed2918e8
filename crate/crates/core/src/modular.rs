//! Small exact helpers for arithmetic in Z_n.

use num_integer::Integer;

/// Canonical representative of `x` in `[0, n)`.
pub fn residue(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Inverse of `a` modulo `n` via the extended Euclidean algorithm.
pub fn inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    (e.gcd == 1).then(|| residue(e.x, n))
}

pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, n);
        }
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    acc
}

/// Least `m >= 1` with `t^m = 1 (mod n)`. `t` must be a unit.
pub fn multiplicative_order(t: u64, n: u64) -> u64 {
    let one = 1 % n;
    let mut m = 1;
    let mut x = t % n;
    while x != one {
        x = mul_mod(x, t, n);
        m += 1;
    }
    m
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&p| is_prime(p)).collect()
}

/// Units of Z_n in increasing order.
pub fn units(n: u64) -> Vec<u64> {
    (0..n).filter(|&t| gcd(t, n) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_matches_search() {
        for n in 1..60u64 {
            for a in 0..n {
                let brute = (0..n).find(|&x| mul_mod(a, x, n) == 1 % n);
                assert_eq!(inverse(a, n), brute, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(2, 5), 4);
        assert_eq!(multiplicative_order(2, 7), 3);
        assert_eq!(multiplicative_order(1, 9), 1);
        assert_eq!(multiplicative_order(0, 1), 1);
    }

    #[test]
    fn primality() {
        assert_eq!(
            primes_up_to(31),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        );
        assert!(!is_prime(91));
        assert!(is_prime(97));
    }

    #[test]
    fn residues_are_canonical() {
        assert_eq!(residue(-1, 5), 4);
        assert_eq!(residue(-10, 5), 0);
        assert_eq!(units(9), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(pow_mod(2, 10, 1000), 24);
    }
}
