//! Small number-theoretic helpers shared by the engines.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn gcd_all<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    values.into_iter().fold(0, gcd)
}

/// `base^exp mod modulus` for machine-sized operands. `modulus == 1` yields 0.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = (base as u128) % m;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// `p mod modulus` for an arbitrary-precision `p`.
pub fn reduce(p: &BigUint, modulus: u64) -> u64 {
    (p % modulus).to_u64().expect("residue fits in u64")
}

/// Inverse of `a` modulo `m`, if it exists. Modulo 1 every value is invertible (to 0).
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let ext = (a as i128).extended_gcd(&(m as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of `a` modulo `m`; requires `gcd(a, m) = 1`. Modulo 1 the order is 1.
pub fn multiplicative_order(a: u64, m: u64) -> u64 {
    assert_eq!(gcd(a % m.max(1), m), 1, "order requires a unit");
    if m == 1 {
        return 1;
    }
    let a = a % m;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % m as u128) as u64;
        k += 1;
    }
    k
}

/// The residues `a^0, a^1, …, a^{ord-1}` modulo `m`, in exponent order.
pub fn cyclic_subgroup(a: u64, m: u64) -> Vec<u64> {
    let ord = multiplicative_order(a, m);
    let mut out = Vec::with_capacity(ord as usize);
    let mut x = 1 % m;
    for _ in 0..ord {
        out.push(x);
        x = ((x as u128 * (a % m) as u128) % m as u128) as u64;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            while n.is_multiple_of(f) {
                n /= f;
            }
            result -= result / f;
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller-Rabin with the first thirteen primes as witnesses. Deterministic below
/// 3.3 * 10^24, which covers every `u64`.
pub fn is_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &w in &WITNESSES {
        let w = BigUint::from(w);
        if *n == w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_order() {
        assert_eq!(mod_inverse(5, 6), Some(5));
        assert_eq!(mod_inverse(2, 6), None);
        assert_eq!(mod_inverse(7, 1), Some(0));
        assert_eq!(multiplicative_order(2, 3), 2);
        assert_eq!(multiplicative_order(7, 6), 1);
        assert_eq!(multiplicative_order(3, 1), 1);
        assert_eq!(cyclic_subgroup(5, 12), vec![1, 5]);
        assert_eq!(cyclic_subgroup(3, 10), vec![1, 3, 9, 7]);
        assert_eq!(cyclic_subgroup(7, 1), vec![0]);
    }

    #[test]
    fn primes() {
        let primes: Vec<u64> = (0..60).filter(|&k| is_prime(&BigUint::from(k))).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(&BigUint::from(1_000_000_007u64)));
        assert!(!is_prime(&BigUint::from(3_215_031_751u64))); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn binomials_and_totient() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(12, 0), BigInt::one());
        let phis: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(phis, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(pow_mod(7, 3, 6), 1);
        assert_eq!(pow_mod(5, 0, 1), 0);
    }
}
