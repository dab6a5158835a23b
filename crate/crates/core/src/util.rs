//! Small integer helpers used across modules.

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of n, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m > 1);
    let mut acc: u64 = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// p^e as u64, or None on overflow.
pub(crate) fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

/// p^e as i128; panics only far outside the supported parameter range.
pub(crate) fn ipow(p: u64, e: u32) -> i128 {
    let mut acc: i128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p as i128).expect("exponent overflow");
    }
    acc
}

/// Smallest generator of (Z/p)^*.
pub(crate) fn smallest_primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&r| modpow(g, (p - 1) / r, p) != 1))
        .expect("a prime field has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(3) && is_prime(5) && is_prime(625_621));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(80), vec![2, 5]);
        assert_eq!(prime_factors(624), vec![2, 3, 13]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(smallest_primitive_root(3), 2);
        assert_eq!(smallest_primitive_root(5), 2);
        assert_eq!(smallest_primitive_root(7), 3);
    }
}
