//! Small exact integer helpers shared across modules.

pub(crate) fn is_prime(m: u32) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= m as u64 {
        if m % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Writes m = p^k with p prime, k >= 1, if possible.
pub(crate) fn prime_power(m: u32) -> Option<(u32, u32)> {
    if m < 2 {
        return None;
    }
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= m as u64 {
        if m % p == 0 {
            let mut rest = m;
            let mut k = 0;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return (rest == 1).then_some((p, k));
        }
        p += 1;
    }
    Some((m, 1))
}

/// Ceiling of a/b for positive b.
pub(crate) fn ceil_div(a: u128, b: u128) -> u128 {
    a.div_ceil(b)
}

pub(crate) fn pow_u128(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// a^e mod p.
pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// Multiplicative inverse mod prime p.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..60).filter(|&m| is_prime(m)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn modular_inverse() {
        for p in [2u64, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }
}
