//! Small number-theoretic helpers: deterministic primality for `u64`,
//! modular arithmetic and integer factorization for moderate sizes.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Deterministic primality test for all `u64`.
///
/// Below 2^32 this is trial division; above, Miller-Rabin with the first
/// twelve prime bases, which is exact for every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 1u64 << 32 {
        if n < 4 {
            return true;
        }
        if n.is_multiple_of(2) {
            return false;
        }
        let mut d = 3u64;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 2;
        }
        return true;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if BASES.iter().any(|&b| n.is_multiple_of(b)) {
        return false;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_probable_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    const BASES: [u32; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    'witness: for &a in &BASES {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return false;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

fn factor_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime_big(&n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(&n);
    let other = &n / &d;
    factor_into(d, out);
    factor_into(other, out);
}

/// Distinct prime factors of `|n|`, ascending. Empty for 0 and ±1.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();
    if m.is_zero() {
        return Vec::new();
    }
    let mut p = 2u32;
    while p < 10_000 {
        let bp = BigUint::from(p);
        if (&m % &bp).is_zero() {
            primes.push(bp.clone());
            while (&m % &bp).is_zero() {
                m /= &bp;
            }
        }
        if m.is_one() {
            break;
        }
        if (p as u64) * (p as u64) > m.to_u64().unwrap_or(u64::MAX) {
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        factor_into(m, &mut primes);
    }
    primes.sort();
    primes.dedup();
    primes
        .into_iter()
        .map(|p| BigInt::from_biguint(Sign::Plus, p))
        .collect()
}

/// All positive divisors of `|n|` (n ≠ 0), ascending.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.magnitude().clone();
    let mut divs = vec![BigInt::one()];
    for p in prime_factors(n) {
        let p_u = p.magnitude().clone();
        let mut power = 0usize;
        while (&m % &p_u).is_zero() {
            m /= &p_u;
            power += 1;
        }
        let mut next = Vec::with_capacity(divs.len() * (power + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..power {
                acc *= &p;
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_and_large() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert!(is_prime_u64(4_294_967_311)); // smallest prime above 2^32
        assert!(!is_prime_u64(4_294_967_297)); // 641 * 6700417
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest 64-bit prime
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn inverse_mod_three() {
        // 2 * 2 = 4 = 1 mod 3
        assert_eq!(inv_mod(2, 3), Some(2));
        assert_eq!(inv_mod(2, 4), None);
    }

    #[test]
    fn factors_and_divisors() {
        let n = BigInt::from(360);
        assert_eq!(
            prime_factors(&n),
            vec![BigInt::from(2), BigInt::from(3), BigInt::from(5)]
        );
        assert_eq!(divisors(&n).len(), 24);
        let big = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        assert_eq!(
            prime_factors(&big),
            vec![BigInt::from(1_000_003u64), BigInt::from(998_244_353u64)]
        );
        assert!(prime_factors(&BigInt::from(-1)).is_empty());
    }
}
