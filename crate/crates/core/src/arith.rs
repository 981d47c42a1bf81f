//! Small integer helpers: gcd, primality, factorization, modular powers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`, as `(p^e, e)`.
pub fn p_part(mut n: u64, p: u64) -> (u64, u32) {
    let mut part = 1;
    let mut e = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        part *= p;
        e += 1;
    }
    (part, e)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

/// Multiplicative order of `k` modulo `n`, or `None` when `gcd(k, n) != 1`.
pub fn multiplicative_order(k: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(k % n, n) != 1 {
        return None;
    }
    let mut x = k % n;
    let mut ord = 1;
    while x != 1 {
        x = x * k % n;
        ord += 1;
    }
    Some(ord)
}

/// Primes in ascending order, skipping any listed in `avoid`.
pub fn primes_avoiding(avoid: &[u64]) -> impl Iterator<Item = u64> + '_ {
    (2..).filter(move |&n| is_prime(n) && !avoid.contains(&n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_multiplies_back() {
        for n in 1..2000u64 {
            let prod: u64 = factorize(n).iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn orders_mod_n() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(5, 8), Some(2));
        assert_eq!(multiplicative_order(2, 5), Some(4));
        assert_eq!(multiplicative_order(2, 4), None);
        assert_eq!(pow_mod(4, 3, 9), 1);
    }

    #[test]
    fn fresh_primes() {
        let got: Vec<u64> = primes_avoiding(&[2, 3]).take(3).collect();
        assert_eq!(got, vec![5, 7, 11]);
        assert_eq!(p_part(392, 7), (49, 2));
    }
}
