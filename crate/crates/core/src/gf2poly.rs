//! Polynomials over GF(2) of degree at most 127, packed into `u128`.

use crate::field::clmul;

pub fn degree(a: u128) -> Option<u32> {
    if a == 0 {
        None
    } else {
        Some(127 - a.leading_zeros())
    }
}

pub fn rem(a: u128, f: u128) -> u128 {
    let df = degree(f).expect("division by zero polynomial");
    let mut a = a;
    while let Some(da) = degree(a) {
        if da < df {
            break;
        }
        a ^= f << (da - df);
    }
    a
}

/// `a * b mod f` where `a`, `b` are already reduced and `deg f <= 64`.
pub fn mulmod(a: u128, b: u128, f: u128) -> u128 {
    debug_assert!(a >> 64 == 0 && b >> 64 == 0);
    rem(clmul(a as u64, b as u64), f)
}

pub fn gcd(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = rem(a, b);
        a = b;
        b = t;
    }
    a
}

fn prime_divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test, for degrees 1..=64.
pub fn is_irreducible(f: u128) -> bool {
    let Some(m) = degree(f) else { return false };
    if m == 0 || m > 64 {
        return false;
    }
    if m == 1 {
        return true;
    }
    if f & 1 == 0 {
        return false;
    }
    let x = 0b10u128;
    // powers[i] = x^(2^i) mod f
    let mut powers = Vec::with_capacity(m as usize + 1);
    let mut h = x;
    powers.push(h);
    for _ in 0..m {
        h = mulmod(h, h, f);
        powers.push(h);
    }
    if powers[m as usize] != x {
        return false;
    }
    prime_divisors(m)
        .into_iter()
        .all(|l| gcd(f, powers[(m / l) as usize] ^ x) == 1)
}

/// Smallest irreducible of degree `m` with nonzero constant term, by integer value.
pub fn smallest_irreducible(m: u32) -> u128 {
    let top = 1u128 << m;
    (0..top)
        .map(|low| top | low)
        .filter(|f| f & 1 == 1)
        .find(|&f| is_irreducible(f))
        .expect("irreducible polynomials exist in every degree")
}
