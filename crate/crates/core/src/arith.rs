//! Integer helpers shared by the closed forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn prime_factors(n: u64) -> Vec<u64> {
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

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

/// `2^e` for a possibly negative exponent.
pub fn pow2_signed(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow2(e as u64))
    } else {
        BigRational::new(BigInt::one(), pow2(e.unsigned_abs()))
    }
}

pub fn big_pow(base: &BigInt, e: u64) -> BigInt {
    num_traits::pow::pow(base.clone(), e as usize)
}

/// Integer value of `x`, or `NonIntegral`.
pub fn to_integer(x: &BigRational) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral(x.to_string()))
    }
}

/// Exact division `a / b`, or `NonIntegral`.
pub fn exact_div(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::InvalidParameter("division by zero".into()));
    }
    let (q, rem) = num_integer::Integer::div_rem(a, b);
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral(format!("{a}/{b}")))
    }
}

pub fn is_nonneg_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_negative()
}

/// Serializes any displayable integer as a decimal string.
pub fn ser_decimal<T: std::fmt::Display, S: serde::Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}
