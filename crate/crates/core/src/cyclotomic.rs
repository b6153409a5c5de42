//! Exact arithmetic in the cyclotomic fields Q(zeta_N).
//!
//! An element is stored by its coordinates in the power basis
//! `1, z, ..., z^(phi(N)-1)` with `z = exp(2 pi i / N)`, which makes the
//! representation canonical.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: u32 = 960;

#[derive(Debug)]
struct CycField {
    phi: usize,
    /// `powers[k]` = coordinates of `z^k` for `0 <= k < order`.
    powers: Vec<Vec<i64>>,
}

fn int_poly_divexact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // Both lowest degree first; den monic.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = int_poly_divexact(&p, &cyclotomic_poly(d));
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn field(order: u32) -> Arc<CycField> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&order) {
        return f.clone();
    }
    let poly = cyclotomic_poly(order);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by z: shift up, then fold z^phi = -(poly - z^phi)
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
    }
    let f = Arc::new(CycField { phi, powers });
    cache.lock().unwrap().insert(order, f.clone());
    f
}

/// An element of Q(zeta_N).
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u32,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    fn check_order(order: u32) -> Result<()> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("cyclotomic order {order} outside 1..={MAX_ORDER}")));
        }
        Ok(())
    }

    pub fn zero(order: u32) -> Result<Self> {
        Self::check_order(order)?;
        let phi = field(order).phi;
        Ok(Cyclotomic { order, coords: vec![BigRational::zero(); phi] })
    }

    pub fn from_rational(order: u32, x: BigRational) -> Result<Self> {
        let mut out = Self::zero(order)?;
        out.coords[0] = x;
        Ok(out)
    }

    pub fn from_int(order: u32, x: i64) -> Result<Self> {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(x)))
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_int(order, 1)
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Result<Self> {
        Self::check_order(order)?;
        let f = field(order);
        let k = k.rem_euclid(order as i64) as usize;
        Ok(Cyclotomic {
            order,
            coords: f.powers[k].iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        })
    }

    /// `sqrt(2) = z^(N/8) + z^(-N/8)`, needs `8 | N`.
    pub fn sqrt2(order: u32) -> Result<Self> {
        if order % 8 != 0 {
            return Err(Error::InvalidParameter(format!("sqrt(2) needs 8 | {order}")));
        }
        let e = (order / 8) as i64;
        Ok(&Self::zeta_pow(order, e)? + &Self::zeta_pow(order, -e)?)
    }

    /// `i = z^(N/4)`, needs `4 | N`.
    pub fn imag_unit(order: u32) -> Result<Self> {
        if order % 4 != 0 {
            return Err(Error::InvalidParameter(format!("i needs 4 | {order}")));
        }
        Self::zeta_pow(order, (order / 4) as i64)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn expect_rational(&self) -> Result<BigRational> {
        self.to_rational().ok_or_else(|| Error::NotRational(self.to_string()))
    }

    /// Folds a coefficient vector indexed by powers of `z` modulo N.
    fn from_power_sums(order: u32, acc: Vec<BigRational>) -> Self {
        let f = field(order);
        let mut coords = vec![BigRational::zero(); f.phi];
        for (k, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in f.powers[k].iter().enumerate() {
                match p {
                    0 => {}
                    1 => coords[j] += &c,
                    -1 => coords[j] -= &c,
                    _ => coords[j] += &c * BigRational::from_integer(p.into()),
                }
            }
        }
        Cyclotomic { order, coords }
    }

    /// `self * z^k`.
    pub fn mul_zeta(&self, k: i64) -> Self {
        let n = self.order as i64;
        let mut acc = vec![BigRational::zero(); self.order as usize];
        for (j, c) in self.coords.iter().enumerate() {
            acc[(j as i64 + k).rem_euclid(n) as usize] += c;
        }
        Self::from_power_sums(self.order, acc)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Cyclotomic { order: self.order, coords: self.coords.iter().map(|c| c * s).collect() }
    }

    /// Complex conjugate, `z -> z^(-1)`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut acc = vec![BigRational::zero(); n];
        for (j, c) in self.coords.iter().enumerate() {
            acc[(n - j) % n] += c;
        }
        Self::from_power_sums(self.order, acc)
    }

    /// Re-expresses the element in Q(zeta_M) for a multiple `M` of the order.
    pub fn lift(&self, to: u32) -> Result<Self> {
        if to % self.order != 0 {
            return Err(Error::InvalidParameter(format!("{} does not divide {to}", self.order)));
        }
        Self::check_order(to)?;
        let step = (to / self.order) as usize;
        let mut acc = vec![BigRational::zero(); to as usize];
        for (j, c) in self.coords.iter().enumerate() {
            acc[j * step] = c.clone();
        }
        Ok(Self::from_power_sums(to, acc))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut result = Self::one(self.order).expect("valid order");
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn same_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{}", self.order)?,
                _ => write!(f, "({c})*z{}^{j}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.same_order(rhs);
        Cyclotomic {
            order: self.order,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.same_order(rhs);
        Cyclotomic {
            order: self.order,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.same_order(rhs);
        let n = self.order as usize;
        let mut acc = vec![BigRational::zero(); n];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc[(i + j) % n] += a * b;
            }
        }
        Cyclotomic::from_power_sums(self.order, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `q^(n/2)` for `q = 2^r`, as an element of Q(zeta_N) with `8 | N`.
pub fn sqrt_q_pow(order: u32, r: u32, n: u64) -> Result<Cyclotomic> {
    let e = r as u64 * n;
    let int = BigRational::from_integer(BigInt::one() << (e / 2));
    if e % 2 == 0 {
        Cyclotomic::from_rational(order, int)
    } else {
        Ok(Cyclotomic::sqrt2(order)?.scale(&int))
    }
}
