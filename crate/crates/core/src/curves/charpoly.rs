//! Factored characteristic polynomials of Frobenius for the combined curves.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Family;
use crate::arith::{big_pow, pow2};
use crate::error::{Error, Result};

/// Monic polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn from_i64(cs: &[i64]) -> Self {
        IntPoly(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.0.last().is_some_and(|c| c.is_one())
    }

    /// Power sums `S_0..=S_upto` of the roots, by Newton's identities.
    pub fn power_sums(&self, upto: usize) -> Vec<BigInt> {
        let d = self.degree();
        // X^d + c_1 X^(d-1) + ... + c_d
        let c: Vec<BigInt> = (0..=d).map(|i| self.0[d - i].clone()).collect();
        let mut s = Vec::with_capacity(upto + 1);
        s.push(BigInt::from(d));
        for k in 1..=upto {
            let mut acc = BigInt::zero();
            for i in 1..=(k - 1).min(d) {
                acc += &c[i] * &s[k - i];
            }
            if k <= d {
                acc += &c[k] * BigInt::from(k);
            }
            s.push(-acc);
        }
        s
    }

    fn mulmod(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree();
        let mut prod = vec![BigInt::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (d..prod.len()).rev() {
            let lead = std::mem::take(&mut prod[k]);
            if lead.is_zero() {
                continue;
            }
            for i in 0..d {
                prod[k - d + i] -= &lead * &self.0[i];
            }
        }
        prod.truncate(d);
        prod
    }

    /// `X^e mod self`, coefficients lowest first, length `degree`.
    pub fn x_pow_mod(&self, e: u64) -> Vec<BigInt> {
        let d = self.degree();
        let mut result = vec![BigInt::zero(); d];
        let mut base = vec![BigInt::zero(); d];
        if d == 0 {
            return result;
        }
        result[0] = BigInt::one();
        if d == 1 {
            base[0] = -&self.0[0];
        } else {
            base[1] = BigInt::one();
        }
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mulmod(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mulmod(&base, &base);
            }
        }
        result
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

/// A factored characteristic polynomial: `prod f_j^(m_j)` over `q = 2^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusData {
    pub r: u32,
    pub factors: Vec<(IntPoly, BigInt)>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FactorView {
    pub factor: String,
    pub coefficients: Vec<String>,
    pub multiplicity: String,
}

impl FrobeniusData {
    pub fn degree(&self) -> BigInt {
        self.factors.iter().map(|(p, m)| BigInt::from(p.degree()) * m).sum()
    }

    pub fn view(&self) -> Vec<FactorView> {
        self.factors
            .iter()
            .map(|(p, m)| FactorView {
                factor: p.to_string(),
                coefficients: p.0.iter().map(|c| c.to_string()).collect(),
                multiplicity: m.to_string(),
            })
            .collect()
    }

    /// `S_0..=S_upto` for the full root multiset.
    pub fn power_sums(&self, upto: usize) -> Vec<BigInt> {
        let mut total = vec![BigInt::zero(); upto + 1];
        for (p, m) in &self.factors {
            for (t, s) in total.iter_mut().zip(p.power_sums(upto)) {
                *t += s * m;
            }
        }
        total
    }

    /// `q^n + 1 - S_n`.
    pub fn predicted_count(&self, n: u64) -> BigInt {
        let s = power_sum_sequence(self, n);
        pow2(self.r as u64 * n) + 1 - s
    }
}

fn ratio(num: BigInt, den: i64) -> BigRational {
    BigRational::new(num, BigInt::from(den))
}

/// Factored characteristic polynomial of Frobenius for the combined curve of
/// `family` over GF(2^r), validated for integral multiplicities and degree.
pub fn frobenius_charpoly(family: Family, r: u32) -> Result<FrobeniusData> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let q = pow2(r as u64);
    let q2 = &q * &q;
    let z = BigInt::zero;
    let one = BigInt::one;
    let quad = |b: &BigInt| IntPoly(vec![q.clone(), b.clone(), one()]);
    let lin = |c: &BigInt| IntPoly(vec![c.clone(), one()]);
    let mut raw: Vec<(IntPoly, BigRational)> = Vec::new();
    let qm1 = &q - 1;
    if r % 2 == 1 {
        let s = pow2((r as u64 + 1) / 2);
        let c1 = |raw: &mut Vec<(IntPoly, BigRational)>| {
            raw.push((quad(&-&s), ratio(&qm1 * (&q - &s), 4)));
            raw.push((quad(&s), ratio(&qm1 * (&q + &s), 4)));
        };
        match family {
            Family::C1 => c1(&mut raw),
            Family::C2 => {
                c1(&mut raw);
                raw.push((quad(&z()), ratio(&qm1 * &q, 2)));
            }
            Family::C3 => {
                let qm2 = &q - 2;
                let qp1 = &q + 1;
                raw.push((IntPoly(vec![-&q, z(), one()]), ratio(&qm2 * &q, 8)));
                raw.push((quad(&z()), ratio(&qm2 * &q, 8)));
                raw.push((quad(&-&s), ratio(&qm2 * (&q * 5 - &s * 4), 24)));
                raw.push((quad(&s), ratio(&qm2 * (&q * 5 + &s * 4), 24)));
                let qs = &q * &s;
                raw.push((
                    IntPoly(vec![q2.clone(), -&qs, q.clone(), -&s, one()]),
                    ratio(&qp1 * (&q - &s), 12),
                ));
                raw.push((IntPoly(vec![q2.clone(), qs.clone(), q.clone(), s.clone(), one()]), ratio(&qp1 * (&q + &s), 12)));
            }
        }
    } else {
        let t = pow2(r as u64 / 2);
        let t2 = &t * 2;
        match family {
            Family::C1 => {
                raw.push((lin(&-&t), ratio(&qm1 * (&q - &t2), 4)));
                raw.push((lin(&t), ratio(&qm1 * (&q + &t2), 4)));
                raw.push((quad(&z()), ratio(&qm1 * &q, 4)));
            }
            Family::C2 => {
                raw.push((lin(&-&t), ratio(&qm1 * (&q - &t2), 12)));
                raw.push((lin(&t), ratio(&qm1 * (&q + &t2), 12)));
                raw.push((quad(&-&t), ratio(&qm1 * (&q - &t), 3)));
                raw.push((quad(&t), ratio(&qm1 * (&q + &t), 3)));
                raw.push((quad(&z()), ratio(&qm1 * &q, 4)));
            }
            Family::C3 => {
                let q5 = &q * 5;
                raw.push((lin(&-&t), ratio((&q - &t2) * (&q5 + &t2 - 4), 24)));
                raw.push((lin(&t), ratio((&q + &t2) * (&q5 - &t2 - 4), 24)));
                raw.push((quad(&z()), ratio(&q * (&q5 - 8), 24)));
                raw.push((IntPoly(vec![q2.clone(), z(), z(), z(), one()]), ratio(q2.clone(), 8)));
                raw.push((IntPoly(vec![q2.clone(), z(), -&q, z(), one()]), ratio(&qm1 * &q, 12)));
                raw.push((quad(&-&t), ratio(&qm1 * (&q - &t2), 12)));
                raw.push((quad(&t), ratio(&qm1 * (&q + &t2), 12)));
            }
        }
    }
    let mut factors = Vec::new();
    for (p, m) in raw {
        if !m.is_integer() || m.is_negative() {
            return Err(Error::InvalidCharpoly(format!("multiplicity {m} of {p}")));
        }
        let m = m.to_integer();
        if !m.is_zero() {
            factors.push((p, m));
        }
    }
    let fd = FrobeniusData { r, factors };
    let want = family.genus(r) * 2;
    if fd.degree() != want {
        return Err(Error::InvalidCharpoly(format!("degree {} but 2g = {want}", fd.degree())));
    }
    Ok(fd)
}

/// `S_n`, the n-th power sum of the Frobenius eigenvalues.
pub fn power_sum_sequence(fd: &FrobeniusData, n: u64) -> BigInt {
    fd.power_sums(n as usize).pop().expect("nonempty")
}

/// Whether every factor divides `X^48 - q^24`.
pub fn supersingularity_certificate(fd: &FrobeniusData) -> bool {
    let target = big_pow(&pow2(fd.r as u64), 24);
    fd.factors.iter().all(|(p, _)| {
        let rem = p.x_pow_mod(48);
        rem.first() == Some(&target) && rem.iter().skip(1).all(|c| c.is_zero())
    })
}
