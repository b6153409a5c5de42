//! Weighted power sums `sum_j w_j (sqrt(q) z^k_j)^n` with `z` a primitive
//! 24th root of unity, evaluated exactly in Q(zeta_24).

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::{sqrt_q_pow, Cyclotomic};
use crate::error::Result;

pub const ORDER: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSum {
    /// `q = 2^r`.
    pub r: u32,
    /// Pairs `(weight, k)`.
    pub terms: Vec<(Cyclotomic, u32)>,
}

impl EigenSum {
    pub fn new(r: u32) -> Self {
        EigenSum { r, terms: Vec::new() }
    }

    pub fn push(&mut self, w: Cyclotomic, k: u32) -> &mut Self {
        self.terms.push((w, k % ORDER));
        self
    }

    /// Adds `w` on each of the listed angles.
    pub fn push_all(&mut self, w: &Cyclotomic, ks: &[u32]) -> &mut Self {
        for &k in ks {
            self.push(w.clone(), k);
        }
        self
    }

    pub fn scale(&self, s: &Cyclotomic) -> EigenSum {
        EigenSum { r: self.r, terms: self.terms.iter().map(|(w, k)| (w * s, *k)).collect() }
    }

    pub fn extend(&mut self, other: &EigenSum) {
        assert_eq!(self.r, other.r);
        self.terms.extend(other.terms.iter().cloned());
    }

    /// `sum_j w_j z^(k_j n)`, without the `q^(n/2)` factor.
    pub fn unit_part(&self, n: u64) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(ORDER).expect("valid order");
        for (w, k) in &self.terms {
            let e = ((*k as u64 * (n % ORDER as u64)) % ORDER as u64) as i64;
            acc = &acc + &w.mul_zeta(e);
        }
        acc
    }

    pub fn eval(&self, n: u64) -> Result<Cyclotomic> {
        Ok(&self.unit_part(n) * &sqrt_q_pow(ORDER, self.r, n)?)
    }

    pub fn eval_rational(&self, n: u64) -> Result<BigRational> {
        self.eval(n)?.expect_rational()
    }

    pub fn eval_integer(&self, n: u64) -> Result<BigInt> {
        crate::arith::to_integer(&self.eval_rational(n)?)
    }
}

/// Shorthands for weights in Q(zeta_24).
pub mod w {
    use super::ORDER;
    use crate::cyclotomic::Cyclotomic;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    pub fn rat(num: i64, den: i64) -> Cyclotomic {
        Cyclotomic::from_rational(ORDER, BigRational::new(BigInt::from(num), BigInt::from(den))).unwrap()
    }

    pub fn big(x: BigRational) -> Cyclotomic {
        Cyclotomic::from_rational(ORDER, x).unwrap()
    }

    pub fn i() -> Cyclotomic {
        Cyclotomic::imag_unit(ORDER).unwrap()
    }

    pub fn sqrt2() -> Cyclotomic {
        Cyclotomic::sqrt2(ORDER).unwrap()
    }
}
