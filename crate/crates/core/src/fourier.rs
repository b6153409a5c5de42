//! Exact discrete Fourier analysis of periodic normalized counting sequences.
//!
//! A sequence `f(n)` is modelled as `q^(n/2) sum_k g_k w^(kn)` with `w` a
//! primitive `P`-th root of unity. All arithmetic happens in Q(zeta_N) with
//! `N = lcm(P, 8)`, which contains `sqrt(2)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::arith::divisors;
use crate::cyclotomic::{sqrt_q_pow, Cyclotomic};
use crate::error::{Error, Result};

/// Largest supported period.
pub const MAX_PERIOD: u32 = 120;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicFormula {
    pub period: u32,
    /// Order of the cyclotomic field holding the coefficients.
    pub order: u32,
    /// `q = 2^r`, used only when turning normalized values into counts.
    pub r: u32,
    pub coeffs: Vec<Cyclotomic>,
}

pub fn field_order(period: u32) -> u32 {
    period.lcm(&8)
}

fn check_period(period: u32) -> Result<()> {
    if period == 0 || period > MAX_PERIOD {
        return Err(Error::InvalidParameter(format!("period {period} outside 1..={MAX_PERIOD}")));
    }
    Ok(())
}

/// `g_k = (1/P) sum_j v_j w^(-jk)`, where `values[j]` is the normalized value
/// at any `n = j (mod P)`. Values may live in any Q(zeta_M) with `M | N`.
pub fn dft_extract(values: &[Cyclotomic], r: u32) -> Result<PeriodicFormula> {
    let period = values.len() as u32;
    check_period(period)?;
    let order = field_order(period);
    let step = (order / period) as i64;
    let lifted: Vec<Cyclotomic> = values.iter().map(|v| v.lift(order)).collect::<Result<_>>()?;
    let inv_p = BigRational::new(BigInt::one(), BigInt::from(period));
    let coeffs = (0..period as i64)
        .map(|k| {
            let mut acc = Cyclotomic::zero(order)?;
            for (j, v) in lifted.iter().enumerate() {
                acc = &acc + &v.mul_zeta(-step * j as i64 * k);
            }
            Ok(acc.scale(&inv_p))
        })
        .collect::<Result<_>>()?;
    Ok(PeriodicFormula { period, order, r, coeffs })
}

/// [`dft_extract`] for rational normalized values.
pub fn dft_extract_rational(values: &[BigRational], r: u32) -> Result<PeriodicFormula> {
    let period = values.len() as u32;
    check_period(period)?;
    let vs: Vec<Cyclotomic> =
        values.iter().map(|v| Cyclotomic::from_rational(field_order(period), v.clone())).collect::<Result<_>>()?;
    dft_extract(&vs, r)
}

impl PeriodicFormula {
    pub fn zero(period: u32, r: u32) -> Result<Self> {
        check_period(period)?;
        let order = field_order(period);
        Ok(PeriodicFormula { period, order, r, coeffs: vec![Cyclotomic::zero(order)?; period as usize] })
    }

    pub fn zero_flags(&self) -> Vec<bool> {
        self.coeffs.iter().map(Cyclotomic::is_zero).collect()
    }

    pub fn rational_flags(&self) -> Vec<bool> {
        self.coeffs.iter().map(|c| c.to_rational().is_some()).collect()
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> Vec<u32> {
        (0..self.period).filter(|&k| !self.coeffs[k as usize].is_zero()).collect()
    }

    /// `sum_k g_k w^(kn)`.
    pub fn value(&self, n: u64) -> Cyclotomic {
        let step = (self.order / self.period) as u64;
        let mut acc = Cyclotomic::zero(self.order).expect("valid order");
        for (k, g) in self.coeffs.iter().enumerate() {
            let e = (step * ((k as u64 * (n % self.period as u64)) % self.period as u64)) as i64;
            acc = &acc + &g.mul_zeta(e);
        }
        acc
    }

    /// Normalized value at `n`; errors if it is not rational.
    pub fn reconstruct(&self, n: u64) -> Result<BigRational> {
        self.value(n).expect_rational()
    }

    /// `q^(n/2)` times the normalized value.
    pub fn reconstruct_count(&self, n: u64) -> Result<BigRational> {
        (&self.value(n) * &sqrt_q_pow(self.order, self.r, n)?).expect_rational()
    }

    /// `g_(P-k) = conj(g_k)` for all `k`.
    pub fn is_conjugate_symmetric(&self) -> bool {
        let p = self.period as usize;
        (0..p).all(|k| self.coeffs[(p - k) % p] == self.coeffs[k].conj())
    }

    /// Nonzero coefficients in serializable form.
    pub fn view(&self) -> FormulaView {
        let coefficients = self
            .support()
            .into_iter()
            .map(|k| {
                let c = &self.coeffs[k as usize];
                let rational = c.to_rational().map(|x| (x.numer().to_string(), x.denom().to_string()));
                CoefficientView { k, value: c.to_string(), rational }
            })
            .collect();
        FormulaView { period: self.period, field_order: self.order, q: crate::arith::pow2(self.r as u64).to_string(), coefficients }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CoefficientView {
    pub k: u32,
    /// Power-basis coordinates in Q(zeta_N).
    pub value: String,
    /// `(numerator, denominator)` when rational.
    pub rational: Option<(String, String)>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FormulaView {
    pub period: u32,
    pub field_order: u32,
    pub q: String,
    pub coefficients: Vec<CoefficientView>,
}

/// `sum_j v_j conj(v_j) = P sum_k g_k conj(g_k)`.
pub fn parseval_holds(values: &[Cyclotomic], f: &PeriodicFormula) -> Result<bool> {
    let mut lhs = Cyclotomic::zero(f.order)?;
    for v in values {
        let v = v.lift(f.order)?;
        lhs = &lhs + &(&v * &v.conj());
    }
    let mut rhs = Cyclotomic::zero(f.order)?;
    for g in &f.coeffs {
        rhs = &rhs + &(g * &g.conj());
    }
    Ok(lhs == rhs.scale(&BigRational::from_integer(BigInt::from(f.period))))
}

/// `f / q^(n/2)` in Q(zeta_8).
pub fn normalize(f: &BigInt, r: u32, n: u64) -> Result<Cyclotomic> {
    let e = r as u64 * n;
    let scaled = BigRational::new(f.clone(), BigInt::one() << (e / 2));
    if e % 2 == 0 {
        Cyclotomic::from_rational(8, scaled)
    } else {
        // 1/sqrt(2) = sqrt(2)/2
        Ok(Cyclotomic::sqrt2(8)?.scale(&(scaled / BigRational::from_integer(BigInt::from(2)))))
    }
}

/// Divisors of 24 and 48.
pub fn default_candidates() -> Vec<u32> {
    divisors(48).into_iter().map(|d| d as u32).collect()
}

/// Finds the least candidate period `P` for which `f(n) / q^(n/2)` is
/// `P`-periodic on `n0, n0 + 1, ...` and extracts its coefficients. A
/// candidate qualifies only if the window covers two full periods.
pub fn analyze_sequence(f: &[BigInt], n0: u64, r: u32, candidates: &[u32]) -> Result<PeriodicFormula> {
    let normalized: Vec<Cyclotomic> =
        f.iter().enumerate().map(|(i, x)| normalize(x, r, n0 + i as u64)).collect::<Result<_>>()?;
    let mut cands: Vec<u32> = candidates.to_vec();
    cands.sort_unstable();
    cands.dedup();
    for p in cands {
        check_period(p)?;
        let pu = p as usize;
        if normalized.len() < 2 * pu {
            continue;
        }
        if (0..normalized.len() - pu).any(|i| normalized[i] != normalized[i + pu]) {
            continue;
        }
        // values[j] is the normalized value at some n = j (mod P)
        let mut values = vec![None; pu];
        for (i, v) in normalized.iter().enumerate().take(pu) {
            values[((n0 + i as u64) % p as u64) as usize] = Some(v.clone());
        }
        let values: Vec<Cyclotomic> = values.into_iter().map(|v| v.expect("full period")).collect();
        return dft_extract(&values, r);
    }
    Err(Error::NoPeriod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn zero_vector() {
        let f = dft_extract_rational(&vec![BigRational::zero(); 8], 1).unwrap();
        assert!(f.zero_flags().iter().all(|&z| z));
        assert_eq!(f, PeriodicFormula::zero(8, 1).unwrap());
        assert_eq!(f.reconstruct(5).unwrap(), BigRational::zero());
    }

    #[test]
    fn constant_zero_sequence_has_period_one() {
        let f = analyze_sequence(&vec![BigInt::zero(); 10], 1, 1, &default_candidates()).unwrap();
        assert_eq!(f.period, 1);
        assert!(f.support().is_empty());
    }

    #[test]
    fn round_trip() {
        let vs = vec![rat(1, 2), rat(-3, 4), rat(0, 1), rat(5, 1), rat(1, 3), rat(0, 1)];
        let f = dft_extract_rational(&vs, 2).unwrap();
        for (n, v) in vs.iter().enumerate() {
            assert_eq!(&f.reconstruct(n as u64).unwrap(), v);
        }
        assert!(f.is_conjugate_symmetric());
    }

    #[test]
    fn aperiodic_input() {
        let f: Vec<BigInt> = (0..20).map(|i| BigInt::from(i * i)).collect();
        assert!(matches!(analyze_sequence(&f, 0, 2, &[1, 2, 4]), Err(Error::NoPeriod)));
    }
}
