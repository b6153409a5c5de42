//! Closed forms for irreducible counts and trace-class counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{big_pow, divisors, exact_div, mobius, pow2, to_integer};
use crate::eigensum::{w, EigenSum};
use crate::error::{Error, Result};
use crate::symbolic::{self as sym, eval_row, Row};

/// Which closed form produced a value, and at which residue row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub source: &'static str,
    pub residue: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountFormulaResult {
    pub value: BigInt,
    pub provenance: Provenance,
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

/// Number of monic irreducible polynomials of degree `n` over GF(q).
pub fn gauss_i(q: &BigInt, n: u64) -> Result<BigInt> {
    need(n >= 1, "n must be at least 1")?;
    let mut acc = BigInt::zero();
    for d in divisors(n) {
        let mu = mobius(d);
        if mu != 0 {
            acc += big_pow(q, n / d) * mu;
        }
    }
    exact_div(&acc, &BigInt::from(n))
}

/// `(1/(q n)) sum_{d | n, d odd} mu(d) q^(n/d)` as an exact rational.
pub fn carlitz_sum(q: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::zero();
    for d in divisors(n).into_iter().filter(|d| d % 2 == 1) {
        let mu = mobius(d);
        if mu != 0 {
            acc += num_traits::pow::pow(q.clone(), (n / d) as usize) * BigRational::from_integer(mu.into());
        }
    }
    acc / (q * BigRational::from_integer(n.into()))
}

/// Number of monic irreducibles of degree `n` over GF(q) with the given
/// coefficient of `x^(n-1)`; only whether `t1` is zero matters.
pub fn carlitz_i(q: &BigInt, n: u64, t1_nonzero: bool) -> Result<BigInt> {
    need(n >= 1, "n must be at least 1")?;
    let one_class = to_integer(&carlitz_sum(&BigRational::from_integer(q.clone()), n))?;
    if t1_nonzero {
        Ok(one_class)
    } else {
        Ok(gauss_i(q, n)? - (q - BigInt::one()) * one_class)
    }
}

const T1_SOURCES: [&str; 4] = ["f2(n,0,0)", "f2(n,0,1)", "f2(n,1,0)", "f2(n,1,1)"];

fn table1_column(t1: u8, t2: u8) -> &'static [Row; 8] {
    match (t1, t2) {
        (0, 0) => &sym::TABLE1_00,
        (0, 1) => &sym::TABLE1_01,
        (1, 0) => &sym::TABLE1_10,
        _ => &sym::TABLE1_11,
    }
}

fn table2_column(t2: u8, t3: u8) -> &'static [Row; 24] {
    match (t2, t3) {
        (0, 0) => &sym::TABLE2_000,
        (0, 1) => &sym::TABLE2_001,
        (1, 0) => &sym::TABLE2_010,
        _ => &sym::TABLE2_011,
    }
}

fn check_bits(bits: &[u8]) -> Result<()> {
    need(bits.iter().all(|&b| b <= 1), "trace values over GF(2) are 0 or 1")
}

// Angles of the eigenvalues as multiples of 2 pi / 24.
const E3: u32 = 9;
const E5: u32 = 15;
const PLUS_I: u32 = 6;
const MINUS_I: u32 = 18;
const H24: [u32; 4] = [5, 11, 13, 19];

fn e_pair(a: crate::cyclotomic::Cyclotomic, b: crate::cyclotomic::Cyclotomic) -> EigenSum {
    let mut s = EigenSum::new(1);
    s.push(a, E3).push(b, E5);
    s
}

fn a_term(c: i64, d: i64) -> EigenSum {
    let mut s = EigenSum::new(1);
    s.push_all(&w::rat(c, d), &[PLUS_I, MINUS_I]);
    s
}

fn h24_term(weight: crate::cyclotomic::Cyclotomic, alternating: bool) -> EigenSum {
    let mut s = EigenSum::new(1);
    for (j, &k) in H24.iter().enumerate() {
        let wk = if alternating && j % 2 == 1 { -&weight } else { weight.clone() };
        s.push(wk, k);
    }
    s
}

fn sum_of(parts: &[EigenSum]) -> EigenSum {
    let mut out = EigenSum::new(1);
    for p in parts {
        out.extend(p);
    }
    out
}

/// Root-of-unity form of `f2(n, t1, t2)`.
pub fn t1t2_eigen_form(t1: u8, t2: u8) -> EigenSum {
    let i = w::i();
    let q = w::rat(1, 4);
    match (t1, t2) {
        (0, 0) => e_pair(w::rat(-1, 4), w::rat(-1, 4)),
        (0, 1) => e_pair(w::rat(1, 4), w::rat(1, 4)),
        (1, 0) => e_pair(-&(&i * &q), &i * &q),
        _ => e_pair(&i * &q, -&(&i * &q)),
    }
}

/// Root-of-unity form of `f2(n, t1, t2, t3)`.
pub fn t1t2t3_eigen_form(t1: u8, t2: u8, t3: u8) -> EigenSum {
    let i = w::i();
    let eighth = w::rat(1, 8);
    let one_p_i = &(&w::rat(1, 1) + &i) * &eighth;
    let one_m_i = &(&w::rat(1, 1) - &i) * &eighth;
    let i8 = &i * &eighth;
    match (t1, t2, t3) {
        (0, 0, 0) => sum_of(&[e_pair(w::rat(-1, 4), w::rat(-1, 4)), a_term(-1, 8), h24_term(w::rat(-1, 8), false)]),
        (0, 0, 1) => sum_of(&[a_term(1, 8), h24_term(w::rat(1, 8), false)]),
        (0, 1, 0) => sum_of(&[a_term(-1, 8), h24_term(w::rat(1, 8), false)]),
        (0, 1, 1) => sum_of(&[e_pair(w::rat(1, 4), w::rat(1, 4)), a_term(1, 8), h24_term(w::rat(-1, 8), false)]),
        (1, 0, 0) => sum_of(&[a_term(1, 8), e_pair(-&one_p_i, -&one_m_i), h24_term(-&i8, true)]),
        (1, 0, 1) => sum_of(&[a_term(-1, 8), e_pair(one_m_i.clone(), one_p_i.clone()), h24_term(i8.clone(), true)]),
        (1, 1, 0) => sum_of(&[a_term(-1, 8), e_pair(one_p_i.clone(), one_m_i.clone()), h24_term(-&i8, true)]),
        _ => sum_of(&[a_term(1, 8), e_pair(-&one_m_i, -&one_p_i), h24_term(i8, true)]),
    }
}

/// `f2(n, t1, t2) = F2(n, t1, t2) - 2^(n-2)` from the n mod 8 table,
/// checked against the root-of-unity form.
pub fn f2_table1(n: u64, t1: u8, t2: u8) -> Result<CountFormulaResult> {
    need(n >= 2, "n must be at least 2")?;
    check_bits(&[t1, t2])?;
    let res = (n % 8) as u32;
    let table = to_integer(&eval_row(table1_column(t1, t2)[res as usize], 1, n)?)?;
    let eigen = t1t2_eigen_form(t1, t2).eval_integer(n)?;
    if table != eigen {
        return Err(Error::FormulaMismatch(format!("f2({n},{t1},{t2}): row {table} vs eigen form {eigen}")));
    }
    Ok(CountFormulaResult {
        value: table,
        provenance: Provenance { source: T1_SOURCES[(2 * t1 + t2) as usize], residue: Some(res) },
    })
}

/// `F2(n, t1, t2)`.
pub fn f2_two(n: u64, t1: u8, t2: u8) -> Result<CountFormulaResult> {
    let f = f2_table1(n, t1, t2)?;
    Ok(CountFormulaResult { value: pow2(n - 2) + f.value, provenance: f.provenance })
}

/// `f2(n, 0, t2, t3) = F2(n, 0, t2, t3) - 2^(n-3)` from the n mod 24 table,
/// checked against the root-of-unity form.
pub fn f2_table2(n: u64, t2: u8, t3: u8) -> Result<CountFormulaResult> {
    need(n >= 3, "n must be at least 3")?;
    check_bits(&[t2, t3])?;
    let res = (n % 24) as u32;
    let table = to_integer(&eval_row(table2_column(t2, t3)[res as usize], 1, n)?)?;
    let eigen = t1t2t3_eigen_form(0, t2, t3).eval_integer(n)?;
    if table != eigen {
        return Err(Error::FormulaMismatch(format!("f2({n},0,{t2},{t3}): row {table} vs eigen form {eigen}")));
    }
    Ok(CountFormulaResult {
        value: table,
        provenance: Provenance { source: "f2(n,0,t2,t3) table", residue: Some(res) },
    })
}

/// `F2(n, 0, t2, t3)`.
pub fn f2_three(n: u64, t2: u8, t3: u8) -> Result<CountFormulaResult> {
    let f = f2_table2(n, t2, t3)?;
    Ok(CountFormulaResult { value: pow2(n - 3) + f.value, provenance: f.provenance })
}

/// `f2(n, 1, t2, t3) = F2(n, 1, t2, t3) - 2^(n-3)`, from the root-of-unity form.
pub fn f2_trace_one(n: u64, t2: u8, t3: u8) -> Result<CountFormulaResult> {
    need(n >= 3, "n must be at least 3")?;
    check_bits(&[t2, t3])?;
    Ok(CountFormulaResult {
        value: t1t2t3_eigen_form(1, t2, t3).eval_integer(n)?,
        provenance: Provenance { source: "f2(n,1,t2,t3) eigen form", residue: None },
    })
}

/// Row of the `F_q(n,0,0,0)` table, as a deviation from `q^(n-3)`.
pub fn f_q000_row(r: u32, n: u64) -> Row {
    let res = (n % 24) as usize;
    if r % 2 == 1 {
        sym::TABLE5_ODD[res]
    } else {
        sym::TABLE5_EVEN[res]
    }
}

/// `F_q(n,0,0,0)` for `q = 2^r`, any `n >= 1`.
pub fn f_q000(r: u32, n: u64) -> Result<CountFormulaResult> {
    need(r >= 1, "r must be at least 1")?;
    need(n >= 1, "n must be at least 1")?;
    let base = crate::arith::pow2_signed(r as i64 * (n as i64 - 3));
    let v = to_integer(&(base + eval_row(f_q000_row(r, n), r, n)?))?;
    if v.is_negative() {
        return Err(Error::FormulaMismatch(format!("negative count {v}")));
    }
    Ok(CountFormulaResult {
        value: v,
        provenance: Provenance {
            source: if r % 2 == 1 { "F_q(n,0,0,0) table, r odd" } else { "F_q(n,0,0,0) table, r even" },
            residue: Some((n % 24) as u32),
        },
    })
}

/// The two expressions for `I_q(n,0,0,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleCount {
    /// Moebius sum with the `q^(n/2d - 1)` correction; always defined.
    pub value: BigInt,
    /// Moebius sum minus `I_sqrt(q)(n,1)` evaluated literally with the
    /// trace-one formula over `sqrt(q)`; only for even `r`.
    pub literal_alt: Option<BigRational>,
    /// The same with `I_sqrt(q)(n,1) / sqrt(q)` in place of `I_sqrt(q)(n,1)`.
    pub rescaled_alt: Option<BigRational>,
}

fn moebius_f000(r: u32, n: u64, correction: bool) -> Result<BigRational> {
    let q = pow2(r as u64);
    let mut acc = BigRational::zero();
    for d in divisors(n).into_iter().filter(|d| d % 2 == 1) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let mut term = BigRational::from_integer(f_q000(r, n / d)?.value);
        if correction && n % 2 == 0 {
            // q^(n/2d - 1)
            let e = n / (2 * d);
            term -= BigRational::new(big_pow(&q, e), q.clone());
        }
        acc += term * BigRational::from_integer(mu.into());
    }
    Ok(acc / BigRational::from_integer(n.into()))
}

/// Number of monic irreducibles of degree `n >= 3` over GF(2^r) whose three
/// leading non-trivial coefficients vanish.
pub fn i_q000(r: u32, n: u64) -> Result<IrreducibleCount> {
    need(r >= 1, "r must be at least 1")?;
    need(n >= 3, "n must be at least 3")?;
    let v = moebius_f000(r, n, true)?;
    let value = to_integer(&v)?;
    if value.is_negative() {
        return Err(Error::FormulaMismatch(format!("negative count {value}")));
    }
    let (literal_alt, rescaled_alt) = if r % 2 == 0 {
        let plain = moebius_f000(r, n, false)?;
        if n % 2 == 0 {
            let sq = BigRational::from_integer(pow2(r as u64 / 2));
            let i_half = carlitz_sum(&sq, n);
            let rescaled = &i_half / &sq;
            (Some(&plain - &i_half), Some(plain - rescaled))
        } else {
            (Some(plain.clone()), Some(plain))
        }
    } else {
        (None, None)
    };
    Ok(IrreducibleCount { value, literal_alt, rescaled_alt })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn gauss_and_carlitz_examples() {
        assert_eq!(gauss_i(&b(2), 1).unwrap(), b(2));
        assert_eq!(gauss_i(&b(2), 4).unwrap(), b(3));
        assert_eq!(gauss_i(&b(4), 3).unwrap(), b(20));
        assert_eq!(carlitz_i(&b(2), 2, true).unwrap(), b(1));
        assert_eq!(carlitz_i(&b(2), 2, false).unwrap(), b(0));
        assert_eq!(carlitz_i(&b(2), 3, false).unwrap(), b(1));
    }

    #[test]
    fn table_examples() {
        assert_eq!(f2_table1(8, 0, 0).unwrap().value, b(-8));
        assert_eq!(f2_table1(3, 0, 0).unwrap().value, b(-1));
        assert_eq!(f2_table1(2, 1, 0).unwrap().value, b(-1));
        assert_eq!(f2_table2(6, 0, 0).unwrap().value, b(2));
        assert_eq!(f2_table2(12, 0, 0).unwrap().value, b(48));
        assert_eq!(f2_table2(9, 0, 0).unwrap().value, b(0));
        assert_eq!(f2_trace_one(3, 1, 1).unwrap().value, b(0));
    }

    #[test]
    fn f000_examples() {
        assert_eq!(f_q000(1, 6).unwrap().value, b(10));
        assert_eq!(f_q000(2, 3).unwrap().value, b(1));
        assert_eq!(f_q000(1, 1).unwrap().value, b(1));
        assert_eq!(f_q000(2, 2).unwrap().value, b(1));
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(i_q000(1, 4).unwrap().value, b(0));
        assert_eq!(i_q000(1, 5).unwrap().value, b(0));
        assert_eq!(i_q000(1, 7).unwrap().value, b(3));
        let c = i_q000(2, 4).unwrap();
        assert_eq!(c.literal_alt, Some(BigRational::from_integer(b(-1))));
        assert_eq!(c.rescaled_alt, Some(BigRational::from_integer(c.value)));
    }
}
