//! Piecewise closed forms stored as data.
//!
//! A row is a sum of terms `sign * c(q) * 2^((r (a n + b) + c) / 2)` where
//! `c(q)` is a small integer polynomial in `q = 2^r`. Rows are indexed by a
//! residue of `n`. Tables whose entries are written in `n` alone are
//! evaluated with `r = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::pow2_signed;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub sign: i8,
    pub coeff: &'static [i64],
    pub label: &'static str,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Term {
    pub const fn new(sign: i8, coeff: &'static [i64], label: &'static str, a: i64, b: i64, c: i64) -> Self {
        Term { sign, coeff, label, a, b, c }
    }

    pub fn eval(&self, r: u32, n: u64) -> Result<BigRational> {
        let r = r as i64;
        let n = n as i64;
        let num = r * (self.a * n + self.b) + self.c;
        if num % 2 != 0 {
            return Err(Error::NonIntegral(format!("exponent {num}/2 in {}", self.label)));
        }
        let q = BigInt::from(1u8) << r;
        let mut cq = BigInt::zero();
        for &k in self.coeff.iter().rev() {
            cq = cq * &q + BigInt::from(k);
        }
        let v = pow2_signed(num / 2) * BigRational::from_integer(cq);
        Ok(if self.sign < 0 { -v } else { v })
    }
}

pub type Row = &'static [Term];

pub fn eval_row(row: Row, r: u32, n: u64) -> Result<BigRational> {
    row.iter().try_fold(BigRational::zero(), |acc, t| Ok(acc + t.eval(r, n)?))
}

/// Human-readable form of a row, e.g. `-(q-1)2^{r(n+1)/2}`.
pub fn render_row(row: Row) -> String {
    if row.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for t in row {
        out.push(if t.sign < 0 { '-' } else { '+' });
        out.push_str(t.label);
    }
    out
}

const N_A: Term = Term::new(-1, &[-1, 1], "(q-1)2^{r(n+1)/2}", 1, 1, 0);
const P_A: Term = Term::new(1, &[-1, 1], "(q-1)2^{r(n+1)/2}", 1, 1, 0);
const N_B: Term = Term::new(-1, &[-1, 1], "(q-1)2^{r(n+2)/2}", 1, 2, 0);
const P_B: Term = Term::new(1, &[-1, 1], "(q-1)2^{r(n+2)/2}", 1, 2, 0);
const N_D: Term = Term::new(-1, &[-1, 1], "(q-1)2^{r(n+2)/2+1}", 1, 2, 2);
const N_E: Term = Term::new(-1, &[1], "2^{r(n+1)/2+1}", 1, 1, 2);
const P_E: Term = Term::new(1, &[1], "2^{r(n+1)/2+1}", 1, 1, 2);
const N_G: Term = Term::new(-1, &[1], "2^{r(n+2)/2}", 1, 2, 0);
const P_G: Term = Term::new(1, &[1], "2^{r(n+2)/2}", 1, 2, 0);
const N_G1: Term = Term::new(-1, &[1], "2^{r(n+2)/2+1}", 1, 2, 2);
const P_G1: Term = Term::new(1, &[1], "2^{r(n+2)/2+1}", 1, 2, 2);
const N_H1: Term = Term::new(-1, &[1], "2^{(n-2)/2}", 1, -2, 0);
const P_H1: Term = Term::new(1, &[1], "2^{(n-2)/2}", 1, -2, 0);
const P_H4: Term = Term::new(1, &[1], "2^{r(n+4)/2}", 1, 4, 0);
const N_J: Term = Term::new(-1, &[-3, 1], "(q-3)2^{r(n+2)/2}", 1, 2, 0);
const N_K: Term = Term::new(-1, &[-2, 1], "(q-2)2^{r(n+2)/2}", 1, 2, 0);
const N_K1: Term = Term::new(-1, &[1], "2^{(n-3)/2}", 1, -3, 0);
const P_K1: Term = Term::new(1, &[1], "2^{(n-3)/2}", 1, -3, 0);
const N_P: Term = Term::new(-1, &[1], "2^{r(n+1)/2}", 1, 1, 0);
const P_P: Term = Term::new(1, &[1], "2^{r(n+1)/2}", 1, 1, 0);
const N_A5: Term = Term::new(-1, &[-1, 0, 1], "(q^2-1)q^{(n-5)/2}", 1, -5, 0);
const P_A5: Term = Term::new(1, &[-1, 0, 1], "(q^2-1)q^{(n-5)/2}", 1, -5, 0);
const N_B5: Term = Term::new(-1, &[-1, 1], "(q-1)q^{(n-4)/2}", 1, -4, 0);
const P_B5: Term = Term::new(1, &[-1, 1], "(q-1)q^{(n-4)/2}", 1, -4, 0);
const N_E5: Term = Term::new(-1, &[-1, 1], "(q-1)q^{(n-2)/2}", 1, -2, 0);
const P_F: Term = Term::new(1, &[1], "2^{n/2}", 1, 0, 0);
const N_H: Term = Term::new(-1, &[1], "2^{(n-2)/2}", 1, -2, 0);
const P_H: Term = Term::new(1, &[1], "2^{(n-2)/2}", 1, -2, 0);
const N_T5: Term = Term::new(-1, &[-1, 0, 1], "(q^2-1)q^{(n-4)/2}", 1, -4, 0);
const P_T5: Term = Term::new(1, &[-1, 0, 1], "(q^2-1)q^{(n-4)/2}", 1, -4, 0);
const N_U: Term = Term::new(-1, &[1], "2^{(n-4)/2}", 1, -4, 0);
const P_U: Term = Term::new(1, &[1], "2^{(n-4)/2}", 1, -4, 0);
const N_U3: Term = Term::new(-1, &[3], "3*2^{(n-4)/2}", 1, -4, 0);
const P_U3: Term = Term::new(1, &[3], "3*2^{(n-4)/2}", 1, -4, 0);
const N_U5: Term = Term::new(-1, &[5], "5*2^{(n-4)/2}", 1, -4, 0);
const N_V: Term = Term::new(-1, &[1], "2^{(n-5)/2}", 1, -5, 0);
const P_V: Term = Term::new(1, &[1], "2^{(n-5)/2}", 1, -5, 0);
const N_V3: Term = Term::new(-1, &[3], "3*2^{(n-5)/2}", 1, -5, 0);
const P_V3: Term = Term::new(1, &[3], "3*2^{(n-5)/2}", 1, -5, 0);
const N_W: Term = Term::new(-1, &[1], "2^{(n-3)/2}", 1, -3, 0);
const P_W: Term = Term::new(1, &[1], "2^{(n-3)/2}", 1, -3, 0);
const N_Z5: Term = Term::new(-1, &[-1, -1, 2], "(q-1)(2q+1)q^{(n-4)/2}", 1, -4, 0);
const N_ZZ: Term = Term::new(-1, &[1], "2^{(n-1)/2}", 1, -1, 0);
const P_ZZ: Term = Term::new(1, &[1], "2^{(n-1)/2}", 1, -1, 0);

pub const TABLE1_00: [Row; 8] = [
    &[N_H1],
    &[P_K1],
    &[],
    &[N_K1],
    &[P_H1],
    &[N_K1],
    &[],
    &[P_K1],
];

pub const TABLE1_01: [Row; 8] = [
    &[P_H1],
    &[N_K1],
    &[],
    &[P_K1],
    &[N_H1],
    &[P_K1],
    &[],
    &[N_K1],
];

pub const TABLE1_10: [Row; 8] = [
    &[],
    &[P_K1],
    &[N_H1],
    &[P_K1],
    &[],
    &[N_K1],
    &[P_H1],
    &[N_K1],
];

pub const TABLE1_11: [Row; 8] = [
    &[],
    &[N_K1],
    &[P_H1],
    &[N_K1],
    &[],
    &[P_K1],
    &[N_H1],
    &[P_K1],
];

pub const TABLE2_000: [Row; 24] = [
    &[N_U5],
    &[P_V3],
    &[P_U],
    &[],
    &[],
    &[N_V3],
    &[P_U],
    &[P_V3],
    &[N_H],
    &[],
    &[P_U],
    &[N_V3],
    &[P_U3],
    &[N_V3],
    &[P_U],
    &[],
    &[N_H],
    &[P_V3],
    &[P_U],
    &[N_V3],
    &[],
    &[],
    &[P_U],
    &[P_V3],
];

pub const TABLE2_001: [Row; 24] = [
    &[P_U3],
    &[N_V],
    &[N_U],
    &[N_W],
    &[P_H],
    &[P_V],
    &[N_U],
    &[N_V],
    &[],
    &[P_W],
    &[N_U],
    &[P_V],
    &[N_U],
    &[P_V],
    &[N_U],
    &[P_W],
    &[],
    &[N_V],
    &[N_U],
    &[P_V],
    &[P_H],
    &[N_W],
    &[N_U],
    &[N_V],
];

pub const TABLE2_010: [Row; 24] = [
    &[P_U],
    &[N_V],
    &[P_U],
    &[N_W],
    &[],
    &[P_V],
    &[P_U],
    &[N_V],
    &[N_H],
    &[P_W],
    &[P_U],
    &[P_V],
    &[N_U3],
    &[P_V],
    &[P_U],
    &[P_W],
    &[N_H],
    &[N_V],
    &[P_U],
    &[P_V],
    &[],
    &[N_W],
    &[P_U],
    &[N_V],
];

pub const TABLE2_011: [Row; 24] = [
    &[P_U],
    &[N_V],
    &[N_U],
    &[P_ZZ],
    &[N_H],
    &[P_V],
    &[N_U],
    &[N_V],
    &[P_F],
    &[N_ZZ],
    &[N_U],
    &[P_V],
    &[P_U],
    &[P_V],
    &[N_U],
    &[N_ZZ],
    &[P_F],
    &[N_V],
    &[N_U],
    &[P_V],
    &[N_H],
    &[P_ZZ],
    &[N_U],
    &[N_V],
];

pub const TABLE5_ODD: [Row; 24] = [
    &[N_Z5],
    &[P_A5],
    &[P_B5],
    &[],
    &[],
    &[N_A5],
    &[P_B5],
    &[P_A5],
    &[N_E5],
    &[],
    &[P_B5],
    &[N_A5],
    &[P_T5],
    &[N_A5],
    &[P_B5],
    &[],
    &[N_E5],
    &[P_A5],
    &[P_B5],
    &[N_A5],
    &[],
    &[],
    &[P_B5],
    &[P_A5],
];

pub const TABLE5_EVEN: [Row; 24] = [
    &[N_Z5],
    &[P_A5],
    &[P_B5],
    &[],
    &[],
    &[P_A5],
    &[N_B5],
    &[P_A5],
    &[N_E5],
    &[],
    &[P_B5],
    &[P_A5],
    &[N_T5],
    &[P_A5],
    &[P_B5],
    &[],
    &[N_E5],
    &[P_A5],
    &[N_B5],
    &[P_A5],
    &[],
    &[],
    &[P_B5],
    &[P_A5],
];

pub const TABLE3_ODD: [Row; 8] = [
    &[N_B],
    &[P_A],
    &[],
    &[N_A],
    &[P_B],
    &[N_A],
    &[],
    &[P_A],
];

pub const TABLE3_EVEN: [Row; 8] = [
    &[N_B],
    &[P_A],
    &[],
    &[P_A],
    &[N_B],
    &[P_A],
    &[],
    &[P_A],
];

pub const TABLE4_ODD: [Row; 8] = [
    &[N_D],
    &[P_A],
    &[P_B],
    &[N_A],
    &[],
    &[N_A],
    &[P_B],
    &[P_A],
];

pub const TABLE4_EVEN: [Row; 24] = [
    &[N_D],
    &[P_A],
    &[P_B],
    &[N_A],
    &[],
    &[P_A],
    &[N_B],
    &[P_A],
    &[],
    &[N_A],
    &[P_B],
    &[P_A],
    &[N_D],
    &[P_A],
    &[P_B],
    &[N_A],
    &[],
    &[P_A],
    &[N_B],
    &[P_A],
    &[],
    &[N_A],
    &[P_B],
    &[P_A],
];

pub const C3_ODD: [Row; 24] = [
    &[N_D],
    &[P_A],
    &[],
    &[P_E],
    &[N_G],
    &[N_A],
    &[],
    &[P_A],
    &[N_J],
    &[N_E],
    &[],
    &[N_A],
    &[P_H4],
    &[N_A],
    &[],
    &[N_E],
    &[N_J],
    &[P_A],
    &[],
    &[N_A],
    &[N_G],
    &[P_E],
    &[],
    &[P_A],
];

pub const C3_EVEN: [Row; 24] = [
    &[N_D],
    &[P_A],
    &[],
    &[],
    &[P_G],
    &[P_A],
    &[],
    &[P_A],
    &[N_B],
    &[],
    &[],
    &[P_A],
    &[N_K],
    &[P_A],
    &[],
    &[],
    &[N_B],
    &[P_A],
    &[],
    &[P_A],
    &[P_G],
    &[],
    &[],
    &[P_A],
];

pub const C3_NOROOT_ODD: [Row; 24] = [
    &[N_G1],
    &[P_P],
    &[],
    &[P_E],
    &[N_G],
    &[N_P],
    &[],
    &[P_P],
    &[P_G],
    &[N_E],
    &[],
    &[N_P],
    &[P_G1],
    &[N_P],
    &[],
    &[N_E],
    &[P_G],
    &[P_P],
    &[],
    &[N_P],
    &[N_G],
    &[P_E],
    &[],
    &[P_P],
];

pub const C3_NOROOT_EVEN: [Row; 24] = [
    &[N_G1],
    &[P_P],
    &[],
    &[N_E],
    &[P_G],
    &[P_P],
    &[],
    &[P_P],
    &[P_G],
    &[N_E],
    &[],
    &[P_P],
    &[N_G1],
    &[P_P],
    &[],
    &[N_E],
    &[P_G],
    &[P_P],
    &[],
    &[P_P],
    &[P_G],
    &[N_E],
    &[],
    &[P_P],
];
// Single-term rows used by the twist formulas.
pub const ZERO: Row = &[];
pub const PLUS_H1: Row = &[P_P];
pub const MINUS_H1: Row = &[N_P];
pub const PLUS_H1_DOUBLE: Row = &[P_E];
pub const MINUS_H1_DOUBLE: Row = &[N_E];
pub const PLUS_H2: Row = &[P_G];
pub const MINUS_H2: Row = &[N_G];
pub const PLUS_H2_DOUBLE: Row = &[P_G1];
pub const MINUS_H2_DOUBLE: Row = &[N_G1];
