//! Point counts as weighted sums over Frobenius eigenvalues `sqrt(q) z^k`,
//! `z = exp(2 pi i / 24)`, evaluated exactly.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::Family;
use crate::arith::{pow2, to_integer};
use crate::closed_forms::{CountFormulaResult, Provenance};
use crate::eigensum::{w, EigenSum};
use crate::error::{Error, Result};

const PAIR_3: &[u32] = &[3, 21];
const PAIR_9: &[u32] = &[9, 15];
const PAIR_4: &[u32] = &[4, 20];
const PAIR_8: &[u32] = &[8, 16];
const PLUS_I: &[u32] = &[6, 18];
const REAL: &[u32] = &[0, 12];
const QUARTIC_1: &[u32] = &[1, 7, 17, 23];
const QUARTIC_5: &[u32] = &[5, 11, 13, 19];
const ODD_EIGHTHS: &[u32] = &[3, 9, 15, 21];
const TWELFTHS: &[u32] = &[2, 10, 14, 22];

/// Eigenvalue multiset of the combined curve, as an [`EigenSum`].
pub fn fourier_form(family: Family, r: u32) -> Result<EigenSum> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let q = BigRational::from_integer(pow2(r as u64));
    let one = BigRational::from_integer(BigInt::from(1));
    let two = &one + &one;
    let k = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut e = EigenSum::new(r);
    let mut add = |mult: BigRational, ks: &[u32]| {
        e.push_all(&w::big(mult), ks);
    };
    if r % 2 == 1 {
        let s = BigRational::from_integer(pow2((r as u64 + 1) / 2));
        match family {
            Family::C1 | Family::C2 => {
                add((&q - &one) * (&q - &s) / k(4), PAIR_3);
                add((&q - &one) * (&q + &s) / k(4), PAIR_9);
                if family == Family::C2 {
                    add((&q - &one) * &q / &two, PLUS_I);
                }
            }
            Family::C3 => {
                add((&q - &two) * &q / k(8), REAL);
                add((&q - &two) * &q / k(8), PLUS_I);
                add((&q - &two) * (k(5) * &q - k(4) * &s) / k(24), PAIR_3);
                add((&q - &two) * (k(5) * &q + k(4) * &s) / k(24), PAIR_9);
                add((&q + &one) * (&q - &s) / k(12), QUARTIC_1);
                add((&q + &one) * (&q + &s) / k(12), QUARTIC_5);
            }
        }
    } else {
        let t = BigRational::from_integer(pow2(r as u64 / 2));
        let t2 = &t * &two;
        match family {
            Family::C1 => {
                add((&q - &one) * (&q - &t2) / k(4), &[0]);
                add((&q - &one) * (&q + &t2) / k(4), &[12]);
                add((&q - &one) * &q / k(4), PLUS_I);
            }
            Family::C2 => {
                add((&q - &one) * (&q - &t2) / k(12), &[0]);
                add((&q - &one) * (&q + &t2) / k(12), &[12]);
                add((&q - &one) * (&q - &t) / k(3), PAIR_4);
                add((&q - &one) * (&q + &t) / k(3), PAIR_8);
                add((&q - &one) * &q / k(4), PLUS_I);
            }
            Family::C3 => {
                add((&q - &t2) * (k(5) * &q + &t2 - k(4)) / k(24), &[0]);
                add((&q + &t2) * (k(5) * &q - &t2 - k(4)) / k(24), &[12]);
                add(&q * (k(5) * &q - k(8)) / k(24), PLUS_I);
                add(&q * &q / k(8), ODD_EIGHTHS);
                add((&q - &one) * &q / k(12), TWELFTHS);
                add((&q - &one) * (&q - &t2) / k(12), PAIR_4);
                add((&q - &one) * (&q + &t2) / k(12), PAIR_8);
            }
        }
    }
    Ok(e)
}

/// `q^n + 1 - sum of eigenvalue n-th powers`.
pub fn fourier_form_count(family: Family, r: u32, n: u64) -> Result<CountFormulaResult> {
    let s = fourier_form(family, r)?.eval_rational(n)?;
    Ok(CountFormulaResult {
        value: pow2(r as u64 * n) + 1 - to_integer(&s)?,
        provenance: Provenance { source: "eigenvalue sum", residue: None },
    })
}
