//! Closed-form point counts: per-residue tables for the combined curves and
//! case formulas for the twists.

use num_bigint::BigInt;

use super::{Family, TwistClass};
use crate::arith::{pow2, to_integer};
use crate::closed_forms::{CountFormulaResult, Provenance};
use crate::error::{Error, Result};
use crate::symbolic::{self as sym, eval_row, Row};

fn gcd6(n: u64) -> u64 {
    num_integer::gcd(n, 6)
}

/// Table row for the combined curve, as a deviation from `q^n + 1`.
pub fn combined_row(family: Family, r: u32, n: u64) -> (Row, &'static str, u32) {
    let odd = r % 2 == 1;
    match family {
        Family::C1 => {
            let res = (n % 8) as usize;
            let t = if odd { &sym::TABLE3_ODD } else { &sym::TABLE3_EVEN };
            (t[res], if odd { "C1 table, r odd" } else { "C1 table, r even" }, res as u32)
        }
        Family::C2 => {
            if odd {
                let res = (n % 8) as usize;
                (sym::TABLE4_ODD[res], "C2 table, r odd", res as u32)
            } else {
                let res = (n % 24) as usize;
                (sym::TABLE4_EVEN[res], "C2 table, r even", res as u32)
            }
        }
        Family::C3 => {
            let res = (n % 24) as usize;
            let t = if odd { &sym::C3_ODD } else { &sym::C3_EVEN };
            (t[res], if odd { "C3 table, r odd" } else { "C3 table, r even" }, res as u32)
        }
    }
}

fn finish(row: Row, r: u32, n: u64, source: &'static str, residue: u32) -> Result<CountFormulaResult> {
    let dev = to_integer(&eval_row(row, r, n)?)?;
    Ok(CountFormulaResult {
        value: pow2(r as u64 * n) + 1 + dev,
        provenance: Provenance { source, residue: Some(residue) },
    })
}

/// Count on `y^q + y = q_i(x)` over GF(q^n) from the residue tables.
pub fn closed_count_combined(family: Family, r: u32, n: u64) -> Result<CountFormulaResult> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameter("r and n must be positive".into()));
    }
    let (row, source, res) = combined_row(family, r, n);
    finish(row, r, n, source, res)
}

/// Deviation row for a twist, with its source label and residue.
pub fn twist_row(family: Family, class: TwistClass, r: u32, n: u64) -> Result<(Row, &'static str, u32)> {
    use sym::{
        MINUS_H1 as M1, MINUS_H1_DOUBLE as M1D, MINUS_H2 as M2, MINUS_H2_DOUBLE as M2D, PLUS_H1 as P1,
        PLUS_H2 as P2, PLUS_H2_DOUBLE as P2D, ZERO as Z,
    };
    let odd = r % 2 == 1;
    let m8 = (n % 8) as u32;
    let m4 = (n % 4) as u32;
    let bad = || Error::InvalidParameter(format!("twist class {class:?} does not apply to {family}"));
    Ok(match (family, class) {
        (Family::C1, TwistClass::Any) => {
            if odd {
                let row = match m8 {
                    1 | 7 => P1,
                    3 | 5 => M1,
                    2 | 6 => Z,
                    4 => P2,
                    _ => M2,
                };
                (row, "C1 twist, r odd, n mod 8", m8)
            } else {
                let row = match m4 {
                    1 | 3 => P1,
                    2 => Z,
                    _ => M2,
                };
                (row, "C1 twist, r even, n mod 4", m4)
            }
        }
        (Family::C2, TwistClass::Cube) | (Family::C2, TwistClass::NonCube) if odd => {
            if class == TwistClass::NonCube {
                return Err(Error::InvalidParameter("every element is a cube when r is odd".into()));
            }
            let row = match m8 {
                1 | 7 => P1,
                3 | 5 => M1,
                2 | 6 => P2,
                4 => Z,
                _ => M2D,
            };
            (row, "C2 twist, r odd, n mod 8", m8)
        }
        (Family::C2, TwistClass::Cube) => {
            let row = match m4 {
                1 | 3 => P1,
                2 => P2,
                _ => M2D,
            };
            (row, "C2 twist, r even, cube, n mod 4", m4)
        }
        (Family::C2, TwistClass::NonCube) => {
            let g = gcd6(n) as u32;
            let row = match g {
                1 => P1,
                2 => P2,
                3 => M1D,
                _ => M2D,
            };
            (row, "C2 twist, r even, non-cube, gcd(n,6)", g)
        }
        (Family::C3, TwistClass::ThreeRoots) => {
            let row = match (odd, m8) {
                (true, 1 | 7) => P1,
                (true, 3 | 5) => M1,
                (true, 4) => P2D,
                (false, 1 | 3 | 5 | 7) => P1,
                (false, 4) => M2D,
                (_, 2 | 6) => Z,
                _ => M2D,
            };
            (row, if odd { "C3 twist, three roots, r odd" } else { "C3 twist, three roots, r even" }, m8)
        }
        (Family::C3, TwistClass::OneRoot) => {
            let row = match (odd, m8) {
                (true, 1 | 7) => P1,
                (true, 3 | 5) => M1,
                (false, 1 | 3 | 5 | 7) => P1,
                (_, 2 | 4 | 6) => Z,
                _ => M2D,
            };
            (row, if odd { "C3 twist, one root, r odd" } else { "C3 twist, one root, r even" }, m8)
        }
        (Family::C3, TwistClass::NoRoot) => {
            let res = (n % 24) as usize;
            if odd {
                (sym::C3_NOROOT_ODD[res], "C3 twist, no root, r odd", res as u32)
            } else {
                (sym::C3_NOROOT_EVEN[res], "C3 twist, no root, r even", res as u32)
            }
        }
        _ => return Err(bad()),
    })
}

/// Count on `y^2 + y = alpha q_i(x)` over GF(q^n), by the class of `alpha`.
pub fn closed_count_twist(family: Family, class: TwistClass, r: u32, n: u64) -> Result<CountFormulaResult> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameter("r and n must be positive".into()));
    }
    let (row, source, res) = twist_row(family, class, r, n)?;
    finish(row, r, n, source, res)
}

/// Hasse-Weil: `|N - (q^n + 1)| <= 2 g q^(n/2)`, checked as
/// `(N - q^n - 1)^2 <= 4 g^2 q^n`.
pub fn within_hasse_weil(count: &BigInt, genus: &BigInt, r: u32, n: u64) -> bool {
    let qn = pow2(r as u64 * n);
    let dev = count - &qn - 1;
    &dev * &dev <= genus * genus * 4 * qn
}
