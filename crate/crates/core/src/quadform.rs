//! Quadratic forms `Q(x) = Tr(alpha q_i(x))` on GF(2^(rn)) over GF(2): radical,
//! rank, Arf invariant, zero counts, and the cubic root census over GF(2^r).

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::pow2;
use crate::curves::{CurveEval, Family, TwistClass};
use crate::error::{Error, Result};
use crate::field::{Embedding, FieldCtx, FieldElement, MAX_DEGREE};
use crate::gf2mat;

/// `Q(x) = Tr(alpha q_i(x))` for `x` in GF(2^m), `m = rn`.
#[derive(Debug, Clone)]
pub struct QuadForm {
    family: Family,
    r: u32,
    n: u32,
    alpha: FieldElement,
    ctx: FieldCtx,
    mask: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub m: u32,
    /// Dimension of the radical of the polar form.
    pub w: u32,
    /// Dimension of the zeros of `Q` inside the radical.
    pub w0: u32,
    pub rank: u32,
    /// `+1`, `-1`, or `0` when the rank is odd.
    pub sign: i8,
    /// Arf invariant of the nondegenerate part, when the rank is even.
    pub arf: Option<u8>,
    /// Number of zeros of `Q`.
    #[serde(serialize_with = "crate::arith::ser_decimal")]
    pub zeros: BigInt,
}

impl RadicalReport {
    /// Point count on `y^2 + y = alpha q_i(x)` implied by the zero count.
    pub fn twist_count(&self) -> BigInt {
        &self.zeros * 2 + 1
    }
}

impl QuadForm {
    /// `alpha` is given as bits in the canonical GF(2^r).
    pub fn new(family: Family, r: u32, n: u32, alpha: FieldElement) -> Result<Self> {
        let m = r.checked_mul(n).filter(|&m| m >= 1 && m <= MAX_DEGREE).ok_or(Error::InvalidDegree(r.saturating_mul(n)))?;
        let small = FieldCtx::new(r)?;
        let alpha = small.try_elem(alpha.0)?;
        if alpha.is_zero() {
            return Err(Error::InvalidParameter("twist parameter must be nonzero".into()));
        }
        let ctx = FieldCtx::new(m)?;
        let emb = Embedding::new(&small, &ctx)?;
        let mask = ctx.scaled_trace_mask(emb.apply(alpha));
        Ok(QuadForm { family, r, n, alpha, ctx, mask })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn dim(&self) -> u32 {
        self.ctx.degree()
    }

    fn evaluator(&self) -> CurveEval<'_> {
        CurveEval::new(&self.ctx, self.r, self.family)
    }

    fn q_with(&self, ev: &CurveEval<'_>, x: u64) -> bool {
        (ev.eval(FieldElement(x)).0 & self.mask).count_ones() & 1 == 1
    }

    pub fn eval(&self, x: FieldElement) -> bool {
        self.q_with(&self.evaluator(), x.0)
    }

    /// Polar form `B(x,y) = Q(x+y) + Q(x) + Q(y)` on the monomial basis;
    /// `rows[i]` has bit `j` set iff `B(e_i, e_j) = 1`.
    pub fn bilinear_matrix(&self) -> Vec<u64> {
        let ev = self.evaluator();
        let m = self.dim();
        let diag: Vec<bool> = (0..m).map(|i| self.q_with(&ev, 1 << i)).collect();
        (0..m)
            .into_par_iter()
            .map(|i| {
                let mut row = 0u64;
                for j in 0..m {
                    if i != j {
                        let b = self.q_with(&ev, (1 << i) | (1 << j)) ^ diag[i as usize] ^ diag[j as usize];
                        row |= (b as u64) << j;
                    }
                }
                row
            })
            .collect()
    }

    /// Radical, rank and zero count, from linear algebra only.
    pub fn radical_report(&self) -> RadicalReport {
        let ev = self.evaluator();
        let m = self.dim();
        let rows = self.bilinear_matrix();
        let radical = gf2mat::kernel(&rows, m);
        let w = radical.len() as u32;
        let q_linear_on_radical = radical.iter().any(|&v| self.q_with(&ev, v));
        let w0 = if q_linear_on_radical { w - 1 } else { w };
        let rank = m - w0;
        let half = pow2(m as u64 - 1);
        if q_linear_on_radical {
            return RadicalReport { m, w, w0, rank, sign: 0, arf: None, zeros: half };
        }
        let arf = arf_invariant(&rows, m, |v| self.q_with(&ev, v));
        let sign: i8 = if arf == 0 { 1 } else { -1 };
        let dev = pow2(((m + w) / 2 - 1) as u64);
        let zeros = if sign > 0 { half + dev } else { half - dev };
        RadicalReport { m, w, w0, rank, sign, arf: Some(arf), zeros }
    }

    /// Zero count by enumeration.
    pub fn enumerate_zeros(&self, cap: u32) -> Result<BigInt> {
        let ev = self.evaluator();
        let parts = self.ctx.partition(cap, rayon::current_num_threads() as u64 * 16)?;
        let hits: u64 = parts.into_par_iter().map(|range| range.filter(|&x| !self.q_with(&ev, x)).count() as u64).sum();
        Ok(BigInt::from(hits))
    }
}

fn polar(rows: &[u64], x: u64, y: u64) -> bool {
    let mut img = 0u64;
    let mut bits = x;
    while bits != 0 {
        img ^= rows[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    (img & y).count_ones() & 1 == 1
}

/// Arf invariant of `Q` modulo the radical of its polar form `rows`, by
/// greedy extraction of hyperbolic pairs.
fn arf_invariant(rows: &[u64], m: u32, q: impl Fn(u64) -> bool) -> u8 {
    let mut pool: Vec<u64> = (0..m).map(|i| 1u64 << i).collect();
    let mut arf = 0u8;
    loop {
        let mut found = None;
        'outer: for (i, &a) in pool.iter().enumerate() {
            for (j, &b) in pool.iter().enumerate().skip(i + 1) {
                if polar(rows, a, b) {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = found else { break };
        let (a, b) = (pool[i], pool[j]);
        pool.swap_remove(j);
        pool.swap_remove(i);
        for c in pool.iter_mut() {
            let ca = polar(rows, *c, a);
            let cb = polar(rows, *c, b);
            if cb {
                *c ^= a;
            }
            if ca {
                *c ^= b;
            }
        }
        arf ^= (q(a) & q(b)) as u8;
    }
    arf
}

/// Radical dimension predicted by the dimension lemmas, or `None` when the
/// class does not occur for this `r`.
pub fn expected_radical_dim(family: Family, class: TwistClass, r: u32, n: u32) -> Option<u32> {
    let by_mod4 = || match n % 4 {
        1 | 3 => r,
        2 => 2 * r,
        _ => 2 * r + 2,
    };
    let by_gcd6 = || match num_integer::gcd(n, 6) {
        1 => r,
        2 => 2 * r,
        3 => r + 2,
        _ => 2 * r + 2,
    };
    match (family, class) {
        (Family::C1, TwistClass::Any) => Some(if n % 2 == 1 { r } else { 2 * r }),
        (Family::C2, TwistClass::Cube) => Some(by_mod4()),
        (Family::C2, TwistClass::NonCube) if r % 2 == 0 => Some(by_gcd6()),
        (Family::C3, TwistClass::ThreeRoots | TwistClass::OneRoot) => Some(by_mod4()),
        (Family::C3, TwistClass::NoRoot) => Some(by_gcd6()),
        _ => None,
    }
}

/// Number of roots of `x^3 + x + beta` in `f`.
pub fn cubic_root_count(f: &FieldCtx, beta: FieldElement) -> Result<u32> {
    if beta.is_zero() {
        return Err(Error::InvalidParameter("beta must be nonzero".into()));
    }
    let beta = f.try_elem(beta.0)?;
    let count = f
        .enumerate(crate::field::DEFAULT_ENUM_CAP)?
        .filter(|&x| f.add(f.mul(f.square(x), x), x) == beta)
        .count();
    Ok(count as u32)
}

/// `(M3, M1, M0)`: numbers of nonzero `beta` in GF(2^r) for which
/// `x^3 + x + beta` has three, one, or no roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct M013 {
    pub m3: u64,
    pub m1: u64,
    pub m0: u64,
}

/// Counts by tabulating `x^3 + x` over the field.
pub fn m013_census(r: u32, cap: u32) -> Result<M013> {
    let f = FieldCtx::new(r)?;
    let size = 1usize << r;
    f.check_enum(cap)?;
    let mut hits = vec![0u8; size];
    for x in f.enumerate(cap)? {
        let v = f.add(f.mul(f.square(x), x), x).0 as usize;
        hits[v] += 1;
    }
    let mut out = M013 { m3: 0, m1: 0, m0: 0 };
    for &h in &hits[1..] {
        match h {
            3 => out.m3 += 1,
            1 => out.m1 += 1,
            0 => out.m0 += 1,
            _ => return Err(Error::FormulaMismatch(format!("cubic with {h} roots"))),
        }
    }
    Ok(out)
}

/// Closed form for `(M3, M1, M0)`.
pub fn m013_formula(r: u32) -> (BigInt, BigInt, BigInt) {
    let h = pow2(r as u64 - 1);
    let q = pow2(r as u64);
    if r % 2 == 1 {
        ((&h - 1) / 3, &h - 1, (q + 1) / 3)
    } else {
        ((&h - 2) / 3, h, (q - 1) / 3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(family: Family, r: u32, n: u32, a: u64) -> u32 {
        QuadForm::new(family, r, n, FieldElement(a)).unwrap().radical_report().w
    }

    #[test]
    fn documented_dims() {
        assert_eq!(w(Family::C1, 1, 2, 1), 2);
        assert_eq!(w(Family::C1, 1, 3, 1), 1);
        assert_eq!(w(Family::C2, 1, 4, 1), 4);
        // 0b10 is a generator of GF(4)^*, hence a non-cube.
        assert_eq!(w(Family::C2, 2, 3, 0b10), 4);
        assert_eq!(w(Family::C3, 1, 2, 1), 2);
    }

    #[test]
    fn zero_counts_agree() {
        for fam in Family::ALL {
            for n in 1..=6 {
                let qf = QuadForm::new(fam, 2, n, FieldElement(2)).unwrap();
                let rep = qf.radical_report();
                assert_eq!(rep.zeros, qf.enumerate_zeros(26).unwrap(), "{fam} n={n}");
                assert_eq!((rep.m - rep.w) % 2, 0);
            }
        }
    }

    #[test]
    fn cubic_census() {
        let f1 = FieldCtx::new(1).unwrap();
        assert_eq!(cubic_root_count(&f1, FieldElement::ONE).unwrap(), 0);
        let f2 = FieldCtx::new(2).unwrap();
        // x^3 + x takes the values 0, 0, w, w^2 on GF(4), so beta = 1 has no root.
        assert_eq!(cubic_root_count(&f2, FieldElement::ONE).unwrap(), 0);
        assert_eq!(cubic_root_count(&f2, FieldElement(2)).unwrap(), 1);
        assert!(cubic_root_count(&f2, FieldElement::ZERO).is_err());
        let m = |r| m013_census(r, 26).unwrap();
        assert_eq!(m(1), M013 { m3: 0, m1: 0, m0: 1 });
        assert_eq!(m(2), M013 { m3: 0, m1: 2, m0: 1 });
        assert_eq!(m(3), M013 { m3: 1, m1: 3, m0: 3 });
        assert_eq!(m(4), M013 { m3: 2, m1: 8, m0: 5 });
        for r in 1..=10 {
            let (a, b, c) = m013_formula(r);
            let got = m(r);
            assert_eq!((a, b, c), (got.m3.into(), got.m1.into(), got.m0.into()));
        }
    }
}
