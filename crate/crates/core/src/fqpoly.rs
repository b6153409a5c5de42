//! Monic polynomials over GF(2^r) and a deterministic irreducibility test.

use rayon::prelude::*;

use crate::arith::prime_factors;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// A monic polynomial over GF(2^r), coefficients stored lowest degree first
/// as bit patterns in the canonical GF(2^r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixPoly {
    pub r: u32,
    pub coeffs: Vec<FieldElement>,
}

impl PrefixPoly {
    /// Builds a monic polynomial from its non-leading coefficients, lowest first.
    pub fn monic(r: u32, lower: &[FieldElement]) -> Self {
        let mut coeffs = lower.to_vec();
        coeffs.push(FieldElement::ONE);
        PrefixPoly { r, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

type Poly = Vec<FieldElement>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder modulo a monic polynomial.
fn rem_monic(f: &FieldCtx, a: &mut Poly, p: &[FieldElement]) {
    let d = p.len() - 1;
    trim(a);
    while a.len() > d {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - d;
        for (i, &c) in p.iter().enumerate() {
            a[shift + i] = f.add(a[shift + i], f.mul(lead, c));
        }
        trim(a);
    }
}

fn mul_mod(f: &FieldCtx, a: &[FieldElement], b: &[FieldElement], p: &[FieldElement]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    rem_monic(f, &mut out, p);
    out
}

fn gcd(f: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Result<Poly> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = f.inv(*b.last().unwrap())?;
        b = b.iter().map(|&c| f.mul(c, inv)).collect();
        rem_monic(f, &mut a, &b);
        std::mem::swap(&mut a, &mut b);
    }
    Ok(a)
}

/// Rabin's criterion with `h -> h^q` computed through the matrix of
/// `x^(i q) mod p`, which is valid because coefficients lie in GF(q).
pub fn is_irreducible(f: &FieldCtx, p: &PrefixPoly) -> Result<bool> {
    if p.r != f.degree() {
        return Err(Error::InvalidParameter("polynomial and field disagree on r".into()));
    }
    let n = p.degree();
    if n == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    if p.coeffs.last() != Some(&FieldElement::ONE) {
        return Err(Error::InvalidParameter("polynomial must be monic".into()));
    }
    if n == 1 {
        return Ok(true);
    }
    if p.coeffs[0].is_zero() {
        return Ok(false);
    }
    let m = &p.coeffs;
    let x: Poly = vec![FieldElement::ZERO, FieldElement::ONE];

    // x^q mod p by r squarings.
    let mut xq = x.clone();
    for _ in 0..f.degree() {
        xq = mul_mod(f, &xq, &xq, m);
    }
    let mut rows: Vec<Poly> = Vec::with_capacity(n);
    rows.push(vec![FieldElement::ONE]);
    for i in 1..n {
        let next = mul_mod(f, &rows[i - 1], &xq, m);
        rows.push(next);
    }
    let frob = |h: &Poly| -> Poly {
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &rc) in rows[i].iter().enumerate() {
                out[j] = f.add(out[j], f.mul(c, rc));
            }
        }
        trim(&mut out);
        out
    };

    // powers[k] = x^(q^k) mod p
    let mut powers: Vec<Poly> = Vec::with_capacity(n + 1);
    let mut h = x.clone();
    rem_monic(f, &mut h, m);
    powers.push(h.clone());
    for _ in 0..n {
        h = frob(&h);
        powers.push(h.clone());
    }
    let mut xr = x.clone();
    rem_monic(f, &mut xr, m);
    if powers[n] != xr {
        return Ok(false);
    }
    for l in prime_factors(n as u64) {
        let mut diff = powers[n / l as usize].clone();
        diff.resize(diff.len().max(2), FieldElement::ZERO);
        diff[1] = f.add(diff[1], FieldElement::ONE);
        trim(&mut diff);
        let g = gcd(f, m, &diff)?;
        if g.len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of irreducible monic polynomials
/// `x^n + t1 x^(n-1) + t2 x^(n-2) + t3 x^(n-3) + ...` over GF(2^r).
/// `cap` bounds `r (n - 3)`, the number of free coefficient bits.
pub fn count_irreducibles_with_prefix(
    r: u32,
    n: u32,
    t: [FieldElement; 3],
    cap: u32,
) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    let f = FieldCtx::new(r)?;
    for &c in &t {
        f.try_elem(c.0)?;
    }
    let free_bits = r * (n - 3);
    if free_bits > cap || free_bits >= 64 {
        return Err(Error::BudgetExceeded { bits: free_bits, cap });
    }
    let free = (n - 3) as usize;
    let total = 1u64 << free_bits;
    let mask = f.mask();
    let chunks = (rayon::current_num_threads() as u64 * 16).min(total);
    let step = total.div_ceil(chunks);
    let count = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut local = 0u64;
            let mut lower = vec![FieldElement::ZERO; n as usize];
            lower[free] = t[2];
            lower[free + 1] = t[1];
            lower[free + 2] = t[0];
            for k in (c * step)..((c + 1) * step).min(total) {
                for (i, slot) in lower.iter_mut().take(free).enumerate() {
                    *slot = FieldElement((k >> (r as usize * i)) & mask);
                }
                let p = PrefixPoly::monic(r, &lower);
                if is_irreducible(&f, &p).expect("well-formed polynomial") {
                    local += 1;
                }
            }
            local
        })
        .sum();
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2(bits: &[u64]) -> PrefixPoly {
        let cs: Vec<FieldElement> = bits.iter().map(|&b| FieldElement(b)).collect();
        PrefixPoly { r: 1, coeffs: cs }
    }

    #[test]
    fn small_cases() {
        let f = FieldCtx::new(1).unwrap();
        assert!(is_irreducible(&f, &gf2(&[1, 1, 1])).unwrap());
        assert!(is_irreducible(&f, &gf2(&[1, 1, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&f, &gf2(&[1, 1, 0, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&f, &gf2(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn prefix_counts() {
        let z = [FieldElement::ZERO; 3];
        assert_eq!(count_irreducibles_with_prefix(1, 4, z, 26).unwrap(), 0);
        assert_eq!(count_irreducibles_with_prefix(1, 5, z, 26).unwrap(), 0);
        assert_eq!(count_irreducibles_with_prefix(1, 7, z, 26).unwrap(), 3);
    }
}
