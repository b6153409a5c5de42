//! Arithmetic in GF(2^m) for 1 <= m <= 64.
//!
//! Elements are bit-packed polynomials in `x` modulo a fixed irreducible
//! polynomial of degree `m`. Bit `i` of an element is the coefficient of
//! `x^i`. Elements carry no reference to their context; mixing elements
//! from different contexts is a logic error that is only caught by debug
//! assertions.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 64;

/// Default cap, in bits, for exhaustive enumeration of a field.
pub const DEFAULT_ENUM_CAP: u32 = 26;

/// An element of some GF(2^m).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// A GF(2)-linear map on bit vectors of length at most 64, applied through
/// one 256-entry lookup table per input byte.
#[derive(Clone)]
pub struct LinearMap {
    tables: Vec<[u64; 256]>,
}

impl LinearMap {
    /// Builds the map sending basis vector `e_i` to `images[i]`.
    pub fn from_images(images: &[u64]) -> Self {
        let chunks = images.len().div_ceil(8);
        let mut tables = vec![[0u64; 256]; chunks];
        for (c, table) in tables.iter_mut().enumerate() {
            for b in 1..256usize {
                let low = b.trailing_zeros() as usize;
                let idx = c * 8 + low;
                let img = images.get(idx).copied().unwrap_or(0);
                table[b] = table[b & (b - 1)] ^ img;
            }
        }
        LinearMap { tables }
    }

    #[inline]
    pub fn apply(&self, v: u64) -> u64 {
        let mut out = 0u64;
        let mut v = v;
        for table in &self.tables {
            out ^= table[(v & 0xff) as usize];
            v >>= 8;
        }
        out
    }

    /// Images of the basis vectors, recovered from the tables.
    pub fn images(&self, dim: u32) -> Vec<u64> {
        (0..dim).map(|i| self.apply(1u64 << i)).collect()
    }

    /// The composition `self` after `other`.
    pub fn compose(&self, other: &LinearMap, dim: u32) -> LinearMap {
        let imgs: Vec<u64> = other.images(dim).into_iter().map(|v| self.apply(v)).collect();
        LinearMap::from_images(&imgs)
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearMap").field("chunks", &self.tables.len()).finish()
    }
}

/// Arithmetic context for GF(2^m).
#[derive(Clone)]
pub struct FieldCtx {
    degree: u32,
    modulus: u128,
    mask: u64,
    reduce: Vec<[u64; 256]>,
    square: LinearMap,
    trace_mask: u64,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl FieldCtx {
    /// Context over the canonical modulus: the irreducible polynomial of
    /// degree `m` whose bit pattern is numerically smallest.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::InvalidDegree(m));
        }
        let modulus = gf2poly::smallest_irreducible(m);
        Self::with_modulus(m, modulus)
    }

    /// Context over a caller-supplied modulus, given as a bit pattern that
    /// includes the leading `x^m` term.
    pub fn with_modulus(m: u32, modulus: u128) -> Result<Self> {
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::InvalidDegree(m));
        }
        if gf2poly::degree(modulus) != Some(m) || !gf2poly::is_irreducible(modulus) {
            return Err(Error::NotIrreducible(modulus));
        }
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        // reduce[j][b] = b(x) * x^(m + 8j) mod f
        let high_bits = m.saturating_sub(1);
        let chunks = high_bits.div_ceil(8) as usize;
        let mut reduce = vec![[0u64; 256]; chunks];
        for (j, table) in reduce.iter_mut().enumerate() {
            let shift = m + 8 * j as u32;
            let basis: Vec<u64> = (0..8)
                .map(|k| gf2poly::rem(1u128 << (shift + k), modulus) as u64)
                .collect();
            for b in 1..256usize {
                let low = b.trailing_zeros() as usize;
                table[b] = table[b & (b - 1)] ^ basis[low];
            }
        }
        let mut ctx = FieldCtx {
            degree: m,
            modulus,
            mask,
            reduce,
            square: LinearMap::from_images(&[]),
            trace_mask: 0,
        };
        let sq_images: Vec<u64> = (0..m).map(|i| ctx.mul_raw(1u64 << i, 1u64 << i)).collect();
        ctx.square = LinearMap::from_images(&sq_images);
        let mut tmask = 0u64;
        for i in 0..m {
            if ctx.trace_slow(1u64 << i) {
                tmask |= 1u64 << i;
            }
        }
        ctx.trace_mask = tmask;
        Ok(ctx)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Modulus bit pattern including the leading term.
    #[inline]
    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Number of elements, if it fits in a `u64`.
    pub fn order(&self) -> Option<u64> {
        1u64.checked_shl(self.degree).filter(|_| self.degree < 64)
    }

    #[inline]
    pub fn elem(&self, bits: u64) -> FieldElement {
        debug_assert!(bits & !self.mask == 0, "element outside field");
        FieldElement(bits & self.mask)
    }

    /// Checked conversion from raw bits.
    pub fn try_elem(&self, bits: u64) -> Result<FieldElement> {
        if bits & !self.mask != 0 {
            return Err(Error::ElementOutOfRange { bits, degree: self.degree });
        }
        Ok(FieldElement(bits))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.0 & !self.mask == 0 && b.0 & !self.mask == 0);
        FieldElement(self.mul_raw(a.0, b.0))
    }

    #[inline]
    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        self.reduce_wide(clmul(a, b))
    }

    #[inline]
    fn reduce_wide(&self, p: u128) -> u64 {
        let m = self.degree;
        let mut out = (p as u64) & self.mask;
        let mut high = (p >> m) as u64;
        for table in &self.reduce {
            out ^= table[(high & 0xff) as usize];
            high >>= 8;
        }
        out
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.square.apply(a.0))
    }

    /// The squaring map as a linear map.
    pub fn square_map(&self) -> &LinearMap {
        &self.square
    }

    pub fn pow(&self, a: FieldElement, e: u128) -> FieldElement {
        let mut result = FieldElement::ONE;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse via `a^(2^m - 2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // a^(2^m - 2) = prod_{i=1}^{m-1} a^(2^i)
        let mut result = FieldElement::ONE;
        let mut t = a;
        for _ in 1..self.degree {
            t = self.square(t);
            result = self.mul(result, t);
        }
        Ok(result)
    }

    /// `a^(2^k)` with `k` reduced modulo the degree.
    pub fn frobenius_iter(&self, a: FieldElement, k: u64) -> FieldElement {
        let k = k % self.degree as u64;
        let mut x = a;
        for _ in 0..k {
            x = self.square(x);
        }
        x
    }

    /// The map `a -> a^(2^k)` as a linear map.
    pub fn frobenius_map(&self, k: u32) -> LinearMap {
        let k = k % self.degree;
        let imgs: Vec<u64> = (0..self.degree)
            .map(|i| self.frobenius_iter(FieldElement(1u64 << i), k as u64).0)
            .collect();
        LinearMap::from_images(&imgs)
    }

    fn check_subdegree(&self, r: u32) -> Result<()> {
        if r == 0 || self.degree % r != 0 {
            return Err(Error::NotASubfield { r, m: self.degree });
        }
        Ok(())
    }

    /// Trace from GF(2^m) down to GF(2^r), for `r | m`.
    pub fn relative_trace(&self, a: FieldElement, r: u32) -> Result<FieldElement> {
        self.check_subdegree(r)?;
        let mut acc = FieldElement::ZERO;
        let mut x = a;
        for _ in 0..self.degree / r {
            acc = self.add(acc, x);
            x = self.frobenius_iter(x, r as u64);
        }
        Ok(acc)
    }

    /// The relative trace down to GF(2^r) as a linear map.
    pub fn relative_trace_map(&self, r: u32) -> Result<LinearMap> {
        self.check_subdegree(r)?;
        let imgs: Vec<u64> = (0..self.degree)
            .map(|i| self.relative_trace(FieldElement(1u64 << i), r).map(|e| e.0))
            .collect::<Result<_>>()?;
        Ok(LinearMap::from_images(&imgs))
    }

    fn trace_slow(&self, a: u64) -> bool {
        let mut acc = 0u64;
        let mut x = a;
        for _ in 0..self.degree {
            acc ^= x;
            x = self.square.apply(x);
        }
        debug_assert!(acc <= 1);
        acc == 1
    }

    /// Absolute trace to GF(2).
    #[inline]
    pub fn trace(&self, a: FieldElement) -> bool {
        (a.0 & self.trace_mask).count_ones() & 1 == 1
    }

    /// Bit mask `t` with `Tr(a) = parity(a & t)`.
    pub fn trace_mask(&self) -> u64 {
        self.trace_mask
    }

    /// Bit mask `t` with `Tr(c * a) = parity(a & t)`.
    pub fn scaled_trace_mask(&self, c: FieldElement) -> u64 {
        let mut t = 0u64;
        for i in 0..self.degree {
            if self.trace(self.mul(c, FieldElement(1u64 << i))) {
                t |= 1u64 << i;
            }
        }
        t
    }

    pub fn is_in_subfield(&self, a: FieldElement, r: u32) -> Result<bool> {
        self.check_subdegree(r)?;
        Ok(self.frobenius_iter(a, r as u64) == a)
    }

    /// A GF(2)-basis of the subfield GF(2^r), in reduced echelon form.
    pub fn subfield_basis(&self, r: u32) -> Result<Vec<FieldElement>> {
        self.check_subdegree(r)?;
        let frob = self.frobenius_map(r);
        let rows: Vec<u64> = (0..self.degree)
            .map(|i| frob.apply(1u64 << i) ^ (1u64 << i))
            .collect();
        let kernel = crate::gf2mat::kernel(&rows, self.degree);
        debug_assert_eq!(kernel.len() as u32, r);
        Ok(kernel.into_iter().map(FieldElement).collect())
    }

    /// All elements of the subfield GF(2^r) in increasing bit order.
    pub fn subfield_elements(&self, r: u32) -> Result<Vec<FieldElement>> {
        if r > DEFAULT_ENUM_CAP {
            return Err(Error::BudgetExceeded { bits: r, cap: DEFAULT_ENUM_CAP });
        }
        let basis = self.subfield_basis(r)?;
        let mut out = Vec::with_capacity(1usize << r);
        for idx in 0u64..(1u64 << r) {
            let mut v = 0u64;
            for (j, b) in basis.iter().enumerate() {
                if (idx >> j) & 1 == 1 {
                    v ^= b.0;
                }
            }
            out.push(FieldElement(v));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Enumerates every element in increasing bit order, subject to `cap`.
    pub fn enumerate(&self, cap: u32) -> Result<impl Iterator<Item = FieldElement>> {
        self.check_enum(cap)?;
        Ok((0..(1u64 << self.degree)).map(FieldElement))
    }

    /// Splits the enumeration into `parts` contiguous ranges of raw bits.
    pub fn partition(&self, cap: u32, parts: u64) -> Result<Vec<Range<u64>>> {
        self.check_enum(cap)?;
        let total = 1u64 << self.degree;
        let parts = parts.clamp(1, total);
        let step = total.div_ceil(parts);
        Ok((0..parts)
            .map(|i| (i * step)..((i + 1) * step).min(total))
            .filter(|r| !r.is_empty())
            .collect())
    }

    pub fn check_enum(&self, cap: u32) -> Result<()> {
        if self.degree > cap || self.degree >= 64 {
            return Err(Error::BudgetExceeded { bits: self.degree, cap });
        }
        Ok(())
    }
}

/// An embedding of the canonical GF(2^r) into the canonical GF(2^m).
#[derive(Debug, Clone)]
pub struct Embedding {
    r: u32,
    /// Images of `1, x, ..., x^(r-1)`.
    images: Vec<FieldElement>,
}

impl Embedding {
    /// Sends the generator `x` of the small field to the numerically smallest
    /// root of the small field's modulus in the big field.
    pub fn new(small: &FieldCtx, big: &FieldCtx) -> Result<Self> {
        let r = small.degree();
        big.check_subdegree(r)?;
        let f = small.modulus();
        let eval = |t: FieldElement| -> FieldElement {
            let mut acc = FieldElement::ZERO;
            for i in (0..=r).rev() {
                acc = big.mul(acc, t);
                if (f >> i) & 1 == 1 {
                    acc = big.add(acc, FieldElement::ONE);
                }
            }
            acc
        };
        let basis = big.subfield_basis(r)?;
        let mut best: Option<FieldElement> = None;
        for idx in 1u64..(1u64 << r) {
            let mut v = 0u64;
            for (j, b) in basis.iter().enumerate() {
                if (idx >> j) & 1 == 1 {
                    v ^= b.0;
                }
            }
            let t = FieldElement(v);
            if best.is_some_and(|b| b <= t) {
                continue;
            }
            if eval(t).is_zero() {
                best = Some(t);
            }
        }
        let theta = best.expect("irreducible modulus has a root in the extension");
        let mut images = Vec::with_capacity(r as usize);
        let mut p = FieldElement::ONE;
        for _ in 0..r {
            images.push(p);
            p = big.mul(p, theta);
        }
        Ok(Embedding { r, images })
    }

    pub fn small_degree(&self) -> u32 {
        self.r
    }

    /// Image of `x^i` for `i < r`.
    pub fn basis(&self) -> &[FieldElement] {
        &self.images
    }

    pub fn apply(&self, a: FieldElement) -> FieldElement {
        let mut v = 0u64;
        for (j, img) in self.images.iter().enumerate() {
            if (a.0 >> j) & 1 == 1 {
                v ^= img.0;
            }
        }
        FieldElement(v)
    }
}

#[inline]
pub(crate) fn clmul(a: u64, b: u64) -> u128 {
    #[cfg(target_arch = "x86_64")]
    {
        if std::arch::is_x86_feature_detected!("pclmulqdq") {
            // SAFETY: the feature was detected at runtime.
            return unsafe { clmul_pclmul(a, b) };
        }
    }
    clmul_soft(a, b)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq", enable = "sse2")]
unsafe fn clmul_pclmul(a: u64, b: u64) -> u128 {
    use std::arch::x86_64::*;
    let x = _mm_set_epi64x(0, a as i64);
    let y = _mm_set_epi64x(0, b as i64);
    let p = _mm_clmulepi64_si128(x, y, 0);
    let lo = _mm_cvtsi128_si64(p) as u64;
    let hi = _mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)) as u64;
    ((hi as u128) << 64) | lo as u128
}

/// Portable carry-less multiply with a 4-bit window.
pub(crate) fn clmul_soft(a: u64, b: u64) -> u128 {
    let mut table = [0u128; 16];
    let b = b as u128;
    for i in 1..16usize {
        let low = i.trailing_zeros();
        table[i] = table[i & (i - 1)] ^ (b << low);
    }
    let mut out = 0u128;
    for k in (0..16).rev() {
        out <<= 4;
        out ^= table[((a >> (4 * k)) & 0xf) as usize];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli() {
        assert_eq!(FieldCtx::new(1).unwrap().modulus(), 0b11);
        assert_eq!(FieldCtx::new(2).unwrap().modulus(), 0b111);
        assert_eq!(FieldCtx::new(3).unwrap().modulus(), 0b1011);
        assert_eq!(FieldCtx::new(4).unwrap().modulus(), 0b10011);
        assert_eq!(FieldCtx::new(8).unwrap().modulus(), 0x11b);
        assert_eq!(FieldCtx::new(64).unwrap().modulus(), (1u128 << 64) | 0x1b);
    }

    #[test]
    fn soft_and_hardware_clmul_agree() {
        let samples = [0u64, 1, 3, 0xdead_beef, u64::MAX, 0x8000_0000_0000_0001];
        for &a in &samples {
            for &b in &samples {
                assert_eq!(clmul(a, b), clmul_soft(a, b));
            }
        }
    }

    #[test]
    fn inverse_in_gf256() {
        let f = FieldCtx::new(8).unwrap();
        let a = f.elem(0x53);
        assert_eq!(f.inv(a).unwrap(), f.elem(0xca));
        assert!(f.inv(FieldElement::ZERO).is_err());
    }

    #[test]
    fn trace_mask_matches_definition() {
        for m in 1..=10 {
            let f = FieldCtx::new(m).unwrap();
            for a in f.enumerate(DEFAULT_ENUM_CAP).unwrap() {
                assert_eq!(f.trace(a), f.trace_slow(a.0));
            }
        }
    }

    #[test]
    fn subfield_sizes() {
        let f = FieldCtx::new(12).unwrap();
        for r in [1, 2, 3, 4, 6, 12] {
            let els = f.subfield_elements(r).unwrap();
            assert_eq!(els.len(), 1 << r);
            assert!(els.iter().all(|&e| f.is_in_subfield(e, r).unwrap()));
        }
        assert!(f.subfield_basis(5).is_err());
    }

    #[test]
    fn embedding_is_multiplicative() {
        let small = FieldCtx::new(3).unwrap();
        let big = FieldCtx::new(12).unwrap();
        let e = Embedding::new(&small, &big).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                let (a, b) = (small.elem(a), small.elem(b));
                assert_eq!(e.apply(small.mul(a, b)), big.mul(e.apply(a), e.apply(b)));
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let f = FieldCtx::new(30).unwrap();
        assert!(matches!(f.enumerate(DEFAULT_ENUM_CAP), Err(Error::BudgetExceeded { .. })));
        assert!(f.enumerate(30).is_ok());
        let g = FieldCtx::new(5).unwrap();
        let parts = g.partition(DEFAULT_ENUM_CAP, 3).unwrap();
        assert_eq!(parts.iter().map(|r| r.end - r.start).sum::<u64>(), 32);
    }
}
