//! The first three elementary symmetric functions of the conjugates of an
//! element of GF(q^n) over GF(q), and exhaustive censuses of them.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement, LinearMap};

/// `(T1, T2, T3)` of an element, each an element of GF(q) inside GF(q^n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceTriple {
    pub t1: FieldElement,
    pub t2: FieldElement,
    pub t3: FieldElement,
}

/// Evaluates trace triples for one field and one base degree `r`.
#[derive(Debug, Clone)]
pub struct TraceEngine<'a> {
    ctx: &'a FieldCtx,
    r: u32,
    n: u32,
    frob: LinearMap,
}

impl<'a> TraceEngine<'a> {
    pub fn new(ctx: &'a FieldCtx, r: u32) -> Result<Self> {
        let m = ctx.degree();
        if r == 0 || m % r != 0 {
            return Err(Error::NotASubfield { r, m });
        }
        Ok(TraceEngine { ctx, r, n: m / r, frob: ctx.frobenius_map(r) })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.ctx
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `a -> a^q`.
    #[inline]
    pub fn frob(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.frob.apply(a.0))
    }

    /// Top coefficients of `prod_i (X + a^(q^i))`.
    #[inline]
    pub fn triple(&self, a: FieldElement) -> TraceTriple {
        let f = self.ctx;
        let (mut c1, mut c2, mut c3) = (FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO);
        let mut x = a;
        for _ in 0..self.n {
            c3 = f.add(c3, f.mul(x, c2));
            c2 = f.add(c2, f.mul(x, c1));
            c1 = f.add(c1, x);
            x = self.frob(x);
        }
        TraceTriple { t1: c1, t2: c2, t3: c3 }
    }

    /// Orbit length of `a` under `a -> a^q` if `a` is the smallest element
    /// of its orbit, else `None`.
    #[inline]
    pub fn orbit_if_minimal(&self, a: FieldElement) -> Option<u64> {
        let mut x = self.frob(a);
        let mut d = 1u64;
        while x != a {
            if x < a {
                return None;
            }
            x = self.frob(x);
            d += 1;
        }
        Some(d)
    }
}

/// Trace triple of `a` with respect to the subfield GF(2^r).
pub fn trace_triple(ctx: &FieldCtx, r: u32, a: FieldElement) -> Result<TraceTriple> {
    Ok(TraceEngine::new(ctx, r)?.triple(a))
}

/// Which coefficients a census keys on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusKind {
    FirstTwo,
    FirstThree,
}

/// Counts of elements of GF(q^n) by trace pattern. Keys are raw big-field
/// bit patterns; under `FirstTwo` the third key component is always zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCensus {
    pub r: u32,
    pub n: u32,
    pub kind: CensusKind,
    pub counts: BTreeMap<(u64, u64, u64), u64>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusRow {
    pub t1_bits: String,
    pub t2_bits: String,
    pub t3_bits: String,
    pub count: String,
}

impl TraceCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, t1: u64, t2: u64, t3: u64) -> u64 {
        self.counts.get(&(t1, t2, t3)).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> Vec<CensusRow> {
        self.counts
            .iter()
            .map(|(&(a, b, c), &n)| CensusRow {
                t1_bits: a.to_string(),
                t2_bits: b.to_string(),
                t3_bits: c.to_string(),
                count: n.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = serde_json::json!({
            "r": self.r.to_string(),
            "n": self.n.to_string(),
            "kind": self.kind,
            "rows": self.rows(),
        });
        serde_json::to_string_pretty(&doc).expect("census serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t1_bits,t2_bits,t3_bits,count\n");
        for row in self.rows() {
            out.push_str(&format!("{},{},{},{}\n", row.t1_bits, row.t2_bits, row.t3_bits, row.count));
        }
        out
    }
}

fn sweep_range<F>(engine: &TraceEngine<'_>, range: Range<u64>, mut visit: F)
where
    F: FnMut(TraceTriple, u64),
{
    for bits in range {
        let a = FieldElement(bits);
        if let Some(d) = engine.orbit_if_minimal(a) {
            visit(engine.triple(a), d);
        }
    }
}

fn parts_for(ctx: &FieldCtx, cap: u32) -> Result<Vec<Range<u64>>> {
    let threads = rayon::current_num_threads() as u64;
    ctx.partition(cap, threads * 16)
}

/// Full census of trace patterns over GF(2^(r n)).
pub fn trace_census(r: u32, n: u32, kind: CensusKind, cap: u32) -> Result<TraceCensus> {
    let ctx = FieldCtx::new(r.checked_mul(n).ok_or(Error::InvalidDegree(u32::MAX))?)?;
    let engine = TraceEngine::new(&ctx, r)?;
    let parts = parts_for(&ctx, cap)?;
    let counts = parts
        .into_par_iter()
        .map(|range| {
            let mut local: BTreeMap<(u64, u64, u64), u64> = BTreeMap::new();
            sweep_range(&engine, range, |t, d| {
                let t3 = if kind == CensusKind::FirstThree { t.t3.0 } else { 0 };
                *local.entry((t.t1.0, t.t2.0, t3)).or_default() += d;
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(TraceCensus { r, n, kind, counts })
}

/// Number of elements of GF(2^(r n)) whose trace triple satisfies `pred`.
pub fn count_traces_where<P>(r: u32, n: u32, cap: u32, pred: P) -> Result<u64>
where
    P: Fn(&TraceTriple) -> bool + Sync,
{
    let ctx = FieldCtx::new(r.checked_mul(n).ok_or(Error::InvalidDegree(u32::MAX))?)?;
    let engine = TraceEngine::new(&ctx, r)?;
    let parts = parts_for(&ctx, cap)?;
    Ok(parts
        .into_par_iter()
        .map(|range| {
            let mut acc = 0u64;
            sweep_range(&engine, range, |t, d| {
                if pred(&t) {
                    acc += d;
                }
            });
            acc
        })
        .sum())
}

/// Outcome of checking the addition laws for `T2` and `T3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `T2(a+b) = T2(a) + T2(b) + T1(a)T1(b) + T1(ab)`.
    pub t2_law: bool,
    /// `T3(a+b) = T3(a) + T3(b) + T2(a)T1(b) + T1(a)T2(b) + T1(a^2 b + a b^2) + T1(ab)T1(a+b)`.
    pub t3_law: bool,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.t2_law && self.t3_law
    }
}

/// Checks the addition laws for `T2` and `T3` at one pair of elements.
pub fn t2_t3_identity_check(
    ctx: &FieldCtx,
    r: u32,
    a: FieldElement,
    b: FieldElement,
) -> Result<IdentityReport> {
    let e = TraceEngine::new(ctx, r)?;
    let f = ctx;
    let ta = e.triple(a);
    let tb = e.triple(b);
    let tsum = e.triple(f.add(a, b));
    let tprod = e.triple(f.mul(a, b));
    let mixed = f.add(f.mul(f.square(a), b), f.mul(a, f.square(b)));
    let tmixed = e.triple(mixed);

    let lhs2 = f.add(f.add(tsum.t2, ta.t2), tb.t2);
    let rhs2 = f.add(f.mul(ta.t1, tb.t1), tprod.t1);

    let lhs3 = f.add(f.add(tsum.t3, ta.t3), tb.t3);
    let mut rhs3 = f.add(f.mul(ta.t2, tb.t1), f.mul(ta.t1, tb.t2));
    rhs3 = f.add(rhs3, tmixed.t1);
    rhs3 = f.add(rhs3, f.mul(tprod.t1, tsum.t1));

    Ok(IdentityReport { t2_law: lhs2 == rhs2, t3_law: lhs3 == rhs3 })
}

/// Outcome of the counting identity
/// `q N(0,0) = Z(f1) + sum_alpha Z(alpha f1 + f2) - |domain|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitzReport {
    pub joint_zeros: u64,
    pub rhs: BigRational,
    pub holds: bool,
}

/// `f1[x]`, `f2[x]` are the bit patterns of GF(q) values over one domain,
/// with `field` the context of GF(q).
pub fn generalized_fitz_check(field: &FieldCtx, f1: &[u64], f2: &[u64]) -> Result<FitzReport> {
    if f1.len() != f2.len() {
        return Err(Error::InvalidParameter("value tables differ in length".into()));
    }
    let q = field.order().ok_or(Error::BudgetExceeded { bits: field.degree(), cap: 63 })?;
    let zeros = |vals: &mut dyn Iterator<Item = u64>| vals.filter(|&v| v == 0).count() as u64;
    let joint = f1.iter().zip(f2).filter(|(&a, &b)| a == 0 && b == 0).count() as u64;
    let z1 = zeros(&mut f1.iter().copied());
    let mut sum = 0u64;
    for alpha in 0..q {
        let al = field.elem(alpha);
        sum += zeros(&mut f1
            .iter()
            .zip(f2)
            .map(|(&a, &b)| field.add(field.mul(al, field.elem(a)), field.elem(b)).0));
    }
    let numer = BigInt::from(z1) + BigInt::from(sum) - BigInt::from(f1.len() as u64);
    let rhs = BigRational::new(numer, BigInt::from(q));
    let holds = rhs == BigRational::from_integer(BigInt::from(joint));
    Ok(FitzReport { joint_zeros: joint, rhs, holds })
}
