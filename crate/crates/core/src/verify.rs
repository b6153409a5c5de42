//! Cross-checks between enumeration and closed forms, collected into a report.

use std::fmt::Display;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::pow2;
use crate::closed_forms::{f2_table1, f2_table2, f2_trace_one, f_q000, i_q000, t1t2_eigen_form, t1t2t3_eigen_form};
use crate::curves::{
    closed_count_combined, closed_count_twist, fourier_form_count, frobenius_charpoly, kani_rosen_closed,
    supersingularity_certificate, sweep_counts, twist_class, Family, FrobeniusData, IntPoly,
};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::field::{FieldElement, DEFAULT_ENUM_CAP};
use crate::fourier::{analyze_sequence, default_candidates, dft_extract, normalize};
use crate::fqpoly::count_irreducibles_with_prefix;
use crate::quadform::{expected_radical_dim, m013_census, m013_formula, QuadForm};
use crate::traces::{trace_census, CensusKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Tables,
    Curves,
    Quadforms,
    Fourier,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tables" => Suite::Tables,
            "curves" => Suite::Curves,
            "quadforms" => Suite::Quadforms,
            "fourier" => Suite::Fourier,
            "all" => Suite::All,
            _ => return Err(Error::InvalidParameter(format!("unknown suite {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub params: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub max_bits: u32,
    pub checks: Vec<Check>,
    /// Documented discrepancies that are reported but do not fail the run.
    pub notes: Vec<String>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Default)]
struct Collector {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Collector {
    fn eq<T: PartialEq + Display>(&mut self, id: &str, params: String, expected: T, got: T) {
        let pass = expected == got;
        self.checks.push(Check { id: id.into(), params, expected: expected.to_string(), got: got.to_string(), pass });
    }

    fn holds(&mut self, id: &str, params: String, ok: bool) {
        self.eq(id, params, true, ok);
    }

    /// Records an error as a failed check.
    fn attempt(&mut self, id: &str, params: String, f: impl FnOnce(&mut Self) -> Result<()>) {
        if let Err(e) = f(self) {
            self.checks.push(Check { id: id.into(), params, expected: "no error".into(), got: e.to_string(), pass: false });
        }
    }
}

pub fn run(suite: Suite, max_bits: u32) -> Result<VerificationReport> {
    if max_bits > DEFAULT_ENUM_CAP {
        return Err(Error::BudgetExceeded { bits: max_bits, cap: DEFAULT_ENUM_CAP });
    }
    let mut c = Collector::default();
    if matches!(suite, Suite::Tables | Suite::All) {
        tables(&mut c, max_bits);
    }
    if matches!(suite, Suite::Curves | Suite::All) {
        curves(&mut c, max_bits);
    }
    if matches!(suite, Suite::Quadforms | Suite::All) {
        quadforms(&mut c, max_bits);
    }
    if matches!(suite, Suite::Fourier | Suite::All) {
        fourier(&mut c, max_bits);
    }
    let passed = c.checks.iter().filter(|k| k.pass).count();
    let summary = Summary { total: c.checks.len(), passed, failed: c.checks.len() - passed };
    Ok(VerificationReport { suite, max_bits, checks: c.checks, notes: c.notes, summary, wall_time_ms: None })
}

const TABLE5_R: [u32; 7] = [1, 2, 3, 4, 6, 8, 12];

fn tables(c: &mut Collector, max_bits: u32) {
    for n in 2..=max_bits {
        let p = format!("r=1 n={n}");
        c.attempt("census.r1", p.clone(), |c| {
            let census = trace_census(1, n, CensusKind::FirstThree, max_bits)?;
            for t1 in 0..2u8 {
                for t2 in 0..2u8 {
                    let got: u64 = (0..2).map(|t3| census.get(t1 as u64, t2 as u64, t3)).sum();
                    let want = pow2(n as u64 - 2) + f2_table1(n as u64, t1, t2)?.value;
                    c.eq("table1", format!("n={n} t=({t1},{t2})"), want, BigInt::from(got));
                }
            }
            if n >= 3 {
                for t2 in 0..2u8 {
                    for t3 in 0..2u8 {
                        let base = pow2(n as u64 - 3);
                        let got = BigInt::from(census.get(0, t2 as u64, t3 as u64));
                        c.eq("table2", format!("n={n} t=(0,{t2},{t3})"), &base + f2_table2(n as u64, t2, t3)?.value, got);
                        let got = BigInt::from(census.get(1, t2 as u64, t3 as u64));
                        c.eq("trace-one", format!("n={n} t=(1,{t2},{t3})"), base + f2_trace_one(n as u64, t2, t3)?.value, got);
                    }
                }
            }
            Ok(())
        });
    }
    for r in TABLE5_R {
        for n in 1..=max_bits / r {
            c.attempt("table5", format!("r={r} n={n}"), |c| {
                let census = trace_census(r, n, CensusKind::FirstThree, max_bits)?;
                c.eq("table5", format!("r={r} n={n}"), f_q000(r, n as u64)?.value, BigInt::from(census.get(0, 0, 0)));
                Ok(())
            });
        }
    }
    for r in 1..=8u32 {
        for n in 1..=2u64 {
            c.attempt("table5.small-n", format!("r={r} n={n}"), |c| {
                c.eq("table5.small-n", format!("r={r} n={n}"), BigInt::from(1), f_q000(r, n)?.value);
                Ok(())
            });
        }
    }
    for r in 1..=3u32 {
        for n in 3..=(max_bits / r) {
            c.attempt("irreducibles", format!("q=2^{r} n={n}"), |c| {
                let zero = [FieldElement::ZERO; 3];
                let got = count_irreducibles_with_prefix(r, n, zero, max_bits)?;
                c.eq("irreducibles", format!("q=2^{r} n={n}"), i_q000(r, n as u64)?.value, BigInt::from(got));
                Ok(())
            });
        }
    }
}

fn curves(c: &mut Collector, max_bits: u32) {
    let mut printed_mismatch = 0usize;
    for fam in Family::ALL {
        for r in 1..=max_bits.min(6) {
            let fd = match frobenius_charpoly(fam, r) {
                Ok(fd) => fd,
                Err(e) => {
                    c.eq("charpoly", format!("{fam} r={r}"), "valid".to_string(), e.to_string());
                    continue;
                }
            };
            for n in 1..=max_bits / r {
                let p = format!("{fam} r={r} n={n}");
                c.attempt("curve.sweep", p.clone(), |c| {
                    let s = sweep_counts(fam, r, n, max_bits)?;
                    let n64 = n as u64;
                    c.eq("curve.table", p.clone(), closed_count_combined(fam, r, n64)?.value, s.combined.clone());
                    c.eq("curve.fourier", p.clone(), fourier_form_count(fam, r, n64)?.value, s.combined.clone());
                    c.eq("curve.charpoly", p.clone(), fd.predicted_count(n64), s.combined.clone());
                    for a in 1..(1u64 << r) {
                        let class = twist_class(fam, r, FieldElement(a))?;
                        let want = closed_count_twist(fam, class, r, n64)?.value;
                        c.eq("twist", format!("{p} alpha={a} class={class:?}"), want, s.twists[a as usize].clone());
                    }
                    let sum: BigInt = s.twists.iter().skip(1).sum();
                    let diff = sum - &s.combined;
                    let q = pow2(r as u64);
                    let qn1 = pow2(r as u64 * n64) + 1;
                    c.eq("kani-rosen", p.clone(), (&q - 2) * &qn1, diff.clone());
                    if -diff != qn1 * (q - 1) - 1 {
                        printed_mismatch += 1;
                    }
                    Ok(())
                });
            }
        }
        for r in 1..=12u32 {
            c.attempt("charpoly", format!("{fam} r={r}"), |c| {
                let fd = frobenius_charpoly(fam, r)?;
                c.eq("charpoly.degree", format!("{fam} r={r}"), fam.genus(r) * 2, fd.degree());
                c.holds("charpoly.supersingular", format!("{fam} r={r}"), supersingularity_certificate(&fd));
                for n in [50u64, 100, 200] {
                    let p = format!("{fam} r={r} n={n}");
                    let table = closed_count_combined(fam, r, n)?.value;
                    c.eq("curve.fourier", p.clone(), table.clone(), fourier_form_count(fam, r, n)?.value);
                    c.eq("curve.charpoly", p.clone(), table, fd.predicted_count(n));
                }
                let kr = kani_rosen_closed(fam, r, 7)?;
                c.holds("kani-rosen.closed", format!("{fam} r={r} n=7"), kr.derived_holds);
                Ok(())
            });
        }
    }
    let ordinary = FrobeniusData { r: 1, factors: vec![(IntPoly::from_i64(&[2, -3, 1]), BigInt::from(1))] };
    c.eq("charpoly.ordinary", "X^2 - 3X + 2".into(), false, supersingularity_certificate(&ordinary));
    c.notes.push(format!(
        "printed product-identity corollary, C - sum of twists = (q^n+1)(q-1) - 1, disagrees with the counts in \
         {printed_mismatch} tested cases; the identity sum of twists - C = (q-2)(q^n+1) is the one checked"
    ));
}

fn quadforms(c: &mut Collector, max_bits: u32) {
    for fam in Family::ALL {
        for r in 1..=3u32 {
            for n in 1..=8u32.min(max_bits / r) {
                for a in 1..(1u64 << r) {
                    let p = format!("{fam} r={r} n={n} alpha={a}");
                    c.attempt("quadform", p.clone(), |c| {
                        let qf = QuadForm::new(fam, r, n, FieldElement(a))?;
                        let rep = qf.radical_report();
                        let class = twist_class(fam, r, FieldElement(a))?;
                        let want = expected_radical_dim(fam, class, r, n)
                            .ok_or_else(|| Error::InvalidParameter(format!("{class:?} for {fam}")))?;
                        c.eq("quadform.w", p.clone(), want, rep.w);
                        c.holds("quadform.parity", p.clone(), (rep.m - rep.w) % 2 == 0);
                        if r * n <= max_bits.min(18) {
                            c.eq("quadform.zeros", p.clone(), qf.enumerate_zeros(max_bits)?, rep.zeros.clone());
                        }
                        Ok(())
                    });
                }
            }
        }
    }
    for r in 1..=max_bits.min(14) {
        c.attempt("m013", format!("r={r}"), |c| {
            let m = m013_census(r, max_bits)?;
            let (a, b, d) = m013_formula(r);
            c.eq("m013", format!("r={r}"), format!("({a},{b},{d})"), format!("({},{},{})", m.m3, m.m1, m.m0));
            Ok(())
        });
    }
}

fn by_angle(terms: &[(Cyclotomic, u32)]) -> Result<Vec<Cyclotomic>> {
    let mut out = vec![Cyclotomic::zero(24)?; 24];
    for (w, k) in terms {
        out[*k as usize] = &out[*k as usize] + w;
    }
    Ok(out)
}

fn fourier(c: &mut Collector, max_bits: u32) {
    c.attempt("fourier.table1", String::new(), |c| {
        for t1 in 0..2u8 {
            for t2 in 0..2u8 {
                let vals = (24..48u64)
                    .map(|n| normalize(&f2_table1(n, t1, t2)?.value, 1, n))
                    .collect::<Result<Vec<_>>>()?;
                let f = dft_extract(&vals, 1)?;
                c.holds("fourier.table1", format!("t=({t1},{t2})"), f.coeffs == by_angle(&t1t2_eigen_form(t1, t2).terms)?);
            }
        }
        Ok(())
    });
    c.attempt("fourier.table2", String::new(), |c| {
        for t2 in 0..2u8 {
            for t3 in 0..2u8 {
                let vals = (24..48u64)
                    .map(|n| normalize(&f2_table2(n, t2, t3)?.value, 1, n))
                    .collect::<Result<Vec<_>>>()?;
                let f = dft_extract(&vals, 1)?;
                let want = by_angle(&t1t2t3_eigen_form(0, t2, t3).terms)?;
                c.holds("fourier.table2", format!("t=(0,{t2},{t3})"), f.coeffs == want);
            }
        }
        Ok(())
    });
    // Period detection: enumerated values where the budget allows, table
    // values beyond.
    c.attempt("fourier.period.q2", String::new(), |c| {
        let mut seq = Vec::new();
        for n in 2..=33u32 {
            let f = if n <= max_bits {
                let census = trace_census(1, n, CensusKind::FirstTwo, max_bits)?;
                BigInt::from(census.get(0, 0, 0)) - pow2(n as u64 - 2)
            } else {
                f2_table1(n as u64, 0, 0)?.value
            };
            seq.push(f);
        }
        let f = analyze_sequence(&seq, 2, 1, &default_candidates())?;
        c.eq("fourier.period", format!("q=2 n=2..33 enumerated to n={}", max_bits.min(33)), 8, f.period);
        Ok(())
    });
    c.attempt("fourier.period.q4", String::new(), |c| {
        let mut seq = Vec::new();
        for n in 3..=50u32 {
            let f = if 2 * n <= max_bits {
                let census = trace_census(2, n, CensusKind::FirstThree, max_bits)?;
                BigInt::from(census.get(0, 0, 0))
            } else {
                f_q000(2, n as u64)?.value
            };
            seq.push(f - pow2(2 * (n as u64 - 3)));
        }
        let f = analyze_sequence(&seq, 3, 2, &default_candidates())?;
        c.eq("fourier.period", format!("q=4 n=3..50 enumerated to n={}", (max_bits / 2).min(50)), 24, f.period);
        Ok(())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_run_passes() {
        let rep = run(Suite::All, 4).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert!(rep.summary.total > 100);
    }
}
