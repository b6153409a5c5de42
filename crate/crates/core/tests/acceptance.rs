//! Acceptance gate: one line per criterion.
//!
//! Exits nonzero when a criterion fails, except for the clauses listed in
//! `KNOWN_RED`, which are evaluated and reported as FAIL but do not stop the
//! run. Set `ACCEPTANCE_STRICT=1` to make every failure fatal.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sscount::arith::{big_pow, pow2};
use sscount::closed_forms::{
    f2_table1, f2_table2, f2_trace_one, f_q000, i_q000, t1t2_eigen_form, t1t2t3_eigen_form,
};
use sscount::curves::charpoly::{FrobeniusData, IntPoly};
use sscount::curves::{
    closed_count_combined, closed_count_twist, count_points_oracle, fourier_form_count, frobenius_charpoly,
    kani_rosen_closed, kani_rosen_oracle, supersingularity_certificate, sweep_counts, CurveSpec, Family, TwistClass,
};
use sscount::cyclotomic::Cyclotomic;
use sscount::eigensum::EigenSum;
use sscount::field::DEFAULT_ENUM_CAP;
use sscount::fourier::{analyze_sequence, default_candidates, dft_extract, dft_extract_rational, normalize};
use sscount::fqpoly::count_irreducibles_with_prefix;
use sscount::quadform::{expected_radical_dim, m013_census, m013_formula, QuadForm};
use sscount::traces::{trace_census, CensusKind, TraceCensus};
use sscount::{FieldCtx, FieldElement};

type Res<T> = Result<T, Box<dyn std::error::Error>>;

const CAP: u32 = DEFAULT_ENUM_CAP;

/// Clauses that fail as stated; see the README.
const KNOWN_RED: &[&str] = &["4c"];

struct Line {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

struct Tally {
    checked: usize,
    bad: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checked: 0, bad: Vec::new() }
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, what: impl FnOnce() -> String, want: T, got: T) {
        self.checked += 1;
        if want != got {
            self.bad.push(format!("{}: want {want}, got {got}", what()));
        }
    }

    fn ok(&mut self, what: impl FnOnce() -> String, cond: bool) {
        self.checked += 1;
        if !cond {
            self.bad.push(what());
        }
    }

    fn summary(&self) -> String {
        match self.bad.first() {
            None => format!("{} checks", self.checked),
            Some(first) => format!("{} of {} checks failed; first: {first}", self.bad.len(), self.checked),
        }
    }
}

fn line(id: &'static str, title: &'static str, body: impl FnOnce() -> Res<Tally>) -> Line {
    let t = Instant::now();
    let (pass, detail) = match body() {
        Ok(tally) => (tally.bad.is_empty(), tally.summary()),
        Err(e) => (false, format!("error: {e}")),
    };
    let detail = format!("{detail} ({:.1}s)", t.elapsed().as_secs_f64());
    println!("criterion {id:<3} {} {title}: {detail}", if pass { "PASS" } else { "FAIL" });
    Line { id, title, pass, detail }
}

fn census_r1(max_n: u32) -> Res<BTreeMap<u32, TraceCensus>> {
    let mut out = BTreeMap::new();
    for n in 2..=max_n {
        out.insert(n, trace_census(1, n, CensusKind::FirstThree, CAP)?);
    }
    Ok(out)
}

fn c1_table1(census: &BTreeMap<u32, TraceCensus>) -> Res<Tally> {
    let mut t = Tally::new();
    for n in 2..=25u32 {
        let c = &census[&n];
        for t1 in 0..2u8 {
            for t2 in 0..2u8 {
                let got: u64 = (0..2).map(|t3| c.get(t1 as u64, t2 as u64, t3)).sum();
                let dev = BigInt::from(got) - pow2(n as u64 - 2);
                t.eq(|| format!("n={n} ({t1},{t2})"), f2_table1(n as u64, t1, t2)?.value, dev);
            }
        }
    }
    Ok(t)
}

fn c2_table2(census: &BTreeMap<u32, TraceCensus>) -> Res<Tally> {
    let mut t = Tally::new();
    for n in 3..=22u32 {
        let c = &census[&n];
        for t1 in 0..2u8 {
            for t2 in 0..2u8 {
                for t3 in 0..2u8 {
                    let dev = BigInt::from(c.get(t1 as u64, t2 as u64, t3 as u64)) - pow2(n as u64 - 3);
                    let want = if t1 == 0 {
                        f2_table2(n as u64, t2, t3)?.value
                    } else {
                        f2_trace_one(n as u64, t2, t3)?.value
                    };
                    t.eq(|| format!("n={n} ({t1},{t2},{t3})"), want, dev);
                }
            }
        }
    }
    Ok(t)
}

fn c3_table5(census: &BTreeMap<u32, TraceCensus>) -> Res<Tally> {
    let mut t = Tally::new();
    for r in [1u32, 2, 3, 4, 6, 8, 12] {
        for n in 1..=24 / r {
            let got = if r == 1 && n >= 2 {
                census[&n].get(0, 0, 0)
            } else {
                trace_census(r, n, CensusKind::FirstThree, CAP)?.get(0, 0, 0)
            };
            t.eq(|| format!("r={r} n={n}"), f_q000(r, n as u64)?.value, BigInt::from(got));
        }
    }
    for r in 1..=8u32 {
        for n in 1..=2u64 {
            t.eq(|| format!("r={r} n={n} convention"), BigInt::one(), f_q000(r, n)?.value);
        }
    }
    Ok(t)
}

fn c4a_irreducibles() -> Res<Tally> {
    let mut t = Tally::new();
    for (r, nmax) in [(1u32, 16u32), (2, 8), (3, 6)] {
        for n in 3..=nmax {
            let got = count_irreducibles_with_prefix(r, n, [FieldElement::ZERO; 3], CAP)?;
            t.eq(|| format!("q=2^{r} n={n}"), i_q000(r, n as u64)?.value, BigInt::from(got));
        }
    }
    Ok(t)
}

fn c4b_integral() -> Res<Tally> {
    let mut t = Tally::new();
    for r in 1..=4u32 {
        for n in 3..=1000u64 {
            // i_q000 errors on a non-integral or negative value
            let v = i_q000(r, n)?;
            t.ok(|| format!("q=2^{r} n={n} negative"), v.value >= BigInt::zero());
        }
    }
    Ok(t)
}

/// The second expression taken literally, then with the `1/sqrt(q)` rescaling.
fn c4c_two_expressions(rescaled: bool) -> Res<Tally> {
    let mut t = Tally::new();
    for r in [2u32, 4] {
        for n in 3..=1000u64 {
            let v = i_q000(r, n)?;
            let alt = if rescaled { v.rescaled_alt } else { v.literal_alt };
            let alt = alt.ok_or("missing alternative for even r")?;
            t.eq(|| format!("q=2^{r} n={n}"), BigRational::from_integer(v.value), alt);
        }
    }
    Ok(t)
}

/// Class of each nonzero `alpha` in GF(2^r), from one pass over the field.
fn classes(fam: Family, r: u32) -> Res<Vec<TwistClass>> {
    let f = FieldCtx::new(r)?;
    let size = 1usize << r;
    let mut out = vec![TwistClass::Any; size];
    match fam {
        Family::C1 => {}
        Family::C2 => {
            let q1 = (1u128 << r) - 1;
            let e = q1 / num_integer::gcd(3, q1);
            for (a, slot) in out.iter_mut().enumerate().skip(1) {
                *slot =
                    if f.pow(FieldElement(a as u64), e) == FieldElement::ONE { TwistClass::Cube } else { TwistClass::NonCube };
            }
        }
        Family::C3 => {
            let mut roots = vec![0u8; size];
            for x in 0..size as u64 {
                let x = FieldElement(x);
                roots[f.add(f.mul(f.square(x), x), x).0 as usize] += 1;
            }
            for (a, slot) in out.iter_mut().enumerate().skip(1) {
                let beta = f.inv(FieldElement(a as u64))?;
                *slot = match roots[beta.0 as usize] {
                    3 => TwistClass::ThreeRoots,
                    1 => TwistClass::OneRoot,
                    _ => TwistClass::NoRoot,
                };
            }
        }
    }
    Ok(out)
}

fn c5_curves() -> Res<Tally> {
    let mut t = Tally::new();
    for fam in Family::ALL {
        for r in 1..=20u32 {
            let fd = frobenius_charpoly(fam, r)?;
            let power_sums = fd.power_sums(200);
            let cls = classes(fam, r)?;
            let predicted = |n: u64| pow2(r as u64 * n) + 1 - &power_sums[n as usize];
            for n in 1..=20 / r {
                let n64 = n as u64;
                let p = |what: &str| format!("{fam} r={r} n={n} {what}");
                let s = sweep_counts(fam, r, n, CAP)?;
                if r * n <= 14 {
                    let spec = CurveSpec { family: fam, r, twist: None };
                    t.eq(|| p("oracle vs sweep"), count_points_oracle(&spec, n, CAP)?, s.combined.clone());
                    let spec = CurveSpec { family: fam, r, twist: Some(FieldElement(1)) };
                    t.eq(|| p("twist oracle vs sweep"), count_points_oracle(&spec, n, CAP)?, s.twists[1].clone());
                }
                t.eq(|| p("table"), closed_count_combined(fam, r, n64)?.value, s.combined.clone());
                t.eq(|| p("fourier"), fourier_form_count(fam, r, n64)?.value, s.combined.clone());
                t.eq(|| p("charpoly"), predicted(n64), s.combined.clone());
                let mut by_class = BTreeMap::new();
                for &class in TwistClass::classes_for(fam) {
                    if let Ok(c) = closed_count_twist(fam, class, r, n64) {
                        by_class.insert(class, c.value);
                    }
                }
                for a in 1..(1usize << r) {
                    let want = by_class.get(&cls[a]).ok_or_else(|| p("class without a count"))?;
                    t.eq(|| format!("{} alpha={a}", p("twist")), want, &s.twists[a]);
                    if r <= 3 {
                        let qf = QuadForm::new(fam, r, n, FieldElement(a as u64))?;
                        t.eq(|| format!("{} alpha={a}", p("twist quadform")), want.clone(), qf.radical_report().twist_count());
                    }
                }
            }
            if r <= 12 {
                for n in 1..=200u64 {
                    let p = |what: &str| format!("{fam} r={r} n={n} {what}");
                    let table = closed_count_combined(fam, r, n)?.value;
                    t.eq(|| p("fourier"), table.clone(), fourier_form_count(fam, r, n)?.value);
                    t.eq(|| p("charpoly"), table, predicted(n));
                }
            }
        }
    }
    Ok(t)
}

fn c6_kani_rosen() -> Res<Tally> {
    let mut t = Tally::new();
    let mut printed_agrees = 0usize;
    for fam in Family::ALL {
        for r in 1..=6u32 {
            for n in 1..=(18 / r) {
                let rep = kani_rosen_oracle(fam, r, n, CAP)?;
                t.ok(|| format!("{fam} r={r} n={n} oracle: {} vs {}", rep.difference, rep.derived_rhs), rep.derived_holds);
                let closed = kani_rosen_closed(fam, r, n)?;
                t.eq(|| format!("{fam} r={r} n={n} closed"), &rep.difference, &closed.difference);
                printed_agrees += rep.printed_holds as usize;
            }
            for n in [50u32, 100, 200] {
                let closed = kani_rosen_closed(fam, r, n)?;
                t.ok(|| format!("{fam} r={r} n={n} closed"), closed.derived_holds);
            }
        }
    }
    println!("    printed product-identity corollary holds in {printed_agrees} tested cases; reported as a documented discrepancy");
    Ok(t)
}

fn c7_charpoly() -> Res<Tally> {
    let mut t = Tally::new();
    for fam in Family::ALL {
        for r in 1..=12u32 {
            let fd = frobenius_charpoly(fam, r)?;
            t.eq(|| format!("{fam} r={r} degree"), fam.genus(r) * 2, fd.degree());
            for (_, m) in &fd.factors {
                t.ok(|| format!("{fam} r={r} multiplicity {m}"), *m >= BigInt::zero());
            }
            t.ok(|| format!("{fam} r={r} certificate"), supersingularity_certificate(&fd));
        }
    }
    let ordinary = FrobeniusData { r: 1, factors: vec![(IntPoly::from_i64(&[2, -3, 1]), BigInt::one())] };
    t.ok(|| "ordinary X^2 - 3X + 2 certified".into(), !supersingularity_certificate(&ordinary));
    Ok(t)
}

fn c8_quadforms() -> Res<Tally> {
    let mut t = Tally::new();
    for fam in Family::ALL {
        for r in 1..=6u32 {
            let cls = classes(fam, r)?;
            for n in 1..=8u32 {
                if r > 3 && r * n > 18 {
                    break;
                }
                for a in 1..(1u64 << r) {
                    let p = format!("{fam} r={r} n={n} alpha={a}");
                    let qf = QuadForm::new(fam, r, n, FieldElement(a))?;
                    let rep = qf.radical_report();
                    if r <= 3 {
                        let want = expected_radical_dim(fam, cls[a as usize], r, n).ok_or("no lemma dimension")?;
                        t.eq(|| format!("{p} w"), want, rep.w);
                    }
                    if r * n <= 18 {
                        t.eq(|| format!("{p} zeros"), qf.enumerate_zeros(CAP)?, rep.zeros);
                    }
                }
            }
        }
    }
    for r in 1..=14u32 {
        let m = m013_census(r, CAP)?;
        let (a, b, c) = m013_formula(r);
        t.eq(|| format!("r={r} (M3,M1,M0)"), format!("({a},{b},{c})"), format!("({},{},{})", m.m3, m.m1, m.m0));
    }
    Ok(t)
}

fn by_angle(e: &EigenSum) -> Res<Vec<Cyclotomic>> {
    let mut out = vec![Cyclotomic::zero(24)?; 24];
    for (w, k) in &e.terms {
        out[*k as usize] = &out[*k as usize] + w;
    }
    Ok(out)
}

fn c9_fourier(census: &BTreeMap<u32, TraceCensus>) -> Res<Tally> {
    let mut t = Tally::new();
    for t1 in 0..2u8 {
        for t2 in 0..2u8 {
            let vals = (24..48u64).map(|n| normalize(&f2_table1(n, t1, t2)?.value, 1, n)).collect::<Result<Vec<_>, _>>()?;
            let f = dft_extract(&vals, 1)?;
            t.ok(|| format!("table 1 ({t1},{t2})"), f.coeffs == by_angle(&t1t2_eigen_form(t1, t2))?);
        }
    }
    let vals = (8..16u64).map(|n| normalize(&f2_table1(n, 0, 0)?.value, 1, n)).collect::<Result<Vec<_>, _>>()?;
    let f = dft_extract(&vals, 1)?;
    let quarter = Some(BigRational::new((-1).into(), 4.into()));
    t.ok(|| "g_3 = g_5 = -1/4".into(), f.support() == [3, 5] && f.coeffs[3].to_rational() == quarter && f.coeffs[5].to_rational() == quarter);
    for t2 in 0..2u8 {
        for t3 in 0..2u8 {
            let vals = (24..48u64).map(|n| normalize(&f2_table2(n, t2, t3)?.value, 1, n)).collect::<Result<Vec<_>, _>>()?;
            let f = dft_extract(&vals, 1)?;
            t.ok(|| format!("table 2 (0,{t2},{t3})"), f.coeffs == by_angle(&t1t2t3_eigen_form(0, t2, t3))?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for p in [8usize, 12, 24] {
        for trial in 0..100 {
            let v: Vec<BigRational> =
                (0..p).map(|_| BigRational::new(rng.gen_range(-1000i64..=1000).into(), rng.gen_range(1i64..=64).into())).collect();
            let f = dft_extract_rational(&v, 1)?;
            let back = (0..p as u64).map(|n| f.reconstruct(n)).collect::<Result<Vec<_>, _>>()?;
            t.ok(|| format!("round trip P={p} trial {trial}"), back == v);
        }
    }
    let seq: Vec<BigInt> = (2..=25u32).map(|n| {
        let c = &census[&n];
        BigInt::from(c.get(0, 0, 0) + c.get(0, 0, 1)) - pow2(n as u64 - 2)
    }).collect();
    t.eq(|| "q=2 period from enumeration n=2..25".into(), 8, analyze_sequence(&seq, 2, 1, &default_candidates())?.period);
    let mut seq = Vec::new();
    for n in 3..=50u32 {
        let count = if n <= 12 {
            let c = BigInt::from(trace_census(2, n, CensusKind::FirstThree, CAP)?.get(0, 0, 0));
            t.eq(|| format!("q=4 n={n} enumeration vs closed form"), f_q000(2, n as u64)?.value, c.clone());
            c
        } else {
            f_q000(2, n as u64)?.value
        };
        seq.push(count - big_pow(&BigInt::from(4), n as u64 - 3));
    }
    t.eq(|| "q=4 period, n=3..50".into(), 24, analyze_sequence(&seq, 3, 2, &default_candidates())?.period);
    Ok(t)
}

fn c10_pipeline() -> Res<Tally> {
    let mut t = Tally::new();
    let mut rows = std::collections::BTreeSet::new();
    for r in 1..=3u32 {
        let q = pow2(r as u64);
        let q3 = big_pow(&q, 3);
        for n in 3..=200u64 {
            let qn1 = pow2(r as u64 * n) + 1;
            let dev = |fam| -> Res<BigInt> { Ok(closed_count_combined(fam, r, n)?.value - &qn1) };
            let sum: BigInt = dev(Family::C1)? + dev(Family::C2)? + (&q - 1) * dev(Family::C3)?;
            t.ok(|| format!("r={r} n={n} divisible by q^3"), (&sum % &q3).is_zero());
            t.eq(|| format!("r={r} n={n}"), f_q000(r, n)?.value, big_pow(&q, n - 3) + sum / &q3);
            rows.insert((r % 2, n % 24));
        }
    }
    t.eq(|| "residue rows covered".into(), 48, rows.len());
    Ok(t)
}

fn main() {
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let start = Instant::now();
    let census = census_r1(25);
    println!("census GF(2^n), n = 2..25: {:.1}s", start.elapsed().as_secs_f64());
    let lines = match census {
        Ok(census) => vec![
            line("1", "table 1 by enumeration", || c1_table1(&census)),
            line("2", "table 2 and trace-one classes by enumeration", || c2_table2(&census)),
            line("3", "F_q(n,0,0,0) against the census", || c3_table5(&census)),
            line("4a", "I_q(n,0,0,0) against irreducible enumeration", c4a_irreducibles),
            line("4b", "I_q(n,0,0,0) integral, q <= 16, n <= 1000", c4b_integral),
            line("4c", "both I_q(n,0,0,0) expressions agree, even r, n <= 1000", || c4c_two_expressions(false)),
            line("5", "curve counts: oracle, table, Fourier form, charpoly", c5_curves),
            line("6", "sum of twists minus combined curve", c6_kani_rosen),
            line("7", "Frobenius polynomials", c7_charpoly),
            line("8", "quadratic forms", c8_quadforms),
            line("9", "exact Fourier analysis", || c9_fourier(&census)),
            line("10", "curve deviations give F_q(n,0,0,0)", c10_pipeline),
        ],
        Err(e) => {
            println!("census failed: {e}");
            std::process::exit(1);
        }
    };
    // Not a criterion; shows what the second expression needs to match.
    let note = match c4c_two_expressions(true) {
        Ok(t) if t.bad.is_empty() => format!("holds in all {} cases", t.checked),
        Ok(t) => t.summary(),
        Err(e) => format!("error: {e}"),
    };
    println!("    4c with the trace-one term divided by sqrt(q): {note}");

    let failed: Vec<&Line> = lines.iter().filter(|l| !l.pass).collect();
    let fatal: Vec<&&Line> = failed.iter().filter(|l| strict || !KNOWN_RED.contains(&l.id)).collect();
    println!(
        "acceptance: {} of {} passed in {:.1}s",
        lines.len() - failed.len(),
        lines.len(),
        start.elapsed().as_secs_f64()
    );
    for l in &failed {
        let kind = if fatal.iter().any(|f| f.id == l.id) { "unexpected" } else { "known" };
        println!("    {kind} failure {} ({}): {}", l.id, l.title, l.detail);
    }
    if !fatal.is_empty() {
        std::process::exit(1);
    }
}
