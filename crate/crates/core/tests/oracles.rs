//! Closed forms against enumeration at desk scale.

use num_bigint::BigInt;
use num_traits::Zero;
use sscount::arith::pow2;
use sscount::closed_forms::{f2_table2, f2_three, f2_trace_one, f2_two, f_q000, gauss_i, i_q000};
use sscount::curves::{count_points_oracle, CurveSpec, Family};
use sscount::field::DEFAULT_ENUM_CAP;
use sscount::fqpoly::count_irreducibles_with_prefix;
use sscount::traces::{trace_census, CensusKind};
use sscount::{FieldCtx, FieldElement};

const CAP: u32 = DEFAULT_ENUM_CAP;

#[test]
fn census_r1_matches_tables_1_and_2() {
    for n in 3..=18u32 {
        let c = trace_census(1, n, CensusKind::FirstThree, CAP).unwrap();
        let n64 = n as u64;
        for t1 in 0..2u8 {
            for t2 in 0..2u8 {
                let got: u64 = (0..2).map(|t3| c.get(t1 as u64, t2 as u64, t3)).sum();
                assert_eq!(BigInt::from(got), f2_two(n64, t1, t2).unwrap().value, "n={n} ({t1},{t2})");
                for t3 in 0..2u8 {
                    let got = BigInt::from(c.get(t1 as u64, t2 as u64, t3 as u64));
                    let want = if t1 == 0 {
                        f2_three(n64, t2, t3).unwrap().value
                    } else {
                        pow2(n64 - 3) + f2_trace_one(n64, t2, t3).unwrap().value
                    };
                    assert_eq!(got, want, "n={n} ({t1},{t2},{t3})");
                }
            }
        }
    }
}

#[test]
fn table2_row_12_by_enumeration() {
    let c = trace_census(1, 12, CensusKind::FirstThree, CAP).unwrap();
    assert_eq!(c.get(0, 0, 0), 560);
    assert_eq!(f2_table2(12, 0, 0).unwrap().value, BigInt::from(48));
}

#[test]
fn f_q000_matches_census() {
    for (r, nmax) in [(1u32, 20u32), (2, 10), (3, 6), (4, 5), (6, 3), (8, 2)] {
        for n in 1..=nmax {
            let c = trace_census(r, n, CensusKind::FirstThree, CAP).unwrap();
            assert_eq!(BigInt::from(c.get(0, 0, 0)), f_q000(r, n as u64).unwrap().value, "r={r} n={n}");
        }
    }
}

#[test]
fn census_marginals() {
    for (r, n) in [(1u32, 16u32), (2, 8), (3, 5), (4, 4)] {
        let c = trace_census(r, n, CensusKind::FirstThree, CAP).unwrap();
        let zero_t1: u64 = c.counts.iter().filter(|(k, _)| k.0 == 0).map(|(_, v)| v).sum();
        assert_eq!(BigInt::from(zero_t1), pow2((r * (n - 1)) as u64));
        assert_eq!(BigInt::from(c.total()), pow2((r * n) as u64));
    }
}

#[test]
fn irreducible_counts() {
    for (r, nmax) in [(1u32, 14u32), (2, 7), (3, 5)] {
        for n in 3..=nmax {
            let got = count_irreducibles_with_prefix(r, n, [FieldElement::ZERO; 3], CAP).unwrap();
            assert_eq!(BigInt::from(got), i_q000(r, n as u64).unwrap().value, "r={r} n={n}");
        }
    }
}

#[test]
fn prefix_counts_sum_to_gauss() {
    for n in 3..=10u32 {
        let mut total = 0u64;
        for t in 0..8u64 {
            let prefix = [FieldElement(t & 1), FieldElement((t >> 1) & 1), FieldElement(t >> 2)];
            total += count_irreducibles_with_prefix(1, n, prefix, CAP).unwrap();
        }
        assert_eq!(BigInt::from(total), gauss_i(&BigInt::from(2), n as u64).unwrap());
    }
    let f4 = FieldCtx::new(2).unwrap();
    let mut total = 0u64;
    for t in 0..64u64 {
        let prefix = [f4.elem(t & 3), f4.elem((t >> 2) & 3), f4.elem(t >> 4)];
        total += count_irreducibles_with_prefix(2, 5, prefix, CAP).unwrap();
    }
    assert_eq!(BigInt::from(total), gauss_i(&BigInt::from(4), 5).unwrap());
}

#[test]
fn i_q000_is_integral_and_nonnegative() {
    for r in 1..=4u32 {
        for n in 3..=300u64 {
            let v = i_q000(r, n).unwrap();
            assert!(v.value >= BigInt::zero());
            if r % 2 == 0 {
                assert_eq!(v.rescaled_alt, Some(v.value.clone().into()), "r={r} n={n}");
            }
        }
    }
}

/// Counting elements by the curves: `F_q(n,0,0,0) = q^(n-3) +
/// [D1 + D2 + (q-1) D3] / q^3`, with `Di` the deviations from `q^n + 1`.
#[test]
fn pipeline_identity_against_oracle_curves() {
    for (r, nmax) in [(1u32, 16u32), (2, 8), (3, 5), (4, 4)] {
        for n in 3..=nmax {
            let q = pow2(r as u64);
            let qn1 = pow2((r * n) as u64) + 1;
            let dev = |fam| {
                let spec = CurveSpec { family: fam, r, twist: None };
                count_points_oracle(&spec, n, CAP).unwrap() - &qn1
            };
            let sum: BigInt = dev(Family::C1) + dev(Family::C2) + (&q - 1) * dev(Family::C3);
            let q3 = &q * &q * &q;
            assert!((&sum % &q3).is_zero());
            let want = f_q000(r, n as u64).unwrap().value;
            assert_eq!(pow2((r * (n - 3)) as u64) + sum / q3, want, "r={r} n={n}");
        }
    }
}
