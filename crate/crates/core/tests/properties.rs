use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use sscount::arith::{big_pow, pow2};
use sscount::closed_forms::f2_two;
use sscount::curves::{
    closed::within_hasse_weil, closed_count_combined, closed_count_twist, count_points_oracle, frobenius_charpoly,
    CurveSpec, Family, TwistClass,
};
use sscount::cyclotomic::Cyclotomic;
use sscount::field::DEFAULT_ENUM_CAP;
use sscount::quadform::{m013_census, QuadForm};
use sscount::traces::{generalized_fitz_check, t2_t3_identity_check, trace_triple};
use sscount::{FieldCtx, FieldElement};

fn field_and_elems(n: usize) -> impl Strategy<Value = (u32, Vec<u64>)> {
    (1u32..=64).prop_flat_map(move |m| {
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        (Just(m), prop::collection::vec(any::<u64>().prop_map(move |x| x & mask), n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((m, v) in field_and_elems(3)) {
        let f = FieldCtx::new(m).unwrap();
        let (a, b, c) = (f.elem(v[0]), f.elem(v[1]), f.elem(v[2]));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.square(f.add(a, b)), f.add(f.square(a), f.square(b)));
        prop_assert_eq!(f.square(a), f.mul(a, a));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
        let g = FieldCtx::new(m).unwrap();
        prop_assert_eq!(f.mul(a, b), g.mul(a, b));
    }

    #[test]
    fn relative_trace_is_subfield_linear((m, v) in field_and_elems(3), pick in any::<prop::sample::Index>()) {
        let f = FieldCtx::new(m).unwrap();
        let divs: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
        let r = divs[pick.index(divs.len())];
        let (a, b) = (f.elem(v[0]), f.elem(v[1]));
        let sub = f.subfield_elements(r.min(8)).ok();
        let ta = f.relative_trace(a, r).unwrap();
        prop_assert!(f.is_in_subfield(ta, r).unwrap());
        prop_assert_eq!(f.relative_trace(f.add(a, b), r).unwrap(), f.add(ta, f.relative_trace(b, r).unwrap()));
        if r <= 8 {
            let sub = sub.unwrap();
            let c = sub[(v[2] as usize) % sub.len()];
            prop_assert_eq!(f.relative_trace(f.mul(c, a), r).unwrap(), f.mul(c, ta));
        }
        if r < 64 && m <= 64 {
            let t = trace_triple(&f, r, a).unwrap();
            prop_assert_eq!(t.t1, ta);
        }
    }

    #[test]
    fn trace_addition_laws((m, v) in field_and_elems(2), pick in any::<prop::sample::Index>()) {
        let f = FieldCtx::new(m).unwrap();
        let divs: Vec<u32> = (1..=m).filter(|d| m % d == 0).collect();
        let r = divs[pick.index(divs.len())];
        let rep = t2_t3_identity_check(&f, r, f.elem(v[0]), f.elem(v[1])).unwrap();
        prop_assert!(rep.holds());
    }

    #[test]
    fn fitz_identity(r in 1u32..=3, n in 1u32..=4, seed in any::<u64>()) {
        prop_assume!(r * n <= 12);
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let gf = FieldCtx::new(r).unwrap();
        let size = 1usize << (r * n);
        let qm = (1u64 << r) - 1;
        let sparse = |rng: &mut rand_chacha::ChaCha8Rng| if rng.gen_bool(0.4) { 0 } else { rng.gen::<u64>() & qm };
        let f1: Vec<u64> = (0..size).map(|_| sparse(&mut rng)).collect();
        let f2: Vec<u64> = (0..size).map(|_| sparse(&mut rng)).collect();
        prop_assert!(generalized_fitz_check(&gf, &f1, &f2).unwrap().holds);
    }

    #[test]
    fn cyclotomic_ring_axioms(a in prop::collection::vec(-9i64..9, 3), k in prop::collection::vec(0i64..48, 3)) {
        let z = |c: i64, e: i64| Cyclotomic::zeta_pow(48, e).unwrap().scale(&BigRational::from_integer(c.into()));
        let x = &z(a[0], k[0]) + &z(1, k[1]);
        let y = &z(a[1], k[1]) - &z(a[2], k[2]);
        let w = z(1, k[2]);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &w, &x * &(&y * &w));
        prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(x.lift(96).unwrap() * y.lift(96).unwrap(), (&x * &y).lift(96).unwrap());
    }

    #[test]
    fn closed_counts_obey_hasse_weil(r in 1u32..=16, n in 1u64..=200) {
        for fam in Family::ALL {
            let c = closed_count_combined(fam, r, n).unwrap().value;
            prop_assert!(within_hasse_weil(&c, &fam.genus(r), r, n));
            for &class in TwistClass::classes_for(fam) {
                if fam == Family::C2 && class == TwistClass::NonCube && r % 2 == 1 {
                    continue;
                }
                let c = closed_count_twist(fam, class, r, n).unwrap().value;
                prop_assert!(within_hasse_weil(&c, &fam.twist_genus(r), r, n));
            }
        }
    }

    #[test]
    fn quadform_structure(r in 1u32..=4, n in 1u32..=6, a in 1u64..16, fi in 0usize..3) {
        prop_assume!(a < (1 << r));
        let fam = Family::ALL[fi];
        let qf = QuadForm::new(fam, r, n, FieldElement(a)).unwrap();
        let rep = qf.radical_report();
        prop_assert_eq!((rep.m - rep.w) % 2, 0);
        prop_assert!(rep.w0 == rep.w || rep.w0 + 1 == rep.w);
        prop_assert_eq!(rep.rank, rep.m - rep.w0);
        if rep.m <= 14 {
            prop_assert_eq!(qf.enumerate_zeros(DEFAULT_ENUM_CAP).unwrap(), rep.zeros);
        }
    }
}

/// Even-degree factors satisfy `q^i c_i = +-q^(d/2) c_(d-i)`, so roots come
/// in pairs `eta, +-q / eta`.
#[test]
fn charpoly_factors_are_self_reciprocal() {
    for fam in Family::ALL {
        for r in 1..=12u32 {
            let fd = frobenius_charpoly(fam, r).unwrap();
            let q = pow2(r as u64);
            for (p, m) in &fd.factors {
                assert!(p.is_monic() && *m > BigInt::zero());
                let d = p.degree();
                if d % 2 == 1 {
                    continue;
                }
                let half = big_pow(&q, d as u64 / 2);
                let sign = if p.0[0] < BigInt::zero() { -half } else { half };
                for i in 0..=d {
                    assert_eq!(&p.0[i] * big_pow(&q, i as u64), &sign * &p.0[d - i], "{fam} r={r} {p}");
                }
            }
        }
    }
}

/// An extremal count over GF(q^n) forces the minimal count over GF(q^(2n)).
#[test]
fn extremal_counts_square_to_minimal() {
    for fam in Family::ALL {
        for r in 1..=6u32 {
            for n in 1..=48u64 {
                let mut cases = vec![(closed_count_combined(fam, r, n).unwrap().value, closed_count_combined(fam, r, 2 * n).unwrap().value, fam.genus(r))];
                for &class in TwistClass::classes_for(fam) {
                    if let (Ok(a), Ok(b)) = (closed_count_twist(fam, class, r, n), closed_count_twist(fam, class, r, 2 * n)) {
                        cases.push((a.value, b.value, fam.twist_genus(r)));
                    }
                }
                for (c, c2, g) in cases {
                    let dev = &c - pow2(r as u64 * n) - 1;
                    if &dev * &dev == &g * &g * 4u8 * pow2(r as u64 * n) {
                        assert_eq!(c2, pow2(2 * r as u64 * n) + 1 - g * 2u8 * pow2(r as u64 * n), "{fam} r={r} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn f2_class_00_from_elliptic_curve() {
    for n in 2..=20u32 {
        let spec = CurveSpec { family: Family::C1, r: 1, twist: Some(FieldElement::ONE) };
        let e1 = count_points_oracle(&spec, n, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(f2_two(n as u64, 0, 0).unwrap().value * 4 + 1, e1, "n={n}");
    }
}

#[test]
fn relative_trace_kernel_sizes() {
    for m in 1..=16u32 {
        let f = FieldCtx::new(m).unwrap();
        for r in (1..=m).filter(|r| m % r == 0) {
            let tr = f.relative_trace_map(r).unwrap();
            let zeros = (0..1u64 << m).filter(|&x| tr.apply(x) == 0).count() as u64;
            assert_eq!(zeros, 1u64 << (m - r), "m={m} r={r}");
        }
    }
}

#[test]
fn cubic_root_bookkeeping() {
    for r in 1..=14u32 {
        let c = m013_census(r, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(3 * c.m3 + c.m1, (1u64 << r) - 2, "r={r}");
        assert_eq!(c.m3 + c.m1 + c.m0, (1u64 << r) - 1);
    }
}
