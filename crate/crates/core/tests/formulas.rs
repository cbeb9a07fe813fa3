use hexatile_core::exactnum::rat;
use hexatile_core::formulas::{fk_count, intrusion_count, intrusion_ratio, macmahon, recurrence_holds, KuoVariant};
use hexatile_core::oracle::{enumerate_pp, kuo_check};
use hexatile_core::Parity;
use proptest::prelude::*;

proptest! {
    #[test]
    fn counts_integral_and_symmetric(m in 0i64..=9, b in 0i64..=7, c in 0i64..=7, d in 0i64..=7) {
        prop_assume!(d <= b.min(c));
        let v = intrusion_count(m, b, c, d).unwrap().value;
        prop_assert!(v.is_integer());
        prop_assert_eq!(v, intrusion_count(m, c, b, d).unwrap().value);
    }

    #[test]
    fn no_holes_is_macmahon(m in 0i64..=8, b in 0i64..=8, c in 0i64..=8) {
        prop_assert_eq!(intrusion_ratio(Parity::of(m), m / 2, b, c, 0).unwrap(), rat(1, 1));
        prop_assert_eq!(intrusion_count(m, b, c, 0).unwrap().value, macmahon(m, b, c).unwrap().value);
    }

    #[test]
    fn conjectured_formula_is_integral(m in 0i64..=6, n in 1i64..=7, r in 1i64..=7) {
        prop_assume!(r <= n);
        prop_assert!(fk_count(m, n, r).unwrap().value.is_integer());
    }
}

#[test]
fn recurrences_from_formulas() {
    for v in KuoVariant::ALL {
        for a in 0..=2 {
            for c in 1..=4 {
                for b in 1..=c {
                    for k in 0..b {
                        assert!(recurrence_holds(v, a, b, c, k).unwrap(), "{v:?} a={a} b={b} c={c} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn condensation_on_oracle_counts() {
    for v in KuoVariant::ALL {
        for k in 0..=v.max_k(3, 3) {
            assert!(kuo_check(v, 1, 3, 3, k).unwrap(), "{v:?} k={k}");
        }
    }
}

#[test]
fn plane_partitions_follow_box_formula() {
    for b in 0..=3 {
        for c in 0..=3 {
            for h in 0..=4 {
                let p = hexatile_core::exactnum::rat_int(enumerate_pp(b, c, h).unwrap());
                assert_eq!(p, macmahon(b, c, h).unwrap().value, "b={b} c={c} h={h}");
            }
        }
    }
}
