use hexatile_core::exactnum::{
    barnes_g, factorial, rat_int, shifted_factorial, shifted_to_factorial_identity_check, HalfInteger,
};
use proptest::prelude::*;

fn base() -> impl Strategy<Value = HalfInteger> {
    (1i64..=20).prop_map(HalfInteger::from_twice)
}

proptest! {
    #[test]
    fn shifted_factorial_steps(a in base(), n in -20i64..=20) {
        prop_assume!(a.add_int(n).is_positive());
        let next = shifted_factorial(a, n + 1).unwrap();
        let here = shifted_factorial(a, n).unwrap();
        prop_assert_eq!(next, here * a.add_int(n).to_rational());
    }

    #[test]
    fn shifted_factorial_composes(a in base(), n in -10i64..=10, m in -10i64..=10) {
        let (an, anm) = (a.add_int(n), a.add_int(n + m));
        prop_assume!(an.is_positive() && anm.is_positive());
        let lhs = shifted_factorial(a, n).unwrap() * shifted_factorial(an, m).unwrap();
        prop_assert_eq!(lhs, shifted_factorial(a, n + m).unwrap());
    }

    #[test]
    fn evaluation_is_deterministic(a in base(), n in 0i64..=15) {
        prop_assert_eq!(shifted_factorial(a, n).unwrap(), shifted_factorial(a, n).unwrap());
    }
}

#[test]
fn barnes_g_recurrence() {
    for n in 1..40 {
        assert_eq!(barnes_g(n + 1), barnes_g(n) * factorial(n - 1).unwrap());
    }
}

#[test]
fn shifted_to_factorial_sweep() {
    for i in 1..=12 {
        for j in (-i + 1)..=12 {
            assert!(shifted_to_factorial_identity_check(i, j), "i={i} j={j}");
        }
    }
}

#[test]
fn undefined_shifted_factorials() {
    assert!(shifted_factorial(HalfInteger::from_int(0), 2).is_err());
    assert!(shifted_factorial(HalfInteger::from_int(3), -3).is_err());
    assert_eq!(shifted_factorial(HalfInteger::from_int(3), -2).unwrap(), rat_int(1.into()) / rat_int(2.into()));
}
