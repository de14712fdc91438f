mod common;

use proptest::prelude::*;
use qsdl_core::params::{gcd_ratio, Status};
use qsdl_core::sieve::{enumerate_for_v, SearchBox};

fn sieve(v: u64, y: u64) -> Vec<(u64, u64, u64, u64, u64, u64)> {
    enumerate_for_v(&SearchBox::new(v, y..=y)).unwrap().iter().map(|c| c.tuple()).collect()
}

#[test]
fn triple_loop_agrees_for_small_v() {
    for v in 5..=30 {
        for y in 2..=10 {
            assert_eq!(sieve(v, y), common::brute_force_triple(v, y), "v={v} y={y}");
        }
    }
}

#[test]
fn pair_loop_agrees_up_to_300() {
    for v in 5..=300 {
        for y in 2..=10 {
            assert_eq!(sieve(v, y), common::brute_force(v, y), "v={v} y={y}");
        }
    }
}

#[test]
fn wide_y_range_agrees() {
    for v in [56u64, 100, 120, 231, 276] {
        for y in 2..=20 {
            assert_eq!(sieve(v, y), common::brute_force(v, y), "v={v} y={y}");
        }
    }
}

proptest! {
    #[test]
    fn emitted_candidates_satisfy_invariants(v in 5u64..4000) {
        for c in enumerate_for_v(&SearchBox::standard(v)).unwrap() {
            let p = c.params;
            prop_assert_eq!(c.status(), Status::Admissible);
            prop_assert!(p.identities_hold());
            prop_assert_eq!((p.lambda * (p.v - 1)) % (p.k - 1), 0);
            prop_assert_eq!(p.b as u128 * p.k as u128, p.v as u128 * p.r as u128);
            prop_assert!(p.b > p.v && p.k < p.r);
            let y = c.y();
            prop_assert_eq!((y - 1) * (p.r - 1), (p.k - 1) * (p.lambda - 1));
            prop_assert!(y < p.lambda && p.lambda < p.k);
            prop_assert_eq!(p.k % y, 0);
            prop_assert_eq!((p.v - 1) % gcd_ratio(p.r, p.lambda).unwrap(), 0);
        }
    }

    #[test]
    fn extra_checks_never_rescue_a_failure(v in 5u64..500, y in 2u64..10, extra_pass in any::<bool>()) {
        use qsdl_core::sieve::sieve_report;
        let out = sieve_report(&SearchBox::new(v, y..=y)).unwrap();
        for mut c in out.rejected {
            let mut more = qsdl_core::CheckReport::default();
            more.push("extra", extra_pass, "");
            c.record(more);
            prop_assert_ne!(c.status(), Status::Admissible);
        }
    }
}
