mod common;

use common::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use ziggu_core::rank::{distance, unrank};
use ziggu_core::{count, listing, rank, ListingKind, QuatString};

fn q(s: &str) -> QuatString {
    s.parse().unwrap()
}

#[test]
fn rank_is_list_index_exhaustive() {
    for kind in ListingKind::ALL {
        for n in 1..=8 {
            for (i, s) in reference_listing(kind, n).iter().enumerate() {
                assert_eq!(rank(kind, &q(s)).unwrap(), BigUint::from(i), "{kind:?} {s}");
            }
        }
    }
}

#[test]
fn rank_random_states_n9_n10() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for n in [9, 10] {
        for kind in ListingKind::ALL {
            let l = reference_listing(kind, n);
            for _ in 0..10_000 {
                let i = rng.gen_range(0..l.len());
                assert_eq!(rank(kind, &q(&l[i])).unwrap(), BigUint::from(i), "{kind:?} {}", l[i]);
            }
        }
    }
}

#[test]
fn rank_all_short_and_long_n9_n10() {
    // the sub-list ranks are the risky ones; cover them completely
    for n in [9, 10] {
        for kind in [ListingKind::Long, ListingKind::Short] {
            for (i, s) in reference_listing(kind, n).iter().enumerate() {
                assert_eq!(rank(kind, &q(s)).unwrap(), BigUint::from(i), "{kind:?} {s}");
            }
        }
    }
}

#[test]
fn published_ranks() {
    let cases = [
        (ListingKind::Short, "103", 22u32),
        (ListingKind::Short, "203", 23),
        (ListingKind::Long, "203", 29),
        (ListingKind::Quat, "1211", 89),
        (ListingKind::Short, "2333", 77),
        (ListingKind::Long, "2333", 119),
        (ListingKind::Brgc, "10110010", 220),
        (ListingKind::Brgc, "1010101", 102),
        (ListingKind::Brgc, "1111111", 85),
        (ListingKind::Brgc, "0000000", 0),
    ];
    for (kind, s, r) in cases {
        assert_eq!(rank(kind, &q(s)).unwrap(), BigUint::from(r), "{kind:?} {s}");
    }
    let d = |a, b| distance(ListingKind::Brgc, &q(a), &q(b)).unwrap();
    assert_eq!(d("1010101", "0000000"), BigUint::from(102u32));
    assert_eq!(d("1010101", "1111111"), BigUint::from(17u32));
}

#[test]
fn rank_rejects_states_outside_the_listing() {
    assert!(rank(ListingKind::Short, &q("102")).is_err());
    assert!(rank(ListingKind::Long, &q("130")).is_err());
    assert!(rank(ListingKind::Brgc, &q("102")).is_err());
}

#[test]
fn unrank_inverts_rank() {
    for kind in ListingKind::ALL {
        for n in 1..=7 {
            for (i, s) in listing(kind, n).unwrap().states.iter().enumerate() {
                assert_eq!(unrank(kind, n, &BigUint::from(i)).unwrap(), *s);
            }
            assert!(unrank(kind, n, &count(kind, n)).is_err());
        }
    }
}

#[test]
fn last_ranks_are_counts_minus_one() {
    for n in [20, 64, 300] {
        let top = QuatString::threes(n);
        assert_eq!(rank(ListingKind::Short, &top).unwrap(), count(ListingKind::Short, n) - 1u32);
        assert_eq!(rank(ListingKind::Long, &top).unwrap(), count(ListingKind::Long, n) - 1u32);
    }
}

fn ziggu_string() -> impl Strategy<Value = String> {
    (0usize..40, prop::collection::vec(1u8..=2, 0..40), any::<bool>(), 0usize..40).prop_filter_map(
        "non-empty",
        |(z, mid, zero, t)| {
            let mut s = "0".repeat(z);
            s.extend(mid.iter().map(|&d| char::from(b'0' + d)));
            if zero {
                s.push('0');
            }
            s.push_str(&"3".repeat(t));
            (!s.is_empty()).then_some(s)
        },
    )
}

fn valid_string() -> impl Strategy<Value = String> {
    (prop::collection::vec(0u8..=2, 0..60), 0usize..20).prop_filter_map("non-empty", |(head, t)| {
        let mut s: String = head.iter().map(|&d| char::from(b'0' + d)).collect();
        s.push_str(&"3".repeat(t));
        (!s.is_empty()).then_some(s)
    })
}

proptest! {
    #[test]
    fn short_roundtrip(s in ziggu_string()) {
        let w = q(&s);
        let r = rank(ListingKind::Short, &w).unwrap();
        prop_assert!(r < count(ListingKind::Short, w.len()));
        prop_assert_eq!(unrank(ListingKind::Short, w.len(), &r).unwrap(), w);
    }

    #[test]
    fn long_roundtrip(s in valid_string()) {
        let w = q(&s);
        let r = rank(ListingKind::Long, &w).unwrap();
        prop_assert_eq!(unrank(ListingKind::Long, w.len(), &r).unwrap(), w);
    }

    #[test]
    fn quat_roundtrip(d in prop::collection::vec(0u8..=3, 1..80)) {
        let w = QuatString::from_digits(d).unwrap();
        let r = rank(ListingKind::Quat, &w).unwrap();
        prop_assert_eq!(unrank(ListingKind::Quat, w.len(), &r).unwrap(), w);
    }

    #[test]
    fn short_rank_is_monotone_in_long_rank(a in ziggu_string(), b in ziggu_string()) {
        let n = a.len().min(b.len());
        let (a, b) = (&a[a.len() - n..], &b[b.len() - n..]);
        prop_assume!(is_ziggu_str(a) && is_ziggu_str(b));
        let ra = (rank(ListingKind::Short, &q(a)).unwrap(), rank(ListingKind::Long, &q(a)).unwrap());
        let rb = (rank(ListingKind::Short, &q(b)).unwrap(), rank(ListingKind::Long, &q(b)).unwrap());
        prop_assert_eq!(ra.0.cmp(&rb.0), ra.1.cmp(&rb.1));
    }
}
