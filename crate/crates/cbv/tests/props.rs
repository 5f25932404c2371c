//! Property tests over randomly generated partitions and small covers.

use cbv::duality::d_com;
use cbv::partitions::{s_part, Class, Partition};
use proptest::prelude::*;

fn arb_partition(max_total: u32) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=8, 0..=6).prop_map(move |mut parts| {
        // trim to the total budget
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max_total
        });
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn transpose_is_involutive(p in arb_partition(20)) {
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn union_transpose_is_sum(p in arb_partition(12), q in arb_partition(12)) {
        let lhs = p.union(&q).transpose();
        let rhs = p.transpose().sum(&q.transpose());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_part_shape(m in 0u32..40, z in 1u32..9) {
        let s = s_part(m, z);
        prop_assert_eq!(s.total(), m);
        prop_assert!(s.len() as u32 <= m.div_ceil(z));
        prop_assert!(s.part(0) <= z);
    }

    #[test]
    fn collapse_is_dominated_and_in_class(p in arb_partition(16)) {
        for class in [Class::B, Class::C, Class::D] {
            let parity_ok = match class {
                Class::B => p.total() % 2 == 1,
                _ => p.total() % 2 == 0,
            };
            if !parity_ok {
                continue;
            }
            let c = p.collapse(class).unwrap();
            prop_assert!(c.is_class(class));
            prop_assert!(p.dominates_same_total(&c));
            // idempotent
            prop_assert_eq!(c.collapse(class).unwrap(), c);
        }
    }

    #[test]
    fn dcom_is_order_reversing(p in arb_partition(12), q in arb_partition(12), z in 1u32..7) {
        if p.total() == q.total() && p.dominates_same_total(&q) {
            let dp = d_com(&p, z);
            let dq = d_com(&q, z);
            prop_assert!(dq.dominates_same_total(&dp));
        }
    }

    #[test]
    fn parse_round_trip(p in arb_partition(20)) {
        let text = p.to_string();
        let back = Partition::parse(&text).unwrap();
        prop_assert_eq!(back, p);
    }
}
