//! Brute-force oracles against the production implementations: the collapse
//! against the dominance maximum, the composition map against its
//! multiset-split characterization, order-reversal of the duality, and a
//! handful of cross-module consistency identities.

use cbv::duality::{brute_force_dcom, d_bv, d_com, dual_orbits, saturate};
use cbv::partitions::{
    all_partitions, class_partitions, is_special, special_partitions, Class, Partition,
};
use cbv::root_systems::{CartanType, CoverParams, Family};

fn brute_force_collapse(p: &Partition, class: Class) -> Option<Partition> {
    let mut best: Option<Partition> = None;
    for q in class_partitions(p.total(), class) {
        if !p.dominates_same_total(&q) {
            continue;
        }
        best = match best {
            None => Some(q),
            Some(b) => {
                if q.dominates_same_total(&b) {
                    Some(q)
                } else {
                    assert!(
                        b.dominates_same_total(&q),
                        "dominated class partitions must form a chainable max"
                    );
                    Some(b)
                }
            }
        };
    }
    best
}

#[test]
fn collapse_equals_brute_force_maximum() {
    for total in 0..=14u32 {
        for p in all_partitions(total) {
            for class in [Class::B, Class::C, Class::D] {
                let ok_parity = match class {
                    Class::B => total % 2 == 1,
                    _ => total % 2 == 0,
                };
                if !ok_parity {
                    assert!(p.collapse(class).is_err());
                    continue;
                }
                let got = p.collapse(class).unwrap();
                let want = brute_force_collapse(&p, class).expect("a class partition exists");
                assert_eq!(got, want, "collapse({p}, {class:?})");
            }
        }
    }
}

#[test]
fn dcom_equals_split_maximum() {
    for total in 0..=12u32 {
        for p in all_partitions(total) {
            for z in 1..=5u32 {
                assert_eq!(d_com(&p, z), brute_force_dcom(&p, z), "p={p} z={z}");
            }
        }
    }
}

#[test]
fn dcom_idempotence_pattern() {
    // (d_com)^3 = d_com and (d_com)^2 >= identity
    for total in 1..=12u32 {
        for p in all_partitions(total) {
            for z in 1..=6u32 {
                let d1 = d_com(&p, z);
                let d2 = d_com(&d1, z);
                let d3 = d_com(&d2, z);
                assert_eq!(d3, d1, "p={p} z={z}");
                assert!(d2.dominates_same_total(&p), "p={p} z={z}");
            }
        }
    }
}

#[test]
fn dcom_union_superadditivity() {
    // if p1^T u p2^T = p^T then d_com(p1) u d_com(p2) <= d_com(p)
    for t1 in 1..=5u32 {
        for t2 in 1..=(10 - t1).min(5) {
            for p1 in all_partitions(t1) {
                for p2 in all_partitions(t2) {
                    let p = p1.transpose().union(&p2.transpose()).transpose();
                    for z in 1..=4u32 {
                        let lhs = d_com(&p1, z).union(&d_com(&p2, z));
                        let rhs = d_com(&p, z);
                        assert!(
                            rhs.dominates_same_total(&lhs),
                            "p1={p1} p2={p2} z={z}: {lhs} vs {rhs}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn dcom_strictness_for_merged_parts() {
    // d_com(|m|) <= d_com(m), strict when some sub-sum of parts exceeds z
    for total in 2..=10u32 {
        for m in all_partitions(total) {
            if m.len() < 2 {
                continue;
            }
            for z in 1..=6u32 {
                let merged = d_com(&Partition::row(total), z);
                let split = d_com(&m, z);
                assert!(split.dominates_same_total(&merged), "m={m} z={z}");
                // the largest sub-sum is the full total
                if total > z {
                    assert_ne!(split, merged, "strictness fails for m={m} z={z}");
                }
            }
        }
    }
}

#[test]
fn d_bv_order_reversal() {
    for f in [Family::A, Family::B, Family::C, Family::D] {
        for r in 2..=5u32 {
            let total_cap = match f {
                Family::A => r + 1,
                Family::B => 2 * r + 1,
                _ => 2 * r,
            };
            if total_cap > 12 {
                continue;
            }
            for nk in 1..=6u32 {
                let c = CoverParams::diamond(CartanType::new(f, r), nk);
                let orbits = dual_orbits(&c);
                for a in &orbits {
                    for b in &orbits {
                        if a.dominates_same_total(b) {
                            let da = d_bv(&c, a).unwrap();
                            let db = d_bv(&c, b).unwrap();
                            assert!(
                                db.dominates_same_total(&da),
                                "{c}: {a} >= {b} but images not reversed"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn image_monotonicity_type_a() {
    // for p in the image of d_com and p' > p: d_com(p') < d_com(p)
    for total in 2..=12u32 {
        for nk in 1..=6u32 {
            let image: Vec<Partition> = all_partitions(total)
                .into_iter()
                .map(|p| d_com(&p, nk))
                .collect();
            for p in image.iter() {
                for q in all_partitions(total) {
                    if q.dominates_same_total(p) && q != *p {
                        let dq = d_com(&q, nk);
                        let dp = d_com(p, nk);
                        assert!(
                            dp.dominates_same_total(&dq) && dp != dq,
                            "total={total} nk={nk} p={p} q={q}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn special_involution_on_image() {
    for class in [Class::B, Class::C, Class::D] {
        for total in 0..=14u32 {
            let parity_ok = match class {
                Class::B => total % 2 == 1,
                _ => total % 2 == 0,
            };
            if !parity_ok {
                continue;
            }
            for s in special_partitions(total, class) {
                assert!(s.is_class(class));
                assert!(is_special(&s, class));
                let once = s.transpose().collapse(class).unwrap();
                let twice = once.transpose().collapse(class).unwrap();
                assert_eq!(twice, s, "class {class:?} s={s}");
            }
        }
    }
}

#[test]
fn saturation_dominance_maximality() {
    // the saturated orbit dominates every padded union of dominated tuples
    for m in 1..=3u32 {
        for q1 in class_partitions(2 * m, Class::D) {
            for q2 in class_partitions(2 * (4 - m) + 1, Class::B) {
                let v = saturate(&[q1.clone(), q2.clone()], Class::B, 2 * 4 + 1).unwrap();
                assert!(v.is_class(Class::B));
                let plain = q1.union(&q2);
                assert!(v.dominates_same_total(&plain.collapse(Class::B).unwrap()));
            }
        }
    }
}

#[test]
fn dominance_is_partial_order() {
    for total in 0..=10u32 {
        let ps = all_partitions(total);
        for a in &ps {
            assert!(a.dominates_same_total(a));
            for b in &ps {
                if a.dominates_same_total(b) && b.dominates_same_total(a) {
                    assert_eq!(a, b);
                }
                for c in &ps {
                    if a.dominates_same_total(b)
                        && b.dominates_same_total(c)
                        && !a.dominates_same_total(c)
                    {
                        panic!("transitivity fails: {a} {b} {c}");
                    }
                }
            }
        }
    }
}
