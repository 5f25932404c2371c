use cbv::duality::{d_bv, dual_orbits};
use cbv::induction::{cap_d_from, enumerate_candidates};
use cbv::root_systems::{CartanType, CoverParams, Family};

#[test]
fn thm_main_inequality_full_range() {
    for f in [Family::B, Family::C, Family::D] {
        for r in 2..=5u32 {
            if f == Family::D && r < 2 {
                continue;
            }
            for nk in 1..=6u32 {
                let c = CoverParams::diamond(CartanType::new(f, r), nk);
                let candidates = enumerate_candidates(&c).unwrap();
                for orbit in dual_orbits(&c) {
                    let d = cap_d_from(&c, &orbit, &candidates).unwrap();
                    let bv = d_bv(&c, &orbit).unwrap();
                    assert!(
                        bv.dominates_same_total(&d),
                        "cap_d exceeds d_bv at {c} orbit {orbit}: {d} vs {bv}"
                    );
                }
            }
        }
    }
}

#[test]
fn thm_main_type_a_equality_r9() {
    use cbv::duality::d_com;
    use cbv::partitions::all_partitions;
    for r in 1..=9u32 {
        for nk in 1..=6u32 {
            let c = CoverParams::diamond(CartanType::new(Family::A, r), nk);
            let candidates = enumerate_candidates(&c).unwrap();
            for orbit in all_partitions(r + 1) {
                let d = cap_d_from(&c, &orbit, &candidates).unwrap();
                assert_eq!(d, d_com(&orbit, nk), "A{r} nk={nk} p={orbit}");
            }
        }
    }
}
