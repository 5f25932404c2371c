//! The covering Barbasch-Vogan duality `d_BV` and its building block
//! `d_com`, plus partition-level induction/saturation of orbits.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{s_part, all_partitions, Class, Label, Partition, PartitionError};
use crate::root_systems::{dual_group_family, CoverParams, Family};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityError {
    /// The orbit partition is not of the dual family's class (or total).
    InvalidOrbit { cover: String, orbit: String },
    Partition(PartitionError),
}

impl fmt::Display for DualityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualityError::InvalidOrbit { cover, orbit } => {
                write!(f, "{orbit} is not a nilpotent orbit of the dual group of {cover}")
            }
            DualityError::Partition(e) => write!(f, "{e}"),
        }
    }
}

impl From<PartitionError> for DualityError {
    fn from(e: PartitionError) -> Self {
        DualityError::Partition(e)
    }
}

/// `d_com^{(z)}(p) = sum_i s(p_i; z)`, the order-reversing core map.
pub fn d_com(p: &Partition, z: u32) -> Partition {
    let mut acc = Partition::empty();
    for &part in p.parts() {
        acc = acc.sum(&s_part(part, z));
    }
    acc
}

/// Independent characterization of `d_com`: the maximum of
/// `(l_1^T u ... u l_z^T)^T` over all z-way multiset splits
/// `l_1 u ... u l_z = p^T`. Exponential; test oracle only.
pub fn brute_force_dcom(p: &Partition, z: u32) -> Partition {
    let target = p.transpose();
    let mut best: Option<Partition> = None;
    // Distribute each part of target into one of z groups; the groups are
    // unordered so fix a canonical assignment: each part goes to a group
    // index <= (number of groups used so far).
    fn rec(
        parts: &[u32],
        idx: usize,
        groups: &mut Vec<Vec<u32>>,
        z: usize,
        best: &mut Option<Partition>,
    ) {
        if idx == parts.len() {
            let mut unioned = Partition::empty();
            for g in groups.iter() {
                let q = Partition::new(g.clone());
                unioned = unioned.union(&q.transpose());
            }
            let value = unioned.transpose();
            match best {
                None => *best = Some(value),
                Some(b) => {
                    if value.dominates_same_total(b) {
                        *b = value;
                    }
                }
            }
            return;
        }
        let used = groups.len();
        for g in 0..used.min(z) {
            groups[g].push(parts[idx]);
            rec(parts, idx + 1, groups, z, best);
            groups[g].pop();
        }
        if used < z {
            groups.push(alloc::vec![parts[idx]]);
            rec(parts, idx + 1, groups, z, best);
            groups.pop();
        }
    }
    let parts: Vec<u32> = target.parts().to_vec();
    let mut groups: Vec<Vec<u32>> = Vec::new();
    rec(&parts, 0, &mut groups, z as usize, &mut best);
    best.unwrap_or_else(Partition::empty)
}

/// Total of a valid dual-group orbit partition for the cover.
pub fn dual_orbit_total(c: &CoverParams) -> u32 {
    let r = c.cartan.rank;
    match dual_group_family(c) {
        Family::A => r + 1,
        Family::B => 2 * r + 1,
        Family::C | Family::D => 2 * r,
        Family::G2 => panic!("G2 orbits are not partitions"),
    }
}

/// Checks that `p` represents an orbit of the dual group of `c`.
pub fn validate_dual_orbit(c: &CoverParams, p: &Partition) -> Result<(), DualityError> {
    let fam = dual_group_family(c);
    let ok = p.total() == dual_orbit_total(c) && p.is_class(fam.class());
    if ok {
        Ok(())
    } else {
        Err(DualityError::InvalidOrbit {
            cover: alloc::format!("{c}"),
            orbit: alloc::format!("{p}"),
        })
    }
}

/// All dual-group orbits for the cover (partition level; labels not
/// expanded).
pub fn dual_orbits(c: &CoverParams) -> Vec<Partition> {
    let fam = dual_group_family(c);
    all_partitions(dual_orbit_total(c))
        .into_iter()
        .filter(|p| p.is_class(fam.class()))
        .collect()
}

/// The covering Barbasch-Vogan duality map, with very-even label handling
/// in type D.
pub fn d_bv(c: &CoverParams, orbit: &Partition) -> Result<Partition, DualityError> {
    validate_dual_orbit(c, orbit)?;
    let nk = c.n_kappa;
    let p = orbit.unlabeled();
    let out = match c.cartan.family {
        Family::A => d_com(&p, nk),
        Family::B => {
            if nk % 2 == 1 {
                d_com(&p, nk).plus_op().collapse(Class::B)?
            } else {
                d_com(&p, nk).collapse(Class::B)?
            }
        }
        Family::C => {
            if nk % 2 == 1 {
                d_com(&p, nk).minus_op()?.collapse(Class::C)?
            } else if (nk / 2) % 2 == 1 {
                d_com(&p, nk / 2).plus_op().minus_op()?.collapse(Class::C)?
            } else {
                d_com(&p, nk / 2).collapse(Class::C)?
            }
        }
        Family::D => {
            let value = d_com(&p, nk).collapse(Class::D)?;
            let r = c.cartan.rank;
            // Label rule: when source and image are both very even, copy the
            // label if r/2 is even and swap it if r/2 is odd. Labels are
            // dropped silently when the image is not very even.
            if let (Some(label), true) = (orbit.label(), value.is_very_even()) {
                let out_label = if (r / 2) % 2 == 0 { label } else { label.flipped() };
                return Ok(value.with_label(Some(out_label)));
            }
            value
        }
        Family::G2 => panic!("use g2::g2_dbv for G2 covers"),
    };
    Ok(out)
}

/// Regular nilpotent partition of the dual group.
pub fn regular_dual_orbit(c: &CoverParams) -> Partition {
    let r = c.cartan.rank;
    match dual_group_family(c) {
        Family::A => Partition::row(r + 1),
        Family::B => Partition::row(2 * r + 1),
        Family::C => Partition::row(2 * r),
        Family::D => Partition::new(alloc::vec![2 * r - 1, 1]),
        Family::G2 => panic!("G2 orbits are not partitions"),
    }
}

/// Zero orbit of the dual group.
pub fn zero_dual_orbit(c: &CoverParams) -> Partition {
    Partition::column(dual_orbit_total(c))
}

/// Block sizes of a Levi subgroup: GL-block sizes plus the distinguished
/// non-A block rank (0 when the distinguished end is not in the subset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviBlocks {
    pub gl_blocks: Vec<u32>,
    pub tail_rank: u32,
}

/// Saturated regular orbit of the dual Levi `M_S^vee` inside the dual
/// group, as a partition: GL-blocks of size `p` contribute `(p, p)`
/// (type A: a single `p`), the distinguished block contributes the regular
/// partition of its own dual classical group, and the rest is padded with
/// ones.
pub fn levi_regular_dual_orbit(c: &CoverParams, blocks: &LeviBlocks) -> Partition {
    let fam = dual_group_family(c);
    let total = dual_orbit_total(c);
    let mut parts: Vec<u32> = Vec::new();
    for &p in &blocks.gl_blocks {
        if p == 0 {
            continue;
        }
        match c.cartan.family {
            Family::A => parts.push(p),
            _ => {
                parts.push(p);
                parts.push(p);
            }
        }
    }
    let t = blocks.tail_rank;
    match (c.cartan.family, fam) {
        (Family::A, _) => {}
        (Family::B, Family::C) => {
            if t > 0 {
                parts.push(2 * t);
            }
        }
        (Family::B, Family::B) => parts.push(2 * t + 1),
        (Family::C, Family::B) => parts.push(2 * t + 1),
        (Family::C, Family::C) => {
            if t > 0 {
                parts.push(2 * t);
            }
        }
        (Family::D, Family::D) => {
            if t > 0 {
                parts.push(2 * t - 1);
                parts.push(1);
            }
        }
        _ => unreachable!("classical dual families only"),
    }
    let used: u32 = parts.iter().sum();
    assert!(used <= total, "Levi blocks exceed the ambient rank");
    for _ in 0..(total - used) {
        parts.push(1);
    }
    let p = Partition::new(parts);
    p.collapse(fam.class()).expect("saturated Levi orbit has the right parity")
}

/// Saturation of a vertex-split orbit tuple into the ambient group: multiset
/// union of the component partitions, padded with ones to the ambient size,
/// then ambient-class collapse.
pub fn saturate(
    components: &[Partition],
    ambient_class: Class,
    ambient_total: u32,
) -> Result<Partition, PartitionError> {
    let mut u = Partition::empty();
    for p in components {
        u = u.union(p);
    }
    let used = u.total();
    if used > ambient_total {
        return Err(PartitionError::TotalMismatch { left: used, right: ambient_total });
    }
    let mut parts = u.parts().to_vec();
    for _ in 0..(ambient_total - used) {
        parts.push(1);
    }
    Partition::new(parts).collapse(ambient_class)
}

/// Label bookkeeping for saturation: a very-even label survives only in the
/// single-component identity case; everything else drops labels and reports
/// that the parity rule (same label class iff `4 | r`) was extrapolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelNote {
    Exact(Option<Label>),
    Extrapolated,
}

pub fn saturate_labeled(
    components: &[Partition],
    ambient_class: Class,
    ambient_total: u32,
) -> Result<(Partition, LabelNote), PartitionError> {
    let value = saturate(components, ambient_class, ambient_total)?;
    if components.len() == 1 && components[0].total() == ambient_total {
        let note = LabelNote::Exact(components[0].label());
        let labeled = value.with_label(components[0].label());
        return Ok((labeled, note));
    }
    let any_label = components.iter().any(|p| p.label().is_some());
    if any_label && value.is_very_even() {
        return Ok((value, LabelNote::Extrapolated));
    }
    Ok((value, LabelNote::Exact(None)))
}
