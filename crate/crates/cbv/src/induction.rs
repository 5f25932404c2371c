//! Closed-form truncated induction at the partition level and the
//! upper-bound quantity `D(O^vee)`: the dominance maximum, over pseudo-Levi
//! candidate tuples at every alcove vertex, of saturated Springer values
//! subject to a dual-side constraint.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::duality::{dual_orbit_total, validate_dual_orbit, DualityError};
use crate::partitions::{
    all_partitions, is_special, special_partitions, Class, Partition, PartitionError,
};
use crate::root_systems::{
    dual_group_family, enumerate_pseudo_levis, enumerate_vertex_splits, CoverParams, Family,
    PseudoLevi, VertexFactor,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InductionError {
    /// An end block was fed a partition outside the special set of its class.
    NotSpecial { class: Class, partition: String },
    /// The candidate set has two dominance-incomparable maxima.
    IncomparableMaxima { first: String, second: String },
    /// The two displayed forms of a j-induction formula disagreed.
    FormMismatch { first: String, second: String },
    RankBound { rank: u32, bound: u32 },
    Duality(DualityError),
    Partition(PartitionError),
}

impl fmt::Display for InductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InductionError::NotSpecial { class, partition } => {
                write!(f, "{partition} is not a special {class:?}-partition")
            }
            InductionError::IncomparableMaxima { first, second } => {
                write!(f, "candidate maximum is not unique: {first} vs {second}")
            }
            InductionError::FormMismatch { first, second } => {
                write!(f, "j-induction forms disagree: {first} vs {second}")
            }
            InductionError::RankBound { rank, bound } => {
                write!(f, "rank {rank} exceeds the configured sweep bound {bound}")
            }
            InductionError::Duality(e) => write!(f, "{e}"),
            InductionError::Partition(e) => write!(f, "{e}"),
        }
    }
}

impl From<PartitionError> for InductionError {
    fn from(e: PartitionError) -> Self {
        InductionError::Partition(e)
    }
}

impl From<DualityError> for InductionError {
    fn from(e: DualityError) -> Self {
        InductionError::Duality(e)
    }
}

/// Sweep rank guard: the candidate enumeration is only meant for desk-scale
/// ranks.
pub const MAX_SWEEP_RANK: u32 = 12;

fn require_special(p: &Partition, class: Class) -> Result<(), InductionError> {
    if is_special(p, class) {
        Ok(())
    } else {
        Err(InductionError::NotSpecial { class, partition: alloc::format!("{p}") })
    }
}

/// Springer value of `j`-induction from a type A pseudo-Levi:
/// `(l_1^T u ... u l_k^T)^T` over blocks `l_i`.
pub fn j_induce_a(blocks: &[Partition]) -> Partition {
    let mut u = Partition::empty();
    for b in blocks {
        u = u.union(&b.transpose());
    }
    u.transpose()
}

/// Springer value for ambient B: an optional B head (entering through its
/// symplectic encoding), doubled A middles, and the structural B tail.
/// Both displayed forms are computed; they must agree.
pub fn j_induce_b(
    head: Option<&Partition>,
    middles: &[Partition],
    tail: &Partition,
) -> Result<Partition, InductionError> {
    if let Some(h) = head {
        require_special(h, Class::B)?;
    }
    require_special(tail, Class::B)?;
    let form1 = j_induce_b_form(head, middles, tail, false)?;
    let form2 = j_induce_b_form(head, middles, tail, true)?;
    if form1 != form2 {
        return Err(InductionError::FormMismatch {
            first: alloc::format!("{form1}"),
            second: alloc::format!("{form2}"),
        });
    }
    Ok(form1)
}

/// One displayed form of the ambient-B value: one B end enters plainly
/// transposed, the other through the symplectic encoding `(mu^-)_C`. An
/// absent head is the rank-0 B block, which carries the partition `(1)`.
pub fn j_induce_b_form(
    head: Option<&Partition>,
    middles: &[Partition],
    tail: &Partition,
    swap: bool,
) -> Result<Partition, InductionError> {
    let rank_zero = Partition::row(1);
    let head = head.unwrap_or(&rank_zero);
    let (plain, encoded) = if swap { (head, tail) } else { (tail, head) };
    let mut u = Partition::empty();
    if !encoded.is_empty() {
        u = u.union(&encoded.minus_op()?.collapse(Class::C)?.transpose());
    }
    for m in middles {
        let t = m.transpose();
        u = u.union(&t).union(&t);
    }
    u = u.union(&plain.transpose());
    Ok(u.transpose().collapse(Class::B)?)
}

/// Springer value for ambient C: optional special-D head (collapsed
/// transpose), doubled A middles, optional special-C tail.
pub fn j_induce_c(
    head: Option<&Partition>,
    middles: &[Partition],
    tail: Option<&Partition>,
) -> Result<Partition, InductionError> {
    if let Some(h) = head {
        require_special(h, Class::D)?;
    }
    if let Some(t) = tail {
        require_special(t, Class::C)?;
    }
    let mut u = Partition::empty();
    if let Some(h) = head {
        u = u.union(&h.transpose().collapse(Class::D)?);
    }
    for m in middles {
        let t = m.transpose();
        u = u.union(&t).union(&t);
    }
    if let Some(t) = tail {
        u = u.union(&t.transpose());
    }
    Ok(u.transpose().collapse(Class::C)?)
}

/// Springer value for ambient D: two optional special-D slots; both
/// displayed forms computed and compared.
pub fn j_induce_d(
    head: Option<&Partition>,
    middles: &[Partition],
    tail: Option<&Partition>,
) -> Result<Partition, InductionError> {
    if let Some(h) = head {
        require_special(h, Class::D)?;
    }
    if let Some(t) = tail {
        require_special(t, Class::D)?;
    }
    let form1 = j_induce_d_form(head, middles, tail, false)?;
    let form2 = j_induce_d_form(head, middles, tail, true)?;
    if form1 != form2 {
        return Err(InductionError::FormMismatch {
            first: alloc::format!("{form1}"),
            second: alloc::format!("{form2}"),
        });
    }
    Ok(form1)
}

/// One displayed form of the ambient-D value: one D slot enters plainly
/// transposed, the other with an inner D-collapse.
pub fn j_induce_d_form(
    head: Option<&Partition>,
    middles: &[Partition],
    tail: Option<&Partition>,
    swap: bool,
) -> Result<Partition, InductionError> {
    let (plain, collapsed) = if swap { (tail, head) } else { (head, tail) };
    let mut u = Partition::empty();
    if let Some(p) = plain {
        u = u.union(&p.transpose());
    }
    for m in middles {
        let t = m.transpose();
        u = u.union(&t).union(&t);
    }
    if let Some(c) = collapsed {
        u = u.union(&c.transpose().collapse(Class::D)?);
    }
    Ok(u.transpose().collapse(Class::D)?)
}

/// A pseudo-Levi shape with a chosen Springer partition in every slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilledFactor {
    pub factor: VertexFactor,
    /// B factor: special B partition of `2h+1`; C/D factor: special D of
    /// `2h`.
    pub head: Option<Partition>,
    /// Partitions of the A-block sizes.
    pub a_blocks: Vec<Partition>,
    /// B factor: special B of `2t+1` (always present); C factor: special C
    /// of `2t`; D factor: special D of `2t`.
    pub tail: Option<Partition>,
}

impl FilledFactor {
    /// Group-side Springer value of the factor, in the factor's own class.
    pub fn group_value(&self) -> Result<Partition, InductionError> {
        match self.factor.family {
            Family::A => Ok(j_induce_a(&self.a_blocks)),
            Family::B => j_induce_b(
                self.head.as_ref(),
                &self.a_blocks,
                self.tail.as_ref().expect("B factors carry a structural tail"),
            ),
            Family::C => j_induce_c(self.head.as_ref(), &self.a_blocks, self.tail.as_ref()),
            Family::D => j_induce_d(self.head.as_ref(), &self.a_blocks, self.tail.as_ref()),
            Family::G2 => panic!("G2 factors live in the g2 module"),
        }
    }

    /// Middle members this factor contributes to the dual-side union: the
    /// A-block partitions, twice each outside type A.
    pub fn dual_middles(&self) -> Partition {
        let mut u = Partition::empty();
        let ambient_a = self.factor.family == Family::A;
        for m in &self.a_blocks {
            u = u.union(m);
            if !ambient_a {
                u = u.union(m);
            }
        }
        u
    }

    /// End-block data for the dual side: the origin class with the original
    /// (unflipped) special partition. Rank-0 B tails are genuine slots but
    /// carry `(1)`, contributing nothing after encoding, so they are kept.
    pub fn dual_slots(&self) -> Vec<(Class, Partition)> {
        let mut out = Vec::new();
        match self.factor.family {
            Family::A => {}
            Family::B => {
                if let Some(h) = &self.head {
                    out.push((Class::B, h.clone()));
                }
                out.push((Class::B, self.tail.clone().expect("structural tail")));
            }
            Family::C => {
                if let Some(h) = &self.head {
                    out.push((Class::D, h.clone()));
                }
                if let Some(t) = &self.tail {
                    out.push((Class::C, t.clone()));
                }
            }
            Family::D => {
                if let Some(h) = &self.head {
                    out.push((Class::D, h.clone()));
                }
                if let Some(t) = &self.tail {
                    out.push((Class::D, t.clone()));
                }
            }
            Family::G2 => unreachable!(),
        }
        out
    }
}

/// Dual-side Springer value of a whole tuple: the truncated induction of
/// the sign-twisted tuple into the dual group, computed by the dual
/// family's closed form with each end block re-encoded appropriately.
pub fn dual_side_value(
    factors: &[FilledFactor],
    dual_family: Family,
    member_total: u32,
) -> Result<Partition, InductionError> {
    let mut middles = Partition::empty();
    let mut slots: Vec<(Class, Partition)> = Vec::new();
    for f in factors {
        middles = middles.union(&f.dual_middles());
        slots.extend(f.dual_slots());
    }
    finish_dual_value(&middles, &slots, dual_family, member_total)
}

/// Flip a special end block by the sign twist and express it in the
/// symplectic encoding used by the dual-side formulas for B and C duals.
fn flipped_c_encoding(class: Class, p: &Partition) -> Result<Partition, InductionError> {
    match class {
        // ((p^T)_B)^- collapsed to C
        Class::B => Ok(p.transpose().collapse(Class::B)?.minus_op()?.collapse(Class::C)?),
        // (p^T)_C, already a C-partition for special p
        Class::C => Ok(p.transpose().collapse(Class::C)?),
        _ => unreachable!("only B/C blocks feed odd orthogonal duals"),
    }
}

fn finish_dual_value(
    middles: &Partition,
    slots: &[(Class, Partition)],
    dual_family: Family,
    member_total: u32,
) -> Result<Partition, InductionError> {
    // Pad torus directions (rank lost to dropped vertex factors) with
    // fixed GL_1 blocks.
    let mut mid = middles.clone();
    let slot_total: u32 = slots
        .iter()
        .map(|(class, p)| match class {
            Class::B => p.total() - 1,
            _ => p.total(),
        })
        .sum();
    let deficit = member_total - mid.total() - slot_total;
    for _ in 0..deficit {
        mid = mid.union(&Partition::row(1));
    }
    match dual_family {
        Family::A => {
            debug_assert!(slots.is_empty());
            Ok(mid.transpose())
        }
        Family::C => {
            // Both end slots contribute locally: a D block plainly, a B
            // block through (mu^-)_C, a C block plainly.
            let mut u = mid;
            for (class, p) in slots {
                match class {
                    Class::D | Class::C => u = u.union(p),
                    Class::B => {
                        if !p.is_empty() {
                            u = u.union(&p.minus_op()?.collapse(Class::C)?);
                        }
                    }
                    Class::A => unreachable!(),
                }
            }
            Ok(u.transpose().collapse(Class::C)?)
        }
        Family::B => {
            // Two symplectically encoded slots; one of them takes the
            // (.^+)_B treatment. The two assignments must agree.
            let encoded: Vec<Partition> = slots
                .iter()
                .map(|(class, p)| flipped_c_encoding(*class, p))
                .collect::<Result<_, _>>()?;
            assert!(encoded.len() <= 2, "odd orthogonal duals have at most two end blocks");
            let e1 = encoded.first().cloned().unwrap_or_else(Partition::empty);
            let e2 = encoded.get(1).cloned().unwrap_or_else(Partition::empty);
            let value = |plain: &Partition, plussed: &Partition| -> Result<Partition, InductionError> {
                let u = mid
                    .union(&plain.transpose())
                    .union(&plussed.plus_op().collapse(Class::B)?.transpose());
                Ok(u.transpose().collapse(Class::B)?)
            };
            let v1 = value(&e1, &e2)?;
            let v2 = value(&e2, &e1)?;
            if v1 != v2 {
                return Err(InductionError::FormMismatch {
                    first: alloc::format!("{v1}"),
                    second: alloc::format!("{v2}"),
                });
            }
            Ok(v1)
        }
        Family::D => {
            let encoded: Vec<Partition> = slots
                .iter()
                .map(|(_, p)| Ok(p.transpose().collapse(Class::D)?))
                .collect::<Result<_, InductionError>>()?;
            assert!(encoded.len() <= 2, "even orthogonal duals have at most two end blocks");
            let e1 = encoded.first().cloned().unwrap_or_else(Partition::empty);
            let e2 = encoded.get(1).cloned().unwrap_or_else(Partition::empty);
            let value = |plain: &Partition, collapsed: &Partition| -> Result<Partition, InductionError> {
                let u = mid
                    .union(&plain.transpose())
                    .union(&collapsed.transpose().collapse(Class::D)?);
                Ok(u.transpose().collapse(Class::D)?)
            };
            let v1 = value(&e1, &e2)?;
            let v2 = value(&e2, &e1)?;
            if v1 != v2 {
                return Err(InductionError::FormMismatch {
                    first: alloc::format!("{v1}"),
                    second: alloc::format!("{v2}"),
                });
            }
            Ok(v1)
        }
        Family::G2 => panic!("G2 duals live in the g2 module"),
    }
}

/// A `(group value, dual value)` pair arising from one candidate tuple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub group_value: Partition,
    pub dual_value: Partition,
}

fn fill_slot(
    rank: Option<u32>,
    class: Class,
    total_of: impl Fn(u32) -> u32,
) -> Vec<Option<Partition>> {
    match rank {
        None => vec![None],
        Some(k) => special_partitions(total_of(k), class).into_iter().map(Some).collect(),
    }
}

fn fill_shape(shape: &PseudoLevi) -> Vec<FilledFactor> {
    let (head_choices, tail_choices): (Vec<Option<Partition>>, Vec<Option<Partition>>) =
        match shape.factor.family {
            Family::A => (vec![None], vec![None]),
            Family::B => (
                fill_slot(shape.head, Class::B, |k| 2 * k + 1),
                fill_slot(shape.tail, Class::B, |k| 2 * k + 1),
            ),
            Family::C => (
                fill_slot(shape.head, Class::D, |k| 2 * k),
                fill_slot(shape.tail, Class::C, |k| 2 * k),
            ),
            Family::D => (
                fill_slot(shape.head, Class::D, |k| 2 * k),
                fill_slot(shape.tail, Class::D, |k| 2 * k),
            ),
            Family::G2 => unreachable!(),
        };
    let mut a_choices: Vec<Vec<Partition>> = vec![Vec::new()];
    for &size in &shape.a_blocks {
        let options = all_partitions(size);
        let mut next = Vec::with_capacity(a_choices.len() * options.len());
        for base in &a_choices {
            for opt in &options {
                let mut v = base.clone();
                v.push(opt.clone());
                next.push(v);
            }
        }
        a_choices = next;
    }
    let mut out = Vec::new();
    for h in &head_choices {
        for t in &tail_choices {
            for a in &a_choices {
                out.push(FilledFactor {
                    factor: shape.factor,
                    head: h.clone(),
                    a_blocks: a.clone(),
                    tail: t.clone(),
                });
            }
        }
    }
    out
}

/// Enumerates every candidate `(group value, dual value)` pair for the
/// cover: all vertex splits, all pseudo-Levi shapes per factor, all special
/// partitions per slot. Deduplicated; independent of any target orbit, so a
/// sweep over orbits enumerates once.
pub fn enumerate_candidates(c: &CoverParams) -> Result<Vec<Candidate>, InductionError> {
    if c.cartan.rank > MAX_SWEEP_RANK {
        return Err(InductionError::RankBound { rank: c.cartan.rank, bound: MAX_SWEEP_RANK });
    }
    let dual_family = dual_group_family(c);
    let (ambient_class, ambient_total) = match c.cartan.family {
        Family::A => (Class::A, c.cartan.rank + 1),
        Family::B => (Class::B, 2 * c.cartan.rank + 1),
        Family::C => (Class::C, 2 * c.cartan.rank),
        Family::D => (Class::D, 2 * c.cartan.rank),
        Family::G2 => panic!("use g2::g2_cap_d"),
    };
    // The global shape of a pseudo-Levi subsystem is a subdiagram of the
    // extended Dynkin diagram of the rescaled system: at most one D and the
    // structural B for odd covers of B, B blocks only for even covers of B,
    // at most one D and one C for even covers of C, at most two D blocks in
    // type D. Anything within one vertex factor is additionally constrained
    // by the per-factor shapes already enumerated.
    let (max_d_slots, max_c_tails) = match (c.cartan.family, c.n_kappa % 2) {
        (Family::A, _) => (0u32, 0u32),
        (Family::B, 1) => (1, 0),
        (Family::B, 0) => (0, 0),
        (Family::C, 1) => (0, 2),
        (Family::C, 0) => (1, 1),
        (Family::D, _) => (2, 0),
        _ => unreachable!(),
    };
    let member_total = match c.cartan.family {
        Family::A => c.cartan.rank + 1,
        _ => 2 * c.cartan.rank,
    };
    let mut out: Vec<Candidate> = Vec::new();
    for split in enumerate_vertex_splits(c) {
        // Per factor only the (value, middles, slots) signature matters;
        // dedupe before combining.
        type Sig = (Partition, Partition, Vec<(Class, Partition)>);
        let mut per_factor: Vec<Vec<Sig>> = Vec::new();
        for factor in &split {
            let mut sigs: Vec<Sig> = Vec::new();
            for shape in enumerate_pseudo_levis(c, *factor) {
                let d_slots = match factor.family {
                    Family::C => u32::from(shape.head.is_some()),
                    Family::D => {
                        u32::from(shape.head.is_some()) + u32::from(shape.tail.is_some())
                    }
                    _ => 0,
                };
                let c_tails = match factor.family {
                    Family::C => u32::from(shape.tail.is_some()),
                    _ => 0,
                };
                if d_slots > max_d_slots || c_tails > max_c_tails {
                    continue;
                }
                for filled in fill_shape(&shape) {
                    let gv = filled.group_value()?;
                    let sig = (gv, filled.dual_middles(), filled.dual_slots());
                    if !sigs.contains(&sig) {
                        sigs.push(sig);
                    }
                }
            }
            per_factor.push(sigs);
        }
        type Combo = (Vec<Partition>, Partition, Vec<(Class, Partition)>);
        let mut combos: Vec<Combo> = vec![(Vec::new(), Partition::empty(), Vec::new())];
        for sigs in &per_factor {
            let mut next = Vec::with_capacity(combos.len() * sigs.len());
            for (values, middles, slots) in &combos {
                for (gv, mid2, slots2) in sigs {
                    let d_total = slots.iter().chain(slots2).filter(|(k, _)| *k == Class::D).count();
                    let c_total = slots.iter().chain(slots2).filter(|(k, _)| *k == Class::C).count();
                    if d_total as u32 > max_d_slots || c_total as u32 > max_c_tails {
                        continue;
                    }
                    let mut v = values.clone();
                    v.push(gv.clone());
                    let mut s = slots.clone();
                    s.extend(slots2.iter().cloned());
                    next.push((v, middles.union(mid2), s));
                }
            }
            combos = next;
        }
        for (values, middles, slots) in combos {
            let group_value = crate::duality::saturate(&values, ambient_class, ambient_total)?;
            let dual_value = finish_dual_value(&middles, &slots, dual_family, member_total)?;
            let cand = Candidate { group_value, dual_value };
            if !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out.sort();
    Ok(out)
}

fn dominance_max(mut values: Vec<Partition>) -> Result<Option<Partition>, InductionError> {
    values.sort();
    values.dedup();
    let mut maxima: Vec<Partition> = Vec::new();
    'outer: for v in values {
        let mut keep: Vec<Partition> = Vec::new();
        let mut covered = false;
        for m in maxima.into_iter() {
            if m.dominates_same_total(&v) {
                covered = true;
                keep.push(m);
            } else if !v.dominates_same_total(&m) {
                keep.push(m);
            }
        }
        maxima = keep;
        if covered {
            continue 'outer;
        }
        maxima.push(v);
    }
    match maxima.len() {
        0 => Ok(None),
        1 => Ok(maxima.pop()),
        _ => Err(InductionError::IncomparableMaxima {
            first: alloc::format!("{}", maxima[0]),
            second: alloc::format!("{}", maxima[1]),
        }),
    }
}

/// `D(O^vee)`: dominance maximum of group values over candidates whose dual
/// value dominates the target orbit.
pub fn cap_d(c: &CoverParams, orbit: &Partition) -> Result<Partition, InductionError> {
    let candidates = enumerate_candidates(c)?;
    cap_d_from(c, orbit, &candidates)
}

/// `D` from a precomputed candidate set (for sweeps).
pub fn cap_d_from(
    c: &CoverParams,
    orbit: &Partition,
    candidates: &[Candidate],
) -> Result<Partition, InductionError> {
    validate_dual_orbit(c, orbit)?;
    let p = orbit.unlabeled();
    let values: Vec<Partition> = candidates
        .iter()
        .filter(|cand| cand.dual_value.dominates_same_total(&p))
        .map(|cand| cand.group_value.clone())
        .collect();
    match dominance_max(values)? {
        Some(v) => Ok(v),
        None => Err(InductionError::IncomparableMaxima {
            first: String::from("<empty candidate set>"),
            second: alloc::format!("{p}"),
        }),
    }
}

/// `D^flat(O^vee)`: the equality-constrained variant; `None` when no tuple
/// attains the orbit exactly.
pub fn cap_d_flat(
    c: &CoverParams,
    orbit: &Partition,
) -> Result<Option<Partition>, InductionError> {
    let candidates = enumerate_candidates(c)?;
    cap_d_flat_from(c, orbit, &candidates)
}

pub fn cap_d_flat_from(
    c: &CoverParams,
    orbit: &Partition,
    candidates: &[Candidate],
) -> Result<Option<Partition>, InductionError> {
    validate_dual_orbit(c, orbit)?;
    let p = orbit.unlabeled();
    let values: Vec<Partition> = candidates
        .iter()
        .filter(|cand| cand.dual_value == p)
        .map(|cand| cand.group_value.clone())
        .collect();
    dominance_max(values)
}

/// Regular orbit of the group itself.
pub fn regular_group_orbit(c: &CoverParams) -> Partition {
    match c.cartan.family {
        Family::A => Partition::row(c.cartan.rank + 1),
        Family::B => Partition::row(2 * c.cartan.rank + 1),
        Family::C => Partition::row(2 * c.cartan.rank),
        Family::D => Partition::new(vec![2 * c.cartan.rank - 1, 1]),
        Family::G2 => panic!("G2 orbits are not partitions"),
    }
}

/// Re-export of the dual-orbit total for sweep convenience.
pub fn dual_total(c: &CoverParams) -> u32 {
    dual_orbit_total(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{d_bv, d_com, dual_orbits, regular_dual_orbit, zero_dual_orbit};
    use crate::root_systems::CartanType;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn cover(f: Family, r: u32, n: u32) -> CoverParams {
        CoverParams::diamond(CartanType::new(f, r), n)
    }

    #[test]
    fn j_induce_a_examples() {
        assert_eq!(j_induce_a(&[p(&[2]), p(&[2])]), p(&[4]));
        assert_eq!(j_induce_a(&[p(&[1]), p(&[1]), p(&[1])]), p(&[3]));
        // a single full block is j from the whole group: the identity
        assert_eq!(j_induce_a(&[p(&[3, 1])]), p(&[3, 1]));
    }

    #[test]
    fn j_induce_b_two_forms_agree() {
        for hr in 0..=2u32 {
            for tr in 0..=2u32 {
                let heads = special_partitions(2 * hr + 1, Class::B);
                let tails = special_partitions(2 * tr + 1, Class::B);
                for h in &heads {
                    for t in &tails {
                        for mid in all_partitions(2) {
                            let v1 = j_induce_b_form(Some(h), &[mid.clone()], t, false).unwrap();
                            let v2 = j_induce_b_form(Some(h), &[mid.clone()], t, true).unwrap();
                            assert_eq!(v1, v2, "h={h} t={t} mid={mid}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn j_induce_d_two_forms_agree() {
        for hr in 0..=3u32 {
            for tr in 0..=hr {
                let heads = special_partitions(2 * hr, Class::D);
                let tails = special_partitions(2 * tr, Class::D);
                for h in &heads {
                    for t in &tails {
                        let hh = if hr == 0 { None } else { Some(h) };
                        let tt = if tr == 0 { None } else { Some(t) };
                        for mid in all_partitions(2) {
                            let v1 = j_induce_d_form(hh, &[mid.clone()], tt, false).unwrap();
                            let v2 = j_induce_d_form(hh, &[mid.clone()], tt, true).unwrap();
                            assert_eq!(v1, v2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn j_induce_rejects_non_special() {
        // find an actual non-special D-partition and check rejection
        let bad = crate::partitions::class_partitions(8, Class::D)
            .into_iter()
            .find(|q| !is_special(q, Class::D))
            .expect("a non-special D-partition of 8 exists");
        assert!(j_induce_d(Some(&bad), &[], None).is_err());
    }

    #[test]
    fn cap_d_type_a_equals_dcom() {
        for r in 1..=4u32 {
            for nk in 1..=4u32 {
                let c = cover(Family::A, r, nk);
                let candidates = enumerate_candidates(&c).unwrap();
                for orbit in all_partitions(r + 1) {
                    let d = cap_d_from(&c, &orbit, &candidates).unwrap();
                    assert_eq!(d, d_com(&orbit, nk), "r={r} nk={nk} p={orbit}");
                }
            }
        }
    }

    #[test]
    fn cap_d_example_3_12() {
        let c = cover(Family::C, 3, 3);
        let d = cap_d(&c, &p(&[3, 3, 1])).unwrap();
        assert_eq!(d, p(&[6]));
    }

    #[test]
    fn cap_d_zero_orbit_matches_dbv() {
        for (f, r, n) in [
            (Family::B, 2, 3),
            (Family::B, 3, 2),
            (Family::C, 2, 3),
            (Family::C, 3, 4),
            (Family::D, 3, 3),
        ] {
            let c = cover(f, r, n);
            let d = cap_d(&c, &zero_dual_orbit(&c)).unwrap();
            assert_eq!(d, d_bv(&c, &zero_dual_orbit(&c)).unwrap(), "{c}");
        }
    }

    #[test]
    fn cap_d_theta_identity() {
        // D(regular dual) = d_bv(regular dual): the wavefront set of the
        // theta representation computed two ways.
        for f in [Family::B, Family::C, Family::D] {
            for r in 2..=4u32 {
                if f == Family::D && r < 3 {
                    continue;
                }
                for nk in 1..=8u32 {
                    let c = cover(f, r, nk);
                    let reg = regular_dual_orbit(&c);
                    let d = cap_d(&c, &reg).unwrap();
                    assert_eq!(d, d_bv(&c, &reg).unwrap(), "{c}");
                }
            }
        }
    }

    #[test]
    fn cap_d_bounded_by_dbv_small() {
        for f in [Family::B, Family::C, Family::D] {
            for r in 2..=3u32 {
                if f == Family::D && r < 3 {
                    continue;
                }
                for nk in 1..=4u32 {
                    let c = cover(f, r, nk);
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
    fn cap_d_flat_matches_cap_d_for_type_a() {
        for r in 1..=3u32 {
            for nk in 1..=3u32 {
                let c = cover(Family::A, r, nk);
                let candidates = enumerate_candidates(&c).unwrap();
                for orbit in all_partitions(r + 1) {
                    let flat = cap_d_flat_from(&c, &orbit, &candidates).unwrap();
                    let full = cap_d_from(&c, &orbit, &candidates).unwrap();
                    assert_eq!(flat, Some(full));
                }
            }
        }
    }

    #[test]
    fn regular_dual_attained_exactly() {
        for (f, r, n) in [(Family::B, 3, 3), (Family::C, 3, 3), (Family::D, 4, 3)] {
            let c = cover(f, r, n);
            let reg = regular_dual_orbit(&c);
            let flat = cap_d_flat(&c, &reg).unwrap();
            assert!(flat.is_some(), "{c}: no tuple attains the regular dual orbit");
        }
    }
}
