//! Autotomous subsets, the strict-descent inequality for regular Levi dual
//! orbits, and the theta-genericity thresholds.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::duality::{d_bv, levi_regular_dual_orbit, regular_dual_orbit, LeviBlocks};
use crate::induction::regular_group_orbit;
use crate::partitions::Partition;
use crate::root_systems::{CoverParams, Family};

/// A subset of simple roots in Bourbaki numbering (1-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSubset {
    rank: u32,
    family: Family,
    indices: Vec<u32>,
}

/// One connected component of the induced subdiagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Component {
    pub family: Family,
    /// Number of simple roots in the component. For the distinguished
    /// component of B/C this is the B_k/C_k rank; for D it is the D_k rank
    /// with the D2/D3 small cases kept as D.
    pub size: u32,
}

impl Component {
    /// Maximum exponent of the component's Weyl group.
    pub fn max_exponent(&self) -> u32 {
        match self.family {
            Family::A => self.size,
            Family::B | Family::C => 2 * self.size - 1,
            Family::D => match self.size {
                2 => 1,
                k => 2 * k - 3,
            },
            Family::G2 => 5,
        }
    }
}

impl LeviSubset {
    pub fn new(family: Family, rank: u32, mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        assert!(
            indices.iter().all(|&i| i >= 1 && i <= rank),
            "Bourbaki indices must lie in 1..=rank"
        );
        LeviSubset { rank, family, indices }
    }

    pub fn full(family: Family, rank: u32) -> Self {
        LeviSubset::new(family, rank, (1..=rank).collect())
    }

    pub fn empty(family: Family, rank: u32) -> Self {
        LeviSubset::new(family, rank, Vec::new())
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn contains(&self, i: u32) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> Vec<u32> {
        (1..=self.rank).filter(|i| !self.contains(*i)).collect()
    }

    pub fn with(&self, beta: u32) -> LeviSubset {
        let mut indices = self.indices.clone();
        indices.push(beta);
        LeviSubset::new(self.family, self.rank, indices)
    }

    pub fn is_subset_of(&self, other: &LeviSubset) -> bool {
        self.indices.iter().all(|i| other.contains(*i))
    }

    /// Adjacency of two simple roots in the Dynkin diagram.
    fn adjacent(&self, i: u32, j: u32) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        match self.family {
            Family::A | Family::B | Family::C | Family::G2 => b == a + 1,
            Family::D => {
                let r = self.rank;
                if b == r && a == r - 1 {
                    false // the two fork tips are not adjacent
                } else if b == r {
                    a == r - 2
                } else {
                    b == a + 1
                }
            }
        }
    }

    /// Connected pieces of the induced subdiagram, as sorted index lists.
    fn diagram_pieces(&self) -> Vec<Vec<u32>> {
        let mut seen: Vec<bool> = vec![false; self.indices.len()];
        let mut out = Vec::new();
        for start in 0..self.indices.len() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut members: Vec<u32> = Vec::new();
            seen[start] = true;
            while let Some(k) = stack.pop() {
                members.push(self.indices[k]);
                for (j, &other) in self.indices.iter().enumerate() {
                    if !seen[j] && self.adjacent(self.indices[k], other) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Components of the Levi subgroup, typed by the distinguished nodes.
    ///
    /// In type D the two fork tips span an SO_4 even when the subdiagram
    /// is disconnected, so pieces containing `alpha_{r-1}` and `alpha_r`
    /// merge into one D block.
    pub fn components(&self) -> Vec<Component> {
        let mut pieces = self.diagram_pieces();
        if self.family == Family::D {
            let tip1 = pieces.iter().position(|p| p.contains(&(self.rank - 1)));
            let tip2 = pieces.iter().position(|p| p.contains(&self.rank));
            if let (Some(i), Some(j)) = (tip1, tip2) {
                if i != j {
                    let other = pieces[j].clone();
                    pieces[i].extend(other);
                    pieces[i].sort_unstable();
                    pieces.remove(j);
                }
            }
        }
        let mut out = Vec::new();
        for members in pieces {
            let size = members.len() as u32;
            let family = match self.family {
                Family::A => Family::A,
                Family::B => {
                    if members.contains(&self.rank) {
                        Family::B
                    } else {
                        Family::A
                    }
                }
                Family::C => {
                    if members.contains(&self.rank) {
                        Family::C
                    } else {
                        Family::A
                    }
                }
                Family::D => {
                    if members.contains(&self.rank) && members.contains(&(self.rank - 1)) {
                        Family::D
                    } else {
                        Family::A
                    }
                }
                Family::G2 => {
                    if size == 2 {
                        Family::G2
                    } else {
                        Family::A
                    }
                }
            };
            out.push(Component { family, size });
        }
        out.sort();
        out
    }

    /// Block sizes for the regular-Levi-dual-orbit formulas: GL-block sizes
    /// (component size + 1 for A-components) and the distinguished tail
    /// rank.
    pub fn blocks(&self) -> LeviBlocks {
        let mut gl = Vec::new();
        let mut tail = 0;
        for comp in self.components() {
            match comp.family {
                Family::A => gl.push(comp.size + 1),
                Family::B | Family::C | Family::D => tail = comp.size,
                Family::G2 => panic!("G2 has no partition-level Levi blocks"),
            }
        }
        gl.sort_unstable_by(|a, b| b.cmp(a));
        LeviBlocks { gl_blocks: gl, tail_rank: tail }
    }
}

/// Verdict of the autotomy test, with a witness when positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutotomyVerdict {
    pub autotomous: bool,
    /// `(beta, component)` such that some component of `S + {beta}` has
    /// maximum exponent strictly below `n_kappa`.
    pub witness: Option<(u32, Component)>,
}

/// A subset is autotomous when some adjacent extension `S + {beta}` has a
/// connected component whose maximum exponent is strictly below `n_kappa`.
pub fn is_autotomous(c: &CoverParams, s: &LeviSubset) -> AutotomyVerdict {
    for beta in s.complement() {
        let extended = s.with(beta);
        for comp in extended.components() {
            if c.n_kappa >= comp.max_exponent() + 1 {
                return AutotomyVerdict { autotomous: true, witness: Some((beta, comp)) };
            }
        }
    }
    AutotomyVerdict { autotomous: false, witness: None }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentOutcome {
    Strict,
    NotStrict,
    /// The two images are dominance-incomparable.
    Incomparable,
}

impl fmt::Display for DescentOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescentOutcome::Strict => write!(f, "strict"),
            DescentOutcome::NotStrict => write!(f, "not-strict"),
            DescentOutcome::Incomparable => write!(f, "incomparable"),
        }
    }
}

/// Compares `d_bv` of the two saturated regular Levi dual orbits; `S` must
/// be a proper subset of `S'`.
pub fn strict_descent_holds(
    c: &CoverParams,
    s: &LeviSubset,
    s_prime: &LeviSubset,
) -> DescentOutcome {
    assert!(s.is_subset_of(s_prime) && s != s_prime, "need S strictly inside S'");
    let small = d_bv(c, &levi_regular_dual_orbit(c, &s.blocks())).expect("valid orbit");
    let big = d_bv(c, &levi_regular_dual_orbit(c, &s_prime.blocks())).expect("valid orbit");
    let ge = small.dominates_same_total(&big);
    let le = big.dominates_same_total(&small);
    match (ge, le) {
        (true, false) => DescentOutcome::Strict,
        (true, true) | (false, true) => DescentOutcome::NotStrict,
        (false, false) => DescentOutcome::Incomparable,
    }
}

/// One record of the strict-descent sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentRecord {
    pub family: Family,
    pub rank: u32,
    pub n_kappa: u32,
    pub subset: Vec<u32>,
    pub beta: u32,
    pub autotomous: bool,
    pub outcome: DescentOutcome,
}

impl DescentRecord {
    /// Descent must be strict for non-autotomous subsets; autotomous
    /// records are informational only.
    pub fn is_violation(&self) -> bool {
        !self.autotomous && self.outcome != DescentOutcome::Strict
    }
}

/// All `2^rank` subsets of the simple roots.
pub fn all_subsets(family: Family, rank: u32) -> Vec<LeviSubset> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << rank) {
        let indices: Vec<u32> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        out.push(LeviSubset::new(family, rank, indices));
    }
    out
}

/// Sweeps every subset `S` and every `beta` outside it, recording the
/// one-step descent outcome.
pub fn sweep_strict_descent(c: &CoverParams) -> Vec<DescentRecord> {
    let family = c.cartan.family;
    let rank = c.cartan.rank;
    let mut out = Vec::new();
    for s in all_subsets(family, rank) {
        let verdict = is_autotomous(c, &s);
        for beta in s.complement() {
            let outcome = strict_descent_holds(c, &s, &s.with(beta));
            out.push(DescentRecord {
                family,
                rank,
                n_kappa: c.n_kappa,
                subset: s.indices().to_vec(),
                beta,
                autotomous: verdict.autotomous,
                outcome,
            });
        }
    }
    out
}

/// Full-chain check: for non-autotomous `S`, `d_bv` must descend strictly
/// to every proper superset, not only one-step extensions.
pub fn full_chain_descent_violations(c: &CoverParams) -> Vec<(Vec<u32>, Vec<u32>)> {
    let subsets = all_subsets(c.cartan.family, c.cartan.rank);
    let mut out = Vec::new();
    for s in &subsets {
        if is_autotomous(c, s).autotomous {
            continue;
        }
        for sp in &subsets {
            if s == sp || !s.is_subset_of(sp) {
                continue;
            }
            if strict_descent_holds(c, s, sp) != DescentOutcome::Strict {
                out.push((s.indices().to_vec(), sp.indices().to_vec()));
            }
        }
    }
    out
}

/// Whether the leading wavefront orbit of the theta representation drops
/// below the regular orbit: `d_bv(regular dual) < regular`.
pub fn theta_nongeneric(c: &CoverParams) -> bool {
    let value = d_bv(c, &regular_dual_orbit(c)).expect("regular dual orbit is valid");
    value != regular_group_orbit(c)
}

/// Closed-form threshold for theta non-genericity, by family and the
/// parity of `n_kappa`. The G2 row is handled by the g2 module's own map;
/// here only its published threshold is recorded.
pub fn theta_nongeneric_threshold(c: &CoverParams) -> bool {
    let r = c.cartan.rank;
    let nk = c.n_kappa;
    match (c.cartan.family, nk % 2) {
        (Family::A, _) => nk <= r,
        (Family::B, 1) => nk <= 2 * r - 1,
        (Family::B, 0) => nk <= 2 * r,
        (Family::C, 1) => nk <= 2 * r - 1,
        (Family::C, 0) => nk / 2 <= 2 * r - 2,
        (Family::D, 1) => nk <= 2 * r - 3,
        (Family::D, 0) => nk <= 2 * r - 4,
        (Family::G2, _) => nk <= 5 || nk == 6 || nk == 9,
        _ => unreachable!(),
    }
}

/// Serializes a subset for reports, e.g. `{1,3,4}`.
pub fn subset_text(indices: &[u32]) -> String {
    let mut s = String::from("{");
    for (k, i) in indices.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{i}"));
    }
    s.push('}');
    s
}

/// Saturated regular dual orbit of the subset's Levi and its image under
/// the duality, for reports.
pub fn orbit_pair(c: &CoverParams, s: &LeviSubset) -> (Partition, Partition) {
    let orbit = levi_regular_dual_orbit(c, &s.blocks());
    let image = d_bv(c, &orbit).expect("valid orbit");
    (orbit, image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_systems::CartanType;

    fn cover(f: Family, r: u32, n: u32) -> CoverParams {
        CoverParams::diamond(CartanType::new(f, r), n)
    }

    #[test]
    fn component_typing() {
        let s = LeviSubset::new(Family::C, 3, vec![1, 3]);
        let comps = s.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&Component { family: Family::A, size: 1 }));
        assert!(comps.contains(&Component { family: Family::C, size: 1 }));
        let s = LeviSubset::new(Family::D, 4, vec![3, 4]);
        assert_eq!(s.components(), vec![Component { family: Family::D, size: 2 }]);
        let s = LeviSubset::new(Family::D, 4, vec![1, 2, 3]);
        assert_eq!(s.components(), vec![Component { family: Family::A, size: 3 }]);
        let s = LeviSubset::full(Family::D, 4);
        assert_eq!(s.components(), vec![Component { family: Family::D, size: 4 }]);
        // fork tips alone are two A1 components
        let s = LeviSubset::new(Family::D, 4, vec![4]);
        assert_eq!(s.components(), vec![Component { family: Family::A, size: 1 }]);
    }

    #[test]
    fn component_exponents() {
        assert_eq!(Component { family: Family::A, size: 2 }.max_exponent(), 2);
        assert_eq!(Component { family: Family::C, size: 3 }.max_exponent(), 5);
        assert_eq!(Component { family: Family::D, size: 2 }.max_exponent(), 1);
        assert_eq!(Component { family: Family::D, size: 3 }.max_exponent(), 3);
    }

    #[test]
    fn autotomy_examples() {
        // n_kappa = 1 is never autotomous: exponents are always >= 1
        let c = cover(Family::C, 3, 1);
        for s in all_subsets(Family::C, 3) {
            assert!(!is_autotomous(&c, &s).autotomous);
        }
        // C3 with n_kappa >= 2: the empty set extends to an A1
        let c = cover(Family::C, 3, 2);
        let empty = LeviSubset::empty(Family::C, 3);
        let v = is_autotomous(&c, &empty);
        assert!(v.autotomous);
        let (_, comp) = v.witness.unwrap();
        assert_eq!(comp.max_exponent(), 1);
    }

    #[test]
    fn property_p_equivalence() {
        // non-autotomous means every component of every extension has
        // max exponent >= n_kappa
        let c = cover(Family::B, 4, 3);
        for s in all_subsets(Family::B, 4) {
            let verdict = is_autotomous(&c, &s);
            let p_holds = s.complement().into_iter().all(|beta| {
                s.with(beta)
                    .components()
                    .into_iter()
                    .all(|comp| c.n_kappa <= comp.max_exponent())
            });
            assert_eq!(!verdict.autotomous, p_holds);
        }
    }

    #[test]
    fn sweep_small_no_violations() {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            for r in 2..=4u32 {
                for nk in 1..=5u32 {
                    let c = cover(f, r, nk);
                    let records = sweep_strict_descent(&c);
                    let violations: Vec<_> =
                        records.iter().filter(|rec| rec.is_violation()).collect();
                    assert!(violations.is_empty(), "{c}: {violations:?}");
                }
            }
        }
    }

    #[test]
    fn table1_small_ranks() {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            for r in 2..=5u32 {
                for nk in 1..=20u32 {
                    let c = cover(f, r, nk);
                    assert_eq!(
                        theta_nongeneric(&c),
                        theta_nongeneric_threshold(&c),
                        "family {f:?} rank {r} nk {nk}"
                    );
                }
            }
        }
    }

    #[test]
    fn full_chain_small() {
        for nk in 1..=4u32 {
            let c = cover(Family::C, 3, nk);
            assert!(full_chain_descent_violations(&c).is_empty());
        }
    }
}
