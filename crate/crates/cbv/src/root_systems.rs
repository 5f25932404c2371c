//! Cartan-type bookkeeping: exponents, Weyl orders, the cover invariant
//! `n_kappa`, pseudo-Levi shape enumeration over alcove vertices, and the
//! finite quotient `X_n = Y / Y_{Q,n}` with its Weyl action.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::Class;

/// Simple family tag. `G2` is the one exceptional family in scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
}

impl Family {
    pub fn is_classical(self) -> bool {
        !matches!(self, Family::G2)
    }

    pub fn class(self) -> Class {
        match self {
            Family::A => Class::A,
            Family::B => Class::B,
            Family::C => Class::C,
            Family::D => Class::D,
            Family::G2 => panic!("G2 orbits are not partitions"),
        }
    }
}

/// Cartan type: family plus rank. `G2` has rank fixed at 2; `B`/`C` need
/// rank >= 1 and `D` rank >= 2 (the B1/C1/D2/D3 small-rank conventions are
/// handled where subsystems are built, not here).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: u32,
}

impl CartanType {
    pub fn new(family: Family, rank: u32) -> Self {
        match family {
            Family::A => assert!(rank >= 1, "A_r needs r >= 1"),
            Family::B | Family::C => assert!(rank >= 1, "B_r/C_r need r >= 1"),
            Family::D => assert!(rank >= 2, "D_r needs r >= 2"),
            Family::G2 => assert!(rank == 2, "G2 has rank 2"),
        }
        CartanType { family, rank }
    }

    pub fn parse(text: &str) -> Option<CartanType> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("G2") {
            return Some(CartanType::new(Family::G2, 2));
        }
        let (fam, rank) = text.split_at(1);
        let rank: u32 = rank.parse().ok()?;
        let family = match fam {
            "A" | "a" => Family::A,
            "B" | "b" => Family::B,
            "C" | "c" => Family::C,
            "D" | "d" => Family::D,
            _ => return None,
        };
        if family == Family::D && rank < 2 {
            return None;
        }
        if rank < 1 {
            return None;
        }
        Some(CartanType::new(family, rank))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::G2 => write!(f, "G2"),
        }
    }
}

/// Exponents of the Weyl group, in the standard order.
pub fn exponents(t: CartanType) -> Vec<u32> {
    let r = t.rank;
    match t.family {
        Family::A => (1..=r).collect(),
        Family::B | Family::C => (0..r).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut e: Vec<u32> = (0..r - 1).map(|i| 2 * i + 1).collect();
            e.push(r - 1);
            e.sort_unstable();
            e
        }
        Family::G2 => vec![1, 5],
    }
}

/// `|W| = prod (m_i + 1)` over the exponents.
pub fn weyl_order(t: CartanType) -> u64 {
    exponents(t).iter().map(|&m| (m + 1) as u64).product()
}

pub fn max_exponent(t: CartanType) -> u32 {
    exponents(t).into_iter().max().unwrap_or(0)
}

/// A cover of an almost simple group: Cartan type, degree `n`, and the
/// derived invariant `n_kappa` every duality map depends on.
///
/// With the diamond-type normalization `Q(short coroot) = 1` one has
/// `n_kappa = n`; restriction covers supply `n_kappa` directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoverParams {
    pub cartan: CartanType,
    pub n: u32,
    pub n_kappa: u32,
}

impl CoverParams {
    /// Diamond-type cover: `Q = 1` on short coroots, so `n_kappa = n`.
    pub fn diamond(cartan: CartanType, n: u32) -> Self {
        assert!(n >= 1);
        CoverParams { cartan, n, n_kappa: n }
    }

    /// Cover with explicit `Q(short coroot)`; `n_kappa = n / gcd(n, q)`.
    pub fn with_short_coroot_q(cartan: CartanType, n: u32, q: u32) -> Self {
        assert!(n >= 1 && q >= 1);
        CoverParams { cartan, n, n_kappa: n / gcd(n, q) }
    }

    /// Cover with caller-supplied `n_kappa` (must divide `n`).
    pub fn with_n_kappa(cartan: CartanType, n: u32, n_kappa: u32) -> Self {
        assert!(n_kappa >= 1 && n % n_kappa == 0, "n_kappa must divide n");
        CoverParams { cartan, n, n_kappa }
    }

    /// Whether the cover is in the diamond-type family of Definition 5.1
    /// (the normalization under which the closed coefficient formulas hold).
    pub fn is_diamond(&self) -> bool {
        if self.n_kappa != self.n {
            return false;
        }
        match self.cartan.family {
            Family::A => gcd(self.n, self.cartan.rank + 1) == 1,
            Family::B | Family::C | Family::D => self.n % 2 == 1,
            Family::G2 => true,
        }
    }

    /// Serialized form, e.g. `C3@n=3` with an `@nk=2` override when
    /// `n_kappa != n`.
    pub fn parse(text: &str) -> Option<CoverParams> {
        let mut pieces = text.split('@');
        let cartan = CartanType::parse(pieces.next()?)?;
        let mut n = None;
        let mut nk = None;
        for piece in pieces {
            if let Some(v) = piece.strip_prefix("n=") {
                n = Some(v.parse().ok()?);
            } else if let Some(v) = piece.strip_prefix("nk=") {
                nk = Some(v.parse().ok()?);
            } else {
                return None;
            }
        }
        let n = n?;
        if n < 1 {
            return None;
        }
        match nk {
            None => Some(CoverParams::diamond(cartan, n)),
            Some(nk) if nk >= 1 && n % nk == 0 => Some(CoverParams::with_n_kappa(cartan, n, nk)),
            Some(_) => None,
        }
    }
}

impl fmt::Display for CoverParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@n={}", self.cartan, self.n)?;
        if self.n_kappa != self.n {
            write!(f, "@nk={}", self.n_kappa)?;
        }
        Ok(())
    }
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Family of the dual group. A and D are self-dual; B/C swap exactly when
/// `n_kappa` is odd.
pub fn dual_group_family(c: &CoverParams) -> Family {
    match c.cartan.family {
        Family::A => Family::A,
        Family::D => Family::D,
        Family::B => {
            if c.n_kappa % 2 == 1 {
                Family::C
            } else {
                Family::B
            }
        }
        Family::C => {
            if c.n_kappa % 2 == 1 {
                Family::B
            } else {
                Family::C
            }
        }
        Family::G2 => Family::G2,
    }
}

/// One irreducible factor of the reductive quotient at an alcove vertex.
///
/// For B-ambient the splits are `D_m + B_{r-m}`, for C-ambient
/// `C_m + C_{r-m}`, for D-ambient `D_m + D_{r-m}`; type A is always the full
/// `A_r`. Rank 0 factors are dropped, and small-rank D factors are kept with
/// their D labelling (`D_1` is a torus factor and is dropped here; it
/// reappears as an empty head slot in pseudo-Levi shapes).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexFactor {
    pub family: Family,
    pub rank: u32,
}

/// The multiset of vertex splits `Phi_x`, one entry per alcove vertex shape.
pub fn enumerate_vertex_splits(c: &CoverParams) -> Vec<Vec<VertexFactor>> {
    let r = c.cartan.rank;
    let fac = |family: Family, rank: u32| VertexFactor { family, rank };
    let mut out: Vec<Vec<VertexFactor>> = Vec::new();
    match c.cartan.family {
        Family::A => out.push(vec![fac(Family::A, r)]),
        Family::B => {
            // D_m + B_{r-m}; D_0 and D_1 are degenerate (torus) and dropped.
            for m in 0..=r {
                let mut split = Vec::new();
                if m >= 2 {
                    split.push(fac(Family::D, m));
                }
                if r - m >= 1 {
                    split.push(fac(Family::B, r - m));
                }
                if m == 1 {
                    // D_1 is a torus: the vertex exists but the factor is
                    // only the B part.
                    if !out.contains(&split) {
                        out.push(split);
                    }
                    continue;
                }
                if !out.contains(&split) {
                    out.push(split);
                }
            }
        }
        Family::C => {
            for m in 0..=r / 2 {
                let mut split = Vec::new();
                if m >= 1 {
                    split.push(fac(Family::C, m));
                }
                if r - m >= 1 {
                    split.push(fac(Family::C, r - m));
                }
                if !out.contains(&split) {
                    out.push(split);
                }
            }
        }
        Family::D => {
            for m in 0..=r / 2 {
                let mut split = Vec::new();
                if m >= 2 {
                    split.push(fac(Family::D, m));
                }
                if r - m >= 2 {
                    split.push(fac(Family::D, r - m));
                }
                if !out.contains(&split) {
                    out.push(split);
                }
            }
        }
        Family::G2 => panic!("G2 vertex data lives in the g2 module"),
    }
    out
}

/// Shape of one pseudo-Levi subsystem inside a single vertex factor, at the
/// level the truncated-induction formulas consume: an optional head slot, a
/// multiset of A-block sizes, and an optional tail slot.
///
/// Slot semantics per factor family:
/// - `A`: no head/tail, A-blocks of sizes `r_i >= 1` summing to `rank + 1`,
///   at most `n_kappa` of them.
/// - `B` factor: tail is the structural B slot (always present, rank >= 0,
///   carrying partitions of `2k+1`); for even `n_kappa` an optional B head
///   of rank >= 1.
/// - `C` factor: tail C slot of rank >= 0 (rank 0 carries nothing); for even
///   `n_kappa` an optional D head of rank >= 1 (`D_1` allowed: it is an
///   empty root system but a real slot carrying the `SO_2` orbit `(1,1)`).
/// - `D` factor: two optional D slots of rank >= 1 (`D_1` allowed).
///
/// Each A-block counts 2 towards the removal budget, each present non-A slot
/// counts 1, except the rank-0 B tail and rank-0 C tail which count 1 and 0
/// respectively (the B slot is structural: the odd orthogonal form always
/// leaves a fixed vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PseudoLevi {
    pub factor: VertexFactor,
    /// Head slot: for C factors a D-block rank, for B factors a B-block
    /// rank, for D factors a D-block rank.
    pub head: Option<u32>,
    /// A-block sizes (each `>= 1`), decreasing.
    pub a_blocks: Vec<u32>,
    /// Tail slot rank; `None` means absent. For B factors the tail is always
    /// `Some(k)` with `k >= 0`.
    pub tail: Option<u32>,
}

impl PseudoLevi {
    /// Budget actually consumed: head + sum of A-blocks + tail must equal
    /// the factor rank.
    pub fn budget(&self) -> u32 {
        self.head.unwrap_or(0) + self.a_blocks.iter().sum::<u32>() + self.tail.unwrap_or(0)
    }

    /// Removal count checked against the per-factor bound.
    pub fn removal_count(&self) -> u32 {
        let mut c = 2 * self.a_blocks.len() as u32;
        if self.head.is_some() {
            c += 1;
        }
        match self.factor.family {
            Family::B => {
                // structural tail slot
                c += 1;
            }
            _ => {
                if let Some(t) = self.tail {
                    if t >= 1 {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    /// Irreducible components as (family, rank) pairs, degenerate ranks
    /// dropped, with the D2 = A1+A1 and D3 = A3 conventions applied.
    pub fn components(&self) -> Vec<(Family, u32)> {
        let mut out = Vec::new();
        let push_d = |out: &mut Vec<(Family, u32)>, d: u32| match d {
            0 | 1 => {}
            2 => {
                out.push((Family::A, 1));
                out.push((Family::A, 1));
            }
            3 => out.push((Family::A, 3)),
            _ => out.push((Family::D, d)),
        };
        match self.factor.family {
            Family::A => {}
            Family::B => {
                if let Some(h) = self.head {
                    if h >= 1 {
                        out.push((Family::B, h));
                    }
                }
            }
            Family::C => {
                if let Some(h) = self.head {
                    push_d(&mut out, h);
                }
            }
            Family::D => {
                if let Some(h) = self.head {
                    push_d(&mut out, h);
                }
            }
            Family::G2 => unreachable!(),
        }
        for &a in &self.a_blocks {
            if a >= 2 {
                out.push((Family::A, a - 1));
            }
        }
        if let Some(t) = self.tail {
            match self.factor.family {
                Family::B => {
                    if t >= 1 {
                        out.push((Family::B, t));
                    }
                }
                Family::C => {
                    if t >= 1 {
                        out.push((Family::C, t));
                    }
                }
                Family::D => push_d(&mut out, t),
                _ => {}
            }
        }
        out.sort();
        out
    }
}

fn compositions_as_multisets(total: u32, max_blocks: u32) -> Vec<Vec<u32>> {
    // decreasing part lists with at most max_blocks parts summing to total
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, blocks_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        if blocks_left == 0 {
            return;
        }
        let top = remaining.min(max);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(remaining - p, p, blocks_left - 1, cur, out);
            cur.pop();
        }
    }
    rec(total, total, max_blocks, &mut cur, &mut out);
    out
}

/// All pseudo-Levi shapes inside one vertex factor, for the given cover.
pub fn enumerate_pseudo_levis(c: &CoverParams, factor: VertexFactor) -> Vec<PseudoLevi> {
    let nk = c.n_kappa;
    let m = factor.rank;
    let mut out = Vec::new();
    match factor.family {
        Family::A => {
            for blocks in compositions_as_multisets(m + 1, nk) {
                out.push(PseudoLevi { factor, head: None, a_blocks: blocks, tail: None });
            }
        }
        Family::B => {
            // tail structural; head only for even n_kappa
            let heads: Vec<Option<u32>> = if nk % 2 == 0 {
                core::iter::once(None).chain((1..=m).map(Some)).collect()
            } else {
                vec![None]
            };
            for head in heads {
                let h = head.unwrap_or(0);
                let slots = 1 + u32::from(head.is_some());
                if nk < slots {
                    continue;
                }
                let max_a = (nk - slots) / 2;
                for tail in 0..=(m - h) {
                    let a_total = m - h - tail;
                    for blocks in compositions_as_multisets(a_total, max_a) {
                        out.push(PseudoLevi {
                            factor,
                            head,
                            a_blocks: blocks,
                            tail: Some(tail),
                        });
                    }
                }
            }
        }
        Family::C => {
            let bound = if nk % 2 == 0 { nk / 2 } else { nk };
            let heads: Vec<Option<u32>> = if nk % 2 == 0 {
                core::iter::once(None).chain((1..=m).map(Some)).collect()
            } else {
                vec![None]
            };
            for head in heads {
                let h = head.unwrap_or(0);
                for tail in 0..=(m - h) {
                    let slot_count = u32::from(head.is_some()) + u32::from(tail >= 1);
                    if slot_count > bound {
                        continue;
                    }
                    let a_total = m - h - tail;
                    let max_a = (bound - slot_count) / 2;
                    for blocks in compositions_as_multisets(a_total, max_a) {
                        out.push(PseudoLevi {
                            factor,
                            head,
                            a_blocks: blocks,
                            tail: if tail >= 1 { Some(tail) } else { None },
                        });
                    }
                }
            }
        }
        Family::D => {
            for head_rank in 0..=m {
                let head = if head_rank >= 1 { Some(head_rank) } else { None };
                for tail_rank in 0..=(m - head_rank) {
                    let tail = if tail_rank >= 1 { Some(tail_rank) } else { None };
                    // avoid double counting (head, tail) vs (tail, head)
                    if head_rank < tail_rank {
                        continue;
                    }
                    let slot_count = u32::from(head.is_some()) + u32::from(tail.is_some());
                    if slot_count > nk {
                        continue;
                    }
                    let a_total = m - head_rank - tail_rank;
                    let max_a = (nk - slot_count) / 2;
                    for blocks in compositions_as_multisets(a_total, max_a) {
                        out.push(PseudoLevi { factor, head, a_blocks: blocks, tail });
                    }
                }
            }
        }
        Family::G2 => panic!("G2 pseudo-Levis live in the g2 module"),
    }
    out
}

/// Generalized Cartan matrix, `cartan[i][j] = <alpha_j, alpha_i^vee>`,
/// Bourbaki numbering (0-indexed internally).
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let r = t.rank as usize;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    match t.family {
        Family::A => {
            for i in 1..r {
                c[i - 1][i] = -1;
                c[i][i - 1] = -1;
            }
        }
        Family::B => {
            // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
            for i in 1..r {
                c[i - 1][i] = -1;
                c[i][i - 1] = -1;
            }
            if r >= 2 {
                c[r - 1][r - 2] = -2;
                c[r - 2][r - 1] = -1;
            }
        }
        Family::C => {
            // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
            for i in 1..r {
                c[i - 1][i] = -1;
                c[i][i - 1] = -1;
            }
            if r >= 2 {
                c[r - 2][r - 1] = -2;
                c[r - 1][r - 2] = -1;
            }
        }
        Family::D => {
            for i in 1..r - 1 {
                c[i - 1][i] = -1;
                c[i][i - 1] = -1;
            }
            c[r - 3][r - 1] = -1;
            c[r - 1][r - 3] = -1;
        }
        Family::G2 => {
            // alpha_1 short, alpha_2 long
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    c
}

/// `Q` on the simple coroots under the diamond normalization
/// `Q(short coroot) = 1`. Short coroots belong to long roots.
pub fn diamond_q_values(t: CartanType) -> Vec<i64> {
    let r = t.rank as usize;
    match t.family {
        Family::A | Family::D => vec![1; r],
        Family::B => {
            // alpha_r is the short root, its coroot is long: Q = 2
            let mut q = vec![1; r];
            q[r - 1] = 2;
            q
        }
        Family::C => {
            // alpha_r is the long root, its coroot short: Q = 1, others 2
            let mut q = vec![2; r];
            q[r - 1] = 1;
            q
        }
        Family::G2 => vec![3, 1],
    }
}

/// Gram matrix `B_Q(alpha_i^vee, alpha_j^vee)` built from `Q` on simple
/// coroots via `B_Q(alpha^vee, y) = Q(alpha^vee) <alpha, y>`.
pub fn gram_matrix(t: CartanType, q: &[i64]) -> Vec<Vec<i64>> {
    let cm = cartan_matrix(t);
    let r = t.rank as usize;
    let mut b = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            // <alpha_i, alpha_j^vee> = cm[j][i]
            b[i][j] = q[i] * cm[j][i];
        }
    }
    for i in 0..r {
        for j in 0..r {
            assert_eq!(b[i][j], b[j][i], "B_Q must be symmetric");
        }
    }
    b
}

/// Matrix of the simple reflection `s_i` on the coroot lattice basis,
/// column-major action: `(M v)_k = sum_j M[k][j] v_j`.
pub fn simple_reflection_matrix(t: CartanType, i: usize) -> Vec<Vec<i64>> {
    let cm = cartan_matrix(t);
    let r = t.rank as usize;
    let mut m = vec![vec![0i64; r]; r];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = 1;
    }
    for j in 0..r {
        // s_i(alpha_j^vee) = alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee
        m[i][j] -= cm[j][i];
    }
    m
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// All Weyl group elements as matrices on the coroot basis, by closure under
/// the simple reflections. Only call for small groups.
pub fn weyl_elements(t: CartanType) -> Vec<Vec<Vec<i64>>> {
    let r = t.rank as usize;
    let gens: Vec<_> = (0..r).map(|i| simple_reflection_matrix(t, i)).collect();
    let mut seen: Vec<Vec<Vec<i64>>> = vec![identity_matrix(r)];
    let mut queue: Vec<usize> = vec![0];
    while let Some(idx) = queue.pop() {
        let cur = seen[idx].clone();
        for g in &gens {
            let next = mat_mul(g, &cur);
            if !seen.contains(&next) {
                seen.push(next);
                queue.push(seen.len() - 1);
            }
        }
    }
    seen
}

/// Rank over the rationals of an integer matrix (fraction-free elimination).
pub fn matrix_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i128>> =
        m.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&i| a[i][col] != 0);
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for i in 0..rows {
            if i != rank && a[i][col] != 0 {
                let (num, den) = (a[i][col], a[rank][col]);
                for j in 0..cols {
                    a[i][j] = a[i][j] * den - a[rank][j] * num;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// `d(w) = dim ker(w - 1)` on the reflection representation.
pub fn fixed_space_dim(w: &[Vec<i64>]) -> usize {
    let n = w.len();
    let mut m = w.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= 1;
    }
    n - matrix_rank(&m)
}

/// The finite quotient `X_n = Y / Y_{Q,n}` where
/// `Y_{Q,n} = { y : B_Q(y, z) in nZ for all z }`, together with the data
/// needed to let Weyl elements act on it.
///
/// Elements are stored in a unimodularly transformed basis in which
/// `Y_{Q,n}` is diagonal: coordinates `z_i` taken modulo the invariant
/// factor `e_i`.
#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    pub gram: Vec<Vec<i64>>,
    pub n: u32,
    /// Invariant factors `e_i` (each divides n); the group is the direct sum
    /// of `Z/e_i`.
    pub invariant_factors: Vec<u32>,
    /// Unimodular basis change: `y = to_y z`, `z = to_z y`, in which
    /// `Y_{Q,n}` is the diagonal lattice `e_i Z`.
    to_y: Vec<Vec<i64>>,
    to_z: Vec<Vec<i64>>,
}

impl LatticeQuotient {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().map(|&e| e as u64).product()
    }

    pub fn elements(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = vec![Vec::new()];
        for &e in &self.invariant_factors {
            let mut next = Vec::with_capacity(out.len() * e as usize);
            for base in &out {
                for v in 0..e {
                    let mut x = base.clone();
                    x.push(v);
                    next.push(x);
                }
            }
            out = next;
        }
        out
    }

    /// Coset representatives in the original coroot-basis coordinates.
    pub fn representatives(&self) -> Vec<Vec<i64>> {
        let r = self.invariant_factors.len();
        self.elements()
            .into_iter()
            .map(|z| {
                let mut y = vec![0i64; r];
                for i in 0..r {
                    for j in 0..r {
                        y[i] += self.to_y[i][j] * z[j] as i64;
                    }
                }
                y
            })
            .collect()
    }

    /// Image of a quotient element under a Weyl matrix `w` (acting on the
    /// coroot basis).
    pub fn act(&self, w: &[Vec<i64>], x: &[u32]) -> Vec<u32> {
        // z-coords -> y-coords -> w -> z-coords, reducing mod e_i.
        let r = self.invariant_factors.len();
        let mut y = vec![0i64; r];
        for i in 0..r {
            for j in 0..r {
                y[i] += self.to_y[i][j] * x[j] as i64;
            }
        }
        let mut wy = vec![0i64; r];
        for i in 0..r {
            for j in 0..r {
                wy[i] += w[i][j] * y[j];
            }
        }
        let mut z = vec![0u32; r];
        for i in 0..r {
            let mut acc = 0i64;
            for j in 0..r {
                acc += self.to_z[i][j] * wy[j];
            }
            let e = self.invariant_factors[i] as i64;
            if e == 1 {
                z[i] = 0;
            } else {
                z[i] = acc.rem_euclid(e) as u32;
            }
        }
        z
    }

    pub fn count_fixed_points(&self, w: &[Vec<i64>]) -> u64 {
        self.elements()
            .into_iter()
            .filter(|x| self.act(w, x) == *x)
            .count() as u64
    }
}

/// Smith normal form of a square integer matrix: returns `(u, d, v)` with
/// `u * m * v = d` diagonal and `u`, `v` unimodular.
pub fn smith_normal_form(m: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = m.len();
    let mut d: Vec<Vec<i128>> =
        m.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut v = u.clone();

    fn swap_rows(a: &mut [Vec<i128>], i: usize, j: usize) {
        a.swap(i, j);
    }
    fn swap_cols(a: &mut [Vec<i128>], i: usize, j: usize) {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
    fn add_row(a: &mut [Vec<i128>], dst: usize, src: usize, c: i128) {
        let n = a[0].len();
        for k in 0..n {
            let x = a[src][k];
            a[dst][k] += c * x;
        }
    }
    fn add_col(a: &mut [Vec<i128>], dst: usize, src: usize, c: i128) {
        for row in a.iter_mut() {
            let x = row[src];
            row[dst] += c * x;
        }
    }

    for k in 0..n {
        loop {
            // find minimal nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if d[i][j] != 0
                        && best.map_or(true, |(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            swap_rows(&mut d, k, bi);
            swap_rows(&mut u, k, bi);
            swap_cols(&mut d, k, bj);
            swap_cols(&mut v, k, bj);
            let pivot = d[k][k];
            let mut clean = true;
            for i in k + 1..n {
                if d[i][k] != 0 {
                    let q = d[i][k].div_euclid(pivot);
                    add_row(&mut d, i, k, -q);
                    add_row(&mut u, i, k, -q);
                    if d[i][k] != 0 {
                        clean = false;
                    }
                }
            }
            for j in k + 1..n {
                if d[k][j] != 0 {
                    let q = d[k][j].div_euclid(pivot);
                    add_col(&mut d, j, k, -q);
                    add_col(&mut v, j, k, -q);
                    if d[k][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility correction
            let mut fixed = true;
            'outer: for i in k + 1..n {
                for j in k + 1..n {
                    if d[i][j] % pivot != 0 {
                        add_row(&mut d, k, i, 1);
                        add_row(&mut u, k, i, 1);
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                if d[k][k] < 0 {
                    for j in 0..n {
                        d[k][j] = -d[k][j];
                        u[k][j] = -u[k][j];
                    }
                }
                break;
            }
        }
    }
    let back = |a: Vec<Vec<i128>>| -> Vec<Vec<i64>> {
        a.into_iter()
            .map(|row| row.into_iter().map(|x| i64::try_from(x).expect("snf overflow")).collect())
            .collect()
    };
    (back(u), back(d), back(v))
}

/// Computes `X_n = Y / Y_{Q,n}` for the cover, in the simply-connected
/// coroot-lattice model with the diamond normalization of `Q`.
pub fn quotient_xn(c: &CoverParams) -> LatticeQuotient {
    let t = c.cartan;
    let q = diamond_q_values(t);
    let gram = gram_matrix(t, &q);
    quotient_from_gram(gram, c.n)
}

/// Same computation from an explicit Gram matrix.
pub fn quotient_from_gram(gram: Vec<Vec<i64>>, n: u32) -> LatticeQuotient {
    let r = gram.len();
    // Y_{Q,n} = { y : B y = 0 mod n }. With B = U^-1 D V^-1 ... use SNF of B:
    // U B V = D, then B y = n t has solutions with (V^-1 y)_i multiples of
    // n / gcd(n, d_i): invariant factors e_i = n / gcd(n, d_i).
    let (_, d, v) = smith_normal_form(&gram);
    // B = U^-1 D V^-1, y = V z: B y in nZ^r <=> D z in nZ^r (U unimodular)
    let mut invariant_factors = Vec::with_capacity(r);
    for i in 0..r {
        let di = d[i][i].unsigned_abs() as u32;
        let e = if di == 0 { n } else { n / gcd(n, di) };
        invariant_factors.push(e);
    }
    // SNF gives y = V z, so z = V^{-1} y; V is unimodular.
    let to_y = v;
    let to_z = invert_unimodular(&to_y);
    LatticeQuotient { gram, n, invariant_factors, to_y, to_z }
}

/// Exact inverse of a unimodular integer matrix via adjugate.
pub fn invert_unimodular(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let det = determinant(m);
    assert!(det == 1 || det == -1, "matrix is not unimodular");
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor = minor_det(m, j, i);
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = sign * minor * det; // det = +-1, dividing = multiplying
        }
    }
    inv
}

pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut det = 0i64;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * m[0][j] * minor_det(m, 0, j);
    }
    det
}

fn minor_det(m: &[Vec<i64>], row: usize, col: usize) -> i64 {
    let n = m.len();
    let sub: Vec<Vec<i64>> = (0..n)
        .filter(|&i| i != row)
        .map(|i| (0..n).filter(|&j| j != col).map(|j| m[i][j]).collect())
        .collect();
    determinant(&sub)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_tables() {
        assert_eq!(exponents(CartanType::new(Family::A, 4)), vec![1, 2, 3, 4]);
        assert_eq!(exponents(CartanType::new(Family::D, 4)), vec![1, 3, 3, 5]);
        assert_eq!(exponents(CartanType::new(Family::G2, 2)), vec![1, 5]);
        assert_eq!(weyl_order(CartanType::new(Family::A, 2)), 6);
        assert_eq!(weyl_order(CartanType::new(Family::C, 3)), 48);
        assert_eq!(weyl_order(CartanType::new(Family::G2, 2)), 12);
    }

    #[test]
    fn dual_families() {
        let b3 = CartanType::new(Family::B, 3);
        assert_eq!(dual_group_family(&CoverParams::diamond(b3, 3)), Family::C);
        let c3 = CartanType::new(Family::C, 3);
        assert_eq!(
            dual_group_family(&CoverParams::with_n_kappa(c3, 4, 4)),
            Family::C
        );
        let a2 = CartanType::new(Family::A, 2);
        assert_eq!(dual_group_family(&CoverParams::diamond(a2, 5)), Family::A);
    }

    #[test]
    fn vertex_splits() {
        let c = CoverParams::diamond(CartanType::new(Family::B, 3), 3);
        let splits = enumerate_vertex_splits(&c);
        // m = 0 (B3), m = 1 (torus + B2), m = 2 (D2 + B1), m = 3 (D3)
        assert!(splits.contains(&vec![VertexFactor { family: Family::B, rank: 3 }]));
        assert!(splits.contains(&vec![
            VertexFactor { family: Family::D, rank: 2 },
            VertexFactor { family: Family::B, rank: 1 }
        ]));
        assert!(splits.contains(&vec![VertexFactor { family: Family::D, rank: 3 }]));
        let a5 = CoverParams::diamond(CartanType::new(Family::A, 5), 2);
        assert_eq!(enumerate_vertex_splits(&a5).len(), 1);
        let c2 = CoverParams::diamond(CartanType::new(Family::C, 2), 3);
        let splits = enumerate_vertex_splits(&c2);
        assert_eq!(splits.len(), 2); // C2 and C1+C1
    }

    #[test]
    fn pseudo_levi_shapes_type_a() {
        let c = CoverParams::diamond(CartanType::new(Family::A, 3), 2);
        let shapes = enumerate_pseudo_levis(&c, VertexFactor { family: Family::A, rank: 3 });
        // compositions of 4 into at most 2 parts as multisets: (4),(3,1),(2,2)
        assert_eq!(shapes.len(), 3);
    }

    #[test]
    fn pseudo_levi_count_bound() {
        let c = CoverParams::diamond(CartanType::new(Family::C, 2), 1);
        let shapes = enumerate_pseudo_levis(&c, VertexFactor { family: Family::C, rank: 2 });
        // n_kappa = 1 forces a single non-A component: the full C2 tail
        assert_eq!(shapes.len(), 1);
        assert_eq!(shapes[0].tail, Some(2));
        assert!(shapes[0].a_blocks.is_empty());
    }

    #[test]
    fn gram_matrices() {
        let a2 = CartanType::new(Family::A, 2);
        assert_eq!(gram_matrix(a2, &[1, 1]), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = CartanType::new(Family::G2, 2);
        let b = gram_matrix(g2, &diamond_q_values(g2));
        assert_eq!(b[0][0], 6);
        assert_eq!(b[1][1], 2);
        assert_eq!(b[0][1], -3);
        // W-invariance under both simple reflections
        for i in 0..2 {
            let w = simple_reflection_matrix(g2, i);
            let mut wt = vec![vec![0i64; 2]; 2];
            for a in 0..2 {
                for c2 in 0..2 {
                    wt[a][c2] = w[c2][a];
                }
            }
            let prod = mat_mul(&wt, &mat_mul(&b, &w));
            assert_eq!(prod, b);
        }
    }

    #[test]
    fn quotient_sl2() {
        let c = CoverParams::diamond(CartanType::new(Family::A, 1), 3);
        let q = quotient_xn(&c);
        assert_eq!(q.order(), 3);
        // negation on Z/3 fixes only 0
        let t = CartanType::new(Family::A, 1);
        let w = simple_reflection_matrix(t, 0);
        assert_eq!(q.count_fixed_points(&w), 1);
        assert_eq!(q.count_fixed_points(&identity_matrix(1)), 3);
    }

    #[test]
    fn quotient_trivial_for_n1() {
        for t in [
            CartanType::new(Family::A, 3),
            CartanType::new(Family::B, 2),
            CartanType::new(Family::G2, 2),
        ] {
            let c = CoverParams::diamond(t, 1);
            assert_eq!(quotient_xn(&c).order(), 1);
        }
    }

    #[test]
    fn quotient_g2() {
        // G2 at n=3: Y_{Q,3} = {y2 = 0 mod 3}, order 3 (not 9)
        let c = CoverParams::diamond(CartanType::new(Family::G2, 2), 3);
        assert_eq!(quotient_xn(&c).order(), 3);
        // at n=5 the form is invertible mod 5: order 25
        let c5 = CoverParams::diamond(CartanType::new(Family::G2, 2), 5);
        assert_eq!(quotient_xn(&c5).order(), 25);
    }

    #[test]
    fn snf_example() {
        let m = vec![vec![2, 4], vec![6, 8]];
        let (u, d, v) = smith_normal_form(&m);
        assert_eq!(d[0][1], 0);
        assert_eq!(d[1][0], 0);
        assert_eq!(d[0][0].abs(), 2);
        assert_eq!((d[0][0] * d[1][1]).abs(), 8); // |det| preserved
        let prod = mat_mul(&mat_mul(&u, &m), &v);
        assert_eq!(prod, d);
    }

    #[test]
    fn parse_cover_strings() {
        let c = CoverParams::parse("C3@n=3").unwrap();
        assert_eq!(c.cartan, CartanType::new(Family::C, 3));
        assert_eq!(c.n_kappa, 3);
        let c = CoverParams::parse("B4@n=6@nk=3").unwrap();
        assert_eq!(c.n_kappa, 3);
        assert!(CoverParams::parse("B4@n=6@nk=4").is_none());
        assert!(CoverParams::parse("X3@n=1").is_none());
    }
}
