//! Weyl-group character computations: conjugacy classes, the
//! Murnaghan-Nakayama rule and its signed-cycle extension, hook dimensions,
//! inner products against the permutation module on `X_n`, the affine
//! Springer fiber product formula, and the two sides of the leading
//! coefficient identity for theta representations.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{all_partitions, Partition};
use crate::root_systems::{exponents, weyl_order, CartanType, CoverParams, Family};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharacterError {
    /// An inner product came out non-integral: an implementation bug by
    /// construction, surfaced as a hard error.
    NonIntegral { context: String },
    /// Degenerate D-type bipartition (lambda = mu) rejected.
    DegenerateBipartition { label: String },
    /// The closed coefficient formulas only apply to diamond-type covers.
    NotDiamond { cover: String },
    /// Theorem hypotheses are not met for this cover.
    HypothesisNotMet { cover: String, reason: String },
    /// Enumeration bound exceeded.
    RankBound { rank: u32 },
}

impl fmt::Display for CharacterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterError::NonIntegral { context } => {
                write!(f, "non-integral inner product in {context}")
            }
            CharacterError::DegenerateBipartition { label } => {
                write!(f, "degenerate D bipartition {label}")
            }
            CharacterError::NotDiamond { cover } => {
                write!(f, "{cover} is not a diamond-type cover")
            }
            CharacterError::HypothesisNotMet { cover, reason } => {
                write!(f, "{cover}: {reason}")
            }
            CharacterError::RankBound { rank } => write!(f, "rank {rank} exceeds class bound"),
        }
    }
}

/// Irreducible Weyl group representation label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylIrrep {
    /// Symmetric group `S_k`: a partition of `k`.
    A(Partition),
    /// Hyperoctahedral `W(B_r) = W(C_r)`: an ordered bipartition with
    /// `|lambda| + |mu| = r`; the `mu` side carries the sign twist.
    BC(Partition, Partition),
    /// `W(D_r)`: restriction of the `W(B_r)` irrep, `lambda != mu`.
    D(Partition, Partition),
}

impl fmt::Display for WeylIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylIrrep::A(p) => write!(f, "phi({p})"),
            WeylIrrep::BC(l, m) | WeylIrrep::D(l, m) => write!(f, "phi({l};{m})"),
        }
    }
}

/// One conjugacy class: positive/negative cycle data, class size, sign
/// character value, and the fixed-space dimension on the reflection
/// representation of the ambient rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub pos_cycles: Partition,
    pub neg_cycles: Partition,
    pub size: u64,
    pub sign: i64,
    pub d_w: u32,
}

fn z_factor(p: &Partition) -> u64 {
    // centralizer factor prod i^{m_i} m_i!
    let mut z = 1u64;
    for (v, m) in p.multiplicities() {
        for _ in 0..m {
            z *= v as u64;
        }
        for k in 1..=m as u64 {
            z *= k;
        }
    }
    z
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Complete class list for the Weyl group of `t`; sizes sum to `|W|`.
pub fn conjugacy_classes(t: CartanType) -> Vec<ConjClass> {
    match t.family {
        Family::A => {
            let n = t.rank + 1;
            all_partitions(n)
                .into_iter()
                .map(|rho| {
                    let sign = if (n - rho.len() as u32) % 2 == 0 { 1 } else { -1 };
                    ConjClass {
                        size: factorial(n as u64) / z_factor(&rho),
                        sign,
                        d_w: rho.len() as u32 - 1,
                        pos_cycles: rho,
                        neg_cycles: Partition::empty(),
                    }
                })
                .collect()
        }
        Family::B | Family::C => signed_classes(t.rank, false),
        Family::D => signed_classes(t.rank, true),
        Family::G2 => crate::g2::conjugacy_classes(),
    }
}

/// Signed-permutation classes `(alpha, beta)`; for type D only the classes
/// with an even number of negative cycles are kept. Class sizes stay the
/// hyperoctahedral ones: the classes that split in `W(D_r)` split into
/// halves with equal values of every class function used here, so the two
/// halves never need separating.
fn signed_classes(r: u32, even_negative: bool) -> Vec<ConjClass> {
    let order = weyl_order(CartanType::new(Family::B, r));
    let mut out = Vec::new();
    for k in 0..=r {
        for alpha in all_partitions(k) {
            for beta in all_partitions(r - k) {
                if even_negative && beta.len() % 2 == 1 {
                    continue;
                }
                let z = z_factor(&alpha)
                    * (1u64 << alpha.len())
                    * z_factor(&beta)
                    * (1u64 << beta.len());
                let sign_pos = (alpha.total() - alpha.len() as u32) % 2;
                let sign_neg = beta.total() % 2;
                out.push(ConjClass {
                    size: order / z,
                    sign: if (sign_pos + sign_neg) % 2 == 0 { 1 } else { -1 },
                    d_w: alpha.len() as u32,
                    pos_cycles: alpha.clone(),
                    neg_cycles: beta,
                });
            }
        }
    }
    out
}

/// Beta-set rim hook removal: all ways to strip a hook of length `k`,
/// returning `(smaller partition, height sign)`.
fn rim_hook_removals(p: &Partition, k: u32) -> Vec<(Partition, i64)> {
    if k == 0 {
        return vec![(p.clone(), 1)];
    }
    let l = p.len() as u32;
    // first-column hook lengths: b_i = p_i + (l - 1 - i)
    let betas: Vec<u32> = (0..l).map(|i| p.part(i as usize) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in betas.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if betas.contains(&target) {
            continue;
        }
        // beta numbers strictly between target and b give the height sign
        let crossings = betas.iter().filter(|&&x| x > target && x < b).count();
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = new_betas.len() as u32;
        let parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &bj)| bj - (m - 1 - j as u32))
            .collect();
        let q = Partition::new(parts);
        out.push((q, if crossings % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Murnaghan-Nakayama for the symmetric group.
pub fn mn_symmetric(lambda: &Partition, cycles: &[u32]) -> i64 {
    if cycles.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let k = cycles[0];
    let rest = &cycles[1..];
    let mut total = 0i64;
    for (q, sign) in rim_hook_removals(lambda, k) {
        total += sign * mn_symmetric(&q, rest);
    }
    total
}

/// Murnaghan-Nakayama for the hyperoctahedral group: hooks strip from
/// either component; a negative cycle flips the sign of the `mu`-side
/// contribution.
fn mn_signed(lambda: &Partition, mu: &Partition, pos: &[u32], neg: &[u32]) -> i64 {
    if let Some((&k, rest)) = pos.split_first() {
        let mut total = 0i64;
        for (q, sign) in rim_hook_removals(lambda, k) {
            total += sign * mn_signed(&q, mu, rest, neg);
        }
        for (q, sign) in rim_hook_removals(mu, k) {
            total += sign * mn_signed(lambda, &q, rest, neg);
        }
        return total;
    }
    if let Some((&k, rest)) = neg.split_first() {
        let mut total = 0i64;
        for (q, sign) in rim_hook_removals(lambda, k) {
            total += sign * mn_signed(&q, mu, pos, rest);
        }
        for (q, sign) in rim_hook_removals(mu, k) {
            total -= sign * mn_signed(lambda, &q, pos, rest);
        }
        return total;
    }
    i64::from(lambda.is_empty() && mu.is_empty())
}

/// Character value of an irrep on a class. Type D irreps are restrictions
/// of hyperoctahedral ones (valid for `lambda != mu`), so the value is
/// given by the same rule.
pub fn mn_character(irrep: &WeylIrrep, class: &ConjClass) -> Result<i64, CharacterError> {
    match irrep {
        WeylIrrep::A(p) => Ok(mn_symmetric(p, class.pos_cycles.parts())),
        WeylIrrep::BC(l, m) => {
            Ok(mn_signed(l, m, class.pos_cycles.parts(), class.neg_cycles.parts()))
        }
        WeylIrrep::D(l, m) => {
            if l == m {
                return Err(CharacterError::DegenerateBipartition {
                    label: alloc::format!("phi({l};{m})"),
                });
            }
            Ok(mn_signed(l, m, class.pos_cycles.parts(), class.neg_cycles.parts()))
        }
    }
}

fn hook_product(p: &Partition) -> u64 {
    let t = p.transpose();
    let mut prod = 1u64;
    for (i, &row) in p.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = t.part(j as usize) - i as u32 - 1;
            prod *= (arm + leg + 1) as u64;
        }
    }
    prod
}

/// Dimension via hook products; the D case inherits the hyperoctahedral
/// value (the restriction stays irreducible for `lambda != mu`).
pub fn hook_dimension(irrep: &WeylIrrep) -> Result<u64, CharacterError> {
    match irrep {
        WeylIrrep::A(p) => Ok(factorial(p.total() as u64) / hook_product(p)),
        WeylIrrep::BC(l, m) => {
            let r = (l.total() + m.total()) as u64;
            Ok(factorial(r) / (hook_product(l) * hook_product(m)))
        }
        WeylIrrep::D(l, m) => {
            if l == m {
                return Err(CharacterError::DegenerateBipartition {
                    label: alloc::format!("phi({l};{m})"),
                });
            }
            let r = (l.total() + m.total()) as u64;
            Ok(factorial(r) / (hook_product(l) * hook_product(m)))
        }
    }
}

/// Tensoring with the sign character at the label level.
pub fn tensor_sign(irrep: &WeylIrrep) -> WeylIrrep {
    match irrep {
        WeylIrrep::A(p) => WeylIrrep::A(p.transpose()),
        WeylIrrep::BC(l, m) => WeylIrrep::BC(m.transpose(), l.transpose()),
        WeylIrrep::D(l, m) => WeylIrrep::D(m.transpose(), l.transpose()),
    }
}

/// `n^{d(w)}`: the number of fixed points of the class on `X_n` for a
/// diamond-type cover (validated against direct enumeration at small
/// rank).
pub fn sigma_fixed_points(c: &CoverParams, class: &ConjClass) -> i128 {
    (c.n as i128).pow(class.d_w)
}

/// `<phi, sigma_{X_n}>_W` by the class sum. Only valid where the
/// fixed-point law holds: diamond-type covers; G2 degrees divisible by 2
/// or 3 go through the g2 module instead.
pub fn inner_product_sigma(c: &CoverParams, irrep: &WeylIrrep) -> Result<i128, CharacterError> {
    if !c.is_diamond() {
        return Err(CharacterError::NotDiamond { cover: alloc::format!("{c}") });
    }
    let t = c.cartan;
    if t.rank > 9 {
        return Err(CharacterError::RankBound { rank: t.rank });
    }
    let order = match t.family {
        Family::A => factorial((t.rank + 1) as u64),
        Family::D => weyl_order(CartanType::new(Family::B, t.rank)) / 2,
        _ => weyl_order(t),
    } as i128;
    let mut sum: i128 = 0;
    for class in conjugacy_classes(t) {
        let chi = mn_character(irrep, &class)? as i128;
        sum += class.size as i128 * chi * sigma_fixed_points(c, &class);
    }
    if sum % order != 0 || sum / order < 0 {
        return Err(CharacterError::NonIntegral {
            context: alloc::format!("<{irrep}, sigma> over {c}: {sum}/{order}"),
        });
    }
    Ok(sum / order)
}

/// A Levi subsystem for the product formula: typed components.
pub type LeviComponents = Vec<(Family, u32)>;

/// Parses strings like `A6+A1` or `2A4+C3` into components.
pub fn parse_levi_components(text: &str) -> Option<LeviComponents> {
    let mut out = Vec::new();
    for piece in text.split('+') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (mult, rest) = match piece.find(|ch: char| ch.is_ascii_alphabetic()) {
            Some(0) => (1u32, piece),
            Some(k) => (piece[..k].parse().ok()?, &piece[k..]),
            None => return None,
        };
        let t = CartanType::parse(rest)?;
        for _ in 0..mult {
            out.push((t.family, t.rank));
        }
    }
    Some(out)
}

/// Exponents of a component list.
pub fn component_exponents(components: &LeviComponents) -> Vec<u32> {
    let mut out = Vec::new();
    for &(f, k) in components {
        out.extend(exponents(CartanType::new(f, k)));
    }
    out
}

/// Value of the affine Springer fiber product formula
/// `n^{r - |J|} / |W_J| * prod (n - m_j)`, kept as an exact reduced
/// fraction: outside the diamond range (e.g. even `n` against a `B`
/// component) the quantity is a genuine rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SommersValue {
    pub num: i128,
    /// Positive; `gcd(|num|, den) = 1`.
    pub den: i128,
    /// Set when `n` is not above every exponent, in which case the value
    /// may vanish or go negative.
    pub below_exponents: bool,
}

impl SommersValue {
    fn reduced(mut num: i128, mut den: i128, below_exponents: bool) -> Self {
        fn gcd128(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd128(b, a % b)
            }
        }
        let g = gcd128(num, den).max(1);
        num /= g;
        den /= g;
        if den < 0 {
            num = -num;
            den = -den;
        }
        SommersValue { num, den, below_exponents }
    }

    /// Integral value when the fraction is a whole number.
    pub fn integer(&self) -> Option<i128> {
        (self.den == 1).then_some(self.num)
    }
}

impl fmt::Display for SommersValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The product formula over the exponents of `W_J` inside an ambient of
/// rank `r`.
pub fn sommers_value(r: u32, components: &LeviComponents, n: u32) -> SommersValue {
    let exps = component_exponents(components);
    let j_rank: u32 = exps.len() as u32;
    assert!(j_rank <= r, "|J| exceeds the ambient rank");
    let order: i128 = exps.iter().map(|&m| (m + 1) as i128).product();
    let mut num: i128 = (n as i128).pow(r - j_rank);
    for &m in &exps {
        num *= n as i128 - m as i128;
    }
    SommersValue::reduced(num, order, exps.iter().any(|&m| n <= m))
}

/// The same quantity by the alternating class sum
/// `(1/|W_J|) sum sign(w) n^{d(w)}` with `d` measured in the ambient rank.
pub fn sommers_brute_force(r: u32, components: &LeviComponents, n: u32) -> SommersValue {
    let mut combined: Vec<(u64, i64, u32)> = vec![(1, 1, 0)];
    for &(f, k) in components {
        let t = CartanType::new(f, k);
        let classes = conjugacy_classes(t);
        let mut next = Vec::with_capacity(combined.len() * classes.len());
        for (size, sign, d) in &combined {
            for cl in &classes {
                next.push((size * cl.size, sign * cl.sign, d + cl.d_w));
            }
        }
        combined = next;
    }
    let j_rank: u32 = components.iter().map(|&(_, k)| k).sum();
    let order: i128 = combined.iter().map(|(s, _, _)| *s as i128).sum();
    let mut sum: i128 = 0;
    for (size, sign, d) in combined {
        sum += size as i128 * sign as i128 * (n as i128).pow(d + (r - j_rank));
    }
    let exps = component_exponents(components);
    SommersValue::reduced(sum, order, exps.iter().any(|&m| n <= m))
}

/// Closed form for `<phi(lambda), sigma_{X_n}>` in type A:
/// `n^{-1} prod (n + c(x)) / prod h(x)` over the cells of `lambda`.
pub fn gns_type_a(lambda: &Partition, n: u32) -> Result<i128, CharacterError> {
    let mut num: i128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = j as i128 - i as i128;
            num *= n as i128 + content;
        }
    }
    let den = n as i128 * hook_product(lambda) as i128;
    if num % den != 0 || num / den < 0 {
        return Err(CharacterError::NonIntegral {
            context: alloc::format!("GNS A value for {lambda} at n={n}"),
        });
    }
    Ok(num / den)
}

/// Content-product closed form for `<phi(lambda; mu), sigma_{X_n}>` in
/// types B/C (odd `n`): `(n + 2c + 1)` over lambda cells, `(n + 2c - 1)`
/// over mu cells, divided by `2^r` and the hook products.
pub fn gns_type_bc(lambda: &Partition, mu: &Partition, n: u32) -> Result<i128, CharacterError> {
    let r = lambda.total() + mu.total();
    let mut num: i128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let content = j as i128 - i as i128;
            num *= n as i128 + 2 * content + 1;
        }
    }
    for (i, &row) in mu.parts().iter().enumerate() {
        for j in 0..row {
            let content = j as i128 - i as i128;
            num *= n as i128 + 2 * content - 1;
        }
    }
    let den = (1i128 << r) * hook_product(lambda) as i128 * hook_product(mu) as i128;
    if num % den != 0 || num / den < 0 {
        return Err(CharacterError::NonIntegral {
            context: alloc::format!("GNS BC value for phi({lambda};{mu}) at n={n}"),
        });
    }
    Ok(num / den)
}

/// Which regime a cover falls into for the leading-coefficient identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffCase {
    /// The wavefront orbit is the regular orbit of the whole group.
    Generic,
    /// The standard hypotheses hold with the stated parameters.
    Standard { a: u32, b: u32 },
    /// Type C with `r = 2m`, `n = 2m+1`: the known failure of the identity.
    DeviationC { m: u32 },
    /// Type D with `b != m`: both sides computed, equality fails.
    DeviationD { a: u32, b: u32 },
}

/// The truncated induction of the sign character for the theta exponent,
/// with its wavefront partition, in the cases where the closed labels
/// apply.
pub fn stated_j_irrep(c: &CoverParams) -> Result<(WeylIrrep, Partition), CharacterError> {
    if !c.is_diamond() {
        return Err(CharacterError::NotDiamond { cover: alloc::format!("{c}") });
    }
    let r = c.cartan.rank;
    let n = c.n;
    let fail = |reason: &str| CharacterError::HypothesisNotMet {
        cover: alloc::format!("{c}"),
        reason: String::from(reason),
    };
    match c.cartan.family {
        Family::A => {
            let a = (r + 1) / n;
            let b = (r + 1) % n;
            let mut parts = vec![n; a as usize];
            if b > 0 {
                parts.push(b);
            }
            let label = Partition::new(parts);
            Ok((WeylIrrep::A(label.clone()), label))
        }
        Family::B => {
            let m = (n - 1) / 2;
            let a = r / n;
            let b = r % n;
            if b > m {
                return Err(fail("needs r = na + b with b <= (n-1)/2"));
            }
            let lambda = Partition::new({
                let mut v = vec![m; a as usize];
                if b > 0 {
                    v.push(b);
                }
                v
            });
            let mu = Partition::new(vec![m + 1; a as usize]);
            let mut wf = vec![n; 2 * a as usize];
            wf.push(2 * b + 1);
            Ok((WeylIrrep::BC(lambda, mu), Partition::new(wf)))
        }
        Family::C => {
            let m = (n - 1) / 2;
            let a = r / n;
            let b = r % n;
            if a < 1 {
                return Err(fail("needs r = na + b with a >= 1"));
            }
            if b > m {
                return Err(fail("needs r = na + b with b <= (n-1)/2"));
            }
            let lambda = Partition::new({
                let mut v = vec![m; a as usize];
                if b > 0 {
                    v.push(b);
                }
                v
            });
            let mu = Partition::new(vec![m + 1; a as usize]);
            let mut wf = vec![n; 2 * a as usize];
            if b > 0 {
                wf.push(2 * b);
            }
            Ok((WeylIrrep::BC(lambda, mu), Partition::new(wf)))
        }
        Family::D => {
            let m = (n - 1) / 2;
            let a = (r - 1) / n;
            let b = (r - 1) % n;
            if b > m {
                return Err(fail("needs r - 1 = na + b with b <= (n-1)/2"));
            }
            let lambda = Partition::new({
                let mut v = vec![m + 1; a as usize];
                v.push(b + 1);
                v
            });
            let mu = Partition::new(vec![m; a as usize]);
            if lambda == mu {
                return Err(CharacterError::DegenerateBipartition {
                    label: alloc::format!("phi({lambda};{mu})"),
                });
            }
            let mut wf = vec![n; 2 * a as usize];
            wf.push(2 * b + 1);
            wf.push(1);
            Ok((WeylIrrep::D(lambda, mu), Partition::new(wf)))
        }
        Family::G2 => Err(fail("G2 coefficients go through the g2 module")),
    }
}

/// The Levi whose saturated regular orbit is the theta wavefront, as typed
/// components.
pub fn wavefront_levi(c: &CoverParams) -> Result<LeviComponents, CharacterError> {
    let (_, _) = stated_j_irrep(c)?;
    let r = c.cartan.rank;
    let n = c.n;
    let mut out: LeviComponents = Vec::new();
    let push_a_blocks = |out: &mut LeviComponents, a: u32| {
        for _ in 0..a {
            if n >= 2 {
                out.push((Family::A, n - 1));
            }
        }
    };
    match c.cartan.family {
        Family::A => {
            let a = (r + 1) / n;
            let b = (r + 1) % n;
            push_a_blocks(&mut out, a);
            if b >= 2 {
                out.push((Family::A, b - 1));
            }
        }
        Family::B => {
            let a = r / n;
            let b = r % n;
            push_a_blocks(&mut out, a);
            if b >= 1 {
                out.push((Family::B, b));
            }
        }
        Family::C => {
            let a = r / n;
            let b = r % n;
            push_a_blocks(&mut out, a);
            if b >= 1 {
                out.push((Family::C, b));
            }
        }
        Family::D => {
            let a = (r - 1) / n;
            let b = (r - 1) % n;
            push_a_blocks(&mut out, a);
            match b + 1 {
                1 => {}
                2 => {
                    out.push((Family::A, 1));
                    out.push((Family::A, 1));
                }
                3 => out.push((Family::A, 3)),
                k => out.push((Family::D, k)),
            }
        }
        Family::G2 => unreachable!("filtered by stated_j_irrep"),
    }
    Ok(out)
}

/// Report for the leading-coefficient identity: the Weyl-group inner
/// product side, the product-formula side, and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffReport {
    pub case: CoeffCase,
    pub lhs: i128,
    pub rhs: i128,
    pub equal: bool,
}

/// Computes both sides of the coefficient identity for a classical
/// diamond-type cover. Deviation regimes are reported, not suppressed.
pub fn c_theta(c: &CoverParams) -> Result<CoeffReport, CharacterError> {
    if !c.is_diamond() {
        return Err(CharacterError::NotDiamond { cover: alloc::format!("{c}") });
    }
    let r = c.cartan.rank;
    let n = c.n;
    let integral = |v: SommersValue| -> Result<i128, CharacterError> {
        v.integer().ok_or_else(|| CharacterError::NonIntegral {
            context: alloc::format!("product formula value {v} for {c}"),
        })
    };
    // Known deviation: Sp_{2r} with r = 2m, n = 2m+1.
    if c.cartan.family == Family::C && n == r + 1 && r % 2 == 0 && n % 2 == 1 {
        let m = r / 2;
        let lhs = inner_product_sigma(
            c,
            &WeylIrrep::BC(Partition::column(m), Partition::column(m)),
        )?;
        let rhs = integral(sommers_brute_force(r, &vec![(Family::A, r - 1)], n))?;
        return Ok(CoeffReport { case: CoeffCase::DeviationC { m }, lhs, rhs, equal: lhs == rhs });
    }
    if crate::levi::theta_nongeneric(c) {
        let (j_irrep, _) = stated_j_irrep(c)?;
        let lhs = inner_product_sigma(c, &tensor_sign(&j_irrep))?;
        let levi = wavefront_levi(c)?;
        let product = sommers_value(r, &levi, n);
        let brute = sommers_brute_force(r, &levi, n);
        assert_eq!(product, brute, "product formula disagrees with class sum");
        let rhs = integral(product)?;
        let (a, b) = case_parameters(c);
        let case = if c.cartan.family == Family::D && b != (n - 1) / 2 {
            CoeffCase::DeviationD { a, b }
        } else {
            CoeffCase::Standard { a, b }
        };
        Ok(CoeffReport { case, lhs, rhs, equal: lhs == rhs })
    } else {
        // the wavefront is the regular orbit: both sides are the full-group
        // alternating sum
        let full: LeviComponents = vec![(c.cartan.family, r)];
        let lhs = inner_product_sigma(c, &sign_irrep(c.cartan))?;
        let rhs = integral(sommers_brute_force(r, &full, n))?;
        Ok(CoeffReport { case: CoeffCase::Generic, lhs, rhs, equal: lhs == rhs })
    }
}

fn case_parameters(c: &CoverParams) -> (u32, u32) {
    let r = c.cartan.rank;
    let n = c.n;
    match c.cartan.family {
        Family::A => ((r + 1) / n, (r + 1) % n),
        Family::B | Family::C => (r / n, r % n),
        Family::D => ((r - 1) / n, (r - 1) % n),
        Family::G2 => unreachable!(),
    }
}

/// The sign character as a labelled irrep.
pub fn sign_irrep(t: CartanType) -> WeylIrrep {
    match t.family {
        Family::A => WeylIrrep::A(Partition::column(t.rank + 1)),
        Family::B | Family::C => WeylIrrep::BC(Partition::empty(), Partition::column(t.rank)),
        Family::D => WeylIrrep::D(Partition::empty(), Partition::column(t.rank)),
        Family::G2 => panic!("G2 irreps are named, not labelled"),
    }
}

/// The trivial character as a labelled irrep.
pub fn trivial_irrep(t: CartanType) -> WeylIrrep {
    match t.family {
        Family::A => WeylIrrep::A(Partition::row(t.rank + 1)),
        Family::B | Family::C => WeylIrrep::BC(Partition::row(t.rank), Partition::empty()),
        Family::D => WeylIrrep::D(Partition::row(t.rank), Partition::empty()),
        Family::G2 => panic!("G2 irreps are named, not labelled"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_systems::CartanType;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn cover(f: Family, r: u32, n: u32) -> CoverParams {
        CoverParams::diamond(CartanType::new(f, r), n)
    }

    #[test]
    fn class_counts_and_orders() {
        let a2 = conjugacy_classes(CartanType::new(Family::A, 2));
        assert_eq!(a2.len(), 3);
        assert_eq!(a2.iter().map(|c| c.size).sum::<u64>(), 6);
        let c2 = conjugacy_classes(CartanType::new(Family::C, 2));
        assert_eq!(c2.len(), 5);
        assert_eq!(c2.iter().map(|c| c.size).sum::<u64>(), 8);
        let d3 = conjugacy_classes(CartanType::new(Family::D, 3));
        assert_eq!(d3.iter().map(|c| c.size).sum::<u64>(), 24);
    }

    #[test]
    fn mn_trivial_and_sign() {
        let t = CartanType::new(Family::C, 3);
        for class in conjugacy_classes(t) {
            assert_eq!(mn_character(&trivial_irrep(t), &class).unwrap(), 1);
            assert_eq!(mn_character(&sign_irrep(t), &class).unwrap(), class.sign);
        }
        let t = CartanType::new(Family::A, 3);
        for class in conjugacy_classes(t) {
            assert_eq!(mn_character(&trivial_irrep(t), &class).unwrap(), 1);
            assert_eq!(mn_character(&sign_irrep(t), &class).unwrap(), class.sign);
        }
    }

    #[test]
    fn mn_identity_is_hook_dimension() {
        for r in 2..=5u32 {
            let t = CartanType::new(Family::B, r);
            let id = conjugacy_classes(t)
                .into_iter()
                .find(|c| c.pos_cycles == Partition::column(r))
                .unwrap();
            for k in 0..=r {
                for l in all_partitions(k) {
                    for m in all_partitions(r - k) {
                        let irr = WeylIrrep::BC(l.clone(), m.clone());
                        assert_eq!(
                            mn_character(&irr, &id).unwrap() as u64,
                            hook_dimension(&irr).unwrap()
                        );
                    }
                }
            }
        }
        assert_eq!(hook_dimension(&WeylIrrep::A(p(&[2, 1]))).unwrap(), 2);
    }

    #[test]
    fn character_orthogonality_c3() {
        let t = CartanType::new(Family::C, 3);
        let classes = conjugacy_classes(t);
        let order = weyl_order(t) as i64;
        let mut irreps = Vec::new();
        for k in 0..=3u32 {
            for l in all_partitions(k) {
                for m in all_partitions(3 - k) {
                    irreps.push(WeylIrrep::BC(l.clone(), m));
                }
            }
        }
        assert_eq!(irreps.len(), classes.len());
        for (i, a) in irreps.iter().enumerate() {
            for (j, b) in irreps.iter().enumerate() {
                let mut dot = 0i64;
                for cl in &classes {
                    dot += cl.size as i64
                        * mn_character(a, cl).unwrap()
                        * mn_character(b, cl).unwrap();
                }
                assert_eq!(dot, if i == j { order } else { 0 });
            }
        }
    }

    #[test]
    fn tensor_sign_examples() {
        // the hyperoctahedral identity pinning the bipartition convention:
        // eps (x) phi((m^a,b); (m+1)^a) = phi(a^{m+1}; ((a+1)^b, a^{m-b}))
        let (m, a, b) = (2u32, 1u32, 1u32);
        let lhs = tensor_sign(&WeylIrrep::BC(p(&[m, b]), p(&[m + 1])));
        let expected = WeylIrrep::BC(
            Partition::new(vec![a; (m + 1) as usize]),
            Partition::new({
                let mut v = vec![a + 1; b as usize];
                v.extend(vec![a; (m - b) as usize]);
                v
            }),
        );
        assert_eq!(lhs, expected);
        let t = CartanType::new(Family::C, 4);
        assert_eq!(tensor_sign(&sign_irrep(t)), trivial_irrep(t));
        // type A: phi(n^a b) -> phi((a+1)^b, a^{n-b}) with r+1 = an+b
        assert_eq!(tensor_sign(&WeylIrrep::A(p(&[3, 1]))), WeylIrrep::A(p(&[2, 1, 1])));
    }

    #[test]
    fn inner_products_sl2() {
        let c = cover(Family::A, 1, 3);
        assert_eq!(inner_product_sigma(&c, &sign_irrep(c.cartan)).unwrap(), 1);
        assert_eq!(inner_product_sigma(&c, &trivial_irrep(c.cartan)).unwrap(), 2);
    }

    #[test]
    fn burnside_lower_bound() {
        for (f, r, n) in [(Family::A, 3, 3), (Family::C, 3, 3), (Family::B, 3, 5)] {
            let c = cover(f, r, n);
            let orbits = inner_product_sigma(&c, &trivial_irrep(c.cartan)).unwrap();
            assert!(orbits >= 1);
        }
    }

    #[test]
    fn gns_a_matches_brute_force() {
        for r in 1..=5u32 {
            for n in 2..=6u32 {
                if crate::root_systems::gcd(n, r + 1) != 1 {
                    continue;
                }
                let c = cover(Family::A, r, n);
                for lam in all_partitions(r + 1) {
                    let closed = gns_type_a(&lam, n).unwrap();
                    let brute = inner_product_sigma(&c, &WeylIrrep::A(lam.clone())).unwrap();
                    assert_eq!(closed, brute, "lambda={lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn gns_bc_matches_brute_force() {
        for r in 1..=4u32 {
            for n in [3u32, 5, 7] {
                let c = cover(Family::C, r, n);
                for k in 0..=r {
                    for l in all_partitions(k) {
                        for m in all_partitions(r - k) {
                            let closed = gns_type_bc(&l, &m, n).unwrap();
                            let brute = inner_product_sigma(
                                &c,
                                &WeylIrrep::BC(l.clone(), m.clone()),
                            )
                            .unwrap();
                            assert_eq!(closed, brute, "phi({l};{m}) n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sommers_paper_values() {
        let v = sommers_value(6, &parse_levi_components("A4+A1").unwrap(), 5);
        assert_eq!(v.integer(), Some(2));
        let v = sommers_value(7, &parse_levi_components("A4+A2").unwrap(), 5);
        assert_eq!(v.integer(), Some(2));
        let v = sommers_value(7, &parse_levi_components("A6").unwrap(), 7);
        assert_eq!(v.integer(), Some(1));
        let v = sommers_value(8, &parse_levi_components("A6+A1").unwrap(), 7);
        assert_eq!(v.integer(), Some(3));
    }

    #[test]
    fn sommers_brute_force_agreement() {
        for comps in [
            parse_levi_components("A2+C2").unwrap(),
            parse_levi_components("B3").unwrap(),
            parse_levi_components("2A1+D3").unwrap(),
            Vec::new(),
        ] {
            for n in 1..=7u32 {
                let v = sommers_value(6, &comps, n);
                assert_eq!(v, sommers_brute_force(6, &comps, n), "{comps:?} n={n}");
            }
        }
    }

    #[test]
    fn c_theta_type_a() {
        // A6 at n = 5: r+1 = 7 = 5 + 2, b = 2: (n-1)/b! * ... = 4/2 = 2
        let c = cover(Family::A, 6, 5);
        let rep = c_theta(&c).unwrap();
        assert_eq!(rep.lhs, 2);
        assert_eq!(rep.rhs, 2);
        assert!(rep.equal);
    }

    #[test]
    fn c_theta_type_c_closed_form() {
        // C_r, n = 2m+1, r = an + b: both sides m(m-1)...(m-b+1)/b!
        for (r, n) in [(4u32, 3u32), (7, 5), (8, 7)] {
            let c = cover(Family::C, r, n);
            let rep = c_theta(&c).unwrap();
            let m = (n - 1) / 2;
            let b = r % n;
            let mut expect = 1i128;
            for i in 0..b {
                expect *= (m - i) as i128;
            }
            for i in 1..=b as i128 {
                expect /= i;
            }
            assert_eq!(rep.lhs, expect, "{c}");
            assert_eq!(rep.rhs, expect, "{c}");
            assert!(rep.equal);
        }
    }

    #[test]
    fn c_theta_c_deviation() {
        // r = 2m, n = 2m+1: lhs = m+1, rhs = n
        let c = cover(Family::C, 4, 5);
        let rep = c_theta(&c).unwrap();
        assert_eq!(rep.case, CoeffCase::DeviationC { m: 2 });
        assert_eq!(rep.lhs, 3);
        assert_eq!(rep.rhs, 5);
        assert!(!rep.equal);
    }

    #[test]
    fn c_theta_d_cases() {
        // deviation at n = 3, b = 0: lhs 2 vs rhs 3
        let c = cover(Family::D, 4, 3);
        let rep = c_theta(&c).unwrap();
        assert_eq!(rep.lhs, 2);
        assert_eq!(rep.rhs, 3);
        assert!(!rep.equal);
        assert_eq!(rep.case, CoeffCase::DeviationD { a: 1, b: 0 });
        // equality at b = m: D5 at n = 3 has r - 1 = 4 = 3 + 1, b = 1 = m
        let c = cover(Family::D, 5, 3);
        let rep = c_theta(&c).unwrap();
        assert!(rep.equal, "{rep:?}");
    }
}
