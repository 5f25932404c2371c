//! Exact arithmetic on integer partitions.
//!
//! Partitions are the currency for nilpotent orbits of classical groups:
//! orbits of `GL_n` are partitions of `n`, orbits of `SO_{2r+1}` / `Sp_{2r}` /
//! `SO_{2r}` are the B/C/D-class partitions of `2r+1` / `2r` / `2r`. Everything
//! here is pure and allocation-only.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Label distinguishing the two `SO_{2r}`-orbits attached to a very even
/// partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    I,
    II,
}

impl Label {
    pub fn flipped(self) -> Label {
        match self {
            Label::I => Label::II,
            Label::II => Label::I,
        }
    }
}

/// Partition class: which parity/multiplicity constraint the parts satisfy.
///
/// `A` is unconstrained. `B` asks for odd total with even parts occurring an
/// even number of times, `C` for odd parts occurring an even number of times,
/// `D` for even total with even parts occurring an even number of times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// `dominates` on partitions of different totals.
    TotalMismatch { left: u32, right: u32 },
    /// No partition of this total exists in the requested class.
    NoSuchClass { total: u32, class: Class },
    /// `minus_op` on the empty partition.
    MinusOnEmpty,
    /// Text that does not parse as a canonical partition.
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::TotalMismatch { left, right } => {
                write!(f, "dominance needs equal totals, got {left} and {right}")
            }
            PartitionError::NoSuchClass { total, class } => {
                write!(f, "no {class:?}-partition of {total} exists")
            }
            PartitionError::MinusOnEmpty => write!(f, "minus operation on empty partition"),
            PartitionError::Parse(s) => write!(f, "cannot parse partition from {s:?}"),
        }
    }
}

/// A weakly decreasing sequence of positive integers, with an optional
/// very-even label.
///
/// The empty sequence is the partition of 0. The label is metadata: every
/// purely partition-level operation ignores it, only the duality maps read
/// and write it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    label: Option<Label>,
}

impl Partition {
    /// Builds a partition from arbitrary part data: zeros are dropped and the
    /// rest is sorted decreasingly.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, label: None }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), label: None }
    }

    /// Single row `(n)`; `n = 0` gives the empty partition.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n], label: None }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize], label: None }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn with_label(mut self, label: Option<Label>) -> Self {
        self.label = label;
        self
    }

    /// Same parts, no label.
    pub fn unlabeled(&self) -> Partition {
        Partition { parts: self.parts.clone(), label: None }
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i`, with 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate Young diagram (column lengths).
    pub fn transpose(&self) -> Partition {
        let mut cols = Vec::new();
        if let Some(&first) = self.parts.first() {
            cols.reserve(first as usize);
            for j in 0..first {
                cols.push(self.parts.iter().take_while(|&&p| p > j).count() as u32);
            }
        }
        Partition { parts: cols, label: None }
    }

    /// Componentwise sum after zero padding; this is induction of orbits.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts, label: None }
    }

    /// Multiset union of parts, re-sorted decreasingly.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts, label: None }
    }

    /// Dominance: every prefix sum of `self` is at least the matching prefix
    /// sum of `other`. Models Zariski closure of nilpotent orbits; only
    /// defined between partitions of the same total.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.total() != other.total() {
            return Err(PartitionError::TotalMismatch {
                left: self.total(),
                right: other.total(),
            });
        }
        Ok(self.dominates_same_total(other))
    }

    /// Dominance without the total check; callers guarantee equal totals.
    pub fn dominates_same_total(&self, other: &Partition) -> bool {
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `p^+`: add 1 to the first part (or create a part for the empty
    /// partition).
    pub fn plus_op(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts, label: None }
    }

    /// `p^-`: subtract 1 from the last part, dropping it if it reaches 0.
    pub fn minus_op(&self) -> Result<Partition, PartitionError> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            None => Err(PartitionError::MinusOnEmpty),
            Some(last) => {
                *last -= 1;
                if *last == 0 {
                    parts.pop();
                }
                Ok(Partition { parts, label: None })
            }
        }
    }

    /// Every part even and every part with even multiplicity.
    pub fn is_very_even(&self) -> bool {
        !self.is_empty()
            && self.parts.iter().all(|&p| p % 2 == 0)
            && self.multiplicities().into_iter().all(|(_, m)| m % 2 == 0)
    }

    /// `(value, multiplicity)` pairs in decreasing value order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Class membership check.
    pub fn is_class(&self, class: Class) -> bool {
        match class {
            Class::A => true,
            Class::B => {
                self.total() % 2 == 1
                    && self
                        .multiplicities()
                        .into_iter()
                        .all(|(v, m)| v % 2 == 1 || m % 2 == 0)
            }
            Class::C => {
                self.total() % 2 == 0
                    && self
                        .multiplicities()
                        .into_iter()
                        .all(|(v, m)| v % 2 == 0 || m % 2 == 0)
            }
            Class::D => {
                self.total() % 2 == 0
                    && self
                        .multiplicities()
                        .into_iter()
                        .all(|(v, m)| v % 2 == 1 || m % 2 == 0)
            }
        }
    }

    /// X-collapse: the unique largest X-partition dominated by `self`.
    ///
    /// Greedy part adjustment; the brute-force maximum over all dominated
    /// X-partitions is kept as a test oracle.
    pub fn collapse(&self, class: Class) -> Result<Partition, PartitionError> {
        let total = self.total();
        let parity_ok = match class {
            Class::A => true,
            Class::B => total % 2 == 1,
            Class::C | Class::D => total % 2 == 0,
        };
        if !parity_ok {
            return Err(PartitionError::NoSuchClass { total, class });
        }
        if class == Class::A {
            return Ok(self.unlabeled());
        }
        let mut parts = self.parts.clone();
        // A violating value is even (B/D) or odd (C) with odd multiplicity.
        let violates = |v: u32| -> bool {
            match class {
                Class::B | Class::D => v % 2 == 0,
                Class::C => v % 2 == 1,
                Class::A => false,
            }
        };
        let mut guard = 0usize;
        let limit = (total as usize + 2) * (total as usize + 2);
        loop {
            guard += 1;
            assert!(guard <= limit, "collapse failed to terminate");
            // Largest violating value.
            let mut bad: Option<u32> = None;
            {
                let mut i = 0;
                while i < parts.len() {
                    let v = parts[i];
                    let mut j = i;
                    while j < parts.len() && parts[j] == v {
                        j += 1;
                    }
                    if violates(v) && (j - i) % 2 == 1 {
                        bad = Some(v);
                        break;
                    }
                    i = j;
                }
            }
            let Some(v) = bad else { break };
            // Drop 1 from the last copy of v, push it onto the first later
            // part of size <= v - 2 (order stays weakly decreasing because
            // everything in between equals v - 1), or append a new 1.
            let i = parts.iter().rposition(|&p| p == v).expect("part exists");
            parts[i] -= 1;
            let mut placed = false;
            for j in i + 1..parts.len() {
                if parts[j] <= v - 2 {
                    parts[j] += 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                parts.push(1);
            }
            parts.retain(|&p| p > 0);
        }
        Ok(Partition { parts, label: None })
    }

    /// Canonical text form: comma-separated decreasing parts with an optional
    /// `:I` / `:II` suffix, e.g. `4,4,2,2:I`. The empty partition prints as
    /// an empty string.
    pub fn parse(text: &str) -> Result<Partition, PartitionError> {
        let err = || PartitionError::Parse(String::from(text));
        let (body, label) = match text.split_once(':') {
            None => (text, None),
            Some((body, "I")) => (body, Some(Label::I)),
            Some((body, "II")) => (body, Some(Label::II)),
            Some(_) => return Err(err()),
        };
        let mut parts: Vec<u32> = Vec::new();
        if !body.is_empty() {
            for piece in body.split(',') {
                let v: u32 = piece.trim().parse().map_err(|_| err())?;
                if v == 0 {
                    return Err(err());
                }
                if let Some(&prev) = parts.last() {
                    if v > prev {
                        return Err(err());
                    }
                }
                parts.push(v);
            }
        }
        let p = Partition { parts, label };
        if label.is_some() && !p.is_very_even() {
            return Err(err());
        }
        Ok(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        match self.label {
            Some(Label::I) => write!(f, ":I"),
            Some(Label::II) => write!(f, ":II"),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// `s(m; z) = (z^a, b)` where `m = a z + b`, `0 <= b < z`.
pub fn s_part(m: u32, z: u32) -> Partition {
    assert!(z > 0, "s(m; z) needs z >= 1");
    let a = m / z;
    let b = m % z;
    let mut parts = vec![z; a as usize];
    if b > 0 {
        parts.push(b);
    }
    Partition { parts, label: None }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn all_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone(), label: None });
            return;
        }
        let top = remaining.min(max);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All X-partitions of `n`.
pub fn class_partitions(n: u32, class: Class) -> Vec<Partition> {
    all_partitions(n).into_iter().filter(|p| p.is_class(class)).collect()
}

/// Special X-partitions of `n`: the image of `q -> (q^T)_X` over all
/// X-partitions `q` of `n`.
pub fn special_partitions(n: u32, class: Class) -> Vec<Partition> {
    let mut out: Vec<Partition> = Vec::new();
    for q in class_partitions(n, class) {
        let s = q.transpose().collapse(class).expect("same total, same parity");
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort();
    out.reverse();
    out
}

/// Membership in the special set, via the image characterization.
pub fn is_special(p: &Partition, class: Class) -> bool {
    special_partitions(p.total(), class).contains(&p.unlabeled())
}
