//! Integer partitions and Young-diagram geometry.
//!
//! A [`Partition`] is kept in canonical form: weakly decreasing positive
//! parts, no trailing zeros. The empty partition is the unique partition of
//! zero and is a perfectly ordinary value.
//!
//! Rim hooks are enumerated on the beta-set (first-column hook lengths) of a
//! partition: removing a rim `j`-hook is the same as sliding one bead from
//! position `p` to an empty position `p - j`, and the leg length of the hook
//! is the number of beads jumped over.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::numbers::factorial;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Sorts arbitrary positive parts into a partition (multiset reading).
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition::from_sorted(vec![n])
        }
    }

    /// `(first, rest...)`; fails when `first` is shorter than the first part of `rest`.
    pub fn with_first_row(first: usize, rest: &Partition) -> Result<Self> {
        let mut parts = Vec::with_capacity(rest.len() + 1);
        parts.push(first);
        parts.extend_from_slice(rest.parts());
        Partition::new(parts)
    }

    /// `(n - |bar|, bar)`, the partition of `n` with `bar` below its first row.
    pub fn with_ambient(n: usize, bar: &Partition) -> Result<Self> {
        let first = n.checked_sub(bar.size()).ok_or_else(|| {
            Error::InvalidPartition(format!("{bar} does not fit below a first row in size {n}"))
        })?;
        Partition::with_first_row(first, bar)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first_row(&self) -> usize {
        self.part(0)
    }

    /// The partition below the first row.
    pub fn below_first_row(&self) -> Partition {
        Partition::from_sorted(self.parts.iter().skip(1).copied().collect())
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the centralizer order of the class of cycle type λ.
    pub fn z(&self) -> BigUint {
        let mut acc = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&q| q == p).count();
            acc *= BigUint::from(p).pow(m as u32) * factorial(m);
            i += m;
        }
        acc
    }

    /// `j ∪ λ`: insert a part `j`.
    pub fn add_part(&self, j: usize) -> Partition {
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&p| p < j).unwrap_or(parts.len());
        parts.insert(pos, j);
        Partition::from_sorted(parts)
    }

    /// Remove one part equal to `j`, if there is one.
    pub fn remove_part(&self, j: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == j)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition::from_sorted(parts))
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| (len - c) + (conj.part(c) - r) - 1).collect())
            .collect()
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn dimension(&self) -> BigUint {
        let hooks: BigUint = self
            .hook_lengths()
            .iter()
            .flatten()
            .map(|&h| BigUint::from(h))
            .product();
        factorial(self.size) / hooks
    }

    /// Removable cells, as `(row, λ^row)` with 1-based row index, ascending.
    pub fn inner_corner_removals(&self) -> Result<Vec<(usize, Partition)>> {
        if self.is_empty() {
            return Err(Error::NoRemovableCells);
        }
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push((i + 1, Partition::from_sorted(parts)));
            }
        }
        Ok(out)
    }

    /// Beta-set with `beads` beads: positions `λ_i + beads - i` for `i = 1..=beads`.
    pub fn beta_set(&self, beads: usize) -> Result<Vec<usize>> {
        if beads < self.len() {
            return Err(Error::TooFewBeads { beads, parts: self.len() });
        }
        Ok((0..beads).map(|i| self.part(i) + beads - 1 - i).collect())
    }

    /// Inverse of [`Partition::beta_set`]; positions may come in any order.
    pub fn from_beta_set(positions: &[usize]) -> Result<Partition> {
        let mut sorted = positions.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("repeated bead position".into()));
        }
        let b = sorted.len();
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(i, &p)| p - (b - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Ok(Partition::from_sorted(parts))
    }

    /// All rim hooks of length `j` that can be removed from `self`, ordered by
    /// the row of the hook's head (topmost row), ascending.
    pub fn removable_rim_hooks(&self, j: usize) -> Vec<RimHook> {
        if j == 0 {
            return Vec::new();
        }
        let b = self.len();
        let beta = self.beta_set(b).expect("len beads always suffice");
        let occupied: BTreeSet<usize> = beta.iter().copied().collect();
        // beta is descending, i.e. ordered by row ascending
        beta.iter()
            .filter(|&&p| p >= j && !occupied.contains(&(p - j)))
            .map(|&p| {
                let leg = occupied.range(p - j + 1..p).count();
                let moved: Vec<usize> =
                    beta.iter().map(|&q| if q == p { p - j } else { q }).collect();
                RimHook {
                    outer: self.clone(),
                    inner: Partition::from_beta_set(&moved).expect("distinct positions"),
                    length: j,
                    leg_length: leg,
                }
            })
            .collect()
    }

    /// All `λ` with `λ / self` a rim hook of length `j`, ordered by the row of
    /// the hook's head in `λ`, ascending.
    pub fn addable_rim_hooks(&self, j: usize) -> Vec<RimHook> {
        if j == 0 {
            return Vec::new();
        }
        let b = self.len() + j;
        let beta = self.beta_set(b).expect("enough beads");
        let occupied: BTreeSet<usize> = beta.iter().copied().collect();
        let mut hooks: Vec<(usize, RimHook)> = beta
            .iter()
            .filter(|&&p| !occupied.contains(&(p + j)))
            .map(|&p| {
                let leg = occupied.range(p + 1..p + j).count();
                let moved: Vec<usize> =
                    beta.iter().map(|&q| if q == p { p + j } else { q }).collect();
                // head row = number of beads above the new position
                let head_row = occupied.range(p + j + 1..).count();
                let outer = Partition::from_beta_set(&moved).expect("distinct positions");
                (
                    head_row,
                    RimHook { outer, inner: self.clone(), length: j, leg_length: leg },
                )
            })
            .collect();
        hooks.sort_by_key(|(row, _)| *row);
        hooks.into_iter().map(|(_, h)| h).collect()
    }

    /// Cells `(row, col)`, zero-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

/// `removable_rim_hooks` as a free function.
pub fn removable_rim_hooks(lambda: &Partition, j: usize) -> Vec<RimHook> {
    lambda.removable_rim_hooks(j)
}

/// Rim hooks of length `j` addable to `mu`, producing partitions of `target_size`.
pub fn addable_rim_hooks(mu: &Partition, j: usize, target_size: usize) -> Result<Vec<RimHook>> {
    if target_size != mu.size() + j {
        return Err(Error::SizeMismatch { expected: mu.size() + j, actual: target_size });
    }
    Ok(mu.addable_rim_hooks(j))
}

/// A skew shape `outer / inner` that is a rim hook.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RimHook {
    pub outer: Partition,
    pub inner: Partition,
    pub length: usize,
    pub leg_length: usize,
}

impl RimHook {
    pub fn is_odd(&self) -> bool {
        self.leg_length % 2 == 1
    }
}

/// All partitions of `n` in reverse lexicographic order, starting from `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses comma-separated parts such as `6,1,1`; an empty string, `-` or
/// `()` is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// `p![6, 1, 1]` builds a partition, panicking on malformed input.
#[macro_export]
macro_rules! p {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($x),+]).expect("valid partition literal")
    };
}
