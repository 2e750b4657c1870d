//! Brute force over `S_n` for small `n`.
//!
//! Nothing here touches the restriction–induction machinery: distributions
//! are dense tables over all `n!` permutations, convolved directly, and
//! multiplicities come from summing characters over conjugacy classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::{character_value, CycleType};
use crate::numbers::factorial;
use crate::walk::{WalkKind, WalkSpec};
use crate::{Error, Partition, Result};

/// Largest `n` handled by default.
pub const DEFAULT_MAX_N: usize = 7;
/// Largest `n` handled at all; needs [`OracleLimit::AllowS8`].
pub const HARD_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OracleLimit {
    #[default]
    Default,
    /// Permits `S_8` tables (40320 entries, slow convolutions).
    AllowS8,
}

impl OracleLimit {
    fn max_n(self) -> usize {
        match self {
            OracleLimit::Default => DEFAULT_MAX_N,
            OracleLimit::AllowS8 => HARD_MAX_N,
        }
    }

    fn check(self, n: usize) -> Result<()> {
        if n > self.max_n() {
            return Err(Error::OracleTooLarge { n, limit: self.max_n() });
        }
        Ok(())
    }
}

/// A permutation in 0-based one-line form: `p[x]` is the image of `x`.
pub type Perm = Vec<u8>;

/// All permutations of `0..n` in lexicographic order, so index = Lehmer rank.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Perm = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Position of `p` in [`all_permutations`].
pub fn lehmer_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// `(h g)(x) = h(g(x))`.
pub fn compose(h: &[u8], g: &[u8]) -> Perm {
    g.iter().map(|&x| h[x as usize]).collect()
}

pub fn cycle_type_of(p: &[u8]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        lens.push(len);
    }
    Partition::from_multiset(lens)
}

pub fn count_cycles_of_length(p: &[u8], j: usize) -> usize {
    cycle_type_of(p).multiplicity(j)
}

/// A probability measure on `S_n`, dense, indexed by Lehmer rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDistribution {
    n: usize,
    probabilities: Vec<BigRational>,
}

impl GroupDistribution {
    fn zeros(n: usize, limit: OracleLimit) -> Result<Self> {
        limit.check(n)?;
        let size = (1..=n).product::<usize>();
        Ok(GroupDistribution { n, probabilities: vec![BigRational::zero(); size] })
    }

    /// Point mass at the identity.
    pub fn identity(n: usize, limit: OracleLimit) -> Result<Self> {
        let mut d = GroupDistribution::zeros(n, limit)?;
        d.probabilities[0] = BigRational::one();
        Ok(d)
    }

    pub fn uniform(n: usize, limit: OracleLimit) -> Result<Self> {
        let mut d = GroupDistribution::zeros(n, limit)?;
        let p = BigRational::new(BigInt::one(), BigInt::from(factorial(n)));
        d.probabilities.iter_mut().for_each(|x| *x = p.clone());
        Ok(d)
    }

    /// Uniform on the given permutations (duplicates count twice).
    pub fn uniform_on(n: usize, support: &[Perm], limit: OracleLimit) -> Result<Self> {
        let mut d = GroupDistribution::zeros(n, limit)?;
        if support.is_empty() {
            return Err(Error::param("empty support"));
        }
        let w = BigRational::new(BigInt::one(), BigInt::from(support.len()));
        for p in support {
            if p.len() != n {
                return Err(Error::SizeMismatch { expected: n, actual: p.len() });
            }
            d.probabilities[lehmer_rank(p)] += &w;
        }
        Ok(d)
    }

    /// One step of `kind`: uniform on `(1 u)`, or on all `i`-cycles.
    pub fn step_measure(kind: WalkKind, n: usize, limit: OracleLimit) -> Result<Self> {
        limit.check(n)?;
        WalkSpec::new(kind, n, 1)?;
        let support: Vec<Perm> = match kind {
            WalkKind::Star => (1..n)
                .map(|u| {
                    let mut p: Perm = (0..n as u8).collect();
                    p.swap(0, u);
                    p
                })
                .collect(),
            WalkKind::ICycle(i) => {
                let want = CycleType::single_cycle(i, n)?;
                all_permutations(n)
                    .into_iter()
                    .filter(|p| &cycle_type_of(p) == want.partition())
                    .collect()
            }
        };
        GroupDistribution::uniform_on(n, &support, limit)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn probability(&self, p: &[u8]) -> BigRational {
        self.probabilities[lehmer_rank(p)].clone()
    }

    /// `(rank, probability)` for every permutation with positive mass.
    pub fn support(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.probabilities.iter().enumerate().filter(|(_, p)| !p.is_zero())
    }

    pub fn total_mass(&self) -> BigRational {
        self.probabilities.iter().sum()
    }

    pub fn probabilities(&self) -> &[BigRational] {
        &self.probabilities
    }
}

/// `(d1 ∗ d2)(g) = Σ_h d1(h) d2(h^{-1} g)`: draw `x ~ d2`, then move to `h x`
/// with `h ~ d1`. Limited to `n <= 7`.
pub fn convolve(d1: &GroupDistribution, d2: &GroupDistribution) -> Result<GroupDistribution> {
    convolve_with_limit(d1, d2, OracleLimit::Default)
}

pub fn convolve_with_limit(
    d1: &GroupDistribution,
    d2: &GroupDistribution,
    limit: OracleLimit,
) -> Result<GroupDistribution> {
    if d1.n != d2.n {
        return Err(Error::SizeMismatch { expected: d1.n, actual: d2.n });
    }
    let mut out = GroupDistribution::zeros(d1.n, limit)?;
    let perms = all_permutations(d1.n);
    let right: Vec<(usize, &BigRational)> = d2.support().collect();
    for (h, ph) in d1.support() {
        for &(x, px) in &right {
            let g = compose(&perms[h], &perms[x]);
            out.probabilities[lehmer_rank(&g)] += ph * px;
        }
    }
    Ok(out)
}

/// `P^{*k}` started from the identity.
pub fn walk_distribution(spec: &WalkSpec) -> Result<GroupDistribution> {
    walk_distribution_with_limit(spec, OracleLimit::Default)
}

pub fn walk_distribution_with_limit(spec: &WalkSpec, limit: OracleLimit) -> Result<GroupDistribution> {
    let step = GroupDistribution::step_measure(spec.kind, spec.n, limit)?;
    let mut d = GroupDistribution::identity(spec.n, limit)?;
    for _ in 0..spec.k {
        d = convolve_with_limit(&step, &d, limit)?;
    }
    Ok(d)
}

/// `Σ_π d(π) a_j(π)^r`.
pub fn brute_moment(d: &GroupDistribution, j: usize, r: usize) -> BigRational {
    let perms = all_permutations(d.n);
    d.support()
        .map(|(idx, p)| {
            let a = count_cycles_of_length(&perms[idx], j);
            p * BigRational::from_integer(BigInt::from(a).pow(r as u32))
        })
        .sum()
}

/// `⟨(j a_j)^r, χ^λ⟩ = (1/n!) Σ_μ |C_μ| (j a_j(μ))^r χ^λ(μ)`, for `n <= 8`.
pub fn brute_multiplicity(n: usize, j: usize, r: usize, lambda: &Partition) -> Result<BigRational> {
    if n > HARD_MAX_N {
        return Err(Error::OracleTooLarge { n, limit: HARD_MAX_N });
    }
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, actual: lambda.size() });
    }
    let mut acc = BigInt::zero();
    for mu in CycleType::all(n) {
        let psi = BigInt::from(j * mu.multiplicity(j)).pow(r as u32);
        acc += BigInt::from(mu.class_size()) * psi * character_value(lambda, &mu)?;
    }
    Ok(BigRational::new(acc, BigInt::from(factorial(n))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn permutations_and_ranks() {
        for n in 0..=6 {
            let perms = all_permutations(n);
            assert_eq!(perms.len(), (1..=n).product::<usize>());
            for (i, p) in perms.iter().enumerate() {
                assert_eq!(lehmer_rank(p), i);
            }
            assert!(perms.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn composition_convention() {
        // (0 1) then (0 2): h g with g = (0 1), h = (0 2) sends 0 -> 1 -> 1, 1 -> 0 -> 2
        let g = vec![1u8, 0, 2];
        let h = vec![2u8, 1, 0];
        assert_eq!(compose(&h, &g), vec![1, 2, 0]);
    }

    #[test]
    fn convolve_examples() {
        let lim = OracleLimit::Default;
        let star = GroupDistribution::step_measure(WalkKind::Star, 4, lim).unwrap();
        let e = GroupDistribution::identity(4, lim).unwrap();
        assert_eq!(convolve(&e, &star).unwrap(), star);
        assert_eq!(convolve(&star, &e).unwrap(), star);
        let u = GroupDistribution::uniform(4, lim).unwrap();
        assert_eq!(convolve(&u, &star).unwrap(), u);
        assert_eq!(convolve(&star, &u).unwrap(), u);

        let q3 = GroupDistribution::step_measure(WalkKind::Star, 3, lim).unwrap();
        let sq = convolve(&q3, &q3).unwrap();
        assert_eq!(sq.probability(&[0, 1, 2]), q(1, 2));
        assert_eq!(sq.probability(&[1, 2, 0]), q(1, 4));
        assert_eq!(sq.probability(&[2, 0, 1]), q(1, 4));
        assert_eq!(sq.support().count(), 3);

        let other = GroupDistribution::identity(5, lim).unwrap();
        assert!(convolve(&q3, &other).is_err());
        assert_eq!(
            GroupDistribution::identity(8, lim).unwrap_err(),
            Error::OracleTooLarge { n: 8, limit: 7 }
        );
        assert!(GroupDistribution::identity(8, OracleLimit::AllowS8).is_ok());
        assert!(GroupDistribution::identity(9, OracleLimit::AllowS8).is_err());
    }

    #[test]
    fn brute_moment_examples() {
        let lim = OracleLimit::Default;
        for n in 2..=6 {
            assert_eq!(brute_moment(&GroupDistribution::uniform(n, lim).unwrap(), 1, 1), q(1, 1));
            assert_eq!(brute_moment(&GroupDistribution::identity(n, lim).unwrap(), 2, 3), q(0, 1));
        }
        assert_eq!(brute_moment(&GroupDistribution::uniform(6, lim).unwrap(), 2, 1), q(1, 2));
        // E[a_1^2] = 2 for a uniform permutation, n >= 2
        assert_eq!(brute_moment(&GroupDistribution::uniform(5, lim).unwrap(), 1, 2), q(2, 1));
    }

    #[test]
    fn star_step_support() {
        for n in 2..=6 {
            let d = walk_distribution(&WalkSpec::star(n, 1).unwrap()).unwrap();
            let support: Vec<_> = d.support().collect();
            assert_eq!(support.len(), n - 1);
            let mut transposition = vec![2];
            transposition.extend(std::iter::repeat_n(1, n - 2));
            let transposition = Partition::new(transposition).unwrap();
            let perms = all_permutations(n);
            for (idx, p) in support {
                assert_eq!(*p, q(1, n as i64 - 1));
                assert_eq!(cycle_type_of(&perms[idx]), transposition);
                assert_ne!(perms[idx][0], 0);
            }
        }
    }

    #[test]
    fn icycle_step_support() {
        let d = walk_distribution(&WalkSpec::icycle(3, 5, 1).unwrap()).unwrap();
        assert_eq!(d.support().count(), 20);
        assert_eq!(d.total_mass(), q(1, 1));
        let d = walk_distribution(&WalkSpec::icycle(3, 5, 4).unwrap()).unwrap();
        assert_eq!(d.total_mass(), q(1, 1));
        // products of 3-cycles are even
        let perms = all_permutations(5);
        for (idx, _) in d.support() {
            let ct = cycle_type_of(&perms[idx]);
            assert_eq!((5 - ct.len()) % 2, 0);
        }
    }

    #[test]
    fn brute_multiplicity_examples() {
        assert_eq!(brute_multiplicity(8, 2, 2, &p![6, 2]).unwrap(), q(4, 1));
        assert_eq!(brute_multiplicity(8, 2, 2, &p![4, 1, 1, 1, 1]).unwrap(), q(1, 1));
        assert_eq!(brute_multiplicity(7, 1, 2, &p![5, 2]).unwrap(), q(1, 1));
        assert!(brute_multiplicity(9, 1, 1, &p![9]).is_err());
        assert!(brute_multiplicity(8, 1, 1, &p![7]).is_err());
    }
}
